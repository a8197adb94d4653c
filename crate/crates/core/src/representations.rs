//! Representations, semidirect products and dual representations.
//!
//! Action names: `s` (commutative product), `rho` (bracket), `l`/`r` (left and
//! right pre-Lie actions). The module twist is `beta`.

use crate::axioms::AlgebraClass;
use crate::error::{Error, Result};
use crate::linalg::{add, basis_vector, combine, sub, zero_vector, Matrix, Vector};
use crate::presentation::{default_basis, Algebra, Representation, ALPHA, BRACKET, DOT, STAR};
use crate::report::{run, CheckConfig, CheckReport, Family};
use crate::scalar::{int, Scalar};
use crate::tensor::BilinearMap;

pub const S: &str = "s";
pub const RHO: &str = "rho";
pub const L: &str = "l";
pub const R: &str = "r";

/// Action names a representation of the class carries.
pub fn class_actions(class: AlgebraClass) -> Result<&'static [&'static str]> {
    Ok(match class {
        AlgebraClass::CommHomAssoc => &[S],
        AlgebraClass::HomLie => &[RHO],
        AlgebraClass::TransposedHomPoisson => &[S, RHO],
        AlgebraClass::HomPreLie => &[L, R],
        AlgebraClass::HomPreLiePoisson => &[S, L, R],
        AlgebraClass::HomPoisson => {
            return Err(Error::Invalid("no representation theory for Hom-Poisson algebras here".into()))
        }
    })
}

/// `sum_i x_i M_i v`.
pub(crate) fn act(mats: &[Matrix], x: &[Scalar], v: &[Scalar]) -> Vector {
    let mut out = zero_vector(v.len());
    for (xi, m) in x.iter().zip(mats) {
        if !num_traits::Zero::is_zero(xi) {
            crate::linalg::axpy(&mut out, xi, &m.apply(v));
        }
    }
    out
}

struct Ctx<'a> {
    n: usize,
    m: usize,
    alpha: &'a Matrix,
    beta: &'a Matrix,
}

impl<'a> Ctx<'a> {
    fn new(a: &'a Algebra, rep: &'a Representation) -> Result<Self> {
        rep.check_shape(a)?;
        Ok(Ctx { n: a.dim, m: rep.module_dim, alpha: a.square_map(ALPHA)?, beta: &rep.beta })
    }

    fn axv(&self) -> Vec<usize> {
        vec![self.n, self.n, self.m]
    }

    fn xv(&self) -> Vec<usize> {
        vec![self.n, self.m]
    }
}

/// `β(a(x)v) = a(α(x))β(v)`.
fn intertwine<'a>(id: &str, c: &Ctx<'a>, mats: &'a [Matrix]) -> Family<'a> {
    let (al, be) = (c.alpha, c.beta);
    Family::new(id, c.xv(), move |v: &[Vector]| {
        sub(&be.apply(&act(mats, &v[0], &v[1])), &act(mats, &al.apply(&v[0]), &be.apply(&v[1])))
    })
}

fn bimodule_families<'a>(a: &'a Algebra, rep: &'a Representation, out: &mut Vec<Family<'a>>) -> Result<()> {
    let c = Ctx::new(a, rep)?;
    let (dot, s) = (a.op(DOT)?, rep.action(S)?);
    let (al, be) = (c.alpha, c.beta);
    out.push(Family::new("bimodule_product", c.axv(), move |v: &[Vector]| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        sub(&act(s, &dot.eval(x, y), &be.apply(w)), &act(s, &al.apply(x), &act(s, y, w)))
    }));
    out.push(intertwine("bimodule_intertwine_s", &c, s));
    Ok(())
}

fn rep_lie_families<'a>(a: &'a Algebra, rep: &'a Representation, out: &mut Vec<Family<'a>>) -> Result<()> {
    let c = Ctx::new(a, rep)?;
    let (br, rho) = (a.op(BRACKET)?, rep.action(RHO)?);
    let (al, be) = (c.alpha, c.beta);
    out.push(Family::new("rep_lie_bracket", c.axv(), move |v: &[Vector]| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        let lhs = act(rho, &br.eval(x, y), &be.apply(w));
        let r1 = act(rho, &al.apply(x), &act(rho, y, w));
        let r2 = act(rho, &al.apply(y), &act(rho, x, w));
        add(&sub(&lhs, &r1), &r2)
    }));
    out.push(intertwine("rep_lie_intertwine_rho", &c, rho));
    Ok(())
}

fn transposed_rep_families<'a>(a: &'a Algebra, rep: &'a Representation, out: &mut Vec<Family<'a>>) -> Result<()> {
    bimodule_families(a, rep, out)?;
    rep_lie_families(a, rep, out)?;
    let c = Ctx::new(a, rep)?;
    let (dot, br, s, rho) = (a.op(DOT)?, a.op(BRACKET)?, rep.action(S)?, rep.action(RHO)?);
    let (al, be, m) = (c.alpha, c.beta, c.m);
    // 2 s({x,y})β(v) = ρ(α(x))s(y)v - ρ(α(y))s(x)v
    out.push(Family::new("rep_transposed_1", c.axv(), move |v: &[Vector]| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        let lhs = act(s, &br.eval(x, y), &be.apply(w));
        let r1 = act(rho, &al.apply(x), &act(s, y, w));
        let r2 = act(rho, &al.apply(y), &act(s, x, w));
        combine(m, &[(int(2), &lhs), (int(-1), &r1), (int(1), &r2)])
    }));
    // 2 s(α(x))ρ(y)v = ρ(x·y)β(v) + ρ(α(y))s(x)v
    out.push(Family::new("rep_transposed_2", c.axv(), move |v: &[Vector]| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        let lhs = act(s, &al.apply(x), &act(rho, y, w));
        let r1 = act(rho, &dot.eval(x, y), &be.apply(w));
        let r2 = act(rho, &al.apply(y), &act(s, x, w));
        combine(m, &[(int(2), &lhs), (int(-1), &r1), (int(-1), &r2)])
    }));
    Ok(())
}

fn pre_lie_bimodule_families<'a>(a: &'a Algebra, rep: &'a Representation, out: &mut Vec<Family<'a>>) -> Result<()> {
    let c = Ctx::new(a, rep)?;
    let (st, l, r) = (a.op(STAR)?, rep.action(L)?, rep.action(R)?);
    let (al, be) = (c.alpha, c.beta);
    // l(x∗y - y∗x)β(v) = l(α(x))l(y)v - l(α(y))l(x)v
    out.push(Family::new("pre_lie_bimodule_1", c.axv(), move |v: &[Vector]| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        let lhs = act(l, &sub(&st.eval(x, y), &st.eval(y, x)), &be.apply(w));
        let r1 = act(l, &al.apply(x), &act(l, y, w));
        let r2 = act(l, &al.apply(y), &act(l, x, w));
        add(&sub(&lhs, &r1), &r2)
    }));
    // r(α(y))(l(x) - r(x))v = l(α(x))r(y)v - r(x∗y)β(v)
    out.push(Family::new("pre_lie_bimodule_2", c.axv(), move |v: &[Vector]| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        let rho_x = sub(&act(l, x, w), &act(r, x, w));
        let lhs = act(r, &al.apply(y), &rho_x);
        let r1 = act(l, &al.apply(x), &act(r, y, w));
        let r2 = act(r, &st.eval(x, y), &be.apply(w));
        add(&sub(&lhs, &r1), &r2)
    }));
    out.push(intertwine("pre_lie_bimodule_intertwine_l", &c, l));
    out.push(intertwine("pre_lie_bimodule_intertwine_r", &c, r));
    Ok(())
}

fn pre_lie_poisson_bimodule_families<'a>(
    a: &'a Algebra,
    rep: &'a Representation,
    out: &mut Vec<Family<'a>>,
) -> Result<()> {
    bimodule_families(a, rep, out)?;
    pre_lie_bimodule_families(a, rep, out)?;
    let c = Ctx::new(a, rep)?;
    let (dot, st) = (a.op(DOT)?, a.op(STAR)?);
    let (s, l, r) = (rep.action(S)?, rep.action(L)?, rep.action(R)?);
    let (al, be) = (c.alpha, c.beta);
    // l(x·y)β(v) = s(α(x))l(y)v
    out.push(Family::new("pre_lie_poisson_bimodule_1", c.axv(), move |v: &[Vector]| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        sub(&act(l, &dot.eval(x, y), &be.apply(w)), &act(s, &al.apply(x), &act(l, y, w)))
    }));
    // r(α(y))s(x)v = s(x∗y)β(v)
    out.push(Family::new("pre_lie_poisson_bimodule_2", c.axv(), move |v: &[Vector]| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        sub(&act(r, &al.apply(y), &act(s, x, w)), &act(s, &st.eval(x, y), &be.apply(w)))
    }));
    // r(α(y))s(x)v = s(α(x))r(y)v
    out.push(Family::new("pre_lie_poisson_bimodule_3", c.axv(), move |v: &[Vector]| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        sub(&act(r, &al.apply(y), &act(s, x, w)), &act(s, &al.apply(x), &act(r, y, w)))
    }));
    // s(x∗y - y∗x)β(v) = l(α(x))s(y)v - l(α(y))s(x)v
    out.push(Family::new("pre_lie_poisson_bimodule_4", c.axv(), move |v: &[Vector]| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        let lhs = act(s, &sub(&st.eval(x, y), &st.eval(y, x)), &be.apply(w));
        let r1 = act(l, &al.apply(x), &act(s, y, w));
        let r2 = act(l, &al.apply(y), &act(s, x, w));
        add(&sub(&lhs, &r1), &r2)
    }));
    // s(α(y))(l(x) - r(x))v = l(α(x))s(y)v - r(x·y)β(v)
    out.push(Family::new("pre_lie_poisson_bimodule_5", c.axv(), move |v: &[Vector]| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        let rho_x = sub(&act(l, x, w), &act(r, x, w));
        let lhs = act(s, &al.apply(y), &rho_x);
        let r1 = act(l, &al.apply(x), &act(s, y, w));
        let r2 = act(r, &dot.eval(x, y), &be.apply(w));
        add(&sub(&lhs, &r1), &r2)
    }));
    Ok(())
}

/// Identity families for `rep` being a representation of `a` in `class`.
pub fn rep_families<'a>(
    class: AlgebraClass,
    a: &'a Algebra,
    rep: &'a Representation,
) -> Result<Vec<Family<'a>>> {
    let mut out = Vec::new();
    match class {
        AlgebraClass::CommHomAssoc => bimodule_families(a, rep, &mut out)?,
        AlgebraClass::HomLie => rep_lie_families(a, rep, &mut out)?,
        AlgebraClass::TransposedHomPoisson => transposed_rep_families(a, rep, &mut out)?,
        AlgebraClass::HomPreLie => pre_lie_bimodule_families(a, rep, &mut out)?,
        AlgebraClass::HomPreLiePoisson => pre_lie_poisson_bimodule_families(a, rep, &mut out)?,
        AlgebraClass::HomPoisson => {
            class_actions(class)?;
        }
    }
    Ok(out)
}

pub fn check_rep(class: AlgebraClass, a: &Algebra, rep: &Representation, cfg: &CheckConfig) -> Result<CheckReport> {
    let name = format!("{}-representation", class.name());
    Ok(run(&name, &rep_families(class, a, rep)?, cfg))
}

pub fn check_bimodule_comm_assoc(a: &Algebra, rep: &Representation, cfg: &CheckConfig) -> Result<CheckReport> {
    check_rep(AlgebraClass::CommHomAssoc, a, rep, cfg)
}

pub fn check_rep_hom_lie(a: &Algebra, rep: &Representation, cfg: &CheckConfig) -> Result<CheckReport> {
    check_rep(AlgebraClass::HomLie, a, rep, cfg)
}

pub fn check_rep_transposed(a: &Algebra, rep: &Representation, cfg: &CheckConfig) -> Result<CheckReport> {
    check_rep(AlgebraClass::TransposedHomPoisson, a, rep, cfg)
}

pub fn check_bimodule_pre_lie(a: &Algebra, rep: &Representation, cfg: &CheckConfig) -> Result<CheckReport> {
    check_rep(AlgebraClass::HomPreLie, a, rep, cfg)
}

pub fn check_bimodule_pre_lie_poisson(a: &Algebra, rep: &Representation, cfg: &CheckConfig) -> Result<CheckReport> {
    check_rep(AlgebraClass::HomPreLiePoisson, a, rep, cfg)
}

/// Left and right multiplication families of `op`.
fn left_mults(op: &BilinearMap) -> Vec<Matrix> {
    (0..op.dim()).map(|i| op.left(&basis_vector(op.dim(), i))).collect()
}

fn right_mults(op: &BilinearMap) -> Vec<Matrix> {
    (0..op.dim()).map(|i| op.right(&basis_vector(op.dim(), i))).collect()
}

/// The algebra acting on itself, twisted by `α`.
pub fn regular_representation(a: &Algebra, class: AlgebraClass) -> Result<Representation> {
    let mut rep = Representation::new(a.dim, a.square_map(ALPHA)?.clone());
    for name in class_actions(class)? {
        let mats = match *name {
            S => left_mults(a.op(DOT)?),
            RHO => left_mults(a.op(BRACKET)?),
            L => left_mults(a.op(STAR)?),
            R => right_mults(a.op(STAR)?),
            other => return Err(Error::MissingAction(other.to_string())),
        };
        rep = rep.with_action(name, mats);
    }
    Ok(rep)
}

/// Semidirect product formulas on `A ⊕ V`, without any checks.
pub fn semidirect_raw(a: &Algebra, rep: &Representation, class: AlgebraClass) -> Result<Algebra> {
    rep.check_shape(a)?;
    let (n, m) = (a.dim, rep.module_dim);
    let total = n + m;
    let split = |v: &[Scalar]| (v[..n].to_vec(), v[n..].to_vec());
    let join = |x: Vector, w: Vector| -> Vector { x.into_iter().chain(w).collect() };
    let mut out = Algebra::new(total);
    out.basis = a.basis.iter().cloned().chain(default_basis("v", m)).collect();
    for name in class.ops() {
        let op = a.op(name)?;
        let table = match *name {
            DOT => {
                let s = rep.action(S)?;
                BilinearMap::from_fn(total, |p, q| {
                    let (x1, v1) = split(&basis_vector(total, p));
                    let (x2, v2) = split(&basis_vector(total, q));
                    join(op.eval(&x1, &x2), add(&act(s, &x1, &v2), &act(s, &x2, &v1)))
                })
            }
            BRACKET => {
                let rho = rep.action(RHO)?;
                BilinearMap::from_fn(total, |p, q| {
                    let (x1, v1) = split(&basis_vector(total, p));
                    let (x2, v2) = split(&basis_vector(total, q));
                    join(op.eval(&x1, &x2), sub(&act(rho, &x1, &v2), &act(rho, &x2, &v1)))
                })
            }
            _ => {
                let (l, r) = (rep.action(L)?, rep.action(R)?);
                BilinearMap::from_fn(total, |p, q| {
                    let (x1, v1) = split(&basis_vector(total, p));
                    let (x2, v2) = split(&basis_vector(total, q));
                    join(op.eval(&x1, &x2), add(&act(l, &x1, &v2), &act(r, &x2, &v1)))
                })
            }
        };
        out.ops.insert(name.to_string(), table);
    }
    out.maps.insert(ALPHA.into(), a.square_map(ALPHA)?.direct_sum(&rep.beta));
    Ok(out)
}

/// `A ⋉ V` for a class algebra and a class representation; the result is checked.
pub fn semidirect_product(
    a: &Algebra,
    rep: &Representation,
    class: AlgebraClass,
    cfg: &CheckConfig,
) -> Result<Algebra> {
    class_actions(class)?;
    let gate = class.check(a, cfg)?;
    if !gate.passed() {
        return Err(Error::precondition(format!("input is not a {class} algebra"), gate));
    }
    let gate = check_rep(class, a, rep, cfg)?;
    if !gate.passed() {
        return Err(Error::precondition(format!("module is not a {class} representation"), gate));
    }
    let out = semidirect_raw(a, rep, class)?;
    let post = class.check(&out, cfg)?;
    if !post.passed() {
        return Err(Error::postcondition(format!("semidirect product is not a {class} algebra"), post));
    }
    Ok(out)
}

/// Which reading of the twist-compatibility hypothesis to impose on a
/// transposed representation before dualising.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualHypothesis {
    /// `β s(x) = s(x) β` and `β ρ(α(x)) = ρ(x) β`.
    Strict,
    /// `β s(α(x)) = s(x) β` and `β ρ(α(x)) = ρ(x) β`, which is exactly what
    /// the dual twist needs.
    Symmetrized,
}

pub fn dual_hypothesis_families<'a>(
    a: &'a Algebra,
    rep: &'a Representation,
    form: DualHypothesis,
) -> Result<Vec<Family<'a>>> {
    let c = Ctx::new(a, rep)?;
    let (dot, br, s, rho) = (a.op(DOT)?, a.op(BRACKET)?, rep.action(S)?, rep.action(RHO)?);
    let (al, be, m) = (c.alpha, c.beta, c.m);
    let mut out = vec![
        // 2 s({x,y})β(v) = s(y)ρ(α(x))v - s(x)ρ(α(y))v
        Family::new("dual_hypothesis_1", c.axv(), move |v: &[Vector]| {
            let (x, y, w) = (&v[0], &v[1], &v[2]);
            let lhs = act(s, &br.eval(x, y), &be.apply(w));
            let r1 = act(s, y, &act(rho, &al.apply(x), w));
            let r2 = act(s, x, &act(rho, &al.apply(y), w));
            combine(m, &[(int(2), &lhs), (int(-1), &r1), (int(1), &r2)])
        }),
        // 2 ρ(y)s(α(x))v = ρ(x·y)β(v) + s(x)ρ(α(y))v
        Family::new("dual_hypothesis_2", c.axv(), move |v: &[Vector]| {
            let (x, y, w) = (&v[0], &v[1], &v[2]);
            let lhs = act(rho, y, &act(s, &al.apply(x), w));
            let r1 = act(rho, &dot.eval(x, y), &be.apply(w));
            let r2 = act(s, x, &act(rho, &al.apply(y), w));
            combine(m, &[(int(2), &lhs), (int(-1), &r1), (int(-1), &r2)])
        }),
        Family::new("dual_hypothesis_beta_rho", c.xv(), move |v: &[Vector]| {
            let (x, w) = (&v[0], &v[1]);
            sub(&be.apply(&act(rho, &al.apply(x), w)), &act(rho, x, &be.apply(w)))
        }),
    ];
    out.push(match form {
        DualHypothesis::Strict => Family::new("dual_hypothesis_beta_s", c.xv(), move |v: &[Vector]| {
            let (x, w) = (&v[0], &v[1]);
            sub(&be.apply(&act(s, x, w)), &act(s, x, &be.apply(w)))
        }),
        DualHypothesis::Symmetrized => {
            Family::new("dual_hypothesis_beta_s_alpha", c.xv(), move |v: &[Vector]| {
                let (x, w) = (&v[0], &v[1]);
                sub(&be.apply(&act(s, &al.apply(x), w)), &act(s, x, &be.apply(w)))
            })
        }
    });
    Ok(out)
}

pub fn check_dual_hypotheses(
    a: &Algebra,
    rep: &Representation,
    form: DualHypothesis,
    cfg: &CheckConfig,
) -> Result<CheckReport> {
    Ok(run("dual-hypotheses", &dual_hypothesis_families(a, rep, form)?, cfg))
}

/// Actions on `V*`: `s ↦ sᵀ`, `ρ ↦ -ρᵀ`, `β ↦ βᵀ`.
pub fn dual_actions(rep: &Representation) -> Result<Representation> {
    let mut out = Representation::new(rep.algebra_dim, rep.beta.transpose());
    let s = rep.action(S)?.iter().map(Matrix::transpose).collect();
    let rho = rep.action(RHO)?.iter().map(|m| m.transpose().neg()).collect();
    out = out.with_action(S, s).with_action(RHO, rho);
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct DualOutcome {
    /// `(-s*, ρ*, β*)` written in the dual basis.
    pub dual: Representation,
    /// Hypotheses with the twist condition as printed.
    pub strict: CheckReport,
    /// Hypotheses with `α` inserted into the `s` twist condition.
    pub symmetrized: CheckReport,
    /// The dual checked directly as a transposed representation.
    pub dual_check: CheckReport,
}

/// Dual of a transposed Hom-Poisson representation. When the hypotheses hold as
/// printed, the dual must be a representation; a failure there is an error.
pub fn dual_representation(a: &Algebra, rep: &Representation, cfg: &CheckConfig) -> Result<DualOutcome> {
    let gate = check_rep_transposed(a, rep, cfg)?;
    if !gate.passed() {
        return Err(Error::precondition("module is not a transposed Hom-Poisson representation", gate));
    }
    let strict = check_dual_hypotheses(a, rep, DualHypothesis::Strict, cfg)?;
    let symmetrized = check_dual_hypotheses(a, rep, DualHypothesis::Symmetrized, cfg)?;
    let dual = dual_actions(rep)?;
    let dual_check = check_rep_transposed(a, &dual, cfg)?;
    if strict.passed() && !dual_check.passed() {
        return Err(Error::postcondition("hypotheses hold but the dual module is not a representation", dual_check));
    }
    Ok(DualOutcome { dual, strict, symmetrized, dual_check })
}

/// `ρ = l - r`; any `s` action is kept.
pub fn rep_commutator(rep: &Representation) -> Result<Representation> {
    let (l, r) = (rep.action(L)?, rep.action(R)?);
    let rho = l.iter().zip(r).map(|(a, b)| a.sub(b)).collect();
    let mut out = Representation::new(rep.algebra_dim, rep.beta.clone()).with_action(RHO, rho);
    if let Ok(s) = rep.action(S) {
        out = out.with_action(S, s.to_vec());
    }
    Ok(out)
}

/// The zero algebra on the module space, twisted by `β`.
pub fn zero_algebra_on(rep: &Representation, class: AlgebraClass) -> Algebra {
    let m = rep.module_dim;
    let mut z = Algebra::new(m);
    z.basis = default_basis("v", m);
    for name in class.ops() {
        z.ops.insert(name.to_string(), BilinearMap::zero(m));
    }
    z.maps.insert(ALPHA.into(), rep.beta.clone());
    z
}
