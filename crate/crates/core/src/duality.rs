//! Coadjoint actions, the standard form on `A ⊕ A*`, Manin triples and the
//! bialgebra conditions for transposed Hom-Poisson algebras.
//!
//! Dual spaces use the dual basis, so dual maps are transposes. Elements of
//! `A ⊗ A` are `dim²` vectors with index `j * dim + k`.

use crate::axioms::{check_comm_hom_assoc, check_hom_lie, AlgebraClass};
use crate::error::{Error, Result};
use crate::linalg::{combine, sub, Matrix, Vector};
use crate::matched_pairs::{build_double_raw, check_matched_pair, MatchedPair, MatchedPairReport};
use crate::presentation::{default_basis, Algebra, Comultiplication, Representation, ALPHA, BRACKET, DOT};
use crate::report::{require, run, CheckConfig, CheckReport, Family};
use crate::representations::{RHO, S};
use crate::scalar::{int, Scalar};
use crate::tensor::BilinearMap;

pub fn dual_map(f: &Matrix) -> Matrix {
    f.transpose()
}

fn mults(op: &BilinearMap) -> Vec<Matrix> {
    (0..op.dim()).map(|i| op.left(&crate::linalg::basis_vector(op.dim(), i))).collect()
}

/// `S*(x) = -S(x)ᵀ` and `ad*(x) = ad(x)ᵀ` on the dual space, twisted by `αᵀ`.
pub fn coadjoint_actions(a: &Algebra) -> Result<Representation> {
    let s = mults(a.op(DOT)?).iter().map(|m| m.transpose().neg()).collect();
    let rho = mults(a.op(BRACKET)?).iter().map(Matrix::transpose).collect();
    Ok(Representation::new(a.dim, a.square_map(ALPHA)?.transpose()).with_action(S, s).with_action(RHO, rho))
}

/// `(-S*, ad*)` in both directions, as used by the double of `A` and `A*`.
pub fn coadjoint_matched_pair(a: &Algebra, a_star: &Algebra) -> Result<MatchedPair> {
    if a.dim != a_star.dim {
        return Err(Error::Dimension(format!("A has dimension {}, A* has {}", a.dim, a_star.dim)));
    }
    if *a_star.square_map(ALPHA)? != a.square_map(ALPHA)?.transpose() {
        return Err(Error::Invalid("the twist of A* must be the dual of the twist of A".into()));
    }
    let flip = |rep: Representation| -> Result<Representation> {
        let s = rep.action(S)?.iter().map(Matrix::neg).collect();
        let rho = rep.action(RHO)?.to_vec();
        Ok(Representation::new(rep.algebra_dim, rep.beta.clone()).with_action(S, s).with_action(RHO, rho))
    };
    MatchedPair::new(
        a.restrict(&[DOT, BRACKET])?,
        a_star.restrict(&[DOT, BRACKET])?,
        flip(coadjoint_actions(a)?)?,
        flip(coadjoint_actions(a_star)?)?,
    )
}

/// `𝔅_d(x + a, y + b) = ⟨a, y⟩ + ⟨x, b⟩`.
pub fn standard_form(n: usize) -> Matrix {
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        m.set(i, n + i, Scalar::from_integer(1.into()));
        m.set(n + i, i, Scalar::from_integer(1.into()));
    }
    m
}

fn form(b: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    x.iter().zip(b.apply(y)).map(|(p, q)| p * q).sum()
}

pub fn invariance_families<'a>(a: &'a Algebra, b: &'a Matrix) -> Result<Vec<Family<'a>>> {
    if b.rows != a.dim || b.cols != a.dim {
        return Err(Error::Dimension(format!("form is {}x{} on a {}-dimensional algebra", b.rows, b.cols, a.dim)));
    }
    let al = a.square_map(ALPHA)?;
    let n = a.dim;
    let mut out = Vec::new();
    for name in [DOT, BRACKET] {
        let Ok(op) = a.op(name) else { continue };
        out.push(Family::new(format!("invariant_{name}"), vec![n, n, n], move |v: &[Vector]| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            vec![form(b, &op.eval(x, y), &al.apply(z)) - form(b, &al.apply(x), &op.eval(y, z))]
        }));
    }
    Ok(out)
}

/// `𝔅(x∘y, α(z)) = 𝔅(α(x), y∘z)` for the product and the bracket.
pub fn check_invariant_form(a: &Algebra, b: &Matrix, cfg: &CheckConfig) -> Result<CheckReport> {
    Ok(run("invariant-form", &invariance_families(a, b)?, cfg))
}

fn require_transposed(x: &Algebra, what: &str, cfg: &CheckConfig) -> Result<()> {
    require(
        AlgebraClass::TransposedHomPoisson.check(x, cfg)?,
        format!("{what} is not a transposed Hom-Poisson algebra"),
    )
}

/// The double `A ⋈ A*` with the coadjoint actions.
pub fn build_double_dual(a: &Algebra, a_star: &Algebra, cfg: &CheckConfig) -> Result<Algebra> {
    require_transposed(a, "A", cfg)?;
    require_transposed(a_star, "A*", cfg)?;
    build_double_dual_raw(a, a_star)
}

pub fn build_double_dual_raw(a: &Algebra, a_star: &Algebra) -> Result<Algebra> {
    let mp = coadjoint_matched_pair(a, a_star)?;
    let mut d = build_double_raw(&mp, AlgebraClass::TransposedHomPoisson)?;
    if a_star.basis == default_basis("e", a.dim) {
        d.basis = a.basis.iter().cloned().chain(a.basis.iter().map(|b| format!("{b}*"))).collect();
    }
    Ok(d)
}

/// Both blocks closed under the products of the double.
fn closure_families(d: &Algebra, n: usize) -> Result<Vec<Family<'_>>> {
    let mut out = Vec::new();
    for name in [DOT, BRACKET] {
        let op = d.op(name)?;
        let embed_a = move |x: &Vector| -> Vector { x.iter().cloned().chain(crate::linalg::zero_vector(n)).collect() };
        let embed_b = move |x: &Vector| -> Vector { crate::linalg::zero_vector(n).into_iter().chain(x.iter().cloned()).collect() };
        out.push(Family::new(format!("subalgebra_A_{name}"), vec![n, n], move |v: &[Vector]| {
            op.eval(&embed_a(&v[0]), &embed_a(&v[1]))[n..].to_vec()
        }));
        out.push(Family::new(format!("subalgebra_A*_{name}"), vec![n, n], move |v: &[Vector]| {
            op.eval(&embed_b(&v[0]), &embed_b(&v[1]))[..n].to_vec()
        }));
    }
    Ok(out)
}

/// Standard Manin triple: the double is a transposed Hom-Poisson algebra, both
/// halves are subalgebras and `𝔅_d` is invariant.
pub fn check_manin_triple(a: &Algebra, a_star: &Algebra, cfg: &CheckConfig) -> Result<CheckReport> {
    let d = build_double_dual(a, a_star, cfg)?;
    let b = standard_form(a.dim);
    let class = AlgebraClass::TransposedHomPoisson.check(&d, cfg)?;
    let closure = run("subalgebras", &closure_families(&d, a.dim)?, cfg);
    let inv = check_invariant_form(&d, &b, cfg)?;
    Ok(CheckReport::merge("manin-triple", vec![class, closure, inv], cfg.max_witnesses))
}

/// `e_j* ∘ e_k*` has `e_i*` coefficient `c(i,j,k)`.
pub fn dualize_comultiplication(d: &Comultiplication) -> BilinearMap {
    d.dual_product()
}

fn tensor_map(f: &Matrix, g: &Matrix) -> Matrix {
    f.kron(g)
}

/// Matrix of a coproduct `A → A ⊗ A`.
fn coproduct_matrix(c: &Comultiplication) -> Matrix {
    Matrix::from_columns(c.dim * c.dim, &c.images)
}

/// `e_a ⊗ e_b ⊗ e_c ↦ e_b ⊗ e_a ⊗ e_c`.
fn swap_first_two(n: usize, t: &[Scalar]) -> Vector {
    let mut out = vec![Scalar::default(); t.len()];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                out[(b * n + a) * n + c] = t[(a * n + b) * n + c].clone();
            }
        }
    }
    out
}

/// The dual algebra `(A*, Δ*, δ*, αᵀ)`.
pub fn dual_algebra(a: &Algebra, delta: &Comultiplication, cap_delta: &Comultiplication) -> Result<Algebra> {
    Ok(Algebra::new(a.dim)
        .with_op(DOT, dualize_comultiplication(cap_delta))
        .with_op(BRACKET, dualize_comultiplication(delta))
        .with_alpha(a.square_map(ALPHA)?.transpose()))
}

pub fn bialgebra_families<'a>(
    a: &'a Algebra,
    delta: &'a Comultiplication,
    cap_delta: &'a Comultiplication,
) -> Result<Vec<Family<'a>>> {
    let n = a.dim;
    if delta.dim != n || cap_delta.dim != n {
        return Err(Error::Dimension("coproducts must live on the algebra".into()));
    }
    let (dot, br, al) = (a.op(DOT)?, a.op(BRACKET)?, a.square_map(ALPHA)?);
    let (dm, cm) = (coproduct_matrix(delta), coproduct_matrix(cap_delta));
    let lhs_c = tensor_map(al, &cm);
    let r1_c = tensor_map(&dm, al);
    let r2_c = tensor_map(al, &dm);
    let nn = n * n;
    let left = move |x: &[Scalar]| dot.left(x);
    let ad = move |x: &[Scalar]| br.left(x);
    Ok(vec![
        // (α⊗Δ)δ(x) = (δ⊗α)Δ(x) + (τ⊗id)(α⊗δ)Δ(x)
        Family::new("coalgebra_compatibility", vec![n], move |v: &[Vector]| {
            let lhs = lhs_c.apply(&delta.apply(&v[0]));
            let r1 = r1_c.apply(&cap_delta.apply(&v[0]));
            let r2 = swap_first_two(n, &r2_c.apply(&cap_delta.apply(&v[0])));
            sub(&sub(&lhs, &r1), &r2)
        }),
        // δ({x,y}) = (ad_x⊗α + α⊗ad_x)δ(y) - (ad_y⊗α + α⊗ad_y)δ(x)
        Family::new("lie_cocycle", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let op = |z: &[Scalar]| tensor_map(&ad(z), al).add(&tensor_map(al, &ad(z)));
            let lhs = delta.apply(&br.eval(x, y));
            let r1 = op(x).apply(&delta.apply(y));
            let r2 = op(y).apply(&delta.apply(x));
            combine(nn, &[(int(1), &lhs), (int(-1), &r1), (int(1), &r2)])
        }),
        // Δ(x·y) = (S(α(x))⊗α)Δ(y) + (α⊗S(α(y)))Δ(x)
        Family::new("infinitesimal_cocycle", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let lhs = cap_delta.apply(&dot.eval(x, y));
            let r1 = tensor_map(&left(&al.apply(x)), al).apply(&cap_delta.apply(y));
            let r2 = tensor_map(al, &left(&al.apply(y))).apply(&cap_delta.apply(x));
            combine(nn, &[(int(1), &lhs), (int(-1), &r1), (int(-1), &r2)])
        }),
        // δ(x·y) = (S(α(y))⊗α)δ(x) + (S(α(x))⊗α)δ(y) - (α⊗ad_x)Δ(y) - (α⊗ad_y)Δ(x)
        Family::new("mixed_cocycle_product", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let lhs = delta.apply(&dot.eval(x, y));
            let r1 = tensor_map(&left(&al.apply(y)), al).apply(&delta.apply(x));
            let r2 = tensor_map(&left(&al.apply(x)), al).apply(&delta.apply(y));
            let r3 = tensor_map(al, &ad(x)).apply(&cap_delta.apply(y));
            let r4 = tensor_map(al, &ad(y)).apply(&cap_delta.apply(x));
            combine(nn, &[(int(1), &lhs), (int(-1), &r1), (int(-1), &r2), (int(1), &r3), (int(1), &r4)])
        }),
        // Δ({x,y}) = (ad_{α(x)}⊗α + α⊗ad_{α(x)})Δ(y) + (S(α(y))⊗α - α⊗S(α(y)))δ(x)
        Family::new("mixed_cocycle_bracket", vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let (ax, ay) = (al.apply(x), al.apply(y));
            let lhs = cap_delta.apply(&br.eval(x, y));
            let m1 = tensor_map(&ad(&ax), al).add(&tensor_map(al, &ad(&ax)));
            let m2 = tensor_map(&left(&ay), al).sub(&tensor_map(al, &left(&ay)));
            let r1 = m1.apply(&cap_delta.apply(y));
            let r2 = m2.apply(&delta.apply(x));
            combine(nn, &[(int(1), &lhs), (int(-1), &r1), (int(-1), &r2)])
        }),
    ])
}

fn prefixed(mut r: CheckReport, prefix: &str) -> CheckReport {
    for f in &mut r.families {
        f.identity = format!("{prefix}{}", f.identity);
    }
    for w in &mut r.witnesses {
        w.identity = format!("{prefix}{}", w.identity);
    }
    r
}

/// Transposed Hom-Poisson bialgebra conditions. The coalgebra axioms are read
/// through the dual algebra `(A*, Δ*, δ*, αᵀ)`.
pub fn check_bialgebra_conditions(
    a: &Algebra,
    delta: &Comultiplication,
    cap_delta: &Comultiplication,
    cfg: &CheckConfig,
) -> Result<CheckReport> {
    require_transposed(a, "A", cfg)?;
    let dual = dual_algebra(a, delta, cap_delta)?;
    let coassoc = prefixed(check_comm_hom_assoc(&dual, cfg)?, "dual_");
    let colie = prefixed(check_hom_lie(&dual, cfg)?, "dual_");
    let conds = run("bialgebra", &bialgebra_families(a, delta, cap_delta)?, cfg)
        .with_note("mixed_cocycle_bracket: parenthesis closed after ad_{α(x)}")
        .with_note("mixed_cocycle_product: left-hand side read as δ(x·y)");
    Ok(CheckReport::merge("bialgebra", vec![coassoc, colie, conds], cfg.max_witnesses))
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub bialgebra: CheckReport,
    /// Representation checks of both coadjoint sides.
    pub matched_pair_sides: CheckReport,
    /// `None` when a side fails and the double is not built.
    pub matched_pair: Option<MatchedPairReport>,
    pub manin_triple: CheckReport,
}

impl EquivalenceReport {
    pub fn bialgebra_holds(&self) -> bool {
        self.bialgebra.passed()
    }

    pub fn matched_pair_holds(&self) -> bool {
        self.matched_pair_sides.passed() && self.matched_pair.as_ref().is_some_and(MatchedPairReport::passed)
    }

    pub fn manin_triple_holds(&self) -> bool {
        self.manin_triple.passed()
    }

    pub fn agree(&self) -> bool {
        let b = self.bialgebra_holds();
        b == self.matched_pair_holds() && b == self.manin_triple_holds()
    }
}

/// Runs the three characterisations on `(A, A*)`; `δ` and `Δ` are read off `A*`.
pub fn equivalence_report(a: &Algebra, a_star: &Algebra, cfg: &CheckConfig) -> Result<EquivalenceReport> {
    require_transposed(a, "A", cfg)?;
    require_transposed(a_star, "A*", cfg)?;
    let delta = Comultiplication::from_dual_product(a_star.op(BRACKET)?);
    let cap_delta = Comultiplication::from_dual_product(a_star.op(DOT)?);
    let bialgebra = check_bialgebra_conditions(a, &delta, &cap_delta, cfg)?;
    let mp = coadjoint_matched_pair(a, a_star)?;
    let class = AlgebraClass::TransposedHomPoisson;
    let sides = CheckReport::merge(
        "coadjoint-sides",
        vec![
            prefixed(crate::representations::check_rep(class, &mp.a, &mp.on_b, cfg)?, "A_on_A*_"),
            prefixed(crate::representations::check_rep(class, &mp.b, &mp.on_a, cfg)?, "A*_on_A_"),
        ],
        cfg.max_witnesses,
    );
    let matched_pair = if sides.passed() { Some(check_matched_pair(&mp, class, cfg)?) } else { None };
    let manin_triple = check_manin_triple(a, a_star, cfg)?;
    Ok(EquivalenceReport { bialgebra, matched_pair_sides: sides, matched_pair, manin_triple })
}
