//! Builders: twists, derived algebras, brackets from derivations, tensor
//! products, sub-adjacent algebras and bimodules induced by maps.
//!
//! Each checked builder verifies its hypotheses, applies the formulas (also
//! exposed as `*_raw`) and runs the class checker on the output.

use crate::axioms::{
    check_comm_hom_assoc, check_derivation, check_morphism, check_multiplicative, untwisted,
    AlgebraClass,
};
use crate::error::{Error, Result};
use crate::linalg::{sub, Matrix, Vector};
use crate::presentation::{Algebra, Representation, ALPHA, BRACKET, DOT, STAR};
use crate::report::{ensure, require, run, CheckConfig, CheckReport, Family};
use crate::representations::{act, check_rep, class_actions, L, R, RHO, S};
use crate::tensor::BilinearMap;

/// `α(x) = x` for every basis element.
pub fn check_identity_twist(a: &Algebra, cfg: &CheckConfig) -> Result<CheckReport> {
    let al = a.square_map(ALPHA)?;
    let fam = Family::new("twist_is_identity", vec![a.dim], move |v: &[Vector]| sub(&al.apply(&v[0]), &v[0]));
    Ok(run("identity-twist", &[fam], cfg))
}

fn require_class(a: &Algebra, class: AlgebraClass, cfg: &CheckConfig) -> Result<()> {
    require(class.check(a, cfg)?, format!("input is not a {class} algebra"))
}

fn ensure_class(a: &Algebra, class: AlgebraClass, what: &str, cfg: &CheckConfig) -> Result<()> {
    ensure(class.check(a, cfg)?, format!("{what} is not a {class} algebra"))
}

fn square(g: &Matrix, n: usize, what: &str) -> Result<()> {
    if g.rows != n || g.cols != n {
        return Err(Error::Dimension(format!("{what} is {}x{}, expected {n}x{n}", g.rows, g.cols)));
    }
    Ok(())
}

/// Class operations composed with `g`, twist set to `twist`.
fn post_composed(a: &Algebra, class: AlgebraClass, g: &Matrix, twist: Matrix) -> Result<Algebra> {
    square(g, a.dim, "twisting map")?;
    let mut out = Algebra::new(a.dim);
    out.basis = a.basis.clone();
    for name in class.ops() {
        out.ops.insert(name.to_string(), a.op(name)?.post_compose(g));
    }
    out.maps.insert(ALPHA.into(), twist);
    Ok(out)
}

/// Operations `g∘op`, twist `g`.
pub fn yau_twist_raw(a: &Algebra, class: AlgebraClass, g: &Matrix) -> Result<Algebra> {
    post_composed(a, class, g, g.clone())
}

/// Twists an untwisted class algebra along one of its endomorphisms.
pub fn yau_twist(a: &Algebra, class: AlgebraClass, g: &Matrix, cfg: &CheckConfig) -> Result<Algebra> {
    require(check_identity_twist(a, cfg)?, "input twist is not the identity")?;
    require_class(a, class, cfg)?;
    require(check_morphism(a, a, g, class.ops(), cfg)?, "map is not an algebra morphism")?;
    let out = yau_twist_raw(a, class, g)?;
    ensure_class(&out, class, "twisted algebra", cfg)?;
    Ok(out)
}

/// Operations `g∘op`, twist `α∘g`.
pub fn compose_twist_raw(a: &Algebra, class: AlgebraClass, g: &Matrix) -> Result<Algebra> {
    let twist = a.square_map(ALPHA)?.compose(g);
    post_composed(a, class, g, twist)
}

/// Twists a class algebra along a morphism commuting with its twist.
pub fn compose_twist(a: &Algebra, class: AlgebraClass, g: &Matrix, cfg: &CheckConfig) -> Result<Algebra> {
    require_class(a, class, cfg)?;
    require(check_morphism(a, a, g, class.ops(), cfg)?, "map is not a morphism commuting with the twist")?;
    let out = compose_twist_raw(a, class, g)?;
    ensure_class(&out, class, "composed twist", cfg)?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedKind {
    /// Operations `αⁿ∘op`, twist `αⁿ⁺¹`.
    First,
    /// Operations `α^(2ⁿ-1)∘op`, twist `α^(2ⁿ)`.
    Second,
}

pub fn derived_exponent(n: u32, kind: DerivedKind) -> Result<u64> {
    if n == 0 {
        return Err(Error::Invalid("derived algebras need n >= 1".into()));
    }
    match kind {
        DerivedKind::First => Ok(u64::from(n)),
        DerivedKind::Second if n < 63 => Ok((1u64 << n) - 1),
        DerivedKind::Second => Err(Error::Invalid(format!("n = {n} is too large"))),
    }
}

pub fn derived_algebra(
    a: &Algebra,
    class: AlgebraClass,
    n: u32,
    kind: DerivedKind,
    cfg: &CheckConfig,
) -> Result<Algebra> {
    let e = derived_exponent(n, kind)?;
    require_class(a, class, cfg)?;
    require(check_multiplicative(a, class.ops(), cfg)?, "twist is not multiplicative")?;
    let g = a.square_map(ALPHA)?.pow(e);
    let out = compose_twist_raw(a, class, &g)?;
    ensure_class(&out, class, "derived algebra", cfg)?;
    Ok(out)
}

/// Matrix of `x ↦ h·x`.
pub fn alpha_h(a: &Algebra, h: &[crate::scalar::Scalar]) -> Result<Matrix> {
    if h.len() != a.dim {
        return Err(Error::Dimension(format!("h has {} coordinates, algebra has dimension {}", h.len(), a.dim)));
    }
    Ok(a.op(DOT)?.left(h))
}

/// Replaces the identity twist of a transposed Poisson algebra by `α_h`.
pub fn alpha_h_twist(a: &Algebra, h: &[crate::scalar::Scalar], cfg: &CheckConfig) -> Result<Algebra> {
    require(check_identity_twist(a, cfg)?, "input twist is not the identity")?;
    require_class(a, AlgebraClass::TransposedHomPoisson, cfg)?;
    let mut out = a.restrict(&[DOT, BRACKET])?;
    out.maps.insert(ALPHA.into(), alpha_h(a, h)?);
    ensure_class(&out, AlgebraClass::TransposedHomPoisson, "alpha_h twist", cfg)?;
    Ok(out)
}

/// `{x,y} = x·D(y) - D(x)·y`.
pub fn bracket_from_derivation_raw(a: &Algebra, d: &Matrix) -> Result<Algebra> {
    square(d, a.dim, "derivation")?;
    let dot = a.op(DOT)?;
    let br = BilinearMap::from_fn(a.dim, |i, j| {
        let (x, y) = (a.basis_vector(i), a.basis_vector(j));
        sub(&dot.eval(&x, &d.apply(&y)), &dot.eval(&d.apply(&x), &y))
    });
    let mut out = a.restrict(&[DOT])?;
    out.ops.insert(BRACKET.into(), br);
    Ok(out)
}

pub fn bracket_from_derivation(a: &Algebra, d: &Matrix, cfg: &CheckConfig) -> Result<Algebra> {
    require(check_comm_hom_assoc(a, cfg)?, "input is not commutative Hom-associative")?;
    require(check_derivation(a, DOT, d, cfg)?, "map is not a derivation commuting with the twist")?;
    let out = bracket_from_derivation_raw(a, d)?;
    ensure_class(&out, AlgebraClass::TransposedHomPoisson, "bracket from derivation", cfg)?;
    Ok(out)
}

/// `[x,y] = D1(x)·D2(y) - D1(y)·D2(x)`.
pub fn bracket_from_two_derivations_raw(a: &Algebra, d1: &Matrix, d2: &Matrix) -> Result<Algebra> {
    square(d1, a.dim, "first derivation")?;
    square(d2, a.dim, "second derivation")?;
    let dot = a.op(DOT)?;
    let br = BilinearMap::from_fn(a.dim, |i, j| {
        let (x, y) = (a.basis_vector(i), a.basis_vector(j));
        sub(&dot.eval(&d1.apply(&x), &d2.apply(&y)), &dot.eval(&d1.apply(&y), &d2.apply(&x)))
    });
    let mut out = a.restrict(&[DOT])?;
    out.ops.insert(BRACKET.into(), br);
    Ok(out)
}

pub fn bracket_from_two_derivations(a: &Algebra, d1: &Matrix, d2: &Matrix, cfg: &CheckConfig) -> Result<Algebra> {
    require(check_comm_hom_assoc(a, cfg)?, "input is not commutative Hom-associative")?;
    require(check_derivation(a, DOT, d1, cfg)?, "first map is not a derivation commuting with the twist")?;
    require(check_derivation(a, DOT, d2, cfg)?, "second map is not a derivation commuting with the twist")?;
    let fam = Family::new("derivations_commute", vec![a.dim], move |v: &[Vector]| {
        sub(&d1.apply(&d2.apply(&v[0])), &d2.apply(&d1.apply(&v[0])))
    });
    require(run("commuting-derivations", &[fam], cfg), "derivations do not commute")?;
    let out = bracket_from_two_derivations_raw(a, d1, d2)?;
    ensure_class(&out, AlgebraClass::HomPoisson, "bracket from two derivations", cfg)?;
    Ok(out)
}

fn kron_vec(u: &[crate::scalar::Scalar], v: &[crate::scalar::Scalar]) -> Vector {
    u.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect()
}

/// Tensor product with basis `e_i ⊗ f_j` at index `i * dim2 + j`.
pub fn tensor_product_raw(a1: &Algebra, a2: &Algebra, class: AlgebraClass) -> Result<Algebra> {
    let (n1, n2) = (a1.dim, a2.dim);
    let n = n1 * n2;
    let (d1, d2) = (a1.op(DOT)?, a2.op(DOT)?);
    let second = match class {
        AlgebraClass::CommHomAssoc => None,
        AlgebraClass::TransposedHomPoisson => Some(BRACKET),
        AlgebraClass::HomPreLiePoisson => Some(STAR),
        other => return Err(Error::Invalid(format!("tensor products are built for commutative Hom-associative, transposed Hom-Poisson and Hom-pre-Lie Poisson algebras, not {other}"))),
    };
    let mut out = Algebra::new(n);
    out.basis = a1
        .basis
        .iter()
        .flat_map(|p| a2.basis.iter().map(move |q| format!("{p}⊗{q}")))
        .collect();
    let pair = |p: usize| (p / n2, p % n2);
    let dot = BilinearMap::from_fn(n, |p, q| {
        let ((i1, i2), (j1, j2)) = (pair(p), pair(q));
        kron_vec(d1.prod(i1, j1), d2.prod(i2, j2))
    });
    out.ops.insert(DOT.into(), dot);
    if let Some(second) = second {
        let (b1, b2) = (a1.op(second)?, a2.op(second)?);
        let other = BilinearMap::from_fn(n, |p, q| {
            let ((i1, i2), (j1, j2)) = (pair(p), pair(q));
            crate::linalg::add(&kron_vec(b1.prod(i1, j1), d2.prod(i2, j2)), &kron_vec(d1.prod(i1, j1), b2.prod(i2, j2)))
        });
        out.ops.insert(second.into(), other);
    }
    out.maps.insert(ALPHA.into(), a1.square_map(ALPHA)?.kron(a2.square_map(ALPHA)?));
    Ok(out)
}

pub fn tensor_product(a1: &Algebra, a2: &Algebra, class: AlgebraClass, cfg: &CheckConfig) -> Result<Algebra> {
    let out = tensor_product_raw(a1, a2, class)?;
    require(class.check(a1, cfg)?, format!("first factor is not a {class} algebra"))?;
    require(class.check(a2, cfg)?, format!("second factor is not a {class} algebra"))?;
    ensure_class(&out, class, "tensor product", cfg)?;
    Ok(out)
}

/// Replaces `star` by its commutator bracket; other operations are kept.
pub fn sub_adjacent_raw(a: &Algebra) -> Result<Algebra> {
    let br = a.op(STAR)?.commutator();
    let mut out = a.clone();
    out.ops.remove(STAR);
    out.ops.insert(BRACKET.into(), br);
    Ok(out)
}

/// Class reached by passing to the commutator.
pub fn sub_adjacent_class(class: AlgebraClass) -> Result<AlgebraClass> {
    match class {
        AlgebraClass::HomPreLie => Ok(AlgebraClass::HomLie),
        AlgebraClass::HomPreLiePoisson => Ok(AlgebraClass::TransposedHomPoisson),
        other => Err(Error::Invalid(format!("{other} has no sub-adjacent algebra"))),
    }
}

pub fn sub_adjacent(a: &Algebra, class: AlgebraClass, cfg: &CheckConfig) -> Result<Algebra> {
    let target = sub_adjacent_class(class)?;
    require_class(a, class, cfg)?;
    let mut out = sub_adjacent_raw(a)?;
    out = out.restrict(target.ops())?;
    ensure_class(&out, target, "sub-adjacent algebra", cfg)?;
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct TwistingReport {
    pub twisted: Algebra,
    /// Both twisted operations vanish.
    pub trivial: bool,
    /// `g∘dot` is associative (and commutative) without twist.
    pub associative: CheckReport,
    /// `g∘bracket` satisfies the untwisted Jacobi identity (and skew-symmetry).
    pub jacobi: CheckReport,
}

impl TwistingReport {
    pub fn not_rigid(&self) -> bool {
        !self.associative.passed() || !self.jacobi.passed()
    }
}

/// Twisting of an untwisted Poisson-type algebra along a morphism.
pub fn twisting_report(a: &Algebra, g: &Matrix, cfg: &CheckConfig) -> Result<TwistingReport> {
    require(check_identity_twist(a, cfg)?, "input twist is not the identity")?;
    require(check_morphism(a, a, g, &[DOT, BRACKET], cfg)?, "map is not an algebra morphism")?;
    let twisted = yau_twist_raw(a, AlgebraClass::HomPoisson, g)?;
    let flat = untwisted(&twisted);
    Ok(TwistingReport {
        trivial: twisted.op(DOT)?.is_zero() && twisted.op(BRACKET)?.is_zero(),
        associative: AlgebraClass::CommHomAssoc.check(&flat, cfg)?,
        jacobi: AlgebraClass::HomLie.check(&flat, cfg)?,
        twisted,
    })
}

/// `A′` as an `A`-module through a morphism `f: A → A′`: `s(x)y = f(x)·y`,
/// `ρ(x)y = {f(x),y}`, `l(x)y = f(x)∗y`, `r(x)y = y∗f(x)`, twisted by `α′`.
pub fn bimodule_from_morphism_raw(a: &Algebra, target: &Algebra, f: &Matrix, class: AlgebraClass) -> Result<Representation> {
    if f.rows != target.dim || f.cols != a.dim {
        return Err(Error::Dimension(format!("morphism is {}x{}, expected {}x{}", f.rows, f.cols, target.dim, a.dim)));
    }
    let mut rep = Representation::new(a.dim, target.square_map(ALPHA)?.clone());
    for name in class_actions(class)? {
        let mats: Vec<Matrix> = (0..a.dim)
            .map(|i| {
                let fx = f.apply(&a.basis_vector(i));
                Ok(match *name {
                    S => target.op(DOT)?.left(&fx),
                    RHO => target.op(BRACKET)?.left(&fx),
                    L => target.op(STAR)?.left(&fx),
                    R => target.op(STAR)?.right(&fx),
                    other => return Err(Error::MissingAction(other.to_string())),
                })
            })
            .collect::<Result<_>>()?;
        rep = rep.with_action(name, mats);
    }
    Ok(rep)
}

pub fn bimodule_from_morphism(
    a: &Algebra,
    target: &Algebra,
    f: &Matrix,
    class: AlgebraClass,
    cfg: &CheckConfig,
) -> Result<Representation> {
    require(check_morphism(a, target, f, class.ops(), cfg)?, "map is not an algebra morphism")?;
    let rep = bimodule_from_morphism_raw(a, target, f, class)?;
    ensure(check_rep(class, a, &rep, cfg)?, "induced module is not a representation")?;
    Ok(rep)
}

/// `ã(x) = a(α′(x))∘β′` for every action and `β̃ = β∘β′`.
pub fn twisted_bimodule_raw(rep: &Representation, g_alg: &Matrix, g_mod: &Matrix) -> Result<Representation> {
    square(g_alg, rep.algebra_dim, "algebra map")?;
    square(g_mod, rep.module_dim, "module map")?;
    let mut out = Representation::new(rep.algebra_dim, rep.beta.compose(g_mod));
    for name in rep.actions.keys() {
        let mats = (0..rep.algebra_dim)
            .map(|i| {
                let x = g_alg.apply(&crate::linalg::basis_vector(rep.algebra_dim, i));
                Ok(rep.at(name, &x)?.compose(g_mod))
            })
            .collect::<Result<Vec<_>>>()?;
        out = out.with_action(name, mats);
    }
    Ok(out)
}

/// Twists a representation along `α′` on the algebra and `β′` on the module;
/// returns the twisted algebra `compose_twist(a, α′)` and the twisted module.
pub fn twisted_bimodule(
    a: &Algebra,
    rep: &Representation,
    g_alg: &Matrix,
    g_mod: &Matrix,
    class: AlgebraClass,
    cfg: &CheckConfig,
) -> Result<(Algebra, Representation)> {
    rep.check_shape(a)?;
    square(g_mod, rep.module_dim, "module map")?;
    require(check_rep(class, a, rep, cfg)?, "module is not a representation")?;
    let twisted_alg = compose_twist(a, class, g_alg, cfg)?;
    let be = &rep.beta;
    let mut fams = vec![Family::new("module_map_commutes_beta", vec![rep.module_dim], move |v: &[Vector]| {
        sub(&g_mod.apply(&be.apply(&v[0])), &be.apply(&g_mod.apply(&v[0])))
    })];
    for name in class_actions(class)? {
        let mats = rep.action(name)?;
        fams.push(Family::new(
            format!("module_map_intertwines_{name}"),
            vec![a.dim, rep.module_dim],
            move |v: &[Vector]| {
                let lhs = g_mod.apply(&act(mats, &v[0], &v[1]));
                sub(&lhs, &act(mats, &g_alg.apply(&v[0]), &g_mod.apply(&v[1])))
            },
        ));
    }
    require(run("twisting-hypotheses", &fams, cfg), "module map hypotheses fail")?;
    let out = twisted_bimodule_raw(rep, g_alg, g_mod)?;
    ensure(check_rep(class, &twisted_alg, &out, cfg)?, "twisted module is not a representation")?;
    Ok((twisted_alg, out))
}
