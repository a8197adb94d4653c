//! Identity checkers for the algebra classes.
//!
//! Every identity is multilinear, so it is evaluated on basis tuples only.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{add, combine, sub, Matrix, Vector};
use crate::presentation::{Algebra, BRACKET, DOT, STAR};
use crate::report::{run, CheckConfig, CheckReport, Family};
use crate::scalar::int;
use crate::tensor::BilinearMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraClass {
    CommHomAssoc,
    HomLie,
    HomPoisson,
    TransposedHomPoisson,
    HomPreLie,
    HomPreLiePoisson,
}

impl AlgebraClass {
    pub const ALL: [AlgebraClass; 6] = [
        AlgebraClass::CommHomAssoc,
        AlgebraClass::HomLie,
        AlgebraClass::HomPoisson,
        AlgebraClass::TransposedHomPoisson,
        AlgebraClass::HomPreLie,
        AlgebraClass::HomPreLiePoisson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraClass::CommHomAssoc => "comm-hom-assoc",
            AlgebraClass::HomLie => "hom-lie",
            AlgebraClass::HomPoisson => "hom-poisson",
            AlgebraClass::TransposedHomPoisson => "transposed-hom-poisson",
            AlgebraClass::HomPreLie => "hom-pre-lie",
            AlgebraClass::HomPreLiePoisson => "hom-pre-lie-poisson",
        }
    }

    /// Operations the class is defined on.
    pub fn ops(self) -> &'static [&'static str] {
        match self {
            AlgebraClass::CommHomAssoc => &[DOT],
            AlgebraClass::HomLie => &[BRACKET],
            AlgebraClass::HomPoisson | AlgebraClass::TransposedHomPoisson => &[DOT, BRACKET],
            AlgebraClass::HomPreLie => &[STAR],
            AlgebraClass::HomPreLiePoisson => &[DOT, STAR],
        }
    }

    pub fn families(self, a: &Algebra) -> Result<Vec<Family<'_>>> {
        let mut out = Vec::new();
        match self {
            AlgebraClass::CommHomAssoc => comm_hom_assoc_families(a, &mut out)?,
            AlgebraClass::HomLie => hom_lie_families(a, &mut out)?,
            AlgebraClass::HomPoisson => {
                comm_hom_assoc_families(a, &mut out)?;
                hom_lie_families(a, &mut out)?;
                out.push(hom_leibniz(a)?);
            }
            AlgebraClass::TransposedHomPoisson => {
                comm_hom_assoc_families(a, &mut out)?;
                hom_lie_families(a, &mut out)?;
                out.push(transposed_leibniz(a)?);
            }
            AlgebraClass::HomPreLie => out.push(hom_pre_lie(a)?),
            AlgebraClass::HomPreLiePoisson => {
                comm_hom_assoc_families(a, &mut out)?;
                out.push(hom_pre_lie(a)?);
                out.extend(pre_lie_poisson_compat(a)?);
            }
        }
        Ok(out)
    }

    pub fn check(self, a: &Algebra, cfg: &CheckConfig) -> Result<CheckReport> {
        check_square_twist(a)?;
        Ok(run(self.name(), &self.families(a)?, cfg))
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "comm-hom-assoc" | "comm-assoc" => AlgebraClass::CommHomAssoc,
            "hom-lie" | "lie" => AlgebraClass::HomLie,
            "hom-poisson" | "poisson" => AlgebraClass::HomPoisson,
            "transposed-hom-poisson" | "transposed-poisson" | "transposed" => {
                AlgebraClass::TransposedHomPoisson
            }
            "hom-pre-lie" | "pre-lie" => AlgebraClass::HomPreLie,
            "hom-pre-lie-poisson" | "pre-lie-poisson" => AlgebraClass::HomPreLiePoisson,
            other => return Err(Error::Invalid(format!("unknown algebra class `{other}`"))),
        })
    }
}

fn check_square_twist(a: &Algebra) -> Result<()> {
    a.square_map(crate::presentation::ALPHA).map(|_| ())
}

fn two() -> crate::scalar::Scalar {
    int(2)
}

fn comm_hom_assoc_families<'a>(a: &'a Algebra, out: &mut Vec<Family<'a>>) -> Result<()> {
    let dot = a.op(DOT)?;
    let al = a.alpha()?;
    let n = a.dim;
    out.push(Family::new("commutativity", vec![n, n], move |v: &[Vector]| {
        sub(&dot.eval(&v[0], &v[1]), &dot.eval(&v[1], &v[0]))
    }));
    out.push(Family::new("hom_associativity", vec![n, n, n], move |v: &[Vector]| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        sub(&dot.eval(&dot.eval(x, y), &al.apply(z)), &dot.eval(&al.apply(x), &dot.eval(y, z)))
    }));
    Ok(())
}

fn hom_lie_families<'a>(a: &'a Algebra, out: &mut Vec<Family<'a>>) -> Result<()> {
    let br = a.op(BRACKET)?;
    let al = a.alpha()?;
    let n = a.dim;
    out.push(Family::new("skew_symmetry", vec![n, n], move |v: &[Vector]| {
        add(&br.eval(&v[0], &v[1]), &br.eval(&v[1], &v[0]))
    }));
    out.push(Family::new("hom_jacobi", vec![n, n, n], move |v: &[Vector]| {
        hom_jacobi_residual(br, al, &v[0], &v[1], &v[2])
    }));
    Ok(())
}

pub(crate) fn hom_jacobi_residual(
    br: &BilinearMap,
    al: &Matrix,
    x: &[crate::scalar::Scalar],
    y: &[crate::scalar::Scalar],
    z: &[crate::scalar::Scalar],
) -> Vector {
    let t1 = br.eval(&al.apply(x), &br.eval(y, z));
    let t2 = br.eval(&al.apply(y), &br.eval(z, x));
    let t3 = br.eval(&al.apply(z), &br.eval(x, y));
    add(&add(&t1, &t2), &t3)
}

/// `{α(x), y·z} - α(y)·{x,z} - α(z)·{x,y}`.
fn hom_leibniz(a: &Algebra) -> Result<Family<'_>> {
    let (dot, br, al) = (a.op(DOT)?, a.op(BRACKET)?, a.alpha()?);
    let n = a.dim;
    Ok(Family::new("hom_leibniz", vec![n, n, n], move |v: &[Vector]| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let lhs = br.eval(&al.apply(x), &dot.eval(y, z));
        let r1 = dot.eval(&al.apply(y), &br.eval(x, z));
        let r2 = dot.eval(&al.apply(z), &br.eval(x, y));
        sub(&sub(&lhs, &r1), &r2)
    }))
}

/// `2 α(z)·{x,y} - {z·x, α(y)} - {α(x), z·y}`.
fn transposed_leibniz(a: &Algebra) -> Result<Family<'_>> {
    let (dot, br, al) = (a.op(DOT)?, a.op(BRACKET)?, a.alpha()?);
    let n = a.dim;
    Ok(Family::new("transposed_hom_leibniz", vec![n, n, n], move |v: &[Vector]| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let lhs = dot.eval(&al.apply(z), &br.eval(x, y));
        let r1 = br.eval(&dot.eval(z, x), &al.apply(y));
        let r2 = br.eval(&al.apply(x), &dot.eval(z, y));
        combine(n, &[(two(), &lhs), (int(-1), &r1), (int(-1), &r2)])
    }))
}

/// Hom-associator of `star` is symmetric in its first two arguments.
fn hom_pre_lie(a: &Algebra) -> Result<Family<'_>> {
    let (st, al) = (a.op(STAR)?, a.alpha()?);
    let n = a.dim;
    Ok(Family::new("hom_pre_lie", vec![n, n, n], move |v: &[Vector]| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let asc = |p: &Vector, q: &Vector| {
            sub(&st.eval(&st.eval(p, q), &al.apply(z)), &st.eval(&al.apply(p), &st.eval(q, z)))
        };
        sub(&asc(x, y), &asc(y, x))
    }))
}

fn pre_lie_poisson_compat(a: &Algebra) -> Result<Vec<Family<'_>>> {
    let (dot, st, al) = (a.op(DOT)?, a.op(STAR)?, a.alpha()?);
    let n = a.dim;
    Ok(vec![
        // (x·y)∗α(z) = α(x)·(y∗z)
        Family::new("pre_lie_poisson_1", vec![n, n, n], move |v: &[Vector]| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            sub(&st.eval(&dot.eval(x, y), &al.apply(z)), &dot.eval(&al.apply(x), &st.eval(y, z)))
        }),
        // (x∗y)·α(z) - (y∗x)·α(z) = α(x)∗(y·z) - α(y)∗(x·z)
        Family::new("pre_lie_poisson_2", vec![n, n, n], move |v: &[Vector]| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            let az = al.apply(z);
            let l = sub(&dot.eval(&st.eval(x, y), &az), &dot.eval(&st.eval(y, x), &az));
            let r = sub(&st.eval(&al.apply(x), &dot.eval(y, z)), &st.eval(&al.apply(y), &dot.eval(x, z)));
            sub(&l, &r)
        }),
    ])
}

pub fn check_comm_hom_assoc(a: &Algebra, cfg: &CheckConfig) -> Result<CheckReport> {
    AlgebraClass::CommHomAssoc.check(a, cfg)
}

pub fn check_hom_lie(a: &Algebra, cfg: &CheckConfig) -> Result<CheckReport> {
    AlgebraClass::HomLie.check(a, cfg)
}

pub fn check_hom_poisson(a: &Algebra, cfg: &CheckConfig) -> Result<CheckReport> {
    AlgebraClass::HomPoisson.check(a, cfg)
}

pub fn check_transposed_hom_poisson(a: &Algebra, cfg: &CheckConfig) -> Result<CheckReport> {
    AlgebraClass::TransposedHomPoisson.check(a, cfg)
}

pub fn check_hom_pre_lie(a: &Algebra, cfg: &CheckConfig) -> Result<CheckReport> {
    AlgebraClass::HomPreLie.check(a, cfg)
}

pub fn check_hom_pre_lie_poisson(a: &Algebra, cfg: &CheckConfig) -> Result<CheckReport> {
    AlgebraClass::HomPreLiePoisson.check(a, cfg)
}

pub fn multiplicative_families<'a>(a: &'a Algebra, ops: &[&str]) -> Result<Vec<Family<'a>>> {
    let al = a.alpha()?;
    let n = a.dim;
    ops.iter()
        .map(|name| {
            let op = a.op(name)?;
            Ok(Family::new(format!("multiplicative_{name}"), vec![n, n], move |v: &[Vector]| {
                sub(&al.apply(&op.eval(&v[0], &v[1])), &op.eval(&al.apply(&v[0]), &al.apply(&v[1])))
            }))
        })
        .collect()
}

/// `α(x∘y) = α(x)∘α(y)` for each listed operation.
pub fn check_multiplicative(a: &Algebra, ops: &[&str], cfg: &CheckConfig) -> Result<CheckReport> {
    check_square_twist(a)?;
    Ok(run("multiplicative", &multiplicative_families(a, ops)?, cfg))
}

fn require_square(name: &str, m: &Matrix, n: usize) -> Result<()> {
    if m.rows != n || m.cols != n {
        return Err(Error::Dimension(format!(
            "{name} is {}x{}, expected {n}x{n}",
            m.rows, m.cols
        )));
    }
    Ok(())
}

pub fn derivation_families<'a>(a: &'a Algebra, op: &str, d: &'a Matrix) -> Result<Vec<Family<'a>>> {
    require_square("derivation", d, a.dim)?;
    let (m, al) = (a.op(op)?, a.alpha()?);
    let n = a.dim;
    Ok(vec![
        Family::new("derivation_commutes_alpha", vec![n], move |v: &[Vector]| {
            sub(&al.apply(&d.apply(&v[0])), &d.apply(&al.apply(&v[0])))
        }),
        Family::new(format!("derivation_leibniz_{op}"), vec![n, n], move |v: &[Vector]| {
            let (x, y) = (&v[0], &v[1]);
            let lhs = d.apply(&m.eval(x, y));
            sub(&sub(&lhs, &m.eval(&d.apply(x), y)), &m.eval(x, &d.apply(y)))
        }),
    ])
}

/// `αD = Dα` and `D(x∘y) = D(x)∘y + x∘D(y)`.
pub fn check_derivation(a: &Algebra, op: &str, d: &Matrix, cfg: &CheckConfig) -> Result<CheckReport> {
    check_square_twist(a)?;
    Ok(run("derivation", &derivation_families(a, op, d)?, cfg))
}

pub fn morphism_families<'a>(
    src: &'a Algebra,
    dst: &'a Algebra,
    f: &'a Matrix,
    ops: &[&str],
) -> Result<Vec<Family<'a>>> {
    if f.rows != dst.dim || f.cols != src.dim {
        return Err(Error::Dimension(format!(
            "morphism is {}x{}, expected {}x{}",
            f.rows, f.cols, dst.dim, src.dim
        )));
    }
    let (a1, a2) = (src.alpha()?, dst.alpha()?);
    let n = src.dim;
    let mut out = vec![Family::new("morphism_alpha", vec![n], move |v: &[Vector]| {
        sub(&f.apply(&a1.apply(&v[0])), &a2.apply(&f.apply(&v[0])))
    })];
    for name in ops {
        let (p, q) = (src.op(name)?, dst.op(name)?);
        out.push(Family::new(format!("morphism_{name}"), vec![n, n], move |v: &[Vector]| {
            sub(&f.apply(&p.eval(&v[0], &v[1])), &q.eval(&f.apply(&v[0]), &f.apply(&v[1])))
        }));
    }
    Ok(out)
}

/// `f(x∘y) = f(x)∘'f(y)` for each listed operation and `f∘α = α'∘f`.
pub fn check_morphism(
    src: &Algebra,
    dst: &Algebra,
    f: &Matrix,
    ops: &[&str],
    cfg: &CheckConfig,
) -> Result<CheckReport> {
    check_square_twist(src)?;
    check_square_twist(dst)?;
    Ok(run("morphism", &morphism_families(src, dst, f, ops)?, cfg))
}

/// Identities that every transposed Hom-Poisson algebra satisfies.
pub fn consequence_families(a: &Algebra) -> Result<Vec<Family<'_>>> {
    let (dot, br, al) = (a.op(DOT)?, a.op(BRACKET)?, a.alpha()?);
    let n = a.dim;
    let mut out = vec![Family::new("cyclic_alpha_dot_bracket", vec![n, n, n], move |v: &[Vector]| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let t1 = dot.eval(&al.apply(x), &br.eval(y, z));
        let t2 = dot.eval(&al.apply(y), &br.eval(z, x));
        let t3 = dot.eval(&al.apply(z), &br.eval(x, y));
        add(&add(&t1, &t2), &t3)
    })];
    if al.is_identity() {
        out.push(Family::new("four_variable", vec![n, n, n, n], move |v: &[Vector]| {
            let (x, y, z, t) = (&v[0], &v[1], &v[2], &v[3]);
            let l1 = br.eval(&dot.eval(x, z), &dot.eval(y, t));
            let l2 = br.eval(&dot.eval(x, t), &dot.eval(y, z));
            let r = dot.eval(&dot.eval(z, t), &br.eval(x, y));
            combine(n, &[(int(1), &l1), (int(1), &l2), (int(-2), &r)])
        }));
    }
    Ok(out)
}

/// The four-variable identity is only evaluated when the twist is the identity.
pub fn check_transposed_consequences(a: &Algebra, cfg: &CheckConfig) -> Result<CheckReport> {
    let mut r = run("transposed_consequences", &consequence_families(a)?, cfg);
    if !a.alpha()?.is_identity() {
        r.notes.push("four_variable skipped: twist is not the identity".into());
    }
    Ok(r)
}

#[derive(Clone, Debug)]
pub struct IntersectionReport {
    /// Commutative Hom-associativity and Hom-Lie identities.
    pub hypotheses: CheckReport,
    pub hom_poisson: CheckReport,
    pub transposed: CheckReport,
    /// `α(x)·{y,z} = 0` and `{x·y, α(z)} = 0`.
    pub annihilation: CheckReport,
}

impl IntersectionReport {
    pub fn in_both(&self) -> bool {
        self.hom_poisson.passed() && self.transposed.passed()
    }

    /// `None` when the hypotheses fail and the equivalence does not apply.
    pub fn biconditional_holds(&self) -> Option<bool> {
        self.hypotheses.passed().then(|| self.in_both() == self.annihilation.passed())
    }
}

pub fn annihilation_families(a: &Algebra) -> Result<Vec<Family<'_>>> {
    let (dot, br, al) = (a.op(DOT)?, a.op(BRACKET)?, a.alpha()?);
    let n = a.dim;
    Ok(vec![
        Family::new("alpha_dot_bracket_vanishes", vec![n, n, n], move |v: &[Vector]| {
            dot.eval(&al.apply(&v[0]), &br.eval(&v[1], &v[2]))
        }),
        Family::new("bracket_dot_alpha_vanishes", vec![n, n, n], move |v: &[Vector]| {
            br.eval(&dot.eval(&v[0], &v[1]), &al.apply(&v[2]))
        }),
    ])
}

/// Hom-Poisson and transposed at once versus the two annihilation identities.
pub fn check_poisson_intersection(a: &Algebra, cfg: &CheckConfig) -> Result<IntersectionReport> {
    check_square_twist(a)?;
    let mut hyp = Vec::new();
    comm_hom_assoc_families(a, &mut hyp)?;
    hom_lie_families(a, &mut hyp)?;
    Ok(IntersectionReport {
        hypotheses: run("hypotheses", &hyp, cfg),
        hom_poisson: check_hom_poisson(a, cfg)?,
        transposed: check_transposed_hom_poisson(a, cfg)?,
        annihilation: run("annihilation", &annihilation_families(a)?, cfg),
    })
}

/// The same algebra with its twist replaced by the identity.
pub fn untwisted(a: &Algebra) -> Algebra {
    let mut b = a.clone();
    b.maps.insert(crate::presentation::ALPHA.into(), Matrix::identity(a.dim));
    b
}

