//! Matched pairs and their doubles on `A ⊕ B` (A block first).
//!
//! The verdict of a matched pair is the class checker run on the double. The
//! printed condition families are also evaluated, as an advisory report, when
//! they make sense as written.

use crate::axioms::AlgebraClass;
use crate::constructions::sub_adjacent_raw;
use crate::error::{Error, Result};
use crate::linalg::{add, basis_vector, combine, sub, Matrix, Vector};
use crate::presentation::{Algebra, Representation, ALPHA, BRACKET, DOT, STAR};
use crate::report::{ensure, require, run, CheckConfig, CheckReport, Family};
use crate::representations::{act, check_rep, class_actions, rep_commutator, L, R, RHO, S};
use crate::scalar::int;
use crate::tensor::BilinearMap;

/// Two algebras acting on each other: `on_b` is indexed by the basis of `a`
/// and acts on `b` (twisted by `b`'s twist); `on_a` the other way round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    pub a: Algebra,
    pub b: Algebra,
    pub on_b: Representation,
    pub on_a: Representation,
}

impl MatchedPair {
    pub fn new(a: Algebra, b: Algebra, on_b: Representation, on_a: Representation) -> Result<Self> {
        let mp = MatchedPair { a, b, on_b, on_a };
        mp.validate()?;
        Ok(mp)
    }

    fn validate(&self) -> Result<()> {
        let shape = |rep: &Representation, acting: &Algebra, acted: &Algebra, side: &str| -> Result<()> {
            if rep.algebra_dim != acting.dim || rep.module_dim != acted.dim {
                return Err(Error::Dimension(format!(
                    "{side}: actions are indexed by {} elements on a {}-dimensional module, expected {} and {}",
                    rep.algebra_dim, rep.module_dim, acting.dim, acted.dim
                )));
            }
            if rep.beta != *acted.square_map(ALPHA)? {
                return Err(Error::Invalid(format!("{side}: module twist differs from the algebra twist")));
            }
            Ok(())
        };
        shape(&self.on_b, &self.a, &self.b, "A acting on B")?;
        shape(&self.on_a, &self.b, &self.a, "B acting on A")
    }

    pub fn swap(&self) -> MatchedPair {
        MatchedPair { a: self.b.clone(), b: self.a.clone(), on_b: self.on_a.clone(), on_a: self.on_b.clone() }
    }

    /// Zero actions both ways.
    pub fn trivial(a: Algebra, b: Algebra, class: AlgebraClass) -> Result<Self> {
        let zero = |acting: &Algebra, acted: &Algebra| -> Result<Representation> {
            let mut rep = Representation::new(acting.dim, acted.square_map(ALPHA)?.clone());
            for name in class_actions(class)? {
                rep = rep.with_action(name, vec![Matrix::zeros(acted.dim, acted.dim); acting.dim]);
            }
            Ok(rep)
        };
        let (on_b, on_a) = (zero(&a, &b)?, zero(&b, &a)?);
        MatchedPair::new(a, b, on_b, on_a)
    }
}

/// Permutation `A ⊕ B → B ⊕ A`.
pub fn block_swap(da: usize, db: usize) -> Matrix {
    let n = da + db;
    let cols: Vec<Vector> = (0..n)
        .map(|c| if c < da { basis_vector(n, db + c) } else { basis_vector(n, c - da) })
        .collect();
    Matrix::from_columns(n, &cols)
}

/// Double product formulas, without checks.
pub fn build_double_raw(mp: &MatchedPair, class: AlgebraClass) -> Result<Algebra> {
    mp.validate()?;
    let (da, db) = (mp.a.dim, mp.b.dim);
    let n = da + db;
    let split = |p: usize| {
        let v = basis_vector(n, p);
        (v[..da].to_vec(), v[da..].to_vec())
    };
    let join = |x: Vector, a: Vector| -> Vector { x.into_iter().chain(a).collect() };
    let mut out = Algebra::new(n);
    out.basis = mp.a.basis.iter().chain(&mp.b.basis).cloned().collect();
    for name in class.ops() {
        let (pa, pb) = (mp.a.op(name)?, mp.b.op(name)?);
        let table = match *name {
            DOT => {
                let (sa, sb) = (mp.on_b.action(S)?, mp.on_a.action(S)?);
                BilinearMap::from_fn(n, |p, q| {
                    let ((x, a), (y, b)) = (split(p), split(q));
                    let ax = add(&add(&pa.eval(&x, &y), &act(sb, &a, &y)), &act(sb, &b, &x));
                    let bx = add(&add(&pb.eval(&a, &b), &act(sa, &x, &b)), &act(sa, &y, &a));
                    join(ax, bx)
                })
            }
            BRACKET => {
                let (ra, rb) = (mp.on_b.action(RHO)?, mp.on_a.action(RHO)?);
                BilinearMap::from_fn(n, |p, q| {
                    let ((x, a), (y, b)) = (split(p), split(q));
                    let ax = sub(&add(&pa.eval(&x, &y), &act(rb, &a, &y)), &act(rb, &b, &x));
                    let bx = sub(&add(&pb.eval(&a, &b), &act(ra, &x, &b)), &act(ra, &y, &a));
                    join(ax, bx)
                })
            }
            _ => {
                let (la, ra) = (mp.on_b.action(L)?, mp.on_b.action(R)?);
                let (lb, rb) = (mp.on_a.action(L)?, mp.on_a.action(R)?);
                BilinearMap::from_fn(n, |p, q| {
                    let ((x, a), (y, b)) = (split(p), split(q));
                    let ax = add(&add(&pa.eval(&x, &y), &act(lb, &a, &y)), &act(rb, &b, &x));
                    let bx = add(&add(&pb.eval(&a, &b), &act(la, &x, &b)), &act(ra, &y, &a));
                    join(ax, bx)
                })
            }
        };
        out.ops.insert(name.to_string(), table);
    }
    out.maps.insert(ALPHA.into(), mp.a.square_map(ALPHA)?.direct_sum(mp.b.square_map(ALPHA)?));
    Ok(out)
}

fn require_sides(mp: &MatchedPair, class: AlgebraClass, cfg: &CheckConfig) -> Result<()> {
    require(check_rep(class, &mp.a, &mp.on_b, cfg)?, "A acting on B is not a representation")?;
    require(check_rep(class, &mp.b, &mp.on_a, cfg)?, "B acting on A is not a representation")
}

/// The double, after checking that each side is a representation.
pub fn build_double(mp: &MatchedPair, class: AlgebraClass, cfg: &CheckConfig) -> Result<Algebra> {
    class_actions(class)?;
    mp.validate()?;
    require_sides(mp, class, cfg)?;
    build_double_raw(mp, class)
}

#[derive(Clone, Debug)]
pub struct MatchedPairReport {
    /// Class checker on the double.
    pub normative: CheckReport,
    /// Printed condition families that type-check as written.
    pub advisory: CheckReport,
    /// Printed families not evaluated.
    pub skipped: Vec<&'static str>,
}

impl MatchedPairReport {
    pub fn passed(&self) -> bool {
        self.normative.passed()
    }

    /// The printed conditions all hold but the double fails: a misprinted family.
    pub fn conditions_insufficient(&self) -> bool {
        self.advisory.passed() && !self.normative.passed()
    }
}

/// Families skipped because a term does not type-check as printed.
pub fn skipped_families(class: AlgebraClass) -> Vec<&'static str> {
    let comm = ["comm_sA_on_product", "comm_sB_on_product"];
    match class {
        AlgebraClass::CommHomAssoc => comm.to_vec(),
        AlgebraClass::TransposedHomPoisson => [&comm[..], &["transposed_sA_on_bracket", "transposed_sB_on_bracket"]].concat(),
        AlgebraClass::HomPreLie => vec!["pre_lie_rB_on_commutator"],
        AlgebraClass::HomPreLiePoisson => {
            [&comm[..], &["pre_lie_rB_on_commutator", "plp_sA_on_commutator", "plp_rB_on_dot", "plp_sB_on_commutator"]].concat()
        }
        _ => vec![],
    }
}

struct Sides<'a> {
    da: usize,
    db: usize,
    al: &'a Matrix,
    be: &'a Matrix,
}

fn comm_families<'a>(mp: &'a MatchedPair, c: &Sides<'a>, out: &mut Vec<Family<'a>>) -> Result<()> {
    let (dota, dotb) = (mp.a.op(DOT)?, mp.b.op(DOT)?);
    let (sa, sb) = (mp.on_b.action(S)?, mp.on_a.action(S)?);
    let (al, be) = (c.al, c.be);
    out.push(Family::new("comm_sA_exchange", vec![c.da, c.db, c.db], move |v: &[Vector]| {
        let (x, a, b) = (&v[0], &v[1], &v[2]);
        let l = add(&dotb.eval(&act(sa, x, a), &be.apply(b)), &act(sa, &act(sb, a, x), &be.apply(b)));
        let r = add(&dotb.eval(&be.apply(a), &act(sa, x, b)), &act(sa, &act(sb, b, x), &be.apply(a)));
        sub(&l, &r)
    }));
    out.push(Family::new("comm_sB_exchange", vec![c.da, c.da, c.db], move |v: &[Vector]| {
        let (x, y, a) = (&v[0], &v[1], &v[2]);
        let l = add(&dota.eval(&act(sb, a, x), &al.apply(y)), &act(sb, &act(sa, x, a), &al.apply(y)));
        let r = add(&dota.eval(&al.apply(x), &act(sb, a, y)), &act(sb, &act(sa, y, a), &al.apply(x)));
        sub(&l, &r)
    }));
    Ok(())
}

fn lie_families<'a>(mp: &'a MatchedPair, c: &Sides<'a>, out: &mut Vec<Family<'a>>) -> Result<()> {
    let (bra, brb) = (mp.a.op(BRACKET)?, mp.b.op(BRACKET)?);
    let (ra, rb) = (mp.on_b.action(RHO)?, mp.on_a.action(RHO)?);
    let (al, be) = (c.al, c.be);
    out.push(Family::new("lie_rhoB_on_bracket", vec![c.da, c.da, c.db], move |v: &[Vector]| {
        let (x, y, a) = (&v[0], &v[1], &v[2]);
        let lhs = act(rb, &be.apply(a), &bra.eval(x, y));
        let t1 = bra.eval(&act(rb, a, x), &al.apply(y));
        let t2 = bra.eval(&al.apply(x), &act(rb, a, y));
        let t3 = act(rb, &act(ra, y, a), &al.apply(x));
        let t4 = act(rb, &act(ra, x, a), &al.apply(y));
        combine(x.len(), &[(int(1), &lhs), (int(-1), &t1), (int(-1), &t2), (int(-1), &t3), (int(1), &t4)])
    }));
    out.push(Family::new("lie_rhoA_on_bracket", vec![c.da, c.db, c.db], move |v: &[Vector]| {
        let (x, a, b) = (&v[0], &v[1], &v[2]);
        let lhs = act(ra, &al.apply(x), &brb.eval(a, b));
        let t1 = brb.eval(&act(ra, x, a), &be.apply(b));
        let t2 = brb.eval(&be.apply(a), &act(ra, x, b));
        let t3 = act(ra, &act(rb, b, x), &be.apply(a));
        let t4 = act(ra, &act(rb, a, x), &be.apply(b));
        combine(a.len(), &[(int(1), &lhs), (int(-1), &t1), (int(-1), &t2), (int(-1), &t3), (int(1), &t4)])
    }));
    Ok(())
}

fn transposed_families<'a>(mp: &'a MatchedPair, c: &Sides<'a>, out: &mut Vec<Family<'a>>) -> Result<()> {
    let (dota, dotb) = (mp.a.op(DOT)?, mp.b.op(DOT)?);
    let (bra, brb) = (mp.a.op(BRACKET)?, mp.b.op(BRACKET)?);
    let (sa, sb) = (mp.on_b.action(S)?, mp.on_a.action(S)?);
    let (ra, rb) = (mp.on_b.action(RHO)?, mp.on_a.action(RHO)?);
    let (al, be) = (c.al, c.be);
    out.push(Family::new("transposed_rhoA_on_product", vec![c.da, c.db, c.db], move |v: &[Vector]| {
        let (x, a, b) = (&v[0], &v[1], &v[2]);
        let l1 = dotb.eval(&be.apply(a), &act(ra, x, b));
        let l2 = act(sa, &act(rb, b, x), &be.apply(a));
        let r1 = brb.eval(&act(sa, x, a), &be.apply(b));
        let r2 = act(ra, &act(sb, a, x), &be.apply(b));
        let r3 = act(ra, &al.apply(x), &dotb.eval(a, b));
        combine(a.len(), &[(int(2), &l1), (int(-2), &l2), (int(-1), &r1), (int(-1), &r2), (int(-1), &r3)])
    }));
    out.push(Family::new("transposed_rhoB_on_product", vec![c.da, c.da, c.db], move |v: &[Vector]| {
        let (x, y, a) = (&v[0], &v[1], &v[2]);
        let l1 = dota.eval(&al.apply(x), &act(rb, a, y));
        let l2 = act(sb, &act(ra, y, a), &al.apply(x));
        let r1 = bra.eval(&act(sb, a, x), &al.apply(y));
        let r2 = act(rb, &act(sa, x, a), &al.apply(y));
        let r3 = act(rb, &be.apply(a), &dota.eval(x, y));
        combine(x.len(), &[(int(2), &l1), (int(-2), &l2), (int(-1), &r1), (int(-1), &r2), (int(-1), &r3)])
    }));
    Ok(())
}

fn pre_lie_families<'a>(mp: &'a MatchedPair, c: &Sides<'a>, out: &mut Vec<Family<'a>>) -> Result<()> {
    let (sta, stb) = (mp.a.op(STAR)?, mp.b.op(STAR)?);
    let (la, ra) = (mp.on_b.action(L)?, mp.on_b.action(R)?);
    let (lb, rb) = (mp.on_a.action(L)?, mp.on_a.action(R)?);
    let (al, be) = (c.al, c.be);
    let rho = |l: &[Matrix], r: &[Matrix], x: &[crate::scalar::Scalar], w: &[crate::scalar::Scalar]| {
        sub(&act(l, x, w), &act(r, x, w))
    };
    out.push(Family::new("pre_lie_rA_on_commutator", vec![c.da, c.db, c.db], move |v: &[Vector]| {
        let (x, a, b) = (&v[0], &v[1], &v[2]);
        let lhs = act(ra, &al.apply(x), &sub(&stb.eval(a, b), &stb.eval(b, a)));
        let t1 = act(ra, &act(rb, b, x), &be.apply(a));
        let t2 = act(ra, &act(lb, a, x), &be.apply(b));
        let t3 = stb.eval(&be.apply(a), &act(ra, x, b));
        let t4 = stb.eval(&be.apply(b), &act(ra, x, a));
        combine(a.len(), &[(int(1), &lhs), (int(-1), &t1), (int(1), &t2), (int(-1), &t3), (int(1), &t4)])
    }));
    out.push(Family::new("pre_lie_lA_on_star", vec![c.da, c.db, c.db], move |v: &[Vector]| {
        let (x, a, b) = (&v[0], &v[1], &v[2]);
        let lhs = act(la, &al.apply(x), &stb.eval(a, b));
        let t1 = stb.eval(&rho(la, ra, x, a), &be.apply(b));
        let t2 = act(la, &rho(lb, rb, a, x), &be.apply(b));
        let t3 = stb.eval(&be.apply(a), &act(la, x, b));
        let t4 = act(ra, &act(rb, b, x), &be.apply(a));
        combine(a.len(), &[(int(1), &lhs), (int(-1), &t1), (int(1), &t2), (int(-1), &t3), (int(-1), &t4)])
    }));
    out.push(Family::new("pre_lie_lB_on_star", vec![c.da, c.da, c.db], move |v: &[Vector]| {
        let (x, y, a) = (&v[0], &v[1], &v[2]);
        let lhs = act(lb, &be.apply(a), &sta.eval(x, y));
        let t1 = sta.eval(&rho(lb, rb, a, x), &al.apply(y));
        let t2 = act(lb, &rho(la, ra, x, a), &al.apply(y));
        let t3 = sta.eval(&al.apply(x), &act(lb, a, y));
        let t4 = act(rb, &act(ra, y, a), &al.apply(x));
        combine(x.len(), &[(int(1), &lhs), (int(-1), &t1), (int(1), &t2), (int(-1), &t3), (int(-1), &t4)])
    }));
    Ok(())
}

fn pre_lie_poisson_families<'a>(mp: &'a MatchedPair, c: &Sides<'a>, out: &mut Vec<Family<'a>>) -> Result<()> {
    let (dota, dotb) = (mp.a.op(DOT)?, mp.b.op(DOT)?);
    let (sta, stb) = (mp.a.op(STAR)?, mp.b.op(STAR)?);
    let (sa, la, ra) = (mp.on_b.action(S)?, mp.on_b.action(L)?, mp.on_b.action(R)?);
    let (sb, lb, rb) = (mp.on_a.action(S)?, mp.on_a.action(L)?, mp.on_a.action(R)?);
    let (al, be) = (c.al, c.be);
    let (da, db) = (c.da, c.db);
    let rho = |l: &[Matrix], r: &[Matrix], x: &[crate::scalar::Scalar], w: &[crate::scalar::Scalar]| {
        sub(&act(l, x, w), &act(r, x, w))
    };
    out.push(Family::new("plp_rA_on_dot", vec![da, db, db], move |v: &[Vector]| {
        let (x, a, b) = (&v[0], &v[1], &v[2]);
        let lhs = act(ra, &al.apply(x), &dotb.eval(a, b));
        let t1 = dotb.eval(&be.apply(a), &act(ra, x, b));
        let t2 = act(sa, &act(lb, b, x), &be.apply(a));
        sub(&sub(&lhs, &t1), &t2)
    }));
    out.push(Family::new("plp_sA_on_star", vec![da, db, db], move |v: &[Vector]| {
        let (x, a, b) = (&v[0], &v[1], &v[2]);
        let t1 = stb.eval(&act(sa, x, a), &be.apply(b));
        let t2 = act(la, &act(sb, a, x), &be.apply(b));
        sub(&add(&t1, &t2), &act(sa, &al.apply(x), &stb.eval(a, b)))
    }));
    out.push(Family::new("plp_lA_exchange", vec![da, db, db], move |v: &[Vector]| {
        let (x, a, b) = (&v[0], &v[1], &v[2]);
        let t1 = act(la, &act(sb, a, x), &be.apply(b));
        let t2 = stb.eval(&act(sa, x, a), &be.apply(b));
        let t3 = dotb.eval(&be.apply(a), &act(la, x, b));
        let t4 = act(sa, &act(rb, b, x), &be.apply(a));
        sub(&add(&t1, &t2), &add(&t3, &t4))
    }));
    out.push(Family::new("plp_lA_on_dot", vec![da, db, db], move |v: &[Vector]| {
        let (x, a, b) = (&v[0], &v[1], &v[2]);
        let t1 = dotb.eval(&rho(la, ra, x, a), &be.apply(b));
        let t2 = act(sa, &rho(lb, rb, a, x), &be.apply(b));
        let t3 = act(la, &al.apply(x), &dotb.eval(a, b));
        let t4 = stb.eval(&be.apply(a), &act(la, x, b));
        let t5 = act(ra, &act(sb, b, x), &be.apply(a));
        combine(a.len(), &[(int(1), &t1), (int(-1), &t2), (int(-1), &t3), (int(1), &t4), (int(1), &t5)])
    }));
    out.push(Family::new("plp_sB_on_star", vec![da, da, db], move |v: &[Vector]| {
        let (x, y, a) = (&v[0], &v[1], &v[2]);
        let t1 = sta.eval(&act(sb, a, x), &al.apply(y));
        let t2 = act(lb, &act(sa, x, a), &al.apply(y));
        sub(&add(&t1, &t2), &act(sb, &be.apply(a), &sta.eval(x, y)))
    }));
    out.push(Family::new("plp_lB_exchange", vec![da, da, db], move |v: &[Vector]| {
        let (x, y, a) = (&v[0], &v[1], &v[2]);
        let t1 = act(lb, &act(sa, x, a), &al.apply(y));
        let t2 = sta.eval(&act(sb, a, x), &al.apply(y));
        let t3 = dota.eval(&al.apply(x), &act(lb, a, y));
        let t4 = act(sb, &act(ra, y, a), &al.apply(x));
        sub(&add(&t1, &t2), &add(&t3, &t4))
    }));
    // printed with α(x) as the second factor of the first term
    out.push(Family::new("plp_lB_on_dot", vec![da, da, db], move |v: &[Vector]| {
        let (x, y, a) = (&v[0], &v[1], &v[2]);
        let t1 = dota.eval(&rho(lb, rb, a, x), &al.apply(x));
        let t2 = act(sb, &rho(la, ra, x, a), &al.apply(y));
        let t3 = act(lb, &be.apply(a), &dota.eval(x, y));
        let t4 = sta.eval(&al.apply(x), &act(lb, a, y));
        let t5 = act(rb, &act(sa, y, a), &al.apply(x));
        combine(x.len(), &[(int(1), &t1), (int(-1), &t2), (int(-1), &t3), (int(1), &t4), (int(1), &t5)])
    }));
    Ok(())
}

pub fn advisory_families<'a>(mp: &'a MatchedPair, class: AlgebraClass) -> Result<Vec<Family<'a>>> {
    let c = Sides { da: mp.a.dim, db: mp.b.dim, al: mp.a.square_map(ALPHA)?, be: mp.b.square_map(ALPHA)? };
    let mut out = Vec::new();
    match class {
        AlgebraClass::CommHomAssoc => comm_families(mp, &c, &mut out)?,
        AlgebraClass::HomLie => lie_families(mp, &c, &mut out)?,
        AlgebraClass::TransposedHomPoisson => {
            comm_families(mp, &c, &mut out)?;
            lie_families(mp, &c, &mut out)?;
            transposed_families(mp, &c, &mut out)?;
        }
        AlgebraClass::HomPreLie => pre_lie_families(mp, &c, &mut out)?,
        AlgebraClass::HomPreLiePoisson => {
            comm_families(mp, &c, &mut out)?;
            pre_lie_families(mp, &c, &mut out)?;
            pre_lie_poisson_families(mp, &c, &mut out)?;
        }
        AlgebraClass::HomPoisson => {
            class_actions(class)?;
        }
    }
    Ok(out)
}

pub fn check_matched_pair(mp: &MatchedPair, class: AlgebraClass, cfg: &CheckConfig) -> Result<MatchedPairReport> {
    let double = build_double(mp, class, cfg)?;
    let skipped = skipped_families(class);
    let mut advisory = run("printed-conditions", &advisory_families(mp, class)?, cfg);
    for s in &skipped {
        advisory.notes.push(format!("{s} skipped: type-inconsistent as printed"));
    }
    Ok(MatchedPairReport { normative: class.check(&double, cfg)?, advisory, skipped })
}

/// Passes from a Hom-pre-Lie matched pair to the matched pair of sub-adjacent Hom-Lie algebras.
pub fn mp_pre_lie_to_lie(mp: &MatchedPair, cfg: &CheckConfig) -> Result<MatchedPair> {
    let input = check_matched_pair(mp, AlgebraClass::HomPreLie, cfg)?;
    require(input.normative, "input is not a Hom-pre-Lie matched pair")?;
    let out = mp_pre_lie_to_lie_raw(mp)?;
    let post = check_matched_pair(&out, AlgebraClass::HomLie, cfg)?;
    ensure(post.normative, "commutator pair is not a Hom-Lie matched pair")?;
    Ok(out)
}

pub fn mp_pre_lie_to_lie_raw(mp: &MatchedPair) -> Result<MatchedPair> {
    let lie = |x: &Algebra| sub_adjacent_raw(x)?.restrict(&[BRACKET]);
    let strip = |rep: &Representation| -> Result<Representation> {
        let full = rep_commutator(rep)?;
        Ok(Representation::new(full.algebra_dim, full.beta.clone()).with_action(RHO, full.action(RHO)?.to_vec()))
    };
    MatchedPair::new(lie(&mp.a)?, lie(&mp.b)?, strip(&mp.on_b)?, strip(&mp.on_a)?)
}
