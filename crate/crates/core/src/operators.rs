//! O-operators, Rota-Baxter operators, the products they induce, and the
//! exact solver for derivation spaces.

use num_traits::Zero;

use crate::axioms::{check_morphism, derivation_families, AlgebraClass};
use crate::constructions::sub_adjacent_raw;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, sub, Matrix, Vector};
use crate::presentation::{Algebra, Representation, ALPHA, BRACKET, DOT, STAR};
use crate::report::{ensure, require, run, CheckConfig, CheckReport, Family};
use crate::representations::{act, check_rep, regular_representation, RHO, S};
use crate::tensor::BilinearMap;

fn o_classes(class: AlgebraClass) -> Result<()> {
    match class {
        AlgebraClass::CommHomAssoc | AlgebraClass::HomLie | AlgebraClass::TransposedHomPoisson => Ok(()),
        other => Err(Error::Invalid(format!("no O-operators for {other} algebras"))),
    }
}

fn o_shape(a: &Algebra, rep: &Representation, t: &Matrix) -> Result<()> {
    rep.check_shape(a)?;
    if t.rows != a.dim || t.cols != rep.module_dim {
        return Err(Error::Dimension(format!(
            "T is {}x{}, expected {}x{}",
            t.rows, t.cols, a.dim, rep.module_dim
        )));
    }
    Ok(())
}

pub fn o_operator_families<'a>(
    a: &'a Algebra,
    rep: &'a Representation,
    t: &'a Matrix,
    class: AlgebraClass,
) -> Result<Vec<Family<'a>>> {
    o_classes(class)?;
    o_shape(a, rep, t)?;
    let (al, beta) = (a.square_map(ALPHA)?, &rep.beta);
    let m = rep.module_dim;
    let mut out = vec![Family::new("o_twist", vec![m], move |v: &[Vector]| {
        sub(&al.apply(&t.apply(&v[0])), &t.apply(&beta.apply(&v[0])))
    })];
    if class != AlgebraClass::HomLie {
        let (dot, s) = (a.op(DOT)?, rep.action(S)?);
        // T(u)·T(v) = T(s(T(u))v + s(T(v))u)
        out.push(Family::new("o_dot", vec![m, m], move |v: &[Vector]| {
            let (tu, tv) = (t.apply(&v[0]), t.apply(&v[1]));
            let inner = crate::linalg::add(&act(s, &tu, &v[1]), &act(s, &tv, &v[0]));
            sub(&dot.eval(&tu, &tv), &t.apply(&inner))
        }));
    }
    if class != AlgebraClass::CommHomAssoc {
        let (br, rho) = (a.op(BRACKET)?, rep.action(RHO)?);
        // [T(u), T(v)] = T(ρ(T(u))v - ρ(T(v))u)
        out.push(Family::new("o_bracket", vec![m, m], move |v: &[Vector]| {
            let (tu, tv) = (t.apply(&v[0]), t.apply(&v[1]));
            let inner = sub(&act(rho, &tu, &v[1]), &act(rho, &tv, &v[0]));
            sub(&br.eval(&tu, &tv), &t.apply(&inner))
        }));
    }
    Ok(out)
}

/// `αT = Tβ` together with the functional equation(s) of the class.
pub fn check_o_operator(
    a: &Algebra,
    rep: &Representation,
    t: &Matrix,
    class: AlgebraClass,
    cfg: &CheckConfig,
) -> Result<CheckReport> {
    o_classes(class)?;
    o_shape(a, rep, t)?;
    require(check_rep(class, a, rep, cfg)?, format!("module is not a representation of the {class} algebra"))?;
    Ok(run("o-operator", &o_operator_families(a, rep, t, class)?, cfg))
}

/// O-operator with respect to the regular representation.
pub fn check_rota_baxter(a: &Algebra, r: &Matrix, class: AlgebraClass, cfg: &CheckConfig) -> Result<CheckReport> {
    if !r.is_square() || r.rows != a.dim {
        return Err(Error::Dimension(format!("R is {}x{}, expected {}x{}", r.rows, r.cols, a.dim, a.dim)));
    }
    o_classes(class)?;
    let rep = regular_representation(a, class)?;
    Ok(check_o_operator(a, &rep, r, class, cfg)?.with_note("regular representation"))
}

/// Class of the products induced on the module.
pub fn induced_class(class: AlgebraClass) -> Result<AlgebraClass> {
    o_classes(class)?;
    Ok(match class {
        AlgebraClass::CommHomAssoc => AlgebraClass::CommHomAssoc,
        AlgebraClass::HomLie => AlgebraClass::HomPreLie,
        _ => AlgebraClass::HomPreLiePoisson,
    })
}

/// `u⋄v = s(T(u))v + s(T(v))u` and `u∗v = ρ(T(u))v`, twisted by `β`.
pub fn induced_products_raw(a: &Algebra, rep: &Representation, t: &Matrix, class: AlgebraClass) -> Result<Algebra> {
    o_classes(class)?;
    o_shape(a, rep, t)?;
    let m = rep.module_dim;
    let tv: Vec<Vector> = (0..m).map(|i| t.column(i)).collect();
    let mut out = Algebra::new(m).with_alpha(rep.beta.clone());
    if class != AlgebraClass::HomLie {
        let s = rep.action(S)?;
        let e = |i: usize| crate::linalg::basis_vector(m, i);
        out = out.with_op(
            DOT,
            BilinearMap::from_fn(m, |i, j| crate::linalg::add(&act(s, &tv[i], &e(j)), &act(s, &tv[j], &e(i)))),
        );
    }
    if class != AlgebraClass::CommHomAssoc {
        let rho = rep.action(RHO)?;
        out = out.with_op(STAR, BilinearMap::from_fn(m, |i, j| act(rho, &tv[i], &crate::linalg::basis_vector(m, j))));
    }
    Ok(out)
}

pub fn induced_products(
    a: &Algebra,
    rep: &Representation,
    t: &Matrix,
    class: AlgebraClass,
    cfg: &CheckConfig,
) -> Result<Algebra> {
    require(check_o_operator(a, rep, t, class, cfg)?, "T is not an O-operator")?;
    let out = induced_products_raw(a, rep, t, class)?;
    let target = induced_class(class)?;
    ensure(target.check(&out, cfg)?, format!("induced products are not a {target} algebra"))?;
    Ok(out)
}

/// The algebra on the module that `T` maps homomorphically into `a`.
fn induced_source(induced: &Algebra, class: AlgebraClass) -> Result<Algebra> {
    if class == AlgebraClass::CommHomAssoc {
        return Ok(induced.clone());
    }
    sub_adjacent_raw(induced)?.restrict(class.ops())
}

/// `T` is a morphism from the sub-adjacent algebra of the induced products to `a`.
pub fn o_operator_is_morphism(
    a: &Algebra,
    rep: &Representation,
    t: &Matrix,
    class: AlgebraClass,
    cfg: &CheckConfig,
) -> Result<CheckReport> {
    let induced = induced_products(a, rep, t, class, cfg)?;
    let src = induced_source(&induced, class)?;
    check_morphism(&src, a, t, class.ops(), cfg)
}

fn table_families<'a>(got: &'a Algebra, want: &'a Algebra, pairs: &[(&'a str, &'a str)]) -> Result<Vec<Family<'a>>> {
    let n = want.dim;
    pairs
        .iter()
        .map(|&(g, w)| {
            let (gop, wop) = (got.op(g)?, want.op(w)?);
            Ok(Family::new(format!("reproduces_{w}"), vec![n, n], move |v: &[Vector]| {
                sub(&gop.eval(&v[0], &v[1]), &wop.eval(&v[0], &v[1]))
            }))
        })
        .collect()
}

/// `x·y = T(s(x)T⁻¹(y) + s(y)T⁻¹(x))`, `x∗y = T(ρ(x)T⁻¹(y))`.
pub fn compatible_pre_lie_from_invertible_raw(a: &Algebra, rep: &Representation, t: &Matrix) -> Result<Algebra> {
    o_shape(a, rep, t)?;
    if !t.is_square() || t.determinant()?.is_zero() {
        return Err(Error::Invalid("T is not invertible".into()));
    }
    let ti = t.inverse()?;
    let (s, rho) = (rep.action(S)?, rep.action(RHO)?);
    let n = a.dim;
    let e = |i: usize| crate::linalg::basis_vector(n, i);
    let dot = BilinearMap::from_fn(n, |i, j| {
        t.apply(&crate::linalg::add(&act(s, &e(i), &ti.column(j)), &act(s, &e(j), &ti.column(i))))
    });
    let star = BilinearMap::from_fn(n, |i, j| t.apply(&act(rho, &e(i), &ti.column(j))));
    let mut out = Algebra::new(n).with_op(DOT, dot).with_op(STAR, star).with_alpha(a.square_map(ALPHA)?.clone());
    out.basis = a.basis.clone();
    Ok(out)
}

pub fn compatible_pre_lie_from_invertible(
    a: &Algebra,
    rep: &Representation,
    t: &Matrix,
    cfg: &CheckConfig,
) -> Result<Algebra> {
    let out = compatible_pre_lie_from_invertible_raw(a, rep, t)?;
    require(
        check_o_operator(a, rep, t, AlgebraClass::TransposedHomPoisson, cfg)?,
        "T is not an O-operator",
    )?;
    let sub = sub_adjacent_raw(&out)?;
    ensure(
        run("sub-adjacent", &table_families(&sub, a, &[(DOT, DOT), (BRACKET, BRACKET)])?, cfg),
        "sub-adjacent algebra differs from the input",
    )?;
    Ok(out)
}

/// `x⋄y = R(x)·y + x·R(y)`, `x∗y = {R(x), y}`.
pub fn rota_baxter_induced_raw(a: &Algebra, r: &Matrix) -> Result<Algebra> {
    let (dot, br) = (a.op(DOT)?, a.op(BRACKET)?);
    let n = a.dim;
    let e = |i: usize| crate::linalg::basis_vector(n, i);
    let diamond = BilinearMap::from_fn(n, |i, j| {
        crate::linalg::add(&dot.eval(&r.column(i), &e(j)), &dot.eval(&e(i), &r.column(j)))
    });
    let star = BilinearMap::from_fn(n, |i, j| br.eval(&r.column(i), &e(j)));
    let mut out = Algebra::new(n).with_op(DOT, diamond).with_op(STAR, star).with_alpha(a.square_map(ALPHA)?.clone());
    out.basis = a.basis.clone();
    Ok(out)
}

pub fn rota_baxter_induced(a: &Algebra, r: &Matrix, cfg: &CheckConfig) -> Result<Algebra> {
    let class = AlgebraClass::TransposedHomPoisson;
    require(check_rota_baxter(a, r, class, cfg)?, "R is not a Rota-Baxter operator")?;
    let out = rota_baxter_induced_raw(a, r)?;
    let sub = sub_adjacent_raw(&out)?.restrict(class.ops())?;
    ensure(class.check(&sub, cfg)?, "sub-adjacent algebra is not transposed Hom-Poisson")?;
    ensure(check_morphism(&sub, a, r, class.ops(), cfg)?, "R is not a morphism from the sub-adjacent algebra")?;
    Ok(out)
}

/// Linear system for `D` in the unknowns `D[r][c]` at index `r * n + c`.
pub fn derivation_system(a: &Algebra, op: &str, commuting_with: Option<&str>) -> Result<Matrix> {
    let m = a.op(op)?;
    let n = a.dim;
    let mut rows: Vec<Vector> = Vec::new();
    let idx = |r: usize, c: usize| r * n + c;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // D(e_i e_j) - D(e_i) e_j - e_i D(e_j), component k
                let mut row = vec![crate::Scalar::zero(); n * n];
                for c in 0..n {
                    row[idx(k, c)] += m.entry(i, j, c);
                }
                for r in 0..n {
                    row[idx(r, i)] -= m.entry(r, j, k);
                    row[idx(r, j)] -= m.entry(i, r, k);
                }
                rows.push(row);
            }
        }
    }
    if let Some(name) = commuting_with {
        let al = a.square_map(name)?;
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![crate::Scalar::zero(); n * n];
                for t in 0..n {
                    row[idx(t, c)] += al.get(r, t);
                    row[idx(r, t)] -= al.get(t, c);
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows)
}

/// Reduced echelon basis of the derivations of `op`, optionally commuting with a map.
pub fn derivation_space(a: &Algebra, op: &str, commuting_with: Option<&str>, cfg: &CheckConfig) -> Result<Vec<Matrix>> {
    let n = a.dim;
    let sys = derivation_system(a, op, commuting_with)?;
    let basis: Vec<Matrix> = nullspace(&sys)
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(n).map(<[_]>::to_vec).collect()).expect("square"))
        .collect();
    for d in &basis {
        let fams: Vec<Family<'_>> = derivation_families(a, op, d)?
            .into_iter()
            .filter(|f| commuting_with == Some(ALPHA) || f.identity != "derivation_commutes_alpha")
            .collect();
        ensure(run("derivation", &fams, cfg), "solved map is not a derivation")?;
        if let Some(name) = commuting_with.filter(|&m| m != ALPHA) {
            let g = a.square_map(name)?;
            if g.compose(d) != d.compose(g) {
                return Err(Error::Invalid(format!("solved map does not commute with {name}")));
            }
        }
    }
    Ok(basis)
}
