//! Test-only oracles. Nothing here calls the library's evaluators: products are
//! expanded from the raw structure constants and identities are restated.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hompoisson::linalg::Matrix;
use hompoisson::presentation::{Algebra, Representation};
use hompoisson::{AlgebraClass, Scalar};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type V = Vec<Scalar>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    q(rng.gen_range(-6..=6), rng.gen_range(1..=5))
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> V {
    (0..n).map(|_| random_rational(rng)).collect()
}

fn zeros(n: usize) -> V {
    vec![Scalar::zero(); n]
}

fn lin(terms: &[(i64, &V)]) -> V {
    let mut out = zeros(terms[0].1.len());
    for (k, v) in terms {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            *o += Scalar::from_integer((*k).into()) * x;
        }
    }
    out
}

fn is_zero(v: &V) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Structure constants as a flat list of `(i, j, k, c)`.
pub struct Table(Vec<(usize, usize, usize, Scalar)>);

impl Table {
    pub fn of(a: &Algebra, op: &str) -> Option<Table> {
        let m = a.ops.get(op)?;
        let n = a.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = m.entry(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        Some(Table(out))
    }

    pub fn mul(&self, x: &V, y: &V) -> V {
        let mut out = zeros(x.len());
        for (i, j, k, c) in &self.0 {
            if !x[*i].is_zero() && !y[*j].is_zero() {
                out[*k] += c * &x[*i] * &y[*j];
            }
        }
        out
    }
}

pub fn mat_apply(m: &Matrix, v: &V) -> V {
    (0..m.rows).map(|r| (0..m.cols).map(|c| m.get(r, c) * &v[c]).sum()).collect()
}

/// `Σ x_i M_i v`.
fn act(mats: &[Matrix], x: &V, v: &V) -> V {
    let mut out = zeros(v.len());
    for (xi, m) in x.iter().zip(mats) {
        for (o, t) in out.iter_mut().zip(mat_apply(m, v)) {
            *o += xi * t;
        }
    }
    out
}

pub struct Naive {
    pub n: usize,
    pub dot: Option<Table>,
    pub bracket: Option<Table>,
    pub star: Option<Table>,
    pub alpha: Matrix,
}

impl Naive {
    pub fn new(a: &Algebra) -> Naive {
        Naive {
            n: a.dim,
            dot: Table::of(a, "dot"),
            bracket: Table::of(a, "bracket"),
            star: Table::of(a, "star"),
            alpha: a.maps["alpha"].clone(),
        }
    }

    fn d(&self, x: &V, y: &V) -> V {
        self.dot.as_ref().expect("dot").mul(x, y)
    }

    fn b(&self, x: &V, y: &V) -> V {
        self.bracket.as_ref().expect("bracket").mul(x, y)
    }

    fn s(&self, x: &V, y: &V) -> V {
        self.star.as_ref().expect("star").mul(x, y)
    }

    fn a(&self, x: &V) -> V {
        mat_apply(&self.alpha, x)
    }

    /// Residuals of the class identities at one triple of vectors.
    pub fn residuals(&self, class: AlgebraClass, x: &V, y: &V, z: &V) -> Vec<V> {
        use AlgebraClass::*;
        let mut out = Vec::new();
        let comm = |out: &mut Vec<V>| {
            out.push(lin(&[(1, &self.d(x, y)), (-1, &self.d(y, x))]));
            out.push(lin(&[(1, &self.d(&self.d(x, y), &self.a(z))), (-1, &self.d(&self.a(x), &self.d(y, z)))]));
        };
        let lie = |out: &mut Vec<V>| {
            out.push(lin(&[(1, &self.b(x, y)), (1, &self.b(y, x))]));
            let j1 = self.b(&self.a(x), &self.b(y, z));
            let j2 = self.b(&self.a(y), &self.b(z, x));
            let j3 = self.b(&self.a(z), &self.b(x, y));
            out.push(lin(&[(1, &j1), (1, &j2), (1, &j3)]));
        };
        let pre_lie = |out: &mut Vec<V>| {
            let asc = |p: &V, r: &V| lin(&[(1, &self.s(&self.s(p, r), &self.a(z))), (-1, &self.s(&self.a(p), &self.s(r, z)))]);
            out.push(lin(&[(1, &asc(x, y)), (-1, &asc(y, x))]));
        };
        match class {
            CommHomAssoc => comm(&mut out),
            HomLie => lie(&mut out),
            HomPoisson => {
                comm(&mut out);
                lie(&mut out);
                let l = self.b(&self.a(x), &self.d(y, z));
                let r1 = self.d(&self.a(y), &self.b(x, z));
                let r2 = self.d(&self.a(z), &self.b(x, y));
                out.push(lin(&[(1, &l), (-1, &r1), (-1, &r2)]));
            }
            TransposedHomPoisson => {
                comm(&mut out);
                lie(&mut out);
                let l = self.d(&self.a(z), &self.b(x, y));
                let r1 = self.b(&self.d(z, x), &self.a(y));
                let r2 = self.b(&self.a(x), &self.d(z, y));
                out.push(lin(&[(2, &l), (-1, &r1), (-1, &r2)]));
            }
            HomPreLie => pre_lie(&mut out),
            HomPreLiePoisson => {
                comm(&mut out);
                pre_lie(&mut out);
                out.push(lin(&[(1, &self.s(&self.d(x, y), &self.a(z))), (-1, &self.d(&self.a(x), &self.s(y, z)))]));
                let az = self.a(z);
                out.push(lin(&[
                    (1, &self.d(&self.s(x, y), &az)),
                    (-1, &self.d(&self.s(y, x), &az)),
                    (-1, &self.s(&self.a(x), &self.d(y, z))),
                    (1, &self.s(&self.a(y), &self.d(x, z))),
                ]));
            }
        }
        out
    }

    /// `α(x)·{y,z}` and `{x·y, α(z)}`.
    pub fn annihilation(&self, x: &V, y: &V, z: &V) -> Vec<V> {
        vec![self.d(&self.a(x), &self.b(y, z)), self.b(&self.d(x, y), &self.a(z))]
    }
}

pub fn random_triples(seed: u64, n: usize, count: usize) -> Vec<(V, V, V)> {
    let mut r = rng(seed);
    (0..count).map(|_| (random_vector(&mut r, n), random_vector(&mut r, n), random_vector(&mut r, n))).collect()
}

/// Class verdict from 20 random rational triples.
pub fn naive_class_verdict(class: AlgebraClass, a: &Algebra, seed: u64) -> bool {
    let o = Naive::new(a);
    random_triples(seed, a.dim, 20).iter().all(|(x, y, z)| o.residuals(class, x, y, z).iter().all(is_zero))
}

pub fn naive_annihilation(a: &Algebra, seed: u64) -> bool {
    let o = Naive::new(a);
    random_triples(seed, a.dim, 20).iter().all(|(x, y, z)| o.annihilation(x, y, z).iter().all(is_zero))
}

/// Representation verdict from 20 random `(x, y, v)`.
pub fn naive_rep_verdict(class: AlgebraClass, a: &Algebra, rep: &Representation, seed: u64) -> bool {
    use AlgebraClass::*;
    let o = Naive::new(a);
    let mut r = rng(seed);
    let beta = &rep.beta;
    let get = |name: &str| rep.actions.get(name).map(Vec::as_slice);
    (0..20).all(|_| {
        let (x, y) = (random_vector(&mut r, a.dim), random_vector(&mut r, a.dim));
        let v = random_vector(&mut r, rep.module_dim);
        let bv = mat_apply(beta, &v);
        let (ax, ay) = (o.a(&x), o.a(&y));
        let tw = |m: &[Matrix]| lin(&[(1, &mat_apply(beta, &act(m, &x, &v))), (-1, &act(m, &ax, &bv))]);
        let mut res: Vec<V> = Vec::new();
        let bimod = |res: &mut Vec<V>, s: &[Matrix]| {
            res.push(lin(&[(1, &act(s, &o.d(&x, &y), &bv)), (-1, &act(s, &ax, &act(s, &y, &v)))]));
            res.push(tw(s));
        };
        let lie = |res: &mut Vec<V>, rho: &[Matrix]| {
            res.push(lin(&[
                (1, &act(rho, &o.b(&x, &y), &bv)),
                (-1, &act(rho, &ax, &act(rho, &y, &v))),
                (1, &act(rho, &ay, &act(rho, &x, &v))),
            ]));
            res.push(tw(rho));
        };
        let pre = |res: &mut Vec<V>, l: &[Matrix], rr: &[Matrix]| {
            let c = lin(&[(1, &o.s(&x, &y)), (-1, &o.s(&y, &x))]);
            res.push(lin(&[(1, &act(l, &c, &bv)), (-1, &act(l, &ax, &act(l, &y, &v))), (1, &act(l, &ay, &act(l, &x, &v)))]));
            let lr = lin(&[(1, &act(l, &x, &v)), (-1, &act(rr, &x, &v))]);
            res.push(lin(&[(1, &act(rr, &ay, &lr)), (-1, &act(l, &ax, &act(rr, &y, &v))), (1, &act(rr, &o.s(&x, &y), &bv))]));
            res.push(tw(l));
            res.push(tw(rr));
        };
        match class {
            CommHomAssoc => bimod(&mut res, get("s").unwrap()),
            HomLie => lie(&mut res, get("rho").unwrap()),
            TransposedHomPoisson => {
                let (s, rho) = (get("s").unwrap(), get("rho").unwrap());
                bimod(&mut res, s);
                lie(&mut res, rho);
                res.push(lin(&[(2, &act(s, &o.b(&x, &y), &bv)), (-1, &act(rho, &ax, &act(s, &y, &v))), (1, &act(rho, &ay, &act(s, &x, &v)))]));
                res.push(lin(&[(2, &act(s, &ax, &act(rho, &y, &v))), (-1, &act(rho, &o.d(&x, &y), &bv)), (-1, &act(rho, &ay, &act(s, &x, &v)))]));
            }
            HomPreLie => pre(&mut res, get("l").unwrap(), get("r").unwrap()),
            HomPreLiePoisson => {
                let (s, l, rr) = (get("s").unwrap(), get("l").unwrap(), get("r").unwrap());
                bimod(&mut res, s);
                pre(&mut res, l, rr);
                res.push(lin(&[(1, &act(l, &o.d(&x, &y), &bv)), (-1, &act(s, &ax, &act(l, &y, &v)))]));
                res.push(lin(&[(1, &act(rr, &ay, &act(s, &x, &v))), (-1, &act(s, &o.s(&x, &y), &bv))]));
                res.push(lin(&[(1, &act(rr, &ay, &act(s, &x, &v))), (-1, &act(s, &ax, &act(rr, &y, &v)))]));
                let c = lin(&[(1, &o.s(&x, &y)), (-1, &o.s(&y, &x))]);
                res.push(lin(&[(1, &act(s, &c, &bv)), (-1, &act(l, &ax, &act(s, &y, &v))), (1, &act(l, &ay, &act(s, &x, &v)))]));
                let lr = lin(&[(1, &act(l, &x, &v)), (-1, &act(rr, &x, &v))]);
                res.push(lin(&[(1, &act(s, &ay, &lr)), (-1, &act(l, &ax, &act(s, &y, &v))), (1, &act(rr, &o.d(&x, &y), &bv))]));
            }
            HomPoisson => unreachable!("no representations"),
        }
        res.iter().all(is_zero)
    })
}

/// Sparse random change of one or two structure constants or twist entries.
pub fn perturb(a: &Algebra, rng: &mut ChaCha8Rng) -> Algebra {
    let mut b = a.clone();
    let n = a.dim;
    let names: Vec<String> = b.ops.keys().cloned().collect();
    for _ in 0..rng.gen_range(1..=2) {
        let c = Scalar::from_integer(rng.gen_range(-2i64..=2).into());
        if rng.gen_bool(0.25) {
            let m = b.maps.get_mut("alpha").unwrap();
            m.set(rng.gen_range(0..n), rng.gen_range(0..n), c);
        } else {
            let name = &names[rng.gen_range(0..names.len())];
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            b.ops.get_mut(name).unwrap().set(i, j, k, c);
        }
    }
    b
}

/// Replaces the bracket of a two-dimensional algebra by a sparse random
/// `{e1,e2} = p e1 + q e2`; in dimension two every skew bracket is Hom-Lie.
pub fn random_bracket_2d(a: &Algebra, rng: &mut ChaCha8Rng) -> Algebra {
    assert_eq!(a.dim, 2);
    let pick = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.5) { Scalar::zero() } else { Scalar::from_integer(rng.gen_range(-2i64..=2).into()) }
    };
    let (p, r) = (pick(rng), pick(rng));
    let mut br = hompoisson::BilinearMap::zero(2);
    br.set(0, 1, 0, p.clone());
    br.set(0, 1, 1, r.clone());
    br.set(1, 0, 0, -p);
    br.set(1, 0, 1, -r);
    let mut b = a.clone();
    b.ops.insert("bracket".into(), br);
    b
}

/// Reduced row echelon form. Pivots are searched from the bottom row up.
pub fn oracle_rref(mut rows: Vec<V>, cols: usize) -> Vec<V> {
    let mut out: Vec<V> = Vec::new();
    for c in 0..cols {
        let Some(p) = (0..rows.len()).rev().find(|&r| !rows[r][c].is_zero()) else { continue };
        let mut pivot = rows.remove(p);
        let inv = Scalar::one() / pivot[c].clone();
        for x in pivot.iter_mut() {
            *x = &*x * &inv;
        }
        for row in rows.iter_mut().chain(out.iter_mut()) {
            if !row[c].is_zero() {
                let f = row[c].clone();
                for (t, pv) in row.iter_mut().zip(&pivot) {
                    *t -= &f * pv;
                }
            }
        }
        out.push(pivot);
    }
    out
}

fn oracle_nullspace(rows: Vec<V>, cols: usize) -> Vec<V> {
    let red = oracle_rref(rows, cols);
    let pivots: BTreeMap<usize, usize> = red
        .iter()
        .enumerate()
        .map(|(r, row)| (row.iter().position(|x| !x.is_zero()).unwrap(), r))
        .collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains_key(c)).collect();
    let basis: Vec<V> = free
        .iter()
        .map(|&f| {
            let mut v = zeros(cols);
            v[f] = Scalar::one();
            for (&p, &r) in &pivots {
                v[p] = -red[r][f].clone();
            }
            v
        })
        .collect();
    oracle_rref(basis, cols)
}

/// Derivations of `op`, solved from the matrix of the linear map `D ↦ residuals`
/// whose columns are obtained by evaluating on unit matrices. Flattened `r * n + c`.
pub fn oracle_derivation_space(a: &Algebra, op: &str, commuting: bool) -> Vec<V> {
    let n = a.dim;
    let t = Table::of(a, op).unwrap();
    let alpha = &a.maps["alpha"];
    let e = |i: usize| {
        let mut v = zeros(n);
        v[i] = Scalar::one();
        v
    };
    let columns: Vec<V> = (0..n * n)
        .map(|p| {
            let mut d = Matrix::zeros(n, n);
            d.set(p / n, p % n, Scalar::one());
            let mut col = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let lhs = mat_apply(&d, &t.mul(&e(i), &e(j)));
                    let r1 = t.mul(&mat_apply(&d, &e(i)), &e(j));
                    let r2 = t.mul(&e(i), &mat_apply(&d, &e(j)));
                    col.extend(lin(&[(1, &lhs), (-1, &r1), (-1, &r2)]));
                }
            }
            if commuting {
                for i in 0..n {
                    let ad = mat_apply(alpha, &mat_apply(&d, &e(i)));
                    let da = mat_apply(&d, &mat_apply(alpha, &e(i)));
                    col.extend(lin(&[(1, &ad), (-1, &da)]));
                }
            }
            col
        })
        .collect();
    let rows: Vec<V> = (0..columns[0].len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    oracle_nullspace(rows, n * n)
}

pub fn table(n: usize, entries: &[(usize, usize, usize, i64)]) -> hompoisson::BilinearMap {
    let mut b = hompoisson::BilinearMap::zero(n);
    for &(i, j, k, c) in entries {
        b.set(i, j, k, Scalar::from_integer(c.into()));
    }
    b
}

pub fn mat(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_integer(x.into())).collect()).collect())
        .unwrap()
}

pub fn vq(xs: &[i64]) -> V {
    xs.iter().map(|&x| Scalar::from_integer(x.into())).collect()
}

pub fn inst(id: &str, params: &str) -> Algebra {
    let b = hompoisson::scalar::parse_binding(params).unwrap();
    hompoisson::catalog::instantiate(id, &b).unwrap()
}

pub fn cfg() -> hompoisson::CheckConfig {
    hompoisson::CheckConfig::default()
}
