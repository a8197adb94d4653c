//! Concrete presentations: algebras, representations, forms, comultiplications.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{axpy, basis_vector, zero_vector, Matrix, Vector};
use crate::scalar::Scalar;
use crate::tensor::BilinearMap;

pub const DOT: &str = "dot";
pub const BRACKET: &str = "bracket";
pub const STAR: &str = "star";
pub const ALPHA: &str = "alpha";

pub fn default_basis(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// A finite-dimensional vector space with named bilinear operations and linear maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub dim: usize,
    pub basis: Vec<String>,
    pub ops: BTreeMap<String, BilinearMap>,
    pub maps: BTreeMap<String, Matrix>,
}

impl Algebra {
    pub fn new(dim: usize) -> Self {
        Algebra { dim, basis: default_basis("e", dim), ops: BTreeMap::new(), maps: BTreeMap::new() }
    }

    pub fn with_op(mut self, name: &str, op: BilinearMap) -> Self {
        assert_eq!(op.dim(), self.dim);
        self.ops.insert(name.to_string(), op);
        self
    }

    pub fn with_map(mut self, name: &str, m: Matrix) -> Self {
        self.maps.insert(name.to_string(), m);
        self
    }

    pub fn with_alpha(self, m: Matrix) -> Self {
        self.with_map(ALPHA, m)
    }

    pub fn op(&self, name: &str) -> Result<&BilinearMap> {
        self.ops.get(name).ok_or_else(|| Error::MissingOp(name.to_string()))
    }

    pub fn map(&self, name: &str) -> Result<&Matrix> {
        self.maps.get(name).ok_or_else(|| Error::MissingMap(name.to_string()))
    }

    pub fn alpha(&self) -> Result<&Matrix> {
        self.map(ALPHA)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        basis_vector(self.dim, i)
    }

    /// Checks that the twist and a named map are square on this space.
    pub fn square_map(&self, name: &str) -> Result<&Matrix> {
        let m = self.map(name)?;
        if m.rows != self.dim || m.cols != self.dim {
            return Err(Error::Dimension(format!(
                "map `{name}` is {}x{} on a {}-dimensional algebra",
                m.rows, m.cols, self.dim
            )));
        }
        Ok(m)
    }

    /// Keeps only the listed operations and the twist.
    pub fn restrict(&self, ops: &[&str]) -> Result<Algebra> {
        let mut out = Algebra { dim: self.dim, basis: self.basis.clone(), ops: BTreeMap::new(), maps: BTreeMap::new() };
        for name in ops {
            out.ops.insert(name.to_string(), self.op(name)?.clone());
        }
        out.maps.insert(ALPHA.into(), self.alpha()?.clone());
        Ok(out)
    }
}

/// A module over an algebra: named families of action matrices indexed by the algebra basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub algebra_dim: usize,
    pub module_dim: usize,
    pub actions: BTreeMap<String, Vec<Matrix>>,
    pub beta: Matrix,
}

impl Representation {
    pub fn new(algebra_dim: usize, beta: Matrix) -> Self {
        assert!(beta.is_square());
        Representation { algebra_dim, module_dim: beta.rows, actions: BTreeMap::new(), beta }
    }

    pub fn with_action(mut self, name: &str, mats: Vec<Matrix>) -> Self {
        assert_eq!(mats.len(), self.algebra_dim);
        for m in &mats {
            assert_eq!((m.rows, m.cols), (self.module_dim, self.module_dim));
        }
        self.actions.insert(name.to_string(), mats);
        self
    }

    /// Action family built from a linear map `x ↦ matrix`.
    pub fn with_action_fn(self, name: &str, f: impl Fn(&[Scalar]) -> Matrix) -> Self {
        let n = self.algebra_dim;
        let mats = (0..n).map(|i| f(&basis_vector(n, i))).collect();
        self.with_action(name, mats)
    }

    pub fn action(&self, name: &str) -> Result<&[Matrix]> {
        self.actions
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::MissingAction(name.to_string()))
    }

    /// `sum_i x_i M_i` for the named action.
    pub fn at(&self, name: &str, x: &[Scalar]) -> Result<Matrix> {
        let mats = self.action(name)?;
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (xi, m) in x.iter().zip(mats) {
            axpy(&mut out.data, xi, &m.data);
        }
        Ok(out)
    }

    /// `act(x) v` without materialising the matrix.
    pub fn act(&self, name: &str, x: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        let mats = self.action(name)?;
        let mut out = zero_vector(self.module_dim);
        for (xi, m) in x.iter().zip(mats) {
            if !num_traits::Zero::is_zero(xi) {
                axpy(&mut out, xi, &m.apply(v));
            }
        }
        Ok(out)
    }

    pub fn check_shape(&self, a: &Algebra) -> Result<()> {
        if self.algebra_dim != a.dim {
            return Err(Error::Dimension(format!(
                "representation indexed by {} basis elements, algebra has dimension {}",
                self.algebra_dim, a.dim
            )));
        }
        Ok(())
    }
}

/// A coproduct `Δ(e_i) = sum c(i,j,k) e_j ⊗ e_k`; images are stored in `A ⊗ A`
/// with lexicographic index `j * dim + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comultiplication {
    pub dim: usize,
    pub images: Vec<Vector>,
}

impl Comultiplication {
    pub fn zero(dim: usize) -> Self {
        Comultiplication { dim, images: vec![zero_vector(dim * dim); dim] }
    }

    pub fn from_bilinear(b: &BilinearMap) -> Self {
        let n = b.dim();
        let mut out = Comultiplication::zero(n);
        for (i, j, k, c) in b.entries() {
            out.images[i][j * n + k] = c;
        }
        out
    }

    /// The entries read as structure constants `c(i,j,k)`.
    pub fn to_bilinear(&self) -> BilinearMap {
        let n = self.dim;
        BilinearMap::from_fn(n, |i, j| (0..n).map(|k| self.images[i][j * n + k].clone()).collect())
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim * self.dim);
        for (xi, img) in x.iter().zip(&self.images) {
            axpy(&mut out, xi, img);
        }
        out
    }

    /// Dual product on `A*`: the `e_i*` coefficient of `e_j* ∘ e_k*` is `c(i,j,k)`.
    pub fn dual_product(&self) -> BilinearMap {
        let n = self.dim;
        BilinearMap::from_fn(n, |j, k| (0..n).map(|i| self.images[i][j * n + k].clone()).collect())
    }

    /// Coproduct dual to a product on `A*`.
    pub fn from_dual_product(p: &BilinearMap) -> Self {
        let n = p.dim();
        let mut out = Comultiplication::zero(n);
        for (j, k, i, c) in p.entries() {
            out.images[i][j * n + k] = c;
        }
        out
    }
}
