//! Bilinear maps stored as dense structure-constant tables.

use num_traits::Zero;

use crate::linalg::{axpy, zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

/// `e_i ∘ e_j = sum_k c(i,j,k) e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearMap {
    dim: usize,
    table: Vec<Vector>,
}

impl BilinearMap {
    pub fn zero(dim: usize) -> Self {
        BilinearMap { dim, table: vec![zero_vector(dim); dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim);
                table.push(v);
            }
        }
        BilinearMap { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[i * self.dim + j][k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        self.table[i * self.dim + j][k] = c;
    }

    /// `e_i ∘ e_j`.
    pub fn prod(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                axpy(&mut out, &(a * b), &self.table[i * self.dim + j]);
            }
        }
        out
    }

    /// Nonzero entries `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.prod(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// `g ∘ op`.
    pub fn post_compose(&self, g: &Matrix) -> BilinearMap {
        BilinearMap {
            dim: self.dim,
            table: self.table.iter().map(|v| g.apply(v)).collect(),
        }
    }

    /// `(x, y) ↦ y ∘ x`.
    pub fn opposite(&self) -> BilinearMap {
        BilinearMap::from_fn(self.dim, |i, j| self.prod(j, i).clone())
    }

    /// `(x, y) ↦ x ∘ y - y ∘ x`.
    pub fn commutator(&self) -> BilinearMap {
        BilinearMap::from_fn(self.dim, |i, j| crate::linalg::sub(self.prod(i, j), self.prod(j, i)))
    }

    pub fn scale(&self, k: &Scalar) -> BilinearMap {
        BilinearMap {
            dim: self.dim,
            table: self.table.iter().map(|v| crate::linalg::scale(k, v)).collect(),
        }
    }

    /// Left multiplication `y ↦ x ∘ y` as a matrix.
    pub fn left(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.eval(x, &crate::linalg::basis_vector(self.dim, j)))
            .collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Right multiplication `y ↦ y ∘ x` as a matrix.
    pub fn right(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.eval(&crate::linalg::basis_vector(self.dim, j), x))
            .collect();
        Matrix::from_columns(self.dim, &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::basis_vector;
    use crate::scalar::int;

    #[test]
    fn eval_is_bilinear_in_basis() {
        let mut m = BilinearMap::zero(2);
        m.set(0, 1, 1, int(3));
        m.set(1, 0, 0, int(-1));
        let x = vec![int(2), int(1)];
        let y = vec![int(1), int(5)];
        // 2*5*3 e2 + 1*1*(-1) e1
        assert_eq!(m.eval(&x, &y), vec![int(-1), int(30)]);
        assert_eq!(m.entries().len(), 2);
        let c = m.commutator();
        assert_eq!(c.prod(0, 1), &vec![int(1), int(3)]);
        assert_eq!(c.prod(1, 0), &vec![int(-1), int(-3)]);
        assert_eq!(m.left(&basis_vector(2, 0)).column(1), vec![int(0), int(3)]);
        assert_eq!(m.right(&basis_vector(2, 0)).column(1), vec![int(-1), int(0)]);
    }
}
