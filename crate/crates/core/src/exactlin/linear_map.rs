use num_bigint::BigInt;

use super::{Matrix, Scalar, Subspace, Vector};
use crate::error::{Error, Result};

/// Endomorphism of `Q^n`; column `j` is the image of the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn zero(n: usize) -> Self {
        LinearMap {
            matrix: Matrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            matrix: &self.matrix * &other.matrix,
        }
    }

    pub fn negate(&self) -> LinearMap {
        LinearMap {
            matrix: -&self.matrix,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn image_of(&self, s: &Subspace) -> Result<Subspace> {
        s.image(&self.matrix)
    }

    /// Smallest `k` with `self^k = 0`, if any. Bounded by the dimension.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let n = self.dim();
        if n == 0 || self.is_zero() {
            return Some(if n == 0 { 0 } else { 1 });
        }
        let mut power = self.matrix.clone();
        for k in 2..=n {
            power = &power * &self.matrix;
            if power.is_zero() {
                return Some(k);
            }
        }
        None
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_index().is_some()
    }

    /// `sum_{i<k} d^i / i!` for nilpotent `d`; the series is finite and exact.
    pub fn exp_nilpotent(&self) -> Result<LinearMap> {
        let n = self.dim();
        let k = self.nilpotency_index().ok_or(Error::NotNilpotent(n))?;
        let mut result = Matrix::identity(n);
        let mut term = Matrix::identity(n);
        for i in 1..k {
            let inv_i = Scalar::new(BigInt::from(1), BigInt::from(i));
            term = (&term * &self.matrix).scale(&inv_i);
            result = &result + &term;
        }
        Ok(LinearMap { matrix: result })
    }
}
