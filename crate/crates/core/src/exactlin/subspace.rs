use alloc::vec::Vec;

use num_traits::Zero;

use super::{kernel_basis, rref, Matrix, Scalar, Vector};
use crate::error::{Error, Result};

/// Subspace of `Q^n` stored as its reduced row echelon basis.
///
/// Two subspaces are equal as sets exactly when they compare equal, since
/// the RREF basis of a row space is unique.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the standard basis vectors listed in `indices`.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vectors: Vec<Vector> = indices
            .into_iter()
            .map(|i| super::unit_vector(ambient_dim, i))
            .collect();
        Self::span(ambient_dim, &vectors)
    }

    /// Canonical span of arbitrary (possibly dependent) vectors.
    pub fn span<V: AsRef<[Scalar]>>(ambient_dim: usize, vectors: &[V]) -> Self {
        let rows: Vec<Vector> = vectors.iter().map(|v| v.as_ref().to_vec()).collect();
        Self::from_row_space(&Matrix::from_rows(ambient_dim, &rows))
    }

    pub fn from_row_space(m: &Matrix) -> Self {
        let r = rref(m);
        let rows: Vec<Vector> = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: Matrix::from_rows(m.cols(), &rows),
            pivots: r.pivots,
        }
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Self::from_row_space(&m.transpose())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `n x dim` matrix whose columns are the basis vectors.
    pub fn embedding(&self) -> Matrix {
        self.basis.transpose()
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }

    /// `v` minus its component along the basis, eliminating pivot coordinates.
    /// Zero exactly when `v` lies in the subspace.
    pub fn residual(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis_vectors().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &c * b;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(super::is_zero_vector(&self.residual(v)))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Linear combination `sum_i coords[i] * basis_i`.
    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        assert_eq!(coords.len(), self.dim());
        let mut v = super::zero_vector(self.ambient_dim);
        for (c, row) in coords.iter().zip(self.basis_vectors()) {
            super::axpy(&mut v, c, row);
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        Ok(Self::from_row_space(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via the kernel of `[U^T | -V^T]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let stacked = self.embedding().hstack(&(-&other.embedding()));
        let kernel = kernel_basis(&stacked);
        let k = self.dim();
        let vectors: Vec<Vector> = kernel
            .basis_vectors()
            .map(|sol| self.combine(&sol[..k]))
            .collect();
        Ok(Self::span(self.ambient_dim, &vectors))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_len(other.ambient_dim)?;
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image of the subspace under the column-convention matrix `m`.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        self.check_len(m.cols())?;
        let vectors: Vec<Vector> = self.basis_vectors().map(|v| m.mul_vec(v)).collect();
        Ok(Self::span(m.rows(), &vectors))
    }
}
