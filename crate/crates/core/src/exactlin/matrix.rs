use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Scalar, Subspace, Vector};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: alloc::vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from row vectors. Every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vector]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r.iter().cloned());
        }
        Matrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged column");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let rows: Vec<Vector> = rows.iter().map(|r| super::int_vector(r.as_ref())).collect();
        Self::from_rows(cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| c * x).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).fold(Scalar::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// `trace(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &Matrix) -> Scalar {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut acc = Scalar::zero();
        for p in 0..self.rows {
            for q in 0..self.cols {
                let a = &self[(p, q)];
                let b = &other[(q, p)];
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
        }
        acc
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                m[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let r = rref(&self.hstack(&Matrix::identity(n)));
        if r.pivots.iter().copied().take(n).ne(0..n) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r.matrix[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Determinant by Gaussian elimination (exact over Q).
    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &pivot;
                for c in col..n {
                    let delta = &factor * &a[(col, c)];
                    a[(r, c)] -= delta;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Gauss-Jordan elimination. The result is the unique RREF of `m`.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a[(row, col)].recip();
        for c in col..a.cols {
            let v = &a[(row, c)] * &inv;
            a[(row, c)] = v;
        }
        for r in 0..a.rows {
            if r == row || a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone();
            for c in col..a.cols {
                if a[(row, c)].is_zero() {
                    continue;
                }
                let delta = &factor * &a[(row, c)];
                a[(r, c)] -= delta;
            }
        }
        pivots.push(col);
        row += 1;
    }
    let rank = pivots.len();
    Rref {
        matrix: a,
        pivots,
        rank,
    }
}

/// Null space of `m` (vectors `v` with `m v = 0`) in canonical form.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let Rref { matrix, pivots, .. } = rref(m);
    let n = m.cols();
    let mut is_pivot = alloc::vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vector> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = super::unit_vector(n, f);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&matrix[(r, f)];
            }
            v
        })
        .collect();
    Subspace::span(n, &vectors)
}

/// A consistent affine system's solution set: `particular + homogeneous`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    /// The solution with every free variable set to zero.
    pub particular: Vector,
    pub homogeneous: Subspace,
}

/// Solves `a x = b`, or returns `None` when the system is inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Option<AffineSolution> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let augmented = a.hstack(&Matrix::from_columns(a.rows(), &[b.to_vec()]));
    let Rref { matrix, pivots, .. } = rref(&augmented);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut particular = super::zero_vector(n);
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = matrix[(r, n)].clone();
    }
    Some(AffineSolution {
        particular,
        homogeneous: kernel_basis(a),
    })
}
