//! Left Leibniz algebras given by structure constants.
//!
//! An algebra on the ordered basis `b_0, ..., b_{n-1}` is fixed by the
//! constants `c[i][j][k]` with `b_i b_j = sum_k c[i][j][k] b_k`. The left
//! Leibniz identity is `a(bc) = (ab)c + b(ac)`, which says every left
//! multiplication `d_a(x) = ax` is a derivation.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::Zero;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactlin::{self, format_scalar, LinearMap, Matrix, Scalar, Subspace, Vector};

/// Dense `dim x dim x dim` tensor of structure constants.
///
/// No antisymmetry is assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureTable {
    dim: usize,
    c: Vec<Scalar>,
}

impl StructureTable {
    pub fn zeros(dim: usize) -> Self {
        StructureTable {
            dim,
            c: alloc::vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        (i * self.dim + j) * self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        assert!(k < self.dim, "basis index out of range");
        &self.c[self.offset(i, j) + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        assert!(k < self.dim, "basis index out of range");
        let o = self.offset(i, j);
        self.c[o + k] = value;
    }

    /// Coordinates of `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j);
        &self.c[o..o + self.dim]
    }

    pub fn set_basis_product(&mut self, i: usize, j: usize, value: &[Scalar]) {
        assert_eq!(value.len(), self.dim);
        let o = self.offset(i, j);
        self.c[o..o + self.dim].clone_from_slice(value);
    }

    /// Nonzero entries `(i, j, k, c)` in lexicographic index order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let n = self.dim;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }
}

/// One basis triple on which the left Leibniz identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// `a(bc)`
    pub lhs: Vector,
    /// `(ab)c + b(ac)`
    pub rhs: Vector,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Finite-dimensional left Leibniz algebra over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra {
    labels: Vec<String>,
    table: StructureTable,
}

/// Quotient `A / I` on the non-pivot coordinates of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: LeibnizAlgebra,
    /// `q x n`, sends `A` onto the quotient coordinates.
    pub projection: Matrix,
    /// `n x q`, sends quotient coordinate `t` to the `t`-th non-pivot basis vector.
    pub section: Matrix,
}

impl Quotient {
    /// Preimage in `A` of a subspace of the quotient.
    pub fn preimage(&self, w: &Subspace, ideal: &Subspace) -> Result<Subspace> {
        w.image(&self.section)?.sum(ideal)
    }
}

/// Subalgebra `U` of `A` presented on its own canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    pub algebra: LeibnizAlgebra,
    /// `n x dim U`, columns are the basis of `U` in `A`'s coordinates.
    pub embedding: Matrix,
}

impl Subalgebra {
    /// Pushes a subspace of the subalgebra forward into the ambient algebra.
    pub fn push_forward(&self, w: &Subspace) -> Result<Subspace> {
        w.image(&self.embedding)
    }
}

impl LeibnizAlgebra {
    /// Builds an algebra and checks the left Leibniz identity on all basis triples.
    pub fn new(labels: Vec<String>, table: StructureTable) -> Result<Self> {
        let algebra = Self::new_unchecked(labels, table)?;
        let report = algebra.check_left_leibniz();
        if let Some(v) = report.first() {
            return Err(Error::IdentityViolated {
                count: report.len(),
                a: v.a,
                b: v.b,
                c: v.c,
            });
        }
        Ok(algebra)
    }

    /// Shape checks only; used where violations must be reported rather than rejected.
    pub fn new_unchecked(labels: Vec<String>, table: StructureTable) -> Result<Self> {
        if labels.len() != table.dim() {
            return Err(Error::DimensionMismatch {
                expected: table.dim(),
                found: labels.len(),
            });
        }
        Ok(LeibnizAlgebra { labels, table })
    }

    /// Labels `b0, b1, ...`.
    pub fn default_labels(dim: usize) -> Vec<String> {
        (0..dim).map(|i| format!("b{i}")).collect()
    }

    pub fn abelian(dim: usize) -> Self {
        LeibnizAlgebra {
            labels: Self::default_labels(dim),
            table: StructureTable::zeros(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_subspace(&self, u: &Subspace) -> Result<()> {
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `b_i * v` without length checks.
    fn left_basis_times(&self, i: usize, v: &[Scalar]) -> Vector {
        let mut out = exactlin::zero_vector(self.dim());
        for (k, x) in v.iter().enumerate() {
            exactlin::axpy(&mut out, x, self.table.basis_product(i, k));
        }
        out
    }

    /// `v * b_j` without length checks.
    fn right_basis_times(&self, v: &[Scalar], j: usize) -> Vector {
        let mut out = exactlin::zero_vector(self.dim());
        for (k, x) in v.iter().enumerate() {
            exactlin::axpy(&mut out, x, self.table.basis_product(k, j));
        }
        out
    }

    fn product_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = exactlin::zero_vector(self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                exactlin::axpy(&mut out, &(xi * yj), self.table.basis_product(i, j));
            }
        }
        out
    }

    /// Bilinear extension of the table: `(xy)_k = sum_{i,j} x_i y_j c[i][j][k]`.
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.product_unchecked(x, y))
    }

    /// Every basis triple violating `a(bc) = (ab)c + b(ac)`, in lexicographic order.
    pub fn check_left_leibniz(&self) -> ViolationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let ab = self.table.basis_product(a, b);
                for c in 0..n {
                    let lhs = self.left_basis_times(a, self.table.basis_product(b, c));
                    let ab_c = self.right_basis_times(ab, c);
                    let b_ac = self.left_basis_times(b, self.table.basis_product(a, c));
                    let rhs = exactlin::add_vectors(&ab_c, &b_ac);
                    if lhs != rhs {
                        violations.push(Violation { a, b, c, lhs, rhs });
                    }
                }
            }
        }
        ViolationReport { violations }
    }

    /// Antisymmetry of the table. Together with the Leibniz identity this is Jacobi.
    pub fn is_lie(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i..n).all(|j| {
                let ij = self.table.basis_product(i, j);
                let ji = self.table.basis_product(j, i);
                ij.iter().zip(ji).all(|(x, y)| (x + y).is_zero())
            })
        })
    }

    /// The operator `d_a(x) = ax` as a column-convention matrix.
    pub fn left_multiplication(&self, a: &[Scalar]) -> Result<LinearMap> {
        self.check_vector(a)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.table.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        m[(k, j)] += ai * c;
                    }
                }
            }
        }
        LinearMap::new(m)
    }

    /// Left multiplication by the `i`-th basis vector.
    pub fn basis_left_multiplication(&self, i: usize) -> LinearMap {
        self.left_multiplication(&exactlin::unit_vector(self.dim(), i))
            .expect("unit vector has the algebra's dimension")
    }

    /// Canonical span of `{u v : u in basis(U), v in basis(V)}`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let mut products = Vec::with_capacity(u.dim() * v.dim());
        for x in u.basis_vectors() {
            for y in v.basis_vectors() {
                let p = self.product_unchecked(x, y);
                if !exactlin::is_zero_vector(&p) {
                    products.push(p);
                }
            }
        }
        Ok(Subspace::span(self.dim(), &products))
    }

    fn products_stay_in(&self, left: &Subspace, right: &Subspace, target: &Subspace) -> Result<bool> {
        self.check_subspace(left)?;
        self.check_subspace(right)?;
        self.check_subspace(target)?;
        for x in left.basis_vectors() {
            for y in right.basis_vectors() {
                if !target.contains(&self.product_unchecked(x, y))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> Result<bool> {
        self.products_stay_in(u, u, u)
    }

    pub fn is_left_ideal(&self, u: &Subspace) -> Result<bool> {
        self.products_stay_in(&self.full_space(), u, u)
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        let full = self.full_space();
        Ok(self.products_stay_in(&full, u, u)? && self.products_stay_in(u, &full, u)?)
    }

    /// Quotient by an ideal, on the non-pivot coordinates of `ideal` in index order.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let n = self.dim();
        let mut is_pivot = alloc::vec![false; n];
        for &p in ideal.pivots() {
            is_pivot[p] = true;
        }
        let kept: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
        let q = kept.len();

        let mut projection = Matrix::zeros(q, n);
        for j in 0..n {
            let r = ideal.residual(&exactlin::unit_vector(n, j));
            for (t, &i) in kept.iter().enumerate() {
                projection[(t, j)] = r[i].clone();
            }
        }
        let mut section = Matrix::zeros(n, q);
        for (t, &i) in kept.iter().enumerate() {
            section[(i, t)] = Scalar::from_integer(1.into());
        }

        let mut table = StructureTable::zeros(q);
        for (s, &i) in kept.iter().enumerate() {
            for (t, &j) in kept.iter().enumerate() {
                let image = projection.mul_vec(self.table.basis_product(i, j));
                table.set_basis_product(s, t, &image);
            }
        }
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(Quotient {
            algebra: LeibnizAlgebra { labels, table },
            projection,
            section,
        })
    }

    /// Structure constants of a subalgebra on its canonical basis.
    pub fn restrict(&self, u: &Subspace) -> Result<Subalgebra> {
        if !self.is_subalgebra(u)? {
            return Err(Error::NotASubalgebra);
        }
        let m = u.dim();
        let mut table = StructureTable::zeros(m);
        let basis: Vec<&[Scalar]> = u.basis_vectors().collect();
        for s in 0..m {
            for t in 0..m {
                let p = self.product_unchecked(basis[s], basis[t]);
                let coords = u
                    .coordinates(&p)?
                    .ok_or(Error::Internal("subalgebra product left the subspace"))?;
                table.set_basis_product(s, t, &coords);
            }
        }
        let labels = basis
            .iter()
            .enumerate()
            .map(|(s, v)| match single_coordinate(v) {
                Some(i) => self.labels[i].clone(),
                None => format!("u{s}"),
            })
            .collect();
        Ok(Subalgebra {
            algebra: LeibnizAlgebra { labels, table },
            embedding: u.embedding(),
        })
    }

    /// The same algebra on the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<LeibnizAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.cols(),
            });
        }
        let inv = p.inverse().ok_or(Error::NoSolution("change of basis is singular"))?;
        let columns = p.columns();
        let mut table = StructureTable::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let prod = self.product_unchecked(&columns[i], &columns[j]);
                table.set_basis_product(i, j, &inv.mul_vec(&prod));
            }
        }
        Ok(LeibnizAlgebra {
            labels: (0..n).map(|i| format!("x{i}")).collect(),
            table,
        })
    }

    /// Deterministic text form of the algebra, used for digests.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "leibniz-table v1");
        let _ = writeln!(s, "dim {}", self.dim());
        for l in &self.labels {
            let _ = writeln!(s, "label {l}");
        }
        for (i, j, k, c) in self.table.nonzero_entries() {
            let _ = writeln!(s, "{i} {j} {k} {}", format_scalar(c));
        }
        s
    }

    /// Lowercase hex SHA-256 of [`Self::canonical_text`].
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(self.canonical_text().as_bytes());
        let mut s = String::with_capacity(64);
        for byte in hash.iter() {
            let _ = write!(s, "{byte:02x}");
        }
        s
    }
}

fn single_coordinate(v: &[Scalar]) -> Option<usize> {
    let mut nonzero = v.iter().enumerate().filter(|(_, x)| !x.is_zero());
    match (nonzero.next(), nonzero.next()) {
        (Some((i, x)), None) if *x == Scalar::from_integer(1.into()) => Some(i),
        _ => None,
    }
}
