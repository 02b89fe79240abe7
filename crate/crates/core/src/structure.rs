//! Leibniz kernel, derived series, Killing form and the soluble radical.

use alloc::vec::Vec;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{self, kernel_basis, Matrix, Scalar, Subspace};

/// `U, UU, (UU)(UU), ...` truncated once a term repeats or reaches zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSeries {
    pub terms: Vec<Subspace>,
}

impl DerivedSeries {
    pub fn last(&self) -> &Subspace {
        self.terms.last().expect("series always has a first term")
    }

    pub fn reaches_zero(&self) -> bool {
        self.last().is_zero()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn evaluate(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    pub fn determinant(&self) -> Scalar {
        self.gram.determinant()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    /// `{x : B(w, x) = 0 for all w in W}`.
    pub fn orthogonal_complement(&self, w: &Subspace) -> Subspace {
        if w.is_zero() {
            return Subspace::full(self.dim());
        }
        kernel_basis(&(w.basis() * &self.gram))
    }
}

/// Span of all squares, computed as `span{b_i b_j + b_j b_i : i <= j}`.
pub fn leibniz_kernel(a: &LeibnizAlgebra) -> Subspace {
    let n = a.dim();
    let t = a.table();
    let mut vectors = Vec::new();
    for i in 0..n {
        for j in i..n {
            let v = exactlin::add_vectors(t.basis_product(i, j), t.basis_product(j, i));
            if !exactlin::is_zero_vector(&v) {
                vectors.push(v);
            }
        }
    }
    Subspace::span(n, &vectors)
}

pub fn derived_series(a: &LeibnizAlgebra, u: &Subspace) -> Result<DerivedSeries> {
    if !a.is_subalgebra(u)? {
        return Err(Error::NotASubalgebra);
    }
    let mut terms = alloc::vec![u.clone()];
    // dimensions strictly drop until the series stabilizes, so dim + 1 steps suffice
    for _ in 0..=a.dim() {
        let last = terms.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = a.subspace_product(last, last)?;
        let stable = &next == last;
        terms.push(next);
        if stable {
            break;
        }
    }
    Ok(DerivedSeries { terms })
}

pub fn is_soluble(a: &LeibnizAlgebra, u: &Subspace) -> Result<bool> {
    Ok(derived_series(a, u)?.reaches_zero())
}

/// `kappa(b_i, b_j) = trace(ad b_i ∘ ad b_j)` for a Lie algebra.
pub fn killing_form(a: &LeibnizAlgebra) -> Result<BilinearForm> {
    if !a.is_lie() {
        return Err(Error::NotLie);
    }
    let n = a.dim();
    let ad: Vec<Matrix> = (0..n)
        .map(|i| a.basis_left_multiplication(i).into_matrix())
        .collect();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = ad[i].trace_of_product(&ad[j]);
            gram[(j, i)] = v.clone();
            gram[(i, j)] = v;
        }
    }
    Ok(BilinearForm { gram })
}

/// Largest soluble ideal.
///
/// Passes to the Lie algebra `Q = A / Leib(A)`, takes `rad(Q) = (QQ)^⊥`
/// under the Killing form of `Q`, and pulls it back to `A`.
pub fn soluble_radical(a: &LeibnizAlgebra) -> Result<Subspace> {
    let kernel = leibniz_kernel(a);
    let q = a.quotient(&kernel)?;
    if q.algebra.dim() == 0 {
        return Ok(kernel);
    }
    let kappa = killing_form(&q.algebra)?;
    let full = q.algebra.full_space();
    let derived = q.algebra.subspace_product(&full, &full)?;
    let rad_q = kappa.orthogonal_complement(&derived);
    q.preimage(&rad_q, &kernel)
}

/// Lie with nondegenerate Killing form. The zero algebra counts as semisimple.
pub fn is_semisimple(a: &LeibnizAlgebra) -> bool {
    if !a.is_lie() {
        return false;
    }
    killing_form(a).is_ok_and(|k| k.is_nondegenerate())
}
