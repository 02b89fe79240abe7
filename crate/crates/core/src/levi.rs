//! Levi decomposition: a semisimple subalgebra complementing the soluble radical.
//!
//! For Lie algebras the complement is built by induction on the derived
//! length of the radical. When the radical `R` is abelian, a lift of the
//! quotient `A/R` is corrected by elements of `R` so that it closes under
//! the bracket; that linear system is consistent because the second
//! cohomology of a semisimple algebra vanishes. Otherwise we split `A/(RR)`
//! first and recurse on the preimage of that complement.
//!
//! A Leibniz algebra `A` is handled by splitting `A / Leib(A)` with the Lie
//! routine, taking the preimage `S*` of the complement, and then splitting
//! `S*` over `Leib(A)` as a module over the semisimple quotient `S*/Leib(A)`.
//! Complete reducibility guarantees an equivariant projection onto the kernel,
//! and its kernel is the complement.

use alloc::vec::Vec;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{self, kernel_basis, solve_affine, Matrix, Scalar, Subspace, Vector};
use crate::structure::{is_semisimple, leibniz_kernel, soluble_radical};

/// Left module over a Lie algebra: one matrix per basis element of the acting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    space_dim: usize,
    rho: Vec<Matrix>,
}

impl ModuleAction {
    pub fn new(space_dim: usize, rho: Vec<Matrix>) -> Result<Self> {
        for m in &rho {
            if m.rows() != space_dim || m.cols() != space_dim {
                return Err(Error::DimensionMismatch {
                    expected: space_dim,
                    found: m.cols(),
                });
            }
        }
        Ok(ModuleAction { space_dim, rho })
    }

    /// Every generator acts as zero.
    pub fn trivial(acting_dim: usize, space_dim: usize) -> Self {
        ModuleAction {
            space_dim,
            rho: alloc::vec![Matrix::zeros(space_dim, space_dim); acting_dim],
        }
    }

    pub fn acting_dim(&self) -> usize {
        self.rho.len()
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.rho
    }

    /// Action of an arbitrary element of the acting algebra.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.acting_dim());
        let mut m = Matrix::zeros(self.space_dim, self.space_dim);
        for (c, r) in x.iter().zip(&self.rho) {
            m = &m + &r.scale(c);
        }
        m
    }

    /// Checks `rho([x, y]) = rho(x) rho(y) - rho(y) rho(x)` on basis pairs of `g`.
    pub fn check_module_law(&self, g: &LeibnizAlgebra) -> Result<()> {
        if g.dim() != self.acting_dim() {
            return Err(Error::ActingDimMismatch(g.dim(), self.acting_dim()));
        }
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let bracket = self.act(g.table().basis_product(i, j));
                let commutator = &(&self.rho[i] * &self.rho[j]) - &(&self.rho[j] * &self.rho[i]);
                if bracket != commutator {
                    return Err(Error::ModuleLawViolated(i, j));
                }
            }
        }
        Ok(())
    }

    /// Matrices of the action restricted to an invariant subspace, in its canonical basis.
    pub fn restricted_to(&self, k: &Subspace) -> Result<Vec<Matrix>> {
        if k.ambient_dim() != self.space_dim {
            return Err(Error::DimensionMismatch {
                expected: self.space_dim,
                found: k.ambient_dim(),
            });
        }
        self.rho
            .iter()
            .map(|r| {
                let columns = k
                    .basis_vectors()
                    .map(|v| k.coordinates(&r.mul_vec(v))?.ok_or(Error::NotInvariant))
                    .collect::<Result<Vec<Vector>>>()?;
                Ok(Matrix::from_columns(k.dim(), &columns))
            })
            .collect()
    }

    pub fn is_invariant(&self, k: &Subspace) -> Result<bool> {
        match self.restricted_to(k) {
            Ok(_) => Ok(true),
            Err(Error::NotInvariant) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

/// Outcome of [`verify_levi`], one flag per defining condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeviWitnesses {
    pub sum_is_full: bool,
    pub intersection_is_zero: bool,
    pub closed_under_product: bool,
    pub semisimple: bool,
}

impl LeviWitnesses {
    pub fn all_pass(&self) -> bool {
        self.sum_is_full && self.intersection_is_zero && self.closed_under_product && self.semisimple
    }

    pub fn checks(&self) -> [(&'static str, bool); 4] {
        [
            ("sum_is_full", self.sum_is_full),
            ("intersection_is_zero", self.intersection_is_zero),
            ("closed_under_product", self.closed_under_product),
            ("semisimple", self.semisimple),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDecomposition {
    pub semisimple_part: Subspace,
    pub radical: Subspace,
    pub witnesses: LeviWitnesses,
}

/// Recomputes the radical and checks `S + R = A`, `S ∩ R = 0`, `SS ⊆ S` and
/// semisimplicity of the table restricted to `S`.
pub fn verify_levi(a: &LeibnizAlgebra, s: &Subspace) -> Result<LeviWitnesses> {
    let r = soluble_radical(a)?;
    let sum_is_full = s.sum(&r)?.is_full();
    let intersection_is_zero = s.intersection(&r)?.is_zero();
    let closed_under_product = a.is_subalgebra(s)?;
    let semisimple = closed_under_product && is_semisimple(&a.restrict(s)?.algebra);
    Ok(LeviWitnesses {
        sum_is_full,
        intersection_is_zero,
        closed_under_product,
        semisimple,
    })
}

/// Semisimple complement to the radical of a Lie algebra.
pub fn lie_levi(a: &LeibnizAlgebra) -> Result<Subspace> {
    if !a.is_lie() {
        return Err(Error::NotLie);
    }
    let r = soluble_radical(a)?;
    if r.is_zero() {
        return Ok(a.full_space());
    }
    if r.is_full() {
        return Ok(Subspace::zero(a.dim()));
    }
    let rr = a.subspace_product(&r, &r)?;
    if rr.is_zero() {
        return abelian_radical_complement(a, &r);
    }
    let q = a.quotient(&rr)?;
    let top = lie_levi(&q.algebra)?;
    // the preimage of `top` has radical RR, which has smaller derived length than R
    let preimage = q.preimage(&top, &rr)?;
    let sub = a.restrict(&preimage)?;
    let s = lie_levi(&sub.algebra)?;
    sub.push_forward(&s)
}

/// Complement when the radical `r` is abelian.
///
/// Lifts `u_i` of the quotient basis are corrected to `u_i + a_i`, `a_i in R`, so
/// that `(u_i + a_i)(u_j + a_j) = sum_k c_ij^k (u_k + a_k)`. Since `RR = 0` the
/// system is linear in the `a_i`:
/// `u_i a_j + a_i u_j - sum_k c_ij^k a_k = sum_k c_ij^k u_k - u_i u_j`.
fn abelian_radical_complement(a: &LeibnizAlgebra, r: &Subspace) -> Result<Subspace> {
    let n = a.dim();
    let q = a.quotient(r)?;
    let qd = q.algebra.dim();
    let m = r.dim();
    let lifts = q.section.columns();
    let radical: Vec<&[Scalar]> = r.basis_vectors().collect();

    // u_i r_p and r_p u_i
    let mut left = Vec::with_capacity(qd * m);
    let mut right = Vec::with_capacity(qd * m);
    for u in &lifts {
        for rp in &radical {
            left.push(a.product(u, rp)?);
            right.push(a.product(rp, u)?);
        }
    }

    let unknowns = qd * m;
    let mut system = Matrix::zeros(qd * qd * n, unknowns);
    let mut rhs = Vec::with_capacity(qd * qd * n);
    for i in 0..qd {
        for j in 0..qd {
            let row0 = (i * qd + j) * n;
            let c = q.algebra.table().basis_product(i, j);
            for p in 0..m {
                for e in 0..n {
                    system[(row0 + e, j * m + p)] += &left[i * m + p][e];
                    system[(row0 + e, i * m + p)] += &right[j * m + p][e];
                }
                for (k, ck) in c.iter().enumerate() {
                    for e in 0..n {
                        let delta = ck * &radical[p][e];
                        system[(row0 + e, k * m + p)] -= delta;
                    }
                }
            }
            let mut target = exactlin::zero_vector(n);
            for (k, ck) in c.iter().enumerate() {
                exactlin::axpy(&mut target, ck, &lifts[k]);
            }
            let uu = a.product(&lifts[i], &lifts[j])?;
            rhs.extend(exactlin::sub_vectors(&target, &uu));
        }
    }

    let solution = solve_affine(&system, &rhs)
        .ok_or(Error::NoSolution("Levi correction system is inconsistent"))?;
    let vectors: Vec<Vector> = (0..qd)
        .map(|i| {
            let coeffs = &solution.particular[i * m..(i + 1) * m];
            let mut v = lifts[i].clone();
            for (c, rp) in coeffs.iter().zip(&radical) {
                exactlin::axpy(&mut v, c, rp);
            }
            v
        })
        .collect();
    Ok(Subspace::span(n, &vectors))
}

/// Left action of `A / I` on `A` by left multiplication, for an ideal `I` with `IA = 0`.
pub fn quotient_action(a: &LeibnizAlgebra, ideal: &Subspace) -> Result<ModuleAction> {
    let q = a.quotient(ideal)?;
    if !a.subspace_product(ideal, &a.full_space())?.is_zero() {
        return Err(Error::NotReducedCase);
    }
    let rho = q
        .section
        .columns()
        .iter()
        .map(|u| Ok(a.left_multiplication(u)?.into_matrix()))
        .collect::<Result<Vec<_>>>()?;
    ModuleAction::new(a.dim(), rho)
}

/// `A` as a left module over the Lie algebra `A / Leib(A)`, when the radical is the kernel.
pub fn module_from_kernel(a: &LeibnizAlgebra) -> Result<ModuleAction> {
    let kernel = leibniz_kernel(a);
    if soluble_radical(a)? != kernel {
        return Err(Error::NotReducedCase);
    }
    quotient_action(a, &kernel)
}

/// Invariant complement of the submodule `k`.
///
/// Writes the projection as `pi = B X` with `B` the basis of `k` (so the image
/// lies in `k`) and solves `X B = I` (pi fixes `k`) together with
/// `X rho(x) = M_x X` (pi commutes with the action, `M_x` being `rho(x)`
/// restricted to `k`). The result is `ker pi = ker X`.
pub fn module_complement(act: &ModuleAction, k: &Subspace) -> Result<Subspace> {
    let restricted = act.restricted_to(k)?;
    let n = act.space_dim();
    let m = k.dim();
    if m == 0 {
        return Ok(Subspace::full(n));
    }
    let b = k.embedding();
    let var = |r: usize, c: usize| r * n + c;

    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for r in 0..m {
        for s in 0..m {
            let mut row = exactlin::zero_vector(m * n);
            for c in 0..n {
                row[var(r, c)] = b[(c, s)].clone();
            }
            rows.push(row);
            rhs.push(if r == s { exactlin::int(1) } else { exactlin::int(0) });
        }
    }
    for (rho, restricted) in act.maps().iter().zip(&restricted) {
        for r in 0..m {
            for c in 0..n {
                let mut row = exactlin::zero_vector(m * n);
                for p in 0..n {
                    row[var(r, p)] += &rho[(p, c)];
                }
                for q in 0..m {
                    row[var(q, c)] -= &restricted[(r, q)];
                }
                if !exactlin::is_zero_vector(&row) {
                    rows.push(row);
                    rhs.push(exactlin::int(0));
                }
            }
        }
    }

    let system = Matrix::from_rows(m * n, &rows);
    let solution = solve_affine(&system, &rhs)
        .ok_or(Error::NoSolution("no equivariant projection onto the submodule"))?;
    let x = Matrix::from_rows(n, &solution.particular.chunks(n).map(<[Scalar]>::to_vec).collect::<Vec<_>>());
    Ok(kernel_basis(&x))
}

/// Levi decomposition of a left Leibniz algebra, with all witnesses checked.
pub fn leibniz_levi(a: &LeibnizAlgebra) -> Result<LeviDecomposition> {
    let kernel = leibniz_kernel(a);
    let radical = soluble_radical(a)?;
    let semisimple_part = if radical.is_full() {
        Subspace::zero(a.dim())
    } else {
        let q = a.quotient(&kernel)?;
        let top = lie_levi(&q.algebra)?;
        let s_star = q.preimage(&top, &kernel)?;
        let sub = a.restrict(&s_star)?;
        let kernel_coords = kernel
            .basis_vectors()
            .map(|v| {
                s_star
                    .coordinates(v)?
                    .ok_or(Error::Internal("kernel not inside the preimage"))
            })
            .collect::<Result<Vec<_>>>()?;
        let kernel_in_sub = Subspace::span(sub.algebra.dim(), &kernel_coords);
        let action = quotient_action(&sub.algebra, &kernel_in_sub)?;
        let complement = module_complement(&action, &kernel_in_sub)?;
        sub.push_forward(&complement)?
    };
    let witnesses = verify_levi(a, &semisimple_part)?;
    if !witnesses.all_pass() {
        return Err(Error::Internal("Levi witnesses failed"));
    }
    Ok(LeviDecomposition {
        semisimple_part,
        radical,
        witnesses,
    })
}
