//! Inner derivations, their exponentials, and the non-conjugacy certificate.
//!
//! If every inner derivation `d_x` maps a complement `S` into itself then so
//! does every `exp(d_x)`, and so does any product of such maps. Hence no such
//! product carries `S` onto a different complement `S1`. The certificate
//! records exactly the data needed to re-check that argument.

use alloc::vec::Vec;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{unit_vector, LinearMap, Subspace, Vector};
use crate::levi::verify_levi;

pub const NON_CONJUGACY_CLAIM: &str = "every inner derivation maps S into S, so no composition of \
exponentials of nilpotent inner derivations carries S onto S1; S and S1 are not conjugate under \
that group";

/// `d(b_i b_j) = d(b_i) b_j + b_i d(b_j)` on all basis pairs.
pub fn is_derivation(a: &LeibnizAlgebra, d: &LinearMap) -> Result<bool> {
    let n = a.dim();
    if d.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: d.dim(),
        });
    }
    let images: Vec<Vector> = d.matrix().columns();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.apply(a.table().basis_product(i, j));
            let mut rhs = a.product(&images[i], &unit_vector(n, j))?;
            let right = a.product(&unit_vector(n, i), &images[j])?;
            for (x, y) in rhs.iter_mut().zip(right) {
                *x += y;
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `d_x`, left multiplication by `x`.
pub fn inner_derivation(a: &LeibnizAlgebra, x: &[crate::exactlin::Scalar]) -> Result<LinearMap> {
    a.left_multiplication(x)
}

/// `g(b_i b_j) = g(b_i) g(b_j)` on all basis pairs, and `g` invertible.
pub fn is_automorphism(a: &LeibnizAlgebra, g: &LinearMap) -> Result<bool> {
    let n = a.dim();
    if g.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.dim(),
        });
    }
    if g.matrix().rank() != n {
        return Ok(false);
    }
    let images = g.matrix().columns();
    for i in 0..n {
        for j in 0..n {
            if g.apply(a.table().basis_product(i, j)) != a.product(&images[i], &images[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceRow {
    /// Index of the basis element `b_i` whose derivation `d_{b_i}` is tested.
    pub generator: usize,
    pub pass: bool,
    /// First basis vector of the subspace (by row) whose image leaves it.
    pub failing_vector: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub rows: Vec<InvarianceRow>,
}

impl InvarianceReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.pass).count()
    }

    /// `(generator, subspace basis row)` of the first failure in lexicographic order.
    pub fn first_failure(&self) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .find_map(|r| r.failing_vector.map(|v| (r.generator, v)))
    }
}

/// Checks `d_{b_i}(U) ⊆ U` for every basis element `b_i`; by linearity this covers every `d_x`.
pub fn invariance_check(a: &LeibnizAlgebra, u: &Subspace) -> Result<InvarianceReport> {
    if u.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: u.ambient_dim(),
        });
    }
    let rows = (0..a.dim())
        .map(|i| {
            let d = a.basis_left_multiplication(i);
            let failing_vector = u
                .basis_vectors()
                .position(|v| !u.contains(&d.apply(v)).expect("dimensions checked"));
            InvarianceRow {
                generator: i,
                pass: failing_vector.is_none(),
                failing_vector,
            }
        })
        .collect();
    Ok(InvarianceReport { rows })
}

/// `exp(d_x)` for nilpotent `d_x`, checked to be an automorphism.
pub fn exp_inner_automorphism(a: &LeibnizAlgebra, x: &[crate::exactlin::Scalar]) -> Result<LinearMap> {
    let g = inner_derivation(a, x)?.exp_nilpotent()?;
    if !is_automorphism(a, &g)? {
        return Err(Error::Internal("exponential of an inner derivation is not an automorphism"));
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpCheck {
    pub generator: usize,
    pub automorphism: bool,
    /// `exp(d_{b_i})(S) = S`
    pub preserves: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonConjugacyCertificate {
    pub algebra_digest: alloc::string::String,
    pub s: Subspace,
    pub s1: Subspace,
    /// A vector of `S1` outside `S`.
    pub distinctness: Vector,
    pub invariance: InvarianceReport,
    /// One entry per basis element with nonzero nilpotent inner derivation.
    pub exp_checks: Vec<ExpCheck>,
    pub claim: &'static str,
}

impl NonConjugacyCertificate {
    /// Recomputes every recorded fact against `a`.
    pub fn check(&self, a: &LeibnizAlgebra) -> Result<bool> {
        if a.digest() != self.algebra_digest {
            return Ok(false);
        }
        if !self.s1.contains(&self.distinctness)? || self.s.contains(&self.distinctness)? {
            return Ok(false);
        }
        let invariance = invariance_check(a, &self.s)?;
        if invariance != self.invariance || !invariance.all_pass() {
            return Ok(false);
        }
        Ok(exp_checks(a, &self.s)? == self.exp_checks
            && self.exp_checks.iter().all(|c| c.automorphism && c.preserves))
    }
}

fn exp_checks(a: &LeibnizAlgebra, s: &Subspace) -> Result<Vec<ExpCheck>> {
    let mut checks = Vec::new();
    for i in 0..a.dim() {
        let d = a.basis_left_multiplication(i);
        if d.is_zero() || !d.is_nilpotent() {
            continue;
        }
        let g = d.exp_nilpotent()?;
        checks.push(ExpCheck {
            generator: i,
            automorphism: is_automorphism(a, &g)?,
            preserves: g.image_of(s)? == *s,
        });
    }
    Ok(checks)
}

/// Certificate that no product of exponentials of nilpotent inner derivations maps `s` onto `s1`.
pub fn non_conjugacy_certificate(
    a: &LeibnizAlgebra,
    s: &Subspace,
    s1: &Subspace,
) -> Result<NonConjugacyCertificate> {
    for u in [s, s1] {
        if !verify_levi(a, u)?.all_pass() {
            return Err(Error::NotAComplement);
        }
    }
    let distinctness = s1
        .basis_vectors()
        .find(|v| !s.contains(v).expect("dimensions checked"))
        .ok_or(Error::NoDistinctness)?
        .to_vec();
    let invariance = invariance_check(a, s)?;
    if let Some((generator, _)) = invariance.first_failure() {
        return Err(Error::InvarianceFailed(generator));
    }
    let exp_checks = exp_checks(a, s)?;
    if !exp_checks.iter().all(|c| c.automorphism && c.preserves) {
        return Err(Error::Internal("exponential failed to preserve an invariant complement"));
    }
    Ok(NonConjugacyCertificate {
        algebra_digest: a.digest(),
        s: s.clone(),
        s1: s1.clone(),
        distinctness,
        invariance,
        exp_checks,
        claim: NON_CONJUGACY_CLAIM,
    })
}
