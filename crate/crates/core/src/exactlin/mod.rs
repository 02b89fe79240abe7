//! Exact linear algebra over the rationals.
//!
//! Everything here works on [`Scalar`] values (arbitrary precision rationals),
//! so there is no rounding anywhere. Subspaces are always kept in reduced row
//! echelon form, which makes set equality the same as structural equality.

mod linear_map;
mod matrix;
mod subspace;

pub use linear_map::LinearMap;
pub use matrix::{kernel_basis, rref, solve_affine, AffineSolution, Matrix, Rref};
pub use subspace::Subspace;

use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

/// Coordinate vector over the rationals.
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero_vector(n: usize) -> Vector {
    alloc::vec![Scalar::zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn int_vector(values: &[i64]) -> Vector {
    values.iter().map(|&v| int(v)).collect()
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`, skipping the work when `c` is zero.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into a scalar in lowest terms.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).ok()?;
    let den = BigInt::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

/// Formats a scalar as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_scalar(x: &Scalar) -> String {
    use alloc::string::ToString;
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        alloc::format!("{}/{}", x.numer(), x.denom())
    }
}
