//! Exact structure theory for finite-dimensional left Leibniz algebras over `Q`.
//!
//! * [`exactlin`]: rational matrices, canonical subspaces, affine solving,
//!   exponentials of nilpotent maps.
//! * [`algebra`]: algebras given by structure constants, products, ideals, quotients.
//! * [`structure`]: Leibniz kernel, derived series, Killing form, soluble radical.
//! * [`levi`]: Levi complements for Lie and Leibniz algebras.
//! * [`constructions`]: catalog algebras and split extensions with zero right action.
//! * [`conjugacy`]: inner derivations and non-conjugacy certificates.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod conjugacy;
pub mod constructions;
pub mod error;
pub mod exactlin;
pub mod levi;
pub mod structure;

pub use algebra::{LeibnizAlgebra, Quotient, StructureTable, Subalgebra, Violation, ViolationReport};
pub use error::{Error, Result};
pub use exactlin::{LinearMap, Matrix, Scalar, Subspace, Vector};
