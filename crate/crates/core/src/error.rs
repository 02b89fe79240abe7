use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("map is not nilpotent (its {0}-th power is nonzero)")]
    NotNilpotent(usize),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("algebra is not a Lie algebra")]
    NotLie,
    #[error("left Leibniz identity fails on {count} basis triple(s), first at ({a}, {b}, {c})")]
    IdentityViolated { count: usize, a: usize, b: usize, c: usize },
    #[error("soluble radical differs from the Leibniz kernel, or the ideal does not act as zero")]
    NotReducedCase,
    #[error("subspace is not invariant under the module action")]
    NotInvariant,
    #[error("linear system has no solution: {0}")]
    NoSolution(&'static str),
    #[error("unknown algebra name `{0}`")]
    UnknownName(String),
    #[error("acting algebras differ ({0} vs {1} generators)")]
    ActingDimMismatch(usize, usize),
    #[error("module law fails for generators ({0}, {1})")]
    ModuleLawViolated(usize, usize),
    #[error("subspace is not a semisimple complement of the soluble radical")]
    NotAComplement,
    #[error("the two complements coincide; no distinctness witness exists")]
    NoDistinctness,
    #[error("inner derivation of basis element {0} does not leave the complement invariant")]
    InvarianceFailed(usize),
    #[error("internal consistency check failed: {0}")]
    Internal(&'static str),
}
