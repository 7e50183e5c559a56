//! Finite categorical constructions over skeletal finite sets.
//!
//! The crate materializes a chain of small PROPs and the functors between
//! them: the free PROP on a single binary generator ([`syn`]), finite
//! corelations ([`corel`]), the ancestry quotient and its comonoid model
//! ([`ancestry`]), cospans of finite sets with the canonical Frobenius
//! package ([`cospan`]), and a finite powerset lattice logic with
//! Knaster-Tarski fixed points ([`logic`]). Everything is exhaustively
//! checkable at small arities; [`checks`] bundles the verification suites.

pub mod ancestry;
pub mod checks;
pub mod corel;
pub mod cospan;
pub mod finset;
pub mod io;
pub mod logic;
pub mod render;
pub mod syn;

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An operation was called with incompatible boundaries or carriers.
    #[error("contract violation: {0}")]
    Contract(String),
    /// A requested enumeration or search exceeds the configured bound.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// A caller-supplied endomap failed the monotonicity obligation.
    #[error("monotonicity violation: {0}")]
    Monotonicity(String),
    /// Malformed input (CLI/JSON surface).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
