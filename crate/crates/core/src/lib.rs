//! Exact polynomial families `p_n`/`q_n`, certified evaluation of the
//! associated L-function and linear functional, and the congruence and
//! irreducibility checks that go with them.
//!
//! The library is organized bottom-up:
//!
//! * [`exact`]: memoized exact combinatorial sequences (binomials, Stirling
//!   numbers, Bernoulli numbers, tangent numbers).
//! * [`poly`]: the integer polynomial families and the exact identities
//!   connecting them.
//! * [`numerics`]: certified arbitrary-precision evaluation of the Dirichlet
//!   series, its linear functional, and zeta quotients, with explicit error
//!   bounds carried through every operation.
//! * [`modular`]: congruence checks and irreducibility certificates mod p.
//! * [`verify`]: the named check suites the CLI and tests both run.

pub mod exact;
pub mod modular;
pub mod numerics;
pub mod poly;
pub mod verify;

pub use exact::{CombiTables, Rational, StirlingKind};
pub use numerics::{ComplexArg, ErrFloat};
pub use poly::{IntPoly, RatPoly};

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument fell outside a function's stated domain.
    #[error("{func}: {reason}")]
    Domain { func: String, reason: String },
    /// A textual input failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
    /// A numeric routine could not certify the requested precision.
    #[error("precision failure in {func}: {reason}")]
    Precision { func: String, reason: String },
}

impl Error {
    pub(crate) fn domain(func: &str, reason: String) -> Self {
        Error::Domain {
            func: func.into(),
            reason,
        }
    }

    pub(crate) fn parse(reason: String) -> Self {
        Error::Parse(reason)
    }

    pub(crate) fn precision(func: &str, reason: String) -> Self {
        Error::Precision {
            func: func.into(),
            reason,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
