use num_bigint::BigInt;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("polynomial is reducible: integer root {0}")]
    Reducible(BigInt),

    #[error("parity condition violated: {0}")]
    ParityViolation(&'static str),

    #[error("alpha must be even and >= 2, got {0}")]
    AlphaNotEven(BigInt),

    #[error("alpha = {0} and beta = {1} are not coprime")]
    NotCoprime(BigInt, BigInt),

    #[error("v1 = {v1} is not in the Bezout residue class {class} mod {modulus}")]
    CongruenceViolation {
        v1: BigInt,
        class: BigInt,
        modulus: BigInt,
    },

    #[error("internal parity invariant broken: {0}")]
    OddnessViolation(String),

    #[error("factorization budget exhausted on cofactor {remaining}")]
    EffortExceeded {
        /// Prime power factors peeled off before giving up.
        partial: Vec<(BigInt, u32)>,
        remaining: BigInt,
    },

    #[error("factorization budget exhausted while scanning at n = {0}")]
    EffortExceededAt(BigInt),

    #[error("transfer mismatch: u^2 + v^2 != p(n) for n = {0}")]
    TransferMismatch(BigInt),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
