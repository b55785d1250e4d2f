//! Exact-arithmetic library for integer points on the Châtelet surface
//! y² + z² = p(x), where p is an irreducible monic cubic.
//!
//! Three cooperating pieces:
//!
//! * [`ring`] — arithmetic in the cubic order ℤ[θ] and in ℤ[θ,i], norms
//!   via Sylvester resultants, and the degree-6 minimal polynomial of θ+i.
//! * [`constructor`] — enumeration of an explicit family of ring-level
//!   solutions ω₁² + ω₂² = n − θ, parameterized by admissible (α, β, v₁).
//! * [`transfer`] + [`oracle`] — two independent certification routes:
//!   the symmetric-product transfer giving p(n) = u² + v² exactly, and a
//!   factorization-based membership test for sums of two squares.
//!
//! The [`harness`] module adds reproducible batch reporting (CSV,
//! JSON-lines, log-log growth fitting) consumed by the `chatelet` CLI.

pub mod constructor;
pub mod error;
pub mod harness;
pub mod oracle;
pub mod ring;
pub mod transfer;

pub use error::{Error, Result};
