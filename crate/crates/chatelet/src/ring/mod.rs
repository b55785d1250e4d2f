//! Exact arithmetic in ℤ[θ] and ℤ[θ,i] for a monic irreducible cubic p,
//! norms via resultants, and the degree-6 minimal polynomial of θ + i.

pub mod gauss;
pub mod poly;
pub mod resultant;
pub mod theta;

pub use gauss::{gauss_gcd, GaussianInteger};
pub use poly::{CubicPoly, IntPoly};
pub use resultant::{norm, resultant_monic_cubic};
pub use theta::{square_sum_expand, theta_mul, GaussThetaElem, ThetaElem};
