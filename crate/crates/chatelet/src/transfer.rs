//! Transfer from ring identities to integer identities: from
//! ω₁² + ω₂² = n − θ, the symmetric product P₁ = ∏ⱼ(ω₁(θⱼ) + iω₂(θⱼ))
//! is a Gaussian integer u + vi with u² + v² = p(n).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::constructor::Solution;
use crate::error::{Error, Result};
use crate::ring::{resultant_monic_cubic, CubicPoly, GaussianInteger, ThetaElem};

/// P₁ = ∏ over the roots θⱼ of p of (ω₁ + iω₂)(θⱼ), computed as the
/// resultant of p with the quadratic whose coefficients are Gaussian.
/// No floating point, no root approximation.
pub fn gaussian_norm_product(
    p: &CubicPoly,
    omega1: &ThetaElem,
    omega2: &ThetaElem,
) -> GaussianInteger {
    let int = |b: &BigInt| GaussianInteger::new(b.clone(), BigInt::zero());
    let pc = [
        GaussianInteger::one(),
        int(&p.a2),
        int(&p.a1),
        int(&p.a0),
    ];
    let q = [
        GaussianInteger::new(omega1.c2.clone(), omega2.c2.clone()),
        GaussianInteger::new(omega1.c1.clone(), omega2.c1.clone()),
        GaussianInteger::new(omega1.c0.clone(), omega2.c0.clone()),
    ];
    resultant_monic_cubic(&pc, &q)
}

/// End-to-end certification: returns u + vi with u² + v² = p(n) for the
/// solution's n, verified exactly.
pub fn certify_transfer(p: &CubicPoly, s: &Solution) -> Result<GaussianInteger> {
    let p1 = gaussian_norm_product(p, &s.omega1, &s.omega2);
    if p1.norm() != p.eval(&s.n) {
        return Err(Error::TransferMismatch(s.n.clone()));
    }
    Ok(p1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::complete;
    use crate::oracle::is_sum_two_squares;
    use crate::ring::norm;
    use proptest::prelude::*;

    fn p_sample() -> CubicPoly {
        CubicPoly::new(1, 1, 2).unwrap()
    }

    #[test]
    fn constant_sections() {
        let p = p_sample();
        assert_eq!(
            gaussian_norm_product(&p, &ThetaElem::one(), &ThetaElem::zero()),
            GaussianInteger::new(1, 0)
        );
        // constant ω₁ = z gives P₁ = z³
        let z = ThetaElem::new(5, 0, 0);
        assert_eq!(
            gaussian_norm_product(&p, &z, &ThetaElem::zero()),
            GaussianInteger::new(125, 0)
        );
    }

    #[test]
    fn worked_example_certifies() {
        let p = p_sample();
        let s = complete(&p, &BigInt::from(2), &BigInt::from(1), &BigInt::from(1)).unwrap();
        let uv = certify_transfer(&p, &s).unwrap();
        assert_eq!(uv.norm(), BigInt::from(363025));
        assert!(is_sum_two_squares(&BigInt::from(363025)).unwrap().member);
    }

    fn small_elem() -> impl Strategy<Value = ThetaElem> {
        let c = -1000i64..=1000i64;
        (c.clone(), c.clone(), c).prop_map(|(a, b, c)| ThetaElem::new(a, b, c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        /// Two independent routes: resultant over ℤ[i] versus the ℤ-norm
        /// of ω₁² + ω₂².
        #[test]
        fn norm_of_square_sum_equals_u2_plus_v2(o1 in small_elem(), o2 in small_elem()) {
            let p = p_sample();
            let p1 = gaussian_norm_product(&p, &o1, &o2);
            let sum = crate::ring::square_sum_expand(&p, &o1, &o2);
            prop_assert_eq!(p1.norm(), norm(&p, &sum));
        }

        #[test]
        fn conjugation_symmetry(o1 in small_elem(), o2 in small_elem()) {
            let p = p_sample();
            let lhs = gaussian_norm_product(&p, &o1, &o2.neg());
            let rhs = gaussian_norm_product(&p, &o1, &o2).conj();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
