//! Enumeration of the explicit solution family in ℛ_{θ,1}: for each
//! admissible (α, β, v₁) the remaining coordinates of a pair (ω₁, ω₂)
//! with ω₁² + ω₂² = n − θ are uniquely determined.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{square_sum_expand, CubicPoly, ThetaElem};

/// Odd Bézout pair: u·α − v·β = 1 with both u, v odd and v canonicalized
/// into (0, 2α].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutPair {
    pub u_ab: BigInt,
    pub v_ab: BigInt,
}

/// One certified family member: (ω₁, ω₂) with ω₁² + ω₂² = n − θ, plus the
/// (α, β, v₁) provenance that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub omega1: ThetaElem,
    pub omega2: ThetaElem,
    pub n: BigInt,
    pub alpha: BigInt,
    pub beta: BigInt,
    pub v1: BigInt,
}

/// Odd Bézout coefficients for even α and coprime β.
///
/// Extended Euclid gives some u·α − v·β = 1; shifting by (β, α) once makes
/// u odd, and then v·β = u·α − 1 is odd so v is odd automatically. The
/// representative is fixed by reducing v into (0, 2α].
pub fn bezout_odd(alpha: &BigInt, beta: &BigInt) -> Result<BezoutPair> {
    if alpha.is_negative() || alpha.is_zero() || (alpha % 2u8).is_one() {
        return Err(Error::AlphaNotEven(alpha.clone()));
    }
    if beta.is_negative() || beta.is_zero() || beta > alpha {
        return Err(Error::InvalidArgument(format!(
            "beta must satisfy 1 <= beta <= alpha, got beta = {beta}"
        )));
    }
    let ext = alpha.extended_gcd(beta);
    if !ext.gcd.is_one() {
        return Err(Error::NotCoprime(alpha.clone(), beta.clone()));
    }
    // ext: x·α + y·β = 1; flip to u·α − v·β = 1
    let mut u = ext.x;
    let mut v = -ext.y;
    if (&u % 2u8).is_zero() {
        u += beta;
        v += alpha;
    }
    // shift v into (0, 2α] by multiples of 2α, keeping u in step
    let two_alpha = BigInt::from(2) * alpha;
    let mut shifted = v.mod_floor(&two_alpha);
    if shifted.is_zero() {
        shifted = two_alpha.clone();
    }
    let t = (&shifted - &v) / &two_alpha;
    let u = u + BigInt::from(2) * beta * t;
    let v = shifted;
    debug_assert!(( &u * alpha - &v * beta).is_one());
    debug_assert!((&u % 2u8).abs().is_one() && (&v % 2u8).is_one());
    Ok(BezoutPair { u_ab: u, v_ab: v })
}

/// Completes (α, β, v₁) into a full family member.
///
/// Sets v₂ = α, u₂ = β, u₁ = (1 + v₁β)/α, then solves for u₀, v₀ via the
/// even halves of h₁, h₂. Every parity link is checked at runtime.
pub fn complete(p: &CubicPoly, alpha: &BigInt, beta: &BigInt, v1: &BigInt) -> Result<Solution> {
    if !p.has_family_parity() {
        return Err(Error::ParityViolation(
            "constructive family needs a2^2 - a1 even and a1*a2 - a0 odd",
        ));
    }
    let pair = bezout_odd(alpha, beta)?;
    let two_alpha = BigInt::from(2) * alpha;
    if v1.mod_floor(&two_alpha) != pair.v_ab.mod_floor(&two_alpha) {
        return Err(Error::CongruenceViolation {
            v1: v1.clone(),
            class: pair.v_ab.mod_floor(&two_alpha),
            modulus: two_alpha,
        });
    }

    let v2 = alpha.clone();
    let u2 = beta.clone();
    let one_plus = BigInt::one() + v1 * &u2;
    let (u1, rem) = one_plus.div_rem(alpha);
    if !rem.is_zero() {
        return Err(Error::OddnessViolation(format!(
            "(1 + v1*beta) not divisible by alpha for (alpha, beta, v1) = ({alpha}, {beta}, {v1})"
        )));
    }

    let (a2, a1, a0) = (&p.a2, &p.a1, &p.a0);
    let aa = a1 * a2 - a0;
    let bb = a2 * a2 - a1;
    let two = BigInt::from(2);
    let h1: BigInt =
        -BigInt::one() + &two * a1 * &u1 * &u2 - &u2 * &u2 * &aa + &two * a1 * v1 * &v2
            - &v2 * &v2 * &aa;
    let h2: BigInt = -(&u1 * &u1) + &two * a2 * &u1 * &u2 - &u2 * &u2 * &bb - v1 * v1
        + &two * a2 * v1 * &v2
        - &v2 * &v2 * &bb;
    for (name, h) in [("h1", &h1), ("h2", &h2)] {
        if !(h % 2u8).is_zero() {
            return Err(Error::OddnessViolation(format!(
                "{name} is odd for (alpha, beta, v1) = ({alpha}, {beta}, {v1})"
            )));
        }
    }
    let h1_half = &h1 / &two;
    let h2_half = &h2 / &two;
    let u0 = &v2 * &h1_half - v1 * &h2_half;
    let v0 = -(&u2 * &h1_half) + &u1 * &h2_half;

    let omega1 = ThetaElem::new(u0, u1.clone(), u2.clone());
    let omega2 = ThetaElem::new(v0, v1.clone(), v2.clone());

    // defining property: ω₁² + ω₂² = n − θ
    let g = square_sum_expand(p, &omega1, &omega2);
    if g.c1 != BigInt::from(-1) || !g.c2.is_zero() {
        return Err(Error::OddnessViolation(format!(
            "completion failed: g1 = {}, g2 = {}",
            g.c1, g.c2
        )));
    }
    // determinant and membership conditions of the family
    let det = &u1 * &v2 - v1 * &u2;
    if !det.is_one() {
        return Err(Error::OddnessViolation(format!("determinant {det} != 1")));
    }
    if !u2.gcd(&v2).is_one() {
        return Err(Error::OddnessViolation("gcd(u2, v2) != 1".into()));
    }
    if (&u1 % 2u8).is_zero() || (v1 % 2u8).is_zero() {
        return Err(Error::OddnessViolation("u1 and v1 must be odd".into()));
    }

    Ok(Solution {
        omega1,
        omega2,
        n: g.c0,
        alpha: alpha.clone(),
        beta: beta.clone(),
        v1: v1.clone(),
    })
}

/// Largest m ≥ 0 with m ≤ r·X^{1/6}, decided exactly: m⁶·den⁶ ≤ num⁶·X.
pub fn sixth_root_floor(r: &BigRational, x: &BigInt) -> BigInt {
    assert!(r.is_positive() && !x.is_negative());
    let num6 = r.numer().pow(6) * x;
    let den6 = r.denom().pow(6);
    // binary search over m
    let mut lo = BigInt::zero();
    let mut hi = BigInt::one();
    while hi.pow(6) * &den6 <= num6 {
        hi = &hi * 2;
    }
    while &lo + 1u8 < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        if mid.pow(6) * &den6 <= num6 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Even α values visited for the given window: 2, 4, …, ⌊(c/4)·X^{1/6}⌋.
pub fn alpha_range(x: &BigInt, c: &BigRational) -> Vec<BigInt> {
    let quarter_c = c / BigRational::from(BigInt::from(4));
    let alpha_max = sixth_root_floor(&quarter_c, x);
    let mut out = Vec::new();
    let mut a = BigInt::from(2);
    while a <= alpha_max {
        out.push(a.clone());
        a += 2;
    }
    out
}

/// All family members for one α slice, in lexicographic (β, v₁) order.
pub fn enumerate_alpha_slice(
    p: &CubicPoly,
    alpha: &BigInt,
    x: &BigInt,
    c: &BigRational,
) -> Result<Vec<Solution>> {
    let v1_max = sixth_root_floor(c, x);
    let two_alpha = BigInt::from(2) * alpha;
    let mut out = Vec::new();
    let mut beta = BigInt::one();
    while &beta <= alpha {
        if alpha.gcd(&beta).is_one() {
            let pair = bezout_odd(alpha, &beta)?;
            let r = pair.v_ab.mod_floor(&two_alpha);
            // v₁ = r + 2αk with |v₁| ≤ v1_max
            let k_min = (-&v1_max - &r).div_ceil(&two_alpha);
            let k_max = (&v1_max - &r).div_floor(&two_alpha);
            let mut k = k_min;
            while k <= k_max {
                let v1 = &r + &two_alpha * &k;
                out.push(complete(p, alpha, &beta, &v1)?);
                k += 1;
            }
        }
        beta += 1;
    }
    Ok(out)
}

/// Enumerates the whole family for the window (X, c): α even in
/// [2, (c/4)X^{1/6}], β ∈ [1, α] coprime to α, v₁ in the Bézout class mod
/// 2α with |v₁| ≤ c·X^{1/6}. Deterministic lexicographic (α, β, v₁) order.
pub fn enumerate_family(p: &CubicPoly, x: &BigInt, c: &BigRational) -> Result<Vec<Solution>> {
    if x.is_negative() {
        return Err(Error::InvalidArgument(format!("X must be >= 0, got {x}")));
    }
    if !c.is_positive() || c > &BigRational::from(BigInt::from(4)) {
        return Err(Error::InvalidArgument(format!(
            "c must satisfy 0 < c <= 4, got {c}"
        )));
    }
    let mut out = Vec::new();
    for alpha in alpha_range(x, c) {
        out.extend(enumerate_alpha_slice(p, &alpha, x, c)?);
    }
    Ok(out)
}

/// Exact size of the v₁ progression {v₁ ≡ v(α,β) (mod 2α), |v₁| ≤ c·X^{1/6}}.
pub fn vc_cardinality(alpha: &BigInt, beta: &BigInt, x: &BigInt, c: &BigRational) -> Result<BigInt> {
    let pair = bezout_odd(alpha, beta)?;
    let two_alpha = BigInt::from(2) * alpha;
    let r = pair.v_ab.mod_floor(&two_alpha);
    let v1_max = sixth_root_floor(c, x);
    let k_min = (-&v1_max - &r).div_ceil(&two_alpha);
    let k_max = (&v1_max - &r).div_floor(&two_alpha);
    let count: BigInt = &k_max - &k_min + 1;
    Ok(if count.is_negative() {
        BigInt::zero()
    } else {
        count
    })
}

/// Exact test of count ≥ c·X^{1/6}/(4α), via (4α·count·den)⁶ ≥ num⁶·X.
pub fn vc_meets_lower_bound(alpha: &BigInt, count: &BigInt, x: &BigInt, c: &BigRational) -> bool {
    let lhs = (BigInt::from(4) * alpha * count * c.denom()).pow(6);
    let rhs = c.numer().pow(6) * x;
    lhs >= rhs
}

/// A rational d > 0 with 2(1 + |θ| + |θ|²)² d² < 1, from the isolating
/// interval. Solutions with M_θ(ωᵢ) ≤ d·X^{1/2} are guaranteed |n| ≤ X
/// for large X; the harness reports this box as a diagnostic.
pub fn height_budget(p: &CubicPoly) -> BigRational {
    let t = p.theta_abs_upper();
    let s = BigRational::one() + &t + &t * &t;
    let d = BigRational::one() / (BigRational::from(BigInt::from(2)) * &s);
    // recheck the defining inequality exactly
    let lhs = BigRational::from(BigInt::from(2)) * &s * &s * &d * &d;
    assert!(lhs < BigRational::one());
    d
}
