//! The defining monic cubic, its validated constructor, exact real-root
//! isolation, and integer polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

use super::gauss::GaussianInteger;
use super::theta::GaussThetaElem;

/// Interval width target for the isolating interval: 2⁻³².
fn interval_width_target() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1u64 << 32))
}

/// The monic cubic x³ + a₂x² + a₁x + a₀ together with a rational interval
/// isolating one real root θ.
///
/// Irreducibility is checked at construction; the parity conditions
/// (a₂²−a₁ even, a₁a₂−a₀ odd) are recomputed on demand, never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicPoly {
    pub a2: BigInt,
    pub a1: BigInt,
    pub a0: BigInt,
    theta_interval: (BigRational, BigRational),
}

impl CubicPoly {
    /// Validated constructor: irreducible over ℚ and both parity conditions
    /// of the constructive family hold.
    pub fn new(
        a2: impl Into<BigInt>,
        a1: impl Into<BigInt>,
        a0: impl Into<BigInt>,
    ) -> Result<Self, Error> {
        let p = Self::new_relaxed(a2, a1, a0)?;
        if !p.sq_parity_even() {
            return Err(Error::ParityViolation("a2^2 - a1 must be even"));
        }
        if !p.cross_parity_odd() {
            return Err(Error::ParityViolation("a1*a2 - a0 must be odd"));
        }
        Ok(p)
    }

    /// Constructor that only demands irreducibility; ring arithmetic works
    /// without the parity conditions.
    pub fn new_relaxed(
        a2: impl Into<BigInt>,
        a1: impl Into<BigInt>,
        a0: impl Into<BigInt>,
    ) -> Result<Self, Error> {
        let (a2, a1, a0) = (a2.into(), a1.into(), a0.into());
        if let Some(root) = integer_root(&a2, &a1, &a0) {
            return Err(Error::Reducible(root));
        }
        let mut p = CubicPoly {
            a2,
            a1,
            a0,
            theta_interval: (BigRational::zero(), BigRational::zero()),
        };
        p.theta_interval = p.isolate_real_root();
        Ok(p)
    }

    /// a₂² − a₁ even?
    pub fn sq_parity_even(&self) -> bool {
        ((&self.a2 * &self.a2 - &self.a1) % 2u8).is_zero()
    }

    /// a₁a₂ − a₀ odd?
    pub fn cross_parity_odd(&self) -> bool {
        !((&self.a1 * &self.a2 - &self.a0) % 2u8).is_zero()
    }

    /// Both parity conditions of the constructive family.
    pub fn has_family_parity(&self) -> bool {
        self.sq_parity_even() && self.cross_parity_odd()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        ((x + &self.a2) * x + &self.a1) * x + &self.a0
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let a2 = BigRational::from(self.a2.clone());
        let a1 = BigRational::from(self.a1.clone());
        let a0 = BigRational::from(self.a0.clone());
        ((x + a2) * x + a1) * x + a0
    }

    /// Derivative 3x² + 2a₂x + a₁ at a rational point.
    fn eval_deriv_rat(&self, x: &BigRational) -> BigRational {
        let three = BigRational::from(BigInt::from(3));
        let two_a2 = BigRational::from(BigInt::from(2) * &self.a2);
        let a1 = BigRational::from(self.a1.clone());
        (three * x + two_a2) * x + a1
    }

    /// Isolating interval (lo, hi) for the tracked real root θ:
    /// p(lo)·p(hi) < 0, hi − lo ≤ 2⁻³², and p is strictly monotonic on
    /// [lo, hi] so the interval contains exactly one root.
    pub fn theta_interval(&self) -> &(BigRational, BigRational) {
        &self.theta_interval
    }

    /// Upper bound for |θ| from the isolating interval.
    pub fn theta_abs_upper(&self) -> BigRational {
        let (lo, hi) = &self.theta_interval;
        lo.abs().max(hi.abs())
    }

    fn isolate_real_root(&self) -> (BigRational, BigRational) {
        // Cauchy bound: all roots have |x| < 1 + max|aᵢ|.
        let bound = BigInt::one() + self.a2.abs().max(self.a1.abs()).max(self.a0.abs());
        let mut lo = BigRational::from(-bound.clone());
        let mut hi = BigRational::from(bound);
        debug_assert!(self.eval_rat(&lo).is_negative() && self.eval_rat(&hi).is_positive());

        let width_target = interval_width_target();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        loop {
            let narrow = (&hi - &lo) <= width_target;
            if narrow && self.monotonic_on(&lo, &hi) {
                return (lo, hi);
            }
            let mid = (&lo + &hi) * &half;
            // mid is rational, hence not a root of an irreducible cubic
            if self.eval_rat(&mid).is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    /// True when p' has no zero inside [lo, hi], so p is strictly monotonic
    /// there. p' is an upward parabola with vertex at −a₂/3: same-sign
    /// endpoint values plus vertex outside the interval rule out any zero.
    fn monotonic_on(&self, lo: &BigRational, hi: &BigRational) -> bool {
        let dlo = self.eval_deriv_rat(lo);
        let dhi = self.eval_deriv_rat(hi);
        if dlo.is_zero() || dhi.is_zero() || (dlo * dhi).is_negative() {
            return false;
        }
        let vertex = BigRational::new(-self.a2.clone(), BigInt::from(3));
        !(&vertex > lo && &vertex < hi)
    }

    /// Minimal polynomial of θ + i: Q(x) = p(x−i)·p(x+i), a degree-6
    /// integer polynomial annihilating θ + i.
    pub fn degree_six_minpoly(&self) -> IntPoly {
        let to_g = |b: &BigInt| GaussianInteger::new(b.clone(), BigInt::zero());
        let coeffs = [
            GaussianInteger::one(),
            to_g(&self.a2),
            to_g(&self.a1),
            to_g(&self.a0),
        ];
        let plus = compose_linear(&coeffs, GaussianInteger::new(0, 1));
        let minus = compose_linear(&coeffs, GaussianInteger::new(0, -1));
        let prod = poly_mul(&plus, &minus);
        let ints = prod
            .iter()
            .map(|g| {
                assert!(g.im.is_zero(), "product of conjugate shifts must be real");
                g.re.clone()
            })
            .collect();
        IntPoly::new(ints)
    }
}

impl fmt::Display for CubicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^3 + {}x^2 + {}x + {}", self.a2, self.a1, self.a0)
    }
}

/// Searches for an integer root among the divisors of a₀ (rational root
/// theorem; a monic cubic is reducible over ℚ iff it has an integer root).
fn integer_root(a2: &BigInt, a1: &BigInt, a0: &BigInt) -> Option<BigInt> {
    if a0.is_zero() {
        return Some(BigInt::zero());
    }
    let eval = |x: &BigInt| ((x + a2) * x + a1) * x + a0;
    let n = a0.abs();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            for cand in [d.clone(), -d.clone(), &n / &d, -(&n / &d)] {
                if eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
        d += 1;
    }
    None
}

/// Dense integer polynomial, coefficients in ascending degree, trailing
/// zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Coefficients in ascending degree; trims trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPoly::new(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Evaluates at θ + i in ℤ[θ,i] via Horner.
    pub fn eval_theta_plus_i(&self, p: &CubicPoly) -> GaussThetaElem {
        let z = GaussThetaElem::theta_plus_i();
        let mut acc = GaussThetaElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(p, &z).add_int(c);
        }
        acc
    }
}

/// Composition f(x + shift) for f given by descending coefficients,
/// returned in ascending order.
fn compose_linear(desc: &[GaussianInteger], shift: GaussianInteger) -> Vec<GaussianInteger> {
    // Horner over the polynomial ring: acc(x) := acc(x)·(x + shift) + c.
    let mut acc: Vec<GaussianInteger> = Vec::new();
    for c in desc {
        // multiply acc by (x + shift)
        let mut next = vec![GaussianInteger::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + a.clone();
            next[i] = next[i].clone() + a.clone() * shift.clone();
        }
        next[0] = next[0].clone() + c.clone();
        acc = next;
    }
    acc
}

fn poly_mul(a: &[GaussianInteger], b: &[GaussianInteger]) -> Vec<GaussianInteger> {
    let mut out = vec![GaussianInteger::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}
