//! Gaussian integers u + vi with arbitrary-precision parts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianInteger {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInteger {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInteger {
            re: re.into(),
            im: im.into(),
        }
    }

    /// re² + im².
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> GaussianInteger {
        GaussianInteger {
            re: self.re.clone(),
            im: -&self.im,
        }
    }
}

impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

impl Add for GaussianInteger {
    type Output = GaussianInteger;
    fn add(self, rhs: GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussianInteger {
    type Output = GaussianInteger;
    fn sub(self, rhs: GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for GaussianInteger {
    type Output = GaussianInteger;
    fn neg(self) -> GaussianInteger {
        GaussianInteger {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for GaussianInteger {
    type Output = GaussianInteger;
    fn mul(self, rhs: GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Zero for GaussianInteger {
    fn zero() -> Self {
        GaussianInteger::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianInteger {
    fn one() -> Self {
        GaussianInteger::new(1, 0)
    }
}

/// Nearest-integer division in ℤ[i]: returns q with |a − qb| < |b|.
fn div_round(a: &GaussianInteger, b: &GaussianInteger) -> GaussianInteger {
    let d = b.norm();
    let t = a.clone() * b.conj();
    let round = |num: &BigInt| -> BigInt {
        // round(num / d) with d > 0, ties toward +∞
        (BigInt::from(2) * num + &d).div_floor(&(BigInt::from(2) * &d))
    };
    GaussianInteger {
        re: round(&t.re),
        im: round(&t.im),
    }
}

/// Euclidean gcd in ℤ[i], up to a unit.
pub fn gauss_gcd(a: &GaussianInteger, b: &GaussianInteger) -> GaussianInteger {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let q = div_round(&a, &b);
        let r = a - q * b.clone();
        a = b;
        b = r;
    }
    a
}
