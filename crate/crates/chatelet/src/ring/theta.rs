//! Elements of the cubic order ℤ[θ] and of ℤ[θ,i].
//!
//! Every element is kept in canonical reduced form c₀ + c₁θ + c₂θ², so
//! equality is structural. Products are reduced with
//! θ³ = −a₂θ² − a₁θ − a₀ and θ⁴ = (a₂²−a₁)θ² + (a₁a₂−a₀)θ + a₀a₂.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::CubicPoly;

/// An element c₀ + c₁θ + c₂θ² of ℤ[θ].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaElem {
    pub c0: BigInt,
    pub c1: BigInt,
    pub c2: BigInt,
}

impl ThetaElem {
    pub fn new(c0: impl Into<BigInt>, c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Self {
        ThetaElem {
            c0: c0.into(),
            c1: c1.into(),
            c2: c2.into(),
        }
    }

    pub fn zero() -> Self {
        ThetaElem::new(0, 0, 0)
    }

    pub fn one() -> Self {
        ThetaElem::new(1, 0, 0)
    }

    /// The generator θ itself.
    pub fn theta() -> Self {
        ThetaElem::new(0, 1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero()
    }

    /// Max-coefficient height M_θ = max(|c₀|, |c₁|, |c₂|).
    pub fn height(&self) -> BigInt {
        self.c0.abs().max(self.c1.abs()).max(self.c2.abs())
    }

    pub fn add(&self, other: &ThetaElem) -> ThetaElem {
        ThetaElem {
            c0: &self.c0 + &other.c0,
            c1: &self.c1 + &other.c1,
            c2: &self.c2 + &other.c2,
        }
    }

    pub fn sub(&self, other: &ThetaElem) -> ThetaElem {
        ThetaElem {
            c0: &self.c0 - &other.c0,
            c1: &self.c1 - &other.c1,
            c2: &self.c2 - &other.c2,
        }
    }

    pub fn neg(&self) -> ThetaElem {
        ThetaElem {
            c0: -&self.c0,
            c1: -&self.c1,
            c2: -&self.c2,
        }
    }
}

impl fmt::Display for ThetaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}θ + {}θ²", self.c0, self.c1, self.c2)
    }
}

/// Product in ℤ[θ], reduced to canonical form.
pub fn theta_mul(p: &CubicPoly, x: &ThetaElem, y: &ThetaElem) -> ThetaElem {
    // Raw convolution: x·y = d0 + d1 θ + d2 θ² + d3 θ³ + d4 θ⁴.
    let d0 = &x.c0 * &y.c0;
    let d1 = &x.c0 * &y.c1 + &x.c1 * &y.c0;
    let d2 = &x.c0 * &y.c2 + &x.c1 * &y.c1 + &x.c2 * &y.c0;
    let d3 = &x.c1 * &y.c2 + &x.c2 * &y.c1;
    let d4 = &x.c2 * &y.c2;

    let (a2, a1, a0) = (&p.a2, &p.a1, &p.a0);
    // θ³ = −a₂θ² − a₁θ − a₀,  θ⁴ = (a₂²−a₁)θ² + (a₁a₂−a₀)θ + a₀a₂
    let c0 = d0 - &d3 * a0 + &d4 * a0 * a2;
    let c1 = d1 - &d3 * a1 + &d4 * (a1 * a2 - a0);
    let c2 = d2 - &d3 * a2 + &d4 * (a2 * a2 - a1);
    ThetaElem { c0, c1, c2 }
}

/// ω₁² + ω₂² via the closed-form quadratics (g₀, g₁, g₂) in the
/// coefficients of u and v.
pub fn square_sum_expand(p: &CubicPoly, u: &ThetaElem, v: &ThetaElem) -> ThetaElem {
    let (a2, a1, a0) = (&p.a2, &p.a1, &p.a0);
    let aa = a1 * a2 - a0; // a₁a₂ − a₀
    let bb = a2 * a2 - a1; // a₂² − a₁

    let g_part = |w: &ThetaElem| -> (BigInt, BigInt, BigInt) {
        let (w0, w1, w2) = (&w.c0, &w.c1, &w.c2);
        let g0 = w0 * w0 - BigInt::from(2) * a0 * w1 * w2 + w2 * w2 * a0 * a2;
        let g1 = BigInt::from(2) * w0 * w1 - BigInt::from(2) * a1 * w1 * w2 + w2 * w2 * &aa;
        let g2 = BigInt::from(2) * w0 * w2 + w1 * w1 - BigInt::from(2) * a2 * w1 * w2
            + w2 * w2 * &bb;
        (g0, g1, g2)
    };

    let (gu0, gu1, gu2) = g_part(u);
    let (gv0, gv1, gv2) = g_part(v);
    let out = ThetaElem {
        c0: gu0 + gv0,
        c1: gu1 + gv1,
        c2: gu2 + gv2,
    };
    debug_assert_eq!(
        out,
        theta_mul(p, u, u).add(&theta_mul(p, v, v)),
        "closed-form expansion disagrees with generic multiplication"
    );
    out
}

/// An element of ℤ[θ,i], stored as re + i·im with both parts reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussThetaElem {
    pub re: ThetaElem,
    pub im: ThetaElem,
}

impl GaussThetaElem {
    pub fn new(re: ThetaElem, im: ThetaElem) -> Self {
        GaussThetaElem { re, im }
    }

    pub fn zero() -> Self {
        GaussThetaElem::new(ThetaElem::zero(), ThetaElem::zero())
    }

    /// θ + i.
    pub fn theta_plus_i() -> Self {
        GaussThetaElem::new(ThetaElem::theta(), ThetaElem::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> GaussThetaElem {
        GaussThetaElem::new(self.re.clone(), self.im.neg())
    }

    pub fn add(&self, other: &GaussThetaElem) -> GaussThetaElem {
        GaussThetaElem::new(self.re.add(&other.re), self.im.add(&other.im))
    }

    pub fn mul(&self, p: &CubicPoly, other: &GaussThetaElem) -> GaussThetaElem {
        let re = theta_mul(p, &self.re, &other.re).sub(&theta_mul(p, &self.im, &other.im));
        let im = theta_mul(p, &self.re, &other.im).add(&theta_mul(p, &self.im, &other.re));
        GaussThetaElem::new(re, im)
    }

    /// Adds an integer constant.
    pub fn add_int(&self, k: &BigInt) -> GaussThetaElem {
        let mut re = self.re.clone();
        re.c0 += k;
        GaussThetaElem::new(re, self.im.clone())
    }
}
