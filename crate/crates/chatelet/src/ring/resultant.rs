//! Resultants via Sylvester determinants, exact over any commutative ring.
//!
//! For a monic cubic p and q of degree m ≤ 2, Res(p, q) = ∏ⱼ q(θⱼ) over
//! the roots of p; this is the whole exact-arithmetic vehicle for norms
//! in ℤ[θ] and symmetric products over ℤ[i].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::CubicPoly;
use super::theta::ThetaElem;

pub trait RingElem: Clone + Zero + One + std::ops::Sub<Output = Self> {}
impl<T: Clone + Zero + One + std::ops::Sub<Output = T>> RingElem for T {}

/// Determinant by Laplace expansion along the first row. Matrices here are
/// at most 5×5, so the factorial blowup is irrelevant.
fn det<T: RingElem>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = T::zero();
    let mut negate = false;
    for col in 0..n {
        let minor: Vec<Vec<T>> = (1..n)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != col)
                    .map(|c| m[r][c].clone())
                    .collect()
            })
            .collect();
        let term = m[0][col].clone() * det(&minor);
        acc = if negate { acc - term } else { acc + term };
        negate = !negate;
    }
    acc
}

/// Res(p, q) for monic cubic p (coefficients descending: [1, a₂, a₁, a₀])
/// and q with descending coefficients and nonzero leading term.
///
/// Equals ∏ q(θⱼ) over the three roots of p.
pub fn resultant_monic_cubic<T: RingElem>(p: &[T; 4], q: &[T]) -> T {
    let mut q = q.to_vec();
    while q.first().map_or(false, |c| c.is_zero()) {
        q.remove(0);
    }
    if q.is_empty() {
        return T::zero();
    }
    let m = q.len() - 1;
    if m == 0 {
        // constant c: product over three roots is c³
        let c = q[0].clone();
        return c.clone() * c.clone() * c;
    }
    let n = 3 + m;
    let mut s = vec![vec![T::zero(); n]; n];
    // m rows of p's coefficients, shifted
    for (r, row) in s.iter_mut().enumerate().take(m) {
        for (k, c) in p.iter().enumerate() {
            row[r + k] = c.clone();
        }
    }
    // 3 rows of q's coefficients, shifted
    for r in 0..3 {
        for (k, c) in q.iter().enumerate() {
            s[m + r][r + k] = c.clone();
        }
    }
    det(&s)
}

/// Field norm of x ∈ ℤ[θ]: ∏ⱼ x(θⱼ), computed as Res(p, c₂t² + c₁t + c₀).
pub fn norm(p: &CubicPoly, x: &ThetaElem) -> BigInt {
    let pc = [
        BigInt::one(),
        p.a2.clone(),
        p.a1.clone(),
        p.a0.clone(),
    ];
    let q = [x.c2.clone(), x.c1.clone(), x.c0.clone()];
    resultant_monic_cubic(&pc, &q)
}
