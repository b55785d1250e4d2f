//! Independent certification that an integer is (or is not) a sum of two
//! squares, via factorization and the prime-by-prime criterion, with an
//! explicit decomposition when one exists.

pub mod factor;
pub mod primality;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::{gauss_gcd, CubicPoly, GaussianInteger};

pub use factor::{factorize, Factorization};
pub use primality::is_prime;

/// Why an integer fails to be a sum of two squares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// Negative integers are never sums of two squares.
    Negative,
    /// A prime ≡ 3 (mod 4) divides n to an odd exponent.
    Prime { p: BigInt, exp: u32 },
}

/// Certificate for membership in □₂: either an explicit witness
/// a² + b² = n with 0 ≤ a ≤ b, or an obstruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSquareCertificate {
    pub member: bool,
    pub witness: Option<GaussianInteger>,
    pub obstruction: Option<Obstruction>,
}

impl TwoSquareCertificate {
    fn yes(witness: GaussianInteger) -> Self {
        TwoSquareCertificate {
            member: true,
            witness: Some(witness),
            obstruction: None,
        }
    }

    fn no(obstruction: Obstruction) -> Self {
        TwoSquareCertificate {
            member: false,
            witness: None,
            obstruction: Some(obstruction),
        }
    }
}

/// A square root of −1 mod p for prime p ≡ 1 (mod 4): x = d^((p−1)/4) for
/// the first quadratic nonresidue d.
fn sqrt_minus_one(p: &BigUint) -> BigUint {
    let one = BigUint::one();
    let exp_euler = (p - &one) >> 1;
    let exp_fourth = (p - &one) >> 2;
    let p_minus_1 = p - &one;
    let mut d = BigUint::from(2u8);
    loop {
        if d.modpow(&exp_euler, p) == p_minus_1 {
            let x = d.modpow(&exp_fourth, p);
            debug_assert_eq!((&x * &x) % p, p_minus_1);
            return x;
        }
        d += 1u8;
    }
}

/// Writes a prime p ≡ 1 (mod 4) as a² + b² by Gaussian gcd descent on
/// gcd(p, x + i) where x² ≡ −1 (mod p).
fn two_squares_prime(p: &BigUint) -> GaussianInteger {
    let x = sqrt_minus_one(p);
    let g = gauss_gcd(
        &GaussianInteger::new(BigInt::from(p.clone()), BigInt::zero()),
        &GaussianInteger::new(BigInt::from(x), BigInt::one()),
    );
    debug_assert_eq!(g.norm(), BigInt::from(p.clone()));
    g
}

/// Membership test with explicit evidence. Negative inputs are rejected
/// with the `Negative` obstruction; factorization effort propagates as
/// `EffortExceeded`.
pub fn is_sum_two_squares(n: &BigInt) -> Result<TwoSquareCertificate> {
    if n.is_negative() {
        return Ok(TwoSquareCertificate::no(Obstruction::Negative));
    }
    if n.is_zero() {
        return Ok(TwoSquareCertificate::yes(GaussianInteger::new(0, 0)));
    }
    let fac = factorize(n)?;

    // obstruction scan first so the witness work is skipped on failure
    for (p, e) in fac.factors() {
        if (p % 4u8).to_u8() == Some(3) && e % 2 == 1 {
            return Ok(TwoSquareCertificate::no(Obstruction::Prime {
                p: BigInt::from(p.clone()),
                exp: *e,
            }));
        }
    }

    // combine Gaussian factors multiplicatively
    let mut z = GaussianInteger::new(1, 0);
    for (p, e) in fac.factors() {
        let rem = (p % 4u8).to_u8().unwrap_or(0);
        if p.to_u8() == Some(2) {
            let g = GaussianInteger::new(1, 1);
            for _ in 0..*e {
                z = z * g.clone();
            }
        } else if rem == 1 {
            let g = two_squares_prime(p);
            for _ in 0..*e {
                z = z * g.clone();
            }
        } else {
            // rem == 3, even exponent: contributes p^(e/2)
            let half = BigInt::from(p.pow(e / 2));
            z = z * GaussianInteger::new(half, BigInt::zero());
        }
    }
    let (mut a, mut b) = (z.re.abs(), z.im.abs());
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let witness = GaussianInteger { re: a, im: b };
    debug_assert_eq!(witness.norm(), *n);
    Ok(TwoSquareCertificate::yes(witness))
}

/// #{n ∈ [1, X] : p(n) ∈ □₂} by direct scan, sharded over disjoint
/// subranges. The result is independent of the shard count.
pub fn count_b(p: &CubicPoly, x: u64, shards: usize) -> Result<u64> {
    if x < 1 {
        return Err(Error::InvalidArgument("count_b requires X >= 1".into()));
    }
    let shards = shards.max(1).min(x as usize);
    let chunk = x.div_ceil(shards as u64);
    let results: Vec<Result<u64>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for s in 0..shards as u64 {
            let lo = 1 + s * chunk;
            let hi = (lo + chunk - 1).min(x);
            let p = p.clone();
            handles.push(scope.spawn(move || -> Result<u64> {
                let mut count = 0u64;
                for n in lo..=hi {
                    let val = p.eval(&BigInt::from(n));
                    let cert = is_sum_two_squares(&val)
                        .map_err(|_| Error::EffortExceededAt(BigInt::from(n)))?;
                    if cert.member {
                        count += 1;
                    }
                }
                Ok(count)
            }));
        }
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut total = 0u64;
    for r in results {
        total += r?;
    }
    Ok(total)
}
