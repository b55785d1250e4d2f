//! Deterministic factorization: trial division to 10⁴, then Brent-cycle
//! Pollard rho with a bounded step budget per composite.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};

use super::primality::is_prime;

const TRIAL_DIVISION_LIMIT: u64 = 10_000;
/// Rho step budget per composite before giving up.
const RHO_BUDGET: u64 = 1 << 24;

static SMALL_PRIMES: Lazy<Vec<u64>> = Lazy::new(|| {
    let limit = TRIAL_DIVISION_LIMIT as usize;
    let mut sieve = vec![true; limit];
    sieve[0] = false;
    sieve[1] = false;
    for i in 2..limit {
        if sieve[i] {
            for j in (i * i..limit).step_by(i) {
                sieve[j] = false;
            }
        }
    }
    (2..limit).filter(|&i| sieve[i]).map(|i| i as u64).collect()
});

/// Complete prime factorization of a positive integer, primes strictly
/// increasing. The sign flag records the sign of the factored value; the
/// validated constructor path only ever stores positive inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(BigUint, u32)>,
    negative: bool,
}

impl Factorization {
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// Multiplies the factorization back together.
    pub fn product(&self) -> BigInt {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        let acc = BigInt::from(acc);
        if self.negative {
            -acc
        } else {
            acc
        }
    }
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Brent's cycle variant of Pollard rho on u64, deterministic parameters.
/// Returns a nontrivial factor or None once the budget is spent.
fn brent_rho_u64(n: u64, budget: &mut u64) -> Option<u64> {
    debug_assert!(n > 1 && n % 2 == 1);
    for c in 1u64.. {
        let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                let batch = 128.min(r - k);
                if *budget < batch {
                    return None;
                }
                *budget -= batch;
                for _ in 0..batch {
                    y = f(y);
                    q = mul_mod_u64(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += batch;
            }
            r *= 2;
        }
        if g == n {
            // backtrack one by one
            g = 1;
            let mut y2 = ys;
            while g == 1 {
                y2 = f(y2);
                g = x.abs_diff(y2).gcd(&n);
            }
        }
        if g != n {
            return Some(g);
        }
        // cycle degenerated; retry with the next polynomial offset
        if *budget == 0 {
            return None;
        }
    }
    unreachable!()
}

/// Brent rho over BigUint for inputs beyond u64.
fn brent_rho_big(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    let one = BigUint::one();
    for c in 1u64.. {
        let cb = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cb) % n;
        let mut y = BigUint::from(2u8);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0u64;
            while k < r && g.is_one() {
                ys = y.clone();
                let batch = 128.min(r - k);
                if *budget < batch {
                    return None;
                }
                *budget -= batch;
                for _ in 0..batch {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += batch;
            }
            r *= 2;
        }
        if g == *n {
            g = one.clone();
            let mut y2 = ys;
            while g.is_one() {
                y2 = f(&y2);
                let diff = if x > y2 { &x - &y2 } else { &y2 - &x };
                g = diff.gcd(n);
            }
        }
        if g != *n {
            return Some(g);
        }
        if *budget == 0 {
            return None;
        }
    }
    unreachable!()
}

fn rho_factor(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    if let Some(small) = n.to_u64() {
        brent_rho_u64(small, budget).map(BigUint::from)
    } else {
        brent_rho_big(n, budget)
    }
}

/// Complete factorization of n ≥ 1. Deterministic for fixed n. When the
/// rho budget runs out, returns the partial factorization and the
/// unfactored cofactor so the caller can shrink its window.
pub fn factorize(n: &BigInt) -> Result<Factorization> {
    if n < &BigInt::one() {
        return Err(Error::InvalidArgument(format!(
            "factorize requires n >= 1, got {n}"
        )));
    }
    let mut remaining = n.magnitude().clone();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();

    for &p in SMALL_PRIMES.iter() {
        if remaining.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > remaining {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = remaining.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            remaining = q;
            e += 1;
        }
        if e > 0 {
            factors.push((pb, e));
        }
    }

    // peel the rest with rho, one budget per composite encountered
    let mut stack = Vec::new();
    if !remaining.is_one() {
        stack.push(remaining);
    }
    let mut large: Vec<BigUint> = Vec::new();
    while let Some(m) = stack.pop() {
        if is_prime(&m) {
            large.push(m);
            continue;
        }
        let mut budget = RHO_BUDGET;
        match rho_factor(&m, &mut budget) {
            Some(d) => {
                let q = &m / &d;
                stack.push(d);
                stack.push(q);
            }
            None => {
                for p in large {
                    merge_factor(&mut factors, p, 1);
                }
                let partial = factors
                    .into_iter()
                    .map(|(p, e)| (BigInt::from(p), e))
                    .collect();
                return Err(Error::EffortExceeded {
                    partial,
                    remaining: BigInt::from(m),
                });
            }
        }
    }
    for p in large {
        merge_factor(&mut factors, p, 1);
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Factorization {
        factors,
        negative: false,
    })
}

fn merge_factor(factors: &mut Vec<(BigUint, u32)>, p: BigUint, e: u32) {
    if let Some(entry) = factors.iter_mut().find(|(q, _)| *q == p) {
        entry.1 += e;
    } else {
        factors.push((p, e));
    }
}
