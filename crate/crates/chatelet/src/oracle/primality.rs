//! Primality testing: deterministic Miller–Rabin below 2⁶⁴, strong
//! probable-prime testing (40 deterministic-seeded bases) plus a strong
//! Lucas test above.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Witness set proving primality for all n < 2⁶⁴ (Sinclair's bases).
const U64_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

const EXTRA_BASE_ROUNDS: usize = 40;

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &U64_BASES {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime(n: &BigUint, base: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = base.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    debug_assert!(n.is_odd() && n > &BigInt::zero());
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1i32;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = (&n % 8u8).to_u8().unwrap();
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u8).to_u8().unwrap() == 3 && (&n % 4u8).to_u8().unwrap() == 3 {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
fn strong_lucas(n: &BigUint) -> bool {
    let n_int = BigInt::from(n.clone());
    // perfect squares never pass parameter selection; reject them up front
    let root = n.sqrt();
    if &root * &root == *n {
        return false;
    }
    // first D in 5, −7, 9, −11, … with (D/n) = −1
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, &n_int) {
            -1 => break,
            0 => {
                if d.magnitude() < n {
                    return false; // proper factor found
                }
            }
            _ => {}
        }
        d = if d > BigInt::zero() {
            -(d + BigInt::from(2))
        } else {
            -(d - BigInt::from(2))
        };
    }
    let p = BigInt::one();
    let q = (BigInt::one() - &d) / BigInt::from(4);

    // strong test on n + 1 = 2^s · t
    let n_plus_1 = n + BigUint::one();
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let t = &n_plus_1 >> s;

    // Lucas sequences by binary ladder on (U, V, Q^k)
    let modn = |x: &BigInt| x.mod_floor(&n_int);
    let half = |x: &BigInt| -> BigInt {
        // divide by 2 mod n (n odd)
        if x.is_even() {
            modn(&(x / 2))
        } else {
            modn(&((x + &n_int) / 2))
        }
    };
    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.clone();
    let bits = t.bits();
    for i in (0..bits - 1).rev() {
        // double
        u = modn(&(&u * &v));
        v = modn(&(&v * &v - BigInt::from(2) * &qk));
        qk = modn(&(&qk * &qk));
        if t.bit(i) {
            let u_new = half(&(&u * &p + &v));
            let v_new = half(&(&d * &u + &v * &p));
            u = modn(&u_new);
            v = modn(&v_new);
            qk = modn(&(&qk * &q));
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 0..s.saturating_sub(1) {
        v = modn(&(&v * &v - BigInt::from(2) * &qk));
        if v.is_zero() {
            return true;
        }
        qk = modn(&(&qk * &qk));
    }
    false
}

/// Probabilistic beyond 2⁶⁴ (strong bases + strong Lucas), deterministic
/// below. The extra bases are seeded from n itself so verdicts are
/// reproducible across runs.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let two = BigUint::from(2u8);
    if !strong_probable_prime(n, &two) {
        return false;
    }
    if !strong_lucas(n) {
        return false;
    }
    let mut seed = [0u8; 32];
    for (i, byte) in n.to_bytes_le().iter().enumerate().take(32) {
        seed[i] = *byte;
    }
    let mut rng = ChaCha8Rng::from_seed(seed);
    let low = BigUint::from(2u8);
    let high = n - BigUint::from(2u8);
    for _ in 0..EXTRA_BASE_ROUNDS {
        let base = rng.gen_biguint_range(&low, &high);
        if !strong_probable_prime(n, &base) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use std::str::FromStr;

    #[test]
    fn small_primes_and_composites() {
        let primes = [2u64, 3, 5, 7, 11, 373, 1117, 2147483647];
        let composites = [0u64, 1, 4, 9, 341, 561, 25326001, 3215031751];
        for p in primes {
            assert!(is_prime(&BigUint::from(p)), "{p} should be prime");
        }
        for c in composites {
            assert!(!is_prime(&BigUint::from(c)), "{c} should be composite");
        }
    }

    #[test]
    fn agrees_with_sieve_below_10000() {
        let limit = 10_000usize;
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
        for n in 0..limit {
            assert_eq!(is_prime(&BigUint::from(n)), sieve[n], "mismatch at {n}");
        }
    }

    #[test]
    fn large_known_values() {
        // 2^89 − 1 is a Mersenne prime
        let m89 = (BigUint::one() << 89) - BigUint::one();
        assert!(is_prime(&m89));
        // 2^87 − 1 is composite
        let m87 = (BigUint::one() << 87) - BigUint::one();
        assert!(!is_prime(&m87));
        // 10^24 + 7 is prime, 10^24 + 1 is not
        let p = BigUint::from_str("1000000000000000000000007").unwrap();
        assert!(is_prime(&p));
        let c = BigUint::from_str("1000000000000000000000001").unwrap();
        assert!(!is_prime(&c));
        // square of a large prime must fail
        let p31 = BigUint::from(2147483647u64);
        assert!(!is_prime(&(&p31 * &p31 * &p31)));
    }
}
