//! Multiplicative number theory and gcd machinery: divisors, Euler phi,
//! the Moebius function, divisor power sums, modular inverses, and the
//! three-term Bezout identity used by the Dieter reciprocity law.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat_int, BigRational};

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn is_pairwise_coprime(values: &[u64]) -> bool {
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if gcd_u64(values[i], values[j]) != 1 {
                return false;
            }
        }
    }
    true
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, sorted ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let base = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(base.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Radical of `n` (product of its distinct prime factors).
pub fn radical(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, _)| p).product()
}

/// Moebius function: 1 at n = 1, `(-1)^m` for a square-free product of `m`
/// primes, 0 otherwise.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1);
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Divisor power sum `sigma_m(n) = sum_{d | n} d^m`; `m` may be negative,
/// in which case the result is a rational.
pub fn divisor_sigma(m: i64, n: u64) -> BigRational {
    assert!(n >= 1);
    let mut acc = BigRational::zero();
    for d in divisors(n) {
        let dq = rat_int(d as i64);
        acc += if m >= 0 {
            dq.pow(m as i32)
        } else {
            dq.pow(m as i32)
        };
    }
    acc
}

/// Extended Euclid on big integers: `(g, x, y)` with `a*x + b*y = g >= 0`.
pub fn extended_gcd_int(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut x0 = BigInt::one();
    let mut x1 = BigInt::zero();
    let mut y0 = BigInt::zero();
    let mut y1 = BigInt::one();
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        let x = &x0 - &q * &x1;
        let y = &y0 - &q * &y1;
        r0 = std::mem::replace(&mut r1, r);
        x0 = std::mem::replace(&mut x1, x);
        y0 = std::mem::replace(&mut y1, y);
    }
    if r0.is_negative() {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Inverse of `a` modulo `b`, in `[1, b]`. By convention the inverse
/// modulo 1 is 1.
pub fn mod_inverse(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    assert!(b.is_positive(), "modulus must be positive");
    let (g, x, _) = extended_gcd_int(a, b);
    if !g.is_one() {
        return Err(Error::NotCoprime {
            a: a.to_string(),
            b: b.to_string(),
            g: g.to_string(),
        });
    }
    let r = x.mod_floor(b);
    if r.is_zero() {
        Ok(BigInt::one()) // only possible for b = 1
    } else {
        Ok(r)
    }
}

pub fn mod_inverse_u64(a: u64, b: u64) -> Result<u64> {
    let r = mod_inverse(&BigInt::from(a), &BigInt::from(b))?;
    Ok(u64::try_from(r).unwrap())
}

/// Integers `(A, B, C)` with `A*bc + B*ca + C*ab = 1` for pairwise coprime
/// `a, b, c`. Solved by chaining two extended-gcd computations: first
/// `u*c + v*ab = 1`, then `p*b + q*a = 1`, giving `(up, uq, v)`.
pub fn three_term_bezout(a: u64, b: u64, c: u64) -> Result<(BigInt, BigInt, BigInt)> {
    for (x, y) in [(a, b), (a, c), (b, c)] {
        let g = gcd_u64(x, y);
        if g != 1 {
            return Err(Error::NotCoprime {
                a: x.to_string(),
                b: y.to_string(),
                g: g.to_string(),
            });
        }
    }
    let (a, b, c) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
    let ab = &a * &b;
    let (g1, u, v) = extended_gcd_int(&c, &ab);
    debug_assert!(g1.is_one());
    let (g2, p, q) = extended_gcd_int(&b, &a);
    debug_assert!(g2.is_one());
    let big_a = &u * &p;
    let big_b = &u * &q;
    debug_assert!((&big_a * &b * &c + &big_b * &c * &a + &v * &ab).is_one());
    Ok((big_a, big_b, v))
}

/// Exact big binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact big factorial.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}
