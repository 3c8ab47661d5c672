//! Bernoulli numbers, Bernoulli polynomials, periodized Bernoulli functions,
//! and the sawtooth function.
//!
//! Bernoulli numbers come from the recurrence implied by the generating
//! function `z e^{xz} / (e^z - 1)`:
//! `sum_{j=0}^{k} C(k+1, j) B_j = 0` for `k >= 1`, with `B_0 = 1`.
//! Values are memoized in an append-only cache behind a mutex, so concurrent
//! callers are safe.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::numtheory::binomial;
use crate::poly::RationalPolynomial;
use crate::rational::{fract, is_integer, rat, BigRational};

static BERNOULLI_CACHE: Lazy<Mutex<Vec<BigRational>>> =
    Lazy::new(|| Mutex::new(vec![BigRational::one()]));

/// The Bernoulli number `B_k` (convention `B_1 = -1/2`).
pub fn bernoulli_number(k: u32) -> BigRational {
    let k = k as usize;
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    while cache.len() <= k {
        let m = cache.len(); // computing B_m
        if m % 2 == 1 && m > 1 {
            cache.push(BigRational::zero());
            continue;
        }
        let mut acc = BigRational::zero();
        for (j, bj) in cache.iter().enumerate() {
            if !bj.is_zero() {
                acc += BigRational::from_integer(binomial(m as u64 + 1, j as u64)) * bj;
            }
        }
        let denom = BigRational::from_integer(BigInt::from(m + 1));
        cache.push(-acc / denom);
    }
    cache[k].clone()
}

/// The Bernoulli polynomial `B_k(x) = sum_j C(k, j) B_j x^{k-j}`.
pub fn bernoulli_polynomial(k: u32) -> RationalPolynomial {
    let mut coeffs = vec![BigRational::zero(); k as usize + 1];
    for j in 0..=k {
        let b = bernoulli_number(j);
        if !b.is_zero() {
            coeffs[(k - j) as usize] =
                BigRational::from_integer(binomial(k as u64, j as u64)) * b;
        }
    }
    RationalPolynomial::new(coeffs)
}

/// Sawtooth `((x))`: fractional part minus 1/2, but 0 at the integers.
pub fn sawtooth(x: &BigRational) -> BigRational {
    if is_integer(x) {
        BigRational::zero()
    } else {
        fract(x) - rat(1, 2)
    }
}

/// Periodized Bernoulli function `B-bar_k(x) = B_k({x})`. For `k = 1` this
/// adopts the sawtooth convention and is 0 at the integers.
pub fn bernoulli_function(k: u32, x: &BigRational) -> BigRational {
    assert!(k >= 1);
    if k == 1 {
        sawtooth(x)
    } else {
        bernoulli_polynomial(k).eval(&fract(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use proptest::prelude::*;

    fn listed_polynomials() -> Vec<(u32, RationalPolynomial)> {
        // B_1 .. B_5 as displayed coefficient lists (ascending degree).
        vec![
            (1, RationalPolynomial::new(vec![rat(-1, 2), rat_int(1)])),
            (
                2,
                RationalPolynomial::new(vec![rat(1, 6), rat_int(-1), rat_int(1)]),
            ),
            (
                3,
                RationalPolynomial::new(vec![rat_int(0), rat(1, 2), rat(-3, 2), rat_int(1)]),
            ),
            (
                4,
                RationalPolynomial::new(vec![
                    rat(-1, 30),
                    rat_int(0),
                    rat_int(1),
                    rat_int(-2),
                    rat_int(1),
                ]),
            ),
            (
                5,
                RationalPolynomial::new(vec![
                    rat_int(0),
                    rat(-1, 6),
                    rat_int(0),
                    rat(5, 3),
                    rat(-5, 2),
                    rat_int(1),
                ]),
            ),
        ]
    }

    #[test]
    fn bernoulli_numbers_small() {
        assert_eq!(bernoulli_number(0), rat_int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(7), rat_int(0));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
        for k in (3..=21).step_by(2) {
            assert!(bernoulli_number(k).is_zero());
        }
    }

    #[test]
    fn bernoulli_polynomials_match_listed() {
        assert_eq!(bernoulli_polynomial(0), RationalPolynomial::one());
        for (k, expected) in listed_polynomials() {
            assert_eq!(bernoulli_polynomial(k), expected, "B_{k}(x)");
        }
    }

    /// Truncation of `z e^{xz} / (e^z - 1)` computed by power-series
    /// inversion with polynomial coefficients; independent of the
    /// recurrence used by `bernoulli_number`.
    fn generating_function_series(order: usize) -> Vec<RationalPolynomial> {
        use crate::numtheory::factorial;
        // z e^{xz} = sum_{k>=1} x^{k-1}/(k-1)! z^k, so after dividing by
        // z (e^z - 1)/z we need  e^{xz} * inv((e^z - 1)/z)  mod z^order.
        let numer: Vec<RationalPolynomial> = (0..order)
            .map(|k| {
                let c = BigRational::from_integer(factorial(k as u64)).recip();
                let mut coeffs = vec![BigRational::zero(); k + 1];
                coeffs[k] = c;
                RationalPolynomial::new(coeffs)
            })
            .collect();
        // d_k = 1/(k+1)!  are the coefficients of (e^z - 1)/z
        let denom: Vec<BigRational> = (0..order)
            .map(|k| BigRational::from_integer(factorial(k as u64 + 1)).recip())
            .collect();
        // Series inversion: inv[0] = 1; inv[k] = -sum_{j=1}^{k} d_j inv[k-j]
        let mut inv = vec![BigRational::zero(); order];
        inv[0] = BigRational::one();
        for k in 1..order {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &denom[j] * &inv[k - j];
            }
            inv[k] = -acc;
        }
        // Product (polynomial-in-x coefficients times rational series)
        (0..order)
            .map(|k| {
                let mut acc = RationalPolynomial::zero();
                for j in 0..=k {
                    acc = acc.add(&numer[j].scale(&inv[k - j]));
                }
                acc
            })
            .collect()
    }

    #[test]
    fn generating_function_matches_polynomials() {
        let order = 12;
        let series = generating_function_series(order);
        for (k, coeff) in series.iter().enumerate() {
            let expected = bernoulli_polynomial(k as u32)
                .scale(&BigRational::from_integer(crate::numtheory::factorial(k as u64)).recip());
            assert_eq!(coeff, &expected, "coefficient of z^{k}");
        }
    }

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(&rat(1, 3)), rat(-1, 6));
        assert_eq!(sawtooth(&rat_int(5)), rat_int(0));
        assert_eq!(sawtooth(&rat(-1, 3)), rat(1, 6));
    }

    #[test]
    fn bernoulli_function_values() {
        assert_eq!(bernoulli_function(2, &rat(1, 2)), rat(-1, 12));
        assert_eq!(bernoulli_function(1, &rat_int(3)), rat_int(0));
        assert_eq!(bernoulli_function(2, &rat(7, 3)), rat(-1, 18));
    }

    #[test]
    fn polynomial_ends_agree_for_k_ge_2() {
        for k in 2..=10 {
            let p = bernoulli_polynomial(k);
            assert_eq!(p.eval(&rat_int(0)), p.eval(&rat_int(1)), "k = {k}");
        }
    }

    proptest! {
        #[test]
        fn sawtooth_is_odd(n in -200i64..200, d in 1i64..40) {
            let x = rat(n, d);
            prop_assert_eq!(sawtooth(&(-&x)), -sawtooth(&x));
        }

        /// Distribution relation: sum_{j mod a} B-bar_k(x + j/a) =
        /// a^{1-k} B-bar_k(a x), for k >= 2.
        #[test]
        fn distribution_relation(k in 2u32..7, a in 1i64..9, n in -40i64..40, d in 1i64..12) {
            let x = rat(n, d);
            let mut lhs = BigRational::zero();
            for j in 0..a {
                lhs += bernoulli_function(k, &(&x + rat(j, a)));
            }
            let rhs = rat(1, a).pow(k as i32 - 1) * bernoulli_function(k, &(rat(a, 1) * &x));
            prop_assert_eq!(lhs, rhs);
        }

        /// The k = 1 (sawtooth) case of the distribution relation holds with
        /// weight 0 thanks to the zero-at-integers convention.
        #[test]
        fn sawtooth_distribution(a in 1i64..9, n in -40i64..40, d in 1i64..12) {
            let x = rat(n, d);
            let mut lhs = BigRational::zero();
            for j in 0..a {
                lhs += sawtooth(&(&x + rat(j, a)));
            }
            prop_assert_eq!(lhs, sawtooth(&(rat(a, 1) * &x)));
        }
    }
}
