//! Symbolic cotangent derivative machinery.
//!
//! Every derivative of the cotangent is an integer polynomial in the
//! cotangent itself: `cot^{(m)}(x) = P_m(cot x)` with `P_0(c) = c` and
//! `P_{m+1}(c) = -(1 + c^2) P_m'(c)`. Representing derivatives through `P_m`
//! keeps the exact (cyclotomic) and numeric evaluation paths on a single
//! code path.
//!
//! The module also provides the Laurent data of `cot^{(m)}(pi a z)` about
//! `z = 0`. Powers of pi are tracked symbolically by exponent: the stored
//! rational at `z^j` is the true coefficient divided by `pi^j`, which keeps
//! identities built from these series exact.

use std::sync::Mutex;

use num_traits::Zero;
use once_cell::sync::Lazy;

use crate::bernoulli::bernoulli_number;
use crate::error::Result;
use crate::numeric::{BigComplex, PrecisionContext};
use crate::numtheory::factorial;
use crate::poly::IntPolynomial;
use crate::rational::{rat_int, sign_pow, BigRational};

/// The polynomial `P_m` with `cot^{(m)}(x) = P_m(cot x)`.
///
/// Invariants: `deg P_m = m + 1` and `P_m(-c) = (-1)^{m+1} P_m(c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotDerivPoly {
    pub order: u32,
    pub poly: IntPolynomial,
}

static DERIV_CACHE: Lazy<Mutex<Vec<IntPolynomial>>> =
    Lazy::new(|| Mutex::new(vec![IntPolynomial::from_i64(&[0, 1])]));

pub fn cot_derivative_polynomial(m: u32) -> CotDerivPoly {
    let m = m as usize;
    let mut cache = DERIV_CACHE.lock().unwrap();
    let one_plus_c2 = IntPolynomial::from_i64(&[1, 0, 1]);
    while cache.len() <= m {
        let last = cache.last().unwrap();
        let next = one_plus_c2.mul(&last.derivative()).neg();
        cache.push(next);
    }
    CotDerivPoly {
        order: m as u32,
        poly: cache[m].clone(),
    }
}

/// A truncated Laurent series around `z = 0` whose coefficient at `z^j`
/// implicitly carries a factor `pi^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    min_exp: i64,
    coeffs: Vec<BigRational>,
}

impl LaurentSeries {
    pub fn new(min_exp: i64, coeffs: Vec<BigRational>) -> Self {
        LaurentSeries { min_exp, coeffs }
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `z^exp` (rational part; the true coefficient is this
    /// times `pi^exp`). Zero outside the stored window.
    pub fn coeff(&self, exp: i64) -> BigRational {
        if exp < self.min_exp || exp > self.max_exp() {
            BigRational::zero()
        } else {
            self.coeffs[(exp - self.min_exp) as usize].clone()
        }
    }

    /// Truncated product. The result is valid up to the largest exponent
    /// both factors can support.
    pub fn mul(&self, other: &Self) -> Self {
        let min = self.min_exp + other.min_exp;
        let max = (self.min_exp + other.max_exp()).min(other.min_exp + self.max_exp());
        let mut coeffs = vec![BigRational::zero(); (max - min + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ei = self.min_exp + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let e = ei + other.min_exp + j as i64;
                if e <= max {
                    coeffs[(e - min) as usize] += a * b;
                }
            }
        }
        LaurentSeries::new(min, coeffs)
    }
}

/// Laurent expansion of `cot^{(m)}(pi a z)` about `z = 0`, up to `z^order`:
/// principal part `(-1)^m m! / (pi a)^{m+1} z^{-(m+1)}` plus the tail
/// `sum_{2k >= m+1} (-1)^k 2^{2k-1} B_{2k} / (k (2k-1-m)!) (pi a)^{2k-1-m}
/// z^{2k-1-m}`.
pub fn cot_laurent_coefficients(m: u32, a: u64, order: i64) -> LaurentSeries {
    let min_exp = -(m as i64) - 1;
    assert!(order >= min_exp, "order below the principal part");
    let mut coeffs = vec![BigRational::zero(); (order - min_exp + 1) as usize];
    // principal: (-1)^m m! / a^{m+1}
    let a_q = rat_int(a as i64);
    coeffs[0] = sign_pow(m as i64) * BigRational::from_integer(factorial(m as u64))
        / a_q.pow(m as i32 + 1);
    // tail at j = 2k - 1 - m for 2k >= m + 1
    let mut j = if m % 2 == 0 { 1i64 } else { 0i64 };
    while j <= order {
        let k = (j + m as i64 + 1) / 2;
        let b2k = bernoulli_number(2 * k as u32);
        if !b2k.is_zero() {
            let c = sign_pow(k) * rat_int(2).pow(2 * k as i32 - 1) * b2k
                / (rat_int(k) * BigRational::from_integer(factorial(j as u64)))
                * a_q.pow(j as i32);
            coeffs[(j - min_exp) as usize] = c;
        }
        j += 2;
    }
    LaurentSeries::new(min_exp, coeffs)
}

/// Numeric `cot^{(m)}(pi w)`: `P_m` evaluated at the high-precision
/// `cot(pi w)`.
pub fn cot_derivative_numeric(
    m: u32,
    w: &BigComplex,
    ctx: &PrecisionContext,
) -> Result<BigComplex> {
    let c = crate::numeric::cot_numeric(w, ctx)?;
    let poly = cot_derivative_polynomial(m);
    let p = ctx.bits();
    let mut acc = BigComplex::zero(p);
    for coeff in poly.poly.coeffs().iter().rev() {
        acc = acc.mul(&c, p);
        if !coeff.is_zero() {
            acc = acc.add_real(&crate::numeric::bf_from_bigint(coeff, p), p);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn first_polynomials() {
        assert_eq!(
            cot_derivative_polynomial(0).poly,
            IntPolynomial::from_i64(&[0, 1])
        );
        assert_eq!(
            cot_derivative_polynomial(1).poly,
            IntPolynomial::from_i64(&[-1, 0, -1])
        );
        assert_eq!(
            cot_derivative_polynomial(2).poly,
            IntPolynomial::from_i64(&[0, 2, 0, 2])
        );
    }

    #[test]
    fn degree_and_parity() {
        for m in 0..=20u32 {
            let p = cot_derivative_polynomial(m).poly;
            assert_eq!(p.degree(), Some(m as usize + 1), "degree of P_{m}");
            // P_m(-c) = (-1)^{m+1} P_m(c): coefficients of parity != m+1 vanish
            for (e, c) in p.coeffs().iter().enumerate() {
                if e % 2 != (m as usize + 1) % 2 {
                    assert!(c.is_zero(), "parity violation in P_{m} at degree {e}");
                }
            }
        }
    }

    #[test]
    fn recurrence_holds_symbolically() {
        let one_plus_c2 = IntPolynomial::from_i64(&[1, 0, 1]);
        for m in 0..=20u32 {
            let pm = cot_derivative_polynomial(m).poly;
            let pm1 = cot_derivative_polynomial(m + 1).poly;
            assert_eq!(pm1, one_plus_c2.mul(&pm.derivative()).neg());
        }
    }

    #[test]
    fn laurent_examples() {
        let s = cot_laurent_coefficients(0, 1, 1);
        assert_eq!(s.coeff(-1), rat(1, 1)); // 1/pi
        assert_eq!(s.coeff(0), rat(0, 1));
        assert_eq!(s.coeff(1), rat(-1, 3)); // -pi/3

        let s = cot_laurent_coefficients(1, 1, 0);
        assert_eq!(s.coeff(-2), rat(-1, 1)); // -1/pi^2
        assert_eq!(s.coeff(0), rat(-1, 3));

        let s = cot_laurent_coefficients(0, 2, -1);
        assert_eq!(s.coeff(-1), rat(1, 2)); // 1/(2 pi)
    }

    /// d/dz cot^{(m)}(pi a z) = pi a cot^{(m+1)}(pi a z); in stored
    /// (pi-power = z-power) form this reads j c_j = a c'_{j-1}.
    #[test]
    fn series_derivative_consistency() {
        for m in 0..4u32 {
            for a in 1..4u64 {
                let s = cot_laurent_coefficients(m, a, 8);
                let ds = cot_laurent_coefficients(m + 1, a, 7);
                for j in s.min_exp()..=8 {
                    assert_eq!(
                        rat_int(j) * s.coeff(j),
                        rat_int(a as i64) * ds.coeff(j - 1),
                        "m = {m}, a = {a}, j = {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn laurent_product_window() {
        let a = cot_laurent_coefficients(0, 1, 5);
        let b = cot_laurent_coefficients(1, 2, 5);
        let p = a.mul(&b);
        assert_eq!(p.min_exp(), -3);
        assert_eq!(p.max_exp(), 4); // min(-1 + 5, -2 + 5)
        // leading coefficient: 1 * (-1/4)
        assert_eq!(p.coeff(-3), rat(-1, 4));
    }
}
