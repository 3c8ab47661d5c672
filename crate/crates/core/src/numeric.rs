//! Arbitrary-precision complex evaluation.
//!
//! Complex numbers are pairs of `astro-float` reals. Everything is driven by
//! an explicit [`PrecisionContext`]: `digits` decimal digits of requested
//! precision, computed internally with 10 guard digits, and a pole tolerance
//! (default `10^{-ceil(digits/2)}`) below which arguments are considered to
//! sit on a cotangent pole. There is no hidden global precision state; the
//! constants cache is thread-local.

use std::cell::RefCell;
use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;

use crate::cyclotomic::CycloElement;
use crate::error::{Error, Result};
use crate::rational::BigRational;
use crate::report::{params, ValueRepr, VerificationReport};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Working precision and pole tolerance for numeric evaluation.
#[derive(Debug, Clone)]
pub struct PrecisionContext {
    digits: u32,
    bits: usize,
    pole_tolerance: BigFloat,
}

impl PrecisionContext {
    /// `digits` decimal digits, pole tolerance `10^{-ceil(digits/2)}`.
    pub fn new(digits: u32) -> Self {
        let digits = digits.max(4);
        let bits = Self::bits_for(digits);
        let tol_exp = -((digits as i64 + 1) / 2);
        PrecisionContext {
            digits,
            bits,
            pole_tolerance: pow10(tol_exp, bits),
        }
    }

    /// Overrides the pole tolerance with `10^{tol_log10}`; must stay < 1/4.
    pub fn with_pole_tolerance(digits: u32, tol_log10: i64) -> Result<Self> {
        if tol_log10 >= 0 {
            return Err(Error::InvalidSpec(
                "pole tolerance must be below 1/4".to_string(),
            ));
        }
        let mut ctx = PrecisionContext::new(digits);
        ctx.pole_tolerance = pow10(tol_log10, ctx.bits);
        Ok(ctx)
    }

    fn bits_for(digits: u32) -> usize {
        // 10 guard digits: compute wider, compare at the requested digits.
        (((digits + 10) as f64) * std::f64::consts::LOG2_10).ceil() as usize + 8
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn pole_tolerance(&self) -> &BigFloat {
        &self.pole_tolerance
    }

    /// Comparison threshold `10^{-digits + guard}` for agreement checks.
    pub fn agreement_tolerance(&self, guard: u32) -> BigFloat {
        pow10(-(self.digits as i64) + guard as i64, self.bits)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext::new(60)
    }
}

pub fn bf_from_i64(v: i64, p: usize) -> BigFloat {
    BigFloat::from_i64(v, p)
}

pub fn bf_from_bigint(v: &BigInt, p: usize) -> BigFloat {
    with_consts(|cc| BigFloat::parse(&v.to_string(), Radix::Dec, p, RM, cc))
}

pub fn bf_from_rational(q: &BigRational, p: usize) -> BigFloat {
    bf_from_bigint(q.numer(), p).div(&bf_from_bigint(q.denom(), p), p, RM)
}

pub fn bf_parse(s: &str, p: usize) -> BigFloat {
    with_consts(|cc| BigFloat::parse(s, Radix::Dec, p, RM, cc))
}

/// `10^k` at precision `p` bits.
pub fn pow10(k: i64, p: usize) -> BigFloat {
    let ten = BigFloat::from_i8(10, p);
    if k >= 0 {
        ten.powi(k as usize, p, RM)
    } else {
        BigFloat::from_i8(1, p).div(&ten.powi((-k) as usize, p, RM), p, RM)
    }
}

pub fn pi(p: usize) -> BigFloat {
    with_consts(|cc| cc.pi(p, RM))
}

fn bf_lt(a: &BigFloat, b: &BigFloat) -> bool {
    matches!(a.partial_cmp(b), Some(Ordering::Less))
}

/// `|x| < 10^{-digits + guard}`?
pub fn bf_small(x: &BigFloat, ctx: &PrecisionContext, guard: u32) -> bool {
    bf_lt(&x.abs(), &ctx.agreement_tolerance(guard))
}

/// Distance from a real number to the nearest integer.
fn dist_to_int_real(x: &BigFloat, p: usize) -> BigFloat {
    x.sub(&x.round(0, RM), p, RM).abs()
}

/// An arbitrary-precision complex number.
#[derive(Debug, Clone)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(p: usize) -> Self {
        BigComplex::new(BigFloat::from_i8(0, p), BigFloat::from_i8(0, p))
    }

    pub fn from_rational(q: &BigRational, p: usize) -> Self {
        BigComplex::new(bf_from_rational(q, p), BigFloat::from_i8(0, p))
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        BigComplex::new(BigFloat::from_f64(re, p), BigFloat::from_f64(im, p))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self, p: usize) -> Self {
        BigComplex::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM))
    }

    pub fn add_real(&self, x: &BigFloat, p: usize) -> Self {
        BigComplex::new(self.re.add(x, p, RM), self.im.clone())
    }

    pub fn sub(&self, o: &Self, p: usize) -> Self {
        BigComplex::new(self.re.sub(&o.re, p, RM), self.im.sub(&o.im, p, RM))
    }

    pub fn neg(&self) -> Self {
        BigComplex::new(self.re.neg(), self.im.neg())
    }

    pub fn mul(&self, o: &Self, p: usize) -> Self {
        let re = self
            .re
            .mul(&o.re, p, RM)
            .sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self
            .re
            .mul(&o.im, p, RM)
            .add(&self.im.mul(&o.re, p, RM), p, RM);
        BigComplex::new(re, im)
    }

    pub fn scale(&self, s: &BigFloat, p: usize) -> Self {
        BigComplex::new(self.re.mul(s, p, RM), self.im.mul(s, p, RM))
    }

    pub fn div(&self, o: &Self, p: usize) -> Self {
        let den = o
            .re
            .mul(&o.re, p, RM)
            .add(&o.im.mul(&o.im, p, RM), p, RM);
        let re = self
            .re
            .mul(&o.re, p, RM)
            .add(&self.im.mul(&o.im, p, RM), p, RM)
            .div(&den, p, RM);
        let im = self
            .im
            .mul(&o.re, p, RM)
            .sub(&self.re.mul(&o.im, p, RM), p, RM)
            .div(&den, p, RM);
        BigComplex::new(re, im)
    }

    /// Euclidean magnitude.
    pub fn abs(&self, p: usize) -> BigFloat {
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
            .sqrt(p, RM)
    }

    /// Distance from the nearest integer (in the complex plane).
    pub fn dist_to_int(&self, p: usize) -> BigFloat {
        let fr = dist_to_int_real(&self.re, p);
        fr.mul(&fr, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
            .sqrt(p, RM)
    }

    pub fn to_repr(&self, digits: u32) -> ValueRepr {
        ValueRepr::Complex {
            re: format_bigfloat(&self.re, digits),
            im: format_bigfloat(&self.im, digits),
            digits,
        }
    }
}

/// Rounds a value to roughly `digits` significant decimal digits and
/// renders it; used for display only.
pub fn format_bigfloat(x: &BigFloat, digits: u32) -> String {
    let p = ((digits as f64) * std::f64::consts::LOG2_10).ceil() as usize;
    let mut y = x.clone();
    // set_precision rounds the mantissa; ignore failures on inf/nan
    let _ = y.set_precision(p.max(64), RM);
    format!("{y}")
}

fn sin_cos(x: &BigFloat, p: usize) -> (BigFloat, BigFloat) {
    with_consts(|cc| (x.sin(p, RM, cc), x.cos(p, RM, cc)))
}

fn sinh_cosh(x: &BigFloat, p: usize) -> (BigFloat, BigFloat) {
    with_consts(|cc| (x.sinh(p, RM, cc), x.cosh(p, RM, cc)))
}

fn near_pole_error(dist: &BigFloat) -> Error {
    let exp10 = dist
        .exponent()
        .map(|e| (e as f64 * std::f64::consts::LOG10_2).floor() as i64)
        .unwrap_or(i64::MIN);
    Error::NearPole { dist_log10: exp10 }
}

/// `cot(pi w)` at working precision. Errors when `w` is within the pole
/// tolerance of an integer.
///
/// Uses `sin(pi(x+iy)) = sin(pi x) cosh(pi y) + i cos(pi x) sinh(pi y)` and
/// the matching cosine identity, so only real-argument functions are needed.
pub fn cot_numeric(w: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    let p = ctx.bits();
    let d = w.dist_to_int(p);
    if bf_lt(&d, ctx.pole_tolerance()) {
        return Err(near_pole_error(&d));
    }
    let pi_v = pi(p);
    // Reduce the real part modulo 1 before scaling by pi: sin/cos of pi*x
    // via x mod 1 keeps the argument small without changing cot(pi w).
    let xr = w.re.sub(&w.re.round(0, RM), p, RM);
    let px = pi_v.mul(&xr, p, RM);
    let py = pi_v.mul(&w.im, p, RM);
    let (s, c) = sin_cos(&px, p);
    let (sh, ch) = sinh_cosh(&py, p);
    let sin_c = BigComplex::new(s.mul(&ch, p, RM), c.mul(&sh, p, RM));
    let cos_c = BigComplex::new(c.mul(&ch, p, RM), s.mul(&sh, p, RM).neg());
    Ok(cos_c.div(&sin_c, p))
}

/// `coth(pi w)`; poles sit at `w` in `i Z`.
pub fn coth_numeric(w: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    let p = ctx.bits();
    let fr = dist_to_int_real(&w.im, p);
    let d = w
        .re
        .mul(&w.re, p, RM)
        .add(&fr.mul(&fr, p, RM), p, RM)
        .sqrt(p, RM);
    if bf_lt(&d, ctx.pole_tolerance()) {
        return Err(near_pole_error(&d));
    }
    let pi_v = pi(p);
    let a = pi_v.mul(&w.re, p, RM);
    let yr = w.im.sub(&w.im.round(0, RM), p, RM);
    let b = pi_v.mul(&yr, p, RM);
    let (s, c) = sin_cos(&b, p);
    let (sh, ch) = sinh_cosh(&a, p);
    // sinh(a+ib) = sinh a cos b + i cosh a sin b
    let sinh_c = BigComplex::new(sh.mul(&c, p, RM), ch.mul(&s, p, RM));
    let cosh_c = BigComplex::new(ch.mul(&c, p, RM), sh.mul(&s, p, RM));
    Ok(cosh_c.div(&sinh_c, p))
}

/// Distribution identity for the hyperbolic cotangent:
/// `sum_{k mod a} coth(pi (i k / a + z)) = a coth(pi a z)`.
pub fn coth_distribution_check(
    a: u64,
    z: &BigComplex,
    ctx: &PrecisionContext,
) -> Result<VerificationReport> {
    let p = ctx.bits();
    let mut lhs = BigComplex::zero(p);
    for k in 0..a {
        let karg = BigComplex::new(
            z.re.clone(),
            z.im.add(
                &bf_from_i64(k as i64, p).div(&bf_from_i64(a as i64, p), p, RM),
                p,
                RM,
            ),
        );
        lhs = lhs.add(&coth_numeric(&karg, ctx)?, p);
    }
    let az = z.scale(&bf_from_i64(a as i64, p), p);
    let rhs = coth_numeric(&az, ctx)?.scale(&bf_from_i64(a as i64, p), p);
    let residual = lhs.sub(&rhs, p).abs(p);
    let pass = bf_lt(&residual, &ctx.agreement_tolerance(10));
    Ok(VerificationReport::numeric(
        "coth-distribution",
        params(&[
            ("a", a.to_string()),
            ("z", format!("{}", z.to_repr(ctx.digits()))),
        ]),
        lhs.to_repr(ctx.digits()),
        rhs.to_repr(ctx.digits()),
        ValueRepr::Complex {
            re: format_bigfloat(&residual, 8),
            im: "0".to_string(),
            digits: ctx.digits(),
        },
        pass,
    ))
}

/// Numeric image of a cyclotomic element:
/// `sum_j c_j e^{2 pi i j / n}` at the requested precision.
pub fn cyclo_to_complex(u: &CycloElement, ctx: &PrecisionContext) -> BigComplex {
    let p = ctx.bits();
    let n = u.conductor();
    let two_pi_over_n = pi(p)
        .mul(&BigFloat::from_i8(2, p), p, RM)
        .div(&bf_from_i64(n as i64, p), p, RM);
    let mut acc = BigComplex::zero(p);
    for (j, c) in u.coeffs().iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let ang = two_pi_over_n.mul(&bf_from_i64(j as i64, p), p, RM);
        let (s, co) = sin_cos(&ang, p);
        let w = BigComplex::new(co, s).scale(&bf_from_rational(c, p), p);
        acc = acc.add(&w, p);
    }
    acc
}
