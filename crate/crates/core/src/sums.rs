//! Evaluators for the Dedekind cotangent sum and the named special sums it
//! unifies: the classical Dedekind sum, Dedekind-Bernoulli, Apostol,
//! Dedekind-Rademacher (plain and generalized), Dieter cotangent, Berndt,
//! Zagier higher-dimensional, and plane-partition sums.
//!
//! The central object is [`CotSumSpec`], the full parameter block
//! `(a_0 | a_1..a_d; m_0; m_1..m_d; z_0; z_1..z_d)`. Its value is
//! `a_0^{-(m_0+1)} sum_{k mod a_0} prod_j cot^{(m_j)}(pi (a_j (k+z_0)/a_0 - z_j))`,
//! where terms with any integer cotangent argument are singular and skipped.
//! Exact evaluation requires rational shifts and works in cyclotomic fields;
//! numeric evaluation accepts complex shifts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bernoulli::{bernoulli_function, sawtooth};
use crate::cotangent::cot_derivative_numeric;
use crate::cyclotomic::{check_conductor, cot_derivative_exact, CycloElement};
use crate::error::{Error, Result};
use crate::numeric::{bf_from_i64, BigComplex, PrecisionContext};
use crate::numtheory::{gcd_u64, lcm_u64, mod_inverse};
use crate::rational::{denominator_u64, is_integer, rat, rat_int, sign_pow, BigRational};
use crate::value::ExactValue;

/// A sum shift: exact rational or high-precision complex.
#[derive(Debug, Clone)]
pub enum Shift {
    Rational(BigRational),
    Complex(BigComplex),
}

impl Shift {
    pub fn zero() -> Self {
        Shift::Rational(BigRational::zero())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Shift::Rational(q) => Some(q),
            Shift::Complex(_) => None,
        }
    }

    pub fn to_complex(&self, p: usize) -> BigComplex {
        match self {
            Shift::Rational(q) => BigComplex::from_rational(q, p),
            Shift::Complex(c) => c.clone(),
        }
    }
}

impl From<BigRational> for Shift {
    fn from(q: BigRational) -> Self {
        Shift::Rational(q)
    }
}

/// Full parameter block of a Dedekind cotangent sum.
#[derive(Debug, Clone)]
pub struct CotSumSpec {
    pub a0: u64,
    pub a: Vec<u64>,
    pub m0: u32,
    pub m: Vec<u32>,
    pub z0: Shift,
    pub z: Vec<Shift>,
}

impl CotSumSpec {
    pub fn new(
        a0: u64,
        a: Vec<u64>,
        m0: u32,
        m: Vec<u32>,
        z0: Shift,
        z: Vec<Shift>,
    ) -> Result<Self> {
        if a0 == 0 || a.iter().any(|&x| x == 0) {
            return Err(Error::InvalidSpec("moduli must be positive".into()));
        }
        if a.is_empty() || a.len() != m.len() || a.len() != z.len() {
            return Err(Error::InvalidSpec(format!(
                "column counts disagree: a has {}, m has {}, z has {}",
                a.len(),
                m.len(),
                z.len()
            )));
        }
        Ok(CotSumSpec { a0, a, m0, m, z0, z })
    }

    /// Spec with all shifts zero.
    pub fn zero_shifts(a0: u64, a: Vec<u64>, m0: u32, m: Vec<u32>) -> Result<Self> {
        let d = a.len();
        CotSumSpec::new(a0, a, m0, m, Shift::zero(), vec![Shift::zero(); d])
    }

    pub fn dimension(&self) -> usize {
        self.a.len()
    }

    pub fn all_rational(&self) -> bool {
        self.z0.as_rational().is_some() && self.z.iter().all(|z| z.as_rational().is_some())
    }

    /// Rational cotangent arguments of term `k`, or `None` if some shift is
    /// complex.
    fn rational_args(&self, k: u64) -> Option<Vec<BigRational>> {
        let z0 = self.z0.as_rational()?;
        let base = (rat_int(k as i64) + z0) / rat_int(self.a0 as i64);
        let mut out = Vec::with_capacity(self.a.len());
        for (aj, zj) in self.a.iter().zip(&self.z) {
            let zj = zj.as_rational()?;
            out.push(rat_int(*aj as i64) * &base - zj);
        }
        Some(out)
    }

    fn complex_args(&self, k: u64, p: usize) -> Vec<BigComplex> {
        let z0 = self.z0.to_complex(p);
        let base = z0
            .add_real(&bf_from_i64(k as i64, p), p)
            .scale(&bf_from_i64(1, p).div(&bf_from_i64(self.a0 as i64, p), p, astro_float::RoundingMode::ToEven), p);
        self.a
            .iter()
            .zip(&self.z)
            .map(|(aj, zj)| {
                base.scale(&bf_from_i64(*aj as i64, p), p)
                    .sub(&zj.to_complex(p), p)
            })
            .collect()
    }
}

/// Exact value of a Dedekind cotangent sum with rational shifts.
///
/// Terms whose arguments include an integer are singular and skipped (exact
/// membership test); an empty sum is 0, not an error.
pub fn dedekind_cotangent_sum(spec: &CotSumSpec) -> Result<ExactValue> {
    if !spec.all_rational() {
        return Err(Error::InvalidSpec(
            "exact mode requires rational shifts".into(),
        ));
    }
    // Gather per-term arguments and the overall conductor first, so the cap
    // is checked before any cyclotomic work starts.
    let mut term_args: Vec<Vec<BigRational>> = Vec::new();
    let mut conductor = 1u64;
    for k in 0..spec.a0 {
        let args = spec.rational_args(k).unwrap();
        if args.iter().any(is_integer) {
            continue; // singular term
        }
        for t in &args {
            conductor = lcm_u64(conductor, lcm_u64(4, denominator_u64(t)?));
        }
        term_args.push(args);
    }
    check_conductor(conductor)?;
    let mut acc = CycloElement::zero();
    for args in &term_args {
        let mut term = CycloElement::one();
        for (mj, t) in spec.m.iter().zip(args) {
            term = term.mul(&cot_derivative_exact(*mj, t)?);
        }
        acc = acc.add(&term);
    }
    let norm = rat_int(spec.a0 as i64).pow(spec.m0 as i32 + 1).recip();
    Ok(ExactValue::from_cyclo(acc.scale(&norm)))
}

/// Result of a numeric cotangent sum: the value plus the indices of terms
/// that were skipped for sitting within pole tolerance of a singularity.
#[derive(Debug, Clone)]
pub struct NumericSum {
    pub value: BigComplex,
    pub skipped: Vec<u64>,
}

/// Numeric evaluation of a Dedekind cotangent sum; accepts complex shifts.
/// For rational-shift specs this agrees with [`dedekind_cotangent_sum`] to
/// working precision.
pub fn dedekind_cotangent_sum_numeric(spec: &CotSumSpec, ctx: &PrecisionContext) -> NumericSum {
    let p = ctx.bits();
    let mut acc = BigComplex::zero(p);
    let mut skipped = Vec::new();
    for k in 0..spec.a0 {
        let args = spec.complex_args(k, p);
        let mut term = BigComplex::from_f64(1.0, 0.0, p);
        let mut singular = false;
        for (mj, w) in spec.m.iter().zip(&args) {
            match cot_derivative_numeric(*mj, w, ctx) {
                Ok(v) => term = term.mul(&v, p),
                Err(Error::NearPole { .. }) => {
                    singular = true;
                    break;
                }
                Err(_) => unreachable!("numeric cotangent only fails near poles"),
            }
        }
        if singular {
            skipped.push(k);
        } else {
            acc = acc.add(&term, p);
        }
    }
    let norm = bf_from_i64(spec.a0 as i64, p).powi(spec.m0 as usize + 1, p, astro_float::RoundingMode::ToEven);
    let value = acc.div(&BigComplex::new(norm, bf_from_i64(0, p)), p);
    NumericSum { value, skipped }
}

/// Minimum distance of term `k`'s cotangent arguments from the integers.
pub fn pole_distance(spec: &CotSumSpec, k: u64, ctx: &PrecisionContext) -> astro_float::BigFloat {
    let p = ctx.bits();
    let mut best: Option<astro_float::BigFloat> = None;
    for w in spec.complex_args(k, p) {
        let d = w.dist_to_int(p);
        best = Some(match best {
            None => d,
            Some(b) => {
                if matches!(d.partial_cmp(&b), Some(std::cmp::Ordering::Less)) {
                    d
                } else {
                    b
                }
            }
        });
    }
    best.unwrap_or_else(|| bf_from_i64(0, p))
}

/// Evaluation strategy for the classical Dedekind sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalMethod {
    /// Sawtooth-product definition, summed term by term. O(b).
    Direct,
    /// Cotangent-product representation, summed exactly through the
    /// root-of-unity expansion of the cotangent. O(b).
    Cotangent,
    /// Euclidean-style reduction through the two-term reciprocity law;
    /// polynomial in the bit lengths. Requires gcd(a, b) = 1.
    Fast,
}

fn not_coprime(a: &BigInt, b: &BigInt, g: &BigInt) -> Error {
    Error::NotCoprime {
        a: a.to_string(),
        b: b.to_string(),
        g: g.to_string(),
    }
}

fn u64_modulus(b: &BigInt, method: &str) -> Result<u64> {
    b.to_u64().filter(|&v| v <= 1 << 31).ok_or_else(|| {
        Error::InvalidSpec(format!("{method} method requires b <= 2^31, got {b}"))
    })
}

/// The classical Dedekind sum `s(a, b)`.
pub fn classical_dedekind_sum(a: &BigInt, b: &BigInt, method: ClassicalMethod) -> Result<BigRational> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::InvalidSpec("a and b must be positive".into()));
    }
    match method {
        ClassicalMethod::Direct => {
            let bu = u64_modulus(b, "direct")?;
            let a_mod = a.mod_floor(b).to_u64().unwrap();
            let mut num: i128 = 0;
            let bi = bu as i128;
            for k in 1..bu {
                let r1 = ((k as u128 * a_mod as u128) % bu as u128) as i128;
                if r1 == 0 {
                    continue; // sawtooth vanishes at integers
                }
                let r2 = k as i128;
                num += (2 * r1 - bi) * (2 * r2 - bi);
            }
            Ok(BigRational::new(
                BigInt::from(num),
                BigInt::from(4) * BigInt::from(bu) * BigInt::from(bu),
            ))
        }
        ClassicalMethod::Cotangent => cotangent_method(a, b),
        ClassicalMethod::Fast => {
            let g = a.gcd(b);
            if !g.is_one() {
                return Err(not_coprime(a, b, &g));
            }
            let mut a = a.mod_floor(b);
            let mut b = b.clone();
            let mut acc = BigRational::zero();
            let mut negate = false;
            // s(a,b) = -1/4 + (a^2 + b^2 + 1)/(12ab) - s(b mod a, a)
            while !a.is_zero() {
                let r = BigRational::new(
                    &a * &a + &b * &b + BigInt::one(),
                    BigInt::from(12) * &a * &b,
                ) - rat(1, 4);
                acc += if negate { -r } else { r };
                negate = !negate;
                let next = b.mod_floor(&a);
                b = std::mem::replace(&mut a, next);
            }
            Ok(acc)
        }
    }
}

/// Exact summation of the cotangent representation
/// `s(a,b) = (1/4b) sum' cot(pi k a / b) cot(pi k / b)` (singular terms
/// skipped). Each cotangent is expanded through
/// `cot(pi j / b) = i (1 + (2/b) sum_r r zeta^{j r})`, and the k-sum
/// collapses by root-of-unity orthogonality over the non-singular residues:
/// `sum'_k zeta^{k t} = b [b | t] - g [g | t]` with `g = gcd(a, b)`.
fn cotangent_method(a: &BigInt, b: &BigInt) -> Result<BigRational> {
    let bu = u64_modulus(b, "cotangent")?;
    if bu == 1 {
        return Ok(BigRational::zero());
    }
    let a_mod = a.mod_floor(b).to_u64().unwrap();
    if a_mod == 0 {
        return Ok(BigRational::zero()); // every term is singular
    }
    let g = gcd_u64(a_mod, bu);
    let b1 = bu / g;
    let (bq, gq, b1q) = (rat_int(bu as i64), rat_int(g as i64), rat_int(b1 as i64));
    let half = rat(1, 2);
    // T0 = sum'_k 1
    let t0 = &bq - &gq;
    // T1 = sum_r r E(a r): b-part over r in b1*{0..g-1}, g-part over all r
    let t1 = &bq * &b1q * &gq * (&gq - rat_int(1)) * &half
        - &gq * &bq * (&bq - rat_int(1)) * &half;
    // T2 = sum_s s E(s): b-part only s = 0; g-part over multiples of g
    let t2 = -(&gq * &gq * &b1q * (&b1q - rat_int(1)) * &half);
    // T3 = sum_{r,s} r s E(a r + s)
    let mut pair_sum: i128 = 0;
    for r in 0..bu {
        let s_star = (bu - (r as u128 * a_mod as u128 % bu as u128) as u64) % bu;
        pair_sum += r as i128 * s_star as i128;
    }
    let t3 = &bq * BigRational::from_integer(BigInt::from(pair_sum))
        - &gq * (&bq * (&bq - rat_int(1)) * &half) * (&gq * &b1q * (&b1q - rat_int(1)) * &half);
    let two_over_b = rat(2, 1) / &bq;
    let total = t0 + &two_over_b * (t1 + t2) + (&two_over_b * &two_over_b) * t3;
    Ok(-total / (rat_int(4) * &bq))
}

/// Dedekind-Bernoulli sum `sum_{k mod a} Bbar_m(k b / a) Bbar_n(k c / a)`.
pub fn dedekind_bernoulli_sum(m: u32, n: u32, a: u64, b: u64, c: u64) -> BigRational {
    let mut acc = BigRational::zero();
    for k in 0..a {
        let xb = rat((k * b) as i64, a as i64);
        let xc = rat((k * c) as i64, a as i64);
        acc += bernoulli_function(m, &xb) * bernoulli_function(n, &xc);
    }
    acc
}

/// Apostol sum `sum_{k mod b} (k / b) Bbar_n(k a / b)`.
pub fn apostol_sum(n: u32, a: u64, b: u64) -> BigRational {
    let mut acc = BigRational::zero();
    for k in 0..b {
        let x = rat((k * a) as i64, b as i64);
        acc += rat(k as i64, b as i64) * bernoulli_function(n, &x);
    }
    acc
}

/// Dedekind-Rademacher sum
/// `sum_{k mod b} ((a (k+y)/b - x)) (((k+y)/b))`.
pub fn dedekind_rademacher_sum(a: u64, b: u64, x: &BigRational, y: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for k in 0..b {
        let base = (rat_int(k as i64) + y) / rat_int(b as i64);
        acc += sawtooth(&(rat_int(a as i64) * &base - x)) * sawtooth(&base);
    }
    acc
}

/// Generalized Dedekind-Rademacher sum (Hall-Wilson-Zagier form)
/// `sum_{k mod a} Bbar_m(b (k+x)/a - y) Bbar_n(c (k+x)/a - z)`.
#[allow(clippy::too_many_arguments)]
pub fn generalized_dr_sum(
    m: u32,
    n: u32,
    a: u64,
    b: u64,
    c: u64,
    x: &BigRational,
    y: &BigRational,
    z: &BigRational,
) -> BigRational {
    let mut acc = BigRational::zero();
    for k in 0..a {
        let base = (rat_int(k as i64) + x) / rat_int(a as i64);
        acc += bernoulli_function(m, &(rat_int(b as i64) * &base - y))
            * bernoulli_function(n, &(rat_int(c as i64) * &base - z));
    }
    acc
}

/// Dieter cotangent sum
/// `c(a,b,c; x,y,z) = (1/c) sum_{k mod c} cot(pi(a(k+z)/c - x)) cot(pi(b(k+z)/c - y))`,
/// realized as the cotangent-sum instance `c(c | a b; 0; 0 0; z; x y)`.
pub fn dieter_cotangent_sum(
    a: u64,
    b: u64,
    c: u64,
    x: &BigRational,
    y: &BigRational,
    z: &BigRational,
) -> Result<ExactValue> {
    let spec = CotSumSpec::new(
        c,
        vec![a, b],
        0,
        vec![0, 0],
        Shift::Rational(z.clone()),
        vec![Shift::Rational(x.clone()), Shift::Rational(y.clone())],
    )?;
    dedekind_cotangent_sum(&spec)
}

/// Zagier's higher-dimensional Dedekind sum
/// `s(a_0; a_1..a_d) = ((-1)^{d/2} / a_0) sum_{k=1}^{a_0 - 1} prod_j cot(pi k a_j / a_0)`
/// for even `d`; exactly 0 for odd `d`.
pub fn zagier_sum(a0: u64, a: &[u64]) -> Result<BigRational> {
    for &aj in a {
        let g = gcd_u64(aj, a0);
        if g != 1 {
            return Err(Error::NotCoprime {
                a: aj.to_string(),
                b: a0.to_string(),
                g: g.to_string(),
            });
        }
    }
    let d = a.len();
    if d % 2 == 1 {
        return Ok(BigRational::zero());
    }
    let spec = CotSumSpec::zero_shifts(a0, a.to_vec(), 0, vec![0; d])?;
    let val = dedekind_cotangent_sum(&spec)?.to_rational()?;
    Ok(sign_pow((d / 2) as i64) * val)
}

/// The seven sums in Berndt's notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BerndtKind {
    SAlphaBeta,
    BigS,
    S1,
    S2,
    S3,
    S4,
    S5,
}

impl BerndtKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "s_alpha_beta" | "salphabeta" => Ok(BerndtKind::SAlphaBeta),
            "S" => Ok(BerndtKind::BigS),
            "s1" => Ok(BerndtKind::S1),
            "s2" => Ok(BerndtKind::S2),
            "s3" => Ok(BerndtKind::S3),
            "s4" => Ok(BerndtKind::S4),
            "s5" => Ok(BerndtKind::S5),
            other => Err(Error::InvalidSpec(format!("unknown Berndt sum kind {other:?}"))),
        }
    }
}

/// Berndt's modified Dedekind sums for coprime `a, b`. `alpha`/`beta` are
/// required only for `s_alpha_beta` (they are reduced mod `a` and `b`).
pub fn berndt_sum(
    kind: BerndtKind,
    a: u64,
    b: u64,
    alpha: Option<u64>,
    beta: Option<u64>,
) -> Result<ExactValue> {
    let g = gcd_u64(a, b);
    if g != 1 {
        return Err(Error::NotCoprime {
            a: a.to_string(),
            b: b.to_string(),
            g: g.to_string(),
        });
    }
    let floor_ak_b = |k: u64| (a as i64 * k as i64).div_euclid(b as i64);
    let sign = |e: i64| sign_pow(e);
    let value = match kind {
        BerndtKind::SAlphaBeta => {
            let (alpha, beta) = match (alpha, beta) {
                (Some(x), Some(y)) => (x, y),
                _ => {
                    return Err(Error::MissingParameters(
                        "s_alpha_beta requires --alpha and --beta".into(),
                    ))
                }
            };
            let ab = a * b;
            check_conductor(ab)?;
            let ainv = mod_inverse(&BigInt::from(a), &BigInt::from(b))?
                .to_u64()
                .unwrap();
            let mut acc = CycloElement::zero();
            for k in 1..ab {
                let s1 = sawtooth(&rat(k as i64, ab as i64));
                let s2 = sawtooth(&rat((k * ainv) as i64, b as i64));
                let coeff = s1 * s2;
                if coeff.is_zero() {
                    continue;
                }
                // e^{2 pi i k (alpha/a + beta/b)} = zeta_{ab}^{k(alpha b + beta a)}
                let e = ((k as u128 * (alpha as u128 * b as u128 + beta as u128 * a as u128))
                    % ab as u128) as i64;
                acc = acc.add(&crate::cyclotomic::root_of_unity(ab, e).scale(&coeff));
            }
            return Ok(ExactValue::from_cyclo(acc));
        }
        BerndtKind::BigS => {
            let mut acc = BigRational::zero();
            for k in 1..b {
                acc += sign(k as i64 + 1 + floor_ak_b(k));
            }
            acc
        }
        BerndtKind::S1 => {
            let mut acc = BigRational::zero();
            for k in 1..=b {
                acc += sign(floor_ak_b(k)) * sawtooth(&rat(k as i64, b as i64));
            }
            acc
        }
        BerndtKind::S2 => {
            let mut acc = BigRational::zero();
            for k in 1..=b {
                acc += sign(k as i64)
                    * sawtooth(&rat(k as i64, b as i64))
                    * sawtooth(&rat((k * a) as i64, b as i64));
            }
            acc
        }
        BerndtKind::S3 => {
            let mut acc = BigRational::zero();
            for k in 1..=b {
                acc += sign(k as i64) * sawtooth(&rat((k * a) as i64, b as i64));
            }
            acc
        }
        BerndtKind::S4 => {
            let mut acc = BigRational::zero();
            for k in 1..b {
                acc += sign(floor_ak_b(k));
            }
            acc
        }
        BerndtKind::S5 => {
            let mut acc = BigRational::zero();
            for k in 1..=b {
                acc += sign(k as i64 + floor_ak_b(k)) * sawtooth(&rat(k as i64, b as i64));
            }
            acc
        }
    };
    Ok(ExactValue::Rational(value))
}

/// Plane-partition companion sum `sum_{k=1}^{a-1} Bbar_m(k/a) ((k b / a))`.
pub fn plane_partition_sum(m: u32, a: u64, b: u64) -> BigRational {
    let mut acc = BigRational::zero();
    for k in 1..a {
        acc += bernoulli_function(m, &rat(k as i64, a as i64))
            * sawtooth(&rat((k * b) as i64, a as i64));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::bf_small;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn cotangent_sum_examples() {
        // c(3 | 1 1; 0; 0 0; 0) = 2/9 = 4 s(1,3)
        let spec = CotSumSpec::zero_shifts(3, vec![1, 1], 0, vec![0, 0]).unwrap();
        assert_eq!(
            dedekind_cotangent_sum(&spec).unwrap(),
            ExactValue::Rational(rat(2, 9))
        );
        // odd d, zero shifts, zero orders: vanishes
        let spec = CotSumSpec::zero_shifts(5, vec![1, 2, 3], 0, vec![0, 0, 0]).unwrap();
        assert!(dedekind_cotangent_sum(&spec).unwrap().is_zero());
        // a0 = 1 with nonsingular shift: single product
        let spec = CotSumSpec::new(
            1,
            vec![1],
            0,
            vec![0],
            Shift::Rational(rat(1, 4)),
            vec![Shift::zero()],
        )
        .unwrap();
        assert_eq!(
            dedekind_cotangent_sum(&spec).unwrap(),
            ExactValue::Rational(rat_int(1))
        );
        // a0 = 1 singular: empty sum is 0
        let spec = CotSumSpec::zero_shifts(1, vec![1], 0, vec![0]).unwrap();
        assert!(dedekind_cotangent_sum(&spec).unwrap().is_zero());
        // skipped singular term example: c(2 | 1; 0; 0; 0; 1/2) = 0
        let spec = CotSumSpec::new(
            2,
            vec![1],
            0,
            vec![0],
            Shift::zero(),
            vec![Shift::Rational(rat(1, 2))],
        )
        .unwrap();
        assert!(dedekind_cotangent_sum(&spec).unwrap().is_zero());
    }

    #[test]
    fn shift_periodicity_in_columns() {
        // a_j -> a_j + a_0 leaves zero-shift sums unchanged
        for (a0, a1, a2, m1, m2) in [(3u64, 1u64, 2u64, 0u32, 0u32), (5, 2, 3, 1, 1), (4, 1, 3, 2, 0)] {
            let s1 = CotSumSpec::zero_shifts(a0, vec![a1, a2], 0, vec![m1, m2]).unwrap();
            let s2 = CotSumSpec::zero_shifts(a0, vec![a1 + a0, a2], 0, vec![m1, m2]).unwrap();
            assert_eq!(
                dedekind_cotangent_sum(&s1).unwrap(),
                dedekind_cotangent_sum(&s2).unwrap()
            );
        }
    }

    #[test]
    fn classical_examples() {
        for method in [
            ClassicalMethod::Direct,
            ClassicalMethod::Cotangent,
            ClassicalMethod::Fast,
        ] {
            assert_eq!(
                classical_dedekind_sum(&big(1), &big(3), method).unwrap(),
                rat(1, 18),
                "{method:?}"
            );
            for a in 1..=20 {
                assert!(classical_dedekind_sum(&big(a), &big(1), method)
                    .unwrap()
                    .is_zero());
            }
        }
        assert!(matches!(
            classical_dedekind_sum(&big(2), &big(4), ClassicalMethod::Fast),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn classical_methods_agree_including_noncoprime() {
        for b in 1..=40i64 {
            for a in 1..=40i64 {
                let direct =
                    classical_dedekind_sum(&big(a), &big(b), ClassicalMethod::Direct).unwrap();
                let cot =
                    classical_dedekind_sum(&big(a), &big(b), ClassicalMethod::Cotangent).unwrap();
                assert_eq!(direct, cot, "a={a}, b={b}");
                if gcd_u64(a as u64, b as u64) == 1 {
                    let fast =
                        classical_dedekind_sum(&big(a), &big(b), ClassicalMethod::Fast).unwrap();
                    assert_eq!(direct, fast, "a={a}, b={b}");
                }
            }
        }
    }

    #[test]
    fn classical_matches_generic_evaluator() {
        // s(a,b) = (1/4) c(b | a 1; 0; 0 0; 0)
        for (a, b) in [(1u64, 3u64), (2, 5), (3, 7), (5, 12), (7, 11)] {
            let spec = CotSumSpec::zero_shifts(b, vec![a, 1], 0, vec![0, 0]).unwrap();
            let via_generic = dedekind_cotangent_sum(&spec)
                .unwrap()
                .to_rational()
                .unwrap()
                * rat(1, 4);
            let direct = classical_dedekind_sum(
                &big(a as i64),
                &big(b as i64),
                ClassicalMethod::Direct,
            )
            .unwrap();
            assert_eq!(via_generic, direct, "a={a}, b={b}");
        }
    }

    #[test]
    fn bernoulli_sum_examples() {
        assert_eq!(dedekind_bernoulli_sum(1, 1, 3, 1, 1), rat(1, 18));
        assert_eq!(dedekind_bernoulli_sum(2, 2, 1, 5, 7), rat(1, 36));
        // m + n odd with coprime parameters vanishes
        for (m, n, a, b, c) in [(1u32, 2u32, 3u64, 1u64, 2u64), (2, 3, 5, 2, 3), (1, 4, 7, 3, 2)] {
            assert!(dedekind_bernoulli_sum(m, n, a, b, c).is_zero(), "{m} {n} {a}");
        }
    }

    #[test]
    fn apostol_examples() {
        assert_eq!(apostol_sum(1, 1, 3), rat(1, 18));
        assert!(apostol_sum(4, 3, 1).is_zero());
        assert_eq!(apostol_sum(2, 1, 2), rat(-1, 24));
    }

    #[test]
    fn rademacher_examples() {
        // zero shifts reduce to the classical sum
        for (a, b) in [(1u64, 3u64), (3, 5), (2, 7)] {
            assert_eq!(
                dedekind_rademacher_sum(a, b, &rat_int(0), &rat_int(0)),
                classical_dedekind_sum(&big(a as i64), &big(b as i64), ClassicalMethod::Direct)
                    .unwrap()
            );
        }
        assert!(dedekind_rademacher_sum(1, 2, &rat(1, 2), &rat_int(0)).is_zero());
        // single-term case
        let x = rat(1, 3);
        let y = rat(1, 5);
        assert_eq!(
            dedekind_rademacher_sum(1, 1, &x, &y),
            sawtooth(&(&y - &x)) * sawtooth(&y)
        );
    }

    #[test]
    fn generalized_dr_examples() {
        assert_eq!(
            generalized_dr_sum(1, 1, 3, 1, 1, &rat_int(0), &rat_int(0), &rat_int(0)),
            dedekind_bernoulli_sum(1, 1, 3, 1, 1)
        );
        // single-term case at a = 1
        assert_eq!(
            generalized_dr_sum(2, 4, 1, 5, 7, &rat_int(0), &rat_int(0), &rat_int(0)),
            bernoulli_function(2, &rat_int(0)) * bernoulli_function(4, &rat_int(0))
        );
        assert!(
            generalized_dr_sum(1, 1, 2, 1, 1, &rat_int(0), &rat(1, 2), &rat(1, 2)).is_zero()
        );
    }

    #[test]
    fn dieter_examples() {
        // dieter(a, 1, b; 0) = 4 s(a, b)
        for (a, b) in [(1u64, 3u64), (2, 5), (4, 9)] {
            let d = dieter_cotangent_sum(a, 1, b, &rat_int(0), &rat_int(0), &rat_int(0))
                .unwrap()
                .to_rational()
                .unwrap();
            let s = classical_dedekind_sum(&big(a as i64), &big(b as i64), ClassicalMethod::Fast)
                .unwrap();
            assert_eq!(d, rat_int(4) * s, "a={a}, b={b}");
        }
        // single-term case: cot^2(-pi/4) = 1
        let v = dieter_cotangent_sum(1, 1, 1, &rat(1, 4), &rat(1, 4), &rat_int(0)).unwrap();
        assert_eq!(v, ExactValue::Rational(rat_int(1)));
        // integer shifts, coprime to c: rational
        let v = dieter_cotangent_sum(2, 3, 5, &rat_int(1), &rat_int(2), &rat_int(0)).unwrap();
        assert!(v.as_rational().is_some());
    }

    #[test]
    fn zagier_examples() {
        assert_eq!(zagier_sum(3, &[1, 1]).unwrap(), rat(-2, 9));
        assert!(zagier_sum(5, &[1, 2, 3]).unwrap().is_zero()); // odd d
        assert!(zagier_sum(1, &[4, 9]).unwrap().is_zero()); // empty sum
        assert!(matches!(
            zagier_sum(4, &[2, 3]),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn berndt_examples() {
        let v = berndt_sum(BerndtKind::BigS, 1, 3, None, None).unwrap();
        assert!(v.is_zero());
        let v = berndt_sum(BerndtKind::S3, 1, 2, None, None).unwrap();
        assert!(v.is_zero());
        let v = berndt_sum(BerndtKind::S4, 1, 2, None, None).unwrap();
        assert_eq!(v, ExactValue::Rational(rat_int(1)));
        assert!(matches!(
            berndt_sum(BerndtKind::S1, 2, 4, None, None),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            berndt_sum(BerndtKind::SAlphaBeta, 2, 3, Some(1), None),
            Err(Error::MissingParameters(_))
        ));
        // s_alpha_beta at alpha = beta = 0 degenerates to a rational value
        let v = berndt_sum(BerndtKind::SAlphaBeta, 2, 3, Some(0), Some(0), ).unwrap();
        let mut expected = BigRational::zero();
        let ainv = 2u64; // 2 * 2 = 4 = 1 mod 3
        for k in 1..6u64 {
            expected += sawtooth(&rat(k as i64, 6)) * sawtooth(&rat((k * ainv) as i64, 3));
        }
        assert_eq!(v, ExactValue::Rational(expected));
    }

    #[test]
    fn plane_partition_examples() {
        assert_eq!(plane_partition_sum(1, 3, 1), rat(1, 18));
        assert!(plane_partition_sum(4, 1, 7).is_zero());
        assert!(plane_partition_sum(2, 2, 1).is_zero());
    }

    /// Fourier bridge: for odd m and coprime a, b the plane-partition sum
    /// equals `m (-1)^{(m-1)/2} / (2^{m+1} a^m) sum_k cot(pi k/a)
    /// cot^{(m-1)}(pi k b/a)`.
    #[test]
    fn plane_partition_cotangent_bridge() {
        for m in [1u32, 3, 5] {
            for (a, b) in [(3u64, 1u64), (5, 2), (7, 3), (8, 5)] {
                let mut cot_sum = CycloElement::zero();
                for k in 1..a {
                    let t1 = rat(k as i64, a as i64);
                    let t2 = rat((k * b) as i64, a as i64);
                    cot_sum = cot_sum.add(
                        &cot_derivative_exact(0, &t1)
                            .unwrap()
                            .mul(&cot_derivative_exact(m - 1, &t2).unwrap()),
                    );
                }
                let scale = rat_int(m as i64) * sign_pow(((m - 1) / 2) as i64)
                    / (rat_int(2).pow(m as i32 + 1) * rat_int(a as i64).pow(m as i32));
                let rhs = cot_sum.scale(&scale).to_rational().unwrap();
                assert_eq!(plane_partition_sum(m, a, b), rhs, "m={m}, a={a}, b={b}");
            }
        }
    }

    #[test]
    fn exact_and_numeric_agree() {
        let ctx = PrecisionContext::new(60);
        let specs = vec![
            CotSumSpec::zero_shifts(3, vec![1, 1], 0, vec![0, 0]).unwrap(),
            CotSumSpec::zero_shifts(5, vec![2, 3], 1, vec![1, 2]).unwrap(),
            CotSumSpec::new(
                4,
                vec![3],
                0,
                vec![2],
                Shift::Rational(rat(1, 3)),
                vec![Shift::Rational(rat(1, 2))],
            )
            .unwrap(),
        ];
        for spec in &specs {
            let exact = dedekind_cotangent_sum(spec).unwrap();
            let exact_c = crate::numeric::cyclo_to_complex(&exact.to_cyclo(), &ctx);
            let numeric = dedekind_cotangent_sum_numeric(spec, &ctx);
            let err = exact_c.sub(&numeric.value, ctx.bits()).abs(ctx.bits());
            assert!(bf_small(&err, &ctx, 10), "spec {spec:?}: err = {err}");
        }
    }

    #[test]
    fn numeric_skips_are_flagged() {
        let ctx = PrecisionContext::new(40);
        let spec = CotSumSpec::new(
            2,
            vec![1],
            0,
            vec![0],
            Shift::zero(),
            vec![Shift::Rational(rat(1, 2))],
        )
        .unwrap();
        let r = dedekind_cotangent_sum_numeric(&spec, &ctx);
        assert_eq!(r.skipped, vec![1]);
        assert!(bf_small(&r.value.abs(ctx.bits()), &ctx, 10));
    }

    #[test]
    fn complex_shift_sum_is_finite_and_stable() {
        // cross-check at two precisions
        let spec = CotSumSpec::new(
            3,
            vec![1, 2],
            0,
            vec![0, 1],
            Shift::zero(),
            vec![
                Shift::Complex(BigComplex::from_f64(0.3, 0.2, 256)),
                Shift::Complex(BigComplex::from_f64(-0.1, 0.4, 256)),
            ],
        )
        .unwrap();
        let lo = PrecisionContext::new(40);
        let hi = PrecisionContext::new(80);
        let a = dedekind_cotangent_sum_numeric(&spec, &lo);
        let b = dedekind_cotangent_sum_numeric(&spec, &hi);
        assert!(a.skipped.is_empty());
        let err = a.value.sub(&b.value, hi.bits()).abs(hi.bits());
        assert!(bf_small(&err, &lo, 10), "err = {err}");
    }

    #[test]
    fn pole_distance_matches_brute_force() {
        let ctx = PrecisionContext::new(40);
        let spec = CotSumSpec::new(
            4,
            vec![3, 2],
            0,
            vec![0, 0],
            Shift::Rational(rat(1, 3)),
            vec![Shift::Rational(rat(1, 2)), Shift::zero()],
        )
        .unwrap();
        for k in 0..4u64 {
            let d = pole_distance(&spec, k, &ctx);
            // brute force over the rational arguments
            let args = spec.rational_args(k).unwrap();
            let expected = args
                .iter()
                .map(|t| {
                    let f = crate::rational::fract(t);
                    f.clone().min(rat_int(1) - f)
                })
                .min()
                .unwrap();
            let exp_bf = crate::numeric::bf_from_rational(&expected, ctx.bits());
            let err = d.sub(&exp_bf, ctx.bits(), astro_float::RoundingMode::ToEven).abs();
            assert!(bf_small(&err, &ctx, 10), "k = {k}");
        }
    }
}
