//! Exact arithmetic in the cyclotomic fields `Q(zeta_n)`.
//!
//! Elements are coordinate vectors in the power basis
//! `1, zeta, ..., zeta^{phi(n)-1}` of `Q[x] / Phi_n(x)`, where `Phi_n` is the
//! n-th cyclotomic polynomial, so the representation is a true field (no zero
//! divisors) and every element is reduced immediately. Elements at different
//! conductors interoperate by lifting to the lcm conductor.
//!
//! The exact cotangent lives here: for rational `t = p/q` (not an integer),
//! `cot(pi t) = i (zeta + 1)/(zeta - 1)` with `zeta = e^{2 pi i t}`, an element
//! of conductor `lcm(4, q)`. The division is eliminated with the finite
//! geometric identity `1/(zeta^j - 1) = (1/q) sum_{r=0}^{q-1} r zeta^{j r}`,
//! so cotangent values need no polynomial inversion.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::cotangent::cot_derivative_polynomial;
use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, factorize, lcm_u64, radical};
use crate::poly::{extended_gcd, IntPolynomial, RationalPolynomial};
use crate::rational::{denominator_u64, fract, is_integer, BigRational};

/// Default limit on the conductor of exact cyclotomic computations.
pub const DEFAULT_CONDUCTOR_CAP: u64 = 5000;

static CONDUCTOR_CAP: AtomicU64 = AtomicU64::new(DEFAULT_CONDUCTOR_CAP);

pub fn conductor_cap() -> u64 {
    CONDUCTOR_CAP.load(Ordering::Relaxed)
}

pub fn set_conductor_cap(cap: u64) {
    CONDUCTOR_CAP.store(cap.max(4), Ordering::Relaxed);
}

pub fn check_conductor(n: u64) -> Result<()> {
    let cap = conductor_cap();
    if n > cap {
        Err(Error::ConductorExceeded { conductor: n, cap })
    } else {
        Ok(())
    }
}

struct CycloCtx {
    phi: usize,
    /// Nonzero terms of `Phi_n` as `(exponent, coefficient)`, ascending;
    /// the last entry is the monic leading term.
    sparse: Vec<(usize, BigInt)>,
}

static CTX_CACHE: Lazy<DashMap<u64, Arc<CycloCtx>>> = Lazy::new(DashMap::new);
static COT_CACHE: Lazy<DashMap<BigRational, CycloElement>> = Lazy::new(DashMap::new);
static COT_DERIV_CACHE: Lazy<DashMap<(u32, BigRational), CycloElement>> = Lazy::new(DashMap::new);

/// The n-th cyclotomic polynomial, computed exactly.
///
/// `Phi_rad(n)` is built by repeated exact division
/// `f(x) <- f(x^p) / f(x)` over the distinct primes `p | n`, starting from
/// `f = x - 1`; then `Phi_n(x) = Phi_rad(x^{n / rad})`.
pub fn cyclotomic_polynomial(n: u64) -> IntPolynomial {
    assert!(n >= 1);
    let mut f = IntPolynomial::from_i64(&[-1, 1]);
    for (p, _) in factorize(n) {
        f = f.substitute_power(p as usize).div_exact_monic(&f);
    }
    let rad = radical(n);
    if n > rad {
        f = f.substitute_power((n / rad) as usize);
    }
    f
}

fn ctx(n: u64) -> Arc<CycloCtx> {
    if let Some(c) = CTX_CACHE.get(&n) {
        return c.clone();
    }
    let poly = cyclotomic_polynomial(n);
    let c = Arc::new(CycloCtx {
        phi: euler_phi(n) as usize,
        sparse: poly.sparse_terms(),
    });
    debug_assert_eq!(poly.degree(), Some(c.phi));
    CTX_CACHE.entry(n).or_insert(c).clone()
}

/// An element of `Q(zeta_n)` in the power basis modulo `Phi_n`.
#[derive(Debug, Clone)]
pub struct CycloElement {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl CycloElement {
    /// A rational number, at conductor 1.
    pub fn rational(q: BigRational) -> Self {
        CycloElement {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn zero() -> Self {
        CycloElement::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        CycloElement::rational(BigRational::one())
    }

    /// Reduces a dense coefficient vector (any length) modulo `Phi_n`.
    fn from_dense(n: u64, mut v: Vec<BigRational>) -> Self {
        let c = ctx(n);
        let phi = c.phi;
        if v.len() > phi {
            for i in (phi..v.len()).rev() {
                if v[i].is_zero() {
                    continue;
                }
                let lead = std::mem::replace(&mut v[i], BigRational::zero());
                for (e, coef) in &c.sparse[..c.sparse.len() - 1] {
                    v[i - phi + e] -= &lead * BigRational::from_integer(coef.clone());
                }
            }
        }
        v.truncate(phi);
        v.resize(phi, BigRational::zero());
        CycloElement {
            conductor: n,
            coeffs: v,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, if all non-constant coordinates vanish.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Extracts the rational value; errors when the element is irrational.
    pub fn to_rational(&self) -> Result<BigRational> {
        self.as_rational().ok_or(Error::NotRational {
            conductor: self.conductor,
        })
    }

    /// Lifts to a multiple conductor: `zeta_n = zeta_m^{m/n}`.
    pub fn lift(&self, m: u64) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert_eq!(m % self.conductor, 0, "lift target must be a multiple");
        let step = (m / self.conductor) as usize;
        let mut dense = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[j * step] = c.clone();
            }
        }
        CycloElement::from_dense(m, dense)
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        let m = lcm_u64(self.conductor, other.conductor);
        (self.lift(m), other.lift(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        CycloElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        CycloElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        if a.is_zero() || b.is_zero() {
            return CycloElement::from_dense(a.conductor, vec![]);
        }
        let mut v = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        CycloElement::from_dense(a.conductor, v)
    }

    /// Field inverse via the extended Euclidean algorithm against `Phi_n`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(CycloElement {
                conductor: self.conductor,
                coeffs: {
                    let mut v = vec![BigRational::zero(); self.coeffs.len()];
                    v[0] = q.recip();
                    v
                },
            });
        }
        let n = self.conductor;
        let phi_poly = cyclotomic_polynomial(n).to_rational();
        let u = RationalPolynomial::new(self.coeffs.clone());
        let (g, _, t) = extended_gcd(&phi_poly, &u);
        debug_assert_eq!(g.degree(), Some(0), "Phi_n is irreducible");
        let ginv = g.coeff(0).recip();
        let inv_poly = t.scale(&ginv);
        let mut v = inv_poly.coeffs().to_vec();
        v.resize(v.len().max(1), BigRational::zero());
        Ok(CycloElement::from_dense(n, v))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = CycloElement::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Display form: polynomial in `zeta{n}`.
    fn format_symbolic(&self) -> String {
        use crate::rational::format_rational;
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = format_rational(c);
            let term = match e {
                0 => cs,
                _ => {
                    let sym = if e == 1 {
                        format!("zeta{}", self.conductor)
                    } else {
                        format!("zeta{}^{}", self.conductor, e)
                    };
                    if c.is_one() {
                        sym
                    } else if (-c).is_one() {
                        format!("-{sym}")
                    } else {
                        format!("{cs}*{sym}")
                    }
                }
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

impl PartialEq for CycloElement {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloElement {}

impl std::fmt::Display for CycloElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.format_symbolic())
    }
}

impl serde::Serialize for CycloElement {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use crate::rational::format_rational;
        use serde::ser::SerializeStruct;
        let mut s = ser.serialize_struct("CycloElement", 2)?;
        s.serialize_field("conductor", &self.conductor)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de> serde::Deserialize<'de> for CycloElement {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use crate::rational::parse_rational;
        #[derive(serde::Deserialize)]
        struct Raw {
            conductor: u64,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(de)?;
        if raw.conductor == 0 {
            return Err(serde::de::Error::custom("conductor must be positive"));
        }
        let phi = euler_phi(raw.conductor) as usize;
        if raw.coeffs.len() != phi {
            return Err(serde::de::Error::custom(format!(
                "expected {} coefficients for conductor {}, got {}",
                phi,
                raw.conductor,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CycloElement {
            conductor: raw.conductor,
            coeffs,
        })
    }
}

/// `zeta_n^k` at conductor `n` (`k` reduced mod `n`).
pub fn root_of_unity(n: u64, k: i64) -> CycloElement {
    assert!(n >= 1);
    let k = k.rem_euclid(n as i64) as usize;
    let mut dense = vec![BigRational::zero(); k + 1];
    dense[k] = BigRational::one();
    CycloElement::from_dense(n, dense)
}

/// Conductor required to represent `cot(pi t)` exactly.
pub fn cot_conductor(t: &BigRational) -> Result<u64> {
    Ok(lcm_u64(4, denominator_u64(t)?))
}

/// Exact `cot(pi t)` for rational non-integer `t`, as an element of
/// `Q(zeta_{lcm(4, q)})` where `q` is the denominator of `t`.
pub fn cot_exact(t: &BigRational) -> Result<CycloElement> {
    if is_integer(t) {
        return Err(Error::Pole { arg: t.to_string() });
    }
    let tf = fract(t); // cot(pi t) has period 1
    if let Some(hit) = COT_CACHE.get(&tf) {
        return Ok(hit.clone());
    }
    let q = denominator_u64(&tf)?;
    let p = u64::try_from(tf.numer().magnitude().clone())
        .map_err(|_| Error::InvalidSpec(format!("numerator of {tf} exceeds u64")))?;
    let n = lcm_u64(4, q);
    check_conductor(n)?;
    let step = n / q;
    // cot(pi t) = i + (2 i / q) * sum_{r=0}^{q-1} r zeta_q^{p r}
    // with i = zeta_n^{n/4}; accumulate the sparse monomials densely.
    let quarter = (n / 4) as usize;
    let mut dense = vec![BigRational::zero(); n as usize + quarter];
    dense[quarter] += BigRational::one(); // the lone i term
    let two_over_q = BigRational::new(BigInt::from(2), BigInt::from(q));
    for r in 1..q {
        let e = quarter + (((p % q) * r % q) * step) as usize;
        dense[e] += &two_over_q * BigRational::from_integer(BigInt::from(r));
    }
    let result = CycloElement::from_dense(n, dense);
    COT_CACHE.insert(tf, result.clone());
    Ok(result)
}

/// Exact `cot^{(m)}(pi t)`: the derivative polynomial `P_m` evaluated at
/// `cot(pi t)`.
pub fn cot_derivative_exact(m: u32, t: &BigRational) -> Result<CycloElement> {
    if is_integer(t) {
        return Err(Error::Pole { arg: t.to_string() });
    }
    let key = (m, fract(t));
    if let Some(hit) = COT_DERIV_CACHE.get(&key) {
        return Ok(hit.clone());
    }
    let c = cot_exact(&key.1)?;
    let poly = cot_derivative_polynomial(m);
    // Horner over the integer coefficients of P_m.
    let mut acc = CycloElement::zero();
    for coeff in poly.poly.coeffs().iter().rev() {
        acc = acc.mul(&c);
        if !coeff.is_zero() {
            acc = acc.add(&CycloElement::rational(BigRational::from_integer(
                coeff.clone(),
            )));
        }
    }
    COT_DERIV_CACHE.insert(key, acc.clone());
    Ok(acc)
}
