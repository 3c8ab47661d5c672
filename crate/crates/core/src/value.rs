//! Tagged exact values: rational or cyclotomic.
//!
//! A `Cyclotomic` variant never holds a value whose non-constant coordinates
//! all vanish; such values are demoted to `Rational` on construction.

use num_traits::Zero;

use crate::cyclotomic::CycloElement;
use crate::error::Result;
use crate::rational::{format_rational, BigRational};

#[derive(Debug, Clone, PartialEq)]
pub enum ExactValue {
    Rational(BigRational),
    Cyclotomic(CycloElement),
}

impl ExactValue {
    pub fn zero() -> Self {
        ExactValue::Rational(BigRational::zero())
    }

    pub fn from_rational(q: BigRational) -> Self {
        ExactValue::Rational(q)
    }

    /// Wraps a cyclotomic value, demoting to `Rational` when possible.
    pub fn from_cyclo(c: CycloElement) -> Self {
        match c.as_rational() {
            Some(q) => ExactValue::Rational(q),
            None => ExactValue::Cyclotomic(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactValue::Rational(q) => q.is_zero(),
            ExactValue::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            ExactValue::Rational(q) => Some(q.clone()),
            ExactValue::Cyclotomic(c) => c.as_rational(),
        }
    }

    pub fn to_rational(&self) -> Result<BigRational> {
        match self {
            ExactValue::Rational(q) => Ok(q.clone()),
            ExactValue::Cyclotomic(c) => c.to_rational(),
        }
    }

    pub fn to_cyclo(&self) -> CycloElement {
        match self {
            ExactValue::Rational(q) => CycloElement::rational(q.clone()),
            ExactValue::Cyclotomic(c) => c.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (ExactValue::Rational(a), ExactValue::Rational(b)) => ExactValue::Rational(a + b),
            _ => ExactValue::from_cyclo(self.to_cyclo().add(&other.to_cyclo())),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        match (self, other) {
            (ExactValue::Rational(a), ExactValue::Rational(b)) => ExactValue::Rational(a - b),
            _ => ExactValue::from_cyclo(self.to_cyclo().sub(&other.to_cyclo())),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (ExactValue::Rational(a), ExactValue::Rational(b)) => ExactValue::Rational(a * b),
            _ => ExactValue::from_cyclo(self.to_cyclo().mul(&other.to_cyclo())),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        match self {
            ExactValue::Rational(q) => ExactValue::Rational(q * s),
            ExactValue::Cyclotomic(c) => ExactValue::from_cyclo(c.scale(s)),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            ExactValue::Rational(q) => ExactValue::Rational(-q),
            ExactValue::Cyclotomic(c) => ExactValue::Cyclotomic(c.neg()),
        }
    }
}

impl std::fmt::Display for ExactValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExactValue::Rational(q) => write!(f, "{}", format_rational(q)),
            ExactValue::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{cot_exact, root_of_unity};
    use crate::rational::{rat, rat_int};

    #[test]
    fn demotion_on_construction() {
        // zeta_6^3 = -1 demotes to a rational
        let v = ExactValue::from_cyclo(root_of_unity(6, 3));
        assert_eq!(v, ExactValue::Rational(rat_int(-1)));
        // cot(pi/3) stays cyclotomic
        let c = ExactValue::from_cyclo(cot_exact(&rat(1, 3)).unwrap());
        assert!(matches!(c, ExactValue::Cyclotomic(_)));
        // ... but its square is rational 1/3
        assert_eq!(c.mul(&c), ExactValue::Rational(rat(1, 3)));
    }

    #[test]
    fn mixed_arithmetic() {
        let c = ExactValue::from_cyclo(cot_exact(&rat(1, 3)).unwrap());
        let r = ExactValue::Rational(rat_int(2));
        let s = c.add(&r).sub(&c);
        assert_eq!(s, r);
        assert!(c.sub(&c).is_zero());
    }
}
