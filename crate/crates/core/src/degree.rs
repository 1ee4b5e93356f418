//! Exact truth degrees in `[0, 1]` and the Łukasiewicz connectives.
//!
//! Every value is a reduced arbitrary-precision rational, so equality is
//! exact and nothing ever rounds.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("degree {0} lies outside [0, 1]")]
    OutOfRange(String),
    #[error("zero denominator in degree")]
    ZeroDenominator,
    #[error("malformed degree literal `{0}` (expected p/q, 0 or 1)")]
    Malformed(String),
    #[error("degree literal `{0}` is not in lowest terms")]
    NotReduced(String),
}

/// A truth degree: an exact rational `0 <= value <= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(BigRational);

impl Degree {
    pub fn zero() -> Self {
        Degree(BigRational::zero())
    }

    pub fn one() -> Self {
        Degree(BigRational::one())
    }

    /// Builds `num/den`, rejecting anything outside `[0, 1]`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, DegreeError> {
        let den = den.into();
        if den.is_zero() {
            return Err(DegreeError::ZeroDenominator);
        }
        Self::from_rational(BigRational::new(num.into(), den))
    }

    pub fn from_rational(value: BigRational) -> Result<Self, DegreeError> {
        if value < BigRational::zero() || value > BigRational::one() {
            return Err(DegreeError::OutOfRange(value.to_string()));
        }
        Ok(Degree(value))
    }

    /// `1 / n` for `n >= 1`.
    pub fn reciprocal(n: &BigUint) -> Self {
        assert!(!n.is_zero(), "reciprocal of zero");
        Degree(BigRational::new(BigInt::one(), BigInt::from(n.clone())))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Product of two degrees; closed on `[0, 1]`.
    pub fn mul(&self, other: &Degree) -> Degree {
        Degree(&self.0 * &other.0)
    }

    /// `self / n` for a positive integer `n`.
    pub fn div_int(&self, n: &BigUint) -> Degree {
        assert!(!n.is_zero(), "division by zero");
        Degree(&self.0 / BigRational::from_integer(BigInt::from(n.clone())))
    }

    /// Unclamped sum, `None` when it exceeds 1.
    pub fn checked_add(&self, other: &Degree) -> Option<Degree> {
        Degree::from_rational(&self.0 + &other.0).ok()
    }

    /// Unclamped difference, `None` when it drops below 0.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        Degree::from_rational(&self.0 - &other.0).ok()
    }
}

fn clamp(value: BigRational) -> Degree {
    if value < BigRational::zero() {
        Degree::zero()
    } else if value > BigRational::one() {
        Degree::one()
    } else {
        Degree(value)
    }
}

/// Łukasiewicz t-norm `max{0, a + b - 1}`.
pub fn tnorm(a: &Degree, b: &Degree) -> Degree {
    clamp(&a.0 + &b.0 - BigRational::one())
}

/// Łukasiewicz t-conorm `min{1, a + b}`.
pub fn tconorm(a: &Degree, b: &Degree) -> Degree {
    clamp(&a.0 + &b.0)
}

/// Involutive negation `1 - a`.
pub fn negation(a: &Degree) -> Degree {
    Degree(BigRational::one() - &a.0)
}

/// Residuum of the t-norm, `min{1, 1 - a + b}`.
pub fn implication(a: &Degree, b: &Degree) -> Degree {
    clamp(BigRational::one() - &a.0 + &b.0)
}

/// `min{1, n * a}`, the value of an `n`-fold t-conorm of `a` with itself.
pub fn scale(n: &BigUint, a: &Degree) -> Degree {
    assert!(!n.is_zero(), "scale factor must be positive");
    clamp(BigRational::from_integer(BigInt::from(n.clone())) * &a.0)
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Degree({self})")
    }
}

impl FromStr for Degree {
    type Err = DegreeError;

    /// Accepts `p/q` in lowest terms with `0 <= p <= q`, or the shorthands `0` and `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || DegreeError::Malformed(s.to_string());
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        match s.split_once('/') {
            None => match s {
                "0" => Ok(Degree::zero()),
                "1" => Ok(Degree::one()),
                _ if digits(s) => Err(DegreeError::OutOfRange(s.to_string())),
                _ => Err(malformed()),
            },
            Some((p, q)) => {
                if !digits(p) || !digits(q) {
                    return Err(malformed());
                }
                let p: BigInt = p.parse().map_err(|_| malformed())?;
                let q: BigInt = q.parse().map_err(|_| malformed())?;
                if q.is_zero() {
                    return Err(DegreeError::ZeroDenominator);
                }
                let d = Degree::new(p.clone(), q.clone())?;
                if d.0.numer() != &p || d.0.denom() != &q {
                    return Err(DegreeError::NotReduced(s.to_string()));
                }
                Ok(d)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    fn n(k: u32) -> BigUint {
        BigUint::from(k)
    }

    #[test]
    fn tnorm_examples() {
        assert_eq!(tnorm(&d("1/2"), &d("7/10")), d("1/5"));
        assert_eq!(tnorm(&d("3/7"), &Degree::one()), d("3/7"));
        assert_eq!(tnorm(&d("1/3"), &d("1/3")), Degree::zero());
    }

    #[test]
    fn tconorm_examples() {
        assert_eq!(tconorm(&d("1/2"), &d("7/10")), Degree::one());
        assert_eq!(tconorm(&d("3/7"), &Degree::zero()), d("3/7"));
        assert_eq!(tconorm(&d("1/4"), &d("1/4")), d("1/2"));
    }

    #[test]
    fn negation_examples() {
        assert_eq!(negation(&Degree::zero()), Degree::one());
        assert_eq!(negation(&d("1/100")), d("99/100"));
        assert_eq!(negation(&negation(&d("5/11"))), d("5/11"));
    }

    #[test]
    fn implication_examples() {
        assert_eq!(implication(&d("3/4"), &d("1/2")), d("3/4"));
        assert_eq!(implication(&d("1/4"), &d("1/2")), Degree::one());
        assert_eq!(implication(&Degree::one(), &d("2/9")), d("2/9"));
    }

    #[test]
    fn scale_examples() {
        assert_eq!(scale(&n(3), &d("2/5")), Degree::one());
        assert_eq!(scale(&n(1), &d("2/5")), d("2/5"));
        assert_eq!(scale(&n(4), &d("1/9")), d("4/9"));
    }

    #[test]
    fn construction_rejects_out_of_range() {
        assert!(matches!(Degree::new(3, 2), Err(DegreeError::OutOfRange(_))));
        assert!(matches!(
            Degree::new(-1, 2),
            Err(DegreeError::OutOfRange(_))
        ));
        assert_eq!(Degree::new(1, 0), Err(DegreeError::ZeroDenominator));
        assert_eq!(Degree::new(2, 4).unwrap(), d("1/2"));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(d("0").to_string(), "0");
        assert_eq!(d("1").to_string(), "1");
        assert_eq!(d("1/100").to_string(), "1/100");
        assert_eq!(d("1/1"), Degree::one());
        assert!(matches!(
            "3/3".parse::<Degree>(),
            Err(DegreeError::NotReduced(_))
        ));
        assert!(matches!(
            "2/4".parse::<Degree>(),
            Err(DegreeError::NotReduced(_))
        ));
        assert!(matches!(
            "5/4".parse::<Degree>(),
            Err(DegreeError::OutOfRange(_))
        ));
        assert!(matches!(
            "2".parse::<Degree>(),
            Err(DegreeError::OutOfRange(_))
        ));
        assert!(matches!(
            "0.5".parse::<Degree>(),
            Err(DegreeError::Malformed(_))
        ));
        assert!(matches!(
            "-1/2".parse::<Degree>(),
            Err(DegreeError::Malformed(_))
        ));
        assert!(matches!(
            "1/0".parse::<Degree>(),
            Err(DegreeError::ZeroDenominator)
        ));
    }

    #[test]
    fn checked_arithmetic() {
        assert_eq!(d("1/3").checked_add(&d("1/3")), Some(d("2/3")));
        assert_eq!(d("2/3").checked_add(&d("2/3")), None);
        assert_eq!(d("1/3").checked_sub(&d("2/3")), None);
        assert_eq!(d("1/3").div_int(&n(3)), d("1/9"));
        assert_eq!(Degree::reciprocal(&n(7)), d("1/7"));
    }
}
