//! Exact rational scalars and the two-parameter regime every identity is
//! checked at.
//!
//! All arithmetic is exact; there is no floating-point mode. Rationals print
//! and parse as `p/q` or `p` with no decimal forms.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// An arbitrary-precision rational, always reduced, denominator positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rational(self.0.recip())
    }

    /// Nonnegative integer power.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error produced when parsing a rational from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part: {0:?}")]
    BadInteger(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p` or `p/q` with optional leading sign; nothing else.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let parse_int = |part: &str| -> Result<BigInt, ParseRationalError> {
            let trimmed = part.trim();
            if trimmed.is_empty()
                || trimmed
                    .strip_prefix(['+', '-'])
                    .unwrap_or(trimmed)
                    .chars()
                    .any(|ch| !ch.is_ascii_digit())
            {
                return Err(ParseRationalError::BadInteger(part.to_owned()));
            }
            trimmed
                .parse::<BigInt>()
                .map_err(|_| ParseRationalError::BadInteger(part.to_owned()))
        };
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
            Some((num, den)) => {
                let num = parse_int(num)?;
                let den = parse_int(den)?;
                if den.is_zero() {
                    return Err(ParseRationalError::ZeroDenominator);
                }
                Ok(Rational(BigRational::new(num, den)))
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

/// Errors from [`ParamPoint::new`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("rank must be at least 3, got {0}")]
    RankTooSmall(usize),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
}

/// A rational point (eps1, eps2) together with the rank and derived scalars.
///
/// `hbar = eps1 + eps2` always. When the point is built for the evaluation
/// regime, `c_value = n * eps2 / hbar`, so `hbar * c_value = n * eps2` holds
/// exactly; that regime additionally requires `hbar != 0` and `eps2 != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamPoint {
    pub eps1: Rational,
    pub eps2: Rational,
    pub n: usize,
    pub hbar: Rational,
    pub c_value: Option<Rational>,
}

impl ParamPoint {
    pub fn new(
        eps1: Rational,
        eps2: Rational,
        n: usize,
        evaluation_regime: bool,
    ) -> Result<Self, ParamError> {
        if n < 3 {
            return Err(ParamError::RankTooSmall(n));
        }
        let hbar = &eps1 + &eps2;
        let c_value = if evaluation_regime {
            if hbar.is_zero() {
                return Err(ParamError::DegenerateParameters(
                    "eps1 + eps2 = 0".to_owned(),
                ));
            }
            if eps2.is_zero() {
                return Err(ParamError::DegenerateParameters("eps2 = 0".to_owned()));
            }
            Some(&(&Rational::integer(n as i64) * &eps2) / &hbar)
        } else {
            None
        };
        Ok(ParamPoint {
            eps1,
            eps2,
            n,
            hbar,
            c_value,
        })
    }

    /// The numeric central charge; panics outside the evaluation regime.
    pub fn c(&self) -> &Rational {
        self.c_value
            .as_ref()
            .expect("parameter point was not built for the evaluation regime")
    }

    /// `(eps1 - eps2) / 2`, a recurring coefficient.
    pub fn eps_diff_half(&self) -> Rational {
        &(&self.eps1 - &self.eps2) * &Rational::new(1, 2)
    }

    /// `hbar / 2`.
    pub fn hbar_half(&self) -> Rational {
        &self.hbar * &Rational::new(1, 2)
    }
}

/// The default battery of generic test points: small denominators, one
/// negative value.
pub fn default_points() -> Vec<(Rational, Rational)> {
    vec![
        (Rational::new(1, 2), Rational::new(1, 3)),
        (Rational::new(2, 3), Rational::new(5, 7)),
        (Rational::new(-3, 5), Rational::new(7, 11)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_in_evaluation_regime() {
        let p = ParamPoint::new(Rational::new(1, 2), Rational::new(1, 3), 3, true).unwrap();
        assert_eq!(p.hbar, Rational::new(5, 6));
        assert_eq!(p.c_value, Some(Rational::new(6, 5)));
        // hbar * c - n * eps2 = 0 exactly
        let lhs = &p.hbar * p.c();
        let rhs = &Rational::integer(3) * &p.eps2;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degenerate_when_hbar_vanishes() {
        let err = ParamPoint::new(Rational::integer(1), Rational::integer(-1), 4, true)
            .unwrap_err();
        assert!(matches!(err, ParamError::DegenerateParameters(_)));
    }

    #[test]
    fn no_constraint_outside_regime() {
        let p = ParamPoint::new(Rational::new(2, 3), Rational::new(5, 7), 5, false).unwrap();
        assert_eq!(p.hbar, Rational::new(29, 21));
        assert_eq!(p.c_value, None);
    }

    #[test]
    fn rank_too_small() {
        let err = ParamPoint::new(Rational::one(), Rational::one(), 2, false).unwrap_err();
        assert_eq!(err, ParamError::RankTooSmall(2));
    }

    #[test]
    fn eps2_zero_is_degenerate() {
        let err = ParamPoint::new(Rational::one(), Rational::zero(), 3, true).unwrap_err();
        assert!(matches!(err, ParamError::DegenerateParameters(_)));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("22/7".parse::<Rational>().unwrap(), Rational::new(22, 7));
        assert_eq!("-5".parse::<Rational>().unwrap(), Rational::integer(-5));
        assert_eq!("4/6".parse::<Rational>().unwrap().to_string(), "2/3");
        assert_eq!("-3/6".parse::<Rational>().unwrap().to_string(), "-1/2");
        assert!("1.5".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("2/".parse::<Rational>().is_err());
    }

    #[test]
    fn reduced_with_positive_denominator() {
        let r = Rational::new(4, -6);
        assert_eq!(r, Rational::new(-2, 3));
        assert!(r.denom() > &num_bigint::BigInt::from(0));
    }
}
