use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number, always in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalError {
    #[error("empty coefficient")]
    Empty,
    #[error("`{0}` is not of the form m or m/n")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self, RationalError> {
        if denom.is_zero() {
            return Err(RationalError::ZeroDenominator(format!("{numer}/{denom}")));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::new(BigInt::from(numer), BigInt::from(denom)).expect("nonzero denominator")
    }

    /// Exact value of a finite binary float.
    pub fn from_f64_exact(value: f64) -> Option<Self> {
        BigRational::from_float(value).map(Rational)
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Nearest binary64 value, ties to even.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    /// Accepts `-?[0-9]+(/[0-9]+)?`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(RationalError::Empty);
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = num.strip_prefix('-').unwrap_or(num);
        let all_digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(digits) || !den.is_none_or(all_digits) {
            return Err(RationalError::Malformed(s.to_string()));
        }
        let numer: BigInt = num.parse().map_err(|_| RationalError::Malformed(s.to_string()))?;
        let denom: BigInt = match den {
            Some(d) => d.parse().map_err(|_| RationalError::Malformed(s.to_string()))?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(RationalError::ZeroDenominator(s.to_string()));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        Rational(iter.fold(BigRational::zero(), |acc, r| acc + &r.0))
    }
}

impl Sum<Rational> for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        Rational(iter.fold(BigRational::zero(), |acc, r| acc + r.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!("1/4".parse::<Rational>().unwrap(), Rational::ratio(1, 4));
        assert_eq!("-8".parse::<Rational>().unwrap(), Rational::from_integer(-8));
        assert_eq!("6/8".parse::<Rational>().unwrap().to_string(), "3/4");
        assert_eq!("0/5".parse::<Rational>().unwrap(), Rational::zero());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "1/", "/2", "1.5", "+1", "1/-2", "--1", "a", "1/2/3", " 1"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} accepted");
        }
        assert_eq!(
            "3/0".parse::<Rational>(),
            Err(RationalError::ZeroDenominator("3/0".into()))
        );
    }

    #[test]
    fn denominator_is_positive() {
        let r = Rational::new(BigInt::from(3), BigInt::from(-6)).unwrap();
        assert_eq!(r.to_string(), "-1/2");
        assert!(r.denom() > &BigInt::zero());
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip(m in -1_000_000_000i64..=1_000_000_000, n in 1i64..=1_000_000_000) {
            let r = Rational::ratio(m, n);
            let back: Rational = r.to_string().parse().unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
