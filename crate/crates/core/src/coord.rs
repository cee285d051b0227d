//! Exact rational coordinates.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::StabError;

/// An exact rational coordinate. Comparisons never involve rounding.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord(BigRational);

impl Coord {
    pub fn new(numer: i64, denom: i64) -> Result<Self, StabError> {
        if denom == 0 {
            return Err(StabError::Parse("zero denominator".into()));
        }
        Ok(Coord(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self, StabError> {
        if denom.is_zero() {
            return Err(StabError::Parse("zero denominator".into()));
        }
        Ok(Coord(BigRational::new(numer, denom)))
    }

    pub fn zero() -> Self {
        Coord(BigRational::zero())
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Coord {
        Coord(self.0.abs())
    }

    /// The integer value, if this is an integer that fits in an `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        i64::try_from(self.0.numer()).ok()
    }

    /// Lossy conversion, used only for drawing.
    pub fn to_f64(&self) -> f64 {
        let n: f64 = self.0.numer().to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = self.0.denom().to_string().parse().unwrap_or(f64::NAN);
        n / d
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Coord {
    fn from(v: i64) -> Self {
        Coord(BigRational::from_integer(v.into()))
    }
}

impl From<i32> for Coord {
    fn from(v: i32) -> Self {
        Coord::from(v as i64)
    }
}

impl From<BigRational> for Coord {
    fn from(v: BigRational) -> Self {
        Coord(v)
    }
}

impl Add for &Coord {
    type Output = Coord;
    fn add(self, rhs: &Coord) -> Coord {
        Coord(&self.0 + &rhs.0)
    }
}

impl Sub for &Coord {
    type Output = Coord;
    fn sub(self, rhs: &Coord) -> Coord {
        Coord(&self.0 - &rhs.0)
    }
}

impl Mul for &Coord {
    type Output = Coord;
    fn mul(self, rhs: &Coord) -> Coord {
        Coord(&self.0 * &rhs.0)
    }
}

impl Neg for &Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-&self.0)
    }
}

impl Add for Coord {
    type Output = Coord;
    fn add(self, rhs: Coord) -> Coord {
        Coord(self.0 + rhs.0)
    }
}

impl Sub for Coord {
    type Output = Coord;
    fn sub(self, rhs: Coord) -> Coord {
        Coord(self.0 - rhs.0)
    }
}

impl Mul for Coord {
    type Output = Coord;
    fn mul(self, rhs: Coord) -> Coord {
        Coord(self.0 * rhs.0)
    }
}

impl Neg for Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-self.0)
    }
}

/// Formats as `p` for integers and `p/q` otherwise.
impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Coord {
    type Err = StabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || StabError::Parse(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Coord::from_big(n, d)
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Coord(BigRational::from_integer(n)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        let c: Coord = "6/4".parse().unwrap();
        assert_eq!(c.to_string(), "3/2");
        let c: Coord = "-7".parse().unwrap();
        assert_eq!(c.to_i64(), Some(-7));
        assert!("1/0".parse::<Coord>().is_err());
        assert!("abc".parse::<Coord>().is_err());
        assert!("1.5".parse::<Coord>().is_err());
    }

    #[test]
    fn ordering_is_exact() {
        let a: Coord = "1/3".parse().unwrap();
        let b: Coord = "333333333333333333/1000000000000000000".parse().unwrap();
        assert!(b < a);
        assert_ne!(a, b);
        let c: Coord = "2/6".parse().unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn big_integers_roundtrip() {
        let s = "123456789012345678901234567890";
        let c: Coord = s.parse().unwrap();
        assert_eq!(c.to_string(), s);
        assert_eq!(c.to_i64(), None);
    }
}
