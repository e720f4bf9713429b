use std::fmt;
use std::ops::{Div, DivAssign, Mul, MulAssign};
use std::str::FromStr;

use num_complex::Complex;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Rational exponent of a root of unity.
pub type Exponent = Ratio<i64>;

/// The root of unity `e^{2πi q}` stored exactly by `q ∈ [0, 1)`.
///
/// Multiplication adds exponents mod 1, so all cochain arithmetic is exact.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitScalar(Exponent);

fn reduce(q: Exponent) -> Exponent {
    let (n, d) = (*q.numer(), *q.denom());
    Ratio::new(n.mod_floor(&d), d)
}

impl UnitScalar {
    pub const ONE: UnitScalar = UnitScalar(Ratio::new_raw(0, 1));

    pub fn from_exponent(q: Exponent) -> Self {
        Self(reduce(q))
    }

    /// `e^{2πi num/den}`.
    pub fn from_turns(num: i64, den: i64) -> Self {
        Self::from_exponent(Ratio::new(num, den))
    }

    /// `-1`.
    pub fn minus_one() -> Self {
        Self::from_turns(1, 2)
    }

    /// `i`.
    pub fn i() -> Self {
        Self::from_turns(1, 4)
    }

    pub fn exponent(self) -> Exponent {
        self.0
    }

    pub fn denominator(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_one(self) -> bool {
        self.0.is_zero()
    }

    pub fn inv(self) -> Self {
        Self::from_exponent(-self.0)
    }

    pub fn pow(self, k: i64) -> Self {
        Self::from_exponent(self.0 * Ratio::from_integer(k))
    }

    /// Order of this root of unity.
    pub fn order(self) -> i64 {
        self.denominator()
    }

    /// Complex value, exact for multiples of a quarter turn.
    pub fn to_complex<T: Real>(self) -> Complex<T> {
        let (n, d) = (*self.0.numer(), *self.0.denom());
        let (z, o) = (T::zero(), T::one());
        if (4 * n) % d == 0 {
            return match 4 * n / d {
                0 => Complex::new(o, z),
                1 => Complex::new(z, o),
                2 => Complex::new(-o, z),
                _ => Complex::new(z, -o),
            };
        }
        let angle = T::two_pi() * T::lit(n as f64) / T::lit(d as f64);
        Complex::new(num_traits::Float::cos(angle), num_traits::Float::sin(angle))
    }
}

impl Default for UnitScalar {
    fn default() -> Self {
        Self::ONE
    }
}

impl One for UnitScalar {
    fn one() -> Self {
        Self::ONE
    }
}

impl Mul for UnitScalar {
    type Output = UnitScalar;
    fn mul(self, rhs: Self) -> Self {
        Self::from_exponent(self.0 + rhs.0)
    }
}

impl MulAssign for UnitScalar {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Div for UnitScalar {
    type Output = UnitScalar;
    fn div(self, rhs: Self) -> Self {
        Self::from_exponent(self.0 - rhs.0)
    }
}

impl DivAssign for UnitScalar {
    fn div_assign(&mut self, rhs: Self) {
        *self = *self / rhs;
    }
}

impl std::iter::Product for UnitScalar {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ONE, |a, b| a * b)
    }
}

impl fmt::Debug for UnitScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({})", self.0)
    }
}

/// Written as the exponent `p/q` (or `0`).
impl fmt::Display for UnitScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parses an exponent `p/q` or an integer (reduced mod 1).
pub fn parse_exponent(s: &str) -> Result<Exponent> {
    let bad = || Error::Parse(format!("bad exponent {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(n, d))
        }
        None => Ok(Ratio::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for UnitScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_exponent(s).map(Self::from_exponent)
    }
}

impl Serialize for UnitScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for UnitScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_mod_one() {
        let a = UnitScalar::from_turns(3, 4);
        let b = UnitScalar::from_turns(1, 2);
        assert_eq!(a * b, UnitScalar::from_turns(1, 4));
        assert_eq!(a * a.inv(), UnitScalar::ONE);
        assert_eq!(UnitScalar::from_turns(-1, 3), UnitScalar::from_turns(2, 3));
        assert_eq!(UnitScalar::minus_one().pow(2), UnitScalar::ONE);
        assert!(UnitScalar::from_turns(5, 5).is_one());
        assert_eq!(UnitScalar::i().order(), 4);
    }

    #[test]
    fn complex_values() {
        let c = UnitScalar::minus_one().to_complex::<f64>();
        assert_eq!((c.re, c.im), (-1.0, 0.0));
        let c = UnitScalar::i().to_complex::<f64>();
        assert_eq!((c.re, c.im), (0.0, 1.0));
        let c = UnitScalar::from_turns(1, 8).to_complex::<f64>();
        assert!((c.re - 0.5f64.sqrt()).abs() < 1e-15 && (c.im - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn parse_and_print() {
        let u: UnitScalar = "7/4".parse().unwrap();
        assert_eq!(u, UnitScalar::from_turns(3, 4));
        assert_eq!(u.to_string(), "3/4");
        assert_eq!("0".parse::<UnitScalar>().unwrap(), UnitScalar::ONE);
        assert!("1/0".parse::<UnitScalar>().is_err());
        let json = serde_json::to_string(&u).unwrap();
        assert_eq!(serde_json::from_str::<UnitScalar>(&json).unwrap(), u);
    }

    proptest! {
        #[test]
        fn product_matches_complex_product(a in -50i64..50, b in 1i64..30, c in -50i64..50, d in 1i64..30) {
            let x = UnitScalar::from_turns(a, b);
            let y = UnitScalar::from_turns(c, d);
            let lhs = (x * y).to_complex::<f64>();
            let rhs = x.to_complex::<f64>() * y.to_complex::<f64>();
            prop_assert!((lhs - rhs).norm() < 1e-12);
        }
    }
}
