//! Recognition of floating values as `p/q · e^{2πi k/L}`.

use std::fmt;

use num_complex::Complex;
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::scalar::{cnorm, Real};

/// `modulus · e^{2πi·turns}` with rational modulus (`0` is `0 · e(0)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactValue {
    pub modulus: Ratio<i64>,
    pub turns: Ratio<i64>,
}

impl ExactValue {
    pub const ZERO: ExactValue = ExactValue { modulus: Ratio::new_raw(0, 1), turns: Ratio::new_raw(0, 1) };

    pub fn is_zero(&self) -> bool {
        *self.modulus.numer() == 0
    }

    pub fn to_complex<T: Real>(&self) -> Complex<T> {
        let r = T::lit(*self.modulus.numer() as f64) / T::lit(*self.modulus.denom() as f64);
        let u = crate::cohomology::UnitScalar::from_exponent(self.turns).to_complex::<T>();
        Complex::new(u.re * r, u.im * r)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let m = self.modulus;
        let (n, d) = (*self.turns.numer(), *self.turns.denom());
        let unit = match (n, d) {
            (0, _) => return write!(f, "{m}"),
            (1, 2) => return write!(f, "-{m}"),
            (1, 4) => "i".to_string(),
            (3, 4) => return if m == Ratio::from_integer(1) { write!(f, "-i") } else { write!(f, "-{m}*i") },
            _ => format!("e({n}/{d})"),
        };
        if m == Ratio::from_integer(1) {
            write!(f, "{unit}")
        } else {
            write!(f, "{m}*{unit}")
        }
    }
}

impl Serialize for ExactValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Finds `p/q · e^{2πi k/conductor}` within `tol` of `z`, with `q ≤ max_den`.
pub fn recognize<T: Real>(z: Complex<T>, conductor: i64, max_den: i64, tol: T) -> Option<ExactValue> {
    let r = cnorm(z);
    if r < tol {
        return Some(ExactValue::ZERO);
    }
    let r64 = r.to_f64()?;
    let tol64 = tol.to_f64()?;
    let angle = num_traits::Float::atan2(z.im, z.re).to_f64()?;
    let l = conductor.max(1);
    let k = (angle * l as f64 / std::f64::consts::TAU).round() as i64;
    let residual = (angle - std::f64::consts::TAU * k as f64 / l as f64).abs() * r64;
    if residual > tol64 {
        return None;
    }
    let q = (1..=max_den.max(1)).find(|&q| {
        let p = (r64 * q as f64).round();
        (r64 * q as f64 - p).abs() <= tol64 * q as f64 && p >= 1.0
    })?;
    let p = (r64 * q as f64).round() as i64;
    let g = k.gcd(&l);
    let turns = Ratio::new((k / g).rem_euclid(l / g), l / g);
    Some(ExactValue { modulus: Ratio::new(p, q), turns })
}
