//! Floating-point scalars used by the numerical layer (characters, matrices,
//! indicator sums). Exact phases live in [`crate::cohomology::UnitScalar`].

use nalgebra::RealField;
use num_complex::Complex;
use num_traits::{Float, FromPrimitive, ToPrimitive};

/// f32 or f64.
pub trait Real:
    RealField + Float + FromPrimitive + ToPrimitive + Copy + Send + Sync + std::fmt::Debug + 'static
{
    /// Eigenvalue gap below which two eigenvalues are treated as equal.
    fn eigen_gap() -> Self;
    /// Default tolerance for comparing indicator values.
    fn comparison_tolerance() -> Self;
    /// Tolerance for recognizing an exact cyclotomic value.
    fn recognition_tolerance() -> Self;

    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 literal representable")
    }
}

impl Real for f64 {
    fn eigen_gap() -> Self {
        1e-8
    }
    fn comparison_tolerance() -> Self {
        1e-9
    }
    fn recognition_tolerance() -> Self {
        1e-6
    }
}

impl Real for f32 {
    fn eigen_gap() -> Self {
        1e-3
    }
    fn comparison_tolerance() -> Self {
        1e-3
    }
    fn recognition_tolerance() -> Self {
        1e-3
    }
}

pub(crate) fn cnorm<T: Real>(z: Complex<T>) -> T {
    Float::sqrt(z.re * z.re + z.im * z.im)
}

pub(crate) fn czero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

pub(crate) fn cscale<T: Real>(z: Complex<T>, k: T) -> Complex<T> {
    Complex::new(z.re * k, z.im * k)
}
