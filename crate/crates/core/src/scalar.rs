use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating point scalar accepted by every distance routine.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Stand-in for +infinity in dynamic programming borders.
    ///
    /// The largest finite value keeps `min` well defined and never produces NaN.
    #[inline]
    fn sentinel() -> Self {
        Self::max_value()
    }

    /// Converts an `f64` literal. Panics only if the target cannot represent
    /// finite `f64` values at all, which no implementor does.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("scalar must represent f64 literals")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
