use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating point scalar used by the numerical routines: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from a count.
    fn of(count: usize) -> Self {
        Self::from_usize(count).expect("count representable as float")
    }

    /// Lossy conversion from an `f64` constant.
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("finite literal")
    }

    /// Slack used when comparing objective values that should tie.
    fn tie_tolerance() -> Self {
        Self::epsilon() * Self::lit(1024.0)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
