//! Numeric traits the clustering code is generic over.
//!
//! [`Scalar`] is enough for everything that only needs ordered field
//! arithmetic: column ranges, range-based initial centroids, the initial
//! partition and cluster means. Exact rationals implement it, so those
//! operations can be checked without rounding. [`Real`] adds `Float` for the
//! parts that need a square root (distances, Lloyd iteration).

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

pub trait Scalar:
    Num + Copy + PartialOrd + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// `false` for NaN and infinities; always `true` for exact types.
    fn is_finite_value(self) -> bool;
}

impl Scalar for f32 {
    fn is_finite_value(self) -> bool {
        self.is_finite()
    }
}

impl Scalar for f64 {
    fn is_finite_value(self) -> bool {
        self.is_finite()
    }
}

impl Scalar for Ratio<i64> {
    fn is_finite_value(self) -> bool {
        true
    }
}

impl Scalar for Ratio<i128> {
    fn is_finite_value(self) -> bool {
        true
    }
}

/// Floating-point scalar.
pub trait Real: Scalar + Float {}

impl<T: Scalar + Float> Real for T {}

/// Converts a count into the scalar type.
///
/// Every type implementing [`Scalar`] in this crate represents all `usize`
/// values we pass (row counts and cluster ids), so this never fails in practice.
pub(crate) fn from_count<T: Scalar>(n: usize) -> T {
    T::from_usize(n).expect("count not representable in scalar type")
}
