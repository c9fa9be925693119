use crate::{MsmError, Scalar};

/// The nonnegative cost `c` of a single split or merge.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CostParam<T>(T);

impl<T: Scalar> CostParam<T> {
    pub fn new(c: T) -> Result<Self, MsmError> {
        if c.is_finite() && c >= T::zero() {
            Ok(Self(c))
        } else {
            Err(MsmError::InvalidCost(c.to_f64_lossy()))
        }
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }
}

/// A nonnegative transformation cost.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Distance<T>(T);

impl<T: Scalar> Distance<T> {
    #[inline]
    pub(crate) fn new(value: T) -> Self {
        Self(value)
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }
}

/// Cost of producing point `xi` by a split or merge next to `prev`, when the
/// other series' point is `target`.
///
/// Equals `c` when `xi` lies between `prev` and `target` (inclusive),
/// otherwise `c` plus the distance from `xi` to the nearer of the two.
#[inline]
pub fn split_merge_cost<T: Scalar>(xi: T, prev: T, target: T, c: T) -> T {
    if (prev <= xi && xi <= target) || (prev >= xi && xi >= target) {
        c
    } else {
        c + (xi - prev).abs().min((xi - target).abs())
    }
}
