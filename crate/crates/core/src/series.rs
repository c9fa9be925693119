use std::ops::Index;

use crate::{MsmError, Scalar};

/// A finite, non-empty, real-valued sequence.
///
/// Storage is 0-based. [`TimeSeries::at`] offers the 1-based view
/// (`x_1 ... x_m`) that the recurrences in this crate are written against.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries<T> {
    values: Vec<T>,
}

impl<T: Scalar> TimeSeries<T> {
    pub fn new(values: Vec<T>) -> Result<Self, MsmError> {
        if values.is_empty() {
            return Err(MsmError::EmptySeries);
        }
        if let Some((index, value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(MsmError::NonFinite {
                index,
                value: value.to_f64_lossy(),
            });
        }
        Ok(Self { values })
    }

    pub fn from_slice(values: &[T]) -> Result<Self, MsmError> {
        Self::new(values.to_vec())
    }

    /// The constant series `(q, ..., q)` of the given length.
    pub fn constant(q: T, len: usize) -> Result<Self, MsmError> {
        Self::new(vec![q; len])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with slices.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[T] {
        &self.values
    }

    /// 1-based access: `at(1)` is the first point.
    #[inline]
    pub fn at(&self, i: usize) -> T {
        self.values[i - 1]
    }

    pub fn into_inner(self) -> Vec<T> {
        self.values
    }

    /// The suffix `(x_i, ..., x_m)` for 1-based `i`.
    pub fn suffix(&self, i: usize) -> Result<Self, MsmError> {
        Self::from_slice(&self.values[i.saturating_sub(1).min(self.len())..])
    }

    /// The prefix `(x_1, ..., x_i)`.
    pub fn prefix(&self, i: usize) -> Result<Self, MsmError> {
        Self::from_slice(&self.values[..i.min(self.len())])
    }
}

impl<T> Index<usize> for TimeSeries<T> {
    type Output = T;

    fn index(&self, index: usize) -> &T {
        &self.values[index]
    }
}

impl<T: Scalar> TryFrom<Vec<T>> for TimeSeries<T> {
    type Error = MsmError;

    fn try_from(values: Vec<T>) -> Result<Self, MsmError> {
        Self::new(values)
    }
}

/// Shift to mean 0 and scale to population standard deviation 1.
///
/// Series whose standard deviation does not exceed `sqrt(epsilon)` map to
/// all zeros.
pub fn z_normalize<T: Scalar>(x: &TimeSeries<T>) -> TimeSeries<T> {
    let n = T::from_usize(x.len()).expect("length fits scalar");
    let mean = x.values.iter().fold(T::zero(), |acc, &v| acc + v) / n;
    let var = x
        .values
        .iter()
        .fold(T::zero(), |acc, &v| acc + (v - mean) * (v - mean))
        / n;
    let sd = var.sqrt();
    let values = if sd > T::epsilon().sqrt() {
        x.values.iter().map(|&v| (v - mean) / sd).collect()
    } else {
        vec![T::zero(); x.len()]
    };
    TimeSeries { values }
}
