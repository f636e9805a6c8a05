//! Compensated (Kahan) summation.
//!
//! Progression sums accumulate up to 10^8 terms of size up to log 10^8;
//! plain f64 accumulation would lose several digits. Every long float
//! accumulation in this crate goes through [`KahanSum`] so results are
//! reproducible and accurate to near machine precision.

/// Kahan compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }

    /// Sum an iterator with compensation.
    pub fn sum_iter<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc.value()
    }
}
