//! Compensated summation and exact tails of the geometric-family series that
//! underlie every truncated Fock expansion in this crate.
//!
//! All tails are closed forms, so truncation error is certified rather than
//! estimated:
//!
//! ```text
//! sum_{k>n} (k+1) x^k    = x^(n+1) [(n+2) - (n+1)x] / (1-x)^2
//! sum_{k>n} k(k+1) x^k   = x^(n+1) [x(1+x)/(1-x)^3 + (2n+3)x/(1-x)^2 + (n+1)(n+2)/(1-x)]
//! ```

/// Neumaier-compensated accumulator. Keeps long normalization sums accurate
/// to a few ulps even over thousands of terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Sum a slice with compensation.
pub fn kahan_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = KahanSum::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}

/// Exact tail of `sum (k+1) x^k` beyond index `n` (differentiated geometric series).
pub fn weighted_geometric_tail(x: f64, n: usize) -> f64 {
    debug_assert!((0.0..1.0).contains(&x));
    if x == 0.0 {
        return 0.0;
    }
    let np1 = (n + 1) as f64;
    let np2 = (n + 2) as f64;
    x.powi(n as i32 + 1) * (np2 - np1 * x) / ((1.0 - x) * (1.0 - x))
}

/// Exact tail of `sum k(k+1) x^k` beyond index `n`.
pub fn second_moment_tail(x: f64, n: usize) -> f64 {
    debug_assert!((0.0..1.0).contains(&x));
    if x == 0.0 {
        return 0.0;
    }
    let np1 = (n + 1) as f64;
    let np2 = (n + 2) as f64;
    let one_minus = 1.0 - x;
    x.powi(n as i32 + 1)
        * (x * (1.0 + x) / one_minus.powi(3)
            + (2.0 * n as f64 + 3.0) * x / (one_minus * one_minus)
            + np1 * np2 / one_minus)
}
