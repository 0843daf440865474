//! High-accuracy special functions on the positive reals.
//!
//! The Herglotz-Zagier series `HZ(x) = sum_n (psi(nx) - ln(nx)) / n` is summed
//! to a cutoff `N` and the remainder is supplied by the asymptotic expansion
//! of `psi(z) - ln z`, whose per-`n` sums are Hurwitz zeta tails.

mod special;
mod tail;

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use special::{digamma, dilog, rogers, zeta2};
pub use tail::zeta_tail;

use special::{digamma_minus_log, BERNOULLI_EVEN, DIGAMMA_SHIFT};

/// Largest cutoff `hz` will grow to before rejecting an argument as too small.
const MAX_CUTOFF: u64 = 50_000_000;

/// Truncation controls for [`Kernel`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalOptions {
    pub target_abs_error: f64,
    /// Number of terms of the HZ series summed directly.
    pub series_cutoff: u64,
    /// Bernoulli correction orders in the HZ tail.
    pub tail_order: u32,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            target_abs_error: 1e-11,
            series_cutoff: 10_000,
            tail_order: 3,
        }
    }
}

impl EvalOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_error.is_finite() && self.target_abs_error > 0.0) {
            return Err(Error::Options(format!(
                "target_abs_error must be positive, got {}",
                self.target_abs_error
            )));
        }
        if self.series_cutoff < 16 {
            return Err(Error::Options(format!(
                "series_cutoff must be at least 16, got {}",
                self.series_cutoff
            )));
        }
        if !(1..=8).contains(&self.tail_order) {
            return Err(Error::Options(format!(
                "tail_order must lie in 1..=8, got {}",
                self.tail_order
            )));
        }
        Ok(())
    }
}

/// A binary64 value with an estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealValue {
    pub value: f64,
    pub err_bound: f64,
}

impl RealValue {
    pub fn new(value: f64, err_bound: f64) -> Self {
        debug_assert!(value.is_finite() && err_bound.is_finite() && err_bound >= 0.0);
        RealValue { value, err_bound }
    }
}

/// Neumaier compensated sum that also tracks the sum of magnitudes.
#[derive(Default)]
struct CompensatedSum {
    sum: f64,
    comp: f64,
    magnitude: f64,
}

impl CompensatedSum {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
        self.magnitude += v.abs();
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Evaluates `HZ(x)` with the given options.
pub fn hz(x: f64, opts: &EvalOptions) -> Result<RealValue> {
    opts.validate()?;
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!(
            "x must be positive and finite, got {x}"
        )));
    }

    // The tail expansion needs n*x beyond the digamma shift for every n > N.
    let mut cutoff = opts.series_cutoff.max((DIGAMMA_SHIFT / x).ceil() as u64);
    let mut order = opts.tail_order as usize;
    let truncation = |order: usize, cutoff: u64| -> f64 {
        let k = order + 1;
        BERNOULLI_EVEN[k - 1].abs() / (2 * k) as f64 / x.powi(2 * k as i32)
            * zeta_tail((2 * k + 1) as f64, cutoff)
    };
    while truncation(order, cutoff) > opts.target_abs_error && cutoff <= MAX_CUTOFF {
        if order < 8 {
            order += 1;
        } else {
            cutoff *= 2;
        }
    }
    if cutoff > MAX_CUTOFF {
        return Err(Error::domain(format!(
            "x = {x} is too small for series evaluation"
        )));
    }

    let mut partial = CompensatedSum::default();
    for n in (1..=cutoff).rev() {
        let nf = n as f64;
        partial.add(digamma_minus_log(nf * x) / nf);
    }

    let mut tail = -zeta_tail(2.0, cutoff) / (2.0 * x);
    for j in 1..=order {
        tail -= BERNOULLI_EVEN[j - 1] / (2 * j) as f64 / x.powi(2 * j as i32)
            * zeta_tail((2 * j + 1) as f64, cutoff);
    }

    let value = partial.value() + tail;
    let rounding = 8.0 * f64::EPSILON * (partial.magnitude + tail.abs());
    Ok(RealValue::new(value, truncation(order, cutoff) + rounding))
}

/// Evaluator for HZ, MHZ and RHZ sharing one set of options.
///
/// `HZ(1)` is computed on first use and cached; the cache is write-once and
/// the kernel may be shared across threads.
#[derive(Debug)]
pub struct Kernel {
    opts: EvalOptions,
    hz_one: OnceLock<RealValue>,
}

impl Default for Kernel {
    fn default() -> Self {
        Kernel {
            opts: EvalOptions::default(),
            hz_one: OnceLock::new(),
        }
    }
}

impl Kernel {
    pub fn new(opts: EvalOptions) -> Result<Self> {
        opts.validate()?;
        Ok(Kernel {
            opts,
            hz_one: OnceLock::new(),
        })
    }

    pub fn options(&self) -> &EvalOptions {
        &self.opts
    }

    pub fn hz(&self, x: f64) -> Result<RealValue> {
        hz(x, &self.opts)
    }

    /// The constant `HZ(1)`.
    pub fn hz_one(&self) -> RealValue {
        *self
            .hz_one
            .get_or_init(|| hz(1.0, &self.opts).expect("validated options accept x = 1"))
    }

    /// `MHZ(x) = HZ(x) - HZ(1) + (pi^2/12)(x - 2 + 1/x) - ln(x)^2 / 4`.
    pub fn mhz(&self, x: f64) -> Result<RealValue> {
        let h = self.hz(x)?;
        let one = self.hz_one();
        let ln = x.ln();
        let poly = PI * PI / 12.0 * (x - 2.0 + 1.0 / x);
        let value = h.value - one.value + poly - ln * ln / 4.0;
        let rounding =
            4.0 * f64::EPSILON * (h.value.abs() + one.value.abs() + poly.abs() + ln * ln);
        Ok(RealValue::new(
            value,
            h.err_bound + one.err_bound + rounding,
        ))
    }

    /// `RHZ(x, y) = MHZ(x) - MHZ(y) + L(y/x)`.
    pub fn rhz(&self, x: f64, y: f64) -> Result<RealValue> {
        for (name, v) in [("x", x), ("y", y)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::domain(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        if x == y {
            return Err(Error::domain("x must differ from y"));
        }
        let mx = self.mhz(x)?;
        let my = self.mhz(y)?;
        let l = rogers(y / x)?;
        let value = mx.value - my.value + l;
        let rounding = 4.0 * f64::EPSILON * (mx.value.abs() + my.value.abs() + l.abs());
        Ok(RealValue::new(
            value,
            mx.err_bound + my.err_bound + rounding,
        ))
    }
}
