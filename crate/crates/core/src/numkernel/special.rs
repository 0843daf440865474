//! Digamma, dilogarithm and the Rogers dilogarithm on the positive reals.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Even-index Bernoulli numbers `B_2, B_4, ..., B_18`.
pub(crate) const BERNOULLI_EVEN: [f64; 9] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
];

/// Arguments below this are shifted upward with `psi(z+1) = psi(z) + 1/z`.
pub(crate) const DIGAMMA_SHIFT: f64 = 16.0;

/// Number of Bernoulli terms in the digamma asymptotic series.
const DIGAMMA_TERMS: usize = 8;

/// `pi^2 / 6`.
pub fn zeta2() -> f64 {
    PI * PI / 6.0
}

/// Asymptotic series for `psi(w) - ln(w)`, valid once `w >= DIGAMMA_SHIFT`.
fn digamma_log_asymptotic(w: f64) -> f64 {
    let inv2 = 1.0 / (w * w);
    // Horner in 1/w^2 over B_{2k} / (2k), highest order first.
    let mut poly = 0.0;
    for k in (1..=DIGAMMA_TERMS).rev() {
        poly = poly * inv2 + BERNOULLI_EVEN[k - 1] / (2 * k) as f64;
    }
    -0.5 / w - poly * inv2
}

fn check_positive(z: f64, name: &str) -> Result<()> {
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::domain(format!(
            "{name} must be positive and finite, got {z}"
        )));
    }
    Ok(())
}

/// The digamma function `psi(z)` for `z > 0`.
pub fn digamma(z: f64) -> Result<f64> {
    check_positive(z, "digamma argument")?;
    let mut shift = 0.0;
    let mut w = z;
    while w < DIGAMMA_SHIFT {
        shift -= 1.0 / w;
        w += 1.0;
    }
    Ok(shift + w.ln() + digamma_log_asymptotic(w))
}

/// `psi(z) - ln(z)` without the cancellation of computing both separately.
///
/// The caller guarantees `z > 0` and finite.
pub(crate) fn digamma_minus_log(z: f64) -> f64 {
    if z >= DIGAMMA_SHIFT {
        return digamma_log_asymptotic(z);
    }
    let mut shift = 0.0;
    let mut w = z;
    while w < DIGAMMA_SHIFT {
        shift -= 1.0 / w;
        w += 1.0;
    }
    shift + (w / z).ln() + digamma_log_asymptotic(w)
}

/// Power series `sum t^n / n^2`, used only for `0 <= t <= 1/2`.
fn dilog_series(t: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = t;
    let mut n = 1.0_f64;
    loop {
        let term = power / (n * n);
        sum += term;
        if term <= f64::EPSILON * 0.125 * sum {
            break;
        }
        power *= t;
        n += 1.0;
    }
    sum
}

/// The dilogarithm `Li_2(x)` on `[0, 1]`.
pub fn dilog(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!(
            "dilog argument must lie in [0, 1], got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(zeta2());
    }
    if x <= 0.5 {
        Ok(dilog_series(x))
    } else {
        let t = 1.0 - x;
        Ok(zeta2() - (-t).ln_1p() * t.ln() - dilog_series(t))
    }
}

/// The Rogers dilogarithm `L(x)` on `(0, 1) u (1, inf)`.
///
/// On `(0, 1)` this is `Li_2(x) + ln(x) ln(1-x) / 2`; above 1 it is extended
/// by `L(x) = pi^2/3 - L(1/x)`. `L(1)` is rejected; use [`zeta2`] for the limit.
pub fn rogers(x: f64) -> Result<f64> {
    check_positive(x, "rogers argument")?;
    if x == 1.0 {
        return Err(Error::domain("rogers is undefined at x = 1"));
    }
    if x > 1.0 {
        return Ok(2.0 * zeta2() - rogers_unit(1.0 / x));
    }
    Ok(rogers_unit(x))
}

fn rogers_unit(x: f64) -> f64 {
    if x <= 0.5 {
        dilog_series(x) + 0.5 * x.ln() * (-x).ln_1p()
    } else {
        // Li_2(x) = pi^2/6 - ln x ln(1-x) - Li_2(1-x), so half the log product survives.
        let t = 1.0 - x;
        zeta2() - 0.5 * (-t).ln_1p() * t.ln() - dilog_series(t)
    }
}
