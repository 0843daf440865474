//! Tails `sum_{k > n} k^{-s}` of the Hurwitz zeta series.

use super::special::BERNOULLI_EVEN;

/// Direct summation is used until the Euler-Maclaurin anchor reaches this.
const EM_ANCHOR: u64 = 16;

/// Correction terms in the Euler-Maclaurin expansion of the tail.
const EM_TERMS: usize = 6;

/// `sum_{k = n+1}^{inf} k^{-s}` for real `s > 1`.
pub fn zeta_tail(s: f64, n: u64) -> f64 {
    debug_assert!(s > 1.0);
    let anchor = n.max(EM_ANCHOR);
    let mut direct = 0.0;
    for k in ((n + 1)..=anchor).rev() {
        direct += (k as f64).powf(-s);
    }
    direct + euler_maclaurin_tail(s, anchor as f64)
}

/// `int_m^inf t^{-s} dt - m^{-s}/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} m^{-s-2j+1}`.
fn euler_maclaurin_tail(s: f64, m: f64) -> f64 {
    let ms = m.powf(-s);
    let mut total = m * ms / (s - 1.0) - 0.5 * ms;
    // rising factorial (s)_{2j-1} / (2j)! folded into one running factor
    let mut rising = s;
    let mut factorial = 2.0;
    let mut power = ms / m;
    for j in 1..=EM_TERMS {
        total += BERNOULLI_EVEN[j - 1] / factorial * rising * power;
        let jf = j as f64;
        rising *= (s + 2.0 * jf - 1.0) * (s + 2.0 * jf);
        factorial *= (2.0 * jf + 1.0) * (2.0 * jf + 2.0);
        power /= m * m;
    }
    total
}
