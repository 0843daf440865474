use super::formal::FormalMatSum;
use super::matrix::IntMat2;
use crate::error::{Error, Result};

/// Largest determinant accepted by [`enumerate_s`].
pub const MAX_DETERMINANT: i64 = 1_000_000;

/// All `[[a, b], [c, d]]` with `0 <= b < a`, `0 <= c < d` and `ad - bc = n`,
/// sorted lexicographically by `(a, b, c, d)`.
pub fn enumerate_s(n: i64) -> Result<Vec<IntMat2>> {
    if !(1..=MAX_DETERMINANT).contains(&n) {
        return Err(Error::Range(format!(
            "determinant must lie in 1..={MAX_DETERMINANT}, got {n}"
        )));
    }
    let mut out = Vec::new();
    // bc = ad - n <= (a-1)(d-1) forces a + d <= n + 1
    for a in 1..=n {
        let d_min = (n + a - 1) / a;
        for d in d_min..=(n + 1 - a) {
            let m = a * d - n;
            if m == 0 {
                out.extend((0..d).map(|c| IntMat2::from_entries(a, 0, c, d)));
                out.extend((1..a).map(|b| IntMat2::from_entries(a, b, 0, d)));
                continue;
            }
            let mut push = |b: i64, c: i64| {
                if b < a && c < d {
                    out.push(IntMat2::from_entries(a, b, c, d));
                }
            };
            let mut b = 1;
            while b * b <= m {
                if m % b == 0 {
                    push(b, m / b);
                    if b * b != m {
                        push(m / b, b);
                    }
                }
                b += 1;
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The elements with `b > 0`, order preserved.
pub fn s_plus(matrices: &[IntMat2]) -> Vec<IntMat2> {
    matrices.iter().copied().filter(|m| m.b > 0).collect()
}

/// `theta_n`, the formal sum of every element of `S_n`.
pub fn theta(n: i64) -> Result<FormalMatSum> {
    FormalMatSum::from_matrices(&enumerate_s(n)?)
}

/// Divisor sum `sigma(n)`.
pub fn sigma(n: u64) -> u64 {
    divisors(n).into_iter().sum()
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut r = 1;
    while r * r <= n {
        if n.is_multiple_of(r) {
            small.push(r);
            if r * r != n {
                large.push(n / r);
            }
        }
        r += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut r = 2;
    while r * r <= n {
        if n.is_multiple_of(r) {
            return false;
        }
        r += 1;
    }
    true
}

/// `((a x_i + c) / (b x_i + d))_i`: the substitution used by the slash action.
pub fn slash_points(m: &IntMat2, xs: &[f64]) -> Result<Vec<f64>> {
    xs.iter()
        .map(|&x| {
            if !x.is_finite() || x <= 0.0 {
                return Err(Error::domain(format!(
                    "slash argument must be positive, got {x}"
                )));
            }
            let den = m.b as f64 * x + m.d as f64;
            if den == 0.0 {
                return Err(Error::domain(format!("{m} sends {x} to infinity")));
            }
            Ok(m.act(x))
        })
        .collect()
}
