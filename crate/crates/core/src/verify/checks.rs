use std::collections::BTreeSet;

use super::report::{CheckReport, Identity, Params, Tolerances};
use crate::error::{Error, Result};
use crate::hecke::{chain_decompose, divisors, enumerate_s, is_prime, sigma, Chain, IntMat2};
use crate::numkernel::{rogers, EvalOptions, Kernel};

/// Arguments of `L` closer than this to 1 are rejected.
pub const ARG_EXCLUSION: f64 = 1e-6;

/// Estimated absolute error of one Rogers dilogarithm evaluation.
const ROGERS_ERR: f64 = 1e-14;

/// `L(z)` with the singular neighbourhood of 1 excluded.
fn rogers_checked(z: f64) -> Result<f64> {
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::domain(format!("L argument {z} is not positive")));
    }
    if (z - 1.0).abs() < ARG_EXCLUSION {
        return Err(Error::domain(format!(
            "L argument {z} lies within {ARG_EXCLUSION:e} of 1"
        )));
    }
    rogers(z)
}

fn positive(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::domain(format!("{name} must be positive, got {v}")));
    }
    Ok(())
}

fn distinct_pair(x: f64, y: f64) -> Result<()> {
    positive("x", x)?;
    positive("y", y)?;
    if x == y {
        return Err(Error::domain("x must differ from y"));
    }
    Ok(())
}

fn prime(l: i64) -> Result<()> {
    if l < 2 || !is_prime(l as u64) {
        return Err(Error::NotPrime(l.max(0) as u64));
    }
    Ok(())
}

/// `(x + c/a) / (x + d/b)`, shared by the RZ sum and the telescope step.
fn rz_argument(m: &IntMat2, x: f64) -> f64 {
    let (a, b, c, d) = (m.a as f64, m.b as f64, m.c as f64, m.d as f64);
    (x + c / a) / (x + d / b)
}

/// `(ay + c)(bx + d) / ((by + d)(ax + c))`, the ratio `M y / M x`.
fn slashed_ratio(m: &IntMat2, x: f64, y: f64) -> f64 {
    let (a, b, c, d) = (m.a as f64, m.b as f64, m.c as f64, m.d as f64);
    ((a * y + c) * (b * x + d)) / ((b * y + d) * (a * x + c))
}

/// `L((bx + d)/(by + d)) - L((ax + c)/(ay + c))`.
fn telescope_term(m: &IntMat2, x: f64, y: f64) -> Result<f64> {
    let (a, b, c, d) = (m.a as f64, m.b as f64, m.c as f64, m.d as f64);
    Ok(rogers_checked((b * x + d) / (b * y + d))? - rogers_checked((a * x + c) / (a * y + c))?)
}

/// Runs identity checks against one [`Kernel`].
#[derive(Debug, Default)]
pub struct Verifier {
    kernel: Kernel,
    tol: Tolerances,
}

impl Verifier {
    pub fn new(opts: EvalOptions, tol: Tolerances) -> Result<Self> {
        Ok(Verifier {
            kernel: Kernel::new(opts)?,
            tol,
        })
    }

    pub fn with_tolerances(tol: Tolerances) -> Self {
        Verifier {
            kernel: Kernel::default(),
            tol,
        }
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    /// `L(x) - L(y) + L(y/x) - L((y-1)/(x-1)) + L((1-1/y)/(1-1/x)) = 0 mod zeta(2)`.
    pub fn check_five_term(&self, x: f64, y: f64) -> Result<CheckReport> {
        distinct_pair(x, y)?;
        if x == 1.0 || y == 1.0 {
            return Err(Error::domain("x and y must differ from 1"));
        }
        if (x > 1.0) != (y > 1.0) {
            return Err(Error::domain("x and y must lie on the same side of 1"));
        }
        let args = [
            x,
            y,
            y / x,
            (y - 1.0) / (x - 1.0),
            (1.0 - 1.0 / y) / (1.0 - 1.0 / x),
        ];
        let mut vals = [0.0; 5];
        for (v, &z) in vals.iter_mut().zip(&args) {
            *v = rogers_checked(z)?;
        }
        let lhs = vals[0] - vals[1] + vals[2] - vals[3] + vals[4];
        Ok(CheckReport::new(
            Identity::FiveTerm,
            Params::point(x, y),
            lhs,
            0.0,
            self.tol.modular,
            5.0 * ROGERS_ERR,
        ))
    }

    /// `L(x) + L(1/x) = 2 zeta(2)`; passes only with multiple exactly 2.
    pub fn check_reflection(&self, x: f64) -> Result<CheckReport> {
        positive("x", x)?;
        if x == 1.0 {
            return Err(Error::domain("x must differ from 1"));
        }
        let lhs = rogers(x)? + rogers(1.0 / x)?;
        let params = Params {
            x,
            ..Params::default()
        };
        let mut report = CheckReport::new(
            Identity::Reflection,
            params,
            lhs,
            0.0,
            self.tol.reflection,
            2.0 * ROGERS_ERR,
        );
        report.pass &= report.zeta2_multiple == 2;
        Ok(report)
    }

    /// Radchenko-Zagier: `MHZ|theta_n(x) - sigma(n) MHZ(x)` against the
    /// Rogers sum over `S_n^+` plus the divisor-weighted logarithm term.
    pub fn check_rz(&self, n: i64, x: f64) -> Result<CheckReport> {
        if n < 1 {
            return Err(Error::Range(format!("n must be positive, got {n}")));
        }
        positive("x", x)?;
        let set = enumerate_s(n)?;
        let mut budget = 0.0;
        let mut lhs = 0.0;
        for m in &set {
            let v = self.kernel.mhz(m.act(x))?;
            lhs += v.value;
            budget += v.err_bound;
        }
        let base = self.kernel.mhz(x)?;
        let sig = sigma(n as u64) as f64;
        lhs -= sig * base.value;
        budget += sig * base.err_bound;

        let mut rhs = 0.0;
        for m in set.iter().filter(|m| m.b > 0) {
            rhs += rogers_checked(rz_argument(m, x))? - rogers_checked(rz_argument(m, 1.0))?;
            budget += 2.0 * ROGERS_ERR;
        }
        let nf = n as f64;
        let divisor_term: f64 = divisors(n as u64)
            .into_iter()
            .map(|r| {
                let r = r as f64;
                r * (r * r / nf).ln()
            })
            .sum();
        rhs += 0.5 * divisor_term * x.ln();

        Ok(CheckReport::new(
            Identity::Rz,
            Params {
                order: Some(n),
                x,
                ..Params::default()
            },
            lhs,
            rhs,
            self.tol.exact,
            budget,
        ))
    }

    /// `RHZ|theta_l(x, y) = (l+1) RHZ(x, y) + (l-1)/2 log(l) log(x/y) mod zeta(2)`.
    pub fn check_theorem1(&self, l: i64, x: f64, y: f64) -> Result<CheckReport> {
        prime(l)?;
        distinct_pair(x, y)?;
        let (lhs, rhs, budget) = self.theorem1_sides(l, x, y)?;
        Ok(CheckReport::new(
            Identity::Theorem1,
            Params::point(x, y).with_order(l),
            lhs,
            rhs,
            self.tol.modular,
            budget,
        ))
    }

    fn theorem1_sides(&self, l: i64, x: f64, y: f64) -> Result<(f64, f64, f64)> {
        let mut lhs = 0.0;
        let mut budget = 0.0;
        for m in enumerate_s(l)? {
            let v = self.kernel.rhz(m.act(x), m.act(y))?;
            lhs += v.value;
            budget += v.err_bound;
        }
        let base = self.kernel.rhz(x, y)?;
        let lf = l as f64;
        let rhs = (lf + 1.0) * base.value + (lf - 1.0) / 2.0 * lf.ln() * (x / y).ln();
        Ok((lhs, rhs, budget + (lf + 1.0) * base.err_bound))
    }

    /// One step of the telescoping argument for `M` in `S_l^+`.
    pub fn check_telescope(&self, m: &IntMat2, l: i64, x: f64, y: f64) -> Result<CheckReport> {
        if m.det() != l || !(0 < m.b && m.b < m.a && 0 <= m.c && m.c < m.d) {
            return Err(Error::domain(format!("{m} is not an element of S_{l}^+")));
        }
        distinct_pair(x, y)?;
        let lhs = rogers_checked(rz_argument(m, x))? - rogers_checked(rz_argument(m, y))?
            + rogers_checked(slashed_ratio(m, x, y))?;
        let rhs = telescope_term(m, x, y)?;
        Ok(CheckReport::new(
            Identity::Telescope,
            Params::point(x, y).with_order(l).with_matrix(*m),
            lhs,
            rhs,
            self.tol.modular,
            5.0 * ROGERS_ERR,
        ))
    }

    /// Sum of telescope terms over chain `C_n` of `S_l`.
    pub fn check_chain_sum(&self, l: i64, n: i64, x: f64, y: f64) -> Result<CheckReport> {
        prime(l)?;
        if !(1..l).contains(&n) {
            return Err(Error::Range(format!(
                "chain index must lie in 1..{l}, got {n}"
            )));
        }
        let dec = chain_decompose(l as u64)?;
        self.chain_sum_report(l, &dec.chains[n as usize - 1], x, y)
    }

    pub(crate) fn chain_sum_report(
        &self,
        l: i64,
        chain: &Chain,
        x: f64,
        y: f64,
    ) -> Result<CheckReport> {
        distinct_pair(x, y)?;
        let (lhs, rhs, terms) = chain_sum_sides(chain, x, y)?;
        Ok(CheckReport::new(
            Identity::ChainSum,
            Params::point(x, y).with_order(l).with_chain(chain.index),
            lhs,
            rhs,
            self.tol.modular,
            terms as f64 * ROGERS_ERR,
        ))
    }

    /// The `b = 0` part of `S_l` and its contribution to the slashed Rogers sum.
    pub fn check_complement_sum(&self, l: i64, x: f64, y: f64) -> Result<CheckReport> {
        prime(l)?;
        distinct_pair(x, y)?;
        let complement = complement_of_plus(l)?;
        let lhs = complement
            .iter()
            .map(|m| rogers_checked(slashed_ratio(m, x, y)))
            .sum::<Result<f64>>()?;
        let rhs = complement_closed_form(l, x, y)?;
        Ok(CheckReport::new(
            Identity::Complement,
            Params::point(x, y).with_order(l),
            lhs,
            rhs,
            self.tol.complement,
            2.0 * (l as f64 + 1.0) * ROGERS_ERR,
        ))
    }

    /// Compares the main-equation residual, computed through HZ, with its
    /// reconstruction from the chain sums, the complement sum and the
    /// `(l+1) L(y/x)` term. Agreement is required mod `zeta(2)` within ten
    /// times the modular tolerance.
    pub fn check_decomposition(&self, l: i64, x: f64, y: f64) -> Result<CheckReport> {
        prime(l)?;
        distinct_pair(x, y)?;
        let (t_lhs, t_rhs, budget) = self.theorem1_sides(l, x, y)?;
        let residual = t_lhs - t_rhs;

        let dec = chain_decompose(l as u64)?;
        let mut predicted = 0.0;
        for chain in &dec.chains {
            predicted += chain_sum_sides(chain, x, y)?.1;
        }
        predicted += complement_closed_form(l, x, y)?;
        predicted -= (l as f64 + 1.0) * rogers_checked(y / x)?;

        Ok(CheckReport::new(
            Identity::Decomposition,
            Params::point(x, y).with_order(l),
            residual,
            predicted,
            10.0 * self.tol.modular,
            budget + 4.0 * l as f64 * ROGERS_ERR,
        ))
    }
}

/// `(sum over C_n with b > 0 of telescope terms, L((x+x_n)/(y+x_n)) - L(x/y), term count)`.
fn chain_sum_sides(chain: &Chain, x: f64, y: f64) -> Result<(f64, f64, usize)> {
    let mut lhs = 0.0;
    let mut count = 0;
    for m in chain.plus_part() {
        lhs += telescope_term(m, x, y)?;
        count += 2;
    }
    let xn = chain.x_n as f64;
    let rhs = rogers_checked((x + xn) / (y + xn))? - rogers_checked(x / y)?;
    Ok((lhs, rhs, count + 2))
}

/// `sum_{n=1}^{l-1} L((y+n)/(x+n)) + 2 L(y/x)`.
fn complement_closed_form(l: i64, x: f64, y: f64) -> Result<f64> {
    let mut sum = 2.0 * rogers_checked(y / x)?;
    for n in 1..l {
        let nf = n as f64;
        sum += rogers_checked((y + nf) / (x + nf))?;
    }
    Ok(sum)
}

/// `S_l \ S_l^+`, checked against `{[[l,0],[0,1]], [[1,0],[n,l]] : 0 <= n < l}`.
fn complement_of_plus(l: i64) -> Result<Vec<IntMat2>> {
    let found: BTreeSet<IntMat2> = enumerate_s(l)?.into_iter().filter(|m| m.b == 0).collect();
    let expected: BTreeSet<IntMat2> = std::iter::once(IntMat2::from_entries(l, 0, 0, 1))
        .chain((0..l).map(|n| IntMat2::from_entries(1, 0, n, l)))
        .collect();
    if found != expected {
        return Err(Error::Structure(format!(
            "S_{l} \\ S_{l}^+ has {} elements, expected {}",
            found.len(),
            expected.len()
        )));
    }
    Ok(found.into_iter().collect())
}
