use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::IntMat2;
use crate::numkernel::{zeta2, EvalOptions};

/// Version of the serialized report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// The identities this crate can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Theorem1,
    Rz,
    FiveTerm,
    Reflection,
    Telescope,
    ChainSum,
    Complement,
    Decomposition,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::Theorem1,
        Identity::Rz,
        Identity::FiveTerm,
        Identity::Reflection,
        Identity::Telescope,
        Identity::ChainSum,
        Identity::Complement,
        Identity::Decomposition,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Identity::Theorem1 => "theorem1",
            Identity::Rz => "rz",
            Identity::FiveTerm => "five-term",
            Identity::Reflection => "reflection",
            Identity::Telescope => "telescope",
            Identity::ChainSum => "chain-sum",
            Identity::Complement => "complement",
            Identity::Decomposition => "decomposition",
        }
    }

    /// Whether the identity is an equality rather than a congruence mod `zeta(2)`.
    pub fn is_exact(&self) -> bool {
        matches!(self, Identity::Rz | Identity::Complement)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Echo of the inputs of one check.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Params {
    /// `l` or `n`: the determinant of the matrix set involved.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<i64>,
    /// Chain index for chain sums.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<IntMat2>,
    pub x: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<f64>,
}

impl Params {
    pub fn point(x: f64, y: f64) -> Self {
        Params {
            x,
            y: Some(y),
            ..Params::default()
        }
    }

    pub fn with_order(mut self, order: i64) -> Self {
        self.order = Some(order);
        self
    }

    pub fn with_chain(mut self, chain: i64) -> Self {
        self.chain = Some(chain);
        self
    }

    pub fn with_matrix(mut self, m: IntMat2) -> Self {
        self.matrix = Some(m);
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(o) = self.order {
            write!(f, "l/n={o} ")?;
        }
        if let Some(c) = self.chain {
            write!(f, "chain={c} ")?;
        }
        if let Some(m) = self.matrix {
            write!(f, "M={m} ")?;
        }
        write!(f, "x={}", self.x)?;
        if let Some(y) = self.y {
            write!(f, " y={y}")?;
        }
        Ok(())
    }
}

/// `(k, |v - k zeta(2)|)` with `k = round(v / zeta(2))`.
pub fn nearest_zeta2_multiple(v: f64) -> (i64, f64) {
    let z = zeta2();
    let k = (v / z).round();
    (k as i64, (v - k * z).abs())
}

/// Outcome of one identity check at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: Identity,
    pub params: Params,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    /// Nearest integer multiple of `zeta(2)`; always 0 for exact identities.
    #[serde(rename = "k")]
    pub zeta2_multiple: i64,
    pub excess: f64,
    pub pass: bool,
    pub tolerance: f64,
    /// Estimated absolute evaluation error of `lhs - rhs`.
    pub err_budget: f64,
}

impl CheckReport {
    pub(crate) fn new(
        identity: Identity,
        params: Params,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        err_budget: f64,
    ) -> Self {
        let residual = lhs - rhs;
        let (k, excess) = if identity.is_exact() {
            (0, residual.abs())
        } else {
            nearest_zeta2_multiple(residual)
        };
        CheckReport {
            identity,
            params,
            lhs,
            rhs,
            residual,
            zeta2_multiple: k,
            excess,
            pass: excess <= tolerance,
            tolerance,
            err_budget,
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<10} {}  residual={:.6e} k={} excess={:.3e} tol={:.1e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.identity.name(),
            self.params,
            self.residual,
            self.zeta2_multiple,
            self.excess,
            self.tolerance
        )
    }
}

/// A grid point at which a check was not applicable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedPoint {
    pub identity: Identity,
    pub params: Params,
    pub reason: String,
}

/// Acceptance thresholds for each kind of check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Absolute residual bound for exact identities.
    pub exact: f64,
    /// Bound on the distance to the nearest multiple of `zeta(2)`.
    pub modular: f64,
    /// Bound for the complement sum, which involves no HZ evaluations.
    pub complement: f64,
    /// Bound for `L(x) + L(1/x) = 2 zeta(2)`.
    pub reflection: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            exact: 1e-8,
            modular: 1e-6,
            complement: 1e-10,
            reflection: 1e-12,
        }
    }
}

impl Tolerances {
    /// Sets both the exact and the modular bounds.
    pub fn uniform(tol: f64) -> Self {
        Tolerances {
            exact: tol,
            modular: tol,
            ..Tolerances::default()
        }
    }
}

/// The persisted form of a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema: u32,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub options: EvalOptions,
    pub reports: Vec<CheckReport>,
    pub skipped: Vec<SkippedPoint>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    identity: &'a str,
    l_or_n: Option<i64>,
    x: f64,
    y: Option<f64>,
    residual: f64,
    k: i64,
    excess: f64,
    pass: bool,
}

impl ReportFile {
    pub fn new(seed: u64, tolerances: Tolerances, options: EvalOptions) -> Self {
        ReportFile {
            schema: SCHEMA_VERSION,
            seed,
            tolerances,
            options,
            reports: Vec::new(),
            skipped: Vec::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are finite")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// One row per report: `identity,l_or_n,x,y,residual,k,excess,pass`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.reports {
            w.serialize(CsvRow {
                identity: r.identity.name(),
                l_or_n: r.params.order,
                x: r.params.x,
                y: r.params.y,
                residual: r.residual,
                k: r.zeta2_multiple,
                excess: r.excess,
                pass: r.pass,
            })
            .expect("in-memory csv write");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
    }
}
