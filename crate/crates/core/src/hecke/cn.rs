use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::formal::{boundary_sum, FormalMatSum, P1Divisor};
use super::matrix::IntMat2;
use super::orbit::orbit_canonical;
use crate::error::{Error, Result};

/// How the boundary condition is aggregated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CnMode {
    /// Every `SL_2(Z)` orbit must have boundary `(oo) - (0)`.
    #[default]
    PerOrbit,
    /// The whole sum must have boundary `k((oo) - (0))`, `k` the number of orbits.
    Total,
}

impl fmt::Display for CnMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CnMode::PerOrbit => "per-orbit",
            CnMode::Total => "total",
        })
    }
}

impl FromStr for CnMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "per-orbit" => Ok(CnMode::PerOrbit),
            "total" => Ok(CnMode::Total),
            other => Err(Error::domain(format!("unknown C_n mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitBoundary {
    pub canonical: IntMat2,
    pub members: Vec<IntMat2>,
    pub divisor: P1Divisor,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnReport {
    pub n: i64,
    pub mode: CnMode,
    pub pass: bool,
    pub orbits: Vec<OrbitBoundary>,
    pub total: P1Divisor,
}

impl CnReport {
    pub fn failing_orbits(&self) -> impl Iterator<Item = &OrbitBoundary> {
        self.orbits.iter().filter(|o| !o.pass)
    }
}

/// Checks the boundary condition `C_n` for a formal sum of determinant-`n` matrices.
pub fn check_cn(sum: &FormalMatSum, n: i64, mode: CnMode) -> Result<CnReport> {
    if n < 1 {
        return Err(Error::Range(format!("n must be positive, got {n}")));
    }
    if let Some(found) = sum.determinant() {
        if found != n {
            return Err(Error::MixedDeterminant { expected: n, found });
        }
    }

    let mut parts: BTreeMap<IntMat2, FormalMatSum> = BTreeMap::new();
    for (m, c) in sum.iter() {
        parts.entry(orbit_canonical(m)).or_default().add(*m, c)?;
    }

    let unit = P1Divisor::infinity_minus_zero();
    let orbits: Vec<OrbitBoundary> = parts
        .into_iter()
        .map(|(canonical, part)| {
            let divisor = boundary_sum(&part);
            OrbitBoundary {
                canonical,
                members: part.iter().map(|(m, _)| *m).collect(),
                pass: divisor == unit,
                divisor,
            }
        })
        .collect();

    let total = boundary_sum(sum);
    let pass = match mode {
        CnMode::PerOrbit => orbits.iter().all(|o| o.pass),
        CnMode::Total => total == unit.scaled(orbits.len() as i64),
    };
    Ok(CnReport {
        n,
        mode,
        pass,
        orbits,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{enumerate_s, theta, ProjPoint};

    #[test]
    fn theta_three_per_orbit() {
        let report = check_cn(&theta(3).unwrap(), 3, CnMode::PerOrbit).unwrap();
        assert!(report.pass);
        let reps: Vec<_> = report
            .orbits
            .iter()
            .map(|o| o.canonical.entries())
            .collect();
        assert_eq!(
            reps,
            vec![[1, 0, 0, 3], [3, 0, 0, 1], [3, 1, 0, 1], [3, 2, 0, 1]]
        );
        for o in &report.orbits {
            assert_eq!(o.divisor, P1Divisor::infinity_minus_zero());
        }
        assert_eq!(report.total, P1Divisor::infinity_minus_zero().scaled(4));
    }

    #[test]
    fn theta_three_total() {
        let report = check_cn(&theta(3).unwrap(), 3, CnMode::Total).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn theta_one() {
        let report = check_cn(&theta(1).unwrap(), 1, CnMode::PerOrbit).unwrap();
        assert!(report.pass);
        assert_eq!(report.orbits.len(), 1);
    }

    #[test]
    fn broken_chain_fails_on_its_orbit() {
        let mut sum = FormalMatSum::new();
        for m in enumerate_s(3).unwrap() {
            if m != IntMat2::from_entries(2, 1, 1, 2) {
                sum.add(m, 1).unwrap();
            }
        }
        let report = check_cn(&sum, 3, CnMode::PerOrbit).unwrap();
        assert!(!report.pass);
        let failing: Vec<_> = report.failing_orbits().collect();
        assert_eq!(failing.len(), 1);
        assert_eq!(failing[0].canonical, IntMat2::from_entries(3, 2, 0, 1));
        let mut expected = P1Divisor::infinity_minus_zero();
        expected.add(ProjPoint::integer(2), -1);
        expected.add(ProjPoint::from_pair(1, 2).unwrap(), 1);
        assert_eq!(failing[0].divisor, expected);
    }

    #[test]
    fn determinant_mismatch() {
        assert_eq!(
            check_cn(&theta(3).unwrap(), 2, CnMode::PerOrbit),
            Err(Error::MixedDeterminant {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("per-orbit".parse::<CnMode>().unwrap(), CnMode::PerOrbit);
        assert_eq!("total".parse::<CnMode>().unwrap(), CnMode::Total);
        assert!("whole".parse::<CnMode>().is_err());
    }
}
