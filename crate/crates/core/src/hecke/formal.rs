//! Integer formal sums of matrices and of projective points.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::matrix::{IntMat2, ProjPoint};
use crate::error::{Error, Result};

/// A formal sum `sum u_M (M)` of matrices sharing one determinant.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FormalMatSum {
    det: Option<i64>,
    terms: BTreeMap<IntMat2, i64>,
}

impl FormalMatSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// The sum with coefficient one on each listed matrix.
    pub fn from_matrices<'a>(matrices: impl IntoIterator<Item = &'a IntMat2>) -> Result<Self> {
        let mut sum = Self::new();
        for m in matrices {
            sum.add(*m, 1)?;
        }
        Ok(sum)
    }

    pub fn add(&mut self, m: IntMat2, coeff: i64) -> Result<()> {
        let det = m.det();
        if det <= 0 {
            return Err(Error::domain(format!(
                "determinant of {m} is {det}, must be positive"
            )));
        }
        match self.det {
            Some(expected) if expected != det => {
                return Err(Error::MixedDeterminant {
                    expected,
                    found: det,
                })
            }
            _ => self.det = Some(det),
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&m);
        }
        Ok(())
    }

    /// Determinant shared by every matrix ever added.
    pub fn determinant(&self) -> Option<i64> {
        self.det
    }

    pub fn coefficient(&self, m: &IntMat2) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IntMat2, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// An element of `Z[P^1(Q)]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct P1Divisor {
    terms: BTreeMap<ProjPoint, i64>,
}

/// Serialized form of one divisor term.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct DivisorTerm {
    point: ProjPoint,
    coeff: i64,
}

impl P1Divisor {
    pub fn new() -> Self {
        Self::default()
    }

    /// `(oo) - (0)`.
    pub fn infinity_minus_zero() -> Self {
        let mut d = Self::new();
        d.add(ProjPoint::INFINITY, 1);
        d.add(ProjPoint::ZERO, -1);
        d
    }

    pub fn add(&mut self, point: ProjPoint, coeff: i64) {
        let entry = self.terms.entry(point).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&point);
        }
    }

    pub fn add_divisor(&mut self, other: &P1Divisor) {
        for (&p, &c) in &other.terms {
            self.add(p, c);
        }
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut out = Self::new();
        for (&p, &c) in &self.terms {
            out.add(p, k * c);
        }
        out
    }

    pub fn coefficient(&self, point: &ProjPoint) -> i64 {
        self.terms.get(point).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ProjPoint, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for P1Divisor {
    /// Highest point first, e.g. `(inf) - (2) + (1/2) - (0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, &c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match i {
                0 if c < 0 => f.write_str("-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "({p})")?;
        }
        Ok(())
    }
}

impl Serialize for P1Divisor {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<DivisorTerm> = self
            .terms
            .iter()
            .map(|(&point, &coeff)| DivisorTerm { point, coeff })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for P1Divisor {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<DivisorTerm>::deserialize(deserializer)?;
        let mut d = P1Divisor::new();
        for t in terms {
            d.add(t.point, t.coeff);
        }
        Ok(d)
    }
}

/// `sum_M u_M ((M oo) - (M 0))`.
pub fn boundary_sum(sum: &FormalMatSum) -> P1Divisor {
    let mut out = P1Divisor::new();
    for (m, c) in sum.iter() {
        out.add(m.at_infinity(), c);
        out.add(m.at_zero(), -c);
    }
    out
}

/// `(M oo, M 0)`.
pub fn boundary(m: &IntMat2) -> (ProjPoint, ProjPoint) {
    (m.at_infinity(), m.at_zero())
}
