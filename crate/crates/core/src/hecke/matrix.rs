use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer matrix `[[a, b], [c, d]]`.
///
/// Ordering is lexicographic on `(a, b, c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMat2 {
    pub const IDENTITY: IntMat2 = IntMat2 {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };
    /// `T = [[1, 1], [0, 1]]`.
    pub const T: IntMat2 = IntMat2 {
        a: 1,
        b: 1,
        c: 0,
        d: 1,
    };
    /// `S = [[0, -1], [1, 0]]`.
    pub const S: IntMat2 = IntMat2 {
        a: 0,
        b: -1,
        c: 1,
        d: 0,
    };

    /// Builds a matrix, rejecting non-positive determinants.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let m = IntMat2 { a, b, c, d };
        match m.checked_det() {
            Some(det) if det > 0 => Ok(m),
            Some(det) => Err(Error::domain(format!(
                "determinant of {m} is {det}, must be positive"
            ))),
            None => Err(Error::Range(format!("determinant of {m} overflows i64"))),
        }
    }

    pub const fn from_entries(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMat2 { a, b, c, d }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    fn checked_det(&self) -> Option<i64> {
        self.a
            .checked_mul(self.d)?
            .checked_sub(self.b.checked_mul(self.c)?)
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// `M * oo`, the first column read as a point of the projective line.
    pub fn at_infinity(&self) -> ProjPoint {
        ProjPoint::from_pair(self.a, self.c).expect("non-singular column")
    }

    /// `M * 0`, the second column read as a point of the projective line.
    pub fn at_zero(&self) -> ProjPoint {
        ProjPoint::from_pair(self.b, self.d).expect("non-singular column")
    }

    pub fn mul(&self, rhs: &IntMat2) -> IntMat2 {
        IntMat2 {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }

    /// Möbius image `(a x + c) / (b x + d)`.
    pub fn act(&self, x: f64) -> f64 {
        (self.a as f64 * x + self.c as f64) / (self.b as f64 * x + self.d as f64)
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for IntMat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMat2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [a, b, c, d] = <[i64; 4]>::deserialize(deserializer)?;
        Ok(IntMat2 { a, b, c, d })
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A point `p/q` of the rational projective line, stored reduced with
/// `q > 0`, or `(1, 0)` for infinity.
///
/// Points are ordered by value with infinity last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    p: i64,
    q: i64,
}

impl ProjPoint {
    pub const INFINITY: ProjPoint = ProjPoint { p: 1, q: 0 };
    pub const ZERO: ProjPoint = ProjPoint { p: 0, q: 1 };

    /// The point with homogeneous coordinates `(p : q)`; `None` for `(0 : 0)`.
    pub fn from_pair(p: i64, q: i64) -> Option<Self> {
        if q == 0 {
            return if p == 0 { None } else { Some(Self::INFINITY) };
        }
        let g = gcd(p, q);
        let sign = q.signum();
        Some(ProjPoint {
            p: sign * p / g,
            q: sign * q / g,
        })
    }

    pub fn integer(p: i64) -> Self {
        ProjPoint { p, q: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.p
    }

    pub fn denominator(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let lhs = self.p as i128 * other.q as i128;
                let rhs = other.p as i128 * self.q as i128;
                lhs.cmp(&rhs)
            }
        }
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            0 => f.write_str("inf"),
            1 => write!(f, "{}", self.p),
            q => write!(f, "{}/{}", self.p, q),
        }
    }
}

impl FromStr for ProjPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("cannot parse projective point `{s}`"));
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(Self::INFINITY);
        }
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            ),
            None => (s.parse().map_err(|_| bad())?, 1),
        };
        if q == 0 {
            return Err(bad());
        }
        ProjPoint::from_pair(p, q).ok_or_else(bad)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_infinite() {
            serializer.serialize_str("inf")
        } else {
            serializer.serialize_str(&format!("{}/{}", self.p, self.q))
        }
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
