use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The root of unity `exp(2πi · num / order)`, always stored reduced:
/// `0 <= num < order` and `gcd(num, order) == 1` (the identity is `0/1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RootRepr", into = "RootRepr")]
pub struct RootOfUnity {
    num: u64,
    order: u64,
}

#[derive(Serialize, Deserialize)]
struct RootRepr {
    num: i64,
    den: u64,
}

impl TryFrom<RootRepr> for RootOfUnity {
    type Error = Error;
    fn try_from(r: RootRepr) -> Result<Self> {
        RootOfUnity::new(r.num, r.den)
    }
}

impl From<RootOfUnity> for RootRepr {
    fn from(r: RootOfUnity) -> Self {
        RootRepr {
            num: r.num as i64,
            den: r.order,
        }
    }
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, order: 1 };

    /// `exp(2πi · a / m)` for any integer `a`; fails only when `m == 0`.
    pub fn new(a: i64, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("root of unity with order 0".into()));
        }
        Ok(Self::reduce(a as i128, m as u128))
    }

    /// Primitive `m`-th root `exp(2πi / m)`.
    pub fn primitive(m: u64) -> Result<Self> {
        Self::new(1, m)
    }

    fn reduce(a: i128, m: u128) -> Self {
        let m_i = m as i128;
        let a = a.rem_euclid(m_i) as u128;
        let g = a.gcd(&m);
        let (num, order) = if a == 0 { (0, 1) } else { (a / g, m / g) };
        RootOfUnity {
            num: u64::try_from(num).expect("root of unity numerator overflow"),
            order: u64::try_from(order).expect("root of unity order overflow"),
        }
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    /// Multiplicative order, i.e. the reduced denominator.
    pub fn order(self) -> u64 {
        self.order
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    pub fn inverse(self) -> Self {
        Self::reduce(-(self.num as i128), self.order as u128)
    }

    pub fn pow(self, k: i64) -> Self {
        Self::reduce(self.num as i128 * k as i128, self.order as u128)
    }

    /// Every `k`-th root of `self`, i.e. all `z` with `z^k == self`, in
    /// increasing exponent order. The first entry is the principal root.
    pub fn roots(self, k: u64) -> Vec<Self> {
        let m = self.order as u128 * k as u128;
        (0..k as u128)
            .map(|j| Self::reduce((self.num as u128 + j * self.order as u128) as i128, m))
            .collect()
    }

    /// The principal `k`-th root: `exp(2πi · num / (order · k))`.
    pub fn principal_root(self, k: u64) -> Self {
        Self::reduce(self.num as i128, self.order as u128 * k as u128)
    }

    /// The root times the primitive `k`-th root raised to `j`.
    pub fn shifted(self, j: u64, k: u64) -> Self {
        let m = self.order as u128 * k as u128;
        Self::reduce(
            (self.num as u128 * k as u128 + j as u128 * self.order as u128) as i128,
            m,
        )
    }

    /// The angle `2π · num / order` in `[0, 2π)`.
    pub fn angle(self) -> f64 {
        std::f64::consts::TAU * (self.num as f64) / (self.order as f64)
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(1.0, self.angle())
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: Self) -> Self {
        let l = self.order.lcm(&rhs.order) as u128;
        let a =
            self.num as u128 * (l / self.order as u128) + rhs.num as u128 * (l / rhs.order as u128);
        Self::reduce(a as i128, l)
    }
}

impl Ord for RootOfUnity {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.order as u128;
        let rhs = other.num as u128 * self.order as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for RootOfUnity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({}/{})", self.num, self.order)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.order)
    }
}

/// A point coordinate: exactly zero or an exact root of unity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CoordRepr", into = "CoordRepr")]
pub enum ExactCoordinate {
    Zero,
    Unit(RootOfUnity),
}

#[derive(Serialize, Deserialize)]
struct CoordRepr {
    #[serde(skip_serializing_if = "Option::is_none")]
    zero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    num: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    den: Option<u64>,
}

impl TryFrom<CoordRepr> for ExactCoordinate {
    type Error = Error;
    fn try_from(c: CoordRepr) -> Result<Self> {
        match (c.zero, c.num, c.den) {
            (Some(true), None, None) => Ok(ExactCoordinate::Zero),
            (None | Some(false), Some(a), Some(m)) => {
                Ok(ExactCoordinate::Unit(RootOfUnity::new(a, m)?))
            }
            _ => Err(Error::InvalidInput(
                "coordinate must be {\"zero\":true} or {\"num\":a,\"den\":m}".into(),
            )),
        }
    }
}

impl From<ExactCoordinate> for CoordRepr {
    fn from(c: ExactCoordinate) -> Self {
        match c {
            ExactCoordinate::Zero => CoordRepr {
                zero: Some(true),
                num: None,
                den: None,
            },
            ExactCoordinate::Unit(r) => CoordRepr {
                zero: None,
                num: Some(r.num as i64),
                den: Some(r.order),
            },
        }
    }
}

impl ExactCoordinate {
    pub const ONE: ExactCoordinate = ExactCoordinate::Unit(RootOfUnity::ONE);

    pub fn is_zero(self) -> bool {
        matches!(self, ExactCoordinate::Zero)
    }

    pub fn unit(self) -> Option<RootOfUnity> {
        match self {
            ExactCoordinate::Zero => None,
            ExactCoordinate::Unit(r) => Some(r),
        }
    }

    pub fn pow(self, k: u64) -> Self {
        match self {
            ExactCoordinate::Zero => ExactCoordinate::Zero,
            ExactCoordinate::Unit(r) => ExactCoordinate::Unit(r.pow(k as i64)),
        }
    }

    pub fn scale(self, g: RootOfUnity) -> Self {
        match self {
            ExactCoordinate::Zero => ExactCoordinate::Zero,
            ExactCoordinate::Unit(r) => ExactCoordinate::Unit(r * g),
        }
    }

    pub fn to_complex(self) -> Complex64 {
        match self {
            ExactCoordinate::Zero => Complex64::new(0.0, 0.0),
            ExactCoordinate::Unit(r) => r.to_complex(),
        }
    }

    /// Parses the command-line encoding: `0` for zero, `1` for one, `a/m` for
    /// `exp(2πi·a/m)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "0" => return Ok(ExactCoordinate::Zero),
            "1" => return Ok(ExactCoordinate::ONE),
            _ => {}
        }
        let (a, m) = s.split_once('/').ok_or_else(|| {
            Error::InvalidInput(format!("coordinate `{s}` is not `0`, `1` or `a/m`"))
        })?;
        let a: i64 = a
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad numerator in `{s}`")))?;
        let m: u64 = m
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad order in `{s}`")))?;
        Ok(ExactCoordinate::Unit(RootOfUnity::new(a, m)?))
    }
}

impl fmt::Debug for ExactCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExactCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactCoordinate::Zero => write!(f, "0"),
            ExactCoordinate::Unit(r) if r.is_one() => write!(f, "1"),
            ExactCoordinate::Unit(r) => write!(f, "e({r})"),
        }
    }
}
