//! Exact isolation parameter.
//!
//! Every isolation test is a strict inequality between an integer outdegree
//! quantity and a multiple of `c`, so `c` is kept as a reduced fraction and
//! all comparisons cross-multiply in `i128`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// The protocol value that effectively forbids any outgoing edge.
pub const EPSILON: &str = "0.001";

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsolationParam(Ratio<i64>);

impl IsolationParam {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidParam(format!("{numer}/{denom}")));
        }
        let r = Ratio::new(numer, denom);
        if r <= Ratio::from_integer(0) {
            return Err(Error::InvalidParam(format!("{numer}/{denom}")));
        }
        Ok(IsolationParam(r))
    }

    pub fn integer(value: i64) -> Result<Self> {
        Self::new(value, 1)
    }

    pub fn epsilon() -> Self {
        EPSILON.parse().expect("epsilon literal")
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn as_ratio(&self) -> Ratio<i64> {
        self.0
    }

    /// `lhs < mult * (base + c)`
    pub fn below(&self, lhs: i64, mult: i64, base: i64) -> bool {
        let (p, q) = (self.numer() as i128, self.denom() as i128);
        (lhs as i128) * q < (mult as i128) * ((base as i128) * q + p)
    }

    /// `lhs < c * mult`
    pub fn below_scaled(&self, lhs: i64, mult: i64) -> bool {
        self.below(lhs, mult, 0)
    }

    /// `floor(x + c)`
    pub fn floor_plus(&self, x: i64) -> i64 {
        let (p, q) = (self.numer() as i128, self.denom() as i128);
        (x as i128 * q + p).div_euclid(q) as i64
    }

    /// `floor(x - c)`
    pub fn floor_minus(&self, x: i64) -> i64 {
        let (p, q) = (self.numer() as i128, self.denom() as i128);
        (x as i128 * q - p).div_euclid(q) as i64
    }

    /// Smallest integer strictly greater than `x - c`.
    pub fn ceil_strict_minus(&self, x: i64) -> i64 {
        self.floor_minus(x) + 1
    }
}

impl FromStr for IsolationParam {
    type Err = Error;

    /// Accepts `"3"`, `"1.5"`, `"0.001"` and `"1/6"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParam(s.to_string());
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            return Self::new(n, d).map_err(|_| bad());
        }
        let (int_part, frac_part) = t.split_once('.').unwrap_or((t, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(int_part) || !all_digits(frac_part) || frac_part.len() > 15 {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: i64 = digits.parse().map_err(|_| bad())?;
        let denom = 10i64.pow(frac_part.len() as u32);
        Self::new(numer, denom).map_err(|_| bad())
    }
}

impl fmt::Display for IsolationParam {
    /// Finite decimal when the denominator divides a power of ten, else `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = (self.numer(), self.denom());
        if q == 1 {
            return write!(f, "{p}");
        }
        let mut rest = q;
        let (mut twos, mut fives) = (0u32, 0u32);
        while rest % 2 == 0 {
            rest /= 2;
            twos += 1;
        }
        while rest % 5 == 0 {
            rest /= 5;
            fives += 1;
        }
        if rest != 1 {
            return write!(f, "{p}/{q}");
        }
        let places = twos.max(fives);
        let scaled = p as i128 * (10i128.pow(places) / q as i128);
        let base = 10i128.pow(places);
        write!(
            f,
            "{}.{:0width$}",
            scaled / base,
            scaled % base,
            width = places as usize
        )
    }
}

impl fmt::Debug for IsolationParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={self}")
    }
}
