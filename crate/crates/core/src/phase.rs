//! Exact roots of unity stored as rationals modulo one.
//!
//! A [`PhaseExp`] `p/q` stands for the scalar `exp(2πi·p/q)`. Multiplying
//! scalars is adding phases, so every multiplicative formula over `k*` is
//! written additively in this crate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// Reduced fraction `num/den` with `0 <= num < den`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct PhaseExp {
    num: u64,
    den: u64,
}

impl PhaseExp {
    pub const ZERO: PhaseExp = PhaseExp { num: 0, den: 1 };
    pub const HALF: PhaseExp = PhaseExp { num: 1, den: 2 };

    /// `num/den` reduced into `[0, 1)`. Panics on `den == 0`.
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0, "phase denominator must be positive");
        let d = den as i128;
        let n = (num as i128).rem_euclid(d);
        let g = n.gcd(&d);
        PhaseExp {
            num: (n / g) as u64,
            den: (d / g) as u64,
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// Integer multiple `n·q` (the `n`-th power of the scalar).
    pub fn scale(self, n: i64) -> Self {
        let prod = (self.num as i128 * n as i128).rem_euclid(self.den as i128);
        Self::reduce128(prod, self.den as i128)
    }

    /// All `x` with `n·x = self`, in increasing order. There are exactly `n`.
    pub fn divide(self, n: u64) -> Vec<PhaseExp> {
        assert!(n > 0);
        let den = self.den as i128 * n as i128;
        (0..n as i128)
            .map(|k| Self::reduce128(self.num as i128 + k * self.den as i128, den))
            .collect()
    }

    /// Smallest `x` in `[0,1)` with `n·x = self`.
    pub fn divide_least(self, n: u64) -> PhaseExp {
        assert!(n > 0);
        Self::reduce128(self.num as i128, self.den as i128 * n as i128)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `n` such that `n·self = 0`, i.e. the order of the root of unity.
    pub fn order(self) -> u64 {
        self.den
    }

    /// Numerator over an explicit denominator. `None` if `den` is not a
    /// multiple of the reduced denominator.
    pub fn numerator_over(self, den: u64) -> Option<u64> {
        if !den.is_multiple_of(self.den) {
            return None;
        }
        Some(self.num * (den / self.den))
    }

    fn reduce128(n: i128, d: i128) -> Self {
        let n = n.rem_euclid(d);
        let g = n.gcd(&d);
        PhaseExp {
            num: (n / g) as u64,
            den: (d / g) as u64,
        }
    }
}

impl Default for PhaseExp {
    fn default() -> Self {
        PhaseExp::ZERO
    }
}

impl Add for PhaseExp {
    type Output = PhaseExp;
    fn add(self, rhs: PhaseExp) -> PhaseExp {
        if rhs.num == 0 {
            return self;
        }
        if self.num == 0 {
            return rhs;
        }
        let l = self.den.lcm(&rhs.den) as i128;
        let n = self.num as i128 * (l / self.den as i128) + rhs.num as i128 * (l / rhs.den as i128);
        Self::reduce128(n, l)
    }
}

impl AddAssign for PhaseExp {
    fn add_assign(&mut self, rhs: PhaseExp) {
        *self = *self + rhs;
    }
}

impl Neg for PhaseExp {
    type Output = PhaseExp;
    fn neg(self) -> PhaseExp {
        if self.num == 0 {
            self
        } else {
            PhaseExp {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }
}

impl Sub for PhaseExp {
    type Output = PhaseExp;
    fn sub(self, rhs: PhaseExp) -> PhaseExp {
        self + (-rhs)
    }
}

impl SubAssign for PhaseExp {
    fn sub_assign(&mut self, rhs: PhaseExp) {
        *self = *self - rhs;
    }
}

impl std::iter::Sum for PhaseExp {
    fn sum<I: Iterator<Item = PhaseExp>>(iter: I) -> Self {
        iter.fold(PhaseExp::ZERO, |a, b| a + b)
    }
}

// Ordered as rationals in [0,1).
impl Ord for PhaseExp {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for PhaseExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PhaseExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for PhaseExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PhaseExp {
    type Err = ParseError;

    /// Accepts `p`, `p/q` and `-p/q`; the value is taken modulo one.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ParseError::Rational(s.to_string());
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: i64 = n.parse().map_err(|_| bad())?;
        let den: u64 = d.parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(PhaseExp::new(num, den))
    }
}

impl From<PhaseExp> for String {
    fn from(p: PhaseExp) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for PhaseExp {
    type Error = ParseError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}
