use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phase::PhaseExp;

/// Absolute tolerance on the Gauss sum; the exact value is `±√n`.
pub const GAUSS_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = crate::error::ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "+" | "plus" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "minus" | "-1" => Ok(Sign::Minus),
            _ => Err(crate::error::ParseError::Sign(s.to_string())),
        }
    }
}

/// `Σ exp(2πi·q)` in a fixed summation order.
pub fn gauss_sum(values: &[PhaseExp]) -> (f64, f64) {
    values.iter().fold((0.0, 0.0), |(re, im), q| {
        let t = std::f64::consts::TAU * q.to_f64();
        (re + t.cos(), im + t.sin())
    })
}

/// Sign of a Gauss sum whose exact value is `±√n`, `n = values.len()`.
/// Anything else means the values did not come from a valid quadratic
/// refinement and is reported as an error.
pub fn gauss_sign(values: &[PhaseExp]) -> Result<Sign> {
    let (re, im) = gauss_sum(values);
    let expected = (values.len() as f64).sqrt();
    if im.abs() >= GAUSS_TOLERANCE || (re.abs() - expected).abs() >= GAUSS_TOLERANCE {
        return Err(Error::GaussSign {
            re,
            im,
            n: values.len(),
            expected,
        });
    }
    Ok(if re > 0.0 { Sign::Plus } else { Sign::Minus })
}
