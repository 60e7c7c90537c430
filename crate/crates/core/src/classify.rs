//! Curve classification by the shape of the resolution.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AnalysisError;
use crate::resolution::ResolutionData;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Smooth,
    Free { d1: u32, d2: u32 },
    NearlyFree { d1: u32, d2: u32 },
    PlusOneGenerated { d1: u32, d2: u32, d3: u32 },
    ThreeSyzygy { d1: u32, d2: u32, d3: u32 },
    MSyzygy { m: usize, exponents: Vec<u32> },
}

impl Verdict {
    /// Stable identifier used in reports.
    pub fn key(&self) -> &'static str {
        match self {
            Verdict::Smooth => "smooth",
            Verdict::Free { .. } => "free",
            Verdict::NearlyFree { .. } => "nearly_free",
            Verdict::PlusOneGenerated { .. } => "plus_one_generated",
            Verdict::ThreeSyzygy { .. } => "three_syzygy",
            Verdict::MSyzygy { .. } => "m_syzygy",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Smooth => write!(f, "smooth"),
            Verdict::Free { d1, d2 } => write!(f, "free ({d1},{d2})"),
            Verdict::NearlyFree { d1, d2 } => write!(f, "nearly free ({d1},{d2})"),
            Verdict::PlusOneGenerated { d1, d2, d3 } => {
                write!(f, "plus-one generated ({d1},{d2},{d3})")
            }
            Verdict::ThreeSyzygy { d1, d2, d3 } => write!(f, "3-syzygy ({d1},{d2},{d3})"),
            Verdict::MSyzygy { m, exponents } => {
                let e: Vec<String> = exponents.iter().map(u32::to_string).collect();
                write!(f, "{m}-syzygy ({})", e.join(","))
            }
        }
    }
}

/// Which of the two `ν = 2` shapes a curve has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Nu2Shape {
    /// Plus-one generated with exponents `(d_1, d-d_1, d-d_1+1)`.
    I,
    /// Four syzygies of equal degree `d_1` with `d = 2d_1 - 1`.
    II,
    Neither,
}

impl Nu2Shape {
    pub fn key(&self) -> &'static str {
        match self {
            Nu2Shape::I => "i",
            Nu2Shape::II => "ii",
            Nu2Shape::Neither => "neither",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// Plus-one generated in the wide sense, nearly free curves included.
    pub is_plus_one: bool,
    /// `τ` attains the du Plessis–Wall bound.
    pub minimal_tjurina: bool,
    pub nu2_shape: Nu2Shape,
}

/// du Plessis–Wall lower bound `(d-1)(d-d_1-1)`.
pub fn dpw_bound(d: u32, d1: u32) -> i64 {
    (d as i64 - 1) * (d as i64 - d1 as i64 - 1)
}

/// Classifies from the resolution shape and cross-checks against the
/// exponent arithmetic `d_1 + d_2`.
pub fn classify(res: &ResolutionData, tau: u64, nu: u64) -> Result<Classification, AnalysisError> {
    let d = res.d;
    let ds = res.exponents();
    let m = ds.len();
    if m < 2 {
        return Err(AnalysisError::Inconsistent(format!("{m} syzygy generators")));
    }
    let (d1, d2) = (ds[0], ds[1]);
    let sum = d1 + d2;

    let verdict = if tau == 0 {
        Verdict::Smooth
    } else {
        match m {
            2 => Verdict::Free { d1, d2 },
            3 if sum == d && ds[2] == d2 => Verdict::NearlyFree { d1, d2 },
            3 if sum == d => Verdict::PlusOneGenerated { d1, d2, d3: ds[2] },
            3 => Verdict::ThreeSyzygy { d1, d2, d3: ds[2] },
            _ => Verdict::MSyzygy {
                m,
                exponents: ds.to_vec(),
            },
        }
    };

    // the arithmetic view: free iff d_1+d_2 = d-1, plus-one iff d_1+d_2 = d
    let shape_free = m == 2 && res.e_list.is_empty();
    let arith_free = sum + 1 == d;
    let arith_plus_one = sum == d;
    let shape_plus_one = m == 3 && sum == d;
    if shape_free != arith_free || arith_plus_one != shape_plus_one {
        return Err(AnalysisError::Inconsistent(format!(
            "resolution shape (m = {m}) disagrees with d_1 + d_2 = {sum} for d = {d}"
        )));
    }

    let nu2_shape = if nu != 2 || tau == 0 {
        Nu2Shape::Neither
    } else if m == 3 && ds == [d1, d - d1, d - d1 + 1] {
        Nu2Shape::I
    } else if m == 4 && ds.iter().all(|&x| x == d1) && d + 1 == 2 * d1 {
        Nu2Shape::II
    } else {
        Nu2Shape::Neither
    };

    Ok(Classification {
        verdict,
        is_plus_one: shape_plus_one,
        minimal_tjurina: tau as i64 == dpw_bound(d, d1),
        nu2_shape,
    })
}
