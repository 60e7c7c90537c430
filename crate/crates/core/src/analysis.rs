//! Full analysis of one curve: resolution, Hilbert tables, classification
//! and Bourbaki data.

use serde::{Deserialize, Serialize};

use crate::bourbaki::{self, BourbakiData, DPrime, RelationData};
use crate::classify::{self, dpw_bound, Classification};
use crate::error::AnalysisError;
use crate::groebner::Ideal;
use crate::invariants::{self, Invariants};
use crate::parse::parse_poly_spanned;
use crate::poly::Poly;
use crate::resolution::{minimal_resolution, Curve, ResolutionData};

pub const DEFAULT_MAX_DEGREE: u32 = 12;

/// Facts about a curve that are asserted, never computed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_components_rational: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_arrangement: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nearly_cuspidal: Option<bool>,
}

#[derive(Clone, Copy, Debug)]
pub struct AnalysisOptions {
    pub max_degree: u32,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

/// du Plessis–Wall data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpwRecord {
    pub bound: i64,
    pub equality: bool,
    /// `bound + 2d_1 - 1`, only for line arrangements.
    pub strict_bound: Option<i64>,
}

pub fn dpw_report(d: u32, d1: u32, tau: u64, is_line_arrangement: bool) -> DpwRecord {
    let bound = dpw_bound(d, d1);
    DpwRecord {
        bound,
        equality: tau as i64 == bound,
        strict_bound: is_line_arrangement.then(|| bound + 2 * d1 as i64 - 1),
    }
}

/// Everything derived from `B(C, r_1)` for a non-free curve.
#[derive(Clone, Debug)]
pub struct BourbakiSummary {
    pub data: BourbakiData,
    /// Only for 3-syzygy curves.
    pub relation: Option<RelationData>,
    pub d_prime: Option<DPrime>,
    /// `(g_2, g_3)` coprime, so that `B' = (g_2, g_3)` is a complete
    /// intersection of degree `deg g_2 · deg g_3`.
    pub sub_ci: bool,
}

impl BourbakiSummary {
    pub fn sub_ci_degree(&self) -> u64 {
        self.data.gen_degrees[0] as u64 * self.data.gen_degrees[1] as u64
    }
}

#[derive(Clone, Debug)]
pub struct CurveAnalysis {
    pub name: String,
    pub curve: Curve,
    pub meta: CurveMeta,
    pub resolution: ResolutionData,
    pub saturation: Ideal,
    pub invariants: Invariants,
    pub classification: Classification,
    pub bourbaki: Option<BourbakiSummary>,
    pub dpw: DpwRecord,
}

impl CurveAnalysis {
    pub fn d(&self) -> u32 {
        self.curve.degree()
    }

    pub fn m(&self) -> usize {
        self.resolution.m()
    }

    pub fn exponents(&self) -> &[u32] {
        self.resolution.exponents()
    }
}

/// Parses curve text, pointing at the first summand of the wrong degree
/// when the polynomial is not homogeneous.
pub fn parse_curve(text: &str) -> Result<Poly, AnalysisError> {
    let parsed = parse_poly_spanned(text)?;
    if let Some(position) = parsed.inhomogeneity_position() {
        return Err(AnalysisError::NotHomogeneous { position });
    }
    Ok(parsed.poly)
}

pub fn analyze_text(
    name: &str,
    text: &str,
    meta: CurveMeta,
    opts: &AnalysisOptions,
) -> Result<CurveAnalysis, AnalysisError> {
    analyze(name, parse_curve(text)?, meta, opts)
}

pub fn analyze(
    name: &str,
    f: Poly,
    meta: CurveMeta,
    opts: &AnalysisOptions,
) -> Result<CurveAnalysis, AnalysisError> {
    if let Some(degree) = f.degree() {
        if degree > opts.max_degree {
            return Err(AnalysisError::DegreeLimit {
                degree,
                limit: opts.max_degree,
            });
        }
    }
    let curve = Curve::new(f)?;
    let resolution = minimal_resolution(&curve)?;
    let saturation = curve.jacobian().saturate();
    let inv = invariants::compute(&curve, &saturation);
    let classification = classify::classify(&resolution, inv.tau, inv.nu)?;

    let bourbaki = if resolution.m() >= 3 {
        let data = bourbaki::bourbaki_ideal(&curve, &resolution)?;
        let relation = if resolution.m() == 3 {
            Some(bourbaki::unique_relation(&resolution, &data)?)
        } else {
            None
        };
        let d_prime = bourbaki::thm_new_dprime(&curve, &resolution, &data);
        let sub_ci = bourbaki::pair_dimension(&data.generators[0], &data.generators[1]) <= 1;
        Some(BourbakiSummary {
            data,
            relation,
            d_prime,
            sub_ci,
        })
    } else {
        None
    };

    let dpw = dpw_report(
        curve.degree(),
        resolution.exponents()[0],
        inv.tau,
        meta.line_arrangement == Some(true),
    );

    Ok(CurveAnalysis {
        name: name.to_string(),
        curve,
        meta,
        resolution,
        saturation,
        invariants: inv,
        classification,
        bourbaki,
        dpw,
    })
}
