//! Versioned, deterministic JSON report of a curve analysis.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::{CurveAnalysis, CurveMeta, DpwRecord};
use crate::audit::{audit, AuditCheck, AuditReport, Status};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub curve: CurveSection,
    pub invariants: InvariantSection,
    pub hilbert: HilbertSection,
    pub classification: ClassificationSection,
    pub bourbaki: Option<BourbakiSection>,
    pub dpw: DpwRecord,
    pub audit: Vec<AuditCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSection {
    pub name: String,
    pub f: String,
    pub d: u32,
    #[serde(default)]
    pub meta: CurveMeta,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSection {
    pub m: usize,
    pub exponents: Vec<u32>,
    pub e_list: Vec<u32>,
    pub epsilons: Vec<i64>,
    pub tau: u64,
    pub nu: u64,
    pub sigma: Option<u32>,
    /// `T + 1` for smooth curves.
    pub ct: u32,
    pub st: u32,
    pub reg: u32,
    #[serde(rename = "T")]
    pub t: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSection {
    #[serde(rename = "M")]
    pub milnor: Vec<u64>,
    #[serde(rename = "N")]
    pub jacobian_module: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationSection {
    pub verdict: String,
    pub is_plus_one: bool,
    pub minimal_tjurina: bool,
    pub nu2_shape: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BourbakiSection {
    pub gen_degrees: Vec<u32>,
    pub degree: u64,
    pub complete_intersection: bool,
    pub d_prime: Option<u32>,
}

impl Report {
    pub fn new(a: &CurveAnalysis, audit: &AuditReport) -> Report {
        let inv = &a.invariants;
        let cl = &a.classification;
        Report {
            schema_version: SCHEMA_VERSION,
            curve: CurveSection {
                name: a.name.clone(),
                f: a.curve.f().to_string(),
                d: a.d(),
                meta: a.meta.clone(),
            },
            invariants: InvariantSection {
                m: a.m(),
                exponents: a.exponents().to_vec(),
                e_list: a.resolution.e_list.clone(),
                epsilons: a.resolution.epsilons(),
                tau: inv.tau,
                nu: inv.nu,
                sigma: inv.sigma,
                ct: inv.ct,
                st: inv.st,
                reg: inv.reg,
                t: inv.t,
            },
            hilbert: HilbertSection {
                milnor: inv.milnor.clone(),
                jacobian_module: inv.jacobian_module.clone(),
            },
            classification: ClassificationSection {
                verdict: cl.verdict.key().to_string(),
                is_plus_one: cl.is_plus_one,
                minimal_tjurina: cl.minimal_tjurina,
                nu2_shape: cl.nu2_shape.key().to_string(),
            },
            bourbaki: a.bourbaki.as_ref().map(|b| BourbakiSection {
                gen_degrees: b.data.gen_degrees.clone(),
                degree: b.data.degree,
                complete_intersection: b.data.is_complete_intersection,
                d_prime: b.d_prime.as_ref().map(|p| p.d_prime),
            }),
            dpw: a.dpw.clone(),
            audit: audit.checks.clone(),
        }
    }

    /// Runs the audit and builds the report.
    pub fn from_analysis(a: &CurveAnalysis) -> Report {
        Report::new(a, &audit(a))
    }

    pub fn audit_failures(&self) -> impl Iterator<Item = &AuditCheck> {
        self.audit.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    /// Short human-readable summary.
    pub fn to_text(&self) -> String {
        let inv = &self.invariants;
        let mut out = String::new();
        let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(", ");
        let _ = writeln!(out, "{}: f = {} (d = {})", self.curve.name, self.curve.f, self.curve.d);
        let _ = writeln!(out, "  classification: {}", self.classification.verdict);
        let _ = writeln!(out, "  exponents: ({}), e: ({})", list(&inv.exponents), list(&inv.e_list));
        let sigma = inv.sigma.map_or("-".to_string(), |s| s.to_string());
        let _ = writeln!(
            out,
            "  tau = {}, nu = {}, sigma = {}, ct = {}, st = {}, T = {}",
            inv.tau, inv.nu, sigma, inv.ct, inv.st, inv.t
        );
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "  M(f): {}", join(&self.hilbert.milnor));
        let _ = writeln!(out, "  N(f): {}", join(&self.hilbert.jacobian_module));
        if let Some(b) = &self.bourbaki {
            let dp = b.d_prime.map_or("-".to_string(), |p| p.to_string());
            let _ = writeln!(
                out,
                "  Bourbaki ideal: generator degrees ({}), degree {}, complete intersection {}, d' = {}",
                list(&b.gen_degrees),
                b.degree,
                b.complete_intersection,
                dp
            );
        }
        let passed = self.audit.iter().filter(|c| c.status == Status::Pass).count();
        let skipped = self.audit.iter().filter(|c| c.status == Status::NotApplicable).count();
        let _ = writeln!(out, "  audit: {passed} passed, {skipped} not applicable");
        for c in self.audit_failures() {
            let _ = writeln!(out, "  FAIL {}: {}", c.id, c.details);
        }
        out
    }
}
