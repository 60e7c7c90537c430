//! Built-in corpus of curves with known invariants, and generators for the
//! parameterized families.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::CurveMeta;
use crate::report::Report;

/// Expected values; absent fields are not checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_list: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ct: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub st: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_prime: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bourbaki_degree: Option<u64>,
}

impl Expected {
    /// Every expected value that differs from the report.
    pub fn mismatches(&self, r: &Report) -> Vec<String> {
        let mut out = Vec::new();
        let inv = &r.invariants;
        let mut cmp = |what: &str, want: Option<String>, got: String| {
            if let Some(want) = want {
                if want != got {
                    out.push(format!("{what}: expected {want}, got {got}"));
                }
            }
        };
        let show = |v: &dyn std::fmt::Debug| format!("{v:?}");
        cmp("tau", self.tau.map(|v| v.to_string()), inv.tau.to_string());
        cmp("exponents", self.exponents.as_ref().map(|v| show(v)), show(&inv.exponents));
        cmp("e_list", self.e_list.as_ref().map(|v| show(v)), show(&inv.e_list));
        cmp("nu", self.nu.map(|v| v.to_string()), inv.nu.to_string());
        cmp("sigma", self.sigma.map(|v| show(&Some(v))), show(&inv.sigma));
        cmp("ct", self.ct.map(|v| v.to_string()), inv.ct.to_string());
        cmp("st", self.st.map(|v| v.to_string()), inv.st.to_string());
        cmp(
            "classification",
            self.classification.clone(),
            r.classification.verdict.clone(),
        );
        let b = r.bourbaki.as_ref();
        cmp("d_prime", self.d_prime.map(|v| show(&Some(v))), show(&b.and_then(|b| b.d_prime)));
        cmp(
            "bourbaki_degree",
            self.bourbaki_degree.map(|v| show(&Some(v))),
            show(&b.map(|b| b.degree)),
        );
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub name: String,
    pub f_text: String,
    #[serde(default)]
    pub meta: CurveMeta,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    /// Excluded from default corpus runs.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub slow: bool,
}

fn meta(rational: Option<bool>, lines: bool, nearly_cuspidal: Option<bool>) -> CurveMeta {
    CurveMeta {
        all_components_rational: rational,
        line_arrangement: Some(lines),
        nearly_cuspidal,
    }
}

fn record(name: &str, f: &str, meta: CurveMeta, expected: Expected) -> CurveRecord {
    CurveRecord {
        name: name.to_string(),
        f_text: f.to_string(),
        meta,
        expected: Some(expected),
        slow: false,
    }
}

fn exps(tau: u64, exponents: &[u32], classification: &str) -> Expected {
    Expected {
        tau: Some(tau),
        exponents: Some(exponents.to_vec()),
        classification: Some(classification.to_string()),
        ..Expected::default()
    }
}

/// The built-in curves, sorted by name.
pub fn corpus() -> Vec<CurveRecord> {
    let yes = Some(true);
    let no = Some(false);
    let mut out = vec![
        record(
            "nodal-cubic",
            "xyz+x^3+y^3",
            meta(yes, false, yes),
            Expected {
                nu: Some(2),
                sigma: Some(1),
                ..exps(1, &[2, 2, 2, 2], "m_syzygy")
            },
        ),
        record(
            "fermat-cubic",
            "x^3+y^3+z^3",
            meta(no, false, None),
            Expected {
                e_list: Some(vec![6]),
                sigma: Some(0),
                ..exps(0, &[2, 2, 2], "smooth")
            },
        ),
        record(
            "ex1-heptic",
            "xyz(x+y-2z)(x-3y+z)(-5x+y+z)(x+y+z)",
            meta(yes, true, None),
            Expected {
                e_list: Some(vec![12]),
                ..exps(24, &[4, 4, 4], "three_syzygy")
            },
        ),
        record(
            "exlowdegree-i",
            "(y^2-xz)^2+y^2z^2+z^4",
            meta(yes, false, yes),
            Expected {
                nu: Some(2),
                sigma: Some(2),
                ..exps(5, &[2, 2, 3], "plus_one_generated")
            },
        ),
        record(
            "exlowdegree-ii",
            "(x^2+y^2)^2-4xy^2z",
            meta(yes, false, yes),
            Expected {
                nu: Some(2),
                bourbaki_degree: Some(2),
                ..exps(5, &[2, 2, 3], "plus_one_generated")
            },
        ),
        record(
            "exlowdegree-iii",
            "(x^2+y^2-2xz)^2-(x^2+y^2)z^2",
            meta(yes, false, yes),
            Expected {
                nu: Some(2),
                ..exps(5, &[2, 2, 3], "plus_one_generated")
            },
        ),
        record(
            "exlowdegree-iv",
            "x^5-y^2z^3-xz^4",
            meta(no, false, None),
            Expected {
                ct: Some(5),
                st: Some(8),
                ..exps(8, &[2, 4, 4], "three_syzygy")
            },
        ),
        record(
            "exlowdegree-v",
            "x^6+y^6-x^2z^4",
            meta(no, false, None),
            exps(5, &[4, 5, 5], "three_syzygy"),
        ),
        record(
            "exconj1-sextic",
            "(x^2+y^2)^3-4x^2y^2z^2",
            meta(no, false, None),
            Expected {
                e_list: Some(vec![10, 10]),
                nu: Some(3),
                d_prime: Some(4),
                bourbaki_degree: Some(3),
                ..exps(16, &[3, 4, 4, 4], "m_syzygy")
            },
        ),
        CurveRecord {
            slow: true,
            ..record(
                "exconj1-dodecic",
                "(x^2+y^2)^6-3(x^11+y^11)z",
                meta(yes, false, None),
                Expected {
                    exponents: Some(vec![6, 7, 8, 10]),
                    classification: Some("m_syzygy".into()),
                    ..Expected::default()
                },
            )
        },
        record(
            "A5",
            "xyz(x-2y-3z)(x+y+z)",
            meta(yes, true, None),
            Expected {
                nu: Some(2),
                ..exps(10, &[3, 3, 3, 3], "m_syzygy")
            },
        ),
        record(
            "A7",
            "xyz(x-z)(y-z)(x+y)(x+y+z)",
            meta(yes, true, None),
            Expected {
                nu: Some(2),
                ..exps(25, &[4, 4, 4, 4], "m_syzygy")
            },
        ),
        record(
            "A9",
            "xyz(x-z)(y-z)(x+y)(x+y+z)(x-y)(x-y-z)",
            meta(yes, true, None),
            Expected {
                nu: Some(2),
                ..exps(46, &[5, 5, 5, 5], "m_syzygy")
            },
        ),
        record(
            "B7",
            "xyz(x+y+z)(x+z)(y+z)(x-y+2z)",
            meta(yes, true, None),
            Expected {
                nu: Some(2),
                ..exps(25, &[3, 4, 5], "plus_one_generated")
            },
        ),
        record(
            "C'5",
            "(x+y)(x^4-x^3y+x^2y^2-xy^3+y^4+x^3z-x^2yz+xy^2z)",
            meta(None, false, None),
            Expected {
                nu: Some(2),
                ..exps(10, &[3, 3, 3, 3], "m_syzygy")
            },
        ),
        record(
            "C''5",
            "z(x^2+y^2+xy)^2+x^5+y^5",
            meta(yes, false, yes),
            Expected {
                nu: Some(2),
                ..exps(10, &[3, 3, 3, 3], "m_syzygy")
            },
        ),
        record(
            "C'''9",
            "z(x^2+y^2+xy)^4+x^9+y^9",
            meta(yes, false, yes),
            Expected {
                nu: Some(2),
                ..exps(46, &[5, 5, 5, 5], "m_syzygy")
            },
        ),
        record(
            "exconj-iii",
            "x(x^4+xy^3+xz^3+y^2z^2)",
            meta(no, false, None),
            exps(6, &[3, 4, 4, 4], "m_syzygy"),
        ),
    ];
    for d in 4..=6 {
        let f = format!("x(x^{0}+y^{0}+z^{0})", d - 1);
        out.push(record(
            &format!("exconj-i-d{d}"),
            &f,
            meta(no, false, None),
            exps(d as u64 - 1, &[d - 2, d - 1, d - 1], "three_syzygy"),
        ));
    }
    for (d, verdict) in [(3, "free"), (4, "plus_one_generated"), (5, "three_syzygy")] {
        let f = format!("x(x^{}+xy^{}+z^{})", d - 1, d - 2, d - 1);
        let mut ds = vec![d - 2, d - 2];
        if d > 3 {
            ds.push(d - 1);
        }
        let rational = if d == 3 { yes } else { no };
        out.push(record(
            &format!("exconj-ii-d{d}"),
            &f,
            meta(rational, false, None),
            exps(2 * d as u64 - 3, &ds, verdict),
        ));
    }
    for k in [2, 3] {
        out.push(ex2(k).expect("valid parameter"));
    }
    out.push(exnularge(3).expect("valid parameter"));
    out.push(exrnc(3).expect("valid parameter"));
    out.push(ts(&[2, 2]).expect("valid parameter"));
    out.push(ts(&[2, 2, 1]).expect("valid parameter"));
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family '{0}', expected one of ts, ex2, exnularge, exrnc")]
    Unknown(String),
    #[error("{family}: {reason}")]
    OutOfRange { family: &'static str, reason: String },
}

fn out_of_range(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::OutOfRange {
        family,
        reason: reason.into(),
    }
}

/// Builds a family member from its name and integer parameters.
pub fn family(name: &str, params: &[u32]) -> Result<CurveRecord, FamilyError> {
    let single = |family: &'static str| match params {
        [p] => Ok(*p),
        _ => Err(out_of_range(family, "expects exactly one parameter")),
    };
    match name {
        "ts" => ts(params),
        "ex2" => ex2(single("ex2")?),
        "exnularge" => exnularge(single("exnularge")?),
        "exrnc" => exrnc(single("exrnc")?),
        _ => Err(FamilyError::Unknown(name.to_string())),
    }
}

fn linear_form(j: usize) -> String {
    match j {
        0 => "x".into(),
        1 => "y".into(),
        2 => "(x+y)".into(),
        _ => format!("(x+{}y)", j - 1),
    }
}

/// `g + z^d` with `g = ℓ_1^k_1 ⋯ ℓ_m^k_m` for distinct linear forms in
/// `x, y`; the parameters are the multiplicities `k_j`.
pub fn ts(multiplicities: &[u32]) -> Result<CurveRecord, FamilyError> {
    let m = multiplicities.len() as u32;
    let d: u32 = multiplicities.iter().sum();
    if m < 2 || multiplicities.contains(&0) {
        return Err(out_of_range("ts", "needs at least two positive multiplicities"));
    }
    if m == d {
        return Err(out_of_range("ts", "needs a repeated factor, otherwise the curve is smooth"));
    }
    let g: Vec<String> = multiplicities
        .iter()
        .enumerate()
        .map(|(j, &k)| {
            let l = linear_form(j);
            if k == 1 { l } else { format!("{l}^{k}") }
        })
        .collect();
    let f = format!("{}+z^{d}", g.join(""));
    let d1 = m - 1;
    let verdict = if d1 + d - 1 == d { "nearly_free" } else { "three_syzygy" };
    let name = multiplicities.iter().map(u32::to_string).collect::<Vec<_>>().join("-");
    Ok(CurveRecord {
        name: format!("ts-{name}"),
        f_text: f,
        meta: CurveMeta::default(),
        expected: Some(Expected {
            nu: (2 * d1 <= d).then_some((d1 * d1) as u64),
            sigma: Some(d - m),
            ct: Some(d + m - 3),
            st: Some(2 * d + m - 5),
            ..exps(((d - 1) * (d - m)) as u64, &[d1, d - 1, d - 1], verdict)
        }),
        slow: false,
    })
}

/// `x^d + (x^2+y^2)^k z` with `d = 2k + 1`.
pub fn ex2(k: u32) -> Result<CurveRecord, FamilyError> {
    if k < 2 {
        return Err(out_of_range("ex2", "needs k >= 2"));
    }
    let d = 2 * k + 1;
    Ok(CurveRecord {
        name: format!("ex2-k{k}"),
        f_text: format!("x^{d}+(x^2+y^2)^{k}z"),
        meta: meta(Some(true), false, Some(true)),
        expected: Some(Expected {
            nu: Some(2),
            sigma: Some(d - 2),
            ..exps((d * d - 4 * d + 5) as u64, &[2, d - 2, d - 1], "plus_one_generated")
        }),
        slow: false,
    })
}

/// `x^(2d'+1) + (x^d' + y^d')^2 z`.
pub fn exnularge(dp: u32) -> Result<CurveRecord, FamilyError> {
    if dp < 3 {
        return Err(out_of_range("exnularge", "needs d' >= 3"));
    }
    let d = 2 * dp + 1;
    let (d1, d2, d3) = (dp, dp + 1, 2 * dp);
    let tau = (d - 1) * (d1 + d2 + d3) - (d1 * d2 + d1 * d3 + d2 * d3);
    Ok(CurveRecord {
        name: format!("exnularge-{dp}"),
        f_text: format!("x^{d}+(x^{dp}+y^{dp})^2z"),
        meta: meta(Some(true), false, None),
        expected: Some(Expected {
            nu: Some(dp as u64),
            sigma: Some(2 * dp - 1),
            ..exps(tau as u64, &[d1, d2, d3], "plus_one_generated")
        }),
        slow: false,
    })
}

/// `x^(r-1) y^(r-1) z + x^d + y^d` with `d = 2r - 1`.
pub fn exrnc(r: u32) -> Result<CurveRecord, FamilyError> {
    if r < 3 {
        return Err(out_of_range("exrnc", "needs r >= 3"));
    }
    let d = 2 * r - 1;
    Ok(CurveRecord {
        name: format!("exrnc-{r}"),
        f_text: format!("x^{0}y^{0}z+x^{d}+y^{d}", r - 1),
        meta: meta(Some(true), false, Some(true)),
        expected: Some(Expected {
            nu: Some(2),
            ..exps((3 * r * r - 6 * r + 1) as u64, &[r; 4], "m_syzygy")
        }),
        slow: false,
    })
}
