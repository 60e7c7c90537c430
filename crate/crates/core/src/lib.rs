//! Exact computation of Jacobian syzygies of reduced plane curves over Q.
//!
//! Given a homogeneous `f(x, y, z)`, the engine computes the minimal graded
//! free resolution of the Milnor algebra `S/J_f`, the Hilbert functions of
//! the Milnor algebra and the Jacobian module, the Bourbaki ideal, a
//! classification of the curve, and an audit of the structural identities
//! relating all of these.
//!
//! ```
//! use jacsyz_core::{analyze_text, AnalysisOptions, CurveMeta, Report};
//!
//! let a = analyze_text("folium", "(x^2+y^2)^2-4xy^2z", CurveMeta::default(),
//!                      &AnalysisOptions::default()).unwrap();
//! assert_eq!(a.exponents(), &[2, 2, 3]);
//! assert_eq!(a.invariants.tau, 5);
//! let report = Report::from_analysis(&a);
//! assert_eq!(report.classification.verdict, "plus_one_generated");
//! ```

pub mod analysis;
pub mod audit;
pub mod bourbaki;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod mono;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod report;
pub mod resolution;

pub use analysis::{analyze, analyze_text, parse_curve, AnalysisOptions, CurveAnalysis, CurveMeta};
pub use audit::{audit, AuditCheck, AuditReport, Status};
pub use classify::{Classification, Nu2Shape, Verdict};
pub use corpus::{corpus, family, CurveRecord, Expected};
pub use error::AnalysisError;
pub use groebner::{FreeModule, Ideal, ModVec, Submodule};
pub use invariants::Invariants;
pub use mono::{Mono, Var};
pub use parse::{parse_poly, ParseError};
pub use poly::Poly;
pub use rat::Rat;
pub use report::Report;
pub use resolution::{minimal_resolution, Curve, ResolutionData};
