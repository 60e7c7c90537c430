//! Curves used by the benchmarks.

use jacsyz_core::{corpus, parse_curve, Curve, Poly};

/// Small, medium and large corpus curves.
pub const BENCH_CURVES: [&str; 4] = ["exlowdegree-iv", "exconj1-sextic", "ex1-heptic", "A9"];

pub fn curve_text(name: &str) -> String {
    corpus()
        .into_iter()
        .find(|r| r.name == name)
        .unwrap_or_else(|| panic!("{name} is not in the corpus"))
        .f_text
}

pub fn polynomial(name: &str) -> Poly {
    parse_curve(&curve_text(name)).expect("corpus curves parse")
}

pub fn curve(name: &str) -> Curve {
    Curve::new(polynomial(name)).expect("corpus curves are reduced")
}
