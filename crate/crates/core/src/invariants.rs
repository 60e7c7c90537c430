//! Hilbert functions of `M(f) = S/J_f` and `N(f) = I_f/J_f`, and the
//! numerical invariants read off them.

use serde::{Deserialize, Serialize};

use crate::groebner::Ideal;
use crate::resolution::Curve;

/// `dim S_k`.
pub fn ring_dimension(k: i64) -> i64 {
    crate::mono::count_of_degree(k) as i64
}

/// Hilbert function of the Milnor algebra of a smooth curve of degree `d`:
/// the coefficients of `((1 - t^(d-1)) / (1 - t))^3`.
pub fn smooth_milnor_hf(d: u32, k: i64) -> i64 {
    let a = d as i64 - 1;
    ring_dimension(k) - 3 * ring_dimension(k - a) + 3 * ring_dimension(k - 2 * a)
        - ring_dimension(k - 3 * a)
}

/// The numerical invariants of `M(f)` and `N(f)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub d: u32,
    /// Total Tjurina number, the eventual value of `m(f)_k`.
    pub tau: u64,
    /// `m(f)_k` for `k = 0..=3d-4`.
    pub milnor: Vec<u64>,
    /// `n(f)_k` for `k = 0..=3d-4`.
    pub jacobian_module: Vec<u64>,
    pub nu: u64,
    /// Initial degree of `N(f)`; `None` when `N(f) = 0`.
    pub sigma: Option<u32>,
    /// Coincidence threshold; `T + 1` when `M(f)` agrees with the smooth
    /// Milnor algebra in every degree.
    pub ct: u32,
    pub st: u32,
    pub reg: u32,
    pub t: u32,
}

impl Invariants {
    pub fn window(d: u32) -> u32 {
        3 * d - 4
    }
}

/// Computes every invariant from `J_f` and its saturation `I_f`.
pub fn compute(curve: &Curve, saturation: &Ideal) -> Invariants {
    let d = curve.degree();
    let j = curve.jacobian();
    let window = Invariants::window(d);
    let t = 3 * d - 6;

    let hs = j.hilbert_series();
    let tau = if hs.dimension() <= 0 { 0 } else { hs.multiplicity() as u64 };

    let milnor: Vec<u64> = (0..=window).map(|k| j.quotient_dimension(k) as u64).collect();
    let jacobian_module: Vec<u64> = (0..=window)
        .map(|k| milnor[k as usize] - saturation.quotient_dimension(k) as u64)
        .collect();

    let nu = jacobian_module.iter().copied().max().unwrap_or(0);
    let sigma = jacobian_module.iter().position(|&n| n != 0).map(|k| k as u32);

    // st: last degree where m(f) differs from tau, plus one; beyond the
    // window the Hilbert series guarantees the value is already stable
    let tail_start = hs.stable_from().max(window as i64);
    let mut st = tail_start as u32 + 1;
    for k in (0..=tail_start).rev() {
        if hs.value(k) != tau as i64 {
            break;
        }
        st = k as u32;
    }

    let mut ct = t + 1;
    for k in 0..=window {
        if milnor[k as usize] as i64 != smooth_milnor_hf(d, k as i64) {
            ct = k.saturating_sub(1);
            break;
        }
    }
    if ct == t + 1 {
        assert_eq!(tau, 0, "a singular curve cannot agree with the smooth Milnor algebra everywhere");
    }

    Invariants {
        d,
        tau,
        milnor,
        jacobian_module,
        nu,
        sigma,
        ct,
        st,
        reg: st.saturating_sub(1),
        t,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn invariants(s: &str) -> Invariants {
        let c = Curve::new(parse_poly(s).unwrap()).unwrap();
        let sat = c.jacobian().saturate();
        compute(&c, &sat)
    }

    #[test]
    fn smooth_cubic() {
        let inv = invariants("x^3+y^3+z^3");
        assert_eq!(&inv.milnor[..5], &[1, 3, 3, 1, 0]);
        assert_eq!(inv.tau, 0);
        assert_eq!(inv.milnor, inv.jacobian_module);
        assert_eq!(inv.sigma, Some(0));
        assert_eq!(inv.ct, inv.t + 1);
        // the socle sits in degree T = 3d - 6
        assert_eq!(inv.st, 3 * 3 - 5);
    }

    #[test]
    fn smooth_hf_is_symmetric() {
        for d in 3..8 {
            let t = 3 * d as i64 - 6;
            for k in 0..=t {
                assert_eq!(smooth_milnor_hf(d, k), smooth_milnor_hf(d, t - k));
            }
            assert_eq!(smooth_milnor_hf(d, t + 1), 0);
        }
    }

    #[test]
    fn nodal_cubic() {
        let inv = invariants("xyz+x^3+y^3");
        assert_eq!(inv.tau, 1);
        assert!(inv.milnor[inv.st as usize..].iter().all(|&m| m == 1));
        assert_eq!(inv.nu, 2);
    }

    #[test]
    fn bolza_thresholds() {
        let inv = invariants("x^5-y^2z^3-xz^4");
        assert_eq!((inv.tau, inv.ct, inv.st), (8, 5, 8));
    }

    #[test]
    fn ex2_jacobian_module() {
        let inv = invariants("x^5+(x^2+y^2)^2z");
        assert_eq!(inv.tau, 10);
        assert_eq!(inv.sigma, Some(3));
        assert_eq!(inv.nu, 2);
        assert_eq!(inv.jacobian_module[3], 1);
        assert_eq!(inv.jacobian_module[6], 1);
    }
}
