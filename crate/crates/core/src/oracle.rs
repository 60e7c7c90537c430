//! Independent check of the Hilbert tables by dense linear algebra over
//! monomial bases, with no Gröbner bases involved.
//!
//! `(J_f)_k` is spanned by the products of degree `k - d + 1` monomials with
//! the partials. For the saturation we use that `I_f` and `J_f` agree in
//! every degree `n > 3d - 6`, and that `I_f` is saturated, so going down
//! one degree at a time `(I_f)_k = {h : xh, yh, zh ∈ (I_f)_{k+1}}`.

use crate::analysis::CurveAnalysis;
use crate::linalg::{left_kernel, rank, rref};
use crate::mono::{count_of_degree, Mono};
use crate::poly::Poly;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTables {
    pub milnor: Vec<u64>,
    pub jacobian_module: Vec<u64>,
}

fn coords(p: &Poly, k: u32) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); count_of_degree(k as i64)];
    for (m, c) in p.terms() {
        debug_assert_eq!(m.degree(), k);
        v[m.grevlex_rank()] = c.clone();
    }
    v
}

/// Spanning rows of `(J_f)_k` in monomial coordinates.
fn jacobian_rows(grad: &[Poly; 3], d: u32, k: u32) -> Vec<Vec<Rat>> {
    if k + 1 < d {
        return Vec::new();
    }
    let mut rows = Vec::new();
    for mu in Mono::all_of_degree(k + 1 - d) {
        for g in grad {
            let p = g.mul_term(&mu, &Rat::one());
            if !p.is_zero() {
                rows.push(coords(&p, k));
            }
        }
    }
    rows
}

/// Computes `m(f)_k` and `n(f)_k` for `k = 0..=max_k`.
pub fn oracle(f: &Poly, max_k: u32) -> OracleTables {
    let d = f.degree().expect("nonzero polynomial");
    let grad = f.gradient();

    let milnor: Vec<u64> = (0..=max_k)
        .map(|k| (count_of_degree(k as i64) - rank(&jacobian_rows(&grad, d, k))) as u64)
        .collect();

    // descend from (I_f)_n = (J_f)_n
    let n = max_k.max(3 * d - 5);
    let mut jacobian_module = vec![0u64; max_k as usize + 1];
    let mut basis = jacobian_rows(&grad, d, n);
    rref(&mut basis);
    for k in (0..n).rev() {
        let (upper, pivots) = {
            let mut b = basis;
            let piv = rref(&mut b);
            (b, piv)
        };
        let width = count_of_degree(k as i64 + 1);
        let mut pivot_row = vec![None; width];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_row[c] = Some(r);
        }
        let free: Vec<usize> = (0..width).filter(|&c| pivot_row[c].is_none()).collect();
        // coordinates of a monomial modulo (I_f)_{k+1}
        let normal_form = |m: &Mono| -> Vec<Rat> {
            let c = m.grevlex_rank();
            match pivot_row[c] {
                Some(r) => free.iter().map(|&q| -&upper[r][q]).collect(),
                None => free.iter().map(|&q| if q == c { Rat::one() } else { Rat::zero() }).collect(),
            }
        };
        let vars = Mono::all_of_degree(1);
        let rows: Vec<Vec<Rat>> = Mono::all_of_degree(k)
            .iter()
            .map(|mu| vars.iter().flat_map(|v| normal_form(&mu.mul(v))).collect())
            .collect();
        basis = left_kernel(&rows, 3 * free.len());
        if k <= max_k {
            // n_k = dim (I_f)_k - dim (J_f)_k
            let m_k = milnor[k as usize];
            jacobian_module[k as usize] = m_k - (count_of_degree(k as i64) - basis.len()) as u64;
        }
    }

    OracleTables {
        milnor,
        jacobian_module,
    }
}

/// Differences between the oracle and the engine in degrees `0..=max_k`.
pub fn compare(a: &CurveAnalysis, max_k: u32) -> Vec<String> {
    let tables = oracle(a.curve.f(), max_k);
    let jac = a.curve.jacobian();
    let mut out = Vec::new();
    for k in 0..=max_k {
        let m = jac.quotient_dimension(k) as u64;
        let n = m - a.saturation.quotient_dimension(k) as u64;
        let (om, on) = (tables.milnor[k as usize], tables.jacobian_module[k as usize]);
        if m != om {
            out.push(format!("m_{k}: engine {m}, oracle {om}"));
        }
        if n != on {
            out.push(format!("n_{k}: engine {n}, oracle {on}"));
        }
    }
    out
}
