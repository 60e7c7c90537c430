//! The Bourbaki ideal of a non-free curve.
//!
//! For a minimal degree syzygy `r_1`, the map `v(r) = Δ(r)/f`, where `Δ(r)`
//! is the determinant with rows `(x, y, z)`, `r_1` and `r`, sends `AR(f)`
//! onto a shifted ideal `B(C, r_1)` with kernel `S·r_1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::AnalysisError;
use crate::groebner::Ideal;
use crate::mono::Mono;
use crate::poly::{det3, Poly};
use crate::rat::Rat;
use crate::resolution::{Curve, ResolutionData};

/// `v(r) = Δ(r)/f`, failing if `f` does not divide `Δ(r)`.
pub fn bourbaki_map(r: &[Poly; 3], r1: &[Poly; 3], f: &Poly) -> Result<Poly, AnalysisError> {
    let delta = det3(r1, r);
    delta.div_exact(f).ok_or_else(|| {
        AnalysisError::Inconsistent("determinant not divisible by f".into())
    })
}

/// Krull dimension of `S/(p, q)`; at most 1 iff the forms are coprime.
pub fn pair_dimension(p: &Poly, q: &Poly) -> i32 {
    Ideal::new(&[p.clone(), q.clone()]).krull_dimension()
}

#[derive(Clone, Debug)]
pub struct BourbakiData {
    pub r1: [Poly; 3],
    /// `g_j = v(r_j)` for `j = 2..m`.
    pub generators: Vec<Poly>,
    pub gen_degrees: Vec<u32>,
    pub ideal: Ideal,
    /// Degree of the zero-dimensional scheme `S/B`, from its Hilbert series.
    pub degree: u64,
    /// Krull dimension of `S/B`.
    pub dimension: i32,
    pub minimal_generator_count: usize,
    /// Two coprime minimal generators.
    pub is_complete_intersection: bool,
}

/// Builds `B(C, r_1)` from the first minimal generator.
pub fn bourbaki_ideal(curve: &Curve, res: &ResolutionData) -> Result<BourbakiData, AnalysisError> {
    if res.m() < 3 {
        return Err(AnalysisError::FreeCurve);
    }
    let gens = &res.syzygies.generators;
    let r1 = gens[0].clone();
    if !bourbaki_map(&r1, &r1, curve.f())?.is_zero() {
        return Err(AnalysisError::Inconsistent("v(r_1) is not zero".into()));
    }
    let d = curve.degree() as i64;
    let d1 = res.exponents()[0] as i64;
    let mut generators = Vec::new();
    let mut gen_degrees = Vec::new();
    for (j, r) in gens.iter().enumerate().skip(1) {
        let g = bourbaki_map(r, &r1, curve.f())?;
        let expected = res.exponents()[j] as i64 + d1 - d + 1;
        if g.is_zero() || g.degree() != Some(expected as u32) {
            return Err(AnalysisError::Inconsistent(format!(
                "v(r_{}) has the wrong degree",
                j + 1
            )));
        }
        gen_degrees.push(expected as u32);
        generators.push(g);
    }
    let ideal = Ideal::new(&generators);
    let hs = ideal.hilbert_series();
    let dimension = hs.dimension();
    let degree = if dimension == 1 { hs.multiplicity() as u64 } else { 0 };
    let minimal = ideal.minimal_generators();
    let is_complete_intersection =
        minimal.len() == 2 && pair_dimension(&minimal[0], &minimal[1]) <= 1;
    Ok(BourbakiData {
        r1,
        generators,
        gen_degrees,
        ideal,
        degree,
        dimension,
        minimal_generator_count: minimal.len(),
        is_complete_intersection,
    })
}

/// `(d-1)^2 - d_1(d-d_1-1) - τ`, the degree `B(C, r_1)` must have.
pub fn expected_degree(d: u32, d1: u32, tau: u64) -> i64 {
    let (d, d1) = (d as i64, d1 as i64);
    (d - 1) * (d - 1) - d1 * (d - d1 - 1) - tau as i64
}

/// The relation `h_1 r_1 + h_2 r_2 + h_3 r_3 = 0` of a 3-syzygy curve.
#[derive(Clone, Debug)]
pub struct RelationData {
    pub h: [Poly; 3],
    pub degrees: [u32; 3],
    /// `h_i` pairwise coprime.
    pub coprime: bool,
    /// `α` with `h_2 = α g_3` and `h_3 = -α g_2`, if it exists.
    pub alpha: Option<Rat>,
}

pub fn unique_relation(
    res: &ResolutionData,
    bd: &BourbakiData,
) -> Result<RelationData, AnalysisError> {
    if res.m() != 3 || res.second_syzygies.len() != 1 {
        return Err(AnalysisError::NotThreeSyzygy);
    }
    let row = &res.second_syzygies[0];
    let lc = row[0]
        .leading_coeff()
        .ok_or_else(|| AnalysisError::Inconsistent("h_1 vanishes".into()))?
        .clone();
    let h: [Poly; 3] = std::array::from_fn(|i| row[i].scale(&lc.recip()));
    if h.iter().any(Poly::is_zero) {
        return Err(AnalysisError::Inconsistent("a relation coefficient vanishes".into()));
    }
    let degrees: [u32; 3] = std::array::from_fn(|i| h[i].degree().unwrap());
    let coprime = (0..3).all(|i| ((i + 1)..3).all(|j| pair_dimension(&h[i], &h[j]) <= 1));

    let (g2, g3) = (&bd.generators[0], &bd.generators[1]);
    let alpha = match (h[1].leading_term(), g3.leading_term()) {
        (Some((m, c)), Some((n, e))) if m == n => {
            let a = c / e;
            (h[1] == g3.scale(&a) && h[2] == -&g2.scale(&a)).then_some(a)
        }
        _ => None,
    };
    Ok(RelationData {
        h,
        degrees,
        coprime,
        alpha,
    })
}

/// Outcome of the search for the smallest admissible `d'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DPrime {
    pub d_prime: u32,
    /// `(d-1)(d-d_1-1) + d_1^2 - [d_1-(d-1-d_2)][d_1-(d-1-d')]`.
    pub bound: i64,
    /// Seed of a random `g ∈ B_δ` with `(g_2, g)` a complete intersection.
    pub certificate_seed: Option<u64>,
}

pub const DPRIME_SEED: u64 = 0xb0b_a4ba;
const DPRIME_RETRIES: u64 = 8;

/// The refined lower bound on `τ` for a given `d'`.
pub fn refined_bound(d: u32, d1: u32, d2: u32, d_prime: u32) -> i64 {
    let (d, d1, d2, dp) = (d as i64, d1 as i64, d2 as i64, d_prime as i64);
    (d - 1) * (d - d1 - 1) + d1 * d1 - (d1 - (d - 1 - d2)) * (d1 - (d - 1 - dp))
}

/// A spanning set of `B_δ`: monomial multiples of the generators.
fn graded_piece(generators: &[Poly], delta: i64) -> Vec<Poly> {
    let mut out = Vec::new();
    for g in generators {
        let dg = g.degree().unwrap() as i64;
        if dg <= delta {
            for m in Mono::all_of_degree((delta - dg) as u32) {
                out.push(g.mul_term(&m, &Rat::one()));
            }
        }
    }
    out
}

/// Smallest `d'` in `[d_3, min(d_m, d-1)]` such that `B_{d_1+d'-d+1}`
/// generates an ideal with zero-dimensional zero set in `P^2`.
pub fn thm_new_dprime(curve: &Curve, res: &ResolutionData, bd: &BourbakiData) -> Option<DPrime> {
    let ds = res.exponents();
    let d = curve.degree();
    let (d1, d2, d3) = (ds[0], ds[1], ds[2]);
    let top = (*ds.last().unwrap()).min(d - 1);
    for dp in d3..=top {
        let delta = d1 as i64 + dp as i64 - d as i64 + 1;
        let piece = graded_piece(&bd.generators, delta);
        if piece.is_empty() || Ideal::new(&piece).krull_dimension() > 1 {
            continue;
        }
        let g2 = &bd.generators[0];
        let certificate_seed = (0..DPRIME_RETRIES).map(|i| DPRIME_SEED + i).find(|&seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = piece.iter().fold(Poly::zero(), |acc, p| {
                &acc + &p.scale(&Rat::from_int(rng.gen_range(-20..=20)))
            });
            !g.is_zero() && pair_dimension(g2, &g) <= 1
        });
        return Some(DPrime {
            d_prime: dp,
            bound: refined_bound(d, d1, d2, dp),
            certificate_seed,
        });
    }
    None
}
