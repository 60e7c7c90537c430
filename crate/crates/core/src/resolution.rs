//! Minimal graded free resolution of the Milnor algebra `M(f) = S/J_f`:
//!
//! ```text
//! 0 -> ⊕ S(-e_i) -> ⊕ S(1-d-d_j) -> S^3(1-d) -> S
//! ```
//!
//! built from iterated syzygies and minimalization.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::AnalysisError;
use crate::groebner::{minimalize, syzygies, FreeModule, Ideal, ModVec, Submodule};
use crate::linalg;
use crate::poly::Poly;
use crate::rat::Rat;

/// A checked homogeneous curve equation: nonzero, homogeneous, reduced,
/// of degree at least 3.
#[derive(Clone, Debug)]
pub struct Curve {
    f: Poly,
    d: u32,
    gradient: [Poly; 3],
    jacobian: Ideal,
}

impl Curve {
    pub fn new(f: Poly) -> Result<Curve, AnalysisError> {
        let d = f.degree().ok_or(AnalysisError::Zero)?;
        if !f.is_homogeneous() {
            return Err(AnalysisError::NotHomogeneous { position: 1 });
        }
        if d < 3 {
            return Err(AnalysisError::DegreeTooSmall(d));
        }
        let gradient = f.gradient();
        let jacobian = Ideal::new(&gradient);
        // f lies in J_f, so a square factor makes V(J_f) contain a curve
        let dim = jacobian.krull_dimension();
        if dim > 1 {
            return Err(AnalysisError::NotReduced(dim - 1));
        }
        Ok(Curve {
            f,
            d,
            gradient,
            jacobian,
        })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn gradient(&self) -> &[Poly; 3] {
        &self.gradient
    }

    pub fn jacobian(&self) -> &Ideal {
        &self.jacobian
    }

    /// The module `S^3(1-d)` in which `AR(f)` lives as degree `k + d - 1`
    /// vectors for triples of degree-`k` forms.
    pub fn ambient(&self) -> FreeModule {
        FreeModule::new(vec![self.d - 1; 3])
    }

    /// `k^x = (0, f_z, -f_y)`, `k^y = (-f_z, 0, f_x)`, `k^z = (f_y, -f_x, 0)`.
    pub fn koszul_syzygies(&self) -> [[Poly; 3]; 3] {
        let [fx, fy, fz] = self.gradient.clone();
        [
            [Poly::zero(), fz.clone(), -&fy],
            [-&fz, Poly::zero(), fx.clone()],
            [fy, -&fx, Poly::zero()],
        ]
    }

    /// `a f_x + b f_y + c f_z`.
    pub fn apply(&self, r: &[Poly; 3]) -> Poly {
        r.iter()
            .zip(&self.gradient)
            .fold(Poly::zero(), |acc, (a, g)| &acc + &(a * g))
    }
}

/// Minimal generators `r_1..r_m` of `AR(f)`, sorted by degree.
#[derive(Clone, Debug)]
pub struct SyzygyBasis {
    pub generators: Vec<[Poly; 3]>,
    pub degrees: Vec<u32>,
}

impl SyzygyBasis {
    pub fn m(&self) -> usize {
        self.generators.len()
    }

    /// Minimal degree of a Jacobian syzygy.
    pub fn mdr(&self) -> u32 {
        self.degrees[0]
    }
}

/// Graded Betti data of the minimal resolution of `M(f)`.
#[derive(Clone, Debug)]
pub struct ResolutionData {
    pub d: u32,
    pub syzygies: SyzygyBasis,
    /// Shifts `e_1 <= .. <= e_{m-2}` of the last module.
    pub e_list: Vec<u32>,
    /// Rows of the last map: relations `Σ_j h_ij r_j = 0`.
    pub second_syzygies: Vec<Vec<Poly>>,
    /// Gröbner basis of `AR(f)` inside `S^3(1-d)`.
    pub ar: Submodule,
}

impl ResolutionData {
    pub fn m(&self) -> usize {
        self.syzygies.m()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.syzygies.degrees
    }

    /// `ε_j = e_j - (d + d_{j+2} - 1)`.
    pub fn epsilons(&self) -> Vec<i64> {
        let ds = self.exponents();
        self.e_list
            .iter()
            .enumerate()
            .map(|(j, &e)| e as i64 - (self.d as i64 + ds[j + 2] as i64 - 1))
            .collect()
    }

    /// `dim AR(f)_k`, triples of degree-`k` forms.
    pub fn ar_dimension(&self, k: u32) -> usize {
        self.ar.dimension(k + self.d - 1)
    }
}

fn triple(v: &ModVec) -> [Poly; 3] {
    let c = v.components(3);
    [c[0].clone(), c[1].clone(), c[2].clone()]
}

/// Minimal generators of `AR(f)` together with its Gröbner basis.
pub fn jacobian_syzygies(curve: &Curve) -> (SyzygyBasis, Submodule) {
    let ring = FreeModule::ring();
    let grads: Vec<ModVec> = curve.gradient.iter().map(ModVec::from_poly).collect();
    let ar = syzygies(&ring, &grads);
    let gens = minimalize(ar.module(), ar.basis());
    let shift = curve.d - 1;
    let degrees = gens.iter().map(|g| g.degree().unwrap() - shift).collect();
    let generators = gens.iter().map(triple).collect();
    (SyzygyBasis { generators, degrees }, ar)
}

/// Builds the minimal resolution and verifies it: the composites vanish,
/// the maps have no unit entries, the last map is injective, and the
/// ranks add up at a random rational point.
pub fn minimal_resolution(curve: &Curve) -> Result<ResolutionData, AnalysisError> {
    let (syz, ar) = jacobian_syzygies(curve);
    let d = curve.d;
    let f1 = curve.ambient();
    let rs: Vec<ModVec> = syz
        .generators
        .iter()
        .map(|r| ModVec::from_components(&f1, r))
        .collect();
    let second = syzygies(&f1, &rs);
    let relations = minimalize(second.module(), second.basis());
    let e_list: Vec<u32> = relations.iter().map(|v| v.degree().unwrap()).collect();
    let m = syz.m();
    let second_syzygies: Vec<Vec<Poly>> = relations.iter().map(|v| v.components(m)).collect();

    let third = syzygies(second.module(), &relations);
    if !third.basis().is_empty() {
        return Err(AnalysisError::Inconsistent(
            "resolution does not stop after three steps".into(),
        ));
    }
    let data = ResolutionData {
        d,
        syzygies: syz,
        e_list,
        second_syzygies,
        ar,
    };
    verify(curve, &data)?;
    Ok(data)
}

fn verify(curve: &Curve, res: &ResolutionData) -> Result<(), AnalysisError> {
    let fail = |msg: String| Err(AnalysisError::Inconsistent(msg));
    let m = res.m();
    if res.e_list.len() + 2 != m {
        return fail(format!("{} relations for {} generators", res.e_list.len(), m));
    }
    if res.e_list.windows(2).any(|w| w[0] > w[1]) {
        return fail("relation degrees not sorted".into());
    }
    for (j, r) in res.syzygies.generators.iter().enumerate() {
        if !curve.apply(r).is_zero() {
            return fail(format!("r_{} is not a syzygy", j + 1));
        }
    }
    for row in &res.second_syzygies {
        for k in 0..3 {
            let total = row
                .iter()
                .zip(&res.syzygies.generators)
                .fold(Poly::zero(), |acc, (h, r)| &acc + &(h * &r[k]));
            if !total.is_zero() {
                return fail("second syzygy does not compose to zero".into());
            }
        }
        if row.iter().any(|h| h.degree() == Some(0)) {
            return fail("non-minimal relation with a unit entry".into());
        }
    }

    // ranks at a random point: rank ∂1 + rank ∂2 = 3, rank ∂2 + rank ∂3 = m
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut best = (0, 0, 0);
    for _ in 0..4 {
        let pt: [Rat; 3] = std::array::from_fn(|_| Rat::from_int(rng.gen_range(-40..=40)));
        let d1 = linalg::rank(&[curve.gradient.iter().map(|g| g.eval(&pt)).collect()]);
        let d2 = linalg::rank(
            &res.syzygies
                .generators
                .iter()
                .map(|r| r.iter().map(|a| a.eval(&pt)).collect())
                .collect::<Vec<_>>(),
        );
        let d3 = linalg::rank(
            &res.second_syzygies
                .iter()
                .map(|row| row.iter().map(|h| h.eval(&pt)).collect())
                .collect::<Vec<_>>(),
        );
        best = (best.0.max(d1), best.1.max(d2), best.2.max(d3));
        if best == (1, 2, m - 2) {
            return Ok(());
        }
    }
    fail(format!("generic ranks {:?} do not fit an exact complex", best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn curve(s: &str) -> Curve {
        Curve::new(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Curve::new(Poly::zero()).unwrap_err(), AnalysisError::Zero);
        assert_eq!(
            Curve::new(parse_poly("x^2+yz").unwrap()).unwrap_err(),
            AnalysisError::DegreeTooSmall(2)
        );
        assert!(matches!(
            Curve::new(parse_poly("x^2y+z^3+x").unwrap()),
            Err(AnalysisError::NotHomogeneous { .. })
        ));
        assert!(matches!(
            Curve::new(parse_poly("x^2(x^3+y^3+z^3)").unwrap()),
            Err(AnalysisError::NotReduced(1))
        ));
    }

    #[test]
    fn fermat_cubic_is_koszul() {
        let res = minimal_resolution(&curve("x^3+y^3+z^3")).unwrap();
        assert_eq!(res.exponents(), &[2, 2, 2]);
        assert_eq!(res.e_list, vec![6]);
    }

    #[test]
    fn nodal_cubic_has_four_quadratic_syzygies() {
        let res = minimal_resolution(&curve("xyz+x^3+y^3")).unwrap();
        assert_eq!(res.exponents(), &[2, 2, 2, 2]);
        assert_eq!(res.e_list.len(), 2);
    }

    #[test]
    fn low_degree_exponents() {
        for (f, exps) in [
            ("(x^2+y^2-2xz)^2-(x^2+y^2)z^2", vec![2, 2, 3]),
            ("x^5-y^2z^3-xz^4", vec![2, 4, 4]),
            ("x^6+y^6-x^2z^4", vec![4, 5, 5]),
        ] {
            let res = minimal_resolution(&curve(f)).unwrap();
            assert_eq!(res.exponents(), exps.as_slice(), "{f}");
        }
    }

    #[test]
    fn koszul_relations_are_syzygies() {
        let c = curve("x^5-y^2z^3-xz^4");
        for k in c.koszul_syzygies() {
            assert!(c.apply(&k).is_zero());
        }
    }
}
