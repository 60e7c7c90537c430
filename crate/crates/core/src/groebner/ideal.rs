//! Homogeneous ideals of `Q[x,y,z]`.

use super::hilbert::HilbertSeries;
use super::{FreeModule, ModVec, Submodule};
use crate::mono::{Mono, Var};
use crate::poly::Poly;
use crate::rat::Rat;

/// A homogeneous ideal with its reduced grevlex Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    sub: Submodule,
}

fn to_vecs(gens: &[Poly]) -> Vec<ModVec> {
    gens.iter().map(ModVec::from_poly).collect()
}

fn swap_with_z(v: Var) -> [usize; 3] {
    let mut perm = [0, 1, 2];
    perm.swap(v.index(), 2);
    perm
}

fn divide_by_z(p: &Poly) -> Poly {
    Poly::from_terms(p.terms().iter().map(|(m, c)| {
        debug_assert!(m.exp[2] > 0);
        (Mono::new(m.exp[0], m.exp[1], m.exp[2] - 1), c.clone())
    }))
}

impl Ideal {
    /// # Panics
    /// If a generator is not homogeneous.
    pub fn new(gens: &[Poly]) -> Ideal {
        Ideal {
            sub: Submodule::new(FreeModule::ring(), to_vecs(gens)),
        }
    }

    /// Basis computed only up to degree `bound`.
    pub fn truncated(gens: &[Poly], bound: u32) -> Ideal {
        Ideal {
            sub: Submodule::truncated(FreeModule::ring(), to_vecs(gens), bound),
        }
    }

    pub fn unit() -> Ideal {
        Ideal::new(&[Poly::one()])
    }

    pub fn is_complete(&self) -> bool {
        self.sub.is_complete()
    }

    pub fn generators(&self) -> Vec<Poly> {
        self.sub.generators().iter().map(ModVec::to_poly).collect()
    }

    pub fn basis(&self) -> Vec<Poly> {
        self.sub.basis().iter().map(ModVec::to_poly).collect()
    }

    pub fn minimal_generators(&self) -> Vec<Poly> {
        self.sub.minimal_generators().iter().map(ModVec::to_poly).collect()
    }

    pub fn lead_monomials(&self) -> Vec<Mono> {
        self.sub.lead_terms().iter().map(|t| t.mono()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.lead_monomials().contains(&Mono::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.sub.basis().is_empty()
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.sub.normal_form(&ModVec::from_poly(p)).to_poly()
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.basis().iter().all(|g| self.contains(g))
    }

    /// `dim_Q (S/I)_k`.
    pub fn quotient_dimension(&self, k: u32) -> usize {
        self.sub.quotient_dimension(k)
    }

    /// `dim_Q I_k`.
    pub fn dimension(&self, k: u32) -> usize {
        self.sub.dimension(k)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::of_monomial_ideal(&self.lead_monomials())
    }

    /// Krull dimension of `S/I`, read off the leading monomials: the size
    /// of the largest set of variables containing the support of no leading
    /// monomial. The unit ideal gets `-1`.
    pub fn krull_dimension(&self) -> i32 {
        let leads = self.lead_monomials();
        let mut best = -1;
        for mask in 0u8..8 {
            let free = |m: &Mono| (0..3).all(|i| m.exp[i] == 0 || mask & (1 << i) != 0);
            if !leads.iter().any(free) {
                best = best.max(mask.count_ones() as i32);
            }
        }
        best
    }

    /// The ideal after sending variable `i` to variable `perm[i]`.
    pub fn permuted(&self, perm: [usize; 3]) -> Ideal {
        let gens: Vec<Poly> = self.basis().iter().map(|g| g.permute_vars(perm)).collect();
        Ideal::new(&gens)
    }

    /// `I : v` for a variable. Moves `v` to the last variable, where a
    /// grevlex basis element is divisible by it iff its leading term is,
    /// and divides those elements.
    pub fn colon_var(&self, v: Var) -> Ideal {
        let perm = swap_with_z(v);
        let moved = if v == Var::Z { self.clone() } else { self.permuted(perm) };
        let gens: Vec<Poly> = moved
            .basis()
            .iter()
            .map(|g| {
                if g.leading_term().is_some_and(|(m, _)| m.exp[2] > 0) {
                    divide_by_z(g)
                } else {
                    g.clone()
                }
            })
            .map(|g| if v == Var::Z { g } else { g.permute_vars(perm) })
            .collect();
        Ideal::new(&gens)
    }

    /// `I : g` for a homogeneous `g`, by elimination in `S ⊕ S(-deg g)`.
    pub fn colon(&self, g: &Poly) -> Ideal {
        assert!(g.is_homogeneous(), "colon by an inhomogeneous polynomial");
        let Some(dg) = g.degree() else {
            return Ideal::unit();
        };
        if dg == 0 {
            return self.clone();
        }
        if g.len() == 1 && dg == 1 {
            let (m, _) = &g.terms()[0];
            let v = Var::ALL[m.exp.iter().position(|&e| e == 1).unwrap()];
            return self.colon_var(v);
        }
        let module = FreeModule::with_blocks(vec![0, dg], vec![0, 1]);
        let mut gens = vec![ModVec::from_components(&module, &[g.clone(), Poly::one()])];
        for p in self.basis() {
            gens.push(ModVec::from_components(&module, &[p, Poly::zero()]));
        }
        let sub = Submodule::new(module, gens);
        let quotient: Vec<Poly> = sub.eliminate(1).iter().map(|v| v.component(1)).collect();
        Ideal::new(&quotient)
    }

    /// `I : J`, the intersection of `I : g` over generators of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Ideal {
        other
            .basis()
            .iter()
            .map(|g| self.colon(g))
            .reduce(|a, b| a.intersect(&b))
            .unwrap_or_else(Ideal::unit)
    }

    /// `I ∩ J`, by elimination in `S ⊕ S`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let module = FreeModule::with_blocks(vec![0, 0], vec![0, 1]);
        let mut gens = Vec::new();
        for p in self.basis() {
            gens.push(ModVec::from_components(&module, &[p.clone(), p]));
        }
        for q in other.basis() {
            gens.push(ModVec::from_components(&module, &[q, Poly::zero()]));
        }
        let sub = Submodule::new(module, gens);
        let meet: Vec<Poly> = sub.eliminate(1).iter().map(|v| v.component(1)).collect();
        Ideal::new(&meet)
    }

    /// `I : m` for the irrelevant ideal `m = (x, y, z)`.
    pub fn colon_irrelevant(&self) -> Ideal {
        let parts: Vec<Ideal> = Var::ALL.iter().map(|&v| self.colon_var(v)).collect();
        parts[0].intersect(&parts[1]).intersect(&parts[2])
    }

    /// `I : m^∞`, iterating `I ← I : m` until it stabilizes.
    pub fn saturate(&self) -> Ideal {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_irrelevant();
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// A spanning set of `I_k`: monomial multiples of the basis.
    pub fn graded_piece_basis(&self, k: u32) -> Vec<Poly> {
        let mut out = Vec::new();
        for g in self.basis() {
            let dg = g.degree().unwrap();
            if dg <= k {
                for m in Mono::all_of_degree(k - dg) {
                    out.push(g.mul_term(&m, &Rat::one()));
                }
            }
        }
        out
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Ideal) -> bool {
        self.is_complete() && other.is_complete() && self.sub.basis() == other.sub.basis()
    }
}
