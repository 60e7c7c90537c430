//! Gröbner bases of graded submodules of free modules over `Q[x,y,z]`.
//!
//! Ideals are the rank one case. Syzygies, colon ideals and intersections
//! are all computed by elimination in a larger free module.

mod buchberger;
pub mod hilbert;
mod ideal;
mod module;

pub use ideal::Ideal;
pub use module::{FreeModule, ModVec, Term, MAX_RANK};

use buchberger::Engine;

use crate::mono::Mono;
use crate::rat::Rat;

/// A homogeneous submodule together with its reduced Gröbner basis.
///
/// When built with a degree bound the basis is only guaranteed up to that
/// degree; `is_complete` tells whether the bound was actually reached.
#[derive(Clone, Debug)]
pub struct Submodule {
    module: FreeModule,
    generators: Vec<ModVec>,
    basis: Vec<ModVec>,
    minimal: Vec<usize>,
    complete: bool,
}

impl Submodule {
    /// # Panics
    /// If a generator is not homogeneous.
    pub fn new(module: FreeModule, generators: Vec<ModVec>) -> Submodule {
        Submodule::build(module, generators, None)
    }

    /// Like [`Submodule::new`] but stops after degree `bound`.
    pub fn truncated(module: FreeModule, generators: Vec<ModVec>, bound: u32) -> Submodule {
        Submodule::build(module, generators, Some(bound))
    }

    fn build(module: FreeModule, generators: Vec<ModVec>, bound: Option<u32>) -> Submodule {
        for g in &generators {
            assert!(g.is_homogeneous(), "generator is not homogeneous: {g:?}");
        }
        let run = Engine::new(&module).run(&generators, bound);
        Submodule {
            module,
            generators,
            basis: run.basis,
            minimal: run.kept_inputs,
            complete: run.complete,
        }
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn generators(&self) -> &[ModVec] {
        &self.generators
    }

    /// Reduced Gröbner basis, monic, sorted by ascending leading term.
    pub fn basis(&self) -> &[ModVec] {
        &self.basis
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Indices into `generators()` of a minimal generating subset, chosen
    /// greedily by degree and then input order.
    pub fn minimal_indices(&self) -> &[usize] {
        &self.minimal
    }

    pub fn minimal_generators(&self) -> Vec<ModVec> {
        self.minimal.iter().map(|&i| self.generators[i].clone()).collect()
    }

    pub fn lead_terms(&self) -> Vec<Term> {
        self.basis.iter().filter_map(|g| g.lead_term()).collect()
    }

    /// Normal form with respect to the basis, one homogeneous part at a time.
    pub fn normal_form(&self, v: &ModVec) -> ModVec {
        let mut engine = Engine::with_basis(&self.module, &self.basis);
        let mut degrees: Vec<u32> = v.terms().iter().map(|(t, _)| t.degree()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
            .into_iter()
            .rev()
            .map(|k| engine.reduce(&v.homogeneous_part(k), None))
            .fold(ModVec::zero(), |acc, r| &acc + &r)
    }

    pub fn contains(&self, v: &ModVec) -> bool {
        self.normal_form(v).is_zero()
    }

    /// `dim_Q (F/U)_k`, counted as standard terms of degree `k`.
    pub fn quotient_dimension(&self, k: u32) -> usize {
        let leads = self.lead_terms();
        self.module
            .terms_of_degree(k)
            .iter()
            .filter(|t| !leads.iter().any(|l| l.divides(t)))
            .count()
    }

    /// `dim_Q U_k`.
    pub fn dimension(&self, k: u32) -> usize {
        self.module.dimension(k as i64) - self.quotient_dimension(k)
    }

    /// Elements of the basis whose leading term lies in elimination block
    /// `block` or later, i.e. a basis of the intersection with those
    /// positions when the block order eliminates the earlier ones.
    pub(crate) fn eliminate(&self, first_kept_pos: usize) -> Vec<ModVec> {
        self.basis
            .iter()
            .filter(|g| g.lead_term().is_some_and(|t| t.pos() >= first_kept_pos))
            .cloned()
            .collect()
    }
}

/// Syzygies of homogeneous nonzero vectors `v_1..v_k` of `module`, as a
/// submodule of `⊕ S(-deg v_i)`.
///
/// # Panics
/// If some vector is zero or inhomogeneous.
pub fn syzygies(module: &FreeModule, vectors: &[ModVec]) -> Submodule {
    let r = module.rank();
    let k = vectors.len();
    let degs: Vec<u32> = vectors
        .iter()
        .map(|v| v.degree().expect("syzygies of a zero vector"))
        .collect();
    let mut shifts = module.shifts().to_vec();
    shifts.extend(&degs);
    let mut blocks = vec![0u8; r];
    blocks.extend(std::iter::repeat_n(1, k));
    let big = FreeModule::with_blocks(shifts, blocks);

    let mut gens = Vec::with_capacity(k);
    for (i, v) in vectors.iter().enumerate() {
        let lifted = v.transport(&big, |p| p);
        let unit = ModVec::from_terms([(big.term(r + i, &Mono::ONE), Rat::one())]);
        gens.push(&lifted + &unit);
    }
    let gb = Submodule::new(big, gens);
    let target = FreeModule::new(degs);
    let syz: Vec<ModVec> = gb
        .eliminate(r)
        .iter()
        .map(|g| g.transport(&target, |p| p - r))
        .collect();
    Submodule::new(target, syz)
}

/// A minimal generating subset of homogeneous vectors (zero vectors and
/// redundant ones dropped), preserving input order among the kept ones.
pub fn minimalize(module: &FreeModule, vectors: &[ModVec]) -> Vec<ModVec> {
    let Some(top) = vectors.iter().filter_map(|v| v.degree()).max() else {
        return Vec::new();
    };
    Submodule::truncated(module.clone(), vectors.to_vec(), top).minimal_generators()
}

impl<'m> Engine<'m> {
    pub(crate) fn with_basis(module: &'m FreeModule, basis: &[ModVec]) -> Engine<'m> {
        let mut e = Engine::new(module);
        e.load(basis);
        e
    }
}
