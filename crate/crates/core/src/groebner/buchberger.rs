//! Graded Buchberger over a free module.
//!
//! Pairs are processed degree by degree, smallest lcm first, with the
//! Gebauer–Möller update. Reduction of a homogeneous vector happens in a
//! dense accumulator indexed by the basis terms of its degree. Input
//! generators are fed in at their own degree after the S-pairs of that
//! degree, which gives minimal generators for free: an input is kept
//! exactly when its remainder is nonzero.

use std::collections::HashMap;

use super::module::{FreeModule, ModVec, Term};
use crate::rat::Rat;

/// Dense index of all basis terms of one total degree.
pub(crate) struct DegreeIndex {
    keys: Vec<Term>,
}

impl DegreeIndex {
    pub(crate) fn new(module: &FreeModule, k: u32) -> DegreeIndex {
        DegreeIndex {
            keys: module.terms_of_degree(k),
        }
    }

    #[inline]
    fn find(&self, t: Term) -> usize {
        // keys are descending
        self.keys
            .binary_search_by(|probe| t.cmp(probe))
            .expect("term outside its degree index")
    }
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
}

pub(crate) struct Engine<'m> {
    module: &'m FreeModule,
    /// Product criterion applies only to ideals.
    is_ideal: bool,
    pub(crate) basis: Vec<ModVec>,
    leads: Vec<Term>,
    by_pos: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    indices: HashMap<u32, DegreeIndex>,
}

/// Outcome of a run: the basis, which inputs survived, and whether
/// the computation stopped at a degree bound.
pub(crate) struct Run {
    pub basis: Vec<ModVec>,
    pub kept_inputs: Vec<usize>,
    pub complete: bool,
}

impl<'m> Engine<'m> {
    pub(crate) fn new(module: &'m FreeModule) -> Engine<'m> {
        Engine {
            module,
            is_ideal: module.rank() == 1,
            basis: Vec::new(),
            leads: Vec::new(),
            by_pos: vec![Vec::new(); module.rank()],
            pairs: Vec::new(),
            indices: HashMap::new(),
        }
    }

    /// Loads an already reduced basis, without pairs.
    pub(crate) fn load(&mut self, basis: &[ModVec]) {
        for g in basis {
            let lt = g.lead_term().expect("zero basis element");
            self.by_pos[lt.pos()].push(self.basis.len());
            self.basis.push(g.clone());
            self.leads.push(lt);
        }
    }

    fn index(&mut self, k: u32) -> &DegreeIndex {
        let module = self.module;
        self.indices
            .entry(k)
            .or_insert_with(|| DegreeIndex::new(module, k))
    }

    fn reducer_for(&self, t: Term, skip: Option<usize>) -> Option<usize> {
        self.by_pos[t.pos()]
            .iter()
            .copied()
            .find(|&g| Some(g) != skip && self.leads[g].divides(&t))
    }

    /// Full reduction of a homogeneous vector. With `skip = Some(g)` the
    /// basis element `g` is never used, which is how tails get reduced.
    pub(crate) fn reduce(&mut self, v: &ModVec, skip: Option<usize>) -> ModVec {
        let Some(k) = v.degree() else {
            return ModVec::zero();
        };
        self.index(k);
        let idx = &self.indices[&k];
        let mut acc = vec![Rat::zero(); idx.keys.len()];
        let first = idx.find(v.terms()[0].0);
        for (t, c) in v.terms() {
            debug_assert_eq!(t.degree(), k, "reduction of an inhomogeneous vector");
            acc[idx.find(*t)] = c.clone();
        }
        for i in first..acc.len() {
            if acc[i].is_zero() {
                continue;
            }
            let t = idx.keys[i];
            let Some(g) = self.reducer_for(t, skip) else {
                continue;
            };
            let q = self.leads[g].quotient_of(&t);
            let c = std::mem::take(&mut acc[i]);
            for (s, gc) in self.basis[g].terms().iter().skip(1) {
                let j = idx.find(s.mul_mono(&q));
                acc[j].sub_mul(&c, gc);
            }
        }
        ModVec::from_sorted(
            idx.keys
                .iter()
                .zip(acc)
                .filter(|(_, c)| !c.is_zero())
                .map(|(t, c)| (*t, c))
                .collect(),
        )
    }

    fn s_vector(&self, p: &Pair) -> ModVec {
        let (gi, gj) = (&self.basis[p.i], &self.basis[p.j]);
        let qi = self.leads[p.i].quotient_of(&p.lcm);
        let qj = self.leads[p.j].quotient_of(&p.lcm);
        gi.mul_term(&qi, &Rat::one()).sub(&gj.mul_term(&qj, &Rat::one()))
    }

    fn coprime(&self, a: usize, b: usize) -> bool {
        self.is_ideal && self.leads[a].mono().is_coprime(&self.leads[b].mono())
    }

    /// Appends a monic, fully reduced element and updates the pair set.
    fn insert(&mut self, h: ModVec) {
        let h = h.monic();
        let n = self.basis.len();
        let lt = h.lead_term().expect("inserting zero");
        self.basis.push(h);
        self.leads.push(lt);

        let mut cands: Vec<Pair> = self.by_pos[lt.pos()]
            .iter()
            .map(|&g| Pair {
                i: g,
                j: n,
                lcm: self.leads[g].lcm(&lt),
            })
            .collect();
        self.by_pos[lt.pos()].push(n);

        // Gebauer–Möller: drop old pairs whose lcm is a proper multiple via h
        self.pairs.retain(|p| {
            !(lt.divides(&p.lcm)
                && lt.lcm(&self.leads[p.i]) != p.lcm
                && lt.lcm(&self.leads[p.j]) != p.lcm)
        });

        // among new pairs keep one per minimal lcm
        cands.sort_by(|a, b| a.lcm.cmp(&b.lcm).then(a.i.cmp(&b.i)));
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in cands.iter().enumerate() {
            let dominated_later = cands[k + 1..]
                .iter()
                .any(|q| q.lcm != p.lcm && q.lcm.divides(&p.lcm));
            let dominated_kept = kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if !dominated_later && !dominated_kept {
                kept.push(*p);
            }
        }
        // equal lcm classes: if one member is coprime the class is redundant
        let mut out = Vec::new();
        for p in kept {
            let class_coprime = cands
                .iter()
                .any(|q| q.lcm == p.lcm && self.coprime(q.i, q.j));
            if !class_coprime {
                out.push(p);
            }
        }
        self.pairs.extend(out);
    }

    fn min_pair_degree(&self) -> Option<u32> {
        self.pairs.iter().map(|p| p.lcm.degree()).min()
    }

    /// Runs the graded algorithm on homogeneous inputs. Zero inputs are
    /// never kept. With `bound = Some(b)` nothing above degree `b` is
    /// computed and `complete` reports whether anything was left over.
    pub(crate) fn run(mut self, inputs: &[ModVec], bound: Option<u32>) -> Run {
        let mut order: Vec<usize> = (0..inputs.len()).filter(|&i| !inputs[i].is_zero()).collect();
        order.sort_by_key(|&i| inputs[i].degree());
        let mut next_input = 0;
        let mut kept_inputs = Vec::new();
        let mut complete = true;

        loop {
            let pd = self.min_pair_degree();
            let id = order.get(next_input).and_then(|&i| inputs[i].degree());
            let deg = match (pd, id) {
                (None, None) => break,
                (Some(a), None) | (None, Some(a)) => a,
                (Some(a), Some(b)) => a.min(b),
            };
            if bound.is_some_and(|b| deg > b) {
                complete = false;
                break;
            }

            let (mut batch, rest): (Vec<Pair>, Vec<Pair>) =
                self.pairs.iter().partition(|p| p.lcm.degree() == deg);
            self.pairs = rest;
            batch.sort_by(|a, b| a.lcm.cmp(&b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))));
            for p in batch {
                let s = self.s_vector(&p);
                let r = self.reduce(&s, None);
                if !r.is_zero() {
                    self.insert(r);
                }
            }

            while next_input < order.len() && inputs[order[next_input]].degree() == Some(deg) {
                let i = order[next_input];
                next_input += 1;
                let r = self.reduce(&inputs[i], None);
                if !r.is_zero() {
                    kept_inputs.push(i);
                    self.insert(r);
                }
            }
        }

        // tail reduction: later elements may reduce earlier tails
        for g in 0..self.basis.len() {
            let v = self.basis[g].clone();
            self.basis[g] = self.reduce(&v, Some(g));
        }
        let mut basis = self.basis;
        basis.sort_by_key(|a| a.lead_term());
        kept_inputs.sort_unstable();
        Run {
            basis,
            kept_inputs,
            complete,
        }
    }
}
