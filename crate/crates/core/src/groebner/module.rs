//! Graded free modules `⊕ S(-shift_i)` and their elements.
//!
//! A basis term `x^α e_i` is packed into a single `u64` whose integer order
//! is the module order: elimination block first (lower block is larger),
//! then total degree `|α| + shift_i`, then grevlex on `α`, then position
//! (smaller index is larger). With a single block this is the
//! term-over-position extension of grevlex.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::mono::Mono;
use crate::poly::Poly;
use crate::rat::Rat;

const POS_BITS: u32 = 10;
const EXP_BITS: u32 = 12;
const B_SHIFT: u32 = POS_BITS;
const C_SHIFT: u32 = B_SHIFT + EXP_BITS;
const ADEG_SHIFT: u32 = C_SHIFT + EXP_BITS;
const TOT_SHIFT: u32 = ADEG_SHIFT + EXP_BITS;
const TOT_BITS: u32 = 14;
const BLOCK_SHIFT: u32 = TOT_SHIFT + TOT_BITS;

const POS_MAX: u64 = (1 << POS_BITS) - 1;
const EXP_MAX: u64 = (1 << EXP_BITS) - 1;
const TOT_MAX: u64 = (1 << TOT_BITS) - 1;
const BLOCK_MAX: u64 = 15;

/// Largest rank a [`FreeModule`] may have.
pub const MAX_RANK: usize = POS_MAX as usize;

/// A basis term `x^α e_pos` with its module-order key.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term(u64);

impl Term {
    fn pack(block: u8, shift: u32, pos: usize, m: &Mono) -> Term {
        let adeg = m.degree() as u64;
        let tot = adeg + shift as u64;
        assert!(tot <= TOT_MAX && (pos as u64) <= POS_MAX && (block as u64) <= BLOCK_MAX);
        assert!(m.exp.iter().all(|&e| (e as u64) <= EXP_MAX));
        Term(
            ((BLOCK_MAX - block as u64) << BLOCK_SHIFT)
                | (tot << TOT_SHIFT)
                | (adeg << ADEG_SHIFT)
                | ((EXP_MAX - m.exp[2] as u64) << C_SHIFT)
                | ((EXP_MAX - m.exp[1] as u64) << B_SHIFT)
                | (POS_MAX - pos as u64),
        )
    }

    pub fn key(&self) -> u64 {
        self.0
    }

    pub fn pos(&self) -> usize {
        (POS_MAX - (self.0 & POS_MAX)) as usize
    }

    pub fn block(&self) -> u8 {
        (BLOCK_MAX - (self.0 >> BLOCK_SHIFT)) as u8
    }

    /// Total degree, shift included.
    pub fn degree(&self) -> u32 {
        ((self.0 >> TOT_SHIFT) & TOT_MAX) as u32
    }

    pub fn shift(&self) -> u32 {
        self.degree() - self.mono_degree()
    }

    fn mono_degree(&self) -> u32 {
        ((self.0 >> ADEG_SHIFT) & EXP_MAX) as u32
    }

    pub fn mono(&self) -> Mono {
        let c = EXP_MAX - ((self.0 >> C_SHIFT) & EXP_MAX);
        let b = EXP_MAX - ((self.0 >> B_SHIFT) & EXP_MAX);
        let a = self.mono_degree() as u64 - b - c;
        Mono::new(a as u16, b as u16, c as u16)
    }

    pub fn mul_mono(&self, m: &Mono) -> Term {
        let k = m.degree() as u64;
        let up = (k << TOT_SHIFT) + (k << ADEG_SHIFT);
        let down = ((m.exp[2] as u64) << C_SHIFT) + ((m.exp[1] as u64) << B_SHIFT);
        debug_assert!(self.degree() as u64 + k <= TOT_MAX);
        Term(self.0 + up - down)
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.pos() == other.pos() && self.mono().divides(&other.mono())
    }

    /// `other / self` as a monomial, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Term) -> Mono {
        self.mono().quotient_of(&other.mono())
    }

    /// Least common multiple of two terms in the same position.
    pub fn lcm(&self, other: &Term) -> Term {
        debug_assert_eq!(self.pos(), other.pos());
        Term::pack(self.block(), self.shift(), self.pos(), &self.mono().lcm(&other.mono()))
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·e{}", self.mono(), self.pos())
    }
}

/// A graded free module `⊕ S(-shifts[i])`, optionally split into
/// elimination blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeModule {
    shifts: Vec<u32>,
    blocks: Vec<u8>,
}

impl FreeModule {
    pub fn new(shifts: Vec<u32>) -> FreeModule {
        let blocks = vec![0; shifts.len()];
        FreeModule::with_blocks(shifts, blocks)
    }

    /// The ring itself, as a rank one module.
    pub fn ring() -> FreeModule {
        FreeModule::new(vec![0])
    }

    pub fn with_blocks(shifts: Vec<u32>, blocks: Vec<u8>) -> FreeModule {
        assert_eq!(shifts.len(), blocks.len());
        assert!(shifts.len() <= MAX_RANK, "module rank too large");
        FreeModule { shifts, blocks }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[u32] {
        &self.shifts
    }

    pub fn term(&self, pos: usize, m: &Mono) -> Term {
        Term::pack(self.blocks[pos], self.shifts[pos], pos, m)
    }

    /// Every basis term of total degree `k`, in descending module order.
    pub fn terms_of_degree(&self, k: u32) -> Vec<Term> {
        let mut out = Vec::new();
        for (pos, &s) in self.shifts.iter().enumerate() {
            if s <= k {
                out.extend(Mono::all_of_degree(k - s).iter().map(|m| self.term(pos, m)));
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Number of basis terms of total degree `k`.
    pub fn dimension(&self, k: i64) -> usize {
        self.shifts
            .iter()
            .map(|&s| crate::mono::count_of_degree(k - s as i64))
            .sum()
    }
}

/// An element of a free module, terms in descending module order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ModVec {
    terms: Vec<(Term, Rat)>,
}

impl ModVec {
    pub fn zero() -> ModVec {
        ModVec { terms: Vec::new() }
    }

    pub(crate) fn from_sorted(terms: Vec<(Term, Rat)>) -> ModVec {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        ModVec { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Term, Rat)>) -> ModVec {
        let mut v: Vec<(Term, Rat)> = terms.into_iter().collect();
        v.sort_by_key(|e| std::cmp::Reverse(e.0));
        let mut out: Vec<(Term, Rat)> = Vec::with_capacity(v.len());
        for (t, c) in v {
            match out.last_mut() {
                Some((lt, lc)) if *lt == t => *lc += &c,
                _ => out.push((t, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        ModVec { terms: out }
    }

    /// Builds `Σ components[i] e_i`.
    pub fn from_components(module: &FreeModule, components: &[Poly]) -> ModVec {
        assert_eq!(components.len(), module.rank(), "rank mismatch");
        ModVec::from_terms(components.iter().enumerate().flat_map(|(pos, p)| {
            p.terms()
                .iter()
                .map(move |(m, c)| (module.term(pos, m), c.clone()))
        }))
    }

    pub fn from_poly(p: &Poly) -> ModVec {
        ModVec::from_components(&FreeModule::ring(), std::slice::from_ref(p))
    }

    /// Splits back into one polynomial per position.
    pub fn components(&self, rank: usize) -> Vec<Poly> {
        let mut parts: Vec<Vec<(Mono, Rat)>> = vec![Vec::new(); rank];
        for (t, c) in &self.terms {
            parts[t.pos()].push((t.mono(), c.clone()));
        }
        parts.into_iter().map(Poly::from_terms).collect()
    }

    pub fn component(&self, pos: usize) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(t, _)| t.pos() == pos)
                .map(|(t, c)| (t.mono(), c.clone())),
        )
    }

    pub fn to_poly(&self) -> Poly {
        self.component(0)
    }

    pub fn terms(&self) -> &[(Term, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Term, Rat)> {
        self.terms.first()
    }

    pub fn lead_term(&self) -> Option<Term> {
        self.terms.first().map(|(t, _)| *t)
    }

    /// Degree of a homogeneous vector (degree of its leading term).
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(t, _)| t.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.iter().all(|(t, _)| t.degree() == d),
        }
    }

    pub fn monic(&self) -> ModVec {
        match self.lead() {
            None => ModVec::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn scale(&self, c: &Rat) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            terms: self.terms.iter().map(|(t, a)| (*t, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Mono, c: &Rat) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul_mono(m), a * c))
                .collect(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> ModVec {
        p.terms()
            .iter()
            .fold(ModVec::zero(), |acc, (m, c)| &acc + &self.mul_term(m, c))
    }

    pub fn add(&self, other: &ModVec) -> ModVec {
        merge(&self.terms, &other.terms, false)
    }

    pub fn sub(&self, other: &ModVec) -> ModVec {
        merge(&self.terms, &other.terms, true)
    }

    /// Re-keys every term into `target`, mapping position `p` to `pos_map(p)`.
    pub(crate) fn transport(&self, target: &FreeModule, pos_map: impl Fn(usize) -> usize) -> ModVec {
        ModVec::from_terms(
            self.terms
                .iter()
                .map(|(t, c)| (target.term(pos_map(t.pos()), &t.mono()), c.clone())),
        )
    }

    /// The homogeneous component of total degree `k`.
    pub(crate) fn homogeneous_part(&self, k: u32) -> ModVec {
        ModVec {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.degree() == k)
                .cloned()
                .collect(),
        }
    }
}

fn merge(a: &[(Term, Rat)], b: &[(Term, Rat)], negate_b: bool) -> ModVec {
    use std::cmp::Ordering;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let nb = |c: &Rat| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, nb(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 + &nb(&b[j].1);
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(t, c)| (*t, nb(c))));
    ModVec { terms: out }
}

impl std::ops::Add for &ModVec {
    type Output = ModVec;
    fn add(self, rhs: &ModVec) -> ModVec {
        ModVec::add(self, rhs)
    }
}

impl std::ops::Sub for &ModVec {
    type Output = ModVec;
    fn sub(self, rhs: &ModVec) -> ModVec {
        ModVec::sub(self, rhs)
    }
}

impl fmt::Debug for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rank = self.terms.iter().map(|(t, _)| t.pos()).max().unwrap_or(0) + 1;
        let parts: Vec<String> = self.components(rank).iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use proptest::prelude::*;

    #[test]
    fn term_roundtrip() {
        let m = FreeModule::with_blocks(vec![0, 3, 5], vec![0, 1, 1]);
        let mono = Mono::new(2, 7, 1);
        let t = m.term(2, &mono);
        assert_eq!(t.pos(), 2);
        assert_eq!(t.mono(), mono);
        assert_eq!(t.degree(), 15);
        assert_eq!(t.shift(), 5);
        assert_eq!(t.block(), 1);
        let u = t.mul_mono(&Mono::new(1, 0, 3));
        assert_eq!(u, m.term(2, &Mono::new(3, 7, 4)));
    }

    #[test]
    fn order_examples() {
        let m = FreeModule::with_blocks(vec![0, 0, 2], vec![0, 0, 1]);
        // block 0 dominates block 1 regardless of degree
        assert!(m.term(0, &Mono::ONE) > m.term(2, &Mono::new(5, 0, 0)));
        // same monomial: smaller position wins
        assert!(m.term(0, &Mono::new(1, 0, 0)) > m.term(1, &Mono::new(1, 0, 0)));
        // degree dominates position
        assert!(m.term(1, &Mono::new(2, 0, 0)) > m.term(0, &Mono::new(0, 1, 0)));
    }

    #[test]
    fn components_roundtrip() {
        let m = FreeModule::new(vec![2, 2, 2]);
        let comps = vec![
            parse_poly("x^2-yz").unwrap(),
            parse_poly("0").unwrap(),
            parse_poly("3z^2+xy").unwrap(),
        ];
        let v = ModVec::from_components(&m, &comps);
        assert!(v.is_homogeneous());
        assert_eq!(v.degree(), Some(4));
        assert_eq!(v.components(3), comps);
    }

    fn arb_mono() -> impl Strategy<Value = Mono> {
        (0u16..6, 0u16..6, 0u16..6).prop_map(|(a, b, c)| Mono::new(a, b, c))
    }

    proptest! {
        #[test]
        fn packed_order_is_multiplicative(
            u in arb_mono(), v in arb_mono(), w in arb_mono(),
            p in 0usize..3, q in 0usize..3
        ) {
            let m = FreeModule::with_blocks(vec![1, 0, 4], vec![0, 0, 1]);
            let (s, t) = (m.term(p, &u), m.term(q, &v));
            prop_assert_eq!(s.cmp(&t), s.mul_mono(&w).cmp(&t.mul_mono(&w)));
            prop_assert_eq!(s.mul_mono(&w), m.term(p, &u.mul(&w)));
        }
    }
}
