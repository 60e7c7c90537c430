//! Hilbert series of `S/I` for monomial ideals `I ⊂ Q[x,y,z]`, written as
//! `N(t) / (1-t)^3`.

use crate::mono::Mono;

/// Polynomial in `t` with integer coefficients, index = exponent.
type TPoly = Vec<i64>;

fn trim(mut p: TPoly) -> TPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add(a: &TPoly, b: &TPoly) -> TPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn shift(p: &TPoly, k: usize) -> TPoly {
    let mut out = vec![0; k];
    out.extend_from_slice(p);
    trim(out)
}

fn mul(a: &TPoly, b: &TPoly) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Mono> = Vec::with_capacity(gens.len());
    // sorted by degree, so a divisor always comes first
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn support_size(m: &Mono) -> usize {
    m.exp.iter().filter(|&&e| e > 0).count()
}

fn numerator(gens: Vec<Mono>) -> TPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().all(|g| support_size(g) == 1) || gens.len() == 1 {
        // pure powers form a regular sequence, and so does a single monomial
        return gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            mul(&acc, &trim(f))
        });
    }
    // pivot on a power of the variable that occurs most among mixed generators
    let mixed: Vec<&Mono> = gens.iter().filter(|g| support_size(g) > 1).collect();
    let v = (0..3)
        .max_by_key(|&i| (mixed.iter().filter(|g| g.exp[i] > 0).count(), std::cmp::Reverse(i)))
        .unwrap();
    let mut exps: Vec<u16> = mixed.iter().map(|g| g.exp[v]).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pe = [0u16; 3];
    pe[v] = e;
    let pivot = Mono { exp: pe };

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let colon: Vec<Mono> = gens
        .iter()
        .map(|g| {
            let mut ex = g.exp;
            ex[v] = ex[v].saturating_sub(e);
            Mono { exp: ex }
        })
        .collect();
    add(&numerator(with_pivot), &shift(&numerator(colon), e as usize))
}

/// Hilbert series of a monomial quotient `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: TPoly,
}

impl HilbertSeries {
    pub fn of_monomial_ideal(gens: &[Mono]) -> HilbertSeries {
        HilbertSeries {
            numerator: numerator(gens.to_vec()),
        }
    }

    /// Coefficients of `N(t)`.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// `dim (S/I)_k`.
    pub fn value(&self, k: i64) -> i64 {
        self.numerator
            .iter()
            .enumerate()
            .map(|(i, c)| c * binom2(k - i as i64 + 2))
            .sum()
    }

    /// Krull dimension of `S/I`; `-1` for the unit ideal.
    pub fn dimension(&self) -> i32 {
        let (order, _) = self.reduced();
        match order {
            None => -1,
            Some(o) => 3 - o as i32,
        }
    }

    /// Leading coefficient of the Hilbert polynomial times `(dim-1)!`: the
    /// degree of `S/I`. For a zero-dimensional quotient this is its length.
    pub fn multiplicity(&self) -> i64 {
        let (_, q) = self.reduced();
        q.iter().sum()
    }

    /// First degree from which the Hilbert function agrees with the
    /// Hilbert polynomial.
    pub fn stable_from(&self) -> i64 {
        (self.numerator.len() as i64 - 3).max(0)
    }

    /// Number of factors `(1-t)` dividing `N`, and the cofactor.
    fn reduced(&self) -> (Option<usize>, TPoly) {
        if self.numerator.is_empty() {
            return (None, Vec::new());
        }
        let mut q = self.numerator.clone();
        let mut order = 0;
        while q.iter().sum::<i64>() == 0 && order < 3 {
            // synthetic division by (1 - t)
            let mut out = vec![0; q.len() - 1];
            let mut acc = 0;
            for i in 0..q.len() - 1 {
                acc += q[i];
                out[i] = acc;
            }
            q = trim(out);
            order += 1;
        }
        (Some(order), q)
    }
}

fn binom2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(gens: &[Mono], k: u32) -> i64 {
        Mono::all_of_degree(k)
            .iter()
            .filter(|m| !gens.iter().any(|g| g.divides(m)))
            .count() as i64
    }

    #[test]
    fn complete_intersection_of_squares() {
        let g = [Mono::new(2, 0, 0), Mono::new(0, 2, 0), Mono::new(0, 0, 2)];
        let hs = HilbertSeries::of_monomial_ideal(&g);
        assert_eq!(hs.dimension(), 0);
        assert_eq!(hs.multiplicity(), 8);
        assert_eq!((0..5).map(|k| hs.value(k)).collect::<Vec<_>>(), [1, 3, 3, 1, 0]);
    }

    #[test]
    fn one_dimensional() {
        // (x^2, xy) has the line x = 0 as a component
        let g = [Mono::new(2, 0, 0), Mono::new(1, 1, 0)];
        let hs = HilbertSeries::of_monomial_ideal(&g);
        assert_eq!(hs.dimension(), 2);
        let g = [Mono::new(2, 0, 0), Mono::new(1, 1, 0), Mono::new(0, 3, 0)];
        let hs = HilbertSeries::of_monomial_ideal(&g);
        assert_eq!(hs.dimension(), 1);
        assert_eq!(hs.multiplicity(), 4);
        assert_eq!(hs.value(10), 4);
    }

    #[test]
    fn unit_and_zero_ideal() {
        assert_eq!(HilbertSeries::of_monomial_ideal(&[Mono::ONE]).dimension(), -1);
        let hs = HilbertSeries::of_monomial_ideal(&[]);
        assert_eq!(hs.dimension(), 3);
        assert_eq!(hs.value(4), 15);
    }

    fn arb_gens() -> impl Strategy<Value = Vec<Mono>> {
        prop::collection::vec((0u16..5, 0u16..5, 0u16..5), 1..8)
            .prop_map(|v| v.into_iter().map(|(a, b, c)| Mono::new(a, b, c)).collect())
    }

    proptest! {
        #[test]
        fn matches_brute_force(gens in arb_gens()) {
            let hs = HilbertSeries::of_monomial_ideal(&gens);
            for k in 0..16 {
                prop_assert_eq!(hs.value(k as i64), brute(&gens, k));
            }
        }
    }
}
