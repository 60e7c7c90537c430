//! Monomials in x, y, z and the fixed graded reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

/// Index of a variable: 0 = x, 1 = y, 2 = z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }

    pub fn from_char(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

/// `x^a y^b z^c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    pub exp: [u16; 3],
}

impl Mono {
    pub const ONE: Mono = Mono { exp: [0, 0, 0] };

    pub fn new(a: u16, b: u16, c: u16) -> Mono {
        Mono { exp: [a, b, c] }
    }

    pub fn var(v: Var) -> Mono {
        let mut exp = [0; 3];
        exp[v.index()] = 1;
        Mono { exp }
    }

    pub fn degree(&self) -> u32 {
        self.exp.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono {
            exp: [
                self.exp[0] + other.exp[0],
                self.exp[1] + other.exp[1],
                self.exp[2] + other.exp[2],
            ],
        }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.exp[0] <= other.exp[0] && self.exp[1] <= other.exp[1] && self.exp[2] <= other.exp[2]
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        debug_assert!(self.divides(other));
        Mono {
            exp: [
                other.exp[0] - self.exp[0],
                other.exp[1] - self.exp[1],
                other.exp[2] - self.exp[2],
            ],
        }
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono {
            exp: [
                self.exp[0].max(other.exp[0]),
                self.exp[1].max(other.exp[1]),
                self.exp[2].max(other.exp[2]),
            ],
        }
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        (0..3).all(|i| self.exp[i] == 0 || other.exp[i] == 0)
    }

    /// Position of this monomial among all monomials of its degree, listed
    /// in descending grevlex order (`x^k` first, `z^k` last).
    pub fn grevlex_rank(&self) -> usize {
        let k = self.degree() as usize;
        let b = self.exp[1] as usize;
        let c = self.exp[2] as usize;
        c * (k + 1) - c * (c.saturating_sub(1)) / 2 + b
    }

    /// All monomials of degree `k` in descending grevlex order.
    pub fn all_of_degree(k: u32) -> Vec<Mono> {
        let k = k as u16;
        let mut out = Vec::with_capacity(count_of_degree(k as i64));
        for c in 0..=k {
            for b in 0..=(k - c) {
                out.push(Mono::new(k - b - c, b, c));
            }
        }
        out
    }
}

/// Number of monomials of degree `k` in three variables, `C(k+2, 2)`.
pub fn count_of_degree(k: i64) -> usize {
    if k < 0 {
        0
    } else {
        let k = k as usize;
        (k + 1) * (k + 2) / 2
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Mono) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exp[2].cmp(&self.exp[2]))
            .then_with(|| other.exp[1].cmp(&self.exp[1]))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Mono) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Mono::ONE {
            return write!(f, "1");
        }
        for v in Var::ALL {
            match self.exp[v.index()] {
                0 => {}
                1 => write!(f, "{}", v.name())?,
                e => write!(f, "{}^{}", v.name(), e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn grevlex_small_cases() {
        // degree first
        assert!(Mono::new(0, 0, 2) > Mono::new(1, 0, 0));
        // x^2 > xy > y^2 > xz > yz > z^2
        let deg2 = Mono::all_of_degree(2);
        let names: Vec<String> = deg2.iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["x^2", "xy", "y^2", "xz", "yz", "z^2"]);
        for w in deg2.windows(2) {
            assert!(w[0] > w[1]);
        }
        // the reverse-lex tie break: x y^2 z^0 beats x^2 z
        assert!(Mono::new(1, 2, 0) > Mono::new(2, 0, 1));
    }

    #[test]
    fn rank_matches_enumeration() {
        for k in 0..12 {
            for (i, m) in Mono::all_of_degree(k).iter().enumerate() {
                assert_eq!(m.grevlex_rank(), i, "{m}");
            }
            assert_eq!(Mono::all_of_degree(k).len(), count_of_degree(k as i64));
        }
    }

    fn arb_mono() -> impl Strategy<Value = Mono> {
        (0u16..8, 0u16..8, 0u16..8).prop_map(|(a, b, c)| Mono::new(a, b, c))
    }

    proptest! {
        #[test]
        fn order_is_multiplicative(u in arb_mono(), v in arb_mono(), w in arb_mono()) {
            prop_assert_eq!(u.cmp(&v), u.mul(&w).cmp(&v.mul(&w)));
        }

        #[test]
        fn order_is_total(u in arb_mono(), v in arb_mono()) {
            prop_assert_eq!(u.cmp(&v) == Ordering::Equal, u == v);
        }
    }
}
