//! Sparse polynomials in `Q[x, y, z]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::mono::{Mono, Var};
use crate::rat::Rat;

/// A polynomial kept in canonical form: terms sorted by descending grevlex
/// order with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, Rat)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::monomial(Mono::ONE, c)
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn var(v: Var) -> Poly {
        Poly::monomial(Mono::var(v), Rat::one())
    }

    pub fn x() -> Poly {
        Poly::var(Var::X)
    }

    pub fn y() -> Poly {
        Poly::var(Var::Y)
    }

    pub fn z() -> Poly {
        Poly::var(Var::Z)
    }

    pub fn monomial(m: Mono, c: Rat) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, Rat)>) -> Poly {
        let mut acc: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += &c;
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, Rat)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Rat)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    pub fn leading_term(&self) -> Option<&(Mono, Rat)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Mono, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let i = v.index();
        let terms = self.terms.iter().filter(|(m, _)| m.exp[i] > 0).map(|(m, c)| {
            let mut e = *m;
            let k = e.exp[i];
            e.exp[i] -= 1;
            (e, c * &Rat::from_int(k as i64))
        });
        // differentiation can reorder terms, so recanonicalize
        Poly::from_terms(terms)
    }

    /// The three partial derivatives `(f_x, f_y, f_z)`.
    pub fn gradient(&self) -> [Poly; 3] {
        [
            self.derivative(Var::X),
            self.derivative(Var::Y),
            self.derivative(Var::Z),
        ]
    }

    pub fn eval(&self, point: &[Rat; 3]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (&e, p) in m.exp.iter().zip(point) {
                for _ in 0..e {
                    t = &t * p;
                }
            }
            acc += &t;
        }
        acc
    }

    /// Applies a permutation of the variables: variable `i` is sent to
    /// variable `perm[i]`.
    pub fn permute_vars(&self, perm: [usize; 3]) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = [0u16; 3];
            for i in 0..3 {
                e[perm[i]] = m.exp[i];
            }
            (Mono { exp: e }, c.clone())
        }))
    }

    /// Exact division. Returns the quotient and the remainder of the
    /// standard division by a single polynomial; the remainder is zero iff
    /// `divisor` divides `self`.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let (lm, lc) = divisor
            .leading_term()
            .expect("division by the zero polynomial")
            .clone();
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        let mut remainder = Vec::new();
        while let Some((m, c)) = rest.terms.first().cloned() {
            if lm.divides(&m) {
                let q = lm.quotient_of(&m);
                let qc = &c / &lc;
                rest = &rest - &divisor.mul_term(&q, &qc);
                quotient.push((q, qc));
            } else {
                remainder.push((m, c));
                rest.terms.remove(0);
            }
        }
        (Poly::from_terms(quotient), Poly::from_terms(remainder))
    }

    /// `Some(self / divisor)` when the division is exact.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// The homogeneous component of degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .cloned()
                .collect(),
        }
    }

    /// Clears denominators and content so the result has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        use num_integer::Integer;
        use num_traits::Zero;
        if self.is_zero() {
            return Poly::zero();
        }
        let l = crate::rat::denominator_lcm(self.terms.iter().map(|(_, c)| c));
        let scaled: Vec<_> = self
            .terms
            .iter()
            .map(|(_, c)| (c * &Rat::from_bigint(l.clone())).numer())
            .collect();
        let g = scaled.iter().fold(num_bigint::BigInt::zero(), |g, n| g.gcd(n));
        let mut factor = Rat::from_bigint(l) / Rat::from_bigint(g);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

fn merge(a: &[(Mono, Rat)], b: &[(Mono, Rat)], negate_b: bool) -> Poly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (m, c) in &b[j..] {
        out.push((*m, if negate_b { -c } else { c.clone() }));
    }
    Poly { terms: out }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut acc: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                let e = acc.entry(m.mul(n)).or_default();
                *e += &(a * b);
            }
        }
        Poly {
            terms: acc
                .into_iter()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Determinant of the 3x3 matrix with rows `(x, y, z)`, `row2`, `row3`.
pub fn det3(row2: &[Poly; 3], row3: &[Poly; 3]) -> Poly {
    let [a1, b1, c1] = row2;
    let [a, b, c] = row3;
    let minor_x = &(b1 * c) - &(c1 * b);
    let minor_y = &(a1 * c) - &(c1 * a);
    let minor_z = &(a1 * b) - &(b1 * a);
    &(&(&Poly::x() * &minor_x) - &(&Poly::y() * &minor_y)) + &(&Poly::z() * &minor_z)
}

impl fmt::Display for Poly {
    /// Canonical text: descending grevlex, explicit `^`, no `*` between
    /// variable powers. The output parses back to the same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let is_const = *m == Mono::ONE;
            if abs.is_integer() {
                if !abs.is_one() || is_const {
                    write!(f, "{abs}")?;
                }
            } else {
                // fractions are written as (p/q) so the grammar round-trips
                write!(f, "{}/{}", abs.numer(), abs.denom())?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            if !is_const {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
