//! Words `u^k s_m s_n* u^{-l}` and finite linear combinations of them.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{ArithProgression, FactoredNat};
use crate::coeff::ExactScalar;

/// The key `(k, m, n, l)` of `u^k s_m s_n* u^{-l}`, kept with `0 ≤ l < n`.
///
/// `u^{k−qm} s_m s_n* u^{−(l−qn)} = u^k s_m s_n* u^{-l}` for all `q`, so each
/// word has exactly one canonical key.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    k: i64,
    m: FactoredNat,
    n: FactoredNat,
    l: i64,
}

impl Word {
    pub fn new(k: i64, m: FactoredNat, n: FactoredNat, l: i64) -> Self {
        let (mi, ni) = (m.as_i64(), n.as_i64());
        let q = l.div_euclid(ni);
        Self {
            k: k - q * mi,
            m,
            n,
            l: l - q * ni,
        }
    }

    /// Convenience constructor from small integers; panics on `m = 0` or `n = 0`.
    pub fn from_ints(k: i64, m: u64, n: u64, l: i64) -> Self {
        Self::new(k, nat(m), nat(n), l)
    }

    pub fn one() -> Self {
        Self::from_ints(0, 1, 1, 0)
    }

    pub fn u(k: i64) -> Self {
        Self::from_ints(k, 1, 1, 0)
    }

    pub fn s(m: u64) -> Self {
        Self::from_ints(0, m, 1, 0)
    }

    pub fn s_star(n: u64) -> Self {
        Self::from_ints(0, 1, n, 0)
    }

    /// The projection `u^k s_m s_m* u^{-k}` onto `k + mℤ`.
    pub fn projection(k: i64, m: FactoredNat) -> Self {
        Self::new(k, m.clone(), m, k)
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn m(&self) -> &FactoredNat {
        &self.m
    }

    pub fn n(&self) -> &FactoredNat {
        &self.n
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    /// The reduced fraction `m/n` labelling the degree class.
    pub fn degree(&self) -> (FactoredNat, FactoredNat) {
        let g = self.m.gcd(&self.n);
        (
            self.m.checked_div(&g).expect("gcd divides"),
            self.n.checked_div(&g).expect("gcd divides"),
        )
    }

    /// `m = n` and `k = l`: a diagonal projection.
    pub fn is_diagonal(&self) -> bool {
        self.m == self.n && self.k == self.l
    }

    pub fn adjoint(&self) -> Self {
        Self::new(self.l, self.n.clone(), self.m.clone(), self.k)
    }

    /// `l + nℤ`, where the word is defined.
    pub fn domain(&self) -> ArithProgression {
        ArithProgression::new(self.l, self.n.as_i64())
    }

    /// `k + mℤ`, the image.
    pub fn range(&self) -> ArithProgression {
        ArithProgression::new(self.k, self.m.as_i64())
    }
}

pub(crate) fn nat(x: u64) -> FactoredNat {
    FactoredNat::new(x).expect("positive integer")
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.k != 0 {
            parts.push(power(self.k));
        }
        if !self.m.is_one() {
            parts.push(format!("s({})", self.m));
        }
        if !self.n.is_one() {
            parts.push(format!("s*({})", self.n));
        }
        if self.l != 0 {
            parts.push(power(-self.l));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

fn power(k: i64) -> String {
    if k == 1 {
        "u".into()
    } else {
        format!("u^{k}")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.k, self.m, self.n, self.l)
    }
}

/// `coeff · word`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial {
    pub coeff: ExactScalar,
    pub word: Word,
}

impl Monomial {
    pub fn new(coeff: ExactScalar, word: Word) -> Self {
        Self { coeff, word }
    }

    pub fn word(word: Word) -> Self {
        Self::new(ExactScalar::one(), word)
    }
}

/// A finite linear combination of canonical words.
///
/// Structural equality compares stored keys; use the engine's `equal` for
/// equality in the algebra.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlgebraElem {
    terms: BTreeMap<Word, ExactScalar>,
}

impl AlgebraElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::one())
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(ExactScalar::one(), w)
    }

    pub fn monomial(c: ExactScalar, w: Word) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|(w, c)| Monomial::new(c.clone(), w.clone()))
    }

    pub fn coefficient(&self, w: &Word) -> ExactScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Word, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&ExactScalar::from_int(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// Keeps the terms whose word satisfies `keep`.
    pub fn filter<F: FnMut(&Word) -> bool>(&self, mut keep: F) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

impl FromIterator<Monomial> for AlgebraElem {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut out = Self::zero();
        for m in iter {
            out.add_term(m.word, m.coeff);
        }
        out
    }
}

impl fmt::Debug for AlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::syntax::serialize(self))
    }
}

impl fmt::Display for AlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::syntax::serialize(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_keys() {
        let w = Word::from_ints(3, 2, 3, 7);
        assert_eq!((w.k(), w.l()), (-1, 1));
        assert_eq!(w, Word::from_ints(1, 2, 3, 4));
        let p = Word::projection(5, nat(2));
        assert!(p.is_diagonal());
        assert_eq!(p, Word::from_ints(1, 2, 2, 1));
        assert_eq!(Word::from_ints(0, 4, 6, 0).degree(), (nat(2), nat(3)));
        assert_eq!(Word::from_ints(1, 2, 3, 0).adjoint(), Word::from_ints(0, 3, 2, 1));
    }

    #[test]
    fn display() {
        assert_eq!(Word::from_ints(2, 6, 4, 1).to_string(), "u^2*s(6)*s*(4)*u^-1");
        assert_eq!(Word::one().to_string(), "1");
        assert_eq!(Word::u(1).to_string(), "u");
    }
}
