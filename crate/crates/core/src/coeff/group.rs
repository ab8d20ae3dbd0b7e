//! Finitely generated abelian groups `ℤ^d × Πℤ/nᵢ` and their group rings.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::scalar::ExactScalar;
use crate::error::{Error, Result};

/// Exponent vector over the group's generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElem(pub Vec<i64>);

impl GroupElem {
    pub fn identity(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// `u^k` in `ℤ`.
    pub fn power(k: i64) -> Self {
        Self(vec![k])
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `ℤ^a × Πℤ/nᵢ` described by one order per generator (`0` for `ℤ`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    orders: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(orders: Vec<u64>) -> Self {
        Self { orders }
    }

    pub fn integers() -> Self {
        Self::new(vec![0])
    }

    pub fn trivial() -> Self {
        Self::new(vec![])
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn is_free(&self) -> bool {
        self.orders.iter().all(|&o| o == 0)
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|&o| o > 0)
    }

    pub fn is_integers(&self) -> bool {
        self.orders == [0]
    }

    pub fn reduce(&self, mut g: GroupElem) -> GroupElem {
        for (x, &o) in g.0.iter_mut().zip(&self.orders) {
            if o > 0 {
                *x = x.rem_euclid(o as i64);
            }
        }
        g
    }

    pub fn elem(&self, exps: Vec<i64>) -> Result<GroupElem> {
        if exps.len() != self.rank() {
            return Err(Error::Invalid(format!(
                "group element {exps:?} has wrong rank (expected {})",
                self.rank()
            )));
        }
        Ok(self.reduce(GroupElem(exps)))
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem::identity(self.rank())
    }

    pub fn op(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        self.reduce(GroupElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect()))
    }

    pub fn inverse(&self, a: &GroupElem) -> GroupElem {
        self.reduce(GroupElem(a.0.iter().map(|x| -x).collect()))
    }

    /// All elements of a finite group.
    pub fn elements(&self) -> Option<Vec<GroupElem>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![GroupElem(vec![])];
        for &o in &self.orders {
            out = out
                .into_iter()
                .flat_map(|g| {
                    (0..o as i64).map(move |x| {
                        let mut v = g.0.clone();
                        v.push(x);
                        GroupElem(v)
                    })
                })
                .collect();
        }
        Some(out)
    }

    /// Group-ring product.
    pub fn mul(&self, a: &CoeffElem, b: &CoeffElem) -> CoeffElem {
        let mut out = CoeffElem::zero();
        for (g, c) in &a.terms {
            for (h, d) in &b.terms {
                out.add_term(self.op(g, h), c * d);
            }
        }
        out
    }

    /// Adjoint: conjugate coefficients, invert group elements.
    pub fn star(&self, a: &CoeffElem) -> CoeffElem {
        let mut out = CoeffElem::zero();
        for (g, c) in &a.terms {
            out.add_term(self.inverse(g), c.star());
        }
        out
    }

    pub fn is_self_adjoint(&self, a: &CoeffElem) -> bool {
        self.star(a) == *a
    }
}

/// Finitely supported element of the group ring with exact coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<CoeffTerm>", into = "Vec<CoeffTerm>")]
pub struct CoeffElem {
    terms: BTreeMap<GroupElem, ExactScalar>,
}

#[derive(Serialize, Deserialize)]
struct CoeffTerm {
    g: GroupElem,
    c: ExactScalar,
}

impl From<Vec<CoeffTerm>> for CoeffElem {
    fn from(v: Vec<CoeffTerm>) -> Self {
        let mut out = Self::zero();
        for t in v {
            out.add_term(t.g, t.c);
        }
        out
    }
}

impl From<CoeffElem> for Vec<CoeffTerm> {
    fn from(a: CoeffElem) -> Self {
        a.terms.into_iter().map(|(g, c)| CoeffTerm { g, c }).collect()
    }
}

impl CoeffElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(g: GroupElem, c: ExactScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    /// Scalar multiple of the identity for a group of the given rank.
    pub fn constant(rank: usize, c: ExactScalar) -> Self {
        Self::term(GroupElem::identity(rank), c)
    }

    /// The unit `u^k` of `ℂ[ℤ]`.
    pub fn u(k: i64) -> Self {
        Self::term(GroupElem::power(k), ExactScalar::one())
    }

    /// Laurent polynomial from `(exponent, coefficient)` pairs.
    pub fn laurent<I: IntoIterator<Item = (i64, ExactScalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(GroupElem::power(k), c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElem, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &GroupElem) -> ExactScalar {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    /// `Σ_g c_g`, the value at the trivial character (`z = 1` for `ℤ`).
    pub fn augmentation(&self) -> ExactScalar {
        let mut out = ExactScalar::zero();
        for c in self.terms.values() {
            out += c;
        }
        out
    }

    /// The coefficient of the identity if that is the only term.
    pub fn as_constant(&self) -> Option<ExactScalar> {
        match self.terms.len() {
            0 => Some(ExactScalar::zero()),
            1 => {
                let (g, c) = self.terms.iter().next()?;
                g.is_identity().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, g: GroupElem, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(g) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &o.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            out.add_term(g.clone(), c * s);
        }
        out
    }

    /// Applies `f` to every group element, merging coefficients.
    pub fn map_support<F: FnMut(&GroupElem) -> GroupElem>(&self, mut f: F) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            out.add_term(f(g), c.clone());
        }
        out
    }

    /// Keeps terms whose group element satisfies `keep`, relabelling them by
    /// the returned element.
    pub fn filter_map_support<F: FnMut(&GroupElem) -> Option<GroupElem>>(&self, mut f: F) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            if let Some(h) = f(g) {
                out.add_term(h, c.clone());
            }
        }
        out
    }
}

impl fmt::Display for CoeffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]")?;
            if !g.is_identity() {
                match g.0.as_slice() {
                    [k] => write!(f, "*u^{k}")?,
                    v => write!(f, "*g{v:?}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoeffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
