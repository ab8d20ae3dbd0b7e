//! The free resolution `… → F_2 → F_1 → F_0 → 𝔐 → 0` of the module `𝔐`.
//!
//! `F_n` is free over `ℛ` on tuples `[p_1,…,p_n]`; the boundary is the
//! alternating sum that merges adjacent entries, and the splitting
//! homotopies prepend the grade of the coefficient to the tuple.

use std::collections::BTreeMap;
use std::fmt;

use super::ring::{RingElem, SemigroupAlgebra};
use crate::coeff::ExactScalar;
use crate::error::{Error, Result};

/// Element of `F_n`: a map from basis tuples of length `n` to coefficients in `ℛ`.
pub struct ResolutionElem<A: SemigroupAlgebra> {
    level: usize,
    terms: BTreeMap<Vec<A::Grade>, RingElem<A::Basis>>,
}

impl<A: SemigroupAlgebra> Clone for ResolutionElem<A> {
    fn clone(&self) -> Self {
        Self {
            level: self.level,
            terms: self.terms.clone(),
        }
    }
}

impl<A: SemigroupAlgebra> PartialEq for ResolutionElem<A> {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level && self.terms == other.terms
    }
}

impl<A: SemigroupAlgebra> fmt::Debug for ResolutionElem<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}{{", self.level)?;
        for (i, (t, r)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({r:?}){t:?}")?;
        }
        write!(f, "}}")
    }
}

impl<A: SemigroupAlgebra> ResolutionElem<A> {
    pub fn zero(level: usize) -> Self {
        Self {
            level,
            terms: BTreeMap::new(),
        }
    }

    /// `r·[tuple]`.
    pub fn basis(tuple: Vec<A::Grade>, r: RingElem<A::Basis>) -> Self {
        let mut out = Self::zero(tuple.len());
        out.add_term(tuple, r);
        out
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<A::Grade>, &RingElem<A::Basis>)> {
        self.terms.iter()
    }

    /// Panics when the tuple length differs from the level.
    pub fn add_term(&mut self, tuple: Vec<A::Grade>, r: RingElem<A::Basis>) {
        assert_eq!(tuple.len(), self.level, "tuple {tuple:?} has the wrong level");
        if r.is_zero() {
            return;
        }
        let slot = self.terms.entry(tuple.clone()).or_default();
        slot.add_assign(&r);
        if slot.is_zero() {
            self.terms.remove(&tuple);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.level, other.level);
        let mut out = self.clone();
        for (t, r) in &other.terms {
            out.add_term(t.clone(), r.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, r) in &other.terms {
            out.add_term(t.clone(), r.neg());
        }
        out
    }
}

/// A chain in the augmented complex: either in `𝔐` (degree −1) or in `F_n`.
pub enum ChainElem<A: SemigroupAlgebra> {
    Module(RingElem<A::Basis>),
    Free(ResolutionElem<A>),
}

impl<A: SemigroupAlgebra> Clone for ChainElem<A> {
    fn clone(&self) -> Self {
        match self {
            ChainElem::Module(m) => ChainElem::Module(m.clone()),
            ChainElem::Free(e) => ChainElem::Free(e.clone()),
        }
    }
}

impl<A: SemigroupAlgebra> PartialEq for ChainElem<A> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ChainElem::Module(a), ChainElem::Module(b)) => a == b,
            (ChainElem::Free(a), ChainElem::Free(b)) => a == b,
            _ => false,
        }
    }
}

impl<A: SemigroupAlgebra> fmt::Debug for ChainElem<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainElem::Module(m) => write!(f, "𝔐{{{m:?}}}"),
            ChainElem::Free(e) => write!(f, "{e:?}"),
        }
    }
}

impl<A: SemigroupAlgebra> ChainElem<A> {
    /// Degree in the augmented complex (`−1` for `𝔐`).
    pub fn degree(&self) -> i64 {
        match self {
            ChainElem::Module(_) => -1,
            ChainElem::Free(e) => e.level() as i64,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ChainElem::Module(m) => m.is_zero(),
            ChainElem::Free(e) => e.is_zero(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        match (self, other) {
            (ChainElem::Module(a), ChainElem::Module(b)) => ChainElem::Module(a.sub(b)),
            (ChainElem::Free(a), ChainElem::Free(b)) => ChainElem::Free(a.sub(b)),
            _ => panic!("subtracting chains of different degrees"),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (ChainElem::Module(a), ChainElem::Module(b)) => ChainElem::Module(a.add(b)),
            (ChainElem::Free(a), ChainElem::Free(b)) => ChainElem::Free(a.add(b)),
            _ => panic!("adding chains of different degrees"),
        }
    }
}

/// `∂` on `F_n` (`∂_{n−1}` in the indexing where `∂_{−1}: F_0 → 𝔐`).
pub fn boundary<A: SemigroupAlgebra>(alg: &A, e: &ResolutionElem<A>) -> ChainElem<A> {
    let n = e.level();
    if n == 0 {
        let mut out = RingElem::zero();
        for (_, r) in e.terms() {
            out.add_assign(&alg.psi(r));
        }
        return ChainElem::Module(out);
    }
    let mut out = ResolutionElem::zero(n - 1);
    for (tuple, r) in e.terms() {
        out.add_term(tuple[1..].to_vec(), alg.mul(r, &alg.unit(&tuple[0])));
        for i in 1..n {
            let mut merged = Vec::with_capacity(n - 1);
            merged.extend_from_slice(&tuple[..i - 1]);
            merged.push(alg.grade_op(&tuple[i - 1], &tuple[i]));
            merged.extend_from_slice(&tuple[i + 1..]);
            out.add_term(merged, r.scale(&sign(i)));
        }
        out.add_term(tuple[..n - 1].to_vec(), r.scale(&sign(n)));
    }
    ChainElem::Free(out)
}

/// `∂` on any chain; `𝔐 → 0`.
pub fn boundary_chain<A: SemigroupAlgebra>(alg: &A, c: &ChainElem<A>) -> Option<ChainElem<A>> {
    match c {
        ChainElem::Module(_) => None,
        ChainElem::Free(e) => Some(boundary(alg, e)),
    }
}

/// Splitting homotopy: `h_{−1}(a) = a[ ]`, `h_n(a𝟙_{p_0}[p_1,…,p_n]) = a[p_0,…,p_n]`.
///
/// Coefficients are decomposed by the grades of their basis elements;
/// algebras whose fibers are not free of rank one are rejected.
pub fn homotopy<A: SemigroupAlgebra>(alg: &A, c: &ChainElem<A>) -> Result<ResolutionElem<A>> {
    match c {
        ChainElem::Module(a) => Ok(ResolutionElem::basis(vec![], a.clone())),
        ChainElem::Free(e) => {
            let mut out = ResolutionElem::zero(e.level() + 1);
            for (tuple, r) in e.terms() {
                for (b, coeff) in r.terms() {
                    let (a, p0) = alg.split(b).ok_or_else(|| {
                        Error::Unsupported(format!("{b:?} is not of the form a·𝟙_p"))
                    })?;
                    let mut t = Vec::with_capacity(tuple.len() + 1);
                    t.push(p0);
                    t.extend_from_slice(tuple);
                    out.add_term(t, RingElem::term(a, coeff.clone()));
                }
            }
            Ok(out)
        }
    }
}

/// `(∂h + h∂)(c) − c`, which must vanish (`∂_{−1}h_{−1} − id` on `𝔐`).
pub fn homotopy_defect<A: SemigroupAlgebra>(alg: &A, c: &ChainElem<A>) -> Result<ChainElem<A>> {
    let dh = boundary(alg, &homotopy(alg, c)?);
    let total = match boundary_chain(alg, c) {
        None => dh,
        Some(dc) => dh.add(&ChainElem::Free(homotopy(alg, &dc)?)),
    };
    Ok(total.sub(c))
}

fn sign(i: usize) -> ExactScalar {
    ExactScalar::from_int(if i.is_multiple_of(2) { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::ring::{SkewBasis, SkewProduct};
    use crate::coeff::{CoeffElem, Dynamics, PElem};

    fn ring() -> SkewProduct {
        SkewProduct::new(Dynamics::laurent())
    }

    fn p(n: u64) -> PElem {
        PElem::nat(n)
    }

    fn one(r: &SkewProduct) -> RingElem<SkewBasis> {
        r.one()
    }

    #[test]
    fn boundary_low_levels() {
        let r = ring();
        // ∂_0([p]) = (𝟙_p − 1)[ ]
        let e = ResolutionElem::basis(vec![p(2)], one(&r));
        let expected = ResolutionElem::basis(vec![], r.unit(&p(2)).sub(&one(&r)));
        assert_eq!(boundary(&r, &e), ChainElem::Free(expected));
        // ∂_1([p,q]) = 𝟙_p[q] − [pq] + [p]
        let e = ResolutionElem::basis(vec![p(2), p(3)], one(&r));
        let mut expected = ResolutionElem::basis(vec![p(3)], r.unit(&p(2)));
        expected.add_term(vec![p(6)], one(&r).neg());
        expected.add_term(vec![p(2)], one(&r));
        assert_eq!(boundary(&r, &e), ChainElem::Free(expected));
        // ∂_{-1}([ ]) = 1
        let e = ResolutionElem::basis(vec![], one(&r));
        assert_eq!(boundary(&r, &e), ChainElem::Module(one(&r)));
    }

    #[test]
    fn boundary_squares_to_zero() {
        let r = ring();
        let coeff = r.fiber(&CoeffElem::u(1), &p(5));
        let e = ResolutionElem::basis(vec![p(2), p(3), p(4)], coeff);
        let ChainElem::Free(de) = boundary(&r, &e) else { unreachable!() };
        assert!(boundary(&r, &de).is_zero());
    }

    #[test]
    fn homotopies() {
        let r = ring();
        let u = CoeffElem::u(1);
        // h_{-1}(u) = u[ ]
        let h = homotopy(&r, &ChainElem::Module(r.embed(&u))).unwrap();
        assert_eq!(h, ResolutionElem::basis(vec![], r.embed(&u)));
        // h_0(u𝟙_2[ ]) = u[2]
        let x = ResolutionElem::basis(vec![], r.fiber(&u, &p(2)));
        let h = homotopy(&r, &ChainElem::Free(x.clone())).unwrap();
        assert_eq!(h, ResolutionElem::basis(vec![p(2)], r.embed(&u)));
        assert!(homotopy_defect(&r, &ChainElem::Free(x)).unwrap().is_zero());
        let g = crate::cohomology::ring::PathAlgebra::three_vertex();
        let e = ResolutionElem::basis(vec![], g.one());
        assert!(homotopy(&g, &ChainElem::Free(e)).is_err());
    }
}
