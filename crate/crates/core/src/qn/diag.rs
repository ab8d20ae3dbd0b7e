//! The diagonal `𝒟_N`, the expectations `E`, `F`, `G = F∘E`, and the order
//! on the projections `u^k s_m s_m* u^{-k}`.

use std::fmt;

use super::engine::Engine;
use super::word::{AlgebraElem, Word};
use crate::arith::{ArithProgression, FactoredNat};
use crate::coeff::ExactScalar;
use crate::error::{Error, Result};

/// `Σ_r c_r u^r s_M s_M* u^{-r}` over the residues `r = 0, …, M − 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct DiagonalElem {
    level: FactoredNat,
    entries: Vec<ExactScalar>,
}

impl DiagonalElem {
    pub fn zero(level: FactoredNat) -> Self {
        let size = level.as_i64() as usize;
        Self {
            level,
            entries: vec![ExactScalar::zero(); size],
        }
    }

    pub fn new(level: FactoredNat, entries: Vec<ExactScalar>) -> Result<Self> {
        if entries.len() as i64 != level.as_i64() {
            return Err(Error::Invalid(format!(
                "level {level} needs {level} entries, got {}",
                entries.len()
            )));
        }
        Ok(Self { level, entries })
    }

    /// The projection onto `k + mℤ`.
    pub fn projection(k: i64, m: FactoredNat) -> Self {
        let mut out = Self::zero(m.clone());
        out.entries[k.rem_euclid(m.as_i64()) as usize] = ExactScalar::one();
        out
    }

    pub fn level(&self) -> &FactoredNat {
        &self.level
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.entries
    }

    pub fn entry(&self, r: i64) -> &ExactScalar {
        &self.entries[r.rem_euclid(self.level.as_i64()) as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExactScalar::is_zero)
    }

    /// Residues with a nonzero entry.
    pub fn support(&self) -> Vec<i64> {
        (0..self.entries.len() as i64)
            .filter(|&r| !self.entries[r as usize].is_zero())
            .collect()
    }

    /// Every entry is `0` or `1`.
    pub fn is_projection(&self) -> bool {
        self.entries.iter().all(|c| c.is_zero() || c.is_one())
    }

    /// The same element at level `M′`, a multiple of the current level.
    pub fn refine_to(&self, level: &FactoredNat) -> Result<Self> {
        if !self.level.divides(level) {
            return Err(Error::Invalid(format!("{} does not divide {level}", self.level)));
        }
        let big = level.as_i64();
        let small = self.level.as_i64();
        let entries = (0..big).map(|r| self.entries[(r % small) as usize].clone()).collect();
        Ok(Self {
            level: level.clone(),
            entries,
        })
    }

    pub fn to_algebra(&self) -> AlgebraElem {
        let mut out = AlgebraElem::zero();
        for (r, c) in self.entries.iter().enumerate() {
            out.add_term(Word::projection(r as i64, self.level.clone()), c.clone());
        }
        out
    }

    /// Reads a combination of diagonal projections; other words are rejected.
    pub fn from_algebra(x: &AlgebraElem) -> Result<Self> {
        let mut level = FactoredNat::one();
        for (w, _) in x.terms() {
            if !w.is_diagonal() {
                return Err(Error::Invalid(format!("{w} is not a diagonal projection")));
            }
            level = level.lcm(w.m());
        }
        let big = level.as_i64();
        let mut out = Self::zero(level.clone());
        for (w, c) in x.terms() {
            let step = w.m().as_i64();
            let mut r = w.k().rem_euclid(step);
            while r < big {
                out.entries[r as usize] += c;
                r += step;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for DiagonalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|c| c.to_string()).collect();
        write!(f, "level {} [{}]", self.level, parts.join(", "))
    }
}

impl fmt::Debug for DiagonalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `E`: keeps the degree-one class `m = n`.
pub fn expect_e(x: &AlgebraElem) -> AlgebraElem {
    x.filter(|w| w.m() == w.n())
}

/// `F` on the degree-one part: keeps `u^k s_m s_m* u^{-k}`.
pub fn expect_f(x: &AlgebraElem) -> Result<AlgebraElem> {
    if let Some((w, _)) = x.terms().find(|(w, _)| w.m() != w.n()) {
        return Err(Error::Invalid(format!("F is defined on degree one only, found {w}")));
    }
    Ok(x.filter(Word::is_diagonal))
}

/// `G = F∘E` as a diagonal element at the least common level.
pub fn expect_g(x: &AlgebraElem) -> DiagonalElem {
    let diag = expect_f(&expect_e(x)).expect("E lands in degree one");
    DiagonalElem::from_algebra(&diag).expect("F lands in the diagonal")
}

/// `u^k s_m s_m* u^{-k} ≤ u^l s_n s_n* u^{-l}` iff `n | m` and `n | k − l`.
pub fn proj_leq(p1: (i64, &FactoredNat), p2: (i64, &FactoredNat)) -> bool {
    let (k, m) = p1;
    let (l, n) = p2;
    n.divides(m) && (k - l).rem_euclid(n.as_i64()) == 0
}

/// The same order decided in the algebra: `P₂P₁P₂ = P₁`.
pub fn proj_leq_engine(engine: &Engine, p1: (i64, &FactoredNat), p2: (i64, &FactoredNat)) -> bool {
    let a = AlgebraElem::word(Word::projection(p1.0, p1.1.clone()));
    let b = AlgebraElem::word(Word::projection(p2.0, p2.1.clone()));
    engine.equal(&engine.product(&[&b, &a, &b]), &a)
}

/// The same order decided on progressions: `k + mℤ ⊆ l + nℤ`.
pub fn proj_leq_progression(p1: (i64, &FactoredNat), p2: (i64, &FactoredNat)) -> bool {
    let a = ArithProgression::new(p1.0, p1.1.as_i64());
    let b = ArithProgression::new(p2.0, p2.1.as_i64());
    crate::arith::progression_contains(&b, &a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qn::word::nat;

    fn w(k: i64, m: u64, n: u64, l: i64) -> AlgebraElem {
        AlgebraElem::word(Word::from_ints(k, m, n, l))
    }

    #[test]
    fn expectations() {
        assert!(expect_e(&w(1, 2, 3, 0)).is_zero());
        assert!(expect_f(&w(2, 2, 2, 1)).unwrap().is_zero());
        assert!(expect_f(&w(0, 2, 3, 0)).is_err());
        let g = expect_g(&w(1, 2, 2, 1).add(&w(0, 3, 3, 0)));
        assert_eq!(g.level(), &nat(6));
        let one = ExactScalar::one();
        let two = ExactScalar::from_int(2);
        let zero = ExactScalar::zero();
        assert_eq!(g.entries(), &[one.clone(), one.clone(), zero.clone(), two, zero, one]);
    }

    #[test]
    fn diagonal_round_trip() {
        let d = DiagonalElem::projection(1, nat(2));
        let r = d.refine_to(&nat(6)).unwrap();
        assert_eq!(r.support(), vec![1, 3, 5]);
        let e = Engine::untwisted();
        assert!(e.equal(&r.to_algebra(), &d.to_algebra()));
        assert!(DiagonalElem::from_algebra(&w(1, 2, 3, 0)).is_err());
    }

    #[test]
    fn order_examples() {
        let e = Engine::untwisted();
        assert!(proj_leq((2, &nat(4)), (0, &nat(2))));
        assert!(!proj_leq((0, &nat(2)), (1, &nat(2))));
        assert!(proj_leq_engine(&e, (2, &nat(4)), (0, &nat(2))));
        assert!(!proj_leq_engine(&e, (0, &nat(2)), (1, &nat(2))));
        assert!(proj_leq_progression((5, &nat(12)), (2, &nat(3))));
    }
}
