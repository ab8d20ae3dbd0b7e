//! Subprojections of a diagonal projection that kill a given off-diagonal
//! word when sandwiched: `P ≤ Q` and `P·W·P = 0`.

use serde::{Deserialize, Serialize};

use super::diag::{proj_leq, DiagonalElem};
use super::engine::Engine;
use super::word::{AlgebraElem, Word};
use crate::arith::{gcd_i64, ArithProgression, FactoredNat};
use crate::error::{Error, Result};

/// Which case of the search produced the projection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `P′` is not below the range projection of `W`.
    OutsideRange,
    /// `P′` is not below the domain projection of `W`.
    OutsideDomain,
    /// `P′WP′` is already zero.
    ZeroSandwich,
    /// The domain projection `g` of `P′WP′` is a proper subprojection of `P′`.
    BelowDomainOfSandwich,
    /// The range projection `f` of `P′WP′` is a proper subprojection of `P′`.
    BelowRangeOfSandwich,
    /// `m₀ = n₀`: `m = r ∨ m′` with `r` prime to `k₀ − l₀`.
    Endgame { r: i64 },
}

/// The projection `u^k s_m s_m* u^{-k}` returned by the search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subprojection {
    pub k: i64,
    pub m: FactoredNat,
    /// The level-`M` component `P′` of `Q` the search started from.
    pub start: (i64, FactoredNat),
    pub branch: Branch,
}

impl Subprojection {
    pub fn word(&self) -> Word {
        Word::projection(self.k, self.m.clone())
    }
}

fn progression(k: i64, m: &FactoredNat) -> ArithProgression {
    ArithProgression::new(k, m.as_i64())
}

/// A class `k + Lℤ ⊆ a` with `L = lcm` of the moduli, disjoint from `b`.
fn avoid(a: &ArithProgression, b: &ArithProgression) -> Option<(i64, FactoredNat)> {
    let lcm = FactoredNat::new(a.modulus() as u64)
        .ok()?
        .lcm(&FactoredNat::new(b.modulus() as u64).ok()?);
    a.refine(lcm.as_i64())
        .find(|c| !b.contains_int(c.residue()))
        .map(|c| (c.residue(), lcm))
}

/// The domain and range projections `g`, `f` of `P′WP′` in closed form, for
/// `P′ = (k′, m′)` below both the range and the domain projection of `W`:
/// `g = P′ ∧ (l₀ − n₀(k₀−k′)/m₀ + n₀(m′/m₀)ℤ)` and
/// `f = P′ ∧ (k₀ − m₀(l₀−k′)/n₀ + m₀(m′/n₀)ℤ)`. `None` when `P′WP′ = 0`.
pub fn sandwich_projections(
    start: (i64, &FactoredNat),
    w: &Word,
) -> Option<(ArithProgression, ArithProgression)> {
    let (k1, m1) = start;
    let (k0, m0, n0, l0) = (w.k(), w.m(), w.n(), w.l());
    let (a, b) = (m1.checked_div(m0)?, m1.checked_div(n0)?);
    let (m0i, n0i) = (m0.as_i64(), n0.as_i64());
    if (k0 - k1) % m0i != 0 || (l0 - k1) % n0i != 0 {
        return None;
    }
    let p1 = progression(k1, m1);
    let g = progression(l0 - n0i * (k0 - k1) / m0i, &n0.mul(&a));
    let f = progression(k0 - m0i * (l0 - k1) / n0i, &m0.mul(&b));
    Some((p1.meet(&g)?, p1.meet(&f)?))
}

fn sandwich(engine: &Engine, p: &Word, w: &Word) -> Option<Word> {
    let (_, pw) = engine.mul_words(p, w)?;
    let (_, v) = engine.mul_words(&pw, p)?;
    Some(v)
}

fn search(engine: &Engine, start: (i64, FactoredNat), w: &Word) -> Result<Subprojection> {
    let (k1, m1) = start.clone();
    let p1 = progression(k1, &m1);
    let done = |k: i64, m: FactoredNat, branch: Branch| Subprojection {
        k,
        m,
        start: start.clone(),
        branch,
    };
    let at = |r: Option<(i64, FactoredNat)>| r.ok_or_else(|| Error::Internal("empty complement".into()));
    if !w.range().contains(&p1) {
        let (k, m) = at(avoid(&p1, &w.range()))?;
        return Ok(done(k, m, Branch::OutsideRange));
    }
    if !w.domain().contains(&p1) {
        let (k, m) = at(avoid(&p1, &w.domain()))?;
        return Ok(done(k, m, Branch::OutsideDomain));
    }
    let pw = Word::projection(k1, m1.clone());
    let Some(v) = sandwich(engine, &pw, w) else {
        return Ok(done(k1, m1, Branch::ZeroSandwich));
    };
    let g = v.domain();
    let f = v.range();
    if g != p1 {
        let (k, m) = at(avoid(&p1, &g))?;
        return Ok(done(k, m, Branch::BelowDomainOfSandwich));
    }
    if f != p1 {
        let (k, m) = at(avoid(&p1, &f))?;
        return Ok(done(k, m, Branch::BelowRangeOfSandwich));
    }
    if w.m() != w.n() {
        return Err(Error::Internal(format!(
            "P′WP′ has full domain and range for {w:?} although m₀ ≠ n₀"
        )));
    }
    let t = w.k() - w.l();
    let r = (2..).find(|&r| gcd_i64(r, t) == 1).expect("some r is prime to t");
    let m = m1.lcm(&FactoredNat::new(r as u64)?);
    Ok(done(k1, m, Branch::Endgame { r }))
}

/// Finds `(k, m)` with `u^k s_m s_m* u^{-k} ≤ Q` and
/// `(u^k s_m s_m* u^{-k}) W (u^k s_m s_m* u^{-k}) = 0`, then verifies both
/// conditions in the engine.
pub fn find_orthogonal_subprojection(engine: &Engine, q: &DiagonalElem, w: &Word) -> Result<Subprojection> {
    if q.is_zero() || !q.is_projection() {
        return Err(Error::Rejected(format!("Q = {q} is not a nonzero projection")));
    }
    if w.is_diagonal() {
        return Err(Error::Rejected(format!("{w} is a diagonal projection")));
    }
    let r0 = q.support()[0];
    let found = search(engine, (r0, q.level().clone()), w)?;
    verify(engine, q, w, &found)?;
    Ok(found)
}

/// Checks (i) `P ≤ Q` and (ii) `PWP = 0` for a candidate.
pub fn verify(engine: &Engine, q: &DiagonalElem, w: &Word, p: &Subprojection) -> Result<()> {
    let below_start = proj_leq((p.k, &p.m), (p.start.0, &p.start.1));
    let start_in_q = q.entry(p.start.0).is_one();
    if !(below_start && start_in_q) {
        return Err(Error::Internal(format!("({}, {}) is not below Q = {q}", p.k, p.m)));
    }
    let pe = AlgebraElem::word(p.word());
    let we = AlgebraElem::word(w.clone());
    if !engine.is_zero(&engine.product(&[&pe, &we, &pe])) {
        return Err(Error::Internal(format!("PWP ≠ 0 for P = ({}, {}) and {w:?}", p.k, p.m)));
    }
    Ok(())
}
