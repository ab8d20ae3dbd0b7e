//! Inhomogeneous cochains `C^n(P, 𝔐) = {ξ: Pⁿ → A}` and their differentials.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::resolution::ResolutionElem;
use super::ring::SkewProduct;
use crate::coeff::{CoeffElem, Dynamics, ExactScalar, PElem};
use crate::error::{Error, Result};
use crate::report::CheckReport;

type Evaluator = dyn Fn(&[PElem]) -> Result<CoeffElem> + Send + Sync;

/// A level-`n` cochain given by an evaluator on `n`-tuples.
#[derive(Clone)]
pub struct Cochain {
    level: usize,
    eval: Arc<Evaluator>,
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain(level {})", self.level)
    }
}

impl Cochain {
    pub fn new<F>(level: usize, f: F) -> Self
    where
        F: Fn(&[PElem]) -> Result<CoeffElem> + Send + Sync + 'static,
    {
        Self {
            level,
            eval: Arc::new(f),
        }
    }

    /// Level-0 cochain: a single element of `A`.
    pub fn constant(a: CoeffElem) -> Self {
        Self::new(0, move |_| Ok(a.clone()))
    }

    pub fn zero(level: usize) -> Self {
        Self::new(level, |_| Ok(CoeffElem::zero()))
    }

    /// Cochain defined by a finite table; tuples outside it are rejected.
    pub fn from_table(level: usize, table: BTreeMap<Vec<PElem>, CoeffElem>) -> Result<Self> {
        if let Some(t) = table.keys().find(|t| t.len() != level) {
            return Err(Error::Invalid(format!("table entry {t:?} is not a {level}-tuple")));
        }
        Ok(Self::new(level, move |t| {
            table
                .get(t)
                .cloned()
                .ok_or_else(|| Error::Invalid(format!("{t:?} lies outside the cochain's window")))
        }))
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn eval(&self, tuple: &[PElem]) -> Result<CoeffElem> {
        if tuple.len() != self.level {
            return Err(Error::Invalid(format!(
                "level-{} cochain evaluated on {tuple:?}",
                self.level
            )));
        }
        (self.eval)(tuple)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        if self.level != other.level {
            return Err(Error::Invalid("cochains of different levels".into()));
        }
        let (a, b) = (self.clone(), other.clone());
        Ok(Cochain::new(self.level, move |t| Ok(a.eval(t)?.sub(&b.eval(t)?))))
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if self.level != other.level {
            return Err(Error::Invalid("cochains of different levels".into()));
        }
        let (a, b) = (self.clone(), other.clone());
        Ok(Cochain::new(self.level, move |t| Ok(a.eval(t)?.add(&b.eval(t)?))))
    }
}

/// `∂ⁿξ(p_1,…,p_{n+1}) = θ_{p_1}(ξ(p_2,…)) + Σ_i (−1)^i ξ(…,p_ip_{i+1},…) + (−1)^{n+1} ξ(p_1,…,p_n)`.
pub fn differential(d: &Dynamics, c: &Cochain, tuple: &[PElem]) -> Result<CoeffElem> {
    let n = c.level();
    if tuple.len() != n + 1 {
        return Err(Error::Invalid(format!(
            "∂ of a level-{n} cochain needs a {}-tuple, got {tuple:?}",
            n + 1
        )));
    }
    let mut out = d.act(&tuple[0], &c.eval(&tuple[1..])?);
    for i in 1..=n {
        let mut merged = Vec::with_capacity(n);
        merged.extend_from_slice(&tuple[..i - 1]);
        merged.push(d.op(&tuple[i - 1], &tuple[i]));
        merged.extend_from_slice(&tuple[i + 1..]);
        out = out.add(&c.eval(&merged)?.scale(&sign(i)));
    }
    out = out.add(&c.eval(&tuple[..n])?.scale(&sign(n + 1)));
    Ok(out)
}

/// `∂ξ` as a cochain of the next level.
pub fn coboundary(d: &Dynamics, c: &Cochain) -> Cochain {
    let (d, c2) = (d.clone(), c.clone());
    Cochain::new(c.level() + 1, move |t| differential(&d, &c2, t))
}

/// Lists the `(n+1)`-tuples of the window where `∂ξ ≠ 0`.
pub fn is_cocycle(d: &Dynamics, c: &Cochain, window: &[Vec<PElem>]) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    for t in window {
        let v = differential(d, c, t)?;
        report.record(t, (!v.is_zero()).then(|| v.to_string()));
    }
    Ok(report)
}

/// Lists the `n`-tuples of the window where `ξ − ∂ψ ≠ 0`.
pub fn coboundary_residual(
    d: &Dynamics,
    c: &Cochain,
    psi: &Cochain,
    window: &[Vec<PElem>],
) -> Result<CheckReport> {
    if psi.level() + 1 != c.level() {
        return Err(Error::Invalid(format!(
            "ψ has level {} but ξ has level {}",
            psi.level(),
            c.level()
        )));
    }
    let mut report = CheckReport::new();
    for t in window {
        let v = c.eval(t)?.sub(&differential(d, psi, t)?);
        report.record(t, (!v.is_zero()).then(|| v.to_string()));
    }
    Ok(report)
}

/// Extends `ξ` to the `ℛ`-linear map `F_n → 𝔐`, `r[τ] ↦ r ⇀ ξ(τ)`.
pub fn extend_to_hom(
    ring: &SkewProduct,
    c: &Cochain,
    e: &ResolutionElem<SkewProduct>,
) -> Result<CoeffElem> {
    if e.level() != c.level() {
        return Err(Error::Invalid("level mismatch between cochain and chain".into()));
    }
    let d = ring.dynamics();
    let mut out = CoeffElem::zero();
    for (tuple, r) in e.terms() {
        let value = c.eval(tuple)?;
        for (b, coeff) in r.terms() {
            let moved = d.act(&b.p, &value);
            let shifted = moved.map_support(|h| d.group().op(&b.g, h));
            out = out.add(&shifted.scale(coeff));
        }
    }
    Ok(out)
}

/// Restricts a map on `F_n` to basis tuples, `ξ(τ) = φ([τ])`.
pub fn restrict_hom<F>(level: usize, phi: F) -> Cochain
where
    F: Fn(&[PElem]) -> Result<CoeffElem> + Send + Sync + 'static,
{
    Cochain::new(level, phi)
}

/// All `len`-tuples over `elems`.
pub fn tuples(elems: &[PElem], len: usize) -> Vec<Vec<PElem>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                elems.iter().map(move |p| {
                    let mut t = t.clone();
                    t.push(p.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// `1, …, n` as elements of `ℕ^×`.
pub fn nat_range(n: u64) -> Vec<PElem> {
    (1..=n).map(PElem::nat).collect()
}

/// `[1..n]^len`.
pub fn nat_window(n: u64, len: usize) -> Vec<Vec<PElem>> {
    tuples(&nat_range(n), len)
}

/// Tuples in `ℕ^×` whose full product is at most `bound`.
pub fn bounded_product_window(bound: u64, len: usize) -> Vec<Vec<PElem>> {
    fn go(bound: u64, len: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<PElem>>) {
        if prefix.len() == len {
            out.push(prefix.iter().map(|&x| PElem::nat(x)).collect());
            return;
        }
        let used: u64 = prefix.iter().product();
        for x in 1..=bound / used {
            prefix.push(x);
            go(bound, len, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(bound.max(1), len, &mut Vec::new(), &mut out);
    if bound == 0 {
        out.clear();
    }
    out
}

fn sign(i: usize) -> ExactScalar {
    ExactScalar::from_int(if i.is_multiple_of(2) { 1 } else { -1 })
}
