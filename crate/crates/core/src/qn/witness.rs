//! Exact `T`, `R` with `T·x·R = 1`.
//!
//! With `y = xx*` and `G(y) = Σ_r c_r P_r` at level `M`, pick `r₀` in the
//! support and shrink `P_{r₀}` by [`find_orthogonal_subprojection`] until every
//! off-diagonal word `W` of `y` has `PWP = 0`. Then `PyP = c_{r₀}P` and for
//! `P = u^k s_m s_m* u^{-k}`, `T = c^{-1/2} s_m* u^{-k}`, `R = c^{-1/2} x* u^k s_m`.

use num_rational::BigRational;
use num_traits::Signed;

use super::diag::{expect_g, DiagonalElem};
use super::engine::Engine;
use super::orthogonal::{find_orthogonal_subprojection, Subprojection};
use super::word::{AlgebraElem, Word};
use crate::arith::FactoredNat;
use crate::coeff::ExactScalar;
use crate::error::{Error, Result};

/// `radicand^{-1/2} · elem`, with the square root kept formal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootScaled {
    pub radicand: BigRational,
    pub elem: AlgebraElem,
}

impl std::fmt::Display for RootScaled {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})^(-1/2) * [{}]", self.radicand, self.elem)
    }
}

#[derive(Clone, Debug)]
pub struct PiWitness {
    /// `G(xx*)` at the common level.
    pub diagonal: DiagonalElem,
    /// The support projection `Q` of `G(xx*)`.
    pub support: DiagonalElem,
    pub component: i64,
    /// One entry per off-diagonal word of `xx*`, in the order processed.
    pub steps: Vec<(Word, Subprojection)>,
    pub k: i64,
    pub m: FactoredNat,
    pub t: RootScaled,
    pub r: RootScaled,
}

impl PiWitness {
    /// `T·x·R`, exact: the two formal roots share a radicand and combine to `1/c`.
    pub fn product(&self, engine: &Engine, x: &AlgebraElem) -> Result<AlgebraElem> {
        if self.t.radicand != self.r.radicand {
            return Err(Error::Internal("T and R carry different radicands".into()));
        }
        let inv = BigRational::from_integer(1.into()) / &self.t.radicand;
        Ok(engine
            .product(&[&self.t.elem, x, &self.r.elem])
            .scale(&ExactScalar::from_rational(inv)))
    }

    pub fn verify(&self, engine: &Engine, x: &AlgebraElem) -> Result<bool> {
        Ok(engine.equal(&self.product(engine, x)?, &AlgebraElem::one()))
    }
}

/// Builds and verifies the witness. Inputs whose `G(xx*)` has a support entry
/// that is not a positive rational are rejected.
pub fn pure_infiniteness_witness(engine: &Engine, x: &AlgebraElem) -> Result<PiWitness> {
    let y = engine.normalize(&engine.mul(x, &engine.star(x)));
    let diagonal = expect_g(&y);
    if diagonal.is_zero() {
        return Err(Error::Internal(format!("G(xx*) = 0 for x = {x}")));
    }
    let level = diagonal.level().clone();
    let mut values = Vec::new();
    for r in diagonal.support() {
        let c = diagonal.entry(r);
        match c.as_rational() {
            Some(q) if q.is_positive() => values.push((r, q)),
            _ => {
                return Err(Error::Rejected(format!(
                    "diagonal entry of G(xx*) at residue {r} mod {level} is {c}, not a positive rational"
                )))
            }
        }
    }
    let indicator = diagonal
        .entries()
        .iter()
        .map(|c| if c.is_zero() { ExactScalar::zero() } else { ExactScalar::one() })
        .collect();
    let support = DiagonalElem::new(level.clone(), indicator)?;
    let (component, c) = values[0].clone();
    let mut q = DiagonalElem::projection(component, level.clone());
    let (mut k, mut m) = (component, level);
    let mut steps = Vec::new();
    for (w, _) in y.terms().filter(|(w, _)| !w.is_diagonal()) {
        let p = find_orthogonal_subprojection(engine, &q, w)?;
        (k, m) = (p.k, p.m.clone());
        q = DiagonalElem::projection(k, m.clone());
        steps.push((w.clone(), p));
    }
    let t0 = AlgebraElem::word(Word::new(0, FactoredNat::one(), m.clone(), k));
    let r0 = engine.mul(&engine.star(x), &AlgebraElem::word(Word::new(k, m.clone(), FactoredNat::one(), 0)));
    let witness = PiWitness {
        diagonal,
        support,
        component,
        steps,
        k,
        m,
        t: RootScaled {
            radicand: c.clone(),
            elem: t0,
        },
        r: RootScaled { radicand: c, elem: r0 },
    };
    if !witness.verify(engine, x)? {
        return Err(Error::Internal(format!("TxR ≠ 1 for x = {x}")));
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Bicharacter;
    use crate::qn::syntax::parse;

    fn check(e: &Engine, text: &str) -> PiWitness {
        let x = parse(e, text).unwrap();
        let w = pure_infiniteness_witness(e, &x).unwrap();
        assert!(w.verify(e, &x).unwrap(), "{text}");
        w
    }

    #[test]
    fn isometry() {
        let e = Engine::untwisted();
        let w = check(&e, "s(2)");
        assert_eq!(w.t.elem.to_string(), "s*(2)");
        assert!(e.equal(&w.r.elem, &AlgebraElem::one()));
    }

    #[test]
    fn unit_plus_off_diagonal() {
        let e = Engine::new(Bicharacter::from_ints(2, 3, [1, 0, 0, 1]).unwrap());
        let w = check(&e, "1 + u*s(2)*s*(3)");
        assert!(!w.steps.is_empty());
    }

    #[test]
    fn diagonal_projection() {
        let e = Engine::untwisted();
        let w = check(&e, "u*s(2)*s*(2)*u^-1");
        assert!(w.steps.is_empty());
        assert_eq!((w.k, w.m.clone()), (1, FactoredNat::new(2).unwrap()));
    }

    #[test]
    fn rejects_irrational_entries() {
        let e = Engine::untwisted();
        let x = parse(&e, "s(2)*s*(2) + ph(1)*s(2)*s*(2)").unwrap();
        let err = pure_infiniteness_witness(&e, &x).unwrap_err();
        assert!(matches!(err, Error::Rejected(_)), "{err}");
    }
}
