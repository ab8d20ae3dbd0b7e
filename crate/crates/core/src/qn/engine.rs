//! Multiplication, adjoint, refinement and equality in `Q_N^ξ` for a
//! bicharacter twist `β(m, n) = (a v_p(m) + b v_q(m))(c v_p(n) + d v_q(n))`.
//!
//! The product of two words is derived from the relations
//! `s_m s_n = e^{iβ(m,n)} s_{mn}`, `s_m u^l = u^{ml} s_m` and
//! `Σ_k u^k s_m s_m* u^{-k} = 1` (whence `s_b* s_a = e^{i(β(a,b)−β(b,a))} s_a s_b*`
//! for coprime `a, b`). Twisted phases are never tabulated.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::word::{AlgebraElem, Monomial, Word};
use crate::arith::{solve_congruence, FactoredNat};
use crate::cohomology::Bicharacter;
use crate::coeff::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Engine {
    xi: Bicharacter,
}

impl Engine {
    pub fn new(xi: Bicharacter) -> Self {
        Self { xi }
    }

    pub fn untwisted() -> Self {
        Self::new(Bicharacter::trivial())
    }

    pub fn twist(&self) -> &Bicharacter {
        &self.xi
    }

    fn beta(&self, m: &FactoredNat, n: &FactoredNat) -> BigRational {
        self.xi.eval(m, n)
    }

    /// `x·y` for words: `None` for zero, else the phase exponent and the word.
    pub fn mul_words(&self, x: &Word, y: &Word) -> Option<(BigRational, Word)> {
        let (n1, m2) = (x.n(), y.m());
        let t = y.k() - x.l();
        let g = n1.gcd(m2);
        let n1r = n1.checked_div(&g).expect("gcd divides");
        let m2r = m2.checked_div(&g).expect("gcd divides");
        // s_{n1}* u^t s_{m2} = u^j s_{n1}* s_{m2} u^{-s} with t + m2·s = n1·j
        let (s, _) = solve_congruence(m2.as_i64(), -t, n1.as_i64())?;
        let j = (t + m2.as_i64() * s) / n1.as_i64();
        let k = x.k() + x.m().as_i64() * j;
        let l = y.l() + y.n().as_i64() * s;
        let m = x.m().mul(&m2r);
        let n = y.n().mul(&n1r);
        let phase = self.beta(&g, &n1r) - self.beta(&g, &m2r) + self.beta(&m2r, &n1r)
            - self.beta(&n1r, &m2r)
            + self.beta(x.m(), &m2r)
            - self.beta(y.n(), &n1r);
        Some((phase, Word::new(k, m, n, l)))
    }

    pub fn mul_monomials(&self, x: &Monomial, y: &Monomial) -> Option<Monomial> {
        let (phase, w) = self.mul_words(&x.word, &y.word)?;
        Some(Monomial::new(rotate(&(&x.coeff * &y.coeff), &phase), w))
    }

    pub fn mul(&self, x: &AlgebraElem, y: &AlgebraElem) -> AlgebraElem {
        let mut out = AlgebraElem::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                if let Some((phase, w)) = self.mul_words(a, b) {
                    out.add_term(w, rotate(&(c * d), &phase));
                }
            }
        }
        out
    }

    /// Left-to-right product of several elements.
    pub fn product(&self, factors: &[&AlgebraElem]) -> AlgebraElem {
        factors
            .iter()
            .fold(AlgebraElem::one(), |acc, f| self.mul(&acc, f))
    }

    /// `(c u^k s_m s_n* u^{-l})* = c̄ u^l s_n s_m* u^{-k}`.
    pub fn star(&self, x: &AlgebraElem) -> AlgebraElem {
        x.monomials()
            .map(|m| Monomial::new(m.coeff.star(), m.word.adjoint()))
            .collect()
    }

    /// `u^k s_m s_n* u^{-l} = e^{i(β(m,r)−β(n,r))} Σ_j u^{k+jm} s_{mr} s_{nr}* u^{-(l+jn)}`.
    pub fn refine_word(&self, w: &Word, r: &FactoredNat) -> (BigRational, Vec<Word>) {
        let phase = self.beta(w.m(), r) - self.beta(w.n(), r);
        let (mi, ni) = (w.m().as_i64(), w.n().as_i64());
        let (mr, nr) = (w.m().mul(r), w.n().mul(r));
        let words = (0..r.as_i64())
            .map(|j| Word::new(w.k() + j * mi, mr.clone(), nr.clone(), w.l() + j * ni))
            .collect();
        (phase, words)
    }

    pub fn refine(&self, x: &Monomial, r: &FactoredNat) -> AlgebraElem {
        let (phase, words) = self.refine_word(&x.word, r);
        let c = rotate(&x.coeff, &phase);
        words.into_iter().map(|w| Monomial::new(c.clone(), w)).collect()
    }

    /// Canonical form: in each degree class `m/n`, every term is refined to
    /// the least common level and like keys are merged.
    pub fn normalize(&self, x: &AlgebraElem) -> AlgebraElem {
        let mut classes: BTreeMap<(FactoredNat, FactoredNat), Vec<Monomial>> = BTreeMap::new();
        for m in x.monomials() {
            classes.entry(m.word.degree()).or_default().push(m);
        }
        let mut out = AlgebraElem::zero();
        for ((a, _), terms) in classes {
            let level = terms.iter().fold(FactoredNat::one(), |acc, t| {
                acc.lcm(&t.word.m().checked_div(&a).expect("degree divides"))
            });
            for t in terms {
                let own = t.word.m().checked_div(&a).expect("degree divides");
                let r = level.checked_div(&own).expect("level is a multiple");
                out = out.add(&self.refine(&t, &r));
            }
        }
        out
    }

    pub fn is_zero(&self, x: &AlgebraElem) -> bool {
        self.normalize(x).is_zero()
    }

    pub fn equal(&self, x: &AlgebraElem, y: &AlgebraElem) -> bool {
        self.is_zero(&x.sub(y))
    }
}

fn rotate(c: &ExactScalar, phase: &BigRational) -> ExactScalar {
    if phase.is_zero() {
        c.clone()
    } else {
        c.rotate(phase)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn w(k: i64, m: u64, n: u64, l: i64) -> AlgebraElem {
        AlgebraElem::word(Word::from_ints(k, m, n, l))
    }

    fn std_twist() -> Engine {
        Engine::new(Bicharacter::from_ints(2, 3, [1, 0, 0, 1]).unwrap())
    }

    #[test]
    fn isometry_relations() {
        let e = std_twist();
        let prod = e.mul(&w(0, 2, 1, 0), &w(0, 3, 1, 0));
        let expected = AlgebraElem::monomial(ExactScalar::phase(rat(1, 1)), Word::s(6));
        assert_eq!(prod, expected);
        assert!(e.mul(&w(0, 1, 2, 0), &e.mul(&w(1, 1, 1, 0), &w(0, 2, 1, 0))).is_zero());
        let r = e.product(&[&w(0, 1, 2, 0), &w(2, 1, 1, 0), &w(0, 2, 1, 0)]);
        assert_eq!(r, w(1, 1, 1, 0));
        let lcm = e.mul(&w(0, 2, 2, 0), &w(0, 3, 3, 0));
        assert_eq!(lcm, w(0, 6, 6, 0));
        assert_eq!(e.mul(&w(0, 1, 5, 0), &w(0, 5, 1, 0)), AlgebraElem::one());
    }

    #[test]
    fn refinement_and_equality() {
        let e = std_twist();
        let p = Monomial::word(Word::from_ints(0, 2, 2, 0));
        let r = e.refine(&p, &FactoredNat::new(2).unwrap());
        assert_eq!(r, w(0, 4, 4, 0).add(&w(2, 4, 4, 2)));
        assert_eq!(e.refine(&p, &FactoredNat::one()), AlgebraElem::word(p.word.clone()));
        let range_partition = (0..3).fold(AlgebraElem::zero(), |acc, k| acc.add(&w(k, 3, 3, k)));
        assert!(e.equal(&range_partition, &AlgebraElem::one()));
        let x = w(1, 2, 3, 0);
        assert!(!e.equal(&x, &x.add(&w(0, 2, 2, 0))));
    }

    #[test]
    fn twisted_swap_of_coprime_isometries() {
        let e = Engine::new(Bicharacter::from_ints(2, 3, [1, 2, 3, 5]).unwrap());
        let lhs = e.mul(&w(0, 1, 2, 0), &w(0, 3, 1, 0));
        let b = e.twist();
        let two = FactoredNat::new(2).unwrap();
        let three = FactoredNat::new(3).unwrap();
        let phase = b.eval(&three, &two) - b.eval(&two, &three);
        assert_eq!(lhs, AlgebraElem::monomial(ExactScalar::phase(phase), Word::from_ints(0, 3, 2, 0)));
    }
}
