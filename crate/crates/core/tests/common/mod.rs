//! Independent models of the engine's algebra used as test oracles.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::Zero;
use psc_core::arith::FactoredNat;
use psc_core::cohomology::Bicharacter;
use psc_core::coeff::ExactScalar;
use psc_core::qn::{AlgebraElem, Monomial, Word};
use rand::Rng;

/// `u^k s_m s_n* u^{-l}` on `ℓ²(ℤ)` as the partial map `x ↦ k + m(x − l)/n`
/// on `l + nℤ`.
pub fn affine(w: &Word, x: i128) -> Option<i128> {
    let (m, n) = (w.m().as_i64() as i128, w.n().as_i64() as i128);
    let y = x - w.l() as i128;
    (y % n == 0).then(|| w.k() as i128 + m * (y / n))
}

/// `x·y` as a composition of partial maps, compared with the engine's word on
/// every point of `[−window, window]`.
pub fn affine_product_agrees(engine_result: Option<&Word>, x: &Word, y: &Word, window: i128) -> bool {
    (-window..=window).all(|t| {
        let composed = affine(y, t).and_then(|s| affine(x, s));
        composed == engine_result.and_then(|w| affine(w, t))
    })
}

/// A point `e_x ⊗ e_g` of `ℓ²(ℤ) ⊗ ℓ²(ℤ²)`.
pub type Point = (i128, [i64; 2]);

/// Representation of the twisted algebra on `ℓ²(ℤ) ⊗ ℓ²(ℤ²)`: `u` shifts the
/// first factor, `s_m e_x ⊗ e_g = e^{iβ(v(m), g)} e_{mx} ⊗ e_{g + v(m)}` with
/// `v = (v_p, v_q)` and `β(v, g) = (a v₁ + b v₂)(c g₁ + d g₂)`.
pub struct WeylModel {
    p: u64,
    q: u64,
    abcd: [BigRational; 4],
}

impl WeylModel {
    pub fn new(xi: &Bicharacter) -> Self {
        let (p, q) = xi.primes();
        let [a, b, c, d] = xi.params();
        Self {
            p,
            q,
            abcd: [a.clone(), b.clone(), c.clone(), d.clone()],
        }
    }

    fn v(&self, m: &FactoredNat) -> [i64; 2] {
        [m.valuation(self.p) as i64, m.valuation(self.q) as i64]
    }

    fn beta(&self, v: [i64; 2], g: [i64; 2]) -> BigRational {
        let [a, b, c, d] = &self.abcd;
        let r = |n: i64| BigRational::from_integer(n.into());
        (a * r(v[0]) + b * r(v[1])) * (c * r(g[0]) + d * r(g[1]))
    }

    pub fn apply(&self, mono: &Monomial, (x, g): Point) -> Option<(ExactScalar, Point)> {
        let w = &mono.word;
        let (vm, vn) = (self.v(w.m()), self.v(w.n()));
        let n = w.n().as_i64() as i128;
        let y = x - w.l() as i128;
        if y % n != 0 {
            return None;
        }
        let g1 = [g[0] - vn[0], g[1] - vn[1]];
        let theta = self.beta(vm, g1) - self.beta(vn, g1);
        let x2 = w.k() as i128 + w.m().as_i64() as i128 * (y / n);
        let g2 = [g1[0] + vm[0], g1[1] + vm[1]];
        let c = if theta.is_zero() {
            mono.coeff.clone()
        } else {
            &mono.coeff * &ExactScalar::phase(theta)
        };
        Some((c, (x2, g2)))
    }

    /// The action of a sum of monomials on a basis vector, as a sorted list of
    /// nonzero amplitudes.
    pub fn apply_elem(&self, x: &AlgebraElem, pt: Point) -> Vec<(Point, ExactScalar)> {
        let mut out = std::collections::BTreeMap::<Point, ExactScalar>::new();
        for m in x.monomials() {
            if let Some((c, p)) = self.apply(&m, pt) {
                let e = out.entry(p).or_insert_with(ExactScalar::zero);
                *e += &c;
            }
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// `x·y` applied to `pt`, computed as `x(y(pt))`.
    pub fn apply_product(&self, x: &Monomial, y: &Monomial, pt: Point) -> Option<(ExactScalar, Point)> {
        let (c1, p1) = self.apply(y, pt)?;
        let (c2, p2) = self.apply(x, p1)?;
        Some((&c2 * &c1, p2))
    }
}

pub fn random_word<R: Rng>(rng: &mut R, shift: i64, level: u64) -> Word {
    Word::from_ints(
        rng.gen_range(-shift..=shift),
        rng.gen_range(1..=level),
        rng.gen_range(1..=level),
        rng.gen_range(-shift..=shift),
    )
}

pub fn random_monomial<R: Rng>(rng: &mut R, shift: i64, level: u64) -> Monomial {
    let c = ExactScalar::from_rational(BigRational::new(rng.gen_range(-5..=5i64).into(), rng.gen_range(1..=4i64).into()));
    let c = if c.is_zero() { ExactScalar::one() } else { c };
    Monomial::new(c, random_word(rng, shift, level))
}

/// Words in the primes 2, 3 and 5 only, which keeps refinements small.
pub fn random_smooth_word<R: Rng>(rng: &mut R, shift: i64) -> Word {
    const LEVELS: [u64; 8] = [1, 2, 3, 4, 5, 6, 9, 10];
    Word::from_ints(
        rng.gen_range(-shift..=shift),
        LEVELS[rng.gen_range(0..LEVELS.len())],
        LEVELS[rng.gen_range(0..LEVELS.len())],
        rng.gen_range(-shift..=shift),
    )
}

pub fn random_elem<R: Rng>(rng: &mut R, terms: usize, shift: i64) -> AlgebraElem {
    let mut x = AlgebraElem::zero();
    for _ in 0..terms {
        let c = ExactScalar::from_rational(BigRational::new(rng.gen_range(1..=4i64).into(), rng.gen_range(1..=3i64).into()));
        x.add_term(random_smooth_word(rng, shift), c);
    }
    x
}
