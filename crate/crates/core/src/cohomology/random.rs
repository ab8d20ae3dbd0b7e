//! Seeded random elements for the property suites.

use rand::Rng;

use super::resolution::ResolutionElem;
use super::ring::{Path, PathAlgebra, RingElem, SemigroupAlgebra, SkewBasis, SkewProduct};
use crate::coeff::{rat, CoeffElem, Dynamics, ExactScalar, GroupElem, PElem, Semigroup};

/// A small nonzero rational.
pub fn scalar<R: Rng>(rng: &mut R) -> ExactScalar {
    let mut n = rng.gen_range(-5..=5);
    if n == 0 {
        n = 1;
    }
    ExactScalar::from_rational(rat(n, rng.gen_range(1..=4)))
}

pub fn group_elem<R: Rng>(rng: &mut R, d: &Dynamics, spread: i64) -> GroupElem {
    let g = d.group();
    let exps = (0..g.rank()).map(|_| rng.gen_range(-spread..=spread)).collect();
    g.reduce(GroupElem(exps))
}

pub fn coeff<R: Rng>(rng: &mut R, d: &Dynamics, max_terms: usize, spread: i64) -> CoeffElem {
    let mut out = CoeffElem::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        out.add_term(group_elem(rng, d, spread), scalar(rng));
    }
    out
}

/// A semigroup element; for `ℕ^×` and `ℕ` it is at most `max`.
pub fn pelem<R: Rng>(rng: &mut R, d: &Dynamics, max: u64) -> PElem {
    match d.semigroup() {
        Semigroup::Multiplicative { primes: None } => PElem::nat(rng.gen_range(1..=max.max(1))),
        Semigroup::Multiplicative { primes: Some(ps) } => {
            let mut n = 1u64;
            for _ in 0..rng.gen_range(0..=2) {
                let p = ps[rng.gen_range(0..ps.len())];
                if n * p <= max.max(1) {
                    n *= p;
                }
            }
            PElem::nat(n)
        }
        Semigroup::Additive => PElem::Add(rng.gen_range(0..=max)),
        Semigroup::Finite { table, .. } => PElem::Fin(rng.gen_range(0..table.len())),
    }
}

pub fn skew_elem<R: Rng>(rng: &mut R, ring: &SkewProduct, max_terms: usize) -> RingElem<SkewBasis> {
    let d = ring.dynamics();
    let mut out = RingElem::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let b = ring.basis(group_elem(rng, d, 4), pelem(rng, d, 12));
        out.add_term(b, scalar(rng));
    }
    out
}

/// A random path of length at most `max_len`, built by walking the graph.
pub fn path<R: Rng>(rng: &mut R, g: &PathAlgebra, max_len: usize) -> Path {
    let mut p = g.vertex(rng.gen_range(0..g.vertex_count()));
    for _ in 0..rng.gen_range(0..=max_len) {
        let r = g.range(&p);
        let out: Vec<usize> = (0..g.edges().len()).filter(|&e| g.edges()[e].0 == r).collect();
        if out.is_empty() {
            break;
        }
        p.edges.push(out[rng.gen_range(0..out.len())]);
    }
    p
}

pub fn path_elem<R: Rng>(rng: &mut R, g: &PathAlgebra, max_terms: usize) -> RingElem<Path> {
    let mut out = RingElem::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        out.add_term(path(rng, g, 3), scalar(rng));
    }
    out
}

/// A random element of `F_level` with coefficients and grades drawn by the closures.
pub fn resolution_elem<A, R, C, G>(
    rng: &mut R,
    level: usize,
    terms: usize,
    mut coeff: C,
    mut grade: G,
) -> ResolutionElem<A>
where
    A: SemigroupAlgebra,
    R: Rng,
    C: FnMut(&mut R) -> RingElem<A::Basis>,
    G: FnMut(&mut R) -> A::Grade,
{
    let mut out = ResolutionElem::zero(level);
    for _ in 0..rng.gen_range(1..=terms) {
        let tuple = (0..level).map(|_| grade(rng)).collect();
        let c = coeff(rng);
        out.add_term(tuple, c);
    }
    out
}
