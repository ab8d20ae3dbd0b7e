//! Rings graded over a semigroup: `ℛ = ⊕_p X_p` with the map `Ψ: ℛ → A`.
//!
//! Every family used here is a semigroup algebra with zero: the product of
//! two basis elements is a basis element or `0`. [`SemigroupAlgebra`]
//! captures that, together with the distinguished elements `𝟙_p`.

use std::collections::BTreeMap;
use std::fmt::{self, Debug};

use crate::coeff::{CoeffElem, Dynamics, ExactScalar, GroupElem, PElem};

/// Finite linear combination of basis elements with exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, ExactScalar>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, ExactScalar::one())
    }

    pub fn term(b: B, c: ExactScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
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

    pub fn terms(&self) -> impl Iterator<Item = (&B, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, b: B, c: ExactScalar) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
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

    pub fn add_assign(&mut self, other: &Self) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            out.add_term(b.clone(), c * s);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&ExactScalar::from_int(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl<B: Ord + Debug> Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]·{b:?}")?;
        }
        Ok(())
    }
}

impl<B: Ord + Debug> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

pub type RingElem<B> = LinComb<B>;

/// A ring `ℛ` graded over a semigroup `P`, spanned by basis elements whose
/// pairwise products are basis elements or zero, equipped with `𝟙_p` and `Ψ`.
pub trait SemigroupAlgebra {
    type Basis: Clone + Ord + Debug;
    type Grade: Clone + Ord + Debug;

    fn basis_mul(&self, x: &Self::Basis, y: &Self::Basis) -> Option<Self::Basis>;

    fn one(&self) -> RingElem<Self::Basis>;

    /// The distinguished element `𝟙_p`.
    fn unit(&self, p: &Self::Grade) -> RingElem<Self::Basis>;

    fn grade_op(&self, p: &Self::Grade, q: &Self::Grade) -> Self::Grade;

    /// `Ψ` on a basis element; the result lies in the coefficient algebra.
    fn psi_basis(&self, x: &Self::Basis) -> Self::Basis;

    /// Writes `x = a·𝟙_p` with `a` in the coefficient algebra, when every
    /// fiber is free of rank one.
    fn split(&self, x: &Self::Basis) -> Option<(Self::Basis, Self::Grade)>;

    fn mul(&self, x: &RingElem<Self::Basis>, y: &RingElem<Self::Basis>) -> RingElem<Self::Basis> {
        let mut out = RingElem::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                if let Some(ab) = self.basis_mul(a, b) {
                    out.add_term(ab, c * d);
                }
            }
        }
        out
    }

    fn psi(&self, x: &RingElem<Self::Basis>) -> RingElem<Self::Basis> {
        let mut out = RingElem::zero();
        for (b, c) in x.terms() {
            out.add_term(self.psi_basis(b), c.clone());
        }
        out
    }

    /// Module action `x ⇀ a = Ψ(xa)`.
    fn act(&self, x: &RingElem<Self::Basis>, a: &RingElem<Self::Basis>) -> RingElem<Self::Basis> {
        self.psi(&self.mul(x, a))
    }
}

/// Basis element `g𝟙_p` of the skew product `ℤG ⋊_θ P`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewBasis {
    pub g: GroupElem,
    pub p: PElem,
}

impl Debug for SkewBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}𝟙_{}", self.g, self.p)
    }
}

/// `ℛ = ℤG ⋊_θ P` with `(g𝟙_p)(h𝟙_q) = gθ_p(h)𝟙_{pq}` and `Ψ(g𝟙_p) = g`.
#[derive(Clone, Debug)]
pub struct SkewProduct {
    dynamics: Dynamics,
}

impl SkewProduct {
    pub fn new(dynamics: Dynamics) -> Self {
        Self { dynamics }
    }

    pub fn dynamics(&self) -> &Dynamics {
        &self.dynamics
    }

    pub fn basis(&self, g: GroupElem, p: PElem) -> SkewBasis {
        SkewBasis { g, p }
    }

    /// `a ∈ A` as the grade-`e` element `a𝟙_e`.
    pub fn embed(&self, a: &CoeffElem) -> RingElem<SkewBasis> {
        let e = self.dynamics.identity();
        let mut out = RingElem::zero();
        for (g, c) in a.terms() {
            out.add_term(self.basis(g.clone(), e.clone()), c.clone());
        }
        out
    }

    /// `a𝟙_p`.
    pub fn fiber(&self, a: &CoeffElem, p: &PElem) -> RingElem<SkewBasis> {
        let mut out = RingElem::zero();
        for (g, c) in a.terms() {
            out.add_term(self.basis(g.clone(), p.clone()), c.clone());
        }
        out
    }

    /// Reads a grade-`e` element back as a `CoeffElem`. Panics on other grades.
    pub fn project(&self, x: &RingElem<SkewBasis>) -> CoeffElem {
        let mut out = CoeffElem::zero();
        for (b, c) in x.terms() {
            assert!(self.dynamics.is_identity(&b.p), "{b:?} is not in A");
            out.add_term(b.g.clone(), c.clone());
        }
        out
    }

    /// `Ψ` as a map `ℛ → A`.
    pub fn psi_coeff(&self, x: &RingElem<SkewBasis>) -> CoeffElem {
        self.project(&self.psi(x))
    }
}

impl SemigroupAlgebra for SkewProduct {
    type Basis = SkewBasis;
    type Grade = PElem;

    fn basis_mul(&self, x: &SkewBasis, y: &SkewBasis) -> Option<SkewBasis> {
        let d = &self.dynamics;
        let g = d.group().op(&x.g, &d.theta(&x.p, &y.g));
        Some(SkewBasis {
            g,
            p: d.op(&x.p, &y.p),
        })
    }

    fn one(&self) -> RingElem<SkewBasis> {
        RingElem::basis(self.basis(self.dynamics.group().identity(), self.dynamics.identity()))
    }

    fn unit(&self, p: &PElem) -> RingElem<SkewBasis> {
        RingElem::basis(self.basis(self.dynamics.group().identity(), p.clone()))
    }

    fn grade_op(&self, p: &PElem, q: &PElem) -> PElem {
        self.dynamics.op(p, q)
    }

    fn psi_basis(&self, x: &SkewBasis) -> SkewBasis {
        self.basis(x.g.clone(), self.dynamics.identity())
    }

    fn split(&self, x: &SkewBasis) -> Option<(SkewBasis, PElem)> {
        Some((self.psi_basis(x), x.p.clone()))
    }
}

/// A path in a finite directed graph; length-zero paths are vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub start: usize,
    pub edges: Vec<usize>,
}

impl Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            write!(f, "v{}", self.start)
        } else {
            write!(f, "e{:?}", self.edges)
        }
    }
}

/// Path algebra of a finite graph, graded over `(ℕ, +)` by length.
///
/// Paths compose as `μν ≠ 0` iff `r(μ) = s(ν)`, `Ψ(μ) = s(μ)`, and `𝟙_n`
/// is the sum of all paths of length `n`.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    vertices: usize,
    /// `(source, range)` of each edge.
    edges: Vec<(usize, usize)>,
}

impl PathAlgebra {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> crate::Result<Self> {
        if let Some(e) = edges.iter().find(|(s, r)| *s >= vertices || *r >= vertices) {
            return Err(crate::Error::Invalid(format!("edge {e:?} leaves the vertex set")));
        }
        Ok(Self { vertices, edges })
    }

    /// Three vertices, every vertex the source of exactly one edge
    /// (`0→1`, `1→2`, `2→2`), so that `Ψ(𝟙_n) = 1` for all `n`.
    pub fn three_vertex() -> Self {
        Self::new(3, vec![(0, 1), (1, 2), (2, 2)]).expect("valid graph")
    }

    /// Three vertices with parallel edges, an in-tree and a loop.
    pub fn three_vertex_dense() -> Self {
        Self::new(3, vec![(0, 1), (0, 1), (1, 2), (2, 0), (2, 2), (1, 1)]).expect("valid graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn source(&self, p: &Path) -> usize {
        p.start
    }

    pub fn range(&self, p: &Path) -> usize {
        p.edges.last().map_or(p.start, |&e| self.edges[e].1)
    }

    pub fn vertex(&self, v: usize) -> Path {
        Path {
            start: v,
            edges: vec![],
        }
    }

    /// All paths of length `n`.
    pub fn paths_of_length(&self, n: u64) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices).map(|v| self.vertex(v)).collect();
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|p| {
                    let r = self.range(&p);
                    self.edges
                        .iter()
                        .enumerate()
                        .filter(move |(_, (s, _))| *s == r)
                        .map(move |(e, _)| {
                            let mut q = p.clone();
                            q.edges.push(e);
                            q
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        out
    }

    /// Every vertex emits exactly one edge.
    pub fn is_out_regular(&self) -> bool {
        (0..self.vertices).all(|v| self.edges.iter().filter(|(s, _)| *s == v).count() == 1)
    }
}

impl SemigroupAlgebra for PathAlgebra {
    type Basis = Path;
    type Grade = u64;

    fn basis_mul(&self, x: &Path, y: &Path) -> Option<Path> {
        if self.range(x) != self.source(y) {
            return None;
        }
        let mut edges = x.edges.clone();
        edges.extend_from_slice(&y.edges);
        Some(Path {
            start: x.start,
            edges,
        })
    }

    fn one(&self) -> RingElem<Path> {
        let mut out = RingElem::zero();
        for v in 0..self.vertices {
            out.add_term(self.vertex(v), ExactScalar::one());
        }
        out
    }

    fn unit(&self, n: &u64) -> RingElem<Path> {
        let mut out = RingElem::zero();
        for p in self.paths_of_length(*n) {
            out.add_term(p, ExactScalar::one());
        }
        out
    }

    fn grade_op(&self, p: &u64, q: &u64) -> u64 {
        p + q
    }

    fn psi_basis(&self, x: &Path) -> Path {
        self.vertex(x.start)
    }

    fn split(&self, _x: &Path) -> Option<(Path, u64)> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_multiplication() {
        let r = SkewProduct::new(Dynamics::laurent());
        // (u𝟙_2)(u𝟙_3) = u·u²𝟙_6
        let x = r.fiber(&CoeffElem::u(1), &PElem::nat(2));
        let y = r.fiber(&CoeffElem::u(1), &PElem::nat(3));
        assert_eq!(r.mul(&x, &y), r.fiber(&CoeffElem::u(3), &PElem::nat(6)));
        assert_eq!(r.psi_coeff(&x), CoeffElem::u(1));
        let psi = r.psi_coeff(&r.fiber(&CoeffElem::u(2), &PElem::nat(3)));
        assert_eq!(psi, CoeffElem::u(2));
    }

    #[test]
    fn graph_paths() {
        let g = PathAlgebra::three_vertex_dense();
        let e0 = Path { start: 0, edges: vec![0] };
        let e2 = Path { start: 1, edges: vec![2] };
        assert_eq!(g.basis_mul(&e0, &e2), Some(Path { start: 0, edges: vec![0, 2] }));
        assert_eq!(g.basis_mul(&e2, &e0), None);
        assert_eq!(g.psi_basis(&e0), g.vertex(0));
        // μ ⇀ v = s(μ) iff v = r(μ)
        let act = g.act(&RingElem::basis(e0.clone()), &RingElem::basis(g.vertex(1)));
        assert_eq!(act, RingElem::basis(g.vertex(0)));
        assert!(g.act(&RingElem::basis(e0), &RingElem::basis(g.vertex(2))).is_zero());
        assert!(PathAlgebra::three_vertex().is_out_regular());
        assert!(!g.is_out_regular());
        assert!(PathAlgebra::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn graph_units_multiply() {
        let g = PathAlgebra::three_vertex_dense();
        for (a, b) in [(0u64, 2u64), (1, 1), (2, 1)] {
            assert_eq!(g.mul(&g.unit(&a), &g.unit(&b)), g.unit(&(a + b)));
        }
    }
}
