//! Irreversible algebraic dynamics `(G, P, θ)`: a semigroup `P` acting on a
//! finitely generated abelian group `G` by injective endomorphisms, together
//! with the induced maps on the group ring `A = ℂG`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::group::{AbelianGroup, CoeffElem, GroupElem};
use crate::arith::{is_prime, FactoredNat};
use crate::error::{Error, Result};

/// An element of the acting semigroup.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PElem {
    /// Element of `ℕ^×`.
    Nat(FactoredNat),
    /// Element of the additive monoid `ℕ`.
    Add(u64),
    /// Index into a finite monoid's table.
    Fin(usize),
}

impl PElem {
    pub fn nat(n: u64) -> Self {
        PElem::Nat(FactoredNat::new(n).expect("positive integer"))
    }

    pub fn as_nat(&self) -> Option<&FactoredNat> {
        match self {
            PElem::Nat(n) => Some(n),
            _ => None,
        }
    }

    /// The integer label used in configs and reports.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PElem::Nat(n) => write!(f, "{n}"),
            PElem::Add(n) => write!(f, "{n}"),
            PElem::Fin(i) => write!(f, "{i}"),
        }
    }
}

impl fmt::Debug for PElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Semigroup {
    /// `ℕ^×`, optionally restricted to the submonoid generated by `primes`.
    Multiplicative { primes: Option<Vec<u64>> },
    /// `(ℕ, +)`, generated by `1`.
    Additive,
    /// Finite monoid given by its multiplication table.
    Finite { table: Vec<Vec<usize>>, identity: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Action {
    /// `θ_n(g) = n·g` for `n ∈ ℕ^×`.
    Scalar,
    /// Images of the group generators under `θ` of each semigroup generator
    /// (a prime for `ℕ^×`, `1` for `ℕ`, every element for a finite monoid).
    OnGenerators { images: BTreeMap<u64, Vec<Vec<i64>>> },
}

/// The data `(G, P, θ)`, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DynamicsRepr", into = "DynamicsRepr")]
pub struct Dynamics {
    group: AbelianGroup,
    semigroup: Semigroup,
    action: Action,
}

#[derive(Clone, Serialize, Deserialize)]
struct DynamicsRepr {
    group: AbelianGroup,
    semigroup: Semigroup,
    action: Action,
}

impl TryFrom<DynamicsRepr> for Dynamics {
    type Error = Error;
    fn try_from(r: DynamicsRepr) -> Result<Self> {
        Dynamics::new(r.group, r.semigroup, r.action)
    }
}

impl From<Dynamics> for DynamicsRepr {
    fn from(d: Dynamics) -> Self {
        DynamicsRepr {
            group: d.group,
            semigroup: d.semigroup,
            action: d.action,
        }
    }
}

impl Dynamics {
    pub fn new(group: AbelianGroup, semigroup: Semigroup, action: Action) -> Result<Self> {
        let d = Self {
            group,
            semigroup,
            action,
        };
        d.validate()?;
        Ok(d)
    }

    /// `ℕ^×` acting on `ℤ` by `k ↦ pk`; the coefficient algebra is `C(𝕋)`.
    pub fn laurent() -> Self {
        Self {
            group: AbelianGroup::integers(),
            semigroup: Semigroup::Multiplicative { primes: None },
            action: Action::Scalar,
        }
    }

    /// `ℤ/n` acting trivially on the trivial group: the ring is `ℂ[ℤ/n]`.
    pub fn cyclic_group(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let images = (0..n as u64).map(|i| (i, vec![])).collect();
        Self::new(
            AbelianGroup::trivial(),
            Semigroup::Finite { table, identity: 0 },
            Action::OnGenerators { images },
        )
        .expect("cyclic group dynamics is valid")
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.semigroup
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn is_laurent(&self) -> bool {
        self.group.is_integers()
            && matches!(self.semigroup, Semigroup::Multiplicative { .. })
            && self.action == Action::Scalar
    }

    fn validate(&self) -> Result<()> {
        let rank = self.group.rank();
        match &self.semigroup {
            Semigroup::Multiplicative { primes: Some(ps) } => {
                if let Some(p) = ps.iter().find(|p| !is_prime(**p)) {
                    return Err(Error::Invalid(format!("{p} is not prime")));
                }
            }
            Semigroup::Multiplicative { primes: None } | Semigroup::Additive => {}
            Semigroup::Finite { table, identity } => validate_table(table, *identity)?,
        }
        match &self.action {
            Action::Scalar => {
                let Semigroup::Multiplicative { primes } = &self.semigroup else {
                    return Err(Error::Invalid(
                        "scalar action requires the multiplicative semigroup".into(),
                    ));
                };
                let torsion: Vec<u64> = self.group.orders().iter().copied().filter(|&o| o > 0).collect();
                if !torsion.is_empty() {
                    let Some(ps) = primes else {
                        return Err(Error::Invalid(
                            "scalar action on a group with torsion needs an explicit prime list".into(),
                        ));
                    };
                    for p in ps {
                        if let Some(o) = torsion.iter().find(|&&o| o % p == 0) {
                            return Err(Error::Invalid(format!(
                                "multiplication by {p} is not injective on ℤ/{o}"
                            )));
                        }
                    }
                }
            }
            Action::OnGenerators { images } => {
                let expected: Vec<u64> = match &self.semigroup {
                    Semigroup::Multiplicative { primes: Some(ps) } => {
                        let mut ps = ps.clone();
                        ps.sort_unstable();
                        ps.dedup();
                        ps
                    }
                    Semigroup::Multiplicative { primes: None } => {
                        return Err(Error::Invalid(
                            "generator images need an explicit prime list".into(),
                        ))
                    }
                    Semigroup::Additive => vec![1],
                    Semigroup::Finite { table, .. } => (0..table.len() as u64).collect(),
                };
                let keys: Vec<u64> = images.keys().copied().collect();
                if keys != expected {
                    return Err(Error::Invalid(format!(
                        "action given on {keys:?}, expected generators {expected:?}"
                    )));
                }
                if !self.group.is_free() && !self.group.is_finite() {
                    return Err(Error::Unsupported(
                        "generator actions on mixed free/torsion groups".into(),
                    ));
                }
                for (key, cols) in images {
                    if cols.len() != rank || cols.iter().any(|c| c.len() != rank) {
                        return Err(Error::Invalid(format!(
                            "θ_{key} must list {rank} images of length {rank}"
                        )));
                    }
                    for (j, col) in cols.iter().enumerate() {
                        let o = self.group.orders()[j];
                        if o > 0 {
                            let scaled = GroupElem(col.iter().map(|x| x * o as i64).collect());
                            if !self.group.reduce(scaled).is_identity() {
                                return Err(Error::Invalid(format!(
                                    "θ_{key} is not well defined on generator {j}"
                                )));
                            }
                        }
                    }
                    self.check_injective(*key, cols)?;
                }
                self.check_compatibility(images)?;
            }
        }
        Ok(())
    }

    fn check_injective(&self, key: u64, cols: &[Vec<i64>]) -> Result<()> {
        if self.group.is_free() {
            if determinant(cols).is_zero() {
                return Err(Error::Invalid(format!("θ_{key} is not injective (det = 0)")));
            }
            return Ok(());
        }
        let elems = self.group.elements().expect("finite group");
        let mut seen = std::collections::BTreeSet::new();
        for g in &elems {
            if !seen.insert(apply_matrix(&self.group, cols, g)) {
                return Err(Error::Invalid(format!("θ_{key} is not injective")));
            }
        }
        Ok(())
    }

    fn check_compatibility(&self, images: &BTreeMap<u64, Vec<Vec<i64>>>) -> Result<()> {
        let rank = self.group.rank();
        let gens: Vec<GroupElem> = (0..rank)
            .map(|j| {
                let mut v = vec![0; rank];
                v[j] = 1;
                GroupElem(v)
            })
            .collect();
        match &self.semigroup {
            Semigroup::Finite { table, identity } => {
                for g in &gens {
                    if apply_matrix(&self.group, &images[&(*identity as u64)], g) != *g {
                        return Err(Error::Invalid("θ of the identity is not the identity".into()));
                    }
                }
                for a in 0..table.len() {
                    for b in 0..table.len() {
                        let ab = table[a][b];
                        for g in &gens {
                            let lhs = apply_matrix(
                                &self.group,
                                &images[&(a as u64)],
                                &apply_matrix(&self.group, &images[&(b as u64)], g),
                            );
                            let rhs = apply_matrix(&self.group, &images[&(ab as u64)], g);
                            if lhs != rhs {
                                return Err(Error::Invalid(format!(
                                    "θ_{a}∘θ_{b} ≠ θ_{ab} on generator {g:?}"
                                )));
                            }
                        }
                    }
                }
            }
            _ => {
                // ℕ^× and ℕ are commutative: the generator maps must commute.
                for (p, mp) in images {
                    for (q, mq) in images.range(p + 1..) {
                        for g in &gens {
                            let pq = apply_matrix(&self.group, mp, &apply_matrix(&self.group, mq, g));
                            let qp = apply_matrix(&self.group, mq, &apply_matrix(&self.group, mp, g));
                            if pq != qp {
                                return Err(Error::Invalid(format!(
                                    "θ_{p} and θ_{q} do not commute"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn identity(&self) -> PElem {
        match &self.semigroup {
            Semigroup::Multiplicative { .. } => PElem::Nat(FactoredNat::one()),
            Semigroup::Additive => PElem::Add(0),
            Semigroup::Finite { identity, .. } => PElem::Fin(*identity),
        }
    }

    pub fn is_identity(&self, p: &PElem) -> bool {
        *p == self.identity()
    }

    /// Interprets an integer label as a semigroup element.
    pub fn elem(&self, label: u64) -> Result<PElem> {
        let p = match &self.semigroup {
            Semigroup::Multiplicative { .. } => PElem::Nat(FactoredNat::new(label)?),
            Semigroup::Additive => PElem::Add(label),
            Semigroup::Finite { table, .. } => {
                if label as usize >= table.len() {
                    return Err(Error::Invalid(format!("{label} is not in the finite monoid")));
                }
                PElem::Fin(label as usize)
            }
        };
        if !self.contains(&p) {
            return Err(Error::Invalid(format!("{label} is not in the semigroup")));
        }
        Ok(p)
    }

    pub fn contains(&self, p: &PElem) -> bool {
        match (&self.semigroup, p) {
            (Semigroup::Multiplicative { primes: None }, PElem::Nat(_)) => true,
            (Semigroup::Multiplicative { primes: Some(ps) }, PElem::Nat(n)) => {
                n.primes().all(|q| ps.contains(&q))
            }
            (Semigroup::Additive, PElem::Add(_)) => true,
            (Semigroup::Finite { table, .. }, PElem::Fin(i)) => *i < table.len(),
            _ => false,
        }
    }

    /// Semigroup product `pq`.
    pub fn op(&self, p: &PElem, q: &PElem) -> PElem {
        match (&self.semigroup, p, q) {
            (_, PElem::Nat(a), PElem::Nat(b)) => PElem::Nat(a.mul(b)),
            (_, PElem::Add(a), PElem::Add(b)) => PElem::Add(a + b),
            (Semigroup::Finite { table, .. }, PElem::Fin(a), PElem::Fin(b)) => PElem::Fin(table[*a][*b]),
            _ => panic!("semigroup elements {p} and {q} do not belong to this dynamics"),
        }
    }

    /// `θ_p(g)`.
    pub fn theta(&self, p: &PElem, g: &GroupElem) -> GroupElem {
        match (&self.action, p) {
            (Action::Scalar, PElem::Nat(n)) => {
                let n = n.as_i64();
                self.group.reduce(GroupElem(g.0.iter().map(|x| x * n).collect()))
            }
            (Action::OnGenerators { images }, PElem::Nat(n)) => {
                let mut out = g.clone();
                for (prime, e) in n.factors() {
                    for _ in 0..e {
                        out = apply_matrix(&self.group, &images[&prime], &out);
                    }
                }
                out
            }
            (Action::OnGenerators { images }, PElem::Add(n)) => {
                let mut out = g.clone();
                for _ in 0..*n {
                    out = apply_matrix(&self.group, &images[&1], &out);
                }
                out
            }
            (Action::OnGenerators { images }, PElem::Fin(i)) => {
                apply_matrix(&self.group, &images[&(*i as u64)], g)
            }
            _ => panic!("{p} cannot act under {:?}", self.action),
        }
    }

    /// `θ_p^{-1}(g)` when `g ∈ θ_p(G)`.
    pub fn preimage(&self, p: &PElem, g: &GroupElem) -> Option<GroupElem> {
        if let (Action::Scalar, PElem::Nat(n)) = (&self.action, p) {
            let n = n.as_i64();
            let mut out = Vec::with_capacity(g.0.len());
            for (x, &o) in g.0.iter().zip(self.group.orders()) {
                if o == 0 {
                    if x % n != 0 {
                        return None;
                    }
                    out.push(x / n);
                } else {
                    let (inv, _) = crate::arith::solve_congruence(n, 1, o as i64)?;
                    out.push((x * inv).rem_euclid(o as i64));
                }
            }
            return Some(GroupElem(out));
        }
        if let Some(elems) = self.group.elements() {
            return elems.into_iter().find(|h| self.theta(p, h) == *g);
        }
        // free group: solve M x = g over ℚ, accept integral solutions
        let rank = self.group.rank();
        let cols: Vec<Vec<i64>> = (0..rank)
            .map(|j| {
                let mut e = vec![0; rank];
                e[j] = 1;
                self.theta(p, &GroupElem(e)).0
            })
            .collect();
        let x = solve_rational(&cols, &g.0)?;
        let ints: Option<Vec<i64>> = x
            .iter()
            .map(|q| q.is_integer().then(|| q.to_integer().to_i64()).flatten())
            .collect();
        ints.map(GroupElem)
    }

    /// `α_p = θ_p` extended linearly to the group ring.
    pub fn act(&self, p: &PElem, a: &CoeffElem) -> CoeffElem {
        a.map_support(|g| self.theta(p, g))
    }

    /// `E_p`: restriction to `C*(θ_p(G))`.
    pub fn cond_expectation(&self, p: &PElem, a: &CoeffElem) -> CoeffElem {
        a.filter_map_support(|g| self.preimage(p, g).map(|_| g.clone()))
    }

    /// `θ_p^{-1} E_p(a)`.
    pub fn restrict_and_pull_back(&self, p: &PElem, a: &CoeffElem) -> CoeffElem {
        a.filter_map_support(|g| self.preimage(p, g))
    }

    /// `⟨a𝟙_p, b𝟙_p⟩_p = θ_p^{-1}E_p(a*b)`.
    pub fn inner_product(&self, p: &PElem, a: &CoeffElem, b: &CoeffElem) -> CoeffElem {
        let prod = self.group.mul(&self.group.star(a), b);
        self.restrict_and_pull_back(p, &prod)
    }

    /// Transfer operator `L_p(u^k) = u^{k/p}` if `p | k`, else `0`; only
    /// defined for `ℕ^×` acting on `ℤ` by multiplication.
    pub fn transfer(&self, p: &PElem, a: &CoeffElem) -> Result<CoeffElem> {
        if !self.is_laurent() {
            return Err(Error::Unsupported(
                "the transfer operator needs ℕ^× acting on ℤ by multiplication".into(),
            ));
        }
        let n = p
            .as_nat()
            .ok_or_else(|| Error::Invalid(format!("{p} is not in ℕ^×")))?
            .as_i64();
        Ok(a.filter_map_support(|g| {
            let k = g.0[0];
            (k % n == 0).then(|| GroupElem::power(k / n))
        }))
    }

    pub fn mul(&self, a: &CoeffElem, b: &CoeffElem) -> CoeffElem {
        self.group.mul(a, b)
    }

    pub fn star(&self, a: &CoeffElem) -> CoeffElem {
        self.group.star(a)
    }

    pub fn one(&self) -> CoeffElem {
        CoeffElem::constant(self.group.rank(), super::scalar::ExactScalar::one())
    }
}

fn validate_table(table: &[Vec<usize>], identity: usize) -> Result<()> {
    let n = table.len();
    if n == 0 || identity >= n {
        return Err(Error::Invalid("finite monoid needs a nonempty table and identity".into()));
    }
    if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::Invalid("finite monoid table is not square or out of range".into()));
    }
    for a in 0..n {
        if table[identity][a] != a || table[a][identity] != a {
            return Err(Error::Invalid(format!("{identity} is not a two-sided identity")));
        }
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::Invalid(format!("table not associative at ({a},{b},{c})")));
                }
            }
        }
    }
    Ok(())
}

fn apply_matrix(group: &AbelianGroup, cols: &[Vec<i64>], g: &GroupElem) -> GroupElem {
    let rank = group.rank();
    let mut out = vec![0i64; rank];
    for (x, col) in g.0.iter().zip(cols) {
        for (o, c) in out.iter_mut().zip(col) {
            *o += x * c;
        }
    }
    group.reduce(GroupElem(out))
}

/// Matrix given by columns; rows/cols are square.
fn to_rows(cols: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = cols.len();
    (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(BigInt::from(cols[j][i]))).collect())
        .collect()
}

#[allow(clippy::needless_range_loop)]
fn determinant(cols: &[Vec<i64>]) -> BigRational {
    let mut m = to_rows(cols);
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if piv != c {
            m.swap(piv, c);
            det = -det;
        }
        det *= &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let v = &f * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    det
}

#[allow(clippy::needless_range_loop)]
fn solve_rational(cols: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<BigRational>> {
    let n = cols.len();
    let mut m = to_rows(cols);
    for (row, &b) in m.iter_mut().zip(rhs) {
        row.push(BigRational::from_integer(BigInt::from(b)));
    }
    for c in 0..n {
        let piv = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(piv, c);
        let p = m[c][c].clone();
        for k in c..=n {
            m[c][k] = &m[c][k] / &p;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in c..=n {
                    let v = &f * &m[c][k];
                    m[r][k] -= v;
                }
            }
        }
    }
    let x: Vec<BigRational> = m.into_iter().map(|row| row[n].clone()).collect();
    debug_assert!(x.iter().all(|q| !q.denom().is_negative()));
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::scalar::ExactScalar;

    fn u(k: i64) -> CoeffElem {
        CoeffElem::u(k)
    }

    fn s(n: i64) -> ExactScalar {
        ExactScalar::from_int(n)
    }

    #[test]
    fn act_substitutes_powers() {
        let d = Dynamics::laurent();
        let a = u(1).add(&CoeffElem::laurent([(-2, s(3))]));
        let expected = u(2).add(&CoeffElem::laurent([(-4, s(3))]));
        assert_eq!(d.act(&PElem::nat(2), &a), expected);
        assert_eq!(d.act(&PElem::nat(1), &a), a);
        assert_eq!(d.act(&PElem::nat(6), &u(1)), d.act(&PElem::nat(2), &d.act(&PElem::nat(3), &u(1))));
        assert_eq!(d.act(&PElem::nat(6), &u(1)), u(6));
    }

    #[test]
    fn expectation_restricts() {
        let d = Dynamics::laurent();
        let a = u(0).add(&u(1)).add(&u(2));
        assert_eq!(d.cond_expectation(&PElem::nat(2), &a), u(0).add(&u(2)));
        assert!(d.cond_expectation(&PElem::nat(3), &u(1)).is_zero());
        let prod = d.mul(&u(-2), &u(6));
        assert_eq!(d.restrict_and_pull_back(&PElem::nat(2), &prod), u(2));
    }

    #[test]
    fn inner_products() {
        let d = Dynamics::laurent();
        assert_eq!(d.inner_product(&PElem::nat(2), &u(1), &u(1)), u(0));
        assert!(d.inner_product(&PElem::nat(2), &u(1), &u(2)).is_zero());
        assert_eq!(d.inner_product(&PElem::nat(3), &u(0), &u(6)), u(2));
    }

    #[test]
    fn transfer_operator() {
        let d = Dynamics::laurent();
        let a = u(4).add(&u(3));
        assert_eq!(d.transfer(&PElem::nat(2), &a).unwrap(), u(2));
        assert_eq!(d.transfer(&PElem::nat(7), &u(0)).unwrap(), u(0));
        assert!(Dynamics::cyclic_group(4).transfer(&PElem::Fin(1), &CoeffElem::zero()).is_err());
    }

    #[test]
    fn matrix_dynamics_validate() {
        // ℕ^× restricted to {2, 3} acting on ℤ² by diagonal matrices
        let images = BTreeMap::from([(2, vec![vec![2, 0], vec![0, 1]]), (3, vec![vec![1, 0], vec![0, 3]])]);
        let d = Dynamics::new(
            AbelianGroup::new(vec![0, 0]),
            Semigroup::Multiplicative { primes: Some(vec![2, 3]) },
            Action::OnGenerators { images },
        )
        .unwrap();
        let p6 = d.elem(6).unwrap();
        assert_eq!(d.theta(&p6, &GroupElem(vec![1, 1])), GroupElem(vec![2, 3]));
        assert_eq!(d.preimage(&p6, &GroupElem(vec![4, 9])), Some(GroupElem(vec![2, 3])));
        assert_eq!(d.preimage(&p6, &GroupElem(vec![3, 9])), None);
        assert!(d.elem(5).is_err());

        let singular = BTreeMap::from([(2, vec![vec![1, 1], vec![1, 1]])]);
        assert!(Dynamics::new(
            AbelianGroup::new(vec![0, 0]),
            Semigroup::Multiplicative { primes: Some(vec![2]) },
            Action::OnGenerators { images: singular },
        )
        .is_err());
        assert!(Dynamics::new(
            AbelianGroup::new(vec![4]),
            Semigroup::Multiplicative { primes: Some(vec![2]) },
            Action::Scalar,
        )
        .is_err());
        let ok = Dynamics::new(
            AbelianGroup::new(vec![5]),
            Semigroup::Multiplicative { primes: Some(vec![2]) },
            Action::Scalar,
        )
        .unwrap();
        let g = GroupElem(vec![3]);
        let two = ok.elem(2).unwrap();
        assert_eq!(ok.preimage(&two, &ok.theta(&two, &g)), Some(g));
    }

    #[test]
    fn cyclic_group_is_valid() {
        let d = Dynamics::cyclic_group(4);
        assert_eq!(d.op(&PElem::Fin(3), &PElem::Fin(2)), PElem::Fin(1));
        assert_eq!(d.identity(), PElem::Fin(0));
        let bad = vec![vec![1, 0], vec![0, 1]];
        assert!(validate_table(&bad, 0).is_err());
    }

    #[test]
    fn serde_dynamics() {
        let json = r#"{"group":{"orders":[0]},"semigroup":{"type":"multiplicative","primes":null},"action":{"type":"scalar"}}"#;
        let d: Dynamics = serde_json::from_str(json).unwrap();
        assert_eq!(d, Dynamics::laurent());
        let bad = r#"{"group":{"orders":[0]},"semigroup":{"type":"additive"},"action":{"type":"scalar"}}"#;
        assert!(serde_json::from_str::<Dynamics>(bad).is_err());
    }
}
