//! Cocycles over `ℕ^×` acting on `C(𝕋)`: the 1-cocycle recursion on primes,
//! the `p,q`-bicharacter 2-cocycles, the obstruction at `z = 1`, the
//! root-of-unity recursion for `ψ`, and the computation of `H⁰`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::cochain::Cochain;
use crate::arith::{is_prime, primes_up_to, FactoredNat};
use crate::coeff::{rational_str, CoeffElem, Dynamics, ExactScalar, GaussRat, PElem, Semigroup};
use crate::error::{Error, Result};
use crate::report::CheckReport;

/// `ξ(m p^k q^l, n p^r q^j) = (ak + bl)(cr + dj)` for `m, n` prime to `p, q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BicharRepr", into = "BicharRepr")]
pub struct Bicharacter {
    p: u64,
    q: u64,
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

#[derive(Clone, Serialize, Deserialize)]
struct BicharRepr {
    p: u64,
    q: u64,
    #[serde(with = "rational_str")]
    a: BigRational,
    #[serde(with = "rational_str")]
    b: BigRational,
    #[serde(with = "rational_str")]
    c: BigRational,
    #[serde(with = "rational_str")]
    d: BigRational,
}

impl TryFrom<BicharRepr> for Bicharacter {
    type Error = Error;
    fn try_from(r: BicharRepr) -> Result<Self> {
        Bicharacter::new(r.p, r.q, r.a, r.b, r.c, r.d)
    }
}

impl From<Bicharacter> for BicharRepr {
    fn from(x: Bicharacter) -> Self {
        BicharRepr {
            p: x.p,
            q: x.q,
            a: x.a,
            b: x.b,
            c: x.c,
            d: x.d,
        }
    }
}

impl Bicharacter {
    pub fn new(
        p: u64,
        q: u64,
        a: BigRational,
        b: BigRational,
        c: BigRational,
        d: BigRational,
    ) -> Result<Self> {
        if !is_prime(p) || !is_prime(q) || p == q {
            return Err(Error::Invalid(format!("need two distinct primes, got {p} and {q}")));
        }
        Ok(Self { p, q, a, b, c, d })
    }

    pub fn from_ints(p: u64, q: u64, [a, b, c, d]: [i64; 4]) -> Result<Self> {
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        Self::new(p, q, r(a), r(b), r(c), r(d))
    }

    /// The zero twist over the primes `2, 3`.
    pub fn trivial() -> Self {
        Self::from_ints(2, 3, [0, 0, 0, 0]).expect("valid primes")
    }

    pub fn primes(&self) -> (u64, u64) {
        (self.p, self.q)
    }

    pub fn params(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// `ξ ≡ 0` as a function.
    pub fn is_trivial(&self) -> bool {
        (self.a.is_zero() && self.b.is_zero()) || (self.c.is_zero() && self.d.is_zero())
    }

    /// `ad − bc`, the value of `ξ(p,q) − ξ(q,p)`.
    pub fn antisymmetry(&self) -> BigRational {
        &self.a * &self.d - &self.b * &self.c
    }

    /// `ak + bl` for `m = m′p^k q^l`.
    pub fn left_weight(&self, m: &FactoredNat) -> BigRational {
        &self.a * BigInt::from(m.valuation(self.p)) + &self.b * BigInt::from(m.valuation(self.q))
    }

    /// `cr + dj` for `n = n′p^r q^j`.
    pub fn right_weight(&self, n: &FactoredNat) -> BigRational {
        &self.c * BigInt::from(n.valuation(self.p)) + &self.d * BigInt::from(n.valuation(self.q))
    }

    pub fn eval(&self, m: &FactoredNat, n: &FactoredNat) -> BigRational {
        self.left_weight(m) * self.right_weight(n)
    }
}

impl fmt::Display for Bicharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(p,q)=({},{}), (a,b,c,d)=({},{},{},{})",
            self.p, self.q, self.a, self.b, self.c, self.d
        )
    }
}

fn nat_arg(p: &PElem) -> Result<&FactoredNat> {
    p.as_nat()
        .ok_or_else(|| Error::Invalid(format!("{p} is not an element of ℕ^×")))
}

/// The bicharacter as a scalar-valued level-2 cochain on `ℕ^×`.
pub fn build_bicharacter(xi: &Bicharacter) -> Cochain {
    let xi = xi.clone();
    Cochain::new(2, move |t| {
        let v = xi.eval(nat_arg(&t[0])?, nat_arg(&t[1])?);
        Ok(CoeffElem::constant(1, ExactScalar::from_rational(v)))
    })
}

/// Checks `ξ(mn,k) = ξ(m,k) + ξ(n,k)` and `ξ(m,nk) = ξ(m,n) + ξ(m,k)` on `[1..n]³`.
pub fn additivity_report(xi: &Cochain, n: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let elems: Vec<FactoredNat> = (1..=n).map(|x| FactoredNat::new(x).expect("positive")).collect();
    let e = |x: &FactoredNat| PElem::Nat(x.clone());
    for a in &elems {
        for b in &elems {
            for c in &elems {
                let left = xi
                    .eval(&[e(&a.mul(b)), e(c)])?
                    .sub(&xi.eval(&[e(a), e(c)])?)
                    .sub(&xi.eval(&[e(b), e(c)])?);
                let right = xi
                    .eval(&[e(a), e(&b.mul(c))])?
                    .sub(&xi.eval(&[e(a), e(b)])?)
                    .sub(&xi.eval(&[e(a), e(c)])?);
                let bad = match (left.is_zero(), right.is_zero()) {
                    (true, true) => None,
                    _ => Some(format!("left {left}, right {right}")),
                };
                report.record(&[a, b, c], bad);
            }
        }
    }
    Ok(report)
}

/// `(ξ(p,q) − ξ(q,p))(1)`: a nonzero value rules out `ξ = ∂ψ`.
pub fn obstruction_at_one(xi: &Cochain, p: u64, q: u64) -> Result<ExactScalar> {
    if xi.level() != 2 {
        return Err(Error::Invalid("the obstruction is defined for 2-cochains".into()));
    }
    let (p, q) = (PElem::Nat(FactoredNat::new(p)?), PElem::Nat(FactoredNat::new(q)?));
    let pq = xi.eval(&[p.clone(), q.clone()])?;
    let qp = xi.eval(&[q, p])?;
    Ok(pq.sub(&qp).augmentation())
}

fn require_multiplicative(d: &Dynamics) -> Result<()> {
    match d.semigroup() {
        Semigroup::Multiplicative { .. } => Ok(()),
        _ => Err(Error::Unsupported("1-cocycles are built over ℕ^× only".into())),
    }
}

fn prime_value(values: &BTreeMap<u64, CoeffElem>, p: u64) -> Result<&CoeffElem> {
    values
        .get(&p)
        .ok_or_else(|| Error::Invalid(format!("no value given for the prime {p}")))
}

/// The recursion `ξ(1) = 0`, `ξ(q) = α_{q/p}(ξ(p)) + ξ(q/p)` with `p` the
/// largest prime factor of `q`, tabulated on `[1..bound]`.
///
/// The result is a 1-cocycle exactly when the prime data are compatible,
/// see [`compatibility_report`].
pub fn build_one_cocycle(
    d: &Dynamics,
    prime_values: &BTreeMap<u64, CoeffElem>,
    bound: u64,
) -> Result<Cochain> {
    require_multiplicative(d)?;
    let mut table: BTreeMap<Vec<PElem>, CoeffElem> = BTreeMap::new();
    let mut values: BTreeMap<u64, CoeffElem> = BTreeMap::new();
    for q in 1..=bound {
        let fq = FactoredNat::new(q)?;
        let pq = PElem::Nat(fq.clone());
        if !d.contains(&pq) {
            continue;
        }
        let v = match fq.largest_prime() {
            None => CoeffElem::zero(),
            Some(p) => {
                let rest = fq.checked_div(&FactoredNat::prime_power(p, 1)).expect("p divides q");
                let head = d.act(&PElem::Nat(rest.clone()), prime_value(prime_values, p)?);
                head.add(&values[&rest.to_u64().expect("small")])
            }
        };
        values.insert(q, v.clone());
        table.insert(vec![pq], v);
    }
    Cochain::from_table(1, table)
}

/// Every value of `ξ(q)` obtained by peeling prime factors off `q` in any
/// order, `ξ(q) = α_{q/p}(ξ(p)) + ξ(q/p)`; distinct values are listed once.
pub fn one_cocycle_all_orders(
    d: &Dynamics,
    prime_values: &BTreeMap<u64, CoeffElem>,
    q: &FactoredNat,
) -> Result<Vec<CoeffElem>> {
    fn go(
        d: &Dynamics,
        pv: &BTreeMap<u64, CoeffElem>,
        q: &FactoredNat,
        memo: &mut BTreeMap<FactoredNat, Vec<CoeffElem>>,
    ) -> Result<Vec<CoeffElem>> {
        if let Some(v) = memo.get(q) {
            return Ok(v.clone());
        }
        let mut out: Vec<CoeffElem> = Vec::new();
        if q.is_one() {
            out.push(CoeffElem::zero());
        }
        let primes: Vec<u64> = q.primes().collect();
        for p in primes {
            let rest = q.checked_div(&FactoredNat::prime_power(p, 1)).expect("p divides q");
            let head = d.act(&PElem::Nat(rest.clone()), prime_value(pv, p)?);
            for v in go(d, pv, &rest, memo)? {
                let w = head.add(&v);
                if !out.contains(&w) {
                    out.push(w);
                }
            }
        }
        memo.insert(q.clone(), out.clone());
        Ok(out)
    }
    require_multiplicative(d)?;
    go(d, prime_values, q, &mut BTreeMap::new())
}

/// Checks `(α_p − 1)ξ(q) = (α_q − 1)ξ(p)` for all pairs of given primes,
/// the condition for the prime data to extend to a 1-cocycle on `ℕ^×`.
pub fn compatibility_report(d: &Dynamics, prime_values: &BTreeMap<u64, CoeffElem>) -> CheckReport {
    let mut report = CheckReport::new();
    let primes: Vec<u64> = prime_values.keys().copied().collect();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            let (pp, pq) = (PElem::nat(p), PElem::nat(q));
            let (xp, xq) = (&prime_values[&p], &prime_values[&q]);
            let lhs = d.act(&pp, xq).sub(xq);
            let rhs = d.act(&pq, xp).sub(xp);
            let diff = lhs.sub(&rhs);
            report.record(&[p, q], (!diff.is_zero()).then(|| diff.to_string()));
        }
    }
    report
}

/// Prime data for all primes up to `bound`, from a closure.
pub fn prime_values_up_to<F: FnMut(u64) -> CoeffElem>(bound: u64, mut f: F) -> BTreeMap<u64, CoeffElem> {
    primes_up_to(bound).into_iter().map(|p| (p, f(p))).collect()
}

/// Finite sum `Σ c_t ζ^t` of roots of unity `ζ^t = e^{2πit}`, `t ∈ [0, 1)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CyclotomicSum {
    terms: BTreeMap<BigRational, ExactScalar>,
}

impl CyclotomicSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, turn: BigRational, c: ExactScalar) {
        let turn = frac(&turn);
        let slot = self.terms.entry(turn.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&turn);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), -c);
        }
        out
    }

    /// Exact value when only fourth roots of unity occur.
    pub fn to_scalar(&self) -> Option<ExactScalar> {
        let four = BigRational::from_integer(BigInt::from(4));
        let mut out = ExactScalar::zero();
        for (t, c) in &self.terms {
            let q = t * &four;
            if !q.is_integer() {
                return None;
            }
            let unit = match q.to_integer().mod_floor(&BigInt::from(4)).to_string().as_str() {
                "0" => GaussRat::real(BigRational::one()),
                "1" => GaussRat::new(BigRational::zero(), BigRational::one()),
                "2" => GaussRat::real(-BigRational::one()),
                _ => GaussRat::new(BigRational::zero(), -BigRational::one()),
            };
            out += &(c * &ExactScalar::from_gauss(unit));
        }
        Some(out)
    }
}

impl fmt::Display for CyclotomicSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*zeta({t})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn frac(t: &BigRational) -> BigRational {
    t - BigRational::from_integer(t.floor().to_integer())
}

/// `a(z)` for a Laurent polynomial `a` at `z = e^{2πi·turn}`.
pub fn evaluate_at_root(a: &CoeffElem, turn: &BigRational) -> Result<CyclotomicSum> {
    let mut out = CyclotomicSum::zero();
    for (g, c) in a.terms() {
        let [k] = g.0.as_slice() else {
            return Err(Error::Unsupported("evaluation on 𝕋 needs a Laurent polynomial".into()));
        };
        out.add_term(turn * BigInt::from(*k), c.clone());
    }
    Ok(out)
}

/// One row of the root-of-unity table: `ψ(e^{2πi·turn})`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootValue {
    pub turn: BigRational,
    pub value: CyclotomicSum,
}

/// `ψ(1) = 0`, `ψ(z) = ψ(z^p) − ξ(p)(z)` on all `z` with `z^{p^depth} = 1`,
/// listed by increasing turn.
pub fn root_of_unity_table(xi_p: &CoeffElem, p: u64, depth: u32) -> Result<Vec<RootValue>> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let size = p
        .checked_pow(depth)
        .filter(|&s| s <= 1 << 16)
        .ok_or_else(|| Error::Invalid(format!("{p}^{depth} roots of unity is too many")))?;
    let mut psi: BTreeMap<BigRational, CyclotomicSum> = BTreeMap::new();
    psi.insert(BigRational::zero(), CyclotomicSum::zero());
    let mut level = 1u64;
    for _ in 0..depth {
        level *= p;
        for j in 0..level {
            let turn = BigRational::new(BigInt::from(j), BigInt::from(level));
            if psi.contains_key(&turn) {
                continue;
            }
            let image = frac(&(&turn * BigInt::from(p)));
            let value = psi[&image].sub(&evaluate_at_root(xi_p, &turn)?);
            psi.insert(turn, value);
        }
    }
    debug_assert_eq!(psi.len() as u64, size);
    Ok(psi.into_iter().map(|(turn, value)| RootValue { turn, value }).collect())
}

/// Outcome of the `H⁰` computation on Laurent polynomials of bounded degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H0Certificate {
    pub report: CheckReport,
    /// Exponent classes whose coefficients stay free; `[[0]]` means constants only.
    pub fixed_basis: Vec<Vec<i64>>,
}

impl H0Certificate {
    pub fn constants_only(&self) -> bool {
        self.report.passed() && self.fixed_basis == vec![vec![0]]
    }
}

/// Solves `α_p(a) = a` for all given primes over Laurent polynomials of degree
/// at most `degree`. For every `k ≠ 0` the report records why `a_k` is forced
/// to vanish (its orbit under the smallest prime leaves the degree window).
pub fn h0_fixed_point_check(primes: &[u64], degree: u64) -> Result<H0Certificate> {
    if primes.is_empty() || primes.iter().any(|&p| !is_prime(p)) {
        return Err(Error::Invalid(format!("need a nonempty set of primes, got {primes:?}")));
    }
    let pmax = *primes.iter().max().expect("nonempty") as i64;
    let d = degree as i64;
    let m = pmax * d;
    let size = (2 * m + 1) as usize;
    let zero = size;
    let idx = |j: i64| (j + m) as usize;
    let mut parent: Vec<usize> = (0..=size).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            // keep the zero node as a root
            if ra == zero {
                parent[rb] = ra;
            } else {
                parent[ra] = rb;
            }
        }
    };
    for j in -m..=m {
        if j.abs() > d {
            union(&mut parent, idx(j), zero);
        }
        for &p in primes {
            let p = p as i64;
            if j % p == 0 {
                union(&mut parent, idx(j), idx(j / p));
            } else {
                union(&mut parent, idx(j), zero);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    for j in -d..=d {
        let r = find(&mut parent, idx(j));
        if r != find(&mut parent, zero) {
            classes.entry(r).or_default().push(j);
        }
    }
    let fixed_basis: Vec<Vec<i64>> = classes.into_values().collect();
    let p0 = *primes.iter().min().expect("nonempty") as i64;
    let mut report = CheckReport::new();
    for k in -d..=d {
        if k == 0 {
            continue;
        }
        let free = fixed_basis.iter().any(|c| c.contains(&k));
        let failure = free.then(|| format!("coefficient of u^{k} is not forced to vanish"));
        report.record(&[orbit_witness(k, p0, d)], failure);
    }
    Ok(H0Certificate {
        report,
        fixed_basis,
    })
}

fn orbit_witness(k: i64, p: i64, d: i64) -> String {
    let mut orbit = vec![k];
    let mut x = k;
    while x.abs() <= d {
        x *= p;
        orbit.push(x);
    }
    let path: Vec<String> = orbit.iter().map(|x| x.to_string()).collect();
    format!("{} (leaves ±{d})", path.join("→"))
}

/// `α_p(a) = a` for every given prime.
pub fn is_fixed(d: &Dynamics, primes: &[u64], a: &CoeffElem) -> bool {
    primes.iter().all(|&p| d.act(&PElem::nat(p), a) == *a)
}
