//! Integer and multiplicative-semigroup arithmetic.
//!
//! Elements of `ℕ^×` are carried as [`FactoredNat`], a prime → exponent map,
//! so that products are exponent additions and valuations are lookups.
//! [`ArithProgression`] models the diagonal projections `u^k s_m s_m* u^{-k}`
//! as the residue classes `k + mℤ`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of the multiplicative semigroup `ℕ^×`, stored factored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FactoredNat {
    factors: BTreeMap<u64, u32>,
}

impl FactoredNat {
    pub fn one() -> Self {
        Self::default()
    }

    /// `p^e`. The caller guarantees `p` is prime.
    pub fn prime_power(p: u64, e: u32) -> Self {
        debug_assert!(is_prime(p), "{p} is not prime");
        let mut factors = BTreeMap::new();
        if e > 0 {
            factors.insert(p, e);
        }
        Self { factors }
    }

    /// Builds from an explicit prime → exponent table, checking primality.
    pub fn from_factors<I: IntoIterator<Item = (u64, u32)>>(iter: I) -> Result<Self> {
        let mut factors = BTreeMap::new();
        for (p, e) in iter {
            if !is_prime(p) {
                return Err(Error::Invalid(format!("{p} is not prime")));
            }
            if e > 0 {
                *factors.entry(p).or_insert(0) += e;
            }
        }
        Ok(Self { factors })
    }

    /// Factors a small positive integer by trial division.
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("0 is not an element of ℕ^×".into()));
        }
        Ok(Self {
            factors: factorize(n),
        })
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    /// Exponent of `p` in `self`.
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.keys().next_back().copied()
    }

    pub fn value(&self) -> BigUint {
        let mut v = BigUint::one();
        for (&p, &e) in &self.factors {
            v *= BigUint::from(p).pow(e);
        }
        v
    }

    pub fn to_u64(&self) -> Option<u64> {
        let mut v: u64 = 1;
        for (&p, &e) in &self.factors {
            for _ in 0..e {
                v = v.checked_mul(p)?;
            }
        }
        Some(v)
    }

    /// Value as `i64`; the engine's integer exponents live in `i64`.
    ///
    /// Panics if the value does not fit.
    pub fn as_i64(&self) -> i64 {
        self.to_u64()
            .and_then(|v| i64::try_from(v).ok())
            .unwrap_or_else(|| panic!("{self} does not fit in i64"))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        Self { factors }
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .filter(|_| k > 0)
                .map(|(&p, &e)| (p, e * k))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .filter_map(|(&p, &e)| {
                    let f = other.valuation(p).min(e);
                    (f > 0).then_some((p, f))
                })
                .collect(),
        }
    }

    /// Least common multiple, written `m ∨ n`.
    pub fn lcm(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            let slot = factors.entry(p).or_insert(0);
            *slot = (*slot).max(e);
        }
        Self { factors }
    }

    /// `true` iff `self | other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|(&p, &e)| other.valuation(p) >= e)
    }

    /// `self / other` when `other | self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            let slot = factors.get_mut(&p).expect("divisibility checked");
            *slot -= e;
            if *slot == 0 {
                factors.remove(&p);
            }
        }
        Some(Self { factors })
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.factors.keys().all(|p| other.valuation(*p) == 0)
    }
}

impl Ord for FactoredNat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.to_u64(), other.to_u64()) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => self.value().cmp(&other.value()),
        }
    }
}

impl PartialOrd for FactoredNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FactoredNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_u64() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}", self.value()),
        }
    }
}

impl fmt::Debug for FactoredNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl TryFrom<u64> for FactoredNat {
    type Error = Error;
    fn try_from(n: u64) -> Result<Self> {
        Self::new(n)
    }
}

impl FromStr for FactoredNat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let n: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not a positive integer: {s:?}")))?;
        Self::new(n)
    }
}

impl Serialize for FactoredNat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&self.value().to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for FactoredNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = u64::deserialize(d)?;
        Self::new(v).map_err(serde::de::Error::custom)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        while n.is_multiple_of(d) {
            *out.entry(d).or_insert(0) += 1;
            n /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

/// Primes `≤ bound` in increasing order.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

pub fn valuation(n: &FactoredNat, p: u64) -> u32 {
    n.valuation(p)
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// Extended Euclid: returns `(g, x, y)` with `a x + b y = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Solves `a·x ≡ b (mod m)` for `m > 0`.
///
/// Returns the least non-negative solution and the period `m / gcd(a, m)`,
/// or `None` when `gcd(a, m) ∤ b`.
pub fn solve_congruence(a: i64, b: i64, m: i64) -> Option<(i64, i64)> {
    assert!(m > 0, "modulus must be positive");
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    let (b, m) = (b as i128, m as i128);
    if b.rem_euclid(g) != 0 {
        return None;
    }
    let period = m / g;
    let x0 = (x * (b / g)).rem_euclid(period);
    Some((x0 as i64, period as i64))
}

/// The residue class `residue + modulus·ℤ`, kept with `0 ≤ residue < modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArithProgression {
    residue: i64,
    modulus: i64,
}

impl ArithProgression {
    /// Panics if `modulus ≤ 0`.
    pub fn new(residue: i64, modulus: i64) -> Self {
        assert!(modulus > 0, "modulus must be positive, got {modulus}");
        Self {
            residue: residue.rem_euclid(modulus),
            modulus,
        }
    }

    pub fn residue(&self) -> i64 {
        self.residue
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn contains_int(&self, x: i64) -> bool {
        (x - self.residue).rem_euclid(self.modulus) == 0
    }

    /// `true` iff `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.modulus % self.modulus == 0
            && (other.residue - self.residue).rem_euclid(self.modulus) == 0
    }

    /// Intersection by the Chinese remainder theorem; `None` when empty.
    pub fn meet(&self, other: &Self) -> Option<Self> {
        let (m, n) = (self.modulus as i128, other.modulus as i128);
        let (a, b) = (self.residue as i128, other.residue as i128);
        let (g, x, _) = ext_gcd(m, n);
        if (b - a).rem_euclid(g) != 0 {
            return None;
        }
        let lcm = m / g * n;
        let step = ((b - a) / g * x).rem_euclid(n / g);
        let r = (a + m * step).rem_euclid(lcm);
        Some(Self::new(
            i64::try_from(r).expect("residue fits"),
            i64::try_from(lcm).expect("lcm fits"),
        ))
    }

    /// The `multiple / modulus` sub-progressions of level `multiple`.
    pub fn refine(&self, multiple: i64) -> impl Iterator<Item = Self> + '_ {
        assert!(multiple % self.modulus == 0);
        let count = multiple / self.modulus;
        (0..count).map(move |j| Self::new(self.residue + j * self.modulus, multiple))
    }
}

impl fmt::Display for ArithProgression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

pub fn progression_meet(a: &ArithProgression, b: &ArithProgression) -> Option<ArithProgression> {
    a.meet(b)
}

pub fn progression_contains(a: &ArithProgression, b: &ArithProgression) -> bool {
    a.contains(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(n: u64) -> FactoredNat {
        FactoredNat::new(n).unwrap()
    }

    fn ap(r: i64, m: i64) -> ArithProgression {
        ArithProgression::new(r, m)
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&nat(12), 2), 2);
        assert_eq!(valuation(&nat(12), 3), 1);
        assert_eq!(valuation(&nat(35), 2), 0);
    }

    #[test]
    fn factored_ops() {
        assert_eq!(nat(12).mul(&nat(10)), nat(120));
        assert_eq!(nat(12).gcd(&nat(18)), nat(6));
        assert_eq!(nat(4).lcm(&nat(6)), nat(12));
        assert_eq!(nat(12).checked_div(&nat(4)), Some(nat(3)));
        assert_eq!(nat(12).checked_div(&nat(8)), None);
        assert!(nat(1).is_one());
        assert_eq!(nat(97).largest_prime(), Some(97));
        assert!(FactoredNat::new(0).is_err());
        assert!(FactoredNat::from_factors([(4, 1)]).is_err());
        assert!(nat(2) < nat(3) && nat(8) > nat(7));
    }

    #[test]
    fn meets() {
        assert_eq!(ap(0, 2).meet(&ap(0, 3)), Some(ap(0, 6)));
        assert_eq!(ap(1, 2).meet(&ap(0, 2)), None);
        // frozen: the only x in [0,12) with x≡1 (4), x≡3 (6) is 9
        let brute: Vec<i64> = (0..12).filter(|x| x % 4 == 1 && x % 6 == 3).collect();
        assert_eq!(brute, vec![9]);
        assert_eq!(ap(1, 4).meet(&ap(3, 6)), Some(ap(9, 12)));
    }

    #[test]
    fn containment() {
        assert!(ap(0, 2).contains(&ap(2, 4)));
        assert!(!ap(1, 2).contains(&ap(2, 4)));
        let brute = (-36..=36)
            .filter(|x| ap(5, 12).contains_int(*x))
            .all(|x| ap(2, 3).contains_int(x));
        assert!(brute);
        assert!(ap(2, 3).contains(&ap(5, 12)));
    }

    #[test]
    fn congruences() {
        assert_eq!(solve_congruence(3, 2, 6), None);
        assert_eq!(solve_congruence(3, 3, 6), Some((1, 2)));
        assert_eq!(solve_congruence(2, -1, 1), Some((0, 1)));
    }

    #[test]
    fn containment_matches_brute_force_exhaustively() {
        for m1 in 1..=12i64 {
            for m2 in 1..=12i64 {
                let w = 10 * num_integer::lcm(m1, m2);
                for r1 in 0..m1 {
                    for r2 in 0..m2 {
                        let (a, b) = (ap(r1, m1), ap(r2, m2));
                        let brute = (-w..=w)
                            .filter(|x| b.contains_int(*x))
                            .all(|x| a.contains_int(x));
                        assert_eq!(a.contains(&b), brute, "{a} ⊇ {b}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn valuation_is_additive(m in 1u64..5000, n in 1u64..5000, pi in 0usize..6) {
            let p = [2u64, 3, 5, 7, 11, 13][pi];
            let (fm, fn_) = (nat(m), nat(n));
            prop_assert_eq!(fm.mul(&fn_).valuation(p), fm.valuation(p) + fn_.valuation(p));
            prop_assert_eq!(fm.mul(&fn_), nat(m * n));
        }

        #[test]
        fn meet_is_the_intersection(r1 in -50i64..50, m1 in 1i64..=12, r2 in -50i64..50, m2 in 1i64..=12) {
            let (a, b) = (ap(r1, m1), ap(r2, m2));
            let meet = a.meet(&b);
            let w = 10 * num_integer::lcm(m1, m2);
            for x in -w..=w {
                let both = a.contains_int(x) && b.contains_int(x);
                prop_assert_eq!(meet.is_some_and(|c| c.contains_int(x)), both);
            }
            if let Some(c) = meet {
                prop_assert!(a.contains(&c) && b.contains(&c));
                prop_assert_eq!(c.modulus(), num_integer::lcm(m1, m2));
            }
        }
    }
}
