//! Exact scalars: finite sums `Σ c_j e^{iθ_j}` with Gaussian-rational `c_j`
//! and rational phase exponents `θ_j` (radians).
//!
//! Units `e^{iθ}` for distinct rational `θ` are linearly independent over
//! `ℚ(i)`, so term-wise comparison is a sound equality test.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    BigRational::from_str(t).map_err(|_| Error::Parse(format!("not an exact rational: {s:?}")))
}

/// A Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{} i", self.re, sign, self.im.abs())
    }
}

impl FromStr for GaussRat {
    type Err = Error;

    /// Accepts `"a/b"`, `"a/b+c/d i"`, `"c/d i"` and `"i"`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(&compact)?));
        };
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        Ok(Self::new(parse_rational(re)?, im))
    }
}

/// Finite formal sum `Σ c·e^{iθ}`; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    terms: BTreeMap<BigRational, GaussRat>,
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::term(BigRational::zero(), GaussRat::real(q))
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        Self::term(BigRational::zero(), c)
    }

    /// `c·e^{iθ}`.
    pub fn term(theta: BigRational, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(theta, c);
        }
        Self { terms }
    }

    /// The unit `e^{iθ}`.
    pub fn phase(theta: BigRational) -> Self {
        Self::term(theta, GaussRat::real(BigRational::one()))
    }

    pub fn imag_unit() -> Self {
        Self::from_gauss(GaussRat::new(BigRational::zero(), BigRational::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, &GaussRat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a rational, if it is one (phase 0, no imaginary part).
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.terms.iter().next() {
            Some((theta, c)) if self.terms.len() == 1 && theta.is_zero() && c.im.is_zero() => {
                Some(c.re.clone())
            }
            _ => None,
        }
    }

    /// Complex conjugate: `(c e^{iθ})* = c̄ e^{-iθ}`.
    pub fn star(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(t, c)| (-t, c.conj())).collect(),
        }
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.star() == *self
    }

    /// Multiplies by `e^{iθ}`.
    pub fn rotate(&self, theta: &BigRational) -> Self {
        if theta.is_zero() {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(t, c)| (t + theta, c.clone())).collect(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), GaussRat::new(&c.re * q, &c.im * q)))
                .collect(),
        }
    }

    fn add_term(&mut self, theta: BigRational, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(theta) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(mut self, o: ExactScalar) -> ExactScalar {
        self += &o;
        self
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, o: &ExactScalar) {
        for (t, c) in &o.terms {
            self.add_term(t.clone(), c.clone());
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        self + &(-o)
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: ExactScalar) -> ExactScalar {
        &self - &o
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        let mut out = ExactScalar::zero();
        for (t1, c1) in &self.terms {
            for (t2, c2) in &o.terms {
                out.add_term(t1 + t2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: ExactScalar) -> ExactScalar {
        &self * &o
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if t.is_zero() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*ph({t})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    phase: String,
    coeff: String,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Terms(Vec<TermRepr>),
    Plain(String),
    Int(i64),
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(t, c)| TermRepr {
                phase: t.to_string(),
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match ScalarRepr::deserialize(d)? {
            ScalarRepr::Int(n) => Ok(ExactScalar::from_int(n)),
            ScalarRepr::Plain(s) => s
                .parse::<GaussRat>()
                .map(ExactScalar::from_gauss)
                .map_err(D::Error::custom),
            ScalarRepr::Terms(terms) => {
                let mut out = ExactScalar::zero();
                for t in terms {
                    let theta = parse_rational(&t.phase).map_err(D::Error::custom)?;
                    let c: GaussRat = t.coeff.parse().map_err(D::Error::custom)?;
                    out.add_term(theta, c);
                }
                Ok(out)
            }
        }
    }
}

/// Serde adapter for exact rationals as strings such as `"-3/4"` (integers also accepted).
pub mod rational_str {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Str(String),
        Int(i64),
    }

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        use serde::de::Error as _;
        match Repr::deserialize(d)? {
            Repr::Int(n) => Ok(int(n)),
            Repr::Str(s) => parse_rational(&s).map_err(D::Error::custom),
        }
    }
}
