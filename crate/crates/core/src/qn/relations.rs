//! Scans of the defining relations and their consequences, each decided by
//! [`Engine::equal`]. Both sides are assembled from the generators
//! `u^{±1}`, `s_m`, `s_n*` so every check exercises the product.

use num_rational::BigRational;

use super::engine::Engine;
use super::word::{nat, AlgebraElem, Word};
use crate::arith::{gcd_i64, FactoredNat};
use crate::coeff::ExactScalar;
use crate::report::CheckReport;

fn u(k: i64) -> AlgebraElem {
    AlgebraElem::word(Word::u(k))
}

fn s(m: u64) -> AlgebraElem {
    AlgebraElem::word(Word::s(m))
}

fn s_star(n: u64) -> AlgebraElem {
    AlgebraElem::word(Word::s_star(n))
}

fn compare(engine: &Engine, report: &mut CheckReport, tuple: &[i64], lhs: &AlgebraElem, rhs: &AlgebraElem) {
    let diff = engine.normalize(&lhs.sub(rhs));
    report.record(tuple, (!diff.is_zero()).then(|| diff.to_string()));
}

/// `(a v_p(m) + b v_q(m))(c v_p(n) + d v_q(n))`, read from the valuations.
fn twist_phase(engine: &Engine, m: u64, n: u64) -> BigRational {
    let xi = engine.twist();
    let (p, q) = xi.primes();
    let [a, b, c, d] = xi.params();
    let (fm, fn_) = (nat(m), nat(n));
    let v = |x: &FactoredNat, r: u64| BigRational::from_integer(x.valuation(r).into());
    (a * v(&fm, p) + b * v(&fm, q)) * (c * v(&fn_, p) + d * v(&fn_, q))
}

/// `s_m s_n = e^{iξ(m,n)} s_{mn}` for `m, n ≤ bound`.
pub fn isometry_product(engine: &Engine, bound: u64) -> CheckReport {
    let mut report = CheckReport::new();
    for m in 1..=bound {
        for n in 1..=bound {
            let lhs = engine.mul(&s(m), &s(n));
            let rhs = s(m * n).scale(&ExactScalar::phase(twist_phase(engine, m, n)));
            compare(engine, &mut report, &[m as i64, n as i64], &lhs, &rhs);
        }
    }
    report
}

/// `s_m u^l = u^{ml} s_m` for `m ≤ bound`, `|l| ≤ shift`.
pub fn covariance(engine: &Engine, bound: u64, shift: i64) -> CheckReport {
    let mut report = CheckReport::new();
    for m in 1..=bound {
        for l in -shift..=shift {
            let lhs = engine.mul(&s(m), &u(l));
            let rhs = engine.mul(&u(m as i64 * l), &s(m));
            compare(engine, &mut report, &[m as i64, l], &lhs, &rhs);
        }
    }
    report
}

/// `Σ_{k<m} u^k s_m s_m* u^{-k} = 1` for `m ≤ bound`.
pub fn range_partition(engine: &Engine, bound: u64) -> CheckReport {
    let mut report = CheckReport::new();
    for m in 1..=bound {
        let lhs = (0..m as i64).fold(AlgebraElem::zero(), |acc, k| {
            acc.add(&engine.product(&[&u(k), &s(m), &s_star(m), &u(-k)]))
        });
        compare(engine, &mut report, &[m as i64], &lhs, &AlgebraElem::one());
    }
    report
}

/// `u^k s_m s_m* u^{-k} = Σ_{j<n} u^{k+jm} s_{mn} s_{mn}* u^{-k-jm}`.
pub fn refinement(engine: &Engine, bound: u64, shift: i64) -> CheckReport {
    let mut report = CheckReport::new();
    for m in 1..=bound {
        for n in 1..=bound {
            for k in -shift..=shift {
                let lhs = engine.product(&[&u(k), &s(m), &s_star(m), &u(-k)]);
                let rhs = (0..n as i64).fold(AlgebraElem::zero(), |acc, j| {
                    let e = k + j * m as i64;
                    acc.add(&engine.product(&[&u(e), &s(m * n), &s_star(m * n), &u(-e)]))
                });
                compare(engine, &mut report, &[m as i64, n as i64, k], &lhs, &rhs);
            }
        }
    }
    report
}

/// `s_r* u^t s_r` is `u^{t/r}` when `r | t` and `0` otherwise.
pub fn compression(engine: &Engine, bound: u64, shift: i64) -> CheckReport {
    let mut report = CheckReport::new();
    for r in 1..=bound {
        for t in -shift..=shift {
            let lhs = engine.product(&[&s_star(r), &u(t), &s(r)]);
            let ri = r as i64;
            let rhs = if t % ri == 0 { u(t / ri) } else { AlgebraElem::zero() };
            compare(engine, &mut report, &[ri, t], &lhs, &rhs);
        }
    }
    report
}

/// `s_m s_m* s_n s_n* = s_{m∨n} s_{m∨n}*`.
pub fn projection_meet(engine: &Engine, bound: u64) -> CheckReport {
    let mut report = CheckReport::new();
    for m in 1..=bound {
        for n in 1..=bound {
            let lcm = m * n / gcd_i64(m as i64, n as i64) as u64;
            let lhs = engine.product(&[&s(m), &s_star(m), &s(n), &s_star(n)]);
            let rhs = engine.mul(&s(lcm), &s_star(lcm));
            compare(engine, &mut report, &[m as i64, n as i64], &lhs, &rhs);
        }
    }
    report
}

/// Bounds for [`scan_all`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ScanBounds {
    pub isometry_product: u64,
    pub covariance: u64,
    pub covariance_shift: i64,
    pub range_partition: u64,
    pub refinement: u64,
    pub refinement_shift: i64,
    pub compression: u64,
    pub compression_shift: i64,
    pub projection_meet: u64,
}

impl Default for ScanBounds {
    fn default() -> Self {
        Self {
            isometry_product: 30,
            covariance: 30,
            covariance_shift: 10,
            range_partition: 30,
            refinement: 12,
            refinement_shift: 12,
            compression: 12,
            compression_shift: 24,
            projection_meet: 12,
        }
    }
}

/// Every scan, labelled.
pub fn scan_all(engine: &Engine, b: &ScanBounds) -> Vec<(&'static str, CheckReport)> {
    vec![
        ("isometry_product", isometry_product(engine, b.isometry_product)),
        ("covariance", covariance(engine, b.covariance, b.covariance_shift)),
        ("range_partition", range_partition(engine, b.range_partition)),
        ("refinement", refinement(engine, b.refinement, b.refinement_shift)),
        ("compression", compression(engine, b.compression, b.compression_shift)),
        ("projection_meet", projection_meet(engine, b.projection_meet)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Bicharacter;

    #[test]
    fn small_scans_pass() {
        let e = Engine::new(Bicharacter::from_ints(2, 3, [1, 2, 3, 5]).unwrap());
        let b = ScanBounds {
            isometry_product: 8,
            covariance: 6,
            covariance_shift: 3,
            range_partition: 8,
            refinement: 4,
            refinement_shift: 3,
            compression: 4,
            compression_shift: 8,
            projection_meet: 6,
        };
        for (name, r) in scan_all(&e, &b) {
            assert!(r.passed(), "{name}: {:?}", r.failures);
            assert!(r.checked > 0);
        }
    }
}
