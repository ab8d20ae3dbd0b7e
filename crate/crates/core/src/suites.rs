//! Seeded verification suites shared by the job runner and the examples.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{primes_up_to, FactoredNat};
use crate::coeff::{rat, CoeffElem, Dynamics, ExactScalar, PElem};
use crate::cohomology::{
    bounded_product_window, boundary, build_bicharacter, build_one_cocycle,
    compatibility_report, homotopy_defect, is_cocycle, nat_window, obstruction_at_one,
    one_cocycle_all_orders, random, Bicharacter, ChainElem, Cochain, PathAlgebra, ResolutionElem,
    SemigroupAlgebra, SkewProduct,
};
use crate::error::{Error, Result};
use crate::prodsys::{check_associativity, cohomologous_iso, shift_by_coboundary, ProductSystem, TwoCocycle};
use crate::qn::{
    find_orthogonal_subprojection, parse, proj_leq, proj_leq_engine, proj_leq_progression,
    pure_infiniteness_witness, verify_subprojection, DiagonalElem, Engine, Word,
};
use crate::report::CheckReport;

/// The three example rings: `ℕ^×` on `ℤ`, a 3-vertex graph, `ℤ/4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Laurent,
    Graph,
    Cyclic4,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Laurent, Family::Graph, Family::Cyclic4];

    pub fn name(self) -> &'static str {
        match self {
            Family::Laurent => "laurent",
            Family::Graph => "graph",
            Family::Cyclic4 => "cyclic4",
        }
    }

    fn skew(self) -> Option<SkewProduct> {
        match self {
            Family::Laurent => Some(SkewProduct::new(Dynamics::laurent())),
            Family::Cyclic4 => Some(SkewProduct::new(Dynamics::cyclic_group(4))),
            Family::Graph => None,
        }
    }
}

/// `∂∂ = 0` and homotopy results for one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionReport {
    pub boundary_squared: CheckReport,
    /// `None` when the ring has no splitting homotopy (the graph).
    pub homotopy: Option<CheckReport>,
}

fn dd_check<A: SemigroupAlgebra>(alg: &A, e: &ResolutionElem<A>) -> Option<String> {
    let ChainElem::Free(de) = boundary(alg, e) else {
        return Some("∂ of a positive level left F".into());
    };
    let dd = boundary(alg, &de);
    (!dd.is_zero()).then(|| format!("{dd:?}"))
}

fn run_resolution<A, R, C, G>(
    alg: &A,
    rng: &mut R,
    samples: usize,
    max_n: usize,
    with_homotopy: bool,
    mut coeff: C,
    mut grade: G,
) -> Result<ResolutionReport>
where
    A: SemigroupAlgebra,
    R: Rng,
    C: FnMut(&mut R) -> crate::cohomology::RingElem<A::Basis>,
    G: FnMut(&mut R) -> A::Grade,
{
    let mut dd = CheckReport::new();
    for level in 1..=max_n + 2 {
        for i in 0..samples {
            let e = random::resolution_elem::<A, R, _, _>(rng, level, 3, &mut coeff, &mut grade);
            dd.record(&[level, i], dd_check(alg, &e));
        }
    }
    let homotopy = if with_homotopy {
        let mut h = CheckReport::new();
        for i in 0..samples {
            let a = ChainElem::Module(alg.psi(&coeff(rng)));
            let defect = homotopy_defect(alg, &a)?;
            h.record(&["-1".to_string(), i.to_string()], (!defect.is_zero()).then(|| format!("{defect:?}")));
        }
        for level in 0..=max_n {
            for i in 0..samples {
                let e = random::resolution_elem::<A, R, _, _>(rng, level, 3, &mut coeff, &mut grade);
                let defect = homotopy_defect(alg, &ChainElem::Free(e))?;
                h.record(&[level, i], (!defect.is_zero()).then(|| format!("{defect:?}")));
            }
        }
        Some(h)
    } else {
        None
    };
    Ok(ResolutionReport {
        boundary_squared: dd,
        homotopy,
    })
}

/// `∂_n∂_{n+1} = 0` for `n ∈ {−1, …, max_n}` and `∂h + h∂ = id` in degrees
/// `−1, …, max_n`, on `samples` random elements per level.
pub fn resolution_suite<R: Rng>(rng: &mut R, family: Family, samples: usize, max_n: usize) -> Result<ResolutionReport> {
    match family.skew() {
        Some(ring) => {
            let d = ring.dynamics().clone();
            let r2 = ring.clone();
            run_resolution(
                &ring,
                rng,
                samples,
                max_n,
                true,
                move |rng: &mut R| random::skew_elem(rng, &r2, 3),
                move |rng: &mut R| random::pelem(rng, &d, 12),
            )
        }
        None => {
            let g = PathAlgebra::three_vertex();
            let g2 = g.clone();
            run_resolution(
                &g,
                rng,
                samples,
                max_n,
                false,
                move |rng: &mut R| random::path_elem(rng, &g2, 3),
                |rng: &mut R| rng.gen_range(0..=3u64),
            )
        }
    }
}

fn psi_pairs<A: SemigroupAlgebra, R: Rng, C>(alg: &A, rng: &mut R, samples: usize, mut coeff: C) -> CheckReport
where
    C: FnMut(&mut R) -> crate::cohomology::RingElem<A::Basis>,
{
    let mut report = CheckReport::new();
    for i in 0..samples {
        let (x, y) = (coeff(rng), coeff(rng));
        let lhs = alg.psi(&alg.mul(&x, &y));
        let rhs = alg.psi(&alg.mul(&x, &alg.psi(&y)));
        let diff = lhs.sub(&rhs);
        report.record(&[i], (!diff.is_zero()).then(|| format!("{diff:?}")));
    }
    report
}

/// `Ψ(xy) = Ψ(xΨ(y))` on `samples` random pairs.
pub fn psi_suite<R: Rng>(rng: &mut R, family: Family, samples: usize) -> CheckReport {
    match family.skew() {
        Some(ring) => {
            let r2 = ring.clone();
            psi_pairs(&ring, rng, samples, move |rng: &mut R| random::skew_elem(rng, &r2, 4))
        }
        None => {
            let g = PathAlgebra::three_vertex_dense();
            let g2 = g.clone();
            psi_pairs(&g, rng, samples, move |rng: &mut R| random::path_elem(rng, &g2, 4))
        }
    }
}

/// `θ_p^{-1}E_p(a*b) = L_p(a*b)` on Laurent monomials `a, b` of degree `≤ degree`.
pub fn inner_product_suite(primes: &[u64], degree: i64) -> Result<CheckReport> {
    let d = Dynamics::laurent();
    let mut report = CheckReport::new();
    for &p in primes {
        let pe = PElem::nat(p);
        for j in -degree..=degree {
            for k in -degree..=degree {
                let (a, b) = (CoeffElem::u(j), CoeffElem::u(k));
                let lhs = d.inner_product(&pe, &a, &b);
                let rhs = d.transfer(&pe, &d.mul(&d.star(&a), &b))?;
                let bad = (lhs != rhs).then(|| format!("restriction {lhs}, transfer {rhs}"));
                report.record(&[p as i64, j, k], bad);
            }
        }
    }
    Ok(report)
}

/// A random compatible choice `ξ(p) = c_p + (α_p − 1)b` for the primes `≤ bound`.
pub fn compatible_prime_values<R: Rng>(rng: &mut R, bound: u64) -> BTreeMap<u64, CoeffElem> {
    let d = Dynamics::laurent();
    let b = random::coeff(rng, &d, 3, 3);
    primes_up_to(bound)
        .into_iter()
        .map(|p| {
            let c = CoeffElem::constant(1, random::scalar(rng));
            let shifted = d.act(&PElem::nat(p), &b).sub(&b);
            (p, c.add(&shifted))
        })
        .collect()
}

/// Results of the 1-cocycle construction checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneCocycleReport {
    pub compatibility: CheckReport,
    pub cocycle_identity: CheckReport,
    pub order_independence: CheckReport,
}

impl OneCocycleReport {
    pub fn passed(&self) -> bool {
        self.compatibility.passed() && self.cocycle_identity.passed() && self.order_independence.passed()
    }
}

/// Builds `ξ` on `[1..bound]` from its prime values and checks
/// `ξ(mn) = α_m(ξ(n)) + ξ(m)` for `mn ≤ bound` and order independence.
pub fn one_cocycle_suite(prime_values: &BTreeMap<u64, CoeffElem>, bound: u64) -> Result<OneCocycleReport> {
    let d = Dynamics::laurent();
    let xi = build_one_cocycle(&d, prime_values, bound)?;
    let cocycle_identity = is_cocycle(&d, &xi, &bounded_product_window(bound, 2))?;
    let mut order_independence = CheckReport::new();
    for q in 1..=bound {
        let values = one_cocycle_all_orders(&d, prime_values, &FactoredNat::new(q)?)?;
        let bad = (values.len() != 1).then(|| {
            let shown: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            shown.join(" | ")
        });
        order_independence.record(&[q], bad);
    }
    Ok(OneCocycleReport {
        compatibility: compatibility_report(&d, prime_values),
        cocycle_identity,
        order_independence,
    })
}

/// `∂²ξ = 0` on `[1..window]³` and the obstruction `ξ(p,q) − ξ(q,p)` at `z = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicharReport {
    pub cocycle: CheckReport,
    pub obstruction: String,
    pub antisymmetry: String,
    /// The obstruction equals `ad − bc` and is nonzero iff `ad ≠ bc`.
    pub obstruction_matches: bool,
}

pub fn bichar_suite(xi: &Bicharacter, window: u64) -> Result<BicharReport> {
    let d = Dynamics::laurent();
    let c = build_bicharacter(xi);
    let cocycle = is_cocycle(&d, &c, &nat_window(window, 3))?;
    let (p, q) = xi.primes();
    let obstruction = obstruction_at_one(&c, p, q)?;
    let expected = ExactScalar::from_rational(xi.antisymmetry());
    Ok(BicharReport {
        cocycle,
        obstruction: obstruction.to_string(),
        antisymmetry: xi.antisymmetry().to_string(),
        obstruction_matches: obstruction == expected,
    })
}

/// A random bicharacter on the primes `2, 3` with small rational parameters.
pub fn random_bicharacter<R: Rng>(rng: &mut R) -> Bicharacter {
    let mut r = || rat(rng.gen_range(-4..=4), rng.gen_range(1..=3));
    Bicharacter::new(2, 3, r(), r(), r(), r()).expect("2 and 3 are distinct primes")
}

/// Associativity of `X^ξ` on `[1..window]³`, and the same for `ξ` bumped by
/// `1` at `(2, 3)`; the control passes when it finds failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistReport {
    pub associativity: CheckReport,
    pub perturbed: CheckReport,
}

impl TwistReport {
    pub fn passed(&self) -> bool {
        self.associativity.passed() && !self.perturbed.passed()
    }
}

pub fn twist_suite(xi: &Bicharacter, window: u64) -> Result<TwistReport> {
    let d = Dynamics::laurent();
    let triples: Vec<[PElem; 3]> = nat_window(window, 3)
        .into_iter()
        .map(|t| [t[0].clone(), t[1].clone(), t[2].clone()])
        .collect();
    let c = TwoCocycle::bicharacter(xi);
    let bad = c.perturbed(PElem::nat(2), PElem::nat(3), CoeffElem::constant(1, ExactScalar::one()));
    Ok(TwistReport {
        associativity: check_associativity(&ProductSystem::twisted(d.clone(), c), &triples)?,
        perturbed: check_associativity(&ProductSystem::twisted(d, bad), &triples)?,
    })
}

/// A random normalized self-adjoint 1-cochain on `[1..bound]`.
pub fn random_psi<R: Rng>(rng: &mut R, bound: u64) -> Result<Cochain> {
    let d = Dynamics::laurent();
    let mut table = BTreeMap::new();
    for n in 1..=bound {
        let v = if n == 1 {
            CoeffElem::zero()
        } else {
            let a = random::coeff(rng, &d, 2, 3);
            let c = CoeffElem::constant(1, ExactScalar::from_rational(rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))));
            a.add(&d.star(&a)).add(&c)
        };
        table.insert(vec![PElem::nat(n)], v);
    }
    Cochain::from_table(1, table)
}

/// `Φ(xy) = Φ(x)Φ(y)` for `pairs` random `(ξ, ψ)` with `η = ξ − ∂¹ψ`, on `[1..window]²`.
pub fn iso_suite<R: Rng>(rng: &mut R, pairs: usize, window: u64) -> Result<CheckReport> {
    let d = Dynamics::laurent();
    let samples: Vec<(PElem, PElem)> = nat_window(window, 2)
        .into_iter()
        .map(|t| (t[0].clone(), t[1].clone()))
        .collect();
    let mut report = CheckReport::new();
    for _ in 0..pairs {
        let xi = TwoCocycle::bicharacter(&random_bicharacter(rng));
        let psi = random_psi(rng, window * window)?;
        let eta = shift_by_coboundary(&d, &xi, &psi);
        let (x, y) = (ProductSystem::twisted(d.clone(), xi), ProductSystem::twisted(d.clone(), eta));
        report.merge(cohomologous_iso(&x, &y, &psi, &samples)?);
    }
    Ok(report)
}

/// The three decisions of `u^k s_m s_m* u^{-k} ≤ u^l s_n s_n* u^{-l}` agree
/// for `k, l ∈ [−shift, shift]`, `m, n ∈ [1, bound]`.
pub fn order_scan(engine: &Engine, shift: i64, bound: u64) -> CheckReport {
    let mut report = CheckReport::new();
    let nats: Vec<FactoredNat> = (1..=bound).map(|m| FactoredNat::new(m).expect("positive")).collect();
    for k in -shift..=shift {
        for l in -shift..=shift {
            for m in &nats {
                for n in &nats {
                    let a = proj_leq((k, m), (l, n));
                    let b = proj_leq_engine(engine, (k, m), (l, n));
                    let c = proj_leq_progression((k, m), (l, n));
                    let bad = !(a == b && b == c);
                    report.record(
                        &[k.to_string(), l.to_string(), m.to_string(), n.to_string()],
                        bad.then(|| format!("criterion {a}, engine {b}, progression {c}")),
                    );
                }
            }
        }
    }
    report
}

/// Runs the subprojection search for every projection `u^k s_m s_m* u^{-k}`
/// with `|k| ≤ q_shift`, `m ≤ q_level` and every off-diagonal word with
/// `m₀, n₀ ≤ w_level`, `|k₀|, |l₀| ≤ w_shift`, verifying (i) and (ii).
pub fn subprojection_grid(engine: &Engine, q_shift: i64, q_level: u64, w_shift: i64, w_level: u64) -> CheckReport {
    let mut report = CheckReport::new();
    for k in -q_shift..=q_shift {
        for m in 1..=q_level {
            let q = DiagonalElem::projection(k, FactoredNat::new(m).expect("positive"));
            for m0 in 1..=w_level {
                for n0 in 1..=w_level {
                    for k0 in -w_shift..=w_shift {
                        for l0 in -w_shift..=w_shift {
                            if k0 == l0 && m0 == n0 {
                                continue;
                            }
                            let w = Word::from_ints(k0, m0, n0, l0);
                            let outcome = find_orthogonal_subprojection(engine, &q, &w)
                                .and_then(|p| verify_subprojection(engine, &q, &w, &p));
                            report.record(
                                &[k, m as i64, k0, m0 as i64, n0 as i64, l0],
                                outcome.err().map(|e| e.to_string()),
                            );
                        }
                    }
                }
            }
        }
    }
    report
}

/// Fixed witness inputs: isometries, projections, `1 + W` and mixed sums.
pub const WITNESS_INPUTS: &[&str] = &[
    "1",
    "s(2)",
    "s(3)",
    "s(6)",
    "u*s(2)",
    "u^-3*s(5)",
    "s*(2)",
    "s*(3)*u^2",
    "u*s(2)*s*(2)*u^-1",
    "s(2)*s*(2)",
    "u^2*s(3)*s*(3)*u^-2",
    "s(4)*s*(4) + u*s(4)*s*(4)*u^-1",
    "1 + u*s(2)*s*(3)",
    "1 + s(2)",
    "1 + u",
    "1 + u^3*s(2)*s*(2)",
    "1 + s(3)*s*(2)",
    "2 + (1/2)*u*s(2)*s*(2)",
    "1 + (1/3)*s*(2)*u",
    "u + s(2)*s*(3)",
    "(3/2)*s(2) + u*s(2)*s*(2)*u^-1",
    "s(2) + s(3)",
    "s(2)*s*(3) + s(3)*s*(2)",
    "(1/2)*u^2*s(6)*s*(4)*u^-1",
    "1 + (i)*u^2",
    "s(2) + (-1)*u*s(4) + (2/3)*s*(3)",
];

/// Every fixed input yields `T`, `R` with `TxR = 1`.
pub fn witness_suite(engine: &Engine, inputs: &[&str]) -> CheckReport {
    let mut report = CheckReport::new();
    for text in inputs {
        let outcome = witness_holds(engine, text);
        report.record(&[*text], outcome.err().map(|e| e.to_string()));
    }
    report
}

fn witness_holds(engine: &Engine, text: &str) -> Result<()> {
    let x = parse(engine, text)?;
    let w = pure_infiniteness_witness(engine, &x)?;
    if w.verify(engine, &x)? {
        Ok(())
    } else {
        Err(Error::Internal(format!("TxR ≠ 1 for {text}")))
    }
}
