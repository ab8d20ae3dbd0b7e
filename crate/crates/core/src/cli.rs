//! JSON job runner behind the `psc` binary.
//!
//! A job reads a [`JobConfig`], runs one verification and returns a
//! [`Report`] whose content depends only on `(config, seed)`. Wall-clock time
//! is kept apart in [`Outcome`].

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::FactoredNat;
use crate::coeff::CoeffElem;
use crate::cohomology::{additivity_report, build_bicharacter, h0_fixed_point_check, is_cocycle, nat_window, Bicharacter};
use crate::error::{Error, Result};
use crate::qn::relations::{scan_all, ScanBounds};
use crate::qn::{
    expect_e, expect_f, expect_g, find_orthogonal_subprojection, parse, pure_infiniteness_witness, serialize,
    verify_subprojection, DiagonalElem, Engine, Word,
};
use crate::report::CheckReport;
use crate::suites::{self, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum JobKind {
    ResolutionVerify,
    PsiVerify,
    CocycleCheck,
    #[value(name = "cocycle-build-1")]
    #[serde(rename = "cocycle-build-1")]
    CocycleBuild1,
    CocycleBichar,
    Obstruction,
    H0Check,
    TwistAssoc,
    IsoCheck,
    QnReduce,
    QnEqual,
    QnExpect,
    QnScanRelations,
    QnOrderScan,
    QnWitness,
    QnPiWitness,
}

impl JobKind {
    pub fn name(self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default()
    }
}

/// Bounds for the subprojection grid: `Q = u^k s_m s_m* u^{-k}` with
/// `|k| ≤ q_shift`, `m ≤ q_level`, words with `m₀, n₀ ≤ w_level`, `|k₀|, |l₀| ≤ w_shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridBounds {
    pub q_shift: i64,
    pub q_level: u64,
    pub w_shift: i64,
    pub w_level: u64,
}

impl Default for GridBounds {
    fn default() -> Self {
        Self {
            q_shift: 4,
            q_level: 6,
            w_shift: 4,
            w_level: 4,
        }
    }
}

/// Job description; every field is optional and defaults per job kind.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct JobConfig {
    pub job: Option<JobKind>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub families: Option<Vec<Family>>,
    pub samples: Option<usize>,
    pub max_level: Option<usize>,
    pub cocycle: Option<Bicharacter>,
    pub cocycles: Option<Vec<Bicharacter>>,
    pub window: Option<u64>,
    pub prime_values: Option<BTreeMap<u64, CoeffElem>>,
    pub primes: Option<Vec<u64>>,
    pub degree: Option<u64>,
    pub element: Option<String>,
    pub elements: Option<Vec<String>>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub expect_equal: Option<bool>,
    pub bounds: Option<ScanBounds>,
    pub shift: Option<i64>,
    pub level: Option<u64>,
    pub projection: Option<(i64, u64)>,
    pub word: Option<(i64, u64, u64, i64)>,
    pub grid: Option<GridBounds>,
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    fn validate(&self) -> Result<()> {
        let negative = [
            ("shift", self.shift),
            ("grid.q_shift", self.grid.map(|g| g.q_shift)),
            ("grid.w_shift", self.grid.map(|g| g.w_shift)),
        ];
        for (name, v) in negative {
            if matches!(v, Some(x) if x < 0) {
                return Err(Error::Invalid(format!("{name} must be nonnegative")));
            }
        }
        if let Some(b) = &self.bounds {
            if b.covariance_shift < 0 || b.refinement_shift < 0 || b.compression_shift < 0 {
                return Err(Error::Invalid("scan shifts must be nonnegative".into()));
            }
        }
        if let Some((_, m)) = self.projection {
            FactoredNat::new(m)?;
        }
        if let Some((_, m, n, _)) = self.word {
            FactoredNat::new(m)?;
            FactoredNat::new(n)?;
        }
        Ok(())
    }

    fn cocycle_list(&self) -> Vec<Bicharacter> {
        match (&self.cocycles, &self.cocycle) {
            (Some(list), _) => list.clone(),
            (None, Some(c)) => vec![c.clone()],
            (None, None) => vec![Bicharacter::from_ints(2, 3, [1, 0, 0, 1]).expect("valid")],
        }
    }

    fn engine(&self) -> Engine {
        Engine::new(self.cocycle.clone().unwrap_or_else(Bicharacter::trivial))
    }

    fn need<'a, T>(&self, field: &'a Option<T>, name: &str) -> Result<&'a T> {
        field
            .as_ref()
            .ok_or_else(|| Error::Invalid(format!("this job needs the field `{name}`")))
    }
}

/// Deterministic job output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub job: JobKind,
    pub seed: u64,
    pub passed: bool,
    pub checks: BTreeMap<String, CheckReport>,
    pub results: BTreeMap<String, Value>,
    /// Inputs the engine refused, with its diagnostic.
    pub rejected: Vec<String>,
}

impl Report {
    fn new(job: JobKind, seed: u64) -> Self {
        Self {
            job,
            seed,
            passed: true,
            checks: BTreeMap::new(),
            results: BTreeMap::new(),
            rejected: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, report: CheckReport) {
        self.checks.insert(name.into(), report);
    }

    fn result(&mut self, name: impl Into<String>, value: Value) {
        self.results.insert(name.into(), value);
    }

    fn finish(mut self) -> Self {
        self.passed = self.checks.values().all(CheckReport::passed) && self.rejected.is_empty();
        self
    }

    /// `0` on success, `1` if a check failed, `2` if an input was rejected.
    pub fn exit_code(&self) -> i32 {
        if !self.rejected.is_empty() {
            2
        } else if self.checks.values().all(CheckReport::passed) {
            0
        } else {
            1
        }
    }

    /// One line per check and result.
    pub fn summary(&self) -> String {
        let mut lines = vec![format!(
            "{} (seed {}): {}",
            self.job.name(),
            self.seed,
            if self.passed { "PASS" } else { "FAIL" }
        )];
        for (name, c) in &self.checks {
            lines.push(format!("  {name}: {} checked, {} failed", c.checked, c.failures.len()));
            for f in c.failures.iter().take(5) {
                lines.push(format!("    at ({}): {}", f.tuple.join(", "), f.value));
            }
        }
        for (name, v) in &self.results {
            lines.push(format!("  {name} = {v}"));
        }
        for r in &self.rejected {
            lines.push(format!("  rejected: {r}"));
        }
        lines.join("\n")
    }
}

/// A report with the elapsed time of the run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Outcome {
    pub report: Report,
    pub timing: Timing,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

impl Outcome {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

pub const DEFAULT_SEED: u64 = 1;

/// Runs `kind`; `seed` overrides the seed in the config.
pub fn run(kind: JobKind, config: &JobConfig, seed: Option<u64>) -> Result<Outcome> {
    if let Some(j) = config.job {
        if j != kind {
            return Err(Error::Invalid(format!("config is for {}, not {}", j.name(), kind.name())));
        }
    }
    config.validate()?;
    let seed = seed.or(config.seed).unwrap_or(DEFAULT_SEED);
    let start = Instant::now();
    let report = dispatch(kind, config, seed)?.finish();
    Ok(Outcome {
        report,
        timing: Timing {
            elapsed_us: start.elapsed().as_micros() as u64,
        },
    })
}

fn dispatch(kind: JobKind, cfg: &JobConfig, seed: u64) -> Result<Report> {
    let mut rep = Report::new(kind, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let families = cfg.families.clone().unwrap_or_else(|| Family::ALL.to_vec());
    match kind {
        JobKind::ResolutionVerify => {
            for f in families {
                let r = suites::resolution_suite(&mut rng, f, cfg.samples.unwrap_or(100), cfg.max_level.unwrap_or(3))?;
                rep.check(format!("{}/boundary_squared", f.name()), r.boundary_squared);
                match r.homotopy {
                    Some(h) => rep.check(format!("{}/homotopy", f.name()), h),
                    None => rep.result(
                        format!("{}/homotopy", f.name()),
                        json!("unsupported: fibers are not free of rank one"),
                    ),
                }
            }
        }
        JobKind::PsiVerify => {
            for f in families {
                rep.check(f.name(), suites::psi_suite(&mut rng, f, cfg.samples.unwrap_or(500)));
            }
        }
        JobKind::CocycleCheck => {
            let window = cfg.window.unwrap_or(30);
            let d = crate::coeff::Dynamics::laurent();
            for xi in cfg.cocycle_list() {
                let c = build_bicharacter(&xi);
                rep.check(format!("{xi}/cocycle"), is_cocycle(&d, &c, &nat_window(window, 3))?);
                rep.check(format!("{xi}/additivity"), additivity_report(&c, window)?);
            }
        }
        JobKind::CocycleBuild1 => {
            let bound = cfg.window.unwrap_or(60);
            let mut total = suites::OneCocycleReport {
                compatibility: CheckReport::new(),
                cocycle_identity: CheckReport::new(),
                order_independence: CheckReport::new(),
            };
            let assignments = match &cfg.prime_values {
                Some(pv) => vec![pv.clone()],
                None => (0..cfg.samples.unwrap_or(10))
                    .map(|_| suites::compatible_prime_values(&mut rng, bound))
                    .collect(),
            };
            for pv in &assignments {
                let r = suites::one_cocycle_suite(pv, bound)?;
                total.compatibility.merge(r.compatibility);
                total.cocycle_identity.merge(r.cocycle_identity);
                total.order_independence.merge(r.order_independence);
            }
            if let Some(pv) = &cfg.prime_values {
                let d = crate::coeff::Dynamics::laurent();
                let xi = crate::cohomology::build_one_cocycle(&d, pv, bound)?;
                let mut values = serde_json::Map::new();
                for n in 1..=bound.min(12) {
                    let v = xi.eval(&[crate::coeff::PElem::nat(n)])?;
                    values.insert(n.to_string(), json!(v.to_string()));
                }
                rep.result("values", Value::Object(values));
            }
            rep.result("assignments", json!(assignments.len()));
            rep.check("compatibility", total.compatibility);
            rep.check("cocycle_identity", total.cocycle_identity);
            rep.check("order_independence", total.order_independence);
        }
        JobKind::CocycleBichar => {
            let window = cfg.window.unwrap_or(30);
            for xi in cfg.cocycle_list() {
                let r = suites::bichar_suite(&xi, window)?;
                let (p, q) = xi.primes();
                let mut obstruction = CheckReport::new();
                obstruction.record(
                    &[p, q],
                    (!r.obstruction_matches).then(|| format!("{} vs ad − bc = {}", r.obstruction, r.antisymmetry)),
                );
                rep.result(
                    xi.to_string(),
                    json!({
                        "cocycle": r.cocycle.passed(),
                        "obstruction": r.obstruction,
                        "obstruction_nonzero": r.antisymmetry != "0",
                    }),
                );
                rep.check(format!("{xi}/cocycle"), r.cocycle);
                rep.check(format!("{xi}/obstruction"), obstruction);
            }
        }
        JobKind::Obstruction => {
            for xi in cfg.cocycle_list() {
                let (p, q) = xi.primes();
                let c = build_bicharacter(&xi);
                let v = crate::cohomology::obstruction_at_one(&c, p, q)?;
                rep.result(
                    xi.to_string(),
                    json!({ "pair": [p, q], "value": v.to_string(), "coboundary_ruled_out": !v.is_zero() }),
                );
            }
        }
        JobKind::H0Check => {
            let primes = cfg.primes.clone().unwrap_or_else(|| vec![2, 3]);
            let cert = h0_fixed_point_check(&primes, cfg.degree.unwrap_or(50))?;
            let basis: Vec<Vec<i64>> = cert.fixed_basis.clone();
            rep.result("fixed_basis", json!(basis));
            rep.result("constants_only", json!(cert.constants_only()));
            rep.check("nonconstant_coefficients_vanish", cert.report);
        }
        JobKind::TwistAssoc => {
            let window = cfg.window.unwrap_or(20);
            for xi in cfg.cocycle_list() {
                let r = suites::twist_suite(&xi, window)?;
                let mut control = CheckReport::new();
                if r.perturbed.checked > 0 {
                    control.record(
                        &["(2,3) bumped by 1"],
                        r.perturbed.passed().then(|| "perturbed twist stayed associative".to_string()),
                    );
                }
                rep.result(format!("{xi}/perturbed_failures"), json!(r.perturbed.failures.len()));
                rep.check(format!("{xi}/associativity"), r.associativity);
                rep.check(format!("{xi}/negative_control"), control);
            }
        }
        JobKind::IsoCheck => {
            let r = suites::iso_suite(&mut rng, cfg.samples.unwrap_or(100), cfg.window.unwrap_or(6))?;
            rep.check("intertwining", r);
        }
        JobKind::QnReduce => {
            let e = cfg.engine();
            let x = parse(&e, cfg.need(&cfg.element, "element")?)?;
            rep.result("canonical", json!(serialize(&x)));
            rep.result("normalized", json!(serialize(&e.normalize(&x))));
        }
        JobKind::QnEqual => {
            let e = cfg.engine();
            let x = parse(&e, cfg.need(&cfg.lhs, "lhs")?)?;
            let y = parse(&e, cfg.need(&cfg.rhs, "rhs")?)?;
            let equal = e.equal(&x, &y);
            rep.result("equal", json!(equal));
            rep.result("difference", json!(serialize(&e.normalize(&x.sub(&y)))));
            if let Some(expected) = cfg.expect_equal {
                let mut c = CheckReport::new();
                c.record(&["lhs", "rhs"], (equal != expected).then(|| format!("equal = {equal}")));
                rep.check("expectation", c);
            }
        }
        JobKind::QnExpect => {
            let e = cfg.engine();
            let x = e.normalize(&parse(&e, cfg.need(&cfg.element, "element")?)?);
            let ex = expect_e(&x);
            let fx = expect_f(&ex)?;
            let gx = expect_g(&x);
            let mut idem = CheckReport::new();
            idem.record(&["E"], (!e.equal(&expect_e(&ex), &ex)).then(|| "E∘E ≠ E".to_string()));
            idem.record(&["F"], (!e.equal(&expect_f(&fx)?, &fx)).then(|| "F∘F ≠ F".to_string()));
            idem.record(&["G"], (expect_g(&gx.to_algebra()) != gx).then(|| "G∘G ≠ G".to_string()));
            rep.result("E", json!(serialize(&ex)));
            rep.result("F", json!(serialize(&fx)));
            rep.result("G", json!(gx.to_string()));
            rep.check("idempotence", idem);
        }
        JobKind::QnScanRelations => {
            let e = cfg.engine();
            for (name, r) in scan_all(&e, &cfg.bounds.unwrap_or_default()) {
                rep.check(name, r);
            }
        }
        JobKind::QnOrderScan => {
            let e = cfg.engine();
            let r = suites::order_scan(&e, cfg.shift.unwrap_or(6), cfg.level.unwrap_or(12));
            rep.result("triples", json!(r.checked));
            rep.check("agreement", r);
        }
        JobKind::QnWitness => {
            let e = cfg.engine();
            match (cfg.projection, cfg.word) {
                (Some((k, m)), Some((k0, m0, n0, l0))) => {
                    let q = DiagonalElem::projection(k, FactoredNat::new(m)?);
                    let w = Word::from_ints(k0, m0, n0, l0);
                    match find_orthogonal_subprojection(&e, &q, &w) {
                        Ok(p) => {
                            let mut c = CheckReport::new();
                            c.record(&[w.to_string()], verify_subprojection(&e, &q, &w, &p).err().map(|x| x.to_string()));
                            rep.result("k", json!(p.k));
                            rep.result("m", json!(p.m.to_string()));
                            rep.result("projection", json!(p.word().to_string()));
                            rep.result("branch", serde_json::to_value(&p.branch)?);
                            rep.check("verified", c);
                        }
                        Err(Error::Rejected(msg)) => rep.rejected.push(msg),
                        Err(other) => return Err(other),
                    }
                }
                (None, None) => {
                    let g = cfg.grid.unwrap_or_default();
                    rep.check("grid", suites::subprojection_grid(&e, g.q_shift, g.q_level, g.w_shift, g.w_level));
                }
                _ => return Err(Error::Invalid("give both `projection` and `word`, or neither".into())),
            }
        }
        JobKind::QnPiWitness => {
            let e = cfg.engine();
            let inputs: Vec<String> = match (&cfg.elements, &cfg.element) {
                (Some(list), _) => list.clone(),
                (None, Some(x)) => vec![x.clone()],
                (None, None) => suites::WITNESS_INPUTS.iter().map(|s| s.to_string()).collect(),
            };
            let mut verified = CheckReport::new();
            let mut witnesses = serde_json::Map::new();
            for text in &inputs {
                let x = parse(&e, text)?;
                match pure_infiniteness_witness(&e, &x) {
                    Ok(w) => {
                        let ok = w.verify(&e, &x)?;
                        verified.record(&[text], (!ok).then(|| serialize(&w.product(&e, &x).unwrap_or_default())));
                        witnesses.insert(
                            text.clone(),
                            json!({
                                "T": w.t.to_string(),
                                "R": w.r.to_string(),
                                "projection": Word::projection(w.k, w.m.clone()).to_string(),
                                "G(xx*)": w.diagonal.to_string(),
                                "steps": w.steps.len(),
                            }),
                        );
                    }
                    Err(Error::Rejected(msg)) => rep.rejected.push(format!("{text}: {msg}")),
                    Err(other) => return Err(other),
                }
            }
            rep.result("witnesses", Value::Object(witnesses));
            rep.check("txr_is_one", verified);
        }
    }
    Ok(rep)
}

/// Reads a config file, runs the job and writes the JSON document to `out`
/// (or the config's `out`). Returns the outcome for printing.
pub fn run_file(kind: JobKind, config: &std::path::Path, out: Option<PathBuf>, seed: Option<u64>) -> Result<Outcome> {
    let cfg = JobConfig::from_json(&std::fs::read_to_string(config)?)?;
    let outcome = run(kind, &cfg, seed)?;
    if let Some(path) = out.or(cfg.out.clone()) {
        std::fs::write(path, outcome.to_json()?)?;
    }
    Ok(outcome)
}
