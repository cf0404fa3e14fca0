//! The certification driver.
//!
//! Every polynomial this crate produces can be computed along at least two
//! independent routes (tableau enumeration, determinants of one-row series,
//! divided differences, a Laurent-coefficient expansion, and a classical
//! determinant at `b = 0`).  [`run_certify`] sweeps configurable ranges of
//! shapes, permutations and series parameters, cross-checks the routes
//! pairwise, and returns a machine-readable [`CertifyReport`].
//!
//! The run is split into named [`Phase`]s.  Each phase counts its cases,
//! records the first counterexample (by minimal case index) together with a
//! command line that reproduces it, and reports its own wall-clock time.
//! Apart from the `wall_ms` fields, identical configurations produce
//! byte-identical reports: case enumeration is deterministic, randomized
//! checks are driven by a seeded generator, and parallel sweeps merge their
//! chunks in a fixed order.
//!
//! Resource control: [`CertifyConfig::max_cases`] bounds the total number of
//! checked cases across the whole run.  When the bound is hit the run stops
//! early and the report is marked incomplete (`complete = false`), which the
//! command-line tool maps to its resource-cap exit code.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::jacobi_trudi::{jt_determinant, jt_determinant_straight, laurent_expansion_eval};
use crate::onerow::{one_row_series, one_row_window};
use crate::oracle::{all_permutations, classical_flagged_determinant};
use crate::perm::{
    canonical_flagged_shape, diagram, essential_set, flagging_sets, grothendieck_polynomial,
    is_vexillary, monomial_formula, shape_lambda, Permutation,
};
use crate::poly::{Monomial, Polynomial, TruncationPolicy};
use crate::shape::{
    sub_partitions, validate_flagged, validate_skew, FlagMonotonicity, FlaggedShape, Partition,
    SkewFlaggedShape,
};
use crate::tableau::tableau_sum;

/// One named certification phase.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phase {
    /// Straight shapes: tableau sum vs. determinant, plus guard-band checks.
    Straight,
    /// Skew shapes: tableau sum vs. determinant, with hypothesis coverage
    /// counters for the four structural determinant identities.
    Skew,
    /// Vexillary permutations: divided differences vs. tableau sum of the
    /// canonical flagged shape.
    Vexillary,
    /// Divided differences applied to a dominant monomial vs. tableau sum.
    Monomial,
    /// The pinned example `w = 2,3,5,4,1`, checked end to end.
    Example,
    /// The one-row series lemma suite plus randomized operator identities.
    Lemmas,
    /// Both routes at `b = 0` against an independent classical determinant.
    BetaZero,
    /// The Laurent-coefficient expansion vs. the determinant.
    Laurent,
}

impl Phase {
    /// Every phase, in the canonical execution order.
    pub const ALL: [Phase; 8] = [
        Phase::Straight,
        Phase::Skew,
        Phase::Vexillary,
        Phase::Monomial,
        Phase::Example,
        Phase::Lemmas,
        Phase::BetaZero,
        Phase::Laurent,
    ];

    /// The stable kebab-case name used in reports and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Phase::Straight => "straight",
            Phase::Skew => "skew",
            Phase::Vexillary => "vexillary",
            Phase::Monomial => "monomial",
            Phase::Example => "example",
            Phase::Lemmas => "lemmas",
            Phase::BetaZero => "beta-zero",
            Phase::Laurent => "laurent",
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Phase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Phase::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Phase::ALL.iter().map(|p| p.name()).collect();
                format!(
                    "unknown phase `{s}` (expected one of: {})",
                    names.join(", ")
                )
            })
    }
}

/// Ranges and knobs for a certification run.
///
/// The defaults are the acceptance envelope: straight shapes in a 4x4 box
/// with flag entries up to 4, skew shapes in a 3x3 box with upper flags up
/// to 4 and lower flags up to one above the upper flag, permutations up to
/// `S_5`, the documented lemma parameter ranges, and 100 seeded random
/// operator-identity pairs.
#[derive(Clone, Debug, Serialize)]
pub struct CertifyConfig {
    /// Maximum rows of the box straight-shape partitions are drawn from.
    pub straight_rows: usize,
    /// Maximum columns of the straight-shape box.
    pub straight_cols: u32,
    /// Upper bound for straight flag entries.
    pub straight_flag_max: u32,
    /// Maximum rows of the skew-shape box.
    pub skew_rows: usize,
    /// Maximum columns of the skew-shape box.
    pub skew_cols: u32,
    /// Upper bound for skew upper-flag entries; lower flags range over
    /// `1 ..= f_i + 1`, filtered by shape validity.
    pub skew_flag_max: u32,
    /// Row cap for the Laurent-expansion phase (the expansion is the one
    /// deliberately naive route, so it sweeps a smaller family).
    pub laurent_rows: usize,
    /// Permutation phases cover all of `S_1 ..= S_n` for this `n`.
    pub perm_size: usize,
    /// Lemma identities are checked for every reported cap in
    /// `0 ..= lemma_cap_max`, with `guard` extra exact degrees.
    pub lemma_cap_max: u32,
    /// Inclusive range of the series index `m` in the lemma suite.
    pub lemma_m_min: i64,
    /// Inclusive upper end of the series index range.
    pub lemma_m_max: i64,
    /// Upper window ends `p` in the lemma suite run over `1 ..= lemma_p_max`.
    pub lemma_p_max: u32,
    /// Number of seeded random pairs for the operator-identity checks.
    pub random_pairs: u64,
    /// Seed for every randomized check in the run.
    pub seed: u64,
    /// Guard degrees carried above the reported cap in truncated phases.
    pub guard: u32,
    /// Report truncation override.  `None` keeps every shape exact at its
    /// own degree bound; `Some(cap)` compares the routes on the retained
    /// degrees only (guard-band vanishing is then asserted only for shapes
    /// whose bound fits under the cap).
    pub beta_cap: Option<u32>,
    /// Total case budget across all phases; exceeding it stops the run and
    /// marks the report incomplete.
    pub max_cases: Option<u64>,
    /// Phases to run, in order.
    pub phases: Vec<Phase>,
    /// When set, shape-driven phases only run cases with this outer shape.
    pub restrict_lambda: Option<Vec<u32>>,
    /// When set, shape-driven phases only run cases with this upper flag.
    pub restrict_upper: Option<Vec<u32>>,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            straight_rows: 4,
            straight_cols: 4,
            straight_flag_max: 4,
            skew_rows: 3,
            skew_cols: 3,
            skew_flag_max: 4,
            laurent_rows: 3,
            perm_size: 5,
            lemma_cap_max: 5,
            lemma_m_min: -3,
            lemma_m_max: 5,
            lemma_p_max: 4,
            random_pairs: 100,
            seed: 0,
            guard: 2,
            beta_cap: None,
            max_cases: None,
            phases: Phase::ALL.to_vec(),
            restrict_lambda: None,
            restrict_upper: None,
        }
    }
}

/// The first failing case of a phase.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    /// Zero-based index of the case within its phase.
    pub case: u64,
    /// What disagreed, with the concrete parameters.
    pub description: String,
    /// A command line that reproduces the failure.
    pub reproduce: String,
}

/// How often the skew sweep hit each structural-identity hypothesis.
///
/// A sweep that never exercises one of these would vacuously pass, so the
/// skew phase fails unless every counter is positive.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SkewCoverage {
    /// Rows `k` with `mu_k >= lambda_{k+1}`: the determinant factors into
    /// the two diagonal blocks.
    pub split_rows: u64,
    /// Rows satisfying the lower-flag recursion hypotheses (`g_k <= f_k`,
    /// `mu_k < lambda_k`, `g_k < g_{k+1}` or last row, `mu_{k-1} > mu_k` or
    /// first row).
    pub flag_recursion: u64,
    /// Adjacent rows with `g_{k-1} = g_k` and `mu_{k-1} = mu_k`, where
    /// bumping `g_k` leaves the polynomial unchanged.
    pub flag_bump: u64,
    /// Rows with `f_k < g_k` and `mu_k < lambda_k`, which force the whole
    /// polynomial to vanish.
    pub vanishing: u64,
}

impl SkewCoverage {
    fn merge(&mut self, other: &SkewCoverage) {
        self.split_rows += other.split_rows;
        self.flag_recursion += other.flag_recursion;
        self.flag_bump += other.flag_bump;
        self.vanishing += other.vanishing;
    }
}

/// Outcome of one phase.
#[derive(Clone, Debug, Serialize)]
pub struct PhaseReport {
    /// Which phase this is.
    pub phase: Phase,
    /// Number of cases actually checked.
    pub cases: u64,
    /// Number of failing cases.
    pub failures: u64,
    /// The failing case with the smallest index, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Counterexample>,
    /// Hypothesis coverage; present only for the skew phase.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coverage: Option<SkewCoverage>,
    /// False when the case budget ran out mid-phase.
    pub complete: bool,
    /// Wall-clock time of the phase in milliseconds.  This is the one field
    /// that varies between otherwise identical runs.
    pub wall_ms: u64,
}

/// The full result of a certification run.
#[derive(Clone, Debug, Serialize)]
pub struct CertifyReport {
    /// Echo of the ranges and knobs the run covered.
    pub config: CertifyConfig,
    /// Per-phase outcomes, in execution order.
    pub phases: Vec<PhaseReport>,
    /// Total checked cases.
    pub total_cases: u64,
    /// Total failing cases.
    pub total_failures: u64,
    /// True when no phase was cut short by the case budget.
    pub complete: bool,
    /// True when every checked case passed.
    pub passed: bool,
}

impl CertifyReport {
    /// Human-readable one-line-per-phase summary.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut lines: Vec<String> = self
            .phases
            .iter()
            .map(|p| {
                let verdict = if p.failures > 0 {
                    "FAIL"
                } else if !p.complete {
                    "INCOMPLETE"
                } else {
                    "ok"
                };
                let mut line = format!(
                    "{:<12} {:>8} cases  {:>3} failures  {:>8} ms  {}",
                    p.phase.name(),
                    p.cases,
                    p.failures,
                    p.wall_ms,
                    verdict
                );
                if let Some(ce) = &p.first_counterexample {
                    line.push_str(&format!(
                        "\n  first counterexample (case {}): {}\n  reproduce: {}",
                        ce.case, ce.description, ce.reproduce
                    ));
                }
                line
            })
            .collect();
        let verdict = match (self.passed, self.complete) {
            (true, true) => "PASSED",
            (true, false) => "INCOMPLETE (case budget exhausted; no failures so far)",
            (false, _) => "FAILED",
        };
        lines.push(format!(
            "total: {} cases, {} failures — {verdict}",
            self.total_cases, self.total_failures
        ));
        lines
    }
}

/// Per-chunk bookkeeping: cases, failures, the chunk-local first failure,
/// coverage counters, and (in budgeted runs) the remaining case allowance.
#[derive(Default)]
struct ChunkRecorder {
    cases: u64,
    failures: u64,
    first: Option<(u64, String, String)>,
    coverage: SkewCoverage,
    allowance: Option<u64>,
    capped: bool,
}

impl ChunkRecorder {
    fn with_allowance(allowance: Option<u64>) -> Self {
        ChunkRecorder {
            allowance,
            ..ChunkRecorder::default()
        }
    }

    /// Claims budget for one case.  Returns false (and flags the cap) when
    /// the allowance is exhausted; the chunk must then stop checking.
    fn admit(&mut self) -> bool {
        if let Some(left) = &mut self.allowance {
            if *left == 0 {
                self.capped = true;
                return false;
            }
            *left -= 1;
        }
        self.cases += 1;
        true
    }

    /// Records the outcome of the case most recently admitted.
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> (String, String)) {
        if ok {
            return;
        }
        self.failures += 1;
        if self.first.is_none() {
            let (description, reproduce) = describe();
            self.first = Some((self.cases - 1, description, reproduce));
        }
    }
}

/// Phase-level accumulator.  Chunks run in parallel when no case budget is
/// in force (their merge order is fixed, so reports stay deterministic) and
/// sequentially otherwise, so that budget truncation is reproducible.
struct Recorder {
    cases: u64,
    failures: u64,
    first: Option<Counterexample>,
    remaining: Option<u64>,
    capped: bool,
}

impl Recorder {
    fn new(remaining: Option<u64>) -> Self {
        Recorder {
            cases: 0,
            failures: 0,
            first: None,
            remaining,
            capped: false,
        }
    }

    fn run_chunks<C: Sync>(
        &mut self,
        chunks: &[C],
        run: impl Fn(&C, &mut ChunkRecorder) + Sync,
    ) -> SkewCoverage {
        let outcomes: Vec<ChunkRecorder> = if self.remaining.is_none() {
            chunks
                .par_iter()
                .map(|chunk| {
                    let mut rec = ChunkRecorder::default();
                    run(chunk, &mut rec);
                    rec
                })
                .collect()
        } else {
            let mut outcomes = Vec::with_capacity(chunks.len());
            for chunk in chunks {
                if self.remaining == Some(0) {
                    self.capped = true;
                    break;
                }
                let mut rec = ChunkRecorder::with_allowance(self.remaining);
                run(chunk, &mut rec);
                self.remaining = rec.allowance;
                outcomes.push(rec);
            }
            outcomes
        };
        let mut coverage = SkewCoverage::default();
        for rec in outcomes {
            if self.first.is_none() {
                if let Some((offset, description, reproduce)) = rec.first {
                    self.first = Some(Counterexample {
                        case: self.cases + offset,
                        description,
                        reproduce,
                    });
                }
            }
            self.cases += rec.cases;
            self.failures += rec.failures;
            self.capped |= rec.capped;
            coverage.merge(&rec.coverage);
        }
        coverage
    }

    fn finish(
        self,
        phase: Phase,
        coverage: Option<SkewCoverage>,
        started: Instant,
    ) -> (PhaseReport, Option<u64>) {
        let report = PhaseReport {
            phase,
            cases: self.cases,
            failures: self.failures,
            first_counterexample: self.first,
            coverage,
            complete: !self.capped,
            wall_ms: started.elapsed().as_millis() as u64,
        };
        (report, self.remaining)
    }
}

/// Runs the configured phases and assembles the report.
pub fn run_certify(config: &CertifyConfig) -> CertifyReport {
    let mut remaining = config.max_cases;
    let mut phases = Vec::with_capacity(config.phases.len());
    for &phase in &config.phases {
        let started = Instant::now();
        let mut rec = Recorder::new(remaining);
        let coverage = match phase {
            Phase::Straight => {
                phase_straight(config, &mut rec);
                None
            }
            Phase::Skew => Some(phase_skew(config, &mut rec)),
            Phase::Vexillary => {
                phase_vexillary(config, &mut rec);
                None
            }
            Phase::Monomial => {
                phase_monomial(config, &mut rec);
                None
            }
            Phase::Example => {
                phase_example(&mut rec);
                None
            }
            Phase::Lemmas => {
                phase_lemmas(config, &mut rec);
                None
            }
            Phase::BetaZero => {
                phase_beta_zero(config, &mut rec);
                None
            }
            Phase::Laurent => {
                phase_laurent(config, &mut rec);
                None
            }
        };
        let (report, rest) = rec.finish(phase, coverage, started);
        remaining = rest;
        phases.push(report);
    }
    let total_cases = phases.iter().map(|p| p.cases).sum();
    let total_failures = phases.iter().map(|p| p.failures).sum();
    let complete = phases.iter().all(|p| p.complete);
    CertifyReport {
        config: config.clone(),
        phases,
        total_cases,
        total_failures,
        complete,
        passed: total_failures == 0,
    }
}

// ---------------------------------------------------------------------------
// Case enumeration helpers.

/// All weakly increasing tuples of length `r` with entries in `1..=max`.
fn increasing_flags(r: usize, max: u32) -> Vec<Vec<u32>> {
    fn extend(r: usize, lo: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in lo..=max {
            cur.push(v);
            extend(r, v, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(r, 1, max, &mut Vec::with_capacity(r), &mut out);
    out
}

/// All tuples of length `r` whose `i`-th entry lies in `1..=max(i)`.
fn bounded_tuples(r: usize, max: impl Fn(usize) -> u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for i in 0..r {
        let hi = max(i);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=hi).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// Straight-shape case family: each chunk is one partition together with its
/// admissible flags (filtered by shape validity and any restriction).
fn straight_family(config: &CertifyConfig, max_rows: usize) -> Vec<(Partition, Vec<Vec<u32>>)> {
    let mut chunks = Vec::new();
    for lambda in Partition::enumerate_in_box(max_rows, config.straight_cols) {
        if let Some(want) = &config.restrict_lambda {
            if lambda.parts() != &want[..] {
                continue;
            }
        }
        let flags: Vec<Vec<u32>> = increasing_flags(lambda.len(), config.straight_flag_max)
            .into_iter()
            .filter(|f| validate_flagged(&lambda, f).is_ok())
            .filter(|f| config.restrict_upper.as_ref().is_none_or(|want| f == want))
            .collect();
        if !flags.is_empty() {
            chunks.push((lambda, flags));
        }
    }
    chunks
}

fn fmt_list(values: &[u32]) -> String {
    if values.is_empty() {
        "0".to_string()
    } else {
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// `compute` invocation reproducing a straight or skew comparison case.
fn reproduce_compute(
    lambda: &Partition,
    mu: Option<&[u32]>,
    upper: &[u32],
    lower: Option<&[u32]>,
    config: &CertifyConfig,
) -> String {
    let mut cmd = format!(
        "flagged-groth compute --lambda {}",
        fmt_list(lambda.parts())
    );
    if let Some(mu) = mu {
        cmd.push_str(&format!(" --mu {}", fmt_list(mu)));
    }
    cmd.push_str(&format!(" --f {}", fmt_list(upper)));
    if let Some(lower) = lower {
        cmd.push_str(&format!(" --g {}", fmt_list(lower)));
    }
    cmd.push_str(" --method both");
    if let Some(cap) = config.beta_cap {
        cmd.push_str(&format!(" --beta-cap {cap}"));
    }
    cmd.push_str(&format!(" --guard {}", config.guard));
    cmd
}

/// `certify` invocation rerunning one phase restricted to a single shape.
fn reproduce_certify(phase: Phase, lambda: &Partition, upper: &[u32]) -> String {
    format!(
        "flagged-groth certify --phase {} --lambda {} --f {}",
        phase.name(),
        fmt_list(lambda.parts()),
        fmt_list(upper)
    )
}

// ---------------------------------------------------------------------------
// Phases.

/// Tableau sum vs. determinant on every straight shape in range, including
/// the vanishing of the guard band above the degree bound.
fn phase_straight(config: &CertifyConfig, rec: &mut Recorder) {
    let chunks = straight_family(config, config.straight_rows);
    rec.run_chunks(&chunks, |(lambda, flags), rec| {
        for flag in flags {
            if !rec.admit() {
                return;
            }
            let shape = FlaggedShape::new(lambda.clone(), flag.clone())
                .expect("enumerated straight shapes are valid");
            let skew = shape.to_skew();
            let bound = skew.beta_degree_bound();
            let cap = config.beta_cap.unwrap_or(bound);
            let policy = TruncationPolicy::new(cap, config.guard);
            let det = jt_determinant_straight(&shape, &policy);
            let tableaux = tableau_sum(&skew);
            let agree = det.value == tableaux.truncate_beta(cap);
            let guard_clean = cap < bound || det.guard_band.is_zero();
            rec.check(agree && guard_clean, || {
                let what = if !agree {
                    "tableau and determinant routes disagree"
                } else {
                    "determinant guard band above the degree bound is nonzero"
                };
                (
                    format!("{what} for {shape} at beta cap {cap}"),
                    reproduce_compute(lambda, None, flag, None, config),
                )
            });
        }
    });
}

/// Tableau sum vs. determinant on every skew shape in range, with coverage
/// counters ensuring the sweep exercises all four structural identities.
fn phase_skew(config: &CertifyConfig, rec: &mut Recorder) -> SkewCoverage {
    let mut chunks: Vec<(Partition, Vec<u32>)> = Vec::new();
    for lambda in Partition::enumerate_in_box(config.skew_rows, config.skew_cols) {
        if let Some(want) = &config.restrict_lambda {
            if lambda.parts() != &want[..] {
                continue;
            }
        }
        for mu in sub_partitions(&lambda) {
            chunks.push((lambda.clone(), mu));
        }
    }
    let coverage = rec.run_chunks(&chunks, |(lambda, mu), rec| {
        let r = lambda.len();
        for upper in bounded_tuples(r, |_| config.skew_flag_max) {
            if let Some(want) = &config.restrict_upper {
                if &upper != want {
                    continue;
                }
            }
            for lower in bounded_tuples(r, |i| upper[i] + 1) {
                if validate_skew(lambda, mu, &upper, &lower, FlagMonotonicity::default()).is_err() {
                    continue;
                }
                if !rec.admit() {
                    return;
                }
                mark_coverage(&mut rec.coverage, lambda, mu, &upper, &lower);
                let shape =
                    SkewFlaggedShape::new(lambda.clone(), mu.clone(), upper.clone(), lower.clone())
                        .expect("validated skew shapes construct");
                let bound = shape.beta_degree_bound();
                let cap = config.beta_cap.unwrap_or(bound);
                let policy = TruncationPolicy::new(cap, config.guard);
                let det = jt_determinant(&shape, &policy);
                let tableaux = tableau_sum(&shape);
                let agree = det.value == tableaux.truncate_beta(cap);
                let guard_clean = cap < bound || det.guard_band.is_zero();
                rec.check(agree && guard_clean, || {
                    let what = if !agree {
                        "tableau and determinant routes disagree"
                    } else {
                        "determinant guard band above the degree bound is nonzero"
                    };
                    (
                        format!("{what} for {shape} at beta cap {cap}"),
                        reproduce_compute(lambda, Some(mu), &upper, Some(&lower), config),
                    )
                });
            }
        }
    });

    // A sweep that misses one of the structural hypotheses proves nothing
    // about the corresponding identity, so require every counter to be hit.
    let checks = [
        ("split rows (mu_k >= lambda_{k+1})", coverage.split_rows),
        (
            "the lower-flag recursion hypotheses",
            coverage.flag_recursion,
        ),
        ("a bumpable repeated lower flag", coverage.flag_bump),
        (
            "a vanishing row (f_k < g_k with mu_k < lambda_k)",
            coverage.vanishing,
        ),
    ];
    rec.run_chunks(&[()], |_, rec| {
        for (what, hits) in &checks {
            if !rec.admit() {
                return;
            }
            rec.check(*hits > 0, || {
                (
                    format!("the skew sweep never produced a case with {what}"),
                    "flagged-groth certify --phase skew".to_string(),
                )
            });
        }
    });
    coverage
}

fn mark_coverage(
    coverage: &mut SkewCoverage,
    lambda: &Partition,
    mu: &[u32],
    upper: &[u32],
    lower: &[u32],
) {
    let r = lambda.len();
    if (1..r).any(|k| mu[k - 1] >= lambda.part(k + 1)) {
        coverage.split_rows += 1;
    }
    let recursion = (1..=r).any(|k| {
        lower[k - 1] <= upper[k - 1]
            && mu[k - 1] < lambda.part(k)
            && (k == r || lower[k - 1] < lower[k])
            && (k == 1 || mu[k - 2] > mu[k - 1])
    });
    if recursion {
        coverage.flag_recursion += 1;
    }
    if (2..=r).any(|k| lower[k - 2] == lower[k - 1] && mu[k - 2] == mu[k - 1]) {
        coverage.flag_bump += 1;
    }
    if (1..=r).any(|k| upper[k - 1] < lower[k - 1] && mu[k - 1] < lambda.part(k)) {
        coverage.vanishing += 1;
    }
}

/// Divided-difference recursion vs. tableau sum of the canonical flagged
/// shape, over every vexillary permutation in range.  Both sides are exact
/// polynomials, so the comparison needs no truncation.
fn phase_vexillary(config: &CertifyConfig, rec: &mut Recorder) {
    let sizes: Vec<usize> = (1..=config.perm_size).collect();
    rec.run_chunks(&sizes, |&n, rec| {
        for word in all_permutations(n) {
            let w = Permutation::new(word).expect("enumerated words are bijections");
            if !is_vexillary(&w) {
                continue;
            }
            if !rec.admit() {
                return;
            }
            let shape = canonical_flagged_shape(&w);
            let by_tableaux = tableau_sum(&shape.to_skew());
            let by_differences = grothendieck_polynomial(&w);
            rec.check(by_differences == by_tableaux, || {
                (
                    format!("divided-difference and tableau routes disagree for w = {w}"),
                    format!("flagged-groth grothendieck --perm {w} --verify"),
                )
            });
        }
    });
}

/// Divided differences applied to the dominant monomial vs. tableau sum,
/// over the straight family.  Exact comparison.
fn phase_monomial(config: &CertifyConfig, rec: &mut Recorder) {
    let chunks = straight_family(config, config.straight_rows);
    rec.run_chunks(&chunks, |(lambda, flags), rec| {
        for flag in flags {
            if !rec.admit() {
                return;
            }
            let shape = FlaggedShape::new(lambda.clone(), flag.clone())
                .expect("enumerated straight shapes are valid");
            let formula = monomial_formula(&shape);
            let by_word = formula.evaluate();
            let by_tableaux = tableau_sum(&shape.to_skew());
            rec.check(by_word == by_tableaux, || {
                (
                    format!("dominant-monomial and tableau routes disagree for {shape}"),
                    reproduce_certify(Phase::Monomial, lambda, flag),
                )
            });
        }
    });
}

/// The pinned example w = 2,3,5,4,1, checked end to end.
fn phase_example(rec: &mut Recorder) {
    let reproduce = || {
        "flagged-groth grothendieck --perm 2,3,5,4,1 --show-diagram --show-essential \
         --show-flaggings --verify"
            .to_string()
    };
    rec.run_chunks(&[()], |_, rec| {
        let w = Permutation::new(vec![2, 3, 5, 4, 1]).expect("pinned example word");

        if !rec.admit() {
            return;
        }
        let boxes: Vec<(u32, u32)> = diagram(&w).iter().map(|b| (b.row, b.col)).collect();
        rec.check(boxes == [(1, 1), (2, 1), (3, 1), (3, 4), (4, 1)], || {
            (
                format!("diagram of w = {w} is {boxes:?}, not the pinned five boxes"),
                reproduce(),
            )
        });

        if !rec.admit() {
            return;
        }
        let essential: Vec<(u32, u32)> = essential_set(&w).iter().map(|b| (b.row, b.col)).collect();
        rec.check(essential == [(3, 4), (4, 1)], || {
            (
                format!("essential set of w = {w} is {essential:?}, not {{(3,4), (4,1)}}"),
                reproduce(),
            )
        });

        if !rec.admit() {
            return;
        }
        let lambda = shape_lambda(&w);
        rec.check(lambda.parts() == [2, 1, 1, 1], || {
            (
                format!("shape of w = {w} is {lambda}, not (2,1,1,1)"),
                reproduce(),
            )
        });

        if !rec.admit() {
            return;
        }
        let flags: Vec<Vec<u32>> = flagging_sets(&w).iter().map(|fs| fs.flag()).collect();
        let pinned: [&[u32]; 3] = [&[3, 3, 3, 4], &[3, 3, 4, 4], &[3, 4, 4, 4]];
        rec.check(flags == pinned, || {
            (
                format!("flaggings of w = {w} are {flags:?}, not the pinned three"),
                reproduce(),
            )
        });

        if !rec.admit() {
            return;
        }
        let sums: Vec<Polynomial> = flagging_sets(&w)
            .iter()
            .map(|fs| {
                let shape = FlaggedShape::new(shape_lambda(&w), fs.flag())
                    .expect("flaggings of the example are valid flags");
                tableau_sum(&shape.to_skew())
            })
            .collect();
        rec.check(sums.windows(2).all(|pair| pair[0] == pair[1]), || {
            (
                format!("the flaggings of w = {w} give different tableau sums"),
                reproduce(),
            )
        });

        if !rec.admit() {
            return;
        }
        let agree = sums
            .first()
            .is_some_and(|sum| *sum == grothendieck_polynomial(&w));
        rec.check(agree, || {
            (
                format!("tableau sums for w = {w} do not match the divided-difference route"),
                reproduce(),
            )
        });
    });
}

/// The one-row series lemma suite: the generating-function oracle, the two
/// cleared-denominator window-narrowing identities, the divided-difference
/// lowering lemmas, the first-variable extraction identity, and seeded
/// random operator-identity pairs (Leibniz, squares, commutation, braid).
fn phase_lemmas(config: &CertifyConfig, rec: &mut Recorder) {
    #[derive(Clone, Copy)]
    enum Suite {
        SeriesOracle,
        WindowShifts,
        Lowering,
        SymmetricCofactor,
        Extraction,
        RandomPairs,
    }
    let suites = [
        Suite::SeriesOracle,
        Suite::WindowShifts,
        Suite::Lowering,
        Suite::SymmetricCofactor,
        Suite::Extraction,
        Suite::RandomPairs,
    ];
    let reproduce = || {
        format!(
            "flagged-groth certify --phase lemmas --seed {}",
            config.seed
        )
    };
    let ms = config.lemma_m_min..=config.lemma_m_max;
    let b = Polynomial::beta;
    let x = Polynomial::var;

    rec.run_chunks(&suites, |suite, rec| match suite {
        // The recurrence-computed window coefficients must match the
        // truncated generating-function expansion exactly.
        Suite::SeriesOracle => {
            for cap in 0..=config.lemma_cap_max {
                let budget = cap + config.guard;
                for p in 1..=config.lemma_p_max {
                    for q in 1..=p + 1 {
                        for m in ms.clone() {
                            if !rec.admit() {
                                return;
                            }
                            let fast = one_row_window(m, p, q, budget);
                            let oracle = one_row_series(m, p, q, budget);
                            rec.check(fast == oracle, || {
                                (
                                    format!(
                                        "recurrence and generating-function oracle disagree \
                                         at m={m} p={p} q={q} budget={budget}"
                                    ),
                                    format!(
                                        "flagged-groth onerow --m {m} --p {p} --q {q} \
                                         --beta-cap {cap} --guard {}",
                                        config.guard
                                    ),
                                )
                            });
                        }
                    }
                }
            }
        }
        // Both cleared-denominator forms of the window-narrowing identity:
        //   (1+b*x_q)(G_{m-1}^{[p/q]} + b*G_m^{[p/q+1]}) = G_{m-1}^{[p/q]} + b*G_m^{[p/q]}
        //   (1+b*x_q)(G_m^{[p/q]} - G_m^{[p/q+1]}) = x_q(G_{m-1}^{[p/q]} + b*G_m^{[p/q]})
        Suite::WindowShifts => {
            for cap in 0..=config.lemma_cap_max {
                let budget = cap + config.guard;
                for p in 1..=config.lemma_p_max {
                    for q in 1..=p {
                        for m in ms.clone() {
                            if !rec.admit() {
                                return;
                            }
                            let xq = x(q as usize);
                            let one_plus_bxq = Polynomial::one().add(&b().mul(&xq));
                            let window = |m: i64, q: u32| one_row_window(m, p, q, budget);
                            let common = window(m - 1, q).add(&b().mul(&window(m, q)));
                            let shifted = one_plus_bxq
                                .mul(&window(m - 1, q).add(&b().mul(&window(m, q + 1))));
                            let narrowed = one_plus_bxq.mul(&window(m, q).sub(&window(m, q + 1)));
                            let ok = shifted.eq_modulo_beta(&common, cap)
                                && narrowed.eq_modulo_beta(&xq.mul(&common), cap);
                            rec.check(ok, || {
                                (
                                    format!(
                                        "a window-narrowing identity fails at m={m} p={p} \
                                         q={q} cap={cap}"
                                    ),
                                    reproduce(),
                                )
                            });
                        }
                    }
                }
            }
        }
        // pi_p lowers the series and widens the window; every other pi_i
        // acts by -b.
        Suite::Lowering => {
            for cap in 0..=config.lemma_cap_max {
                let budget = cap + config.guard;
                for p in 1..=config.lemma_p_max {
                    for m in ms.clone() {
                        let g = one_row_window(m, p, 1, budget);
                        for i in 1..=(p + 1) as usize {
                            if !rec.admit() {
                                return;
                            }
                            let acted = g.divided_difference(i);
                            let want = if i == p as usize {
                                one_row_window(m - 1, p + 1, 1, budget)
                            } else {
                                g.mul(&b()).negate()
                            };
                            rec.check(acted.eq_modulo_beta(&want, cap), || {
                                (
                                    format!(
                                        "divided difference pi_{i} acts wrongly on the \
                                         one-row series at m={m} p={p} cap={cap}"
                                    ),
                                    reproduce(),
                                )
                            });
                        }
                    }
                }
            }
        }
        // pi_p(G_m^{[p]} f) = G_{m-1}^{[p+1]} f for cofactors f symmetric in
        // x_p, x_{p+1}; the cofactors are seeded-random symmetrizations.
        Suite::SymmetricCofactor => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(1));
            for cap in 0..=config.lemma_cap_max {
                let budget = cap + config.guard;
                for p in 1..=config.lemma_p_max {
                    let pu = p as usize;
                    for m in ms.clone() {
                        for _ in 0..2 {
                            if !rec.admit() {
                                return;
                            }
                            let half = random_polynomial(&mut rng, pu + 1, 3);
                            let cofactor = half.add(&half.transpose(pu));
                            let lhs = one_row_window(m, p, 1, budget)
                                .mul(&cofactor)
                                .divided_difference(pu);
                            let rhs = one_row_window(m - 1, p + 1, 1, budget).mul(&cofactor);
                            rec.check(lhs.eq_modulo_beta(&rhs, cap), || {
                                (
                                    format!(
                                        "the symmetric-cofactor lemma fails at m={m} p={p} \
                                         cap={cap} with cofactor {cofactor}"
                                    ),
                                    reproduce(),
                                )
                            });
                        }
                    }
                }
            }
        }
        // (1+b*x1) G_m - x1 G_{m-1} - b*x1 G_m = (1+b*x1)(G_m at x1=0).
        Suite::Extraction => {
            for cap in 0..=config.lemma_cap_max {
                let budget = cap + config.guard;
                for p in 1..=config.lemma_p_max {
                    for m in ms.clone() {
                        if !rec.admit() {
                            return;
                        }
                        let g = one_row_window(m, p, 1, budget);
                        let g_prev = one_row_window(m - 1, p, 1, budget);
                        let one_plus_bx1 = Polynomial::one().add(&b().mul(&x(1)));
                        let lhs = one_plus_bx1
                            .mul(&g)
                            .sub(&x(1).mul(&g_prev))
                            .sub(&x(1).mul(&b()).mul(&g));
                        let rhs = one_plus_bx1.mul(&g.substitute_zero(1));
                        rec.check(lhs.eq_modulo_beta(&rhs, cap), || {
                            (
                                format!(
                                    "the first-variable extraction identity fails at m={m} \
                                     p={p} cap={cap}"
                                ),
                                reproduce(),
                            )
                        });
                    }
                }
            }
        }
        // Exact operator identities on random polynomials: the twisted
        // Leibniz rule, pi_i^2 = -b pi_i, commutation, and the braid
        // relation.
        Suite::RandomPairs => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(2));
            for _ in 0..config.random_pairs {
                if !rec.admit() {
                    return;
                }
                let f = random_polynomial(&mut rng, 4, 4);
                let g = random_polynomial(&mut rng, 4, 4);
                let i = rng.gen_range(1..=3usize);
                let j = i + 2;

                let leibniz = f.mul(&g).divided_difference(i);
                let si_f = f.transpose(i);
                let expanded = f
                    .divided_difference(i)
                    .mul(&g)
                    .add(&si_f.mul(&g.divided_difference(i)))
                    .add(&b().mul(&si_f).mul(&g));
                let square = f.divided_difference(i).divided_difference(i);
                let square_want = f.divided_difference(i).mul(&b()).negate();
                let commute = f.divided_difference(i).divided_difference(j)
                    == f.divided_difference(j).divided_difference(i);
                let braid = f
                    .divided_difference(i)
                    .divided_difference(i + 1)
                    .divided_difference(i)
                    == f.divided_difference(i + 1)
                        .divided_difference(i)
                        .divided_difference(i + 1);
                let ok = leibniz == expanded && square == square_want && commute && braid;
                rec.check(ok, || {
                    let what = if leibniz != expanded {
                        "the Leibniz rule"
                    } else if square != square_want {
                        "the square relation"
                    } else if !commute {
                        "the commutation relation"
                    } else {
                        "the braid relation"
                    };
                    (
                        format!("{what} fails at pi_{i} on f = {f}, g = {g}"),
                        reproduce(),
                    )
                });
            }
        }
    });
}

/// Both routes specialized at `b = 0` against an independently computed
/// classical flagged determinant, over the straight family.
fn phase_beta_zero(config: &CertifyConfig, rec: &mut Recorder) {
    let chunks = straight_family(config, config.straight_rows);
    rec.run_chunks(&chunks, |(lambda, flags), rec| {
        for flag in flags {
            if !rec.admit() {
                return;
            }
            let shape = FlaggedShape::new(lambda.clone(), flag.clone())
                .expect("enumerated straight shapes are valid");
            let skew = shape.to_skew();
            let cap = config.beta_cap.unwrap_or_else(|| skew.beta_degree_bound());
            let policy = TruncationPolicy::new(cap, config.guard);
            let classical = classical_flagged_determinant(&shape);
            let tableaux = tableau_sum(&skew).specialize_beta_zero();
            let determinant = jt_determinant_straight(&shape, &policy)
                .value
                .specialize_beta_zero();
            let tableaux_ok = tableaux == classical;
            let determinant_ok = determinant == classical;
            rec.check(tableaux_ok && determinant_ok, || {
                let what = if !tableaux_ok {
                    "the tableau route"
                } else {
                    "the determinant route"
                };
                (
                    format!("{what} disagrees with the classical determinant at b=0 for {shape}"),
                    reproduce_certify(Phase::BetaZero, lambda, flag),
                )
            });
        }
    });
}

/// The Laurent-coefficient expansion vs. the determinant on the retained
/// degrees, over straight shapes with few rows (the expansion is the
/// deliberately naive cross-check and scales worst).
fn phase_laurent(config: &CertifyConfig, rec: &mut Recorder) {
    let max_rows = config.laurent_rows.min(config.straight_rows);
    let chunks = straight_family(config, max_rows);
    rec.run_chunks(&chunks, |(lambda, flags), rec| {
        for flag in flags {
            if !rec.admit() {
                return;
            }
            let shape = FlaggedShape::new(lambda.clone(), flag.clone())
                .expect("enumerated straight shapes are valid");
            let cap = config
                .beta_cap
                .unwrap_or_else(|| shape.to_skew().beta_degree_bound());
            let policy = TruncationPolicy::new(cap, config.guard);
            let expanded = laurent_expansion_eval(&shape, &policy).truncate_beta(cap);
            let determinant = jt_determinant_straight(&shape, &policy).value;
            rec.check(expanded == determinant, || {
                (
                    format!(
                        "Laurent expansion and determinant disagree for {shape} at beta cap {cap}"
                    ),
                    reproduce_certify(Phase::Laurent, lambda, flag),
                )
            });
        }
    });
}

/// A small dense random polynomial in `vars` variables: `terms` monomials
/// with x-exponents up to 2, `b`-exponent up to 2 and nonzero coefficients
/// in `-4..=4`.  Terms may collide or cancel; that is fine for identity
/// checking.
fn random_polynomial(rng: &mut ChaCha8Rng, vars: usize, terms: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for _ in 0..terms {
        let beta = rng.gen_range(0..=2u32);
        let exps: Vec<u16> = (0..vars).map(|_| rng.gen_range(0..=2u16)).collect();
        let coeff = loop {
            let c = rng.gen_range(-4..=4i64);
            if c != 0 {
                break c;
            }
        };
        out = out.add(&Polynomial::monomial(Monomial::new(beta, &exps), coeff));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A configuration small enough for unit tests but still touching every
    /// phase's machinery.
    fn tiny() -> CertifyConfig {
        CertifyConfig {
            straight_rows: 2,
            straight_cols: 2,
            straight_flag_max: 2,
            skew_rows: 2,
            skew_cols: 2,
            skew_flag_max: 2,
            laurent_rows: 2,
            perm_size: 3,
            lemma_cap_max: 2,
            lemma_m_min: -2,
            lemma_m_max: 3,
            lemma_p_max: 2,
            random_pairs: 8,
            seed: 7,
            ..CertifyConfig::default()
        }
    }

    fn zero_wall(report: &mut CertifyReport) {
        for phase in &mut report.phases {
            phase.wall_ms = 0;
        }
    }

    #[test]
    fn tiny_run_passes_and_is_deterministic() {
        let config = tiny();
        let mut first = run_certify(&config);
        let mut second = run_certify(&config);
        assert!(first.passed, "{:#?}", first.phases);
        assert!(first.complete);
        assert_eq!(first.phases.len(), 8);
        assert!(first.phases.iter().all(|p| p.cases > 0));
        zero_wall(&mut first);
        zero_wall(&mut second);
        assert_eq!(
            serde_json::to_string(&first).unwrap(),
            serde_json::to_string(&second).unwrap()
        );
    }

    #[test]
    fn tiny_skew_range_covers_all_four_hypotheses() {
        let mut config = tiny();
        config.phases = vec![Phase::Skew];
        let report = run_certify(&config);
        let coverage = report.phases[0]
            .coverage
            .expect("skew phase reports coverage");
        assert!(coverage.split_rows > 0);
        assert!(coverage.flag_recursion > 0);
        assert!(coverage.flag_bump > 0);
        assert!(coverage.vanishing > 0);
        assert!(report.passed, "{:#?}", report.phases);
    }

    #[test]
    fn case_budget_marks_the_report_incomplete() {
        let mut config = tiny();
        config.max_cases = Some(7);
        let report = run_certify(&config);
        assert_eq!(report.total_cases, 7);
        assert!(!report.complete);
        assert!(report.passed, "the seven checked cases should still pass");
        assert!(!report.phases[0].complete);
    }

    #[test]
    fn restriction_pins_a_single_shape() {
        let mut config = tiny();
        config.straight_rows = 4;
        config.straight_cols = 4;
        config.straight_flag_max = 4;
        config.restrict_lambda = Some(vec![2, 1]);
        config.restrict_upper = Some(vec![2, 4]);
        config.phases = vec![
            Phase::Straight,
            Phase::Monomial,
            Phase::BetaZero,
            Phase::Laurent,
        ];
        let report = run_certify(&config);
        assert!(report.passed, "{:#?}", report.phases);
        for phase in &report.phases {
            assert_eq!(
                phase.cases, 1,
                "{} should check exactly one shape",
                phase.phase
            );
        }
    }

    #[test]
    fn phase_names_round_trip() {
        for phase in Phase::ALL {
            assert_eq!(phase.name().parse::<Phase>().unwrap(), phase);
        }
        assert!("determinant".parse::<Phase>().is_err());
    }

    #[test]
    fn selected_phases_run_in_the_requested_order() {
        let mut config = tiny();
        config.phases = vec![Phase::Example, Phase::Vexillary];
        let report = run_certify(&config);
        assert_eq!(report.phases.len(), 2);
        assert_eq!(report.phases[0].phase, Phase::Example);
        assert_eq!(report.phases[1].phase, Phase::Vexillary);
        assert!(report.passed);
    }

    #[test]
    fn summary_lines_name_every_phase_and_the_verdict() {
        let mut config = tiny();
        config.phases = vec![Phase::Example];
        let report = run_certify(&config);
        let lines = report.summary_lines();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].contains("example"));
        assert!(lines[1].contains("PASSED"));
    }
}
