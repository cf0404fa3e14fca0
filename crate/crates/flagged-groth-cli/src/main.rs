//! Command-line surface for the flagged Grothendieck polynomial library.
//!
//! Subcommands: `compute` (one polynomial by one or both routes),
//! `tableaux` (enumerate fillings or their weighted sum), `onerow` (one
//! windowed series coefficient), `grothendieck` (permutation inspection and
//! the vexillary cross-check), and `certify` (the full cross-checking
//! driver).
//!
//! Exit codes: 0 success, 1 mathematical mismatch, 2 invalid input,
//! 3 resource cap exceeded.  Identical invocations produce byte-identical
//! JSON output, except for the wall-clock fields of `certify` reports.

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use flagged_groth::certify::{run_certify, CertifyConfig, CertifyReport, Phase};
use flagged_groth::jacobi_trudi::{jt_determinant, DeterminantResult};
use flagged_groth::onerow::one_row_window;
use flagged_groth::perm::{
    diagram, essential_set, flagging_sets, grothendieck_polynomial, is_vexillary, shape_lambda,
    Permutation,
};
use flagged_groth::poly::{Polynomial, TruncationPolicy};
use flagged_groth::shape::{Partition, SkewFlaggedShape};
use flagged_groth::tableau::{enumerate, tableau_sum};

#[derive(Parser)]
#[command(
    name = "flagged-groth",
    version,
    about = "Exact flagged and flagged-skew Grothendieck polynomials, with cross-checking",
    propagate_version = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Highest reported b-degree.  Defaults to each shape's exact degree
    /// bound, making the output a plain polynomial identity.
    #[arg(long, global = true)]
    beta_cap: Option<u32>,
    /// Extra exactly-computed b-degrees above the cap, used to certify that
    /// truncated results are exact polynomials.
    #[arg(long, global = true, default_value_t = 2)]
    guard: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Tableaux,
    Determinant,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Tableaux => "tableaux",
            Method::Determinant => "determinant",
            Method::Both => "both",
        }
    }
}

/// Comma-separated list of nonnegative integers; `0` or the empty string
/// denote the empty list.
#[derive(Clone, Debug)]
struct PartList(Vec<u32>);

impl FromStr for PartList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(PartList(Vec::new()));
        }
        s.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("`{tok}` is not a nonnegative integer"))
            })
            .collect::<Result<Vec<u32>, _>>()
            .map(PartList)
    }
}

#[derive(Args)]
struct ShapeArgs {
    /// Outer shape, e.g. `2,1` (use `0` for the empty shape).
    #[arg(long)]
    lambda: PartList,
    /// Inner shape; defaults to the empty shape.
    #[arg(long)]
    mu: Option<PartList>,
    /// Upper flag (per-row largest allowed entry), e.g. `2,4`.
    #[arg(long)]
    f: PartList,
    /// Lower flag (per-row smallest allowed entry); defaults to all ones.
    #[arg(long)]
    g: Option<PartList>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one flagged (skew) polynomial by one or both routes.
    Compute {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Which route(s) to run; `both` exits nonzero on any mismatch.
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Enumerate the flagged set-valued tableaux of a shape, or sum them.
    Tableaux {
        #[command(flatten)]
        shape: ShapeArgs,
        /// List every tableau instead of summing.
        #[arg(long, conflicts_with = "sum")]
        list: bool,
        /// Print the weighted sum (the default).
        #[arg(long)]
        sum: bool,
    },
    /// One windowed one-row series coefficient.
    Onerow {
        /// Series index (may be negative).
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        /// Upper end of the variable window.
        #[arg(long)]
        p: u32,
        /// Lower end of the variable window.
        #[arg(long, default_value_t = 1)]
        q: u32,
    },
    /// Inspect a permutation: diagram, essential set, flaggings, and its
    /// Grothendieck polynomial.
    Grothendieck {
        /// One-line permutation word, e.g. `2,3,5,4,1`.
        #[arg(long)]
        perm: PartList,
        /// Print the diagram boxes.
        #[arg(long)]
        show_diagram: bool,
        /// Print the essential set.
        #[arg(long)]
        show_essential: bool,
        /// Print every admissible flagging (vexillary permutations only).
        #[arg(long)]
        show_flaggings: bool,
        /// Cross-check the polynomial against the tableau sums of every
        /// flagging (vexillary permutations only).
        #[arg(long)]
        verify: bool,
    },
    /// Cross-check every computation route over configured ranges.
    Certify {
        /// Phase to run (repeatable); defaults to all phases.
        #[arg(long = "phase", value_parser = parse_phase)]
        phases: Vec<Phase>,
        /// Seed for the randomized identity checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stop after this many cases and mark the report incomplete.
        #[arg(long)]
        max_cases: Option<u64>,
        /// Restrict shape-driven phases to this outer shape.
        #[arg(long)]
        lambda: Option<PartList>,
        /// Restrict shape-driven phases to this upper flag.
        #[arg(long)]
        f: Option<PartList>,
        /// Straight shapes range over partitions in a box with this many rows.
        #[arg(long)]
        straight_rows: Option<usize>,
        /// ... and this many columns.
        #[arg(long)]
        straight_cols: Option<u32>,
        /// Straight flag entries range up to this bound.
        #[arg(long)]
        straight_flag_max: Option<u32>,
        /// Skew shapes range over partitions in a box with this many rows.
        #[arg(long)]
        skew_rows: Option<usize>,
        /// ... and this many columns.
        #[arg(long)]
        skew_cols: Option<u32>,
        /// Skew upper-flag entries range up to this bound.
        #[arg(long)]
        skew_flag_max: Option<u32>,
        /// Row cap for the Laurent-expansion phase.
        #[arg(long)]
        laurent_rows: Option<usize>,
        /// Permutation phases cover S_1 through S_n for this n.
        #[arg(long)]
        perm_size: Option<usize>,
        /// Lemma identities run for every cap up to this bound.
        #[arg(long)]
        lemma_cap_max: Option<u32>,
        /// Smallest series index in the lemma suite.
        #[arg(long, allow_hyphen_values = true)]
        lemma_m_min: Option<i64>,
        /// Largest series index in the lemma suite.
        #[arg(long, allow_hyphen_values = true)]
        lemma_m_max: Option<i64>,
        /// Largest window end in the lemma suite.
        #[arg(long)]
        lemma_p_max: Option<u32>,
        /// Number of seeded random operator-identity pairs.
        #[arg(long)]
        random_pairs: Option<u64>,
        /// Test hook: corrupt an internal binomial coefficient so the run
        /// demonstrably detects wrong arithmetic.
        #[arg(long, hide = true)]
        corrupt_binomials: bool,
    },
}

fn parse_phase(s: &str) -> Result<Phase, String> {
    s.parse()
}

/// A failure with its process exit code.
enum Failure {
    /// Routes disagree, or a certification failure: exit 1.
    Mismatch(String),
    /// Malformed or out-of-domain input: exit 2.
    Invalid(String),
    /// A configured resource cap stopped the run: exit 3.
    Resource(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Resource(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Mismatch(msg) | Failure::Invalid(msg) | Failure::Resource(msg) => {
                f.write_str(msg)
            }
        }
    }
}

fn invalid(err: impl fmt::Display) -> Failure {
    Failure::Invalid(err.to_string())
}

fn main() -> ExitCode {
    if let Err(failure) = configure_threads() {
        eprintln!("error: {failure}");
        return ExitCode::from(failure.code());
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
    }
}

/// Honors `FLAGGED_GROTH_THREADS`, the one environment variable the tool
/// reads: it caps the worker count of the parallel certification sweeps.
fn configure_threads() -> Result<(), Failure> {
    match std::env::var("FLAGGED_GROTH_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) => {
            let n: usize = raw.parse().map_err(|_| {
                invalid(format!(
                    "FLAGGED_GROTH_THREADS must be a positive integer, got `{raw}`"
                ))
            })?;
            if n == 0 {
                return Err(invalid("FLAGGED_GROTH_THREADS must be at least 1"));
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| invalid(format!("could not configure the thread pool: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Compute { shape, method } => compute(&cli, shape, *method),
        Command::Tableaux {
            shape,
            list,
            sum: _,
        } => tableaux(&cli, shape, *list),
        Command::Onerow { m, p, q } => onerow(&cli, *m, *p, *q),
        Command::Grothendieck {
            perm,
            show_diagram,
            show_essential,
            show_flaggings,
            verify,
        } => grothendieck(
            &cli,
            perm,
            *show_diagram,
            *show_essential,
            *show_flaggings,
            *verify,
        ),
        Command::Certify { .. } => certify(&cli),
    }
}

fn build_shape(args: &ShapeArgs) -> Result<SkewFlaggedShape, Failure> {
    let lambda = Partition::new(args.lambda.0.clone()).map_err(invalid)?;
    let rows = lambda.len();
    let mu = args
        .mu
        .as_ref()
        .map_or_else(|| vec![0; rows], |list| list.0.clone());
    let lower = args
        .g
        .as_ref()
        .map_or_else(|| vec![1; rows], |list| list.0.clone());
    SkewFlaggedShape::new(lambda, mu, args.f.0.clone(), lower).map_err(invalid)
}

/// Print a serializable response as compact JSON on one line.
fn emit_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string(value).expect("responses serialize")
    );
}

// ---------------------------------------------------------------------------
// compute

#[derive(Serialize)]
struct ComputeResponse<'a> {
    shape: &'a SkewFlaggedShape,
    beta_cap: u32,
    beta_degree_bound: u32,
    guard: u32,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    tableaux: Option<Polynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    determinant: Option<Polynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    guard_band_vanishes: Option<bool>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    routes_match: Option<bool>,
}

fn compute(cli: &Cli, args: &ShapeArgs, method: Method) -> Result<(), Failure> {
    let shape = build_shape(args)?;
    let bound = shape.beta_degree_bound();
    let cap = cli.beta_cap.unwrap_or(bound);
    let policy = TruncationPolicy::new(cap, cli.guard);

    let by_tableaux = match method {
        Method::Tableaux | Method::Both => Some(tableau_sum(&shape).truncate_beta(cap)),
        Method::Determinant => None,
    };
    let by_determinant: Option<DeterminantResult> = match method {
        Method::Determinant | Method::Both => Some(jt_determinant(&shape, &policy)),
        Method::Tableaux => None,
    };
    let guard_band_vanishes = by_determinant.as_ref().map(|det| {
        if cap < bound {
            true
        } else {
            det.guard_band.is_zero()
        }
    });
    let routes_match = match (&by_tableaux, &by_determinant) {
        (Some(tab), Some(det)) => Some(*tab == det.value && guard_band_vanishes == Some(true)),
        _ => None,
    };

    let response = ComputeResponse {
        shape: &shape,
        beta_cap: cap,
        beta_degree_bound: bound,
        guard: cli.guard,
        method: method.name(),
        tableaux: by_tableaux.clone(),
        determinant: by_determinant.as_ref().map(|det| det.value.clone()),
        guard_band_vanishes,
        routes_match,
    };
    match cli.format {
        Format::Json => emit_json(&response),
        Format::Text => {
            println!("{shape}");
            println!("beta cap {cap} (degree bound {bound}), guard {}", cli.guard);
            if let Some(tab) = &response.tableaux {
                println!("tableaux    = {tab}");
            }
            if let Some(det) = &response.determinant {
                println!("determinant = {det}");
            }
            if let Some(vanishes) = guard_band_vanishes {
                println!(
                    "guard band vanishes: {}",
                    if vanishes { "yes" } else { "no" }
                );
            }
            if let Some(ok) = routes_match {
                println!("match: {}", if ok { "yes" } else { "no" });
            }
        }
    }
    if routes_match == Some(false) {
        return Err(Failure::Mismatch(format!(
            "the routes disagree for {shape} at beta cap {cap}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// tableaux

#[derive(Serialize)]
struct TableauFill {
    /// Row-major `[[row, col], [values...]]` pairs.
    fill: Vec<((u32, u32), Vec<u32>)>,
}

#[derive(Serialize)]
struct TableauxListResponse<'a> {
    shape: &'a SkewFlaggedShape,
    count: usize,
    tableaux: Vec<TableauFill>,
}

#[derive(Serialize)]
struct TableauxSumResponse<'a> {
    shape: &'a SkewFlaggedShape,
    beta_cap: u32,
    count: usize,
    sum: Polynomial,
}

fn tableaux(cli: &Cli, args: &ShapeArgs, list: bool) -> Result<(), Failure> {
    let shape = build_shape(args)?;
    let all = enumerate(&shape);
    if list {
        let tableaux: Vec<TableauFill> = all
            .iter()
            .map(|t| {
                let mut fill = Vec::new();
                for i in 1..=shape.rows() {
                    for j in shape.mu_part(i) + 1..=shape.lambda().part(i) {
                        fill.push(((i as u32, j), t.box_values(i, j as usize).to_vec()));
                    }
                }
                TableauFill { fill }
            })
            .collect();
        let response = TableauxListResponse {
            shape: &shape,
            count: all.len(),
            tableaux,
        };
        match cli.format {
            Format::Json => emit_json(&response),
            Format::Text => {
                println!("{shape}: {} tableaux", response.count);
                for t in &response.tableaux {
                    let cells: Vec<String> = t
                        .fill
                        .iter()
                        .map(|((i, j), values)| {
                            let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                            format!("({i},{j}):{{{}}}", vals.join(","))
                        })
                        .collect();
                    println!("{}", cells.join("  "));
                }
            }
        }
    } else {
        let bound = shape.beta_degree_bound();
        let cap = cli.beta_cap.unwrap_or(bound);
        let sum = tableau_sum(&shape).truncate_beta(cap);
        let response = TableauxSumResponse {
            shape: &shape,
            beta_cap: cap,
            count: all.len(),
            sum,
        };
        match cli.format {
            Format::Json => emit_json(&response),
            Format::Text => {
                println!("{shape}: {} tableaux", response.count);
                println!("sum = {}", response.sum);
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// onerow

#[derive(Serialize)]
struct OnerowResponse {
    m: i64,
    p: u32,
    q: u32,
    beta_cap: u32,
    guard: u32,
    value: Polynomial,
}

fn onerow(cli: &Cli, m: i64, p: u32, q: u32) -> Result<(), Failure> {
    if p == 0 || q == 0 {
        return Err(invalid(
            "window ends p and q are 1-indexed and must be positive",
        ));
    }
    let cap = cli
        .beta_cap
        .unwrap_or_else(|| TruncationPolicy::default().beta_cap);
    let budget = cap + cli.guard;
    let value = one_row_window(m, p, q, budget).truncate_beta(cap);
    let response = OnerowResponse {
        m,
        p,
        q,
        beta_cap: cap,
        guard: cli.guard,
        value,
    };
    match cli.format {
        Format::Json => emit_json(&response),
        Format::Text => {
            println!("G_{m}^[{p}/{q}] at beta cap {cap} = {}", response.value);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// grothendieck

#[derive(Serialize)]
struct FlaggingView {
    boxes: Vec<(u32, u32)>,
    flag: Vec<u32>,
}

#[derive(Serialize)]
struct GrothendieckResponse {
    perm: Vec<u32>,
    length: u32,
    descents: Vec<u32>,
    vexillary: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagram: Option<Vec<(u32, u32)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    essential: Option<Vec<(u32, u32)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shape: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    flaggings: Option<Vec<FlaggingView>>,
    grothendieck: Polynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

fn grothendieck(
    cli: &Cli,
    perm: &PartList,
    show_diagram: bool,
    show_essential: bool,
    show_flaggings: bool,
    verify: bool,
) -> Result<(), Failure> {
    let w = Permutation::new(perm.0.clone()).map_err(invalid)?;
    let vexillary = is_vexillary(&w);
    if (show_flaggings || verify) && !vexillary {
        return Err(invalid(format!(
            "{w} is not vexillary (it contains a 2143 pattern); flaggings and the tableau \
             cross-check are defined only for vexillary permutations"
        )));
    }

    let polynomial = grothendieck_polynomial(&w);
    let shape = vexillary.then(|| shape_lambda(&w));
    let flaggings: Option<Vec<FlaggingView>> = show_flaggings.then(|| {
        flagging_sets(&w)
            .iter()
            .map(|fs| FlaggingView {
                boxes: fs.boxes().iter().map(|b| (b.row, b.col)).collect(),
                flag: fs.flag(),
            })
            .collect()
    });
    let verified = if verify {
        let lambda = shape.clone().expect("vexillary permutations have a shape");
        let ok = flagging_sets(&w).iter().all(|fs| {
            let flagged = flagged_groth::shape::FlaggedShape::new(lambda.clone(), fs.flag())
                .expect("flaggings satisfy the flag rules");
            tableau_sum(&flagged.to_skew()) == polynomial
        });
        Some(ok)
    } else {
        None
    };

    let response = GrothendieckResponse {
        perm: w.word().to_vec(),
        length: w.length(),
        descents: w.descents(),
        vexillary,
        diagram: show_diagram.then(|| diagram(&w).iter().map(|b| (b.row, b.col)).collect()),
        essential: show_essential
            .then(|| essential_set(&w).iter().map(|b| (b.row, b.col)).collect()),
        shape: shape.as_ref().map(|s| s.parts().to_vec()),
        flaggings,
        grothendieck: polynomial,
        verified,
    };
    match cli.format {
        Format::Json => emit_json(&response),
        Format::Text => {
            println!(
                "w = {w}  (length {}, {})",
                response.length,
                if vexillary {
                    "vexillary"
                } else {
                    "not vexillary"
                }
            );
            if let Some(boxes) = &response.diagram {
                println!("diagram: {}", fmt_boxes(boxes));
            }
            if let Some(boxes) = &response.essential {
                println!("essential set: {}", fmt_boxes(boxes));
            }
            if let Some(parts) = &response.shape {
                println!("shape: ({})", fmt_u32s(parts));
            }
            if let Some(flaggings) = &response.flaggings {
                for fs in flaggings {
                    println!(
                        "flagging: boxes {} -> flag ({})",
                        fmt_boxes(&fs.boxes),
                        fmt_u32s(&fs.flag)
                    );
                }
            }
            println!("grothendieck = {}", response.grothendieck);
            if let Some(ok) = response.verified {
                println!(
                    "verified against tableau sums: {}",
                    if ok { "yes" } else { "no" }
                );
            }
        }
    }
    if verified == Some(false) {
        return Err(Failure::Mismatch(format!(
            "divided-difference and tableau routes disagree for {w}"
        )));
    }
    Ok(())
}

fn fmt_boxes(boxes: &[(u32, u32)]) -> String {
    let cells: Vec<String> = boxes.iter().map(|(r, c)| format!("({r},{c})")).collect();
    format!("{{{}}}", cells.join(", "))
}

fn fmt_u32s(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

// ---------------------------------------------------------------------------
// certify

fn certify(cli: &Cli) -> Result<(), Failure> {
    let Command::Certify {
        phases,
        seed,
        max_cases,
        lambda,
        f,
        straight_rows,
        straight_cols,
        straight_flag_max,
        skew_rows,
        skew_cols,
        skew_flag_max,
        laurent_rows,
        perm_size,
        lemma_cap_max,
        lemma_m_min,
        lemma_m_max,
        lemma_p_max,
        random_pairs,
        corrupt_binomials,
    } = &cli.command
    else {
        unreachable!("certify() is only called for the certify subcommand");
    };

    let mut config = CertifyConfig::default();
    if !phases.is_empty() {
        config.phases = phases.clone();
    }
    config.seed = *seed;
    config.max_cases = *max_cases;
    config.guard = cli.guard;
    config.beta_cap = cli.beta_cap;
    config.restrict_lambda = lambda.as_ref().map(|l| l.0.clone());
    config.restrict_upper = f.as_ref().map(|l| l.0.clone());
    if let Some(v) = straight_rows {
        config.straight_rows = *v;
    }
    if let Some(v) = straight_cols {
        config.straight_cols = *v;
    }
    if let Some(v) = straight_flag_max {
        config.straight_flag_max = *v;
    }
    if let Some(v) = skew_rows {
        config.skew_rows = *v;
    }
    if let Some(v) = skew_cols {
        config.skew_cols = *v;
    }
    if let Some(v) = skew_flag_max {
        config.skew_flag_max = *v;
    }
    if let Some(v) = laurent_rows {
        config.laurent_rows = *v;
    }
    if let Some(v) = perm_size {
        config.perm_size = *v;
    }
    if let Some(v) = lemma_cap_max {
        config.lemma_cap_max = *v;
    }
    if let Some(v) = lemma_m_min {
        config.lemma_m_min = *v;
    }
    if let Some(v) = lemma_m_max {
        config.lemma_m_max = *v;
    }
    if let Some(v) = lemma_p_max {
        config.lemma_p_max = *v;
    }
    if let Some(v) = random_pairs {
        config.random_pairs = *v;
    }

    if *corrupt_binomials {
        flagged_groth::poly::fault::set_binomial_corruption(true);
    }
    let report: CertifyReport = run_certify(&config);
    if *corrupt_binomials {
        flagged_groth::poly::fault::set_binomial_corruption(false);
    }

    match cli.format {
        Format::Json => emit_json(&report),
        Format::Text => {
            for line in report.summary_lines() {
                println!("{line}");
            }
        }
    }
    if !report.passed {
        return Err(Failure::Mismatch(format!(
            "{} of {} cases failed certification",
            report.total_failures, report.total_cases
        )));
    }
    if !report.complete {
        return Err(Failure::Resource(format!(
            "the case budget stopped the run after {} cases; the partial report is marked \
             incomplete",
            report.total_cases
        )));
    }
    Ok(())
}
