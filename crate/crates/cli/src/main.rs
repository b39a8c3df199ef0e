use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qbound::bench::{self, BenchConfig, DegreeRange};
use qbound::bounds::{BoundParams, Theorem3Variant};
use qbound::io::{parse_magnitudes, read_polynomial};
use qbound::oracle::VerificationResult;
use qbound::{
    all_bounds, select, verify, BoundInput, BoundKind, BoundOptions, BoundReport, BoundValue,
    Bracket, Error, OpferChoice, SelectOptions, SelectionResult, WeightVector,
};

/// Zero-modulus bounds for one-sided quaternionic polynomials.
#[derive(Parser)]
#[command(name = "qbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every applicable bound and the sharpest upper bound.
    Bound(BoundCmd),
    /// Classify the magnitude profile and report the selected (upper, lower) pair.
    Select(SelectCmd),
    /// Check bounds against the root-modulus oracle; exit 1 on any failure.
    Verify(VerifyCmd),
    /// Compare all bounds with the oracle on seeded random polynomials.
    ///
    /// CSV columns: index, seed, side, degree, cauchy_upper, opfer_sum,
    /// opfer_max, fujiwara, theorem_4_1, theorem_4_3, cauchy_lower,
    /// theorem_4_2, oracle_max, oracle_min, winner. Values carry 10
    /// significant digits; an empty cell means the bound does not apply.
    Bench(BenchCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpferArg {
    Sum,
    Max,
    Both,
}

impl From<OpferArg> for OpferChoice {
    fn from(o: OpferArg) -> Self {
        match o {
            OpferArg::Sum => OpferChoice::Sum,
            OpferArg::Max => OpferChoice::Max,
            OpferArg::Both => OpferChoice::Both,
        }
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Magnitudes |q_0| … |q_{n-1}| of a monic polynomial, space separated.
    #[arg(long, allow_hyphen_values = true)]
    mags: Option<String>,
    /// JSON polynomial: {"side": "left"|"right", "coeffs": [[a,b,c,d], …]}.
    #[arg(long)]
    poly: Option<PathBuf>,
}

#[derive(Args)]
struct BoundArgs {
    /// Magnitudes |v_1| … |v_n| for the auxiliary-polynomial bound.
    #[arg(long)]
    v_list: Option<String>,
    /// Explicit weights w_1 … w_{n+1} for the auxiliary-polynomial bound.
    #[arg(long)]
    weights: Option<String>,
    /// Use the as-printed form of the auxiliary-polynomial bound.
    #[arg(long)]
    as_printed: bool,
    #[arg(long, value_enum, default_value = "both")]
    opfer: OpferArg,
    /// Search interval for w in the weighted lower bound.
    #[arg(long, default_value = "1e-3,1e3")]
    w_bracket: String,
    /// Search interval for the geometric weight ratio r.
    #[arg(long, default_value = "1e-2,1e2")]
    r_bracket: String,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct BoundCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    opts: BoundArgs,
}

#[derive(Args)]
struct SelectCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    opts: BoundArgs,
    /// Profile threshold on the largest magnitude.
    #[arg(long, default_value_t = qbound::selector::DEFAULT_TAU)]
    tau: f64,
    /// Compute every upper bound regardless of the profile.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct VerifyCmd {
    /// JSON polynomial to verify against.
    #[arg(long)]
    poly: PathBuf,
    /// Bound report JSON to check instead of computing one.
    #[arg(long)]
    report: Option<PathBuf>,
    #[command(flatten)]
    opts: BoundArgs,
}

#[derive(Args)]
struct BenchCmd {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Inclusive degree range.
    #[arg(long, default_value = "2..6")]
    degrees: String,
    /// Coefficient components are drawn from [-m/2, m/2].
    #[arg(long, default_value_t = 10.0)]
    max_modulus: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

/// Failures mapped to exit codes.
enum Fail {
    Usage(String),
    Verification,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Bound(c) => run_bound(c),
        Command::Select(c) => run_select(c),
        Command::Verify(c) => run_verify(c),
        Command::Bench(c) => run_bench(c),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Verification) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn bound_input(input: &InputArgs) -> Result<BoundInput, Fail> {
    match (&input.mags, &input.poly) {
        (Some(m), None) => Ok(BoundInput::Magnitudes(parse_magnitudes(m)?)),
        (None, Some(p)) => Ok(BoundInput::Polynomial(read_polynomial(p)?)),
        _ => Err(Fail::Usage("give exactly one of --mags or --poly".into())),
    }
}

fn bound_options(a: &BoundArgs) -> Result<BoundOptions, Fail> {
    Ok(BoundOptions {
        opfer: a.opfer.into(),
        theorem3_variant: if a.as_printed {
            Theorem3Variant::AsPrinted
        } else {
            Theorem3Variant::ProofForm
        },
        w_bracket: a.w_bracket.parse::<Bracket>()?,
        r_bracket: a.r_bracket.parse::<Bracket>()?,
        v_list: a.v_list.as_deref().map(parse_magnitudes).transpose()?,
        weights: a
            .weights
            .as_deref()
            .map(|w| parse_magnitudes(w).and_then(WeightVector::new))
            .transpose()?,
    })
}

fn kind_label(k: BoundKind) -> &'static str {
    match k {
        BoundKind::Upper => "upper",
        BoundKind::Lower => "lower",
        BoundKind::Reference => "reference",
    }
}

fn param_note(b: &BoundValue) -> String {
    match &b.params {
        Some(BoundParams::Weight {
            w,
            from_cauchy: true,
        }) => format!("  (w = {w:.4}, Cauchy lower wins)"),
        Some(BoundParams::Weight { w, .. }) => format!("  (w = {w:.4})"),
        Some(BoundParams::Weights { ratio: Some(r), .. }) => format!("  (r = {r:.4})"),
        _ => String::new(),
    }
}

fn write_bound_lines(out: &mut impl Write, bounds: &[BoundValue]) -> io::Result<()> {
    for kind in [BoundKind::Upper, BoundKind::Reference, BoundKind::Lower] {
        for b in bounds.iter().filter(|b| b.kind == kind) {
            let tag = match kind {
                BoundKind::Upper => "",
                BoundKind::Lower => " [lower]",
                BoundKind::Reference => " [not guaranteed]",
            };
            writeln!(
                out,
                "{:<14} {:.4}{tag}{}",
                format!("{}:", b.name),
                b.value,
                param_note(b)
            )?;
        }
    }
    Ok(())
}

fn write_csv_bounds(out: &mut impl Write, bounds: &[BoundValue]) -> io::Result<()> {
    writeln!(out, "name,kind,value")?;
    for b in bounds {
        writeln!(
            out,
            "{},{},{}",
            b.name,
            kind_label(b.kind),
            bench::sig10(b.value)
        )?;
    }
    Ok(())
}

fn run_bound(c: BoundCmd) -> Result<(), Fail> {
    let input = bound_input(&c.input)?;
    let report = all_bounds(&input, &bound_options(&c.opts)?)?;
    let mut out = io::stdout().lock();
    match c.opts.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        Format::Csv => write_csv_bounds(&mut out, &report.bounds)?,
        Format::Table => write_report_table(&mut out, &report)?,
    }
    Ok(())
}

fn write_report_table(out: &mut impl Write, r: &BoundReport) -> io::Result<()> {
    writeln!(out, "Degree of polynomial: {}", r.degree)?;
    if r.normalized {
        writeln!(out, "Input divided by its leading coefficient.")?;
    }
    writeln!(out, "\n--- Actual Computations ---")?;
    write_bound_lines(out, &r.bounds)?;
    for s in &r.skipped {
        writeln!(out, "{:<14} n/a ({})", format!("{}:", s.name), s.reason)?;
    }
    let upper = if r.annulus.upper.is_finite() {
        format!("{:.4}", r.annulus.upper)
    } else {
        "inf".into()
    };
    writeln!(out, "\nAnnulus: {:.4} <= |z| <= {upper}", r.annulus.lower)?;
    writeln!(out, "\n--------------------------------------------------")?;
    if let Some(name) = &r.sharpest {
        writeln!(out, " SHARPEST BOUND: {name} ({:.4})", r.annulus.upper)?;
    }
    writeln!(out, "--------------------------------------------------")
}

fn run_select(c: SelectCmd) -> Result<(), Fail> {
    let input = bound_input(&c.input)?;
    let opts = SelectOptions {
        tau: c.tau,
        compute_all: c.all,
        bounds: bound_options(&c.opts)?,
    };
    let r = select(&input, &opts)?;
    let mut out = io::stdout().lock();
    match c.opts.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?,
        Format::Csv => write_csv_bounds(&mut out, &r.all_computed)?,
        Format::Table => write_selection_table(&mut out, &r)?,
    }
    Ok(())
}

fn write_selection_table(out: &mut impl Write, r: &SelectionResult) -> io::Result<()> {
    let p = &r.profile;
    writeln!(out, "--- Heuristic Analysis ---")?;
    writeln!(
        out,
        "Maximum coefficient magnitude: {} (found at q_{})",
        p.max_value, p.max_index
    )?;
    writeln!(out, "Profile: {}", p.tag)?;
    writeln!(out, "Routed to: {}", r.routed.join(", "))?;
    if r.fallback {
        writeln!(out, "Routed bound unavailable; computed every upper bound.")?;
    }
    writeln!(out, "\n--- Actual Computations ---")?;
    write_bound_lines(out, &r.all_computed)?;
    writeln!(out, "\n--------------------------------------------------")?;
    writeln!(
        out,
        " SHARPEST BOUND: {} ({:.4})",
        r.upper.name, r.upper.value
    )?;
    writeln!(out, " LOWER BOUND: {} ({:.4})", r.lower.name, r.lower.value)?;
    writeln!(out, "--------------------------------------------------")?;
    if r.inconsistent {
        writeln!(out, "warning: upper bound is below lower bound")?;
    }
    Ok(())
}

fn run_verify(c: VerifyCmd) -> Result<(), Fail> {
    let f = read_polynomial(&c.poly)?;
    let report: BoundReport = match &c.report {
        Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
        None => all_bounds(&BoundInput::Polynomial(f.clone()), &bound_options(&c.opts)?)?,
    };
    let v = verify(&f, &report)?;
    let mut out = io::stdout().lock();
    match c.opts.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?,
        _ => write_verification_table(&mut out, &v)?,
    }
    if v.all_pass() {
        Ok(())
    } else {
        Err(Fail::Verification)
    }
}

fn write_verification_table(out: &mut impl Write, v: &VerificationResult) -> io::Result<()> {
    let s = &v.spectrum;
    writeln!(
        out,
        "Oracle zero moduli: min {:.6}, max {:.6}",
        s.min, s.max
    )?;
    if s.low_confidence {
        writeln!(
            out,
            "warning: coefficient range is wide; oracle accuracy is reduced"
        )?;
    }
    for (label, checks) in [("", &v.checks), (" [not guaranteed]", &v.reference)] {
        for ch in checks {
            let verdict = if ch.pass { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{verdict} {:<14} {} {:.6}  margin {:+.3e}{label}",
                format!("{}:", ch.name),
                kind_label(ch.kind),
                ch.value,
                ch.margin
            )?;
        }
    }
    let failed = v.failures().count();
    writeln!(
        out,
        "{} of {} bounds hold",
        v.checks.len() - failed,
        v.checks.len()
    )
}

fn run_bench(c: BenchCmd) -> Result<(), Fail> {
    let cfg = BenchConfig {
        seed: c.seed,
        count: c.count,
        degrees: c.degrees.parse::<DegreeRange>()?,
        max_modulus: c.max_modulus,
        options: BoundOptions::default(),
    };
    let rows = bench::run_bench(&cfg)?;
    let out = io::stdout().lock();
    match c.format {
        Format::Json => {
            let mut out = out;
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
        _ => bench::write_csv(&rows, out)?,
    }
    Ok(())
}
