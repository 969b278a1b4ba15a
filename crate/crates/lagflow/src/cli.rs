//! Argument parsing and subcommand dispatch.
//!
//! Exit status: 0 when every checked property holds, 1 when one fails,
//! 2 on usage errors (malformed input or a violated hypothesis).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lagflow_core::basis::laguerre_transform_checked;
use lagflow_core::flow::{
    counterexample_search, flow_trace, lemma1_ladder, lemma1_localize, lemma2_ladder, lemma2_localize, semigroup_check,
    verify_theorem1, Ladder,
};
use lagflow_core::orthocheck::{
    hermite_inner, hermite_quoted_diagonal, laguerre_diagonal_expected, laguerre_inner,
};
use lagflow_core::ratpoly::approx_decimal;
use lagflow_core::realroot::{certify_with_width, default_width, isolate_roots};
use lagflow_core::{AlphaParam, Poly, Rational, XiParam};
use num_traits::Signed;
use serde::Serialize;
use serde_json::json;

use crate::batch::{semigroup_batch, theorem_batch};
use crate::error::CliError;
use crate::literal::{parse_poly, parse_rational, parse_rational_list, rational_string, PolyJson};
use crate::report::{
    to_json, trace_csv, CertificateJson, IntervalJson, LocalizationJson, MomentJson, TheoremJson, TraceJson,
    APPROX_DIGITS,
};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "LAGFLOW_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "lagflow", version, about = "Exact Laguerre heat-flow and real-rootedness checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report here instead of stdout (or $LAGFLOW_OUT_DIR/<command>.<ext>).
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply x^n -> (-1)^n n! L_n^alpha to a polynomial.
    Transform(TransformArgs),
    /// Sturm certificate: real-rootedness, simplicity, isolating intervals.
    Certify(CertifyArgs),
    /// Isolating intervals for the distinct real roots.
    Isolate(IsolateArgs),
    /// Exact Laguerre and Hermite inner-product tables.
    Orthogonality(OrthoArgs),
    /// Transform a real-rooted polynomial (or a seeded random batch) and certify the image.
    VerifyTheorem(TheoremArgs),
    /// Root localization near a nonzero root xi under the heat flow, h = eta^2.
    VerifyLemma1(Lemma1Args),
    /// Root localization near a root at the origin under the heat flow.
    VerifyLemma2(Lemma2Args),
    /// Check e^{-h2 L} e^{-h1 L} f = e^{-(h1+h2) L} f exactly.
    Semigroup(SemigroupArgs),
    /// Certificates of e^{-hL} f along an h grid.
    FlowTrace(FlowTraceArgs),
    /// Run the transform check on (x - xi)^k over a grid of xi.
    SearchCounterexamples(SearchArgs),
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long)]
    pub poly: String,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long)]
    pub poly: String,
    /// Isolation width (rational); defaults to 1/1048576.
    #[arg(long)]
    pub width: Option<String>,
}

#[derive(Debug, Args)]
pub struct IsolateArgs {
    #[arg(long)]
    pub poly: String,
    #[arg(long)]
    pub width: Option<String>,
}

#[derive(Debug, Args)]
pub struct OrthoArgs {
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub xi: String,
    #[arg(long, default_value_t = 10)]
    pub max_index: usize,
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    /// Fixed alpha; batches draw alpha from [0, 5] per trial when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Single input; omit to run a seeded random batch.
    #[arg(long)]
    pub poly: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 12)]
    pub max_degree: usize,
    /// Draw roots from [-64, 64] instead of [0, 64].
    #[arg(long)]
    pub allow_negative_roots: bool,
}

#[derive(Debug, Args)]
pub struct Lemma1Args {
    #[arg(long)]
    pub k: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub xi: String,
    #[arg(long)]
    pub p: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub eta: Option<String>,
    /// Run eta = 2^-j for j = 1..=LADDER instead of a single eta.
    #[arg(long)]
    pub ladder: Option<u32>,
}

#[derive(Debug, Args)]
pub struct Lemma2Args {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub p: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
    /// Run h = 2^-j for j = 1..=LADDER instead of a single h.
    #[arg(long)]
    pub ladder: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SemigroupArgs {
    /// Single input; omit to run a seeded random batch.
    #[arg(long)]
    pub poly: Option<String>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub h1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub h2: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub max_degree: usize,
}

#[derive(Debug, Args)]
pub struct FlowTraceArgs {
    #[arg(long)]
    pub poly: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub alpha: String,
    /// Comma-separated rationals, starting at 0 and strictly increasing.
    #[arg(long, default_value = "0,1/10,1/5,3/10,2/5,1/2,3/5,7/10,4/5,9/10,1")]
    pub grid: String,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Comma-separated xi values.
    #[arg(long, default_value = "-4,-3,-2,-3/2,-1,-1/2,0,1", allow_hyphen_values = true)]
    pub grid: String,
}

/// A rendered report plus the verdict that decides the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Emitted {
    pub body: String,
    pub extension: &'static str,
    pub passed: bool,
}

impl Emitted {
    fn json<T: Serialize>(value: &T, passed: bool) -> Self {
        Emitted {
            body: to_json(value),
            extension: "json",
            passed,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Transform(_) => "transform",
            Command::Certify(_) => "certify",
            Command::Isolate(_) => "isolate",
            Command::Orthogonality(_) => "orthogonality",
            Command::VerifyTheorem(_) => "verify-theorem",
            Command::VerifyLemma1(_) => "verify-lemma1",
            Command::VerifyLemma2(_) => "verify-lemma2",
            Command::Semigroup(_) => "semigroup",
            Command::FlowTrace(_) => "flow-trace",
            Command::SearchCounterexamples(_) => "search-counterexamples",
        }
    }
}

fn alpha(s: &str) -> Result<AlphaParam, CliError> {
    Ok(AlphaParam::new(parse_rational(s)?)?)
}

fn width(s: Option<&str>) -> Result<Rational, CliError> {
    match s {
        None => Ok(default_width()),
        Some(w) => {
            let w = parse_rational(w)?;
            if !w.is_positive() {
                return Err(lagflow_core::Error::NonPositiveWidth.into());
            }
            Ok(w)
        }
    }
}

fn required(flag: &str, value: Option<&String>) -> Result<Rational, CliError> {
    match value {
        Some(v) => parse_rational(v),
        None => Err(CliError::Usage(format!("--{flag} is required"))),
    }
}

fn nonconstant(p: &Poly) -> Result<(), CliError> {
    match p.degree() {
        None => Err(lagflow_core::Error::ZeroPolynomial.into()),
        Some(0) => Err(lagflow_core::Error::ConstantPolynomial.into()),
        Some(_) => Ok(()),
    }
}

/// Runs one subcommand and renders its report.
pub fn dispatch(command: &Command, format: Format) -> Result<Emitted, CliError> {
    let csv_capable = matches!(command, Command::FlowTrace(_) | Command::SearchCounterexamples(_));
    if format == Format::Csv && !csv_capable {
        return Err(CliError::Usage(format!(
            "--format csv is only available for flow-trace and search-counterexamples, not {}",
            command.name()
        )));
    }
    match command {
        Command::Transform(a) => run_transform(a),
        Command::Certify(a) => run_certify(a),
        Command::Isolate(a) => run_isolate(a),
        Command::Orthogonality(a) => run_orthogonality(a),
        Command::VerifyTheorem(a) => run_theorem(a),
        Command::VerifyLemma1(a) => run_lemma1(a),
        Command::VerifyLemma2(a) => run_lemma2(a),
        Command::Semigroup(a) => run_semigroup(a),
        Command::FlowTrace(a) => run_flow_trace(a, format),
        Command::SearchCounterexamples(a) => run_search(a, format),
    }
}

fn run_transform(a: &TransformArgs) -> Result<Emitted, CliError> {
    let al = alpha(&a.alpha)?;
    let f = parse_poly(&a.poly)?;
    let (out, agree) = laguerre_transform_checked(&f, &al);
    let report = json!({
        "alpha": rational_string(al.value()),
        "input": PolyJson::from(&f),
        "transformed": PolyJson::from(&out),
        "paths_agree": agree,
    });
    Ok(Emitted::json(&report, agree))
}

fn run_certify(a: &CertifyArgs) -> Result<Emitted, CliError> {
    let f = parse_poly(&a.poly)?;
    nonconstant(&f)?;
    let cert = certify_with_width(&f, &width(a.width.as_deref())?)?;
    Ok(Emitted::json(&CertificateJson::from(&cert), true))
}

fn run_isolate(a: &IsolateArgs) -> Result<Emitted, CliError> {
    let f = parse_poly(&a.poly)?;
    nonconstant(&f)?;
    let w = width(a.width.as_deref())?;
    let ivs = isolate_roots(&f, &w)?;
    let report = json!({
        "poly": PolyJson::from(&f),
        "width": rational_string(&w),
        "intervals": ivs.iter().map(|iv| IntervalJson::new(&iv.lo, &iv.hi)).collect::<Vec<_>>(),
    });
    Ok(Emitted::json(&report, true))
}

fn run_orthogonality(a: &OrthoArgs) -> Result<Emitted, CliError> {
    let al = alpha(&a.alpha)?;
    let xi = XiParam::new(parse_rational(&a.xi)?);
    xi.require_positive()?;
    let two_xi = xi.value() * Rational::from_integer(2.into());
    let mut passed = true;
    let mut laguerre = Vec::new();
    let mut hermite = Vec::new();
    let mut laguerre_diag = Vec::new();
    let mut hermite_diag = Vec::new();
    for n in 0..=a.max_index {
        for m in 0..=a.max_index {
            let lv = laguerre_inner(n, m, &al);
            let hv = hermite_inner(n, m, &xi)?;
            if n != m {
                passed &= lv.is_zero() && hv.is_zero();
            }
            laguerre.push(json!({"n": n, "m": m, "value": MomentJson::from(&lv)}));
            hermite.push(json!({"k": n, "l": m, "value": MomentJson::from(&hv)}));
            if n == m {
                let expected = laguerre_diagonal_expected(n, &al);
                passed &= lv.coeff == expected;
                laguerre_diag.push(json!({
                    "n": n,
                    "computed": MomentJson::from(&lv),
                    "expected_coeff": rational_string(&expected),
                }));
                let quoted = hermite_quoted_diagonal(n);
                let ratio = &hv.coeff / &quoted;
                let two_xi_power = (0..n).fold(Rational::from_integer(1.into()), |acc, _| acc * &two_xi);
                passed &= hv.coeff.is_positive();
                hermite_diag.push(json!({
                    "k": n,
                    "computed": MomentJson::from(&hv),
                    "quoted_coeff": rational_string(&quoted),
                    "ratio_to_quoted": rational_string(&ratio),
                    "ratio_approx": approx_decimal(&ratio, APPROX_DIGITS),
                    "ratio_is_two_xi_power": ratio == two_xi_power,
                }));
            }
        }
    }
    let report = json!({
        "alpha": rational_string(al.value()),
        "xi": rational_string(xi.value()),
        "max_index": a.max_index,
        "laguerre": laguerre,
        "hermite": hermite,
        "laguerre_diagonal": laguerre_diag,
        "hermite_diagonal": hermite_diag,
        "passed": passed,
    });
    Ok(Emitted::json(&report, passed))
}

fn run_theorem(a: &TheoremArgs) -> Result<Emitted, CliError> {
    let fixed = a.alpha.as_deref().map(alpha).transpose()?;
    if let Some(text) = &a.poly {
        let f = parse_poly(text)?;
        nonconstant(&f)?;
        let al = fixed.unwrap_or_else(AlphaParam::zero);
        let check = verify_theorem1(&f, &al)?;
        let report = TheoremJson::new(al.value(), &f, &check);
        return Ok(Emitted::json(&report, check.passed));
    }
    if a.max_degree == 0 {
        return Err(CliError::Usage("--max-degree must be at least 1".into()));
    }
    let nonneg = !a.allow_negative_roots;
    let trials = theorem_batch(a.seed, a.trials, a.max_degree, nonneg, fixed.as_ref())?;
    let failures: Vec<u64> = trials.iter().filter(|t| !t.ok()).map(|t| t.trial).collect();
    let results: Vec<_> = trials
        .iter()
        .map(|t| {
            json!({
                "trial": t.trial,
                "result": TheoremJson::new(t.alpha.value(), &t.input, &t.check),
                "simple": t.check.certificate.is_simple,
            })
        })
        .collect();
    let passed = failures.is_empty();
    let report = json!({
        "seed": a.seed,
        "trials": a.trials,
        "max_degree": a.max_degree,
        "nonnegative_roots": nonneg,
        "alpha": fixed.as_ref().map(|al| rational_string(al.value())),
        "passed": passed,
        "failures": failures,
        "results": results,
    });
    Ok(Emitted::json(&report, passed))
}

fn ladder_report(ladder: &Ladder) -> (serde_json::Value, bool) {
    let passed = ladder.has_passing_tail();
    let steps: Vec<_> = ladder.steps.iter().map(|(s, r)| LocalizationJson::new(s, r)).collect();
    (
        json!({
            "tail_start_j": ladder.tail_start().map(|i| i + 1),
            "passing_tail": passed,
            "monotone": ladder.is_monotone(),
            "steps": steps,
        }),
        passed,
    )
}

fn exactly_one_step(flag: &str, step: Option<&String>, ladder: Option<u32>) -> Result<(), CliError> {
    match (step, ladder) {
        (Some(_), None) | (None, Some(_)) => Ok(()),
        _ => Err(CliError::Usage(format!("give exactly one of --{flag} or --ladder"))),
    }
}

fn run_lemma1(a: &Lemma1Args) -> Result<Emitted, CliError> {
    exactly_one_step("eta", a.eta.as_ref(), a.ladder)?;
    let al = alpha(&a.alpha)?;
    let xi = XiParam::new(parse_rational(&a.xi)?);
    let p = parse_poly(&a.p)?;
    let mut report = json!({
        "k": a.k,
        "xi": rational_string(xi.value()),
        "p": PolyJson::from(&p),
        "alpha": rational_string(al.value()),
    });
    let passed = match a.ladder {
        Some(depth) => {
            let (body, passed) = ladder_report(&lemma1_ladder(a.k, &xi, &p, &al, depth)?);
            report["ladder"] = body;
            passed
        }
        None => {
            let eta = required("eta", a.eta.as_ref())?;
            let r = lemma1_localize(a.k, &xi, &p, &al, &eta)?;
            report["report"] = serde_json::to_value(LocalizationJson::new(&eta, &r)).expect("serializable");
            r.passed
        }
    };
    report["passed"] = passed.into();
    Ok(Emitted::json(&report, passed))
}

fn run_lemma2(a: &Lemma2Args) -> Result<Emitted, CliError> {
    exactly_one_step("h", a.h.as_ref(), a.ladder)?;
    let al = alpha(&a.alpha)?;
    let p = parse_poly(&a.p)?;
    let mut report = json!({
        "k": a.k,
        "p": PolyJson::from(&p),
        "alpha": rational_string(al.value()),
    });
    let passed = match a.ladder {
        Some(depth) => {
            let (body, passed) = ladder_report(&lemma2_ladder(a.k, &p, &al, depth)?);
            report["ladder"] = body;
            passed
        }
        None => {
            let h = required("h", a.h.as_ref())?;
            let r = lemma2_localize(a.k, &p, &al, &h)?;
            report["report"] = serde_json::to_value(LocalizationJson::new(&h, &r)).expect("serializable");
            r.passed
        }
    };
    report["passed"] = passed.into();
    Ok(Emitted::json(&report, passed))
}

fn run_semigroup(a: &SemigroupArgs) -> Result<Emitted, CliError> {
    if let Some(text) = &a.poly {
        let f = parse_poly(text)?;
        let al = alpha(&a.alpha)?;
        let h1 = required("h1", a.h1.as_ref())?;
        let h2 = required("h2", a.h2.as_ref())?;
        let holds = semigroup_check(&f, &al, &h1, &h2);
        let report = json!({
            "alpha": rational_string(al.value()),
            "input": PolyJson::from(&f),
            "h1": rational_string(&h1),
            "h2": rational_string(&h2),
            "passed": holds,
        });
        return Ok(Emitted::json(&report, holds));
    }
    let trials = semigroup_batch(a.seed, a.trials, a.max_degree);
    let failures: Vec<_> = trials
        .iter()
        .filter(|t| !t.holds)
        .map(|t| {
            json!({
                "trial": t.trial,
                "alpha": rational_string(t.alpha.value()),
                "input": PolyJson::from(&t.input),
                "h1": rational_string(&t.h1),
                "h2": rational_string(&t.h2),
            })
        })
        .collect();
    let passed = failures.is_empty();
    let report = json!({
        "seed": a.seed,
        "trials": a.trials,
        "max_degree": a.max_degree,
        "passed": passed,
        "failures": failures,
    });
    Ok(Emitted::json(&report, passed))
}

fn run_flow_trace(a: &FlowTraceArgs, format: Format) -> Result<Emitted, CliError> {
    let f = parse_poly(&a.poly)?;
    let al = alpha(&a.alpha)?;
    let grid = parse_rational_list(&a.grid)?;
    let trace = flow_trace(&f, &al, &grid)?;
    let passed = trace.interior_simple();
    Ok(match format {
        Format::Json => Emitted::json(&TraceJson::from(&trace), passed),
        Format::Csv => Emitted {
            body: trace_csv(&trace),
            extension: "csv",
            passed,
        },
    })
}

fn run_search(a: &SearchArgs, format: Format) -> Result<Emitted, CliError> {
    let al = alpha(&a.alpha)?;
    let grid = parse_rational_list(&a.grid)?;
    let points = counterexample_search(&al, &grid, a.k)?;
    // Search reports, it does not judge: exit 0 whatever it finds.
    if format == Format::Csv {
        let mut body = String::from("xi,passed\n");
        for p in &points {
            body.push_str(&format!("{},{}\n", rational_string(&p.xi), p.passed));
        }
        return Ok(Emitted {
            body,
            extension: "csv",
            passed: true,
        });
    }
    let first_pass = points.iter().find(|p| p.passed).map(|p| rational_string(&p.xi));
    let report = json!({
        "alpha": rational_string(al.value()),
        "k": a.k,
        "points": points
            .iter()
            .map(|p| json!({"xi": rational_string(&p.xi), "passed": p.passed}))
            .collect::<Vec<_>>(),
        "failures": points.iter().filter(|p| !p.passed).count(),
        "first_passing_xi": first_pass,
    });
    Ok(Emitted::json(&report, true))
}

/// Where a report goes: `--output`, else `$LAGFLOW_OUT_DIR/<command>.<ext>`, else stdout.
pub fn output_path(cli: &Cli, emitted: &Emitted, env_dir: Option<PathBuf>) -> Option<PathBuf> {
    cli.output
        .clone()
        .or_else(|| env_dir.map(|d| d.join(format!("{}.{}", cli.command.name(), emitted.extension))))
}

/// Runs the parsed command, writes the report, and returns the exit status.
pub fn run(cli: &Cli) -> i32 {
    let emitted = match dispatch(&cli.command, cli.format) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let env_dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
    match output_path(cli, &emitted, env_dir) {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &emitted.body) {
                eprintln!("error: writing {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{}", emitted.body),
    }
    emitted.exit_code()
}
