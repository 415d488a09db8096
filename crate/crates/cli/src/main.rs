//! Command-line reports for the entanglement-entropy moment toolkit:
//! exact closed-form moments, exhaustive exact verification sweeps, oracle
//! cross-checks of the kernel integrals, and Monte Carlo estimation.

mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use entropy_moments::exactnum::symexpr::sym_eval;
use entropy_moments::laguerre::{
    oracle_ia, oracle_ib, quadrature_ia, quadrature_ib, KernelSpec,
};
use entropy_moments::montecarlo::{estimate_moments, Estimate};
use entropy_moments::{identities, moments, Dims};
use report::{render, ExactValue, Report, Summary, F17, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const VERSION: &str = env!("CARGO_PKG_VERSION");
const THREADS_ENV: &str = "ENTROPY_MOMENTS_THREADS";

#[derive(Parser)]
#[command(
    name = "entropy-moments",
    version,
    about = "Exact and Monte Carlo moments of the entanglement entropy of random bipartite pure states"
)]
struct Cli {
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact mean and variance of the entanglement entropy at one dimension pair.
    Moments(MomentsArgs),
    /// Exhaustive exact verification sweeps.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Cross-check a kernel integral against an independent oracle.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Monte Carlo estimation against the closed-form predictions.
    Mc(McArgs),
}

#[derive(Args)]
struct MomentsArgs {
    /// Dimension of the smaller subsystem.
    #[arg(long)]
    m: u32,
    /// Dimension of the larger subsystem.
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Exact equality of the assembled induced second moment with its target,
    /// and of the derived entropy variance with the closed form.
    Conjecture {
        #[arg(long, default_value_t = 15)]
        max_n: u32,
    },
    /// Exact instance sweep of the finite-sum identity suite.
    Identities {
        #[arg(long, default_value_t = 20)]
        max: u32,
    },
    /// Exact equality of the consolidated and general kernel-integral forms,
    /// plus the coefficient difference identities.
    Consolidation {
        #[arg(long, default_value_t = 12)]
        max_n: u32,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// The diagonal integral I_A.
    Ia(OracleArgs),
    /// The off-diagonal integral I_B.
    Ib(OracleArgs),
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum)]
    method: Method,
    /// Relative comparison tolerance for the quadrature method.
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Exact monomial-integration oracle; comparison is exact equality.
    Symbolic,
    /// Floating-point panel quadrature; comparison at relative 1e-6.
    Quadrature,
}

#[derive(Args)]
struct McArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Worker threads (default: the environment variable, else all cores).
    /// Results are independent of this value.
    #[arg(long)]
    threads: Option<usize>,
    /// z-score bound each estimate must satisfy against its prediction.
    #[arg(long, default_value_t = 4.0)]
    z_bound: f64,
}

/// Runtime guard for the sweep commands.
const MAX_SWEEP_BOUND: u32 = 25;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (body, failed) = match run(&cli.command) {
        Ok(pair) => pair,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let out = match &cli.out {
        None => {
            println!("{body}");
            Ok(())
        }
        Some(path) => std::fs::File::create(path)
            .and_then(|mut f| writeln!(f, "{body}"))
            .map_err(|e| e.to_string()),
    };
    if let Err(message) = out {
        eprintln!("error: {message}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    if failed {
        ExitCode::from(EXIT_VERIFICATION_FAILED as u8)
    } else {
        ExitCode::from(EXIT_OK as u8)
    }
}

fn run(command: &Command) -> Result<(String, bool), String> {
    match command {
        Command::Moments(args) => cmd_moments(args),
        Command::Verify(v) => match v {
            VerifyCommand::Conjecture { max_n } => cmd_verify_conjecture(*max_n),
            VerifyCommand::Identities { max } => cmd_verify_identities(*max),
            VerifyCommand::Consolidation { max_n } => cmd_verify_consolidation(*max_n),
        },
        Command::Oracle(o) => match o {
            OracleCommand::Ia(args) => cmd_oracle(args, Integral::A),
            OracleCommand::Ib(args) => cmd_oracle(args, Integral::B),
        },
        Command::Mc(args) => cmd_mc(args),
    }
}

fn parse_dims(m: u32, n: u32) -> Result<Dims, String> {
    Dims::new(m, n).map_err(|e| e.to_string())
}

fn check_bound(bound: u32, name: &str) -> Result<(), String> {
    if bound > MAX_SWEEP_BOUND {
        return Err(format!(
            "{name} = {bound} exceeds the runtime guard ({MAX_SWEEP_BOUND})"
        ));
    }
    Ok(())
}

// ---- moments ----

#[derive(Serialize)]
struct MomentsConfig {
    command: &'static str,
    m: u32,
    n: u32,
    format: &'static str,
}

#[derive(Serialize)]
struct MomentEntry {
    quantity: &'static str,
    ensemble: &'static str,
    exact: ExactValue,
    numeric: F17,
}

fn cmd_moments(args: &MomentsArgs) -> Result<(String, bool), String> {
    let dims = parse_dims(args.m, args.n)?;
    let reports = [
        moments::moment_report(dims, moments::Quantity::MeanEntropy),
        moments::moment_report(dims, moments::Quantity::EntropyVariance),
    ];
    match args.format {
        Format::Csv => {
            let mut body = String::from("quantity,m,n,exact,numeric\n");
            for r in &reports {
                body.push_str(&format!(
                    "{},{},{},\"{}\",{:.16e}\n",
                    r.quantity.as_str(),
                    args.m,
                    args.n,
                    r.exact,
                    r.numeric
                ));
            }
            body.pop();
            Ok((body, false))
        }
        Format::Json => {
            let results: Vec<MomentEntry> = reports
                .iter()
                .map(|r| MomentEntry {
                    quantity: r.quantity.as_str(),
                    ensemble: r.ensemble.as_str(),
                    exact: ExactValue::from_expr(&r.exact),
                    numeric: F17(r.numeric),
                })
                .collect();
            let report = Report {
                version: VERSION,
                config: MomentsConfig {
                    command: "moments",
                    m: args.m,
                    n: args.n,
                    format: "json",
                },
                summary: Summary::new(results.len(), 0),
                results,
            };
            Ok((render(&report), false))
        }
    }
}

// ---- verify ----

#[derive(Serialize)]
struct SweepConfig {
    command: &'static str,
    target: &'static str,
    max: u32,
}

#[derive(Serialize)]
struct ConjectureCheck {
    m: u32,
    n: u32,
    second_moment_equal: bool,
    variance_equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    mismatch: Option<Mismatch>,
}

#[derive(Serialize)]
struct Mismatch {
    lhs: String,
    rhs: String,
}

fn cmd_verify_conjecture(max_n: u32) -> Result<(String, bool), String> {
    check_bound(max_n, "--max-n")?;
    let mut results = Vec::new();
    let mut failed = 0usize;
    for n in 1..=max_n {
        for m in 1..=n {
            let d = Dims::new(m, n).expect("m <= n");
            let assembled = moments::assemble_induced_second_moment(d);
            let target = moments::induced_second_moment_target(d);
            let via = moments::entropy_variance_via_induced(d);
            let closed = moments::entropy_variance(d);
            let second_moment_equal = assembled == target;
            let variance_equal = via == closed;
            let mismatch = if second_moment_equal && variance_equal {
                None
            } else if !second_moment_equal {
                Some(Mismatch {
                    lhs: assembled.to_string(),
                    rhs: target.to_string(),
                })
            } else {
                Some(Mismatch {
                    lhs: via.to_string(),
                    rhs: closed.to_string(),
                })
            };
            if mismatch.is_some() {
                failed += 1;
            }
            results.push(ConjectureCheck {
                m,
                n,
                second_moment_equal,
                variance_equal,
                mismatch,
            });
        }
    }
    let report = Report {
        version: VERSION,
        config: SweepConfig {
            command: "verify",
            target: "conjecture",
            max: max_n,
        },
        summary: Summary::new(results.len(), failed),
        results,
    };
    Ok((render(&report), failed > 0))
}

#[derive(Serialize)]
struct IdentityGroup {
    id: String,
    cases: usize,
    params: Vec<(i64, i64)>,
    failures: Vec<IdentityFailure>,
}

#[derive(Serialize)]
struct IdentityFailure {
    params: (i64, i64),
    lhs: String,
    rhs: String,
}

fn cmd_verify_identities(max: u32) -> Result<(String, bool), String> {
    check_bound(max, "--max")?;
    let mut results = Vec::new();
    let mut checks = 0usize;
    let mut failed = 0usize;
    for id in identities::ALL_IDENTITIES {
        let sweep = identities::sweep_identity(id, i64::from(max));
        let mut group = IdentityGroup {
            id: id.to_string(),
            cases: sweep.len(),
            params: Vec::with_capacity(sweep.len()),
            failures: Vec::new(),
        };
        for r in sweep {
            checks += 1;
            group.params.push(r.params);
            if !r.equal {
                failed += 1;
                group.failures.push(IdentityFailure {
                    params: r.params,
                    lhs: r.lhs.to_string(),
                    rhs: r.rhs.to_string(),
                });
            }
        }
        results.push(group);
    }
    let report = Report {
        version: VERSION,
        config: SweepConfig {
            command: "verify",
            target: "identities",
            max,
        },
        summary: Summary::new(checks, failed),
        results,
    };
    Ok((render(&report), failed > 0))
}

#[derive(Serialize)]
struct ConsolidationCheck {
    m: u32,
    n: u32,
    ia_equal: bool,
    ib_equal: bool,
    coefficient_identities_equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    mismatch: Option<Mismatch>,
}

fn cmd_verify_consolidation(max_n: u32) -> Result<(String, bool), String> {
    check_bound(max_n, "--max-n")?;
    use entropy_moments::exactnum::rational::rat;
    use moments::coefficients as coef;
    let mut results = Vec::new();
    let mut failed = 0usize;
    for n in 4..=max_n {
        for m in 3..n {
            let d = Dims::new(m, n).expect("m < n");
            let ia_general = moments::ia_closed(d);
            let ib_general = moments::ib_closed(d);
            let ia_cons = moments::ia_consolidated(d).expect("domain checked");
            let ib_cons = moments::ib_consolidated(d).expect("domain checked");
            let (mi, ni) = (i64::from(m), i64::from(n));
            let coeffs_ok = coef::a2(mi, ni) == coef::b5(mi, ni)
                && coef::a1(mi, ni) - coef::b4(mi, ni)
                    == rat(mi * (ni - mi) * (ni - mi + 1) * (2 * ni + mi + 1), 1)
                && coef::a3(mi, ni) - coef::b6(mi, ni)
                    == rat(mi * (mi + 1) * (ni - mi) * (ni - mi + 1), 2);
            let ia_equal = ia_cons == ia_general;
            let ib_equal = ib_cons == ib_general;
            let mismatch = if ia_equal && ib_equal {
                None
            } else if !ia_equal {
                Some(Mismatch {
                    lhs: ia_cons.to_string(),
                    rhs: ia_general.to_string(),
                })
            } else {
                Some(Mismatch {
                    lhs: ib_cons.to_string(),
                    rhs: ib_general.to_string(),
                })
            };
            if mismatch.is_some() || !coeffs_ok {
                failed += 1;
            }
            results.push(ConsolidationCheck {
                m,
                n,
                ia_equal,
                ib_equal,
                coefficient_identities_equal: coeffs_ok,
                mismatch,
            });
        }
    }
    let report = Report {
        version: VERSION,
        config: SweepConfig {
            command: "verify",
            target: "consolidation",
            max: max_n,
        },
        summary: Summary::new(results.len(), failed),
        results,
    };
    Ok((render(&report), failed > 0))
}

// ---- oracle ----

enum Integral {
    A,
    B,
}

#[derive(Serialize)]
struct OracleConfig {
    command: &'static str,
    integral: &'static str,
    m: u32,
    n: u32,
    method: &'static str,
    tolerance: F17,
}

#[derive(Serialize)]
struct OracleResult {
    closed_form: ExactValue,
    closed_numeric: F17,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_exact: Option<ExactValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_numeric: Option<F17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    deviation_abs: Option<F17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    deviation_rel: Option<F17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_equal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quadrature_error_estimate: Option<F17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quadrature_converged: Option<bool>,
    passed: bool,
}

fn cmd_oracle(args: &OracleArgs, which: Integral) -> Result<(String, bool), String> {
    let dims = parse_dims(args.m, args.n)?;
    if args.n > 8 {
        return Err(format!("oracle requires m <= n <= 8, got {dims}"));
    }
    let closed = match which {
        Integral::A => moments::ia_closed(dims),
        Integral::B => moments::ib_closed(dims),
    };
    let closed_numeric = closed.eval_f64();
    let (oracle_exact, oracle_numeric, quad_err, converged, exact_equal) = match args.method {
        Method::Symbolic => {
            let oracle = match which {
                Integral::A => oracle_ia(dims),
                Integral::B => oracle_ib(dims),
            };
            let numeric = oracle.eval_f64();
            let equal = oracle == closed;
            (Some(oracle), Some(numeric), None, None, Some(equal))
        }
        Method::Quadrature => {
            let spec = KernelSpec::new(dims);
            let q = match which {
                Integral::A => quadrature_ia(&spec),
                Integral::B => quadrature_ib(&spec),
            };
            match q {
                Ok(q) => (
                    None,
                    Some(q.value),
                    Some(q.error_estimate),
                    Some(true),
                    None,
                ),
                Err(entropy_moments::Error::QuadratureNoConvergence { estimate, .. }) => {
                    (None, None, Some(estimate), Some(false), None)
                }
                Err(other) => return Err(other.to_string()),
            }
        }
    };
    let deviation_abs = oracle_numeric.map(|v| (closed_numeric - v).abs());
    let deviation_rel =
        deviation_abs.map(|d| d / closed_numeric.abs().max(f64::MIN_POSITIVE));
    let passed = match args.method {
        Method::Symbolic => exact_equal == Some(true),
        Method::Quadrature => {
            converged == Some(true) && deviation_rel.unwrap_or(f64::INFINITY) < args.tolerance
        }
    };
    let report = Report {
        version: VERSION,
        config: OracleConfig {
            command: "oracle",
            integral: match which {
                Integral::A => "ia",
                Integral::B => "ib",
            },
            m: args.m,
            n: args.n,
            method: match args.method {
                Method::Symbolic => "symbolic",
                Method::Quadrature => "quadrature",
            },
            tolerance: F17(args.tolerance),
        },
        summary: Summary::new(1, usize::from(!passed)),
        results: OracleResult {
            closed_form: ExactValue::from_expr(&closed),
            closed_numeric: F17(closed_numeric),
            oracle_exact: oracle_exact.as_ref().map(ExactValue::from_expr),
            oracle_numeric: oracle_numeric.map(F17),
            deviation_abs: deviation_abs.map(F17),
            deviation_rel: deviation_rel.map(F17),
            exact_equal,
            quadrature_error_estimate: quad_err.map(F17),
            quadrature_converged: converged,
            passed,
        },
    };
    Ok((render(&report), !passed))
}

// ---- mc ----

#[derive(Serialize)]
struct McConfig {
    command: &'static str,
    m: u32,
    n: u32,
    samples: u64,
    seed: u64,
    z_bound: F17,
}

#[derive(Serialize)]
struct McEstimate {
    value: F17,
    std_error: F17,
    prediction: F17,
    z: F17,
    passed: bool,
}

#[derive(Serialize)]
struct McResults {
    mean_s: McEstimate,
    var_s: McEstimate,
    mean_t: McEstimate,
    mean_t2: McEstimate,
    mean_r: McEstimate,
    var_r: McEstimate,
    corr_r_s: CorrCheck,
    invariants: McInvariants,
}

#[derive(Serialize)]
struct CorrCheck {
    value: F17,
    bound: F17,
    passed: bool,
}

#[derive(Serialize)]
struct McInvariants {
    max_identity_dev: F17,
    max_unit_trace_dev: F17,
    min_s: F17,
    max_s: F17,
    entropy_upper_bound: F17,
    passed: bool,
}

fn z_score(est: &Estimate, prediction: f64) -> f64 {
    if est.std_error > 0.0 {
        (est.value - prediction) / est.std_error
    } else if est.value == prediction {
        0.0
    } else {
        f64::INFINITY
    }
}

fn mc_estimate(est: &Estimate, prediction: f64, z_bound: f64) -> McEstimate {
    let z = z_score(est, prediction);
    McEstimate {
        value: F17(est.value),
        std_error: F17(est.std_error),
        prediction: F17(prediction),
        z: F17(if z.is_finite() { z } else { f64::MAX }),
        passed: z.is_finite() && z.abs() < z_bound,
    }
}

fn cmd_mc(args: &McArgs) -> Result<(String, bool), String> {
    let dims = parse_dims(args.m, args.n)?;
    if args.samples < 1_000 {
        return Err(format!(
            "--samples must be at least 1000, got {}",
            args.samples
        ));
    }
    let threads = args.threads.unwrap_or_else(|| {
        std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(0)
    });
    let rep = estimate_moments(dims, args.samples, args.seed, threads)
        .map_err(|e| e.to_string())?;
    let product = f64::from(dims.product());
    let predictions = [
        sym_eval(&moments::page_mean(dims), 20),
        sym_eval(&moments::entropy_variance(dims), 20),
        sym_eval(&moments::induced_mean(dims), 20),
        sym_eval(&moments::induced_second_moment_target(dims), 20),
        product,
        product,
    ];
    let estimates = [
        &rep.mean_s, &rep.var_s, &rep.mean_t, &rep.mean_t2, &rep.mean_r, &rep.var_r,
    ];
    let entries: Vec<McEstimate> = estimates
        .iter()
        .zip(predictions)
        .map(|(e, p)| mc_estimate(e, p, args.z_bound))
        .collect();
    let corr_bound = 3.0 / (args.samples as f64).sqrt();
    let corr = CorrCheck {
        value: F17(rep.corr_r_s),
        bound: F17(corr_bound),
        passed: rep.corr_r_s.abs() < corr_bound,
    };
    let ln_m = f64::from(dims.m()).ln();
    let invariants_ok = rep.max_identity_dev <= 1e-10
        && rep.max_unit_trace_dev <= 1e-12
        && rep.min_s >= 0.0
        && rep.max_s <= ln_m + 1e-12;
    let invariants = McInvariants {
        max_identity_dev: F17(rep.max_identity_dev),
        max_unit_trace_dev: F17(rep.max_unit_trace_dev),
        min_s: F17(rep.min_s),
        max_s: F17(rep.max_s),
        entropy_upper_bound: F17(ln_m),
        passed: invariants_ok,
    };
    let mut entries = entries.into_iter();
    let results = McResults {
        mean_s: entries.next().unwrap(),
        var_s: entries.next().unwrap(),
        mean_t: entries.next().unwrap(),
        mean_t2: entries.next().unwrap(),
        mean_r: entries.next().unwrap(),
        var_r: entries.next().unwrap(),
        corr_r_s: corr,
        invariants,
    };
    let failed = [
        results.mean_s.passed,
        results.var_s.passed,
        results.mean_t.passed,
        results.mean_t2.passed,
        results.mean_r.passed,
        results.var_r.passed,
        results.corr_r_s.passed,
        results.invariants.passed,
    ]
    .iter()
    .filter(|p| !**p)
    .count();
    let report = Report {
        version: VERSION,
        config: McConfig {
            command: "mc",
            m: args.m,
            n: args.n,
            samples: args.samples,
            seed: args.seed,
            z_bound: F17(args.z_bound),
        },
        summary: Summary::new(8, failed),
        results,
    };
    Ok((render(&report), failed > 0))
}
