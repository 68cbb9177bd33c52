//! Command-line front end: reproducible sampling, density evaluation,
//! special-function evaluation, and the verification suites.
//!
//! Exit codes: 0 success, 2 validation error (bad flags, parameter domain
//! violations, malformed files), 3 numerical failure (non positive definite
//! input, quadrature non-convergence, failed verification checks).
//!
//! Determinism contract: draw `i` of `sample` is generated from an
//! independent ChaCha8 stream — the generator is seeded with `--seed` and
//! switched to stream `i` — so output bytes depend only on the flags and
//! the seed, never on the number of worker threads. `RIESZ_LAB_THREADS`
//! caps the worker count.

use std::fs;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use riesz_lab::beta_riesz::{
    log_density_beta_riesz, sample_beta_riesz_type1, sample_beta_riesz_type2, BetaRieszParams,
    Family,
};
use riesz_lab::division_algebra::{AlgebraTag, HermitianPD};
use riesz_lab::error::Error;
use riesz_lab::json::hpd_from_json;
use riesz_lab::riesz::{
    log_density_inverse_riesz, log_density_riesz, sample_inverse_riesz, sample_riesz_bartlett,
    RieszParams, Variant,
};
use riesz_lab::specfun::{
    gen_pochhammer, ln_c_beta, ln_gamma_weight_neg, ln_gamma_weight_pos, ln_k_beta, ln_mv_beta,
    ln_mv_gamma, ln_stiefel_volume, log_q_kappa, LogValue, Weight,
};
use riesz_lab::spectral::{empirical_eigenvalues, log_joint_eigen_density, EigenDensityParams};
use riesz_lab::verify::{run_suite, SuiteName};

#[derive(Parser)]
#[command(
    name = "riesz-lab",
    version,
    about = "Riesz and beta-Riesz matrix distributions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw matrices and write them as CSV (or JSON lines).
    Sample(SampleArgs),
    /// Evaluate a log-density at a matrix read from JSON.
    Pdf(PdfArgs),
    /// Evaluate a joint eigenvalue log-density.
    EigPdf(EigPdfArgs),
    /// Evaluate one of the special functions.
    Specfun(SpecfunArgs),
    /// Run a verification suite and print one JSON report per check.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DistId {
    #[value(name = "riesz1")]
    Riesz1,
    #[value(name = "riesz2")]
    Riesz2,
    #[value(name = "inv-riesz1")]
    InvRiesz1,
    #[value(name = "inv-riesz2")]
    InvRiesz2,
    #[value(name = "cbeta1")]
    CBeta1,
    #[value(name = "cbeta2")]
    CBeta2,
    #[value(name = "kbeta1")]
    KBeta1,
    #[value(name = "kbeta2")]
    KBeta2,
}

impl DistId {
    fn is_beta_family(self) -> bool {
        matches!(
            self,
            DistId::CBeta1 | DistId::CBeta2 | DistId::KBeta1 | DistId::KBeta2
        )
    }
}

#[derive(Args)]
struct DistParams {
    /// Algebra dimension: 1, 2, 4 (8 is analytic-only and not sampleable).
    #[arg(long)]
    beta: u32,
    /// Matrix dimension m.
    #[arg(long)]
    m: usize,
    /// Shape parameter a.
    #[arg(long)]
    a: f64,
    /// Weight vector kappa as comma-separated values, e.g. 2,1,0.
    #[arg(long)]
    kappa: String,
    /// Second shape parameter b (beta families only).
    #[arg(long)]
    b: Option<f64>,
    /// Second weight vector tau (beta families only).
    #[arg(long)]
    tau: Option<String>,
    /// Scale matrix Sigma as a JSON file (Riesz families; default identity).
    #[arg(long)]
    sigma: Option<String>,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, value_enum)]
    dist: DistId,
    #[command(flatten)]
    params: DistParams,
    /// Number of draws.
    #[arg(long)]
    n: usize,
    /// RNG seed; draw i uses stream i of this seed.
    #[arg(long)]
    seed: u64,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
    /// Append extra per-draw columns; `eigenvalues` adds the sorted spectrum.
    #[arg(long)]
    emit: Option<String>,
    /// Output format.
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct PdfArgs {
    #[arg(long, value_enum)]
    dist: DistId,
    #[command(flatten)]
    params: DistParams,
    /// Matrix argument as a JSON file.
    #[arg(long)]
    matrix: String,
}

#[derive(Args)]
struct EigPdfArgs {
    /// Beta family: c or k.
    #[arg(long)]
    family: String,
    /// Variant: 1 or 2.
    #[arg(long)]
    variant: u8,
    #[arg(long)]
    beta: u32,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    a: f64,
    #[arg(long)]
    kappa: String,
    #[arg(long)]
    b: f64,
    #[arg(long)]
    tau: String,
    /// Ordered eigenvalues, descending, comma-separated.
    #[arg(long)]
    lambda: String,
}

#[derive(Args)]
struct SpecfunArgs {
    /// Function id: ln-mv-gamma, ln-gamma-weight-pos, ln-gamma-weight-neg,
    /// gen-pochhammer, ln-mv-beta, ln-c-beta, ln-k-beta, ln-stiefel-volume,
    /// log-q-kappa.
    #[arg(long = "fn")]
    function: String,
    #[arg(long)]
    beta: u32,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    kappa: Option<String>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    tau: Option<String>,
    /// Frame size n for ln-stiefel-volume.
    #[arg(long)]
    n: Option<usize>,
    /// Matrix JSON file for log-q-kappa.
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id: specfun, riesz, beta, eigen.
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sample(args) => run_sample(args),
        Command::Pdf(args) => run_pdf(args),
        Command::EigPdf(args) => run_eig_pdf(args),
        Command::Specfun(args) => run_specfun(args),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_validation() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}

fn parse_weight(text: &str, m: usize) -> Result<Weight, Error> {
    let parts: Result<Vec<f64>, _> = text.split(',').map(|p| p.trim().parse::<f64>()).collect();
    let parts = parts.map_err(|e| Error::InvalidWeight {
        reason: format!("parse failure: {e}"),
    })?;
    if parts.len() != m {
        return Err(Error::InvalidWeight {
            reason: format!("expected {m} parts, got {}", parts.len()),
        });
    }
    Weight::new(parts)
}

fn parse_lambdas(text: &str) -> Result<Vec<f64>, Error> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|e| Error::EigenvalueOrdering {
                    reason: format!("parse failure: {e}"),
                })
        })
        .collect()
}

fn load_sigma(params: &DistParams, tag: AlgebraTag) -> Result<HermitianPD, Error> {
    match &params.sigma {
        None => HermitianPD::identity(tag, params.m),
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::InvalidMatrixJson {
                reason: format!("{path}: {e}"),
            })?;
            hpd_from_json(&text)
        }
    }
}

enum Sampler {
    Riesz { params: RieszParams, inverse: bool },
    Beta { params: BetaRieszParams },
}

fn build_sampler(dist: DistId, p: &DistParams) -> Result<Sampler, Error> {
    let tag = AlgebraTag::from_beta(p.beta)?;
    let kappa = parse_weight(&p.kappa, p.m)?;
    if dist.is_beta_family() {
        if p.sigma.is_some() {
            return Err(Error::Unsupported {
                context: "beta families are defined at identity scale; --sigma does not apply"
                    .into(),
            });
        }
        let b = p.b.ok_or_else(|| Error::DomainViolation {
            requirement: "--b for beta families".into(),
        })?;
        let tau_text = p.tau.as_deref().ok_or_else(|| Error::DomainViolation {
            requirement: "--tau for beta families".into(),
        })?;
        let tau = parse_weight(tau_text, p.m)?;
        let (family, variant) = match dist {
            DistId::CBeta1 => (Family::C, Variant::TypeI),
            DistId::CBeta2 => (Family::C, Variant::TypeII),
            DistId::KBeta1 => (Family::K, Variant::TypeI),
            DistId::KBeta2 => (Family::K, Variant::TypeII),
            _ => unreachable!(),
        };
        let params = BetaRieszParams::new(tag, p.m, p.a, kappa, b, tau, family, variant)?;
        Ok(Sampler::Beta { params })
    } else {
        let sigma = load_sigma(p, tag)?;
        let (variant, inverse) = match dist {
            DistId::Riesz1 => (Variant::TypeI, false),
            DistId::Riesz2 => (Variant::TypeII, false),
            DistId::InvRiesz1 => (Variant::TypeI, true),
            DistId::InvRiesz2 => (Variant::TypeII, true),
            _ => unreachable!(),
        };
        let params = RieszParams::new(p.a, kappa, sigma, variant)?;
        Ok(Sampler::Riesz { params, inverse })
    }
}

impl Sampler {
    fn draw(&self, rng: &mut ChaCha8Rng) -> Result<HermitianPD, Error> {
        match self {
            Sampler::Riesz {
                params,
                inverse: false,
            } => sample_riesz_bartlett(params, rng),
            Sampler::Riesz {
                params,
                inverse: true,
            } => sample_inverse_riesz(params, rng),
            Sampler::Beta { params } => match params.variant() {
                Variant::TypeI => sample_beta_riesz_type1(params, rng),
                Variant::TypeII => sample_beta_riesz_type2(params, rng),
            },
        }
    }
}

struct Row {
    index: usize,
    components: Vec<f64>,
    logdet: f64,
    eigenvalues: Option<Vec<f64>>,
}

fn worker_count(n: usize) -> usize {
    let available = std::thread::available_parallelism()
        .map(|v| v.get())
        .unwrap_or(1);
    let cap = std::env::var("RIESZ_LAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(available);
    cap.min(available).min(n.max(1))
}

fn run_sample(args: SampleArgs) -> Result<ExitCode, Error> {
    let sampler = build_sampler(args.dist, &args.params)?;
    let want_eigen = match args.emit.as_deref() {
        None => false,
        Some("eigenvalues") => true,
        Some(other) => {
            return Err(Error::Unsupported {
                context: format!("unknown --emit value '{other}'"),
            })
        }
    };
    let m = args.params.m;
    let n = args.n;

    // Fan the draws out; ordering is restored by draw index, and each draw
    // has its own stream, so the thread count cannot change the output.
    let workers = worker_count(n);
    let chunk = n.div_ceil(workers.max(1));
    let mut rows: Vec<Option<Row>> = Vec::with_capacity(n);
    rows.resize_with(n, || None);
    let row_slots: Vec<(usize, &mut [Option<Row>])> = {
        let mut slots = Vec::new();
        let mut rest = rows.as_mut_slice();
        let mut start = 0;
        while !rest.is_empty() {
            let take = chunk.min(rest.len());
            let (head, tail) = rest.split_at_mut(take);
            slots.push((start, head));
            start += take;
            rest = tail;
        }
        slots
    };
    let sampler_ref = &sampler;
    let seed = args.seed;
    let first_error = std::sync::Mutex::new(None::<Error>);
    std::thread::scope(|scope| {
        for (start, slot) in row_slots {
            let first_error = &first_error;
            scope.spawn(move || {
                for (offset, cell) in slot.iter_mut().enumerate() {
                    let index = start + offset;
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(index as u64);
                    match sampler_ref.draw(&mut rng) {
                        Ok(x) => {
                            let eigenvalues = if want_eigen {
                                match empirical_eigenvalues(&x) {
                                    Ok(e) => Some(e),
                                    Err(e) => {
                                        first_error.lock().unwrap().get_or_insert(e);
                                        return;
                                    }
                                }
                            } else {
                                None
                            };
                            let mut components =
                                Vec::with_capacity(m * (m + 1) / 2 * x.tag().beta());
                            for i in 0..m {
                                for j in 0..=i {
                                    components.extend_from_slice(x.matrix().get(i, j).components());
                                }
                            }
                            *cell = Some(Row {
                                index,
                                components,
                                logdet: x.logdet(),
                                eigenvalues,
                            });
                        }
                        Err(e) => {
                            first_error.lock().unwrap().get_or_insert(e);
                            return;
                        }
                    }
                }
            });
        }
    });
    if let Some(e) = first_error.into_inner().unwrap() {
        return Err(e);
    }

    let tag = AlgebraTag::from_beta(args.params.beta)?;
    let mut out = String::new();
    match args.format {
        OutputFormat::Csv => {
            let mut header = vec!["draw_index".to_string()];
            for i in 1..=m {
                for j in 1..=i {
                    for c in 0..tag.beta() {
                        header.push(format!("x_{i}_{j}_{c}"));
                    }
                }
            }
            header.push("logdet".into());
            if want_eigen {
                for i in 1..=m {
                    header.push(format!("eig_{i}"));
                }
            }
            out.push_str(&header.join(","));
            out.push('\n');
            for row in rows.iter().map(|r| r.as_ref().expect("all rows filled")) {
                let mut fields = vec![row.index.to_string()];
                fields.extend(row.components.iter().map(|v| v.to_string()));
                fields.push(row.logdet.to_string());
                if let Some(eig) = &row.eigenvalues {
                    fields.extend(eig.iter().map(|v| v.to_string()));
                }
                out.push_str(&fields.join(","));
                out.push('\n');
            }
        }
        OutputFormat::Json => {
            for row in rows.iter().map(|r| r.as_ref().expect("all rows filled")) {
                let value = serde_json::json!({
                    "draw_index": row.index,
                    "lower_triangle": row.components,
                    "logdet": row.logdet,
                    "eigenvalues": row.eigenvalues,
                });
                out.push_str(&value.to_string());
                out.push('\n');
            }
        }
    }
    write_output(args.out.as_deref(), &out)?;
    Ok(ExitCode::SUCCESS)
}

fn write_output(path: Option<&str>, content: &str) -> Result<(), Error> {
    match path {
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
        Some(p) => fs::write(p, content).map_err(|e| Error::Unsupported {
            context: format!("cannot write {p}: {e}"),
        }),
    }
}

fn run_pdf(args: PdfArgs) -> Result<ExitCode, Error> {
    let text = fs::read_to_string(&args.matrix).map_err(|e| Error::InvalidMatrixJson {
        reason: format!("{}: {e}", args.matrix),
    })?;
    let x = hpd_from_json(&text)?;
    let log_density = match build_sampler(args.dist, &args.params)? {
        Sampler::Riesz {
            params,
            inverse: false,
        } => log_density_riesz(&params, &x)?,
        Sampler::Riesz {
            params,
            inverse: true,
        } => log_density_inverse_riesz(&params, &x)?,
        Sampler::Beta { params } => log_density_beta_riesz(&params, &x)?,
    };
    println!("{}", serde_json::json!({ "log_density": log_density }));
    Ok(ExitCode::SUCCESS)
}

fn run_eig_pdf(args: EigPdfArgs) -> Result<ExitCode, Error> {
    let tag = AlgebraTag::from_beta(args.beta)?;
    let family = match args.family.as_str() {
        "c" => Family::C,
        "k" => Family::K,
        other => {
            return Err(Error::Unsupported {
                context: format!("unknown family '{other}'"),
            })
        }
    };
    let variant = match args.variant {
        1 => Variant::TypeI,
        2 => Variant::TypeII,
        other => {
            return Err(Error::Unsupported {
                context: format!("unknown variant '{other}'"),
            })
        }
    };
    let kappa = parse_weight(&args.kappa, args.m)?;
    let tau = parse_weight(&args.tau, args.m)?;
    let params = EigenDensityParams::new(BetaRieszParams::new(
        tag, args.m, args.a, kappa, args.b, tau, family, variant,
    )?);
    let lams = parse_lambdas(&args.lambda)?;
    let log_density = log_joint_eigen_density(&params, &lams)?;
    println!("{}", serde_json::json!({ "log_density": log_density }));
    Ok(ExitCode::SUCCESS)
}

fn run_specfun(args: SpecfunArgs) -> Result<ExitCode, Error> {
    let tag = AlgebraTag::from_beta(args.beta)?;
    let m = args.m;
    let need_a = || {
        args.a.ok_or_else(|| Error::DomainViolation {
            requirement: "--a for this function".into(),
        })
    };
    let need_kappa = || -> Result<Weight, Error> {
        parse_weight(
            args.kappa
                .as_deref()
                .ok_or_else(|| Error::DomainViolation {
                    requirement: "--kappa for this function".into(),
                })?,
            m,
        )
    };
    let need_b = || {
        args.b.ok_or_else(|| Error::DomainViolation {
            requirement: "--b for this function".into(),
        })
    };
    let need_tau = || -> Result<Weight, Error> {
        parse_weight(
            args.tau.as_deref().ok_or_else(|| Error::DomainViolation {
                requirement: "--tau for this function".into(),
            })?,
            m,
        )
    };
    let value: LogValue = match args.function.as_str() {
        "ln-mv-gamma" => ln_mv_gamma(tag, m, need_a()?)?,
        "ln-gamma-weight-pos" => ln_gamma_weight_pos(tag, m, need_a()?, &need_kappa()?)?,
        "ln-gamma-weight-neg" => ln_gamma_weight_neg(tag, m, need_a()?, &need_kappa()?)?,
        "gen-pochhammer" => gen_pochhammer(tag, m, need_a()?, &need_kappa()?)?,
        "ln-mv-beta" => ln_mv_beta(tag, m, need_a()?, need_b()?)?,
        "ln-c-beta" => ln_c_beta(tag, m, need_a()?, &need_kappa()?, need_b()?, &need_tau()?)?,
        "ln-k-beta" => ln_k_beta(tag, m, need_a()?, &need_kappa()?, need_b()?, &need_tau()?)?,
        "ln-stiefel-volume" => {
            let n = args.n.ok_or_else(|| Error::DomainViolation {
                requirement: "--n for ln-stiefel-volume".into(),
            })?;
            ln_stiefel_volume(tag, m, n)?
        }
        "log-q-kappa" => {
            let path = args
                .matrix
                .as_deref()
                .ok_or_else(|| Error::DomainViolation {
                    requirement: "--matrix for log-q-kappa".into(),
                })?;
            let text = fs::read_to_string(path).map_err(|e| Error::InvalidMatrixJson {
                reason: format!("{path}: {e}"),
            })?;
            let s = hpd_from_json(&text)?;
            LogValue::from_ln(log_q_kappa(&s, &need_kappa()?)?)
        }
        other => {
            return Err(Error::Unsupported {
                context: format!("unknown function '{other}'"),
            })
        }
    };
    println!(
        "{}",
        serde_json::json!({ "log_abs": value.log_abs, "sign": value.sign })
    );
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let suite = SuiteName::parse(&args.suite)?;
    let reports = run_suite(suite, args.seed);
    let mut all_passed = true;
    for report in &reports {
        println!(
            "{}",
            serde_json::to_string(report).expect("report serialization")
        );
        all_passed &= report.passed;
    }
    if all_passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(3))
    }
}
