//! Command line front end: reads a JSON job, runs one computation or
//! verification and prints a deterministic text or JSON report.
//!
//! Exit codes: 0 success / identity holds, 1 identity violated, 2 bad input.

mod render;

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nc_cayley::charpoly::{decompose_thm22, preadjoint, sdet, symmetric_charpoly};
use nc_cayley::ideal::{certify_sandwich_residual, ideal_membership, IdealMembershipInstance};
use nc_cayley::job::{JobSpec, OutputFormat};
use nc_cayley::oracle::commutative_oracle;
use nc_cayley::parse::parse_element;
use nc_cayley::random::{random_unimodular, rng, RandomParams};
use nc_cayley::verify::{
    sandwich_product_identity_with, verify_invariance, verify_prop21, verify_thm22_with, verify_thm31_with,
    VerificationReport,
};
use nc_cayley::{Element, Matrix, Rational, Ring, RingDescriptor, RingKind};

use render::Out;

const DEFAULT_MAX_N: usize = 4;

#[derive(Parser)]
#[command(name = "nc-cayley", version, about = "Symmetric characteristic polynomials over noncommutative rings")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock time in verification reports.
    #[arg(long, global = true)]
    timing: bool,
    /// Largest accepted matrix size.
    #[arg(long, global = true, env = "NC_CAYLEY_MAX_N", default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct JobArg {
    /// Job file (JSON); `-` reads standard input.
    job: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of the symmetric characteristic polynomial.
    Charpoly(JobArg),
    /// The preadjoint matrix and the symmetric determinant.
    Preadjoint(JobArg),
    /// lambda_i together with the matrices C_i and D_i.
    Decompose(JobArg),
    /// Check one of the identities for the job's matrix.
    Verify {
        claim: ClaimArg,
        #[command(flatten)]
        job: JobArg,
        /// Add 1 to lambda_0 before checking (thm22, thm31, sandwich-product).
        #[arg(long)]
        perturb_lambda: bool,
    },
    /// Membership in the T-ideal of [x,y][u,v]. With a free-algebra job,
    /// certifies every component of its sandwich residual; with --expr,
    /// decides a single homogeneous element.
    IdealMembership {
        #[arg(required_unless_present = "expr", conflicts_with = "expr")]
        job: Option<PathBuf>,
        /// Homogeneous element, e.g. "[x1,x2]*[x3,x4]".
        #[arg(long)]
        expr: Option<String>,
        /// Generator count for --expr.
        #[arg(long, default_value_t = 4)]
        generators: usize,
    },
    /// Compare against classical cofactor formulas on random integer matrices.
    Oracle {
        #[command(subcommand)]
        which: OracleKind,
    },
    /// Write a job file to standard output.
    Gen {
        #[command(subcommand)]
        which: GenKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    Prop21,
    Thm22,
    Thm31,
    Invariance,
    SandwichProduct,
}

#[derive(Subcommand)]
enum OracleKind {
    Commutative {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Entries are drawn from [-bound, bound].
        #[arg(long, default_value_t = 5)]
        bound: i64,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Free-algebra matrix with n^2 distinct generators.
    Generic {
        #[arg(long)]
        n: usize,
    },
    Random {
        #[arg(long, value_parser = parse_kind)]
        ring: RingKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        generators: Option<usize>,
    },
}

fn parse_kind(s: &str) -> Result<RingKind, String> {
    RingKind::from_name(s).ok_or_else(|| {
        let names: Vec<_> = RingKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown ring {s:?}; expected one of {}", names.join(", "))
    })
}

/// Failure before any result was produced.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Run = Result<ExitCode, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run_command(&cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(arg: &JobArg, cli: &Cli) -> Result<(JobSpec, Matrix), InputError> {
    let text = if arg.job.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&arg.job).map_err(|e| format!("{}: {e}", arg.job.display()))?
    };
    let job = JobSpec::from_json(&text)?;
    check_n(job.n, cli.max_n)?;
    let a = job.matrix()?;
    Ok((job, a))
}

fn check_n(n: usize, max_n: usize) -> Result<(), InputError> {
    if n > max_n {
        return Err(InputError(format!(
            "n = {n} exceeds the limit of {max_n} (raise it with --max-n or NC_CAYLEY_MAX_N)"
        )));
    }
    if n >= 5 {
        eprintln!("warning: n = {n}; the preadjoint has (n-1)! n! terms per column and may be slow");
    }
    Ok(())
}

fn out_for(cli: &Cli, job: Option<&JobSpec>) -> Out {
    let json = cli.json || job.is_some_and(|j| j.options.format == OutputFormat::Json);
    Out::new(json, cli.timing)
}

fn run_command(cli: &Cli) -> Run {
    let out = &out_for(cli, None);
    match &cli.command {
        Command::Charpoly(arg) => {
            let (job, a) = load(arg, cli)?;
            let out = &out_for(cli, Some(&job));
            out.charpoly(&a, &symmetric_charpoly(&a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Preadjoint(arg) => {
            let (job, a) = load(arg, cli)?;
            let out = &out_for(cli, Some(&job));
            out.preadjoint(&a, &preadjoint(&a), &sdet(&a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose(arg) => {
            let (job, a) = load(arg, cli)?;
            let out = &out_for(cli, Some(&job));
            out.decomposition(&a, &decompose_thm22(&a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            claim,
            job,
            perturb_lambda,
        } => {
            let (job, a) = load(job, cli)?;
            let out = &out_for(cli, Some(&job));
            let report = verify(*claim, &job, &a, *perturb_lambda)?;
            out.report(&report);
            Ok(exit_for(report.holds()))
        }
        Command::IdealMembership {
            job: Some(path),
            ..
        } => {
            let (job, a) = load(&JobArg { job: path.clone() }, cli)?;
            let out = &out_for(cli, Some(&job));
            let certs = certify_sandwich_residual(&a)?;
            out.certification(&a, &certs);
            Ok(exit_for(certs.iter().all(|c| c.membership.member)))
        }
        Command::IdealMembership {
            expr: Some(expr),
            generators,
            ..
        } => {
            let ring = RingDescriptor::free(*generators);
            let target: Element = parse_element(&ring, expr)?;
            let instance = IdealMembershipInstance::new(target)?;
            let membership = ideal_membership(&instance);
            out.membership(&instance, &membership);
            Ok(exit_for(membership.member))
        }
        Command::IdealMembership { .. } => unreachable!("clap requires a job or --expr"),
        Command::Oracle {
            which: OracleKind::Commutative { n, trials, seed, bound },
        } => {
            if *n == 0 {
                return Err(InputError("n must be at least 1".into()));
            }
            check_n(*n, cli.max_n)?;
            let summary = commutative_oracle::<Rational>(*n, *trials, *seed, *bound);
            out.oracle(*n, *seed, &summary);
            Ok(exit_for(summary.passed()))
        }
        Command::Gen { which } => {
            let job = match which {
                GenKind::Generic { n } => {
                    check_n(*n, cli.max_n)?;
                    JobSpec::generic(*n)
                }
                GenKind::Random {
                    ring,
                    n,
                    seed,
                    generators,
                } => {
                    check_n(*n, cli.max_n)?;
                    JobSpec::random(*ring, *n, *seed, *generators, &RandomParams::default())?
                }
            };
            if job.n == 0 {
                return Err(InputError("n must be at least 1".into()));
            }
            println!("{}", job.to_json());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn verify(
    claim: ClaimArg,
    job: &JobSpec,
    a: &Matrix,
    perturb: bool,
) -> Result<VerificationReport<Rational>, InputError> {
    let perturbable = matches!(claim, ClaimArg::Thm22 | ClaimArg::Thm31 | ClaimArg::SandwichProduct);
    if perturb && !perturbable {
        return Err(InputError("--perturb-lambda applies to thm22, thm31 and sandwich-product".into()));
    }
    let mut dec = decompose_thm22(a);
    if perturb {
        dec.lambda[0] = dec.lambda[0].add_ref(&Element::one(a.ring()));
    }
    Ok(match claim {
        ClaimArg::Prop21 => verify_prop21(a),
        ClaimArg::Thm22 => verify_thm22_with(a, &dec),
        ClaimArg::Thm31 => verify_thm31_with(a, &dec.lambda),
        ClaimArg::SandwichProduct => sandwich_product_identity_with(a, &dec),
        ClaimArg::Invariance => {
            let g = match job.conjugator_matrix()? {
                Some(g) => g,
                None => random_unimodular(a.ring(), a.n(), &mut rng(job.options.seed)),
            };
            verify_invariance(a, &g)?
        }
    })
}
