use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hookpair_core::identities::{self, Report, Theorem};
use hookpair_core::literal::{parse_sequence, LiteralError};
use hookpair_core::region::{self, Region};
use hookpair_core::sample::DEFAULT_SEED;
use hookpair_core::staircase::{
    inverse_master_bijection, master_bijection, verify_lemma, Staircase,
};
use hookpair_core::sweep::{self, Bounds};
use hookpair_core::Partition;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Literal(#[from] LiteralError),
    #[error(transparent)]
    Region(#[from] hookpair_core::RegionError),
    #[error(transparent)]
    Identity(#[from] hookpair_core::IdentityError),
    #[error(transparent)]
    Bijection(#[from] hookpair_core::BijectionError),
    #[error(transparent)]
    Sweep(#[from] hookpair_core::SweepError),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Parser)]
#[command(
    name = "hookpairs",
    version,
    about = "Hook-pair multisets of skew diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the cells of a region, or an ASCII picture of it.
    Construct(ConstructArgs),
    /// Print the hook-pair multiset of a subregion, or one broken column.
    HookPairs(HookPairsArgs),
    /// Run the master bijection on a leg sequence or a staircase.
    Bijection(BijectionArgs),
    /// Verify one instance of an identity.
    Verify(VerifyArgs),
    /// Verify every instance of a bounded family, or a seeded sample of it.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Shape {
    Rect,
    Sr,
    SrTilde,
    Sq,
    /// The Ferrers diagram of `--mu`.
    Ferrers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sub {
    Whole,
    /// Cells of the Ferrers diagram on or below the diagonal.
    P,
    /// Cells of `R(a)` strictly above the diagonal; needs `--k = --n + 1`.
    QRect,
    /// Rectangle part of `SQ` strictly above the diagonal; needs `--k = --n + 1`.
    #[value(name = "qA")]
    QA,
    /// Partition copy on top of `SQ`; needs `--k = --n + 1`.
    #[value(name = "A2")]
    A2,
    #[value(name = "S1")]
    S1,
    #[value(name = "T1")]
    T1,
    #[value(name = "S2")]
    S2,
    #[value(name = "T2")]
    T2,
}

#[derive(Debug, Args)]
struct ShapeArgs {
    #[arg(long, value_enum)]
    shape: Shape,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Partition literal such as `5,2,1`.
    #[arg(long, default_value = "")]
    mu: Partition,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long)]
    render: bool,
}

#[derive(Debug, Args)]
struct HookPairsArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, value_enum, default_value_t = Sub::Whole)]
    sub: Sub,
    /// Print the legs of the broken column at this arm length instead.
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Debug, Args)]
struct BijectionArgs {
    /// Leg-sequence literal such as `0,1,2,1`.
    #[arg(
        long,
        conflicts_with = "staircase",
        required_unless_present = "staircase"
    )]
    legs: Option<String>,
    /// Staircase literal such as `v:2,1,2;h:1,2`.
    #[arg(long, requires = "d")]
    staircase: Option<Staircase>,
    #[arg(long, requires = "staircase")]
    d: Option<usize>,
    #[arg(long)]
    inverse: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    theorem: u8,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    mu: Option<Partition>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    lambda: Option<Partition>,
    /// Include wall time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    theorem: u8,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_k: Option<usize>,
    #[arg(long)]
    max_lambda: Option<usize>,
    #[arg(long)]
    a_span: Option<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Check this many seeded random instances instead of the whole family.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED, requires = "random")]
    seed: u64,
    /// Include wall time in the report.
    #[arg(long)]
    timing: bool,
}

fn build_shape(args: &ShapeArgs) -> Result<Region, CliError> {
    let ShapeArgs { shape, n, k, mu } = args;
    match shape {
        Shape::Rect if !mu.is_empty() => Err(usage("--shape rect takes no --mu")),
        Shape::Rect => Ok(region::rectangle(*n, *k)),
        Shape::Sr => Ok(region::sr(*n, *k, mu)?),
        Shape::SrTilde => Ok(region::sr_tilde(*n, *k, mu)?),
        Shape::Sq => Ok(region::sq(*n, *k, mu)?),
        Shape::Ferrers => Ok(region::ferrers(mu)),
    }
}

/// Enclosing region and subregion for `hook-pairs`.
fn build_pair(args: &HookPairsArgs) -> Result<(Region, Region), CliError> {
    let ShapeArgs { shape, n, k, mu } = &args.shape;
    let (n, k) = (*n, *k);
    let sub_name = args
        .sub
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    let wants = |expected: Shape| {
        if *shape == expected {
            Ok(())
        } else {
            Err(usage(format!(
                "--sub {sub_name} needs --shape {}",
                expected.to_possible_value().expect("named").get_name()
            )))
        }
    };
    let square = || {
        if k == n + 1 {
            Ok(n)
        } else {
            Err(usage(format!("--sub {sub_name} needs --k = --n + 1")))
        }
    };
    match args.sub {
        Sub::Whole => {
            let whole = build_shape(&args.shape)?;
            Ok((whole.clone(), whole))
        }
        Sub::P => {
            wants(Shape::Ferrers)?;
            Ok((region::ferrers(mu), region::split_p(mu)))
        }
        Sub::QRect => {
            wants(Shape::Rect)?;
            let side = square()?;
            Ok((region::rect_a(side), region::split_q_rect(side)))
        }
        Sub::QA | Sub::A2 => {
            wants(Shape::Sq)?;
            let split = region::split_sq(square()?, mu)?;
            let sub = if args.sub == Sub::QA {
                split.q_a
            } else {
                split.a2
            };
            Ok((split.whole, sub))
        }
        Sub::S1 | Sub::T1 => {
            wants(Shape::Rect)?;
            let st = region::s_t_decomposition(n, k, mu)?;
            let sub = if args.sub == Sub::S1 { st.s1 } else { st.t1 };
            Ok((st.rect, sub))
        }
        Sub::S2 | Sub::T2 => {
            wants(Shape::Sq)?;
            let st = region::s_t_decomposition(n, k, mu)?;
            let sub = if args.sub == Sub::S2 { st.s2 } else { st.t2 };
            Ok((st.sq, sub))
        }
    }
}

fn join(seq: &[usize]) -> String {
    seq.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn construct(args: ConstructArgs) -> Result<ExitCode, CliError> {
    let region = build_shape(&args.shape)?;
    if args.render {
        println!("{}", region.render_ascii());
    } else {
        println!("{}", serde_json::to_string(&region).expect("serializable"));
    }
    Ok(ExitCode::SUCCESS)
}

fn hook_pairs(args: HookPairsArgs) -> Result<ExitCode, CliError> {
    let (whole, sub) = build_pair(&args)?;
    match args.d {
        Some(d) => println!(
            "{}",
            serde_json::to_string(&whole.broken_column_legs(&sub, d)?).expect("serializable")
        ),
        None => println!(
            "{}",
            serde_json::to_string(&whole.hook_pairs(&sub)?).expect("serializable")
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn bijection(args: BijectionArgs) -> Result<ExitCode, CliError> {
    let run = |seq: &[usize]| {
        if args.inverse {
            inverse_master_bijection(seq)
        } else {
            master_bijection(seq)
        }
    };
    if let Some(legs) = &args.legs {
        println!("{}", join(&run(&parse_sequence(legs)?)?));
        return Ok(ExitCode::SUCCESS);
    }
    let stairs = args
        .staircase
        .as_ref()
        .expect("clap enforces --legs or --staircase");
    let d = args.d.expect("clap enforces --d with --staircase");
    let report = verify_lemma(stairs, d);
    let (input, target) = if args.inverse {
        (&report.right_legs, &report.left_legs)
    } else {
        (&report.left_legs, &report.right_legs)
    };
    let output = run(input);
    println!("left: {}", join(&report.left_legs));
    println!("right: {}", join(&report.right_legs));
    match &output {
        Ok(seq) => println!("output: {}", join(seq)),
        Err(e) => println!("output: error: {e}"),
    }
    let pass = report.pass && output.as_ref().is_ok_and(|seq| seq == target);
    match &report.failure {
        Some(why) => println!("lemma: fail ({why})"),
        None if pass => println!("lemma: pass"),
        None => println!("lemma: fail (output differs from target)"),
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn theorem(number: u8) -> Theorem {
    Theorem::from_number(number).expect("clap restricts the range")
}

fn emit(mut report: Report, started: Instant, timing: bool) -> ExitCode {
    if timing {
        report.elapsed_ms = Some(started.elapsed().as_millis() as u64);
    }
    println!("{}", report.to_document());
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let theorem = theorem(args.theorem);
    let verdict_for = match theorem {
        Theorem::One | Theorem::Two => {
            if args.a.is_some() || args.lambda.is_some() {
                return Err(usage("--a/--lambda belong to theorem 3"));
            }
            let (Some(n), Some(k)) = (args.n, args.k) else {
                return Err(usage("theorems 1 and 2 need --n and --k"));
            };
            identities::Instance::Box {
                k,
                mu: args.mu.unwrap_or_default(),
                n,
            }
        }
        Theorem::Three => {
            if args.n.is_some() || args.k.is_some() || args.mu.is_some() {
                return Err(usage("--n/--k/--mu belong to theorems 1 and 2"));
            }
            let Some(a) = args.a else {
                return Err(usage("theorem 3 needs --a"));
            };
            identities::Instance::Shifted {
                a,
                lambda: args.lambda.unwrap_or_default(),
            }
        }
    };
    let started = Instant::now();
    let verdict = identities::verify(theorem, &verdict_for)?;
    Ok(emit(
        Report::from_verdict(verdict, None),
        started,
        args.timing,
    ))
}

fn sweep_cmd(args: SweepArgs) -> Result<ExitCode, CliError> {
    let theorem = theorem(args.theorem);
    let bounds = match (args.max_n, args.max_k, args.max_lambda, args.a_span) {
        (Some(max_n), Some(max_k), None, None) => Bounds::Box { max_k, max_n },
        (None, None, Some(max_lambda), Some(a_span)) => Bounds::Shifted { a_span, max_lambda },
        _ => {
            return Err(usage(
                "give either --max-n and --max-k, or --max-lambda and --a-span",
            ))
        }
    };
    if args.jobs == 0 {
        return Err(hookpair_core::SweepError::NoWorkers.into());
    }
    let started = Instant::now();
    let (instances, params) = match args.random {
        None => (
            sweep::instances(theorem, bounds)?,
            serde_json::to_value(bounds),
        ),
        Some(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let family = sweep::random_instances(theorem, bounds, count, &mut rng)?;
            let mut params = serde_json::to_value(bounds).expect("bounds serialize");
            params["random"] = count.into();
            params["seed"] = args.seed.into();
            (family, Ok(params))
        }
    };
    let params = params.expect("bounds serialize");
    let report = sweep::run(theorem, params, &instances, args.jobs)?;
    Ok(emit(report, started, args.timing))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(args) => construct(args),
        Command::HookPairs(args) => hook_pairs(args),
        Command::Bijection(args) => bijection(args),
        Command::Verify(args) => verify(args),
        Command::Sweep(args) => sweep_cmd(args),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
