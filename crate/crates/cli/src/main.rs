//! `ncgb` command-line front end.

mod polyfile;
mod survey;
mod theorem2;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ncgb::classify::{analyze_configuration, analyze_relations, parse_report, report_to_latex, report_to_text, AnalyzeOptions, VerdictKind};
use ncgb::completion::{is_strongly_undetermined, make_symbolic_matrices, Configuration, SymbolicMatrices};
use ncgb::fixtures::{central_matrices, central_order, sample_matrices, sample_order};
use ncgb::groebner::{make_partial_gb_with, reduce, small_basis_with, GbOptions, RuleSet};
use ncgb::numeric::{self, BlockAssignment, NumericError};
use ncgb::OrderKind;

use polyfile::{format_polys, order_for, parse_polys, read};

#[derive(Parser, Debug)]
#[command(name = "ncgb", version, about = "Noncommutative Gröbner bases and block matrix inverse completion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Order spec: `<` within a group, `<<` between groups, e.g. `a<b<<x`.
    #[arg(long, global = true)]
    order: Option<String>,
    /// lex, graded-lex or multigraded-lex.
    #[arg(long, global = true, default_value = "multigraded-lex", value_parser = parse_kind)]
    order_kind: OrderKind,
    /// Partial Gröbner basis iterations (per-command default).
    #[arg(long, global = true)]
    iters: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Longest lead word kept while building a basis.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Wall-clock cap, per configuration for `survey`.
    #[arg(long, global = true)]
    timeout_secs: Option<u64>,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Tolerance on normalized numeric residuals.
    #[arg(long, global = true, default_value_t = numeric::DEFAULT_TOLERANCE)]
    tol: f64,
}

fn parse_kind(s: &str) -> Result<OrderKind, String> {
    OrderKind::parse(s).ok_or_else(|| format!("unknown order kind `{s}`"))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze one configuration and write its report.
    Analyze {
        /// `k`/`u` string of length 2n², A then B row-major.
        config: Option<String>,
        /// File with two n-line `k`/`u` grids separated by a blank line.
        #[arg(long)]
        config_grid: Option<PathBuf>,
        /// A named problem under its own labels instead of a configuration.
        #[arg(long, value_enum)]
        problem: Option<Problem>,
        /// Level of the compatibility nondegeneracy check.
        #[arg(long, default_value_t = 3)]
        ell: usize,
        #[arg(long)]
        no_escalate: bool,
        /// Compute a basis even for strongly undetermined configurations.
        #[arg(long)]
        force: bool,
    },
    /// Analyze class representatives and tally verdicts.
    Survey {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        unknowns: usize,
        /// Number of seeded non-strongly-undetermined representatives.
        #[arg(long, default_value_t = 20, conflicts_with = "full")]
        sample: usize,
        /// Every representative. Slow for n = 3.
        #[arg(long)]
        full: bool,
        /// Let the sample draw strongly undetermined representatives too.
        #[arg(long)]
        include_strongly_undetermined: bool,
    },
    /// Certify the central 3×3 result symbolically.
    Theorem2 {
        #[arg(long, value_enum, default_value = "forward")]
        direction: theorem2::Direction,
    },
    /// Partial Gröbner basis of the polynomials in a file.
    Gb {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Normal forms of polynomials against rules given as polynomials.
    Reduce {
        #[arg(long)]
        rules: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// A subset of the input generating the same ideal, as far as a partial
    /// basis can tell.
    Smallbasis {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Solve completions numerically and draw random instances.
    #[command(subcommand)]
    Numeric(NumericCommand),
    /// Typeset a report as a LaTeX document.
    EmitLatex {
        #[arg(long)]
        report: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum NumericCommand {
    /// Solve the central problem for given known blocks.
    Theorem2 {
        #[arg(long)]
        blocks: PathBuf,
    },
    /// Solve a decoupled report for given known blocks.
    Backsolve {
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        blocks: PathBuf,
        /// Values for unknowns whose equations cannot be solved directly.
        #[arg(long)]
        presolved: Option<PathBuf>,
    },
    /// Random consistent instance: known blocks of an invertible matrix and
    /// its inverse.
    Harvest {
        #[arg(long, conflicts_with = "problem")]
        config: Option<String>,
        /// Named problem instead of a canonical configuration.
        #[arg(long, value_enum)]
        problem: Option<Problem>,
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Also write the unknown blocks here.
        #[arg(long)]
        unknowns_out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Problem {
    Sample,
    Central,
}

impl Problem {
    fn matrices(self, kind: OrderKind) -> SymbolicMatrices {
        match self {
            Problem::Sample => sample_matrices(&sample_order(kind)),
            Problem::Central => central_matrices(&central_order(kind)),
        }
    }
}

/// Exit status of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Success,
    Failure,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    print_config(&cli);
    match run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failure) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn print_config(cli: &Cli) {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    eprintln!(
        "# ncgb {:?} order={} order-kind={} iters={} seed={} jobs={} max-degree={} timeout-secs={} out={} tol={:e}",
        cli.command,
        opt(cli.order.clone()),
        cli.order_kind,
        opt(cli.iters.map(|v| v.to_string())),
        cli.seed,
        opt(cli.jobs.map(|v| v.to_string())),
        opt(cli.max_degree.map(|v| v.to_string())),
        opt(cli.timeout_secs.map(|v| v.to_string())),
        opt(cli.out.as_ref().map(|p| p.display().to_string())),
        cli.tol,
    );
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn deadline(cli: &Cli) -> Option<Instant> {
    cli.timeout_secs.map(|s| Instant::now() + Duration::from_secs(s))
}

fn gb_options(cli: &Cli, default_iters: usize) -> GbOptions {
    let mut o = GbOptions::new(cli.iters.unwrap_or(default_iters));
    o.max_degree = cli.max_degree;
    o.deadline = deadline(cli);
    o
}

fn run(cli: &Cli) -> Result<Outcome> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global().ok();
    }
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Analyze { config, config_grid, problem, ell, no_escalate, force } => {
            let opts = AnalyzeOptions {
                gb_iters: cli.iters.unwrap_or(2),
                order_kind: cli.order_kind,
                ell: *ell,
                escalate: !no_escalate,
                max_degree: cli.max_degree,
                deadline: deadline(cli),
                skip_strongly_undetermined: !force,
                ..AnalyzeOptions::default()
            };
            let report = match (config, config_grid, problem) {
                (Some(s), None, None) => analyze_configuration(&Configuration::parse(s)?, &opts)?,
                (None, Some(p), None) => analyze_configuration(&Configuration::parse_grid(&read(p)?)?, &opts)?,
                (None, None, Some(problem)) => {
                    let mats = problem.matrices(cli.order_kind);
                    let mut r = analyze_relations(mats.order(), &mats.relations().all(), &opts)?;
                    r.strongly_undetermined = is_strongly_undetermined(&mats.configuration());
                    r
                }
                _ => bail!("give exactly one of a configuration string, --config-grid or --problem"),
            };
            emit(out, &report_to_text(&report))?;
            let compat = report.verdict.compat.map_or("-".to_string(), |c| c.holds.to_string());
            println!(
                "RESULT: verdict={} strongly-undetermined={} compat-nondegenerate={} iterations={} truncated={}",
                report.verdict.kind, report.strongly_undetermined, compat, report.iterations, report.verdict.truncated_basis
            );
            Ok(if report.verdict.kind == VerdictKind::Unclassified { Outcome::Failure } else { Outcome::Success })
        }
        Command::Survey { n, unknowns, sample, full, include_strongly_undetermined } => {
            if *n == 0 || *unknowns > 2 * n * n {
                bail!("need n >= 1 and unknowns <= 2n²");
            }
            let args = survey::SurveyArgs {
                n: *n,
                unknowns: *unknowns,
                sample: if *full { None } else { Some(*sample) },
                include_strongly_undetermined: *include_strongly_undetermined,
                seed: cli.seed,
                jobs: cli.jobs,
                iters: cli.iters.unwrap_or(2),
                max_degree: cli.max_degree,
                timeout: Duration::from_secs(cli.timeout_secs.unwrap_or(120)),
            };
            let started = Instant::now();
            let table = survey::run(&args)?;
            eprintln!("# survey finished in {:.1} s", started.elapsed().as_secs_f64());
            emit(out, &table)?;
            Ok(Outcome::Success)
        }
        Command::Theorem2 { direction } => {
            let max = cli.iters.unwrap_or(match direction {
                theorem2::Direction::Forward => 4,
                theorem2::Direction::Converse => 10,
            });
            let (table, ok) = theorem2::run(*direction, max, cli.max_degree, deadline(cli))?;
            emit(out, &table)?;
            Ok(if ok { Outcome::Success } else { Outcome::Failure })
        }
        Command::Gb { input } => {
            let text = read(input)?;
            let order = order_for(cli.order_kind, cli.order.as_deref(), &[&text])?;
            let gens = parse_polys(&text, &order, &input.display().to_string())?;
            let basis = make_partial_gb_with(&gens, &order, &gb_options(cli, 2))?;
            emit(out, &format_polys(basis.polys()))?;
            println!(
                "RESULT: polys={} iterations={} closed={} truncated={}",
                basis.len(),
                basis.iterations(),
                basis.closed(),
                basis.truncated()
            );
            Ok(if basis.aborted() { Outcome::Failure } else { Outcome::Success })
        }
        Command::Reduce { rules, input } => {
            let rules_text = read(rules)?;
            let text = read(input)?;
            let order = order_for(cli.order_kind, cli.order.as_deref(), &[&rules_text, &text])?;
            let rule_polys = parse_polys(&rules_text, &order, &rules.display().to_string())?;
            let set = RuleSet::from_polys(&order, &rule_polys);
            let normal: Vec<_> = parse_polys(&text, &order, &input.display().to_string())?.iter().map(|p| reduce(p, &set)).collect();
            emit(out, &format_polys(&normal))?;
            let zero = normal.iter().filter(|p| p.is_zero()).count();
            println!("RESULT: zero={} nonzero={}", zero, normal.len() - zero);
            Ok(Outcome::Success)
        }
        Command::Smallbasis { input } => {
            let text = read(input)?;
            let order = order_for(cli.order_kind, cli.order.as_deref(), &[&text])?;
            let gens = parse_polys(&text, &order, &input.display().to_string())?;
            let small = small_basis_with(&gens, &order, &gb_options(cli, 2))?;
            emit(out, &format_polys(&small))?;
            println!("RESULT: kept={} of={}", small.len(), gens.len());
            Ok(Outcome::Success)
        }
        Command::Numeric(cmd) => run_numeric(cli, cmd),
        Command::EmitLatex { report } => {
            let report = parse_report(&read(report)?).map_err(|e| anyhow!("{}: {e}", report.display()))?;
            emit(out, &report_to_latex(&report))?;
            Ok(Outcome::Success)
        }
    }
}

fn load_blocks(path: &Path, tol: f64) -> Result<BlockAssignment> {
    let mut b = BlockAssignment::parse(&read(path)?).with_context(|| path.display().to_string())?;
    b.tolerance = tol;
    Ok(b)
}

fn unknowns_text(m: usize, values: &BTreeMap<String, numeric::Matrix>) -> String {
    let mut a = BlockAssignment::new(m);
    for (name, v) in values {
        a.insert(name, v.clone()).expect("blocks share one size");
    }
    a.to_text()
}

/// Input problems are errors; failed checks are outcomes.
fn numeric_outcome(e: NumericError) -> Result<Outcome> {
    match e {
        NumericError::Parse { .. } | NumericError::Dimension { .. } | NumericError::MissingSymbol(_) => Err(e.into()),
        other => {
            println!("RESULT: fail {other}");
            Ok(Outcome::Failure)
        }
    }
}

fn run_numeric(cli: &Cli, cmd: &NumericCommand) -> Result<Outcome> {
    let out = cli.out.as_deref();
    match cmd {
        NumericCommand::Theorem2 { blocks } => {
            let knowns = load_blocks(blocks, cli.tol)?;
            let sol = match numeric::solve_theorem2(&knowns) {
                Ok(s) => s,
                Err(e) => return numeric_outcome(e),
            };
            emit(out, &unknowns_text(knowns.m(), &sol.unknowns))?;
            println!(
                "RESULT: pass compat={:e},{:e},{:e} z-agreement={:e} ab={:e} ba={:e}",
                sol.compat[0],
                sol.compat[1],
                sol.compat[2],
                sol.z_agreement(),
                sol.residuals.ab,
                sol.residuals.ba
            );
            let ok = sol.residuals.within(cli.tol) && sol.z_agreement() <= cli.tol;
            Ok(if ok { Outcome::Success } else { Outcome::Failure })
        }
        NumericCommand::Backsolve { report, blocks, presolved } => {
            let report = parse_report(&read(report)?).map_err(|e| anyhow!("{}: {e}", report.display()))?;
            let knowns = load_blocks(blocks, cli.tol)?;
            let pre = match presolved {
                Some(p) => load_blocks(p, cli.tol)?.blocks().clone(),
                None => BTreeMap::new(),
            };
            let done = match numeric::backsolve_decoupled(&report, &knowns, &pre, None) {
                Ok(d) => d,
                Err(e) => return numeric_outcome(e),
            };
            emit(out, &unknowns_text(knowns.m(), &done.unknowns))?;
            let (ab, ba) = done.residuals.map_or(("-".into(), "-".into()), |r| (format!("{:e}", r.ab), format!("{:e}", r.ba)));
            println!("RESULT: pass equations={:e} ab={ab} ba={ba}", done.equation_residual);
            Ok(if done.residuals.is_none_or(|r| r.within(cli.tol)) { Outcome::Success } else { Outcome::Failure })
        }
        NumericCommand::Harvest { config, problem, m, unknowns_out } => {
            let mats = match (config, problem) {
                (Some(s), None) => make_symbolic_matrices(&Configuration::parse(s)?),
                (None, Some(p)) => p.matrices(OrderKind::MultiGradedLex),
                _ => bail!("give exactly one of --config or --problem"),
            };
            let h = match numeric::harvest(&mats, *m, cli.seed) {
                Ok(h) => h,
                Err(e) => return numeric_outcome(e),
            };
            emit(out, &h.knowns.to_text())?;
            if let Some(p) = unknowns_out {
                std::fs::write(p, unknowns_text(*m, &h.unknowns)).with_context(|| format!("writing {}", p.display()))?;
            }
            println!("RESULT: harvested m={} knowns={} unknowns={}", m, h.knowns.blocks().len(), h.unknowns.len());
            Ok(Outcome::Success)
        }
    }
}
