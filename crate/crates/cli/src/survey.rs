use std::fmt::Write;
use std::time::{Duration, Instant};

use anyhow::Result;
use ncgb::classify::{analyze_configuration, AnalyzeOptions, SolutionReport, VerdictKind};
use ncgb::completion::{enumerate_representatives, equivalence_class, is_strongly_undetermined, Configuration};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub struct SurveyArgs {
    pub n: usize,
    pub unknowns: usize,
    /// `None` runs every representative.
    pub sample: Option<usize>,
    pub include_strongly_undetermined: bool,
    pub seed: u64,
    pub jobs: Option<usize>,
    pub iters: usize,
    pub max_degree: Option<usize>,
    pub timeout: Duration,
}

struct Row {
    index: usize,
    cfg: Configuration,
    class_size: usize,
    report: Option<SolutionReport>,
    error: Option<String>,
}

/// Tabulates analyses of class representatives. Rows are ordered by
/// representative index regardless of `jobs`.
pub fn run(args: &SurveyArgs) -> Result<String> {
    let reps: Vec<Configuration> = enumerate_representatives(args.n, args.unknowns).collect();
    let total_configs: usize = reps.iter().map(|c| equivalence_class(c).len()).sum();
    let pool: Vec<usize> = (0..reps.len())
        .filter(|&i| args.sample.is_none() || args.include_strongly_undetermined || !is_strongly_undetermined(&reps[i]))
        .collect();
    let chosen: Vec<usize> = match args.sample {
        None => pool,
        Some(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let mut idx: Vec<usize> = sample(&mut rng, pool.len(), k.min(pool.len())).into_iter().map(|i| pool[i]).collect();
            idx.sort_unstable();
            idx
        }
    };

    let work = |&index: &usize| {
        let cfg = reps[index].clone();
        let opts = AnalyzeOptions {
            gb_iters: args.iters,
            max_degree: args.max_degree,
            deadline: Some(Instant::now() + args.timeout),
            parallel: false,
            ..AnalyzeOptions::default()
        };
        let class_size = equivalence_class(&cfg).len();
        let started = Instant::now();
        let (report, error) = match analyze_configuration(&cfg, &opts) {
            Ok(r) => (Some(r), None),
            Err(e) => (None, Some(e.to_string())),
        };
        eprintln!("# {index} {cfg} {:.2} s", started.elapsed().as_secs_f64());
        Row { index, cfg, class_size, report, error }
    };
    let rows: Vec<Row> = match args.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j).build()?.install(|| chosen.par_iter().map(work).collect()),
        None => chosen.par_iter().map(work).collect(),
    };

    let mut out = String::new();
    writeln!(out, "# index\tconfiguration\tclass-size\tverdict\tcompat-nondegenerate\tstrongly-undetermined\titerations\ttruncated")?;
    let mut tally = [0usize; 4];
    let mut compat_false = 0usize;
    let mut truncated = 0usize;
    let mut su = 0usize;
    for row in &rows {
        let Some(r) = &row.report else {
            writeln!(out, "{}\t{}\t{}\terror: {}", row.index, row.cfg, row.class_size, row.error.as_deref().unwrap_or(""))?;
            continue;
        };
        let compat = match r.verdict.compat {
            Some(c) if c.holds => "true",
            Some(_) => "false",
            None => "-",
        };
        compat_false += usize::from(compat == "false");
        truncated += usize::from(r.verdict.truncated_basis);
        su += usize::from(r.strongly_undetermined);
        tally[r.verdict.kind as usize] += 1;
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            row.index,
            row.cfg,
            row.class_size,
            r.verdict.kind,
            compat,
            r.strongly_undetermined,
            r.iterations,
            r.verdict.truncated_basis
        )?;
    }
    writeln!(out, "RESULT: n={} unknowns={} classes={} configurations={}", args.n, args.unknowns, reps.len(), total_configs)?;
    writeln!(out, "RESULT: rows={} strongly-undetermined={} compat-degenerate={} truncated={}", rows.len(), su, compat_false, truncated)?;
    for kind in [
        VerdictKind::FormallyDecoupledWeak,
        VerdictKind::EssentiallyDecoupledWeak,
        VerdictKind::FormallyBacksolvableWeak,
        VerdictKind::Unclassified,
    ] {
        writeln!(out, "RESULT: verdict {}={}", kind, tally[kind as usize])?;
    }
    let errors = rows.iter().filter(|r| r.error.is_some()).count();
    writeln!(out, "RESULT: errors={errors}")?;
    Ok(out)
}
