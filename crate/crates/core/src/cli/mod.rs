//! The `sl3inv` command line: argument parsing and the four subcommands.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad input.

mod cache;
mod table;

pub use cache::{cache_key, Cache, CACHE_ENV};
pub use table::{KnotEntry, KnotTable};

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::arith::{emit_canonical, LaurentPoly};
use crate::braid::{cut_independence_at, invariant, markov_at, modified_trace_with, parse_braid, state_count, BraidWord, Engine, Strategy, INTERPOLATION_LIMIT};
use crate::error::{Error, Result};
use crate::invariants::{cone_coefficients, default_sample, torus_closed_form_check, verify_tensor_decompositions, verify_z_skein, KnotResult};
use crate::rep::{check_relations, RepKind};
use crate::report::Report;
use crate::rmatrix::{
    build_rt, verify_ambidexterity, verify_intertwiner, verify_partial_traces, verify_rdecomp, verify_skein_charpoly, verify_sl2_minimal_polynomial,
    verify_yang_baxter, YbMode,
};

/// Set to run the sl3 Yang-Baxter check symbolically in the `yangbaxter` suite.
pub const SYMBOLIC_YB_ENV: &str = "SL3INV_SYMBOLIC_YB";

const SPOT_SEED: u64 = 0xcac4e;

#[derive(Parser, Debug)]
#[command(name = "sl3inv", version, about = "Two-variable sl3 invariant of braid closures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Invariant of a single braid closure.
    Compute {
        /// Signed generators, e.g. "1 -2 1 -2".
        #[arg(long, allow_hyphen_values = true)]
        braid: Option<String>,
        /// Strand count; defaults to one more than the largest generator.
        #[arg(long)]
        strands: Option<usize>,
        /// Name of a knot in the bundled table.
        #[arg(long, conflicts_with = "braid")]
        knot: Option<String>,
        /// sl3, sl2, X+, X-, Y+, Y-, W+ or W-.
        #[arg(long, default_value = "sl3")]
        rep: String,
        #[arg(long, value_enum, default_value_t = Format::Expanded)]
        format: Format,
        /// Open strand (1-based) for the full modified trace.
        #[arg(long)]
        cut: Option<usize>,
    },
    /// Every entry of a knot table, with caching.
    Table {
        /// JSON knot table; the bundled table if omitted.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value = "sl3")]
        rep: String,
        /// Worker threads; all cores if omitted.
        #[arg(long)]
        jobs: Option<usize>,
        /// Cache file; overrides the environment and the default beside the table.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Closed form for the (2n+1, 2) torus knot.
    Torus {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Expanded,
    Cone,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Relations,
    Yangbaxter,
    Skein,
    Rdecomp,
    Decomp,
    Markov,
    Zskein,
    All,
}

/// Failure with its exit code.
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Braid(_) | Error::UnknownGenerator(_) | Error::Invalid(_) | Error::Json(_) | Error::Io(_) | Error::NotAKnot(_) => 2,
            _ => 1,
        };
        Exit(code, e.to_string())
    }
}

fn bad_input(msg: impl Into<String>) -> Exit {
    Exit(2, msg.into())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Compute { braid, strands, knot, rep, format, cut } => cmd_compute(braid, strands, knot, &rep, format, cut, out),
        Command::Table { file, rep, jobs, cache } => cmd_table(file.as_deref(), &rep, jobs, cache, out, err),
        Command::Verify { suite } => cmd_verify(suite, out, err),
        Command::Torus { n } => cmd_torus(n, out),
    };
    match result {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn rep_kind(tag: &str) -> std::result::Result<RepKind, Exit> {
    RepKind::from_tag(tag).ok_or_else(|| bad_input(format!("unknown representation {tag:?}")))
}

fn io(e: std::io::Error) -> Exit {
    Exit(1, e.to_string())
}

fn cmd_compute(
    braid: Option<String>,
    strands: Option<usize>,
    knot: Option<String>,
    rep: &str,
    format: Format,
    cut: Option<usize>,
    out: &mut dyn Write,
) -> std::result::Result<i32, Exit> {
    let kind = rep_kind(rep)?;
    let (name, b) = match (braid, knot) {
        (Some(text), None) => {
            let n = match strands {
                Some(n) => n,
                None => infer_strands(&text)?,
            };
            ("braid".to_string(), parse_braid(&text, n)?)
        }
        (None, Some(name)) => {
            let table = KnotTable::bundled();
            let entry = table.get(&name).ok_or_else(|| bad_input(format!("unknown knot {name:?}")))?;
            (name.clone(), entry.braid_word()?)
        }
        _ => return Err(bad_input("give either --braid or --knot")),
    };
    let engine = Engine::new(kind.build());
    let start = Instant::now();
    let value = match cut {
        Some(c) => modified_trace_with(&engine, &b, c, Strategy::Auto)?,
        None => invariant(&engine, &b)?,
    };
    let seconds = start.elapsed().as_secs_f64();
    let text = match format {
        Format::Expanded => emit_canonical(&value),
        Format::Cone => cone_coefficients(&value)?.to_string().trim_end().to_string(),
        Format::Json => serde_json::to_string_pretty(&KnotResult::new(&name, &b, kind, &value, seconds)).map_err(Error::from)?,
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(0)
}

fn infer_strands(text: &str) -> std::result::Result<usize, Exit> {
    let mut n = 1;
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let l: i32 = tok.parse().map_err(|_| bad_input(format!("bad braid letter {tok:?}")))?;
        n = n.max(l.unsigned_abs() as usize + 1);
    }
    Ok(n)
}

/// `<dir>/<stem>.cache.json` next to a table file.
pub fn default_cache_path(table: &Path) -> PathBuf {
    let stem = table.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "knots".into());
    table.with_file_name(format!("{stem}.cache.json"))
}

fn open_cache(file: Option<&Path>, flag: Option<PathBuf>) -> Result<Cache> {
    let path = flag.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from)).or_else(|| file.map(default_cache_path));
    match path {
        Some(p) => Cache::open(&p),
        None => Ok(Cache::in_memory()),
    }
}

fn cmd_table(file: Option<&Path>, rep: &str, jobs: Option<usize>, cache_flag: Option<PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> std::result::Result<i32, Exit> {
    let kind = rep_kind(rep)?;
    let table = match file {
        Some(p) => KnotTable::load(p)?,
        None => KnotTable::bundled(),
    };
    let mut cache = open_cache(file, cache_flag)?;
    let engine = Engine::new(kind.build());
    let tag = kind.tag();
    let words: Vec<BraidWord> = table.knots.iter().map(|k| k.braid_word()).collect::<Result<_>>()?;
    let cached: Vec<Option<Result<LaurentPoly>>> = words.iter().map(|b| cache.get(&tag, b)).collect();

    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build().map_err(|e| Exit(1, e.to_string()))?;
    let evaluate = |i: usize| -> (KnotResult, Option<LaurentPoly>) {
        let (entry, b) = (&table.knots[i], &words[i]);
        let start = Instant::now();
        let size = state_count(&engine, b);
        if cached[i].is_none() && size > INTERPOLATION_LIMIT {
            let reason = format!("{size} states exceed the interpolation limit of {INTERPOLATION_LIMIT}");
            return (KnotResult::skipped(&entry.name, b, kind, reason), None);
        }
        let (value, fresh) = match &cached[i] {
            Some(Ok(v)) => (Ok(v.clone()), false),
            _ => (invariant(&engine, b), true),
        };
        match value {
            Ok(v) => {
                let r = KnotResult::new(&entry.name, b, kind, &v, start.elapsed().as_secs_f64());
                (r, fresh.then_some(v))
            }
            Err(e) => (KnotResult::failed(&entry.name, b, kind, &e), None),
        }
    };
    let rows: Vec<(KnotResult, Option<LaurentPoly>)> = pool.install(|| (0..words.len()).into_par_iter().map(evaluate).collect());

    let mut hits = Vec::new();
    for (i, (r, fresh)) in rows.iter().enumerate() {
        match fresh {
            Some(v) => cache.insert(&tag, &words[i], v),
            None if r.error.is_none() && r.skipped.is_none() => hits.push(i),
            None => {}
        }
        let how = match (fresh, &r.error, &r.skipped) {
            (Some(_), _, _) => "computed",
            (_, Some(_), _) => "failed",
            (_, _, Some(_)) => "skipped",
            _ => "cached",
        };
        let _ = writeln!(err, "{:<10} {:>9.3}s {how}", r.name, r.seconds);
    }
    cache.save()?;
    let _ = writeln!(err, "{} entries, {} from cache", rows.len(), hits.len());

    let mut code = 0;
    if !hits.is_empty() {
        let i = hits[StdRng::seed_from_u64(SPOT_SEED).gen_range(0..hits.len())];
        let fresh = invariant(&engine, &words[i])?;
        if emit_canonical(&fresh) != rows[i].0.polynomial {
            let _ = writeln!(err, "cache entry for {} disagrees with a fresh computation", rows[i].0.name);
            code = 1;
        }
    }
    let results: Vec<&KnotResult> = rows.iter().map(|r| &r.0).collect();
    writeln!(out, "{}", serde_json::to_string_pretty(&results).map_err(Error::from)?).map_err(io)?;
    if results.iter().any(|r| !r.passed()) {
        code = 1;
    }
    Ok(code)
}

fn all_reps() -> Vec<RepKind> {
    let mut v = vec![RepKind::VermaSl3, RepKind::VermaSl2];
    v.extend(RepKind::all_heads());
    v
}

pub fn suite_relations() -> Report {
    let mut report = Report::new("relations");
    for kind in all_reps() {
        let rep = kind.build();
        let rel = check_relations(&rep);
        let mut r = Report::new(format!("relations {}", kind.tag()));
        for (name, ok) in rel.checks {
            r.check(name, ok);
        }
        report.extend(r);
        let (rt, rt_inv) = build_rt(&rep);
        report.extend(verify_intertwiner(&rt, &rep));
        let mut inv = verify_intertwiner(&rt_inv, &rep);
        inv.name = format!("intertwiner {} inverse", kind.tag());
        report.extend(inv);
    }
    report
}

pub fn suite_yang_baxter(symbolic_sl3: bool) -> Report {
    let mut report = Report::new("yangbaxter");
    for kind in all_reps() {
        let mode = if kind == RepKind::VermaSl3 && !symbolic_sl3 { YbMode::Sampled } else { YbMode::Symbolic };
        report.extend(verify_yang_baxter(&kind.build(), mode));
    }
    report
}

pub fn suite_skein() -> Report {
    let mut report = Report::new("skein");
    report.extend(verify_skein_charpoly(&RepKind::VermaSl3.build()));
    report.extend(verify_sl2_minimal_polynomial(&RepKind::VermaSl2.build()));
    for kind in all_reps() {
        let rep = kind.build();
        report.extend(verify_partial_traces(&rep));
        report.extend(verify_ambidexterity(&rep));
    }
    report
}

/// Point-wise Markov moves and cut independence for bundled knots on at most
/// `max_strands` strands.
pub fn suite_markov(max_strands: usize, trials: usize) -> Result<Report> {
    let mut report = Report::new("markov");
    let engine = Engine::new(RepKind::VermaSl3.build());
    for (i, k) in KnotTable::bundled().knots.iter().enumerate() {
        let b = k.braid_word()?;
        if b.strands > max_strands {
            continue;
        }
        report.extend(markov_at(&engine, &b, trials, max_strands + 1, i as u64));
        report.extend(cut_independence_at(&engine, &b, i as u64)?);
    }
    Ok(report)
}

pub fn suite_zskein() -> Result<Report> {
    let mut report = Report::new("zskein");
    for kind in RepKind::all_heads() {
        report.extend(verify_z_skein(kind)?);
    }
    Ok(report)
}

pub fn run_suite(suite: Suite) -> Result<Report> {
    let symbolic = std::env::var_os(SYMBOLIC_YB_ENV).is_some();
    Ok(match suite {
        Suite::Relations => suite_relations(),
        Suite::Yangbaxter => suite_yang_baxter(symbolic),
        Suite::Skein => suite_skein(),
        Suite::Rdecomp => verify_rdecomp(&RepKind::VermaSl3.build()),
        Suite::Decomp => verify_tensor_decompositions(&default_sample())?,
        Suite::Markov => suite_markov(3, 5)?,
        Suite::Zskein => suite_zskein()?,
        Suite::All => {
            let mut report = Report::new("all");
            for s in [Suite::Relations, Suite::Yangbaxter, Suite::Skein, Suite::Rdecomp, Suite::Decomp, Suite::Markov, Suite::Zskein] {
                report.extend(run_suite(s)?);
            }
            report
        }
    })
}

fn cmd_verify(suite: Suite, out: &mut dyn Write, err: &mut dyn Write) -> std::result::Result<i32, Exit> {
    let report = run_suite(suite)?;
    let _ = write!(err, "{report}");
    writeln!(out, "{}", report.to_json()).map_err(io)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_torus(n: u32, out: &mut dyn Write) -> std::result::Result<i32, Exit> {
    if n == 0 {
        return Err(bad_input("--n must be at least 1"));
    }
    let engine = Engine::new(RepKind::VermaSl3.build());
    let (value, report) = torus_closed_form_check(&engine, n)?;
    writeln!(out, "{}", emit_canonical(&value)).map_err(io)?;
    write!(out, "{report}").map_err(io)?;
    Ok(if report.passed() { 0 } else { 1 })
}
