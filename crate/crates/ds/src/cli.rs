//! Argument parsing and command dispatch.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ds_core::arith::Rational;
use ds_core::descartes::{quintuple, CurvatureTriple};
use ds_core::geometry::{classical_area, complete_scene, render_svg, QuadSurd};
use ds_core::sequences::{generate, parse_bfile, verify_terms, SequenceId};
use ds_core::solvers::SolverSet;

use crate::check::{conjecture_scan, crosscheck};
use crate::table::Format;
use crate::tables::{build_table, compare_with_golden, TableId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ds", version, about = "Integer-curvature Descartes triples")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one of the six reference tables.
    Table(TableArgs),
    /// Compare brute-force enumeration with the union of the solvers.
    Crosscheck(CrosscheckArgs),
    /// Render the circles of a triple as SVG.
    Figure(FigureArgs),
    /// Areas of the classical configuration with radii 1, 1 and 1 + a.
    Areas(AreasArgs),
    /// Scan the first positive family-II candidates for final solutions.
    Conjecture(ConjectureArgs),
    /// Integer sequence generators and snapshot verification.
    Seq {
        #[command(subcommand)]
        command: SeqCommand,
    },
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Table number, 1 to 6.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
    pub id: u8,
    /// n_max for tables 1 and 6, c3_max for 2, 4 and 5, s_max for 3.
    #[arg(long)]
    pub bound: Option<i64>,
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    pub format: Format,
    /// Compare with the bundled golden copy instead of printing.
    #[arg(long)]
    pub check: bool,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolverName {
    EqualPair,
    ZeroC4,
    CaseI,
    CaseIi,
    CaseIii,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    #[arg(long)]
    pub c3_max: i64,
    /// Leave a solver out of the union.
    #[arg(long, value_enum)]
    pub without: Vec<SolverName>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Three positive curvatures, comma separated.
    #[arg(long)]
    pub triple: String,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct AreasArgs {
    /// Positive rational, e.g. 5/2.
    #[arg(long)]
    pub a: String,
    /// Also print the length scale that makes the first area equal this value.
    #[arg(long)]
    pub target: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long, default_value_t = 50000)]
    pub a_max: i64,
    /// Write the per-a statistics as CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum SeqCommand {
    /// Compare generated terms with a b-file snapshot.
    Verify {
        #[arg(long, required_unless_present = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_os_t = default_data_dir())]
        data_dir: PathBuf,
    },
    /// Print terms in b-file format.
    Generate {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

pub fn default_data_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data"))
}

/// Conventional snapshot file name, e.g. `b058529.txt`.
pub fn snapshot_path(dir: &Path, id: SequenceId) -> PathBuf {
    dir.join(format!("b{}.txt", &id.as_str()[1..]))
}

/// Parses arguments and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Table(a) => table(a, out),
        Command::Crosscheck(a) => {
            if a.c3_max < 4 {
                bail!("--c3-max must be at least 4");
            }
            let mut set = SolverSet::ALL;
            for w in a.without {
                match w {
                    SolverName::EqualPair => set.equal_pair = false,
                    SolverName::ZeroC4 => set.zero_c4 = false,
                    SolverName::CaseI => set.case_i = false,
                    SolverName::CaseIi => set.case_ii = false,
                    SolverName::CaseIii => set.case_iii = false,
                }
            }
            let report = crosscheck(a.c3_max, set);
            out.write_all(report.report().as_bytes())?;
            Ok(if report.is_clean() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Figure(a) => {
            let svg = figure_svg(&a.triple)?;
            fs::write(&a.out, svg).with_context(|| format!("writing {}", a.out.display()))?;
            writeln!(out, "wrote {}", a.out.display())?;
            Ok(EXIT_OK)
        }
        Command::Areas(a) => {
            out.write_all(areas_report(&a.a, a.target)?.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Conjecture(a) => {
            let scan = conjecture_scan(a.a_max);
            if let Some(path) = &a.out {
                fs::write(path, scan.csv()).with_context(|| format!("writing {}", path.display()))?;
            }
            out.write_all(scan.summary().as_bytes())?;
            Ok(if scan.counterexample_count() == 0 { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Seq { command } => seq(command, out),
    }
}

fn table(a: TableArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let id = TableId::from_number(a.id).expect("range checked by the parser");
    let bound = a.bound.unwrap_or_else(|| id.default_bound());
    if bound < 1 {
        bail!("--bound must be positive");
    }
    let t = build_table(id, bound);
    if !a.check {
        out.write_all(t.render(a.format).as_bytes())?;
        return Ok(EXIT_OK);
    }
    if bound != id.default_bound() {
        bail!("--check compares against the golden bound {}", id.default_bound());
    }
    let diff = compare_with_golden(id, &t);
    if let Some((golden, generated)) = &diff.header_mismatch {
        writeln!(out, "header: golden {golden:?}, generated {generated:?}")?;
    }
    for r in &diff.missing {
        writeln!(out, "- {}", r.join(","))?;
    }
    for r in &diff.extra {
        writeln!(out, "+ {}", r.join(","))?;
    }
    if diff.order_differs {
        writeln!(out, "rows agree but are ordered differently")?;
    }
    writeln!(out, "table {}: {} rows, {}", a.id, t.rows.len(), if diff.is_empty() { "matches golden" } else { "DIFFERS" })?;
    Ok(if diff.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
}

pub fn parse_triple(text: &str) -> anyhow::Result<CurvatureTriple> {
    let parts: Vec<i64> = text
        .trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .with_context(|| format!("cannot parse triple {text:?}"))?;
    let [a, b, c] = parts[..] else {
        bail!("expected three curvatures, got {}", parts.len());
    };
    CurvatureTriple::sorted(a, b, c).map_err(|e| anyhow!("{e}"))
}

/// SVG of the full configuration of a DS triple.
pub fn figure_svg(text: &str) -> anyhow::Result<String> {
    let t = parse_triple(text)?;
    if quintuple(&t).is_none() {
        let q = complete_scene(&t).q;
        bail!("{t} is not a DS triple: q = {q} is irrational");
    }
    Ok(render_svg(&complete_scene(&t)))
}

pub fn areas_report(a_text: &str, target: Option<f64>) -> anyhow::Result<String> {
    let a: Rational = a_text.trim().parse().map_err(|_| anyhow!("cannot parse {a_text:?} as p/q"))?;
    if a <= Rational::from_integer(0) {
        bail!("a must be positive");
    }
    let r = classical_area(a);
    let line = |name: &str, v: &QuadSurd| format!("{name}/pi = {v} = {:.15}\n{name} = {:.12}\n", v.to_f64(), v.to_f64() * std::f64::consts::PI);
    let mut s = format!("a = {a}\n");
    s += &line("F", &r.area_over_pi);
    s += &line("F'", &r.area_prime_over_pi);
    if let Some(t) = target {
        s += &format!("scale for F = {t}: {:.12}\n", r.scale_for_area(t));
    }
    Ok(s)
}

fn seq(command: SeqCommand, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        SeqCommand::Generate { id, count } => {
            let id: SequenceId = id.parse().map_err(|e| anyhow!("{e}"))?;
            for (i, v) in generate(id, count).iter().enumerate() {
                writeln!(out, "{} {v}", id.offset() + i as i64)?;
            }
            Ok(EXIT_OK)
        }
        SeqCommand::Verify { id, all, data_dir } => {
            let ids: Vec<SequenceId> = if all {
                SequenceId::ALL.to_vec()
            } else {
                vec![id.expect("required by the parser").parse().map_err(|e| anyhow!("{e}"))?]
            };
            let mut code = EXIT_OK;
            for id in ids {
                let path = snapshot_path(&data_dir, id);
                let text = fs::read_to_string(&path)
                    .with_context(|| format!("missing snapshot for {id}: expected {}", path.display()))?;
                let terms = parse_bfile(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
                let report = verify_terms(id, &terms).map_err(|e| anyhow!("{}: {e}", path.display()))?;
                match &report.divergence {
                    None => writeln!(out, "{id}: {} terms match", report.snapshot_len)?,
                    Some(d) => {
                        code = EXIT_MISMATCH;
                        writeln!(
                            out,
                            "{id}: diverges at index {}: snapshot {}, generated {} ({} terms matched)",
                            d.index, d.snapshot, d.generated, report.matched
                        )?;
                    }
                }
            }
            Ok(code)
        }
    }
}
