//! The `revsz` command line. [`run`] takes its streams as arguments so the
//! binary stays a thin shell around it.

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use revsz_core::constructions::{build_bn, build_dumbbell, build_theta};
use revsz_core::enumeration::Method;
use revsz_core::graph6::{from_graph6, to_graph6};
use revsz_core::verify::verify_lemma3;
use revsz_core::Error;

use crate::parallel::{conjecture_report, enumerate_parallel, inequality_report};
use crate::record::ReportRecord;
use crate::render::{self, Format};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "revsz", version, about = "Revised Szeged index of bicyclic graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Index values for newline-delimited graph6 from FILE or stdin.
    Compute {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the graph6 string of a family member.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// All connected bicyclic graphs on N vertices, one graph6 per line, sorted.
    Enumerate {
        n: usize,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the extremal claims; exit 0 iff every check passes.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Cycle on N-1 vertices with one vertex duplicated.
    Bn { n: usize },
    /// Two hubs joined by paths of lengths A, B, C.
    Theta { a: usize, b: usize, c: usize },
    /// Cycles of lengths P and Q joined by a path of length T.
    Dumbbell { p: usize, q: usize, t: usize },
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long, default_value = "naive", value_parser = parse_method)]
    method: Method,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Debug, Args)]
struct ReportArgs {
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Verify {
    /// Maximum and runner-up of the revised Szeged index for n in LO..=HI.
    Conjecture {
        lo: usize,
        hi: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        report: ReportArgs,
        /// Also write n,max_q4,second_q4 as CSV.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Per-edge deviation analysis of theta(A,B,C).
    Lemma3 {
        a: usize,
        b: usize,
        c: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Deviation-sum lower bounds for every class with n in LO..=HI.
    Inequalities {
        lo: usize,
        hi: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|_| format!("unknown method `{s}`, expected naive or structural"))
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit(&mut self, text: &str, output: Option<&PathBuf>) -> Result<(), i32> {
        let written = match output {
            Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
            None => self.stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
        };
        written.map_err(|e| self.fail(EXIT_USAGE, &e))
    }

    fn fail(&mut self, code: i32, msg: &str) -> i32 {
        let _ = writeln!(self.stderr, "revsz: {msg}");
        code
    }
}

/// Parses `args` (program name first) and runs the command; returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut io = Io { stdin, stdout, stderr };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { io.stderr.write_all(text.as_bytes()) } else { io.stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) | Err(code) => code,
    }
}

/// Rejects orders the enumerator cannot handle: too large is a budget
/// failure, too small a usage error.
fn check_orders(io: &mut Io, method: Method, lo: usize, hi: usize, min: usize) -> Result<(), i32> {
    let (_, max) = method.range();
    if lo > hi {
        return Err(io.fail(EXIT_USAGE, &format!("empty range {lo}..={hi}")));
    }
    if lo < min.max(method.range().0) {
        return Err(io.fail(EXIT_USAGE, &format!("n must be at least {}", min.max(method.range().0))));
    }
    if hi > max {
        return Err(io.fail(
            EXIT_BUDGET,
            &format!("n = {hi} exceeds the {method} enumeration budget (n <= {max})"),
        ));
    }
    Ok(())
}

fn core_error(io: &mut Io, e: Error) -> i32 {
    let code = match e {
        Error::OutOfRange { n, max, .. } if n > max => EXIT_BUDGET,
        _ => EXIT_USAGE,
    };
    io.fail(code, &e.to_string())
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn dispatch(command: Command, io: &mut Io) -> Result<i32, i32> {
    match command {
        Command::Compute { file, format, output } => {
            let reader: Box<dyn BufRead + '_> = match &file {
                Some(path) => Box::new(BufReader::new(
                    fs::File::open(path).map_err(|e| io.fail(EXIT_USAGE, &format!("{}: {e}", path.display())))?,
                )),
                None => Box::new(BufReader::new(&mut *io.stdin)),
            };
            let mut records = Vec::new();
            let mut errors = Vec::new();
            for (i, line) in reader.lines().enumerate() {
                let line = match line {
                    Ok(l) => l,
                    Err(e) => {
                        errors.push(format!("line {}: {e}", i + 1));
                        break;
                    }
                };
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                match from_graph6(line).and_then(|g| ReportRecord::from_graph(&g)) {
                    Ok(r) => records.push(r),
                    Err(e) => errors.push(format!("line {}: {e}", i + 1)),
                }
            }
            for e in &errors {
                io.fail(EXIT_USAGE, e);
            }
            io.emit(&render::records(&records, format), output.as_ref())?;
            Ok(if errors.is_empty() { EXIT_PASS } else { EXIT_USAGE })
        }
        Command::Construct { family } => {
            let g = match family {
                Family::Bn { n } => build_bn(n),
                Family::Theta { a, b, c } => build_theta(a, b, c),
                Family::Dumbbell { p, q, t } => build_dumbbell(p, q, t),
            }
            .and_then(|g| to_graph6(&g))
            .map_err(|e| {
                let hint = "usage: construct bn N (N >= 5) | theta A B C (A >= 1, B >= 2) | dumbbell P Q T (P, Q >= 3)";
                io.fail(EXIT_USAGE, &format!("{e}\n{hint}"))
            })?;
            io.emit(&format!("{g}\n"), None)?;
            Ok(EXIT_PASS)
        }
        Command::Enumerate { n, run, output } => {
            check_orders(io, run.method, n, n, 0)?;
            let set = enumerate_parallel(n, run.method, run.jobs).map_err(|e| core_error(io, e))?;
            let mut text = String::new();
            for line in set.graph6_lines() {
                text.push_str(&line);
                text.push('\n');
            }
            io.emit(&text, output.as_ref())?;
            Ok(EXIT_PASS)
        }
        Command::Verify { what } => match what {
            Verify::Conjecture { lo, hi, run, report, plot } => {
                let hi = hi.unwrap_or(lo);
                check_orders(io, run.method, lo, hi, 6)?;
                let reports = (lo..=hi)
                    .map(|n| conjecture_report(n, run.method, run.jobs))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| core_error(io, e))?;
                io.emit(&render::conjecture(&reports, report.format), report.output.as_ref())?;
                if let Some(path) = plot {
                    fs::write(&path, render::plot_csv(&reports))
                        .map_err(|e| io.fail(EXIT_USAGE, &format!("{}: {e}", path.display())))?;
                }
                Ok(verdict(reports.iter().all(|r| r.passes())))
            }
            Verify::Lemma3 { a, b, c, report } => {
                let r = verify_lemma3(a, b, c).map_err(|e| core_error(io, e))?;
                io.emit(&render::lemma3(&r, report.format), report.output.as_ref())?;
                Ok(verdict(r.passes()))
            }
            Verify::Inequalities { lo, hi, run, report } => {
                let hi = hi.unwrap_or(lo);
                check_orders(io, run.method, lo, hi, 6)?;
                let reports = (lo..=hi)
                    .map(|n| inequality_report(n, run.method, run.jobs))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| core_error(io, e))?;
                io.emit(&render::inequalities(&reports, report.format), report.output.as_ref())?;
                Ok(verdict(reports.iter().all(|r| r.passes())))
            }
        },
    }
}
