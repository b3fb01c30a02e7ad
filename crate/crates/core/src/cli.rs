//! Command-line front end. [`run`] takes the arguments and output streams
//! explicitly so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 counterexample found, 2 invalid input,
//! 3 field search failed, 4 verification budget exceeded, 5 erasure pattern
//! not correctable, 6 received word inconsistent with the code.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::construct::{
    construct_h2, construct_h3, field_of_order, find_field_h2, find_field_h3, FieldSearchResult,
};
use crate::elliptic::{matching_collinear_family, smallest_family, triples_to_code};
use crate::error::{Error, Result};
use crate::lrc::{
    check_shape, decode_erasures, lower_bound_q, verify_mr_with, ErasurePattern, LrcCode,
    SystematicEncoder, Verdict, VerifyOptions, DEFAULT_BUDGET,
};
use crate::text;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_SEARCH: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_UNCORRECTABLE: i32 = 5;
pub const EXIT_INCONSISTENT: i32 = 6;

/// Overrides the default verification budget when `--budget` is absent.
pub const BUDGET_ENV: &str = "MRLRC_BUDGET";

const AFTER_HELP: &str = "\
Output lines on stdout:
  construct     q=<q> field=<GF(..)> bound=<bound report>  (code to --out, else stdout)
  verify        patterns=<count> checks=<count> then `mr` or `counterexample <i,j,...>`, then time=<s>
  encode        n symbols on one line
  decode        n symbols on one line
  bound         `exact q>=<q>` or `asymptotic exponent=<e> alpha=<a>`
  search-field  q=<q> subgroup=<d> cosets=<c> A=<A> B=<B>
  triples       family file (to --out, else stdout)
  bench         one key=value line per instance

Exit codes: 0 ok, 1 counterexample, 2 invalid input, 3 search failure,
4 budget exceeded, 5 uncorrectable, 6 inconsistent.
Environment: MRLRC_BUDGET overrides the default verification budget.";

#[derive(Debug, Parser)]
#[command(name = "mrlrc", version, about = "Maximally recoverable local reconstruction codes", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Shape {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    h: usize,
}

#[derive(Debug, Args)]
struct Verification {
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    threads: Option<usize>,
    /// Maximum number of reduced rank checks.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a maximally recoverable code and write it as a .lrc file.
    Construct {
        #[command(flatten)]
        shape: Shape,
        /// Use a power-of-two field (h = 2 only).
        #[arg(long, conflicts_with = "elliptic")]
        char2: bool,
        /// Use the matching collinear triple construction (r = 3, a = 1, h = 3).
        #[arg(long)]
        elliptic: bool,
        /// Field order to use instead of searching (the base field order for h = 3).
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every maximal erasure pattern of a code.
    Verify {
        code: PathBuf,
        #[command(flatten)]
        opts: Verification,
    },
    /// Encode a message of k symbols.
    Encode {
        code: PathBuf,
        data: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fill in erased symbols (`?` in the data file and/or --erased).
    Decode {
        code: PathBuf,
        data: PathBuf,
        /// Comma-separated 0-based indices, e.g. 0,5,7.
        #[arg(long)]
        erased: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Field-size lower bound for maximally recoverable codes.
    Bound {
        #[command(flatten)]
        shape: Shape,
    },
    /// Find a field for the h = 2 (default) or h = 3 construction.
    SearchField {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        h: u8,
        #[arg(long)]
        char2: bool,
    },
    /// Matching collinear triple family over GF(q).
    Triples {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time construction and verification on a small grid (or one shape).
    Bench {
        #[arg(long, requires_all = ["r", "a", "h"])]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        h: Option<usize>,
        #[command(flatten)]
        opts: Verification,
    },
}

/// Failure of a command: the exit code plus a message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: e.to_string(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SweepExhausted | Error::NotFound(_) | Error::OmegaTooSmall { .. } => EXIT_SEARCH,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Uncorrectable(_) => EXIT_UNCORRECTABLE,
        Error::Inconsistent => EXIT_INCONSISTENT,
        _ => EXIT_INVALID,
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Construct {
            shape,
            char2,
            elliptic,
            q,
            out: path,
        } => cmd_construct(&shape, char2, elliptic, q, path.as_deref(), out, err),
        Command::Verify { code, opts } => cmd_verify(&code, &opts, out),
        Command::Encode {
            code,
            data,
            out: path,
        } => cmd_encode(&code, &data, path.as_deref(), out),
        Command::Decode {
            code,
            data,
            erased,
            out: path,
        } => cmd_decode(&code, &data, erased.as_deref(), path.as_deref(), out),
        Command::Bound { shape } => {
            writeln!(
                out,
                "{}",
                lower_bound_q(shape.n, shape.r, shape.a, shape.h)?
            )?;
            Ok(EXIT_OK)
        }
        Command::SearchField { n, r, h, char2 } => cmd_search_field(n, r, h, char2, out),
        Command::Triples { q, out: path } => cmd_triples(q, path.as_deref(), out, err),
        Command::Bench { n, r, a, h, opts } => {
            let shapes = match (n, r, a, h) {
                (Some(n), Some(r), Some(a), Some(h)) => vec![(n, r, a, h)],
                _ => vec![
                    (8, 4, 1, 2),
                    (12, 4, 2, 2),
                    (24, 6, 2, 2),
                    (8, 4, 1, 3),
                    (12, 3, 1, 3),
                ],
            };
            cmd_bench(&shapes, &opts, out)
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INVALID,
        message: format!("{}: {e}", path.display()),
    })
}

fn emit(
    path: Option<&Path>,
    contents: &str,
    out: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, contents).map_err(|e| Failure {
            code: EXIT_INVALID,
            message: format!("{}: {e}", p.display()),
        }),
        None => Ok(out.write_all(contents.as_bytes())?),
    }
}

fn load_code(path: &Path) -> std::result::Result<LrcCode, Failure> {
    let s = read(path)?;
    text::parse_code(&s).map_err(|e| Failure {
        code: EXIT_INVALID,
        message: format!("{}: {e}", path.display()),
    })
}

/// Builds the code for a shape, searching for the field unless `q` is given.
pub fn build_code(
    n: usize,
    r: usize,
    a: usize,
    h: usize,
    char2: bool,
    elliptic: bool,
    q: Option<u64>,
) -> Result<LrcCode> {
    check_shape(n, r, a, h)?;
    if elliptic {
        if (r, a, h) != (3, 1, 3) {
            return Err(Error::InvalidParams(
                "--elliptic needs r = 3, a = 1, h = 3".into(),
            ));
        }
        let g = n / r;
        let family = match q {
            Some(q) => {
                let fam = matching_collinear_family(&field_of_order(q)?)?;
                if fam.num_triples() < g {
                    return Err(Error::NotFound(format!(
                        "GF({q}) gives {} triples, need {g}",
                        fam.num_triples()
                    )));
                }
                fam.truncate(g)
            }
            None => smallest_family(g)?,
        };
        return triples_to_code(&family);
    }
    let (r64, g64) = (r as u64, (n / r) as u64);
    match h {
        2 => {
            if char2 && q.is_some_and(|q| !q.is_power_of_two()) {
                return Err(Error::InvalidParams(
                    "--char2 with a field order that is not a power of two".into(),
                ));
            }
            let found = match q {
                Some(q) => FieldSearchResult::for_field(&field_of_order(q)?, r64, g64)?,
                None => find_field_h2(n, r, char2)?,
            };
            construct_h2(n, r, a, &found)
        }
        3 => {
            if char2 {
                return Err(Error::InvalidParams("--char2 applies to h = 2 only".into()));
            }
            let found = match q {
                Some(q) => FieldSearchResult::for_field(&field_of_order(q)?, r64 + 2, g64)?,
                None => find_field_h3(n, r)?,
            };
            construct_h3(n, r, a, &found)
        }
        _ => Err(Error::InvalidParams(format!("no construction for h = {h}"))),
    }
}

fn cmd_construct(
    shape: &Shape,
    char2: bool,
    elliptic: bool,
    q: Option<u64>,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let Shape { n, r, a, h } = *shape;
    let code = build_code(n, r, a, h, char2, elliptic, q)?;
    let f = code.field();
    let report = format!(
        "q={} field={:?} bound={}",
        f.order(),
        f,
        lower_bound_q(n, r, a, h)?
    );
    emit(path, &text::write_code(&code), out)?;
    if path.is_some() {
        writeln!(out, "{report}")?;
    } else {
        writeln!(err, "{report}")?;
    }
    Ok(EXIT_OK)
}

fn options(v: &Verification) -> std::result::Result<VerifyOptions, Failure> {
    let budget = match (v.budget, std::env::var(BUDGET_ENV)) {
        (Some(b), _) => b,
        (None, Ok(s)) => s.trim().parse().map_err(|_| Failure {
            code: EXIT_INVALID,
            message: format!("{BUDGET_ENV}={s} is not a number"),
        })?,
        (None, Err(_)) => DEFAULT_BUDGET,
    };
    if v.threads == Some(0) {
        return Err(Failure {
            code: EXIT_INVALID,
            message: "--threads must be positive".into(),
        });
    }
    Ok(VerifyOptions {
        budget,
        threads: v.threads,
    })
}

fn cmd_verify(path: &Path, v: &Verification, out: &mut dyn Write) -> Outcome {
    let opts = options(v)?;
    let code = load_code(path)?;
    let start = Instant::now();
    let report = match verify_mr_with(&code, &opts) {
        Ok(r) => r,
        Err(
            e @ Error::BudgetExceeded {
                patterns, checks, ..
            },
        ) => {
            writeln!(out, "patterns={patterns} checks={checks}")?;
            return Err(e.into());
        }
        Err(e) => return Err(e.into()),
    };
    writeln!(out, "patterns={} checks={}", report.patterns, report.checks)?;
    let code = match &report.verdict {
        Verdict::MaximallyRecoverable => {
            writeln!(out, "mr")?;
            EXIT_OK
        }
        Verdict::Counterexample(p) => {
            writeln!(out, "counterexample {p}")?;
            EXIT_COUNTEREXAMPLE
        }
    };
    writeln!(out, "time={:.3}", start.elapsed().as_secs_f64())?;
    Ok(code)
}

fn cmd_encode(code_path: &Path, data: &Path, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let code = load_code(code_path)?;
    let f = code.field();
    let symbols = text::parse_symbols(f, &read(data)?)?;
    let message = symbols
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidParams("message contains erasures".into()))?;
    let word = SystematicEncoder::new(&code)?.encode(&message)?;
    let word: Vec<_> = word.into_iter().map(Some).collect();
    emit(path, &text::write_symbols(f, &word), out)?;
    Ok(EXIT_OK)
}

fn cmd_decode(
    code_path: &Path,
    data: &Path,
    erased: Option<&str>,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Outcome {
    let code = load_code(code_path)?;
    let f = code.field();
    let n = code.params().n;
    let symbols = text::parse_symbols(f, &read(data)?)?;
    if symbols.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: symbols.len(),
        }
        .into());
    }
    let mut indices: Vec<usize> = (0..n).filter(|&i| symbols[i].is_none()).collect();
    if let Some(list) = erased {
        indices.extend(ErasurePattern::parse(list, n)?.indices());
    }
    indices.sort_unstable();
    indices.dedup();
    let pattern = ErasurePattern::new(indices, n)?;
    let received: Vec<_> = symbols.into_iter().map(|s| s.unwrap_or(f.zero())).collect();
    let word = decode_erasures(&code, &received, &pattern)?;
    let word: Vec<_> = word.into_iter().map(Some).collect();
    emit(path, &text::write_symbols(f, &word), out)?;
    Ok(EXIT_OK)
}

fn cmd_search_field(n: usize, r: usize, h: u8, char2: bool, out: &mut dyn Write) -> Outcome {
    let found = match h {
        2 => find_field_h2(n, r, char2)?,
        _ if char2 => {
            return Err(Error::InvalidParams("--char2 applies to h = 2 only".into()).into())
        }
        _ => find_field_h3(n, r)?,
    };
    let (big_a, big_b) = found.witnesses;
    writeln!(
        out,
        "q={} subgroup={} cosets={} A={big_a} B={big_b}",
        found.q,
        found.subgroup.order(),
        found.subgroup.coset_count()
    )?;
    Ok(EXIT_OK)
}

fn cmd_triples(q: u64, path: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let family = matching_collinear_family(&field_of_order(q)?)?;
    emit(path, &text::write_family(&family), out)?;
    let summary = format!(
        "q={q} points={} triples={}",
        family.points().len(),
        family.num_triples()
    );
    if path.is_some() {
        writeln!(out, "{summary}")?;
    } else {
        writeln!(err, "{summary}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_bench(
    shapes: &[(usize, usize, usize, usize)],
    v: &Verification,
    out: &mut dyn Write,
) -> Outcome {
    let opts = options(v)?;
    let mut worst = EXIT_OK;
    for &(n, r, a, h) in shapes {
        let start = Instant::now();
        let code = build_code(n, r, a, h, false, false, None)?;
        let built = start.elapsed();
        let start = Instant::now();
        let report = verify_mr_with(&code, &opts)?;
        let verified = start.elapsed();
        if !report.is_mr() {
            worst = EXIT_COUNTEREXAMPLE;
        }
        writeln!(
            out,
            "n={n} r={r} a={a} h={h} q={} patterns={} checks={} mr={} construct_ms={:.1} verify_ms={:.1}",
            code.field().order(),
            report.patterns,
            report.checks,
            report.is_mr(),
            built.as_secs_f64() * 1e3,
            verified.as_secs_f64() * 1e3
        )?;
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("mrlrc").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::SweepExhausted), EXIT_SEARCH);
        assert_eq!(exit_code(&Error::Inconsistent), EXIT_INCONSISTENT);
        assert_eq!(
            exit_code(&Error::Uncorrectable(ErasurePattern::empty())),
            EXIT_UNCORRECTABLE
        );
        assert_eq!(
            exit_code(&Error::InvalidParams(String::new())),
            EXIT_INVALID
        );
    }

    #[test]
    fn one_line_reports() {
        assert_eq!(
            run_str(&["bound", "--n", "100", "--r", "10", "--a", "1", "--h", "3"]).1,
            "exact q>=176\n"
        );
        assert_eq!(
            run_str(&["search-field", "--n", "8", "--r", "4"]).1,
            "q=9 subgroup=4 cosets=2 A=4 B=2\n"
        );
        assert_eq!(
            run_str(&["search-field", "--n", "8", "--r", "4", "--h", "3"]).1,
            "q=13 subgroup=6 cosets=2 A=6 B=2\n"
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&[]).0, EXIT_INVALID);
        assert_eq!(run_str(&["bound", "--n", "x"]).0, EXIT_INVALID);
        assert_eq!(
            run_str(&["construct", "--n", "8", "--r", "4", "--a", "3", "--h", "2"]).0,
            EXIT_INVALID
        );
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("search-field"));
        assert_eq!(
            run_str(&[
                "construct",
                "--n",
                "12",
                "--r",
                "3",
                "--a",
                "1",
                "--h",
                "3",
                "--elliptic",
                "--char2"
            ])
            .0,
            EXIT_INVALID
        );
    }
}
