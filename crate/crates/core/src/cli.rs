//! The `tropbasis` command line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::basis::{compute_basis, decompose, Basis};
use crate::generator::{Generator, Origin};
use crate::io::{parse_system, parse_vectors};
use crate::oracle::{check_basis, OracleReport};
use crate::random::dense_system;
use crate::system::TwoRowSystem;
use crate::tropical::{Number, Rational, TropVector};

#[derive(Parser, Debug)]
#[command(name = "tropbasis", version, about = "Bases of two-inequality max-plus cones")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the basis of the solution cone
    Solve { file: PathBuf },
    /// Check that the vectors in BASISFILE form a basis of the solution cone
    Verify { file: PathBuf, basisfile: PathBuf },
    /// Compare the basis with the brute-force oracle
    Oracle { file: PathBuf },
    /// Time the basis computation on a random dense system
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn usage(stderr: String) -> Self {
        Self {
            status: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run_cli<I, S>(args: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput::usage(text)
            } else {
                CliOutput {
                    status: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let json = cli.format == Format::Json;
    let result = match &cli.command {
        Command::Solve { file } => load(file).map(|sys| solve(&sys, json)),
        Command::Verify { file, basisfile } => load(file).and_then(|sys| verify(&sys, basisfile, json)),
        Command::Oracle { file } => load(file).map(|sys| oracle(&sys, json)),
        Command::Bench { n, seed } => bench(*n, *seed, json),
    };
    result.unwrap_or_else(CliOutput::usage)
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}\n", path.display()))
}

fn load(path: &Path) -> Result<TwoRowSystem<Rational>, String> {
    parse_system(&read(path)?).map_err(|e| format!("{}: {e}\n", path.display()))
}

fn ok(stdout: String) -> CliOutput {
    CliOutput {
        status: 0,
        stdout,
        stderr: String::new(),
    }
}

fn slot(o: Option<usize>) -> String {
    o.map_or_else(|| "-".to_string(), |j| (j + 1).to_string())
}

/// `(class, i, k, l)` with 1-based indices and `-` for unused slots.
fn provenance(origin: &Origin) -> (String, String, String, String) {
    match *origin {
        Origin::Family { family, i, k, l } => (family.name().to_string(), slot(Some(i)), slot(k), slot(l)),
        Origin::StarColumn { k, l, column } => ("star".to_string(), slot(Some(column)), slot(k), slot(l)),
        Origin::External { line } => ("input".to_string(), line.to_string(), slot(None), slot(None)),
    }
}

fn generator_line<T: Number>(g: &Generator<T>) -> String {
    let (class, i, k, l) = provenance(&g.origin);
    format!("class={class} i={i} k={k} l={l} vec= {}", g.canonical())
}

fn generator_json<T: Number>(g: &Generator<T>) -> Value {
    let (class, i, k, l) = provenance(&g.origin);
    json!({ "class": class, "i": i, "k": k, "l": l, "vec": g.canonical().to_string() })
}

fn document(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn solve<T: Number>(sys: &TwoRowSystem<T>, json: bool) -> CliOutput {
    let basis = compute_basis(sys);
    if json {
        return ok(document(json!({
            "command": "solve",
            "n": sys.n(),
            "basis_size": basis.len(),
            "generators": basis.iter().map(generator_json).collect::<Vec<_>>(),
        })));
    }
    let mut out = String::new();
    for g in &basis {
        writeln!(out, "{}", generator_line(g)).unwrap();
    }
    writeln!(out, "basis size: {}", basis.len()).unwrap();
    ok(out)
}

/// Reads a basis file in text or `solve --format json` form.
fn read_vectors<T: Number>(path: &Path, n: usize) -> Result<Vec<(usize, TropVector<T>)>, String> {
    let text = read(path)?;
    let fail = |e: String| format!("{}: {e}\n", path.display());
    if !text.trim_start().starts_with('{') {
        return parse_vectors(&text, n).map_err(|e| fail(e.to_string()));
    }
    let doc: Value = serde_json::from_str(&text).map_err(|e| fail(e.to_string()))?;
    let gens = doc["generators"]
        .as_array()
        .ok_or_else(|| fail("missing generators array".into()))?;
    let rows: Vec<String> = gens
        .iter()
        .map(|g| g["vec"].as_str().unwrap_or_default().to_string())
        .collect();
    parse_vectors(&rows.join("\n"), n).map_err(|e| fail(e.to_string()))
}

fn verify<T: Number>(sys: &TwoRowSystem<T>, basisfile: &Path, json: bool) -> Result<CliOutput, String> {
    let n = sys.n();
    let vectors = read_vectors::<T>(basisfile, n)?;
    let given: Vec<Generator<T>> = vectors
        .iter()
        .map(|(line, v)| Generator::from_vector(Origin::External { line: *line }, v))
        .collect();
    let line_of = |g: &Generator<T>| match g.origin {
        Origin::External { line } => line,
        _ => 0,
    };

    let zero: Vec<usize> = given
        .iter()
        .filter(|g| g.entries().is_empty())
        .map(line_of)
        .collect();
    let not_solutions: Vec<usize> = vectors
        .iter()
        .filter(|(_, v)| !sys.is_solution(v).unwrap_or(false))
        .map(|(l, _)| *l)
        .collect();
    let dependent: Vec<usize> = (0..given.len())
        .filter(|&idx| {
            let others: Vec<Generator<T>> = given
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, g)| g.clone())
                .collect();
            !given[idx].entries().is_empty() && decompose(&given[idx], &others).is_some()
        })
        .map(|idx| line_of(&given[idx]))
        .collect();
    let reference = compute_basis(sys);
    let ungenerated: Vec<String> = reference
        .iter()
        .filter(|b| decompose(b, &given).is_none())
        .map(|b| b.canonical().to_string())
        .collect();
    let verified =
        zero.is_empty() && not_solutions.is_empty() && dependent.is_empty() && ungenerated.is_empty();

    let stdout = if json {
        document(json!({
            "command": "verify",
            "vectors": given.len(),
            "zero_lines": zero,
            "non_solution_lines": not_solutions,
            "dependent_lines": dependent,
            "ungenerated": ungenerated,
            "verified": verified,
        }))
    } else {
        let lines = |v: &[usize]| v.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        writeln!(out, "vectors: {}", given.len()).unwrap();
        if !zero.is_empty() {
            writeln!(out, "zero vectors at lines: {}", lines(&zero)).unwrap();
        }
        if !not_solutions.is_empty() {
            writeln!(out, "not solutions at lines: {}", lines(&not_solutions)).unwrap();
        }
        if !dependent.is_empty() {
            writeln!(out, "dependent at lines: {}", lines(&dependent)).unwrap();
        }
        for v in &ungenerated {
            writeln!(out, "not generated: {v}").unwrap();
        }
        writeln!(out, "verified: {verified}").unwrap();
        out
    };
    Ok(CliOutput {
        status: if verified { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

fn report_text<T: Number>(report: &OracleReport<T>, oracle: &Basis<T>) -> String {
    let mut out = String::new();
    writeln!(out, "basis_match: {}", report.basis_match).unwrap();
    writeln!(out, "oracle basis size: {}", oracle.len()).unwrap();
    for g in oracle {
        writeln!(out, "vec= {}", g.canonical()).unwrap();
    }
    for g in &report.missing {
        writeln!(out, "missing: {}", g.canonical()).unwrap();
    }
    for g in &report.extra {
        writeln!(out, "extra: {}", generator_line(g)).unwrap();
    }
    for v in &report.solution_violations {
        writeln!(out, "not a solution: {v}").unwrap();
    }
    for v in &report.membership_failures {
        writeln!(out, "not generated: {v}").unwrap();
    }
    writeln!(out, "solution_violations: {}", report.solution_violations.len()).unwrap();
    writeln!(out, "membership_failures: {}", report.membership_failures.len()).unwrap();
    out
}

fn oracle<T: Number>(sys: &TwoRowSystem<T>, json: bool) -> CliOutput {
    let basis = compute_basis(sys);
    let report = check_basis(sys, &basis);
    let oracle = crate::oracle::oracle_basis(sys);
    let stdout = if json {
        let strs = |v: &[TropVector<T>]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let canon = |v: &[Generator<T>]| v.iter().map(|g| g.canonical().to_string()).collect::<Vec<_>>();
        document(json!({
            "command": "oracle",
            "basis_match": report.basis_match,
            "basis_size": basis.len(),
            "oracle_basis_size": oracle.len(),
            "generators": canon(oracle.generators()),
            "missing": canon(&report.missing),
            "extra": canon(&report.extra),
            "solution_violations": strs(&report.solution_violations),
            "membership_failures": strs(&report.membership_failures),
        }))
    } else {
        report_text(&report, &oracle)
    };
    CliOutput {
        status: if report.is_clean() { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

fn bench(n: usize, seed: u64, json: bool) -> Result<CliOutput, String> {
    if n == 0 {
        return Err("--n must be at least 1\n".to_string());
    }
    let sys = dense_system(seed, n);
    let start = Instant::now();
    let basis = compute_basis(&sys);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(ok(if json {
        document(json!({ "command": "bench", "n": n, "seed": seed, "time_ms": ms, "basis": basis.len() }))
    } else {
        format!("n={n} time_ms={ms:.3} basis={}\n", basis.len())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_file_argument_is_usage_error() {
        let out = run_cli(["tropbasis", "solve"]);
        assert_eq!(out.status, 2);
        assert!(out.stderr.contains("Usage"));
    }

    #[test]
    fn unreadable_file() {
        let out = run_cli(["tropbasis", "solve", "/nonexistent/x.sys"]);
        assert_eq!(out.status, 2);
    }

    #[test]
    fn bench_line() {
        let out = run_cli(["tropbasis", "bench", "--n", "6", "--seed", "3"]);
        assert_eq!(out.status, 0);
        assert!(out.stdout.starts_with("n=6 time_ms="));
        assert!(out.stdout.contains(" basis="));
        assert_eq!(run_cli(["tropbasis", "bench", "--n", "0"]).status, 2);
    }

    #[test]
    fn provenance_slots() {
        let o = Origin::Family {
            family: crate::generator::Family::S2A2,
            i: 0,
            k: Some(1),
            l: None,
        };
        assert_eq!(
            provenance(&o),
            ("S2A2".into(), "1".into(), "2".into(), "-".into())
        );
    }
}
