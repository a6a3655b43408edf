//! Command-line surface: `build`, `transpile`, `simulate`, `cost`, `compare`.
//!
//! Exit codes: 0 success, 1 domain error (bad circuit file, failed pass,
//! compare over tolerance), 2 usage error.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use qaxis::passes::{parse_pass_list, Pass};
use qaxis::sim::empirical;
use qaxis::{
    build_grover, compare, emit, parse, pipeline, probabilities, realize_mcz, report, run, sample,
    tvd, Axis, Circuit, GroverSpec,
};

/// Shot count used when sampling is requested without `--shots`.
pub const DEFAULT_SHOTS: u64 = 1024;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "qaxis",
    version,
    about = "Superposition-axis circuit rewriting and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a tagged Grover circuit with an MCZ phase oracle.
    Build {
        #[arg(long)]
        qubits: usize,
        /// Marked outcome, most significant qubit first.
        #[arg(long)]
        marked: String,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
        #[arg(long, value_parser = parse_axis)]
        axis: Axis,
        /// Append a `measure all` marker.
        #[arg(long)]
        measure: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a comma-separated list of rewrite passes over a circuit file.
    Transpile {
        file: PathBuf,
        /// Comma-separated, e.g. `substitute-axis,expand-x,cancel`.
        #[arg(long, value_parser = parse_passes)]
        passes: PassList,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print exact output probabilities and, optionally, seeded samples.
    Simulate {
        file: PathBuf,
        #[arg(long)]
        shots: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Gate counts, native/non-native split, wrapper count and depth.
    Cost {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Rewrite each MCZ as H·MCX·H before counting.
        #[arg(long)]
        realize_mcz: bool,
    },
    /// Distribution distance and wrapper-gate reduction of B relative to A.
    Compare {
        baseline: PathBuf,
        candidate: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long)]
        json: bool,
    },
}

fn parse_axis(s: &str) -> Result<Axis, String> {
    s.parse()
}

#[derive(Debug, Clone)]
struct PassList(Vec<Pass>);

fn parse_passes(s: &str) -> Result<PassList, String> {
    parse_pass_list(s).map(PassList).map_err(|e| e.to_string())
}

type DomainResult = Result<i32, Box<dyn std::error::Error>>;

fn read_input(path: &Path) -> io::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn load(path: &Path) -> Result<Circuit, Box<dyn std::error::Error>> {
    let text = read_input(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn write_circuit(out: &mut dyn Write, target: Option<&Path>, circuit: &Circuit) -> io::Result<()> {
    let text = emit(circuit);
    match target {
        Some(path) => fs::write(path, text),
        None => out.write_all(text.as_bytes()),
    }
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    let line = serde_json::to_string(value).map_err(io::Error::other)?;
    writeln!(out, "{line}")
}

#[derive(Serialize)]
struct SimulateJson<'a> {
    n: usize,
    probabilities: &'a BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shots: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counts: Option<&'a BTreeMap<String, u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sample_tvd: Option<f64>,
}

#[derive(Serialize)]
struct CompareJson {
    tvd: f64,
    tolerance: f64,
    equal: bool,
    baseline_wrapper_native_total: usize,
    candidate_wrapper_native_total: usize,
    wrapper_reduction_percent: Option<f64>,
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> DomainResult {
    match command {
        Command::Build {
            qubits,
            marked,
            iterations,
            axis,
            measure,
            output,
        } => {
            let mut spec = GroverSpec::new(qubits, marked, iterations, axis);
            spec.include_measure = measure;
            let circuit = build_grover(&spec)?;
            write_circuit(out, output.as_deref(), &circuit)?;
        }
        Command::Transpile {
            file,
            passes,
            output,
        } => {
            let circuit = load(&file)?;
            let (result, log) = pipeline(&circuit, &passes.0)?;
            write!(err, "{log}")?;
            write_circuit(out, output.as_deref(), &result)?;
        }
        Command::Simulate {
            file,
            shots,
            seed,
            json,
        } => {
            let circuit = load(&file)?;
            let dist = probabilities(&run(&circuit)?);
            let sampled = if shots.is_some() || seed.is_some() {
                let shots = shots.unwrap_or(DEFAULT_SHOTS);
                let seed = seed.unwrap_or(0);
                Some((shots, seed, sample(&dist, shots, seed)?))
            } else {
                None
            };
            let sample_tvd = match &sampled {
                Some((_, _, counts)) => Some(tvd(&empirical(dist.num_qubits(), counts), &dist)?),
                None => None,
            };
            if json {
                write_json(
                    out,
                    &SimulateJson {
                        n: dist.num_qubits(),
                        probabilities: dist.as_map(),
                        shots: sampled.as_ref().map(|s| s.0),
                        seed: sampled.as_ref().map(|s| s.1),
                        counts: sampled.as_ref().map(|s| &s.2),
                        sample_tvd,
                    },
                )?;
            } else {
                writeln!(out, "probabilities")?;
                write!(out, "{dist}")?;
                if let Some((shots, seed, counts)) = &sampled {
                    writeln!(out, "counts shots={shots} seed={seed}")?;
                    for (k, c) in counts {
                        writeln!(out, "{k} {c}")?;
                    }
                    writeln!(out, "sample_tvd {:.6}", sample_tvd.unwrap_or_default())?;
                }
            }
        }
        Command::Cost {
            file,
            json,
            realize_mcz: realize,
        } => {
            let mut circuit = load(&file)?;
            if realize {
                circuit = realize_mcz(&circuit);
            }
            let r = report(&circuit);
            if json {
                write_json(out, &r)?;
            } else {
                writeln!(out, "n {}", r.n)?;
                writeln!(out, "total {}", r.total)?;
                writeln!(out, "depth {}", r.depth)?;
                writeln!(out, "native_total {}", r.native_total)?;
                writeln!(out, "non_native_total {}", r.non_native_total)?;
                writeln!(out, "wrapper_native_total {}", r.wrapper_native_total)?;
                for (k, c) in &r.per_kind {
                    writeln!(out, "kind {k} {c}")?;
                }
            }
        }
        Command::Compare {
            baseline,
            candidate,
            tolerance,
            json,
        } => {
            let a = load(&baseline)?;
            let b = load(&candidate)?;
            let distance = tvd(&probabilities(&run(&a)?), &probabilities(&run(&b)?))?;
            let reduction = compare(&a, &b).ok().map(|c| c.wrapper_reduction_percent);
            let equal = distance <= tolerance;
            let body = CompareJson {
                tvd: distance,
                tolerance,
                equal,
                baseline_wrapper_native_total: report(&a).wrapper_native_total,
                candidate_wrapper_native_total: report(&b).wrapper_native_total,
                wrapper_reduction_percent: reduction,
            };
            if json {
                write_json(out, &body)?;
            } else {
                writeln!(out, "tvd {:e}", body.tvd)?;
                writeln!(
                    out,
                    "wrapper_native_total {} -> {}",
                    body.baseline_wrapper_native_total, body.candidate_wrapper_native_total
                )?;
                match reduction {
                    Some(p) => writeln!(out, "wrapper_reduction_percent {p:.2}")?,
                    None => writeln!(out, "wrapper_reduction_percent n/a")?,
                }
                writeln!(out, "{}", if equal { "identical" } else { "different" })?;
            }
            return Ok(if equal { 0 } else { 1 });
        }
    }
    Ok(0)
}

/// Runs the CLI with explicit arguments (including the program name) and streams.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
