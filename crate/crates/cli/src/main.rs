mod batch;
mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use gramclass::congruence::{
    congruence_between, congruence_forms, congruence_to_standard, triangular_flip, verify,
    CongruenceError, VerifyReport,
};
use gramclass::io::{
    certificate_json, matrix_to_json, matrix_to_text, parse_input, parse_matrix_text,
    quiver_to_json, Input,
};
use gramclass::quiver::{inverse_quiver, random_quiver, Quiver};
use gramclass::standard::{count_classes, partitions_part1, standard_quiver, Partition, Variant};
use gramclass::unitform::{classify, realize_as_quiver, UnitForm};
use gramclass::Error;

const EXIT_VALIDATION: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(
    name = "gramclass",
    version,
    about = "Invariants and certified Gram congruences for quiver unit forms"
)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// A form given either as a quiver/form file or as an upper Gram matrix.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Quiver JSON, quiver text, or form JSON.
    file: Option<PathBuf>,
    /// Upper triangular Gram matrix in matrix text format.
    #[arg(long, value_name = "FILE")]
    matrix_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and strong Gram class of a form or quiver.
    Classify(Source),
    /// Standard quiver for a partition and degeneracy degree.
    Standard {
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        deg: usize,
        /// The star-shaped variant instead of the path-shaped one.
        #[arg(long)]
        star: bool,
    },
    /// Strong congruence to the standard form, or to `--target`.
    Congruence {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        target: Option<PathBuf>,
        /// Also write B to this file in matrix text format.
        #[arg(long, value_name = "FILE")]
        emit_matrix: Option<PathBuf>,
    },
    /// Check a candidate matrix B between two forms.
    Verify {
        #[arg(
            long = "B",
            value_name = "MATRIX",
            required_unless_present = "batch",
            conflicts_with = "batch"
        )]
        b: Option<PathBuf>,
        #[arg(required_unless_present = "batch", conflicts_with = "batch")]
        src: Option<PathBuf>,
        #[arg(required_unless_present = "batch", conflicts_with = "batch")]
        dst: Option<PathBuf>,
        /// Directory of JSON files {"B", "source", "target"}.
        #[arg(long, value_name = "DIR")]
        batch: Option<PathBuf>,
    },
    /// A quiver whose form is the given one.
    Realize(Source),
    /// Inverse quiver.
    Invert { quiver: PathBuf },
    /// Number of strong Gram classes with n variables and corank c.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
    },
    /// Seeded random connected loop-less quiver.
    Random {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, env = "GRAMCLASS_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Matrix C with CᵀĜC = Ĝᵀ.
    Flip(Source),
}

pub enum Failure {
    Validation(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Congruence(CongruenceError::VerificationFailed(_)) => {
                Failure::Internal(e.to_string())
            }
            e => Failure::Validation(e.to_string()),
        }
    }
}

fn fail<E: Into<Error>>(e: E) -> Failure {
    Failure::from(e.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: Result<T, gramclass::io::IoError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))
}

pub fn load(path: &Path) -> Result<Input, Failure> {
    in_file(path, parse_input(&read(path)?))
}

fn load_source(s: &Source) -> Result<Input, Failure> {
    match (&s.file, &s.matrix_file) {
        (Some(f), None) => load(f),
        (None, Some(f)) => {
            let m = in_file(f, parse_matrix_text(&read(f)?))?;
            Ok(Input::Form(UnitForm::new(m).map_err(fail)?))
        }
        _ => unreachable!("clap enforces exactly one input source"),
    }
}

fn quiver_json(q: &Quiver) -> Value {
    serde_json::from_str(&quiver_to_json(q)).expect("writer emits valid JSON")
}

pub fn report_json(r: &VerifyReport) -> Value {
    json!({
        "weak": r.weak,
        "strong": r.strong,
        "unimodular": r.unimodular,
        "shortcut": r.shortcut,
    })
}

fn run_classify(src: &Source) -> Result<Value, Failure> {
    let r = classify(&load_source(src)?.form()).map_err(fail)?;
    let std = standard_quiver(&r.cycle_type, r.degeneracy, Variant::A).map_err(fail)?;
    Ok(json!({
        "n": r.n,
        "dynkin_type": format!("A{}", r.dynkin_rank),
        "corank": r.corank,
        "cycle_type": r.cycle_type.parts(),
        "degeneracy": r.degeneracy,
        "reduced_corank": r.reduced_corank,
        "coxeter_polynomial": r.coxeter_polynomial.to_string(),
        "coxeter_polynomial_factored": r.factored,
        "coxeter_number": r.coxeter_number,
        "reduced_coxeter_number": r.reduced_coxeter_number,
        "quiver": quiver_json(&r.quiver),
        "standard_quiver": quiver_json(&std),
    }))
}

fn run_congruence(
    src: &Source,
    target: Option<&Path>,
    emit: Option<&Path>,
) -> Result<Value, Failure> {
    let input = load_source(src)?;
    let (b, out) = match target {
        Some(t) => {
            let (q, q2) = (input.form(), load(t)?.form());
            let b = congruence_between(&q, &q2).map_err(fail)?;
            let r = verify(&b, &q, &q2).map_err(fail)?;
            if !(r.strong && r.unimodular) {
                return Err(Failure::Internal(
                    "congruence matrix failed re-verification".into(),
                ));
            }
            let out = json!({"B": matrix_to_json(&b), "verified": true});
            (b, out)
        }
        None => {
            let cert = match &input {
                Input::Quiver(q) => congruence_to_standard(q),
                Input::Form(f) => congruence_forms(f),
            }
            .map_err(fail)?;
            let out = certificate_json(&cert).map_err(|e| Failure::Internal(e.to_string()))?;
            (cert.b, out)
        }
    };
    if let Some(path) = emit {
        fs::write(path, matrix_to_text(&b))
            .map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))?;
    }
    Ok(out)
}

fn run_verify(b: &Path, src: &Path, dst: &Path) -> Result<Value, Failure> {
    let m = in_file(b, parse_matrix_text(&read(b)?))?;
    let r = verify(&m, &load(src)?.form(), &load(dst)?.form()).map_err(fail)?;
    Ok(report_json(&r))
}

fn run_count(n: usize, c: usize) -> Result<Value, Failure> {
    if n == 0 || c >= n {
        return Err(Failure::Validation(format!(
            "need n ≥ 1 and c ≤ n − 1, got n = {n}, c = {c}"
        )));
    }
    let types: Vec<Vec<usize>> = partitions_part1(n - c + 1, c)
        .iter()
        .map(|p| p.parts().to_vec())
        .collect();
    Ok(json!({"n": n, "c": c, "count": count_classes(n, c) as u64, "cycle_types": types}))
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    match &cli.command {
        Command::Classify(src) => run_classify(src),
        Command::Standard {
            partition,
            deg,
            star,
        } => {
            let pi = Partition::new(partition.clone()).map_err(fail)?;
            let variant = if *star { Variant::Star } else { Variant::A };
            Ok(quiver_json(
                &standard_quiver(&pi, *deg, variant).map_err(fail)?,
            ))
        }
        Command::Congruence {
            source,
            target,
            emit_matrix,
        } => run_congruence(source, target.as_deref(), emit_matrix.as_deref()),
        Command::Verify {
            batch: Some(dir), ..
        } => batch::run(dir),
        Command::Verify { b, src, dst, .. } => run_verify(
            b.as_deref().expect("required without --batch"),
            src.as_deref().expect("required without --batch"),
            dst.as_deref().expect("required without --batch"),
        ),
        Command::Realize(src) => {
            let q = realize_as_quiver(&load_source(src)?.form()).map_err(fail)?;
            Ok(quiver_json(&q))
        }
        Command::Invert { quiver } => match load(quiver)? {
            Input::Quiver(q) => Ok(quiver_json(&inverse_quiver(&q))),
            Input::Form(_) => Err(Failure::Validation(format!(
                "{}: expected a quiver, found a form",
                quiver.display()
            ))),
        },
        Command::Count { n, c } => run_count(*n, *c),
        Command::Random { m, n, seed } => {
            Ok(quiver_json(&random_quiver(*m, *n, *seed).map_err(fail)?))
        }
        Command::Flip(src) => {
            let c = triangular_flip(&load_source(src)?.form()).map_err(fail)?;
            Ok(json!({"C": matrix_to_json(&c)}))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = std::panic::catch_unwind(|| run(&cli));
    match result {
        Ok(Ok(v)) => {
            print!("{}", render::render(&v, cli.text));
            if batch::has_errors(&v) {
                ExitCode::from(EXIT_VALIDATION)
            } else {
                ExitCode::SUCCESS
            }
        }
        Ok(Err(Failure::Validation(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VALIDATION)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
        Err(_) => ExitCode::from(EXIT_INTERNAL),
    }
}
