//! `lieob` command-line front end.
//!
//! ```text
//! lieob <command> [--example NAME | --file PATH] [--degree K]
//!       [--module trivial|adjoint] [--strict] [--format human|machine|json]
//! ```
//!
//! Exit status: 0 on success, 1 on input or usage errors, 2 when `--strict`
//! is set and `classify` returns Undetermined.

use std::fmt::Write as _;

use clap::{Parser, ValueEnum};

use crate::algebra::LieAlgebra;
use crate::cohomology::{self, LieModule};
use crate::document;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::maps;
use crate::obstruction::{self, ObstructionVerdict, SplitResult};
use crate::rational::{self, Rational};
use crate::registry;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNDETERMINED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Check,
    Center,
    Derived,
    Classify,
    Split,
    AutBlocks,
    Quotient,
    Cohomology,
    Examples,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ModuleKind {
    #[default]
    Trivial,
    Adjoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Machine,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "lieob", version, about = "Exact Lie algebra structure and obstruction triviality checks")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Built-in algebra (see `lieob examples`).
    #[arg(long, conflicts_with = "file")]
    pub example: Option<String>,
    /// Algebra document (JSON).
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
    /// Cochain degree for `cohomology`; all degrees when omitted.
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub module: ModuleKind,
    /// Exit with status 2 when `classify` is Undetermined.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Args::try_parse_from(argv) {
        Ok(args) => run_command(&args),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                },
            }
        }
    }
}

pub fn run_command(args: &Args) -> Outcome {
    match execute(args) {
        Ok((report, code)) => Outcome {
            code,
            stdout: report.render(args.format),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn load(args: &Args) -> Result<(String, LieAlgebra)> {
    match (&args.example, &args.file) {
        (Some(name), None) => Ok((name.clone(), registry::get(name)?)),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            document::parse_algebra(&text)
        }
        _ => Err(Error::Io("exactly one of --example or --file is required".into())),
    }
}

fn execute(args: &Args) -> Result<(Report, i32)> {
    if args.command == Command::Examples {
        return Ok((examples_report(), EXIT_OK));
    }
    let (name, g) = load(args)?;
    let mut r = Report::default();
    r.push("algebra", "algebra", Value::Text(name));
    r.push("dim", "dim", Value::Int(g.dim()));
    let mut code = EXIT_OK;
    match args.command {
        Command::Examples => unreachable!(),
        Command::Check => {
            r.push("jacobi", "jacobi", Value::Text("pass".into()));
            r.push("basis", "basis", Value::List(g.basis_names().to_vec()));
            r.push("brackets", "brackets", Value::List(bracket_lines(&g)));
            r.push("center_dim", "dim Z(g)", Value::Int(g.center().dim()));
            r.push("derived_dim", "dim [g,g]", Value::Int(g.derived_subalgebra().dim()));
            r.push("der_dim", "dim Der(g)", Value::Int(maps::derivation_space(&g).len()));
            r.push("inner_der_dim", "dim ad(g)", Value::Int(maps::inner_derivations(&g).dim()));
        }
        Command::Center => {
            let z = g.center();
            r.push("center_dim", "dim Z(g)", Value::Int(z.dim()));
            r.push("center_basis", "Z(g) basis", Value::List(basis_lines(&z, &g)));
        }
        Command::Derived => {
            let d = g.derived_subalgebra();
            r.push("derived_dim", "dim [g,g]", Value::Int(d.dim()));
            r.push("derived_basis", "[g,g] basis", Value::List(basis_lines(&d, &g)));
        }
        Command::Classify => {
            let verdict = obstruction::classify_obstruction(&g)?;
            r.push("classification", "classification", Value::Text(verdict.to_string()));
            match verdict {
                ObstructionVerdict::Trivial(reason) => {
                    r.push("status", "status", Value::Text("Trivial".into()));
                    r.push("reason", "reason", Value::Text(reason.to_string()));
                }
                ObstructionVerdict::Undetermined(d) => {
                    r.push("status", "status", Value::Text("Undetermined".into()));
                    r.push("dim_center", "dim Z(g)", Value::Int(d.dim_center));
                    r.push("dim_derived", "dim [g,g]", Value::Int(d.dim_derived));
                    r.push(
                        "dim_center_meet_derived",
                        "dim Z(g) ∩ [g,g]",
                        Value::Int(d.dim_center_meet_derived),
                    );
                    r.push("dim_hom_block", "dim Hom block", Value::Int(d.dim_hom_block));
                    if args.strict {
                        code = EXIT_UNDETERMINED;
                    }
                }
            }
        }
        Command::Split => match obstruction::split_check(&g)? {
            SplitResult::Found(s) => {
                r.push("found", "split found", Value::Bool(true));
                r.push("center_dim", "dim Zg", Value::Int(s.center_dim()));
                r.push("center_basis", "Zg basis", Value::List(basis_lines(s.center_part(), &g)));
                r.push("complement_dim", "dim g0", Value::Int(s.complement_dim()));
                r.push(
                    "complement_basis",
                    "g0 basis",
                    Value::List(basis_lines(s.complement_part(), &g)),
                );
            }
            SplitResult::NotFound { witness } => {
                r.push("found", "split found", Value::Bool(false));
                r.push("witness_dim", "dim Zg ∩ [g,g]", Value::Int(witness.dim()));
                r.push("witness_basis", "Zg ∩ [g,g] basis", Value::List(basis_lines(&witness, &g)));
            }
        },
        Command::AutBlocks => match obstruction::split_check(&g)? {
            SplitResult::Found(s) => {
                let a = maps::aut_out_description(&s);
                let [gl, hom, out] = maps::AutOutReport::BLOCK_NAMES;
                r.push("split", "split found", Value::Bool(true));
                r.push("dim_center", "dim Zg", Value::Int(a.dim_center));
                r.push("dim_complement", "dim g0", Value::Int(a.dim_complement));
                r.push("derived_codim_in_g0", "codim [g0,g0] in g0", Value::Int(a.derived_codim_in_g0));
                r.push("gl_block", "block 11", Value::Text(gl.into()));
                r.push("dim_gl_center", "dim GL(Zg)", Value::Int(a.dim_gl_center));
                r.push("hom_block", "block 12", Value::Text(hom.into()));
                r.push("dim_hom_block", "dim Hom block", Value::Int(a.dim_hom_block));
                r.push("lower_left_block", "block 21", Value::Text("0".into()));
                r.push("out_block", "block 22", Value::Text(out.into()));
            }
            SplitResult::NotFound { witness } => {
                r.push("split", "split found", Value::Bool(false));
                r.push("witness_dim", "dim Zg ∩ [g,g]", Value::Int(witness.dim()));
            }
        },
        Command::Quotient => {
            let rep = obstruction::reduction_report(&g)?;
            let q = &rep.quotient.algebra;
            r.push("center_dim", "dim Zg", Value::Int(rep.center_dim));
            r.push("quotient_dim", "dim g/Zg", Value::Int(q.dim()));
            r.push("quotient_basis", "g/Zg basis", Value::List(q.basis_names().to_vec()));
            r.push("quotient_brackets", "g/Zg brackets", Value::List(bracket_lines(q)));
            r.push("quotient_center_dim", "dim Z(g/Zg)", Value::Int(rep.quotient_center_dim));
            r.push("quotient_centerless", "g/Zg centerless", Value::Bool(rep.quotient_center_dim == 0));
            r.push("note", "note", Value::Text(rep.note.into()));
        }
        Command::Cohomology => {
            let (label, module) = match args.module {
                ModuleKind::Trivial => ("trivial", LieModule::trivial(g.clone())),
                ModuleKind::Adjoint => ("adjoint", LieModule::adjoint(g.clone())),
            };
            r.push("module", "module", Value::Text(label.into()));
            match args.degree {
                Some(k) => {
                    let h = cohomology::cohomology_dim(&module, k)?;
                    r.push("degree", "degree", Value::Int(k));
                    r.push(&format!("h{k}"), &format!("dim H^{k}"), Value::Int(h));
                }
                None => {
                    for (k, h) in cohomology::betti_numbers(&module).into_iter().enumerate() {
                        r.push(&format!("h{k}"), &format!("dim H^{k}"), Value::Int(h));
                    }
                }
            }
        }
    }
    Ok((r, code))
}

fn examples_report() -> Report {
    let mut r = Report::default();
    let lines = registry::NAMES
        .iter()
        .map(|&name| {
            if name == "abelian_n" {
                "abelian_<n> (dim n)".to_string()
            } else {
                let g = registry::get(name).unwrap();
                format!("{name} (dim {})", g.dim())
            }
        })
        .collect();
    r.push("examples", "examples", Value::List(lines));
    r
}

/// Linear combination in the basis names, e.g. `2e - 1/2h`.
pub fn combination(coeffs: &[Rational], names: &[String]) -> String {
    use num_traits::{One, Signed, Zero};
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        if !mag.is_one() {
            let text = rational::format(&mag);
            if mag.is_integer() {
                out.push_str(&text);
            } else {
                let _ = write!(out, "({text})");
            }
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn basis_lines(s: &Subspace, g: &LieAlgebra) -> Vec<String> {
    s.basis_vectors()
        .iter()
        .map(|v| combination(v, g.basis_names()))
        .collect()
}

fn bracket_lines(g: &LieAlgebra) -> Vec<String> {
    let names = g.basis_names();
    g.structure_constants()
        .iter()
        .map(|(&(i, j), v)| format!("[{}, {}] = {}", names[i], names[j], combination(v, names)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Text(String),
    Int(usize),
    Bool(bool),
    List(Vec<String>),
}

impl Value {
    fn plain(&self) -> String {
        match self {
            Value::Text(s) => s.clone(),
            Value::Int(n) => n.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::List(items) => format!("[{}]", items.join("; ")),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Value::Text(s) => serde_json::Value::from(s.as_str()),
            Value::Int(n) => serde_json::Value::from(*n),
            Value::Bool(b) => serde_json::Value::from(*b),
            Value::List(items) => serde_json::Value::from(items.clone()),
        }
    }
}

/// Ordered key/value report. `key` is the stable machine key; `label` is
/// shown in human mode.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, String, Value)>,
}

impl Report {
    pub fn push(&mut self, key: &str, label: &str, value: Value) {
        self.entries.push((key.to_string(), label.to_string(), value));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _, _)| k == key).map(|(_, _, v)| v)
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Machine => {
                for (key, _, value) in &self.entries {
                    let _ = writeln!(out, "{key}: {}", value.plain());
                }
            }
            Format::Json => {
                out.push_str("{\n");
                for (n, (key, _, value)) in self.entries.iter().enumerate() {
                    let comma = if n + 1 < self.entries.len() { "," } else { "" };
                    let _ = writeln!(
                        out,
                        "  {}: {}{comma}",
                        serde_json::Value::from(key.as_str()),
                        value.json()
                    );
                }
                out.push_str("}\n");
            }
            Format::Human => {
                let width = self.entries.iter().map(|(_, l, _)| l.chars().count()).max().unwrap_or(0);
                for (_, label, value) in &self.entries {
                    let pad = width - label.chars().count();
                    match value {
                        Value::List(items) if !items.is_empty() => {
                            let _ = writeln!(out, "{label}{} = {}", " ".repeat(pad), items[0]);
                            for item in &items[1..] {
                                let _ = writeln!(out, "{}   {item}", " ".repeat(width));
                            }
                        }
                        Value::List(_) => {
                            let _ = writeln!(out, "{label}{} = (none)", " ".repeat(pad));
                        }
                        v => {
                            let _ = writeln!(out, "{label}{} = {}", " ".repeat(pad), v.plain());
                        }
                    }
                }
            }
        }
        out
    }
}
