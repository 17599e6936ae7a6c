//! The `xmodlink` command line: thin argument handling over the library.
//!
//! Exit codes: 0 on success, 1 when a check fails (axioms, moves, a table
//! cell disagreeing with the published value), 2 on usage or input errors.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::algebra::{AlgebraError, EnhancedWord, FiniteGroup};
use crate::builtins::{self, BuiltinError, CATALOG};
use crate::diagram::{move_fixtures, SlicedDiagram};
use crate::invariant::{
    check_move_invariance_with, matrix_to_tsv, rack_colouring_count, rack_colouring_counts, summarize_moves,
    InvariantError, MoveCheckConfig, StateSum,
};
use crate::io::{load_diagram, load_group, load_pair, load_rack, load_xmod, LoadError};
use crate::pairs::{check_framed, check_unframed_with, ReidemeisterPair};
use crate::tables::{compute_table, TableError, TableId};
use crate::xmod::{xmod_identity_conj, Rack};

#[derive(Debug, Parser)]
#[command(name = "xmodlink", version, about = "State-sum invariants of tangles from finite crossed modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Reidemeister pair axioms (unframed by default).
    CheckPair(Inputs),
    /// Compute ⟨top | I(D) | bottom⟩, or the whole row when --bottom is omitted.
    Invariant(Inputs),
    /// Recompute a trefoil table and compare it with the published values.
    Tables {
        #[arg(long, value_parser = parse_table_id)]
        which: TableId,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Check invariance under every move fixture.
    Moves(Inputs),
    /// Count rack colourings of a diagram.
    RackCount(Inputs),
    /// List the built-in keys.
    Builtins,
}

#[derive(Debug, Args, Default)]
pub struct RunOpts {
    /// Worker threads; 0 uses every core. Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    /// Also write the TSV result to this file.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args, Default)]
pub struct Inputs {
    /// Group file; without a pair this gives the trivial pair over (id, conjugation).
    #[arg(long)]
    pub group: Option<PathBuf>,
    /// Crossed-module file; without a pair this gives the trivial pair on it.
    #[arg(long)]
    pub xmod: Option<PathBuf>,
    #[arg(long)]
    pub pair: Option<PathBuf>,
    #[arg(long)]
    pub rack: Option<PathBuf>,
    #[arg(long)]
    pub diagram: Option<PathBuf>,
    /// Built-in key; may be repeated (e.g. one pair and one diagram).
    #[arg(long)]
    pub builtin: Vec<String>,
    /// Top boundary word: comma-separated names, `*` marks a starred entry.
    #[arg(long, allow_hyphen_values = true)]
    pub top: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub bottom: Option<String>,
    /// Use the framed axioms / the framed move set.
    #[arg(long)]
    pub framed: bool,
    #[command(flatten)]
    pub run: RunOpts,
}

fn parse_table_id(s: &str) -> Result<TableId, String> {
    s.parse().map_err(|e: TableError| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Builtin(#[from] BuiltinError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("{path}: {message}")]
    Write { path: String, message: String },
}

/// Rendered result of one command.
pub struct Outcome {
    pub text: String,
    pub success: bool,
}

fn diagram_keys(inputs: &Inputs) -> (Vec<&str>, Vec<&str>) {
    inputs.builtin.iter().map(String::as_str).partition(|k| k.starts_with("diagram:"))
}

fn resolve_pair(inputs: &Inputs) -> Result<ReidemeisterPair, CliError> {
    let (_, others) = diagram_keys(inputs);
    if let Some(p) = &inputs.pair {
        return Ok(load_pair(p)?);
    }
    if let Some(k) = others.iter().find(|k| !k.starts_with("group:")) {
        return Ok(builtins::pair(k)?);
    }
    if let Some(x) = &inputs.xmod {
        return Ok(ReidemeisterPair::trivial(load_xmod(x)?));
    }
    let group = if let Some(g) = &inputs.group {
        Some(load_group(g)?)
    } else if let Some(k) = others.iter().find_map(|k| k.strip_prefix("group:")) {
        Some(builtins::group(k)?)
    } else {
        None
    };
    match group {
        Some(g) => Ok(ReidemeisterPair::trivial(Arc::new(xmod_identity_conj(g)))),
        None => Err(CliError::Usage("no pair given: use --pair, --xmod, --group or --builtin".into())),
    }
}

fn resolve_diagram(inputs: &Inputs) -> Result<SlicedDiagram, CliError> {
    let (diagrams, _) = diagram_keys(inputs);
    match (&inputs.diagram, diagrams.first()) {
        (Some(p), _) => Ok(load_diagram(p)?),
        (None, Some(k)) => Ok(builtins::diagram(k)?),
        (None, None) => Err(CliError::Usage("no diagram given: use --diagram or --builtin diagram:<name>".into())),
    }
}

fn resolve_rack(inputs: &Inputs) -> Result<Rack, CliError> {
    if let Some(p) = &inputs.rack {
        return Ok(load_rack(p)?);
    }
    let (_, others) = diagram_keys(inputs);
    match others.first() {
        Some(k) => Ok(builtins::rack(k)?),
        None => Err(CliError::Usage("no rack given: use --rack or --builtin rack:<kind>:<n>".into())),
    }
}

fn parse_word(flag: &str, g: &FiniteGroup, text: &str) -> Result<EnhancedWord, CliError> {
    EnhancedWord::parse(g, text).map_err(|e: AlgebraError| CliError::Usage(format!("--{flag}: {e}")))
}

fn rack_word(flag: &str, r: &Rack, text: &str) -> Result<Vec<usize>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|n| r.lookup(n.trim()).ok_or_else(|| CliError::Usage(format!("--{flag}: `{}` is not an element of {}", n.trim(), r.name()))))
        .collect()
}

fn write_output(path: &Option<PathBuf>, tsv: &str) -> Result<(), CliError> {
    if let Some(p) = path {
        std::fs::write(p, tsv).map_err(|e| CliError::Write { path: p.display().to_string(), message: e.to_string() })?;
    }
    Ok(())
}

fn check_pair(inputs: &Inputs) -> Result<Outcome, CliError> {
    let p = resolve_pair(inputs)?;
    let report = if inputs.framed { check_framed(&p).0 } else { check_unframed_with(&p, true, inputs.run.workers) };
    let mode = if inputs.framed { "framed" } else { "unframed" };
    let text = format!("pair {} ({mode} axioms)\n{}", p.name(), report.render(p.base()));
    write_output(&inputs.run.output, &text)?;
    Ok(Outcome { text, success: report.passed })
}

fn invariant(inputs: &Inputs) -> Result<Outcome, CliError> {
    let p = resolve_pair(inputs)?;
    let d = resolve_diagram(inputs)?;
    let g = p.base();
    let top = match &inputs.top {
        Some(t) => parse_word("top", g, t)?,
        None if d.top().is_empty() => EnhancedWord::empty(),
        None => return Err(CliError::Usage("--top is required for a diagram with a nonempty top".into())),
    };
    let engine = StateSum::new(&p, inputs.run.workers);
    let tsv = match &inputs.bottom {
        Some(b) => engine.state_sum(&d, &top, &parse_word("bottom", g, b)?)?.to_tsv(g, p.fiber()),
        None => matrix_to_tsv(&engine.matrix(&d, &top)?, g, p.fiber()),
    };
    write_output(&inputs.run.output, &tsv)?;
    Ok(Outcome { text: tsv, success: true })
}

fn tables(which: TableId, run: &RunOpts) -> Result<Outcome, CliError> {
    let t = compute_table(which, run.workers)?;
    write_output(&run.output, &t.to_tsv())?;
    Ok(Outcome { text: t.render(), success: t.mismatches().is_empty() })
}

fn moves(inputs: &Inputs) -> Result<Outcome, CliError> {
    let p = resolve_pair(inputs)?;
    let cfg = MoveCheckConfig { workers: inputs.run.workers, ..MoveCheckConfig::default() };
    let mut outcomes = Vec::new();
    let mut text = String::new();
    let mut tsv = String::from("fixture\tholds\tboundaries\texhaustive\n");
    for f in move_fixtures() {
        let o = check_move_invariance_with(&p, &f, &cfg)?;
        let mode = if o.exhaustive { "exhaustive" } else { "sampled" };
        text.push_str(&format!(
            "{:<14} {:<6} {} boundaries, {mode}\n",
            o.label,
            if o.holds { "ok" } else { "FAILED" },
            o.boundaries_checked
        ));
        if let Some(c) = &o.counterexample {
            text.push_str(&format!("    top {} bottom {}\n", c.top.display(p.base()), c.bottom.display(p.base())));
        }
        tsv.push_str(&format!("{}\t{}\t{}\t{}\n", o.label, o.holds, o.boundaries_checked, o.exhaustive));
        outcomes.push(o);
    }
    text.push_str(&summarize_moves(&outcomes, p.base()));
    text.push('\n');
    let keep = if inputs.framed { crate::diagram::MoveId::in_framed_set } else { crate::diagram::MoveId::in_unframed_set };
    let success = outcomes.iter().filter(|o| keep(o.id) || !o.id.in_unframed_set() && !o.id.in_framed_set()).all(|o| o.holds);
    write_output(&inputs.run.output, &tsv)?;
    Ok(Outcome { text, success })
}

fn rack_count(inputs: &Inputs) -> Result<Outcome, CliError> {
    let r = resolve_rack(inputs)?;
    let d = resolve_diagram(inputs)?;
    let top = rack_word("top", &r, inputs.top.as_deref().unwrap_or(""))?;
    let mut tsv = String::new();
    match &inputs.bottom {
        Some(b) => {
            let bottom = rack_word("bottom", &r, b)?;
            tsv.push_str(&format!("{}\n", rack_colouring_count(&d, &r, &top, Some(&bottom))?));
        }
        None => {
            let name = |w: &[usize]| if w.is_empty() { "(empty)".to_owned() } else { w.iter().map(|&i| r.names()[i].as_str()).collect::<Vec<_>>().join(",") };
            for (bottom, n) in rack_colouring_counts(&d, &r, &top)? {
                tsv.push_str(&format!("{n}\t{}\n", name(&bottom)));
            }
        }
    }
    write_output(&inputs.run.output, &tsv)?;
    Ok(Outcome { text: tsv, success: true })
}

fn catalog() -> Outcome {
    let width = CATALOG.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let text = CATALOG.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect();
    Outcome { text, success: true }
}

/// Execute a parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::CheckPair(i) => check_pair(i),
        Command::Invariant(i) => invariant(i),
        Command::Tables { which, run } => tables(*which, run),
        Command::Moves(i) => moves(i),
        Command::RackCount(i) => rack_count(i),
        Command::Builtins => Ok(catalog()),
    }
}

/// Parse `argv` (including the program name), run, and report on the given
/// streams. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            if o.success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Convenience for tests and examples: run and capture both streams.
pub fn run_captured<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&err).into_owned())
}

