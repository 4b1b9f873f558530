//! `prym`: command-line front end for the Prym tableau calculus.

mod census;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use prym_core::complex::{betti_closed_form, build_intersection_graph, connect_path};
use prym_core::counting::{
    count_brute, count_even_determinant, count_generic, count_lattice_paths, count_points, max_cell_count,
};
use prym_core::dimension::{brute_min_codim, pbn_dimension, OracleOptions};
use prym_core::divisors::{tableau_to_divisor, DivisorOutcome, FoldedChain};
use prym_core::json::{tableau_from_json, TableauJson, SCHEMA_VERSION};
use prym_core::reflection::{extend_to_reflective, reflectify};
use prym_core::strips::for_each_strip_tableau;
use prym_core::{acceptance, Error, PrymParams, ShapeKind, Tableau};

#[derive(Parser)]
#[command(name = "prym", version, about = "Prym-Brill-Noether loci of folded chains of loops via tableaux")]
struct Cli {
    /// Emit machine-readable JSON with a schema version.
    #[arg(long, global = true)]
    json: bool,
    /// Override desk-scale limits on exhaustive searches.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct TypeArgs {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    k: u32,
}

impl TypeArgs {
    fn params(&self) -> Result<PrymParams, Error> {
        PrymParams::new(self.g, self.r, self.k)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CountMethodArg {
    Auto,
    Hook,
    Det,
    Paths,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BettiMethod {
    Graph,
    Closed,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the locus, or "empty".
    Dim {
        #[command(flatten)]
        t: TypeArgs,
        /// Also run the exhaustive minimum-codimension search.
        #[arg(long)]
        oracle: bool,
    },
    /// The number C(r, k) of points of a zero-dimensional locus.
    Count {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "auto")]
        method: CountMethodArg,
    },
    /// Maximal cells as strip tableaux, one JSON line each.
    Cells {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        count_only: bool,
        /// Restrict to these symbols, comma separated.
        #[arg(long, value_delimiter = ',')]
        symbols: Option<Vec<u32>>,
    },
    /// First Betti number of a one-dimensional locus.
    Betti {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, value_enum, default_value = "both")]
        method: BettiMethod,
    },
    /// The intersection graph of a one-dimensional locus in DOT form.
    Graph {
        #[command(flatten)]
        t: TypeArgs,
        /// Write DOT here instead of standard output.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// A chain of adjacent cells between two non-repeating tableaux, as JSON lines.
    Path {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
    },
    /// Reflect a Prym tableau to a dominating reflective one.
    Reflectify {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long = "in")]
        input: PathBuf,
        /// Emit every intermediate tableau.
        #[arg(long)]
        trace: bool,
    },
    /// The chip divisor of a Prym or staircase tableau.
    Divisor {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        k: u32,
    },
    /// A CSV table comparing every route over a range of types.
    Census(census::CensusArgs),
    /// Run the acceptance suite.
    Selftest {
        /// Only these criteria, comma separated.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<u32>>,
    },
}

pub(crate) enum Failure {
    Usage(String),
    Bound(String),
    Internal(String),
    Failed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } => Failure::Bound(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn read_tableau(path: &Path) -> Result<Tableau, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(tableau_from_json(&text)?)
}

fn tableau_value(t: &Tableau) -> serde_json::Value {
    serde_json::to_value(TableauJson::from(t)).expect("plain data")
}

fn emit(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn versioned(mut value: serde_json::Value) -> serde_json::Value {
    if let Some(map) = value.as_object_mut() {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    }
    value
}

fn run(cli: Cli) -> CliResult {
    if cli.force {
        eprintln!("warning: --force disables the desk-scale limits; this may run for a long time");
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Dim { t, oracle } => {
            let p = t.params()?;
            let report = pbn_dimension(&p)?;
            let oracle_codim = if oracle {
                Some(brute_min_codim(&p, OracleOptions { paranoid: false, force: cli.force })?)
            } else {
                None
            };
            if cli.json {
                let mut v = json!({
                    "params": p, "codim": report.codim, "expected": report.expected,
                    "dimension": report.dimension,
                    "witness": report.witness.as_ref().map(tableau_value),
                });
                if let Some(c) = oracle_codim {
                    v["oracle_codim"] = json!(c);
                }
                emit(&mut out, &versioned(v))?;
            } else {
                match report.dimension {
                    Some(d) => writeln!(out, "dimension {d} (codimension {})", report.codim)?,
                    None => writeln!(out, "empty")?,
                }
                if let Some(c) = oracle_codim {
                    writeln!(out, "exhaustive minimum codimension {c}")?;
                }
            }
        }
        Command::Count { r, k, method } => {
            let (value, used) = match method {
                CountMethodArg::Auto => {
                    let (v, m) = count_points(r, k, cli.force)?;
                    (v, serde_json::to_value(m).expect("enum").as_str().unwrap_or("").to_string())
                }
                CountMethodArg::Hook => (count_generic(r), "hook_length".into()),
                CountMethodArg::Det => (count_even_determinant(r, k)?, "determinant".into()),
                CountMethodArg::Paths => (count_lattice_paths(r, k)?, "lattice_paths".into()),
                CountMethodArg::Brute => (count_brute(r, k, cli.force)?, "brute".into()),
            };
            if cli.json {
                emit(&mut out, &versioned(json!({"r": r, "k": k, "count": value.to_string(), "method": used})))?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::Cells { t, count_only, symbols } => {
            let p = t.params()?;
            if count_only {
                let n = prym_core::strips::count_strip_tableaux(&p, symbols.as_deref())?;
                if cli.json {
                    let expected = max_cell_count(&p, cli.force).ok().map(|c| c.to_string());
                    emit(&mut out, &versioned(json!({"params": p, "cells": n, "formula": expected})))?;
                } else {
                    writeln!(out, "{n}")?;
                }
            } else {
                let mut err = None;
                for_each_strip_tableau(&p, symbols.as_deref(), |st| {
                    let mut v = tableau_value(&st.extend());
                    v["strip"] = json!(prym_core::strips::word_string(st.strip().word()));
                    match emit(&mut out, &v) {
                        Ok(()) => true,
                        Err(e) => {
                            err = Some(e);
                            false
                        }
                    }
                })?;
                if let Some(e) = err {
                    if e.kind() != io::ErrorKind::BrokenPipe {
                        return Err(e.into());
                    }
                }
            }
        }
        Command::Betti { t, method } => {
            let p = t.params()?;
            let graph = match method {
                BettiMethod::Closed => None,
                _ => Some(build_intersection_graph(&p)?),
            };
            let closed = match method {
                BettiMethod::Graph => None,
                _ => Some(betti_closed_form(&p)?),
            };
            let graph_betti = graph.as_ref().map(|g| g.betti());
            let agree = match (&graph_betti, &closed) {
                (Some(a), Some(b)) => Some(num_bigint::BigUint::from(*a) == *b),
                _ => None,
            };
            if cli.json {
                emit(
                    &mut out,
                    &versioned(json!({
                        "params": p,
                        "graph": graph.as_ref().map(|g| g.summary()),
                        "closed": closed.as_ref().map(|c| c.to_string()),
                        "agree": agree,
                    })),
                )?;
            } else {
                match (graph_betti, &closed) {
                    (Some(a), Some(b)) => writeln!(
                        out,
                        "graph {a} / closed {b}: {}",
                        if agree == Some(true) { "AGREE" } else { "DISAGREE" }
                    )?,
                    (Some(a), None) => writeln!(out, "{a}")?,
                    (None, Some(b)) => writeln!(out, "{b}")?,
                    (None, None) => unreachable!(),
                }
            }
            if agree == Some(false) {
                return Err(Failure::Internal("graph and closed form disagree".into()));
            }
        }
        Command::Graph { t, dot } => {
            let p = t.params()?;
            let graph = build_intersection_graph(&p)?;
            let text = graph.to_dot();
            match dot {
                Some(path) => {
                    fs::write(&path, text)?;
                    let s = graph.summary();
                    if cli.json {
                        emit(&mut out, &versioned(json!({"params": p, "summary": s})))?;
                    } else {
                        writeln!(
                            out,
                            "{} circles, {} vertices, Betti {}; wrote {}",
                            s.circles,
                            s.vertices,
                            s.betti,
                            path.display()
                        )?;
                    }
                }
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Path { t, from, to } => {
            let p = t.params()?;
            let (a, b) = (read_tableau(&from)?, read_tableau(&to)?);
            for (i, step) in connect_path(&a, &b, &p)?.iter().enumerate() {
                let mut v = versioned(tableau_value(step));
                v["step"] = json!(i);
                emit(&mut out, &v)?;
            }
        }
        Command::Reflectify { t, input, trace } => {
            let p = t.params()?;
            let tab = read_tableau(&input)?;
            let refl = reflectify(&tab, &p)?;
            let steps: Vec<_> =
                if trace { refl.steps.iter().collect() } else { refl.steps.last().into_iter().collect() };
            for step in steps {
                if cli.json || trace {
                    let mut v = versioned(tableau_value(&step.tableau));
                    v["symbol"] = json!(step.symbol);
                    emit(&mut out, &v)?;
                } else {
                    write!(out, "{}", step.tableau)?;
                }
            }
        }
        Command::Divisor { input, g, k } => {
            let tab = read_tableau(&input)?;
            let r = match tab.shape().kind() {
                ShapeKind::Square { r } | ShapeKind::Triangle { n: r } => *r,
                _ => return Err(Failure::Usage("divisors need a square or staircase tableau".into())),
            };
            let p = PrymParams::new(g, r, k)?;
            let square = match tab.shape().kind() {
                ShapeKind::Triangle { .. } => extend_to_reflective(&tab, &p)?,
                _ => tab,
            };
            let chain = FoldedChain::uniform(g, k)?;
            match tableau_to_divisor(&square, &p, &chain)? {
                DivisorOutcome::Divisor(d) if cli.json => {
                    emit(&mut out, &json!({"schema_version": SCHEMA_VERSION, "divisor": d}))?
                }
                DivisorOutcome::Divisor(d) => emit(&mut out, &d)?,
                DivisorOutcome::EmptyCell if cli.json => {
                    emit(&mut out, &json!({"schema_version": SCHEMA_VERSION, "empty_cell": true}))?
                }
                DivisorOutcome::EmptyCell => writeln!(out, "empty cell: the fiber of g has the wrong parity")?,
            }
        }
        Command::Census(args) => census::run(&args, cli.force, &mut out)?,
        Command::Selftest { only } => {
            let mut failed = 0;
            for c in acceptance::criteria().iter().filter(|c| only.as_ref().is_none_or(|o| o.contains(&c.id))) {
                let report = c.run();
                if cli.json {
                    emit(&mut out, &versioned(serde_json::to_value(&report).expect("plain data")))?;
                } else {
                    writeln!(out, "{}", report.line())?;
                }
                out.flush()?;
                if !report.passed {
                    failed += 1;
                }
            }
            if failed > 0 {
                eprintln!("{failed} criteria failed");
                return Err(Failure::Failed);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (2, Some(m)),
                Failure::Bound(m) => (3, Some(m)),
                Failure::Internal(m) => (1, Some(m)),
                Failure::Failed => (1, None),
            };
            if let Some(m) = msg {
                eprintln!("error: {m}");
            }
            ExitCode::from(code)
        }
    }
}
