//! The census table: every counting and Betti route side by side.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use prym_core::complex::{betti_closed_form, build_intersection_graph};
use prym_core::counting::{binomial, count_brute, count_even_determinant, count_generic, count_lattice_paths};
use prym_core::dimension::expected_codim;
use prym_core::strips::count_strip_tableaux;
use prym_core::{Error, PrymParams};

use crate::Failure;

/// Largest predicted cell count the census enumerates.
const ENUMERATION_LIMIT: u64 = 2_000_000;
/// Largest circle count for which the census builds the graph.
const GRAPH_LIMIT: u64 = 20_000;

#[derive(Args)]
pub struct CensusArgs {
    /// Largest r.
    #[arg(long, default_value_t = 4)]
    r_max: u32,
    /// Torsion orders, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0,2,3,4,5")]
    k: Vec<u32>,
    /// Include g - 1 from n(r, k) up to n(r, k) + extra.
    #[arg(long, default_value_t = 2)]
    extra: u32,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct Row {
    g: u32,
    r: u32,
    k: u32,
    n: u32,
    dim: String,
    #[serde(rename = "C_method_det")]
    det: String,
    #[serde(rename = "C_method_paths")]
    paths: String,
    #[serde(rename = "C_method_brute")]
    brute: String,
    cells: String,
    betti_closed: String,
    betti_graph: String,
    agree: bool,
}

fn show<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn optional<T>(r: Result<T, Error>) -> Result<Option<T>, Error> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::NoClosedForm(_) | Error::BoundExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn row(p: PrymParams, force: bool) -> Result<Row, Error> {
    let (r, k) = (p.r, p.k);
    let n = expected_codim(r, k);
    let generic = p.is_generic();
    let (det, paths) = if generic {
        (Some(count_generic(r)), None)
    } else {
        (optional(count_even_determinant(r, k))?, optional(count_lattice_paths(r, k))?)
    };
    let brute = optional(count_brute(r, k, force))?;
    let mut agree = true;
    let c_values: Vec<&BigUint> = [&det, &paths, &brute].into_iter().flatten().collect();
    if c_values.windows(2).any(|w| w[0] != w[1]) {
        agree = false;
    }
    let c = c_values.first().copied().cloned();
    let mut cells = None;
    let mut betti_closed = None;
    let mut betti_graph = None;
    if p.expected_dim() >= 0 {
        if let Some(c) = &c {
            let predicted = c * binomial(p.g as u64 - 1, n as u64);
            if force || predicted <= BigUint::from(ENUMERATION_LIMIT) {
                let enumerated = count_strip_tableaux(&p, None)?;
                agree &= BigUint::from(enumerated) == predicted;
                cells = Some(enumerated);
                if p.expected_dim() == 1 {
                    betti_closed = optional(betti_closed_form(&p))?;
                    if force || enumerated <= GRAPH_LIMIT {
                        betti_graph = Some(build_intersection_graph(&p)?.betti());
                    }
                    if let (Some(a), Some(b)) = (&betti_closed, betti_graph) {
                        agree &= *a == BigUint::from(b);
                    }
                }
            }
        }
    }
    Ok(Row {
        g: p.g,
        r,
        k,
        n,
        dim: if p.expected_dim() < 0 { "empty".into() } else { p.expected_dim().to_string() },
        det: if generic { String::new() } else { show(&det) },
        paths: show(&paths),
        brute: show(&brute),
        cells: show(&cells),
        betti_closed: show(&betti_closed),
        betti_graph: show(&betti_graph),
        agree,
    })
}

pub fn run(args: &CensusArgs, force: bool, out: &mut impl Write) -> Result<(), Failure> {
    let mut params = Vec::new();
    for r in 1..=args.r_max {
        for &k in &args.k {
            let n = expected_codim(r, k);
            for extra in 0..=args.extra {
                params.push(PrymParams::new(n + 1 + extra, r, k)?);
            }
        }
    }
    let mut rows: Vec<Row> = params.into_par_iter().map(|p| row(p, force)).collect::<Result<_, _>>()?;
    rows.sort_by_key(|r| (r.r, r.k, r.g));
    let mut writer = csv::Writer::from_writer(Vec::new());
    for r in &rows {
        writer.serialize(r).map_err(|e| Failure::Internal(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| Failure::Internal(e.to_string()))?;
    match &args.out {
        Some(path) => {
            let tmp = path.with_extension("csv.partial");
            fs::write(&tmp, &bytes)?;
            fs::rename(&tmp, path)?;
        }
        None => out.write_all(&bytes)?,
    }
    if rows.iter().any(|r| !r.agree) {
        return Err(Failure::Internal("some census rows disagree".into()));
    }
    Ok(())
}
