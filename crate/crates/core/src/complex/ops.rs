//! Elementary moves between tableaux and the adjacency relation of cells.

use std::collections::BTreeMap;

use crate::error::{invalid, Result};
use crate::tableau::{classes_agree, is_tableau, LatticeBox, PrymParams, Tableau};

fn fits_at(t: &Tableau, a: u32, b: LatticeBox) -> bool {
    t.iter().all(|(c, v)| {
        if c.is_below(b) {
            v < a
        } else if b.is_below(c) {
            a < v
        } else {
            true
        }
    })
}

/// Write the absent symbol `a` into box `b`. With `strict`, the symbol it
/// replaces must occur nowhere else.
pub fn swap_into(t: &Tableau, a: u32, b: LatticeBox, strict: bool) -> Result<Tableau> {
    let Some(old) = t.get(b) else {
        return invalid(format!("box {b} is not in the tableau"));
    };
    if old == a {
        return Ok(t.clone());
    }
    if a == 0 || a > t.symbol_bound() {
        return invalid(format!("symbol {a} outside [1, {}]", t.symbol_bound()));
    }
    if t.contains_symbol(a) {
        return invalid(format!("symbol {a} is already present"));
    }
    if strict && t.fiber(old).len() > 1 {
        return invalid(format!("symbol {old} at {b} is repeated; a strict swap needs it unique"));
    }
    if !fits_at(t, a, b) {
        return invalid(format!("writing {a} at {b} breaks the tableau condition"));
    }
    let mut out = t.clone();
    out.set(b, a);
    Ok(out)
}

/// Replace every occurrence of `b` by the absent symbol `a`.
pub fn swap_in_for(t: &Tableau, a: u32, b: u32) -> Result<Tableau> {
    if a == b || !t.contains_symbol(b) {
        return Ok(t.clone());
    }
    if a == 0 || a > t.symbol_bound() {
        return invalid(format!("symbol {a} outside [1, {}]", t.symbol_bound()));
    }
    if t.contains_symbol(a) {
        return invalid(format!("symbol {a} is already present"));
    }
    let mut out = t.clone();
    for (bx, v) in t.iter() {
        if v == b {
            out.set(bx, a);
        }
    }
    if !is_tableau(&out) {
        return invalid(format!("swapping {a} in for {b} breaks the tableau condition"));
    }
    Ok(out)
}

/// Free the symbol `b` using the absent symbol `a`, shifting every symbol
/// strictly between them one step towards `a`. Returns the tableau after
/// each elementary swap.
pub fn cycle_out_steps(t: &Tableau, b: u32, a: u32) -> Result<Vec<Tableau>> {
    if a == b || !t.contains_symbol(b) {
        return Ok(Vec::new());
    }
    if t.contains_symbol(a) {
        return invalid(format!("symbol {a} is already present"));
    }
    let mut cur = t.clone();
    let mut out = Vec::new();
    if a < b {
        for c in a..b {
            cur = swap_in_for(&cur, c, c + 1)?;
            out.push(cur.clone());
        }
    } else {
        for c in (b + 1..=a).rev() {
            cur = swap_in_for(&cur, c, c - 1)?;
            out.push(cur.clone());
        }
    }
    Ok(out)
}

pub fn cycle_out(t: &Tableau, b: u32, a: u32) -> Result<Tableau> {
    Ok(cycle_out_steps(t, b, a)?.pop().unwrap_or_else(|| t.clone()))
}

fn class_map(t: &Tableau, p: &PrymParams) -> Result<BTreeMap<u32, i64>> {
    let torsion = p.torsion();
    if !classes_agree(t, torsion, None) {
        return invalid("tableau violates the displacement condition");
    }
    Ok(t.symbol_classes(torsion).into_iter().map(|(s, c)| (s, *c.iter().next().expect("nonempty"))).collect())
}

/// Whether the cells of two displacement tableaux with the same number of
/// symbols are equal or meet in codimension one: they agree on the class of
/// every common symbol and differ by exactly one symbol on each side.
pub fn is_adjacent(t: &Tableau, s: &Tableau, p: &PrymParams) -> Result<bool> {
    if !t.shape().same_boxes(s.shape()) {
        return invalid("adjacency compares tableaux on the same shape");
    }
    if t.entries().iter().chain(s.entries()).any(|&e| e == 0 || e >= p.g) {
        return invalid(format!("symbols must lie in [1, {}]", p.g - 1));
    }
    if t.distinct_count() != s.distinct_count() {
        return invalid("adjacency compares tableaux with equally many symbols");
    }
    let (ct, cs) = (class_map(t, p)?, class_map(s, p)?);
    if ct == cs {
        return Ok(true);
    }
    let only_t = ct.keys().filter(|k| !cs.contains_key(k)).count();
    let only_s = cs.keys().filter(|k| !ct.contains_key(k)).count();
    let common_agree = ct.iter().all(|(k, c)| cs.get(k).is_none_or(|d| d == c));
    Ok(only_t == 1 && only_s == 1 && common_agree)
}
