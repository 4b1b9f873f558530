//! Expected codimension, dimension of the Prym-Brill-Noether locus, and a
//! brute-force oracle over staircase Prym tableaux.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::reflection::extend_to_reflective;
use crate::strips::{StripShape, StripTableau};
use crate::tableau::{LatticeBox, PrymParams, Shape, Tableau, Torsion};

fn binom2(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

/// `n(r, k) = C(l+1, 2) + l(r - l)` when `l = ceil(k/2) <= r - 1`, and
/// `C(r+1, 2)` otherwise (including `k = 0`).
pub fn expected_codim(r: u32, k: u32) -> u32 {
    let l = k.div_ceil(2);
    if k >= 2 && l < r {
        binom2(l + 1) + l * (r - l)
    } else {
        binom2(r + 1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub params: PrymParams,
    pub codim: u32,
    /// `g - 1 - n(r, k)`.
    pub expected: i64,
    /// None when the locus is empty.
    pub dimension: Option<u32>,
    /// A reflective tableau whose cell attains the dimension.
    #[serde(skip)]
    pub witness: Option<Tableau>,
}

/// Dimension of the locus, with a witness cell when it is nonempty.
pub fn pbn_dimension(p: &PrymParams) -> Result<DimensionReport> {
    let codim = p.codim();
    let expected = p.expected_dim();
    let (dimension, witness) = if expected < 0 {
        (None, None)
    } else {
        let staircase = standard_base(p)?;
        (Some(expected as u32), Some(extend_to_reflective(&staircase, p)?))
    };
    Ok(DimensionReport { params: *p, codim, expected, dimension, witness })
}

/// The non-repeating tableau extending `1, 2, ..., n` written on the
/// horizontal strip in canonical order.
pub fn standard_base(p: &PrymParams) -> Result<Tableau> {
    if p.expected_dim() < 0 {
        return Err(Error::EmptyLocus(format!("type {p} has negative expected dimension")));
    }
    let strip = if p.is_generic() { StripShape::full(p.r) } else { StripShape::horizontal(p.r, p.width())? };
    let n = strip.boxes().len() as u32;
    Ok(StripTableau::new(*p, strip, (1..=n).collect())?.extend())
}

/// Desk-scale limits for exhaustive staircase enumeration.
pub const MAX_STAIRCASE_BOXES: u64 = 10;
pub const MAX_STAIRCASE_SYMBOLS: u64 = 16;

#[derive(Clone, Copy, Debug, Default)]
pub struct OracleOptions {
    /// Enumerate everything, with no branch-and-bound pruning.
    pub paranoid: bool,
    /// Ignore the desk-scale limits.
    pub force: bool,
}

fn check_limits(p: &PrymParams, force: bool) -> Result<()> {
    if force {
        return Ok(());
    }
    let boxes = binom2(p.r + 1) as u64;
    if boxes > MAX_STAIRCASE_BOXES {
        return Err(Error::BoundExceeded { what: "|T_r|", value: boxes, limit: MAX_STAIRCASE_BOXES });
    }
    if (p.g as u64 - 1) > MAX_STAIRCASE_SYMBOLS {
        return Err(Error::BoundExceeded { what: "g - 1", value: p.g as u64 - 1, limit: MAX_STAIRCASE_SYMBOLS });
    }
    Ok(())
}

/// Backtracking over fillings of `T_r` by `[g-1]` that are tableaux and
/// displacement tableaux for the torsion.
struct StaircaseSearch {
    boxes: Vec<LatticeBox>,
    classes: Vec<i64>,
    west: Vec<Option<usize>>,
    south: Vec<Option<usize>>,
    max_symbol: u32,
}

struct SearchState {
    values: Vec<u32>,
    /// class held by each symbol and how many boxes use it
    symbol_class: Vec<Option<i64>>,
    symbol_uses: Vec<u32>,
    distinct: u32,
}

impl StaircaseSearch {
    fn new(p: &PrymParams) -> StaircaseSearch {
        let shape = Shape::triangle(p.r);
        let torsion: Torsion = p.torsion();
        let boxes = shape.boxes().to_vec();
        let classes = boxes.iter().map(|&b| torsion.class(b)).collect();
        let west = boxes.iter().map(|b| b.west().and_then(|w| shape.index_of(w))).collect();
        let south = boxes.iter().map(|b| b.south().and_then(|s| shape.index_of(s))).collect();
        StaircaseSearch { boxes, classes, west, south, max_symbol: p.g - 1 }
    }

    fn state(&self) -> SearchState {
        let m = self.max_symbol as usize + 1;
        SearchState {
            values: Vec::with_capacity(self.boxes.len()),
            symbol_class: vec![None; m],
            symbol_uses: vec![0; m],
            distinct: 0,
        }
    }

    fn lower_bound(&self, i: usize, st: &SearchState) -> u32 {
        let w = self.west[i].map_or(0, |j| st.values[j]);
        let s = self.south[i].map_or(0, |j| st.values[j]);
        w.max(s) + 1
    }

    fn place(&self, i: usize, v: u32, st: &mut SearchState) -> bool {
        let c = self.classes[i];
        match st.symbol_class[v as usize] {
            Some(existing) if existing != c => return false,
            _ => {}
        }
        st.symbol_class[v as usize] = Some(c);
        if st.symbol_uses[v as usize] == 0 {
            st.distinct += 1;
        }
        st.symbol_uses[v as usize] += 1;
        st.values.push(v);
        true
    }

    fn unplace(&self, st: &mut SearchState) {
        let v = st.values.pop().expect("placed") as usize;
        st.symbol_uses[v] -= 1;
        if st.symbol_uses[v] == 0 {
            st.distinct -= 1;
            st.symbol_class[v] = None;
        }
    }

    /// `prune(distinct)` returning true cuts the branch.
    fn run(&self, st: &mut SearchState, prune: &dyn Fn(u32) -> bool, visit: &mut dyn FnMut(&[u32], u32)) {
        let i = st.values.len();
        if i == self.boxes.len() {
            visit(&st.values, st.distinct);
            return;
        }
        for v in self.lower_bound(i, st)..=self.max_symbol {
            if self.place(i, v, st) {
                if !prune(st.distinct) {
                    self.run(st, prune, visit);
                }
                self.unplace(st);
            }
        }
    }
}

/// Visit every staircase Prym tableau of the type, i.e. every displacement
/// tableau `T_r -> [g-1]`. Refuses instances beyond the desk-scale limits
/// unless forced.
pub fn for_each_staircase_prym(p: &PrymParams, force: bool, mut visit: impl FnMut(&Tableau)) -> Result<()> {
    check_limits(p, force)?;
    let search = StaircaseSearch::new(p);
    let shape = Arc::new(Shape::triangle(p.r));
    let mut st = search.state();
    let bound = p.g - 1;
    search.run(&mut st, &|_| false, &mut |vals, _| {
        let t = Tableau::new(shape.clone(), vals.to_vec(), bound).expect("in range");
        visit(&t);
    });
    Ok(())
}

pub fn enumerate_staircase_prym(p: &PrymParams, force: bool) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    for_each_staircase_prym(p, force, |t| out.push(t.clone()))?;
    Ok(out)
}

/// The minimum number of distinct symbols over all staircase Prym tableaux
/// of the type, by exhaustive search split on the content of `(1, 1)`.
pub fn brute_min_codim(p: &PrymParams, opts: OracleOptions) -> Result<u32> {
    check_limits(p, opts.force)?;
    if p.r == 0 {
        return Ok(0);
    }
    let search = StaircaseSearch::new(p);
    let best = (1..=p.g - 1)
        .into_par_iter()
        .filter_map(|first| {
            let mut st = search.state();
            if !search.place(0, first, &mut st) {
                return None;
            }
            let best = std::cell::Cell::new(u32::MAX);
            let paranoid = opts.paranoid;
            let prune = |d: u32| !paranoid && d >= best.get();
            search.run(&mut st, &prune, &mut |_, d| {
                if d < best.get() {
                    best.set(d);
                }
            });
            (best.get() != u32::MAX).then(|| best.get())
        })
        .min();
    best.ok_or_else(|| Error::EmptyLocus(format!("no staircase Prym tableau of type {p}")))
}
