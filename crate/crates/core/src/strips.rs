//! Strips inside the staircase `T_r`, non-repeating maps, and the strip
//! tableaux that index maximal cells.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{internal, invalid, Error, Result};
use crate::tableau::{is_tableau, LatticeBox, PrymParams, Shape, ShapeKind, Tableau};

/// One step of the path traced by the leftmost boxes of a strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    East,
    North,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::East => 'E',
            Step::North => 'N',
        }
    }

    pub fn parse_word(s: &str) -> Result<Vec<Step>> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                'E' | 'e' => Ok(Step::East),
                'N' | 'n' => Ok(Step::North),
                other => invalid(format!("strip word letter must be E or N, got {other:?}")),
            })
            .collect()
    }
}

pub fn word_string(word: &[Step]) -> String {
    word.iter().map(|s| s.letter()).collect()
}

/// Where a box of `T_r` sits relative to a strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Strip,
    Left,
    Right,
}

/// A strip of width `l` and length `r`, encoded by the `r - l` steps
/// between consecutive leftmost boxes. Width `r` gives all of `T_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StripShape {
    r: u32,
    width: u32,
    word: Vec<Step>,
    shape: Arc<Shape>,
}

impl StripShape {
    pub fn new(r: u32, width: u32, word: Vec<Step>) -> Result<StripShape> {
        if width > r {
            return invalid(format!("strip width {width} exceeds length {r}"));
        }
        if width == 0 && r > 0 {
            return invalid("strip width must be positive");
        }
        if word.len() as u32 != r - width {
            return invalid(format!(
                "a strip of length {r} and width {width} needs {} steps, got {}",
                r - width,
                word.len()
            ));
        }
        let mut boxes: Vec<LatticeBox> = Shape::triangle(width).boxes().to_vec();
        let mut left = LatticeBox { x: 1, y: width.max(1) };
        for step in &word {
            left = match step {
                Step::East => left.east(),
                Step::North => left.north(),
            };
            boxes.extend((0..width).map(|i| LatticeBox::new(left.x + i, left.y - i)));
        }
        let shape = Shape::with_kind(ShapeKind::Strip { r, width, word: word.clone() }, boxes);
        Ok(StripShape { r, width, word, shape: Arc::new(shape) })
    }

    /// All of `T_r`, the degenerate strip used in the generic case.
    pub fn full(r: u32) -> StripShape {
        StripShape::new(r, r, Vec::new()).expect("full staircase is a strip")
    }

    /// The horizontal strip `mu_0`: the bottom `width` rows.
    pub fn horizontal(r: u32, width: u32) -> Result<StripShape> {
        StripShape::new(r, width, vec![Step::East; r.saturating_sub(width) as usize])
    }

    pub fn length(&self) -> u32 {
        self.r
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn word(&self) -> &[Step] {
        &self.word
    }

    pub fn shape(&self) -> &Arc<Shape> {
        &self.shape
    }

    pub fn boxes(&self) -> &[LatticeBox] {
        self.shape.boxes()
    }

    pub fn is_degenerate(&self) -> bool {
        self.width == self.r
    }

    pub fn is_horizontal(&self) -> bool {
        self.word.iter().all(|&s| s == Step::East)
    }

    /// The `n`-th leftmost box, for `width <= n <= r`.
    pub fn leftmost(&self, n: u32) -> Option<LatticeBox> {
        if self.r == 0 || n < self.width || n > self.r {
            return None;
        }
        let mut b = LatticeBox::new(1, self.width);
        for step in &self.word[..(n - self.width) as usize] {
            b = match step {
                Step::East => b.east(),
                Step::North => b.north(),
            };
        }
        Some(b)
    }

    /// The `n`-th rightmost box, `leftmost(n) + (l-1, 1-l)`.
    pub fn rightmost(&self, n: u32) -> Option<LatticeBox> {
        self.leftmost(n).map(|b| LatticeBox::new(b.x + self.width - 1, b.y + 1 - self.width))
    }

    /// The row of the `r`-th leftmost box.
    pub fn height(&self) -> u32 {
        self.leftmost(self.r).map_or(0, |b| b.y)
    }

    pub fn region(&self, b: LatticeBox) -> Option<Region> {
        let n = b.anti_diagonal();
        if n > self.r {
            return None;
        }
        if n < self.width.max(1) {
            return Some(Region::Strip);
        }
        let left = self.leftmost(n).expect("anti-diagonal in range");
        Some(if b.x < left.x {
            Region::Left
        } else if b.x >= left.x + self.width {
            Region::Right
        } else {
            Region::Strip
        })
    }

    pub fn contains(&self, b: LatticeBox) -> bool {
        self.region(b) == Some(Region::Strip)
    }

    /// The box whose value a box outside the strip repeats.
    pub fn source(&self, b: LatticeBox, epsilon: u32) -> Option<LatticeBox> {
        let (l, e) = (self.width as i64, epsilon as i64);
        match self.region(b)? {
            Region::Strip => None,
            Region::Left => b.shifted(l - e, -l),
            Region::Right => b.shifted(-l, l - e),
        }
    }

    /// The box of the strip a box of `T_r` ultimately copies.
    pub fn resolve(&self, b: LatticeBox, epsilon: u32) -> Result<LatticeBox> {
        let mut cur = b;
        for _ in 0..=4 * (self.r as usize + 1) {
            match self.region(cur) {
                Some(Region::Strip) => return Ok(cur),
                Some(_) => {
                    cur = match self.source(cur, epsilon) {
                        Some(s) => s,
                        None => return internal(format!("repeating source of {cur} leaves the quadrant")),
                    }
                }
                None => return internal(format!("repeating chain from {b} leaves T_{}", self.r)),
            }
        }
        internal(format!("repeating chain from {b} does not reach the strip"))
    }

    /// Gluing inequalities as `(smaller, larger)` box pairs.
    pub fn gluing_pairs(&self, epsilon: u32) -> Vec<(LatticeBox, LatticeBox)> {
        let l = self.width;
        let e = epsilon;
        let mut out = Vec::new();
        if self.is_degenerate() {
            return out;
        }
        for n in l..self.r {
            let b = self.leftmost(n).expect("in range");
            let (x, y) = (b.x, b.y);
            match self.word[(n - l) as usize] {
                Step::East => out.push((b, LatticeBox::new(x + l - e, y + 1 - l))),
                Step::North => out.push((LatticeBox::new(x + l - 1, y + 1 - l), LatticeBox::new(x, y + 1 - e))),
            }
        }
        out
    }
}

impl fmt::Display for StripShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strip(r={}, l={}, word={})", self.r, self.width, word_string(&self.word))
    }
}

/// The strips relevant to a type: `T_r` in the generic case, otherwise all
/// `2^(r-l)` strips in lexicographic word order (East before North).
pub fn enumerate_strips(p: &PrymParams) -> Vec<StripShape> {
    if p.is_generic() {
        return vec![StripShape::full(p.r)];
    }
    let l = p.width();
    let steps = (p.r - l) as usize;
    (0..1u64 << steps)
        .map(|bits| {
            let word =
                (0..steps).map(|i| if bits >> (steps - 1 - i) & 1 == 1 { Step::North } else { Step::East }).collect();
            StripShape::new(p.r, l, word).expect("valid strip")
        })
        .collect()
}

/// The strips that carry distinct maximal cells: all of them for odd torsion,
/// only the horizontal one otherwise.
pub fn cell_strips(p: &PrymParams) -> Vec<StripShape> {
    if p.is_odd() {
        enumerate_strips(p)
    } else {
        vec![StripShape::horizontal(p.r, p.width()).expect("valid strip")]
    }
}

fn epsilon(p: &PrymParams) -> u32 {
    p.epsilon().unwrap_or(0)
}

fn check_strip_fits(strip: &StripShape, p: &PrymParams) -> Result<()> {
    if strip.length() != p.r || strip.width() != p.width() {
        return invalid(format!("{strip} does not match type {p}"));
    }
    Ok(())
}

fn require_triangle(t: &Tableau, r: u32) -> Result<()> {
    match t.shape().kind() {
        ShapeKind::Triangle { n } if *n == r => Ok(()),
        _ => invalid(format!("expected a map on the staircase T_{r}")),
    }
}

/// Whether a map `T_r -> [g-1]` is non-repeating in `strip`. The map must
/// already be a displacement tableau on the strip.
pub fn is_non_repeating(t: &Tableau, strip: &StripShape, p: &PrymParams) -> Result<bool> {
    require_triangle(t, p.r)?;
    check_strip_fits(strip, p)?;
    let on_strip = t.restrict(strip.shape().clone())?;
    if !is_tableau(&on_strip) {
        return invalid("the map is not a tableau on the strip");
    }
    if !crate::tableau::classes_agree(&on_strip, p.torsion(), None) {
        return invalid("the map violates the displacement condition on the strip");
    }
    if t.entries().iter().any(|&e| e >= p.g) {
        return Ok(false);
    }
    let e = epsilon(p);
    for (b, v) in t.iter() {
        if let Some(src) = strip.source(b, e) {
            if t.get(src) != Some(v) {
                return Ok(false);
            }
        }
    }
    for (lo, hi) in strip.gluing_pairs(e) {
        match (t.get(lo), t.get(hi)) {
            (Some(a), Some(b)) if a < b => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// A minimal filling of a strip: injective, increasing along the box order,
/// glued, with symbols in `[g-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StripTableau {
    params: PrymParams,
    strip: StripShape,
    values: Vec<u32>,
}

impl StripTableau {
    pub fn new(params: PrymParams, strip: StripShape, values: Vec<u32>) -> Result<StripTableau> {
        check_strip_fits(&strip, &params)?;
        if values.len() != strip.boxes().len() {
            return invalid("strip tableau has the wrong number of entries");
        }
        if params.k % 2 == 0 && !params.is_generic() && !strip.is_horizontal() {
            return invalid("even torsion uses the horizontal strip");
        }
        let plan = FillPlan::new(&strip, epsilon(&params));
        if !plan.accepts(&values, params.g - 1) {
            return invalid("entries do not form an injective glued tableau on the strip");
        }
        Ok(StripTableau { params, strip, values })
    }

    pub fn params(&self) -> &PrymParams {
        &self.params
    }

    pub fn strip(&self) -> &StripShape {
        &self.strip
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The unique non-repeating extension to `T_r`.
    pub fn extend(&self) -> Tableau {
        extend_values(&self.strip, &self.values, &self.params).expect("strip tableau extends")
    }
}

fn extend_values(strip: &StripShape, values: &[u32], p: &PrymParams) -> Result<Tableau> {
    let e = epsilon(p);
    let on_strip: BTreeMap<LatticeBox, u32> = strip.boxes().iter().copied().zip(values.iter().copied()).collect();
    let shape = Arc::new(Shape::triangle(p.r));
    let mut entries = Vec::with_capacity(shape.len());
    for &b in shape.boxes() {
        let src = strip.resolve(b, e)?;
        entries.push(on_strip[&src]);
    }
    Tableau::new(shape, entries, p.g.saturating_sub(1).max(1))
}

/// The non-repeating extension of a strip tableau.
pub fn extend_strip_tableau(st: &StripTableau) -> Tableau {
    st.extend()
}

/// Order constraints for filling a strip box by box in canonical order.
struct FillPlan {
    n: usize,
    /// earlier indices whose value must be smaller
    lower: Vec<Vec<usize>>,
    /// earlier indices whose value must be larger
    upper: Vec<Vec<usize>>,
    /// later indices forced (transitively) above / below each index
    later_above: Vec<usize>,
    later_below: Vec<usize>,
}

impl FillPlan {
    fn new(strip: &StripShape, epsilon: u32) -> FillPlan {
        let boxes = strip.boxes();
        let n = boxes.len();
        let mut less = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if boxes[i].is_below(boxes[j]) {
                    less[i][j] = true;
                }
            }
        }
        for (lo, hi) in strip.gluing_pairs(epsilon) {
            let (i, j) = (strip.shape().index_of(lo), strip.shape().index_of(hi));
            less[i.expect("gluing box in strip")][j.expect("gluing box in strip")] = true;
        }
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..i {
                if less[j][i] {
                    lower[i].push(j);
                }
                if less[i][j] {
                    upper[i].push(j);
                }
            }
        }
        for m in 0..n {
            for i in 0..n {
                if less[i][m] {
                    for j in 0..n {
                        if less[m][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        let later_above = (0..n).map(|i| (i + 1..n).filter(|&j| less[i][j]).count()).collect();
        let later_below = (0..n).map(|i| (i + 1..n).filter(|&j| less[j][i]).count()).collect();
        FillPlan { n, lower, upper, later_above, later_below }
    }

    fn accepts(&self, values: &[u32], max_symbol: u32) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        values.len() == self.n
            && values.iter().all(|&v| v >= 1 && v <= max_symbol && seen.insert(v))
            && (0..self.n).all(|i| {
                self.lower[i].iter().all(|&j| values[j] < values[i])
                    && self.upper[i].iter().all(|&j| values[j] > values[i])
            })
    }

    fn candidate_ok(&self, i: usize, v: u32, values: &[u32]) -> bool {
        self.lower[i].iter().all(|&j| values[j] < v) && self.upper[i].iter().all(|&j| values[j] > v)
    }

    /// Depth-first search over injective fillings; `visit` returns false to stop.
    fn search(
        &self,
        i: usize,
        symbols: &[u32],
        used: &mut [bool],
        values: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        if i == self.n {
            return visit(values);
        }
        let free_total = used.iter().filter(|u| !**u).count();
        let mut free_below = 0;
        for (si, &v) in symbols.iter().enumerate() {
            if used[si] {
                continue;
            }
            let free_above = free_total - free_below - 1;
            if free_below >= self.later_below[i] && free_above >= self.later_above[i] && self.candidate_ok(i, v, values)
            {
                used[si] = true;
                values.push(v);
                let go_on = self.search(i + 1, symbols, used, values, visit);
                values.pop();
                used[si] = false;
                if !go_on {
                    return false;
                }
            }
            free_below += 1;
        }
        true
    }

    fn count(&self, symbols: &[u32]) -> u64 {
        if self.n == 0 {
            return 1;
        }
        (0..symbols.len())
            .into_par_iter()
            .map(|first| {
                let mut used = vec![false; symbols.len()];
                let mut values = Vec::with_capacity(self.n);
                let free_below = first;
                let free_above = symbols.len() - first - 1;
                if free_below < self.later_below[0] || free_above < self.later_above[0] {
                    return 0;
                }
                used[first] = true;
                values.push(symbols[first]);
                let mut c = 0u64;
                self.search(1, symbols, &mut used, &mut values, &mut |_| {
                    c += 1;
                    true
                });
                c
            })
            .sum()
    }
}

fn symbol_list(p: &PrymParams, symbols: Option<&[u32]>) -> Result<Vec<u32>> {
    let mut s: Vec<u32> = match symbols {
        Some(s) => s.to_vec(),
        None => (1..p.g).collect(),
    };
    s.sort_unstable();
    s.dedup();
    if s.iter().any(|&a| a == 0 || a >= p.g) {
        return invalid(format!("symbols must lie in [1, {}]", p.g - 1));
    }
    Ok(s)
}

/// Visit every strip tableau of the type, strip by strip in lexicographic
/// word order and then lexicographically by entries. Returning false from
/// `visit` stops the enumeration.
pub fn for_each_strip_tableau(
    p: &PrymParams,
    symbols: Option<&[u32]>,
    mut visit: impl FnMut(&StripTableau) -> bool,
) -> Result<()> {
    let symbols = symbol_list(p, symbols)?;
    let e = epsilon(p);
    for strip in cell_strips(p) {
        let plan = FillPlan::new(&strip, e);
        let mut used = vec![false; symbols.len()];
        let mut values = Vec::with_capacity(plan.n);
        let mut stopped = false;
        plan.search(0, &symbols, &mut used, &mut values, &mut |vals| {
            let st = StripTableau { params: *p, strip: strip.clone(), values: vals.to_vec() };
            let go_on = visit(&st);
            stopped = !go_on;
            go_on
        });
        if stopped {
            break;
        }
    }
    Ok(())
}

pub fn enumerate_strip_tableaux(p: &PrymParams, symbols: Option<&[u32]>) -> Result<Vec<StripTableau>> {
    let mut out = Vec::new();
    for_each_strip_tableau(p, symbols, |st| {
        out.push(st.clone());
        true
    })?;
    Ok(out)
}

/// Number of strip tableaux, counted in parallel without materialising them.
pub fn count_strip_tableaux(p: &PrymParams, symbols: Option<&[u32]>) -> Result<u64> {
    let symbols = symbol_list(p, symbols)?;
    let e = epsilon(p);
    Ok(cell_strips(p).iter().map(|s| FillPlan::new(s, e).count(&symbols)).sum())
}

/// Given a staircase Prym tableau, a strip and a non-repeating tableau on
/// it that dominates the input.
pub fn dominating_non_repeating(t: &Tableau, p: &PrymParams) -> Result<(StripShape, Tableau)> {
    require_triangle(t, p.r)?;
    if !is_tableau(t) || !crate::tableau::classes_agree(t, p.torsion(), None) {
        return invalid("input is not a staircase displacement tableau");
    }
    if t.entries().iter().any(|&e| e >= p.g) {
        return invalid(format!("staircase symbols must lie in [1, {}]", p.g - 1));
    }
    let bound = p.g - 1;
    if p.is_generic() {
        return Ok((StripShape::full(p.r), t.clone().with_symbol_bound(bound)?));
    }
    let l = p.width();
    let k = p.k as i64;
    if p.k % 2 == 0 {
        let strip = StripShape::horizontal(p.r, l)?;
        let mut best: BTreeMap<(u32, i64), u32> = BTreeMap::new();
        for (b, v) in t.iter() {
            let key = (b.anti_diagonal(), b.offset().rem_euclid(k));
            let e = best.entry(key).or_insert(v);
            *e = (*e).max(v);
        }
        let s =
            Tableau::from_fn(t.shape_arc().clone(), bound, |b| best[&(b.anti_diagonal(), b.offset().rem_euclid(k))])?;
        return Ok((strip, s));
    }
    let mut word = Vec::new();
    for n in l..p.r {
        let partial = StripShape::new(n, l, word.clone())?;
        let left = partial.leftmost(n).expect("in range");
        let right = partial.rightmost(n).expect("in range");
        let (a, b) = (t.get(left).expect("in T_r"), t.get(right).expect("in T_r"));
        if a == b {
            return internal("leftmost and rightmost boxes share a symbol");
        }
        word.push(if a < b { Step::East } else { Step::North });
    }
    let strip = StripShape::new(p.r, l, word)?;
    let values: Vec<u32> = strip.boxes().iter().map(|&b| t.get(b).expect("in T_r")).collect();
    let s = extend_values(&strip, &values, p)?;
    Ok((strip, s))
}

/// The strip a non-repeating tableau lives on: `T_r` generically, `mu_0` for
/// even torsion, and the unique one read off by the gluing condition when odd.
pub fn recover_strip(t: &Tableau, p: &PrymParams) -> Result<StripShape> {
    let strip = if p.is_generic() {
        StripShape::full(p.r)
    } else if p.k % 2 == 0 {
        StripShape::horizontal(p.r, p.width())?
    } else {
        dominating_non_repeating(t, p)?.0
    };
    if is_non_repeating(t, &strip, p)? {
        Ok(strip)
    } else {
        Err(Error::InvalidInput(format!("the tableau is not non-repeating for type {p}")))
    }
}

/// Restrict a non-repeating tableau to its strip.
pub fn to_strip_tableau(t: &Tableau, p: &PrymParams) -> Result<StripTableau> {
    let strip = recover_strip(t, p)?;
    let values = strip.boxes().iter().map(|&b| t.get(b).expect("in T_r")).collect();
    StripTableau::new(*p, strip, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn p(g: u32, r: u32, k: u32) -> PrymParams {
        PrymParams::new(g, r, k).unwrap()
    }

    #[test]
    fn strip_sizes_match_codimension() {
        for r in 1..8 {
            for k in [0, 2, 3, 4, 5, 6, 7] {
                let params = p(40, r, k);
                for s in enumerate_strips(&params) {
                    assert_eq!(s.boxes().len() as u32, params.codim(), "{s}");
                    for n in s.width().max(1)..=r {
                        let on_diag = s.boxes().iter().filter(|b| b.anti_diagonal() == n).count();
                        assert_eq!(on_diag as u32, n.min(s.width()));
                    }
                }
            }
        }
    }

    #[test]
    fn there_are_two_to_the_r_minus_l_strips() {
        assert_eq!(enumerate_strips(&p(30, 6, 3)).len(), 16);
        assert_eq!(enumerate_strips(&p(30, 6, 0)).len(), 1);
        assert!(enumerate_strips(&p(30, 6, 3))[0].is_horizontal());
    }

    #[test]
    fn the_example_strip_reads_its_word() {
        let s = examples::strip_example_shape();
        let lefts: Vec<_> = (3..=9).map(|n| s.leftmost(n).unwrap()).map(|b| (b.x, b.y)).collect();
        assert_eq!(lefts, vec![(1, 3), (1, 4), (1, 5), (2, 5), (3, 5), (3, 6), (3, 7)]);
        assert_eq!(s.height(), 7);
    }

    #[test]
    fn example_strip_tableau_is_non_repeating() {
        let params = p(25, 9, 5);
        let t = examples::strip_example();
        let s = examples::strip_example_shape();
        assert!(is_non_repeating(&t, &s, &params).unwrap());
        let mu0 = StripShape::horizontal(9, 3).unwrap();
        assert!(!is_non_repeating(&t, &mu0, &params).unwrap());
        assert_eq!(recover_strip(&t, &params).unwrap(), s);
    }

    #[test]
    fn small_even_example_is_non_repeating() {
        let params = p(4, 2, 2);
        let t = Tableau::from_rows(&[&[3], &[1, 3]], 3).unwrap();
        let mu0 = StripShape::horizontal(2, 1).unwrap();
        assert!(is_non_repeating(&t, &mu0, &params).unwrap());
    }

    #[test]
    fn bottom_row_for_k2_repeats_along_anti_diagonals() {
        let params = p(8, 4, 2);
        let st = StripTableau::new(params, StripShape::horizontal(4, 1).unwrap(), vec![1, 2, 3, 4]).unwrap();
        let t = st.extend();
        for (b, v) in t.iter() {
            assert_eq!(v, b.anti_diagonal());
        }
    }

    #[test]
    fn minimal_counts_small_cases() {
        assert_eq!(count_strip_tableaux(&p(3, 2, 2), None).unwrap(), 1);
        assert_eq!(count_strip_tableaux(&p(7, 3, 0), Some(&[1, 2, 3, 4, 5, 6])).unwrap(), 16);
        assert_eq!(count_strip_tableaux(&p(7, 3, 4), None).unwrap(), 24);
        assert_eq!(enumerate_strip_tableaux(&p(7, 3, 4), None).unwrap().len(), 24);
    }

    #[test]
    fn every_strip_tableau_extends_to_a_displacement_tableau() {
        for (g, r, k) in [(8, 3, 3), (8, 4, 3), (7, 3, 4), (9, 4, 2), (10, 5, 5)] {
            let params = p(g, r, k);
            for_each_strip_tableau(&params, None, |st| {
                let t = st.extend();
                assert!(is_tableau(&t), "{t}");
                assert!(crate::tableau::is_displacement(&t, k).unwrap());
                assert!(is_non_repeating(&t, st.strip(), &params).unwrap());
                assert_eq!(t.distinct_count() as u32, params.codim());
                true
            })
            .unwrap();
        }
    }

    #[test]
    fn dominating_is_a_fixed_point_on_non_repeating_input() {
        let params = p(25, 9, 5);
        let t = examples::strip_example();
        let (s, u) = dominating_non_repeating(&t, &params).unwrap();
        assert_eq!(s, examples::strip_example_shape());
        assert_eq!(u, t);
    }
}
