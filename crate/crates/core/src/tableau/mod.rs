//! Boxes, shapes, tableaux and the predicates that classify them.
//!
//! Boxes use French coordinates: `(x, y)` with `x, y >= 1`, `x` the column
//! and `y` the row counted from the bottom.

mod predicates;

pub(crate) use predicates::classes_agree;
pub use predicates::*;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::strips::Step;

/// A box of the first quadrant.
///
/// The ordering is the canonical one: by anti-diagonal, then by column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeBox {
    pub x: u32,
    pub y: u32,
}

impl LatticeBox {
    /// Panics if either coordinate is zero.
    pub fn new(x: u32, y: u32) -> Self {
        assert!(x >= 1 && y >= 1, "box coordinates start at 1, got ({x}, {y})");
        LatticeBox { x, y }
    }

    pub fn try_new(x: i64, y: i64) -> Option<Self> {
        if x >= 1 && y >= 1 && x <= u32::MAX as i64 && y <= u32::MAX as i64 {
            Some(LatticeBox { x: x as u32, y: y as u32 })
        } else {
            None
        }
    }

    /// Index `n` of the anti-diagonal `A_n = {x + y = n + 1}` containing the box.
    pub fn anti_diagonal(self) -> u32 {
        self.x + self.y - 1
    }

    /// `x - y`, the exact diagonal.
    pub fn offset(self) -> i64 {
        self.x as i64 - self.y as i64
    }

    /// Strictly weakly south-west of `other`.
    pub fn is_below(self, other: LatticeBox) -> bool {
        self != other && self.x <= other.x && self.y <= other.y
    }

    pub fn shifted(self, dx: i64, dy: i64) -> Option<LatticeBox> {
        LatticeBox::try_new(self.x as i64 + dx, self.y as i64 + dy)
    }

    pub fn east(self) -> LatticeBox {
        LatticeBox::new(self.x + 1, self.y)
    }

    pub fn north(self) -> LatticeBox {
        LatticeBox::new(self.x, self.y + 1)
    }

    pub fn west(self) -> Option<LatticeBox> {
        (self.x > 1).then(|| LatticeBox::new(self.x - 1, self.y))
    }

    pub fn south(self) -> Option<LatticeBox> {
        (self.y > 1).then(|| LatticeBox::new(self.x, self.y - 1))
    }
}

impl Ord for LatticeBox {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.anti_diagonal(), self.x).cmp(&(other.anti_diagonal(), other.x))
    }
}

impl PartialOrd for LatticeBox {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LatticeBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Torsion order of the folded chain. `k = 0` means generic edge lengths,
/// where the diagonal class of a box is its exact offset `x - y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Torsion {
    Generic,
    Uniform(u32),
}

impl Torsion {
    pub fn from_k(k: u32) -> Result<Self> {
        match k {
            0 => Ok(Torsion::Generic),
            1 => Err(Error::Parameter("torsion order k = 1 is not allowed".into())),
            k => Ok(Torsion::Uniform(k)),
        }
    }

    pub fn k(self) -> u32 {
        match self {
            Torsion::Generic => 0,
            Torsion::Uniform(k) => k,
        }
    }

    /// The diagonal class of a box: `x - y mod k`, or `x - y` itself when generic.
    pub fn class(self, b: LatticeBox) -> i64 {
        match self {
            Torsion::Generic => b.offset(),
            Torsion::Uniform(k) => b.offset().rem_euclid(k as i64),
        }
    }
}

/// The type `(g, r, k)` of a Prym-Brill-Noether problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrymParams {
    pub g: u32,
    pub r: u32,
    pub k: u32,
}

impl PrymParams {
    pub fn new(g: u32, r: u32, k: u32) -> Result<Self> {
        if g < 2 {
            return Err(Error::Parameter(format!("genus g = {g} must be at least 2")));
        }
        Torsion::from_k(k)?;
        Ok(PrymParams { g, r, k })
    }

    pub fn torsion(&self) -> Torsion {
        Torsion::from_k(self.k).expect("validated on construction")
    }

    /// `l = ceil(k / 2)`, absent in the generic case.
    pub fn half_torsion(&self) -> Option<u32> {
        (self.k >= 2).then(|| self.k.div_ceil(2))
    }

    /// `k mod 2`, absent in the generic case.
    pub fn epsilon(&self) -> Option<u32> {
        (self.k >= 2).then(|| self.k % 2)
    }

    /// True when `k = 0` or `k > 2r - 2`; strips then degenerate to `T_r`.
    pub fn is_generic(&self) -> bool {
        self.k == 0 || self.k + 2 > 2 * self.r
    }

    /// Width of the strips: `l`, or `r` in the generic case.
    pub fn width(&self) -> u32 {
        if self.is_generic() {
            self.r
        } else {
            self.k.div_ceil(2)
        }
    }

    pub fn is_odd(&self) -> bool {
        !self.is_generic() && self.k % 2 == 1
    }

    /// Expected codimension `n(r, k)`.
    pub fn codim(&self) -> u32 {
        crate::dimension::expected_codim(self.r, self.k)
    }

    /// `g - 1 - n(r, k)`; negative when the locus is empty.
    pub fn expected_dim(&self) -> i64 {
        self.g as i64 - 1 - self.codim() as i64
    }
}

impl fmt::Display for PrymParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, r={}, k={})", self.g, self.r, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// `[r+1] x [r+1]`.
    Square {
        r: u32,
    },
    /// The staircase `T_n`.
    Triangle {
        n: u32,
    },
    /// A strip of the given width inside `T_r`.
    Strip {
        r: u32,
        width: u32,
        word: Vec<Step>,
    },
    Explicit,
}

/// A finite set of boxes kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    kind: ShapeKind,
    boxes: Vec<LatticeBox>,
}

impl Shape {
    pub fn square(r: u32) -> Shape {
        let mut boxes: Vec<_> = (1..=r + 1).flat_map(|x| (1..=r + 1).map(move |y| LatticeBox::new(x, y))).collect();
        boxes.sort();
        Shape { kind: ShapeKind::Square { r }, boxes }
    }

    pub fn triangle(n: u32) -> Shape {
        let boxes = (1..=n).flat_map(|d| (1..=d).map(move |x| LatticeBox::new(x, d + 1 - x))).collect();
        Shape { kind: ShapeKind::Triangle { n }, boxes }
    }

    pub fn explicit(boxes: impl IntoIterator<Item = LatticeBox>) -> Result<Shape> {
        let mut boxes: Vec<_> = boxes.into_iter().collect();
        boxes.sort();
        if boxes.windows(2).any(|w| w[0] == w[1]) {
            return invalid("shape lists a box twice");
        }
        Ok(Shape { kind: ShapeKind::Explicit, boxes })
    }

    pub(crate) fn with_kind(kind: ShapeKind, mut boxes: Vec<LatticeBox>) -> Shape {
        boxes.sort();
        Shape { kind, boxes }
    }

    pub fn kind(&self) -> &ShapeKind {
        &self.kind
    }

    pub fn boxes(&self) -> &[LatticeBox] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn index_of(&self, b: LatticeBox) -> Option<usize> {
        self.boxes.binary_search(&b).ok()
    }

    pub fn contains(&self, b: LatticeBox) -> bool {
        self.index_of(b).is_some()
    }

    /// Down-closed under the box order (a Young diagram).
    pub fn is_partition(&self) -> bool {
        self.boxes
            .iter()
            .all(|b| b.west().is_none_or(|w| self.contains(w)) && b.south().is_none_or(|s| self.contains(s)))
    }

    pub fn same_boxes(&self, other: &Shape) -> bool {
        self.boxes == other.boxes
    }
}

/// A filling of a shape by positive symbols bounded by `symbol_bound`.
///
/// Nothing about monotonicity is enforced here; see [`is_tableau`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Arc<Shape>,
    entries: Vec<u32>,
    symbol_bound: u32,
}

impl Tableau {
    pub fn new(shape: Arc<Shape>, entries: Vec<u32>, symbol_bound: u32) -> Result<Tableau> {
        if entries.len() != shape.len() {
            return invalid(format!("shape has {} boxes but {} entries were given", shape.len(), entries.len()));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e == 0 || e > symbol_bound) {
            return invalid(format!("symbol {bad} outside [1, {symbol_bound}]"));
        }
        Ok(Tableau { shape, entries, symbol_bound })
    }

    pub fn from_fn(shape: Arc<Shape>, symbol_bound: u32, mut f: impl FnMut(LatticeBox) -> u32) -> Result<Tableau> {
        let entries = shape.boxes().iter().map(|&b| f(b)).collect();
        Tableau::new(shape, entries, symbol_bound)
    }

    /// Build a tableau from rows as usually drawn: top row first,
    /// every row starting in column 1. Squares and staircases are recognised.
    pub fn from_rows(rows_top_down: &[&[u32]], symbol_bound: u32) -> Result<Tableau> {
        let h = rows_top_down.len();
        let mut cells = BTreeMap::new();
        for (i, row) in rows_top_down.iter().enumerate() {
            let y = (h - i) as u32;
            for (j, &v) in row.iter().enumerate() {
                cells.insert(LatticeBox::new(j as u32 + 1, y), v);
            }
        }
        let lens: Vec<usize> = rows_top_down.iter().rev().map(|r| r.len()).collect();
        let shape = if h > 0 && lens.iter().all(|&l| l == h) {
            Shape::square(h as u32 - 1)
        } else if lens.iter().enumerate().all(|(i, &l)| l == h - i) {
            Shape::triangle(h as u32)
        } else {
            Shape::explicit(cells.keys().copied())?
        };
        let entries = shape.boxes().iter().map(|b| cells[b]).collect();
        Tableau::new(Arc::new(shape), entries, symbol_bound)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn shape_arc(&self) -> &Arc<Shape> {
        &self.shape
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn symbol_bound(&self) -> u32 {
        self.symbol_bound
    }

    pub fn with_symbol_bound(mut self, bound: u32) -> Result<Tableau> {
        if self.entries.iter().any(|&e| e > bound) {
            return invalid(format!("entries exceed the new bound {bound}"));
        }
        self.symbol_bound = bound;
        Ok(self)
    }

    pub fn get(&self, b: LatticeBox) -> Option<u32> {
        self.shape.index_of(b).map(|i| self.entries[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (LatticeBox, u32)> + '_ {
        self.shape.boxes().iter().copied().zip(self.entries.iter().copied())
    }

    pub fn symbols(&self) -> BTreeSet<u32> {
        self.entries.iter().copied().collect()
    }

    pub fn contains_symbol(&self, a: u32) -> bool {
        self.entries.contains(&a)
    }

    pub fn distinct_count(&self) -> usize {
        self.symbols().len()
    }

    pub fn fiber(&self, a: u32) -> Vec<LatticeBox> {
        self.iter().filter(|&(_, s)| s == a).map(|(b, _)| b).collect()
    }

    pub(crate) fn set(&mut self, b: LatticeBox, a: u32) {
        let i = self.shape.index_of(b).expect("box in shape");
        self.entries[i] = a;
    }

    /// Restrict to the boxes of `shape`, which must be a subset.
    pub fn restrict(&self, shape: Arc<Shape>) -> Result<Tableau> {
        let mut entries = Vec::with_capacity(shape.len());
        for &b in shape.boxes() {
            match self.get(b) {
                Some(v) => entries.push(v),
                None => return invalid(format!("box {b} lies outside the tableau")),
            }
        }
        Tableau::new(shape, entries, self.symbol_bound)
    }

    /// Symbols present on each diagonal class.
    pub fn diagonal_sets(&self, torsion: Torsion) -> BTreeMap<i64, BTreeSet<u32>> {
        let mut m: BTreeMap<i64, BTreeSet<u32>> = BTreeMap::new();
        for (b, s) in self.iter() {
            m.entry(torsion.class(b)).or_default().insert(s);
        }
        m
    }

    /// Classes occupied by each symbol.
    pub fn symbol_classes(&self, torsion: Torsion) -> BTreeMap<u32, BTreeSet<i64>> {
        let mut m: BTreeMap<u32, BTreeSet<i64>> = BTreeMap::new();
        for (b, s) in self.iter() {
            m.entry(s).or_default().insert(torsion.class(b));
        }
        m
    }
}

impl fmt::Display for Tableau {
    /// Rows top first, as usually drawn.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max_y = self.shape.boxes().iter().map(|b| b.y).max().unwrap_or(0);
        let max_x = self.shape.boxes().iter().map(|b| b.x).max().unwrap_or(0);
        let w = self.symbol_bound.max(1).to_string().len();
        for y in (1..=max_y).rev() {
            let mut line = String::new();
            for x in 1..=max_x {
                match self.get(LatticeBox::new(x, y)) {
                    Some(v) => line.push_str(&format!("{v:>w$} ")),
                    None => line.push_str(&format!("{:>w$} ", ".")),
                }
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_runs_along_anti_diagonals() {
        let t = Shape::triangle(3);
        let got: Vec<_> = t.boxes().iter().map(|b| (b.x, b.y)).collect();
        assert_eq!(got, vec![(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)]);
    }

    #[test]
    fn square_has_all_boxes() {
        let s = Shape::square(2);
        assert_eq!(s.len(), 9);
        assert!(s.is_partition());
        assert!(s.contains(LatticeBox::new(3, 3)));
        assert!(!s.contains(LatticeBox::new(4, 1)));
    }

    #[test]
    fn below_is_strict() {
        let a = LatticeBox::new(1, 2);
        assert!(a.is_below(LatticeBox::new(2, 2)));
        assert!(!a.is_below(a));
        assert!(!a.is_below(LatticeBox::new(2, 1)));
    }

    #[test]
    fn rows_are_read_top_down() {
        let t = Tableau::from_rows(&[&[3], &[1, 2]], 3).unwrap();
        assert_eq!(t.shape().kind(), &ShapeKind::Triangle { n: 2 });
        assert_eq!(t.get(LatticeBox::new(1, 2)), Some(3));
        assert_eq!(t.get(LatticeBox::new(2, 1)), Some(2));
    }

    #[test]
    fn k_one_is_rejected() {
        assert!(PrymParams::new(5, 2, 1).is_err());
        assert!(PrymParams::new(1, 2, 0).is_err());
    }

    #[test]
    fn generic_branch_boundary() {
        assert!(!PrymParams::new(9, 3, 4).unwrap().is_generic());
        assert!(PrymParams::new(9, 3, 5).unwrap().is_generic());
        assert_eq!(PrymParams::new(9, 3, 5).unwrap().width(), 3);
        assert_eq!(PrymParams::new(9, 9, 5).unwrap().width(), 3);
    }
}
