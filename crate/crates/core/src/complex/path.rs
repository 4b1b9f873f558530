//! Connecting any two maximal cells of a locus of positive dimension by a
//! chain of adjacent cells.

use serde::Serialize;

use super::ops::{cycle_out_steps, is_adjacent, swap_in_for, swap_into};
use crate::error::{internal, Error, Result};
use crate::strips::{is_non_repeating, recover_strip, Step, StripShape};
use crate::tableau::{LatticeBox, PrymParams, Tableau};

/// A macro step of a walk: one cycle, one swap, or one height descent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    Cycle { out: u32, using: u32 },
    Swap { symbol: u32, at: (u32, u32) },
    LowerHeight { from: u32 },
}

/// A walk of elementary moves; `milestones[i]` indexes the tableau reached
/// after `moves[i]`.
#[derive(Clone, Debug, Default)]
pub struct Walk {
    pub tableaux: Vec<Tableau>,
    pub moves: Vec<Move>,
    pub milestones: Vec<usize>,
}

impl Walk {
    fn start(t: &Tableau) -> Walk {
        Walk { tableaux: vec![t.clone()], moves: Vec::new(), milestones: Vec::new() }
    }

    fn current(&self) -> &Tableau {
        self.tableaux.last().expect("walk is never empty")
    }

    fn push_move(&mut self, m: Move, steps: Vec<Tableau>) {
        self.tableaux.extend(steps);
        self.moves.push(m);
        self.milestones.push(self.tableaux.len() - 1);
    }

    pub fn milestone_tableaux(&self) -> Vec<Tableau> {
        std::iter::once(0).chain(self.milestones.iter().copied()).map(|i| self.tableaux[i].clone()).collect()
    }
}

fn require_free_symbol(p: &PrymParams) -> Result<()> {
    if p.expected_dim() < 1 {
        return Err(Error::Precondition(format!("type {p} has dimension below 1; cells are isolated points")));
    }
    Ok(())
}

fn smallest_free(t: &Tableau, p: &PrymParams) -> Option<u32> {
    (1..p.g).find(|a| !t.contains_symbol(*a))
}

fn largest_free_below(t: &Tableau, bound: u32) -> Option<u32> {
    (1..bound).rev().find(|a| !t.contains_symbol(*a))
}

/// Walk a tableau non-repeating in the horizontal strip to the one that
/// extends `1, ..., n` in canonical order, fixing one box at a time.
fn walk_horizontal(walk: &mut Walk, p: &PrymParams) -> Result<()> {
    let strip = if p.is_generic() { StripShape::full(p.r) } else { StripShape::horizontal(p.r, p.width())? };
    let order = strip.boxes().to_vec();
    loop {
        let cur = walk.current().clone();
        let Some(idx) = order.iter().position(|&b| cur.get(b) != Some(order_symbol(&order, b))) else {
            return Ok(());
        };
        let omega = order[idx];
        let a = idx as u32 + 1;
        if cur.contains_symbol(a) {
            let b = smallest_free(&cur, p).ok_or_else(|| Error::Internal("no free symbol".into()))?;
            let steps = cycle_out_steps(&cur, a, b)?;
            walk.push_move(Move::Cycle { out: a, using: b }, steps);
        }
        let cur = walk.current().clone();
        let replaced = cur.get(omega).expect("strip box");
        let next =
            if strip.is_degenerate() { swap_into(&cur, a, omega, true)? } else { swap_in_for(&cur, a, replaced)? };
        if !is_non_repeating(&next, &strip, p)? {
            return internal(format!("placing {a} at {omega} left the horizontal strip"));
        }
        walk.push_move(Move::Swap { symbol: a, at: (omega.x, omega.y) }, vec![next]);
    }
}

fn order_symbol(order: &[LatticeBox], b: LatticeBox) -> u32 {
    order.iter().position(|&c| c == b).expect("in order") as u32 + 1
}

/// `H(t)`: the row of the last leftmost box of the strip of an odd-torsion
/// non-repeating tableau.
pub fn height(t: &Tableau, p: &PrymParams) -> Result<u32> {
    if p.k % 2 == 0 {
        return Err(Error::InvalidInput("height is defined for odd torsion only".into()));
    }
    Ok(recover_strip(t, p)?.height())
}

/// The stages of one height-lowering move.
#[derive(Clone, Debug)]
pub struct HeightDescent {
    /// From the input to `v`, by elementary moves.
    pub prefix: Walk,
    pub v: Tableau,
    /// `v` with `g - 1` written below `g - 2`; not minimal.
    pub u: Tableau,
    pub s: Tableau,
    pub strip_before: StripShape,
    pub strip_after: StripShape,
}

/// Move an odd-torsion tableau of height `H > l` to an adjacent tableau of
/// height `H - 1`.
pub fn descend_height(t: &Tableau, p: &PrymParams) -> Result<HeightDescent> {
    require_free_symbol(p)?;
    if !p.is_odd() {
        return Err(Error::InvalidInput("height descent applies to odd torsion below the generic range".into()));
    }
    let mu = recover_strip(t, p)?;
    let (r, l, g) = (p.r, p.width(), p.g);
    let h = mu.height();
    if h <= l {
        return Err(Error::Precondition("the tableau already lies on the horizontal strip".into()));
    }
    let q = (l..=r).find(|&n| mu.leftmost(n).expect("in range").y == h).expect("height is attained");
    let psi0 = mu.leftmost(q).expect("in range");
    let (x, y) = (psi0.x, psi0.y);
    let n = r - q;
    let omega = |i: u32, j: u32| -> Option<LatticeBox> {
        let b = LatticeBox::try_new((x + i + l - 1 + j * l) as i64, y as i64 - l as i64 - (j * (l - 1)) as i64)?;
        (b.anti_diagonal() <= r).then_some(b)
    };
    let corner = omega(n, 0).ok_or_else(|| Error::Internal("omega_{n,0} leaves T_r".into()))?;
    let (north, east) = (corner.north(), corner.east());

    let mut prefix = Walk::start(t);
    let top = g - 1;
    let second = g - 2;
    if prefix.current().contains_symbol(top) {
        let f = largest_free_below(prefix.current(), top).ok_or_else(|| Error::Internal("no free symbol".into()))?;
        let steps = cycle_out_steps(prefix.current(), top, f)?;
        prefix.push_move(Move::Cycle { out: top, using: f }, steps);
    }
    if prefix.current().get(north) != Some(second) {
        let next = swap_into(prefix.current(), top, north, true)?;
        prefix.push_move(Move::Swap { symbol: top, at: (north.x, north.y) }, vec![next]);
        if prefix.current().contains_symbol(second) {
            let f = largest_free_below(prefix.current(), second)
                .ok_or_else(|| Error::Internal("no free symbol below g - 2".into()))?;
            let steps = cycle_out_steps(prefix.current(), second, f)?;
            prefix.push_move(Move::Cycle { out: second, using: f }, steps);
        }
        let next = swap_in_for(prefix.current(), second, top)?;
        prefix.push_move(Move::Swap { symbol: second, at: (north.x, north.y) }, vec![next]);
    }
    let v = prefix.current().clone();
    let u = swap_into(&v, top, east, false)?;
    let mut s = u.clone();
    for i in 0..=n {
        let val = u.get(LatticeBox::new(x + i, y)).expect("psi_i in T_r");
        let mut j = 0;
        while let Some(b) = omega(i, j) {
            s.set(b, val);
            j += 1;
        }
    }
    let mut word: Vec<Step> = mu.word()[..(q - 1 - l) as usize].to_vec();
    word.resize((r - l) as usize, Step::East);
    let nu = StripShape::new(r, l, word)?;
    if !is_non_repeating(&s, &nu, p)? {
        return internal("height descent did not produce a non-repeating tableau");
    }
    if !is_adjacent(&v, &s, p)? {
        return internal("height descent produced a non-adjacent tableau");
    }
    if nu.height() + 1 != h {
        return internal("height descent did not lower the height by one");
    }
    Ok(HeightDescent { prefix, v, u, s, strip_before: mu, strip_after: nu })
}

/// Walk a non-repeating tableau to the standard base tableau.
pub fn walk_to_base(t: &Tableau, p: &PrymParams) -> Result<Walk> {
    require_free_symbol(p)?;
    recover_strip(t, p)?;
    let mut walk = Walk::start(t);
    if p.is_odd() {
        while recover_strip(walk.current(), p)?.height() > p.width() {
            let from = recover_strip(walk.current(), p)?.height();
            let d = descend_height(walk.current(), p)?;
            let offset = walk.tableaux.len() - 1;
            walk.tableaux.extend(d.prefix.tableaux.into_iter().skip(1));
            walk.moves.extend(d.prefix.moves);
            walk.milestones.extend(d.prefix.milestones.iter().map(|m| m + offset));
            walk.push_move(Move::LowerHeight { from }, vec![d.s]);
        }
    }
    walk_horizontal(&mut walk, p)?;
    Ok(walk)
}

/// A chain of tableaux from `t` to `s` in which consecutive cells are
/// adjacent. Both must be non-repeating tableaux of the type, and the locus
/// must have dimension at least one.
pub fn connect_path(t: &Tableau, s: &Tableau, p: &PrymParams) -> Result<Vec<Tableau>> {
    let wt = walk_to_base(t, p)?;
    let ws = walk_to_base(s, p)?;
    let (i, j) = wt
        .tableaux
        .iter()
        .enumerate()
        .find_map(|(i, x)| ws.tableaux.iter().position(|y| y == x).map(|j| (i, j)))
        .ok_or_else(|| Error::Internal("walks do not meet".into()))?;
    let mut path: Vec<Tableau> = wt.tableaux[..=i].to_vec();
    path.extend(ws.tableaux[..j].iter().rev().cloned());
    Ok(path)
}

/// Check that every consecutive pair of a path is adjacent.
pub fn verify_path(path: &[Tableau], p: &PrymParams) -> Result<bool> {
    for w in path.windows(2) {
        if !is_adjacent(&w[0], &w[1], p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::strips::{enumerate_strip_tableaux, StripShape};

    #[test]
    fn generic_walk_passes_through_the_milestones() {
        let p = PrymParams::new(12, 4, 0).unwrap();
        let milestones = examples::generic_walk_milestones();
        let walk = walk_to_base(&milestones[0], &p).unwrap();
        assert_eq!(walk.milestone_tableaux(), milestones);
        assert_eq!(walk.moves.len(), 8);
        assert!(verify_path(&walk.tableaux, &p).unwrap());
    }

    #[test]
    fn height_descent_matches_the_worked_example() {
        let p = PrymParams::new(23, 8, 5).unwrap();
        let [t, u, s] = examples::height_descent_example();
        let mu = StripShape::new(8, 3, examples::height_descent_word()).unwrap();
        assert!(is_non_repeating(&t, &mu, &p).unwrap());
        assert_eq!(height(&t, &p).unwrap(), 5);
        let d = descend_height(&t, &p).unwrap();
        assert_eq!(d.v, t);
        assert_eq!(d.u, u);
        assert_eq!(d.s, s);
        assert_eq!(height(&d.s, &p).unwrap(), 4);
        assert!(is_adjacent(&t, &s, &p).unwrap());
    }

    #[test]
    fn example_strip_height() {
        let p = PrymParams::new(25, 9, 5).unwrap();
        assert_eq!(height(&examples::strip_example(), &p).unwrap(), 7);
        let p = PrymParams::new(26, 9, 5).unwrap();
        let base = crate::dimension::standard_base(&p).unwrap();
        assert_eq!(height(&base, &p).unwrap(), 3);
    }

    #[test]
    fn paths_connect_all_small_cells() {
        for (g, r, k) in [(5, 2, 0), (5, 3, 2), (8, 3, 3), (7, 3, 4), (9, 4, 3)] {
            let p = PrymParams::new(g, r, k).unwrap();
            let cells: Vec<Tableau> = enumerate_strip_tableaux(&p, None).unwrap().iter().map(|c| c.extend()).collect();
            for a in cells.iter().step_by(3) {
                for b in cells.iter().step_by(5) {
                    let path = connect_path(a, b, &p).unwrap();
                    assert_eq!(path.first(), Some(a));
                    assert_eq!(path.last(), Some(b));
                    assert!(verify_path(&path, &p).unwrap(), "({g},{r},{k})");
                }
            }
        }
    }

    #[test]
    fn zero_dimensional_types_are_refused() {
        let p = PrymParams::new(7, 3, 0).unwrap();
        let base = crate::dimension::standard_base(&p).unwrap();
        assert!(matches!(connect_path(&base, &base, &p), Err(Error::Precondition(_))));
    }
}
