//! From tableaux to divisors on a folded chain of loops.
//!
//! The folded chain has loops `1..=2g-1`. Loops `a < g` are upper loops and
//! chips on them are measured counter-clockwise from the rightmost vertex;
//! loops `a > g` are lower loops, measured clockwise from the leftmost
//! vertex. Loop `g` is fixed by the involution, has torsion 2, and is
//! measured like an upper loop.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::tableau::{codimension, is_prym, PrymParams, ShapeKind, Tableau};

/// Lower arc `m` and upper arc `l` of one loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoopLengths {
    pub m: Rational64,
    pub l: Rational64,
}

impl LoopLengths {
    pub fn circumference(&self) -> Rational64 {
        self.m + self.l
    }

    /// Least `k >= 1` with `(m + l) | k m`.
    pub fn torsion(&self) -> Option<u32> {
        let q = self.m / self.circumference();
        if !q.is_positive() {
            return None;
        }
        u32::try_from(*q.denom()).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedChain {
    pub g: u32,
    pub k: u32,
    loops: Vec<LoopLengths>,
}

impl FoldedChain {
    /// Uniform lengths: `m = 1, l = k - 1` on every loop but the `g`-th,
    /// which gets `m = l = 1`.
    pub fn uniform(g: u32, k: u32) -> Result<FoldedChain> {
        let one = Rational64::from_integer(1);
        let loops = (1..2 * g)
            .map(|a| {
                let l = if a == g { one } else { Rational64::from_integer(k as i64 - 1) };
                LoopLengths { m: one, l }
            })
            .collect();
        FoldedChain::with_lengths(g, k, loops)
    }

    /// Lengths for loops `1..=2g-1` in order. Dual loops `a` and `2g - a`
    /// must agree, every loop but the `g`-th needs torsion `k`, and the
    /// `g`-th needs torsion 2.
    pub fn with_lengths(g: u32, k: u32, loops: Vec<LoopLengths>) -> Result<FoldedChain> {
        if g < 2 || k < 2 {
            return Err(Error::Parameter(format!("a folded chain needs g >= 2 and k >= 2, got g = {g}, k = {k}")));
        }
        if loops.len() != 2 * g as usize - 1 {
            return invalid(format!("expected {} loops, got {}", 2 * g - 1, loops.len()));
        }
        for (i, lengths) in loops.iter().enumerate() {
            let a = i as u32 + 1;
            if !lengths.m.is_positive() || !lengths.l.is_positive() {
                return invalid(format!("loop {a} needs positive arc lengths"));
            }
            let want = if a == g { 2 } else { k };
            if lengths.torsion() != Some(want) {
                return invalid(format!(
                    "loop {a} has torsion {}, expected {want}",
                    lengths.torsion().map_or("?".into(), |t| t.to_string())
                ));
            }
            if loops[2 * g as usize - 2 - i] != *lengths {
                return invalid(format!("loop {a} and its dual {} differ", 2 * g - a));
            }
        }
        Ok(FoldedChain { g, k, loops })
    }

    pub fn lengths(&self, a: u32) -> LoopLengths {
        self.loops[a as usize - 1]
    }

    pub fn loop_count(&self) -> u32 {
        2 * self.g - 1
    }

    /// Position of the chip for a symbol sitting on diagonal `offset`.
    pub fn position(&self, a: u32, offset: i64) -> Rational64 {
        let lengths = self.lengths(a);
        let c = lengths.circumference();
        let raw = lengths.m * Rational64::from_integer(offset);
        let turns = (raw / c).floor();
        raw - turns * c
    }
}

/// One entry of a chip divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chip {
    Placed { loop_index: u32, pos: Rational64, mult: i64 },
    Free { loop_index: u32 },
}

impl Chip {
    pub fn loop_index(&self) -> u32 {
        match self {
            Chip::Placed { loop_index, .. } | Chip::Free { loop_index } => *loop_index,
        }
    }

    pub fn degree(&self) -> i64 {
        match self {
            Chip::Placed { mult, .. } => *mult,
            Chip::Free { .. } => 1,
        }
    }
}

impl Serialize for Chip {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Chip::Placed { loop_index, pos, mult } => {
                let mut map = s.serialize_map(Some(3))?;
                map.serialize_entry("loop", loop_index)?;
                map.serialize_entry("pos", &format!("{}/{}", pos.numer(), pos.denom()))?;
                map.serialize_entry("mult", mult)?;
                map.end()
            }
            Chip::Free { loop_index } => {
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("loop", loop_index)?;
                map.serialize_entry("free", &true)?;
                map.end()
            }
        }
    }
}

/// One chip or free marker per loop in loop order, followed by the stack of
/// `-1` at the leftmost vertex of loop `2g - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ChipDivisor {
    pub chips: Vec<Chip>,
}

impl ChipDivisor {
    pub fn degree(&self) -> i64 {
        self.chips.iter().map(Chip::degree).sum()
    }

    /// The chip on loop `a`, ignoring the stack.
    pub fn chip_on(&self, a: u32) -> Option<&Chip> {
        self.chips.iter().find(|c| c.loop_index() == a)
    }

    pub fn free_loops(&self) -> Vec<u32> {
        self.chips
            .iter()
            .filter_map(|c| match c {
                Chip::Free { loop_index } => Some(*loop_index),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for ChipDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for chip in &self.chips {
            match chip {
                Chip::Placed { loop_index, pos, mult } => writeln!(f, "loop {loop_index}: {mult} at {pos}")?,
                Chip::Free { loop_index } => writeln!(f, "loop {loop_index}: free")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisorOutcome {
    Divisor(ChipDivisor),
    /// The fiber of `g` has the wrong parity, so the cell is empty.
    EmptyCell,
}

/// The divisor family of a square Prym tableau. Symbols `a` and `2g - a`
/// put mirrored chips on their loops, and a loop is free only when neither
/// appears.
pub fn tableau_to_divisor(t: &Tableau, p: &PrymParams, chain: &FoldedChain) -> Result<DivisorOutcome> {
    if chain.g != p.g || chain.k != p.k {
        return invalid(format!("chain (g={}, k={}) does not match type {p}", chain.g, chain.k));
    }
    if !is_prym(t, p)? {
        return Err(Error::Precondition("input is not a Prym tableau of this type".into()));
    }
    let g = p.g;
    if t.fiber(g).iter().any(|b| !(b.offset() - p.r as i64).is_even()) {
        return Ok(DivisorOutcome::EmptyCell);
    }
    let mut placed: Vec<Option<Rational64>> = vec![None; 2 * g as usize - 1];
    for (b, a) in t.iter() {
        let pos = chain.position(a, b.offset());
        let loops = if a == g { vec![a] } else { vec![a, 2 * g - a] };
        for target in loops {
            let slot = &mut placed[target as usize - 1];
            match slot {
                Some(prev) if *prev != pos => {
                    return Err(Error::Internal(format!("loop {target} receives chips at {prev} and {pos}")));
                }
                _ => *slot = Some(pos),
            }
        }
    }
    let mut chips: Vec<Chip> = placed
        .into_iter()
        .enumerate()
        .map(|(i, pos)| {
            let loop_index = i as u32 + 1;
            match pos {
                Some(pos) => Chip::Placed { loop_index, pos, mult: 1 },
                None => Chip::Free { loop_index },
            }
        })
        .collect();
    chips.push(Chip::Placed { loop_index: 2 * g - 1, pos: Rational64::zero(), mult: -1 });
    let divisor = ChipDivisor { chips };
    if divisor.degree() != 2 * g as i64 - 2 {
        return Err(Error::Internal(format!("divisor has degree {}", divisor.degree())));
    }
    Ok(DivisorOutcome::Divisor(divisor))
}

/// Chip positions of every box of `t`, for checking that repeated symbols
/// land on the same point.
pub fn box_positions(t: &Tableau, chain: &FoldedChain) -> Vec<(u32, Rational64)> {
    t.iter().map(|(b, a)| (a, chain.position(a, b.offset()))).collect()
}

/// Dimension of the cell of a square Prym or staircase tableau: the number
/// of free loops among `1..g`.
pub fn cell_dimension(t: &Tableau, p: &PrymParams) -> Result<u32> {
    match t.shape().kind() {
        ShapeKind::Square { r } | ShapeKind::Triangle { n: r } if *r == p.r => {}
        _ => return invalid(format!("expected a square or staircase tableau of size {}", p.r)),
    }
    Ok(p.g - 1 - codimension(t, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn torsion_of_loops() {
        let chain = FoldedChain::uniform(7, 4).unwrap();
        assert_eq!(chain.lengths(1), LoopLengths { m: q(1, 1), l: q(3, 1) });
        assert_eq!(LoopLengths { m: q(2, 1), l: q(2, 1) }.torsion(), Some(2));
        assert_eq!(LoopLengths { m: q(1, 1), l: q(1, 1) }.torsion(), Some(2));
        assert_eq!(LoopLengths { m: q(2, 3), l: q(1, 3) }.torsion(), Some(3));
        let mut loops = vec![LoopLengths { m: q(1, 1), l: q(1, 1) }; 5];
        assert!(FoldedChain::with_lengths(3, 3, loops.clone()).is_err());
        assert!(FoldedChain::with_lengths(3, 2, loops.clone()).is_ok());
        loops[0] = LoopLengths { m: q(2, 1), l: q(2, 1) };
        let err = FoldedChain::with_lengths(3, 2, loops).unwrap_err();
        assert!(err.to_string().contains("dual"));
    }

    #[test]
    fn positions_wrap_around_the_loop() {
        let chain = FoldedChain::uniform(5, 3).unwrap();
        assert_eq!(chain.position(1, 0), q(0, 1));
        assert_eq!(chain.position(1, 4), q(1, 1));
        assert_eq!(chain.position(1, -1), q(2, 1));
        assert_eq!(chain.position(5, 3), q(1, 1));
    }

    #[test]
    fn reflective_example_gives_a_mirrored_divisor() {
        let p = PrymParams::new(11, 4, 3).unwrap();
        let chain = FoldedChain::uniform(11, 3).unwrap();
        let t = examples::reflection_sequence().pop().unwrap();
        let DivisorOutcome::Divisor(d) = tableau_to_divisor(&t, &p, &chain).unwrap() else {
            panic!("cell should be nonempty");
        };
        assert_eq!(d.degree(), 20);
        assert_eq!(d.free_loops().len(), 6);
        for a in 1..11 {
            assert_eq!(
                d.chip_on(a),
                d.chip_on(22 - a)
                    .map(|c| match c {
                        Chip::Placed { pos, mult, .. } => Chip::Placed { loop_index: a, pos: *pos, mult: *mult },
                        Chip::Free { .. } => Chip::Free { loop_index: a },
                    })
                    .as_ref()
            );
        }
        assert_eq!(cell_dimension(&t, &p).unwrap(), 3);
    }

    #[test]
    fn wrong_parity_is_an_empty_cell() {
        let p = PrymParams::new(3, 1, 2).unwrap();
        let chain = FoldedChain::uniform(3, 2).unwrap();
        let t = Tableau::from_rows(&[&[4, 5], &[3, 4]], 5).unwrap();
        assert_eq!(tableau_to_divisor(&t, &p, &chain).unwrap(), DivisorOutcome::EmptyCell);
    }

    #[test]
    fn json_shape() {
        let d = ChipDivisor {
            chips: vec![Chip::Placed { loop_index: 1, pos: q(3, 2), mult: 1 }, Chip::Free { loop_index: 2 }],
        };
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"[{"loop":1,"pos":"3/2","mult":1},{"loop":2,"free":true}]"#);
    }

    #[test]
    fn staircase_dimension() {
        let p = PrymParams::new(12, 6, 3).unwrap();
        assert_eq!(cell_dimension(&examples::staircase_size6_torsion3(), &p).unwrap(), 0);
    }
}
