use std::collections::BTreeSet;

use super::{LatticeBox, PrymParams, ShapeKind, Tableau, Torsion};
use crate::error::{invalid, Error, Result};

/// The `i in [0, k)` with `b in D_{i,k}`.
pub fn diagonal_index(b: LatticeBox, k: u32) -> Result<u32> {
    if k < 2 {
        return Err(Error::Parameter(format!("diagonal index needs k >= 2, got {k}")));
    }
    Ok(b.offset().rem_euclid(k as i64) as u32)
}

/// Strictly increasing along the box order.
pub fn is_tableau(t: &Tableau) -> bool {
    let shape = t.shape();
    if shape.is_partition() {
        // neighbour checks suffice for down-closed shapes
        return t.iter().all(|(b, v)| {
            let east_ok = t.get(b.east()).is_none_or(|w| v < w);
            let north_ok = t.get(b.north()).is_none_or(|w| v < w);
            east_ok && north_ok
        });
    }
    let cells: Vec<_> = t.iter().collect();
    cells.iter().all(|&(a, va)| cells.iter().all(|&(b, vb)| !a.is_below(b) || va < vb))
}

/// Every symbol lies on one diagonal class of the torsion.
pub(crate) fn classes_agree(t: &Tableau, torsion: Torsion, skip: Option<u32>) -> bool {
    t.symbol_classes(torsion).iter().filter(|(s, _)| Some(**s) != skip).all(|(_, c)| c.len() == 1)
}

/// A tableau whose every symbol lies on a single `D_{i,k}`; for `k = 0`
/// a tableau with distinct entries.
pub fn is_displacement(t: &Tableau, k: u32) -> Result<bool> {
    let torsion = Torsion::from_k(k)?;
    if !is_tableau(t) {
        return invalid("not a tableau");
    }
    Ok(classes_agree(t, torsion, None))
}

fn square_r(t: &Tableau) -> Option<u32> {
    match t.shape().kind() {
        ShapeKind::Square { r } => Some(*r),
        _ => None,
    }
}

fn require_square(t: &Tableau, p: &PrymParams) -> Result<()> {
    match square_r(t) {
        Some(r) if r == p.r => Ok(()),
        _ => invalid(format!("expected a tableau on the square [{}]^2", p.r + 1)),
    }
}

/// Prym tableau of type `(g, r, k)`: a tableau on `[r+1]^2` with symbols in
/// `[2g-1]`, each symbol other than `g` on one class mod `k`, the fiber of `g`
/// on one class mod 2, and dual symbols `a`, `2g-a` on a common class.
pub fn is_prym(t: &Tableau, p: &PrymParams) -> Result<bool> {
    require_square(t, p)?;
    let g = p.g;
    if t.entries().iter().any(|&e| e == 0 || e > 2 * g - 1) || !is_tableau(t) {
        return Ok(false);
    }
    let torsion = p.torsion();
    let classes = t.symbol_classes(torsion);
    for (&s, c) in &classes {
        if s == g {
            continue;
        }
        if c.len() != 1 {
            return Ok(false);
        }
        if s < g {
            if let Some(d) = classes.get(&(2 * g - s)) {
                if d != c {
                    return Ok(false);
                }
            }
        }
    }
    let g_parities: BTreeSet<i64> = t.fiber(g).iter().map(|b| b.offset().rem_euclid(2)).collect();
    Ok(g_parities.len() <= 1)
}

/// The reflection `(x, y) -> (r+2-y, r+2-x)` of the square `[r+1]^2`.
pub fn reflect_box(b: LatticeBox, r: u32) -> Result<LatticeBox> {
    if b.x > r + 1 || b.y > r + 1 {
        return invalid(format!("box {b} outside [{}]^2", r + 1));
    }
    Ok(LatticeBox::new(r + 2 - b.y, r + 2 - b.x))
}

/// Prym, and `t(b) = 2g - t(rho(b))` on every box.
pub fn is_reflective(t: &Tableau, p: &PrymParams) -> Result<bool> {
    if !is_prym(t, p)? {
        return Ok(false);
    }
    Ok(t.iter().all(|(b, v)| {
        let rb = reflect_box(b, p.r).expect("box in square");
        t.get(rb).map(|w| v + w) == Some(2 * p.g)
    }))
}

/// On the square: the number of `a in [g-1]` with `a` or `2g-a` present.
/// On any other shape: the number of distinct symbols.
pub fn codimension(t: &Tableau, p: &PrymParams) -> u32 {
    let syms = t.symbols();
    if square_r(t).is_some() {
        (1..p.g).filter(|&a| syms.contains(&a) || syms.contains(&(2 * p.g - a))).count() as u32
    } else {
        syms.len() as u32
    }
}

/// Dominance between Prym tableaux of one type, or between staircase
/// tableaux of one size.
pub fn dominates(t: &Tableau, s: &Tableau, p: &PrymParams) -> Result<bool> {
    let torsion = p.torsion();
    match (t.shape().kind(), s.shape().kind()) {
        (ShapeKind::Square { r: a }, ShapeKind::Square { r: b }) if a == b && *a == p.r => {
            let g = p.g;
            let parity = Torsion::Uniform(2);
            let tg = t.diagonal_sets(parity);
            let sg = s.diagonal_sets(parity);
            for (i, syms) in &tg {
                if syms.contains(&g) && !sg.get(i).is_some_and(|x| x.contains(&g)) {
                    return Ok(false);
                }
            }
            let td = t.diagonal_sets(torsion);
            let sd = s.diagonal_sets(torsion);
            let empty = BTreeSet::new();
            for (i, syms) in &td {
                let there = sd.get(i).unwrap_or(&empty);
                for &a in syms {
                    if a == g {
                        continue;
                    }
                    if !there.contains(&a) && !there.contains(&(2 * g - a)) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        (ShapeKind::Triangle { n: a }, ShapeKind::Triangle { n: b }) if a == b => {
            let td = t.diagonal_sets(torsion);
            let sd = s.diagonal_sets(torsion);
            let empty = BTreeSet::new();
            Ok(td.iter().all(|(i, syms)| syms.is_subset(sd.get(i).unwrap_or(&empty))))
        }
        _ => invalid("dominance compares two squares of size r+1 or two staircases of one size"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::tableau::Shape;
    use std::sync::Arc;

    #[test]
    fn diagonal_index_examples() {
        assert_eq!(diagonal_index(LatticeBox::new(3, 1), 3).unwrap(), 2);
        assert_eq!(diagonal_index(LatticeBox::new(1, 4), 3).unwrap(), 0);
        assert_eq!(diagonal_index(LatticeBox::new(2, 2), 5).unwrap(), 0);
        assert!(diagonal_index(LatticeBox::new(2, 2), 1).is_err());
        assert!(diagonal_index(LatticeBox::new(2, 2), 0).is_err());
    }

    #[test]
    fn staircase_example_is_a_3_displacement_but_not_2() {
        let t = examples::staircase_size6_torsion3();
        assert!(is_tableau(&t));
        assert!(is_displacement(&t, 3).unwrap());
        assert!(!is_displacement(&t, 2).unwrap());
    }

    #[test]
    fn displacement_rejects_non_tableau() {
        let t = Tableau::from_rows(&[&[1], &[2, 3]], 3).unwrap();
        assert!(is_displacement(&t, 2).is_err());
    }

    #[test]
    fn generic_displacement_is_injectivity() {
        let t = Tableau::from_rows(&[&[2], &[1, 3]], 3).unwrap();
        assert!(is_displacement(&t, 0).unwrap());
        let u = Tableau::from_rows(&[&[2], &[1, 2]], 3).unwrap();
        assert!(!is_displacement(&u, 0).unwrap());
        assert!(is_displacement(&u, 2).unwrap());
    }

    #[test]
    fn reflection_input_is_prym_not_reflective() {
        let p = PrymParams::new(11, 4, 3).unwrap();
        let t = examples::reflection_input();
        assert!(is_prym(&t, &p).unwrap());
        assert!(!is_reflective(&t, &p).unwrap());
    }

    #[test]
    fn broken_dual_pair_is_not_prym() {
        let p = PrymParams::new(11, 4, 3).unwrap();
        let mut t = examples::reflection_input();
        t.set(LatticeBox::new(1, 1), 3);
        assert!(is_tableau(&t));
        assert!(!is_prym(&t, &p).unwrap());
    }

    #[test]
    fn prym_needs_the_square() {
        let p = PrymParams::new(12, 5, 3).unwrap();
        assert!(is_prym(&examples::staircase_size6_torsion3(), &p).is_err());
    }

    #[test]
    fn reflection_is_an_involution_on_the_square() {
        for r in 0..5 {
            for &b in Shape::square(r).boxes() {
                let rb = reflect_box(b, r).unwrap();
                assert_eq!(reflect_box(rb, r).unwrap(), b);
                assert_eq!(rb.anti_diagonal() + b.anti_diagonal(), 2 * r + 2);
            }
        }
        assert!(reflect_box(LatticeBox::new(5, 1), 3).is_err());
    }

    #[test]
    fn staircase_codimension_counts_symbols() {
        let p = PrymParams::new(12, 5, 3).unwrap();
        assert_eq!(codimension(&examples::staircase_size6_torsion3(), &p), 11);
    }

    #[test]
    fn staircase_dominance_is_inclusion() {
        let p = PrymParams::new(3, 0, 2).unwrap();
        let shape = Arc::new(Shape::triangle(1));
        let t = Tableau::new(shape.clone(), vec![1], 2).unwrap();
        let s = Tableau::new(shape, vec![2], 2).unwrap();
        assert!(!dominates(&t, &s, &p).unwrap());
        assert!(dominates(&t, &t, &p).unwrap());
    }

    #[test]
    fn dominance_rejects_mixed_shapes() {
        let p = PrymParams::new(11, 4, 3).unwrap();
        assert!(dominates(&examples::reflection_input(), &examples::staircase_size6_torsion3(), &p).is_err());
    }
}
