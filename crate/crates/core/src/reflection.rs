//! Reflecting a Prym tableau into a dominating reflective one, and the
//! correspondence between reflective tableaux and staircase tableaux.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{internal, invalid, Error, Result};
use crate::tableau::{
    classes_agree, is_prym, is_reflective, is_tableau, reflect_box, LatticeBox, PrymParams, Shape, ShapeKind, Tableau,
};

/// Boxes outside the partition `lambda` whose lower neighbours all lie in
/// `lambda` (or off the quadrant). With `classes` set, only boxes on those
/// diagonal classes mod `k` are kept.
pub fn loose_boxes(
    lambda: &BTreeSet<LatticeBox>,
    classes: Option<&BTreeSet<u32>>,
    k: u32,
) -> Result<BTreeSet<LatticeBox>> {
    for b in lambda {
        let down_closed = b.west().is_none_or(|w| lambda.contains(&w)) && b.south().is_none_or(|s| lambda.contains(&s));
        if !down_closed {
            return invalid(format!("{b} is in lambda but a lower neighbour is not; lambda is not a partition"));
        }
    }
    if classes.is_some() && k < 2 {
        return Err(Error::Parameter(format!("class filter needs k >= 2, got {k}")));
    }
    let mut candidates: BTreeSet<LatticeBox> = lambda.iter().flat_map(|b| [b.east(), b.north()]).collect();
    candidates.insert(LatticeBox::new(1, 1));
    Ok(candidates
        .into_iter()
        .filter(|b| !lambda.contains(b))
        .filter(|b| b.west().is_none_or(|w| lambda.contains(&w)) && b.south().is_none_or(|s| lambda.contains(&s)))
        .filter(|b| classes.is_none_or(|c| c.contains(&(b.offset().rem_euclid(k as i64) as u32))))
        .collect())
}

/// One stage of the reflection algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionStep {
    pub tableau: Tableau,
    /// The symbol written on the newly fixed boxes, or `g` on the final stage.
    pub symbol: u32,
    /// Boxes of `T_r` newly fixed at this stage (empty for the input).
    pub fixed: Vec<LatticeBox>,
}

/// All stages, input first; the last tableau is reflective.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub steps: Vec<ReflectionStep>,
}

impl Reflection {
    pub fn result(&self) -> &Tableau {
        &self.steps.last().expect("at least the input").tableau
    }

    pub fn tableaux(&self) -> Vec<Tableau> {
        self.steps.iter().map(|s| s.tableau.clone()).collect()
    }
}

/// Grow a partition `kappa` inside `T_r` by the loose boxes carrying the
/// least symbol `c` (or whose reflection carries `2g - c`), writing `c` on
/// them and `2g - c` on their reflections. Finally write `g` on `A_{r+1}`.
pub fn reflectify(t: &Tableau, p: &PrymParams) -> Result<Reflection> {
    if !is_prym(t, p)? {
        return Err(Error::Precondition("input is not a Prym tableau of this type".into()));
    }
    let g = p.g;
    let r = p.r;
    if t.fiber(g).iter().any(|b| (b.offset() - r as i64).rem_euclid(2) != 0) {
        return Err(Error::Precondition(format!("the fiber of g = {g} must lie on the diagonals of parity r mod 2")));
    }
    let target: BTreeSet<LatticeBox> = Shape::triangle(r).boxes().iter().copied().collect();
    let mut s = t.clone();
    let mut kappa: BTreeSet<LatticeBox> = BTreeSet::new();
    let mut steps = vec![ReflectionStep { tableau: s.clone(), symbol: 0, fixed: Vec::new() }];
    let mut last = 0;
    while kappa != target {
        let loose: Vec<LatticeBox> =
            loose_boxes(&kappa, None, 0)?.into_iter().filter(|b| b.anti_diagonal() <= r).collect();
        if loose.is_empty() {
            return internal("no loose box below the anti-diagonal A_r");
        }
        let value = |b: LatticeBox| s.get(b).expect("box in square");
        let dual = |b: LatticeBox| 2 * g - value(reflect_box(b, r).expect("box in square"));
        let c = loose.iter().flat_map(|&b| [value(b), dual(b)]).min().expect("nonempty");
        if c <= last || c >= g {
            return internal(format!("reflection threshold {c} out of order after {last}"));
        }
        let fixed: Vec<LatticeBox> = loose.iter().copied().filter(|&b| value(b) == c || dual(b) == c).collect();
        for &b in &fixed {
            s.set(b, c);
            s.set(reflect_box(b, r)?, 2 * g - c);
        }
        kappa.extend(fixed.iter().copied());
        last = c;
        steps.push(ReflectionStep { tableau: s.clone(), symbol: c, fixed });
    }
    let middle: Vec<LatticeBox> = (1..=r + 1).map(|x| LatticeBox::new(x, r + 2 - x)).collect();
    for &b in &middle {
        s.set(b, g);
    }
    steps.push(ReflectionStep { tableau: s.clone(), symbol: g, fixed: middle });
    if !is_reflective(&s, p)? {
        return internal("reflection produced a non-reflective tableau");
    }
    Ok(Reflection { steps })
}

/// The restriction of a reflective tableau to `T_r`.
pub fn restrict_to_staircase(s: &Tableau, p: &PrymParams) -> Result<Tableau> {
    if !is_reflective(s, p)? {
        return invalid("input is not reflective");
    }
    s.restrict(Arc::new(Shape::triangle(p.r)))?.with_symbol_bound(p.g - 1)
}

/// The reflective tableau determined by a staircase Prym tableau.
pub fn extend_to_reflective(t: &Tableau, p: &PrymParams) -> Result<Tableau> {
    if !matches!(t.shape().kind(), ShapeKind::Triangle { n } if *n == p.r) {
        return invalid(format!("expected a tableau on T_{}", p.r));
    }
    if t.entries().iter().any(|&e| e >= p.g) {
        return invalid(format!("staircase symbols must lie in [1, {}]", p.g - 1));
    }
    if !is_tableau(t) || !classes_agree(t, p.torsion(), None) {
        return invalid("input is not a staircase displacement tableau");
    }
    let (g, r) = (p.g, p.r);
    let square = Tableau::from_fn(Arc::new(Shape::square(r)), 2 * g - 1, |b| {
        let d = b.anti_diagonal();
        if d <= r {
            t.get(b).expect("in T_r")
        } else if d == r + 1 {
            g
        } else {
            2 * g - t.get(reflect_box(b, r).expect("in square")).expect("in T_r")
        }
    })?;
    if !is_reflective(&square, p)? {
        return internal("extension is not reflective");
    }
    Ok(square)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::tableau::{codimension, dominates};

    fn set(v: &[(u32, u32)]) -> BTreeSet<LatticeBox> {
        v.iter().map(|&(x, y)| LatticeBox::new(x, y)).collect()
    }

    /// Loose boxes straight from the definition, over a window of the quadrant.
    fn loose_oracle(lambda: &BTreeSet<LatticeBox>, classes: Option<&BTreeSet<u32>>, k: u32) -> BTreeSet<LatticeBox> {
        let mut out = BTreeSet::new();
        for x in 1..=8 {
            for y in 1..=8 {
                let b = LatticeBox::new(x, y);
                let west_ok = x == 1 || lambda.contains(&LatticeBox::new(x - 1, y));
                let south_ok = y == 1 || lambda.contains(&LatticeBox::new(x, y - 1));
                let class_ok = classes.is_none_or(|c| c.contains(&((x as i64 - y as i64).rem_euclid(k as i64) as u32)));
                if !lambda.contains(&b) && west_ok && south_ok && class_ok {
                    out.insert(b);
                }
            }
        }
        out
    }

    #[test]
    fn loose_boxes_agree_with_the_definition() {
        let cases = [
            (set(&[]), None, 3),
            (set(&[(1, 1)]), None, 3),
            (set(&[(1, 1), (2, 1)]), Some([1u32].into_iter().collect::<BTreeSet<_>>()), 3),
            (set(&[(1, 1), (2, 1), (1, 2), (3, 1)]), Some([0u32, 2].into_iter().collect()), 3),
        ];
        for (lambda, classes, k) in cases {
            assert_eq!(loose_boxes(&lambda, classes.as_ref(), k).unwrap(), loose_oracle(&lambda, classes.as_ref(), k));
        }
        assert_eq!(loose_boxes(&set(&[]), None, 3).unwrap(), set(&[(1, 1)]));
        assert_eq!(loose_boxes(&set(&[(1, 1)]), None, 3).unwrap(), set(&[(2, 1), (1, 2)]));
        let one: BTreeSet<u32> = [1].into_iter().collect();
        assert!(loose_boxes(&set(&[(1, 1), (2, 1)]), Some(&one), 3).unwrap().is_empty());
    }

    #[test]
    fn loose_boxes_reject_non_partitions() {
        assert!(loose_boxes(&set(&[(2, 1)]), None, 3).is_err());
    }

    #[test]
    fn reflectify_reproduces_the_worked_example() {
        let p = PrymParams::new(11, 4, 3).unwrap();
        let seq = examples::reflection_sequence();
        let got = reflectify(&seq[0], &p).unwrap();
        assert_eq!(got.tableaux(), seq);
        let syms: Vec<u32> = got.steps.iter().map(|s| s.symbol).collect();
        assert_eq!(syms, vec![0, 1, 3, 4, 5, 7, 9, 10, 11]);
        let out = got.result();
        assert!(is_reflective(out, &p).unwrap());
        assert!(dominates(out, &seq[0], &p).unwrap());
        assert_eq!(codimension(out, &p), 7);
    }

    #[test]
    fn reflectify_rejects_wrong_g_parity() {
        let p = PrymParams::new(3, 0, 2).unwrap();
        let t = Tableau::new(Arc::new(Shape::square(0)), vec![3], 5).unwrap();
        assert!(reflectify(&t, &p).is_ok());
        let p = PrymParams::new(3, 1, 2).unwrap();
        // g = 3 sits at (1, 1), of even offset, but r = 1 is odd
        let t = Tableau::from_rows(&[&[4, 5], &[3, 4]], 5).unwrap();
        assert!(is_prym(&t, &p).unwrap());
        assert!(matches!(reflectify(&t, &p), Err(Error::Precondition(_))));
    }

    #[test]
    fn staircase_round_trip() {
        let p = PrymParams::new(12, 5, 3).unwrap();
        let t = examples::staircase_size6_torsion3();
        let p6 = PrymParams::new(12, 6, 3).unwrap();
        let sq = extend_to_reflective(&t, &p6).unwrap();
        assert_eq!(sq.shape().len(), 49);
        assert_eq!(restrict_to_staircase(&sq, &p6).unwrap(), t);
        assert!(extend_to_reflective(&t, &p).is_err());
    }
}
