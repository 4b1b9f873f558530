//! The intersection graph of a one-dimensional locus: circles are maximal
//! cells, vertices are points where two circles meet.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

use crate::complex::ops::swap_in_for;
use crate::counting::count_generic;
use crate::error::{Error, Result};
use crate::strips::{enumerate_strip_tableaux, word_string, StripShape};
use crate::tableau::{PrymParams, Tableau, Torsion};

/// One maximal cell of a one-dimensional locus.
#[derive(Clone, Debug)]
pub struct Circle {
    pub tableau: Tableau,
    pub strip: StripShape,
    pub free_symbol: u32,
    /// Class of each symbol `1..g`, index `a - 1`; `None` for the free one.
    pub classes: Vec<Option<i64>>,
}

/// A point lying on several circles, identified by the class of every symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionPoint {
    pub circles: Vec<usize>,
    pub classes: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    pub params: PrymParams,
    pub circles: Vec<Circle>,
    pub points: Vec<IntersectionPoint>,
}

fn circle_classes(t: &Tableau, p: &PrymParams) -> Vec<Option<i64>> {
    let torsion = p.torsion();
    let mut out = vec![None; p.g as usize - 1];
    for (b, v) in t.iter() {
        out[v as usize - 1] = Some(torsion.class(b));
    }
    out
}

fn circles_of(p: &PrymParams) -> Result<Vec<Circle>> {
    if p.expected_dim() != 1 {
        return Err(Error::Precondition(format!("type {p} is not one-dimensional")));
    }
    Ok(enumerate_strip_tableaux(p, None)?
        .into_iter()
        .map(|st| {
            let tableau = st.extend();
            let classes = circle_classes(&tableau, p);
            let free_symbol = classes.iter().position(|c| c.is_none()).expect("one free symbol") as u32 + 1;
            Circle { tableau, strip: st.strip().clone(), free_symbol, classes }
        })
        .collect())
}

fn class_range(p: &PrymParams) -> Vec<i64> {
    match p.torsion() {
        Torsion::Generic => (-(p.r as i64)..=p.r as i64).collect(),
        Torsion::Uniform(k) => (0..k as i64).collect(),
    }
}

/// Circles meet where their chip configurations coincide. From each circle
/// with free symbol `a`, release each present symbol `b` and place `a` in
/// every class; any circle with free symbol `b` and exactly those classes
/// passes through the resulting point.
pub fn build_intersection_graph(p: &PrymParams) -> Result<IntersectionGraph> {
    let circles = circles_of(p)?;
    let mut index: HashMap<&[Option<i64>], usize> = HashMap::new();
    for (i, c) in circles.iter().enumerate() {
        if index.insert(c.classes.as_slice(), i).is_some() {
            return Err(Error::Internal(format!("two circles of {p} carry the same chip classes")));
        }
    }
    let range = class_range(p);
    let mut points: BTreeMap<Vec<i64>, BTreeSet<usize>> = BTreeMap::new();
    for (i, c) in circles.iter().enumerate() {
        let a = c.free_symbol as usize - 1;
        for b in c.tableau.symbols() {
            let b = b as usize - 1;
            let mut key = c.classes.clone();
            key[b] = None;
            for &cls in &range {
                key[a] = Some(cls);
                let Some(&j) = index.get(key.as_slice()) else {
                    continue;
                };
                let mut point: Vec<i64> = key.iter().map(|x| x.unwrap_or(0)).collect();
                point[b] = c.classes[b].expect("present");
                let entry = points.entry(point).or_default();
                entry.insert(i);
                entry.insert(j);
            }
        }
    }
    let points = points
        .into_iter()
        .map(|(classes, circles)| IntersectionPoint { circles: circles.into_iter().collect(), classes })
        .collect();
    Ok(IntersectionGraph { params: *p, circles, points })
}

/// Independent route: two circles with different free symbols meet exactly
/// when every other symbol has the same class on both. Returns the meeting
/// pairs `(i, j)` with `i < j`.
pub fn intersecting_pairs_by_classes(p: &PrymParams) -> Result<BTreeSet<(usize, usize)>> {
    let circles = circles_of(p)?;
    let mut out = BTreeSet::new();
    for i in 0..circles.len() {
        for j in i + 1..circles.len() {
            let (ci, cj) = (&circles[i], &circles[j]);
            if ci.free_symbol == cj.free_symbol {
                continue;
            }
            let agree = ci.classes.iter().zip(&cj.classes).enumerate().all(|(s, (x, y))| {
                let sym = s as u32 + 1;
                sym == ci.free_symbol || sym == cj.free_symbol || x == y
            });
            if agree {
                out.insert((i, j));
            }
        }
    }
    Ok(out)
}

/// Circle pairs whose tableaux differ by one `swap_in_for` of the free
/// symbol. In the generic and even cases these are all the meetings; for
/// odd torsion a meeting may need the boxes to move between strips.
pub fn swap_related_pairs(p: &PrymParams) -> Result<BTreeSet<(usize, usize)>> {
    let circles = circles_of(p)?;
    let index: HashMap<&[u32], usize> = circles.iter().enumerate().map(|(i, c)| (c.tableau.entries(), i)).collect();
    let mut out = BTreeSet::new();
    for (i, c) in circles.iter().enumerate() {
        for b in c.tableau.symbols() {
            let Ok(swapped) = swap_in_for(&c.tableau, c.free_symbol, b) else {
                continue;
            };
            if let Some(&j) = index.get(swapped.entries()) {
                out.insert((i.min(j), i.max(j)));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub circles: usize,
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub betti: u64,
}

impl IntersectionGraph {
    /// Number of intersection points on each circle.
    pub fn profile(&self) -> Vec<usize> {
        let mut counts = vec![0; self.circles.len()];
        for pt in &self.points {
            for &c in &pt.circles {
                counts[c] += 1;
            }
        }
        counts
    }

    /// Circle pairs sharing a point.
    pub fn pairs(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for pt in &self.points {
            for (x, &i) in pt.circles.iter().enumerate() {
                for &j in &pt.circles[x + 1..] {
                    out.insert((i.min(j), i.max(j)));
                }
            }
        }
        out
    }

    /// Points not on exactly two circles.
    pub fn irregular_points(&self) -> usize {
        self.points.iter().filter(|p| p.circles.len() != 2).count()
    }

    fn components(&self) -> (usize, usize) {
        let n = self.circles.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for pt in &self.points {
            for w in pt.circles.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let profile = self.profile();
        let roots: BTreeSet<usize> = (0..n).filter(|&i| profile[i] > 0).map(|i| find(&mut parent, i)).collect();
        let all: BTreeSet<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        (roots.len(), all.len())
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// First Betti number: each circle with `m >= 1` points contributes `m`
    /// arcs between them; a circle without points is a separate loop.
    pub fn summary(&self) -> GraphSummary {
        let profile = self.profile();
        let edges: usize = profile.iter().sum();
        let isolated = profile.iter().filter(|&&m| m == 0).count();
        let (with_points, all) = self.components();
        let betti = (edges + with_points + isolated) as u64 - self.points.len() as u64;
        GraphSummary { circles: self.circles.len(), vertices: self.points.len(), edges, components: all, betti }
    }

    pub fn betti(&self) -> u64 {
        self.summary().betti
    }

    /// Graphviz rendering: points as nodes, each circle as the cycle of arcs
    /// through its points in the order of the free chip's class.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let p = self.params;
        let _ = writeln!(out, "graph pbn_g{}_r{}_k{} {{", p.g, p.r, p.k);
        let _ = writeln!(out, "  node [shape=point];");
        for (i, _) in self.points.iter().enumerate() {
            let _ = writeln!(out, "  v{i};");
        }
        let mut on_circle: Vec<Vec<usize>> = vec![Vec::new(); self.circles.len()];
        for (i, pt) in self.points.iter().enumerate() {
            for &c in &pt.circles {
                on_circle[c].push(i);
            }
        }
        for (c, circle) in self.circles.iter().enumerate() {
            let a = circle.free_symbol as usize - 1;
            let mut verts = on_circle[c].clone();
            verts.sort_by_key(|&v| (self.points[v].classes[a], v));
            let label = format!("free {} {}", circle.free_symbol, word_string(circle.strip.word()));
            match verts.len() {
                0 => {
                    let _ = writeln!(out, "  c{c} [shape=circle, label=\"{label}\"];");
                }
                1 => {
                    let _ = writeln!(out, "  v{0} -- v{0} [label=\"{label}\"];", verts[0]);
                }
                m => {
                    for x in 0..m {
                        let _ = writeln!(out, "  v{} -- v{} [label=\"{label}\"];", verts[x], verts[(x + 1) % m]);
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

pub fn betti_number(graph: &IntersectionGraph) -> u64 {
    graph.betti()
}

/// Closed forms for the first Betti number of a one-dimensional locus: the
/// generic range, `k = 2` and `k = 4`.
pub fn betti_closed_form(p: &PrymParams) -> Result<BigUint> {
    if p.expected_dim() != 1 {
        return Err(Error::Precondition(format!("type {p} is not one-dimensional")));
    }
    let r = p.r;
    if p.is_generic() {
        let b = (r as u64) * (r as u64 + 1) / 2 + 1;
        return Ok(BigUint::from(r) * count_generic(r) * b / 2u32 + 1u32);
    }
    match p.k {
        2 => Ok(BigUint::from(r + 1)),
        4 => Ok((BigUint::from(1u32) << (r - 1)) * (3 * r - 2) + 1u32),
        k => Err(Error::NoClosedForm(format!("no Betti formula for k = {k} with r = {r}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(g: u32, r: u32, k: u32) -> PrymParams {
        PrymParams::new(g, r, k).unwrap()
    }

    #[test]
    fn generic_r2() {
        let g = build_intersection_graph(&p(5, 2, 0)).unwrap();
        let s = g.summary();
        assert_eq!((s.circles, s.vertices, s.betti), (8, 8, 9));
        assert_eq!(betti_closed_form(&p(5, 2, 0)).unwrap(), BigUint::from(9u32));
    }

    #[test]
    fn k2_r3() {
        let g = build_intersection_graph(&p(5, 3, 2)).unwrap();
        assert_eq!(g.circles.len(), 4);
        assert_eq!(g.points.len(), 3);
        assert_eq!(g.profile(), vec![1, 2, 2, 1]);
        assert_eq!(g.betti(), 4);
    }

    #[test]
    fn k4_r3() {
        let g = build_intersection_graph(&p(7, 3, 4)).unwrap();
        let s = g.summary();
        assert_eq!((s.circles, s.vertices, s.betti), (24, 28, 29));
        assert_eq!(betti_closed_form(&p(7, 3, 4)).unwrap(), BigUint::from(29u32));
    }

    #[test]
    fn both_routes_find_the_same_meetings() {
        for (g, r, k) in [(5, 2, 0), (5, 3, 2), (7, 3, 4), (9, 4, 3), (7, 3, 3), (8, 3, 5), (11, 4, 5)] {
            let params = p(g, r, k);
            let graph = build_intersection_graph(&params).unwrap();
            let pairs = graph.pairs();
            assert_eq!(pairs, intersecting_pairs_by_classes(&params).unwrap(), "({g},{r},{k})");
            let swaps = swap_related_pairs(&params).unwrap();
            assert!(swaps.is_subset(&pairs));
            if !params.is_odd() {
                assert_eq!(swaps, pairs, "({g},{r},{k})");
                assert_eq!(graph.irregular_points(), 0);
            }
        }
    }

    #[test]
    fn odd_torsion_meets_across_strips() {
        let params = p(9, 4, 3);
        let graph = build_intersection_graph(&params).unwrap();
        assert!(swap_related_pairs(&params).unwrap().len() < graph.pairs().len());
    }

    #[test]
    fn dot_output_mentions_every_point() {
        let g = build_intersection_graph(&p(5, 3, 2)).unwrap();
        let dot = g.to_dot();
        assert!(dot.starts_with("graph "));
        assert_eq!(dot.matches(" -- ").count(), g.summary().edges);
    }
}
