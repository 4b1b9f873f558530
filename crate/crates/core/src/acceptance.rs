//! The acceptance suite: each criterion recomputes its values by the routes
//! this crate provides and compares them with pinned expectations.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{betti_closed_form, build_intersection_graph, connect_path, descend_height, verify_path};
use crate::counting::{
    binomial, count_brute, count_even_determinant, count_even_determinant_with_margin, count_generic,
    count_lattice_paths, count_points, max_cell_count, MAX_BRUTE_CODIM,
};
use crate::dimension::{brute_min_codim, expected_codim, for_each_staircase_prym, OracleOptions};
use crate::divisors::{box_positions, tableau_to_divisor, Chip, DivisorOutcome, FoldedChain};
use crate::error::{Error, Result};
use crate::examples;
use crate::reflection::{extend_to_reflective, reflectify, restrict_to_staircase};
use crate::strips::{count_strip_tableaux, dominating_non_repeating, enumerate_strip_tableaux, is_non_repeating};
use crate::tableau::{codimension, dominates, PrymParams, Tableau};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub limit_seconds: f64,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "[{}] {}. {} ({:.1}s of {:.0}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.limit_seconds,
            self.detail
        )
    }
}

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub limit: Duration,
    run: fn() -> Result<String>,
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, name, secs, run| Criterion { id, name, limit: Duration::from_secs(secs), run };
    vec![
        c(1, "dimension formula", 60 * 60, criterion_dimension as fn() -> Result<String>),
        c(2, "point counts C(r, k)", 300, criterion_counts),
        c(3, "maximal cell counts", 300, criterion_cells),
        c(4, "Betti numbers", 120 * 12, criterion_betti),
        c(5, "reflection worked example", 10, criterion_reflection),
        c(6, "connectivity", 300, criterion_connectivity),
        c(7, "pure dimensionality", 600, criterion_pure),
        c(8, "generic average intersections", 120, criterion_average),
        c(9, "divisor layer", 60, criterion_divisors),
    ]
}

impl Criterion {
    pub fn run(&self) -> CriterionReport {
        let start = Instant::now();
        let outcome = (self.run)();
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match outcome {
            Ok(d) => (true, d),
            Err(e) => (false, e.to_string()),
        };
        if elapsed > self.limit {
            passed = false;
            detail = format!("over time limit; {detail}");
        }
        CriterionReport {
            id: self.id,
            name: self.name,
            passed,
            detail,
            seconds: elapsed.as_secs_f64(),
            limit_seconds: self.limit.as_secs_f64(),
        }
    }
}

/// Run the selected criteria, or all of them.
pub fn run(ids: Option<&[u32]>) -> Vec<CriterionReport> {
    criteria().iter().filter(|c| ids.is_none_or(|ids| ids.contains(&c.id))).map(Criterion::run).collect()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(msg()))
    }
}

/// `(r, k, g)` with `r <= 4`, `k` in `{0, 2, 3, 4, 5}` and `g - 1` in
/// `{n, n + 1, n + 2}`.
pub fn small_instances() -> Vec<PrymParams> {
    let mut out = Vec::new();
    for r in 1..=4 {
        for k in [0, 2, 3, 4, 5] {
            let n = expected_codim(r, k);
            for extra in 0..3 {
                out.push(PrymParams::new(n + 1 + extra, r, k).expect("valid"));
            }
        }
    }
    out
}

fn criterion_dimension() -> Result<String> {
    let mut slowest = Duration::ZERO;
    let instances = small_instances();
    for p in &instances {
        let start = Instant::now();
        let got = brute_min_codim(p, OracleOptions::default())?;
        let exhaustive = brute_min_codim(p, OracleOptions { paranoid: true, force: false })?;
        slowest = slowest.max(start.elapsed());
        check(got == p.codim(), || format!("{p}: oracle {got}, formula {}", p.codim()))?;
        check(exhaustive == got, || format!("{p}: pruned search {got}, exhaustive {exhaustive}"))?;
        check(slowest < Duration::from_secs(60), || format!("{p} took {slowest:?}"))?;
    }
    Ok(format!("{} instances, slowest {:.2}s", instances.len(), slowest.as_secs_f64()))
}

/// The pinned table of `C(r, k)`.
pub fn count_table() -> Vec<(u32, u32, u64)> {
    let mut out: Vec<(u32, u32, u64)> =
        [1, 2, 16, 768, 292864, 1100742656].iter().enumerate().map(|(i, &c)| (i as u32 + 1, 0, c)).collect();
    for r in 2..=6 {
        out.push((r, 2, 1));
    }
    for r in 3..=6 {
        out.push((r, 4, 1 << (r - 1)));
    }
    out.extend([(4, 6, 128), (5, 6, 1024), (6, 6, 8178), (5, 8, 35480), (6, 8, 1671168)]);
    out
}

fn criterion_counts() -> Result<String> {
    let mut brute_checked = 0;
    let mut mismatches = Vec::new();
    for (r, k, printed) in count_table() {
        let tag = format!("C({r},{k})");
        let (c, _) = count_points(r, k, false)?;
        if c != BigUint::from(printed) {
            mismatches.push(format!("{tag} = {c}, table prints {printed}"));
        }
        let want = c;
        if k == 0 {
            let got = count_generic(r);
            check(got == want, || format!("{tag}: hook length {got}, expected {want}"))?;
        } else {
            let det = count_even_determinant(r, k)?;
            let paths = count_lattice_paths(r, k)?;
            check(det == want, || format!("{tag}: determinant {det}, expected {want}"))?;
            check(paths == want, || format!("{tag}: lattice paths {paths}, expected {want}"))?;
            let wide = count_even_determinant_with_margin(r, k, 1)?;
            check(wide == want, || format!("{tag}: widened determinant {wide}"))?;
        }
        if expected_codim(r, k) <= MAX_BRUTE_CODIM {
            let brute = count_brute(r, k, false)?;
            check(brute == want, || format!("{tag}: brute force {brute}, expected {want}"))?;
            brute_checked += 1;
        }
    }
    if !mismatches.is_empty() {
        return Err(Error::Internal(format!("all routes agree, but {}", mismatches.join("; "))));
    }
    Ok(format!("{} table entries, {brute_checked} also by brute force", count_table().len()))
}

fn criterion_cells() -> Result<String> {
    let mut checked = 0;
    for p in small_instances().iter().chain(&[PrymParams::new(7, 3, 4)?]) {
        if p.expected_dim() < 0 {
            continue;
        }
        let enumerated = BigUint::from(count_strip_tableaux(p, None)?);
        let (c, _) = count_points(p.r, p.k, false)?;
        let formula = c * binomial(p.g as u64 - 1, p.codim() as u64);
        check(enumerated == formula, || format!("{p}: enumerated {enumerated}, formula {formula}"))?;
        check(max_cell_count(p, false)? == formula, || format!("{p}: max_cell_count disagrees"))?;
        checked += 1;
    }
    let p = PrymParams::new(7, 3, 4)?;
    let n = count_strip_tableaux(&p, None)?;
    check(n == 24, || format!("(7,3,4) has {n} cells, expected 24"))?;
    Ok(format!("{checked} instances, (7,3,4) has 24 cells"))
}

/// Vertices a circle of a `k = 4` locus carries, by its free symbol.
pub fn k4_expected_vertices(free: u32, r: u32) -> usize {
    match free {
        1 => 1,
        2 => 3,
        f if f == 2 * r => 2,
        f if f % 2 == 1 => 2,
        _ => 4,
    }
}

fn one_dim(r: u32, k: u32) -> Result<PrymParams> {
    PrymParams::new(expected_codim(r, k) + 2, r, k)
}

fn betti_instance(p: &PrymParams, want: u64) -> Result<crate::complex::IntersectionGraph> {
    let graph = build_intersection_graph(p)?;
    let got = graph.betti();
    let closed = betti_closed_form(p)?;
    check(got == want, || format!("{p}: graph Betti {got}, expected {want}"))?;
    check(closed == BigUint::from(want), || format!("{p}: closed form {closed}, expected {want}"))?;
    check(graph.irregular_points() == 0, || format!("{p}: a point lies on more than two circles"))?;
    Ok(graph)
}

fn criterion_betti() -> Result<String> {
    let mut done = Vec::new();
    betti_instance(&PrymParams::new(7, 3, 4)?, 29)?;
    done.push("(7,3,4)".to_string());
    for r in 2..=6 {
        let p = one_dim(r, 2)?;
        let graph = betti_instance(&p, r as u64 + 1)?;
        check(graph.circles.len() == r as usize + 1, || format!("{p}: {} circles", graph.circles.len()))?;
        done.push(format!("k=2 r={r}"));
    }
    for r in 3..=5 {
        let p = one_dim(r, 4)?;
        let want = (1u64 << (r - 1)) * (3 * r as u64 - 2) + 1;
        let graph = betti_instance(&p, want)?;
        let circles = (1usize << (r - 1)) * 2 * r as usize;
        check(graph.circles.len() == circles, || format!("{p}: {} circles, expected {circles}", graph.circles.len()))?;
        for (c, m) in graph.circles.iter().zip(graph.profile()) {
            let want = k4_expected_vertices(c.free_symbol, r);
            check(m == want, || format!("{p}: free symbol {} has {m} vertices, expected {want}", c.free_symbol))?;
        }
        done.push(format!("k=4 r={r}"));
    }
    for (r, want) in [(2, 9), (3, 169)] {
        betti_instance(&one_dim(r, 0)?, want)?;
        done.push(format!("generic r={r}"));
    }
    Ok(done.join(", "))
}

fn criterion_reflection() -> Result<String> {
    let p = PrymParams::new(11, 4, 3)?;
    let seq = examples::reflection_sequence();
    let got = reflectify(&seq[0], &p)?.tableaux();
    check(got.len() == seq.len(), || format!("{} stages, expected {}", got.len(), seq.len()))?;
    for (i, (a, b)) in got.iter().zip(&seq).enumerate() {
        check(a == b, || format!("stage {i} differs:\n{a}\nexpected\n{b}"))?;
    }
    Ok(format!("{} stages reproduced", seq.len()))
}

fn cells(p: &PrymParams) -> Result<Vec<Tableau>> {
    Ok(enumerate_strip_tableaux(p, None)?.iter().map(|c| c.extend()).collect())
}

/// Random pairs joined per instance in the connectivity criterion.
pub const RANDOM_PAIRS: usize = 100;

fn criterion_connectivity() -> Result<String> {
    let mut graphs = 0;
    let mut dim_one: Vec<PrymParams> = vec![PrymParams::new(7, 3, 4)?];
    dim_one.extend((2..=6).map(|r| one_dim(r, 2)).collect::<Result<Vec<_>>>()?);
    dim_one.extend((3..=5).map(|r| one_dim(r, 4)).collect::<Result<Vec<_>>>()?);
    dim_one.extend([one_dim(2, 0)?, one_dim(3, 0)?]);
    dim_one.extend(small_instances().into_iter().filter(|p| p.expected_dim() == 1));
    for p in &dim_one {
        check(build_intersection_graph(p)?.is_connected(), || format!("{p}: intersection graph is disconnected"))?;
        graphs += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut paths = 0;
    let mut longest = 0;
    for p in small_instances().iter().filter(|p| p.expected_dim() >= 1) {
        let all = cells(p)?;
        for _ in 0..RANDOM_PAIRS {
            let a = all.choose(&mut rng).expect("nonempty");
            let b = all.choose(&mut rng).expect("nonempty");
            let path = connect_path(a, b, p)?;
            check(path.first() == Some(a) && path.last() == Some(b), || format!("{p}: path has wrong ends"))?;
            check(verify_path(&path, p)?, || format!("{p}: consecutive cells not adjacent"))?;
            longest = longest.max(path.len());
            paths += 1;
        }
    }
    let p = PrymParams::new(23, 8, 5)?;
    let [t, u, s] = examples::height_descent_example();
    let d = descend_height(&t, &p)?;
    check(d.u == u && d.s == s, || "height descent differs from the worked example".into())?;
    Ok(format!("{graphs} graphs connected, {paths} random paths (longest {longest}), worked descent reproduced"))
}

fn criterion_pure() -> Result<String> {
    let mut total = 0u64;
    let mut per_instance = BTreeMap::new();
    for p in small_instances() {
        let n = p.codim();
        let mut failure: Option<String> = None;
        let mut count = 0u64;
        for_each_staircase_prym(&p, false, |t| {
            if failure.is_some() {
                return;
            }
            count += 1;
            let outcome = (|| -> Result<Option<String>> {
                let square = extend_to_reflective(t, &p)?;
                let back = restrict_to_staircase(&square, &p)?;
                let (strip, s) = dominating_non_repeating(&back, &p)?;
                if !dominates(&s, t, &p)? {
                    return Ok(Some(format!("{p}: result does not dominate\n{t}")));
                }
                if codimension(&s, &p) != n {
                    return Ok(Some(format!("{p}: codimension {} instead of {n}\n{t}", codimension(&s, &p))));
                }
                if !is_non_repeating(&s, &strip, &p)? {
                    return Ok(Some(format!("{p}: result is not non-repeating\n{t}")));
                }
                Ok(None)
            })();
            match outcome {
                Ok(None) => {}
                Ok(Some(msg)) => failure = Some(msg),
                Err(e) => failure = Some(format!("{p}: {e}")),
            }
        })?;
        if let Some(msg) = failure {
            return Err(Error::Internal(msg));
        }
        total += count;
        per_instance.insert(p.to_string(), count);
    }
    Ok(format!("{total} staircase tableaux over {} instances", per_instance.len()))
}

fn criterion_average() -> Result<String> {
    let mut out = Vec::new();
    for r in 1..=4 {
        let p = one_dim(r, 0)?;
        let graph = build_intersection_graph(&p)?;
        let incidences: usize = graph.profile().iter().sum();
        check(incidences == r as usize * graph.circles.len(), || {
            format!("{p}: {incidences} incidences over {} circles", graph.circles.len())
        })?;
        out.push(format!("r={r}: {} circles", graph.circles.len()));
    }
    Ok(out.join(", "))
}

fn criterion_divisors() -> Result<String> {
    let mut total = 0;
    for (g, r, k) in [(7, 3, 4), (5, 3, 2)] {
        let p = PrymParams::new(g, r, k)?;
        let chain = FoldedChain::uniform(g, k)?;
        for t in cells(&p)? {
            let square = extend_to_reflective(&t, &p)?;
            let DivisorOutcome::Divisor(d) = tableau_to_divisor(&square, &p, &chain)? else {
                return Err(Error::Internal(format!("{p}: a reflective tableau gave an empty cell")));
            };
            check(d.degree() == 2 * g as i64 - 2, || format!("{p}: degree {}", d.degree()))?;
            let positions = box_positions(&square, &chain);
            for &(a, pos) in &positions {
                let chip = d.chip_on(a);
                check(matches!(chip, Some(Chip::Placed { pos: q, .. }) if *q == pos), || {
                    format!("{p}: symbol {a} is not where its box puts it")
                })?;
                let dual = 2 * g - a;
                for &(b, other) in &positions {
                    if b == dual {
                        check(other == pos, || format!("{p}: symbols {a} and {dual} are not mirrored"))?;
                    }
                }
            }
            total += 1;
        }
    }
    Ok(format!("{total} divisors checked"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_has_the_listed_entries() {
        assert_eq!(count_table().len(), 6 + 5 + 4 + 5);
        assert_eq!(small_instances().len(), 60);
    }

    #[test]
    fn k4_profile_sums_to_twice_the_vertices() {
        for r in 3..=5u32 {
            let circles_per_symbol = 1usize << (r - 1);
            let incidences: usize = (1..=2 * r).map(|f| k4_expected_vertices(f, r) * circles_per_symbol).sum();
            let betti = (1usize << (r - 1)) * (3 * r as usize - 2) + 1;
            assert_eq!(incidences, 2 * (betti - 1));
        }
    }
}
