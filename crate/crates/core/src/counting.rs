//! The number `C(r, k)` of points of a zero-dimensional locus, by several
//! independent routes, and the number of maximal cells in general.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::dimension::expected_codim;
use crate::error::{Error, Result};
use crate::strips::count_strip_tableaux;
use crate::tableau::PrymParams;

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Standard Young tableaux of a partition (rows weakly decreasing), by the
/// hook-length formula.
pub fn syt_count(partition: &[u32]) -> Result<BigUint> {
    if partition.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput("partition rows must be weakly decreasing".into()));
    }
    let rows: Vec<u32> = partition.iter().copied().filter(|&r| r > 0).collect();
    let n: u64 = rows.iter().map(|&r| r as u64).sum();
    let mut hooks = BigUint::one();
    for (i, &len) in rows.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = rows[i + 1..].iter().filter(|&&below| below > j).count() as u32;
            hooks *= arm + leg + 1;
        }
    }
    Ok(factorial(n) / hooks)
}

/// `C(r, 0)`: standard Young tableaux of the staircase `T_r`.
pub fn count_generic(r: u32) -> BigUint {
    let rows: Vec<u32> = (1..=r).rev().collect();
    syt_count(&rows).expect("staircase is a partition")
}

fn require_even_in_range(r: u32, k: u32) -> Result<u32> {
    if k < 2 || k % 2 == 1 || k + 2 > 2 * r {
        return Err(Error::NoClosedForm(format!(
            "this formula needs even k with 2 <= k <= 2r - 2, got r = {r}, k = {k}"
        )));
    }
    Ok(k / 2)
}

fn inv_factorial(m: i64) -> BigRational {
    if m < 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), BigInt::from(factorial(m as u64)))
    }
}

/// Determinant by Gaussian elimination over the rationals.
pub fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&row| !m[row][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let f = &m[row][col] / &p;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[row][c] -= sub;
            }
        }
    }
    det
}

/// Smallest `alpha_j` for which column `j` (0-based) is not identically zero.
fn alpha_floor(r: u32, l: u32, k: u32, j: u32) -> i64 {
    let top = r as i64 + l as i64 - 1 - 2 * j as i64;
    num_integer::Integer::div_ceil(&(-top), &(k as i64))
}

/// `C(r, k)` for even `k <= 2r - 2` as `n!` times a sum of `l x l`
/// determinants with entries `1/(r + i - 2j + alpha_j k)!` over integer
/// `alpha` summing to zero. `margin` widens the search box on each side of
/// the finite support; the terms it adds must vanish.
pub fn count_even_determinant_with_margin(r: u32, k: u32, margin: u32) -> Result<BigUint> {
    let l = require_even_in_range(r, k)?;
    let n = expected_codim(r, k) as u64;
    let lows: Vec<i64> = (0..l).map(|j| alpha_floor(r, l, k, j) - margin as i64).collect();
    let mut total = BigRational::zero();
    let mut alpha = vec![0i64; l as usize];
    sum_over_alphas(0, 0, &lows, &mut alpha, &mut |a| {
        let m: Vec<Vec<BigRational>> = (0..l as i64)
            .map(|i| (0..l as i64).map(|j| inv_factorial(r as i64 + i - 2 * j + a[j as usize] * k as i64)).collect())
            .collect();
        total += det_rational(m);
    });
    let value = total * BigRational::from_integer(BigInt::from(factorial(n)));
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Internal(format!("determinant sum {value} is not a count")));
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

pub fn count_even_determinant(r: u32, k: u32) -> Result<BigUint> {
    count_even_determinant_with_margin(r, k, 0)
}

fn sum_over_alphas(j: usize, partial: i64, lows: &[i64], alpha: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
    let last = lows.len() - 1;
    if j == last {
        let a = -partial;
        if a >= lows[last] {
            alpha[last] = a;
            f(alpha);
        }
        return;
    }
    let rest_low: i64 = lows[j + 1..].iter().sum();
    let high = -partial - rest_low;
    for a in lows[j]..=high {
        alpha[j] = a;
        sum_over_alphas(j + 1, partial + a, lows, alpha, f);
    }
}

/// `C(r, k)` for even `k <= 2r - 2` as the number of monotone lattice paths
/// in `Z^l` from `(l, ..., 1)` to `(r+l, r+l-2, ..., r-l+2)` staying in
/// `z_1 > ... > z_l > z_1 - k`.
pub fn count_lattice_paths(r: u32, k: u32) -> Result<BigUint> {
    let l = require_even_in_range(r, k)? as usize;
    let start: Vec<i64> = (0..l).map(|i| (l - i) as i64).collect();
    let end: Vec<i64> = (0..l).map(|i| r as i64 + l as i64 - 2 * i as i64).collect();
    let steps: i64 = end.iter().zip(&start).map(|(e, s)| e - s).sum();
    let ok = |z: &[i64]| z.windows(2).all(|w| w[0] > w[1]) && z[l - 1] > z[0] - k as i64;
    let mut layer: HashMap<Vec<i64>, BigUint> = HashMap::new();
    layer.insert(start, BigUint::one());
    for _ in 0..steps {
        let mut next: HashMap<Vec<i64>, BigUint> = HashMap::new();
        for (z, c) in &layer {
            for i in 0..l {
                if z[i] == end[i] {
                    continue;
                }
                let mut w = z.clone();
                w[i] += 1;
                if ok(&w) {
                    *next.entry(w).or_default() += c;
                }
            }
        }
        layer = next;
    }
    Ok(layer.remove(&end).unwrap_or_default())
}

/// Desk-scale limit on the codimension for brute-force counting.
pub const MAX_BRUTE_CODIM: u32 = 18;

/// `C(r, k)` by enumerating strip tableaux on the symbols `[n(r, k)]`.
pub fn count_brute(r: u32, k: u32, force: bool) -> Result<BigUint> {
    let n = expected_codim(r, k);
    if !force && n > MAX_BRUTE_CODIM {
        return Err(Error::BoundExceeded { what: "n(r, k)", value: n as u64, limit: MAX_BRUTE_CODIM as u64 });
    }
    let p = PrymParams::new(n + 1, r, k)?;
    Ok(BigUint::from(count_strip_tableaux(&p, None)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    HookLength,
    Determinant,
    LatticePaths,
    Brute,
}

/// `C(r, k)` by the preferred closed route, falling back to enumeration for
/// odd torsion where no formula is known.
pub fn count_points(r: u32, k: u32, force: bool) -> Result<(BigUint, CountMethod)> {
    if k == 1 {
        return Err(Error::Parameter("torsion order k = 1 is not allowed".into()));
    }
    if k == 0 || k + 2 > 2 * r {
        Ok((count_generic(r), CountMethod::HookLength))
    } else if k % 2 == 0 {
        Ok((count_even_determinant(r, k)?, CountMethod::Determinant))
    } else {
        Ok((count_brute(r, k, force)?, CountMethod::Brute))
    }
}

/// Number of maximal cells, `C(r, k) * binom(g - 1, n(r, k))`; zero when the
/// locus is empty.
pub fn max_cell_count(p: &PrymParams, force: bool) -> Result<BigUint> {
    let n = p.codim();
    if p.g - 1 < n {
        return Ok(BigUint::zero());
    }
    let (c, _) = count_points(p.r, p.k, force)?;
    Ok(c * binomial(p.g as u64 - 1, n as u64))
}
