//! Closed-form upper bounds on the unbalancedness `X(H)` of zero-sum
//! weightings, plus the level quantities behind the complete-hypergraph bound.
//!
//! For the complete hypergraph `K_n^r` with a vertex split `P ∪ N`, `|N| = k`,
//! level `ℓ` is the set of edges meeting `P` in exactly `ℓ` vertices; it has
//! `C(n-k, ℓ) C(k, r-ℓ)` edges. The extremal weighting is `-1` below a level
//! `m`, `+1` above it and fractional on it, and its unbalancedness is
//! `chi(k) = sum_ℓ |m - ℓ| |E_ℓ| / max(n-k, k)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{big, binomial, int, Rational};
use crate::cube::{max_semi_threshold, xbar_semi_threshold, SemiThreshold};
use crate::error::{invalid, Result};

/// Which bound a [`BoundReport`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `C(r-1, floor(r/2)) (n/2)^(r-1)` for the complete equipartite hypergraph.
    CompletePartite,
    /// Semi-threshold bound for equipartite hypergraphs with a given edge count.
    Equipartite,
    /// Bound for the complete hypergraph `K_n^r`.
    Complete,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::CompletePartite => "complete-partite",
            BoundKind::Equipartite => "equipartite",
            BoundKind::Complete => "complete",
        }
    }
}

/// Whether a bound is met by an explicit weighting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attainment {
    pub attained: bool,
    /// Name of the construction or oracle that certifies the flag.
    pub certificate: String,
    /// Unbalancedness reached by that certificate.
    pub achieved: Rational,
}

/// A bound value with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub value: Rational,
    pub n: usize,
    pub r: usize,
    /// Edge count (equipartite bound only).
    pub edges: Option<BigInt>,
    /// Size of the negative side of the vertex split (complete bound only).
    pub k: Option<usize>,
    /// Level that carries the fractional value (complete bound only).
    pub m: Option<usize>,
    /// Level center used in the closed form (complete bound only).
    pub center: Option<usize>,
    /// The closed form with center `ceil(r/2)` instead of `floor(r/2)`.
    /// Differs from `value` only when both `n` and `r` are odd.
    pub literal_value: Option<Rational>,
    /// Maximizing semi-threshold function (equipartite bound only).
    pub threshold: Option<SemiThreshold>,
    pub attained: Option<Attainment>,
}

impl BoundReport {
    fn bare(kind: BoundKind, value: Rational, n: usize, r: usize) -> Self {
        Self {
            kind,
            value,
            n,
            r,
            edges: None,
            k: None,
            m: None,
            center: None,
            literal_value: None,
            threshold: None,
            attained: None,
        }
    }
}

/// `sqrt((D + alpha^2 D^2 (r-1)) / r) n^(r-1)` for regular equipartite
/// hypergraphs of degree `D n^(r-1)`.
///
/// The only floating-point quantity in the crate; accurate to about `1e-12`
/// relative error for moderate `n^(r-1)`.
pub fn balogh_smyth_bound(r: usize, n: usize, d: &Rational, alpha: &Rational) -> Result<f64> {
    if r == 0 || n == 0 {
        return Err(invalid("r and n must be positive"));
    }
    if !d.is_positive() {
        return Err(invalid("degree density D must be positive"));
    }
    if alpha.abs() > Rational::one() {
        return Err(invalid("alpha must lie in [-1, 1]"));
    }
    let inner = (d + alpha * alpha * d * d * int(r as i64 - 1)) / int(r as i64);
    let scale = big(BigInt::from(n).pow(r as u32 - 1));
    Ok(crate::arith::to_f64(&inner).sqrt() * crate::arith::to_f64(&scale))
}

/// `C(r-1, floor(r/2)) (n/2)^(r-1)`, exact.
pub fn complete_partite_bound(r: usize, n: usize) -> Result<Rational> {
    if r == 0 || n == 0 {
        return Err(invalid("r and n must be positive"));
    }
    let half_n = Rational::new(BigInt::from(n), BigInt::from(2));
    Ok(big(binomial(r as i64 - 1, r as i64 / 2)) * num_traits::pow(half_n, r - 1))
}

/// [`complete_partite_bound`] wrapped in a report.
pub fn complete_partite_report(r: usize, n: usize) -> Result<BoundReport> {
    let value = complete_partite_bound(r, n)?;
    let mut report = BoundReport::bare(BoundKind::CompletePartite, value, n, r);
    report.edges = Some(BigInt::from(n).pow(r as u32));
    Ok(report)
}

/// Bound for an `r`-uniform `r`-equipartite hypergraph with classes of size
/// `n` and `e` edges: `xbar(g) n^(r-1)` where `g` is the semi-threshold
/// function of largest mass at most `e / n^r`.
pub fn equipartite_bound(r: usize, n: usize, e: &BigInt) -> Result<BoundReport> {
    if r == 0 || n == 0 {
        return Err(invalid("r and n must be positive"));
    }
    let full = BigInt::from(n).pow(r as u32);
    if e.is_negative() || *e > full {
        return Err(invalid(format!("edge count {e} outside [0, {full}]")));
    }
    let lambda = Rational::new(e.clone(), full);
    let g = max_semi_threshold(r, &lambda)?;
    let value = xbar_semi_threshold(&g) * big(BigInt::from(n).pow(r as u32 - 1));
    let mut report = BoundReport::bare(BoundKind::Equipartite, value, n, r);
    report.edges = Some(e.clone());
    report.threshold = Some(g);
    Ok(report)
}

fn check_split(n: usize, r: usize, k: usize) -> Result<()> {
    if r == 0 || r > n {
        return Err(invalid(format!("need 1 <= r <= n, got n={n}, r={r}")));
    }
    if k == 0 || k >= n {
        return Err(invalid(format!("split size k={k} must satisfy 0 < k < n={n}")));
    }
    Ok(())
}

/// `|E_ℓ| = C(n-k, ℓ) C(k, r-ℓ)` for `ℓ = 0..=r`.
pub fn edge_class_sizes(n: usize, r: usize, k: usize) -> Result<Vec<BigInt>> {
    check_split(n, r, k)?;
    Ok(level_sizes(n, r, k))
}

fn level_sizes(n: usize, r: usize, k: usize) -> Vec<BigInt> {
    let (n, r, k) = (n as i64, r as i64, k as i64);
    (0..=r).map(|l| binomial(n - k, l) * binomial(k, r - l)).collect()
}

/// First nonempty level at which the cumulative size reaches half the total.
fn crossing_level(sizes: &[BigInt]) -> usize {
    let total: BigInt = sizes.iter().sum();
    let mut below = BigInt::zero();
    for (l, s) in sizes.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        below += s;
        if &below * 2 >= total {
            return l;
        }
    }
    unreachable!("some level is nonempty when r <= n")
}

/// Level `m(k)` carrying the fractional value of the extremal weighting.
pub fn m_of_k(n: usize, r: usize, k: usize) -> Result<usize> {
    check_split(n, r, k)?;
    Ok(crossing_level(&level_sizes(n, r, k)))
}

/// `(sum_{ℓ<m} |E_ℓ| - sum_{ℓ>m} |E_ℓ|) / |E_m|`, the value forced on level `m`
/// by the zero-sum constraint. Lies in `[-1, 1)`.
pub fn fractional_level_value(n: usize, r: usize, k: usize) -> Result<Rational> {
    check_split(n, r, k)?;
    let sizes = level_sizes(n, r, k);
    let m = crossing_level(&sizes);
    Ok(level_value(&sizes, m))
}

/// Value that level `i` would need for a zero sum with `-1` below and `+1` above.
pub(crate) fn level_value(sizes: &[BigInt], i: usize) -> Rational {
    let below: BigInt = sizes[..i].iter().sum();
    let above: BigInt = sizes[i + 1..].iter().sum();
    Rational::new(below - above, sizes[i].clone())
}

/// `sum_ℓ |m - ℓ| |E_ℓ|`.
fn weighted_distance(sizes: &[BigInt], center: usize) -> BigInt {
    sizes
        .iter()
        .enumerate()
        .map(|(l, s)| s * BigInt::from((center as i64 - l as i64).abs()))
        .sum()
}

/// `chi(k) = sum_ℓ |m(k) - ℓ| |E_ℓ| / max(n-k, k)`.
pub fn chi(n: usize, r: usize, k: usize) -> Result<Rational> {
    check_split(n, r, k)?;
    let sizes = level_sizes(n, r, k);
    let m = crossing_level(&sizes);
    Ok(Rational::new(weighted_distance(&sizes, m), BigInt::from((n - k).max(k))))
}

/// `(argmax_k chi(k), max_k chi(k))` over `0 < k < n`.
///
/// Among maximizers the split closest to `n/2` wins, and between `floor(n/2)`
/// and `ceil(n/2)` the larger one.
pub fn max_chi(n: usize, r: usize) -> Result<(usize, Rational)> {
    if n < 2 {
        return Err(invalid("need n >= 2"));
    }
    let mut best: Option<(usize, Rational)> = None;
    for k in 1..n {
        let v = chi(n, r, k)?;
        let better = match &best {
            None => true,
            Some((bk, bv)) => {
                v > *bv || (v == *bv && (2 * k).abs_diff(n) <= (2 * bk).abs_diff(n))
            }
        };
        if better {
            best = Some((k, v));
        }
    }
    Ok(best.expect("n >= 2"))
}

/// Upper bound on `X(K_n^r)`.
///
/// Evaluated at the split `|N| = ceil(n/2)` as
/// `sum_ℓ |floor(r/2) - ℓ| C(n-k, ℓ) C(k, r-ℓ) / k`. With center `ceil(r/2)`
/// the same sum is only an upper bound on `max_k chi` when `n` and `r` are
/// both odd; that reading is kept in [`BoundReport::literal_value`].
pub fn complete_bound(n: usize, r: usize) -> Result<BoundReport> {
    if n < 2 || r == 0 || r > n {
        return Err(invalid(format!("need n >= 2 and 1 <= r <= n, got n={n}, r={r}")));
    }
    let k = n.div_ceil(2);
    let sizes = level_sizes(n, r, k);
    let center = r / 2;
    let value = Rational::new(weighted_distance(&sizes, center), BigInt::from(k));
    let literal = Rational::new(weighted_distance(&sizes, r.div_ceil(2)), BigInt::from(k));
    let mut report = BoundReport::bare(BoundKind::Complete, value, n, r);
    report.k = Some(k);
    report.m = Some(crossing_level(&sizes));
    report.center = Some(center);
    report.literal_value = Some(literal);
    Ok(report)
}

/// `G(k, s) = sum_ℓ |s - ℓ| |E_ℓ| / (n - k)`.
pub fn g_function(n: usize, r: usize, k: usize, s: usize) -> Result<Rational> {
    check_split(n, r, k)?;
    if s > r {
        return Err(invalid(format!("level s={s} exceeds r={r}")));
    }
    Ok(Rational::new(weighted_distance(&level_sizes(n, r, k), s), BigInt::from(n - k)))
}

/// `G(k+1, s) - G(k, s)` computed directly and through the closed form
/// `s (sum_{ℓ<=s} |E_ℓ| - sum_{ℓ>s} |E_ℓ|) / ((n-k)(n-k-1))`.
pub fn g_difference_identity(n: usize, r: usize, k: usize, s: usize) -> Result<(Rational, Rational)> {
    if k + 1 >= n {
        return Err(invalid(format!("need 0 < k < n-1, got k={k}, n={n}")));
    }
    let direct = g_function(n, r, k + 1, s)? - g_function(n, r, k, s)?;
    let sizes = level_sizes(n, r, k);
    let low: BigInt = sizes[..=s].iter().sum();
    let high: BigInt = sizes[s + 1..].iter().sum();
    let den = BigInt::from((n - k) * (n - k - 1));
    let closed = Rational::new(BigInt::from(s) * (low - high), den);
    Ok((direct, closed))
}

/// `F(k) = G(k, m(k))` is non-decreasing for `0 < k <= floor(n/2)`, and
/// `m(k) - m(k+1)` is 0 or 1 for every `0 < k < n-1`.
///
/// Vacuously true when there is nothing to compare.
pub fn f_monotonicity_check(n: usize, r: usize) -> Result<bool> {
    if r == 0 || r > n {
        return Err(invalid(format!("need 1 <= r <= n, got n={n}, r={r}")));
    }
    if n < 3 {
        return Ok(true);
    }
    let m: Vec<usize> = (1..n).map(|k| m_of_k(n, r, k)).collect::<Result<_>>()?;
    let steps_ok = m.windows(2).all(|w| w[0] == w[1] || w[0] == w[1] + 1);
    let f = |k: usize| g_function(n, r, k, m[k - 1]);
    for k in 1..n / 2 {
        if f(k + 1)? < f(k)? {
            return Ok(false);
        }
    }
    Ok(steps_ok)
}
