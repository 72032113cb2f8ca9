//! Explicit zero-sum weightings that meet the bounds in [`crate::bounds`].

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{int, Rational};
use crate::bounds::{self, BoundReport};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::{total_sum, unbalancedness, Hypergraph, SignPattern, Weighting};

/// Number of `+` vertices minus number of `-` vertices of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeWeight(pub i64);

impl EdgeWeight {
    pub fn of(signs: &SignPattern, edge: &[usize]) -> Self {
        EdgeWeight(edge.iter().map(|&v| signs.signs()[v] as i64).sum())
    }
}

/// A hypergraph, a weighting on it and the vertex split used to build it,
/// together with the values the weighting actually reaches.
#[derive(Debug, Clone)]
pub struct Construction {
    pub name: &'static str,
    pub hypergraph: Hypergraph,
    pub weighting: Weighting,
    pub signs: SignPattern,
    pub unbalancedness: Rational,
    pub total: Rational,
    /// Bound the construction is meant to meet, with its attainment flag filled in.
    pub bound: Option<BoundReport>,
    pub warnings: Vec<String>,
}

impl Construction {
    fn evaluate(
        name: &'static str,
        hypergraph: Hypergraph,
        weighting: Weighting,
        signs: SignPattern,
    ) -> Result<Self> {
        let x = unbalancedness(&hypergraph, &weighting)?;
        let total = total_sum(&hypergraph, &weighting)?;
        let mut warnings = Vec::new();
        if !total.is_zero() {
            warnings.push(format!("weighting is not zero-sum (total {total})"));
        }
        if !hypergraph.isolated_vertices().is_empty() {
            warnings.push("hypergraph has isolated vertices, X is 0".to_string());
        }
        Ok(Self {
            name,
            hypergraph,
            weighting,
            signs,
            unbalancedness: x,
            total,
            bound: None,
            warnings,
        })
    }

    pub fn is_zero_sum(&self) -> bool {
        self.total.is_zero()
    }

    fn with_bound(mut self, mut bound: BoundReport) -> Self {
        bound.attained = Some(bounds::Attainment {
            attained: self.is_zero_sum() && self.unbalancedness == bound.value,
            certificate: self.name.to_string(),
            achieved: self.unbalancedness.clone(),
        });
        self.bound = Some(bound);
        self
    }
}

fn first_half_plus(n: usize, plus: usize) -> SignPattern {
    SignPattern::new((0..n).map(|v| if v < plus { 1 } else { -1 }).collect()).expect("±1 entries")
}

/// `K_n^r` with `V_1` the first `ceil(n/2)` vertices: `f(A) = sign(2|A ∩ V_1| - r)`.
///
/// Zero-sum for even `n`. For odd `n` the total is reported, not assumed.
pub fn majority_weighting_complete(n: usize, r: usize) -> Result<Construction> {
    if n < 2 {
        return Err(invalid("majority construction needs n >= 2"));
    }
    let h = Hypergraph::complete(n, r)?;
    let signs = first_half_plus(n, n.div_ceil(2));
    let values = h
        .edges()
        .iter()
        .map(|e| int(EdgeWeight::of(&signs, e).0.signum()))
        .collect();
    let mut c = Construction::evaluate("majority", h, Weighting::new(values)?, signs)?;
    if n % 2 == 1 {
        c.warnings.push(format!("odd n={n}: split {}/{} is unbalanced", n.div_ceil(2), n / 2));
    }
    let bound = bounds::complete_bound(n, r)?;
    Ok(c.with_bound(bound))
}

/// Complete equipartite `K(r; n)` with each class split half `+`, half `-`,
/// and `f(A) = +1` iff `A` has more `+` vertices than `-` vertices.
pub fn equipartite_majority(r: usize, n: usize) -> Result<Construction> {
    if r.is_multiple_of(2) || n % 2 == 1 {
        return Err(Error::RegimeViolation(format!(
            "equipartite majority needs odd r and even n, got r={r}, n={n}"
        )));
    }
    let h = Hypergraph::complete_equipartite(r, n)?;
    let signs = class_split(&h);
    let values = h
        .edges()
        .iter()
        .map(|e| int(EdgeWeight::of(&signs, e).0.signum()))
        .collect();
    let c = Construction::evaluate("equipartite-majority", h, Weighting::new(values)?, signs)?;
    Ok(c.with_bound(bounds::complete_partite_report(r, n)?))
}

/// First half of every class is `+`.
fn class_split(h: &Hypergraph) -> SignPattern {
    let mut signs = vec![-1i8; h.n()];
    for class in h.classes().expect("equipartite") {
        for &v in &class[..class.len() / 2] {
            signs[v] = 1;
        }
    }
    SignPattern::new(signs).expect("±1 entries")
}

/// The subhypergraph of `K(r; n)` keeping only edges with `|w_A| >= k`,
/// weighted by `sign(w_A)`.
pub fn equipartite_threshold(r: usize, n: usize, k: usize) -> Result<Construction> {
    if !n.is_multiple_of(4) || n == 0 {
        return Err(Error::RegimeViolation(format!("threshold construction needs 4 | n, got n={n}")));
    }
    if k == 0 || k > r || !(r - k).is_multiple_of(2) {
        return Err(Error::RegimeViolation(format!(
            "threshold k={k} must satisfy 0 < k <= r={r} and k ≡ r (mod 2)"
        )));
    }
    let full = Hypergraph::complete_equipartite(r, n)?;
    let signs = class_split(&full);
    let mut edges = Vec::new();
    let mut values = Vec::new();
    for e in full.edges() {
        let w = EdgeWeight::of(&signs, e).0;
        if w.unsigned_abs() as usize >= k {
            edges.push(e.clone());
            values.push(int(w.signum()));
        }
    }
    let classes = full.classes().map(|c| c.to_vec());
    let e_count = BigInt::from(edges.len());
    let h = Hypergraph::new(full.n(), r, edges, classes)?;
    let c = Construction::evaluate("equipartite-threshold", h, Weighting::new(values)?, signs)?;
    let bound = bounds::equipartite_bound(r, n, &e_count)?;
    Ok(c.with_bound(bound))
}

/// The level weighting on `K_n^r` that attains `max_k chi(n, r, k)`.
///
/// `P` is the first `n - k*` vertices; edges meeting `P` in fewer than `m`
/// vertices get `-1`, more than `m` get `+1`, and level `m` gets the value
/// that makes the total zero.
pub fn optimal_weighting_complete(n: usize, r: usize) -> Result<Construction> {
    let (k, _) = bounds::max_chi(n, r)?;
    level_weighting(n, r, k)
}

/// The level weighting for a fixed split `|N| = k`.
pub fn level_weighting(n: usize, r: usize, k: usize) -> Result<Construction> {
    let sizes = bounds::edge_class_sizes(n, r, k)?;
    let m = bounds::m_of_k(n, r, k)?;
    let frac = bounds::level_value(&sizes, m);
    let h = Hypergraph::complete(n, r)?;
    let signs = first_half_plus(n, n - k);
    let values = h
        .edges()
        .iter()
        .map(|e| {
            let level = e.iter().filter(|&&v| v < n - k).count();
            match level.cmp(&m) {
                std::cmp::Ordering::Less => int(-1),
                std::cmp::Ordering::Equal => frac.clone(),
                std::cmp::Ordering::Greater => int(1),
            }
        })
        .collect();
    let c = Construction::evaluate("level-optimal", h, Weighting::new(values)?, signs)?;
    let bound = bounds::complete_bound(n, r)?;
    Ok(c.with_bound(bound))
}
