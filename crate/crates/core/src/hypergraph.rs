//! Uniform hypergraphs, edge weightings and vertex imbalances.
//!
//! Everything here is exact: weights are [`Rational`]s and no floating point
//! is involved. The unbalancedness of a weighting `f` is
//! `X(f) = min_v |sum_{A ∋ v} f(A)|`.

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::arith::{binomial, in_unit_interval, Rational};
use crate::error::{invalid, Error, Result};

/// An `r`-uniform hypergraph on vertices `0..n`.
///
/// Edges are stored as strictly increasing vertex lists, sorted
/// lexicographically and deduplicated, so a [`Weighting`] can be indexed by
/// edge position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
    classes: Option<Vec<Vec<usize>>>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Validates and canonicalizes a hypergraph.
    ///
    /// Vertex ids inside each edge are sorted and duplicate edges are dropped.
    /// When `classes` is given it must partition `0..n` into exactly `r`
    /// blocks, each meeting every edge once.
    pub fn new(
        n: usize,
        r: usize,
        edges: Vec<Vec<usize>>,
        classes: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(invalid("n and r must be positive"));
        }
        if r > n {
            return Err(invalid(format!("uniformity r={r} exceeds vertex count n={n}")));
        }
        let mut canon = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if e.len() != r {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} has {} vertices, expected {r}",
                    e.len()
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!("edge {e:?} repeats a vertex")));
            }
            if e[r - 1] >= n {
                return Err(Error::InvalidHypergraph(format!("edge {e:?} has a vertex >= {n}")));
            }
            canon.push(e);
        }
        canon.sort();
        canon.dedup();

        let classes = match classes {
            None => None,
            Some(mut blocks) => {
                if blocks.len() != r {
                    return Err(Error::InvalidHypergraph(format!(
                        "expected {r} classes, got {}",
                        blocks.len()
                    )));
                }
                let mut owner = vec![usize::MAX; n];
                for (i, block) in blocks.iter_mut().enumerate() {
                    block.sort_unstable();
                    for &v in block.iter() {
                        if v >= n || owner[v] != usize::MAX {
                            return Err(Error::InvalidHypergraph(format!(
                                "vertex {v} out of range or in two classes"
                            )));
                        }
                        owner[v] = i;
                    }
                }
                if owner.contains(&usize::MAX) {
                    return Err(Error::InvalidHypergraph("classes do not cover all vertices".into()));
                }
                for e in &canon {
                    let mut seen = vec![false; r];
                    for &v in e {
                        if std::mem::replace(&mut seen[owner[v]], true) {
                            return Err(Error::InvalidHypergraph(format!(
                                "edge {e:?} meets class {} twice",
                                owner[v]
                            )));
                        }
                    }
                }
                Some(blocks)
            }
        };

        let mut incidence = vec![Vec::new(); n];
        for (idx, e) in canon.iter().enumerate() {
            for &v in e {
                incidence[v].push(idx);
            }
        }
        Ok(Self { n, r, edges: canon, classes, incidence })
    }

    /// The complete `r`-uniform hypergraph `K_n^r`, edges in lexicographic order.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        if r == 0 || r > n {
            return Err(invalid(format!("complete hypergraph needs 1 <= r <= n, got n={n}, r={r}")));
        }
        let edges = (0..n).combinations(r).collect();
        Self::new(n, r, edges, None)
    }

    /// The complete `r`-partite `r`-uniform hypergraph with `r` consecutive
    /// classes of size `n` (`rn` vertices, `n^r` edges).
    pub fn complete_equipartite(r: usize, n: usize) -> Result<Self> {
        if r == 0 || n == 0 {
            return Err(invalid("complete equipartite hypergraph needs r >= 1 and n >= 1"));
        }
        let classes: Vec<Vec<usize>> = (0..r).map(|i| (i * n..(i + 1) * n).collect()).collect();
        let edges = classes.iter().map(|c| c.iter().copied()).multi_cartesian_product().collect();
        Self::new(r * n, r, edges, Some(classes))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn classes(&self) -> Option<&[Vec<usize>]> {
        self.classes.as_deref()
    }

    /// Indices of the edges containing `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// Vertices lying in no edge. Their imbalance is always 0, which forces `X = 0`.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.incidence[v].is_empty()).collect()
    }

    /// `true` iff every `r`-subset of the vertices is an edge.
    pub fn is_complete(&self) -> bool {
        binomial(self.n as i64, self.r as i64) == self.edges.len().into()
    }

    /// Common class size when the hypergraph carries `r` classes of equal size.
    pub fn equipartite_class_size(&self) -> Option<usize> {
        let classes = self.classes.as_ref()?;
        let size = classes[0].len();
        classes.iter().all(|c| c.len() == size).then_some(size)
    }

    /// `true` iff equipartite and every transversal is an edge.
    pub fn is_complete_equipartite(&self) -> bool {
        match self.equipartite_class_size() {
            Some(size) => (size as u128).checked_pow(self.r as u32) == Some(self.edges.len() as u128),
            None => false,
        }
    }

    /// Position of `edge` (in canonical form) in the edge list.
    pub fn edge_index(&self, edge: &[usize]) -> Option<usize> {
        self.edges.binary_search_by(|e| e.as_slice().cmp(edge)).ok()
    }
}

/// One value in `[-1, 1]` per edge, indexed by edge position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weighting {
    values: Vec<Rational>,
}

impl Weighting {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some((i, v)) = values.iter().enumerate().find(|(_, v)| !in_unit_interval(v)) {
            return Err(Error::InvalidWeighting(format!("value {v} at edge {i} is outside [-1, 1]")));
        }
        Ok(Self { values })
    }

    pub fn zeros(len: usize) -> Self {
        Self { values: vec![Rational::zero(); len] }
    }

    /// Builds a `±1` weighting; `true` maps to `+1`.
    pub fn from_signs(signs: impl IntoIterator<Item = bool>) -> Self {
        let values = signs
            .into_iter()
            .map(|s| if s { crate::arith::int(1) } else { crate::arith::int(-1) })
            .collect();
        Self { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn negated(&self) -> Self {
        Self { values: self.values.iter().map(|v| -v).collect() }
    }

    fn check(&self, h: &Hypergraph) -> Result<()> {
        if self.values.len() != h.edge_count() {
            return Err(Error::InvalidWeighting(format!(
                "{} values for {} edges",
                self.values.len(),
                h.edge_count()
            )));
        }
        Ok(())
    }
}

/// Whether a vertex with imbalance exactly 0 counts as `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroSide {
    Plus,
    Minus,
}

/// A `±1` label per vertex, i.e. a vertex partition `P ∪ N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignPattern {
    signs: Vec<i8>,
}

impl SignPattern {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(invalid("sign pattern entries must be +1 or -1"));
        }
        Ok(Self { signs })
    }

    /// `+1` on vertices with positive imbalance; zero goes to `zero`.
    pub fn from_imbalances(imbalances: &[Rational], zero: ZeroSide) -> Self {
        let signs = imbalances
            .iter()
            .map(|b| {
                if b.is_positive() || (b.is_zero() && zero == ZeroSide::Plus) {
                    1
                } else {
                    -1
                }
            })
            .collect();
        Self { signs }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn is_plus(&self, v: usize) -> bool {
        self.signs[v] > 0
    }

    pub fn plus_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s > 0).count()
    }
}

/// `sum_{A ∋ v} f(A)`.
pub fn vertex_imbalance(h: &Hypergraph, f: &Weighting, v: usize) -> Result<Rational> {
    f.check(h)?;
    if v >= h.n() {
        return Err(invalid(format!("vertex {v} out of range")));
    }
    Ok(h.incident(v).iter().map(|&i| &f.values[i]).sum())
}

/// Imbalances of every vertex.
pub fn imbalances(h: &Hypergraph, f: &Weighting) -> Result<Vec<Rational>> {
    f.check(h)?;
    let mut acc = vec![Rational::zero(); h.n()];
    for (e, w) in h.edges().iter().zip(&f.values) {
        if w.is_zero() {
            continue;
        }
        for &v in e {
            acc[v] += w;
        }
    }
    Ok(acc)
}

/// `X(f) = min_v |imbalance(v)|`. Isolated vertices make this 0.
pub fn unbalancedness(h: &Hypergraph, f: &Weighting) -> Result<Rational> {
    Ok(imbalances(h, f)?
        .into_iter()
        .map(|b| b.abs())
        .min()
        .unwrap_or_else(Rational::zero))
}

pub fn total_sum(h: &Hypergraph, f: &Weighting) -> Result<Rational> {
    f.check(h)?;
    Ok(f.values.iter().sum())
}
