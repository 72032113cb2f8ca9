//! Averaging a weighting over edge classes, and reading a class-constant
//! weighting on a complete equipartite hypergraph as a cube function.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;

use crate::arith::{int, Rational};
use crate::cube::{CubeFunction, ProductMeasure};
use crate::error::{Error, Result};
use crate::hypergraph::{imbalances, Hypergraph, SignPattern, Weighting, ZeroSide};

/// Average `f` over the classes `E_j = {A : |A ∩ P| = j}` of a complete hypergraph.
///
/// Class sums are preserved, so the total is too. When `P` is the set of
/// vertices with positive imbalance, `X` does not decrease.
pub fn symmetrize_complete(h: &Hypergraph, f: &Weighting, p: &SignPattern) -> Result<Weighting> {
    if !h.is_complete() {
        return Err(Error::NotComplete);
    }
    if p.len() != h.n() {
        return Err(Error::InvalidParameters("sign pattern length differs from n".into()));
    }
    if f.len() != h.edge_count() {
        return Err(Error::InvalidWeighting("length differs from edge count".into()));
    }
    let level = |e: &Vec<usize>| e.iter().filter(|&&v| p.is_plus(v)).count();
    let levels: Vec<usize> = h.edges().iter().map(level).collect();
    average_by_key(f, &levels)
}

fn average_by_key<K: Ord + Clone>(f: &Weighting, keys: &[K]) -> Result<Weighting> {
    let mut sums: BTreeMap<K, (Rational, i64)> = BTreeMap::new();
    for (k, v) in keys.iter().zip(f.values()) {
        let entry = sums.entry(k.clone()).or_insert((Rational::zero(), 0));
        entry.0 += v;
        entry.1 += 1;
    }
    let values = keys
        .iter()
        .map(|k| {
            let (s, c) = &sums[k];
            s / int(*c)
        })
        .collect();
    Weighting::new(values)
}

/// Result of [`symmetrize_partite`].
#[derive(Debug, Clone)]
pub struct PartiteSymmetrization {
    /// The complete equipartite hypergraph on the classes of the input.
    pub ambient: Hypergraph,
    /// Averaged weighting on `ambient`, constant on every class of edges.
    pub weighting: Weighting,
    /// `+1` on vertices whose imbalance under the input weighting is `>= 0`.
    pub signs: SignPattern,
}

/// Extends `f` by zero to the complete equipartite hypergraph on the same
/// classes and averages it over edge classes `A ~ B iff phi(A) = phi(B)`, where
/// `phi(A)_i = +1` iff the vertex of `A` in class `i` has nonnegative imbalance.
pub fn symmetrize_partite(h: &Hypergraph, f: &Weighting) -> Result<PartiteSymmetrization> {
    if h.equipartite_class_size().is_none() {
        return Err(Error::NotEquipartite);
    }
    let classes = h.classes().expect("checked").to_vec();
    let signs = SignPattern::from_imbalances(&imbalances(h, f)?, ZeroSide::Plus);
    let edges = classes.iter().map(|c| c.iter().copied()).multi_cartesian_product().collect();
    let ambient = Hypergraph::new(h.n(), h.r(), edges, Some(classes))?;

    let mut extended = vec![Rational::zero(); ambient.edge_count()];
    for (e, v) in h.edges().iter().zip(f.values()) {
        let idx = ambient.edge_index(e).expect("edge of H is a transversal");
        extended[idx] = v.clone();
    }
    let keys: Vec<usize> = ambient.edges().iter().map(|e| cube_point(&ambient, &signs, e)).collect();
    let weighting = average_by_key(&Weighting::new(extended)?, &keys)?;
    Ok(PartiteSymmetrization { ambient, weighting, signs })
}

/// `phi(A)` as a bitmask: bit `i` set iff the vertex of `A` in class `i` is `+`.
fn cube_point(h: &Hypergraph, signs: &SignPattern, edge: &[usize]) -> usize {
    let classes = h.classes().expect("partite");
    edge.iter()
        .map(|&v| {
            let i = classes.iter().position(|c| c.binary_search(&v).is_ok()).expect("covered");
            if signs.is_plus(v) {
                1 << i
            } else {
                0
            }
        })
        .sum()
}

/// Reads a class-constant weighting on a complete equipartite hypergraph as
/// `h: {-1,1}^r -> [-1,1]` with `h(phi(A)) = f(A)`, under the product measure
/// `p_i = |C_i^+| / |C_i|`.
///
/// Cube points with no edge (a class with an empty side) get `h = 0`; they
/// have measure zero.
pub fn cube_projection(
    k: &Hypergraph,
    f: &Weighting,
    signs: &SignPattern,
) -> Result<(CubeFunction, ProductMeasure)> {
    if !k.is_complete_equipartite() {
        return Err(Error::NotEquipartite);
    }
    if f.len() != k.edge_count() || signs.len() != k.n() {
        return Err(Error::InvalidWeighting("length mismatch".into()));
    }
    let r = k.r();
    let mut table: Vec<Option<Rational>> = vec![None; 1 << r];
    for (e, v) in k.edges().iter().zip(f.values()) {
        let x = cube_point(k, signs, e);
        match &table[x] {
            Some(prev) if prev != v => return Err(Error::NotClassConstant),
            _ => table[x] = Some(v.clone()),
        }
    }
    let h = CubeFunction::new(r, table.into_iter().map(|v| v.unwrap_or_else(Rational::zero)).collect())?;
    let p = k
        .classes()
        .expect("partite")
        .iter()
        .map(|c| {
            let plus = c.iter().filter(|&&v| signs.is_plus(v)).count();
            Rational::new((plus as i64).into(), (c.len() as i64).into())
        })
        .collect();
    Ok((h, ProductMeasure::new(p)?))
}
