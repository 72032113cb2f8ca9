use num_traits::One;
use rayon::prelude::*;

use crate::arith::{int, Rational};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Weighting};

use super::simplex::{Constraint, LinearProgram, LpOutcome, Relation};
use super::{Method, OracleResult};

/// Largest vertex count [`lp_max`] accepts (it solves `2^(n-1)` programs).
pub const LP_MAX_VERTICES: usize = 16;

/// Exact maximum of `X(f)` over zero-sum `f: E -> [-1, 1]`.
///
/// For each sign pattern `sigma` with vertex 0 fixed to `+1` this solves
/// `max t` subject to `sigma(v) imbalance(v) >= t`, `sum f = 0`,
/// `-1 <= f <= 1`, `t >= 0`, with `f = g - 1` so every variable is
/// nonnegative. `f = 0, t = 0` is always feasible, so each program has a
/// finite optimum. Ties between patterns go to the lexicographically
/// smallest witness.
pub fn lp_max(h: &Hypergraph) -> Result<OracleResult> {
    let n = h.n();
    if n > LP_MAX_VERTICES {
        return Err(Error::InstanceTooLarge {
            what: "vertex count",
            actual: n,
            limit: LP_MAX_VERTICES,
        });
    }
    let patterns = 1u64 << (n - 1);
    let best = (0..patterns)
        .into_par_iter()
        .map(|mask| {
            let signs: Vec<i8> = (0..n)
                .map(|v| if v == 0 || mask >> (v - 1) & 1 == 1 { 1 } else { -1 })
                .collect();
            solve_pattern(h, &signs)
        })
        .reduce_with(pick)
        .expect("at least one pattern");
    let (value, values) = best;
    Ok(OracleResult {
        value,
        witness: Weighting::new(values)?,
        method: Method::LinearProgram,
        explored: patterns,
        cross_check: None,
    })
}

type Candidate = (Rational, Vec<Rational>);

/// Larger value wins; equal values keep the lexicographically smaller witness.
/// Associative and commutative, so any reduction order gives the same result.
fn pick(a: Candidate, b: Candidate) -> Candidate {
    match a.0.cmp(&b.0) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => {
            if a.1 <= b.1 {
                a
            } else {
                b
            }
        }
    }
}

/// Maximum of `min_v signs[v] * imbalance(v)` for one pattern.
pub fn solve_pattern(h: &Hypergraph, signs: &[i8]) -> Candidate {
    let e = h.edge_count();
    let t = e;
    let mut constraints = Vec::with_capacity(h.n() + e + 1);
    for (v, &s) in signs.iter().enumerate() {
        let mut coeffs: Vec<(usize, Rational)> =
            h.incident(v).iter().map(|&i| (i, int(s as i64))).collect();
        coeffs.push((t, int(-1)));
        // s * sum (g - 1) - t >= 0
        constraints.push(Constraint {
            coeffs,
            rel: Relation::Ge,
            rhs: int(s as i64 * h.degree(v) as i64),
        });
    }
    if e > 0 {
        constraints.push(Constraint {
            coeffs: (0..e).map(|i| (i, Rational::one())).collect(),
            rel: Relation::Eq,
            rhs: int(e as i64),
        });
    }
    for i in 0..e {
        constraints.push(Constraint {
            coeffs: vec![(i, Rational::one())],
            rel: Relation::Le,
            rhs: int(2),
        });
    }
    let lp = LinearProgram {
        vars: e + 1,
        objective: vec![(t, Rational::one())],
        constraints,
    };
    match lp.solve() {
        LpOutcome::Optimal { x, value } => {
            let f = x[..e].iter().map(|g| g - Rational::one()).collect();
            (value, f)
        }
        // f = 0, t = 0 is feasible and t <= max degree
        other => unreachable!("pattern program must be feasible and bounded, got {other:?}"),
    }
}
