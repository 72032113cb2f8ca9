use crate::arith::int;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Weighting};

use super::{Method, OracleResult};

/// Largest edge count [`enumerate_pm1_max`] accepts.
pub const ENUMERATION_MAX_EDGES: usize = 24;

/// Exact maximum of `X(f)` over balanced `±1` weightings (equal numbers of
/// `+1` and `-1`), by scanning all `C(|E|, |E|/2)` of them.
///
/// The witness is the lexicographically smallest maximizer over the edge
/// order, with `-1 < +1`.
pub fn enumerate_pm1_max(h: &Hypergraph) -> Result<OracleResult> {
    let e = h.edge_count();
    if e % 2 == 1 {
        return Err(Error::NoFeasibleWeighting(format!(
            "{e} edges: a ±1 weighting cannot sum to zero"
        )));
    }
    if e > ENUMERATION_MAX_EDGES {
        return Err(Error::InstanceTooLarge {
            what: "edge count",
            actual: e,
            limit: ENUMERATION_MAX_EDGES,
        });
    }
    let incidence: Vec<u32> = (0..h.n())
        .map(|v| h.incident(v).iter().fold(0u32, |m, &i| m | 1 << i))
        .collect();
    let degree: Vec<i64> = incidence.iter().map(|m| m.count_ones() as i64).collect();
    let score = |mask: u32| -> i64 {
        incidence
            .iter()
            .zip(&degree)
            .map(|(inc, d)| (2 * (mask & inc).count_ones() as i64 - d).abs())
            .min()
            .unwrap_or(0)
    };

    let half = e / 2;
    let mut mask: u32 = if half == 0 { 0 } else { (1u32 << half) - 1 };
    let limit: u64 = 1u64 << e;
    let mut best = (score(mask), mask);
    let mut explored = 1u64;
    if half > 0 {
        loop {
            // Gosper's hack: next mask with the same popcount
            let low = mask & mask.wrapping_neg();
            let ripple = mask as u64 + low as u64;
            if ripple >= limit {
                break;
            }
            let ripple = ripple as u32;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
            explored += 1;
            let s = score(mask);
            if s > best.0 || (s == best.0 && lex_less(mask, best.1)) {
                best = (s, mask);
            }
        }
    }

    let witness = Weighting::from_signs((0..e).map(|i| best.1 >> i & 1 == 1));
    Ok(OracleResult {
        value: int(best.0),
        witness,
        method: Method::Enumeration,
        explored,
        cross_check: None,
    })
}

/// Lexicographic order of the sign vectors, edge 0 most significant, `-1 < +1`.
fn lex_less(a: u32, b: u32) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) == 0
}
