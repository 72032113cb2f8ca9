//! Exact oracles for the maximum unbalancedness, and the averaging steps that
//! reduce an arbitrary weighting to a symmetric one.
//!
//! Two independent routes compute the maximum for small instances:
//! [`enumerate_pm1_max`] scans balanced `±1` weightings and [`lp_max`] solves
//! one exact linear program per vertex sign pattern over `[-1, 1]` weightings.
//! [`exact_complete_max`] uses the level structure of extremal weightings on
//! complete hypergraphs instead and scales to large `n`.

mod enumerate;
mod lp;
pub mod simplex;
mod symmetrize;

pub use enumerate::{enumerate_pm1_max, ENUMERATION_MAX_EDGES};
pub use lp::{lp_max, solve_pattern, LP_MAX_VERTICES};
pub use symmetrize::{cube_projection, symmetrize_complete, symmetrize_partite, PartiteSymmetrization};

use crate::arith::Rational;
use crate::bounds::max_chi;
use crate::constructions::optimal_weighting_complete;
use crate::error::Result;
use crate::hypergraph::{Hypergraph, Weighting};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Enumeration,
    LinearProgram,
    Reduced,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Enumeration => "enumerate",
            Method::LinearProgram => "lp",
            Method::Reduced => "reduced",
        }
    }
}

/// Comparison of a reduced result against the LP oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub lp_value: Rational,
    pub agrees: bool,
}

/// Maximum unbalancedness over a class of zero-sum weightings, with a witness.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub value: Rational,
    pub witness: Weighting,
    pub method: Method,
    /// Candidates examined: assignments, sign patterns or vertex splits.
    pub explored: u64,
    pub cross_check: Option<CrossCheck>,
}

/// Largest odd `n` for which [`exact_complete_max`] also runs [`lp_max`].
pub const REDUCED_LP_CHECK_MAX_N: usize = 7;

/// `max_k chi(n, r, k)` with the level weighting that attains it.
///
/// Every `0 < k < n` is examined. For odd `n <= REDUCED_LP_CHECK_MAX_N` the
/// value is also compared against [`lp_max`] on `K_n^r`.
pub fn exact_complete_max(n: usize, r: usize) -> Result<OracleResult> {
    let (_, value) = max_chi(n, r)?;
    let witness = optimal_weighting_complete(n, r)?.weighting;
    let cross_check = if n % 2 == 1 && n <= REDUCED_LP_CHECK_MAX_N {
        let lp = lp_max(&Hypergraph::complete(n, r)?)?;
        Some(CrossCheck { agrees: lp.value == value, lp_value: lp.value })
    } else {
        None
    };
    Ok(OracleResult {
        value,
        witness,
        method: Method::Reduced,
        explored: (n - 1) as u64,
        cross_check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};
    use crate::hypergraph::unbalancedness;

    #[test]
    fn reduced_examples() {
        let res = exact_complete_max(4, 2).unwrap();
        assert_eq!(res.value, int(1));
        assert!(res.cross_check.is_none());
        let h = Hypergraph::complete(6, 3).unwrap();
        let res = exact_complete_max(6, 3).unwrap();
        assert_eq!(res.value, int(4));
        assert_eq!(unbalancedness(&h, &res.witness).unwrap(), int(4));
        let res = exact_complete_max(3, 2).unwrap();
        assert_eq!(res.value, ratio(1, 2));
        assert_eq!(res.cross_check, Some(CrossCheck { lp_value: ratio(1, 2), agrees: true }));
    }
}
