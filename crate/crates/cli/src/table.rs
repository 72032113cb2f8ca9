//! `zerosum table`: one row per instance of a parameter grid.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::Value;

use zerosum::arith::{binomial, format_ratio};
use zerosum::bounds::{balogh_smyth_bound, complete_bound, complete_partite_bound, equipartite_bound, max_chi};
use zerosum::constructions::{equipartite_majority, optimal_weighting_complete};
use zerosum::solver::lp_max;
use zerosum::{Hypergraph, Rational};

use crate::args::{Family, TableArgs};
use crate::commands::CERTIFY_MAX_EDGES;
use crate::error::{CliError, Result};
use crate::report::{decimal12, Record};

fn ratio_or_null(v: Option<&Rational>) -> Value {
    v.map_or(Value::Null, |v| format_ratio(v).into())
}

fn complete_row(n: usize, r: usize, lp_limit: usize) -> Result<Record> {
    let bound = complete_bound(n, r)?;
    let (k, best) = max_chi(n, r)?;
    let edges = binomial(n as i64, r as i64);
    let achieved = if edges <= BigInt::from(CERTIFY_MAX_EDGES) {
        Some(optimal_weighting_complete(n, r)?.unbalancedness)
    } else {
        None
    };
    let lp = if n <= lp_limit { Some(lp_max(&Hypergraph::complete(n, r)?)?.value) } else { None };
    Ok(Record::new()
        .with("n", n)
        .with("r", r)
        .with("edges", edges.to_string())
        .ratio("complete_bound", &bound.value)
        .opt_ratio("literal_value", bound.literal_value.as_ref())
        .ratio("max_chi", &best)
        .with("argmax_k", k)
        .with("construction", ratio_or_null(achieved.as_ref()))
        .with("attained", achieved.as_ref().map(|x| *x == bound.value))
        .with("lp", ratio_or_null(lp.as_ref()))
        .with("lp_equal", lp.as_ref().map(|x| *x == bound.value)))
}

fn equipartite_row(r: usize, n: usize, args: &TableArgs) -> Result<Record> {
    let edges = BigInt::from(n).pow(r as u32);
    let partite = complete_partite_bound(r, n)?;
    let semi = equipartite_bound(r, n, &edges)?.value;
    let bs = balogh_smyth_bound(r, n, &args.d, &args.alpha)?;
    let achieved = if r % 2 == 1 && n.is_multiple_of(2) && edges <= BigInt::from(CERTIFY_MAX_EDGES) {
        Some(equipartite_majority(r, n)?.unbalancedness)
    } else {
        None
    };
    let lp = if r * n <= args.lp_max_vertices {
        Some(lp_max(&Hypergraph::complete_equipartite(r, n)?)?.value)
    } else {
        None
    };
    Ok(Record::new()
        .with("r", r)
        .with("n", n)
        .with("edges", edges.to_string())
        .ratio("complete_partite_bound", &partite)
        .ratio("equipartite_bound", &semi)
        .with("balogh_smyth", decimal12(bs))
        .with("majority", ratio_or_null(achieved.as_ref()))
        .with("attained", achieved.as_ref().map(|x| *x == partite))
        .with("lp", ratio_or_null(lp.as_ref()))
        .with("lp_equal", lp.as_ref().map(|x| *x == partite)))
}

/// Rows are computed in parallel and emitted in grid order.
pub fn run(args: &TableArgs) -> Result<Vec<Record>> {
    if args.n_min > args.n_max || args.r_min > args.r_max || args.r_min == 0 || args.n_min == 0 {
        return Err(CliError::Input("empty or invalid sweep grid".into()));
    }
    let grid: Vec<(usize, usize)> = match args.family {
        Family::Complete => (args.n_min.max(2)..=args.n_max)
            .flat_map(|n| (args.r_min..=args.r_max.min(n)).map(move |r| (n, r)))
            .collect(),
        Family::Equipartite => (args.r_min..=args.r_max)
            .flat_map(|r| (args.n_min..=args.n_max).map(move |n| (r, n)))
            .collect(),
    };
    grid.into_par_iter()
        .map(|(a, b)| match args.family {
            Family::Complete => complete_row(a, b, args.lp_max_vertices),
            Family::Equipartite => equipartite_row(a, b, args),
        })
        .collect()
}
