//! `bound`, `construct` and `solve`.

use num_bigint::BigInt;
use serde_json::Value;

use zerosum::arith::binomial;
use zerosum::bounds::{self, BoundKind as Kind, BoundReport};
use zerosum::constructions::{self, Construction};
use zerosum::solver::{self, OracleResult, ENUMERATION_MAX_EDGES, LP_MAX_VERTICES};
use zerosum::{Error, Hypergraph};

use crate::args::{BoundArgs, BoundKind, ConstructArgs, ConstructKind, SolveArgs, SolveMethod};
use crate::error::{CliError, Result};
use crate::files;
use crate::report::{decimal12, Record};

/// Bounds are certified by a construction only up to this many edges.
pub const CERTIFY_MAX_EDGES: u64 = 100_000;

fn within_budget(edges: &BigInt) -> bool {
    *edges <= BigInt::from(CERTIFY_MAX_EDGES)
}

fn power(n: usize, r: usize) -> BigInt {
    BigInt::from(n).pow(r as u32)
}

pub fn bound_record(b: &BoundReport) -> Record {
    let mut rec = Record::new()
        .with("kind", b.kind.name())
        .with("n", b.n)
        .with("r", b.r)
        .ratio("value", &b.value);
    match b.kind {
        Kind::Complete => {
            rec = rec
                .with("k", b.k)
                .with("m", b.m)
                .with("center", b.center)
                .opt_ratio("literal_value", b.literal_value.as_ref());
        }
        Kind::Equipartite => {
            let t = b.threshold.as_ref();
            rec = rec
                .with("edges", b.edges.as_ref().map(|e| e.to_string()))
                .with("threshold_k", t.map(|t| t.k()))
                .opt_ratio("threshold_beta", t.map(|t| t.beta()));
        }
        Kind::CompletePartite => {
            rec = rec.with("edges", b.edges.as_ref().map(|e| e.to_string()));
        }
    }
    let a = b.attained.as_ref();
    rec.with("attained", a.map(|a| a.attained))
        .with("certificate", a.map(|a| a.certificate.clone()))
        .opt_ratio("achieved", a.map(|a| &a.achieved))
}

pub fn bound(args: &BoundArgs) -> Result<Vec<Record>> {
    let (n, r) = (args.n, args.r);
    let report = match args.kind {
        BoundKind::Complete => {
            let edges = binomial(n as i64, r as i64);
            if r <= n && n >= 2 && within_budget(&edges) {
                constructions::optimal_weighting_complete(n, r)?.bound.expect("set by construction")
            } else {
                bounds::complete_bound(n, r)?
            }
        }
        BoundKind::CompletePartite => {
            if r % 2 == 1 && n % 2 == 0 && within_budget(&power(n, r)) {
                constructions::equipartite_majority(r, n)?.bound.expect("set by construction")
            } else {
                bounds::complete_partite_report(r, n)?
            }
        }
        BoundKind::Equipartite => {
            let e = args.e.as_ref().ok_or_else(|| CliError::Input("equipartite bound needs --e".into()))?;
            let certified = if n % 4 == 0 && r > 0 && within_budget(&power(n, r)) {
                threshold_matching(r, n, e)?
            } else {
                None
            };
            match certified {
                Some(c) => c.bound.expect("set by construction"),
                None => bounds::equipartite_bound(r, n, e)?,
            }
        }
        BoundKind::BaloghSmyth => {
            let d = args.d.as_ref().ok_or_else(|| CliError::Input("balogh-smyth bound needs --D".into()))?;
            let alpha = args.alpha.clone().unwrap_or_default();
            let v = bounds::balogh_smyth_bound(r, n, d, &alpha)?;
            let rec = Record::new()
                .with("kind", "balogh-smyth")
                .with("n", n)
                .with("r", r)
                .ratio("D", d)
                .ratio("alpha", &alpha)
                .with("value", decimal12(v));
            return Ok(vec![rec]);
        }
    };
    Ok(vec![bound_record(&report)])
}

/// The threshold construction whose edge count is exactly `e`, if any.
fn threshold_matching(r: usize, n: usize, e: &BigInt) -> Result<Option<Construction>> {
    for k in (1..=r).filter(|k| (r - k).is_multiple_of(2)) {
        let c = constructions::equipartite_threshold(r, n, k)?;
        if BigInt::from(c.hypergraph.edge_count()) == *e {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

pub fn construction_record(c: &Construction) -> Record {
    let b = c.bound.as_ref();
    Record::new()
        .with("construction", c.name)
        .with("n", c.hypergraph.n())
        .with("r", c.hypergraph.r())
        .with("edges", c.hypergraph.edge_count())
        .ratio("unbalancedness", &c.unbalancedness)
        .ratio("sum", &c.total)
        .with("zero_sum", c.is_zero_sum())
        .with("bound_kind", b.map(|b| b.kind.name()))
        .opt_ratio("bound", b.map(|b| &b.value))
        .with("attained", b.and_then(|b| b.attained.as_ref()).map(|a| a.attained))
        .with("warnings", c.warnings.clone())
}

pub fn construct(args: &ConstructArgs) -> Result<Vec<Record>> {
    let (n, r) = (args.n, args.r);
    let c = match args.kind {
        ConstructKind::Majority => constructions::majority_weighting_complete(n, r)?,
        ConstructKind::Optimal => constructions::optimal_weighting_complete(n, r)?,
        ConstructKind::EquipartiteMajority => constructions::equipartite_majority(r, n)?,
        ConstructKind::EquipartiteThreshold => {
            let k = args.k.ok_or_else(|| CliError::Input("equipartite-threshold needs --k".into()))?;
            constructions::equipartite_threshold(r, n, k)?
        }
    };
    if let Some(prefix) = &args.emit {
        files::emit(prefix, Some(&c.hypergraph), &c.weighting)?;
    }
    Ok(vec![construction_record(&c)])
}

fn pair(v: &[usize]) -> (usize, usize) {
    (v[0], v[1])
}

fn too_large(what: &'static str, actual: &BigInt, limit: usize) -> CliError {
    let actual = usize::try_from(actual).unwrap_or(usize::MAX);
    CliError::Core(Error::InstanceTooLarge { what, actual, limit })
}

/// Rejects generated instances the chosen oracle would refuse, before building them.
fn precheck(method: SolveMethod, vertices: usize, edges: &BigInt) -> Result<()> {
    match method {
        SolveMethod::Enumerate if *edges > BigInt::from(ENUMERATION_MAX_EDGES) => {
            Err(too_large("edge count", edges, ENUMERATION_MAX_EDGES))
        }
        SolveMethod::Lp if vertices > LP_MAX_VERTICES => {
            Err(too_large("vertex count", &BigInt::from(vertices), LP_MAX_VERTICES))
        }
        _ => Ok(()),
    }
}

pub fn oracle_record(h: Option<&Hypergraph>, n: usize, r: usize, res: &OracleResult) -> Record {
    let check = res.cross_check.as_ref();
    Record::new()
        .with("method", res.method.name())
        .with("n", n)
        .with("r", r)
        .with("edges", h.map_or(Value::Null, |h| h.edge_count().into()))
        .ratio("value", &res.value)
        .with("explored", res.explored)
        .ratios("witness", res.witness.values())
        .opt_ratio("lp_value", check.map(|c| &c.lp_value))
        .with("agrees", check.map(|c| c.agrees))
}

pub fn solve(args: &SolveArgs) -> Result<Vec<Record>> {
    let method = args.method;
    let h = if let Some(v) = &args.complete {
        let (n, r) = pair(v);
        if method == SolveMethod::Reduced {
            let res = solver::exact_complete_max(n, r)?;
            if let Some(prefix) = &args.emit {
                files::emit(prefix, Some(&Hypergraph::complete(n, r)?), &res.witness)?;
            }
            return Ok(vec![oracle_record(None, n, r, &res)]);
        }
        precheck(method, n, &binomial(n as i64, r as i64))?;
        Hypergraph::complete(n, r)?
    } else if let Some(v) = &args.equipartite {
        let (r, n) = pair(v);
        precheck(method, r * n, &power(n, r))?;
        Hypergraph::complete_equipartite(r, n)?
    } else {
        let path = args.file.as_ref().expect("clap requires a source");
        files::hypergraph_from_str(&files::read(path)?)?
    };
    let res = match method {
        SolveMethod::Enumerate => solver::enumerate_pm1_max(&h)?,
        SolveMethod::Lp => solver::lp_max(&h)?,
        SolveMethod::Reduced => {
            if !h.is_complete() {
                return Err(Error::NotComplete.into());
            }
            solver::exact_complete_max(h.n(), h.r())?
        }
    };
    if let Some(prefix) = &args.emit {
        files::emit(prefix, Some(&h), &res.witness)?;
    }
    Ok(vec![oracle_record(Some(&h), h.n(), h.r(), &res)])
}
