//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p zerosum --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

use zerosum::arith::{int, ratio};
use zerosum::bounds::*;
use zerosum::constructions::*;
use zerosum::cube::*;
use zerosum::hypergraph::{imbalances, total_sum, unbalancedness, ZeroSide};
use zerosum::solver::*;
use zerosum::{Hypergraph, Rational, SignPattern, Weighting};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: zerosum::Error) -> String {
    e.to_string()
}

fn graph_case() -> Outcome {
    for n in (2..=100usize).step_by(2) {
        let v = complete_bound(n, 2).map_err(err)?.value;
        ensure(v == ratio(n as i64 - 2, 2), || format!("n={n}: got {v}"))?;
    }
    Ok("complete_bound(n, 2) = n/2 - 1 for even n <= 100".into())
}

fn complete_graph_oracles() -> Outcome {
    let expected = [(3, ratio(1, 2)), (4, int(1)), (6, int(2))];
    for (n, want) in expected {
        let h = Hypergraph::complete(n, 2).map_err(err)?;
        let lp = lp_max(&h).map_err(err)?;
        let bound = complete_bound(n, 2).map_err(err)?.value;
        ensure(lp.value == want && bound == want, || format!("n={n}: lp {} bound {bound}", lp.value))?;
        // the witness is a feasible point reaching the value
        ensure(total_sum(&h, &lp.witness).map_err(err)?.is_zero(), || format!("n={n}: witness not zero-sum"))?;
        ensure(unbalancedness(&h, &lp.witness).map_err(err)? == want, || format!("n={n}: witness value"))?;
        if h.edge_count() % 2 == 0 {
            let e = enumerate_pm1_max(&h).map_err(err)?;
            ensure(e.value <= lp.value, || format!("n={n}: enumeration {} above lp", e.value))?;
        }
    }
    Ok("lp_max(K_n^2) = 1/2, 1, 2 for n = 3, 4, 6".into())
}

fn complete_three_uniform() -> Outcome {
    let h = Hypergraph::complete(6, 3).map_err(err)?;
    let lp = lp_max(&h).map_err(err)?;
    let bound = complete_bound(6, 3).map_err(err)?.value;
    let maj = majority_weighting_complete(6, 3).map_err(err)?;
    ensure(lp.value == int(4) && bound == int(4) && maj.unbalancedness == int(4), || {
        format!("lp {} bound {bound} majority {}", lp.value, maj.unbalancedness)
    })?;
    let e = enumerate_pm1_max(&h).map_err(err)?;
    ensure(e.value <= int(4), || format!("enumeration {}", e.value))?;
    ensure(e.explored == 184_756, || format!("explored {}", e.explored))?;
    Ok(format!("lp = bound = majority = 4, enumeration {} over {} assignments", e.value, e.explored))
}

fn equipartite_tightness() -> Outcome {
    let c = equipartite_majority(3, 2).map_err(err)?;
    let bound = complete_partite_bound(3, 2).map_err(err)?;
    let e = enumerate_pm1_max(&c.hypergraph).map_err(err)?;
    ensure(c.unbalancedness == int(2) && bound == int(2) && e.value == int(2), || {
        format!("majority {} bound {bound} enumeration {}", c.unbalancedness, e.value)
    })?;
    ensure(e.explored == 70, || format!("explored {}", e.explored))?;
    Ok("equipartite majority on K(3;2) = bound = enumeration = 2".into())
}

fn threshold_equality() -> Outcome {
    let mut parts = Vec::new();
    for (r, n, k) in [(2, 4, 2), (3, 4, 3), (3, 4, 1)] {
        let c = equipartite_threshold(r, n, k).map_err(err)?;
        let e = BigInt::from(c.hypergraph.edge_count());
        let bound = equipartite_bound(r, n, &e).map_err(err)?.value;
        ensure(c.is_zero_sum() && c.unbalancedness == bound, || {
            format!("(r,n,k)=({r},{n},{k}): X {} bound {bound}", c.unbalancedness)
        })?;
        parts.push(format!("({r},{n},{k}) X={bound}"));
    }
    Ok(parts.join(", "))
}

fn shifting_suite() -> Outcome {
    let mut rng = common::rng(7);
    let trials = 1000;
    for t in 0..trials {
        let r = rng.random_range(1..=6usize);
        let mu = common::random_measure(&mut rng, r);
        let f = common::zero_mean_function(&mut rng, &mu);
        let i = rng.random_range(0..r);
        let (g, nu) = shift(&f, &mu, i).map_err(err)?;
        let ctx = || format!("trial {t}: r={r} i={i}");
        ensure(expectation(&g, &nu).map_err(err)? == expectation(&f, &mu).map_err(err)?, || {
            format!("{}: expectation changed", ctx())
        })?;
        ensure(abs_expectation(&g, &nu).map_err(err)? <= abs_expectation(&f, &mu).map_err(err)?, || {
            format!("{}: mass grew", ctx())
        })?;
        ensure(xbar(&g, &nu).map_err(err)? >= xbar(&f, &mu).map_err(err)?, || format!("{}: xbar fell", ctx()))?;
        for j in (0..r).filter(|&j| j != i) {
            for s in [1, -1] {
                let before = conditional_expectation(&f, &mu, j, s).map_err(err)?;
                let after = conditional_expectation(&g, &nu, j, s).map_err(err)?;
                ensure(before == after, || format!("{}: conditional on x_{j} = {s} changed", ctx()))?;
            }
        }
    }
    Ok(format!("{trials} instances, r <= 6, seed 7"))
}

fn level_one() -> Outcome {
    let mut rng = common::rng(8);
    let trials = 1000;
    for t in 0..trials {
        let r = rng.random_range(1..=8usize);
        let f = common::random_function(&mut rng, r);
        let u = ProductMeasure::uniform(r).map_err(err)?;
        let c = level_one_correlation(&f, &u).map_err(err)?;
        ensure(c <= level_one_bound(r), || format!("trial {t}: r={r} correlation {c}"))?;
    }
    for r in (1..=9).step_by(2) {
        let maj = semi_threshold_function(&SemiThreshold::new(r, 1, int(1)).map_err(err)?);
        let u = ProductMeasure::uniform(r).map_err(err)?;
        let c = level_one_correlation(&maj, &u).map_err(err)?;
        ensure(c == level_one_bound(r), || format!("majority r={r}: {c}"))?;
    }
    Ok(format!("{trials} random functions, r <= 8; majority equality at odd r <= 9"))
}

fn monotonicity_and_symmetry() -> Outcome {
    let mut cases = 0;
    for r in 2..=8usize {
        for n in r..=30usize {
            let ctx = || format!("n={n} r={r}");
            for k in 1..n {
                let a = chi(n, r, k).map_err(err)?;
                let b = chi(n, r, n - k).map_err(err)?;
                ensure(a == b, || format!("{}: chi({k}) != chi({})", ctx(), n - k))?;
            }
            ensure(f_monotonicity_check(n, r).map_err(err)?, || format!("{}: F or m(k) check", ctx()))?;
            for k in 1..n.saturating_sub(1) {
                for s in 0..=r {
                    let (direct, closed) = g_difference_identity(n, r, k, s).map_err(err)?;
                    ensure(direct == closed, || format!("{}: G identity at k={k} s={s}", ctx()))?;
                }
            }
            let (_, best) = max_chi(n, r).map_err(err)?;
            let bound = complete_bound(n, r).map_err(err)?.value;
            ensure(bound == best, || format!("{}: bound {bound} vs max chi {best}", ctx()))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n, r) pairs with n <= 30, 2 <= r <= 8"))
}

fn semi_threshold_maximizer() -> Outcome {
    let mut rng = common::rng(9);
    let step = ratio(1, 1024);
    for r in 1..=10usize {
        let u = ProductMeasure::uniform(r).map_err(err)?;
        for t in 0..200 {
            let den = rng.random_range(1..=1000i64);
            let num = rng.random_range(0..=den);
            let lambda = ratio(num, den);
            let got = max_semi_threshold(r, &lambda).map_err(err)?;
            let (k, j) = common::grid_semi_threshold(r, num as i128, den as i128);
            let ctx = || format!("r={r} trial {t} lambda={lambda}");
            ensure(got.k() == k, || format!("{}: k {} vs grid {k}", ctx(), got.k()))?;
            ensure((got.beta() - ratio(j, 1024)).abs() <= step, || {
                format!("{}: beta {} vs grid {j}/1024", ctx(), got.beta())
            })?;
            ensure(got.mass() <= lambda, || format!("{}: mass above lambda", ctx()))?;
            let direct = xbar(&semi_threshold_function(&got), &u).map_err(err)?;
            ensure(direct == xbar_semi_threshold(&got), || format!("{}: closed form differs", ctx()))?;
        }
    }
    Ok("200 values of lambda for each r <= 10 against the 1/1024 grid".into())
}

fn level_constant(h: &Hypergraph, f: &Weighting, p: &SignPattern) -> bool {
    let level = |e: &Vec<usize>| e.iter().filter(|&&v| p.is_plus(v)).count();
    let mut seen: Vec<Option<&Rational>> = vec![None; h.r() + 1];
    h.edges().iter().zip(f.values()).all(|(e, v)| match seen[level(e)] {
        Some(prev) => prev == v,
        None => {
            seen[level(e)] = Some(v);
            true
        }
    })
}

fn symmetrization_suite() -> Outcome {
    let mut rng = common::rng(10);
    let graphs = [
        Hypergraph::complete(5, 2).map_err(err)?,
        Hypergraph::complete(6, 2).map_err(err)?,
        Hypergraph::complete_equipartite(3, 2).map_err(err)?,
    ];
    let trials = 500;
    for t in 0..trials {
        let h = &graphs[t % graphs.len()];
        let f = common::zero_sum_weighting(&mut rng, h);
        let x = unbalancedness(h, &f).map_err(err)?;
        let ctx = || format!("trial {t} (n={}, r={})", h.n(), h.r());
        if h.classes().is_none() {
            let p = SignPattern::from_imbalances(&imbalances(h, &f).map_err(err)?, ZeroSide::Plus);
            let g = symmetrize_complete(h, &f, &p).map_err(err)?;
            ensure(total_sum(h, &g).map_err(err)?.is_zero(), || format!("{}: total changed", ctx()))?;
            ensure(level_constant(h, &g, &p), || format!("{}: not class-constant", ctx()))?;
            ensure(unbalancedness(h, &g).map_err(err)? >= x, || format!("{}: X fell", ctx()))?;
        } else {
            let s = symmetrize_partite(h, &f).map_err(err)?;
            ensure(total_sum(&s.ambient, &s.weighting).map_err(err)?.is_zero(), || {
                format!("{}: total changed", ctx())
            })?;
            ensure(unbalancedness(&s.ambient, &s.weighting).map_err(err)? >= x, || format!("{}: X fell", ctx()))?;
            // cube_projection refuses weightings that are not class-constant
            let (cube_f, mu) = cube_projection(&s.ambient, &s.weighting, &s.signs).map_err(err)?;
            ensure(expectation(&cube_f, &mu).map_err(err)?.is_zero(), || format!("{}: E[h] != 0", ctx()))?;
            let after = imbalances(&s.ambient, &s.weighting).map_err(err)?;
            let n = s.ambient.classes().expect("partite")[0].len() as i64;
            let scale = int(n.pow(h.r() as u32 - 1));
            for (i, class) in s.ambient.classes().expect("partite").iter().enumerate() {
                for &v in class {
                    let sign = if s.signs.is_plus(v) { 1 } else { -1 };
                    let ce = conditional_expectation(&cube_f, &mu, i, sign).map_err(err)?;
                    ensure(after[v] == ce * &scale, || format!("{}: vertex {v} imbalance", ctx()))?;
                }
            }
        }
    }
    Ok(format!("{trials} zero-sum weightings on K_5^2, K_6^2, K(3;2), seed 10"))
}

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "graph case exactness", limit: Some(Duration::from_secs(1)), run: graph_case },
        Criterion { id: 2, name: "complete graph oracles", limit: Some(Duration::from_secs(60)), run: complete_graph_oracles },
        Criterion { id: 3, name: "K_6^3 oracles", limit: Some(Duration::from_secs(300)), run: complete_three_uniform },
        Criterion { id: 4, name: "equipartite tightness", limit: Some(Duration::from_secs(1)), run: equipartite_tightness },
        Criterion { id: 5, name: "threshold construction equality", limit: Some(Duration::from_secs(1)), run: threshold_equality },
        Criterion { id: 6, name: "shifting invariants", limit: Some(Duration::from_secs(60)), run: shifting_suite },
        Criterion { id: 7, name: "level-one bound", limit: None, run: level_one },
        Criterion { id: 8, name: "monotonicity and symmetry", limit: Some(Duration::from_secs(60)), run: monotonicity_and_symmetry },
        Criterion { id: 9, name: "semi-threshold maximizer", limit: None, run: semi_threshold_maximizer },
        Criterion { id: 10, name: "symmetrization", limit: None, run: symmetrization_suite },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, c.limit) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS  {:>2} {}: {detail} [{elapsed:.2?}]", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2} {}: {why} [{elapsed:.2?}]", c.id, c.name);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
