//! Property suites behind `zerosum verify`.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use serde_json::{json, Value};

use zerosum::arith::{format_ratio, int};
use zerosum::bounds::{
    chi, complete_bound, complete_partite_bound, equipartite_bound, f_monotonicity_check, g_difference_identity,
    max_chi,
};
use zerosum::constructions::{
    equipartite_majority, equipartite_threshold, majority_weighting_complete, optimal_weighting_complete,
};
use zerosum::cube::{
    abs_expectation, conditional_expectation, expectation, shift, shift_to_uniform, xbar, CubeFunction,
    ProductMeasure,
};
use zerosum::hypergraph::{imbalances, total_sum, unbalancedness, ZeroSide};
use zerosum::solver::{cube_projection, enumerate_pm1_max, lp_max, symmetrize_complete, symmetrize_partite};
use zerosum::solver::{ENUMERATION_MAX_EDGES, LP_MAX_VERTICES};
use zerosum::{Hypergraph, Rational, SignPattern, Weighting};

use crate::args::{Suite, VerifyArgs};
use crate::error::{CliError, Result};
use crate::report::Record;
use crate::sample;

/// One named property with the number of cases tried and the first failure.
#[derive(Debug)]
pub struct Check {
    pub name: &'static str,
    pub cases: u64,
    pub counterexample: Option<Value>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, counterexample: None }
    }

    fn record(&mut self, ok: bool, example: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(example());
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn ratios(vs: &[Rational]) -> Value {
    vs.iter().map(format_ratio).collect()
}

fn cube_instance(trial: usize, f: &CubeFunction, mu: &ProductMeasure, i: usize) -> Value {
    json!({"trial": trial, "r": f.arity(), "coordinate": i, "p": ratios(mu.p()), "f": ratios(f.table())})
}

pub fn shifts(seed: u64, trials: usize, r_max: usize) -> Result<Vec<Check>> {
    if r_max == 0 || r_max > 12 {
        return Err(CliError::Input(format!("shift suite needs 1 <= r-max <= 12, got {r_max}")));
    }
    let mut rng = sample::rng(seed);
    let mut mean = Check::new("expectation preserved");
    let mut mass = Check::new("abs-expectation non-increasing");
    let mut bar = Check::new("xbar non-decreasing");
    let mut cond = Check::new("off-coordinate conditionals preserved");
    let mut full = Check::new("shift to uniform");
    for t in 0..trials {
        let r = rng.random_range(1..=r_max);
        let mu = sample::measure(&mut rng, r);
        let f = sample::zero_mean_function(&mut rng, &mu);
        let i = rng.random_range(0..r);
        let (g, nu) = shift(&f, &mu, i)?;
        let example = || cube_instance(t, &f, &mu, i);
        mean.record(expectation(&g, &nu)? == expectation(&f, &mu)?, example);
        mass.record(abs_expectation(&g, &nu)? <= abs_expectation(&f, &mu)?, example);
        bar.record(xbar(&g, &nu)? >= xbar(&f, &mu)?, example);
        let mut same = true;
        for j in (0..r).filter(|&j| j != i) {
            for s in [1, -1] {
                same &= conditional_expectation(&g, &nu, j, s)? == conditional_expectation(&f, &mu, j, s)?;
            }
        }
        cond.record(same, example);
        let (u, unif) = shift_to_uniform(&f, &mu)?;
        full.record(
            unif.is_uniform() && expectation(&u, &unif)?.is_zero() && xbar(&u, &unif)? >= xbar(&f, &mu)?,
            example,
        );
    }
    Ok(vec![mean, mass, bar, cond, full])
}

pub fn monotonicity(n_max: usize, r_max: usize) -> Result<Vec<Check>> {
    let mut sym = Check::new("chi(k) = chi(n-k)");
    let mut mono = Check::new("F non-decreasing, m(k) - m(k+1) in {0,1}");
    let mut ident = Check::new("G difference closed form");
    let mut best = Check::new("complete bound = max chi");
    for r in 2..=r_max {
        for n in r..=n_max {
            for k in 1..n {
                sym.record(chi(n, r, k)? == chi(n, r, n - k)?, || json!({"n": n, "r": r, "k": k}));
            }
            mono.record(f_monotonicity_check(n, r)?, || json!({"n": n, "r": r}));
            for k in 1..n.saturating_sub(1) {
                for s in 0..=r {
                    let (direct, closed) = g_difference_identity(n, r, k, s)?;
                    ident.record(direct == closed, || {
                        json!({"n": n, "r": r, "k": k, "s": s,
                               "direct": format_ratio(&direct), "closed": format_ratio(&closed)})
                    });
                }
            }
            let bound = complete_bound(n, r)?.value;
            let (k, value) = max_chi(n, r)?;
            best.record(bound == value, || {
                json!({"n": n, "r": r, "bound": format_ratio(&bound), "max_chi": format_ratio(&value), "k": k})
            });
        }
    }
    Ok(vec![sym, mono, ident, best])
}

fn level_constant(h: &Hypergraph, f: &Weighting, p: &SignPattern) -> bool {
    let level = |e: &Vec<usize>| e.iter().filter(|&&v| p.is_plus(v)).count();
    let mut seen: Vec<Option<&Rational>> = vec![None; h.r() + 1];
    h.edges().iter().zip(f.values()).all(|(e, v)| {
        let slot = &mut seen[level(e)];
        match slot {
            Some(prev) => *prev == v,
            None => {
                *slot = Some(v);
                true
            }
        }
    })
}

pub fn symmetry(seed: u64, trials: usize) -> Result<Vec<Check>> {
    let mut rng = sample::rng(seed);
    let graphs = [
        Hypergraph::complete(5, 2)?,
        Hypergraph::complete(6, 2)?,
        Hypergraph::complete_equipartite(3, 2)?,
    ];
    let mut total = Check::new("total sum preserved");
    let mut constant = Check::new("constant on edge classes");
    let mut grows = Check::new("X non-decreasing");
    let mut projection = Check::new("imbalance = n^(r-1) E[h | x_i]");
    for t in 0..trials {
        let h = &graphs[t % graphs.len()];
        let f = sample::zero_sum_weighting(&mut rng, h);
        let x = unbalancedness(h, &f)?;
        let example = || json!({"trial": t, "n": h.n(), "r": h.r(), "f": ratios(f.values())});
        if h.classes().is_none() {
            let p = SignPattern::from_imbalances(&imbalances(h, &f)?, ZeroSide::Plus);
            let g = symmetrize_complete(h, &f, &p)?;
            total.record(total_sum(h, &g)?.is_zero(), example);
            constant.record(level_constant(h, &g, &p), example);
            grows.record(unbalancedness(h, &g)? >= x, example);
        } else {
            let s = symmetrize_partite(h, &f)?;
            total.record(total_sum(&s.ambient, &s.weighting)?.is_zero(), example);
            grows.record(unbalancedness(&s.ambient, &s.weighting)? >= x, example);
            let projected = cube_projection(&s.ambient, &s.weighting, &s.signs);
            constant.record(projected.is_ok(), example);
            let Ok((cube_f, mu)) = projected else { continue };
            let after = imbalances(&s.ambient, &s.weighting)?;
            let classes = s.ambient.classes().expect("partite");
            let scale = int((classes[0].len() as i64).pow(h.r() as u32 - 1));
            let mut same = expectation(&cube_f, &mu)?.is_zero();
            for (i, class) in classes.iter().enumerate() {
                for &v in class {
                    let sign = if s.signs.is_plus(v) { 1 } else { -1 };
                    same &= after[v] == conditional_expectation(&cube_f, &mu, i, sign)? * &scale;
                }
            }
            projection.record(same, example);
        }
    }
    Ok(vec![total, constant, grows, projection])
}

pub fn oracle_vs_bound(n_max: usize, r_max: Option<usize>) -> Result<Vec<Check>> {
    if n_max > LP_MAX_VERTICES {
        return Err(CliError::Core(zerosum::Error::InstanceTooLarge {
            what: "vertex count",
            actual: n_max,
            limit: LP_MAX_VERTICES,
        }));
    }
    let mut sound = Check::new("lp <= complete bound");
    let mut tight = Check::new("lp = complete bound for even n");
    let mut sandwich = Check::new("enumeration <= lp");
    for n in 2..=n_max {
        for r in 1..=r_max.map_or(n, |m| m.min(n)) {
            let h = Hypergraph::complete(n, r)?;
            let lp = lp_max(&h)?.value;
            let bound = complete_bound(n, r)?.value;
            let example = || json!({"n": n, "r": r, "lp": format_ratio(&lp), "bound": format_ratio(&bound)});
            sound.record(lp <= bound, example);
            if n % 2 == 0 {
                tight.record(lp == bound, example);
            }
            let e = h.edge_count();
            if e % 2 == 0 && e <= ENUMERATION_MAX_EDGES {
                let en = enumerate_pm1_max(&h)?.value;
                sandwich.record(en <= lp, || json!({"n": n, "r": r, "enumeration": format_ratio(&en)}));
            }
        }
    }
    Ok(vec![sound, tight, sandwich])
}

pub fn constructions(n_max: usize, r_max: usize) -> Result<Vec<Check>> {
    let mut majority = Check::new("majority meets complete bound (even n)");
    let mut optimal = Check::new("level weighting reaches max chi");
    let mut partite = Check::new("equipartite majority meets partite bound");
    let mut threshold = Check::new("threshold construction meets equipartite bound");
    for n in 2..=n_max {
        for r in 1..=r_max.min(n) {
            if n % 2 == 0 {
                let c = majority_weighting_complete(n, r)?;
                let b = complete_bound(n, r)?.value;
                majority.record(c.is_zero_sum() && c.unbalancedness == b, || {
                    json!({"n": n, "r": r, "x": format_ratio(&c.unbalancedness), "bound": format_ratio(&b)})
                });
            }
            let c = optimal_weighting_complete(n, r)?;
            let (_, best) = max_chi(n, r)?;
            optimal.record(c.is_zero_sum() && c.unbalancedness == best, || {
                json!({"n": n, "r": r, "x": format_ratio(&c.unbalancedness), "max_chi": format_ratio(&best)})
            });
        }
    }
    for r in (1..=r_max.min(5)).step_by(2) {
        for n in (2..=n_max.min(8)).step_by(2) {
            let c = equipartite_majority(r, n)?;
            let b = complete_partite_bound(r, n)?;
            partite.record(c.is_zero_sum() && c.unbalancedness == b, || {
                json!({"r": r, "n": n, "x": format_ratio(&c.unbalancedness), "bound": format_ratio(&b)})
            });
        }
    }
    for n in [4, 8].into_iter().filter(|&n| n <= n_max) {
        for r in 1..=r_max.min(4) {
            for k in (1..=r).filter(|k| (r - k) % 2 == 0) {
                let c = equipartite_threshold(r, n, k)?;
                let b = equipartite_bound(r, n, &BigInt::from(c.hypergraph.edge_count()))?.value;
                threshold.record(c.is_zero_sum() && c.unbalancedness == b, || {
                    json!({"r": r, "n": n, "k": k, "x": format_ratio(&c.unbalancedness), "bound": format_ratio(&b)})
                });
            }
        }
    }
    Ok(vec![majority, optimal, partite, threshold])
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Shifts => "shifts",
        Suite::Monotonicity => "monotonicity",
        Suite::Symmetry => "symmetry",
        Suite::OracleVsBound => "oracle-vs-bound",
        Suite::Constructions => "constructions",
    }
}

/// Runs a suite. Returns one record per check and the number of failed checks.
pub fn run(args: &VerifyArgs) -> Result<(Vec<Record>, usize)> {
    let checks = match args.suite {
        Suite::Shifts => shifts(args.seed, args.trials.unwrap_or(1000), args.r_max.unwrap_or(6))?,
        Suite::Monotonicity => monotonicity(args.n_max.unwrap_or(30), args.r_max.unwrap_or(8))?,
        Suite::Symmetry => symmetry(args.seed, args.trials.unwrap_or(500))?,
        Suite::OracleVsBound => oracle_vs_bound(args.n_max.unwrap_or(6), args.r_max)?,
        Suite::Constructions => constructions(args.n_max.unwrap_or(12), args.r_max.unwrap_or(5))?,
    };
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let records = checks
        .into_iter()
        .map(|c| {
            Record::new()
                .with("suite", suite_name(args.suite))
                .with("check", c.name)
                .with("passed", c.passed())
                .with("cases", c.cases)
                .with("counterexample", c.counterexample.unwrap_or(Value::Null))
        })
        .collect();
    Ok((records, failed))
}
