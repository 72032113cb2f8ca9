//! Seeded random instances shared by the integration suites.
//!
//! All generators draw from `ChaCha8Rng`, so a seed reproduces an instance
//! on every platform.

#![allow(dead_code)]

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zerosum::arith::{int, ratio};
use zerosum::cube::{expectation, CubeFunction, ProductMeasure};
use zerosum::{Hypergraph, Rational, Weighting};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over `{a/d : -d <= a <= d}` with `d` drawn from `1..=12`.
pub fn unit_rational(rng: &mut ChaCha8Rng) -> Rational {
    let d = rng.random_range(1..=12i64);
    ratio(rng.random_range(-d..=d), d)
}

/// Probability strictly inside `(0, 1)`.
pub fn open_probability(rng: &mut ChaCha8Rng) -> Rational {
    let d = rng.random_range(2..=12i64);
    ratio(rng.random_range(1..d), d)
}

/// Scales down whichever of the positive and negative parts is heavier so the
/// weighted sum becomes exactly zero. Values stay in `[-1, 1]`.
pub fn balance(values: &mut [Rational], weights: &[Rational]) {
    let pos: Rational = values.iter().zip(weights).filter(|(v, _)| v.is_positive()).map(|(v, w)| v * w).sum();
    let neg: Rational = -values.iter().zip(weights).filter(|(v, _)| v.is_negative()).map(|(v, w)| v * w).sum::<Rational>();
    if pos.is_zero() || neg.is_zero() {
        values.iter_mut().for_each(|v| *v = Rational::zero());
    } else if pos > neg {
        let s = &neg / &pos;
        values.iter_mut().filter(|v| v.is_positive()).for_each(|v| *v *= &s);
    } else {
        let s = &pos / &neg;
        values.iter_mut().filter(|v| v.is_negative()).for_each(|v| *v *= &s);
    }
}

pub fn zero_sum_weighting(rng: &mut ChaCha8Rng, h: &Hypergraph) -> Weighting {
    let mut values: Vec<Rational> = (0..h.edge_count()).map(|_| unit_rational(rng)).collect();
    let ones = vec![int(1); values.len()];
    balance(&mut values, &ones);
    Weighting::new(values).unwrap()
}

pub fn random_measure(rng: &mut ChaCha8Rng, r: usize) -> ProductMeasure {
    ProductMeasure::new((0..r).map(|_| open_probability(rng)).collect()).unwrap()
}

pub fn random_function(rng: &mut ChaCha8Rng, r: usize) -> CubeFunction {
    CubeFunction::new(r, (0..1 << r).map(|_| unit_rational(rng)).collect()).unwrap()
}

/// Random `f` with `E_mu[f] = 0`.
pub fn zero_mean_function(rng: &mut ChaCha8Rng, mu: &ProductMeasure) -> CubeFunction {
    let r = mu.arity();
    let mut values: Vec<Rational> = (0..1 << r).map(|_| unit_rational(rng)).collect();
    let weights: Vec<Rational> = (0..1usize << r)
        .map(|x| zerosum::cube::measure_of_point(mu, &zerosum::cube::point_signs(x, r)).unwrap())
        .collect();
    balance(&mut values, &weights);
    let f = CubeFunction::new(r, values).unwrap();
    debug_assert!(expectation(&f, mu).unwrap().is_zero());
    f
}

fn choose(n: i64, k: i64) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Brute force over semi-thresholds `(k, j/1024)` in integer arithmetic:
/// the best `(k, j)` with `E|g| <= lambda_num / lambda_den`, by `X̄`.
/// Ties go to the smaller `k`, then the smaller `j`.
pub fn grid_semi_threshold(r: usize, lambda_num: i128, lambda_den: i128) -> (usize, i64) {
    let ri = r as i64;
    let scale = (1i128 << r) * 1024;
    let mut best: Option<(usize, i64, i128)> = None;
    for k in (r % 2..=r).step_by(2) {
        let half = (k as i64 + ri) / 2;
        let tail: i128 = (half + 1..=ri).map(|i| choose(ri, i)).sum();
        let steps = if k == 0 { 0 } else { 1024 };
        for j in 0..=steps {
            let mass = 2 * 1024 * tail + 2 * j as i128 * choose(ri, half);
            if mass * lambda_den > lambda_num * scale {
                break;
            }
            let x = 2 * (1024 - j as i128) * choose(ri - 1, half) + 2 * j as i128 * choose(ri - 1, half - 1);
            if best.is_none_or(|b| x > b.2) {
                best = Some((k, j, x));
            }
        }
    }
    let (k, j, _) = best.expect("k = r is always feasible");
    (k, j)
}
