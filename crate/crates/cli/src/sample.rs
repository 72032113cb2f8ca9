//! Seeded random instances for the verification suites.
//!
//! Every draw comes from `ChaCha8Rng::seed_from_u64(seed)`, so a seed names
//! the same instances on every platform.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zerosum::arith::{int, ratio};
use zerosum::cube::{measure_of_point, point_signs, CubeFunction, ProductMeasure};
use zerosum::{Hypergraph, Rational, Weighting};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a/d` with `d` uniform in `1..=12` and `a` uniform in `-d..=d`.
pub fn unit_rational(rng: &mut ChaCha8Rng) -> Rational {
    let d = rng.random_range(1..=12i64);
    ratio(rng.random_range(-d..=d), d)
}

/// `a/d` with `d` uniform in `2..=12` and `a` uniform in `1..d`.
pub fn open_probability(rng: &mut ChaCha8Rng) -> Rational {
    let d = rng.random_range(2..=12i64);
    ratio(rng.random_range(1..d), d)
}

/// Shrinks the heavier signed part so that `sum values * weights = 0`.
fn balance(values: &mut [Rational], weights: &[Rational]) {
    let part = |positive: bool| -> Rational {
        values
            .iter()
            .zip(weights)
            .filter(|(v, _)| if positive { v.is_positive() } else { v.is_negative() })
            .map(|(v, w)| (v * w).abs())
            .sum()
    };
    let (pos, neg) = (part(true), part(false));
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
    Weighting::new(values).expect("balanced values stay in [-1, 1]")
}

pub fn measure(rng: &mut ChaCha8Rng, r: usize) -> ProductMeasure {
    ProductMeasure::new((0..r).map(|_| open_probability(rng)).collect()).expect("valid probabilities")
}

pub fn function(rng: &mut ChaCha8Rng, r: usize) -> CubeFunction {
    CubeFunction::new(r, (0..1 << r).map(|_| unit_rational(rng)).collect()).expect("values in [-1, 1]")
}

/// Random `f` with `E_mu[f] = 0`.
pub fn zero_mean_function(rng: &mut ChaCha8Rng, mu: &ProductMeasure) -> CubeFunction {
    let r = mu.arity();
    let mut values: Vec<Rational> = (0..1 << r).map(|_| unit_rational(rng)).collect();
    let weights: Vec<Rational> = (0..1usize << r)
        .map(|x| measure_of_point(mu, &point_signs(x, r)).expect("arity matches"))
        .collect();
    balance(&mut values, &weights);
    CubeFunction::new(r, values).expect("values in [-1, 1]")
}
