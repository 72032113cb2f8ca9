//! Functions on the discrete cube `{-1,1}^r` under product measures.
//!
//! Points are bitmasks: bit `i` set means `x_i = +1`. Tables are dense, so the
//! arity is capped at [`MAX_ARITY`].

use num_traits::{One, Signed, Zero};

use crate::arith::{big, binomial, in_unit_interval, int, ratio, Rational};
use crate::error::{invalid, Error, Result};

pub const MAX_ARITY: usize = 24;

/// Sign vector of a point, `+1` where the bit is set.
pub fn point_signs(point: usize, r: usize) -> Vec<i8> {
    (0..r).map(|i| if point >> i & 1 == 1 { 1 } else { -1 }).collect()
}

/// Inverse of [`point_signs`].
pub fn point_from_signs(x: &[i8]) -> usize {
    x.iter().enumerate().filter(|(_, &s)| s > 0).map(|(i, _)| 1 << i).sum()
}

/// `|x| = sum_i x_i`.
pub fn coordinate_sum(point: usize, r: usize) -> i64 {
    2 * (point.count_ones() as i64) - r as i64
}

fn check_arity(r: usize) -> Result<()> {
    if r == 0 || r > MAX_ARITY {
        return Err(invalid(format!("arity must be in 1..={MAX_ARITY}, got {r}")));
    }
    Ok(())
}

/// Product measure with `P(x_i = +1) = p_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductMeasure {
    p: Vec<Rational>,
}

impl ProductMeasure {
    pub fn new(p: Vec<Rational>) -> Result<Self> {
        check_arity(p.len())?;
        if p.iter().any(|q| q.is_negative() || *q > Rational::one()) {
            return Err(invalid("probabilities must lie in [0, 1]"));
        }
        Ok(Self { p })
    }

    pub fn uniform(r: usize) -> Result<Self> {
        Self::new(vec![ratio(1, 2); r])
    }

    pub fn arity(&self) -> usize {
        self.p.len()
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn is_uniform(&self) -> bool {
        self.p.iter().all(|q| *q == ratio(1, 2))
    }

    fn side(&self, i: usize, sign: i8) -> Rational {
        if sign > 0 {
            self.p[i].clone()
        } else {
            Rational::one() - &self.p[i]
        }
    }

    /// Mass of every point, indexed by bitmask.
    fn point_masses(&self) -> Vec<Rational> {
        let mut w = vec![Rational::one()];
        for q in &self.p {
            let not_q = Rational::one() - q;
            let mut next = Vec::with_capacity(w.len() * 2);
            next.extend(w.iter().map(|m| m * &not_q));
            next.extend(w.iter().map(|m| m * q));
            // next is indexed with the new coordinate as the high bit
            w = next;
        }
        w
    }
}

/// A table of `2^r` values in `[-1, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeFunction {
    r: usize,
    table: Vec<Rational>,
}

impl CubeFunction {
    pub fn new(r: usize, table: Vec<Rational>) -> Result<Self> {
        check_arity(r)?;
        if table.len() != 1 << r {
            return Err(invalid(format!("table has {} entries, expected {}", table.len(), 1usize << r)));
        }
        if table.iter().any(|v| !in_unit_interval(v)) {
            return Err(invalid("cube function values must lie in [-1, 1]"));
        }
        Ok(Self { r, table })
    }

    pub fn from_fn(r: usize, mut f: impl FnMut(usize) -> Rational) -> Result<Self> {
        check_arity(r)?;
        Self::new(r, (0..1usize << r).map(&mut f).collect())
    }

    pub fn constant(r: usize, c: Rational) -> Result<Self> {
        Self::from_fn(r, |_| c.clone())
    }

    pub fn arity(&self) -> usize {
        self.r
    }

    pub fn table(&self) -> &[Rational] {
        &self.table
    }

    pub fn value(&self, point: usize) -> &Rational {
        &self.table[point]
    }

    /// `true` iff `f(x) = f(x^i)` for all `x`, where `x^i` flips coordinate `i`.
    pub fn is_symmetric_in(&self, i: usize) -> bool {
        (0..self.table.len()).all(|x| self.table[x] == self.table[x ^ (1 << i)])
    }
}

fn check_pair(f: &CubeFunction, mu: &ProductMeasure) -> Result<()> {
    if f.arity() != mu.arity() {
        return Err(invalid(format!("arity mismatch: function {} vs measure {}", f.arity(), mu.arity())));
    }
    Ok(())
}

/// `mu(x) = prod_i (p_i if x_i = +1 else 1 - p_i)`.
pub fn measure_of_point(mu: &ProductMeasure, x: &[i8]) -> Result<Rational> {
    if x.len() != mu.arity() {
        return Err(invalid("sign vector length does not match the measure"));
    }
    Ok(x.iter().enumerate().map(|(i, &s)| mu.side(i, s)).product())
}

pub fn expectation(f: &CubeFunction, mu: &ProductMeasure) -> Result<Rational> {
    check_pair(f, mu)?;
    Ok(mu.point_masses().iter().zip(&f.table).map(|(m, v)| m * v).sum())
}

pub fn abs_expectation(f: &CubeFunction, mu: &ProductMeasure) -> Result<Rational> {
    check_pair(f, mu)?;
    Ok(mu.point_masses().iter().zip(&f.table).map(|(m, v)| m * v.abs()).sum())
}

/// `E_mu[f | x_i = sign]`.
pub fn conditional_expectation(
    f: &CubeFunction,
    mu: &ProductMeasure,
    i: usize,
    sign: i8,
) -> Result<Rational> {
    check_pair(f, mu)?;
    if i >= f.arity() {
        return Err(invalid(format!("coordinate {i} out of range")));
    }
    let side = mu.side(i, sign);
    if side.is_zero() {
        return Err(Error::DegenerateMeasure { coordinate: i, sign });
    }
    let want = sign > 0;
    let joint: Rational = mu
        .point_masses()
        .iter()
        .zip(&f.table)
        .enumerate()
        .filter(|(x, _)| (x >> i & 1 == 1) == want)
        .map(|(_, (m, v))| m * v)
        .sum();
    Ok(joint / side)
}

/// `min_i min(E[f | x_i = 1], -E[f | x_i = -1])`. Signed: may be negative.
pub fn xbar(f: &CubeFunction, mu: &ProductMeasure) -> Result<Rational> {
    check_pair(f, mu)?;
    let r = f.arity();
    let mut joint = vec![[Rational::zero(), Rational::zero()]; r];
    for (x, (m, v)) in mu.point_masses().iter().zip(&f.table).enumerate() {
        if v.is_zero() {
            continue;
        }
        let w = m * v;
        for (i, slot) in joint.iter_mut().enumerate() {
            slot[x >> i & 1] += &w;
        }
    }
    let mut best: Option<Rational> = None;
    for (i, [minus, plus]) in joint.into_iter().enumerate() {
        for (sign, sum) in [(1i8, plus), (-1, -minus)] {
            let side = mu.side(i, sign);
            if side.is_zero() {
                return Err(Error::DegenerateMeasure { coordinate: i, sign });
            }
            let v = sum / side;
            best = Some(match best {
                Some(b) => b.min(v),
                None => v,
            });
        }
    }
    Ok(best.expect("arity >= 1"))
}

/// `E_mu[f * sum_i x_i]`.
pub fn level_one_correlation(f: &CubeFunction, mu: &ProductMeasure) -> Result<Rational> {
    check_pair(f, mu)?;
    let r = f.arity();
    Ok(mu
        .point_masses()
        .iter()
        .zip(&f.table)
        .enumerate()
        .map(|(x, (m, v))| m * v * int(coordinate_sum(x, r)))
        .sum())
}

/// Maximum of [`level_one_correlation`] under the uniform measure over all
/// `f` with `|f| <= 1`: `2r C(r-1, floor(r/2)) / 2^r`, attained by majority.
pub fn level_one_bound(r: usize) -> Rational {
    let r = r as i64;
    big(binomial(r - 1, r / 2) * 2 * r) / big(num_bigint::BigInt::from(1u8) << r)
}

/// Parameters `(r, k, beta)` of a semi-threshold function.
///
/// The function is `1` above level `k` of `|x|`, `beta` at `k`, `0` strictly
/// between `-k` and `k`, and odd overall. `k` has the parity of `r`, and
/// `k = 0` forces `beta = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiThreshold {
    r: usize,
    k: usize,
    beta: Rational,
}

impl SemiThreshold {
    pub fn new(r: usize, k: usize, beta: Rational) -> Result<Self> {
        check_arity(r)?;
        if k > r || !(r - k).is_multiple_of(2) {
            return Err(invalid(format!("threshold k={k} must satisfy 0 <= k <= r={r} and k ≡ r (mod 2)")));
        }
        if beta.is_negative() || beta > Rational::one() {
            return Err(invalid("beta must lie in [0, 1]"));
        }
        if k == 0 && !beta.is_zero() {
            return Err(invalid("k = 0 requires beta = 0"));
        }
        Ok(Self { r, k, beta })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// Number of `+1` coordinates of a point on level `|x| = k`.
    fn upper_level(&self) -> i64 {
        (self.k + self.r) as i64 / 2
    }

    /// Closed form of `E_{mu_1/2}|g|`.
    pub fn mass(&self) -> Rational {
        let r = self.r as i64;
        let top = self.upper_level();
        let beyond: num_bigint::BigInt = (top + 1..=r).map(|j| binomial(r, j)).sum();
        let at = if self.k == 0 { Rational::zero() } else { &self.beta * big(binomial(r, top)) };
        (big(beyond) + at) * int(2) / big(num_bigint::BigInt::from(1u8) << r)
    }
}

pub fn semi_threshold_function(t: &SemiThreshold) -> CubeFunction {
    let k = t.k as i64;
    CubeFunction::from_fn(t.r, |x| {
        let s = coordinate_sum(x, t.r);
        if s > k {
            int(1)
        } else if s == k {
            t.beta.clone()
        } else if s == -k {
            -t.beta.clone()
        } else if s < -k {
            int(-1)
        } else {
            Rational::zero()
        }
    })
    .expect("semi-threshold values lie in [-1, 1]")
}

/// Closed form of `xbar(g, mu_1/2)` for a semi-threshold `g`:
/// `[2(1-beta) C(r-1, (k+r)/2) + 2 beta C(r-1, (k+r-2)/2)] / 2^r`.
pub fn xbar_semi_threshold(t: &SemiThreshold) -> Rational {
    let r = t.r as i64;
    let top = t.upper_level();
    let outer = big(binomial(r - 1, top)) * (Rational::one() - &t.beta);
    let inner = big(binomial(r - 1, top - 1)) * &t.beta;
    (outer + inner) * int(2) / big(num_bigint::BigInt::from(1u8) << r)
}

/// The semi-threshold `g` of arity `r` with `E|g| <= lambda` and `E|g|` as
/// large as possible.
///
/// When a mass is realised by both `(k, 0)` and `(k + 2, 1)` the smaller `k`
/// is returned. For even `r` and `lambda` above the largest achievable mass
/// `1 - C(r, r/2)/2^r`, the answer is `(0, 0)`.
pub fn max_semi_threshold(r: usize, lambda: &Rational) -> Result<SemiThreshold> {
    check_arity(r)?;
    if lambda.is_negative() || *lambda > Rational::one() {
        return Err(invalid(format!("lambda must lie in [0, 1], got {lambda}")));
    }
    let mut k = r % 2;
    if k == 0 {
        let full = SemiThreshold::new(r, 0, Rational::zero())?;
        if full.mass() <= *lambda {
            return Ok(full);
        }
        k = 2;
    }
    loop {
        let low = SemiThreshold::new(r, k, Rational::zero())?.mass();
        if low <= *lambda {
            let high = SemiThreshold::new(r, k, Rational::one())?.mass();
            let beta = ((lambda - &low) / (high - &low)).min(Rational::one());
            return SemiThreshold::new(r, k, beta);
        }
        // mass(r, 0) = 0 <= lambda, so the loop ends by k = r
        k += 2;
    }
}

/// Moves `p_i` to `1/2`, averaging `f` so that the expectation is unchanged.
///
/// For `p_i <= 1/2`: `f'(x) = 2 p_i f(x) + (1 - 2 p_i) f(x^i)` when `x_i = +1`
/// and `f'(x) = f(x)` otherwise. For `p_i > 1/2` coordinate `i` is reflected
/// first, so the `x_i = +1` half is the one left untouched.
pub fn shift(
    f: &CubeFunction,
    mu: &ProductMeasure,
    i: usize,
) -> Result<(CubeFunction, ProductMeasure)> {
    check_pair(f, mu)?;
    if i >= f.arity() {
        return Err(invalid(format!("coordinate {i} out of range")));
    }
    let half = ratio(1, 2);
    let p = &mu.p[i];
    let (moved_bit, q) = if *p <= half {
        (1usize, p.clone())
    } else {
        (0usize, Rational::one() - p)
    };
    let keep = &q * int(2);
    let mix = Rational::one() - &keep;
    let table = (0..f.table.len())
        .map(|x| {
            if (x >> i & 1) == moved_bit {
                &keep * &f.table[x] + &mix * &f.table[x ^ (1 << i)]
            } else {
                f.table[x].clone()
            }
        })
        .collect();
    let mut p2 = mu.p.clone();
    p2[i] = half;
    Ok((CubeFunction::new(f.r, table)?, ProductMeasure::new(p2)?))
}

/// Applies [`shift`] to every coordinate in ascending order.
pub fn shift_to_uniform(f: &CubeFunction, mu: &ProductMeasure) -> Result<(CubeFunction, ProductMeasure)> {
    check_pair(f, mu)?;
    let mut cur = (f.clone(), mu.clone());
    for i in 0..f.arity() {
        cur = shift(&cur.0, &cur.1, i)?;
    }
    Ok(cur)
}
