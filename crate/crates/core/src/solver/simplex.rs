//! Dense two-phase simplex over exact rationals.
//!
//! Bland's rule is used for both the entering and the leaving variable, so the
//! method terminates and the optimal basis is a deterministic function of the
//! input.

use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// One constraint `sum_j coeffs[j] * x_j  (rel)  rhs`, with sparse coefficients.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<(usize, Rational)>,
    pub rel: Relation,
    pub rhs: Rational,
}

/// `maximize objective · x` subject to the constraints and `x >= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub vars: usize,
    pub objective: Vec<(usize, Rational)>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Reduced costs `c_j - c_B B^-1 A_j`, plus the negated objective value in the last slot.
    obj: Vec<Rational>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for v in self.rows[row].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let nonzero: Vec<usize> = (0..=self.width).filter(|&j| !self.rows[row][j].is_zero()).collect();
        let pivot_row = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for &j in &nonzero {
                let delta = &factor * &pivot_row[j];
                r[j] -= delta;
            }
        }
        if !self.obj[col].is_zero() {
            let factor = self.obj[col].clone();
            for &j in &nonzero {
                let delta = &factor * &pivot_row[j];
                self.obj[j] -= delta;
            }
        }
        self.basis[row] = col;
    }

    fn set_objective(&mut self, cost: &[Rational]) {
        let mut obj = cost.to_vec();
        obj.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (o, a) in obj.iter_mut().zip(&self.rows[i]) {
                if !a.is_zero() {
                    *o -= &cost[b] * a;
                }
            }
        }
        self.obj = obj;
    }

    /// Runs simplex iterations on the current objective. Returns `false` if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(col) = (0..allowed).find(|&j| self.obj[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let take = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if take {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

impl LinearProgram {
    pub fn solve(&self) -> LpOutcome {
        let m = self.constraints.len();
        let n = self.vars;
        // flip rows with negative right-hand side so every rhs is nonnegative
        let normalized: Vec<(Relation, bool)> = self
            .constraints
            .iter()
            .map(|c| {
                let flip = c.rhs.is_negative();
                let rel = match (c.rel, flip) {
                    (Relation::Le, true) => Relation::Ge,
                    (Relation::Ge, true) => Relation::Le,
                    (r, _) => r,
                };
                (rel, flip)
            })
            .collect();
        let slack_count = normalized.iter().filter(|(r, _)| *r != Relation::Eq).count();
        let art_count = normalized.iter().filter(|(r, _)| *r != Relation::Le).count();
        let width = n + slack_count + art_count;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_slack = n;
        let mut next_art = n + slack_count;
        for (c, &(rel, flip)) in self.constraints.iter().zip(&normalized) {
            let mut row = vec![Rational::zero(); width + 1];
            let sign = |v: &Rational| if flip { -v.clone() } else { v.clone() };
            for (j, a) in &c.coeffs {
                row[*j] += sign(a);
            }
            row[width] = sign(&c.rhs);
            match rel {
                Relation::Le => {
                    row[next_slack] = Rational::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -Rational::one();
                    next_slack += 1;
                    row[next_art] = Rational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = Rational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
        }
        let art_start = n + slack_count;
        let mut t = Tableau { rows, basis, obj: Vec::new(), width };

        if art_count > 0 {
            let mut cost = vec![Rational::zero(); width];
            for c in cost.iter_mut().skip(art_start) {
                *c = -Rational::one();
            }
            t.set_objective(&cost);
            t.optimize(width);
            // obj[width] holds minus the phase-one objective value
            if !t.obj[width].is_zero() {
                return LpOutcome::Infeasible;
            }
            // drive zero-valued artificials out of the basis; drop redundant rows
            let mut i = 0;
            while i < t.rows.len() {
                if t.basis[i] >= art_start {
                    match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                        Some(j) => t.pivot(i, j),
                        None => {
                            t.rows.remove(i);
                            t.basis.remove(i);
                            continue;
                        }
                    }
                }
                i += 1;
            }
        }

        let mut cost = vec![Rational::zero(); width];
        for (j, c) in &self.objective {
            cost[*j] += c;
        }
        t.set_objective(&cost);
        if !t.optimize(art_start) {
            return LpOutcome::Unbounded;
        }
        let mut x = vec![Rational::zero(); n];
        for (i, &b) in t.basis.iter().enumerate() {
            if b < n {
                x[b] = t.rhs(i).clone();
            }
        }
        let value = -t.obj[width].clone();
        LpOutcome::Optimal { x, value }
    }
}
