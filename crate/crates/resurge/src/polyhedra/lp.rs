//! Exact two-phase simplex over arbitrary-precision rationals.
//!
//! Dense tableau, Bland's anti-cycling rule, no floating point. Instance
//! sizes in this crate (tens of variables, tens of constraints) make the
//! dense exact method the right trade-off.

use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rel: Rel,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, rel: Rel, rhs: Rat) -> Self {
        Constraint { coeffs, rel, rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rat, point: Vec<Rat> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rat>>, // m x total
    rhs: Vec<Rat>,       // m
    basis: Vec<usize>,   // basic variable per row
    total: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].clone();
        for entry in self.rows[row].iter_mut() {
            *entry /= &inv;
        }
        self.rhs[row] /= &inv;
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for c in 0..self.total {
                let delta = &factor * &self.rows[row][c];
                self.rows[r][c] -= delta;
            }
            let delta = &factor * &self.rhs[row];
            self.rhs[r] -= delta;
        }
        self.basis[row] = col;
    }

    /// Reduced cost of column `col` for objective `cost` (full vector).
    fn reduced_cost(&self, cost: &[Rat], col: usize) -> Rat {
        let mut value = cost[col].clone();
        for (r, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() && !self.rows[r][col].is_zero() {
                value -= &cost[b] * &self.rows[r][col];
            }
        }
        value
    }

    /// One simplex phase with Bland's rule: smallest eligible entering
    /// column, smallest basic variable among ratio-test ties. Returns false
    /// if the objective is unbounded below.
    fn run(&mut self, cost: &[Rat], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.total).find(|&j| {
                allowed[j] && !self.basis.contains(&j) && self.reduced_cost(cost, j).is_negative()
            });
            let Some(col) = entering else {
                return true;
            };
            let mut leave: Option<(usize, Rat)> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][col].is_positive() {
                    let ratio = &self.rhs[r] / &self.rows[r][col];
                    let better = match &leave {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < *lratio
                                || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }

    fn objective_value(&self, cost: &[Rat]) -> Rat {
        let mut value = Rat::zero();
        for (r, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() {
                value += &cost[b] * &self.rhs[r];
            }
        }
        value
    }
}

/// Minimizes `objective . x` subject to the constraints and `x >= 0`.
pub fn minimize(objective: &[Rat], constraints: &[Constraint]) -> LpOutcome {
    let n = objective.len();
    debug_assert!(constraints.iter().all(|c| c.coeffs.len() == n));

    // Normalize to nonnegative right-hand sides.
    let mut normalized: Vec<(Vec<Rat>, Rel, Rat)> = Vec::with_capacity(constraints.len());
    for c in constraints {
        if c.rhs.is_negative() {
            let coeffs = c.coeffs.iter().map(|a| -a.clone()).collect();
            let rel = match c.rel {
                Rel::Le => Rel::Ge,
                Rel::Ge => Rel::Le,
                Rel::Eq => Rel::Eq,
            };
            normalized.push((coeffs, rel, -c.rhs.clone()));
        } else {
            normalized.push((c.coeffs.clone(), c.rel, c.rhs.clone()));
        }
    }

    let m = normalized.len();
    let num_slack = normalized.iter().filter(|(_, rel, _)| *rel != Rel::Eq).count();
    let num_artificial = normalized.iter().filter(|(_, rel, _)| *rel != Rel::Le).count();
    let total = n + num_slack + num_artificial;

    let mut rows = vec![vec![Rat::zero(); total]; m];
    let mut rhs = vec![Rat::zero(); m];
    let mut basis = vec![0usize; m];
    let mut artificial_cols: Vec<usize> = Vec::new();

    let mut slack_at = n;
    let mut art_at = n + num_slack;
    for (r, (coeffs, rel, b)) in normalized.into_iter().enumerate() {
        rows[r][..n].clone_from_slice(&coeffs);
        rhs[r] = b;
        match rel {
            Rel::Le => {
                rows[r][slack_at] = Rat::one();
                basis[r] = slack_at;
                slack_at += 1;
            }
            Rel::Ge => {
                rows[r][slack_at] = -Rat::one();
                slack_at += 1;
                rows[r][art_at] = Rat::one();
                basis[r] = art_at;
                artificial_cols.push(art_at);
                art_at += 1;
            }
            Rel::Eq => {
                rows[r][art_at] = Rat::one();
                basis[r] = art_at;
                artificial_cols.push(art_at);
                art_at += 1;
            }
        }
    }

    let mut tab = Tableau {
        rows,
        rhs,
        basis,
        total,
    };

    // Phase 1: drive the artificial variables to zero.
    if !artificial_cols.is_empty() {
        let mut phase1_cost = vec![Rat::zero(); total];
        for &c in &artificial_cols {
            phase1_cost[c] = Rat::one();
        }
        let allowed = vec![true; total];
        let bounded = tab.run(&phase1_cost, &allowed);
        debug_assert!(bounded, "phase-1 objective is bounded below by zero");
        if !tab.objective_value(&phase1_cost).is_zero() {
            return LpOutcome::Infeasible;
        }
        // Pivot any artificial still sitting in the basis (at zero level)
        // onto a structural or slack column; a row with no such column is
        // a redundant constraint and can stay as-is.
        for r in 0..tab.rows.len() {
            if artificial_cols.contains(&tab.basis[r]) {
                if let Some(col) =
                    (0..n + num_slack).find(|&j| !tab.rows[r][j].is_zero())
                {
                    tab.pivot(r, col);
                }
            }
        }
    }

    // Phase 2: real objective, artificial columns barred.
    let mut allowed = vec![true; total];
    for &c in &artificial_cols {
        allowed[c] = false;
    }
    let mut cost = vec![Rat::zero(); total];
    cost[..n].clone_from_slice(objective);
    if !tab.run(&cost, &allowed) {
        return LpOutcome::Unbounded;
    }

    let mut point = vec![Rat::zero(); n];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < n {
            point[b] = tab.rhs[r].clone();
        }
    }
    let value = objective
        .iter()
        .zip(&point)
        .map(|(c, x)| c * x)
        .fold(Rat::zero(), |acc, t| acc + t);
    LpOutcome::Optimal { value, point }
}

/// Phase-1 feasibility of the system (with `x >= 0`).
pub fn feasible(n: usize, constraints: &[Constraint]) -> bool {
    matches!(
        minimize(&vec![Rat::zero(); n], constraints),
        LpOutcome::Optimal { .. }
    )
}
