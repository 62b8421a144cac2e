//! Exact linear programming over arbitrary-precision rationals.
//!
//! Two-phase dense tableau simplex with Bland's pivoting rule, so every
//! solve terminates and every answer is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    LessEq,
    GreaterEq,
    Equal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    fn holds(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
        match self.relation {
            Relation::LessEq => lhs <= self.rhs,
            Relation::GreaterEq => lhs >= self.rhs,
            Relation::Equal => lhs == self.rhs,
        }
    }
}

/// A linear program. Variables are nonnegative unless marked free.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    free: Vec<bool>,
    objective: Vec<Rational>,
    sense: Sense,
    constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        solution: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }

    pub fn solution(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { solution, .. } => Some(solution),
            _ => None,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

impl LinearProgram {
    /// A program in `num_vars` nonnegative variables with a zero objective.
    pub fn new(num_vars: usize, sense: Sense) -> Self {
        LinearProgram {
            num_vars,
            free: vec![false; num_vars],
            objective: vec![Rational::zero(); num_vars],
            sense,
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Lifts the nonnegativity bound on `var`.
    pub fn set_free(&mut self, var: usize) {
        self.free[var] = true;
    }

    pub fn set_objective(&mut self, coeffs: Vec<Rational>) -> Result<()> {
        self.check_len(coeffs.len())?;
        self.objective = coeffs;
        Ok(())
    }

    pub fn add_constraint(
        &mut self,
        coeffs: Vec<Rational>,
        relation: Relation,
        rhs: Rational,
    ) -> Result<()> {
        self.check_len(coeffs.len())?;
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        Ok(())
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found == self.num_vars {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found,
            })
        }
    }

    /// Exact check of every bound and constraint at `x`.
    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && x
                .iter()
                .zip(&self.free)
                .all(|(v, &free)| free || !v.is_negative())
            && self.constraints.iter().all(|c| c.holds(x))
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    pub fn solve(&self) -> LpOutcome {
        Simplex::build(self).solve(self)
    }
}

/// Dense tableau in equality form `A x = b`, `x ≥ 0`, `b ≥ 0`.
struct Simplex {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
    artificial: Vec<bool>,
    // Column of the positive and (for free variables) negative part.
    var_cols: Vec<(usize, Option<usize>)>,
}

impl Simplex {
    fn build(lp: &LinearProgram) -> Self {
        let mut ncols = 0;
        let var_cols: Vec<_> = lp
            .free
            .iter()
            .map(|&free| {
                let pos = ncols;
                ncols += 1;
                let neg = free.then(|| {
                    ncols += 1;
                    ncols - 1
                });
                (pos, neg)
            })
            .collect();

        // Sign-normalise rows so every right-hand side is nonnegative.
        let normalised: Vec<(Vec<Rational>, Relation, Rational)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let flipped = match c.relation {
                        Relation::LessEq => Relation::GreaterEq,
                        Relation::GreaterEq => Relation::LessEq,
                        Relation::Equal => Relation::Equal,
                    };
                    (c.coeffs.iter().map(|a| -a).collect(), flipped, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();

        let slack_start = ncols;
        let n_slack = normalised
            .iter()
            .filter(|(_, r, _)| *r != Relation::Equal)
            .count();
        let art_start = slack_start + n_slack;
        let n_art = normalised
            .iter()
            .filter(|(_, r, _)| *r != Relation::LessEq)
            .count();
        let total = art_start + n_art;

        let mut rows = Vec::with_capacity(normalised.len());
        let mut basis = Vec::with_capacity(normalised.len());
        let (mut next_slack, mut next_art) = (slack_start, art_start);
        for (coeffs, relation, rhs) in normalised {
            let mut row = vec![Rational::zero(); total + 1];
            for (j, a) in coeffs.into_iter().enumerate() {
                let (pos, neg) = var_cols[j];
                if let Some(neg) = neg {
                    row[neg] = -&a;
                }
                row[pos] = a;
            }
            row[total] = rhs;
            match relation {
                Relation::LessEq => {
                    row[next_slack] = Rational::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::GreaterEq => {
                    row[next_slack] = -Rational::one();
                    next_slack += 1;
                    row[next_art] = Rational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Equal => {
                    row[next_art] = Rational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
        }

        let artificial = (0..total).map(|j| j >= art_start).collect();
        Simplex {
            rows,
            basis,
            ncols: total,
            artificial,
            var_cols,
        }
    }

    fn solve(mut self, lp: &LinearProgram) -> LpOutcome {
        let all = vec![true; self.ncols];
        if self.artificial.iter().any(|&a| a) {
            let cost: Vec<Rational> = self
                .artificial
                .iter()
                .map(|&a| if a { Rational::one() } else { Rational::zero() })
                .collect();
            // Phase one is bounded below by zero.
            let _ = self.optimise(&cost, &all);
            let infeasibility: Rational = self
                .rows
                .iter()
                .zip(&self.basis)
                .filter(|(_, &b)| self.artificial[b])
                .map(|(row, _)| row[self.ncols].clone())
                .sum();
            if infeasibility.is_positive() {
                return LpOutcome::Infeasible;
            }
            self.drive_out_artificials();
        }

        let mut cost = vec![Rational::zero(); self.ncols];
        for (j, c) in lp.objective.iter().enumerate() {
            let c = match lp.sense {
                Sense::Minimize => c.clone(),
                Sense::Maximize => -c,
            };
            let (pos, neg) = self.var_cols[j];
            if let Some(neg) = neg {
                cost[neg] = -&c;
            }
            cost[pos] = c;
        }
        let allowed: Vec<bool> = self.artificial.iter().map(|&a| !a).collect();
        if self.optimise(&cost, &allowed).is_err() {
            return LpOutcome::Unbounded;
        }

        let mut column_value = vec![Rational::zero(); self.ncols];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            column_value[b] = row[self.ncols].clone();
        }
        let solution: Vec<Rational> = self
            .var_cols
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &column_value[pos] - &column_value[neg],
                None => column_value[pos].clone(),
            })
            .collect();
        let value = lp.objective_value(&solution);
        LpOutcome::Optimal { value, solution }
    }

    /// Minimises `cost` over the allowed columns. `Err` means unbounded.
    fn optimise(&mut self, cost: &[Rational], allowed: &[bool]) -> std::result::Result<(), ()> {
        loop {
            let entering = (0..self.ncols).find(|&j| {
                allowed[j] && !self.basis.contains(&j) && self.reduced_cost(cost, j).is_negative()
            });
            let Some(col) = entering else {
                return Ok(());
            };

            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let r = &row[self.ncols] / &row[col];
                let better = match &leave {
                    None => true,
                    Some((k, best)) => r < *best || (r == *best && self.basis[i] < self.basis[*k]),
                };
                if better {
                    leave = Some((i, r));
                }
            }
            let Some((row, _)) = leave else {
                return Err(());
            };
            self.pivot(row, col);
        }
    }

    fn reduced_cost(&self, cost: &[Rational], col: usize) -> Rational {
        let mut d = cost[col].clone();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if !cost[b].is_zero() && !row[col].is_zero() {
                d -= &cost[b] * &row[col];
            }
        }
        d
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    fn drive_out_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.artificial[self.basis[i]] {
                let replacement =
                    (0..self.ncols).find(|&j| !self.artificial[j] && !self.rows[i][j].is_zero());
                match replacement {
                    Some(j) => self.pivot(i, j),
                    None => {
                        // Redundant equality.
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
}
