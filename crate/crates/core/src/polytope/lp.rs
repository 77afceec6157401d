//! Exact two-phase simplex over free variables, with Bland's rule.
//!
//! Solves `maximize c.x subject to a_i.x <= b_i` where `x` is unrestricted.
//! Free variables are split as `x = x+ - x-`; rows with a negative right
//! hand side get an artificial variable for phase one.

use crate::scalar::ExactField;
use crate::vector::Vector;

use super::Inequality;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome<F> {
    Optimal { value: F, point: Vector<F> },
    Unbounded,
    Infeasible,
}

impl<F: ExactField> LpOutcome<F> {
    pub fn value(&self) -> Option<&F> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

struct Tableau<F> {
    rows: Vec<Vec<F>>,
    rhs: Vec<F>,
    basis: Vec<usize>,
    /// reduced-cost row: `obj[j] = c_B B^-1 A_j - c_j`; optimal when all >= 0
    obj: Vec<F>,
    obj_value: F,
}

impl<F: ExactField> Tableau<F> {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = F::one() / self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        self.rhs[r] = self.rhs[r].clone() * inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
            self.rhs[i] = self.rhs[i].clone() - f * prhs.clone();
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (x, p) in self.obj.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
            self.obj_value = self.obj_value.clone() - f * prhs;
        }
        self.basis[r] = c;
    }

    /// Installs the cost vector `cost` (maximize) and prices out the basis.
    fn set_objective(&mut self, cost: &[F]) {
        self.obj = cost.iter().map(|c| -c.clone()).collect();
        self.obj_value = F::zero();
        for r in 0..self.rows.len() {
            let cb = cost[self.basis[r]].clone();
            if cb.is_zero() {
                continue;
            }
            for (x, a) in self.obj.iter_mut().zip(&self.rows[r]) {
                *x = x.clone() + cb.clone() * a.clone();
            }
            self.obj_value = self.obj_value.clone() + cb * self.rhs[r].clone();
        }
    }

    /// Primal simplex with Bland's rule over the columns `< active`.
    /// Returns false when unbounded.
    fn optimize(&mut self, active: usize) -> bool {
        loop {
            let Some(c) = (0..active).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, F)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs[r].clone() / a.clone();
                let better = match &best {
                    None => true,
                    Some((br, bv)) => {
                        ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// Maximizes `objective . x` over `{ x : a_i . x <= b_i }`.
pub fn maximize<F: ExactField>(objective: &Vector<F>, constraints: &[Inequality<F>]) -> LpOutcome<F> {
    let d = objective.dim();
    let m = constraints.len();
    // columns: x+ (d), x- (d), slacks (m), artificials (one per negative row)
    let neg_rows: Vec<usize> = (0..m)
        .filter(|&i| constraints[i].offset().is_negative())
        .collect();
    let n_struct = 2 * d + m;
    let ncols = n_struct + neg_rows.len();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art = 0;
    for (i, ineq) in constraints.iter().enumerate() {
        let neg = ineq.offset().is_negative();
        let s = if neg { -F::one() } else { F::one() };
        let mut row = vec![F::zero(); ncols];
        for j in 0..d {
            let a = ineq.normal()[j].clone() * s.clone();
            row[d + j] = -a.clone();
            row[j] = a;
        }
        row[2 * d + i] = s.clone();
        if neg {
            row[n_struct + art] = F::one();
            basis.push(n_struct + art);
            art += 1;
        } else {
            basis.push(2 * d + i);
        }
        rows.push(row);
        rhs.push(ineq.offset().clone() * s);
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis,
        obj: vec![F::zero(); ncols],
        obj_value: F::zero(),
    };

    if art > 0 {
        let mut cost = vec![F::zero(); ncols];
        for c in cost.iter_mut().skip(n_struct) {
            *c = -F::one();
        }
        t.set_objective(&cost);
        t.optimize(ncols);
        if t.obj_value.is_negative() {
            return LpOutcome::Infeasible;
        }
        // drive artificials out of the basis; drop rows that are dependent
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= n_struct {
                match (0..n_struct).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(j) => t.pivot(r, j),
                    None => {
                        t.rows.remove(r);
                        t.rhs.remove(r);
                        t.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    let mut cost = vec![F::zero(); ncols];
    for j in 0..d {
        cost[j] = objective[j].clone();
        cost[d + j] = -objective[j].clone();
    }
    t.set_objective(&cost);
    if !t.optimize(n_struct) {
        return LpOutcome::Unbounded;
    }
    let mut z = vec![F::zero(); ncols];
    for (r, &b) in t.basis.iter().enumerate() {
        z[b] = t.rhs[r].clone();
    }
    let point: Vector<F> = (0..d).map(|j| z[j].clone() - z[d + j].clone()).collect();
    LpOutcome::Optimal {
        value: objective.dot(&point),
        point,
    }
}

/// A point of `{ x : a_i . x <= b_i }`, if any.
pub fn feasible_point<F: ExactField>(dim: usize, constraints: &[Inequality<F>]) -> Option<Vector<F>> {
    match maximize(&Vector::zeros(dim), constraints) {
        LpOutcome::Optimal { point, .. } => Some(point),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn ineq(a: &[i64], b: i64) -> Inequality<Rational> {
        Inequality::new(Vector::from_ints(a), Rational::from_int(b))
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn box_optimum() {
        let cons = [ineq(&[1, 0], 2), ineq(&[0, 1], 3), ineq(&[-1, 0], 0), ineq(&[0, -1], 0)];
        let out = maximize(&Vector::from_ints(&[1, 1]), &cons);
        assert_eq!(out.value(), Some(&r(5, 1)));
    }

    #[test]
    fn negative_offsets_need_phase_one() {
        // x >= 1, y >= 2, x + y <= 4: minimize x - y, i.e. maximize y - x
        let cons = [ineq(&[-1, 0], -1), ineq(&[0, -1], -2), ineq(&[1, 1], 4)];
        let out = maximize(&Vector::from_ints(&[-1, 1]), &cons);
        assert_eq!(out.value(), Some(&r(2, 1)));
        if let LpOutcome::Optimal { point, .. } = out {
            assert_eq!(point, Vector::from_ints(&[1, 3]));
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let cons = [ineq(&[1], 1), ineq(&[-1], -2)];
        assert_eq!(maximize(&Vector::from_ints(&[1]), &cons), LpOutcome::Infeasible);
        let cons = [ineq(&[-1, 0], 0)];
        assert_eq!(maximize(&Vector::from_ints(&[1, 0]), &cons), LpOutcome::Unbounded);
        // free variable in the negative direction
        let cons = [ineq(&[1], 5)];
        assert_eq!(maximize(&Vector::from_ints(&[-1]), &cons), LpOutcome::Unbounded);
    }

    #[test]
    fn equality_pairs_and_fractions() {
        // x + y = 1 as two inequalities, 2x <= 1
        let cons = [ineq(&[1, 1], 1), ineq(&[-1, -1], -1), ineq(&[2, 0], 1)];
        let out = maximize(&Vector::from_ints(&[1, -1]), &cons);
        assert_eq!(out.value(), Some(&r(0, 1)));
        let out = maximize(&Vector::from_ints(&[-1, 1]), &cons);
        assert_eq!(out, LpOutcome::Unbounded);
        let out = maximize(&Vector::from_ints(&[1, 0]), &cons);
        assert_eq!(out.value(), Some(&r(1, 2)));
    }

    #[test]
    fn degenerate_vertex_terminates() {
        // many constraints through the origin (a classic cycling setup for
        // textbook rules)
        let cons = [
            Inequality::new(Vector::new(vec![r(1, 2), r(-11, 2), r(-5, 2), r(9, 1)]), r(0, 1)),
            Inequality::new(Vector::new(vec![r(1, 2), r(-3, 2), r(-1, 2), r(1, 1)]), r(0, 1)),
            ineq(&[1, 0, 0, 0], 1),
            ineq(&[-1, 0, 0, 0], 0),
            ineq(&[0, -1, 0, 0], 0),
            ineq(&[0, 0, -1, 0], 0),
            ineq(&[0, 0, 0, -1], 0),
        ];
        let out = maximize(&Vector::from_ints(&[10, -57, -9, -24]), &cons);
        assert_eq!(out.value(), Some(&r(1, 1)));
    }

    #[test]
    fn empty_constraint_set() {
        assert_eq!(maximize(&Vector::<Rational>::zeros(2), &[]).value(), Some(&r(0, 1)));
        assert_eq!(maximize::<Rational>(&Vector::from_ints(&[1]), &[]), LpOutcome::Unbounded);
    }
}
