//! Dense exact simplex for `A x = b, x >= 0`.

use num_traits::{One, Signed, Zero};

use crate::linalg::Q;

pub(crate) enum LpOutcome {
    /// A basic feasible solution.
    Feasible(Vec<Q>),
    /// `y` with `y A >= 0` and `y b < 0`.
    Infeasible(Vec<Q>),
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    cost: Vec<Q>,
    allowed: Vec<bool>,
}

impl Tableau {
    fn width(&self) -> usize {
        self.allowed.len()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let w = self.width();
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for k in 0..=w {
                if !prow[k].is_zero() {
                    row[k] -= &f * &prow[k];
                }
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for k in 0..=w {
                if !prow[k].is_zero() {
                    self.cost[k] -= &f * &prow[k];
                }
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule; the objective is bounded below on every use here.
    fn optimize(&mut self) {
        let w = self.width();
        loop {
            let Some(c) = (0..w).find(|&j| self.allowed[j] && self.cost[j].is_negative()) else {
                return;
            };
            let mut best: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[w] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let (r, _) = best.expect("objective bounded below");
            self.pivot(r, c);
        }
    }

    fn set_cost(&mut self, c: &[Q]) {
        let w = self.width();
        let mut cost = vec![Q::zero(); w + 1];
        cost[..w].clone_from_slice(&c[..w]);
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &c[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for k in 0..=w {
                if !row[k].is_zero() {
                    cost[k] -= cb * &row[k];
                }
            }
        }
        self.cost = cost;
    }

    fn solution(&self, n: usize) -> Vec<Q> {
        let w = self.width();
        let mut x = vec![Q::zero(); n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rows[i][w].clone();
            }
        }
        x
    }
}

/// Phase one. Returns the tableau at a feasible basis with artificial
/// columns disabled, or a Farkas vector.
fn phase_one(a: &[Vec<Q>], b: &[Q], n: usize) -> Result<Tableau, Vec<Q>> {
    let m = a.len();
    let w = n + m;
    let mut signs = Vec::with_capacity(m);
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let s = if b[i].is_negative() { -Q::one() } else { Q::one() };
        let mut row = vec![Q::zero(); w + 1];
        for j in 0..n {
            row[j] = &a[i][j] * &s;
        }
        row[n + i] = Q::one();
        row[w] = &b[i] * &s;
        rows.push(row);
        signs.push(s);
    }
    let mut t = Tableau { rows, basis: (n..w).collect(), cost: Vec::new(), allowed: vec![true; w] };
    let mut c = vec![Q::zero(); w];
    for x in c.iter_mut().skip(n) {
        *x = Q::one();
    }
    t.set_cost(&c);
    t.optimize();
    if t.cost[w].is_negative() {
        // reduced cost of artificial i is 1 - u_i
        let y = (0..m).map(|i| -(Q::one() - &t.cost[n + i]) * &signs[i]).collect();
        return Err(y);
    }
    // drive zero-level artificials out of the basis, dropping redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, j);
            } else {
                t.rows.remove(i);
                t.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }
    for j in n..w {
        t.allowed[j] = false;
    }
    Ok(t)
}

pub(crate) fn feasible(a: &[Vec<Q>], b: &[Q], n: usize) -> LpOutcome {
    match phase_one(a, b, n) {
        Ok(t) => LpOutcome::Feasible(t.solution(n)),
        Err(y) => LpOutcome::Infeasible(y),
    }
}

/// The lexicographically least feasible `x` (minimize `x_0`, then `x_1`, ...).
pub(crate) fn lexmin(a: &[Vec<Q>], b: &[Q], n: usize) -> LpOutcome {
    let mut t = match phase_one(a, b, n) {
        Ok(t) => t,
        Err(y) => return LpOutcome::Infeasible(y),
    };
    let w = t.width();
    for k in 0..n {
        let mut c = vec![Q::zero(); w];
        c[k] = Q::one();
        t.set_cost(&c);
        t.optimize();
        // positive reduced cost: zero in every optimum of this stage
        for j in 0..n {
            if t.allowed[j] && t.cost[j].is_positive() {
                t.allowed[j] = false;
            }
        }
    }
    LpOutcome::Feasible(t.solution(n))
}
