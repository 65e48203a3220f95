//! Exact rational linear programming.
//!
//! A dense two-phase primal simplex with Bland's least-index rule. Exact
//! arithmetic makes cycling the only termination hazard and Bland's rule
//! eliminates it, so no perturbation is needed. Solutions carry exact duals
//! recovered from the tableau's initial identity columns.
//!
//! The solver targets desk-scale programs (at most [`SCALE_CEILING`]
//! variables and constraints); exact pivoting cost rules out anything
//! larger.

use thiserror::Error;

use crate::scalar::Scalar;

/// Hard cap on variables and constraints per program.
pub const SCALE_CEILING: usize = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LpError {
    #[error("malformed program: {0}")]
    Malformed(String),
    #[error("program exceeds the scale ceiling of {SCALE_CEILING}: {vars} variables, {constraints} constraints")]
    ScaleCeiling { vars: usize, constraints: usize },
    #[error("internal solver invariant violated: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint<S: Scalar> {
    pub coeffs: Vec<S>,
    pub relation: Relation,
    pub rhs: S,
}

/// Per-variable bounds; `None` means unbounded on that side.
#[derive(Debug, Clone)]
pub struct VarBounds<S: Scalar> {
    pub lower: Option<S>,
    pub upper: Option<S>,
}

impl<S: Scalar> VarBounds<S> {
    pub fn nonnegative() -> Self {
        VarBounds {
            lower: Some(S::zero()),
            upper: None,
        }
    }

    pub fn free() -> Self {
        VarBounds {
            lower: None,
            upper: None,
        }
    }
}

/// A linear program with rational coefficients.
///
/// Variables default to `x >= 0`; use [`LinearProgram::set_bounds`] or
/// [`LinearProgram::free_var`] to change that.
#[derive(Debug, Clone)]
pub struct LinearProgram<S: Scalar> {
    pub sense: Sense,
    pub objective: Vec<S>,
    pub constraints: Vec<Constraint<S>>,
    pub bounds: Vec<VarBounds<S>>,
}

impl<S: Scalar> LinearProgram<S> {
    pub fn new(sense: Sense, objective: Vec<S>) -> Self {
        let bounds = objective.iter().map(|_| VarBounds::nonnegative()).collect();
        LinearProgram {
            sense,
            objective,
            constraints: Vec::new(),
            bounds,
        }
    }

    pub fn add_constraint(&mut self, coeffs: Vec<S>, relation: Relation, rhs: S) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn set_bounds(&mut self, var: usize, lower: Option<S>, upper: Option<S>) {
        self.bounds[var] = VarBounds { lower, upper };
    }

    pub fn free_var(&mut self, var: usize) {
        self.bounds[var] = VarBounds::free();
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }
}

/// An optimal vertex with its certifying dual vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalSolution<S: Scalar> {
    pub primal: Vec<S>,
    pub objective_value: S,
    /// One multiplier per constraint, oriented so that the dual objective
    /// `dual . rhs` equals the primal objective whenever all variable lower
    /// bounds are zero and no upper bounds are set.
    pub dual: Vec<S>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpSolution<S: Scalar> {
    Optimal(OptimalSolution<S>),
    Infeasible,
    Unbounded,
}

impl<S: Scalar> LpSolution<S> {
    pub fn optimal(&self) -> Option<&OptimalSolution<S>> {
        match self {
            LpSolution::Optimal(sol) => Some(sol),
            _ => None,
        }
    }
}

/// How an original variable maps onto the nonnegative standard-form columns.
enum VarMap<S> {
    /// `x = offset + x'`
    Shift { col: usize, offset: S },
    /// `x = offset - x'`
    NegShift { col: usize, offset: S },
    /// `x = pos - neg`
    Split { pos: usize, neg: usize },
}

/// Solves the program with a deterministic exact simplex.
pub fn solve_lp<S: Scalar>(lp: &LinearProgram<S>) -> Result<LpSolution<S>, LpError> {
    let n = lp.num_vars();
    if lp.bounds.len() != n {
        return Err(LpError::Malformed(format!(
            "{} bounds for {n} variables",
            lp.bounds.len()
        )));
    }
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.coeffs.len() != n {
            return Err(LpError::Malformed(format!(
                "constraint {i} has {} coefficients, expected {n}",
                c.coeffs.len()
            )));
        }
    }
    if n > SCALE_CEILING || lp.constraints.len() > SCALE_CEILING {
        return Err(LpError::ScaleCeiling {
            vars: n,
            constraints: lp.constraints.len(),
        });
    }

    // Work on a maximization copy; flip the objective for minimization.
    let maximize = lp.sense == Sense::Maximize;
    let objective: Vec<S> = if maximize {
        lp.objective.clone()
    } else {
        lp.objective.iter().map(|c| -c.clone()).collect()
    };

    // Substitute every variable by nonnegative standard-form columns.
    let mut maps: Vec<VarMap<S>> = Vec::with_capacity(n);
    let mut std_cols = 0usize;
    let mut extra_upper_rows: Vec<(usize, S)> = Vec::new(); // (var, u - l)
    for (var, b) in lp.bounds.iter().enumerate() {
        match (&b.lower, &b.upper) {
            (Some(l), Some(u)) => {
                if l > u {
                    return Ok(LpSolution::Infeasible);
                }
                maps.push(VarMap::Shift {
                    col: std_cols,
                    offset: l.clone(),
                });
                extra_upper_rows.push((var, u.clone() - l.clone()));
                std_cols += 1;
            }
            (Some(l), None) => {
                maps.push(VarMap::Shift {
                    col: std_cols,
                    offset: l.clone(),
                });
                std_cols += 1;
            }
            (None, Some(u)) => {
                maps.push(VarMap::NegShift {
                    col: std_cols,
                    offset: u.clone(),
                });
                std_cols += 1;
            }
            (None, None) => {
                maps.push(VarMap::Split {
                    pos: std_cols,
                    neg: std_cols + 1,
                });
                std_cols += 2;
            }
        }
    }

    // Standard-form rows: user constraints first, then upper-bound rows.
    let mut rows: Vec<(Vec<S>, Relation, S)> = Vec::new();
    for c in &lp.constraints {
        let mut coeffs = vec![S::zero(); std_cols];
        let mut rhs = c.rhs.clone();
        for (var, a) in c.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            apply_map(&maps[var], a, &mut coeffs, &mut rhs);
        }
        rows.push((coeffs, c.relation, rhs));
    }
    let num_user_rows = rows.len();
    for (var, cap) in &extra_upper_rows {
        let mut coeffs = vec![S::zero(); std_cols];
        match &maps[*var] {
            VarMap::Shift { col, .. } => coeffs[*col] = S::one(),
            _ => unreachable!("upper-bound rows only arise for shifted variables"),
        }
        rows.push((coeffs, Relation::Le, cap.clone()));
    }

    // Standard-form objective (constant offset folded in at extraction).
    let mut std_obj = vec![S::zero(); std_cols];
    for (var, c) in objective.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match &maps[var] {
            VarMap::Shift { col, .. } => std_obj[*col] += c.clone(),
            VarMap::NegShift { col, .. } => std_obj[*col] -= c.clone(),
            VarMap::Split { pos, neg } => {
                std_obj[*pos] += c.clone();
                std_obj[*neg] -= c.clone();
            }
        }
    }

    let mut tableau = Tableau::build(std_cols, rows)?;
    match tableau.solve(&std_obj)? {
        TableauOutcome::Infeasible => Ok(LpSolution::Infeasible),
        TableauOutcome::Unbounded => Ok(LpSolution::Unbounded),
        TableauOutcome::Optimal => {
            let std_primal = tableau.primal(std_cols);
            let mut primal = Vec::with_capacity(n);
            for map in &maps {
                primal.push(match map {
                    VarMap::Shift { col, offset } => offset.clone() + std_primal[*col].clone(),
                    VarMap::NegShift { col, offset } => offset.clone() - std_primal[*col].clone(),
                    VarMap::Split { pos, neg } => {
                        std_primal[*pos].clone() - std_primal[*neg].clone()
                    }
                });
            }
            let objective_value = lp
                .objective
                .iter()
                .zip(&primal)
                .fold(S::zero(), |acc, (c, x)| acc + c.clone() * x.clone());
            // Row duals, restored to the user's row orientation and sense.
            let mut dual = Vec::with_capacity(num_user_rows);
            for row in 0..num_user_rows {
                let mut y = tableau.row_dual(row, &std_obj);
                if tableau.flipped[row] {
                    y = -y;
                }
                if !maximize {
                    y = -y;
                }
                dual.push(y);
            }
            check_feasibility(lp, &primal)?;
            Ok(LpSolution::Optimal(OptimalSolution {
                primal,
                objective_value,
                dual,
            }))
        }
    }
}

fn apply_map<S: Scalar>(map: &VarMap<S>, a: &S, coeffs: &mut [S], rhs: &mut S) {
    match map {
        VarMap::Shift { col, offset } => {
            coeffs[*col] += a.clone();
            *rhs -= a.clone() * offset.clone();
        }
        VarMap::NegShift { col, offset } => {
            coeffs[*col] -= a.clone();
            *rhs -= a.clone() * offset.clone();
        }
        VarMap::Split { pos, neg } => {
            coeffs[*pos] += a.clone();
            coeffs[*neg] -= a.clone();
        }
    }
}

fn check_feasibility<S: Scalar>(lp: &LinearProgram<S>, primal: &[S]) -> Result<(), LpError> {
    for (i, c) in lp.constraints.iter().enumerate() {
        let lhs = c
            .coeffs
            .iter()
            .zip(primal)
            .fold(S::zero(), |acc, (a, x)| acc + a.clone() * x.clone());
        let ok = match c.relation {
            Relation::Le => lhs <= c.rhs,
            Relation::Eq => lhs == c.rhs,
            Relation::Ge => lhs >= c.rhs,
        };
        if !ok {
            return Err(LpError::Internal(format!(
                "optimal point violates constraint {i}"
            )));
        }
    }
    for (var, b) in lp.bounds.iter().enumerate() {
        if let Some(l) = &b.lower {
            if &primal[var] < l {
                return Err(LpError::Internal(format!("variable {var} below lower bound")));
            }
        }
        if let Some(u) = &b.upper {
            if &primal[var] > u {
                return Err(LpError::Internal(format!("variable {var} above upper bound")));
            }
        }
    }
    Ok(())
}

enum TableauOutcome {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Dense simplex tableau over standard-form rows `Ax REL b`, `x >= 0`,
/// `b >= 0` after row normalization.
struct Tableau<S: Scalar> {
    /// `rows x (total_cols + 1)`; the last column is the rhs.
    rows: Vec<Vec<S>>,
    basis: Vec<usize>,
    total_cols: usize,
    /// First artificial column index; columns past this never re-enter.
    artificial_start: usize,
    /// Initial identity column of each row (slack or artificial).
    id_col: Vec<usize>,
    flipped: Vec<bool>,
}

impl<S: Scalar> Tableau<S> {
    fn build(std_cols: usize, raw_rows: Vec<(Vec<S>, Relation, S)>) -> Result<Self, LpError> {
        let m = raw_rows.len();
        // Normalize rhs >= 0, then count slack/artificial columns.
        let mut normalized = Vec::with_capacity(m);
        let mut flipped = vec![false; m];
        for (i, (mut coeffs, mut rel, mut rhs)) in raw_rows.into_iter().enumerate() {
            if rhs.is_negative() {
                for a in &mut coeffs {
                    *a = -a.clone();
                }
                rhs = -rhs;
                rel = match rel {
                    Relation::Le => Relation::Ge,
                    Relation::Eq => Relation::Eq,
                    Relation::Ge => Relation::Le,
                };
                flipped[i] = true;
            }
            normalized.push((coeffs, rel, rhs));
        }
        let num_slack = normalized
            .iter()
            .filter(|(_, rel, _)| !matches!(rel, Relation::Eq))
            .count();
        let num_artificial = normalized
            .iter()
            .filter(|(_, rel, _)| !matches!(rel, Relation::Le))
            .count();
        let artificial_start = std_cols + num_slack;
        let total_cols = artificial_start + num_artificial;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut id_col = Vec::with_capacity(m);
        let mut next_slack = std_cols;
        let mut next_artificial = artificial_start;
        for (coeffs, rel, rhs) in normalized {
            let mut row = vec![S::zero(); total_cols + 1];
            row[..std_cols].clone_from_slice(&coeffs);
            row[total_cols] = rhs;
            match rel {
                Relation::Le => {
                    row[next_slack] = S::one();
                    basis.push(next_slack);
                    id_col.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -S::one();
                    next_slack += 1;
                    row[next_artificial] = S::one();
                    basis.push(next_artificial);
                    id_col.push(next_artificial);
                    next_artificial += 1;
                }
                Relation::Eq => {
                    row[next_artificial] = S::one();
                    basis.push(next_artificial);
                    id_col.push(next_artificial);
                    next_artificial += 1;
                }
            }
            rows.push(row);
        }
        Ok(Tableau {
            rows,
            basis,
            total_cols,
            artificial_start,
            id_col,
            flipped,
        })
    }

    fn solve(&mut self, std_obj: &[S]) -> Result<TableauOutcome, LpError> {
        if self.artificial_start < self.total_cols {
            // Phase 1: maximize minus the sum of artificials.
            let mut phase1 = vec![S::zero(); self.total_cols];
            for cost in &mut phase1[self.artificial_start..] {
                *cost = -S::one();
            }
            match self.pivot_to_optimum(&phase1, self.total_cols)? {
                TableauOutcome::Unbounded => {
                    return Err(LpError::Internal("phase 1 unbounded".into()))
                }
                TableauOutcome::Infeasible => unreachable!(),
                TableauOutcome::Optimal => {}
            }
            if !self.objective_value(&phase1).is_zero() {
                return Ok(TableauOutcome::Infeasible);
            }
            self.drive_out_artificials();
        }
        self.pivot_to_optimum(std_obj, self.artificial_start)
    }

    /// Runs Bland's-rule pivots until optimal or unbounded. Columns at or
    /// past `enter_limit` are barred from entering.
    fn pivot_to_optimum(
        &mut self,
        costs: &[S],
        enter_limit: usize,
    ) -> Result<TableauOutcome, LpError> {
        let mut zrow = self.reduced_costs(costs);
        loop {
            let entering = (0..enter_limit).find(|&j| zrow[j].is_negative());
            let Some(col) = entering else {
                return Ok(TableauOutcome::Optimal);
            };
            let mut leaving: Option<(usize, S)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rows[r][self.total_cols].clone() / a.clone();
                match &leaving {
                    None => leaving = Some((r, ratio)),
                    Some((best_r, best)) => {
                        if ratio < *best
                            || (ratio == *best && self.basis[r] < self.basis[*best_r])
                        {
                            leaving = Some((r, ratio));
                        }
                    }
                }
            }
            let Some((row, _)) = leaving else {
                return Ok(TableauOutcome::Unbounded);
            };
            self.pivot(row, col);
            zrow = self.reduced_costs(costs);
        }
    }

    /// Cost of a column; slack and artificial columns cost zero.
    fn cost_of(costs: &[S], col: usize) -> S {
        costs.get(col).cloned().unwrap_or_else(S::zero)
    }

    /// Reduced costs `z_j - c_j` for the current basis.
    fn reduced_costs(&self, costs: &[S]) -> Vec<S> {
        let mut zrow = vec![S::zero(); self.total_cols];
        for (r, row) in self.rows.iter().enumerate() {
            let cb = Self::cost_of(costs, self.basis[r]);
            if cb.is_zero() {
                continue;
            }
            for j in 0..self.total_cols {
                if !row[j].is_zero() {
                    zrow[j] += cb.clone() * row[j].clone();
                }
            }
        }
        for (j, z) in zrow.iter_mut().enumerate() {
            *z -= Self::cost_of(costs, j);
        }
        zrow
    }

    fn objective_value(&self, costs: &[S]) -> S {
        self.rows
            .iter()
            .enumerate()
            .fold(S::zero(), |acc, (r, row)| {
                acc + Self::cost_of(costs, self.basis[r]) * row[self.total_cols].clone()
            })
    }

    /// Pivots zero-valued basic artificials out of the basis where possible.
    /// Rows that cannot be cleared are redundant and stay inert.
    fn drive_out_artificials(&mut self) {
        for r in 0..self.rows.len() {
            if self.basis[r] < self.artificial_start {
                continue;
            }
            debug_assert!(self.rows[r][self.total_cols].is_zero());
            let col = (0..self.artificial_start).find(|&j| !self.rows[r][j].is_zero());
            if let Some(col) = col {
                self.pivot(r, col);
            }
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col].clone();
        debug_assert!(!pivot.is_zero());
        for x in &mut self.rows[row] {
            if !x.is_zero() {
                *x = x.clone() / pivot.clone();
            }
        }
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let factor = self.rows[r][col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..=self.total_cols {
                if !self.rows[row][j].is_zero() {
                    let delta = factor.clone() * self.rows[row][j].clone();
                    self.rows[r][j] -= delta;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Values of the first `count` columns at the current vertex.
    fn primal(&self, count: usize) -> Vec<S> {
        let mut values = vec![S::zero(); count];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < count {
                values[b] = self.rows[r][self.total_cols].clone();
            }
        }
        values
    }

    /// Dual multiplier of a row: the reduced cost of its initial identity
    /// column plus that column's cost (zero for slacks, zero for
    /// artificials in phase 2).
    fn row_dual(&self, row: usize, costs: &[S]) -> S {
        let col = self.id_col[row];
        let mut z = S::zero();
        for (r, tableau_row) in self.rows.iter().enumerate() {
            let cb = Self::cost_of(costs, self.basis[r]);
            if !cb.is_zero() && !tableau_row[col].is_zero() {
                z += cb * tableau_row[col].clone();
            }
        }
        // Surplus columns of >= rows carry coefficient -1, so the identity
        // column there is the artificial (+1); either way the multiplier is
        // z at that column.
        z
    }
}

/// Value and optimal strategies of a zero-sum matrix game.
///
/// Rows belong to the maximizer, columns to the minimizer. The column
/// strategy is recovered from the LP duals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxminSolution<S: Scalar> {
    pub value: S,
    pub row_strategy: Vec<S>,
    pub col_strategy: Vec<S>,
}

pub fn solve_maxmin<S: Scalar>(matrix: &[Vec<S>]) -> Result<MaxminSolution<S>, LpError> {
    let m = matrix.len();
    if m == 0 {
        return Err(LpError::Malformed("empty payoff matrix".into()));
    }
    let k = matrix[0].len();
    if k == 0 || matrix.iter().any(|row| row.len() != k) {
        return Err(LpError::Malformed("ragged or empty payoff matrix".into()));
    }

    // Variables: p_0..p_{m-1} >= 0, v free.
    // maximize v  s.t.  v - sum_i M[i][j] p_i <= 0  for each column j,
    //                   sum_i p_i = 1.
    let mut objective = vec![S::zero(); m + 1];
    objective[m] = S::one();
    let mut lp = LinearProgram::new(Sense::Maximize, objective);
    lp.free_var(m);
    for j in 0..k {
        let mut coeffs = vec![S::zero(); m + 1];
        for (i, row) in matrix.iter().enumerate() {
            coeffs[i] = -row[j].clone();
        }
        coeffs[m] = S::one();
        lp.add_constraint(coeffs, Relation::Le, S::zero());
    }
    let mut simplex_row = vec![S::one(); m];
    simplex_row.push(S::zero());
    lp.add_constraint(simplex_row, Relation::Eq, S::one());

    let solution = match solve_lp(&lp)? {
        LpSolution::Optimal(sol) => sol,
        other => {
            return Err(LpError::Internal(format!(
                "matrix game LP must be optimal, got {other:?}"
            )))
        }
    };
    let value = solution.objective_value.clone();
    let row_strategy: Vec<S> = solution.primal[..m].to_vec();
    let col_strategy: Vec<S> = solution.dual[..k].to_vec();

    // Exactness checks: both strategies certify the value.
    let total = col_strategy
        .iter()
        .fold(S::zero(), |acc, y| acc + y.clone());
    if !total.is_one() || col_strategy.iter().any(|y| y.is_negative()) {
        return Err(LpError::Internal(
            "recovered column strategy is not a distribution".into(),
        ));
    }
    for j in 0..k {
        let payoff = matrix
            .iter()
            .zip(&row_strategy)
            .fold(S::zero(), |acc, (row, p)| acc + row[j].clone() * p.clone());
        if payoff < value {
            return Err(LpError::Internal(
                "row strategy fails to guarantee the value".into(),
            ));
        }
    }
    let mut best_row_reply = None;
    for row in matrix {
        let payoff = row
            .iter()
            .zip(&col_strategy)
            .fold(S::zero(), |acc, (a, y)| acc + a.clone() * y.clone());
        if payoff > value {
            return Err(LpError::Internal(
                "column strategy fails to cap the value".into(),
            ));
        }
        if best_row_reply.as_ref().is_none_or(|b| payoff > *b) {
            best_row_reply = Some(payoff);
        }
    }
    Ok(MaxminSolution {
        value,
        row_strategy,
        col_strategy,
    })
}
