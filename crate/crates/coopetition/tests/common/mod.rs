//! Brute-force oracles shared by the integration suites. Everything here
//! is independent of the simplex path it cross-checks: linear programs are
//! maximized by enumerating vertices with Gaussian elimination, and matrix
//! games are solved by closed-form mixing over two rows.

use coopetition::lp::{LinearProgram, Relation};
use coopetition::scalar::Rational;
use num_traits::{One, Signed, Zero};

fn r(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Solves `planes * x = rhs` exactly; `None` when singular.
fn gaussian_solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&row| !a[row][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let scale = a[col][col].clone();
        for x in &mut a[col] {
            *x = x.clone() / scale.clone();
        }
        b[col] = b[col].clone() / scale;
        for row in 0..n {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let factor = a[row][col].clone();
            let pivot_row = a[col].clone();
            for (slot, pivot_value) in a[row].iter_mut().zip(&pivot_row) {
                let delta = factor.clone() * pivot_value.clone();
                *slot -= delta;
            }
            let delta = factor * b[col].clone();
            b[row] -= delta;
        }
    }
    Some(b)
}

/// Maximizes a bounded LP by enumerating intersections of constraint
/// hyperplanes (including bound planes) and keeping feasible points.
/// Returns `None` when no feasible vertex exists.
pub fn vertex_enumeration_max(
    lp: &LinearProgram<Rational>,
) -> Option<(Rational, Vec<Rational>)> {
    let n = lp.num_vars();
    let mut planes: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for c in &lp.constraints {
        planes.push((c.coeffs.clone(), c.rhs.clone()));
    }
    for (var, bounds) in lp.bounds.iter().enumerate() {
        for bound in [&bounds.lower, &bounds.upper].into_iter().flatten() {
            let mut coeffs = vec![r(0); n];
            coeffs[var] = r(1);
            planes.push((coeffs, bound.clone()));
        }
    }
    if planes.len() < n {
        return None;
    }

    let feasible = |x: &[Rational]| -> bool {
        for c in &lp.constraints {
            let lhs: Rational = c
                .coeffs
                .iter()
                .zip(x)
                .map(|(a, v)| a.clone() * v.clone())
                .sum();
            let ok = match c.relation {
                Relation::Le => lhs <= c.rhs,
                Relation::Eq => lhs == c.rhs,
                Relation::Ge => lhs >= c.rhs,
            };
            if !ok {
                return false;
            }
        }
        for (var, bounds) in lp.bounds.iter().enumerate() {
            if bounds.lower.as_ref().is_some_and(|l| &x[var] < l) {
                return false;
            }
            if bounds.upper.as_ref().is_some_and(|u| &x[var] > u) {
                return false;
            }
        }
        true
    };

    let mut best: Option<(Rational, Vec<Rational>)> = None;
    let mut combo: Vec<usize> = (0..n).collect();
    'combos: loop {
        let a: Vec<Vec<Rational>> = combo.iter().map(|&i| planes[i].0.clone()).collect();
        let b: Vec<Rational> = combo.iter().map(|&i| planes[i].1.clone()).collect();
        if let Some(x) = gaussian_solve(a, b) {
            if feasible(&x) {
                let value: Rational = lp
                    .objective
                    .iter()
                    .zip(&x)
                    .map(|(c, v)| c.clone() * v.clone())
                    .sum();
                if best.as_ref().is_none_or(|(v, _)| value > *v) {
                    best = Some((value, x));
                }
            }
        }
        // Next size-n combination of plane indices.
        let total = planes.len();
        let mut i = n;
        while i > 0 {
            i -= 1;
            if combo[i] < total - n + i {
                combo[i] += 1;
                for j in i + 1..n {
                    combo[j] = combo[j - 1] + 1;
                }
                continue 'combos;
            }
        }
        break;
    }
    best
}

/// Maxmin value of a two-row matrix game by closed-form mixing: the upper
/// envelope candidates are the endpoints and all pairwise column-line
/// intersections.
pub fn two_row_maxmin_value(matrix: &[Vec<Rational>]) -> Rational {
    assert_eq!(matrix.len(), 2, "oracle only handles two-row matrices");
    let cols = matrix[0].len();
    let value_at = |p: &Rational| -> Rational {
        (0..cols)
            .map(|j| {
                p.clone() * matrix[0][j].clone()
                    + (Rational::one() - p.clone()) * matrix[1][j].clone()
            })
            .min()
            .expect("non-empty matrix")
    };
    let mut candidates = vec![r(0), r(1)];
    for j1 in 0..cols {
        for j2 in j1 + 1..cols {
            // Lines f_j(p) = p (M0j - M1j) + M1j intersect where slopes
            // differ.
            let slope1 = matrix[0][j1].clone() - matrix[1][j1].clone();
            let slope2 = matrix[0][j2].clone() - matrix[1][j2].clone();
            let denom = slope1 - slope2;
            if denom.is_zero() {
                continue;
            }
            let p = (matrix[1][j2].clone() - matrix[1][j1].clone()) / denom;
            if !p.is_negative() && p <= r(1) {
                candidates.push(p);
            }
        }
    }
    candidates.into_iter().map(|p| value_at(&p)).max().unwrap()
}
