//! Cross-checks of the simplex solver against brute-force oracles.

mod common;

use common::{two_row_maxmin_value, vertex_enumeration_max};
use coopetition::generators::{random_game, RandomFlavor};
use coopetition::lp::{solve_lp, solve_maxmin, LinearProgram, LpSolution, Relation, Sense};
use coopetition::scalar::{frac, int, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn r(v: i64) -> Rational {
    int(v)
}

/// The correlated-deviation polytope of the chicken matrix: the simplex
/// optimum must match vertex enumeration, and both must hit the frozen
/// value 21/2 at (0, 1/4, 1/4, 1/2).
#[test]
fn chicken_deviation_polytope_matches_vertex_enumeration() {
    let mut lp = LinearProgram::new(Sense::Maximize, vec![r(0), r(9), r(9), r(12)]);
    lp.add_constraint(vec![r(-2), r(1), r(0), r(0)], Relation::Ge, r(0));
    lp.add_constraint(vec![r(0), r(0), r(2), r(-1)], Relation::Ge, r(0));
    lp.add_constraint(vec![r(-2), r(0), r(1), r(0)], Relation::Ge, r(0));
    lp.add_constraint(vec![r(0), r(2), r(0), r(-1)], Relation::Ge, r(0));
    lp.add_constraint(vec![r(1), r(1), r(1), r(1)], Relation::Eq, r(1));

    let (oracle_value, _) = vertex_enumeration_max(&lp).expect("feasible");
    assert_eq!(oracle_value, frac(21, 2));

    let solved = solve_lp(&lp).unwrap();
    let optimal = solved.optimal().expect("optimal");
    assert_eq!(optimal.objective_value, oracle_value);
    assert_eq!(
        optimal.primal,
        vec![r(0), frac(1, 4), frac(1, 4), frac(1, 2)]
    );
}

#[test]
fn random_programs_match_vertex_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut optimal_seen = 0;
    for _ in 0..40 {
        let vars = rng.gen_range(2..=4usize);
        let rows = rng.gen_range(2..=5usize);
        let mut lp = LinearProgram::new(
            Sense::Maximize,
            (0..vars).map(|_| r(rng.gen_range(-5i64..=5))).collect(),
        );
        for _ in 0..rows {
            let coeffs: Vec<Rational> =
                (0..vars).map(|_| r(rng.gen_range(-4i64..=4))).collect();
            lp.add_constraint(coeffs, Relation::Le, r(rng.gen_range(0i64..=6)));
        }
        // Keep the region bounded so both methods agree on attainment.
        lp.add_constraint(vec![r(1); vars], Relation::Le, r(10));
        match solve_lp(&lp).unwrap() {
            LpSolution::Optimal(sol) => {
                optimal_seen += 1;
                let (oracle_value, _) = vertex_enumeration_max(&lp).expect("oracle agrees");
                assert_eq!(sol.objective_value, oracle_value);
                // Strong duality: every variable has lower bound zero and
                // no upper bound here, so dual . rhs equals the optimum.
                let dual_value: Rational = sol
                    .dual
                    .iter()
                    .zip(lp.constraints.iter())
                    .map(|(y, c)| y.clone() * c.rhs.clone())
                    .sum();
                assert_eq!(dual_value, sol.objective_value);
            }
            LpSolution::Infeasible => {
                assert!(vertex_enumeration_max(&lp).is_none());
            }
            LpSolution::Unbounded => unreachable!("region is bounded"),
        }
    }
    assert!(optimal_seen >= 20, "only {optimal_seen} optimal programs");
}

#[test]
fn maxmin_matches_the_closed_form_oracle_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..60 {
        let cols = rng.gen_range(2..=3usize);
        let matrix: Vec<Vec<Rational>> = (0..2)
            .map(|_| (0..cols).map(|_| r(rng.gen_range(-9i64..=9))).collect())
            .collect();
        let solution = solve_maxmin(&matrix).unwrap();
        assert_eq!(solution.value, two_row_maxmin_value(&matrix));
    }
}

/// Team-vs-adversary matrices of consistent zero-sum games have the same
/// maxmin value as the closed-form oracle on two-row instances.
#[test]
fn consistent_team_matrices_match_the_oracle() {
    for seed in 0..20u64 {
        // One real team action pair (2 x 1 dummy layout keeps two rows)
        // against two or three adversary actions.
        let dims = if seed % 2 == 0 {
            vec![2, 1, 2]
        } else {
            vec![2, 1, 3]
        };
        let tg = random_game::<Rational>(
            &dims,
            seed,
            &RandomFlavor::ConsistentZeroSum(vec![r(2), r(2)]),
        )
        .unwrap();
        // Team joints iterate lexicographically: (a, dummy) pairs give two
        // rows; adversary actions give the columns.
        let matrix: Vec<Vec<Rational>> = (0..2)
            .map(|t0| {
                (0..dims[2])
                    .map(|an| {
                        tg.game.group_payoff(&[t0, 0, an], tg.partition.team())
                    })
                    .collect()
            })
            .collect();
        let solution = solve_maxmin(&matrix).unwrap();
        assert_eq!(solution.value, two_row_maxmin_value(&matrix));
    }
}
