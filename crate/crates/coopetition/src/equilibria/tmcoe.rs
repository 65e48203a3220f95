//! Team-maximizing co-opetition equilibrium solvers.
//!
//! The defining program maximizes the team's utility over all equilibrium
//! pairs; its constraints are nonlinear in `(x_T, x_n)` jointly but become
//! linear in `x_T` once the adversary strategy is fixed. Three solvers
//! exploit that:
//!
//! * [`solve_tmcoe_fixed_adversary`] — the exact LP for one fixed `x_n`.
//! * [`solve_tmcoe_grid`] — fixed-adversary LPs at every rational simplex
//!   point with denominators dividing a resolution; exact whenever a pure
//!   adversary action strictly dominates all others (the adversary is then
//!   pinned to it).
//! * [`solve_tmcoe_consistent_lp`] — for zero-sum games with consistent
//!   team utilities, one maxmin LP solves the program exactly in
//!   polynomial time.

use crate::game::{
    CoeCandidate, CorrelatedStrategy, Game, MixedStrategy, TeamIndexer, TeamPartition,
};
use crate::lp::{solve_maxmin, solve_lp, LinearProgram, LpSolution, Relation, Sense};
use crate::scalar::{int, Scalar};

use super::{check_consistency, verify_coe, SolveError};

/// Cap on the number of adversary grid points per solve.
pub const GRID_CEILING: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmcoeMethod {
    ExactConsistentLp,
    FixedAdversaryLp,
    GridSearch,
}

impl std::fmt::Display for TmcoeMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            TmcoeMethod::ExactConsistentLp => "exact-consistent-lp",
            TmcoeMethod::FixedAdversaryLp => "fixed-adversary-lp",
            TmcoeMethod::GridSearch => "grid-search",
        };
        f.write_str(name)
    }
}

/// A solver's best equilibrium with its provenance.
///
/// `certified_exact` asserts that `team_value` solves the full
/// team-maximization program, not just the searched slice: always true for
/// the consistent-LP method, true for the grid only when a strictly
/// dominant pure adversary action pins the adversary.
#[derive(Debug, Clone)]
pub struct TmcoeResult<S: Scalar> {
    pub candidate: CoeCandidate<S>,
    pub team_value: S,
    pub method: TmcoeMethod,
    pub certified_exact: bool,
    pub grid_resolution: Option<u32>,
}

/// Maximizes the team's utility over all equilibria whose adversary
/// component is exactly `x_n`; returns `None` when no team strategy makes
/// `x_n` a best response under the equilibrium constraints.
pub fn solve_tmcoe_fixed_adversary<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
    adversary: &MixedStrategy<S>,
) -> Result<Option<TmcoeResult<S>>, SolveError<S>> {
    partition.validate(game)?;
    if adversary.player != partition.adversary()
        || adversary.probs.len() != game.num_actions(partition.adversary())
    {
        return Err(SolveError::Game(crate::game::GameError::CandidateMismatch(
            "adversary strategy does not fit the partition".into(),
        )));
    }
    let indexer = TeamIndexer::new(game, partition);
    let tj_count = indexer.team_joint_count();
    let adv = partition.adversary();
    let adv_actions = game.num_actions(adv);

    // Payoff of each team joint action, per player, against the fixed mix.
    let vs_mix = |player: usize| -> Vec<S> {
        (0..tj_count)
            .map(|tj| {
                adversary
                    .probs
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| !p.is_zero())
                    .fold(S::zero(), |acc, (an, p)| {
                        acc + p.clone() * game.payoff(&indexer.full_joint(tj, an), player).clone()
                    })
            })
            .collect()
    };

    let objective: Vec<S> = {
        let mut totals = vec![S::zero(); tj_count];
        for &member in partition.team() {
            for (slot, value) in vs_mix(member).into_iter().enumerate() {
                totals[slot] += value;
            }
        }
        totals
    };

    let mut lp = LinearProgram::new(Sense::Maximize, objective);

    // Adversary best response: the mix must weakly beat every pure action.
    let adversary_vs_mix = vs_mix(adv);
    for an in 0..adv_actions {
        let coeffs: Vec<S> = (0..tj_count)
            .map(|tj| {
                adversary_vs_mix[tj].clone()
                    - game.payoff(&indexer.full_joint(tj, an), adv).clone()
            })
            .collect();
        lp.add_constraint(coeffs, Relation::Ge, S::zero());
    }

    // Team deviation constraints, linear in the correlated masses.
    for &member in partition.team() {
        let slot = indexer.team_slot(member).expect("team member");
        let member_vs_mix = vs_mix(member);
        for recommended in 0..game.num_actions(member) {
            for deviation in 0..game.num_actions(member) {
                if deviation == recommended {
                    continue;
                }
                let coeffs: Vec<S> = (0..tj_count)
                    .map(|tj| {
                        if indexer.team_joint_at(tj)[slot] != recommended {
                            return S::zero();
                        }
                        let swapped = indexer.replace_action(tj, slot, deviation);
                        member_vs_mix[tj].clone() - member_vs_mix[swapped].clone()
                    })
                    .collect();
                lp.add_constraint(coeffs, Relation::Ge, S::zero());
            }
        }
    }

    lp.add_constraint(vec![S::one(); tj_count], Relation::Eq, S::one());

    match solve_lp(&lp)? {
        LpSolution::Infeasible => Ok(None),
        LpSolution::Unbounded => Err(SolveError::Internal(
            "bounded equilibrium polytope reported unbounded".into(),
        )),
        LpSolution::Optimal(sol) => {
            let team = CorrelatedStrategy::new(partition.team().to_vec(), sol.primal)?;
            let candidate = CoeCandidate::new(team, adversary.clone());
            let report = verify_coe(game, partition, &candidate)?;
            if !report.holds() {
                return Err(SolveError::Internal(format!(
                    "LP optimum failed equilibrium verification: {}",
                    report.violations[0]
                )));
            }
            Ok(Some(TmcoeResult {
                candidate,
                team_value: sol.objective_value,
                method: TmcoeMethod::FixedAdversaryLp,
                certified_exact: false,
                grid_resolution: None,
            }))
        }
    }
}

/// A pure adversary action that strictly beats every other adversary action
/// against every team joint action, when one exists. Such an action is the
/// unique best response to anything, so fixing the adversary to it solves
/// the team-maximization program exactly.
pub fn strictly_dominant_adversary_action<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
) -> Option<usize> {
    let indexer = TeamIndexer::new(game, partition);
    let adv = partition.adversary();
    (0..game.num_actions(adv)).find(|&candidate| {
        (0..game.num_actions(adv)).all(|other| {
            other == candidate
                || (0..indexer.team_joint_count()).all(|tj| {
                    game.payoff(&indexer.full_joint(tj, candidate), adv)
                        > game.payoff(&indexer.full_joint(tj, other), adv)
                })
        })
    })
}

/// Searches all adversary strategies with probabilities of denominator
/// dividing `resolution`, solving the fixed-adversary LP at each point.
///
/// Ties in team value go to the lexicographically smallest adversary
/// strategy, which makes the result independent of evaluation order.
pub fn solve_tmcoe_grid<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
    resolution: u32,
) -> Result<TmcoeResult<S>, SolveError<S>> {
    if resolution == 0 {
        return Err(SolveError::InvalidArgument(
            "grid resolution must be at least 1".into(),
        ));
    }
    partition.validate(game)?;
    let adv = partition.adversary();
    let adv_actions = game.num_actions(adv);
    let points = compositions(resolution as usize, adv_actions);
    if points > GRID_CEILING {
        return Err(SolveError::GridCeiling {
            resolution,
            points,
            ceiling: GRID_CEILING,
        });
    }

    let denominator = int::<S>(resolution as i64);
    let mut best: Option<TmcoeResult<S>> = None;
    let mut weights = vec![0usize; adv_actions];
    weights[adv_actions - 1] = resolution as usize;
    loop {
        let probs: Vec<S> = weights
            .iter()
            .map(|&w| int::<S>(w as i64) / denominator.clone())
            .collect();
        let strategy = MixedStrategy {
            player: adv,
            probs,
        };
        if let Some(result) = solve_tmcoe_fixed_adversary(game, partition, &strategy)? {
            let better = match &best {
                None => true,
                Some(current) => result.team_value > current.team_value,
            };
            if better {
                best = Some(result);
            }
        }
        if !next_composition(&mut weights) {
            break;
        }
    }
    match best {
        Some(mut result) => {
            result.method = TmcoeMethod::GridSearch;
            result.grid_resolution = Some(resolution);
            result.certified_exact = strictly_dominant_adversary_action(game, partition)
                .is_some_and(|action| {
                    result
                        .candidate
                        .adversary
                        .probs
                        .iter()
                        .enumerate()
                        .all(|(i, p)| (i == action) == p.is_one())
                });
            Ok(result)
        }
        None => Err(SolveError::NoFeasibleGridPoint { resolution }),
    }
}

/// Exact polynomial-time solver for zero-sum games whose team-player
/// utilities are consistent with the team utility: the team collapses to a
/// single maxmin player and one LP yields the equilibrium.
pub fn solve_tmcoe_consistent_lp<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
) -> Result<TmcoeResult<S>, SolveError<S>> {
    partition.validate(game)?;
    if !game.is_zero_sum() {
        return Err(SolveError::NotZeroSum);
    }
    let consistency = check_consistency(game, partition)?;
    if !consistency.consistent {
        let witness = &consistency.witnesses[0];
        return Err(SolveError::NotConsistent(format!(
            "player {} fails the proportionality condition",
            witness.player()
        )));
    }

    let indexer = TeamIndexer::new(game, partition);
    let adv = partition.adversary();
    let matrix: Vec<Vec<S>> = (0..indexer.team_joint_count())
        .map(|tj| {
            (0..game.num_actions(adv))
                .map(|an| {
                    let joint = indexer.full_joint(tj, an);
                    game.group_payoff(&joint, partition.team())
                })
                .collect()
        })
        .collect();
    let maxmin = solve_maxmin(&matrix)?;

    let team = CorrelatedStrategy::new(partition.team().to_vec(), maxmin.row_strategy)?;
    let adversary = MixedStrategy::new(adv, maxmin.col_strategy)?;
    let candidate = CoeCandidate::new(team, adversary);
    let report = verify_coe(game, partition, &candidate)?;
    if !report.holds() {
        return Err(SolveError::Internal(format!(
            "maxmin saddle point failed equilibrium verification: {}",
            report.violations[0]
        )));
    }
    Ok(TmcoeResult {
        candidate,
        team_value: maxmin.value,
        method: TmcoeMethod::ExactConsistentLp,
        certified_exact: true,
        grid_resolution: None,
    })
}

/// Number of ways to write `total` as an ordered sum of `parts`
/// nonnegative integers, saturating at `usize::MAX`.
fn compositions(total: usize, parts: usize) -> usize {
    // C(total + parts - 1, parts - 1)
    let mut result: usize = 1;
    for i in 1..parts {
        result = result.saturating_mul(total + i);
        result /= i;
    }
    result
}

/// Advances a composition vector to its lexicographic successor, starting
/// from all mass on the last coordinate. The rightmost position with mass
/// to its right gets one unit; the leftover flushes to the last slot.
fn next_composition(weights: &mut [usize]) -> bool {
    let Some(last_nonzero) = weights.iter().rposition(|&w| w > 0) else {
        return false;
    };
    if last_nonzero == 0 {
        return false;
    }
    let leftover = weights[last_nonzero] - 1;
    weights[last_nonzero] = 0;
    weights[last_nonzero - 1] += 1;
    let last = weights.len() - 1;
    weights[last] += leftover;
    true
}
