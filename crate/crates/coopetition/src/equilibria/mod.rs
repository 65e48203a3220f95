//! Equilibrium verifiers and solvers.
//!
//! Every check is exact: a profile passes iff all of its defining
//! inequalities hold in the scalar field, and each reported violation
//! carries the exact deviation gain.

mod consistency;
mod nash;
mod tmcoe;

pub use consistency::{check_consistency, ConsistencyReport, ConsistencyViolation};
pub use nash::{find_nash_restricted, find_nash_support_enumeration};
pub use tmcoe::{
    solve_tmcoe_consistent_lp, solve_tmcoe_fixed_adversary, solve_tmcoe_grid,
    strictly_dominant_adversary_action, TmcoeMethod, TmcoeResult, GRID_CEILING,
};

use std::fmt;

use thiserror::Error;

use crate::game::{
    product_to_correlated, CoeCandidate, CorrelatedStrategy, Game, GameError, MixedStrategy,
    TeamPartition, TeamIndexer, UtilityTarget,
};
use crate::lp::LpError;
use crate::scalar::Scalar;

/// Which equilibrium notion a report certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Concept {
    Nash,
    Correlated,
    CoOpetition,
    BestResponse,
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Concept::Nash => "ne",
            Concept::Correlated => "ce",
            Concept::CoOpetition => "coe",
            Concept::BestResponse => "best-response",
        };
        f.write_str(name)
    }
}

/// A strictly profitable deviation; `gain` is always positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation<S: Scalar> {
    /// A team player gains by ignoring a recommended action.
    TeamDeviation {
        player: usize,
        recommended: usize,
        deviation: usize,
        gain: S,
    },
    /// The adversary has a strictly better pure action.
    AdversaryImprovement { action: usize, gain: S },
    /// A player in an independent profile gains by a pure deviation.
    PlayerDeviation {
        player: usize,
        deviation: usize,
        gain: S,
    },
}

impl<S: Scalar> Violation<S> {
    pub fn gain(&self) -> &S {
        match self {
            Violation::TeamDeviation { gain, .. } => gain,
            Violation::AdversaryImprovement { gain, .. } => gain,
            Violation::PlayerDeviation { gain, .. } => gain,
        }
    }

    pub fn player(&self) -> Option<usize> {
        match self {
            Violation::TeamDeviation { player, .. } => Some(*player),
            Violation::PlayerDeviation { player, .. } => Some(*player),
            Violation::AdversaryImprovement { .. } => None,
        }
    }
}

impl<S: Scalar> fmt::Display for Violation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TeamDeviation {
                player,
                recommended,
                deviation,
                gain,
            } => write!(
                f,
                "player {player} deviates from recommended action {recommended} to {deviation} and gains {gain}"
            ),
            Violation::AdversaryImprovement { action, gain } => {
                write!(f, "adversary improves by {gain} with pure action {action}")
            }
            Violation::PlayerDeviation {
                player,
                deviation,
                gain,
            } => write!(f, "player {player} gains {gain} by deviating to action {deviation}"),
        }
    }
}

/// Outcome of an exact verification; holds iff no violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport<S: Scalar> {
    pub concept: Concept,
    pub violations: Vec<Violation<S>>,
}

impl<S: Scalar> VerificationReport<S> {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Errors shared by the solvers in this module.
#[derive(Debug, Error)]
pub enum SolveError<S: Scalar> {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("profile is not a Nash equilibrium: {0}")]
    NotNash(Violation<S>),
    #[error("candidate {index} is not a co-opetition equilibrium: {violation}")]
    NotCoe { index: usize, violation: Violation<S> },
    #[error("game is not zero-sum")]
    NotZeroSum,
    #[error("utilities are not consistent with the team utility: {0}")]
    NotConsistent(String),
    #[error("no grid point of resolution {resolution} supports a co-opetition equilibrium")]
    NoFeasibleGridPoint { resolution: u32 },
    #[error("grid of resolution {resolution} has {points} points, above the ceiling of {ceiling}")]
    GridCeiling {
        resolution: u32,
        points: usize,
        ceiling: usize,
    },
    #[error("game has {joints} joint actions, above the enumeration ceiling of {ceiling}")]
    GameCeiling { joints: usize, ceiling: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Checks that `x_n` is a best response to the team's correlated strategy.
///
/// Pure-action deviations suffice: a mixed strategy can never beat the best
/// pure action against a fixed opponent distribution.
pub fn is_best_response<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
    team: &CorrelatedStrategy<S>,
    adversary: &MixedStrategy<S>,
) -> Result<VerificationReport<S>, GameError> {
    let candidate = CoeCandidate::new(team.clone(), adversary.clone());
    partition.validate(game)?;
    candidate.validate(game, partition)?;
    Ok(best_response_report(game, partition, &candidate))
}

fn best_response_report<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
    candidate: &CoeCandidate<S>,
) -> VerificationReport<S> {
    let indexer = TeamIndexer::new(game, partition);
    let adversary = partition.adversary();
    let num_adv_actions = game.num_actions(adversary);
    let mut pure_payoffs = Vec::with_capacity(num_adv_actions);
    for an in 0..num_adv_actions {
        let mut total = S::zero();
        for (tj, mass) in candidate.team.probs.iter().enumerate() {
            if mass.is_zero() {
                continue;
            }
            let joint = indexer.full_joint(tj, an);
            total += mass.clone() * game.payoff(&joint, adversary).clone();
        }
        pure_payoffs.push(total);
    }
    let current = candidate
        .adversary
        .probs
        .iter()
        .zip(&pure_payoffs)
        .fold(S::zero(), |acc, (p, u)| acc + p.clone() * u.clone());
    let violations = pure_payoffs
        .into_iter()
        .enumerate()
        .filter(|(_, u)| *u > current)
        .map(|(action, u)| Violation::AdversaryImprovement {
            action,
            gain: u - current.clone(),
        })
        .collect();
    VerificationReport {
        concept: Concept::BestResponse,
        violations,
    }
}

/// Checks the correlated-equilibrium inequalities of a distribution over
/// the full joint action space.
pub fn verify_ce<S: Scalar>(
    game: &Game<S>,
    distribution: &CorrelatedStrategy<S>,
) -> Result<VerificationReport<S>, GameError> {
    let all_players: Vec<usize> = (0..game.num_players()).collect();
    if distribution.team != all_players {
        return Err(GameError::CandidateMismatch(format!(
            "correlated-equilibrium check needs a distribution over all players, got {:?}",
            distribution.team
        )));
    }
    if distribution.probs.len() != game.num_joint_actions() {
        return Err(GameError::CandidateMismatch(format!(
            "distribution has {} entries, expected {}",
            distribution.probs.len(),
            game.num_joint_actions()
        )));
    }
    CorrelatedStrategy::new(distribution.team.clone(), distribution.probs.clone())?;
    let mut violations = Vec::new();
    for player in 0..game.num_players() {
        for recommended in 0..game.num_actions(player) {
            for deviation in 0..game.num_actions(player) {
                if deviation == recommended {
                    continue;
                }
                let mut lhs = S::zero();
                for (index, mass) in distribution.probs.iter().enumerate() {
                    if mass.is_zero() {
                        continue;
                    }
                    let joint = game.joint_at(index);
                    if joint[player] != recommended {
                        continue;
                    }
                    let mut deviated = joint.clone();
                    deviated[player] = deviation;
                    let diff = game.payoff(&joint, player).clone()
                        - game.payoff(&deviated, player).clone();
                    lhs += mass.clone() * diff;
                }
                if lhs.is_negative() {
                    violations.push(Violation::TeamDeviation {
                        player,
                        recommended,
                        deviation,
                        gain: -lhs,
                    });
                }
            }
        }
    }
    Ok(VerificationReport {
        concept: Concept::Correlated,
        violations,
    })
}

/// Checks a (team correlated strategy, adversary strategy) pair for
/// co-opetition equilibrium: the adversary best-responds and no team player
/// gains by deviating from a recommendation, given the adversary strategy.
pub fn verify_coe<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
    candidate: &CoeCandidate<S>,
) -> Result<VerificationReport<S>, GameError> {
    partition.validate(game)?;
    candidate.validate(game, partition)?;
    let mut violations = best_response_report(game, partition, candidate).violations;

    let indexer = TeamIndexer::new(game, partition);
    for &player in partition.team() {
        let slot = indexer.team_slot(player).expect("team member");
        // Expected payoff of each team joint action against the adversary mix.
        let vs_adversary = payoffs_against_adversary(game, &indexer, candidate, player);
        for recommended in 0..game.num_actions(player) {
            for deviation in 0..game.num_actions(player) {
                if deviation == recommended {
                    continue;
                }
                let mut lhs = S::zero();
                for (tj, mass) in candidate.team.probs.iter().enumerate() {
                    if mass.is_zero() || indexer.team_joint_at(tj)[slot] != recommended {
                        continue;
                    }
                    let swapped = indexer.replace_action(tj, slot, deviation);
                    lhs += mass.clone() * (vs_adversary[tj].clone() - vs_adversary[swapped].clone());
                }
                if lhs.is_negative() {
                    violations.push(Violation::TeamDeviation {
                        player,
                        recommended,
                        deviation,
                        gain: -lhs,
                    });
                }
            }
        }
    }
    Ok(VerificationReport {
        concept: Concept::CoOpetition,
        violations,
    })
}

/// `player`'s payoff for each team joint action, averaged over the
/// candidate's adversary strategy.
fn payoffs_against_adversary<S: Scalar>(
    game: &Game<S>,
    indexer: &TeamIndexer,
    candidate: &CoeCandidate<S>,
    player: usize,
) -> Vec<S> {
    (0..indexer.team_joint_count())
        .map(|tj| {
            candidate
                .adversary
                .probs
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .fold(S::zero(), |acc, (an, p)| {
                    let joint = indexer.full_joint(tj, an);
                    acc + p.clone() * game.payoff(&joint, player).clone()
                })
        })
        .collect()
}

/// Checks a product profile for Nash equilibrium by pure deviations.
pub fn verify_ne<S: Scalar>(
    game: &Game<S>,
    profile: &[MixedStrategy<S>],
) -> Result<VerificationReport<S>, GameError> {
    let mut violations = Vec::new();
    for player in 0..game.num_players() {
        let current = game.expected_utility(profile, player)?;
        for action in 0..game.num_actions(player) {
            let deviated = game.expected_utility_of_deviation(profile, player, action)?;
            if deviated > current {
                violations.push(Violation::PlayerDeviation {
                    player,
                    deviation: action,
                    gain: deviated - current.clone(),
                });
            }
        }
    }
    Ok(VerificationReport {
        concept: Concept::Nash,
        violations,
    })
}

/// Turns a verified Nash equilibrium into a co-opetition equilibrium by
/// replacing the team's independent strategies with their product
/// distribution.
///
/// Rejects profiles that are not Nash equilibria, reporting the violating
/// deviation. The returned candidate always passes [`verify_coe`]; that is
/// asserted at runtime.
pub fn ne_to_coe<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
    profile: &[MixedStrategy<S>],
) -> Result<CoeCandidate<S>, SolveError<S>> {
    partition.validate(game)?;
    let report = verify_ne(game, profile)?;
    if let Some(violation) = report.violations.into_iter().next() {
        return Err(SolveError::NotNash(violation));
    }
    let team_strategies: Vec<MixedStrategy<S>> = partition
        .team()
        .iter()
        .map(|&p| profile[p].clone())
        .collect();
    let team = product_to_correlated(&team_strategies)?;
    let candidate = CoeCandidate::new(team, profile[partition.adversary()].clone());
    let coe = verify_coe(game, partition, &candidate)?;
    if !coe.holds() {
        return Err(SolveError::Internal(format!(
            "product of a Nash equilibrium failed the co-opetition check: {}",
            coe.violations[0]
        )));
    }
    Ok(candidate)
}

/// Result of swapping the team and adversary components of two equilibria.
#[derive(Debug, Clone)]
pub struct ExchangeReport<S: Scalar> {
    pub exchangeable: bool,
    /// (first team, second adversary) verification.
    pub first_swap: VerificationReport<S>,
    /// (second team, first adversary) verification.
    pub second_swap: VerificationReport<S>,
}

/// Tests whether two co-opetition equilibria are exchangeable: both
/// cross-paired candidates must again be equilibria.
///
/// Inputs that are not themselves equilibria are rejected.
pub fn check_exchangeable<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
    first: &CoeCandidate<S>,
    second: &CoeCandidate<S>,
) -> Result<ExchangeReport<S>, SolveError<S>> {
    for (index, candidate) in [first, second].into_iter().enumerate() {
        let report = verify_coe(game, partition, candidate)?;
        if let Some(violation) = report.violations.into_iter().next() {
            return Err(SolveError::NotCoe { index, violation });
        }
    }
    let first_swap = verify_coe(
        game,
        partition,
        &CoeCandidate::new(first.team.clone(), second.adversary.clone()),
    )?;
    let second_swap = verify_coe(
        game,
        partition,
        &CoeCandidate::new(second.team.clone(), first.adversary.clone()),
    )?;
    Ok(ExchangeReport {
        exchangeable: first_swap.holds() && second_swap.holds(),
        first_swap,
        second_swap,
    })
}

/// A strategy profile submitted for classification: either independent
/// mixed strategies for every player, or a correlated team candidate.
#[derive(Debug, Clone)]
pub enum ProfileForm<S: Scalar> {
    Product(Vec<MixedStrategy<S>>),
    Correlated(CoeCandidate<S>),
}

/// A classification row for one profile.
///
/// `is_tmcoe` is relative to the declared grid resolution: it asserts the
/// profile is an equilibrium whose team value matches the best value found
/// on that adversary grid. `stable` is Nash-or-CoE membership in the
/// profile's own form.
#[derive(Debug, Clone)]
pub struct Classification<S: Scalar> {
    pub team_utility: S,
    /// Nash membership; only product profiles are judged.
    pub is_nash: Option<bool>,
    pub is_coe: bool,
    pub is_tmcoe: bool,
    pub grid_resolution: u32,
    pub stable: bool,
}

/// Classifies a profile: team utility, Nash/CoE membership, and grid-backed
/// team-maximality.
pub fn classify_profile<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
    profile: &ProfileForm<S>,
    grid_resolution: u32,
) -> Result<Classification<S>, SolveError<S>> {
    partition.validate(game)?;
    let (candidate, is_nash) = match profile {
        ProfileForm::Product(strategies) => {
            let report = verify_ne(game, strategies)?;
            let team_strategies: Vec<MixedStrategy<S>> = partition
                .team()
                .iter()
                .map(|&p| strategies[p].clone())
                .collect();
            let team = product_to_correlated(&team_strategies)?;
            let candidate = CoeCandidate::new(team, strategies[partition.adversary()].clone());
            (candidate, Some(report.holds()))
        }
        ProfileForm::Correlated(candidate) => (candidate.clone(), None),
    };
    let team_utility =
        game.expected_utility_correlated(partition, &candidate, UtilityTarget::Team)?;
    let is_coe = verify_coe(game, partition, &candidate)?.holds();
    let is_tmcoe = is_coe
        && match solve_tmcoe_grid(game, partition, grid_resolution) {
            Ok(best) => best.team_value == team_utility,
            Err(SolveError::NoFeasibleGridPoint { .. }) => false,
            Err(e) => return Err(e),
        };
    Ok(Classification {
        team_utility,
        is_nash,
        is_coe,
        is_tmcoe,
        grid_resolution,
        stable: is_nash.unwrap_or(false) || is_coe,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        chicken_games, exchangeability_counterexample, modified_chicken_game, two_player_chicken,
    };
    use crate::scalar::{frac, int, Rational};

    fn r(v: i64) -> Rational {
        int(v)
    }

    fn pure_candidate(
        game: &Game<Rational>,
        partition: &TeamPartition,
        team_joint: &[usize],
        adversary_action: usize,
    ) -> CoeCandidate<Rational> {
        let indexer = TeamIndexer::new(game, partition);
        let team = CorrelatedStrategy::pure(
            partition.team().to_vec(),
            indexer.team_joint_index(team_joint),
            indexer.team_joint_count(),
        );
        let adversary = MixedStrategy::pure(
            partition.adversary(),
            adversary_action,
            game.num_actions(partition.adversary()),
        );
        CoeCandidate::new(team, adversary)
    }

    #[test]
    fn dominant_adversary_action_is_always_a_best_response() {
        let (ga, _) = chicken_games::<Rational>();
        let teams = [
            vec![r(1), r(0), r(0), r(0)],
            vec![frac(1, 4), frac(1, 4), frac(1, 4), frac(1, 4)],
            vec![r(0), frac(1, 2), frac(1, 2), r(0)],
        ];
        for probs in teams {
            let team = CorrelatedStrategy::new(vec![0, 1], probs).unwrap();
            let b = MixedStrategy::pure(2, 1, 2);
            let report = is_best_response(&ga.game, &ga.partition, &team, &b).unwrap();
            assert!(report.holds());
            let a = MixedStrategy::pure(2, 0, 2);
            let report = is_best_response(&ga.game, &ga.partition, &team, &a).unwrap();
            assert!(!report.holds());
        }
    }

    #[test]
    fn observed_team_marginal_invites_the_other_adversary_action() {
        // Enforcing the correlated equilibrium of the embedded chicken game
        // leaves the team at (1/4 (a1,b1), 3/4 (a1,b2)); the adversary then
        // prefers c1 by exactly 21/4 - 20/4.
        let tg = modified_chicken_game::<Rational>();
        let team = CorrelatedStrategy::new(
            vec![0, 1],
            vec![frac(1, 4), frac(3, 4), r(0), r(0)],
        )
        .unwrap();
        let c2 = MixedStrategy::pure(2, 1, 2);
        let report = is_best_response(&tg.game, &tg.partition, &team, &c2).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::AdversaryImprovement {
                action: 0,
                gain: frac(1, 4),
            }]
        );
        let c1 = MixedStrategy::pure(2, 0, 2);
        assert!(is_best_response(&tg.game, &tg.partition, &team, &c1)
            .unwrap()
            .holds());
    }

    #[test]
    fn single_action_adversary_always_best_responds() {
        let game: Game<Rational> = Game::new(
            vec![
                vec!["l".into(), "r".into()],
                vec!["only".into()],
            ],
            vec![vec![r(3), r(-5)], vec![r(0), r(9)]],
            None,
        )
        .unwrap();
        let partition = TeamPartition::new(vec![0], 1);
        let team = CorrelatedStrategy::new(vec![0], vec![frac(1, 2), frac(1, 2)]).unwrap();
        let adversary = MixedStrategy::pure(1, 0, 1);
        assert!(is_best_response(&game, &partition, &team, &adversary)
            .unwrap()
            .holds());
    }

    #[test]
    fn chicken_correlated_distribution_is_a_ce() {
        let g = two_player_chicken::<Rational>();
        let dist = CorrelatedStrategy::new(
            vec![0, 1],
            vec![r(0), frac(1, 4), frac(1, 4), frac(1, 2)],
        )
        .unwrap();
        assert!(verify_ce(&g, &dist).unwrap().holds());
    }

    #[test]
    fn dominated_recommendation_fails_the_ce_check() {
        // Prisoner's dilemma: defect (index 1) strictly dominates.
        let g: Game<Rational> = Game::new(
            vec![
                vec!["c".into(), "d".into()],
                vec!["c".into(), "d".into()],
            ],
            vec![
                vec![r(3), r(3)],
                vec![r(0), r(5)],
                vec![r(5), r(0)],
                vec![r(1), r(1)],
            ],
            None,
        )
        .unwrap();
        let dist = CorrelatedStrategy::new(vec![0, 1], vec![r(1), r(0), r(0), r(0)]).unwrap();
        let report = verify_ce(&g, &dist).unwrap();
        assert!(!report.holds());
        assert!(report.violations.contains(&Violation::TeamDeviation {
            player: 0,
            recommended: 0,
            deviation: 1,
            gain: r(2),
        }));
    }

    #[test]
    fn team_optimal_correlated_pair_is_a_coe() {
        let (ga, _) = chicken_games::<Rational>();
        let candidate = CoeCandidate::new(
            CorrelatedStrategy::new(
                vec![0, 1],
                vec![r(0), frac(1, 4), frac(1, 4), frac(1, 2)],
            )
            .unwrap(),
            MixedStrategy::pure(2, 1, 2),
        );
        assert!(verify_coe(&ga.game, &ga.partition, &candidate)
            .unwrap()
            .holds());
        let value = ga
            .game
            .expected_utility_correlated(&ga.partition, &candidate, UtilityTarget::Team)
            .unwrap();
        assert_eq!(value, frac(21, 2));
    }

    #[test]
    fn merged_utility_optimum_is_not_a_coe_in_the_original_game() {
        let (ga, _) = chicken_games::<Rational>();
        let candidate = pure_candidate(&ga.game, &ga.partition, &[1, 1], 1);
        let report = verify_coe(&ga.game, &ga.partition, &candidate).unwrap();
        let team_gains: Vec<&Violation<Rational>> = report
            .violations
            .iter()
            .filter(|v| matches!(v, Violation::TeamDeviation { .. }))
            .collect();
        assert_eq!(team_gains.len(), 2);
        for v in team_gains {
            assert_eq!(*v.gain(), r(1));
        }
    }

    #[test]
    fn exchanged_pair_fails_on_the_dominated_recommendation() {
        let tg = exchangeability_counterexample::<Rational>();
        let candidate = pure_candidate(&tg.game, &tg.partition, &[1, 0], 1);
        let report = verify_coe(&tg.game, &tg.partition, &candidate).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::TeamDeviation {
                player: 1,
                recommended: 0,
                deviation: 1,
                gain: r(1),
            }]
        );
    }

    #[test]
    fn pure_and_mixed_nash_profiles_verify() {
        let (ga, _) = chicken_games::<Rational>();
        let dc_b = vec![
            MixedStrategy::pure(0, 0, 2),
            MixedStrategy::pure(1, 1, 2),
            MixedStrategy::pure(2, 1, 2),
        ];
        assert!(verify_ne(&ga.game, &dc_b).unwrap().holds());
        let mixed = vec![
            MixedStrategy::new(0, vec![frac(1, 3), frac(2, 3)]).unwrap(),
            MixedStrategy::new(1, vec![frac(1, 3), frac(2, 3)]).unwrap(),
            MixedStrategy::pure(2, 1, 2),
        ];
        assert!(verify_ne(&ga.game, &mixed).unwrap().holds());
        let team_total = ga.game.expected_utility(&mixed, 0).unwrap()
            + ga.game.expected_utility(&mixed, 1).unwrap();
        assert_eq!(team_total, frac(84, 9));
    }

    #[test]
    fn mutual_cooperation_fails_the_nash_check_with_unit_gains() {
        let (ga, _) = chicken_games::<Rational>();
        let cc_b = vec![
            MixedStrategy::pure(0, 1, 2),
            MixedStrategy::pure(1, 1, 2),
            MixedStrategy::pure(2, 1, 2),
        ];
        let report = verify_ne(&ga.game, &cc_b).unwrap();
        assert_eq!(
            report.violations,
            vec![
                Violation::PlayerDeviation {
                    player: 0,
                    deviation: 0,
                    gain: r(1),
                },
                Violation::PlayerDeviation {
                    player: 1,
                    deviation: 0,
                    gain: r(1),
                },
            ]
        );
    }

    #[test]
    fn nash_profiles_induce_verified_coe() {
        let (ga, _) = chicken_games::<Rational>();
        let dc_b = vec![
            MixedStrategy::pure(0, 0, 2),
            MixedStrategy::pure(1, 1, 2),
            MixedStrategy::pure(2, 1, 2),
        ];
        let candidate = ne_to_coe(&ga.game, &ga.partition, &dc_b).unwrap();
        assert_eq!(candidate.team.probs, vec![r(0), r(1), r(0), r(0)]);

        let mixed = vec![
            MixedStrategy::new(0, vec![frac(1, 3), frac(2, 3)]).unwrap(),
            MixedStrategy::new(1, vec![frac(1, 3), frac(2, 3)]).unwrap(),
            MixedStrategy::pure(2, 1, 2),
        ];
        let candidate = ne_to_coe(&ga.game, &ga.partition, &mixed).unwrap();
        assert_eq!(
            candidate.team.probs,
            vec![frac(1, 9), frac(2, 9), frac(2, 9), frac(4, 9)]
        );
        let value = ga
            .game
            .expected_utility_correlated(&ga.partition, &candidate, UtilityTarget::Team)
            .unwrap();
        assert_eq!(value, frac(84, 9));
    }

    #[test]
    fn non_nash_profiles_are_rejected_with_the_deviation() {
        let (ga, _) = chicken_games::<Rational>();
        let cc_b = vec![
            MixedStrategy::pure(0, 1, 2),
            MixedStrategy::pure(1, 1, 2),
            MixedStrategy::pure(2, 1, 2),
        ];
        match ne_to_coe(&ga.game, &ga.partition, &cc_b) {
            Err(SolveError::NotNash(violation)) => assert_eq!(*violation.gain(), r(1)),
            other => panic!("expected a Nash rejection, got {other:?}"),
        }
    }

    #[test]
    fn single_action_game_induces_its_only_profile() {
        let game: Game<Rational> = Game::new(
            vec![
                vec!["a".into()],
                vec!["b".into()],
                vec!["c".into()],
            ],
            vec![vec![r(1), r(2), r(3)]],
            None,
        )
        .unwrap();
        let partition = TeamPartition::new(vec![0, 1], 2);
        let profile = vec![
            MixedStrategy::pure(0, 0, 1),
            MixedStrategy::pure(1, 0, 1),
            MixedStrategy::pure(2, 0, 1),
        ];
        let candidate = ne_to_coe(&game, &partition, &profile).unwrap();
        assert_eq!(candidate.team.probs, vec![r(1)]);
        assert_eq!(candidate.adversary.probs, vec![r(1)]);
    }

    #[test]
    fn identical_equilibria_are_trivially_exchangeable() {
        let tg = exchangeability_counterexample::<Rational>();
        let e = pure_candidate(&tg.game, &tg.partition, &[1, 0], 0);
        let report = check_exchangeable(&tg.game, &tg.partition, &e, &e).unwrap();
        assert!(report.exchangeable);
    }

    #[test]
    fn inconsistent_zero_sum_equilibria_fail_to_exchange() {
        let tg = exchangeability_counterexample::<Rational>();
        let e1 = pure_candidate(&tg.game, &tg.partition, &[1, 0], 0);
        let e2 = pure_candidate(&tg.game, &tg.partition, &[0, 1], 1);
        let report = check_exchangeable(&tg.game, &tg.partition, &e1, &e2).unwrap();
        assert!(!report.exchangeable);
        // The (first team, second adversary) pair is the broken one.
        assert_eq!(
            report.first_swap.violations,
            vec![Violation::TeamDeviation {
                player: 1,
                recommended: 0,
                deviation: 1,
                gain: r(1),
            }]
        );
        assert!(report.second_swap.holds());
    }

    #[test]
    fn non_equilibrium_inputs_to_exchange_are_rejected() {
        let tg = exchangeability_counterexample::<Rational>();
        let good = pure_candidate(&tg.game, &tg.partition, &[1, 0], 0);
        let bad = pure_candidate(&tg.game, &tg.partition, &[1, 0], 1);
        assert!(matches!(
            check_exchangeable(&tg.game, &tg.partition, &good, &bad),
            Err(SolveError::NotCoe { index: 1, .. })
        ));
    }

    #[test]
    fn classification_of_the_unstable_merged_optimum() {
        let (ga, _) = chicken_games::<Rational>();
        let cc_b = ProfileForm::Product(vec![
            MixedStrategy::pure(0, 1, 2),
            MixedStrategy::pure(1, 1, 2),
            MixedStrategy::pure(2, 1, 2),
        ]);
        let row = classify_profile(&ga.game, &ga.partition, &cc_b, 1).unwrap();
        assert_eq!(row.team_utility, r(12));
        assert_eq!(row.is_nash, Some(false));
        assert!(!row.is_coe);
        assert!(!row.is_tmcoe);
        assert!(!row.stable);
    }

    #[test]
    fn classification_of_the_team_maximizing_pair() {
        let (ga, _) = chicken_games::<Rational>();
        let profile = ProfileForm::Correlated(CoeCandidate::new(
            CorrelatedStrategy::new(
                vec![0, 1],
                vec![r(0), frac(1, 4), frac(1, 4), frac(1, 2)],
            )
            .unwrap(),
            MixedStrategy::pure(2, 1, 2),
        ));
        let row = classify_profile(&ga.game, &ga.partition, &profile, 1).unwrap();
        assert_eq!(row.team_utility, frac(21, 2));
        assert_eq!(row.is_nash, None);
        assert!(row.is_coe);
        assert!(row.is_tmcoe);
        assert!(row.stable);
    }
}
