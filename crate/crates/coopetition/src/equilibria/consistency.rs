//! Consistency between team-player utilities and the team utility.
//!
//! A game is consistent when every team player's utility tensor is a
//! positive fraction of the team's: `k_i * u_i(a) = u_T(a)` elementwise for
//! some constant `k_i > 0` per player. Consistent zero-sum games behave
//! like two-player zero-sum games, which is what makes their
//! team-maximizing equilibria computable by one linear program.

use crate::game::{Game, GameError, TeamPartition};
use crate::scalar::Scalar;

/// Why a team player's utility fails the consistency condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConsistencyViolation {
    /// Two joint actions differing only in the player's own action whose
    /// team-utility difference is not a positive multiple of the player's
    /// own difference.
    ActionPair {
        player: usize,
        first: Vec<usize>,
        second: Vec<usize>,
    },
    /// A joint action where no positive constant can relate the player's
    /// utility to the team's.
    Level { player: usize, joint: Vec<usize> },
}

impl ConsistencyViolation {
    pub fn player(&self) -> usize {
        match self {
            ConsistencyViolation::ActionPair { player, .. } => *player,
            ConsistencyViolation::Level { player, .. } => *player,
        }
    }
}

/// Outcome of the consistency check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport<S: Scalar> {
    pub consistent: bool,
    /// One `(player, k)` entry per team player with `k * u_i = u_T`,
    /// present only when consistent. Players whose utility is identically
    /// zero (forcing `u_T` to be zero as well) get `k = 1` by convention.
    pub constants: Vec<(usize, S)>,
    /// First violation found for each inconsistent team player.
    pub witnesses: Vec<ConsistencyViolation>,
}

/// Tests whether each team player's utility is elementwise positively
/// proportional to the team utility `u_T = sum of team payoffs`.
pub fn check_consistency<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
) -> Result<ConsistencyReport<S>, GameError> {
    partition.validate(game)?;
    let team = partition.team();
    let joint_count = game.num_joint_actions();
    let team_totals: Vec<S> = (0..joint_count)
        .map(|j| {
            team.iter()
                .fold(S::zero(), |acc, &p| acc + game.payoff_at(j, p).clone())
        })
        .collect();

    let mut constants = Vec::new();
    let mut witnesses = Vec::new();
    for &player in team {
        match player_constant(game, player, &team_totals) {
            Ok(k) => constants.push((player, k)),
            Err(level_index) => {
                witnesses.push(find_witness(game, player, &team_totals, level_index));
            }
        }
    }
    let consistent = witnesses.is_empty();
    Ok(ConsistencyReport {
        consistent,
        constants: if consistent { constants } else { Vec::new() },
        witnesses,
    })
}

/// The unique positive `k` with `k * u_i = u_T` elementwise, or the first
/// joint index where the proportionality fails.
fn player_constant<S: Scalar>(
    game: &Game<S>,
    player: usize,
    team_totals: &[S],
) -> Result<S, usize> {
    let mut k: Option<S> = None;
    for (j, total) in team_totals.iter().enumerate() {
        let own = game.payoff_at(j, player);
        if own.is_zero() {
            if !total.is_zero() {
                return Err(j);
            }
            continue;
        }
        let ratio = total.clone() / own.clone();
        if !ratio.is_positive() {
            return Err(j);
        }
        match &k {
            None => k = Some(ratio),
            Some(existing) if *existing != ratio => return Err(j),
            Some(_) => {}
        }
    }
    Ok(k.unwrap_or_else(S::one))
}

/// Builds the most informative witness for an inconsistent player: a pair
/// of joint actions differing only in the player's own action for which no
/// positive constant works, falling back to the single-action level
/// violation when every pair is individually satisfiable.
fn find_witness<S: Scalar>(
    game: &Game<S>,
    player: usize,
    team_totals: &[S],
    level_index: usize,
) -> ConsistencyViolation {
    let mut implied: Option<(S, usize, usize)> = None;
    for j in 0..game.num_joint_actions() {
        let joint = game.joint_at(j);
        for alt in (joint[player] + 1)..game.num_actions(player) {
            let mut other = joint.clone();
            other[player] = alt;
            let j2 = game.joint_index(&other);
            let own_diff = game.payoff_at(j, player).clone() - game.payoff_at(j2, player).clone();
            let team_diff = team_totals[j].clone() - team_totals[j2].clone();
            if own_diff.is_zero() && team_diff.is_zero() {
                continue;
            }
            if own_diff.is_zero() || team_diff.is_zero() {
                return ConsistencyViolation::ActionPair {
                    player,
                    first: joint,
                    second: other,
                };
            }
            let ratio = team_diff / own_diff;
            if !ratio.is_positive() {
                return ConsistencyViolation::ActionPair {
                    player,
                    first: joint,
                    second: other,
                };
            }
            match &implied {
                None => implied = Some((ratio, j, j2)),
                Some((existing, _, _)) if *existing != ratio => {
                    return ConsistencyViolation::ActionPair {
                        player,
                        first: joint,
                        second: other,
                    };
                }
                Some(_) => {}
            }
        }
    }
    // All pairs individually admit the same constant; the failure is in the
    // levels themselves (an offset independent of the player's action).
    ConsistencyViolation::Level {
        player,
        joint: game.joint_at(level_index),
    }
}
