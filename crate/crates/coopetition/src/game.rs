//! Normal-form games with a team/adversary partition and exact expected
//! utilities.
//!
//! A [`Game`] stores a dense payoff tensor over joint actions. Joint actions
//! are enumerated in lexicographic order of per-player action indices with
//! player 0 most significant; that order fixes the tensor layout, the
//! indexing of correlated strategies, and every file format in this crate.

use thiserror::Error;

use crate::scalar::{Rational, Scalar};

/// Errors raised by game construction and evaluation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GameError {
    #[error("a game needs at least two players, got {0}")]
    TooFewPlayers(usize),
    #[error("player {0} has an empty action set")]
    EmptyActionSet(usize),
    #[error("payoff tensor has {got} entries, expected {expected}")]
    PayoffCount { expected: usize, got: usize },
    #[error("payoff entry {index} has {got} payoffs, expected {expected}")]
    PayoffWidth {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("duplicate action label {label:?} for player {player}")]
    DuplicateLabel { player: usize, label: String },
    #[error("expected one strategy per player in player order, got {got} for a {expected}-player game")]
    StrategyCount { expected: usize, got: usize },
    #[error("strategy listed for player {got} where player {expected} was required")]
    StrategyPlayer { expected: usize, got: usize },
    #[error("strategy for player {player} has {got} probabilities, expected {expected}")]
    StrategyWidth {
        player: usize,
        expected: usize,
        got: usize,
    },
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("candidate does not match the partition: {0}")]
    CandidateMismatch(String),
    #[error("player index {0} out of range")]
    PlayerOutOfRange(usize),
    #[error("action index {action} out of range for player {player}")]
    ActionOutOfRange { player: usize, action: usize },
}

/// Whose utility an expectation is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UtilityTarget {
    /// A single player's utility.
    Player(usize),
    /// The team total, the sum of every team member's utility.
    Team,
}

/// An n-player normal-form game with exact payoffs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game<S: Scalar = Rational> {
    actions: Vec<Vec<String>>,
    /// Flat tensor: entry for joint index `j` and player `p` lives at
    /// `j * num_players + p`.
    payoffs: Vec<S>,
    name: Option<String>,
}

impl<S: Scalar> Game<S> {
    /// Builds a game from per-player action labels and one payoff vector per
    /// joint action, in lexicographic joint order.
    pub fn new(
        actions: Vec<Vec<String>>,
        payoffs: Vec<Vec<S>>,
        name: Option<String>,
    ) -> Result<Self, GameError> {
        let n = actions.len();
        if n < 2 {
            return Err(GameError::TooFewPlayers(n));
        }
        for (player, labels) in actions.iter().enumerate() {
            if labels.is_empty() {
                return Err(GameError::EmptyActionSet(player));
            }
            for (i, label) in labels.iter().enumerate() {
                if labels[..i].contains(label) {
                    return Err(GameError::DuplicateLabel {
                        player,
                        label: label.clone(),
                    });
                }
            }
        }
        let joint_count: usize = actions.iter().map(Vec::len).product();
        if payoffs.len() != joint_count {
            return Err(GameError::PayoffCount {
                expected: joint_count,
                got: payoffs.len(),
            });
        }
        let mut flat = Vec::with_capacity(joint_count * n);
        for (index, entry) in payoffs.into_iter().enumerate() {
            if entry.len() != n {
                return Err(GameError::PayoffWidth {
                    index,
                    expected: n,
                    got: entry.len(),
                });
            }
            flat.extend(entry);
        }
        Ok(Game {
            actions,
            payoffs: flat,
            name,
        })
    }

    /// Builds a game by evaluating `payoff` at every joint action.
    pub fn from_fn(
        actions: Vec<Vec<String>>,
        mut payoff: impl FnMut(&[usize]) -> Vec<S>,
        name: Option<String>,
    ) -> Result<Self, GameError> {
        let counts: Vec<usize> = actions.iter().map(Vec::len).collect();
        let joint_count: usize = counts.iter().product();
        let mut entries = Vec::with_capacity(joint_count);
        for index in 0..joint_count {
            entries.push(payoff(&decode_joint(index, &counts)));
        }
        Game::new(actions, entries, name)
    }

    pub fn num_players(&self) -> usize {
        self.actions.len()
    }

    pub fn num_actions(&self, player: usize) -> usize {
        self.actions[player].len()
    }

    pub fn action_counts(&self) -> Vec<usize> {
        self.actions.iter().map(Vec::len).collect()
    }

    pub fn action_label(&self, player: usize, action: usize) -> &str {
        &self.actions[player][action]
    }

    pub fn action_labels(&self, player: usize) -> &[String] {
        &self.actions[player]
    }

    /// Resolves an action label for a player.
    pub fn action_index(&self, player: usize, label: &str) -> Option<usize> {
        self.actions[player].iter().position(|l| l == label)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn num_joint_actions(&self) -> usize {
        self.actions.iter().map(Vec::len).product()
    }

    /// Lexicographic index of a joint action, player 0 most significant.
    pub fn joint_index(&self, joint: &[usize]) -> usize {
        debug_assert_eq!(joint.len(), self.num_players());
        let mut index = 0;
        for (player, &a) in joint.iter().enumerate() {
            debug_assert!(a < self.num_actions(player));
            index = index * self.num_actions(player) + a;
        }
        index
    }

    /// Inverse of [`Game::joint_index`].
    pub fn joint_at(&self, index: usize) -> Vec<usize> {
        let counts = self.action_counts();
        decode_joint(index, &counts)
    }

    /// Iterates all joint actions in lexicographic order.
    pub fn joint_actions(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.num_joint_actions()).map(|i| self.joint_at(i))
    }

    pub fn payoff(&self, joint: &[usize], player: usize) -> &S {
        self.payoff_at(self.joint_index(joint), player)
    }

    pub fn payoff_at(&self, joint_index: usize, player: usize) -> &S {
        &self.payoffs[joint_index * self.num_players() + player]
    }

    /// Sum of the given players' payoffs at a joint action.
    pub fn group_payoff(&self, joint: &[usize], players: &[usize]) -> S {
        let index = self.joint_index(joint);
        players
            .iter()
            .fold(S::zero(), |acc, &p| acc + self.payoff_at(index, p).clone())
    }

    /// True when every joint action's payoffs sum to exactly zero.
    pub fn is_zero_sum(&self) -> bool {
        let n = self.num_players();
        (0..self.num_joint_actions()).all(|j| {
            (0..n)
                .fold(S::zero(), |acc, p| acc + self.payoff_at(j, p).clone())
                .is_zero()
        })
    }

    /// Exact expected utility of `player` under independent mixed play.
    ///
    /// `profile` must list one strategy per player, in player order.
    pub fn expected_utility(
        &self,
        profile: &[MixedStrategy<S>],
        player: usize,
    ) -> Result<S, GameError> {
        self.check_profile(profile)?;
        if player >= self.num_players() {
            return Err(GameError::PlayerOutOfRange(player));
        }
        let mut total = S::zero();
        'joint: for (index, joint) in self.joint_actions().enumerate() {
            let mut weight = S::one();
            for (p, &a) in joint.iter().enumerate() {
                let prob = &profile[p].probs[a];
                if prob.is_zero() {
                    continue 'joint;
                }
                weight *= prob.clone();
            }
            total += weight * self.payoff_at(index, player).clone();
        }
        Ok(total)
    }

    /// Expected utility of one pure deviation `action` by `player` while the
    /// rest of the profile stands.
    pub fn expected_utility_of_deviation(
        &self,
        profile: &[MixedStrategy<S>],
        player: usize,
        action: usize,
    ) -> Result<S, GameError> {
        self.check_profile(profile)?;
        if action >= self.num_actions(player) {
            return Err(GameError::ActionOutOfRange { player, action });
        }
        let mut total = S::zero();
        'joint: for (index, joint) in self.joint_actions().enumerate() {
            if joint[player] != action {
                continue;
            }
            let mut weight = S::one();
            for (p, &a) in joint.iter().enumerate() {
                if p == player {
                    continue;
                }
                let prob = &profile[p].probs[a];
                if prob.is_zero() {
                    continue 'joint;
                }
                weight *= prob.clone();
            }
            total += weight * self.payoff_at(index, player).clone();
        }
        Ok(total)
    }

    /// Exact expectation for a correlated team / mixed adversary candidate.
    pub fn expected_utility_correlated(
        &self,
        partition: &TeamPartition,
        candidate: &CoeCandidate<S>,
        target: UtilityTarget,
    ) -> Result<S, GameError> {
        partition.validate(self)?;
        candidate.validate(self, partition)?;
        let players: Vec<usize> = match target {
            UtilityTarget::Player(p) => {
                if p >= self.num_players() {
                    return Err(GameError::PlayerOutOfRange(p));
                }
                vec![p]
            }
            UtilityTarget::Team => partition.team().to_vec(),
        };
        let indexer = TeamIndexer::new(self, partition);
        let mut total = S::zero();
        for (an, adv_prob) in candidate.adversary.probs.iter().enumerate() {
            if adv_prob.is_zero() {
                continue;
            }
            let mut inner = S::zero();
            for (tj, team_prob) in candidate.team.probs.iter().enumerate() {
                if team_prob.is_zero() {
                    continue;
                }
                let joint = indexer.full_joint(tj, an);
                inner += team_prob.clone() * self.group_payoff(&joint, &players);
            }
            total += adv_prob.clone() * inner;
        }
        Ok(total)
    }

    fn check_profile(&self, profile: &[MixedStrategy<S>]) -> Result<(), GameError> {
        if profile.len() != self.num_players() {
            return Err(GameError::StrategyCount {
                expected: self.num_players(),
                got: profile.len(),
            });
        }
        for (p, strategy) in profile.iter().enumerate() {
            if strategy.player != p {
                return Err(GameError::StrategyPlayer {
                    expected: p,
                    got: strategy.player,
                });
            }
            if strategy.probs.len() != self.num_actions(p) {
                return Err(GameError::StrategyWidth {
                    player: p,
                    expected: self.num_actions(p),
                    got: strategy.probs.len(),
                });
            }
            validate_distribution(&strategy.probs)?;
        }
        Ok(())
    }
}

fn decode_joint(mut index: usize, counts: &[usize]) -> Vec<usize> {
    let mut joint = vec![0; counts.len()];
    for (slot, &count) in joint.iter_mut().zip(counts).rev() {
        *slot = index % count;
        index /= count;
    }
    joint
}

/// The team/adversary split of a game's players.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeamPartition {
    team: Vec<usize>,
    adversary: usize,
}

impl TeamPartition {
    /// Builds a partition from explicit team members and the adversary.
    pub fn new(mut team: Vec<usize>, adversary: usize) -> Self {
        team.sort_unstable();
        TeamPartition { team, adversary }
    }

    /// Everyone except `adversary` forms the team.
    pub fn against<S: Scalar>(game: &Game<S>, adversary: usize) -> Self {
        let team = (0..game.num_players()).filter(|&p| p != adversary).collect();
        TeamPartition { team, adversary }
    }

    pub fn team(&self) -> &[usize] {
        &self.team
    }

    pub fn adversary(&self) -> usize {
        self.adversary
    }

    pub fn is_team_member(&self, player: usize) -> bool {
        self.team.binary_search(&player).is_ok()
    }

    /// Checks that team and adversary partition the game's players.
    pub fn validate<S: Scalar>(&self, game: &Game<S>) -> Result<(), GameError> {
        let n = game.num_players();
        if self.adversary >= n {
            return Err(GameError::InvalidPartition(format!(
                "adversary index {} out of range for {n} players",
                self.adversary
            )));
        }
        if self.team.is_empty() {
            return Err(GameError::InvalidPartition("empty team".into()));
        }
        if self.team.windows(2).any(|w| w[0] == w[1]) {
            return Err(GameError::InvalidPartition("duplicate team member".into()));
        }
        if self.team.contains(&self.adversary) {
            return Err(GameError::InvalidPartition(format!(
                "adversary {} listed as team member",
                self.adversary
            )));
        }
        if self.team.len() + 1 != n || self.team.iter().any(|&p| p >= n) {
            return Err(GameError::InvalidPartition(format!(
                "team {:?} plus adversary {} must cover players 0..{n}",
                self.team, self.adversary
            )));
        }
        Ok(())
    }
}

/// Maps between team joint indices, adversary actions, and full joint
/// actions for a fixed game and partition.
pub(crate) struct TeamIndexer {
    team: Vec<usize>,
    team_counts: Vec<usize>,
    adversary: usize,
    num_players: usize,
}

impl TeamIndexer {
    pub fn new<S: Scalar>(game: &Game<S>, partition: &TeamPartition) -> Self {
        TeamIndexer {
            team: partition.team().to_vec(),
            team_counts: partition.team().iter().map(|&p| game.num_actions(p)).collect(),
            adversary: partition.adversary(),
            num_players: game.num_players(),
        }
    }

    pub fn team_joint_count(&self) -> usize {
        self.team_counts.iter().product()
    }

    /// Decodes a team joint index into per-member actions (team order).
    pub fn team_joint_at(&self, index: usize) -> Vec<usize> {
        decode_joint(index, &self.team_counts)
    }

    pub fn team_joint_index(&self, team_actions: &[usize]) -> usize {
        let mut index = 0;
        for (&a, &count) in team_actions.iter().zip(&self.team_counts) {
            debug_assert!(a < count);
            index = index * count + a;
        }
        index
    }

    /// Full joint action from a team joint index and an adversary action.
    pub fn full_joint(&self, team_index: usize, adversary_action: usize) -> Vec<usize> {
        let team_actions = self.team_joint_at(team_index);
        let mut joint = vec![0; self.num_players];
        for (&member, action) in self.team.iter().zip(team_actions) {
            joint[member] = action;
        }
        joint[self.adversary] = adversary_action;
        joint
    }

    /// Position of `player` within the team ordering.
    pub fn team_slot(&self, player: usize) -> Option<usize> {
        self.team.iter().position(|&p| p == player)
    }

    /// Team joint index with `player`'s coordinate replaced by `action`.
    pub fn replace_action(&self, team_index: usize, slot: usize, action: usize) -> usize {
        let mut team_actions = self.team_joint_at(team_index);
        team_actions[slot] = action;
        self.team_joint_index(&team_actions)
    }
}

/// A probability distribution over one player's actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedStrategy<S: Scalar = Rational> {
    pub player: usize,
    pub probs: Vec<S>,
}

impl<S: Scalar> MixedStrategy<S> {
    /// Validates nonnegativity and an exact total of one.
    pub fn new(player: usize, probs: Vec<S>) -> Result<Self, GameError> {
        validate_distribution(&probs)?;
        Ok(MixedStrategy { player, probs })
    }

    /// All mass on a single action.
    pub fn pure(player: usize, action: usize, num_actions: usize) -> Self {
        let mut probs = vec![S::zero(); num_actions];
        probs[action] = S::one();
        MixedStrategy { player, probs }
    }

    /// Uniform play over all actions.
    pub fn uniform(player: usize, num_actions: usize) -> Self {
        let share = S::one() / crate::scalar::int::<S>(num_actions as i64);
        MixedStrategy {
            player,
            probs: vec![share; num_actions],
        }
    }

    pub fn support(&self) -> Vec<usize> {
        self.probs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// A correlated distribution over the joint actions of a set of players.
///
/// `team` is sorted ascending; `probs` is indexed by the lexicographic order
/// of the members' joint actions, first member most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelatedStrategy<S: Scalar = Rational> {
    pub team: Vec<usize>,
    pub probs: Vec<S>,
}

impl<S: Scalar> CorrelatedStrategy<S> {
    pub fn new(mut team: Vec<usize>, probs: Vec<S>) -> Result<Self, GameError> {
        team.sort_unstable();
        if team.windows(2).any(|w| w[0] == w[1]) {
            return Err(GameError::InvalidPartition("duplicate team member".into()));
        }
        validate_distribution(&probs)?;
        Ok(CorrelatedStrategy { team, probs })
    }

    /// All mass on one joint action.
    pub fn pure(team: Vec<usize>, joint_index: usize, joint_count: usize) -> Self {
        let mut probs = vec![S::zero(); joint_count];
        probs[joint_index] = S::one();
        CorrelatedStrategy { team, probs }
    }

    /// Per-member marginal distribution, as a mixed strategy.
    pub fn marginal<G: Scalar>(&self, game: &Game<G>, member: usize) -> MixedStrategy<S> {
        let counts: Vec<usize> = self.team.iter().map(|&p| game.num_actions(p)).collect();
        let slot = self
            .team
            .iter()
            .position(|&p| p == member)
            .expect("member belongs to the strategy's team");
        let mut probs = vec![S::zero(); counts[slot]];
        for (index, mass) in self.probs.iter().enumerate() {
            if mass.is_zero() {
                continue;
            }
            let joint = decode_joint(index, &counts);
            probs[joint[slot]] += mass.clone();
        }
        MixedStrategy {
            player: member,
            probs,
        }
    }
}

/// A candidate pair (correlated team strategy, adversary mixed strategy).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeCandidate<S: Scalar = Rational> {
    pub team: CorrelatedStrategy<S>,
    pub adversary: MixedStrategy<S>,
}

impl<S: Scalar> CoeCandidate<S> {
    pub fn new(team: CorrelatedStrategy<S>, adversary: MixedStrategy<S>) -> Self {
        CoeCandidate { team, adversary }
    }

    /// Checks the candidate against a game's partition and dimensions.
    pub fn validate(&self, game: &Game<S>, partition: &TeamPartition) -> Result<(), GameError> {
        if self.team.team != partition.team() {
            return Err(GameError::CandidateMismatch(format!(
                "candidate team {:?} differs from partition team {:?}",
                self.team.team,
                partition.team()
            )));
        }
        if self.adversary.player != partition.adversary() {
            return Err(GameError::CandidateMismatch(format!(
                "candidate adversary {} differs from partition adversary {}",
                self.adversary.player,
                partition.adversary()
            )));
        }
        let joint_count: usize = partition
            .team()
            .iter()
            .map(|&p| game.num_actions(p))
            .product();
        if self.team.probs.len() != joint_count {
            return Err(GameError::CandidateMismatch(format!(
                "team distribution has {} entries, expected {joint_count}",
                self.team.probs.len()
            )));
        }
        if self.adversary.probs.len() != game.num_actions(partition.adversary()) {
            return Err(GameError::CandidateMismatch(format!(
                "adversary distribution has {} entries, expected {}",
                self.adversary.probs.len(),
                game.num_actions(partition.adversary())
            )));
        }
        validate_distribution(&self.team.probs)?;
        validate_distribution(&self.adversary.probs)?;
        Ok(())
    }
}

/// Product distribution over the joint actions of the given players.
///
/// The inputs must be sorted by player and cover distinct players; the
/// output's marginals equal the inputs exactly.
pub fn product_to_correlated<S: Scalar>(
    strategies: &[MixedStrategy<S>],
) -> Result<CorrelatedStrategy<S>, GameError> {
    if strategies.is_empty() {
        return Err(GameError::InvalidPartition("empty team".into()));
    }
    for pair in strategies.windows(2) {
        if pair[0].player >= pair[1].player {
            return Err(GameError::InvalidPartition(
                "team strategies must be sorted by player".into(),
            ));
        }
    }
    let team: Vec<usize> = strategies.iter().map(|s| s.player).collect();
    let counts: Vec<usize> = strategies.iter().map(|s| s.probs.len()).collect();
    let joint_count: usize = counts.iter().product();
    let mut probs = Vec::with_capacity(joint_count);
    for index in 0..joint_count {
        let joint = decode_joint(index, &counts);
        let mass = joint
            .iter()
            .enumerate()
            .fold(S::one(), |acc, (slot, &a)| acc * strategies[slot].probs[a].clone());
        probs.push(mass);
    }
    Ok(CorrelatedStrategy { team, probs })
}

fn validate_distribution<S: Scalar>(probs: &[S]) -> Result<(), GameError> {
    if probs.is_empty() {
        return Err(GameError::InvalidDistribution("empty distribution".into()));
    }
    let mut sum = S::zero();
    for p in probs {
        if p.is_negative() {
            return Err(GameError::InvalidDistribution(format!(
                "negative probability {p}"
            )));
        }
        sum += p.clone();
    }
    if !sum.is_one() {
        return Err(GameError::InvalidDistribution(format!(
            "probabilities sum to {sum}, expected 1"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    /// The classic two-player chicken matrix used across the crate's tests.
    pub(crate) fn chicken_2p() -> Game {
        Game::new(
            vec![labels(&["D", "C"]), labels(&["D", "C"])],
            vec![
                vec![int(0), int(0)],
                vec![int(7), int(2)],
                vec![int(2), int(7)],
                vec![int(6), int(6)],
            ],
            Some("chicken".into()),
        )
        .unwrap()
    }

    #[test]
    fn joint_indexing_is_lexicographic() {
        let g: Game = Game::from_fn(
            vec![labels(&["a", "b"]), labels(&["x", "y", "z"])],
            |joint| vec![int((joint[0] * 3 + joint[1]) as i64), int(0)],
            None,
        )
        .unwrap();
        assert_eq!(g.num_joint_actions(), 6);
        for (i, joint) in g.joint_actions().enumerate() {
            assert_eq!(g.joint_index(&joint), i);
            assert_eq!(*g.payoff_at(i, 0), int::<Rational>(i as i64));
        }
        assert_eq!(g.joint_at(4), vec![1, 1]);
    }

    #[test]
    fn rejects_malformed_games() {
        assert_eq!(
            Game::<Rational>::new(vec![labels(&["a"])], vec![vec![int(0)]], None),
            Err(GameError::TooFewPlayers(1))
        );
        assert!(matches!(
            Game::<Rational>::new(
                vec![labels(&["a"]), labels(&[])],
                vec![],
                None
            ),
            Err(GameError::EmptyActionSet(1))
        ));
        assert!(matches!(
            Game::<Rational>::new(
                vec![labels(&["a", "a"]), labels(&["x"])],
                vec![vec![int(0), int(0)], vec![int(0), int(0)]],
                None
            ),
            Err(GameError::DuplicateLabel { player: 0, .. })
        ));
        assert!(matches!(
            Game::<Rational>::new(
                vec![labels(&["a", "b"]), labels(&["x"])],
                vec![vec![int(0), int(0)]],
                None
            ),
            Err(GameError::PayoffCount { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn pure_profile_reads_tensor_entry() {
        let g = chicken_2p();
        let profile = vec![
            MixedStrategy::pure(0, 0, 2),
            MixedStrategy::pure(1, 1, 2),
        ];
        assert_eq!(g.expected_utility(&profile, 0).unwrap(), int(7));
        assert_eq!(g.expected_utility(&profile, 1).unwrap(), int(2));
    }

    #[test]
    fn matching_pennies_uniform_expectation_is_zero() {
        let g: Game = Game::new(
            vec![labels(&["H", "T"]), labels(&["H", "T"])],
            vec![
                vec![int(1), int(-1)],
                vec![int(-1), int(1)],
                vec![int(-1), int(1)],
                vec![int(1), int(-1)],
            ],
            None,
        )
        .unwrap();
        let profile = vec![MixedStrategy::uniform(0, 2), MixedStrategy::uniform(1, 2)];
        assert_eq!(g.expected_utility(&profile, 0).unwrap(), int(0));
        assert_eq!(g.expected_utility(&profile, 1).unwrap(), int(0));
    }

    #[test]
    fn product_distribution_masses() {
        let s: Vec<MixedStrategy> = vec![
            MixedStrategy::new(0, vec![frac(1, 3), frac(2, 3)]).unwrap(),
            MixedStrategy::new(1, vec![frac(1, 3), frac(2, 3)]).unwrap(),
        ];
        let x = product_to_correlated(&s).unwrap();
        assert_eq!(
            x.probs,
            vec![frac(1, 9), frac(2, 9), frac(2, 9), frac(4, 9)]
        );
        let g = chicken_2p();
        assert_eq!(x.marginal(&g, 0), s[0]);
        assert_eq!(x.marginal(&g, 1), s[1]);
    }

    #[test]
    fn product_of_pures_is_pure() {
        let s: Vec<MixedStrategy> = vec![MixedStrategy::pure(0, 1, 2), MixedStrategy::pure(1, 0, 2)];
        let x = product_to_correlated(&s).unwrap();
        assert_eq!(x.probs, vec![int(0), int(0), int(1), int(0)]);
    }

    #[test]
    fn product_of_uniforms_is_uniform() {
        let s: Vec<MixedStrategy> = vec![MixedStrategy::uniform(0, 2), MixedStrategy::uniform(1, 2)];
        let x = product_to_correlated(&s).unwrap();
        assert_eq!(x.probs, vec![frac(1, 4); 4]);
    }

    #[test]
    fn distribution_validation() {
        assert!(MixedStrategy::<Rational>::new(0, vec![frac(1, 2), frac(1, 2)]).is_ok());
        assert!(MixedStrategy::<Rational>::new(0, vec![frac(1, 2), frac(1, 3)]).is_err());
        assert!(MixedStrategy::<Rational>::new(0, vec![frac(3, 2), frac(-1, 2)]).is_err());
    }

    #[test]
    fn zero_sum_is_invariant_under_player_reordering() {
        let g: Game = Game::new(
            vec![labels(&["a", "b"]), labels(&["x", "y"])],
            vec![
                vec![int(3), int(-3)],
                vec![int(-5), int(5)],
                vec![int(0), int(0)],
                vec![int(2), int(-2)],
            ],
            None,
        )
        .unwrap();
        assert!(g.is_zero_sum());
        // Swap the two players: transpose the tensor and the payoff order.
        let swapped: Game = Game::from_fn(
            vec![labels(&["x", "y"]), labels(&["a", "b"])],
            |joint| {
                let original = [joint[1], joint[0]];
                vec![
                    g.payoff(&original, 1).clone(),
                    g.payoff(&original, 0).clone(),
                ]
            },
            None,
        )
        .unwrap();
        assert!(swapped.is_zero_sum());
    }

    #[test]
    fn partition_validation() {
        let g = chicken_2p();
        assert!(TeamPartition::new(vec![0], 1).validate(&g).is_ok());
        assert!(TeamPartition::new(vec![0, 1], 1).validate(&g).is_err());
        assert!(TeamPartition::new(vec![1], 1).validate(&g).is_err());
        assert!(TeamPartition::new(vec![], 1).validate(&g).is_err());
        assert_eq!(TeamPartition::against(&g, 1).team(), &[0]);
    }
}
