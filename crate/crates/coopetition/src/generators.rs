//! Game constructors: worked examples, reduction gadgets, and seeded
//! random families.
//!
//! The chicken-based examples specify team payoffs only under the
//! adversary's action `B`; the adversary's own utilities and the payoffs
//! under `A` are reconstructed as a zero-sum closure (`u_adv = -(u_1+u_2)`)
//! with both team players receiving 10 under `A`, which makes `B` strictly
//! dominant for the adversary. A generator test asserts that dominance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::game::{Game, GameError, TeamPartition};
use crate::scalar::{frac, int, Scalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("expected a 2-player game, got {0} players")]
    WrongPlayerCount(usize),
    #[error("invalid dimensions: {0}")]
    InvalidDims(String),
    #[error("invalid proportionality constants: {0}")]
    InvalidConstants(String),
    #[error("invalid formula: {0}")]
    Formula(String),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// A game together with its team/adversary partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeamGame<S: Scalar = crate::scalar::Rational> {
    pub game: Game<S>,
    pub partition: TeamPartition,
}

/// Cap on generated joint-action counts.
pub const DIMS_CEILING: usize = 10_000;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The two-player chicken matrix (payoffs D/C vs D/C).
pub fn two_player_chicken<S: Scalar>() -> Game<S> {
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
    .expect("static game is well-formed")
}

/// The pair of three-player chicken team games: the original heterogeneous
/// payoffs, and the variant where each team payoff is replaced by half the
/// team total ("ignoring the difference").
pub fn chicken_games<S: Scalar>() -> (TeamGame<S>, TeamGame<S>) {
    let actions = || {
        vec![
            labels(&["D", "C"]),
            labels(&["D", "C"]),
            labels(&["A", "B"]),
        ]
    };
    let closure = |u1: S, u2: S| {
        let adversary = -(u1.clone() + u2.clone());
        vec![u1, u2, adversary]
    };
    // Team payoffs under B, indexed by (p1 action, p2 action).
    let build = |name: &str, under_b: [[(S, S); 2]; 2]| -> TeamGame<S> {
        let game = Game::from_fn(
            actions(),
            |joint| {
                if joint[2] == 0 {
                    closure(int(10), int(10))
                } else {
                    let (u1, u2) = under_b[joint[0]][joint[1]].clone();
                    closure(u1, u2)
                }
            },
            Some(name.into()),
        )
        .expect("static game is well-formed");
        TeamGame {
            game,
            partition: TeamPartition::new(vec![0, 1], 2),
        }
    };
    let ga = build(
        "chicken-a",
        [
            [(int(0), int(0)), (int(7), int(2))],
            [(int(2), int(7)), (int(6), int(6))],
        ],
    );
    let gb = build(
        "chicken-b",
        [
            [(int(0), int(0)), (frac(9, 2), frac(9, 2))],
            [(frac(9, 2), frac(9, 2)), (int(6), int(6))],
        ],
    );
    (ga, gb)
}

/// The three-player general-sum game contrasting correlated equilibria with
/// co-opetition equilibria: all payoffs are zero except three profiles
/// under the first player's action `a1`.
pub fn modified_chicken_game<S: Scalar>() -> TeamGame<S> {
    let game = Game::from_fn(
        vec![
            labels(&["a1", "a2"]),
            labels(&["b1", "b2"]),
            labels(&["c1", "c2"]),
        ],
        |joint| match (joint[0], joint[1], joint[2]) {
            (0, 0, 1) => vec![int(0), int(7), int(2)],
            (0, 1, 1) => vec![int(0), int(6), int(6)],
            (0, 1, 0) => vec![int(0), int(2), int(7)],
            _ => vec![int(0), int(0), int(0)],
        },
        Some("modified-chicken".into()),
    )
    .expect("static game is well-formed");
    TeamGame {
        game,
        partition: TeamPartition::new(vec![0, 1], 2),
    }
}

/// The zero-sum counterexample showing that co-opetition equilibria need
/// not be exchangeable when team utilities are inconsistent.
pub fn exchangeability_counterexample<S: Scalar>() -> TeamGame<S> {
    let game = Game::from_fn(
        vec![
            labels(&["a1", "a2"]),
            labels(&["b1", "b2"]),
            labels(&["c1", "c2"]),
        ],
        |joint| match (joint[0], joint[1], joint[2]) {
            (0, 1, _) => vec![int(0), int(1), int(-1)],
            (1, 0, _) => vec![int(1), int(0), int(-1)],
            (1, 1, 1) => vec![int(0), int(1), int(-1)],
            _ => vec![int(0), int(0), int(0)],
        },
        Some("exchange-counter".into()),
    )
    .expect("static game is well-formed");
    TeamGame {
        game,
        partition: TeamPartition::new(vec![0, 1], 2),
    }
}

/// Embeds a two-player game into a three-player zero-sum adversarial team
/// game by adding a single-action dummy team player whose payoff is the
/// negative sum of the other two.
pub fn reduce_two_player<S: Scalar>(g2: &Game<S>) -> Result<TeamGame<S>, GeneratorError> {
    if g2.num_players() != 2 {
        return Err(GeneratorError::WrongPlayerCount(g2.num_players()));
    }
    let actions = vec![
        labels(&["a1"]),
        g2.action_labels(0).to_vec(),
        g2.action_labels(1).to_vec(),
    ];
    let name = g2
        .name()
        .map(|n| format!("{n}-reduced"))
        .or_else(|| Some("reduced".into()));
    let game = Game::from_fn(
        actions,
        |joint| {
            let original = [joint[1], joint[2]];
            let u2 = g2.payoff(&original, 0).clone();
            let u3 = g2.payoff(&original, 1).clone();
            vec![-(u2.clone() + u3.clone()), u2, u3]
        },
        name,
    )?;
    Ok(TeamGame {
        game,
        partition: TeamPartition::new(vec![0, 1], 2),
    })
}

/// One signed literal of a CNF formula; variables are numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn negated(self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }
}

/// A CNF formula over variables `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, GeneratorError> {
        if num_vars == 0 {
            return Err(GeneratorError::Formula("formula has no variables".into()));
        }
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(GeneratorError::Formula(format!("clause {} is empty", i + 1)));
            }
            for lit in clause {
                if lit.var == 0 || lit.var > num_vars {
                    return Err(GeneratorError::Formula(format!(
                        "clause {} references variable {} outside 1..={num_vars}",
                        i + 1,
                        lit.var
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Parses the usual clause-list convention: one clause per line of
    /// signed integers with an optional terminating 0, `c` comment lines,
    /// and an optional `p cnf <vars> <clauses>` header.
    pub fn parse(text: &str) -> Result<Self, GeneratorError> {
        let mut declared_vars: Option<usize> = None;
        let mut clauses = Vec::new();
        let mut max_var = 0usize;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if fields.len() < 2 || fields[0] != "cnf" {
                    return Err(GeneratorError::Formula(format!(
                        "line {}: bad problem header",
                        lineno + 1
                    )));
                }
                declared_vars = Some(fields[1].parse().map_err(|_| {
                    GeneratorError::Formula(format!("line {}: bad variable count", lineno + 1))
                })?);
                continue;
            }
            let mut clause = Vec::new();
            let mut terminated = false;
            for token in line.split_whitespace() {
                if terminated {
                    return Err(GeneratorError::Formula(format!(
                        "line {}: literals after terminating 0",
                        lineno + 1
                    )));
                }
                let value: i64 = token.parse().map_err(|_| {
                    GeneratorError::Formula(format!(
                        "line {}: {token:?} is not an integer literal",
                        lineno + 1
                    ))
                })?;
                if value == 0 {
                    terminated = true;
                    continue;
                }
                let var = value.unsigned_abs() as usize;
                max_var = max_var.max(var);
                clause.push(Literal {
                    var,
                    positive: value > 0,
                });
            }
            if clause.is_empty() {
                return Err(GeneratorError::Formula(format!(
                    "line {}: empty clause",
                    lineno + 1
                )));
            }
            clauses.push(clause);
        }
        let num_vars = declared_vars.unwrap_or(max_var);
        CnfFormula::new(num_vars.max(max_var), clauses)
    }
}

/// The symmetric two-player game whose Nash equilibria encode satisfying
/// assignments of a CNF formula.
///
/// Actions are all literals, all variables, all clauses, and a fallback
/// action `f`. Against an opponent mixing uniformly over the literals of a
/// satisfying assignment, every such literal yields exactly 1, the fallback
/// yields 1, and nothing yields more; `(f, f)` always yields 2. The
/// diagonal literal payoff (the same literal on both sides) is 1, which is
/// what the uniform-assignment value requires.
pub fn sat_game<S: Scalar>(formula: &CnfFormula) -> Result<Game<S>, GeneratorError> {
    let k = formula.num_vars;
    let mut names: Vec<String> = Vec::new();
    for v in 1..=k {
        names.push(format!("z{v}"));
        names.push(format!("~z{v}"));
    }
    for v in 1..=k {
        names.push(format!("y{v}"));
    }
    for c in 1..=formula.clauses.len() {
        names.push(format!("c{c}"));
    }
    names.push("f".into());

    let literal_count = 2 * k;
    let var_start = literal_count;
    let clause_start = var_start + k;
    let fallback = clause_start + formula.clauses.len();
    let two_minus_k = int::<S>(2) - int::<S>(k as i64);

    let literal_of = |index: usize| -> Literal {
        Literal {
            var: index / 2 + 1,
            positive: index.is_multiple_of(2),
        }
    };
    // Row player's payoff; the column player's is the mirror image.
    let row_payoff = |row: usize, col: usize| -> S {
        if row < literal_count {
            if col < literal_count {
                let l = literal_of(row);
                let m = literal_of(col);
                if m == l.negated() {
                    int(-2)
                } else {
                    int(1)
                }
            } else {
                int(-2)
            }
        } else if row < clause_start {
            let variable = row - var_start + 1;
            if col < literal_count {
                if literal_of(col).var == variable {
                    two_minus_k.clone()
                } else {
                    int(2)
                }
            } else {
                int(-2)
            }
        } else if row < fallback {
            let clause = &formula.clauses[row - clause_start];
            if col < literal_count {
                if clause.contains(&literal_of(col)) {
                    two_minus_k.clone()
                } else {
                    int(2)
                }
            } else {
                int(-2)
            }
        } else if col == fallback {
            int(2)
        } else {
            int(1)
        }
    };

    Ok(Game::from_fn(
        vec![names.clone(), names],
        |joint| vec![row_payoff(joint[0], joint[1]), row_payoff(joint[1], joint[0])],
        Some("sat-game".into()),
    )?)
}

/// Action indices of the literal block of a SAT game, per player.
pub fn sat_literal_actions(formula: &CnfFormula) -> Vec<usize> {
    (0..2 * formula.num_vars).collect()
}

/// Payoff structure of a randomly generated game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RandomFlavor<S: Scalar> {
    /// Independent integer payoffs in [-8, 8].
    General,
    /// All but the last player draw payoffs; the last balances the sum.
    ZeroSum,
    /// A random team tensor `u_T` with `u_i = u_T / k_i` and adversary
    /// `-u_T`; the constants must be positive with reciprocals summing
    /// to one.
    ConsistentZeroSum(Vec<S>),
}

/// Deterministically generates a game for `(dims, seed, flavor)`. The last
/// player is the adversary.
pub fn random_game<S: Scalar>(
    dims: &[usize],
    seed: u64,
    flavor: &RandomFlavor<S>,
) -> Result<TeamGame<S>, GeneratorError> {
    let n = dims.len();
    if n < 2 {
        return Err(GeneratorError::InvalidDims(format!(
            "need at least 2 players, got {n}"
        )));
    }
    if dims.contains(&0) {
        return Err(GeneratorError::InvalidDims("empty action set".into()));
    }
    let joints: usize = dims.iter().product();
    if joints > DIMS_CEILING {
        return Err(GeneratorError::InvalidDims(format!(
            "{joints} joint actions exceeds the ceiling of {DIMS_CEILING}"
        )));
    }
    if let RandomFlavor::ConsistentZeroSum(constants) = flavor {
        if constants.len() != n - 1 {
            return Err(GeneratorError::InvalidConstants(format!(
                "{} constants for {} team players",
                constants.len(),
                n - 1
            )));
        }
        if constants.iter().any(|k| !k.is_positive()) {
            return Err(GeneratorError::InvalidConstants(
                "constants must be positive".into(),
            ));
        }
        let reciprocal_sum = constants
            .iter()
            .fold(S::zero(), |acc, k| acc + S::one() / k.clone());
        if !reciprocal_sum.is_one() {
            return Err(GeneratorError::InvalidConstants(format!(
                "reciprocals sum to {reciprocal_sum}, expected 1"
            )));
        }
    }

    let actions: Vec<Vec<String>> = dims
        .iter()
        .enumerate()
        .map(|(p, &d)| (0..d).map(|a| format!("p{p}a{a}")).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || int::<S>(rng.gen_range(-8i64..=8));
    let mut entries: Vec<Vec<S>> = Vec::with_capacity(joints);
    for _ in 0..joints {
        let entry = match flavor {
            RandomFlavor::General => (0..n).map(|_| draw()).collect(),
            RandomFlavor::ZeroSum => {
                let mut payoffs: Vec<S> = (0..n - 1).map(|_| draw()).collect();
                let balance = -payoffs.iter().fold(S::zero(), |acc, u| acc + u.clone());
                payoffs.push(balance);
                payoffs
            }
            RandomFlavor::ConsistentZeroSum(constants) => {
                let team_total = draw();
                let mut payoffs: Vec<S> = constants
                    .iter()
                    .map(|k| team_total.clone() / k.clone())
                    .collect();
                payoffs.push(-team_total);
                payoffs
            }
        };
        entries.push(entry);
    }
    let flavor_tag = match flavor {
        RandomFlavor::General => "general",
        RandomFlavor::ZeroSum => "zero-sum",
        RandomFlavor::ConsistentZeroSum(_) => "consistent-zero-sum",
    };
    let game = Game::new(
        actions,
        entries,
        Some(format!("random-{flavor_tag}-{seed}")),
    )?;
    Ok(TeamGame {
        game,
        partition: TeamPartition::new((0..n - 1).collect(), n - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibria::{check_consistency, verify_ne};
    use crate::game::MixedStrategy;
    use crate::scalar::Rational;

    fn r(v: i64) -> Rational {
        int(v)
    }

    #[test]
    fn chicken_team_tensors_match_the_tables() {
        let (ga, gb) = chicken_games::<Rational>();
        // (D, C, B) and its merged-utility counterpart.
        assert_eq!(*ga.game.payoff(&[0, 1, 1], 0), r(7));
        assert_eq!(*ga.game.payoff(&[0, 1, 1], 1), r(2));
        assert_eq!(*ga.game.payoff(&[0, 1, 1], 2), r(-9));
        assert_eq!(*gb.game.payoff(&[0, 1, 1], 0), frac(9, 2));
        assert_eq!(*gb.game.payoff(&[0, 1, 1], 1), frac(9, 2));
        assert_eq!(*gb.game.payoff(&[0, 1, 1], 2), r(-9));
        assert_eq!(*ga.game.payoff(&[1, 1, 0], 0), r(10));
        assert!(ga.game.is_zero_sum());
        assert!(gb.game.is_zero_sum());
    }

    #[test]
    fn adversary_second_action_strictly_dominates() {
        let (ga, gb) = chicken_games::<Rational>();
        for tg in [&ga, &gb] {
            for t1 in 0..2 {
                for t2 in 0..2 {
                    let under_a = tg.game.payoff(&[t1, t2, 0], 2);
                    let under_b = tg.game.payoff(&[t1, t2, 1], 2);
                    assert!(under_b > under_a);
                }
            }
        }
    }

    #[test]
    fn modified_chicken_entries() {
        let tg = modified_chicken_game::<Rational>();
        assert_eq!(*tg.game.payoff(&[0, 0, 1], 1), r(7));
        assert_eq!(*tg.game.payoff(&[0, 0, 1], 2), r(2));
        assert_eq!(*tg.game.payoff(&[1, 0, 0], 0), r(0));
        assert_eq!(*tg.game.payoff(&[1, 0, 0], 1), r(0));
        assert_eq!(*tg.game.payoff(&[1, 0, 0], 2), r(0));
    }

    #[test]
    fn counterexample_is_zero_sum_and_inconsistent() {
        let tg = exchangeability_counterexample::<Rational>();
        assert!(tg.game.is_zero_sum());
        assert_eq!(*tg.game.payoff(&[1, 0, 0], 0), r(1));
        assert_eq!(*tg.game.payoff(&[1, 0, 0], 2), r(-1));
        assert_eq!(*tg.game.payoff(&[1, 1, 1], 1), r(1));
        let report = check_consistency(&tg.game, &tg.partition).unwrap();
        assert!(!report.consistent);
    }

    #[test]
    fn reduction_adds_balancing_dummy() {
        let reduced = reduce_two_player(&two_player_chicken::<Rational>()).unwrap();
        assert_eq!(reduced.game.num_players(), 3);
        assert_eq!(reduced.game.num_actions(0), 1);
        assert_eq!(*reduced.game.payoff(&[0, 0, 1], 0), r(-9));
        assert_eq!(*reduced.game.payoff(&[0, 0, 1], 1), r(7));
        assert_eq!(*reduced.game.payoff(&[0, 0, 1], 2), r(2));
        assert!(reduced.game.is_zero_sum());
        assert_eq!(reduced.partition.team(), &[0, 1]);
        // The restriction to the original two players is the input game.
        let g2 = two_player_chicken::<Rational>();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(reduced.game.payoff(&[0, a, b], 1), g2.payoff(&[a, b], 0));
                assert_eq!(reduced.game.payoff(&[0, a, b], 2), g2.payoff(&[a, b], 1));
            }
        }
    }

    #[test]
    fn reduction_rejects_non_two_player_input() {
        let (ga, _) = chicken_games::<Rational>();
        assert_eq!(
            reduce_two_player(&ga.game),
            Err(GeneratorError::WrongPlayerCount(3))
        );
    }

    #[test]
    fn formula_parsing() {
        let phi = CnfFormula::parse("1 -2 0\n").unwrap();
        assert_eq!(phi.num_vars, 2);
        assert_eq!(phi.clauses.len(), 1);
        assert_eq!(
            phi.clauses[0],
            vec![
                Literal { var: 1, positive: true },
                Literal { var: 2, positive: false },
            ]
        );
        let with_header = CnfFormula::parse("c comment\np cnf 3 2\n1 0\n-1 0\n").unwrap();
        assert_eq!(with_header.num_vars, 3);
        assert_eq!(with_header.clauses.len(), 2);
        assert!(CnfFormula::parse("1 0 2 0").is_err());
        assert!(CnfFormula::parse("x").is_err());
    }

    #[test]
    fn sat_game_payoff_rules() {
        // phi = (z1 or ~z2), k = 2: actions z1 ~z1 z2 ~z2 y1 y2 c1 f.
        let phi = CnfFormula::parse("1 -2 0").unwrap();
        let g = sat_game::<Rational>(&phi).unwrap();
        assert_eq!(g.num_actions(0), 8);
        let idx = |label: &str| g.action_index(0, label).unwrap();
        // Fallback against fallback.
        assert_eq!(*g.payoff(&[idx("f"), idx("f")], 0), r(2));
        assert_eq!(*g.payoff(&[idx("f"), idx("z1")], 0), r(1));
        // Distinct non-negating literals and the diagonal.
        assert_eq!(*g.payoff(&[idx("z1"), idx("~z2")], 0), r(1));
        assert_eq!(*g.payoff(&[idx("z1"), idx("z1")], 0), r(1));
        assert_eq!(*g.payoff(&[idx("z1"), idx("~z1")], 0), r(-2));
        assert_eq!(*g.payoff(&[idx("~z1"), idx("z1")], 0), r(-2));
        // Literal rows against non-literal columns.
        assert_eq!(*g.payoff(&[idx("z1"), idx("y1")], 0), r(-2));
        // Variable rows: 2 - k against own literals, 2 against others.
        assert_eq!(*g.payoff(&[idx("y1"), idx("z1")], 0), r(0));
        assert_eq!(*g.payoff(&[idx("y1"), idx("~z2")], 0), r(2));
        assert_eq!(*g.payoff(&[idx("y1"), idx("c1")], 0), r(-2));
        // Clause rows: 2 - k against member literals, 2 against others.
        assert_eq!(*g.payoff(&[idx("c1"), idx("z1")], 0), r(0));
        assert_eq!(*g.payoff(&[idx("c1"), idx("z2")], 0), r(2));
        assert_eq!(*g.payoff(&[idx("c1"), idx("f")], 0), r(-2));
    }

    #[test]
    fn sat_game_is_symmetric() {
        let phi = CnfFormula::parse("1 -2 0\n2 0").unwrap();
        let g = sat_game::<Rational>(&phi).unwrap();
        for a in 0..g.num_actions(0) {
            for b in 0..g.num_actions(1) {
                assert_eq!(g.payoff(&[a, b], 0), g.payoff(&[b, a], 1));
            }
        }
    }

    #[test]
    fn sat_game_diagonal_payoff_under_one_variable() {
        let phi = CnfFormula::parse("1 0").unwrap();
        let g = sat_game::<Rational>(&phi).unwrap();
        let z1 = g.action_index(0, "z1").unwrap();
        assert_eq!(*g.payoff(&[z1, z1], 0), r(1));
        assert_eq!(*g.payoff(&[z1, z1], 1), r(1));
    }

    #[test]
    fn satisfying_uniform_literal_profile_is_nash() {
        let phi = CnfFormula::parse("1 -2 0").unwrap();
        let g = sat_game::<Rational>(&phi).unwrap();
        let z1 = g.action_index(0, "z1").unwrap();
        let nz2 = g.action_index(0, "~z2").unwrap();
        let probs = {
            let mut v = vec![r(0); g.num_actions(0)];
            v[z1] = frac(1, 2);
            v[nz2] = frac(1, 2);
            v
        };
        let profile = vec![
            MixedStrategy::new(0, probs.clone()).unwrap(),
            MixedStrategy::new(1, probs).unwrap(),
        ];
        assert!(verify_ne(&g, &profile).unwrap().holds());
        assert_eq!(g.expected_utility(&profile, 0).unwrap(), r(1));
        assert_eq!(g.expected_utility(&profile, 1).unwrap(), r(1));
    }

    #[test]
    fn random_games_are_deterministic_per_seed() {
        let a = random_game::<Rational>(&[2, 3, 2], 11, &RandomFlavor::General).unwrap();
        let b = random_game::<Rational>(&[2, 3, 2], 11, &RandomFlavor::General).unwrap();
        let c = random_game::<Rational>(&[2, 3, 2], 12, &RandomFlavor::General).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn zero_sum_flavor_is_zero_sum() {
        let tg = random_game::<Rational>(&[2, 2, 3], 5, &RandomFlavor::ZeroSum).unwrap();
        assert!(tg.game.is_zero_sum());
    }

    #[test]
    fn consistent_flavor_reports_its_constants() {
        let tg = random_game::<Rational>(
            &[2, 2, 2],
            7,
            &RandomFlavor::ConsistentZeroSum(vec![r(2), r(2)]),
        )
        .unwrap();
        assert!(tg.game.is_zero_sum());
        let report = check_consistency(&tg.game, &tg.partition).unwrap();
        assert!(report.consistent);
        assert_eq!(report.constants, vec![(0, r(2)), (1, r(2))]);
    }

    #[test]
    fn constants_are_validated() {
        assert!(matches!(
            random_game::<Rational>(&[2, 2, 2], 1, &RandomFlavor::ConsistentZeroSum(vec![r(2), r(3)])),
            Err(GeneratorError::InvalidConstants(_))
        ));
        assert!(matches!(
            random_game::<Rational>(&[2, 2, 2], 1, &RandomFlavor::ConsistentZeroSum(vec![r(-1), r(1)])),
            Err(GeneratorError::InvalidConstants(_))
        ));
    }

    #[test]
    fn dims_are_validated() {
        assert!(random_game::<Rational>(&[2], 0, &RandomFlavor::General).is_err());
        assert!(random_game::<Rational>(&[0, 2], 0, &RandomFlavor::General).is_err());
        assert!(random_game::<Rational>(&[110, 110], 0, &RandomFlavor::General).is_err());
    }
}
