//! Nash equilibrium search by support enumeration.
//!
//! Candidate supports are enumerated per player, the exact indifference and
//! feasibility systems are solved for each support profile, and every
//! candidate is re-verified against the full game before being returned.
//! Equilibria are found whenever at most two players mix (the systems are
//! then linear and solved by feasibility LPs) and for fully mixed 2x2x2
//! supports of three-player games (a quadratic, solved when its roots lie
//! in the scalar field). Supports with three or more mixing players and
//! larger supports fall outside the solvable class and are skipped, as are
//! equilibria whose coordinates are irrational.
//!
//! For two-player games this is the classic complete procedure: every
//! support pattern of a true equilibrium yields feasible systems, and any
//! feasible point of those systems is itself an equilibrium.

use crate::game::{Game, MixedStrategy};
use crate::lp::{solve_lp, LinearProgram, LpSolution, Relation, Sense};
use crate::scalar::{ExactSqrt, Scalar};

use super::{verify_ne, SolveError};

/// Cap on joint-action count for enumeration inputs.
pub const ENUMERATION_CEILING: usize = 10_000;

/// Cap on the number of support profiles examined in one call.
const SUPPORT_PROFILE_CEILING: u128 = 1_000_000;

/// Finds Nash equilibria with per-player supports of at most `max_support`
/// actions. Every returned profile passes the exact deviation check.
pub fn find_nash_support_enumeration<S: Scalar + ExactSqrt>(
    game: &Game<S>,
    max_support: usize,
) -> Result<Vec<Vec<MixedStrategy<S>>>, SolveError<S>> {
    let allowed: Vec<Vec<usize>> = (0..game.num_players())
        .map(|p| (0..game.num_actions(p)).collect())
        .collect();
    find_nash_restricted(game, &allowed, max_support)
}

/// Support enumeration with supports drawn only from `allowed` actions.
///
/// Deviations are still checked against the full action sets, so the result
/// is the set of discovered equilibria of the whole game whose supports lie
/// inside `allowed`.
pub fn find_nash_restricted<S: Scalar + ExactSqrt>(
    game: &Game<S>,
    allowed: &[Vec<usize>],
    max_support: usize,
) -> Result<Vec<Vec<MixedStrategy<S>>>, SolveError<S>> {
    let n = game.num_players();
    if max_support == 0 {
        return Err(SolveError::InvalidArgument(
            "support size must be at least 1".into(),
        ));
    }
    if allowed.len() != n {
        return Err(SolveError::InvalidArgument(format!(
            "{} allowed-action sets for {n} players",
            allowed.len()
        )));
    }
    for (p, actions) in allowed.iter().enumerate() {
        if actions.is_empty() {
            return Err(SolveError::InvalidArgument(format!(
                "player {p} has no allowed actions"
            )));
        }
        if actions.windows(2).any(|w| w[0] >= w[1])
            || actions.iter().any(|&a| a >= game.num_actions(p))
        {
            return Err(SolveError::InvalidArgument(format!(
                "allowed actions for player {p} must be sorted, distinct, and in range"
            )));
        }
    }
    let joints = game.num_joint_actions();
    if joints > ENUMERATION_CEILING {
        return Err(SolveError::GameCeiling {
            joints,
            ceiling: ENUMERATION_CEILING,
        });
    }

    let subsets: Vec<Vec<Vec<usize>>> = allowed
        .iter()
        .map(|actions| subsets_up_to(actions, max_support))
        .collect();
    let combinations = subsets
        .iter()
        .fold(1u128, |acc, s| acc.saturating_mul(s.len() as u128));
    if combinations > SUPPORT_PROFILE_CEILING {
        return Err(SolveError::InvalidArgument(format!(
            "support enumeration would examine {combinations} support profiles, above the ceiling of {SUPPORT_PROFILE_CEILING}"
        )));
    }

    let mut results: Vec<Vec<MixedStrategy<S>>> = Vec::new();
    let mut cursor = vec![0usize; n];
    loop {
        let supports: Vec<&[usize]> = cursor
            .iter()
            .enumerate()
            .map(|(p, &i)| subsets[p][i].as_slice())
            .collect();
        for profile in candidates_for_support(game, &supports)? {
            if verify_ne(game, &profile)?.holds()
                && !results.iter().any(|existing| same_profile(existing, &profile))
            {
                results.push(profile);
            }
        }
        // Odometer over support choices, last player fastest.
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(results);
            }
            pos -= 1;
            cursor[pos] += 1;
            if cursor[pos] < subsets[pos].len() {
                break;
            }
            cursor[pos] = 0;
        }
    }
}

fn same_profile<S: Scalar>(a: &[MixedStrategy<S>], b: &[MixedStrategy<S>]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.probs == y.probs)
}

/// All non-empty subsets of `items` up to `max_size`, in (size, lex) order.
fn subsets_up_to(items: &[usize], max_size: usize) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut out = Vec::new();
    for size in 1..=max_size.min(n) {
        let mut combo: Vec<usize> = (0..size).collect();
        'combos: loop {
            out.push(combo.iter().map(|&i| items[i]).collect());
            let mut i = size;
            while i > 0 {
                i -= 1;
                if combo[i] < n - size + i {
                    combo[i] += 1;
                    for j in i + 1..size {
                        combo[j] = combo[j - 1] + 1;
                    }
                    continue 'combos;
                }
            }
            break;
        }
    }
    out
}

/// Candidate profiles for one support assignment. Callers re-verify.
fn candidates_for_support<S: Scalar + ExactSqrt>(
    game: &Game<S>,
    supports: &[&[usize]],
) -> Result<Vec<Vec<MixedStrategy<S>>>, SolveError<S>> {
    let mixed: Vec<usize> = supports
        .iter()
        .enumerate()
        .filter(|(_, s)| s.len() >= 2)
        .map(|(p, _)| p)
        .collect();
    match mixed.len() {
        0 => {
            let profile = (0..game.num_players())
                .map(|p| MixedStrategy::pure(p, supports[p][0], game.num_actions(p)))
                .collect();
            Ok(vec![profile])
        }
        1 => Ok(solve_one_mixed(game, supports, mixed[0])?.into_iter().collect()),
        2 => Ok(solve_two_mixed(game, supports, mixed[0], mixed[1])?
            .into_iter()
            .collect()),
        3 if game.num_players() == 3 && supports.iter().all(|s| s.len() == 2) => {
            solve_fully_mixed_2x2x2(game, supports)
        }
        _ => Ok(Vec::new()),
    }
}

/// Joint action template taking each player's first support action.
fn base_joint<S: Scalar>(_game: &Game<S>, supports: &[&[usize]]) -> Vec<usize> {
    supports.iter().map(|s| s[0]).collect()
}

/// One player mixes, everyone else is pure. The mixer must already be
/// indifferent across its support (constants), and a feasibility LP finds a
/// mix of its support keeping every pure player optimal.
fn solve_one_mixed<S: Scalar>(
    game: &Game<S>,
    supports: &[&[usize]],
    mixer: usize,
) -> Result<Option<Vec<MixedStrategy<S>>>, SolveError<S>> {
    let base = base_joint(game, supports);
    let support = supports[mixer];

    // Indifference across the support is a condition on constants here.
    let mut joint = base.clone();
    joint[mixer] = support[0];
    let value = game.payoff(&joint, mixer).clone();
    for &a in &support[1..] {
        joint[mixer] = a;
        if *game.payoff(&joint, mixer) != value {
            return Ok(None);
        }
    }
    // No out-of-support action may beat the support.
    for b in 0..game.num_actions(mixer) {
        if support.contains(&b) {
            continue;
        }
        joint[mixer] = b;
        if *game.payoff(&joint, mixer) > value {
            return Ok(None);
        }
    }

    // Feasibility LP over the mixer's support weights.
    let vars = support.len();
    let mut lp = LinearProgram::new(Sense::Maximize, vec![S::zero(); vars]);
    for (p, &own) in base.iter().enumerate() {
        if p == mixer {
            continue;
        }
        for b in 0..game.num_actions(p) {
            if b == own {
                continue;
            }
            let coeffs: Vec<S> = support
                .iter()
                .map(|&a| {
                    let mut stay = base.clone();
                    stay[mixer] = a;
                    let mut dev = stay.clone();
                    dev[p] = b;
                    game.payoff(&stay, p).clone() - game.payoff(&dev, p).clone()
                })
                .collect();
            lp.add_constraint(coeffs, Relation::Ge, S::zero());
        }
    }
    lp.add_constraint(vec![S::one(); vars], Relation::Eq, S::one());

    match solve_lp(&lp)? {
        LpSolution::Optimal(sol) => {
            let mut profile: Vec<MixedStrategy<S>> = (0..game.num_players())
                .map(|p| MixedStrategy::pure(p, base[p], game.num_actions(p)))
                .collect();
            profile[mixer] = spread(support, &sol.primal, mixer, game.num_actions(mixer));
            Ok(Some(profile))
        }
        _ => Ok(None),
    }
}

/// Two players mix. Each mixer's indifference system is linear in the
/// *other* mixer's weights, so the two systems decouple into feasibility
/// LPs; remaining pure players are validated by the caller's full check.
fn solve_two_mixed<S: Scalar>(
    game: &Game<S>,
    supports: &[&[usize]],
    first: usize,
    second: usize,
) -> Result<Option<Vec<MixedStrategy<S>>>, SolveError<S>> {
    let Some(second_mix) = equalizing_mix(game, supports, first, second)? else {
        return Ok(None);
    };
    let Some(first_mix) = equalizing_mix(game, supports, second, first)? else {
        return Ok(None);
    };
    let mut profile: Vec<MixedStrategy<S>> = base_joint(game, supports)
        .iter()
        .enumerate()
        .map(|(p, &a)| MixedStrategy::pure(p, a, game.num_actions(p)))
        .collect();
    profile[first] = spread(supports[first], &first_mix, first, game.num_actions(first));
    profile[second] = spread(supports[second], &second_mix, second, game.num_actions(second));
    Ok(Some(profile))
}

/// Weights over `chooser`'s support making `responder` indifferent across
/// its own support and no better off outside it, all other players pure.
fn equalizing_mix<S: Scalar>(
    game: &Game<S>,
    supports: &[&[usize]],
    responder: usize,
    chooser: usize,
) -> Result<Option<Vec<S>>, SolveError<S>> {
    let base = base_joint(game, supports);
    let chooser_support = supports[chooser];
    let responder_support = supports[responder];
    let vars = chooser_support.len(); // weights, plus one free value variable
    let mut lp = LinearProgram::new(Sense::Maximize, vec![S::zero(); vars + 1]);
    lp.free_var(vars);

    let payoff_row = |responder_action: usize| -> Vec<S> {
        chooser_support
            .iter()
            .map(|&b| {
                let mut joint = base.clone();
                joint[responder] = responder_action;
                joint[chooser] = b;
                game.payoff(&joint, responder).clone()
            })
            .collect()
    };
    for &a in responder_support {
        let mut coeffs = payoff_row(a);
        coeffs.push(-S::one());
        lp.add_constraint(coeffs, Relation::Eq, S::zero());
    }
    for b in 0..game.num_actions(responder) {
        if responder_support.contains(&b) {
            continue;
        }
        let mut coeffs = payoff_row(b);
        coeffs.push(-S::one());
        lp.add_constraint(coeffs, Relation::Le, S::zero());
    }
    let mut simplex = vec![S::one(); vars];
    simplex.push(S::zero());
    lp.add_constraint(simplex, Relation::Eq, S::one());

    Ok(match solve_lp(&lp)? {
        LpSolution::Optimal(sol) => Some(sol.primal[..vars].to_vec()),
        _ => None,
    })
}

/// Lifts support weights to a full strategy vector.
fn spread<S: Scalar>(
    support: &[usize],
    weights: &[S],
    player: usize,
    num_actions: usize,
) -> MixedStrategy<S> {
    let mut probs = vec![S::zero(); num_actions];
    for (&a, w) in support.iter().zip(weights) {
        probs[a] = w.clone();
    }
    MixedStrategy { player, probs }
}

/// Fully mixed three-player profiles over two-action supports.
///
/// Each player's indifference is bilinear in the other two mixing weights.
/// Eliminating two unknowns leaves one quadratic whose roots must lie in
/// the scalar field; degenerate shapes (an equation that pins a single
/// variable outright) are handled by case analysis. Candidate weights are
/// lifted to profiles and re-verified by the caller, so this only has to
/// avoid missing isolated solutions; solution continua are skipped.
fn solve_fully_mixed_2x2x2<S: Scalar + ExactSqrt>(
    game: &Game<S>,
    supports: &[&[usize]],
) -> Result<Vec<Vec<MixedStrategy<S>>>, SolveError<S>> {
    // Difference in player `x`'s payoff between its two support actions,
    // with the other two players pinned to support slots (iy, iz).
    let diff = |x: usize, y: usize, iy: usize, z: usize, iz: usize| -> S {
        let mut joint = vec![0usize; 3];
        joint[y] = supports[y][iy];
        joint[z] = supports[z][iz];
        joint[x] = supports[x][0];
        let high = game.payoff(&joint, x).clone();
        joint[x] = supports[x][1];
        high - game.payoff(&joint, x).clone()
    };
    // E_x(py, pz) = alpha py pz + beta py + gamma pz + delta = 0, where
    // each p is the weight of a player's first support action and (y, z)
    // are the other two players in ascending order.
    let coefficients = |x: usize| -> Bilinear<S> {
        let others: Vec<usize> = (0..3).filter(|&p| p != x).collect();
        let (y, z) = (others[0], others[1]);
        let daa = diff(x, y, 0, z, 0);
        let dab = diff(x, y, 0, z, 1);
        let dba = diff(x, y, 1, z, 0);
        let dbb = diff(x, y, 1, z, 1);
        Bilinear {
            xy: daa - dab.clone() - dba.clone() + dbb.clone(),
            x: dab - dbb.clone(),
            y: dba - dbb.clone(),
            one: dbb,
        }
    };
    let system = [coefficients(0), coefficients(1), coefficients(2)];
    let mut out = Vec::new();
    for weights in solve_bilinear_system(&system) {
        if weights
            .iter()
            .any(|w| !w.is_positive() || *w >= S::one())
        {
            continue;
        }
        let profile: Vec<MixedStrategy<S>> = (0..3)
            .map(|p| {
                let w = weights[p].clone();
                spread(
                    supports[p],
                    &[w.clone(), S::one() - w],
                    p,
                    game.num_actions(p),
                )
            })
            .collect();
        out.push(profile);
    }
    Ok(out)
}

/// `xy * x * y + x * x + y * y + one = 0` over two unknowns.
struct Bilinear<S> {
    xy: S,
    x: S,
    y: S,
    one: S,
}

enum LinSolve<S> {
    Unique(S),
    NoSolution,
    Any,
}

impl<S: Scalar> Bilinear<S> {
    /// Solves for `x` with `y` known.
    fn solve_x(&self, y: &S) -> LinSolve<S> {
        let coeff = self.xy.clone() * y.clone() + self.x.clone();
        let constant = self.y.clone() * y.clone() + self.one.clone();
        if !coeff.is_zero() {
            LinSolve::Unique(-constant / coeff)
        } else if constant.is_zero() {
            LinSolve::Any
        } else {
            LinSolve::NoSolution
        }
    }

    /// Solves for `y` with `x` known.
    fn solve_y(&self, x: &S) -> LinSolve<S> {
        let coeff = self.xy.clone() * x.clone() + self.y.clone();
        let constant = self.x.clone() * x.clone() + self.one.clone();
        if !coeff.is_zero() {
            LinSolve::Unique(-constant / coeff)
        } else if constant.is_zero() {
            LinSolve::Any
        } else {
            LinSolve::NoSolution
        }
    }
}

/// Isolated solutions `(p0, p1, p2)` of the indifference system
/// `f0(p1, p2) = f1(p0, p2) = f2(p0, p1) = 0`, restricted to those with
/// coordinates in the scalar field. Continua are not enumerated.
fn solve_bilinear_system<S: Scalar + ExactSqrt>(system: &[Bilinear<S>; 3]) -> Vec<[S; 3]> {
    let [f0, f1, f2] = system;
    let mut out: Vec<[S; 3]> = Vec::new();
    let mut push = |candidate: [S; 3]| {
        if !out.contains(&candidate) {
            out.push(candidate);
        }
    };

    // f0's x-part is p1; if it vanishes identically, f0 pins p2 alone.
    if f0.xy.is_zero() && f0.x.is_zero() {
        if !f0.y.is_zero() {
            let p2 = -f0.one.clone() / f0.y.clone();
            if let LinSolve::Unique(p0) = f1.solve_x(&p2) {
                if let LinSolve::Unique(p1) = f2.solve_y(&p0) {
                    push([p0, p1, p2]);
                }
            }
        }
        return out;
    }
    // f1's x-part is p0; if it vanishes identically, f1 pins p2 alone.
    if f1.xy.is_zero() && f1.x.is_zero() {
        if !f1.y.is_zero() {
            let p2 = -f1.one.clone() / f1.y.clone();
            if let LinSolve::Unique(p1) = f0.solve_x(&p2) {
                if let LinSolve::Unique(p0) = f2.solve_x(&p1) {
                    push([p0, p1, p2]);
                }
            }
        }
        return out;
    }

    // Generic shape: p1 = n1/e1 and p0 = n0/e0 as linear functions of
    // t = p2; substituting into f2 and clearing denominators leaves a
    // quadratic in t.
    let n1 = [-f0.one.clone(), -f0.y.clone()];
    let e1 = [f0.x.clone(), f0.xy.clone()];
    let n0 = [-f1.one.clone(), -f1.y.clone()];
    let e0 = [f1.x.clone(), f1.xy.clone()];
    let mul = |p: &[S; 2], q: &[S; 2]| -> [S; 3] {
        [
            p[0].clone() * q[0].clone(),
            p[0].clone() * q[1].clone() + p[1].clone() * q[0].clone(),
            p[1].clone() * q[1].clone(),
        ]
    };
    let axpy = |acc: &mut [S; 3], k: &S, p: [S; 3]| {
        for (slot, value) in acc.iter_mut().zip(p) {
            *slot += k.clone() * value;
        }
    };
    let mut quad = [S::zero(), S::zero(), S::zero()];
    axpy(&mut quad, &f2.xy, mul(&n0, &n1));
    axpy(&mut quad, &f2.x, mul(&n0, &e1));
    axpy(&mut quad, &f2.y, mul(&n1, &e0));
    axpy(&mut quad, &f2.one, mul(&e0, &e1));

    for t in quadratic_roots(&quad[2], &quad[1], &quad[0]) {
        let eval = |p: &[S; 2]| p[0].clone() + p[1].clone() * t.clone();
        let den0 = eval(&e0);
        let den1 = eval(&e1);
        if den0.is_zero() || den1.is_zero() {
            continue;
        }
        push([eval(&n0) / den0, eval(&n1) / den1, t]);
    }

    // Solutions where a denominator vanishes escape the substitution: there
    // the matching numerator must vanish too, freeing one unknown, and the
    // remaining equations must pin everything uniquely.
    if !e1[1].is_zero() {
        let t = -e1[0].clone() / e1[1].clone();
        let n1_at = n1[0].clone() + n1[1].clone() * t.clone();
        if n1_at.is_zero() {
            if let LinSolve::Unique(p0) = f1.solve_x(&t) {
                if let LinSolve::Unique(p1) = f2.solve_y(&p0) {
                    push([p0, p1, t]);
                }
            }
        }
    }
    if !e0[1].is_zero() {
        let t = -e0[0].clone() / e0[1].clone();
        let n0_at = n0[0].clone() + n0[1].clone() * t.clone();
        if n0_at.is_zero() {
            if let LinSolve::Unique(p1) = f0.solve_x(&t) {
                if let LinSolve::Unique(p0) = f2.solve_x(&p1) {
                    push([p0, p1, t]);
                }
            }
        }
    }
    out
}

/// Roots of `a t^2 + b t + c` in the scalar field. A vanishing quadratic
/// (identically zero) yields no isolated roots and returns nothing.
fn quadratic_roots<S: Scalar + ExactSqrt>(a: &S, b: &S, c: &S) -> Vec<S> {
    if a.is_zero() {
        if b.is_zero() {
            return Vec::new();
        }
        return vec![-c.clone() / b.clone()];
    }
    let two = S::one() + S::one();
    let four = two.clone() * two.clone();
    let disc = b.clone() * b.clone() - four * a.clone() * c.clone();
    let Some(root) = disc.exact_sqrt() else {
        return Vec::new();
    };
    let twice_a = two * a.clone();
    let first = (-b.clone() + root.clone()) / twice_a.clone();
    let second = (-b.clone() - root) / twice_a;
    if first == second {
        vec![first]
    } else {
        vec![first, second]
    }
}
