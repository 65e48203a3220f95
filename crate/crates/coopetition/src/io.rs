//! Line-oriented text formats for games and strategies, plus the report
//! renderers used by the CLI.
//!
//! Both formats are deterministic: emitting and re-parsing a canonical file
//! is the identity, and identical inputs always render byte-identical
//! output. Rationals are written as `p/q` in lowest terms, or as a bare
//! integer when the denominator is one; non-canonical rationals are
//! accepted on input and canonicalized.

use std::fmt::Write as _;

use thiserror::Error;

use crate::equilibria::{
    Classification, ConsistencyReport, ConsistencyViolation, TmcoeResult,
    VerificationReport, Violation,
};
use crate::game::{
    CoeCandidate, CorrelatedStrategy, Game, MixedStrategy, TeamPartition,
};
use crate::scalar::Scalar;

pub const GAME_MAGIC: &str = "coe-game";
pub const STRATEGY_MAGIC: &str = "coe-strategy";
pub const FORMAT_VERSION: &str = "1";

/// A parse failure with its 1-based line and column.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub reason: String,
}

impl ParseError {
    fn new(line: usize, column: usize, reason: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            reason: reason.into(),
        }
    }
}

/// Tokens of a line with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Non-empty lines with their 1-based numbers.
struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    cursor: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        Lines { items, cursor: 0 }
    }

    fn next(&mut self) -> Option<(usize, Vec<(usize, &'a str)>)> {
        let (number, line) = *self.items.get(self.cursor)?;
        self.cursor += 1;
        Some((number, tokens(line)))
    }

    fn peek_keyword(&self) -> Option<&'a str> {
        let (_, line) = self.items.get(self.cursor)?;
        tokens(line).first().map(|(_, t)| *t)
    }

    fn last_line_number(&self) -> usize {
        self.items.last().map_or(1, |(n, _)| *n)
    }
}

fn parse_scalar<S: Scalar>(line: usize, column: usize, token: &str) -> Result<S, ParseError> {
    let normalized = if let Some((_, den)) = token.split_once('/') {
        let digits = den.strip_prefix('-').unwrap_or(den);
        if !digits.is_empty() && digits.bytes().all(|b| b == b'0') {
            return Err(ParseError::new(line, column, "zero denominator"));
        }
        token.to_string()
    } else {
        // Integer shorthand; the scalar parser wants the full p/q form.
        format!("{token}/1")
    };
    S::from_str_radix(&normalized, 10)
        .map_err(|_| ParseError::new(line, column, format!("{token:?} is not a rational number")))
}

fn parse_index(line: usize, column: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::new(line, column, format!("{token:?} is not a {what}")))
}

/// Serializes a game and its partition.
pub fn emit_game<S: Scalar>(game: &Game<S>, partition: &TeamPartition) -> String {
    let mut out = String::new();
    writeln!(out, "{GAME_MAGIC} {FORMAT_VERSION}").unwrap();
    if let Some(name) = game.name() {
        writeln!(out, "name {name}").unwrap();
    }
    writeln!(out, "players {}", game.num_players()).unwrap();
    for p in 0..game.num_players() {
        writeln!(out, "actions {p} {}", game.action_labels(p).join(" ")).unwrap();
    }
    let team: Vec<String> = partition.team().iter().map(|p| p.to_string()).collect();
    writeln!(out, "team {}", team.join(" ")).unwrap();
    writeln!(out, "adversary {}", partition.adversary()).unwrap();
    writeln!(out, "payoffs").unwrap();
    for (index, joint) in game.joint_actions().enumerate() {
        let labels: Vec<&str> = joint
            .iter()
            .enumerate()
            .map(|(p, &a)| game.action_label(p, a))
            .collect();
        let payoffs: Vec<String> = (0..game.num_players())
            .map(|p| game.payoff_at(index, p).to_string())
            .collect();
        writeln!(out, "{} {}", labels.join(" "), payoffs.join(" ")).unwrap();
    }
    writeln!(out, "end").unwrap();
    out
}

/// Parses a game file; see [`emit_game`] for the layout.
pub fn parse_game<S: Scalar>(text: &str) -> Result<(Game<S>, TeamPartition), ParseError> {
    let mut lines = Lines::new(text);
    let eof = |lines: &Lines| {
        ParseError::new(lines.last_line_number(), 1, "unexpected end of file")
    };

    let (number, header) = lines.next().ok_or_else(|| eof(&lines))?;
    if header.len() != 2 || header[0].1 != GAME_MAGIC {
        return Err(ParseError::new(number, 1, format!("expected {GAME_MAGIC:?} header")));
    }
    if header[1].1 != FORMAT_VERSION {
        return Err(ParseError::new(
            number,
            header[1].0,
            format!("unsupported format version {:?}, expected {FORMAT_VERSION}", header[1].1),
        ));
    }

    let mut name: Option<String> = None;
    if lines.peek_keyword() == Some("name") {
        let (number, fields) = lines.next().expect("peeked");
        if fields.len() < 2 {
            return Err(ParseError::new(number, 1, "name line has no value"));
        }
        let names: Vec<&str> = fields[1..].iter().map(|(_, t)| *t).collect();
        name = Some(names.join(" "));
    }

    let (number, fields) = lines.next().ok_or_else(|| eof(&lines))?;
    if fields.len() != 2 || fields[0].1 != "players" {
        return Err(ParseError::new(number, 1, "expected `players <count>`"));
    }
    let num_players = parse_index(number, fields[1].0, fields[1].1, "player count")?;
    if num_players < 2 {
        return Err(ParseError::new(number, fields[1].0, "need at least 2 players"));
    }

    let mut actions: Vec<Vec<String>> = Vec::with_capacity(num_players);
    for expected in 0..num_players {
        let (number, fields) = lines.next().ok_or_else(|| eof(&lines))?;
        if fields.len() < 3 || fields[0].1 != "actions" {
            return Err(ParseError::new(
                number,
                1,
                format!("expected `actions {expected} <labels...>`"),
            ));
        }
        let player = parse_index(number, fields[1].0, fields[1].1, "player index")?;
        if player != expected {
            return Err(ParseError::new(
                number,
                fields[1].0,
                format!("actions for player {player} out of order, expected player {expected}"),
            ));
        }
        actions.push(fields[2..].iter().map(|(_, t)| t.to_string()).collect());
    }

    let (number, fields) = lines.next().ok_or_else(|| eof(&lines))?;
    if fields.len() < 2 || fields[0].1 != "team" {
        return Err(ParseError::new(number, 1, "expected `team <indices...>`"));
    }
    let mut team = Vec::new();
    for (column, token) in &fields[1..] {
        team.push(parse_index(number, *column, token, "player index")?);
    }

    let (number, fields) = lines.next().ok_or_else(|| eof(&lines))?;
    if fields.len() != 2 || fields[0].1 != "adversary" {
        return Err(ParseError::new(number, 1, "expected `adversary <index>`"));
    }
    let adversary = parse_index(number, fields[1].0, fields[1].1, "player index")?;

    let (number, fields) = lines.next().ok_or_else(|| eof(&lines))?;
    if fields.len() != 1 || fields[0].1 != "payoffs" {
        return Err(ParseError::new(number, 1, "expected `payoffs`"));
    }

    // Records must appear in lexicographic joint order; this catches
    // duplicates and gaps and names the missing joint action.
    let counts: Vec<usize> = actions.iter().map(Vec::len).collect();
    let joint_count: usize = counts.iter().product();
    let mut payoffs: Vec<Vec<S>> = Vec::with_capacity(joint_count);
    let mut joint = vec![0usize; num_players];
    for record in 0..joint_count {
        let expected_labels: Vec<&str> = joint
            .iter()
            .enumerate()
            .map(|(p, &a)| actions[p][a].as_str())
            .collect();
        let (number, fields) = lines.next().ok_or_else(|| eof(&lines))?;
        if fields.len() == 1 && fields[0].1 == "end" {
            return Err(ParseError::new(
                number,
                1,
                format!(
                    "missing payoff record for joint action ({})",
                    expected_labels.join(", ")
                ),
            ));
        }
        if fields.len() != 2 * num_players {
            return Err(ParseError::new(
                number,
                1,
                format!(
                    "payoff record needs {num_players} action labels and {num_players} payoffs"
                ),
            ));
        }
        for (p, expected_label) in expected_labels.iter().enumerate() {
            let (column, got) = fields[p];
            if got != *expected_label {
                return Err(ParseError::new(
                    number,
                    column,
                    format!(
                        "record out of order: expected joint action ({})",
                        expected_labels.join(", ")
                    ),
                ));
            }
        }
        let mut entry = Vec::with_capacity(num_players);
        for p in 0..num_players {
            let (column, token) = fields[num_players + p];
            entry.push(parse_scalar(number, column, token)?);
        }
        payoffs.push(entry);
        let _ = record;
        // Advance the expected joint action odometer.
        for p in (0..num_players).rev() {
            joint[p] += 1;
            if joint[p] < counts[p] {
                break;
            }
            joint[p] = 0;
        }
    }
    let (number, fields) = lines.next().ok_or_else(|| eof(&lines))?;
    if fields.len() != 1 || fields[0].1 != "end" {
        return Err(ParseError::new(
            number,
            fields.first().map_or(1, |(c, _)| *c),
            "expected `end` after the last payoff record",
        ));
    }
    if let Some((number, fields)) = lines.next() {
        return Err(ParseError::new(
            number,
            fields.first().map_or(1, |(c, _)| *c),
            "content after `end`",
        ));
    }

    let game = Game::new(actions, payoffs, name)
        .map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    let partition = TeamPartition::new(team, adversary);
    partition
        .validate(&game)
        .map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    Ok((game, partition))
}

/// A parsed strategy file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedStrategy<S: Scalar> {
    /// One mixed strategy per player, in player order.
    Product(Vec<MixedStrategy<S>>),
    /// A correlated distribution over a set of players, optionally paired
    /// with a mixed strategy for the adversary.
    Correlated {
        team: CorrelatedStrategy<S>,
        adversary: Option<MixedStrategy<S>>,
    },
}

/// Serializes a full product profile.
pub fn emit_product_strategy<S: Scalar>(game: &Game<S>, profile: &[MixedStrategy<S>]) -> String {
    let mut out = String::new();
    writeln!(out, "{STRATEGY_MAGIC} {FORMAT_VERSION}").unwrap();
    writeln!(out, "kind product").unwrap();
    for strategy in profile {
        writeln!(out, "player {}", strategy.player).unwrap();
        for (action, prob) in strategy.probs.iter().enumerate() {
            if !prob.is_zero() {
                writeln!(
                    out,
                    "{} {prob}",
                    game.action_label(strategy.player, action)
                )
                .unwrap();
            }
        }
    }
    writeln!(out, "end").unwrap();
    out
}

/// Serializes a correlated team candidate (adversary block optional).
pub fn emit_correlated_strategy<S: Scalar>(
    game: &Game<S>,
    team: &CorrelatedStrategy<S>,
    adversary: Option<&MixedStrategy<S>>,
) -> String {
    let mut out = String::new();
    writeln!(out, "{STRATEGY_MAGIC} {FORMAT_VERSION}").unwrap();
    writeln!(out, "kind correlated-team").unwrap();
    let members: Vec<String> = team.team.iter().map(|p| p.to_string()).collect();
    writeln!(out, "team {}", members.join(" ")).unwrap();
    let counts: Vec<usize> = team.team.iter().map(|&p| game.num_actions(p)).collect();
    for (index, mass) in team.probs.iter().enumerate() {
        if mass.is_zero() {
            continue;
        }
        let labels: Vec<&str> = decode(index, &counts)
            .into_iter()
            .zip(&team.team)
            .map(|(a, &p)| game.action_label(p, a))
            .collect();
        writeln!(out, "{} {mass}", labels.join(" ")).unwrap();
    }
    if let Some(strategy) = adversary {
        writeln!(out, "adversary {}", strategy.player).unwrap();
        for (action, prob) in strategy.probs.iter().enumerate() {
            if !prob.is_zero() {
                writeln!(
                    out,
                    "{} {prob}",
                    game.action_label(strategy.player, action)
                )
                .unwrap();
            }
        }
    }
    writeln!(out, "end").unwrap();
    out
}

fn decode(mut index: usize, counts: &[usize]) -> Vec<usize> {
    let mut joint = vec![0; counts.len()];
    for (slot, &count) in joint.iter_mut().zip(counts).rev() {
        *slot = index % count;
        index /= count;
    }
    joint
}

/// Parses a strategy file against a game (labels resolve per player).
pub fn parse_strategy<S: Scalar>(
    game: &Game<S>,
    text: &str,
) -> Result<ParsedStrategy<S>, ParseError> {
    let mut lines = Lines::new(text);
    let eof = |lines: &Lines| {
        ParseError::new(lines.last_line_number(), 1, "unexpected end of file")
    };

    let (number, header) = lines.next().ok_or_else(|| eof(&lines))?;
    if header.len() != 2 || header[0].1 != STRATEGY_MAGIC {
        return Err(ParseError::new(
            number,
            1,
            format!("expected {STRATEGY_MAGIC:?} header"),
        ));
    }
    if header[1].1 != FORMAT_VERSION {
        return Err(ParseError::new(
            number,
            header[1].0,
            format!("unsupported format version {:?}, expected {FORMAT_VERSION}", header[1].1),
        ));
    }
    let (number, fields) = lines.next().ok_or_else(|| eof(&lines))?;
    if fields.len() != 2 || fields[0].1 != "kind" {
        return Err(ParseError::new(number, 1, "expected `kind <product|correlated-team>`"));
    }
    match fields[1].1 {
        "product" => parse_product(game, lines),
        "correlated-team" => parse_correlated(game, lines),
        other => Err(ParseError::new(
            number,
            fields[1].0,
            format!("unknown strategy kind {other:?}"),
        )),
    }
}

fn finish_distribution<S: Scalar>(
    entries: Vec<(usize, S)>,
    len: usize,
    header_line: usize,
) -> Result<Vec<S>, ParseError> {
    let mut probs = vec![S::zero(); len];
    for (index, value) in entries {
        probs[index] = value;
    }
    let mut sum = S::zero();
    for p in &probs {
        if p.is_negative() {
            return Err(ParseError::new(header_line, 1, "negative probability"));
        }
        sum += p.clone();
    }
    if !sum.is_one() {
        return Err(ParseError::new(
            header_line,
            1,
            format!("probabilities sum to {sum}, expected 1"),
        ));
    }
    Ok(probs)
}

fn parse_product<S: Scalar>(
    game: &Game<S>,
    mut lines: Lines,
) -> Result<ParsedStrategy<S>, ParseError> {
    let mut profile = Vec::with_capacity(game.num_players());
    for expected in 0..game.num_players() {
        let (header_line, fields) = lines.next().ok_or_else(|| {
            ParseError::new(lines.last_line_number(), 1, "unexpected end of file")
        })?;
        if fields.len() != 2 || fields[0].1 != "player" {
            return Err(ParseError::new(
                header_line,
                1,
                format!("expected `player {expected}`"),
            ));
        }
        let player = parse_index(header_line, fields[1].0, fields[1].1, "player index")?;
        if player != expected {
            return Err(ParseError::new(
                header_line,
                fields[1].0,
                format!("player {player} out of order, expected {expected}"),
            ));
        }
        let mut entries: Vec<(usize, S)> = Vec::new();
        while let Some(keyword) = lines.peek_keyword() {
            if keyword == "player" || keyword == "end" {
                break;
            }
            let (number, fields) = lines.next().expect("peeked");
            if fields.len() != 2 {
                return Err(ParseError::new(number, 1, "expected `<action> <probability>`"));
            }
            let (column, label) = fields[0];
            let action = game.action_index(player, label).ok_or_else(|| {
                ParseError::new(
                    number,
                    column,
                    format!("{label:?} is not an action of player {player}"),
                )
            })?;
            if entries.iter().any(|(a, _)| *a == action) {
                return Err(ParseError::new(number, column, format!("duplicate entry for {label:?}")));
            }
            entries.push((action, parse_scalar(number, fields[1].0, fields[1].1)?));
        }
        let probs = finish_distribution(entries, game.num_actions(player), header_line)?;
        profile.push(MixedStrategy { player, probs });
    }
    expect_end(&mut lines)?;
    Ok(ParsedStrategy::Product(profile))
}

fn parse_correlated<S: Scalar>(
    game: &Game<S>,
    mut lines: Lines,
) -> Result<ParsedStrategy<S>, ParseError> {
    let (team_line, fields) = lines.next().ok_or_else(|| {
        ParseError::new(lines.last_line_number(), 1, "unexpected end of file")
    })?;
    if fields.len() < 2 || fields[0].1 != "team" {
        return Err(ParseError::new(team_line, 1, "expected `team <indices...>`"));
    }
    let mut team = Vec::new();
    for (column, token) in &fields[1..] {
        let player = parse_index(team_line, *column, token, "player index")?;
        if player >= game.num_players() {
            return Err(ParseError::new(team_line, *column, format!("no player {player}")));
        }
        if let Some(&last) = team.last() {
            if player <= last {
                return Err(ParseError::new(
                    team_line,
                    *column,
                    "team indices must be strictly increasing",
                ));
            }
        }
        team.push(player);
    }
    let counts: Vec<usize> = team.iter().map(|&p| game.num_actions(p)).collect();
    let joint_count: usize = counts.iter().product();

    let mut entries: Vec<(usize, S)> = Vec::new();
    while let Some(keyword) = lines.peek_keyword() {
        if keyword == "adversary" || keyword == "end" {
            break;
        }
        let (number, fields) = lines.next().expect("peeked");
        if fields.len() != team.len() + 1 {
            return Err(ParseError::new(
                number,
                1,
                format!("expected {} action labels and a probability", team.len()),
            ));
        }
        let mut index = 0;
        for (slot, &player) in team.iter().enumerate() {
            let (column, label) = fields[slot];
            let action = game.action_index(player, label).ok_or_else(|| {
                ParseError::new(
                    number,
                    column,
                    format!("{label:?} is not an action of player {player}"),
                )
            })?;
            index = index * counts[slot] + action;
        }
        if entries.iter().any(|(i, _)| *i == index) {
            return Err(ParseError::new(number, fields[0].0, "duplicate joint action"));
        }
        let (column, token) = fields[team.len()];
        entries.push((index, parse_scalar(number, column, token)?));
    }
    let probs = finish_distribution(entries, joint_count, team_line)?;
    let team = CorrelatedStrategy { team, probs };

    let mut adversary = None;
    if lines.peek_keyword() == Some("adversary") {
        let (header_line, fields) = lines.next().expect("peeked");
        if fields.len() != 2 {
            return Err(ParseError::new(header_line, 1, "expected `adversary <index>`"));
        }
        let player = parse_index(header_line, fields[1].0, fields[1].1, "player index")?;
        if player >= game.num_players() {
            return Err(ParseError::new(header_line, fields[1].0, format!("no player {player}")));
        }
        let mut entries: Vec<(usize, S)> = Vec::new();
        while let Some(keyword) = lines.peek_keyword() {
            if keyword == "end" {
                break;
            }
            let (number, fields) = lines.next().expect("peeked");
            if fields.len() != 2 {
                return Err(ParseError::new(number, 1, "expected `<action> <probability>`"));
            }
            let (column, label) = fields[0];
            let action = game.action_index(player, label).ok_or_else(|| {
                ParseError::new(
                    number,
                    column,
                    format!("{label:?} is not an action of player {player}"),
                )
            })?;
            if entries.iter().any(|(a, _)| *a == action) {
                return Err(ParseError::new(number, column, format!("duplicate entry for {label:?}")));
            }
            entries.push((action, parse_scalar(number, fields[1].0, fields[1].1)?));
        }
        let probs = finish_distribution(entries, game.num_actions(player), header_line)?;
        adversary = Some(MixedStrategy { player, probs });
    }
    expect_end(&mut lines)?;
    Ok(ParsedStrategy::Correlated { team, adversary })
}

fn expect_end(lines: &mut Lines) -> Result<(), ParseError> {
    let (number, fields) = lines
        .next()
        .ok_or_else(|| ParseError::new(lines.last_line_number(), 1, "missing `end`"))?;
    if fields.len() != 1 || fields[0].1 != "end" {
        return Err(ParseError::new(number, 1, "expected `end`"));
    }
    if let Some((number, fields)) = lines.next() {
        return Err(ParseError::new(
            number,
            fields.first().map_or(1, |(c, _)| *c),
            "content after `end`",
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Report rendering: one labeled field per line, rationals as p/q.
// ---------------------------------------------------------------------------

fn yes_no(value: bool) -> &'static str {
    if value {
        "yes"
    } else {
        "no"
    }
}

fn joint_labels<S: Scalar>(game: &Game<S>, joint: &[usize]) -> String {
    joint
        .iter()
        .enumerate()
        .map(|(p, &a)| game.action_label(p, a))
        .collect::<Vec<_>>()
        .join(",")
}

/// Renders a verification outcome.
pub fn render_verification<S: Scalar>(
    game: &Game<S>,
    partition: &TeamPartition,
    report: &VerificationReport<S>,
) -> String {
    let mut out = String::new();
    writeln!(out, "concept: {}", report.concept).unwrap();
    writeln!(out, "holds: {}", yes_no(report.holds())).unwrap();
    for violation in &report.violations {
        match violation {
            Violation::TeamDeviation {
                player,
                recommended,
                deviation,
                gain,
            } => writeln!(
                out,
                "violation: kind=team-deviation player={player} recommended={} deviation={} gain={gain}",
                game.action_label(*player, *recommended),
                game.action_label(*player, *deviation),
            )
            .unwrap(),
            Violation::AdversaryImprovement { action, gain } => writeln!(
                out,
                "violation: kind=adversary-improvement action={} gain={gain}",
                game.action_label(partition.adversary(), *action),
            )
            .unwrap(),
            Violation::PlayerDeviation {
                player,
                deviation,
                gain,
            } => writeln!(
                out,
                "violation: kind=player-deviation player={player} deviation={} gain={gain}",
                game.action_label(*player, *deviation),
            )
            .unwrap(),
        }
    }
    out
}

/// Renders a team-maximizing solve result.
pub fn render_tmcoe<S: Scalar>(game: &Game<S>, result: &TmcoeResult<S>) -> String {
    let mut out = String::new();
    writeln!(out, "method: {}", result.method).unwrap();
    if let Some(resolution) = result.grid_resolution {
        writeln!(out, "grid-resolution: {resolution}").unwrap();
    }
    writeln!(out, "certified-exact: {}", yes_no(result.certified_exact)).unwrap();
    writeln!(out, "team-value: {}", result.team_value).unwrap();
    let team = &result.candidate.team;
    let counts: Vec<usize> = team.team.iter().map(|&p| game.num_actions(p)).collect();
    for (index, mass) in team.probs.iter().enumerate() {
        if mass.is_zero() {
            continue;
        }
        let labels: Vec<&str> = decode(index, &counts)
            .into_iter()
            .zip(&team.team)
            .map(|(a, &p)| game.action_label(p, a))
            .collect();
        writeln!(out, "team-mass: {} {mass}", labels.join(" ")).unwrap();
    }
    let adversary = &result.candidate.adversary;
    for (action, prob) in adversary.probs.iter().enumerate() {
        if !prob.is_zero() {
            writeln!(
                out,
                "adversary-prob: {} {prob}",
                game.action_label(adversary.player, action)
            )
            .unwrap();
        }
    }
    out
}

/// Renders a classification row.
pub fn render_classification<S: Scalar>(row: &Classification<S>) -> String {
    let mut out = String::new();
    writeln!(out, "team-utility: {}", row.team_utility).unwrap();
    match row.is_nash {
        Some(flag) => writeln!(out, "nash: {}", yes_no(flag)).unwrap(),
        None => writeln!(out, "nash: n/a").unwrap(),
    }
    writeln!(out, "coe: {}", yes_no(row.is_coe)).unwrap();
    writeln!(out, "tmcoe: {}", yes_no(row.is_tmcoe)).unwrap();
    writeln!(out, "grid-resolution: {}", row.grid_resolution).unwrap();
    writeln!(out, "stable: {}", yes_no(row.stable)).unwrap();
    out
}

/// Renders a consistency report.
pub fn render_consistency<S: Scalar>(
    game: &Game<S>,
    report: &ConsistencyReport<S>,
) -> String {
    let mut out = String::new();
    writeln!(out, "consistent: {}", report.consistent).unwrap();
    for (player, k) in &report.constants {
        writeln!(out, "constant: player={player} k={k}").unwrap();
    }
    for witness in &report.witnesses {
        match witness {
            ConsistencyViolation::ActionPair {
                player,
                first,
                second,
            } => writeln!(
                out,
                "witness: player={player} kind=action-pair first={} second={}",
                joint_labels(game, first),
                joint_labels(game, second),
            )
            .unwrap(),
            ConsistencyViolation::Level { player, joint } => writeln!(
                out,
                "witness: player={player} kind=level joint={}",
                joint_labels(game, joint),
            )
            .unwrap(),
        }
    }
    out
}

/// Renders a list of Nash equilibria, one line per player per profile.
pub fn render_nash_list<S: Scalar>(
    game: &Game<S>,
    profiles: &[Vec<MixedStrategy<S>>],
) -> String {
    let mut out = String::new();
    writeln!(out, "count: {}", profiles.len()).unwrap();
    for (index, profile) in profiles.iter().enumerate() {
        for strategy in profile {
            let probs: Vec<String> = strategy
                .probs
                .iter()
                .enumerate()
                .map(|(a, p)| format!("{}={p}", game.action_label(strategy.player, a)))
                .collect();
            writeln!(
                out,
                "strategy: ne={index} player={} {}",
                strategy.player,
                probs.join(" ")
            )
            .unwrap();
        }
    }
    out
}

/// Candidate pieces needed by the `coe` and `best-response` checks.
pub fn candidate_from_parsed<S: Scalar>(
    parsed: ParsedStrategy<S>,
) -> Option<CoeCandidate<S>> {
    match parsed {
        ParsedStrategy::Correlated {
            team,
            adversary: Some(adversary),
        } => Some(CoeCandidate::new(team, adversary)),
        _ => None,
    }
}
