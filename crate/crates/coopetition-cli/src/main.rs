//! `coe` — generate, solve, verify, and classify adversarial team games
//! with exact rational arithmetic.
//!
//! Exit codes: 0 success (and verification holds), 1 verification fails,
//! 2 usage or parse errors, 3 precondition or scale-ceiling failures.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coopetition::equilibria::{
    check_consistency, classify_profile, find_nash_support_enumeration, is_best_response,
    ne_to_coe, solve_tmcoe_consistent_lp, solve_tmcoe_grid, verify_ce, verify_coe, verify_ne,
    ProfileForm, SolveError, VerificationReport,
};
use coopetition::game::{Game, TeamPartition};
use coopetition::generators::{
    chicken_games, exchangeability_counterexample, modified_chicken_game, random_game,
    reduce_two_player, sat_game, CnfFormula, GeneratorError, RandomFlavor, TeamGame,
};
use coopetition::io::{
    candidate_from_parsed, emit_correlated_strategy, emit_game, parse_game, parse_strategy,
    render_classification, render_consistency, render_nash_list, render_tmcoe,
    render_verification, ParsedStrategy,
};
use coopetition::scalar::Rational;

#[derive(Parser)]
#[command(name = "coe", version, about = "Adversarial team games with exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a game file for a named family.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// Seed for the random family.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Payoff structure for the random family: general, zero-sum, or
        /// consistent-zero-sum:<k1,k2,...>.
        #[arg(long, default_value = "general")]
        flavor: String,
        /// Comma-separated action counts per player for the random family.
        #[arg(long)]
        dims: Option<String>,
        /// Output path; stdout when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check a candidate strategy against an equilibrium concept.
    Verify {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        candidate: PathBuf,
        #[arg(long, value_enum)]
        concept: ConceptArg,
    },
    /// Maximize the team's utility over equilibria.
    SolveTmcoe {
        #[arg(long)]
        game: PathBuf,
        /// Adversary grid resolution for the general solver.
        #[arg(long, default_value_t = 4)]
        grid: u32,
    },
    /// Enumerate Nash equilibria by supports.
    SolveNe {
        #[arg(long)]
        game: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_support: usize,
    },
    /// Turn a Nash equilibrium into a correlated equilibrium pair.
    InduceCoe {
        #[arg(long)]
        game: PathBuf,
        /// Product strategy file holding the equilibrium.
        #[arg(long)]
        ne: PathBuf,
    },
    /// Test proportionality of team-player utilities to the team total.
    CheckConsistency {
        #[arg(long)]
        game: PathBuf,
    },
    /// Report utility, equilibrium membership, and team-maximality.
    Classify {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        candidate: PathBuf,
        #[arg(long, default_value_t = 4)]
        grid: u32,
    },
    /// Embed a two-player game as a three-player zero-sum team game.
    Reduce {
        #[arg(long)]
        game: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Build the satisfiability gadget game from a CNF clause list.
    SatGame {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    ChickenA,
    ChickenB,
    ModifiedChicken,
    ExchangeCounter,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConceptArg {
    Ne,
    Ce,
    Coe,
    BestResponse,
}

enum AppError {
    Io(PathBuf, std::io::Error),
    Parse(String),
    Usage(String),
    Precondition(String),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Io(..) | AppError::Parse(_) | AppError::Usage(_) => 2,
            AppError::Precondition(_) => 3,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Io(path, e) => write!(f, "i/o: {}: {e}", path.display()),
            AppError::Parse(msg) => write!(f, "parse: {msg}"),
            AppError::Usage(msg) => write!(f, "usage: {msg}"),
            AppError::Precondition(msg) => write!(f, "precondition: {msg}"),
        }
    }
}

impl From<SolveError<Rational>> for AppError {
    fn from(e: SolveError<Rational>) -> Self {
        AppError::Precondition(e.to_string())
    }
}

impl From<GeneratorError> for AppError {
    fn from(e: GeneratorError) -> Self {
        match e {
            GeneratorError::Formula(_) => AppError::Parse(e.to_string()),
            _ => AppError::Precondition(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn read_file(path: &Path) -> Result<String, AppError> {
    fs::read_to_string(path).map_err(|e| AppError::Io(path.to_path_buf(), e))
}

fn load_game(path: &Path) -> Result<(Game<Rational>, TeamPartition), AppError> {
    let text = read_file(path)?;
    parse_game(&text).map_err(|e| AppError::Parse(format!("{}: {e}", path.display())))
}

fn write_output(output: Option<&Path>, text: &str) -> Result<(), AppError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| AppError::Io(path.to_path_buf(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_dims(dims: &str) -> Result<Vec<usize>, AppError> {
    dims.split(',')
        .map(|d| {
            d.trim()
                .parse()
                .map_err(|_| AppError::Usage(format!("bad action count {d:?} in --dims")))
        })
        .collect()
}

fn parse_flavor(flavor: &str) -> Result<RandomFlavor<Rational>, AppError> {
    match flavor {
        "general" => Ok(RandomFlavor::General),
        "zero-sum" => Ok(RandomFlavor::ZeroSum),
        _ => {
            let Some(list) = flavor.strip_prefix("consistent-zero-sum:") else {
                return Err(AppError::Usage(format!(
                    "unknown flavor {flavor:?}; use general, zero-sum, or consistent-zero-sum:<k,...>"
                )));
            };
            let constants = list
                .split(',')
                .map(|k| {
                    parse_rational(k.trim())
                        .ok_or_else(|| AppError::Usage(format!("bad constant {k:?} in flavor")))
                })
                .collect::<Result<Vec<Rational>, _>>()?;
            Ok(RandomFlavor::ConsistentZeroSum(constants))
        }
    }
}

fn parse_rational(token: &str) -> Option<Rational> {
    token.parse::<Rational>().ok()
}

fn run(command: Command) -> Result<u8, AppError> {
    match command {
        Command::Generate {
            family,
            seed,
            flavor,
            dims,
            output,
        } => {
            let TeamGame { game, partition } = match family {
                Family::ChickenA => chicken_games::<Rational>().0,
                Family::ChickenB => chicken_games::<Rational>().1,
                Family::ModifiedChicken => modified_chicken_game(),
                Family::ExchangeCounter => exchangeability_counterexample(),
                Family::Random => {
                    let dims = dims.ok_or_else(|| {
                        AppError::Usage("--dims is required for the random family".into())
                    })?;
                    random_game(&parse_dims(&dims)?, seed, &parse_flavor(&flavor)?)?
                }
            };
            write_output(output.as_deref(), &emit_game(&game, &partition))?;
            Ok(0)
        }
        Command::Verify {
            game,
            candidate,
            concept,
        } => {
            let (game, partition) = load_game(&game)?;
            let text = read_file(&candidate)?;
            let parsed = parse_strategy(&game, &text)
                .map_err(|e| AppError::Parse(format!("{}: {e}", candidate.display())))?;
            let report = run_verification(&game, &partition, parsed, concept)?;
            print!("{}", render_verification(&game, &partition, &report));
            Ok(if report.holds() { 0 } else { 1 })
        }
        Command::SolveTmcoe { game, grid } => {
            let (game, partition) = load_game(&game)?;
            let result = if game.is_zero_sum() && check_consistency(&game, &partition)
                .map_err(SolveError::Game)?
                .consistent
            {
                solve_tmcoe_consistent_lp(&game, &partition)?
            } else {
                solve_tmcoe_grid(&game, &partition, grid)?
            };
            print!("{}", render_tmcoe(&game, &result));
            Ok(0)
        }
        Command::SolveNe { game, max_support } => {
            let (game, _) = load_game(&game)?;
            let profiles = find_nash_support_enumeration(&game, max_support)?;
            print!("{}", render_nash_list(&game, &profiles));
            Ok(0)
        }
        Command::InduceCoe { game, ne } => {
            let (game, partition) = load_game(&game)?;
            let text = read_file(&ne)?;
            let parsed = parse_strategy(&game, &text)
                .map_err(|e| AppError::Parse(format!("{}: {e}", ne.display())))?;
            let ParsedStrategy::Product(profile) = parsed else {
                return Err(AppError::Precondition(
                    "induce-coe needs a product strategy file".into(),
                ));
            };
            let candidate = ne_to_coe(&game, &partition, &profile)?;
            print!(
                "{}",
                emit_correlated_strategy(&game, &candidate.team, Some(&candidate.adversary))
            );
            Ok(0)
        }
        Command::CheckConsistency { game } => {
            let (game, partition) = load_game(&game)?;
            let report = check_consistency(&game, &partition).map_err(SolveError::Game)?;
            print!("{}", render_consistency(&game, &report));
            Ok(if report.consistent { 0 } else { 1 })
        }
        Command::Classify {
            game,
            candidate,
            grid,
        } => {
            let (game, partition) = load_game(&game)?;
            let text = read_file(&candidate)?;
            let parsed = parse_strategy(&game, &text)
                .map_err(|e| AppError::Parse(format!("{}: {e}", candidate.display())))?;
            let form = match parsed {
                ParsedStrategy::Product(profile) => ProfileForm::Product(profile),
                parsed => ProfileForm::Correlated(candidate_from_parsed(parsed).ok_or_else(
                    || {
                        AppError::Precondition(
                            "correlated candidates need an adversary block".into(),
                        )
                    },
                )?),
            };
            let row = classify_profile(&game, &partition, &form, grid)?;
            print!("{}", render_classification(&row));
            Ok(0)
        }
        Command::Reduce { game, output } => {
            let (game, _) = load_game(&game)?;
            let reduced = reduce_two_player(&game)?;
            write_output(output.as_deref(), &emit_game(&reduced.game, &reduced.partition))?;
            Ok(0)
        }
        Command::SatGame { cnf, output } => {
            let text = read_file(&cnf)?;
            let formula = CnfFormula::parse(&text)?;
            let game = sat_game::<Rational>(&formula)?;
            // The gadget is two-player and symmetric; by convention the
            // first player is the team and the second the adversary.
            let partition = TeamPartition::new(vec![0], 1);
            write_output(output.as_deref(), &emit_game(&game, &partition))?;
            Ok(0)
        }
    }
}

fn run_verification(
    game: &Game<Rational>,
    partition: &TeamPartition,
    parsed: ParsedStrategy<Rational>,
    concept: ConceptArg,
) -> Result<VerificationReport<Rational>, AppError> {
    let wrong_kind = |needed: &str| {
        AppError::Precondition(format!("this concept needs a {needed} strategy file"))
    };
    match concept {
        ConceptArg::Ne => {
            let ParsedStrategy::Product(profile) = parsed else {
                return Err(wrong_kind("product"));
            };
            verify_ne(game, &profile).map_err(|e| AppError::Precondition(e.to_string()))
        }
        ConceptArg::Ce => {
            let ParsedStrategy::Correlated {
                team,
                adversary: None,
            } = parsed
            else {
                return Err(wrong_kind("correlated-team (over all players, no adversary block)"));
            };
            verify_ce(game, &team).map_err(|e| AppError::Precondition(e.to_string()))
        }
        ConceptArg::Coe => {
            let candidate = candidate_from_parsed(parsed)
                .ok_or_else(|| wrong_kind("correlated-team (with an adversary block)"))?;
            verify_coe(game, partition, &candidate)
                .map_err(|e| AppError::Precondition(e.to_string()))
        }
        ConceptArg::BestResponse => {
            let candidate = candidate_from_parsed(parsed)
                .ok_or_else(|| wrong_kind("correlated-team (with an adversary block)"))?;
            is_best_response(game, partition, &candidate.team, &candidate.adversary)
                .map_err(|e| AppError::Precondition(e.to_string()))
        }
    }
}
