//! Exact-arithmetic toolkit for adversarial team games.
//!
//! Models n-player normal-form games in which a team of players with
//! possibly different utility functions plays against a single adversary.
//! The team may correlate its actions; the adversary best-responds. The
//! crate computes and verifies the resulting co-opetition equilibria (CoE)
//! and their team-maximizing refinement (TMCoE), alongside classic Nash and
//! correlated equilibria, all in exact rational arithmetic.
//!
//! Core math is generic over the [`scalar::Scalar`] ordered field;
//! [`Rational`] (arbitrary-precision) is the concrete type used by the CLI
//! and all golden values.

pub mod equilibria;
pub mod game;
pub mod generators;
pub mod io;
pub mod lp;
pub mod scalar;

pub use game::{
    product_to_correlated, CoeCandidate, CorrelatedStrategy, Game, GameError, MixedStrategy,
    TeamPartition, UtilityTarget,
};
pub use scalar::{ExactSqrt, Rational, Scalar};
