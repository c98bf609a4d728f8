//! Strategies for the simultaneous hat guessing game, and the machinery to
//! check their worst-case guarantees.
//!
//! `n` players each wear a red or a blue hat. Every player sees all hats but
//! their own and, without communicating, guesses their own color. A strategy
//! is judged by how many correct guesses it produces on the worst hat
//! distribution, measured against `max{r, b}`, the score the majority
//! strategy would get on an imbalanced distribution.
//!
//! The crate is organized as
//!
//! - [`game`]: colors, hat distributions, guarded views, the [`Strategy`]
//!   trait and exact scoring.
//! - [`strategies`]: the pairing, majority, partial `S(T, a, b)` and
//!   composite strategies, the block partition and the loss bounds.
//! - [`analysis`]: exhaustive and sampled sweeps with mergeable reports,
//!   the averaging identity, the binomial identity, the lower bound and a
//!   brute-force search over every strategy for tiny `n`.
//! - [`cli`]: the `hatgame` command-line driver.
//!
//! ```
//! use hatgame::{strategies::CompositeStrategy, game::evaluate, HatDistribution};
//!
//! let composite = CompositeStrategy::new(16).unwrap();
//! let omega: HatDistribution = "RRRRRRRRRRRRRBBB".parse().unwrap();
//! let record = evaluate(&composite, &omega).unwrap();
//! let loss = omega.majority_target() as i64 - record.correct_count as i64;
//! assert!(loss <= composite.loss_bound() as i64);
//! ```

pub mod analysis;
pub mod cli;
mod error;
pub mod game;
pub mod strategies;

pub use error::{Error, Result};
pub use game::{Color, GuessRecord, HatDistribution, PlayerSet, Strategy, VisibleView};
