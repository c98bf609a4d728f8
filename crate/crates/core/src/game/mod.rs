//! Hat distributions, guarded views, the strategy abstraction and scoring.

mod color;
mod distribution;
mod set;
mod strategy;
mod view;

pub use color::Color;
pub use distribution::HatDistribution;
pub use set::PlayerSet;
pub use strategy::{count_correct, evaluate, verify_no_peek, GuessRecord, Strategy};
pub use view::VisibleView;

pub(crate) use strategy::{count_correct_unchecked, guess_survives_flip};
