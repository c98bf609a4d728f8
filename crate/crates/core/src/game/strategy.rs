use serde::Serialize;

use super::{Color, HatDistribution, VisibleView};
use crate::error::contract;
use crate::Result;

/// A deterministic guessing rule for each of `players()` players.
///
/// `guess` only receives a [`VisibleView`], so a well-behaved strategy
/// cannot depend on the observer's own hat. Implementations may precompute
/// tables at construction time but must be pure afterwards.
pub trait Strategy: Send + Sync {
    fn name(&self) -> &str;

    fn players(&self) -> usize;

    fn guess(&self, view: &VisibleView<'_>) -> Color;
}

impl<S: Strategy + ?Sized> Strategy for &S {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn players(&self) -> usize {
        (**self).players()
    }
    fn guess(&self, view: &VisibleView<'_>) -> Color {
        (**self).guess(view)
    }
}

impl<S: Strategy + ?Sized> Strategy for Box<S> {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn players(&self) -> usize {
        (**self).players()
    }
    fn guess(&self, view: &VisibleView<'_>) -> Color {
        (**self).guess(view)
    }
}

/// Outcome of one strategy on one distribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GuessRecord {
    #[serde(serialize_with = "guesses_as_text")]
    pub guesses: Vec<Color>,
    pub correct_count: usize,
    /// 1-based, ascending.
    pub correct_set: Vec<usize>,
}

fn guesses_as_text<S: serde::Serializer>(g: &[Color], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&g.iter().map(|c| c.symbol()).collect::<String>())
}

impl GuessRecord {
    pub fn wrong_count(&self) -> usize {
        self.guesses.len() - self.correct_count
    }
}

fn check_dims<S: Strategy + ?Sized>(strategy: &S, omega: &HatDistribution) -> Result<()> {
    if strategy.players() != omega.n() {
        return Err(contract(format!(
            "strategy {} plays {} players but the distribution has {}",
            strategy.name(),
            strategy.players(),
            omega.n()
        )));
    }
    Ok(())
}

fn view(omega: &HatDistribution, i: usize) -> VisibleView<'_> {
    VisibleView::new(omega, i).expect("observer in range")
}

/// Let every player guess from their own view and score the result.
pub fn evaluate<S: Strategy + ?Sized>(strategy: &S, omega: &HatDistribution) -> Result<GuessRecord> {
    check_dims(strategy, omega)?;
    let guesses: Vec<Color> = (1..=omega.n()).map(|i| strategy.guess(&view(omega, i))).collect();
    let correct_set: Vec<usize> = (1..=omega.n())
        .filter(|&i| guesses[i - 1] == omega.color(i))
        .collect();
    Ok(GuessRecord { correct_count: correct_set.len(), guesses, correct_set })
}

/// `cor(S, ω)` without materializing the record; the inner loop of sweeps.
pub fn count_correct<S: Strategy + ?Sized>(strategy: &S, omega: &HatDistribution) -> Result<usize> {
    check_dims(strategy, omega)?;
    Ok(count_correct_unchecked(strategy, omega))
}

pub(crate) fn count_correct_unchecked<S: Strategy + ?Sized>(strategy: &S, omega: &HatDistribution) -> usize {
    (1..=omega.n())
        .filter(|&i| strategy.guess(&view(omega, i)) == omega.color(i))
        .count()
}

/// Players whose guess changes when only their own hat is flipped. An empty
/// result means the strategy is legal on `omega`.
pub fn verify_no_peek<S: Strategy + ?Sized>(strategy: &S, omega: &HatDistribution) -> Result<Vec<usize>> {
    check_dims(strategy, omega)?;
    let mut flipped = omega.clone();
    let mut violators = Vec::new();
    for i in 1..=omega.n() {
        if !guess_survives_flip(strategy, omega, &mut flipped, i) {
            violators.push(i);
        }
    }
    Ok(violators)
}

/// Flip-test a single player; `scratch` must equal `omega` on entry and is
/// restored on exit.
pub(crate) fn guess_survives_flip<S: Strategy + ?Sized>(
    strategy: &S,
    omega: &HatDistribution,
    scratch: &mut HatDistribution,
    i: usize,
) -> bool {
    let before = strategy.guess(&view(omega, i));
    scratch.flip(i);
    let after = strategy.guess(&view(scratch, i));
    scratch.flip(i);
    before == after
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Player `i` guesses the color of player `i + 1` (cyclically).
    struct LookRight(usize);

    impl Strategy for LookRight {
        fn name(&self) -> &str {
            "look-right"
        }
        fn players(&self) -> usize {
            self.0
        }
        fn guess(&self, v: &VisibleView<'_>) -> Color {
            v.color(v.observer() % self.0 + 1).unwrap()
        }
    }

    struct Cheater(usize);

    impl Strategy for Cheater {
        fn name(&self) -> &str {
            "cheater"
        }
        fn players(&self) -> usize {
            self.0
        }
        fn guess(&self, v: &VisibleView<'_>) -> Color {
            v.unguarded().color(v.observer())
        }
    }

    #[test]
    fn evaluate_scores_positions() {
        let omega: HatDistribution = "RRB".parse().unwrap();
        let rec = evaluate(&LookRight(3), &omega).unwrap();
        assert_eq!(rec.guesses, vec![Color::Red, Color::Blue, Color::Red]);
        assert_eq!(rec.correct_set, vec![1]);
        assert_eq!(rec.correct_count, 1);
        assert_eq!(rec.wrong_count(), 2);
        assert_eq!(count_correct(&LookRight(3), &omega).unwrap(), 1);
        assert_eq!(evaluate(&LookRight(3), &omega).unwrap(), rec);
    }

    #[test]
    fn dimension_mismatch_is_a_contract_error() {
        let omega: HatDistribution = "RRB".parse().unwrap();
        assert!(matches!(evaluate(&LookRight(4), &omega), Err(crate::Error::Contract(_))));
        assert!(count_correct(&LookRight(2), &omega).is_err());
        assert!(verify_no_peek(&LookRight(2), &omega).is_err());
    }

    #[test]
    fn cheater_is_caught() {
        let omega: HatDistribution = "RB".parse().unwrap();
        assert_eq!(verify_no_peek(&Cheater(2), &omega).unwrap(), vec![1, 2]);
        assert!(verify_no_peek(&LookRight(2), &omega).unwrap().is_empty());
        assert_eq!(evaluate(&Cheater(2), &omega).unwrap().correct_count, 2);
    }

    #[test]
    fn record_json_shape() {
        let omega: HatDistribution = "RRB".parse().unwrap();
        let rec = evaluate(&LookRight(3), &omega).unwrap();
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(json, r#"{"guesses":"RBR","correct_count":1,"correct_set":[1]}"#);
    }
}
