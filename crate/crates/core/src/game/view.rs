use super::{Color, HatDistribution, PlayerSet};
use crate::error::contract;
use crate::{Error, Result};

/// What player `observer` sees: every hat except their own.
///
/// The view borrows the distribution; any attempt to read the observer's
/// position is refused, and subset counts silently leave it out.
#[derive(Clone, Copy, Debug)]
pub struct VisibleView<'a> {
    dist: &'a HatDistribution,
    observer: usize,
}

impl<'a> VisibleView<'a> {
    pub fn new(dist: &'a HatDistribution, observer: usize) -> Result<VisibleView<'a>> {
        if observer == 0 || observer > dist.n() {
            return Err(contract(format!("observer {observer} is outside 1..={}", dist.n())));
        }
        Ok(VisibleView { dist, observer })
    }

    pub fn observer(&self) -> usize {
        self.observer
    }

    pub fn n(&self) -> usize {
        self.dist.n()
    }

    /// Color of player `j`, refused when `j` is the observer.
    pub fn color(&self, j: usize) -> Result<Color> {
        if j == self.observer {
            return Err(Error::Peek(j));
        }
        if j == 0 || j > self.dist.n() {
            return Err(contract(format!("player {j} is outside 1..={}", self.dist.n())));
        }
        Ok(self.dist.color(j))
    }

    /// Red hats the observer can see inside `set`.
    pub fn red_count_in(&self, set: &PlayerSet) -> usize {
        let all = self.dist.red_count_in(set);
        if set.contains(self.observer) && self.dist.color(self.observer) == Color::Red {
            all - 1
        } else {
            all
        }
    }

    pub fn visible_red_count(&self) -> usize {
        let all = self.dist.red_count();
        if self.dist.color(self.observer) == Color::Red {
            all - 1
        } else {
            all
        }
    }

    pub fn visible_blue_count(&self) -> usize {
        self.n() - 1 - self.visible_red_count()
    }

    /// The underlying distribution, guard included. Only meant for building
    /// rule-breaking profiles that exercise [`super::verify_no_peek`].
    #[doc(hidden)]
    pub fn unguarded(&self) -> &'a HatDistribution {
        self.dist
    }
}
