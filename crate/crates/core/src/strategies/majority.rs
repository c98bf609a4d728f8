use crate::error::contract;
use crate::game::{Color, Strategy, VisibleView};
use crate::Result;

/// Guess the color seen most often; `tie_break` on equal counts.
#[derive(Debug, Clone)]
pub struct MajorityStrategy {
    n: usize,
    tie_break: Color,
}

impl MajorityStrategy {
    pub fn new(n: usize, tie_break: Color) -> Result<MajorityStrategy> {
        if n < 2 {
            return Err(contract(format!("majority strategy needs n >= 2, got {n}")));
        }
        Ok(MajorityStrategy { n, tie_break })
    }

    pub fn tie_break(&self) -> Color {
        self.tie_break
    }
}

pub(crate) fn majority_guess(view: &VisibleView<'_>, tie_break: Color) -> Color {
    let reds = view.visible_red_count();
    let blues = view.visible_blue_count();
    match reds.cmp(&blues) {
        std::cmp::Ordering::Greater => Color::Red,
        std::cmp::Ordering::Less => Color::Blue,
        std::cmp::Ordering::Equal => tie_break,
    }
}

impl Strategy for MajorityStrategy {
    fn name(&self) -> &str {
        "majority"
    }

    fn players(&self) -> usize {
        self.n
    }

    fn guess(&self, view: &VisibleView<'_>) -> Color {
        majority_guess(view, self.tie_break)
    }
}
