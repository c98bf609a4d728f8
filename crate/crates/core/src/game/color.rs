use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A hat color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub const ALL: [Color; 2] = [Color::Red, Color::Blue];

    pub fn complement(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_symbol(c: char) -> Result<Color> {
        match c {
            'R' => Ok(Color::Red),
            'B' => Ok(Color::Blue),
            other => Err(Error::Encoding(format!(
                "invalid hat symbol {other:?}, expected 'R' or 'B'"
            ))),
        }
    }

    pub(crate) fn from_red_bit(red: bool) -> Color {
        if red {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub(crate) fn is_red(self) -> bool {
        self == Color::Red
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl std::str::FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Color> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Color::from_symbol(c),
            _ => Err(Error::Encoding(format!("expected a single 'R' or 'B', got {s:?}"))),
        }
    }
}
