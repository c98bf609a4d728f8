use std::fmt;
use std::str::FromStr;

use super::set::{word_count, PlayerSet};
use super::Color;
use crate::error::contract;
use crate::{Error, Result};

/// An assignment of a hat color to each of the players `1..=n`.
///
/// Red hats are set bits, player `i` lives at bit `i - 1`. The text encoding
/// is a string over `{R, B}` whose leftmost character is player 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HatDistribution {
    n: usize,
    words: Vec<u64>,
}

impl HatDistribution {
    pub fn new(colors: &[Color]) -> Result<HatDistribution> {
        if colors.is_empty() {
            return Err(Error::Encoding("a hat distribution needs at least one player".into()));
        }
        let mut dist = HatDistribution { n: colors.len(), words: vec![0; word_count(colors.len())] };
        for (bit, c) in colors.iter().enumerate() {
            if c.is_red() {
                dist.words[bit / 64] |= 1 << (bit % 64);
            }
        }
        Ok(dist)
    }

    pub fn monochrome(n: usize, color: Color) -> Result<HatDistribution> {
        HatDistribution::new(&vec![color; n])
    }

    /// The distribution whose red set is the binary expansion of `index`
    /// (bit 0 is player 1). Used to walk all of `{R, B}^n` for `n <= 64`.
    pub fn from_index(n: usize, index: u64) -> Result<HatDistribution> {
        if n == 0 || n > 64 {
            return Err(contract(format!("index encoding needs 1 <= n <= 64, got {n}")));
        }
        let mut dist = HatDistribution { n, words: vec![0] };
        dist.load_index(index);
        Ok(dist)
    }

    /// Overwrite the colors in place with those of `index`; only defined for
    /// `n <= 64`.
    pub fn load_index(&mut self, index: u64) {
        debug_assert!(self.n <= 64);
        self.words[0] = index & mask_low(self.n);
    }

    /// Inverse of [`HatDistribution::from_index`], `None` for `n > 64`.
    pub fn index(&self) -> Option<u64> {
        (self.n <= 64).then(|| self.words[0])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Color of player `i` (1-based).
    ///
    /// # Panics
    /// If `i` is not in `1..=n`.
    pub fn color(&self, i: usize) -> Color {
        assert!(i >= 1 && i <= self.n, "player {i} is outside 1..={}", self.n);
        Color::from_red_bit(self.bit(i - 1))
    }

    fn bit(&self, bit: usize) -> bool {
        self.words[bit / 64] >> (bit % 64) & 1 == 1
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> + '_ {
        (0..self.n).map(|b| Color::from_red_bit(self.bit(b)))
    }

    /// `|R_ω|`
    pub fn red_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|B_ω|`
    pub fn blue_count(&self) -> usize {
        self.n - self.red_count()
    }

    /// `max{|R_ω|, |B_ω|}`, the score of a perfect majority guess.
    pub fn majority_target(&self) -> usize {
        let r = self.red_count();
        r.max(self.n - r)
    }

    /// `|R_ω ∩ set|`
    pub fn red_count_in(&self, set: &PlayerSet) -> usize {
        debug_assert_eq!(set.universe(), self.n);
        self.words
            .iter()
            .zip(set.words())
            .map(|(w, m)| (w & m).count_ones() as usize)
            .sum()
    }

    /// Flip the hat of player `i` (1-based) in place.
    pub fn flip(&mut self, i: usize) {
        assert!(i >= 1 && i <= self.n, "player {i} is outside 1..={}", self.n);
        let bit = i - 1;
        self.words[bit / 64] ^= 1 << (bit % 64);
    }

    pub fn flipped(&self, i: usize) -> HatDistribution {
        let mut out = self.clone();
        out.flip(i);
        out
    }

    pub fn set_color(&mut self, i: usize, color: Color) {
        if self.color(i) != color {
            self.flip(i);
        }
    }

    /// The first `m` players' hats.
    pub fn prefix(&self, m: usize) -> Result<HatDistribution> {
        if m == 0 || m > self.n {
            return Err(contract(format!("prefix length {m} outside 1..={}", self.n)));
        }
        HatDistribution::new(&self.colors().take(m).collect::<Vec<_>>())
    }
}

fn mask_low(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Display for HatDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.colors().try_for_each(|c| write!(f, "{}", c.symbol()))
    }
}

impl fmt::Debug for HatDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HatDistribution({self})")
    }
}

impl FromStr for HatDistribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<HatDistribution> {
        let colors = s.chars().map(Color::from_symbol).collect::<Result<Vec<_>>>()?;
        HatDistribution::new(&colors)
    }
}

impl TryFrom<&[Color]> for HatDistribution {
    type Error = Error;

    fn try_from(colors: &[Color]) -> Result<HatDistribution> {
        HatDistribution::new(colors)
    }
}

impl serde::Serialize for HatDistribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for HatDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
