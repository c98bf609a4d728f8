use std::fmt;

use crate::error::contract;
use crate::Result;

/// A subset of the players `1..=n`, stored as a bit mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlayerSet {
    n: usize,
    words: Vec<u64>,
}

pub(crate) fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl PlayerSet {
    pub fn empty(n: usize) -> PlayerSet {
        PlayerSet { n, words: vec![0; word_count(n)] }
    }

    pub fn full(n: usize) -> PlayerSet {
        let mut set = PlayerSet::empty(n);
        for p in 1..=n {
            set.insert_unchecked(p);
        }
        set
    }

    /// The consecutive players `first..=last`.
    pub fn range(n: usize, first: usize, last: usize) -> Result<PlayerSet> {
        PlayerSet::from_players(n, first..=last)
    }

    pub fn from_players(n: usize, players: impl IntoIterator<Item = usize>) -> Result<PlayerSet> {
        let mut set = PlayerSet::empty(n);
        for p in players {
            if p == 0 || p > n {
                return Err(contract(format!("player {p} is outside 1..={n}")));
            }
            set.insert_unchecked(p);
        }
        Ok(set)
    }

    fn insert_unchecked(&mut self, p: usize) {
        let bit = p - 1;
        self.words[bit / 64] |= 1 << (bit % 64);
    }

    /// Number of players in the game this set belongs to.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, p: usize) -> bool {
        if p == 0 || p > self.n {
            return false;
        }
        let bit = p - 1;
        self.words[bit / 64] >> (bit % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn complement(&self) -> PlayerSet {
        let mut out = PlayerSet::full(self.n);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    pub fn is_disjoint(&self, other: &PlayerSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Players in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(move |&p| self.contains(p))
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for PlayerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for PlayerSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
