use serde::Serialize;

use crate::error::contract;
use crate::game::{Color, Strategy, VisibleView};
use crate::Result;

/// Which side of an ordered pair a player is on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// `x_i`: calls the partner's color.
    Caller,
    /// `y_i`: calls the opposite of the partner's color.
    Contrarian,
}

impl Role {
    /// The pairing rule given the partner's visible color.
    pub fn guess(self, partner: Color) -> Color {
        match self {
            Role::Caller => partner,
            Role::Contrarian => partner.complement(),
        }
    }
}

/// Ordered, disjoint pairs `(x_i, y_i)` covering players `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pairing {
    n: usize,
    pairs: Vec<(usize, usize)>,
    #[serde(skip)]
    slots: Vec<(Role, usize)>,
}

impl Pairing {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Pairing> {
        if n == 0 || n % 2 != 0 {
            return Err(contract(format!("a pairing needs a positive even player count, got {n}")));
        }
        if pairs.len() * 2 != n {
            return Err(contract(format!("{} pairs cannot cover {n} players", pairs.len())));
        }
        let mut slots = vec![(Role::Caller, 0); n];
        for &(x, y) in &pairs {
            if x == y {
                return Err(contract(format!("player {x} is paired with themselves")));
            }
            for (p, role, partner) in [(x, Role::Caller, y), (y, Role::Contrarian, x)] {
                if p == 0 || p > n {
                    return Err(contract(format!("player {p} is outside 1..={n}")));
                }
                if slots[p - 1].1 != 0 {
                    return Err(contract(format!("player {p} appears in two pairs")));
                }
                slots[p - 1] = (role, partner);
            }
        }
        Ok(Pairing { n, pairs, slots })
    }

    /// `(1,2), (3,4), ..., (n-1, n)`.
    pub fn canonical(n: usize) -> Result<Pairing> {
        if n < 2 || n % 2 != 0 {
            return Err(contract(format!("canonical pairing needs an even n >= 2, got {n}")));
        }
        Pairing::new(n, (1..=n).step_by(2).map(|x| (x, x + 1)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Role and partner of player `p`.
    ///
    /// # Panics
    /// If `p` is not in `1..=n`.
    pub fn slot(&self, p: usize) -> (Role, usize) {
        self.slots[p - 1]
    }

    pub fn partner(&self, p: usize) -> usize {
        self.slot(p).1
    }
}

/// Free-function form of [`Pairing::canonical`].
pub fn canonical_pairing(n: usize) -> Result<Pairing> {
    Pairing::canonical(n)
}

/// Guess of `view.observer()` under the pairing rule.
pub(crate) fn pairing_guess(pairing: &Pairing, view: &VisibleView<'_>) -> Color {
    let (role, partner) = pairing.slot(view.observer());
    role.guess(view.color(partner).expect("a partner is never the observer"))
}

/// Exactly one player of each pair guesses right, whatever the hats.
#[derive(Debug, Clone)]
pub struct PairingStrategy {
    pairing: Pairing,
}

impl PairingStrategy {
    pub fn new(pairing: Pairing) -> PairingStrategy {
        PairingStrategy { pairing }
    }

    pub fn canonical(n: usize) -> Result<PairingStrategy> {
        Ok(PairingStrategy::new(Pairing::canonical(n)?))
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }
}

impl Strategy for PairingStrategy {
    fn name(&self) -> &str {
        "pairing"
    }

    fn players(&self) -> usize {
        self.pairing.n()
    }

    fn guess(&self, view: &VisibleView<'_>) -> Color {
        pairing_guess(&self.pairing, view)
    }
}
