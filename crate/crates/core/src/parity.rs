//! Theta-characteristic parity bookkeeping and the section parity rule.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frac::Frac;

/// Failures of the parity rules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParityError {
    #[error("self-intersection {0} is not in (1/2)Z")]
    NotHalfIntegral(Frac),
    #[error("self-intersections sum to {0}, which is not an integer")]
    NonIntegralSum(Frac),
}

/// `h⁰ mod 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn bit(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Self {
        Parity::from_bit(!self.bit())
    }

    /// The Hirzebruch surface a surface with a section of this parity
    /// degenerates from.
    pub fn degeneration(self) -> Degeneration {
        match self {
            Parity::Even => Degeneration::F0,
            Parity::Odd => Degeneration::F1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// `F₀` or `F₁`, labelling the even and odd components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Degeneration {
    F0,
    F1,
}

/// A parity, or the statement that it does not affect the stable image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityOutcome {
    Determined(Parity),
    Moot,
}

impl fmt::Display for ParityOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityOutcome::Determined(p) => p.fmt(f),
            ParityOutcome::Moot => f.write_str("moot"),
        }
    }
}

/// Recorded change of the twisting line bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TwistEvent {
    /// Tensoring by the two-torsion bundle glued by `−1` at a node.
    Epsilon,
    /// Pushing forward from the partial normalization at an orbinode.
    OrbinodeNormalize,
}

/// `h⁰ mod 2` with the events that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityState {
    pub initial: Parity,
    pub h0_mod2: Parity,
    pub twist_log: Vec<TwistEvent>,
}

impl ParityState {
    pub fn new(initial: Parity) -> Self {
        ParityState {
            initial,
            h0_mod2: initial,
            twist_log: Vec::new(),
        }
    }

    /// The parity obtained by replaying the log from the initial bit.
    pub fn replay(&self) -> Parity {
        self.twist_log.iter().fold(self.initial, |p, e| match e {
            TwistEvent::Epsilon => p.flip(),
            TwistEvent::OrbinodeNormalize => p,
        })
    }

    pub fn is_consistent(&self) -> bool {
        self.replay() == self.h0_mod2
    }
}

/// Twisting by `ε_x` changes `h⁰` by one.
pub fn epsilon_twist(state: &ParityState) -> ParityState {
    let mut s = state.clone();
    s.h0_mod2 = s.h0_mod2.flip();
    s.twist_log.push(TwistEvent::Epsilon);
    s
}

/// Normalizing at an orbinode with nontrivial action preserves `h⁰`.
pub fn orbinode_normalize(state: &ParityState) -> ParityState {
    let mut s = state.clone();
    s.twist_log.push(TwistEvent::OrbinodeNormalize);
    s
}

/// Self-intersections of the pieces of a glued section.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionClass {
    pub pieces: Vec<Frac>,
}

impl SectionClass {
    /// Rejects pieces outside `(1/2)Z`.
    pub fn new(pieces: Vec<Frac>) -> Result<Self, ParityError> {
        if let Some(p) = pieces.iter().find(|p| !p.scale(2).is_integer()) {
            return Err(ParityError::NotHalfIntegral(p.clone()));
        }
        Ok(SectionClass { pieces })
    }

    pub fn total(&self) -> Frac {
        self.pieces.iter().sum()
    }
}

/// Parity of the glued section's self-intersection.
pub fn section_parity(sc: &SectionClass) -> Result<Parity, ParityError> {
    let total = sc.total();
    match total.int_mod(2) {
        Some(0) => Ok(Parity::Even),
        Some(_) => Ok(Parity::Odd),
        None => Err(ParityError::NonIntegralSum(total)),
    }
}

/// Self-intersection mod 2 of a tail section over a double cover with `b1`
/// ramification points.
pub fn tail_section_contribution(b1: u32) -> Frac {
    Frac::new(b1 as i64, 2)
}

/// Ramification points of a double cover of a rational curve of genus `g`;
/// `g = −1` is the trivial cover.
pub fn double_cover_ramification(g: i64) -> u32 {
    u32::try_from(2 * g + 2).expect("genus at least -1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac::q;

    #[test]
    fn twists() {
        let s0 = ParityState::new(Parity::Even);
        assert_eq!(epsilon_twist(&s0).h0_mod2, Parity::Odd);
        assert_eq!(epsilon_twist(&ParityState::new(Parity::Odd)).h0_mod2, Parity::Even);
        assert_eq!(epsilon_twist(&epsilon_twist(&s0)).h0_mod2, Parity::Even);
        assert_eq!(orbinode_normalize(&s0).h0_mod2, Parity::Even);
        assert_eq!(epsilon_twist(&orbinode_normalize(&s0)).h0_mod2, Parity::Odd);
        assert!(epsilon_twist(&orbinode_normalize(&s0)).is_consistent());
    }

    #[test]
    fn section_parities() {
        let sp = |v: Vec<Frac>| section_parity(&SectionClass::new(v).unwrap());
        assert_eq!(sp(vec![q(0, 1), q(0, 1), q(0, 1)]).unwrap(), Parity::Even);
        let odd = sp(vec![q(1, 1)]).unwrap();
        assert_eq!(odd, Parity::Odd);
        assert_eq!(odd.degeneration(), Degeneration::F1);
        assert_eq!(sp(vec![q(1, 2), q(1, 2), q(1, 1)]).unwrap(), Parity::Even);
        assert_eq!(sp(vec![q(-1, 2), q(-3, 2)]).unwrap(), Parity::Even);
        assert!(matches!(sp(vec![q(1, 2)]), Err(ParityError::NonIntegralSum(_))));
        assert!(SectionClass::new(vec![q(1, 3)]).is_err());
    }

    #[test]
    fn tail_contribution() {
        assert_eq!(tail_section_contribution(0), q(0, 1));
        assert_eq!(tail_section_contribution(2), q(1, 1));
        assert_eq!(tail_section_contribution(6), q(3, 1));
        assert_eq!(double_cover_ramification(-1), 0);
        assert_eq!(double_cover_ramification(2), 6);
    }
}
