//! Basis labels for the truncated Alice ⊗ Bob product spaces.

use std::fmt;

/// The two entangled-state families under study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StateFamily {
    /// (|↑↓> + |↓↑>)/sqrt(2) in photon helicity.
    HelicityBell,
    /// (|00> + |11>)/sqrt(2) in particle number.
    NumberBell,
}

impl StateFamily {
    pub fn name(self) -> &'static str {
        match self {
            StateFamily::HelicityBell => "helicity",
            StateFamily::NumberBell => "number",
        }
    }
}

impl fmt::Display for StateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Alice's single-qubit label: a helicity qubit (Up/Down) for the
/// helicity-entangled family, a number qubit (Zero/One) for the
/// number-entangled family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AliceLabel {
    Up,
    Down,
    Zero,
    One,
}

impl AliceLabel {
    pub fn family(self) -> StateFamily {
        match self {
            AliceLabel::Up | AliceLabel::Down => StateFamily::HelicityBell,
            AliceLabel::Zero | AliceLabel::One => StateFamily::NumberBell,
        }
    }
}

/// Helicity carried by Bob's populated Rindler tower; `None` for the
/// number-entangled (scalar-like) family, which has a single tower.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BobHelicity {
    Up,
    Down,
    None,
}

/// Bob-side label: which helicity tower, and the Rindler photon number in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BobLabel {
    pub helicity: BobHelicity,
    pub n: usize,
}

impl BobLabel {
    pub fn helicity(helicity: BobHelicity, n: usize) -> Self {
        Self { helicity, n }
    }

    pub fn number(n: usize) -> Self {
        Self {
            helicity: BobHelicity::None,
            n,
        }
    }
}

/// One product-basis vector |alice> ⊗ |bob>.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisVector {
    pub alice: AliceLabel,
    pub bob: BobLabel,
}

impl BasisVector {
    pub fn new(alice: AliceLabel, bob: BobLabel) -> Self {
        Self { alice, bob }
    }
}

/// Index into a truncated A ⊗ R ⊗ L amplitude table: Alice label, R-sector
/// occupation, L-sector occupation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripartiteIndex {
    pub alice: AliceLabel,
    pub r_occ: usize,
    pub l_occ: usize,
}

impl TripartiteIndex {
    pub fn new(alice: AliceLabel, r_occ: usize, l_occ: usize) -> Self {
        Self { alice, r_occ, l_occ }
    }
}
