//! The fifteen special hypergraphs, shipped as embedded `.hg` files.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hgfile;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SpecialKind {
    H4,
    H10,
    H11,
    H14_1,
    H14_2,
    H14_3,
    H14_4,
    H14_5,
    H14_6,
    H21_1,
    H21_2,
    H21_3,
    H21_4,
    H21_5,
    H21_6,
}

/// Size class of a special hypergraph, which fixes its deficiency weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SpecialClass {
    X4,
    X10,
    X11,
    X14,
    X21,
}

impl SpecialClass {
    pub const ALL: [SpecialClass; 5] =
        [SpecialClass::X4, SpecialClass::X10, SpecialClass::X11, SpecialClass::X14, SpecialClass::X21];

    /// Coefficient of `|X_i|` in the deficiency functional.
    pub fn weight(self) -> i64 {
        match self {
            SpecialClass::X4 => 8,
            SpecialClass::X10 => 10,
            SpecialClass::X11 => 4,
            SpecialClass::X14 => 5,
            SpecialClass::X21 => 1,
        }
    }

    /// Transversal number of every member of the class.
    pub fn tau(self) -> usize {
        match self {
            SpecialClass::X4 => 1,
            SpecialClass::X10 | SpecialClass::X11 => 3,
            SpecialClass::X14 => 4,
            SpecialClass::X21 => 6,
        }
    }
}

impl SpecialKind {
    pub const ALL: [SpecialKind; 15] = [
        SpecialKind::H4,
        SpecialKind::H10,
        SpecialKind::H11,
        SpecialKind::H14_1,
        SpecialKind::H14_2,
        SpecialKind::H14_3,
        SpecialKind::H14_4,
        SpecialKind::H14_5,
        SpecialKind::H14_6,
        SpecialKind::H21_1,
        SpecialKind::H21_2,
        SpecialKind::H21_3,
        SpecialKind::H21_4,
        SpecialKind::H21_5,
        SpecialKind::H21_6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpecialKind::H4 => "H4",
            SpecialKind::H10 => "H10",
            SpecialKind::H11 => "H11",
            SpecialKind::H14_1 => "H14_1",
            SpecialKind::H14_2 => "H14_2",
            SpecialKind::H14_3 => "H14_3",
            SpecialKind::H14_4 => "H14_4",
            SpecialKind::H14_5 => "H14_5",
            SpecialKind::H14_6 => "H14_6",
            SpecialKind::H21_1 => "H21_1",
            SpecialKind::H21_2 => "H21_2",
            SpecialKind::H21_3 => "H21_3",
            SpecialKind::H21_4 => "H21_4",
            SpecialKind::H21_5 => "H21_5",
            SpecialKind::H21_6 => "H21_6",
        }
    }

    pub fn class(self) -> SpecialClass {
        use SpecialKind::*;
        match self {
            H4 => SpecialClass::X4,
            H10 => SpecialClass::X10,
            H11 => SpecialClass::X11,
            H14_1 | H14_2 | H14_3 | H14_4 | H14_5 | H14_6 => SpecialClass::X14,
            H21_1 | H21_2 | H21_3 | H21_4 | H21_5 | H21_6 => SpecialClass::X21,
        }
    }

    fn data(self) -> Option<&'static str> {
        use SpecialKind::*;
        Some(match self {
            H4 => include_str!("../../catalog/H4.hg"),
            H10 => include_str!("../../catalog/H10.hg"),
            H11 => include_str!("../../catalog/H11.hg"),
            H14_1 => include_str!("../../catalog/H14_1.hg"),
            H14_2 => include_str!("../../catalog/H14_2.hg"),
            H14_3 => include_str!("../../catalog/H14_3.hg"),
            H14_4 => include_str!("../../catalog/H14_4.hg"),
            H14_5 => include_str!("../../catalog/H14_5.hg"),
            H14_6 => include_str!("../../catalog/H14_6.hg"),
            H21_2 => include_str!("../../catalog/H21_2.hg"),
            H21_5 => include_str!("../../catalog/H21_5.hg"),
            H21_1 | H21_3 | H21_4 | H21_6 => return None,
        })
    }

    pub fn is_shipped(self) -> bool {
        self.data().is_some()
    }

    /// Shipped kinds, in catalog order.
    pub fn shipped() -> impl Iterator<Item = SpecialKind> {
        Self::ALL.into_iter().filter(|k| k.is_shipped())
    }
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpecialKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace([',', '-'], "_").to_ascii_uppercase();
        Self::ALL
            .into_iter()
            .find(|k| k.name().to_ascii_uppercase() == norm)
            .ok_or_else(|| Error::UnknownSpecial(s.to_string()))
    }
}

pub fn special(kind: SpecialKind) -> Result<Hypergraph> {
    let text = kind.data().ok_or(Error::NotShipped(kind.name()))?;
    Ok(hgfile::parse(text).expect("embedded catalog file parses"))
}

pub fn special_by_name(name: &str) -> Result<Hypergraph> {
    special(name.parse()?)
}
