use std::fmt;

use serde::{Deserialize, Serialize};

/// Number of parameter symbols in the coefficient field.
pub const NVARS: usize = 10;

/// A parameter symbol of the coefficient field `Q(h, a1..a6, eta, t1, t2)`.
///
/// The declaration order is the global variable order used by every
/// monomial ordering in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ParamSymbol {
    H,
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    Eta,
    T1,
    T2,
}

impl ParamSymbol {
    pub const ALL: [ParamSymbol; NVARS] = [
        ParamSymbol::H,
        ParamSymbol::A1,
        ParamSymbol::A2,
        ParamSymbol::A3,
        ParamSymbol::A4,
        ParamSymbol::A5,
        ParamSymbol::A6,
        ParamSymbol::Eta,
        ParamSymbol::T1,
        ParamSymbol::T2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> ParamSymbol {
        Self::ALL[i]
    }

    /// ASCII name used by the text syntax.
    pub fn name(self) -> &'static str {
        match self {
            ParamSymbol::H => "h",
            ParamSymbol::A1 => "a1",
            ParamSymbol::A2 => "a2",
            ParamSymbol::A3 => "a3",
            ParamSymbol::A4 => "a4",
            ParamSymbol::A5 => "a5",
            ParamSymbol::A6 => "a6",
            ParamSymbol::Eta => "eta",
            ParamSymbol::T1 => "t1",
            ParamSymbol::T2 => "t2",
        }
    }

    pub fn from_name(s: &str) -> Option<ParamSymbol> {
        Self::ALL.iter().copied().find(|p| p.name() == s)
    }

    pub fn latex(self) -> &'static str {
        match self {
            ParamSymbol::H => "h",
            ParamSymbol::A1 => "\\alpha_{1}",
            ParamSymbol::A2 => "\\alpha_{2}",
            ParamSymbol::A3 => "\\alpha_{3}",
            ParamSymbol::A4 => "\\alpha_{4}",
            ParamSymbol::A5 => "\\alpha_{5}",
            ParamSymbol::A6 => "\\alpha_{6}",
            ParamSymbol::Eta => "\\eta",
            ParamSymbol::T1 => "t_{1}",
            ParamSymbol::T2 => "t_{2}",
        }
    }

    pub fn is_time(self) -> bool {
        matches!(self, ParamSymbol::T1 | ParamSymbol::T2)
    }
}

impl fmt::Display for ParamSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
