//! Hamiltonians from holomorphy: a degree-bounded ansatz is pushed through
//! every transformation of a type and the coefficients of the polar terms
//! are set to zero.

mod ansatz;
pub mod calibration;
mod conditions;
mod pipeline;
mod solve;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::CatalogError;
use crate::field::{ParamSymbol, RatFunc};
use crate::weyl::WeylError;

pub use ansatz::{build_ansatz, monomial_for, unknown_for, Ansatz};
pub use conditions::{
    conditions_from_flow, conditions_from_transform, flow_conditions, pole_conditions, HoloCondition, Provenance,
};
pub use pipeline::{run_pipeline, DerivationReport, Normalization, PipelineConfig, StageReport};
pub use solve::{solve, Echelon, Inconsistency, LinearSystem, Solved};

/// How the commutator enters the flow condition `df/dt = B(H, f) + df/dt|_explicit`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlowConvention {
    /// `[H, f]`
    Literal,
    /// `-[H, f]`
    Negated,
    /// `[H, f] / h`
    Scaled,
    /// `-[H, f] / h`, the form under which the printed Hamiltonians satisfy
    /// the flow conditions.
    #[default]
    NegatedScaled,
}

impl FlowConvention {
    pub const ALL: [FlowConvention; 4] = [
        FlowConvention::Literal,
        FlowConvention::Negated,
        FlowConvention::Scaled,
        FlowConvention::NegatedScaled,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FlowConvention::Literal => "literal",
            FlowConvention::Negated => "negated",
            FlowConvention::Scaled => "scaled",
            FlowConvention::NegatedScaled => "negated-scaled",
        }
    }

    /// Factor multiplying `[H, f]`.
    pub fn factor(self) -> RatFunc {
        let inv_h = || RatFunc::var(ParamSymbol::H).inv().expect("h is nonzero");
        match self {
            FlowConvention::Literal => RatFunc::one(),
            FlowConvention::Negated => RatFunc::from_int(-1),
            FlowConvention::Scaled => inv_h(),
            FlowConvention::NegatedScaled => inv_h().neg(),
        }
    }
}

impl fmt::Display for FlowConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FlowConvention {
    type Err = DeriveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FlowConvention::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| DeriveError::UnknownConvention(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeriveError {
    #[error("{id} depends on {}; use the flow conditions", times.join(", "))]
    TDependentTransformation { id: String, times: Vec<String> },
    #[error("`{0}` is not a time variable")]
    NotATime(String),
    #[error("flow index must be 1 or 2, got {0}")]
    BadFlow(usize),
    #[error("unknown flow convention `{0}`")]
    UnknownConvention(String),
    #[error("{stage}: inconsistent condition from {transformation} at {monomial}: reduces to {residue} = 0")]
    Inconsistent {
        stage: String,
        transformation: String,
        monomial: String,
        residue: String,
    },
    #[error(transparent)]
    Algebra(#[from] WeylError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}
