use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{DeriveError, FlowConvention};
use crate::catalog::Transformation;
use crate::field::{LinForm, ParamSymbol, RatFunc};
use crate::weyl::{Scalar, Slot, SubstMap, Substituter, VarSet, WeylElement, WeylMonomial, WeylError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    /// e.g. `G11111 r1`.
    pub transformation: String,
    /// Polar monomial in the new variables.
    pub monomial: WeylMonomial,
    /// Time variable and new variable `f` for flow conditions.
    pub flow: Option<(ParamSymbol, &'static str)>,
}

/// `lhs = 0` identically in the parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoloCondition {
    pub lhs: LinForm,
    pub provenance: Provenance,
}

impl HoloCondition {
    pub fn to_json(&self) -> Value {
        json!({
            "transformation": self.provenance.transformation,
            "monomial": self.provenance.monomial.render(VarSet::New),
            "flow": self.provenance.flow.map(|(t, f)| format!("d{f}/d{t}")),
            "lhs": self.lhs.to_string(),
        })
    }
}

fn polar_accumulate(acc: &mut BTreeMap<WeylMonomial, LinForm>, image: &WeylElement, factor: &LinForm) {
    for (m, c) in image.terms() {
        if !m.is_polar() {
            continue;
        }
        let c = match c {
            Scalar::Rat(r) => r,
            Scalar::Lin(_) => unreachable!("images of monomials are k-free"),
        };
        acc.entry(*m).or_default().add_assign(&factor.scale(c));
    }
}

fn collect(
    acc: BTreeMap<WeylMonomial, LinForm>,
    id: &str,
    flow: Option<(ParamSymbol, &'static str)>,
) -> Vec<HoloCondition> {
    acc.into_iter()
        .filter(|(_, l)| !l.is_zero())
        .map(|(monomial, lhs)| HoloCondition {
            lhs,
            provenance: Provenance {
                transformation: id.to_string(),
                monomial,
                flow,
            },
        })
        .collect()
}

/// Polar part of `h` pushed through `forward`, one condition per polar
/// monomial. `h` may carry unknowns in its coefficients.
pub fn pole_conditions(h: &WeylElement, forward: &SubstMap, id: &str) -> Result<Vec<HoloCondition>, WeylError> {
    let mut sub = Substituter::new(forward);
    let mut acc: BTreeMap<WeylMonomial, LinForm> = BTreeMap::new();
    for (mu, s) in h.terms() {
        let img = sub.monomial(mu)?;
        polar_accumulate(&mut acc, &img, &s.to_linform());
    }
    Ok(collect(acc, id, None))
}

/// Holomorphy of `bracket(h, f) + df/dtv` in the new variables for each new
/// variable `f`, where `f` is written in the old variables through `backward`
/// and the result is pushed through `forward`.
pub fn flow_conditions(
    h: &WeylElement,
    forward: &SubstMap,
    backward: &SubstMap,
    id: &str,
    tv: ParamSymbol,
    convention: FlowConvention,
) -> Result<Vec<HoloCondition>, WeylError> {
    let factor = convention.factor();
    let mut sub = Substituter::new(forward);
    let mut out = Vec::new();
    for slot in Slot::ALL {
        let f_expr = backward.image(slot);
        let name = slot.name(VarSet::New);
        let mut acc: BTreeMap<WeylMonomial, LinForm> = BTreeMap::new();
        for (mu, s) in h.terms() {
            let m = WeylElement::monomial(*mu, RatFunc::one());
            let br = m.commutator(f_expr)?;
            let img = sub.apply(&br)?;
            polar_accumulate(&mut acc, &img, &s.to_linform().scale(&factor));
        }
        let dt = sub.apply(&f_expr.t_derivative(tv))?;
        polar_accumulate(&mut acc, &dt, &LinForm::constant(RatFunc::one()));
        out.extend(collect(acc, id, Some((tv, name))));
    }
    Ok(out)
}

/// Pole conditions of `h` under the corrected forward map of a
/// time-independent transformation.
pub fn conditions_from_transform(h: &WeylElement, r: &Transformation) -> Result<Vec<HoloCondition>, DeriveError> {
    if !r.t_dependent.is_empty() {
        return Err(DeriveError::TDependentTransformation {
            id: r.id(),
            times: r.t_dependent.iter().map(|t| t.name().to_string()).collect(),
        });
    }
    Ok(pole_conditions(h, &r.corrected_forward, &r.id())?)
}

/// Flow conditions of `h` under the corrected maps of `r`.
pub fn conditions_from_flow(
    h: &WeylElement,
    r: &Transformation,
    tv: ParamSymbol,
    convention: FlowConvention,
) -> Result<Vec<HoloCondition>, DeriveError> {
    if !tv.is_time() {
        return Err(DeriveError::NotATime(tv.name().to_string()));
    }
    Ok(flow_conditions(h, &r.corrected_forward, &r.corrected_backward, &r.id(), tv, convention)?)
}
