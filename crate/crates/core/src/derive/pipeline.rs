use rayon::prelude::*;
use serde_json::{json, Map, Value};

use super::ansatz::{build_ansatz, monomial_for, unknown_for};
use super::conditions::{flow_conditions, pole_conditions, HoloCondition};
use super::solve::Echelon;
use super::{DeriveError, FlowConvention};
use crate::catalog::{self, corrected_map_with, Direction, ErratumEntry, GarnierName, Reading, Transformation};
use crate::field::{LinForm, ParamSymbol, RatFunc, Solution, UnknownSymbol};
use crate::weyl::json::element_to_json;
use crate::weyl::{SubstMap, VarSet, WeylElement, WeylMonomial};

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub degree: u32,
    pub convention: FlowConvention,
    /// Order in which the time-independent transformations are processed;
    /// indices into the type's transformation list (`r<i>` has index i).
    pub stage1_order: Option<Vec<usize>>,
    /// Non-adopted readings of registered errata to use instead.
    pub overrides: Vec<(&'static ErratumEntry, &'static Reading)>,
    /// Set the constant term to zero. No holomorphy condition sees it, so
    /// it is otherwise an extra free parameter.
    pub fix_constant: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            degree: 5,
            convention: FlowConvention::default(),
            stage1_order: None,
            overrides: Vec::new(),
            fix_constant: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// The inhomogeneous flow conditions fix the scale.
    FlowDetermined,
    /// A pure scale freedom survived and was fixed by one reference
    /// coefficient.
    ReferencePinned(UnknownSymbol),
}

impl Normalization {
    pub fn as_str(&self) -> &'static str {
        match self {
            Normalization::FlowDetermined => "flow-determined",
            Normalization::ReferencePinned(_) => "reference-pinned",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageReport {
    pub name: String,
    pub transformations: Vec<String>,
    pub conditions: usize,
    pub rank: usize,
    pub nullity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationReport {
    pub system: GarnierName,
    pub flow: usize,
    pub degree: u32,
    pub flow_convention: FlowConvention,
    pub stages: Vec<StageReport>,
    pub solution: Solution,
    /// Nullspace basis of the final system; empty when the Hamiltonian is
    /// determined.
    pub residual_free: Vec<Solution>,
    pub normalization: Normalization,
    pub hamiltonian: WeylElement,
    /// Non-adopted errata readings used, as `(id, label)`.
    pub readings: Vec<(String, String)>,
    pub constant_fixed: bool,
}

impl DerivationReport {
    pub fn nullity(&self) -> usize {
        self.residual_free.len()
    }

    pub fn is_unique(&self) -> bool {
        self.residual_free.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let sol = |s: &Solution| -> Value {
            let m: Map<String, Value> = s.iter().map(|(k, v)| (k.to_string(), Value::String(v.to_text()))).collect();
            Value::Object(m)
        };
        json!({
            "system": self.system.as_str(),
            "flow": self.flow,
            "degree": self.degree,
            "flow_convention": self.flow_convention.as_str(),
            "constant_fixed": self.constant_fixed,
            "stages": self.stages.iter().map(|s| json!({
                "name": s.name,
                "transformations": s.transformations,
                "conditions": s.conditions,
                "rank": s.rank,
                "nullity": s.nullity,
            })).collect::<Vec<_>>(),
            "normalization": self.normalization.as_str(),
            "pinned": match self.normalization {
                Normalization::ReferencePinned(k) => Value::String(k.to_string()),
                Normalization::FlowDetermined => Value::Null,
            },
            "readings": self.readings.iter().map(|(id, l)| json!({"id": id, "reading": l})).collect::<Vec<_>>(),
            "solution": sol(&self.solution),
            "residual_free": self.residual_free.iter().map(sol).collect::<Vec<_>>(),
            "hamiltonian": element_to_json(&self.hamiltonian),
            "hamiltonian_text": self.hamiltonian.to_text(VarSet::Old),
        })
    }
}

fn time_of(flow: usize) -> Result<ParamSymbol, DeriveError> {
    match flow {
        1 => Ok(ParamSymbol::T1),
        2 => Ok(ParamSymbol::T2),
        n => Err(DeriveError::BadFlow(n)),
    }
}

/// Corrected forward and backward maps, honoring overrides that touch `r`.
fn maps_for(r: &Transformation, cfg: &PipelineConfig) -> Result<(SubstMap, SubstMap), DeriveError> {
    let own: Vec<_> = cfg.overrides.iter().filter(|(e, _)| e.system == r.system && e.touches_transform(r.index)).copied().collect();
    if own.is_empty() {
        return Ok((r.corrected_forward.clone(), r.corrected_backward.clone()));
    }
    Ok((
        corrected_map_with(r.system, r.index, Direction::Forward, &own)?,
        corrected_map_with(r.system, r.index, Direction::Backward, &own)?,
    ))
}

fn push_all(ech: &mut Echelon, conds: &[HoloCondition], stage: &str) -> Result<(), DeriveError> {
    for c in conds {
        ech.push(&c.lhs).map_err(|residue| DeriveError::Inconsistent {
            stage: stage.to_string(),
            transformation: c.provenance.transformation.clone(),
            monomial: c.provenance.monomial.render(VarSet::New),
            residue: residue.to_text(),
        })?;
    }
    Ok(())
}

/// Highest-degree term of the corrected reference, used to fix a pure scale
/// freedom.
fn lead_term(reference: &WeylElement) -> Option<(WeylMonomial, RatFunc)> {
    reference
        .terms()
        .iter()
        .filter(|(m, _)| !m.is_polar())
        .max_by_key(|(m, _)| (m.total_degree(), m.exps()))
        .and_then(|(m, s)| s.as_rat().map(|r| (*m, r.clone())))
}

/// Builds the ansatz, solves the pole conditions of the time-independent
/// transformations, then adds the flow conditions of the time-dependent ones.
pub fn run_pipeline(system: GarnierName, flow: usize, cfg: &PipelineConfig) -> Result<DerivationReport, DeriveError> {
    let tv = time_of(flow)?;
    let ansatz = build_ansatz(cfg.degree, flow as u8);
    let unknowns = ansatz.unknowns();
    let all = catalog::transformations(system);

    let mut stage1: Vec<&Transformation> = all.iter().filter(|r| r.t_dependent.is_empty()).collect();
    if let Some(order) = &cfg.stage1_order {
        stage1 = order
            .iter()
            .filter_map(|i| all.iter().find(|r| r.index == *i && r.t_dependent.is_empty()))
            .collect();
    }
    let stage2: Vec<&Transformation> = all.iter().filter(|r| !r.t_dependent.is_empty()).collect();

    let h = &ansatz.element;
    let conds1: Vec<Vec<HoloCondition>> = stage1
        .par_iter()
        .map(|r| {
            let (fwd, _) = maps_for(r, cfg)?;
            Ok(pole_conditions(h, &fwd, &r.id())?)
        })
        .collect::<Result<_, DeriveError>>()?;
    let conds2: Vec<Vec<HoloCondition>> = stage2
        .par_iter()
        .map(|r| {
            let (fwd, bwd) = maps_for(r, cfg)?;
            Ok(flow_conditions(h, &fwd, &bwd, &r.id(), tv, cfg.convention)?)
        })
        .collect::<Result<_, DeriveError>>()?;

    let mut ech = Echelon::new();
    if cfg.fix_constant {
        let k0 = unknown_for(flow as u8, &WeylMonomial::one());
        push_all(&mut ech, &[pinned_condition(LinForm::unknown(k0), k0, "constant term")], "constant term")?;
    }
    let mut stages = Vec::new();
    for (name, rs, conds) in [("pole conditions", &stage1, &conds1), ("flow conditions", &stage2, &conds2)] {
        let mut count = 0;
        for c in conds.iter() {
            push_all(&mut ech, c, name)?;
            count += c.len();
        }
        stages.push(StageReport {
            name: name.to_string(),
            transformations: rs.iter().map(|r| r.id()).collect(),
            conditions: count,
            rank: ech.rank(),
            nullity: unknowns.len() - ech.rank(),
        });
    }

    let (mut solution, mut nullspace) = ech.solution(&unknowns);
    let mut normalization = Normalization::FlowDetermined;
    if solution.values().all(RatFunc::is_zero) && !nullspace.is_empty() {
        let reference = &catalog::reference_hamiltonian(system, flow).corrected;
        if let Some((m, c)) = lead_term(reference) {
            let k = unknown_for(flow as u8, &m);
            if unknowns.contains(&k) {
                let pin = LinForm::unknown(k).sub(&LinForm::constant(c));
                push_all(&mut ech, std::slice::from_ref(&pinned_condition(pin, k, "reference coefficient")), "normalization")?;
                normalization = Normalization::ReferencePinned(k);
                (solution, nullspace) = ech.solution(&unknowns);
            }
        }
    }

    let mut hamiltonian = WeylElement::zero();
    for (k, v) in &solution {
        if !v.is_zero() {
            hamiltonian.add_term(monomial_for(k), &v.clone().into());
        }
    }
    Ok(DerivationReport {
        system,
        flow,
        degree: cfg.degree,
        flow_convention: cfg.convention,
        stages,
        solution,
        residual_free: nullspace,
        normalization,
        hamiltonian,
        readings: cfg.overrides.iter().map(|(e, r)| (e.id.to_string(), r.label.to_string())).collect(),
        constant_fixed: cfg.fix_constant,
    })
}

fn pinned_condition(lhs: LinForm, k: UnknownSymbol, what: &str) -> HoloCondition {
    HoloCondition {
        lhs,
        provenance: super::conditions::Provenance {
            transformation: format!("{what} {k}"),
            monomial: monomial_for(&k),
            flow: None,
        },
    }
}
