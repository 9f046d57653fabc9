//! The seven two-variable Garnier types: transformation families, printed
//! reference Hamiltonians and the misprint registry.
//!
//! Source text lives in `data/*.txt` and is parsed once on first access.
//! Every transformation and Hamiltonian is kept in two forms: as printed
//! (only unparseable fragments replaced, see [`errata`]) and corrected (all
//! adopted readings of the registry applied).

pub mod errata;
mod json;
mod source;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::ParamSymbol;
use crate::parse::{parse_element, ParseError};
use crate::weyl::{SubstMap, VarSet, WeylElement};

pub use errata::{Detection, Edit, ErratumEntry, Reading, Target};
pub use json::{catalog_from_json, catalog_to_json};
use source::{SourceSystem, IMAGE_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
    #[error("catalog format error at line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("{item}: {source}")]
    Parse { item: String, source: ParseError },
    #[error("erratum {id}: printed fragment `{fragment}` not found exactly once")]
    Errata { id: String, fragment: String },
    #[error("malformed catalog JSON: {0}")]
    Json(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GarnierName {
    G11111,
    G1112,
    G113,
    G122,
    G14,
    G23,
    G5,
}

impl GarnierName {
    pub const ALL: [GarnierName; 7] = [
        GarnierName::G11111,
        GarnierName::G1112,
        GarnierName::G113,
        GarnierName::G122,
        GarnierName::G14,
        GarnierName::G23,
        GarnierName::G5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GarnierName::G11111 => "G11111",
            GarnierName::G1112 => "G1112",
            GarnierName::G113 => "G113",
            GarnierName::G122 => "G122",
            GarnierName::G14 => "G14",
            GarnierName::G23 => "G23",
            GarnierName::G5 => "G5",
        }
    }

    pub fn index(self) -> usize {
        GarnierName::ALL.iter().position(|n| *n == self).expect("listed")
    }

    fn source(self) -> &'static str {
        match self {
            GarnierName::G11111 => include_str!("data/g11111.txt"),
            GarnierName::G1112 => include_str!("data/g1112.txt"),
            GarnierName::G113 => include_str!("data/g113.txt"),
            GarnierName::G122 => include_str!("data/g122.txt"),
            GarnierName::G14 => include_str!("data/g14.txt"),
            GarnierName::G23 => include_str!("data/g23.txt"),
            GarnierName::G5 => include_str!("data/g5.txt"),
        }
    }
}

impl fmt::Display for GarnierName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GarnierName {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GarnierName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| CatalogError::UnknownSystem(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Old variables in terms of new ones.
    Forward,
    /// New variables in terms of old ones.
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GarnierType {
    pub name: GarnierName,
    pub label: String,
    pub parameters: Vec<ParamSymbol>,
    pub transformation_count: usize,
    /// Parameter and chart correspondences with the classical literature.
    pub correspondence: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transformation {
    pub system: GarnierName,
    pub index: usize,
    pub forward: SubstMap,
    pub backward: SubstMap,
    pub corrected_forward: SubstMap,
    pub corrected_backward: SubstMap,
    pub t_dependent: BTreeSet<ParamSymbol>,
    /// Source text of the eight images, forward then backward.
    pub source: [String; 8],
}

impl Transformation {
    pub fn id(&self) -> String {
        format!("{} r{}", self.system, self.index)
    }

    pub fn map(&self, direction: Direction, corrected: bool) -> &SubstMap {
        match (direction, corrected) {
            (Direction::Forward, false) => &self.forward,
            (Direction::Backward, false) => &self.backward,
            (Direction::Forward, true) => &self.corrected_forward,
            (Direction::Backward, true) => &self.corrected_backward,
        }
    }

    pub fn depends_on(&self, t: ParamSymbol) -> bool {
        self.t_dependent.contains(&t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceHamiltonian {
    pub system: GarnierName,
    pub flow: usize,
    pub element: WeylElement,
    pub corrected: WeylElement,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemEntry {
    pub ty: GarnierType,
    pub transformations: Vec<Transformation>,
    pub references: [ReferenceHamiltonian; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub systems: Vec<SystemEntry>,
}

impl Catalog {
    /// Parses all embedded sources and applies the errata registry.
    pub fn load() -> Result<Catalog, CatalogError> {
        let systems = GarnierName::ALL
            .iter()
            .map(|n| build_system(*n, n.source()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Catalog { systems })
    }

    pub fn system(&self, name: GarnierName) -> &SystemEntry {
        &self.systems[name.index()]
    }
}

pub(crate) fn apply_edits(text: &str, target: Target, id: &str, reading: &Reading) -> Result<String, CatalogError> {
    let mut out = text.to_string();
    for Edit { from, to, .. } in reading.edits.iter().filter(|e| e.target == target) {
        if out.matches(from).count() != 1 {
            return Err(CatalogError::Errata {
                id: id.to_string(),
                fragment: from.to_string(),
            });
        }
        out = out.replacen(from, to, 1);
    }
    Ok(out)
}

/// Source text with the chosen readings applied: forced entries only for
/// the printed form, every adopted reading for the corrected form.
fn variant(name: GarnierName, target: Target, text: &str, corrected: bool) -> Result<String, CatalogError> {
    let mut out = text.to_string();
    for e in errata::entries_for(name).filter(|e| e.touches(target)) {
        if !(e.forced || corrected) {
            continue;
        }
        if let Some(r) = e.adopted() {
            out = apply_edits(&out, target, e.id, r)?;
        }
    }
    Ok(out)
}

/// Parses one catalog item with explicit readings for some errata; forced
/// entries not listed keep their adopted reading, other entries are left as
/// printed.
pub fn item_with_readings(
    system: GarnierName,
    target: Target,
    chosen: &[(&ErratumEntry, &Reading)],
) -> Result<WeylElement, CatalogError> {
    let sys = source::read_system(system.source())?;
    let (raw, vars) = match target {
        Target::Image { transform, var } => {
            let k = IMAGE_NAMES
                .iter()
                .position(|v| *v == var)
                .ok_or_else(|| CatalogError::UnknownSystem(var.to_string()))?;
            let t = sys
                .transforms
                .get(transform.wrapping_sub(1))
                .ok_or_else(|| CatalogError::UnknownSystem(format!("{system} r{transform}")))?;
            (t.images[k].clone(), if k < 4 { VarSet::New } else { VarSet::Old })
        }
        Target::Hamiltonian { flow } => (sys.hamiltonians[flow - 1].clone(), VarSet::Old),
        Target::PoleCoefficient { .. } => {
            return Err(CatalogError::UnknownSystem(format!("{system} {target:?} is not a catalog item")))
        }
    };
    let mut text = raw;
    for e in errata::entries_for(system).filter(|e| e.touches(target)) {
        let reading = match chosen.iter().find(|(c, _)| c.id == e.id) {
            Some((_, r)) => Some(*r),
            None if e.forced => e.adopted(),
            None => None,
        };
        if let Some(r) = reading {
            text = apply_edits(&text, target, e.id, r)?;
        }
    }
    parse_item(&text, vars, || format!("{system} {target:?}"))
}

fn parse_item(text: &str, vars: VarSet, item: impl Fn() -> String) -> Result<WeylElement, CatalogError> {
    parse_element(text, vars).map_err(|source| CatalogError::Parse { item: item(), source })
}

fn build_system(name: GarnierName, text: &str) -> Result<SystemEntry, CatalogError> {
    let src: SourceSystem = source::read_system(text)?;
    if src.name != name.as_str() {
        return Err(CatalogError::Format {
            line: 0,
            message: format!("source for {name} declares `{}`", src.name),
        });
    }
    let mut transformations = Vec::new();
    for t in &src.transforms {
        let mut maps: Vec<SubstMap> = Vec::new();
        for corrected in [false, true] {
            let mut images: Vec<WeylElement> = Vec::new();
            for (k, var) in IMAGE_NAMES.iter().enumerate() {
                let target = Target::Image { transform: t.index, var };
                let text = variant(name, target, &t.images[k], corrected)?;
                // forward images are written in the new variables
                let vars = if k < 4 { VarSet::New } else { VarSet::Old };
                images.push(parse_item(&text, vars, || format!("{name} r{} {var}", t.index))?);
            }
            let back: [WeylElement; 4] = images.split_off(4).try_into().expect("four");
            let fwd: [WeylElement; 4] = images.try_into().expect("four");
            maps.push(SubstMap::new(VarSet::Old, fwd));
            maps.push(SubstMap::new(VarSet::New, back));
        }
        let [forward, backward, corrected_forward, corrected_backward]: [SubstMap; 4] =
            maps.try_into().expect("four maps");
        let t_dependent = [&forward, &backward, &corrected_forward, &corrected_backward]
            .iter()
            .flat_map(|m| m.images.iter())
            .flat_map(|e| e.params_used())
            .filter(|p| p.is_time())
            .collect();
        transformations.push(Transformation {
            system: name,
            index: t.index,
            forward,
            backward,
            corrected_forward,
            corrected_backward,
            t_dependent,
            source: t.images.clone(),
        });
    }
    let mut references = Vec::new();
    for flow in [1, 2] {
        let raw = &src.hamiltonians[flow - 1];
        let target = Target::Hamiltonian { flow };
        let item = || format!("{name} H{flow}");
        let element = parse_item(&variant(name, target, raw, false)?, VarSet::Old, item)?;
        let corrected = parse_item(&variant(name, target, raw, true)?, VarSet::Old, item)?;
        references.push(ReferenceHamiltonian {
            system: name,
            flow,
            element,
            corrected,
            source: raw.clone(),
        });
    }
    let references: [ReferenceHamiltonian; 2] = references.try_into().expect("two flows");
    let mut params = BTreeSet::new();
    for t in &transformations {
        for m in [&t.corrected_forward, &t.corrected_backward] {
            for e in &m.images {
                params.extend(e.params_used());
            }
        }
    }
    for r in &references {
        params.extend(r.corrected.params_used());
    }
    let ty = GarnierType {
        name,
        label: src.label,
        parameters: params.into_iter().collect(),
        transformation_count: transformations.len(),
        correspondence: src.correspondence,
    };
    Ok(SystemEntry {
        ty,
        transformations,
        references,
    })
}

static CATALOG: OnceLock<Catalog> = OnceLock::new();

/// The process-wide catalog, parsed on first use.
pub fn catalog() -> &'static Catalog {
    CATALOG.get_or_init(|| Catalog::load().unwrap_or_else(|e| panic!("embedded catalog is malformed: {e}")))
}

pub fn get_type(name: &str) -> Result<&'static GarnierType, CatalogError> {
    let n: GarnierName = name.parse()?;
    Ok(&catalog().system(n).ty)
}

pub fn transformations(name: GarnierName) -> &'static [Transformation] {
    &catalog().system(name).transformations
}

pub fn reference_hamiltonian(name: GarnierName, flow: usize) -> &'static ReferenceHamiltonian {
    assert!(flow == 1 || flow == 2, "flow index must be 1 or 2");
    &catalog().system(name).references[flow - 1]
}

pub fn errata(name: GarnierName) -> Vec<&'static ErratumEntry> {
    errata::entries_for(name).collect()
}

/// Corrected map of `r<index>` with some errata read differently from the
/// adopted reading; the other entries keep theirs.
pub fn corrected_map_with(
    system: GarnierName,
    index: usize,
    direction: Direction,
    overrides: &[(&ErratumEntry, &Reading)],
) -> Result<SubstMap, CatalogError> {
    let chosen: Vec<(&ErratumEntry, &Reading)> = errata::entries_for(system)
        .filter(|e| e.touches_transform(index))
        .filter_map(|e| match overrides.iter().find(|(o, _)| o.id == e.id) {
            Some((_, r)) => Some((e, *r)),
            None => e.adopted().map(|r| (e, r)),
        })
        .collect();
    let (range, source) = match direction {
        Direction::Forward => (0..4, VarSet::Old),
        Direction::Backward => (4..8, VarSet::New),
    };
    let images: Vec<WeylElement> = range
        .map(|k| item_with_readings(system, Target::Image { transform: index, var: IMAGE_NAMES[k] }, &chosen))
        .collect::<Result<_, _>>()?;
    Ok(SubstMap::new(source, images.try_into().expect("four images")))
}
