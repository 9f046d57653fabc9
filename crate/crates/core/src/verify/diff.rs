use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::catalog::{errata, item_with_readings, ReferenceHamiltonian, Target};
use crate::field::RatFunc;
use crate::weyl::{Scalar, VarSet, WeylElement, WeylMonomial};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HamiltonianDiff {
    /// Monomials present only in the reference, with its coefficient.
    pub missing: Vec<(WeylMonomial, Scalar)>,
    /// Monomials present only in the candidate.
    pub extra: Vec<(WeylMonomial, Scalar)>,
    /// `(monomial, candidate coefficient, reference coefficient)`.
    pub changed: Vec<(WeylMonomial, Scalar, Scalar)>,
    /// Reference divided by candidate, when that is one global scalar other
    /// than 1; the term lists are then left empty.
    pub scalar_ratio: Option<RatFunc>,
}

impl HamiltonianDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.changed.is_empty() && self.scalar_ratio.is_none()
    }

    pub fn monomials(&self) -> BTreeSet<WeylMonomial> {
        self.missing
            .iter()
            .map(|t| t.0)
            .chain(self.extra.iter().map(|t| t.0))
            .chain(self.changed.iter().map(|t| t.0))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let term = |m: &WeylMonomial, s: &Scalar| json!({"monomial": m.render(VarSet::Old), "coeff": s.to_string()});
        json!({
            "missing": self.missing.iter().map(|(m, s)| term(m, s)).collect::<Vec<_>>(),
            "extra": self.extra.iter().map(|(m, s)| term(m, s)).collect::<Vec<_>>(),
            "changed": self.changed.iter().map(|(m, a, b)| json!({
                "monomial": m.render(VarSet::Old),
                "candidate": a.to_string(),
                "reference": b.to_string(),
            })).collect::<Vec<_>>(),
            "scalar_ratio": self.scalar_ratio.as_ref().map(RatFunc::to_text),
        })
    }
}

/// Monomial-by-monomial comparison of two k-free elements.
pub fn compare_elements(candidate: &WeylElement, reference: &WeylElement) -> HamiltonianDiff {
    let mut d = HamiltonianDiff::default();
    for (m, s) in reference.terms() {
        match candidate.terms().get(m) {
            None => d.missing.push((*m, s.clone())),
            Some(c) if c != s => d.changed.push((*m, c.clone(), s.clone())),
            _ => {}
        }
    }
    for (m, s) in candidate.terms() {
        if !reference.terms().contains_key(m) {
            d.extra.push((*m, s.clone()));
        }
    }
    if d.missing.is_empty() && d.extra.is_empty() && !d.changed.is_empty() {
        let ratios: Option<Vec<RatFunc>> = d
            .changed
            .iter()
            .map(|(_, a, b)| b.as_rat()?.div(a.as_rat()?).ok())
            .collect();
        if let Some(rs) = ratios {
            if rs.windows(2).all(|w| w[0] == w[1]) && candidate.len() == d.changed.len() {
                d.scalar_ratio = Some(rs[0].clone());
                d.changed.clear();
            }
        }
    }
    d
}

/// Diff of `h` against the printed reference.
pub fn compare_reference(h: &WeylElement, reference: &ReferenceHamiltonian) -> HamiltonianDiff {
    compare_elements(h, &reference.element)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiffClass {
    Empty,
    /// Every differing monomial lies in the footprint of these registry
    /// entries, and the candidate equals the corrected reference.
    Explained(Vec<String>),
    Unexplained,
}

impl DiffClass {
    pub fn is_ok(&self) -> bool {
        !matches!(self, DiffClass::Unexplained)
    }
}

/// Monomials on which the readings of an erratum (and the printed text, when
/// it parses) disagree.
fn footprint(entry: &errata::ErratumEntry, target: Target) -> BTreeSet<WeylMonomial> {
    let mut variants: Vec<WeylElement> = Vec::new();
    if !entry.forced {
        if let Ok(e) = item_with_readings(entry.system, target, &[]) {
            variants.push(e);
        }
    }
    for r in entry.readings {
        if let Ok(e) = item_with_readings(entry.system, target, &[(entry, r)]) {
            variants.push(e);
        }
    }
    let mut out = BTreeSet::new();
    for a in &variants {
        for b in &variants {
            out.extend(compare_elements(a, b).monomials());
        }
    }
    out
}

/// Classifies the diff between a candidate and the printed reference against
/// the errata registry.
pub fn classify_diff(h: &WeylElement, reference: &ReferenceHamiltonian) -> DiffClass {
    let d = compare_reference(h, reference);
    if d.is_empty() {
        return DiffClass::Empty;
    }
    if !compare_elements(h, &reference.corrected).is_empty() {
        return DiffClass::Unexplained;
    }
    let target = Target::Hamiltonian { flow: reference.flow };
    let entries: Vec<_> = errata::entries_for(reference.system)
        .filter(|e| e.touches(target) && e.detects(errata::Detection::Reference))
        .collect();
    let mut covered = BTreeSet::new();
    let mut ids = Vec::new();
    for e in &entries {
        covered.extend(footprint(e, target));
        ids.push(e.id.to_string());
    }
    // a global rescaling touches every monomial; only a registered
    // prefactor misprint can explain it
    let all = if d.scalar_ratio.is_some() {
        reference.element.terms().keys().copied().collect()
    } else {
        d.monomials()
    };
    if !ids.is_empty() && all.is_subset(&covered) {
        DiffClass::Explained(ids)
    } else {
        DiffClass::Unexplained
    }
}
