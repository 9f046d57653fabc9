//! Independent checks: canonical relations and round trips of every
//! transformation, commuting flows of Hamiltonian pairs, comparison with the
//! printed references, and the classical limit.

mod diff;
mod report;
pub mod sample;
mod suite;

use crate::catalog::{errata, Detection, Direction, Transformation};
use crate::field::{Bindings, FieldError, ParamSymbol, RatFunc};
use crate::weyl::{substitute, Slot, VarSet, WeylElement, WeylError};

pub use diff::{classify_diff, compare_reference, DiffClass, HamiltonianDiff};
pub use report::{summary_markdown, summary_text, CheckReport, Verdict, Witness};
pub use suite::{run_suite, CheckKind, SuiteError, SuiteInput};

fn h() -> WeylElement {
    WeylElement::scalar(RatFunc::var(ParamSymbol::H))
}

/// Registry entries that announce a failure of `detection` on `r`, joined
/// with commas.
fn expected_failure(r: &Transformation, detection: Detection) -> Option<String> {
    let ids: Vec<&str> = errata::entries_for(r.system)
        .filter(|e| e.touches_transform(r.index) && e.detects(detection))
        .map(|e| e.id)
        .collect();
    (!ids.is_empty()).then(|| ids.join(","))
}

fn verdict_for(witness: &[Witness], expected: Option<String>) -> Verdict {
    match (witness.is_empty(), expected) {
        (true, None) => Verdict::Pass,
        (true, Some(id)) => Verdict::StaleErratum(id),
        (false, Some(id)) => Verdict::ExpectedFail(id),
        (false, None) => Verdict::Fail,
    }
}

fn subject(r: &Transformation, corrected: bool) -> String {
    if corrected {
        format!("{} (corrected)", r.id())
    } else {
        r.id()
    }
}

/// All ten commutators of the four images of `direction` against the
/// canonical relations. With `corrected` the registry's readings are used
/// and no failure is expected.
pub fn check_canonical(r: &Transformation, direction: Direction, corrected: bool) -> Result<CheckReport, WeylError> {
    let map = r.map(direction, corrected);
    let target = map.target();
    let mut witness = Vec::new();
    for i in 0..4 {
        for j in i..4 {
            let c = map.images[i].commutator(&map.images[j])?;
            // slots are ordered q1, p1, q2, p2: the only nonzero pairs are (q_k, p_k)
            let expect = if i % 2 == 0 && j == i + 1 { h() } else { WeylElement::zero() };
            let dev = c.sub(&expect);
            if !dev.is_zero() {
                let (a, b) = (Slot::ALL[i].name(map.source), Slot::ALL[j].name(map.source));
                witness.push(Witness::new(format!("[{a}, {b}] - expected"), dev, target));
            }
        }
    }
    let expected = if corrected { None } else { expected_failure(r, Detection::Canonical(direction)) };
    Ok(CheckReport {
        check: format!("canonical-{direction}"),
        subject: subject(r, corrected),
        verdict: verdict_for(&witness, expected),
        witness,
    })
}

/// Composes backward after forward and forward after backward; both must be
/// the identity on the generators.
pub fn check_roundtrip(r: &Transformation, corrected: bool) -> Result<CheckReport, WeylError> {
    let fwd = r.map(Direction::Forward, corrected);
    let bwd = r.map(Direction::Backward, corrected);
    let mut witness = Vec::new();
    for (outer, inner) in [(bwd, fwd), (fwd, bwd)] {
        // outer images live in inner.source; pushing them through inner lands
        // back in outer.source
        for (k, img) in outer.images.iter().enumerate() {
            let back = match substitute(img, inner) {
                Ok(b) => b,
                Err(WeylError::NonInvertibleImage(slot)) => {
                    let name = slot.name(inner.source);
                    witness.push(Witness::new(
                        format!("image of {name} is not invertible"),
                        inner.image(slot).clone(),
                        inner.target(),
                    ));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let dev = back.sub(&WeylElement::generator(Slot::ALL[k]));
            if !dev.is_zero() {
                let name = Slot::ALL[k].name(outer.source);
                witness.push(Witness::new(format!("{name} after round trip - {name}"), dev, outer.source));
            }
        }
    }
    let expected = if corrected { None } else { expected_failure(r, Detection::Roundtrip) };
    Ok(CheckReport {
        check: "roundtrip".into(),
        subject: subject(r, corrected),
        verdict: verdict_for(&witness, expected),
        witness,
    })
}

/// `[H1, H2] = 0` exactly.
pub fn check_commutativity(subject: &str, h1: &WeylElement, h2: &WeylElement) -> Result<CheckReport, WeylError> {
    let c = h1.commutator(h2)?;
    let witness = if c.is_zero() {
        vec![]
    } else {
        vec![Witness::new("[H1, H2]", c, VarSet::Old)]
    };
    Ok(CheckReport {
        check: "commute".into(),
        subject: subject.to_string(),
        verdict: verdict_for(&witness, None),
        witness,
    })
}

/// `dH1/dt2 - dH2/dt1 = 0` exactly.
pub fn check_flatness(subject: &str, h1: &WeylElement, h2: &WeylElement) -> CheckReport {
    let d = h1.t_derivative(ParamSymbol::T2).sub(&h2.t_derivative(ParamSymbol::T1));
    let witness = if d.is_zero() {
        vec![]
    } else {
        vec![Witness::new("dH1/dt2 - dH2/dt1", d, VarSet::Old)]
    };
    CheckReport {
        check: "flat".into(),
        subject: subject.to_string(),
        verdict: verdict_for(&witness, None),
        witness,
    }
}

/// Coefficient-wise specialization at `h = 0`.
pub fn classical_limit(e: &WeylElement) -> Result<WeylElement, FieldError> {
    let mut b = Bindings::new();
    b.insert(ParamSymbol::H, RatFunc::zero());
    e.specialize(&b)
}

/// Commutator of the classical limits; it vanishes whenever the quantum
/// commutator does because specialization is a ring map on coefficients
/// and the commutator of two h-free elements only carries powers of h.
pub fn check_classical(subject: &str, h1: &WeylElement, h2: &WeylElement) -> Result<CheckReport, CheckError> {
    let c = h1.commutator(h2)?;
    let limit = classical_limit(&c)?;
    let l1 = classical_limit(h1)?;
    let l2 = classical_limit(h2)?;
    let mut witness = Vec::new();
    if !limit.is_zero() {
        witness.push(Witness::new("[H1, H2] at h = 0", limit, VarSet::Old));
    }
    let lc = classical_limit(&l1.commutator(&l2)?)?;
    if !lc.is_zero() {
        witness.push(Witness::new("[H1|h=0, H2|h=0] at h = 0", lc, VarSet::Old));
    }
    Ok(CheckReport {
        check: "classical".into(),
        subject: subject.to_string(),
        verdict: verdict_for(&witness, None),
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Algebra(#[from] WeylError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
