//! The one pole coefficient printed alongside the method, compared with the
//! condition assembled here.

use super::conditions::conditions_from_transform;
use super::{build_ansatz, DeriveError};
use crate::catalog::{self, apply_edits, errata, Detection, GarnierName, Target};
use crate::field::{LinForm, UnknownSymbol};
use crate::parse::{parse_element, parse_ratfunc, ParseError};
use crate::weyl::{VarSet, WeylMonomial};

pub const SYSTEM: GarnierName = GarnierName::G11111;
pub const TRANSFORM: usize = 1;
pub const MONOMIAL: &str = "x1^-1*x2^2*y2";
/// As printed, in the ASCII syntax of the catalog.
pub const PRINTED: &str = "k_{0,2,1,0} - k_{1,1,1,0} + (h - a1)*k_{1,2,1,1} - 2*(h - a1)*k_{2,1,2,0}";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CalibrationStatus {
    Match,
    /// Differs, and the registry entry with this id corrects the printed
    /// form to exactly the computed one.
    Documented(String),
    Divergent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration {
    pub monomial: WeylMonomial,
    pub printed: LinForm,
    pub computed: LinForm,
    pub status: CalibrationStatus,
}

/// Parses `c1*k_{a,b,c,d} + c2*k_{...} + ...` with every coefficient written
/// before its unknown.
pub fn parse_linform(src: &str, tag: u8) -> Result<LinForm, ParseError> {
    let mut out = LinForm::zero();
    let mut rest = src;
    while let Some(start) = rest.find("k_{") {
        let coeff = rest[..start].trim();
        let end = rest[start..].find('}').ok_or(ParseError::UnexpectedEnd)? + start;
        let index: Vec<u8> = rest[start + 3..end]
            .split(',')
            .map(|d| d.trim().parse::<u8>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad(src, rest, start, end))?;
        let index: [u8; 4] = index.try_into().map_err(|_| bad(src, rest, start, end))?;
        let coeff = coeff.strip_suffix('*').unwrap_or(coeff).trim();
        let c = match coeff {
            "" | "+" => parse_ratfunc("1")?,
            "-" => parse_ratfunc("-1")?,
            c => parse_ratfunc(c)?,
        };
        out.add_term(UnknownSymbol::new(tag, index), &c);
        rest = &rest[end + 1..];
    }
    if !rest.trim().is_empty() {
        return Err(ParseError::UnexpectedToken {
            pos: src.len() - rest.len(),
            found: rest.trim().to_string(),
        });
    }
    Ok(out)
}

fn bad(src: &str, rest: &str, start: usize, end: usize) -> ParseError {
    ParseError::UnexpectedToken {
        pos: src.len() - rest.len() + start,
        found: rest[start..=end].to_string(),
    }
}

fn monomial() -> WeylMonomial {
    let e = parse_element(MONOMIAL, VarSet::New).expect("valid monomial");
    *e.as_monomial().expect("single term").0
}

/// Assembles the pole conditions of the degree-5 ansatz under the corrected
/// forward map and compares the one at the printed monomial.
pub fn calibrate() -> Result<Calibration, DeriveError> {
    let r = catalog::transformations(SYSTEM)
        .iter()
        .find(|r| r.index == TRANSFORM)
        .expect("catalog has r1");
    let ansatz = build_ansatz(5, 1);
    let m = monomial();
    let computed = conditions_from_transform(&ansatz.element, r)?
        .into_iter()
        .find(|c| c.provenance.monomial == m)
        .map(|c| c.lhs)
        .unwrap_or_default();
    let printed = parse_linform(PRINTED, 1).expect("printed form parses");
    let status = if printed == computed {
        CalibrationStatus::Match
    } else {
        documented(&computed).map_or(CalibrationStatus::Divergent, CalibrationStatus::Documented)
    };
    Ok(Calibration {
        monomial: m,
        printed,
        computed,
        status,
    })
}

fn documented(computed: &LinForm) -> Option<String> {
    let target = Target::PoleCoefficient {
        transform: TRANSFORM,
        monomial: MONOMIAL,
    };
    errata::entries_for(SYSTEM)
        .filter(|e| e.touches(target) && e.detects(Detection::Calibration))
        .find(|e| {
            e.adopted()
                .and_then(|r| apply_edits(PRINTED, target, e.id, r).ok())
                .and_then(|text| parse_linform(&text, 1).ok())
                .is_some_and(|l| &l == computed)
        })
        .map(|e| e.id.to_string())
}
