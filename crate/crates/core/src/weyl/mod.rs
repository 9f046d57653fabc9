//! Localized Weyl algebra in two canonical pairs, `[q_i, p_j] = delta_ij h`.
//!
//! Elements are kept in normal order (within each pair `q` left of `p`; the
//! pairs commute). Negative exponents of single generators are allowed;
//! products that would need `p^-b q^-c` reordered are rejected.

mod element;
pub mod json;
mod reorder;
mod scalar;
mod subst;

use thiserror::Error;

pub use element::{mono, Slot, VarSet, WeylElement, WeylMonomial};
pub use reorder::{reorder, ReorderTerm};
pub use scalar::Scalar;
pub use subst::{substitute, SubstMap, Substituter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("cannot normal-order p^{p_exp} q^{q_exp}: both exponents negative")]
    NonTerminatingReorder { p_exp: i32, q_exp: i32 },
    #[error("product of two unknown-bearing coefficients")]
    NonlinearUnknowns,
    #[error("element is not an invertible monomial")]
    NonInvertible,
    #[error("image of {0:?} is not invertible")]
    NonInvertibleImage(Slot),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{LinForm, ParamSymbol, RatFunc, UnknownSymbol};
    use crate::parse::parse_element;

    fn h() -> WeylElement {
        WeylElement::scalar(RatFunc::var(ParamSymbol::H))
    }

    fn old(s: &str) -> WeylElement {
        parse_element(s, VarSet::Old).unwrap()
    }

    fn new(s: &str) -> WeylElement {
        parse_element(s, VarSet::New).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(mono(1, 1, 0, 0, 1).mul(&mono(0, 1, 0, 0, 1)).unwrap(), mono(1, 2, 0, 0, 1));
        // p1 q1^2 = q1^2 p1 - 2h q1
        let got = mono(0, 1, 0, 0, 1).mul(&mono(2, 0, 0, 0, 1)).unwrap();
        assert_eq!(got, mono(2, 1, 0, 0, 1).sub(&h().mul(&mono(1, 0, 0, 0, 2)).unwrap()));
        assert_eq!(mono(1, 0, 0, 0, 1).mul(&mono(0, 0, 1, 1, 1)).unwrap(), mono(1, 0, 1, 1, 1));
    }

    #[test]
    fn commutators() {
        let q1 = WeylElement::generator(Slot::Q1);
        let p1 = WeylElement::generator(Slot::P1);
        let p2 = WeylElement::generator(Slot::P2);
        assert_eq!(q1.commutator(&p1).unwrap(), h());
        assert!(q1.commutator(&p2).unwrap().is_zero());
        // [p^-1, q] = h p^-2
        let pinv = mono(0, -1, 0, 0, 1);
        assert_eq!(pinv.commutator(&q1).unwrap(), h().mul(&mono(0, -2, 0, 0, 1)).unwrap());
        // [p, q^-1] = h q^-2
        let qinv = mono(-1, 0, 0, 0, 1);
        assert_eq!(p1.commutator(&qinv).unwrap(), h().mul(&mono(-2, 0, 0, 0, 1)).unwrap());
    }

    #[test]
    fn powers() {
        let s = old("q1 + p1");
        assert_eq!(s.power(2).unwrap(), old("q1^2 + 2*q1*p1 + p1^2 - h"));
        let inv = new("x1*y2").power(-1).unwrap();
        assert_eq!(inv, mono(-1, 0, 0, -1, 1));
        assert!(new("x1*y2").mul(&inv).unwrap() == WeylElement::one());
        assert_eq!(old("q1*p1").power(-1), Err(WeylError::NonInvertible));
        assert_eq!(old("q1").power(0).unwrap(), WeylElement::one());
    }

    #[test]
    fn linear_unknowns_cannot_multiply() {
        let k = WeylElement::scalar(LinForm::unknown(UnknownSymbol::new(1, [0; 4])));
        assert_eq!(k.mul(&k), Err(WeylError::NonlinearUnknowns));
        assert!(k.mul(&old("q1")).is_ok());
    }

    #[test]
    fn pole_splitting() {
        let e = old("q1^-2*q2 + q1*p1");
        let (polar, holo) = e.pole_split();
        assert_eq!(polar, old("q1^-2*q2"));
        assert_eq!(holo, old("q1*p1"));
        let (polar, _) = old("q1^3*p2 + h").pole_split();
        assert!(polar.is_zero());
        let (_, holo) = new("x1^-1*x2^2*y2").pole_split();
        assert!(holo.is_zero());
    }

    #[test]
    fn time_derivatives() {
        assert_eq!(old("t1^2*q1*p1").t_derivative(ParamSymbol::T1), old("2*t1*q1*p1"));
        assert!(old("q2*p2").t_derivative(ParamSymbol::T1).is_zero());
        assert_eq!(
            old("(t1/t2)*p2").t_derivative(ParamSymbol::T2),
            old("-(t1/t2^2)*p2")
        );
    }

    fn r1_forward() -> SubstMap {
        SubstMap::new(
            VarSet::Old,
            [
                new("1/x1"),
                new("-x1^2*y1 - x1*x2*y2 - a1*x1"),
                new("x2/x1"),
                new("x1*y2"),
            ],
        )
    }

    #[test]
    fn substitution_examples() {
        let r1 = r1_forward();
        assert_eq!(substitute(&old("q2*p2"), &r1).unwrap(), new("x2*y2"));
        assert_eq!(
            substitute(&old("q1^2*p1"), &r1).unwrap(),
            new("-y1 - x1^-1*x2*y2 - a1*x1^-1")
        );
        let r3 = SubstMap::new(
            VarSet::Old,
            [new("-x1*y1^2 + a3*y1"), new("1/y1"), new("x2"), new("y2")],
        );
        assert_eq!(
            substitute(&old("q1^-1"), &r3),
            Err(WeylError::NonInvertibleImage(Slot::Q1))
        );
    }

    #[test]
    fn json_roundtrip() {
        let e = old("(t1/(t1-t2))*q1^2*p1 - h*p2^-1 + 3/2");
        let v = json::element_to_json(&e);
        assert_eq!(json::element_from_json(&v).unwrap(), e);
        let text = serde_json::to_string(&v).unwrap();
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&json::element_to_json(&json::element_from_json(&back).unwrap())).unwrap(), text);
    }
}
