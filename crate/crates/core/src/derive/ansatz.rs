use crate::field::{LinForm, UnknownSymbol};
use crate::weyl::{Scalar, WeylElement, WeylMonomial};

/// General element of total degree at most `degree` with one unknown per
/// normal-ordered monomial `q1^i1 p1^i2 q2^i3 p2^i4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ansatz {
    pub degree: u32,
    pub tag: u8,
    pub element: WeylElement,
}

impl Ansatz {
    pub fn unknowns(&self) -> Vec<UnknownSymbol> {
        self.terms().map(|(k, _)| k).collect()
    }

    /// `(unknown, monomial)` pairs in unknown order.
    pub fn terms(&self) -> impl Iterator<Item = (UnknownSymbol, WeylMonomial)> + '_ {
        let mut out: Vec<_> = self.element.terms().keys().map(|m| (unknown_for(self.tag, m), *m)).collect();
        out.sort();
        out.into_iter()
    }

    pub fn len(&self) -> usize {
        self.element.len()
    }

    pub fn is_empty(&self) -> bool {
        self.element.is_zero()
    }
}

pub fn unknown_for(tag: u8, m: &WeylMonomial) -> UnknownSymbol {
    let e = m.exps();
    UnknownSymbol::new(tag, [e[0] as u8, e[1] as u8, e[2] as u8, e[3] as u8])
}

pub fn monomial_for(k: &UnknownSymbol) -> WeylMonomial {
    let [a, b, c, d] = k.index;
    WeylMonomial::new(a as i32, b as i32, c as i32, d as i32)
}

pub fn build_ansatz(degree: u32, tag: u8) -> Ansatz {
    let d = degree as i32;
    let mut element = WeylElement::zero();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                for e in 0..=d - a - b - c {
                    let m = WeylMonomial::new(a, b, c, e);
                    element.add_term(m, &Scalar::from_linform(LinForm::unknown(unknown_for(tag, &m))));
                }
            }
        }
    }
    Ansatz { degree, tag, element }
}
