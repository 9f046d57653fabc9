use std::collections::HashMap;

use super::element::{Slot, VarSet, WeylElement, WeylMonomial};
use super::WeylError;

/// Images of the four generators `q1, p1, q2, p2` (or `x1, y1, x2, y2`)
/// as Laurent elements in the target variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstMap {
    pub source: VarSet,
    pub images: [WeylElement; 4],
}

impl SubstMap {
    pub fn new(source: VarSet, images: [WeylElement; 4]) -> SubstMap {
        SubstMap { source, images }
    }

    pub fn identity(source: VarSet) -> SubstMap {
        SubstMap {
            source,
            images: Slot::ALL.map(WeylElement::generator),
        }
    }

    pub fn target(&self) -> VarSet {
        self.source.other()
    }

    pub fn image(&self, slot: Slot) -> &WeylElement {
        &self.images[slot.index()]
    }
}

/// Applies a substitution map, memoizing powers of the images so that many
/// elements can be pushed through the same map cheaply.
pub struct Substituter<'a> {
    map: &'a SubstMap,
    powers: [HashMap<i32, WeylElement>; 4],
    pairs: [HashMap<(i32, i32), WeylElement>; 2],
}

impl<'a> Substituter<'a> {
    pub fn new(map: &'a SubstMap) -> Substituter<'a> {
        Substituter {
            map,
            powers: Default::default(),
            pairs: Default::default(),
        }
    }

    fn power(&mut self, slot: usize, e: i32) -> Result<WeylElement, WeylError> {
        if let Some(p) = self.powers[slot].get(&e) {
            return Ok(p.clone());
        }
        let img = &self.map.images[slot];
        let value = if e == 0 {
            WeylElement::one()
        } else if e > 0 {
            self.power(slot, e - 1)?.mul(img)?
        } else {
            let inv = img.inverse().map_err(|err| match err {
                WeylError::NonInvertible => WeylError::NonInvertibleImage(Slot::ALL[slot]),
                other => other,
            })?;
            self.power(slot, e + 1)?.mul(&inv)?
        };
        self.powers[slot].insert(e, value.clone());
        Ok(value)
    }

    fn pair(&mut self, index: usize, a: i32, b: i32) -> Result<WeylElement, WeylError> {
        if let Some(p) = self.pairs[index].get(&(a, b)) {
            return Ok(p.clone());
        }
        let qa = self.power(2 * index, a)?;
        let pb = self.power(2 * index + 1, b)?;
        let value = qa.mul(&pb)?;
        self.pairs[index].insert((a, b), value.clone());
        Ok(value)
    }

    /// Image of a single normal-ordered monomial.
    pub fn monomial(&mut self, m: &WeylMonomial) -> Result<WeylElement, WeylError> {
        let [a1, b1, a2, b2] = m.0;
        let first = self.pair(0, a1, b1)?;
        if a2 == 0 && b2 == 0 {
            return Ok(first);
        }
        let second = self.pair(1, a2, b2)?;
        if a1 == 0 && b1 == 0 {
            return Ok(second);
        }
        first.mul(&second)
    }

    pub fn apply(&mut self, a: &WeylElement) -> Result<WeylElement, WeylError> {
        let mut out = WeylElement::zero();
        for (m, s) in a.terms() {
            let img = self.monomial(m)?;
            for (mm, ss) in img.terms() {
                out.add_term(*mm, &ss.mul(s)?);
            }
        }
        Ok(out)
    }
}

/// Multiplicative extension of `map` applied to `a`; linear over scalars.
pub fn substitute(a: &WeylElement, map: &SubstMap) -> Result<WeylElement, WeylError> {
    Substituter::new(map).apply(a)
}
