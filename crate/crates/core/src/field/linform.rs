use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::ratfunc::RatFunc;

/// Ansatz coefficient `k_{i1,i2,i3,i4}` of the Hamiltonian with the given tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct UnknownSymbol {
    pub tag: u8,
    pub index: [u8; 4],
}

impl UnknownSymbol {
    pub fn new(tag: u8, index: [u8; 4]) -> UnknownSymbol {
        UnknownSymbol { tag, index }
    }

    pub fn degree(&self) -> u32 {
        self.index.iter().map(|&i| i as u32).sum()
    }
}

impl fmt::Display for UnknownSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.index;
        write!(f, "k{}_{{{},{},{},{}}}", self.tag, a, b, c, d)
    }
}

/// Assignment of values to unknowns.
pub type Solution = BTreeMap<UnknownSymbol, RatFunc>;

/// `constant + sum coeff_k * k` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LinForm {
    constant: RatFunc,
    coeffs: BTreeMap<UnknownSymbol, RatFunc>,
}

impl LinForm {
    pub fn zero() -> LinForm {
        LinForm::default()
    }

    pub fn constant(c: RatFunc) -> LinForm {
        LinForm {
            constant: c,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unknown(k: UnknownSymbol) -> LinForm {
        Self::term(k, RatFunc::one())
    }

    pub fn term(k: UnknownSymbol, c: RatFunc) -> LinForm {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LinForm {
            constant: RatFunc::zero(),
            coeffs,
        }
    }

    pub fn from_parts(constant: RatFunc, coeffs: BTreeMap<UnknownSymbol, RatFunc>) -> LinForm {
        LinForm {
            constant,
            coeffs: coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn constant_part(&self) -> &RatFunc {
        &self.constant
    }

    pub fn coeffs(&self) -> &BTreeMap<UnknownSymbol, RatFunc> {
        &self.coeffs
    }

    pub fn coeff(&self, k: &UnknownSymbol) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.is_empty()
    }

    /// True when no unknown survives.
    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_constant(&self) -> Option<&RatFunc> {
        if self.coeffs.is_empty() {
            Some(&self.constant)
        } else {
            None
        }
    }

    pub fn unknowns(&self) -> impl Iterator<Item = &UnknownSymbol> {
        self.coeffs.keys()
    }

    pub fn add(&self, other: &LinForm) -> LinForm {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &LinForm) {
        self.constant = self.constant.add(&other.constant);
        for (k, c) in &other.coeffs {
            self.add_term(*k, c);
        }
    }

    /// Adds `c * k`.
    pub fn add_term(&mut self, k: UnknownSymbol, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&k) {
            Some(e) => {
                let s = e.add(c);
                if s.is_zero() {
                    self.coeffs.remove(&k);
                } else {
                    *e = s;
                }
            }
            None => {
                self.coeffs.insert(k, c.clone());
            }
        }
    }

    pub fn neg(&self) -> LinForm {
        LinForm {
            constant: self.constant.neg(),
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &LinForm) -> LinForm {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RatFunc) -> LinForm {
        if c.is_zero() {
            return LinForm::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LinForm {
            constant: self.constant.mul(c),
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v.mul(c))).collect(),
        }
    }

    /// Substitutes the bound unknowns; unbound unknowns survive.
    pub fn apply(&self, solution: &Solution) -> LinForm {
        let mut out = LinForm::constant(self.constant.clone());
        for (k, c) in &self.coeffs {
            match solution.get(k) {
                Some(val) => out.constant = out.constant.add(&c.mul(val)),
                None => out.add_term(*k, c),
            }
        }
        out
    }

    /// Substitutes unknowns by linear forms (back-substitution).
    pub fn apply_forms(&self, forms: &BTreeMap<UnknownSymbol, LinForm>) -> LinForm {
        let mut out = LinForm::constant(self.constant.clone());
        for (k, c) in &self.coeffs {
            match forms.get(k) {
                Some(f) => out.add_assign(&f.scale(c)),
                None => out.add_term(*k, c),
            }
        }
        out
    }

    pub fn map_coeffs<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> LinForm {
        LinForm::from_parts(
            f(&self.constant),
            self.coeffs.iter().map(|(k, c)| (*k, f(c))).collect(),
        )
    }
}

impl From<RatFunc> for LinForm {
    fn from(c: RatFunc) -> Self {
        LinForm::constant(c)
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "({c})*{k}")?;
            }
        }
        if !self.constant.is_zero() || first {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({})", self.constant)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ParamSymbol;

    fn k(i: u8) -> UnknownSymbol {
        UnknownSymbol::new(1, [i, 0, 0, 0])
    }

    #[test]
    fn apply_binds_and_keeps_free_unknowns() {
        // 3k1 + k2 - 1 with k1 = 2 -> k2 + 5
        let mut l = LinForm::constant(RatFunc::from_int(-1));
        l.add_term(k(1), &RatFunc::from_int(3));
        l.add_term(k(2), &RatFunc::one());
        let mut sol = Solution::new();
        sol.insert(k(1), RatFunc::from_int(2));
        let mut expect = LinForm::constant(RatFunc::from_int(5));
        expect.add_term(k(2), &RatFunc::one());
        assert_eq!(l.apply(&sol), expect);
    }

    #[test]
    fn apply_with_function_value() {
        let t1 = RatFunc::var(ParamSymbol::T1);
        let val = t1.div(&t1.sub(&RatFunc::var(ParamSymbol::T2))).unwrap();
        let mut sol = Solution::new();
        sol.insert(k(1), val.clone());
        let got = LinForm::unknown(k(1)).apply(&sol);
        assert_eq!(got, LinForm::constant(val));
    }

    #[test]
    fn apply_leaves_constants_alone() {
        let c = LinForm::constant(RatFunc::var(ParamSymbol::H));
        let mut sol = Solution::new();
        sol.insert(k(3), RatFunc::from_int(7));
        assert_eq!(c.apply(&sol), c);
    }

    #[test]
    fn cancellation_removes_entries() {
        let mut l = LinForm::unknown(k(1));
        l.add_term(k(1), &RatFunc::from_int(-1));
        assert!(l.is_zero());
    }
}
