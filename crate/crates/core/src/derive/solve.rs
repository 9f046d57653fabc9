use std::collections::BTreeMap;

use super::conditions::HoloCondition;
use crate::field::{LinForm, RatFunc, Solution, UnknownSymbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub conditions: Vec<HoloCondition>,
    pub unknowns: Vec<UnknownSymbol>,
}

impl LinearSystem {
    /// Collects the unknowns of all conditions in symbol order.
    pub fn new(conditions: Vec<HoloCondition>) -> LinearSystem {
        let mut unknowns: Vec<UnknownSymbol> = conditions.iter().flat_map(|c| c.lhs.unknowns().copied()).collect();
        unknowns.sort();
        unknowns.dedup();
        LinearSystem { conditions, unknowns }
    }
}

/// A condition whose reduced form is a nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconsistency {
    pub index: usize,
    pub residue: RatFunc,
}

/// Reduced row echelon form kept incrementally: every pivot unknown is
/// expressed as an affine form in the free unknowns. Pivots are chosen as
/// the smallest unknown of each reduced condition, conditions being taken in
/// the order they arrive, so the result depends only on that order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Echelon {
    pivots: BTreeMap<UnknownSymbol, LinForm>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn reduce(&self, l: &LinForm) -> LinForm {
        l.apply_forms(&self.pivots)
    }

    /// Adds `lhs = 0`. Returns whether the rank grew; a nonzero constant
    /// after reduction is returned as the error.
    pub fn push(&mut self, lhs: &LinForm) -> Result<bool, RatFunc> {
        let r = self.reduce(lhs);
        let Some((&p, c)) = r.coeffs().iter().next() else {
            return if r.constant_part().is_zero() {
                Ok(false)
            } else {
                Err(r.constant_part().clone())
            };
        };
        // p = -(r - c p) / c
        let inv = c.inv().expect("stored coefficients are nonzero");
        let mut rest = r.clone();
        rest.add_term(p, &c.neg());
        let form = rest.scale(&inv.neg());
        let single = BTreeMap::from([(p, form.clone())]);
        for f in self.pivots.values_mut() {
            if !f.coeff(&p).is_zero() {
                *f = f.apply_forms(&single);
            }
        }
        self.pivots.insert(p, form);
        Ok(true)
    }

    pub fn pivots(&self) -> &BTreeMap<UnknownSymbol, LinForm> {
        &self.pivots
    }

    /// Particular solution (free unknowns zero) and one nullspace vector per
    /// free unknown, over the listed unknowns. Each basis vector is scaled so
    /// its first nonzero entry is 1.
    pub fn solution(&self, unknowns: &[UnknownSymbol]) -> (Solution, Vec<Solution>) {
        let free: Vec<UnknownSymbol> = unknowns.iter().filter(|k| !self.pivots.contains_key(k)).copied().collect();
        let mut particular = Solution::new();
        for k in unknowns {
            let v = match self.pivots.get(k) {
                Some(f) => f.constant_part().clone(),
                None => RatFunc::zero(),
            };
            particular.insert(*k, v);
        }
        let basis = free
            .iter()
            .map(|fk| {
                let mut v = Solution::new();
                for k in unknowns {
                    let x = if k == fk {
                        RatFunc::one()
                    } else {
                        match self.pivots.get(k) {
                            Some(f) => f.coeff(fk),
                            None => RatFunc::zero(),
                        }
                    };
                    if !x.is_zero() {
                        v.insert(*k, x);
                    }
                }
                let lead = v.values().next().expect("free unknown has entry 1").inv().expect("nonzero");
                v.values_mut().for_each(|x| *x = x.mul(&lead));
                v
            })
            .collect();
        (particular, basis)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solved {
    pub solution: Solution,
    pub nullspace: Vec<Solution>,
    pub rank: usize,
}

impl Solved {
    pub fn nullity(&self) -> usize {
        self.nullspace.len()
    }
}

/// Exact Gauss-Jordan elimination over the parameter field.
pub fn solve(sys: &LinearSystem) -> Result<Solved, Inconsistency> {
    let mut ech = Echelon::new();
    for (index, c) in sys.conditions.iter().enumerate() {
        ech.push(&c.lhs).map_err(|residue| Inconsistency { index, residue })?;
    }
    let (solution, nullspace) = ech.solution(&sys.unknowns);
    Ok(Solved {
        solution,
        nullspace,
        rank: ech.rank(),
    })
}
