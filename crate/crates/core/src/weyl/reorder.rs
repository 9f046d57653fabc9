//! Normal ordering of a single canonical pair.
//!
//! `p^b q^c = sum_k (-h)^k k! C(b,k) C(c,k) q^(c-k) p^(b-k)` with generalized
//! binomials. The sum is finite as long as one of `b`, `c` is non-negative.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::{Monomial, ParamSymbol, Poly};

use super::WeylError;

/// One term `coeff * q^q_exp p^p_exp` of a reordered word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReorderTerm {
    pub coeff: Poly,
    pub q_exp: i32,
    pub p_exp: i32,
}

/// Compact form: rational factor, power of `h`, shift `k`.
#[derive(Clone, Debug)]
pub(crate) struct RawTerm {
    pub factor: BigRational,
    pub h_power: u16,
    pub shift: i32,
}

thread_local! {
    static CACHE: RefCell<HashMap<(i32, i32), Rc<Vec<RawTerm>>>> = RefCell::new(HashMap::new());
}

pub(crate) fn reorder_raw(b: i32, c: i32) -> Result<Rc<Vec<RawTerm>>, WeylError> {
    if b < 0 && c < 0 {
        return Err(WeylError::NonTerminatingReorder { p_exp: b, q_exp: c });
    }
    if let Some(hit) = CACHE.with(|cache| cache.borrow().get(&(b, c)).cloned()) {
        return Ok(hit);
    }
    let top = if b == 0 || c == 0 {
        0
    } else if b < 0 {
        c
    } else if c < 0 {
        b
    } else {
        b.min(c)
    };
    let mut terms = Vec::with_capacity(top as usize + 1);
    // falling factorials b(b-1)...(b-k+1), c(c-1)...(c-k+1) and k!
    let mut fb = BigInt::one();
    let mut fc = BigInt::one();
    let mut fact = BigInt::one();
    for k in 0..=top {
        if k > 0 {
            fb *= BigInt::from(b - k + 1);
            fc *= BigInt::from(c - k + 1);
            fact *= BigInt::from(k);
        }
        // k! C(b,k) C(c,k) = fb * fc / k!
        let mut factor = BigRational::new(&fb * &fc, fact.clone());
        if k % 2 == 1 {
            factor = -factor;
        }
        if !factor.is_zero() {
            terms.push(RawTerm {
                factor,
                h_power: k as u16,
                shift: k,
            });
        }
    }
    let rc = Rc::new(terms);
    CACHE.with(|cache| cache.borrow_mut().insert((b, c), rc.clone()));
    Ok(rc)
}

/// Normal form of the word `p^b q^c` as `sum coeff * q^(c-k) p^(b-k)`.
pub fn reorder(b: i32, c: i32) -> Result<Vec<ReorderTerm>, WeylError> {
    let raw = reorder_raw(b, c)?;
    Ok(raw
        .iter()
        .map(|t| ReorderTerm {
            coeff: Poly::term(Monomial::var_pow(ParamSymbol::H, t.h_power), t.factor.clone()),
            q_exp: c - t.shift,
            p_exp: b - t.shift,
        })
        .collect())
}
