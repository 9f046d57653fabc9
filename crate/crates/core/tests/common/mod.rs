use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use qgarnier::field::{Monomial, ParamSymbol, Poly};
use qgarnier::weyl::{reorder, WeylError};

/// Normal form of `p^b q^c` by single steps only: for b >= 0, p is moved
/// left-to-right through q^a with `p q^a = q^a p - a h q^(a-1)`; for b < 0,
/// q is moved right-to-left through p^m with `p^m q = q p^m - m h p^(m-1)`.
/// Keys are (q exponent, p exponent), values are coefficients of h^k.
pub fn single_step_oracle(b: i32, c: i32) -> BTreeMap<(i32, i32), BTreeMap<u16, BigRational>> {
    type Word = BTreeMap<(i32, i32), BTreeMap<u16, BigRational>>;
    fn add(w: &mut Word, key: (i32, i32), k: u16, c: BigRational) {
        let slot = w.entry(key).or_default();
        let v = slot.entry(k).or_insert_with(BigRational::zero);
        *v += c;
        if v.is_zero() {
            slot.remove(&k);
        }
        if slot.is_empty() {
            w.remove(&key);
        }
    }
    let mut w: Word = BTreeMap::new();
    if b >= 0 {
        add(&mut w, (c, 0), 0, BigRational::one());
        for _ in 0..b {
            let mut next = Word::new();
            for ((a, m), hs) in &w {
                for (k, coef) in hs {
                    add(&mut next, (*a, m + 1), *k, coef.clone());
                    add(&mut next, (a - 1, *m), k + 1, -coef * BigRational::from_integer((*a).into()));
                }
            }
            w = next;
        }
    } else {
        add(&mut w, (0, b), 0, BigRational::one());
        for _ in 0..c {
            let mut next = Word::new();
            for ((a, m), hs) in &w {
                for (k, coef) in hs {
                    add(&mut next, (a + 1, *m), *k, coef.clone());
                    add(&mut next, (*a, m - 1), k + 1, -coef * BigRational::from_integer((*m).into()));
                }
            }
            w = next;
        }
    }
    w
}

/// Compares `reorder(b, c)` with the oracle for all (b, c) in [-4, 4]^2;
/// both-negative pairs must be rejected. Returns the number of pairs checked
/// or the first disagreement.
pub fn reorder_against_oracle() -> Result<usize, String> {
    let mut checked = 0;
    for b in -4..=4 {
        for c in -4..=4 {
            if b < 0 && c < 0 {
                if !matches!(reorder(b, c), Err(WeylError::NonTerminatingReorder { .. })) {
                    return Err(format!("p^{b} q^{c} was not rejected"));
                }
                continue;
            }
            let mut got: BTreeMap<(i32, i32), Poly> = BTreeMap::new();
            for t in reorder(b, c).map_err(|e| e.to_string())? {
                let e = got.entry((t.q_exp, t.p_exp)).or_insert_with(Poly::zero);
                *e = e.add(&t.coeff);
            }
            got.retain(|_, p| !p.is_zero());
            let want: BTreeMap<(i32, i32), Poly> = single_step_oracle(b, c)
                .into_iter()
                .map(|(key, hs)| {
                    let p = Poly::from_terms(hs.into_iter().map(|(k, c)| (Monomial::var_pow(ParamSymbol::H, k), c)));
                    (key, p)
                })
                .collect();
            if got != want {
                return Err(format!("p^{b} q^{c}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}
