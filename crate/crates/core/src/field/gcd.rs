//! Multivariate polynomial GCD over `Q`.
//!
//! Strategy, cheapest first: strip monomial content, eliminate symbols that
//! occur on one side only (the GCD must divide the content in that symbol),
//! drop symbols a univariate specialization proves absent from the GCD, and
//! fall back to a primitive polynomial remainder sequence in the remaining
//! symbol of smallest degree.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Monomial, Poly};
use super::symbols::{ParamSymbol, NVARS};

/// Primitive, positive-leading GCD. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.primitive().1;
    }
    if b.is_zero() {
        return a.primitive().1;
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono = ma.gcd(&mb);
    let a1 = strip(a, &ma);
    let b1 = strip(b, &mb);
    let g = gcd_no_monomial(&a1, &b1);
    g.mul_term(&mono, &BigRational::one())
}

/// GCD of a list of polynomials, stopping early once it reaches 1.
pub fn gcd_many(polys: &[Poly]) -> Poly {
    let mut nonzero: Vec<&Poly> = polys.iter().filter(|p| !p.is_zero()).collect();
    nonzero.sort_by_key(|p| p.len());
    let mut it = nonzero.into_iter();
    let mut g = match it.next() {
        Some(p) => p.primitive().1,
        None => return Poly::zero(),
    };
    for p in it {
        if g.is_one() {
            break;
        }
        g = gcd(&g, p);
    }
    g
}

fn strip(p: &Poly, m: &Monomial) -> Poly {
    let d = Poly::term(*m, BigRational::one());
    p.div_exact(&d).expect("monomial content divides").primitive().1
}

fn gcd_no_monomial(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.clone();
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if large.div_exact(small).is_some() {
        return small.clone();
    }

    let ma = a.var_mask();
    let mb = b.var_mask();
    if let Some(v) = first_var(ma & !mb) {
        return gcd_through_content(a, v, b);
    }
    if let Some(v) = first_var(mb & !ma) {
        return gcd_through_content(b, v, a);
    }

    let common = ma & mb;
    let mut main: Option<(ParamSymbol, u16)> = None;
    for v in ParamSymbol::ALL {
        if common & (1 << v.index()) == 0 {
            continue;
        }
        if !maybe_involved(a, b, v) {
            let mut coeffs = a.coeffs_in(v);
            coeffs.extend(b.coeffs_in(v));
            return gcd_many(&coeffs);
        }
        let d = a.degree_in(v).max(b.degree_in(v));
        if main.is_none_or(|(_, md)| d < md) {
            main = Some((v, d));
        }
    }
    match main {
        Some((v, _)) => prs_gcd(a, b, v),
        None => Poly::one(),
    }
}

fn first_var(mask: u16) -> Option<ParamSymbol> {
    (0..NVARS)
        .find(|i| mask & (1 << i) != 0)
        .map(ParamSymbol::from_index)
}

/// `gcd(a, b)` when `b` is free of `v`.
fn gcd_through_content(a: &Poly, v: ParamSymbol, b: &Poly) -> Poly {
    let mut coeffs = a.coeffs_in(v);
    coeffs.push(b.clone());
    gcd_many(&coeffs)
}

/// Deterministic evaluation points for the specialization test.
fn eval_point(attempt: u64, skip: ParamSymbol) -> [BigRational; NVARS] {
    let mut state = 0x9E37_79B9_7F4A_7C15u64 ^ (attempt.wrapping_mul(0x2545_F491_4F6C_DD1D));
    std::array::from_fn(|i| {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let val = if i == skip.index() {
            0
        } else {
            3 + ((state >> 33) % 9973) as i64
        };
        BigRational::from_integer(val.into())
    })
}

/// False only if the GCD provably has degree zero in `v`.
///
/// The specialized GCD is divisible by the specialized true GCD, whose degree
/// in `v` is preserved whenever the leading coefficients of both inputs stay
/// nonzero. A degree-zero specialized GCD is therefore conclusive.
fn maybe_involved(a: &Poly, b: &Poly, v: ParamSymbol) -> bool {
    for attempt in 0..4 {
        let point = eval_point(attempt, v);
        let ua = a.univariate_image(v, &point);
        let ub = b.univariate_image(v, &point);
        if ua.last().is_none_or(|c| c.is_zero()) || ub.last().is_none_or(|c| c.is_zero()) {
            continue;
        }
        return univariate_gcd_degree(ua, ub) > 0;
    }
    true
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn univariate_gcd_degree(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> usize {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // a <- a mod b
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = a.last().unwrap() / &lb;
            for (i, c) in b.iter().enumerate() {
                let t = &factor * c;
                a[i + shift] -= t;
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn prs_gcd(a: &Poly, b: &Poly, v: ParamSymbol) -> Poly {
    let ca = a.coeffs_in(v);
    let cb = b.coeffs_in(v);
    let conta = gcd_many(&ca);
    let contb = gcd_many(&cb);
    let content = gcd(&conta, &contb);
    let mut p = divide_all(&ca, &conta);
    let mut q = divide_all(&cb, &contb);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_remainder(&p, &q);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return content;
        }
        let cr = gcd_many(&r);
        p = q;
        q = divide_all(&r, &cr);
    }
    let g = Poly::from_coeffs_in(v, &q).mul(&content);
    g.primitive().1
}

fn divide_all(coeffs: &[Poly], d: &Poly) -> Vec<Poly> {
    if d.is_one() {
        return coeffs.to_vec();
    }
    coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

/// Remainder of `lc(q)^k * p` by `q` in the recursive representation.
fn pseudo_remainder(p: &[Poly], q: &[Poly]) -> Vec<Poly> {
    let dq = q.len() - 1;
    let lcq = &q[dq];
    let mut r: Vec<Poly> = p.to_vec();
    while r.len() > dq {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let shift = dr - dq;
        for (i, c) in r.iter_mut().enumerate() {
            let mut next = c.mul(lcq);
            if i >= shift {
                next = next.sub(&lcr.mul(&q[i - shift]));
            }
            *c = next;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        // keep integer coefficient growth in check
        let cont: BigRational = r
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.rational_content())
            .fold(BigRational::zero(), |acc, c| {
                if acc.is_zero() {
                    c
                } else {
                    rational_gcd(&acc, &c)
                }
            });
        if !cont.is_zero() && !cont.is_one() {
            let inv = cont.recip();
            for c in r.iter_mut() {
                *c = c.scale(&inv);
            }
        }
    }
    r
}

fn rational_gcd(a: &BigRational, b: &BigRational) -> BigRational {
    use num_integer::Integer;
    BigRational::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ParamSymbol::*;

    fn v(s: ParamSymbol) -> Poly {
        Poly::var(s)
    }

    #[test]
    fn recovers_planted_factor() {
        let g = v(H).sub(&v(A1)).sub(&v(A2));
        let a = g.mul(&v(T1).sub(&v(T2))).mul(&v(T1));
        let b = g.mul(&v(T1).add(&Poly::one())).mul(&v(H));
        assert_eq!(gcd(&a, &b), g.primitive().1);
    }

    #[test]
    fn coprime_inputs_give_one() {
        let a = v(T1).mul(&v(T1)).sub(&v(T2));
        let b = v(T1).add(&v(H));
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn monomial_parts_are_kept() {
        let a = v(T1).pow(3).mul(&v(T2));
        let b = v(T1).pow(2).mul(&v(H));
        assert_eq!(gcd(&a, &b), v(T1).pow(2));
    }

    #[test]
    fn shared_multivariate_square() {
        let f = v(T1).sub(&v(T2)).add(&v(H).mul(&v(A3)));
        let a = f.mul(&f).mul(&v(A1).add(&Poly::from_int(2)));
        let b = f.mul(&f).mul(&v(T2).sub(&Poly::one())).mul(&f);
        assert_eq!(gcd(&a, &b), f.mul(&f).primitive().1);
    }

    #[test]
    fn gcd_many_stops_at_one() {
        let polys = vec![v(T1), v(T2), v(T1).mul(&v(T2))];
        assert!(gcd_many(&polys).is_one());
    }
}
