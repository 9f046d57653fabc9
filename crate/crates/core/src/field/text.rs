//! Canonical text and LaTeX rendering of parameter polynomials.
//!
//! Terms are written in descending graded-lex order with explicit `*` and `^`;
//! a non-trivial denominator is written as `(num)/(den)`.

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::poly::{Monomial, Poly};
use super::ratfunc::RatFunc;
use super::symbols::ParamSymbol;

fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for s in ParamSymbol::ALL {
        match m.exp(s) {
            0 => {}
            1 => parts.push(s.name().to_string()),
            e => parts.push(format!("{}^{}", s.name(), e)),
        }
    }
    parts.join("*")
}

fn rational_text(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn poly_to_text(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if m.is_one() {
            out.push_str(&rational_text(&a));
        } else if a.is_one() {
            out.push_str(&monomial_text(m));
        } else {
            out.push_str(&rational_text(&a));
            out.push('*');
            out.push_str(&monomial_text(m));
        }
    }
    out
}

pub fn ratfunc_to_text(r: &RatFunc) -> String {
    if r.denom().is_one() {
        poly_to_text(r.numer())
    } else {
        format!("({})/({})", poly_to_text(r.numer()), poly_to_text(r.denom()))
    }
}

fn monomial_latex(m: &Monomial) -> String {
    let mut out = String::new();
    for s in ParamSymbol::ALL {
        match m.exp(s) {
            0 => {}
            1 => out.push_str(s.latex()),
            e => out.push_str(&format!("{}^{{{}}}", s.latex(), e)),
        }
    }
    out
}

fn rational_latex(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn poly_to_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { "-" } else { "+" });
        }
        let a = c.abs();
        if m.is_one() {
            out.push_str(&rational_latex(&a));
        } else if a.is_one() {
            out.push_str(&monomial_latex(m));
        } else {
            out.push_str(&rational_latex(&a));
            out.push_str(&monomial_latex(m));
        }
    }
    out
}

pub fn ratfunc_to_latex(r: &RatFunc) -> String {
    if r.denom().is_one() {
        poly_to_latex(r.numer())
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            poly_to_latex(r.numer()),
            poly_to_latex(r.denom())
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ParamSymbol::*;

    #[test]
    fn canonical_text_shapes() {
        let p = Poly::var(H)
            .mul(&Poly::var(H))
            .scale(&BigRational::new(3.into(), 2.into()))
            .sub(&Poly::var(T1))
            .add(&Poly::from_int(2));
        assert_eq!(poly_to_text(&p), "3/2*h^2 - t1 + 2");
        let r = RatFunc::new(Poly::one(), Poly::var(T1).sub(&Poly::var(T2))).unwrap();
        assert_eq!(ratfunc_to_text(&r), "(1)/(t1 - t2)");
        assert_eq!(ratfunc_to_text(&RatFunc::zero()), "0");
    }
}
