use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::field::{Bindings, FieldError, Monomial, ParamSymbol, RatFunc};

use super::reorder::reorder_raw;
use super::scalar::Scalar;
use super::WeylError;

/// Exponents `(a1, b1, a2, b2)` of the normal-ordered word
/// `q1^a1 p1^b1 q2^a2 p2^b2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WeylMonomial(pub [i32; 4]);

impl WeylMonomial {
    pub fn one() -> WeylMonomial {
        WeylMonomial([0; 4])
    }

    pub fn new(a1: i32, b1: i32, a2: i32, b2: i32) -> WeylMonomial {
        WeylMonomial([a1, b1, a2, b2])
    }

    pub fn exps(&self) -> [i32; 4] {
        self.0
    }

    pub fn is_polar(&self) -> bool {
        self.0.iter().any(|&e| e < 0)
    }

    pub fn total_degree(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn render(&self, vars: VarSet) -> String {
        let names = vars.names();
        let mut parts = Vec::new();
        for (name, &e) in names.iter().zip(self.0.iter()) {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn render_latex(&self, vars: VarSet) -> String {
        let mut out = String::new();
        for (name, &e) in vars.latex_names().iter().zip(self.0.iter()) {
            match e {
                0 => {}
                1 => out.push_str(name),
                _ => out.push_str(&format!("{name}^{{{e}}}")),
            }
        }
        out
    }
}

/// Generator slot of a canonical pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Q1,
    P1,
    Q2,
    P2,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::Q1, Slot::P1, Slot::Q2, Slot::P2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self, vars: VarSet) -> &'static str {
        vars.names()[self.index()]
    }
}

/// Naming of the generator slots: the original canonical variables, or the
/// coordinates of a transformed chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarSet {
    Old,
    New,
}

impl VarSet {
    pub fn names(self) -> [&'static str; 4] {
        match self {
            VarSet::Old => ["q1", "p1", "q2", "p2"],
            VarSet::New => ["x1", "y1", "x2", "y2"],
        }
    }

    pub fn latex_names(self) -> [&'static str; 4] {
        match self {
            VarSet::Old => ["q_{1}", "p_{1}", "q_{2}", "p_{2}"],
            VarSet::New => ["x_{1}", "y_{1}", "x_{2}", "y_{2}"],
        }
    }

    pub fn other(self) -> VarSet {
        match self {
            VarSet::Old => VarSet::New,
            VarSet::New => VarSet::Old,
        }
    }

    pub fn lookup(self, name: &str) -> Option<Slot> {
        self.names()
            .iter()
            .position(|n| *n == name)
            .map(|i| Slot::ALL[i])
    }
}

/// Finite sum of normal-ordered Laurent monomials. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeylElement {
    terms: BTreeMap<WeylMonomial, Scalar>,
}

impl WeylElement {
    pub fn zero() -> WeylElement {
        WeylElement::default()
    }

    pub fn one() -> WeylElement {
        Self::scalar(Scalar::one())
    }

    pub fn scalar<S: Into<Scalar>>(s: S) -> WeylElement {
        Self::monomial(WeylMonomial::one(), s)
    }

    pub fn monomial<S: Into<Scalar>>(m: WeylMonomial, s: S) -> WeylElement {
        let s = s.into();
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(m, s);
        }
        WeylElement { terms }
    }

    pub fn generator(slot: Slot) -> WeylElement {
        let mut e = [0; 4];
        e[slot.index()] = 1;
        Self::monomial(WeylMonomial(e), Scalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (WeylMonomial, Scalar)>>(iter: I) -> WeylElement {
        let mut out = WeylElement::zero();
        for (m, s) in iter {
            out.add_term(m, &s);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<WeylMonomial, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<WeylMonomial, Scalar> {
        self.terms
    }

    pub fn coeff(&self, m: &WeylMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_k_free(&self) -> bool {
        self.terms.values().all(Scalar::is_k_free)
    }

    /// The single term, if the element is a monomial.
    pub fn as_monomial(&self) -> Option<(&WeylMonomial, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The scalar value of a constant element.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&WeylMonomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: WeylMonomial, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                e.add_assign(s);
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, s.clone());
            }
        }
    }

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &WeylElement) {
        for (m, s) in &other.terms {
            self.add_term(*m, s);
        }
    }

    pub fn neg(&self) -> WeylElement {
        WeylElement {
            terms: self.terms.iter().map(|(m, s)| (*m, s.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (m, s) in &other.terms {
            out.add_term(*m, &s.neg());
        }
        out
    }

    pub fn scale(&self, r: &RatFunc) -> WeylElement {
        if r.is_zero() {
            return WeylElement::zero();
        }
        WeylElement {
            terms: self
                .terms
                .iter()
                .map(|(m, s)| (*m, s.mul_rat(r)))
                .filter(|(_, s)| !s.is_zero())
                .collect(),
        }
    }

    /// Algebra product, normal ordered.
    pub fn mul(&self, other: &WeylElement) -> Result<WeylElement, WeylError> {
        if self.is_zero() || other.is_zero() {
            return Ok(WeylElement::zero());
        }
        if !self.is_k_free() && !other.is_k_free() {
            return Err(WeylError::NonlinearUnknowns);
        }
        let mut acc: HashMap<WeylMonomial, Scalar> = HashMap::new();
        for (ma, ca) in &self.terms {
            let [a1, b1, a2, b2] = ma.0;
            for (mb, cb) in &other.terms {
                let [c1, d1, c2, d2] = mb.0;
                let r1 = reorder_raw(b1, c1)?;
                let r2 = reorder_raw(b2, c2)?;
                let base = ca.mul(cb)?;
                for t1 in r1.iter() {
                    for t2 in r2.iter() {
                        let mono = WeylMonomial([
                            a1 + c1 - t1.shift,
                            b1 + d1 - t1.shift,
                            a2 + c2 - t2.shift,
                            b2 + d2 - t2.shift,
                        ]);
                        let hpow = t1.h_power + t2.h_power;
                        let term = if hpow == 0 && t1.factor.is_one() && t2.factor.is_one() {
                            base.clone()
                        } else {
                            let factor = &t1.factor * &t2.factor;
                            base.mul_term(&Monomial::var_pow(ParamSymbol::H, hpow), &factor)
                        };
                        match acc.get_mut(&mono) {
                            Some(e) => e.add_assign(&term),
                            None => {
                                acc.insert(mono, term);
                            }
                        }
                    }
                }
            }
        }
        Ok(WeylElement {
            terms: acc.into_iter().filter(|(_, s)| !s.is_zero()).collect(),
        })
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &WeylElement) -> Result<WeylElement, WeylError> {
        Ok(self.mul(other)?.sub(&other.mul(self)?))
    }

    /// Integer power. Negative powers exist only for invertible monomials.
    pub fn power(&self, n: i32) -> Result<WeylElement, WeylError> {
        if n >= 0 {
            let mut out = WeylElement::one();
            for _ in 0..n {
                out = out.mul(self)?;
            }
            return Ok(out);
        }
        let inv = self.inverse()?;
        inv.power(-n)
    }

    /// Inverse of a monomial whose exponents never mix `q` and `p` of the
    /// same pair.
    pub fn inverse(&self) -> Result<WeylElement, WeylError> {
        let (m, s) = self.as_monomial().ok_or(WeylError::NonInvertible)?;
        let r = match s {
            Scalar::Rat(r) => r,
            Scalar::Lin(_) => return Err(WeylError::NonlinearUnknowns),
        };
        let [a1, b1, a2, b2] = m.0;
        if (a1 != 0 && b1 != 0) || (a2 != 0 && b2 != 0) {
            return Err(WeylError::NonInvertible);
        }
        let c = r.inv().map_err(|_| WeylError::NonInvertible)?;
        Ok(WeylElement::monomial(
            WeylMonomial([-a1, -b1, -a2, -b2]),
            Scalar::Rat(c),
        ))
    }

    /// Splits into (terms with some negative exponent, the rest).
    pub fn pole_split(&self) -> (WeylElement, WeylElement) {
        let mut polar = WeylElement::zero();
        let mut holo = WeylElement::zero();
        for (m, s) in &self.terms {
            if m.is_polar() {
                polar.terms.insert(*m, s.clone());
            } else {
                holo.terms.insert(*m, s.clone());
            }
        }
        (polar, holo)
    }

    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(|m| !m.is_polar())
    }

    /// Coefficient-wise partial derivative in a parameter (typically a time).
    pub fn t_derivative(&self, v: ParamSymbol) -> WeylElement {
        WeylElement {
            terms: self
                .terms
                .iter()
                .map(|(m, s)| (*m, s.diff(v)))
                .filter(|(_, s)| !s.is_zero())
                .collect(),
        }
    }

    /// Coefficient-wise specialization of parameters.
    pub fn specialize(&self, bindings: &Bindings) -> Result<WeylElement, FieldError> {
        let mut out = WeylElement::zero();
        for (m, s) in &self.terms {
            let v = s.try_map(|r| r.specialize(bindings))?;
            out.add_term(*m, &v);
        }
        Ok(out)
    }

    pub fn map_coeffs<F: Fn(&Scalar) -> Scalar>(&self, f: F) -> WeylElement {
        WeylElement::from_terms(self.terms.iter().map(|(m, s)| (*m, f(s))))
    }

    /// Largest total degree among the monomials (0 for the zero element).
    pub fn max_total_degree(&self) -> i32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn params_used(&self) -> Vec<ParamSymbol> {
        ParamSymbol::ALL
            .into_iter()
            .filter(|p| {
                self.terms.values().any(|s| match s {
                    Scalar::Rat(r) => r.contains(*p),
                    Scalar::Lin(l) => {
                        l.constant_part().contains(*p) || l.coeffs().values().any(|c| c.contains(*p))
                    }
                })
            })
            .collect()
    }

    /// Text form in the expression syntax, terms in descending monomial order.
    pub fn to_text(&self, vars: VarSet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, s) in self.terms.iter().rev() {
            let coeff = match s {
                Scalar::Rat(r) => r.to_text(),
                Scalar::Lin(l) => l.to_string(),
            };
            if m.0 == [0; 4] {
                parts.push(format!("({coeff})"));
            } else if coeff == "1" {
                parts.push(m.render(vars));
            } else {
                parts.push(format!("({coeff})*{}", m.render(vars)));
            }
        }
        parts.join(" + ")
    }
}

impl WeylElement {
    /// LaTeX form, highest total degree first; k-free elements only render
    /// their rational coefficients, unknowns are shown by name.
    pub fn to_latex(&self, vars: VarSet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.total_degree().cmp(&a.total_degree()).then(b.0.cmp(&a.0)));
        let mut out = String::new();
        for (m, s) in terms {
            let mono = m.render_latex(vars);
            let (neg, coeff) = match s {
                Scalar::Rat(r) if r.is_one() => (false, String::new()),
                Scalar::Rat(r) if r.neg().is_one() => (true, String::new()),
                Scalar::Rat(r) => (false, format!("\\left({}\\right)", r.to_latex())),
                Scalar::Lin(l) => (false, format!("\\left({l}\\right)")),
            };
            let body = if mono.is_empty() && coeff.is_empty() { "1".to_string() } else { format!("{coeff}{mono}") };
            match (out.is_empty(), neg) {
                (true, false) => out.push_str(&body),
                (true, true) => out.push_str(&format!("-{body}")),
                (false, false) => out.push_str(&format!(" + {body}")),
                (false, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(VarSet::Old))
    }
}

impl From<RatFunc> for WeylElement {
    fn from(r: RatFunc) -> Self {
        WeylElement::scalar(r)
    }
}

/// `c * q1^a1 p1^b1 q2^a2 p2^b2` with a rational constant coefficient.
pub fn mono(a1: i32, b1: i32, a2: i32, b2: i32, c: i64) -> WeylElement {
    WeylElement::monomial(
        WeylMonomial([a1, b1, a2, b2]),
        RatFunc::from_rational(BigRational::from_integer(c.into())),
    )
}
