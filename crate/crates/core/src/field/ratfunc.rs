use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gcd::gcd;
use super::poly::{Monomial, Poly};
use super::symbols::{ParamSymbol, NVARS};
use super::FieldError;

/// A reduced fraction of polynomials with a primitive, positive-leading
/// denominator. Equal functions have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Values bound to parameter symbols by [`RatFunc::specialize`].
pub type Bindings = BTreeMap<ParamSymbol, RatFunc>;

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> RatFunc {
        RatFunc::from_poly(Poly::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_ratio(n: i64, d: i64) -> RatFunc {
        RatFunc::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn var(v: ParamSymbol) -> RatFunc {
        RatFunc::from_poly(Poly::var(v))
    }

    /// Reduced, denominator-normalized `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, FieldError> {
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_constant() {
            return Self::fix_den(num, den);
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            return Self::fix_den(num, den);
        }
        let n = num.div_exact(&g).expect("gcd divides numerator");
        let d = den.div_exact(&g).expect("gcd divides denominator");
        Self::fix_den(n, d)
    }

    /// Makes the denominator primitive with positive leading coefficient.
    fn fix_den(num: Poly, den: Poly) -> RatFunc {
        let (u, d) = den.primitive();
        if u.is_one() {
            RatFunc { num, den: d }
        } else {
            RatFunc {
                num: num.scale(&u.recip()),
                den: d,
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn contains(&self, v: ParamSymbol) -> bool {
        self.num.contains(v) || self.den.contains(v)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc {
                num: self.num.mul(&other.den).add(&other.num),
                den: other.den.clone(),
            };
        }
        if other.den.is_one() {
            return RatFunc {
                num: other.num.mul(&self.den).add(&self.num),
                den: self.den.clone(),
            };
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::fix_den(num, self.den.mul(&other.den));
        }
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&b).add(&other.num.mul(&a));
        if num.is_zero() {
            return RatFunc::zero();
        }
        // only factors of g can cancel
        let g2 = gcd(&num, &g);
        if g2.is_one() {
            Self::fix_den(num, a.mul(&b).mul(&g))
        } else {
            let num = num.div_exact(&g2).expect("gcd divides");
            let g = g.div_exact(&g2).expect("gcd divides");
            Self::fix_den(num, a.mul(&b).mul(&g))
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&other.num));
        }
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Self::fix_den(n1.mul(&n2), d1.mul(&d2))
    }

    /// Multiplication by a rational constant.
    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiplication by `c * m` for a parameter monomial `m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> RatFunc {
        if c.is_zero() || self.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() || m.is_one() {
            return RatFunc {
                num: self.num.mul_term(m, c),
                den: self.den.clone(),
            };
        }
        self.mul(&RatFunc::from_poly(Poly::term(*m, c.clone())))
    }

    pub fn inv(&self) -> Result<RatFunc, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::fix_den(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, FieldError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: i32) -> Result<RatFunc, FieldError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let e = n.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Exact partial derivative.
    pub fn diff(&self, v: ParamSymbol) -> RatFunc {
        if !self.contains(v) {
            return RatFunc::zero();
        }
        if self.den.is_one() || !self.den.contains(v) {
            return Self::reduce(self.num.derivative(v), self.den.clone());
        }
        let dn = self.num.derivative(v);
        let dd = self.den.derivative(v);
        let num = dn.mul(&self.den).sub(&self.num.mul(&dd));
        Self::reduce(num, self.den.mul(&self.den))
    }

    /// Partial evaluation; unbound symbols survive.
    pub fn specialize(&self, bindings: &Bindings) -> Result<RatFunc, FieldError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let all_constant = bindings.values().all(|b| b.as_constant().is_some());
        let (num, den) = if all_constant {
            let mut point: [Option<BigRational>; NVARS] = Default::default();
            for (s, val) in bindings {
                point[s.index()] = val.as_constant();
            }
            (
                RatFunc::from_poly(self.num.eval_partial(&point)),
                RatFunc::from_poly(self.den.eval_partial(&point)),
            )
        } else {
            (
                substitute_poly(&self.num, bindings),
                substitute_poly(&self.den, bindings),
            )
        };
        if den.is_zero() {
            return Err(FieldError::PoleAtPoint);
        }
        num.div(&den)
    }

    pub fn to_text(&self) -> String {
        super::text::ratfunc_to_text(self)
    }

    pub fn to_latex(&self) -> String {
        super::text::ratfunc_to_latex(self)
    }
}

/// Divides out the common factor of `a` and `b`.
fn cancel(a: &Poly, b: &Poly) -> (Poly, Poly) {
    if b.is_constant() || a.is_constant() {
        return (a.clone(), b.clone());
    }
    let g = gcd(a, b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (
            a.div_exact(&g).expect("gcd divides"),
            b.div_exact(&g).expect("gcd divides"),
        )
    }
}

fn substitute_poly(p: &Poly, bindings: &Bindings) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (m, c) in p.terms() {
        let mut rest = *m.exponents();
        let mut factor = RatFunc::one();
        for (s, val) in bindings {
            let e = rest[s.index()];
            if e > 0 {
                factor = factor.mul(&val.pow(e as i32).expect("nonnegative power"));
                rest[s.index()] = 0;
            }
        }
        let term = factor.mul_term(&Monomial::from_exponents(rest), c);
        acc = acc.add(&term);
    }
    acc
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}
