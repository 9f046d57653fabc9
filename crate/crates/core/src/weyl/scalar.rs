use crate::field::{FieldError, LinForm, Monomial, ParamSymbol, RatFunc};
use num_rational::BigRational;

use super::WeylError;

/// Coefficient of a Weyl monomial: a field element, or an affine form in
/// ansatz unknowns. Forms without unknowns are always stored as `Rat`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(RatFunc),
    Lin(LinForm),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::Rat(RatFunc::zero())
    }
}

impl From<RatFunc> for Scalar {
    fn from(r: RatFunc) -> Self {
        Scalar::Rat(r)
    }
}

impl From<LinForm> for Scalar {
    fn from(l: LinForm) -> Self {
        Scalar::from_linform(l)
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(RatFunc::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rat(RatFunc::one())
    }

    pub fn from_linform(l: LinForm) -> Scalar {
        match l.as_constant() {
            Some(c) => Scalar::Rat(c.clone()),
            None => Scalar::Lin(l),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Lin(l) => l.is_zero(),
        }
    }

    pub fn is_k_free(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn as_rat(&self) -> Option<&RatFunc> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Lin(_) => None,
        }
    }

    pub fn to_linform(&self) -> LinForm {
        match self {
            Scalar::Rat(r) => LinForm::constant(r.clone()),
            Scalar::Lin(l) => l.clone(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.add(b)),
            _ => Scalar::from_linform(self.to_linform().add(&other.to_linform())),
        }
    }

    pub fn add_assign(&mut self, other: &Scalar) {
        match (&mut *self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a = a.add(b),
            (Scalar::Lin(a), b) => {
                a.add_assign(&b.to_linform());
                if a.is_constant() {
                    *self = Scalar::from_linform(std::mem::take(a));
                }
            }
            (Scalar::Rat(a), Scalar::Lin(b)) => {
                let mut l = b.clone();
                l.add_assign(&LinForm::constant(a.clone()));
                *self = Scalar::from_linform(l);
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.neg()),
            Scalar::Lin(l) => Scalar::Lin(l.neg()),
        }
    }

    /// Product; fails if both factors carry unknowns.
    pub fn mul(&self, other: &Scalar) -> Result<Scalar, WeylError> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a.mul(b))),
            (Scalar::Lin(a), Scalar::Rat(b)) | (Scalar::Rat(b), Scalar::Lin(a)) => {
                Ok(Scalar::from_linform(a.scale(b)))
            }
            (Scalar::Lin(_), Scalar::Lin(_)) => Err(WeylError::NonlinearUnknowns),
        }
    }

    pub fn mul_rat(&self, r: &RatFunc) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.mul(r)),
            Scalar::Lin(l) => Scalar::from_linform(l.scale(r)),
        }
    }

    /// Multiplication by `c * m` for a parameter monomial `m`.
    pub(crate) fn mul_term(&self, m: &Monomial, c: &BigRational) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.mul_term(m, c)),
            Scalar::Lin(l) => Scalar::from_linform(l.map_coeffs(|x| x.mul_term(m, c))),
        }
    }

    pub fn diff(&self, v: ParamSymbol) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.diff(v)),
            Scalar::Lin(l) => Scalar::from_linform(l.map_coeffs(|x| x.diff(v))),
        }
    }

    pub fn try_map<F>(&self, f: F) -> Result<Scalar, FieldError>
    where
        F: Fn(&RatFunc) -> Result<RatFunc, FieldError>,
    {
        match self {
            Scalar::Rat(r) => Ok(Scalar::Rat(f(r)?)),
            Scalar::Lin(l) => {
                let constant = f(l.constant_part())?;
                let mut coeffs = std::collections::BTreeMap::new();
                for (k, c) in l.coeffs() {
                    coeffs.insert(*k, f(c)?);
                }
                Ok(Scalar::from_linform(LinForm::from_parts(constant, coeffs)))
            }
        }
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Lin(l) => write!(f, "{l}"),
        }
    }
}
