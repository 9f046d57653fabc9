//! Seeded random elements for the algebra checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CheckReport, Verdict, Witness};
use crate::catalog::{self, Direction, GarnierName};
use crate::field::{ParamSymbol, RatFunc};
use crate::weyl::{substitute, VarSet, WeylElement, WeylError, WeylMonomial};

pub const DEFAULT_SEED: u64 = 0x5eed_0001;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Small rational times one of 1, h, t1, a1.
    pub fn coeff(&mut self) -> RatFunc {
        let mut n = self.rng.gen_range(-3i64..=3);
        if n == 0 {
            n = 1;
        }
        let d = self.rng.gen_range(1i64..=2);
        let c = RatFunc::from_ratio(n, d);
        match self.rng.gen_range(0..4) {
            0 => c,
            1 => c.mul(&RatFunc::var(ParamSymbol::H)),
            2 => c.mul(&RatFunc::var(ParamSymbol::T1)),
            _ => c.mul(&RatFunc::var(ParamSymbol::A1)),
        }
    }

    /// Laurent in the q's, polynomial in the p's, so that every product is
    /// defined.
    pub fn laurent(&mut self, terms: usize, bound: i32) -> WeylElement {
        let mut e = WeylElement::zero();
        for _ in 0..terms {
            let m = WeylMonomial::new(
                self.rng.gen_range(-bound..=bound),
                self.rng.gen_range(0..=bound),
                self.rng.gen_range(-bound..=bound),
                self.rng.gen_range(0..=bound),
            );
            e.add_term(m, &self.coeff().into());
        }
        e
    }

    pub fn polynomial(&mut self, terms: usize, bound: i32) -> WeylElement {
        let mut e = WeylElement::zero();
        for _ in 0..terms {
            let m = WeylMonomial::new(
                self.rng.gen_range(0..=bound),
                self.rng.gen_range(0..=bound),
                self.rng.gen_range(0..=bound),
                self.rng.gen_range(0..=bound),
            );
            e.add_term(m, &self.coeff().into());
        }
        e
    }
}

fn report(check: &str, subject: String, witness: Vec<Witness>) -> CheckReport {
    let verdict = if witness.is_empty() { Verdict::Pass } else { Verdict::Fail };
    CheckReport {
        check: check.into(),
        subject,
        verdict,
        witness,
    }
}

/// `(ab)c = a(bc)` on `samples` random Laurent triples.
pub fn check_associativity(seed: u64, samples: usize) -> Result<CheckReport, WeylError> {
    let mut s = Sampler::new(seed);
    let mut witness = Vec::new();
    for i in 0..samples {
        let (a, b, c) = (s.laurent(3, 2), s.laurent(3, 2), s.laurent(3, 2));
        let dev = a.mul(&b)?.mul(&c)?.sub(&a.mul(&b.mul(&c)?)?);
        if !dev.is_zero() {
            witness.push(Witness::new(format!("sample {i}: (ab)c - a(bc)"), dev, VarSet::Old));
        }
    }
    Ok(report("associativity", format!("algebra ({samples} Laurent triples)"), witness))
}

/// `phi(ab) = phi(a) phi(b)` for both corrected maps of every transformation
/// of `system`, on `samples` random polynomial pairs each.
pub fn check_homomorphism(system: GarnierName, seed: u64, samples: usize) -> Result<Vec<CheckReport>, WeylError> {
    let mut out = Vec::new();
    for r in catalog::transformations(system) {
        for d in [Direction::Forward, Direction::Backward] {
            let map = r.map(d, true);
            let mut s = Sampler::new(seed ^ ((r.index as u64) << 8) ^ d as u64);
            let mut witness = Vec::new();
            for i in 0..samples {
                let (a, b) = (s.polynomial(2, 1), s.polynomial(2, 1));
                let lhs = substitute(&a.mul(&b)?, map)?;
                let rhs = substitute(&a, map)?.mul(&substitute(&b, map)?)?;
                let dev = lhs.sub(&rhs);
                if !dev.is_zero() {
                    witness.push(Witness::new(format!("sample {i}"), dev, map.target()));
                }
            }
            out.push(report("homomorphism", format!("{} {d}", r.id()), witness));
        }
    }
    Ok(out)
}
