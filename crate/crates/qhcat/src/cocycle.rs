//! 2-cocycles with values in the nonzero rationals.
//!
//! A cocycle assigns a nonzero scalar to every composable pair and satisfies
//! `α(u∘t,s)·α(u,t) = α(u,t∘s)·α(t,s)` on all composable triples. Values are
//! stored sparsely keyed by pair; a missing key on a composable pair is a
//! validation error, never an implicit 1.

use crate::category::{FiniteCategory, MorId};
use crate::exactla::Rat;
use num::{One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cocycle {
    values: BTreeMap<(MorId, MorId), Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleViolation {
    /// No value on a composable pair.
    MissingPair { t: MorId, s: MorId },
    /// Value on a non-composable pair.
    SpuriousPair { t: MorId, s: MorId },
    /// Zero value.
    ZeroValue { t: MorId, s: MorId },
    /// First composable triple breaking the cocycle identity.
    IdentityFailure { u: MorId, t: MorId, s: MorId },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CocycleReport {
    pub violations: Vec<CocycleViolation>,
}

impl CocycleReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Cocycle {
    pub fn from_values(values: BTreeMap<(MorId, MorId), Rat>) -> Self {
        Cocycle { values }
    }

    /// Constant 1 on all composable pairs (the untwisted algebra kC).
    pub fn trivial(c: &FiniteCategory) -> Self {
        let m = c.num_morphisms();
        let mut values = BTreeMap::new();
        for t in 0..m {
            for s in 0..m {
                if c.compose(t, s).is_some() {
                    values.insert((t, s), Rat::one());
                }
            }
        }
        Cocycle { values }
    }

    pub fn value(&self, t: MorId, s: MorId) -> Option<&Rat> {
        self.values.get(&(t, s))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(MorId, MorId), &Rat)> {
        self.values.iter()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.values().all(|v| v.is_one())
    }

    /// Domain check, nonzero check, and the cocycle identity over every
    /// composable triple. Stops after the first identity failure.
    pub fn validate(&self, c: &FiniteCategory) -> CocycleReport {
        let m = c.num_morphisms();
        let mut violations = Vec::new();
        for t in 0..m {
            for s in 0..m {
                let composable = c.compose(t, s).is_some();
                match self.values.get(&(t, s)) {
                    Some(v) => {
                        if !composable {
                            violations.push(CocycleViolation::SpuriousPair { t, s });
                        } else if v.is_zero() {
                            violations.push(CocycleViolation::ZeroValue { t, s });
                        }
                    }
                    None => {
                        if composable {
                            violations.push(CocycleViolation::MissingPair { t, s });
                        }
                    }
                }
                if violations.len() > 64 {
                    return CocycleReport { violations };
                }
            }
        }
        if !violations.is_empty() {
            return CocycleReport { violations };
        }
        'triples: for u in 0..m {
            for t in 0..m {
                let ut = match c.compose(u, t) {
                    Some(x) => x,
                    None => continue,
                };
                for s in 0..m {
                    let ts = match c.compose(t, s) {
                        Some(x) => x,
                        None => continue,
                    };
                    let lhs = &self.values[&(ut, s)] * &self.values[&(u, t)];
                    let rhs = &self.values[&(u, ts)] * &self.values[&(t, s)];
                    if lhs != rhs {
                        violations.push(CocycleViolation::IdentityFailure { u, t, s });
                        break 'triples;
                    }
                }
            }
        }
        CocycleReport { violations }
    }
}

/// Free-function forms mirroring the operation names used elsewhere.
pub fn trivial_cocycle(c: &FiniteCategory) -> Cocycle {
    Cocycle::trivial(c)
}

pub fn validate_cocycle(c: &FiniteCategory, a: &Cocycle) -> CocycleReport {
    a.validate(c)
}
