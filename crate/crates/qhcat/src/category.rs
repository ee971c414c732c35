//! Finite categories: objects, morphisms with domain/codomain, a partial
//! composition table, identities; validation of the category axioms and the
//! splitness test with explicit witnesses.
//!
//! Morphism ids are dense integers `0..m`; composition is a flat table with
//! a sentinel for "undefined", so composing is O(1) and the cubic
//! associativity sweep stays cache-friendly.

use thiserror::Error;

pub type ObjId = usize;
pub type MorId = usize;

const UNDEFINED: u32 = u32::MAX;

/// A finite category, immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteCategory {
    object_names: Vec<String>,
    morphism_names: Vec<String>,
    dom: Vec<ObjId>,
    cod: Vec<ObjId>,
    identity: Vec<MorId>,
    comp: Vec<u32>,
}

/// One pseudo-inverse per morphism: `s∘u∘s = s` and `u∘s∘u = u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    pub pseudo_inverse: Vec<MorId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `identity ∘ s != s` or `s ∘ identity != s`.
    IdentityNotNeutral { identity: MorId, morphism: MorId },
    /// Composition defined although `cod(s) != dom(t)`, or undefined
    /// although they match.
    CompositionDomain { t: MorId, s: MorId, defined: bool },
    /// dom/cod of `t∘s` disagree with `dom(s)`/`cod(t)`.
    CompositionEndpoints { t: MorId, s: MorId },
    /// `(u∘t)∘s != u∘(t∘s)`; first offending triple.
    Associativity { u: MorId, t: MorId, s: MorId },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CategoryError {
    #[error("monoid table is not square")]
    TableNotSquare,
    #[error("monoid table has no two-sided identity")]
    NoIdentity,
    #[error("monoid table is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unknown object id {0}")]
    UnknownObject(ObjId),
    #[error("unknown morphism id {0}")]
    UnknownMorphism(MorId),
}

impl FiniteCategory {
    /// Assemble a category from raw data. `comp_entries` lists every defined
    /// composite `(t, s, t∘s)`; pairs not listed are undefined. Structural
    /// ranges are asserted; the mathematical axioms are checked by
    /// [`FiniteCategory::validate`].
    pub fn new(
        object_names: Vec<String>,
        morphisms: Vec<(String, ObjId, ObjId)>,
        identity: Vec<MorId>,
        comp_entries: Vec<(MorId, MorId, MorId)>,
    ) -> Self {
        let n_obj = object_names.len();
        let m = morphisms.len();
        assert_eq!(identity.len(), n_obj, "one identity per object");
        let mut morphism_names = Vec::with_capacity(m);
        let mut dom = Vec::with_capacity(m);
        let mut cod = Vec::with_capacity(m);
        for (name, d, c) in morphisms {
            assert!(d < n_obj && c < n_obj, "morphism endpoints out of range");
            morphism_names.push(name);
            dom.push(d);
            cod.push(c);
        }
        for &id in &identity {
            assert!(id < m, "identity id out of range");
        }
        let mut comp = vec![UNDEFINED; m * m];
        for (t, s, r) in comp_entries {
            assert!(t < m && s < m && r < m, "composition entry out of range");
            comp[t * m + s] = r as u32;
        }
        FiniteCategory {
            object_names,
            morphism_names,
            dom,
            cod,
            identity,
            comp,
        }
    }

    pub fn num_objects(&self) -> usize {
        self.object_names.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphism_names.len()
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.object_names[x]
    }

    pub fn morphism_name(&self, s: MorId) -> &str {
        &self.morphism_names[s]
    }

    pub fn dom(&self, s: MorId) -> ObjId {
        self.dom[s]
    }

    pub fn cod(&self, s: MorId) -> ObjId {
        self.cod[s]
    }

    pub fn identity_of(&self, x: ObjId) -> MorId {
        self.identity[x]
    }

    pub fn identities(&self) -> &[MorId] {
        &self.identity
    }

    /// `t∘s` if defined (`cod(s) = dom(t)`), else `None`.
    pub fn compose(&self, t: MorId, s: MorId) -> Option<MorId> {
        let m = self.num_morphisms();
        let r = self.comp[t * m + s];
        if r == UNDEFINED {
            None
        } else {
            Some(r as usize)
        }
    }

    /// All morphisms `x -> y`.
    pub fn hom_set(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        (0..self.num_morphisms())
            .filter(|&s| self.dom[s] == x && self.cod[s] == y)
            .collect()
    }

    pub fn endomorphisms(&self, x: ObjId) -> Vec<MorId> {
        self.hom_set(x, x)
    }

    pub fn is_idempotent(&self, e: MorId) -> bool {
        self.compose(e, e) == Some(e)
    }

    pub fn idempotents(&self) -> Vec<MorId> {
        (0..self.num_morphisms())
            .filter(|&e| self.is_idempotent(e))
            .collect()
    }

    /// Check identity neutrality, dom/cod consistency of the composition
    /// table, and associativity over all composable triples. Violations are
    /// data, not errors; the associativity sweep stops at the first
    /// offending triple.
    pub fn validate(&self) -> ValidationReport {
        let m = self.num_morphisms();
        let mut violations = Vec::new();
        for (x, &idx) in self.identity.iter().enumerate() {
            if self.dom[idx] != x || self.cod[idx] != x {
                violations.push(Violation::CompositionEndpoints { t: idx, s: idx });
            }
        }
        for s in 0..m {
            let idc = self.identity[self.cod[s]];
            if self.compose(idc, s) != Some(s) {
                violations.push(Violation::IdentityNotNeutral {
                    identity: idc,
                    morphism: s,
                });
            }
            let idd = self.identity[self.dom[s]];
            if self.compose(s, idd) != Some(s) {
                violations.push(Violation::IdentityNotNeutral {
                    identity: idd,
                    morphism: s,
                });
            }
        }
        for t in 0..m {
            for s in 0..m {
                let composable = self.cod[s] == self.dom[t];
                match self.compose(t, s) {
                    Some(r) => {
                        if !composable {
                            violations.push(Violation::CompositionDomain {
                                t,
                                s,
                                defined: true,
                            });
                        } else if self.dom[r] != self.dom[s] || self.cod[r] != self.cod[t] {
                            violations.push(Violation::CompositionEndpoints { t, s });
                        }
                    }
                    None => {
                        if composable {
                            violations.push(Violation::CompositionDomain {
                                t,
                                s,
                                defined: false,
                            });
                        }
                    }
                }
                if violations.len() > 64 {
                    return ValidationReport { violations };
                }
            }
        }
        'assoc: for u in 0..m {
            for t in 0..m {
                let ut = match self.compose(u, t) {
                    Some(x) => x,
                    None => continue,
                };
                for s in 0..m {
                    if let Some(ts) = self.compose(t, s) {
                        if self.compose(ut, s) != self.compose(u, ts) {
                            violations.push(Violation::Associativity { u, t, s });
                            break 'assoc;
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Splitness test. Returns one pseudo-inverse per morphism (first
    /// candidate in id order, canonicalized through `u := t∘s∘t`), or the
    /// first morphism with no pseudo-inverse.
    pub fn is_split(&self) -> Result<SplitWitness, MorId> {
        let m = self.num_morphisms();
        let mut pseudo_inverse = Vec::with_capacity(m);
        for s in 0..m {
            let mut found = None;
            for t in self.hom_set(self.cod[s], self.dom[s]) {
                let ts = match self.compose(t, s) {
                    Some(x) => x,
                    None => continue,
                };
                if self.compose(s, ts) == Some(s) {
                    // u = t∘s∘t satisfies both witness equations.
                    let st = self.compose(s, t).expect("composable by construction");
                    let u = self.compose(t, st).expect("composable by construction");
                    found = Some(u);
                    break;
                }
            }
            match found {
                Some(u) => pseudo_inverse.push(u),
                None => return Err(s),
            }
        }
        Ok(SplitWitness { pseudo_inverse })
    }

    /// One-object category from a monoid composition table.
    /// `table[t][s] = t∘s`; the table must be associative with a two-sided
    /// identity.
    pub fn from_monoid(
        names: Vec<String>,
        table: &[Vec<usize>],
    ) -> Result<FiniteCategory, CategoryError> {
        let m = table.len();
        if table.iter().any(|row| row.len() != m) {
            return Err(CategoryError::TableNotSquare);
        }
        if names.len() != m {
            return Err(CategoryError::TableNotSquare);
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|s| table[e][s] == s && table[s][e] == s))
            .ok_or(CategoryError::NoIdentity)?;
        for u in 0..m {
            for t in 0..m {
                for s in 0..m {
                    if table[table[u][t]][s] != table[u][table[t][s]] {
                        return Err(CategoryError::NotAssociative(u, t, s));
                    }
                }
            }
        }
        let comp_entries = (0..m)
            .flat_map(|t| (0..m).map(move |s| (t, s, table[t][s])))
            .collect();
        Ok(FiniteCategory::new(
            vec!["X".to_string()],
            names.into_iter().map(|n| (n, 0, 0)).collect(),
            vec![identity],
            comp_entries,
        ))
    }

    /// Extract the endomorphism composition table of a one-object category
    /// (inverse of `from_monoid` on monoid inputs).
    pub fn endo_table(&self, x: ObjId) -> Vec<Vec<usize>> {
        let endos = self.endomorphisms(x);
        endos
            .iter()
            .map(|&t| {
                endos
                    .iter()
                    .map(|&s| {
                        let r = self.compose(t, s).expect("endomorphisms compose");
                        endos.iter().position(|&e| e == r).unwrap()
                    })
                    .collect()
            })
            .collect()
    }
}
