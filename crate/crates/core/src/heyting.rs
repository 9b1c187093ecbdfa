//! Clopen predicates and the Boolean algebra `clop(X)`.
//!
//! The Heyting operations are exposed through [`Predicate`]; implication is
//! the Boolean identity `¬φ ∨ ψ`, which is the Heyting implication of a
//! Boolean algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topology::{same_space, PointSet, Space, OPEN_FAMILY_CAP};

/// A clopen subset of a finite space; an element of `clop(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Predicate {
    space: Space,
    extent: PointSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateDescriptor {
    pub space: String,
    pub extent: Vec<usize>,
}

impl Predicate {
    pub fn new(space: &Space, extent: PointSet) -> Result<Self> {
        if extent.universe() != space.size() {
            return Err(Error::PointOutOfRange {
                index: extent.universe(),
                size: space.size(),
            });
        }
        if !space.is_clopen(&extent) {
            return Err(Error::NotClopen {
                space: space.name().to_string(),
                extent: extent.iter().collect(),
            });
        }
        Ok(Predicate {
            space: space.clone(),
            extent,
        })
    }

    pub fn from_indices(space: &Space, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= space.size()) {
            return Err(Error::PointOutOfRange {
                index: bad,
                size: space.size(),
            });
        }
        Predicate::new(space, PointSet::from_indices(space.size(), indices.iter().copied()))
    }

    /// Skips the clopen check. Callers guarantee it (images and preimages
    /// under clopen/continuous maps, Boolean combinations).
    pub(crate) fn trusted(space: &Space, extent: PointSet) -> Self {
        debug_assert!(space.is_clopen(&extent));
        Predicate {
            space: space.clone(),
            extent,
        }
    }

    pub fn top(space: &Space) -> Self {
        Predicate::trusted(space, space.full_set())
    }

    pub fn bottom(space: &Space) -> Self {
        Predicate::trusted(space, space.empty_set())
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn extent(&self) -> &PointSet {
        &self.extent
    }

    pub fn contains(&self, point: usize) -> bool {
        self.extent.contains(point)
    }

    pub fn is_top(&self) -> bool {
        self.extent.is_full()
    }

    pub fn is_bottom(&self) -> bool {
        self.extent.is_empty()
    }

    fn check_same(&self, other: &Predicate) -> Result<()> {
        if same_space(&self.space, &other.space) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch {
                expected: self.space.name().to_string(),
                found: other.space.name().to_string(),
            })
        }
    }

    pub fn meet(&self, other: &Predicate) -> Result<Predicate> {
        self.check_same(other)?;
        Ok(Predicate::trusted(&self.space, self.extent.intersection(&other.extent)))
    }

    pub fn join(&self, other: &Predicate) -> Result<Predicate> {
        self.check_same(other)?;
        Ok(Predicate::trusted(&self.space, self.extent.union(&other.extent)))
    }

    pub fn neg(&self) -> Predicate {
        Predicate::trusted(&self.space, self.extent.complement())
    }

    pub fn implies(&self, other: &Predicate) -> Result<Predicate> {
        self.neg().join(other)
    }

    pub fn iff(&self, other: &Predicate) -> Result<Predicate> {
        self.implies(other)?.meet(&other.implies(self)?)
    }

    pub fn leq(&self, other: &Predicate) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.extent.is_subset(&other.extent))
    }

    pub fn descriptor(&self) -> PredicateDescriptor {
        PredicateDescriptor {
            space: self.space.name().to_string(),
            extent: self.extent.iter().collect(),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.space.format_set(&self.extent))
    }
}

/// All clopen subsets of a space, in increasing bitset order.
#[derive(Debug, Clone)]
pub struct ClopenAlgebra {
    space: Space,
    carrier: Vec<PointSet>,
}

impl ClopenAlgebra {
    pub fn of(space: &Space) -> Result<Self> {
        let carrier = space
            .opens()
            .map_err(|_| Error::SizeCap {
                requested: space.size(),
                cap: OPEN_FAMILY_CAP.trailing_zeros() as usize,
            })?
            .into_iter()
            .filter(|u| space.is_closed(u))
            .collect();
        Ok(ClopenAlgebra {
            space: space.clone(),
            carrier,
        })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &[PointSet] {
        &self.carrier
    }

    pub fn predicates(&self) -> impl Iterator<Item = Predicate> + '_ {
        self.carrier
            .iter()
            .map(|s| Predicate::trusted(&self.space, s.clone()))
    }

    pub fn contains(&self, s: &PointSet) -> bool {
        self.carrier.binary_search(s).is_ok()
    }

    /// Closure under complement, union and intersection, with both bounds present.
    pub fn is_boolean_subalgebra(&self) -> bool {
        let n = self.space.size();
        self.contains(&PointSet::empty(n))
            && self.contains(&PointSet::full(n))
            && self.carrier.iter().all(|a| {
                self.contains(&a.complement())
                    && self
                        .carrier
                        .iter()
                        .all(|b| self.contains(&a.union(b)) && self.contains(&a.intersection(b)))
            })
    }
}

/// `clop(X)`.
pub fn clop_algebra(space: &Space) -> Result<ClopenAlgebra> {
    ClopenAlgebra::of(space)
}
