use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::PointSet;
use crate::error::{Error, Result};

/// Shared handle to an immutable finite space.
pub type Space = Arc<FinSpace>;

/// Upper bound on the number of opens materialized for an explicit topology.
pub const OPEN_FAMILY_CAP: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Topology {
    /// Every subset is open. Never materialized.
    Discrete,
    /// Canonically ordered, duplicate-free open family. Never equal to the full power set.
    Opens(Vec<PointSet>),
}

/// A finite topological space with labelled points `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinSpace {
    name: String,
    labels: Vec<String>,
    topology: Topology,
}

/// JSON form of a space. `opens` absent means discrete.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDescriptor {
    pub name: String,
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn fmt_set(space_labels: &[String], s: &PointSet) -> String {
    let items: Vec<&str> = s.iter().map(|i| space_labels[i].as_str()).collect();
    format!("{{{}}}", items.join(","))
}

impl FinSpace {
    /// Validates `opens` as a topology on `labels`. The family is never completed.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        opens: Vec<Vec<usize>>,
    ) -> Result<Space> {
        check_labels(&labels)?;
        let n = labels.len();
        let mut family = BTreeSet::new();
        for open in &opens {
            let mut s = PointSet::empty(n);
            for &i in open {
                if i >= n {
                    return Err(Error::PointOutOfRange { index: i, size: n });
                }
                s.insert(i);
            }
            family.insert(s);
        }
        let family: Vec<PointSet> = family.into_iter().collect();
        Self::validate_family(&labels, &family)?;
        Ok(Arc::new(Self::from_valid_family(name.into(), labels, family)))
    }

    fn validate_family(labels: &[String], family: &[PointSet]) -> Result<()> {
        let n = labels.len();
        let empty = PointSet::empty(n);
        let full = PointSet::full(n);
        if family.binary_search(&empty).is_err() {
            return Err(Error::NotATopology("the empty set is not open".into()));
        }
        if family.binary_search(&full).is_err() {
            return Err(Error::NotATopology(format!(
                "the full set {} is not open",
                fmt_set(labels, &full)
            )));
        }
        for (i, u) in family.iter().enumerate() {
            for v in &family[i + 1..] {
                let union = u.union(v);
                if family.binary_search(&union).is_err() {
                    return Err(Error::NotATopology(format!(
                        "union of {} and {} is {}, which is missing",
                        fmt_set(labels, u),
                        fmt_set(labels, v),
                        fmt_set(labels, &union)
                    )));
                }
                let meet = u.intersection(v);
                if family.binary_search(&meet).is_err() {
                    return Err(Error::NotATopology(format!(
                        "intersection of {} and {} is {}, which is missing",
                        fmt_set(labels, u),
                        fmt_set(labels, v),
                        fmt_set(labels, &meet)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `family` must already be a sorted, valid topology.
    fn from_valid_family(name: String, labels: Vec<String>, family: Vec<PointSet>) -> FinSpace {
        let n = labels.len();
        let topology = if n < 64 && family.len() as u64 == 1u64 << n {
            Topology::Discrete
        } else {
            Topology::Opens(family)
        };
        FinSpace {
            name,
            labels,
            topology,
        }
    }

    pub fn discrete(name: impl Into<String>, labels: Vec<String>) -> Result<Space> {
        check_labels(&labels)?;
        Ok(Arc::new(FinSpace {
            name: name.into(),
            labels,
            topology: Topology::Discrete,
        }))
    }

    /// The one-point space `1 = {1}`.
    pub fn terminal() -> Space {
        Arc::new(FinSpace {
            name: "1".into(),
            labels: vec!["1".into()],
            topology: Topology::Discrete,
        })
    }

    /// The two-point discrete space `2 = {0, 1}`; index 1 is the point `1`.
    pub fn two() -> Space {
        Arc::new(FinSpace {
            name: "2".into(),
            labels: vec!["0".into(), "1".into()],
            topology: Topology::Discrete,
        })
    }

    pub fn empty() -> Space {
        Arc::new(FinSpace {
            name: "0".into(),
            labels: vec![],
            topology: Topology::Discrete,
        })
    }

    /// Sierpinski space on `{0, 1}` with `{1}` open.
    pub fn sierpinski() -> Space {
        FinSpace::new(
            "S",
            vec!["0".into(), "1".into()],
            vec![vec![], vec![1], vec![0, 1]],
        )
        .expect("sierpinski topology is valid")
    }

    /// Topology generated by `subbasis`: the coarsest one in which every subbasic set is open.
    pub fn generated(
        name: impl Into<String>,
        labels: Vec<String>,
        subbasis: &[PointSet],
    ) -> Result<Space> {
        check_labels(&labels)?;
        let n = labels.len();
        let minimal: Vec<PointSet> = (0..n)
            .map(|p| {
                subbasis
                    .iter()
                    .filter(|s| s.contains(p))
                    .fold(PointSet::full(n), |acc, s| acc.intersection(s))
            })
            .collect();
        Self::from_minimal_neighbourhoods(name.into(), labels, &minimal).map(Arc::new)
    }

    /// Builds the topology whose opens are exactly the unions of the given
    /// minimal neighbourhoods. `minimal[p]` must contain `p`.
    pub(crate) fn from_minimal_neighbourhoods(
        name: String,
        labels: Vec<String>,
        minimal: &[PointSet],
    ) -> Result<FinSpace> {
        let n = labels.len();
        if minimal.iter().enumerate().all(|(p, m)| m.count() == 1 && m.contains(p)) {
            return Ok(FinSpace {
                name,
                labels,
                topology: Topology::Discrete,
            });
        }
        let mut family: HashSet<PointSet> = HashSet::new();
        family.insert(PointSet::empty(n));
        for nb in minimal {
            let grown: Vec<PointSet> = family.iter().map(|u| u.union(nb)).collect();
            family.extend(grown);
            if family.len() > OPEN_FAMILY_CAP {
                return Err(Error::SizeCap {
                    requested: family.len(),
                    cap: OPEN_FAMILY_CAP,
                });
            }
        }
        let mut family: Vec<PointSet> = family.into_iter().collect();
        family.sort();
        Ok(Self::from_valid_family(name, labels, family))
    }

    pub fn from_descriptor(d: &SpaceDescriptor) -> Result<Space> {
        match &d.opens {
            None => FinSpace::discrete(d.name.clone(), d.points.clone()),
            Some(opens) => FinSpace::new(d.name.clone(), d.points.clone(), opens.clone()),
        }
    }

    pub fn descriptor(&self) -> SpaceDescriptor {
        SpaceDescriptor {
            name: self.name.clone(),
            points: self.labels.clone(),
            opens: match &self.topology {
                Topology::Discrete => None,
                Topology::Opens(f) => Some(f.iter().map(|s| s.iter().collect()).collect()),
            },
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same space under another name.
    pub fn renamed(&self, name: impl Into<String>) -> Space {
        Arc::new(FinSpace {
            name: name.into(),
            ..self.clone()
        })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn is_discrete(&self) -> bool {
        matches!(self.topology, Topology::Discrete)
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.size())
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.size())
    }

    pub fn is_open(&self, s: &PointSet) -> bool {
        debug_assert_eq!(s.universe(), self.size());
        match &self.topology {
            Topology::Discrete => true,
            Topology::Opens(f) => f.binary_search(s).is_ok(),
        }
    }

    pub fn is_closed(&self, s: &PointSet) -> bool {
        self.is_open(&s.complement())
    }

    pub fn is_clopen(&self, s: &PointSet) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    /// All opens in canonical order. Fails when the family is too large to list.
    pub fn opens(&self) -> Result<Vec<PointSet>> {
        match &self.topology {
            Topology::Opens(f) => Ok(f.clone()),
            Topology::Discrete => {
                let n = self.size();
                if n >= 64 || (1usize << n) > OPEN_FAMILY_CAP {
                    return Err(Error::SizeCap {
                        requested: n,
                        cap: OPEN_FAMILY_CAP.trailing_zeros() as usize,
                    });
                }
                Ok(PointSet::all_subsets(n).collect())
            }
        }
    }

    /// Smallest open containing `point`.
    pub fn minimal_neighbourhood(&self, point: usize) -> PointSet {
        match &self.topology {
            Topology::Discrete => PointSet::singleton(self.size(), point),
            Topology::Opens(f) => f
                .iter()
                .filter(|u| u.contains(point))
                .fold(self.full_set(), |acc, u| acc.intersection(u)),
        }
    }

    /// Distinct points have disjoint open neighbourhoods. In a finite space
    /// it suffices to compare minimal neighbourhoods.
    pub fn is_hausdorff(&self) -> bool {
        if self.is_discrete() {
            return true;
        }
        let minimal: Vec<PointSet> = (0..self.size())
            .map(|p| self.minimal_neighbourhood(p))
            .collect();
        (0..self.size()).all(|x| (x + 1..self.size()).all(|y| minimal[x].is_disjoint(&minimal[y])))
    }

    /// Finite spaces are always compact.
    pub fn is_compact(&self) -> bool {
        true
    }

    pub fn format_set(&self, s: &PointSet) -> String {
        fmt_set(&self.labels, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn terminal_space() {
        let one = FinSpace::new("1", l(&["p"]), vec![vec![], vec![0]]).unwrap();
        assert_eq!(one.size(), 1);
        assert!(one.is_discrete());
    }

    #[test]
    fn sierpinski_is_accepted() {
        let s = FinSpace::new("S", l(&["0", "1"]), vec![vec![], vec![1], vec![0, 1]]).unwrap();
        assert!(!s.is_discrete());
        assert_eq!(s.opens().unwrap().len(), 3);
    }

    #[test]
    fn missing_full_set_rejected() {
        let err = FinSpace::new("T", l(&["a", "b"]), vec![vec![], vec![0]]).unwrap_err();
        assert!(matches!(err, Error::NotATopology(ref m) if m.contains("full set")), "{err}");
    }

    #[test]
    fn missing_union_reports_witness() {
        let err = FinSpace::new(
            "T",
            l(&["a", "b", "c"]),
            vec![vec![], vec![0], vec![1], vec![0, 1, 2]],
        )
        .unwrap_err();
        match err {
            Error::NotATopology(m) => assert!(m.contains("{a,b}"), "{m}"),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert_eq!(
            FinSpace::discrete("X", l(&["a", "a"])).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn discrete_two_has_four_opens() {
        let two = FinSpace::discrete("2", l(&["0", "1"])).unwrap();
        assert_eq!(two.opens().unwrap().len(), 4);
        let none = FinSpace::discrete("0", vec![]).unwrap();
        assert_eq!(none.opens().unwrap(), vec![PointSet::empty(0)]);
    }

    #[test]
    fn explicit_power_set_normalizes_to_discrete() {
        let s = FinSpace::new("D", l(&["a", "b"]), vec![vec![], vec![0], vec![1], vec![0, 1]])
            .unwrap();
        assert!(s.is_discrete());
    }

    #[test]
    fn hausdorff_examples() {
        assert!(FinSpace::discrete("X", l(&["a", "b", "c"])).unwrap().is_hausdorff());
        assert!(!FinSpace::sierpinski().is_hausdorff());
        assert!(FinSpace::terminal().is_hausdorff());
    }

    #[test]
    fn generated_topology() {
        let n = 3;
        let sub = vec![PointSet::from_mask(n, 0b011), PointSet::from_mask(n, 0b110)];
        let s = FinSpace::generated("G", l(&["a", "b", "c"]), &sub).unwrap();
        let opens = s.opens().unwrap();
        // {a,b}, {b,c}, {b}, union {a,b,c}, empty
        assert_eq!(opens.len(), 5);
        assert!(s.is_open(&PointSet::from_mask(n, 0b010)));
    }

    #[test]
    fn descriptor_roundtrip() {
        let s = FinSpace::sierpinski();
        assert_eq!(&*FinSpace::from_descriptor(&s.descriptor()).unwrap(), &*s);
        assert!(FinSpace::two().descriptor().opens.is_none());
    }
}
