use std::sync::Arc;

use super::{PointSet, Space, Topology};
use crate::error::{Error, Result};

/// A continuous map between finite spaces, given by its point table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContMap {
    name: String,
    dom: Space,
    cod: Space,
    table: Vec<usize>,
}

impl ContMap {
    /// Validates totality, range and continuity.
    pub fn new(name: impl Into<String>, dom: Space, cod: Space, table: Vec<usize>) -> Result<Self> {
        let map = Self::unchecked(name, dom, cod, table)?;
        map.check_continuity()?;
        Ok(map)
    }

    /// Validates the table shape only. Used where continuity holds by construction.
    pub(crate) fn unchecked(
        name: impl Into<String>,
        dom: Space,
        cod: Space,
        table: Vec<usize>,
    ) -> Result<Self> {
        if table.len() != dom.size() {
            return Err(Error::TableLength {
                expected: dom.size(),
                got: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&t| t >= cod.size()) {
            return Err(Error::PointOutOfRange {
                index: bad,
                size: cod.size(),
            });
        }
        Ok(ContMap {
            name: name.into(),
            dom,
            cod,
            table,
        })
    }

    fn check_continuity(&self) -> Result<()> {
        if self.dom.is_discrete() {
            return Ok(());
        }
        let opens: Vec<PointSet> = match self.cod.topology() {
            // Preimages commute with unions, so singletons suffice.
            Topology::Discrete => (0..self.cod.size())
                .map(|p| PointSet::singleton(self.cod.size(), p))
                .collect(),
            Topology::Opens(f) => f.clone(),
        };
        for open in opens {
            let pre = self.preimage(&open);
            if !self.dom.is_open(&pre) {
                return Err(Error::NotContinuous {
                    map: self.name.clone(),
                    open: open.iter().collect(),
                    preimage: pre.iter().collect(),
                });
            }
        }
        Ok(())
    }

    pub fn identity(space: &Space) -> Self {
        ContMap {
            name: format!("id_{}", space.name()),
            dom: space.clone(),
            cod: space.clone(),
            table: (0..space.size()).collect(),
        }
    }

    /// Constant map; fails if `cod` is empty while `dom` is not.
    pub fn constant(dom: &Space, cod: &Space, point: usize) -> Result<Self> {
        ContMap::unchecked(
            format!("const_{}", point),
            dom.clone(),
            cod.clone(),
            vec![point; dom.size()],
        )
    }

    /// The unique map into the terminal space.
    pub fn to_terminal(dom: &Space, terminal: &Space) -> Result<Self> {
        if terminal.size() != 1 {
            return Err(Error::Type(format!("`{}` is not a one-point space", terminal.name())));
        }
        ContMap::constant(dom, terminal, 0).map(|m| m.renamed(format!("!_{}", dom.name())))
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dom(&self) -> &Space {
        &self.dom
    }

    pub fn cod(&self) -> &Space {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, point: usize) -> usize {
        self.table[point]
    }

    pub fn image(&self, s: &PointSet) -> PointSet {
        PointSet::from_indices(self.cod.size(), s.iter().map(|p| self.table[p]))
    }

    pub fn preimage(&self, s: &PointSet) -> PointSet {
        PointSet::from_indices(
            self.dom.size(),
            (0..self.dom.size()).filter(|&p| s.contains(self.table[p])),
        )
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ContMap) -> Result<ContMap> {
        if !same_space(&self.cod, &other.dom) {
            return Err(Error::SpaceMismatch {
                expected: self.cod.name().to_string(),
                found: other.dom.name().to_string(),
            });
        }
        Ok(ContMap {
            name: format!("{}∘{}", other.name, self.name),
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            table: self.table.iter().map(|&p| other.table[p]).collect(),
        })
    }

    /// Image of every open is open.
    pub fn is_open_map(&self) -> bool {
        if self.cod.is_discrete() {
            return true;
        }
        if self.dom.is_discrete() {
            // Images commute with unions: singleton images decide it.
            return (0..self.dom.size())
                .all(|p| self.cod.is_open(&PointSet::singleton(self.cod.size(), self.table[p])));
        }
        match self.dom.opens() {
            Ok(opens) => opens.iter().all(|u| self.cod.is_open(&self.image(u))),
            Err(_) => false,
        }
    }

    /// Image of every closed set is closed.
    pub fn is_closed_map(&self) -> bool {
        if self.cod.is_discrete() {
            return true;
        }
        if self.dom.is_discrete() {
            return (0..self.dom.size()).all(|p| {
                self.cod
                    .is_closed(&PointSet::singleton(self.cod.size(), self.table[p]))
            });
        }
        match self.dom.opens() {
            Ok(opens) => opens
                .iter()
                .all(|u| self.cod.is_closed(&self.image(&u.complement()))),
            Err(_) => false,
        }
    }

    pub fn is_clopen_map(&self) -> bool {
        self.is_open_map() && self.is_closed_map()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = PointSet::empty(self.cod.size());
        for &t in &self.table {
            if seen.contains(t) {
                return false;
            }
            seen.insert(t);
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.size() == self.cod.size() && self.is_injective()
    }

    /// Every map `dom → cod` in lexicographic table order. Continuity is checked per map.
    pub fn all_maps(dom: &Space, cod: &Space) -> impl Iterator<Item = ContMap> {
        let (dom, cod) = (dom.clone(), cod.clone());
        let n = dom.size();
        let m = cod.size();
        let total = if n == 0 {
            1
        } else if m == 0 {
            0
        } else {
            m.checked_pow(n as u32).expect("too many maps to enumerate")
        };
        (0..total).filter_map(move |mut code| {
            let mut table = vec![0; n];
            for slot in table.iter_mut().rev() {
                *slot = code % m.max(1);
                code /= m.max(1);
            }
            ContMap::new(format!("f{:?}", table), dom.clone(), cod.clone(), table).ok()
        })
    }
}

/// Same underlying space: pointer identity, falling back to structural equality.
pub fn same_space(a: &Space, b: &Space) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
