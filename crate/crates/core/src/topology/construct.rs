use std::collections::BTreeSet;
use std::sync::Arc;

use super::{ContMap, FinSpace, PointSet, Space, Topology};
use crate::error::{Error, Result};

/// Default cap on the number of points of any constructed space.
pub const DEFAULT_POINT_CAP: usize = 4096;

/// An n-ary product with its projections. Points are ordered left-major:
/// the last factor varies fastest.
#[derive(Debug, Clone)]
pub struct Product {
    pub space: Space,
    pub factors: Vec<Space>,
    pub projections: Vec<ContMap>,
}

impl Product {
    pub fn index(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.factors.len());
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, f)| acc * f.size() + c)
    }

    pub fn coords(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index % f.size();
            index /= f.size();
        }
        out
    }

    /// The pairing `⟨f1, …, fn⟩ : Z → ∏ Xi`.
    pub fn tuple(&self, maps: &[ContMap]) -> Result<ContMap> {
        if maps.len() != self.factors.len() {
            return Err(Error::Type(format!(
                "tuple of {} maps into a product of {} factors",
                maps.len(),
                self.factors.len()
            )));
        }
        let dom = match maps.first() {
            Some(m) => m.dom().clone(),
            None => {
                return Err(Error::Type(
                    "empty tuple needs an explicit domain; use ContMap::to_terminal".into(),
                ))
            }
        };
        for (m, f) in maps.iter().zip(&self.factors) {
            if !super::same_space(m.dom(), &dom) {
                return Err(Error::SpaceMismatch {
                    expected: dom.name().into(),
                    found: m.dom().name().into(),
                });
            }
            if !super::same_space(m.cod(), f) {
                return Err(Error::SpaceMismatch {
                    expected: f.name().into(),
                    found: m.cod().name().into(),
                });
            }
        }
        let table = (0..dom.size())
            .map(|p| {
                let coords: Vec<usize> = maps.iter().map(|m| m.apply(p)).collect();
                self.index(&coords)
            })
            .collect();
        let name = format!(
            "⟨{}⟩",
            maps.iter().map(|m| m.name()).collect::<Vec<_>>().join(",")
        );
        ContMap::unchecked(name, dom, self.space.clone(), table)
    }

    /// `f1 × … × fn` for maps out of this product's factors into `target`'s factors.
    pub fn map_factors(&self, maps: &[ContMap], target: &Product) -> Result<ContMap> {
        let components: Vec<ContMap> = self
            .projections
            .iter()
            .zip(maps)
            .map(|(p, f)| p.then(f))
            .collect::<Result<_>>()?;
        let m = target.tuple(&components)?;
        Ok(m.renamed(
            maps.iter()
                .map(|m| m.name())
                .collect::<Vec<_>>()
                .join("×"),
        ))
    }
}

/// Binary product `X × Y`, point `(x, y)` at index `ix·|Y| + iy`.
pub fn product(x: &Space, y: &Space) -> Result<Product> {
    product_all(&[x.clone(), y.clone()], DEFAULT_POINT_CAP)
}

pub fn product_with_cap(x: &Space, y: &Space, cap: usize) -> Result<Product> {
    product_all(&[x.clone(), y.clone()], cap)
}

/// Product of any number of factors; the empty product is a one-point space.
pub fn product_all(factors: &[Space], cap: usize) -> Result<Product> {
    let mut size: usize = 1;
    for f in factors {
        size = size.checked_mul(f.size()).ok_or(Error::SizeCap {
            requested: usize::MAX,
            cap,
        })?;
    }
    if size > cap {
        return Err(Error::SizeCap {
            requested: size,
            cap,
        });
    }
    let name = if factors.is_empty() {
        "1".to_string()
    } else {
        factors
            .iter()
            .map(|f| f.name())
            .collect::<Vec<_>>()
            .join("×")
    };
    let mut labels = Vec::with_capacity(size);
    let mut coords_of = Vec::with_capacity(size);
    for idx in 0..size {
        let mut rem = idx;
        let mut coords = vec![0; factors.len()];
        for (slot, f) in coords.iter_mut().zip(factors).rev() {
            *slot = rem % f.size();
            rem /= f.size();
        }
        let parts: Vec<&str> = coords
            .iter()
            .zip(factors)
            .map(|(&c, f)| f.label(c))
            .collect();
        labels.push(format!("({})", parts.join(",")));
        coords_of.push(coords);
    }

    let space = if factors.iter().all(|f| f.is_discrete()) {
        FinSpace::discrete(name, labels)?
    } else {
        let minimal_factor: Vec<Vec<PointSet>> = factors
            .iter()
            .map(|f| (0..f.size()).map(|p| f.minimal_neighbourhood(p)).collect())
            .collect();
        let minimal: Vec<PointSet> = coords_of
            .iter()
            .map(|coords| {
                PointSet::from_indices(
                    size,
                    (0..size).filter(|&q| {
                        coords_of[q]
                            .iter()
                            .enumerate()
                            .all(|(k, &c)| minimal_factor[k][coords[k]].contains(c))
                    }),
                )
            })
            .collect();
        Arc::new(FinSpace::from_minimal_neighbourhoods(name, labels, &minimal)?)
    };

    let projections = factors
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let table = coords_of.iter().map(|c| c[k]).collect();
            ContMap::unchecked(format!("π{}", k + 1), space.clone(), f.clone(), table)
        })
        .collect::<Result<_>>()?;
    Ok(Product {
        space,
        factors: factors.to_vec(),
        projections,
    })
}

/// `S` with the subspace topology, and its inclusion into `X`.
pub fn subspace(x: &Space, s: &PointSet) -> Result<(Space, ContMap)> {
    if s.universe() != x.size() {
        return Err(Error::PointOutOfRange {
            index: s.universe(),
            size: x.size(),
        });
    }
    let members: Vec<usize> = s.iter().collect();
    let labels: Vec<String> = members.iter().map(|&p| x.label(p).to_string()).collect();
    let name = format!("{}|{}", x.name(), x.format_set(s));
    let sub = match x.topology() {
        Topology::Discrete => FinSpace::discrete(name, labels)?,
        Topology::Opens(family) => {
            let traces: BTreeSet<Vec<usize>> = family
                .iter()
                .map(|u| {
                    members
                        .iter()
                        .enumerate()
                        .filter(|(_, &p)| u.contains(p))
                        .map(|(i, _)| i)
                        .collect()
                })
                .collect();
            FinSpace::new(name, labels, traces.into_iter().collect())?
        }
    };
    let inclusion = ContMap::new(format!("⌊{}⌋", x.format_set(s)), sub.clone(), x.clone(), members)?;
    Ok((sub, inclusion))
}

/// Records which point of a compactified space is the added point `∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactificationTag {
    pub base: Space,
    pub infinity: usize,
}

#[derive(Debug, Clone)]
pub struct Compactification {
    pub space: Space,
    pub inclusion: ContMap,
    pub tag: CompactificationTag,
}

/// One-point compactification `B∞`. The new point is the last index.
///
/// Opens are the opens of `B` together with every `V ∋ ∞` whose complement
/// is closed and compact in `B`; compactness is automatic here.
pub fn alexandroff(b: &Space) -> Result<Compactification> {
    let n = b.size();
    let mut infinity_label = "∞".to_string();
    while b.index_of(&infinity_label).is_some() {
        infinity_label.push('\'');
    }
    let mut labels = b.labels().to_vec();
    labels.push(infinity_label);
    let name = format!("{}∞", b.name());
    let space = match b.topology() {
        Topology::Discrete => FinSpace::discrete(name, labels)?,
        Topology::Opens(family) => {
            let mut opens: Vec<Vec<usize>> = family.iter().map(|u| u.iter().collect()).collect();
            for closed in family.iter().map(|u| u.complement()) {
                debug_assert!(b.is_closed(&closed) && b.is_compact());
                let v: Vec<usize> = closed.complement().iter().chain([n]).collect();
                opens.push(v);
            }
            FinSpace::new(name, labels, opens)?
        }
    };
    let inclusion = ContMap::new(
        format!("i_{}", b.name()),
        b.clone(),
        space.clone(),
        (0..n).collect(),
    )?;
    Ok(Compactification {
        space,
        inclusion,
        tag: CompactificationTag {
            base: b.clone(),
            infinity: n,
        },
    })
}

/// Every topology on `n ≤ 4` labelled points, discrete included.
pub fn all_topologies(n: usize) -> Vec<Space> {
    assert!(n <= 4, "topology enumeration is limited to 4 points");
    let full: u32 = (1u32 << n) - 1;
    // Candidate members other than ∅ and the full set.
    let middle: Vec<u32> = (1..full).collect();
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut out = Vec::new();
    for choice in 0u64..(1u64 << middle.len()) {
        let mut fam: Vec<u32> = vec![0];
        fam.extend(
            middle
                .iter()
                .enumerate()
                .filter(|(i, _)| choice >> i & 1 == 1)
                .map(|(_, &m)| m),
        );
        if full != 0 {
            fam.push(full);
        }
        let member = |m: u32| fam.contains(&m);
        let closed = fam
            .iter()
            .all(|&a| fam.iter().all(|&b| member(a | b) && member(a & b)));
        if closed {
            let opens = fam
                .iter()
                .map(|&m| (0..n).filter(|i| m >> i & 1 == 1).collect())
                .collect();
            out.push(
                FinSpace::new(format!("T{}_{}", n, out.len()), labels.clone(), opens)
                    .expect("enumerated family is a topology"),
            );
        }
    }
    out
}
