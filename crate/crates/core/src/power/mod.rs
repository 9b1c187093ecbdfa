//! Weak power objects `PA = (2^A)∞`.
//!
//! Points of `2^A` are maps `A → 2` encoded as bitmasks (bit `i` is the value
//! at point `i`), so point index equals mask. The compactification point `∞`
//! is always the last index of `PA`. Membership is `ev∞⁻¹{1}` where `ev∞`
//! extends evaluation by `0` on `A × {∞}`.

mod laws;

pub use laws::{
    check_beta_law, check_beta_law_on, check_delta_diagonal, check_infinity_extension,
    check_power_shape,
    check_transpose,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heyting::Predicate;
use crate::topology::{
    alexandroff, product_all, product_with_cap, same_space, Compactification, ContMap, FinSpace,
    PointSet, Product, Space, DEFAULT_POINT_CAP,
};
use crate::tripos::{forall_along, reindex};

/// Serialized form of a point of `PA`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PowerPoint {
    Mask { mask: u64 },
    Infinity { infinity: bool },
}

fn require_discrete(a: &Space) -> Result<()> {
    if a.is_discrete() {
        Ok(())
    } else {
        Err(Error::NotDiscreteBase(a.name().to_string()))
    }
}

fn function_count(a: &Space, cap: usize) -> Result<usize> {
    let n = a.size();
    if n >= usize::BITS as usize - 1 || (1usize << n) > cap {
        return Err(Error::SizeCap {
            requested: if n < usize::BITS as usize - 1 { 1 << n } else { usize::MAX },
            cap,
        });
    }
    Ok(1 << n)
}

/// `2^A`: discrete, one point per map `A → 2`, in mask order.
pub fn two_power(a: &Space) -> Result<Space> {
    two_power_with_cap(a, DEFAULT_POINT_CAP)
}

pub fn two_power_with_cap(a: &Space, cap: usize) -> Result<Space> {
    require_discrete(a)?;
    let count = function_count(a, cap)?;
    let labels = (0..count)
        .map(|m| a.format_set(&PointSet::from_mask(a.size(), m as u64)))
        .collect();
    FinSpace::discrete(format!("2^{}", a.name()), labels)
}

/// Recomputes the compact-open topology on the maps `A → 2` from its
/// subbasic sets `C(K, U) = { f : f[K] ⊆ U }`, `K` compact in `A`, `U` open in `2`.
/// Points are in mask order, as in [`two_power`].
pub fn compact_open_topology(a: &Space) -> Result<Space> {
    let count = function_count(a, DEFAULT_POINT_CAP)?;
    if a.size() > 12 {
        return Err(Error::SizeCap {
            requested: a.size(),
            cap: 12,
        });
    }
    let n = a.size();
    let two = FinSpace::two();
    let maps: Vec<u64> = (0..count as u64)
        .filter(|&m| {
            let table = (0..n).map(|i| (m >> i & 1) as usize).collect();
            ContMap::new("f", a.clone(), two.clone(), table).is_ok()
        })
        .collect();
    let opens_two = two.opens()?;
    let mut subbasis = Vec::new();
    // Every subset of a finite space is compact.
    for k in PointSet::all_subsets(n) {
        debug_assert!(a.is_compact());
        for u in &opens_two {
            let members = maps.iter().enumerate().filter(|(_, &f)| {
                k.iter().all(|i| u.contains((f >> i & 1) as usize))
            });
            subbasis.push(PointSet::from_indices(maps.len(), members.map(|(j, _)| j)));
        }
    }
    let labels = maps
        .iter()
        .map(|&m| a.format_set(&PointSet::from_mask(n, m)))
        .collect();
    FinSpace::generated(format!("C({},2)", a.name()), labels, &subbasis)
}

/// `ev : A × 2^A → 2`, `ev(a, f) = f(a)`.
pub fn evaluation_map(a: &Space) -> Result<(Product, ContMap)> {
    let fs = two_power(a)?;
    evaluation_on(a, &fs, DEFAULT_POINT_CAP)
}

fn evaluation_on(a: &Space, fs: &Space, cap: usize) -> Result<(Product, ContMap)> {
    let prod = product_with_cap(a, fs, cap)?;
    let table = (0..prod.space.size())
        .map(|p| {
            let c = prod.coords(p);
            c[1] >> c[0] & 1
        })
        .collect();
    let ev = ContMap::new("ev", prod.space.clone(), FinSpace::two(), table)?;
    Ok((prod, ev))
}

fn transpose_into(a: &Space, b: &Space, phi: &Predicate, fs: &Space) -> Result<ContMap> {
    let ab = product_with_cap(a, b, usize::MAX)?;
    if !same_space(phi.space(), &ab.space) {
        return Err(Error::SpaceMismatch {
            expected: ab.space.name().to_string(),
            found: phi.space().name().to_string(),
        });
    }
    let table = (0..b.size())
        .map(|y| {
            (0..a.size())
                .filter(|&x| phi.contains(ab.index(&[x, y])))
                .fold(0usize, |m, x| m | 1 << x)
        })
        .collect();
    ContMap::new(format!("χ̄{}", phi), b.clone(), fs.clone(), table)
}

/// The exponential transpose `χ̄_φ : B → 2^A` of `χ_φ : A × B → 2`.
pub fn transpose(a: &Space, b: &Space, phi: &Predicate) -> Result<ContMap> {
    require_discrete(b)?;
    let fs = two_power(a)?;
    transpose_into(a, b, phi, &fs)
}

/// `f∞ : A × B∞ → 2`, equal to `f` on `A × B` and `0` at every `(a, ∞)`.
pub fn extend_infinity(
    f: &ContMap,
    a: &Space,
    comp: &Compactification,
    cap: usize,
) -> Result<(Product, ContMap)> {
    let b = &comp.tag.base;
    let ab = product_with_cap(a, b, cap)?;
    if !same_space(f.dom(), &ab.space) || f.cod().size() != 2 {
        return Err(Error::Type(format!(
            "extension needs a map {} → 2, got {} → {}",
            ab.space.name(),
            f.dom().name(),
            f.cod().name()
        )));
    }
    let extended = product_with_cap(a, &comp.space, cap)?;
    let table = (0..extended.space.size())
        .map(|p| {
            let c = extended.coords(p);
            if c[1] == comp.tag.infinity {
                0
            } else {
                // The inclusion is the identity on indices below ∞.
                f.apply(ab.index(&[c[0], c[1]]))
            }
        })
        .collect();
    let ext = ContMap::new(
        format!("{}∞", f.name()),
        extended.space.clone(),
        f.cod().clone(),
        table,
    )?;
    Ok((extended, ext))
}

/// The weak power object of a discrete space and everything used to build it.
#[derive(Debug, Clone)]
pub struct PowerObject {
    pub base: Space,
    pub function_space: Space,
    /// `A × 2^A` and `ev` on it.
    pub evaluation: (Product, ContMap),
    /// `(2^A)∞` with the inclusion of `2^A`.
    pub compactification: Compactification,
    /// `A × PA`, the space carrying membership.
    pub membership_space: Product,
    pub ev_infinity: ContMap,
    pub membership: Predicate,
}

impl PowerObject {
    pub fn new(a: &Space) -> Result<Self> {
        Self::with_cap(a, DEFAULT_POINT_CAP)
    }

    pub fn with_cap(a: &Space, cap: usize) -> Result<Self> {
        let function_space = two_power_with_cap(a, cap)?;
        let evaluation = evaluation_on(a, &function_space, cap)?;
        let compactification = alexandroff(&function_space)?;
        let space = compactification
            .space
            .renamed(format!("P{}", a.name()));
        let compactification = Compactification {
            inclusion: ContMap::new(
                compactification.inclusion.name().to_string(),
                function_space.clone(),
                space.clone(),
                compactification.inclusion.table().to_vec(),
            )?,
            space,
            tag: compactification.tag,
        };
        let (membership_space, ev_infinity) =
            extend_infinity(&evaluation.1, a, &compactification, cap)?;
        let membership = Predicate::new(
            &membership_space.space,
            ev_infinity.preimage(&PointSet::singleton(2, 1)),
        )?;
        Ok(PowerObject {
            base: a.clone(),
            function_space,
            evaluation,
            compactification,
            membership_space,
            ev_infinity,
            membership,
        })
    }

    /// `PA`.
    pub fn power(&self) -> &Space {
        &self.compactification.space
    }

    pub fn infinity(&self) -> usize {
        self.compactification.tag.infinity
    }

    /// The point of `PA` naming a predicate on `A`.
    pub fn point_of(&self, phi: &Predicate) -> Result<usize> {
        if !same_space(phi.space(), &self.base) {
            return Err(Error::SpaceMismatch {
                expected: self.base.name().to_string(),
                found: phi.space().name().to_string(),
            });
        }
        let mask = phi.extent().iter().fold(0usize, |m, x| m | 1 << x);
        Ok(self.compactification.inclusion.apply(mask))
    }

    /// The predicate a point of `PA` names; `None` for `∞`.
    pub fn predicate_of_point(&self, point: usize) -> Option<Predicate> {
        if point >= self.infinity() {
            return None;
        }
        let extent = PointSet::from_indices(
            self.base.size(),
            (0..self.base.size()).filter(|&x| point >> x & 1 == 1),
        );
        Some(Predicate::trusted(&self.base, extent))
    }

    pub fn serialize_point(&self, point: usize) -> PowerPoint {
        if point == self.infinity() {
            PowerPoint::Infinity { infinity: true }
        } else {
            PowerPoint::Mask { mask: point as u64 }
        }
    }

    /// `{γ} = i ∘ χ̄_γ : Y → PA` for `γ` on `A × Y`.
    pub fn name(&self, y: &Space, gamma: &Predicate) -> Result<ContMap> {
        require_discrete(y)?;
        let bar = transpose_into(&self.base, y, gamma, &self.function_space)?;
        Ok(bar
            .then(&self.compactification.inclusion)?
            .renamed(format!("{{{}}}", gamma)))
    }
}

/// Equality on `X` from membership alone:
/// `δ_X = ∀_{⟨π1,π2⟩}(⟨π1,π3⟩*∈_X ↔ ⟨π2,π3⟩*∈_X)` over `X × X × PX`.
pub fn equality_predicate(x: &Space) -> Result<Predicate> {
    equality_predicate_with(&PowerObject::new(x)?, DEFAULT_POINT_CAP)
}

pub fn equality_predicate_with(bundle: &PowerObject, cap: usize) -> Result<Predicate> {
    let x = &bundle.base;
    let px = bundle.power();
    let xxp = product_all(&[x.clone(), x.clone(), px.clone()], cap)?;
    let xx = product_with_cap(x, x, cap)?;
    let [p1, p2, p3] = [0, 1, 2].map(|i| xxp.projections[i].clone());
    let pair13 = bundle.membership_space.tuple(&[p1.clone(), p3.clone()])?;
    let pair23 = bundle.membership_space.tuple(&[p2.clone(), p3])?;
    let pair12 = xx.tuple(&[p1, p2])?;
    let left = reindex(&pair13, &bundle.membership)?;
    let right = reindex(&pair23, &bundle.membership)?;
    forall_along(&pair12, &left.iff(&right)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize) -> Space {
        FinSpace::discrete("A", (0..n).map(|i| format!("a{i}")).collect()).unwrap()
    }

    #[test]
    fn two_power_sizes() {
        assert_eq!(two_power(&FinSpace::empty()).unwrap().size(), 1);
        let t = two_power(&sp(2)).unwrap();
        assert_eq!(t.size(), 4);
        assert!(t.is_discrete());
        assert_eq!(t.label(2), "{a1}");
        assert!(matches!(
            two_power(&FinSpace::sierpinski()),
            Err(Error::NotDiscreteBase(_))
        ));
        assert!(matches!(two_power(&sp(13)), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn compact_open_is_discrete_at_two() {
        let co = compact_open_topology(&sp(2)).unwrap();
        assert_eq!(co.size(), 4);
        assert!(co.is_discrete());
    }

    #[test]
    fn evaluation_bits() {
        let (prod, ev) = evaluation_map(&sp(2)).unwrap();
        assert_eq!(ev.apply(prod.index(&[1, 0b10])), 1);
        assert_eq!(ev.apply(prod.index(&[0, 0b10])), 0);
        assert_eq!(ev.apply(prod.index(&[0, 0b11])), 1);
        assert_eq!(ev.apply(prod.index(&[1, 0b00])), 0);
    }

    #[test]
    fn transpose_example() {
        let a = sp(2);
        let b = FinSpace::discrete("B", vec!["b".into()]).unwrap();
        let ab = product_with_cap(&a, &b, 100).unwrap();
        let phi = Predicate::from_indices(&ab.space, &[1]).unwrap();
        let t = transpose(&a, &b, &phi).unwrap();
        assert_eq!(t.table(), &[0b10]);
        assert_eq!(transpose(&a, &b, &Predicate::bottom(&ab.space)).unwrap().table(), &[0]);
        assert_eq!(transpose(&a, &b, &Predicate::top(&ab.space)).unwrap().table(), &[0b11]);
    }

    #[test]
    fn power_object_shapes() {
        let e = PowerObject::new(&FinSpace::empty()).unwrap();
        assert_eq!(e.power().size(), 2);
        assert_eq!(e.membership.space().size(), 0);
        let p = PowerObject::new(&sp(2)).unwrap();
        assert_eq!(p.power().size(), 5);
        assert!(p.power().is_discrete());
        assert_eq!(p.membership.extent().count(), 4);
        for a in 0..2 {
            let at_inf = p.membership_space.index(&[a, p.infinity()]);
            assert!(!p.membership.contains(at_inf));
        }
        assert_eq!(p.serialize_point(4), PowerPoint::Infinity { infinity: true });
        assert_eq!(p.serialize_point(3), PowerPoint::Mask { mask: 3 });
    }

    #[test]
    fn names_of_extremes() {
        let p = PowerObject::new(&sp(2)).unwrap();
        let y = FinSpace::discrete("Y", vec!["y0".into(), "y1".into()]).unwrap();
        let xy = product_with_cap(&p.base, &y, 100).unwrap();
        let none = p.name(&y, &Predicate::bottom(&xy.space)).unwrap();
        assert_eq!(none.table(), &[0, 0]);
        let all = p.name(&y, &Predicate::top(&xy.space)).unwrap();
        assert_eq!(all.table(), &[3, 3]);
    }

    #[test]
    fn delta_small_cases() {
        assert!(equality_predicate(&FinSpace::empty()).unwrap().is_bottom());
        assert!(equality_predicate(&FinSpace::terminal()).unwrap().is_top());
        let d = equality_predicate(&sp(2)).unwrap();
        // (a0,a0)=0, (a1,a1)=3
        assert_eq!(d.extent().iter().collect::<Vec<_>>(), vec![0, 3]);
    }
}
