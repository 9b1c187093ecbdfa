//! The predicate functor `clop` on finite spaces and its quantifier adjoints.
//!
//! Reindexing along `f : A → B` is inverse image. Along a clopen map the
//! direct image is left adjoint to it, and `∀_f = ¬ Im_f ¬` is right adjoint.

mod laws;
mod pullback;

pub use laws::{
    check_adjoint_chain, check_adjoint_chain_on, check_beck_chevalley, check_beck_chevalley_on,
    check_forall_fibers, check_functoriality,
    check_hom, describe_map, witness, LawReport, Status, Witness,
};
pub use pullback::{
    beck_chevalley_square, char_function, classifier_square, BeckChevalleySquare,
    ClassifierSquare, PullbackSquare,
};

use crate::error::{Error, Result};
use crate::heyting::{ClopenAlgebra, Predicate};
use crate::topology::{same_space, ContMap};

/// `clop(f) : clop(B) → clop(A)` for `f : A → B`.
#[derive(Debug, Clone)]
pub struct AlgebraHom {
    map: ContMap,
}

impl AlgebraHom {
    pub fn map(&self) -> &ContMap {
        &self.map
    }

    pub fn apply(&self, phi: &Predicate) -> Result<Predicate> {
        if !same_space(phi.space(), self.map.cod()) {
            return Err(Error::SpaceMismatch {
                expected: self.map.cod().name().to_string(),
                found: phi.space().name().to_string(),
            });
        }
        Ok(Predicate::trusted(self.map.dom(), self.map.preimage(phi.extent())))
    }

    /// The algebra on the codomain of `f`.
    pub fn source(&self) -> Result<ClopenAlgebra> {
        ClopenAlgebra::of(self.map.cod())
    }

    /// The algebra on the domain of `f`.
    pub fn target(&self) -> Result<ClopenAlgebra> {
        ClopenAlgebra::of(self.map.dom())
    }
}

/// Inverse image along a continuous map, as a Boolean algebra homomorphism.
pub fn inverse_image(f: &ContMap) -> AlgebraHom {
    AlgebraHom { map: f.clone() }
}

/// Pulls `phi` back along `f`.
pub fn reindex(f: &ContMap, phi: &Predicate) -> Result<Predicate> {
    inverse_image(f).apply(phi)
}

fn require_clopen_map(f: &ContMap, phi: &Predicate) -> Result<()> {
    if !same_space(phi.space(), f.dom()) {
        return Err(Error::SpaceMismatch {
            expected: f.dom().name().to_string(),
            found: phi.space().name().to_string(),
        });
    }
    if !f.is_clopen_map() {
        return Err(Error::NotClopenMap(f.name().to_string()));
    }
    Ok(())
}

/// `∃_f φ`: the direct image `{ f(x) : x ∈ φ }`.
pub fn exists_along(f: &ContMap, phi: &Predicate) -> Result<Predicate> {
    require_clopen_map(f, phi)?;
    Ok(Predicate::trusted(f.cod(), f.image(phi.extent())))
}

/// `∀_f φ = ¬ ∃_f ¬φ`.
pub fn forall_along(f: &ContMap, phi: &Predicate) -> Result<Predicate> {
    Ok(exists_along(f, &phi.neg())?.neg())
}

/// A choice of quantifiers along maps. Law checks are written against this
/// so that a deliberately wrong implementation can be plugged in.
pub trait Quantifiers: Sync {
    fn exists(&self, f: &ContMap, phi: &Predicate) -> Result<Predicate>;
    fn forall(&self, f: &ContMap, phi: &Predicate) -> Result<Predicate>;
}

/// The quantifiers of the clopen tripos.
#[derive(Debug, Clone, Copy, Default)]
pub struct ClopenQuantifiers;

impl Quantifiers for ClopenQuantifiers {
    fn exists(&self, f: &ContMap, phi: &Predicate) -> Result<Predicate> {
        exists_along(f, phi)
    }

    fn forall(&self, f: &ContMap, phi: &Predicate) -> Result<Predicate> {
        forall_along(f, phi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{product, FinSpace, PointSet, Space};

    fn sp(name: &str, labels: &[&str]) -> Space {
        FinSpace::discrete(name, labels.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn inverse_image_examples() {
        let ab = sp("A", &["a", "b"]);
        let uv = sp("U", &["u", "v"]);
        let f = ContMap::new("f", ab.clone(), uv.clone(), vec![0, 0]).unwrap();
        let h = inverse_image(&f);
        let u = Predicate::from_indices(&uv, &[0]).unwrap();
        let v = Predicate::from_indices(&uv, &[1]).unwrap();
        assert!(h.apply(&u).unwrap().is_top());
        assert!(h.apply(&v).unwrap().is_bottom());
        assert!(h.apply(&Predicate::top(&uv)).unwrap().is_top());
        let id = inverse_image(&ContMap::identity(&ab));
        for p in h.target().unwrap().predicates() {
            assert_eq!(id.apply(&p).unwrap(), p);
        }
    }

    #[test]
    fn quantifiers_along_projection() {
        let ab = sp("A", &["a", "b"]);
        let uv = sp("U", &["u", "v"]);
        let p = product(&ab, &uv).unwrap();
        let pi = &p.projections[1];
        // (a,u)=0 (a,v)=1 (b,u)=2 (b,v)=3
        let au = Predicate::from_indices(&p.space, &[0]).unwrap();
        assert_eq!(exists_along(pi, &au).unwrap().extent(), &PointSet::from_mask(2, 0b01));
        assert!(forall_along(pi, &au).unwrap().is_bottom());
        let col_u = Predicate::from_indices(&p.space, &[0, 2]).unwrap();
        assert_eq!(forall_along(pi, &col_u).unwrap().extent(), &PointSet::from_mask(2, 0b01));
        assert!(exists_along(pi, &Predicate::bottom(&p.space)).unwrap().is_bottom());
        assert!(forall_along(pi, &Predicate::top(&p.space)).unwrap().is_top());
    }

    #[test]
    fn identity_quantifiers() {
        let ab = sp("A", &["a", "b"]);
        let id = ContMap::identity(&ab);
        let phi = Predicate::from_indices(&ab, &[1]).unwrap();
        assert_eq!(exists_along(&id, &phi).unwrap(), phi);
        assert_eq!(forall_along(&id, &phi).unwrap(), phi);
    }

    #[test]
    fn empty_fibres_are_universally_true() {
        let a = sp("A", &["a"]);
        let uv = sp("U", &["u", "v"]);
        let f = ContMap::new("f", a.clone(), uv, vec![0]).unwrap();
        let r = forall_along(&f, &Predicate::bottom(&a)).unwrap();
        assert_eq!(r.extent().iter().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn non_clopen_map_rejected() {
        let two = FinSpace::two();
        let s = FinSpace::sierpinski();
        let c = ContMap::new("c", two.clone(), s, vec![0, 0]).unwrap();
        assert_eq!(
            exists_along(&c, &Predicate::top(&two)).unwrap_err(),
            Error::NotClopenMap("c".into())
        );
    }
}
