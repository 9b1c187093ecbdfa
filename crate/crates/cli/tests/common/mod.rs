// Shared fixture: quantifiers with ∀ replaced by the direct image.
use kh_tripos::tripos::{exists_along, Quantifiers};
use kh_tripos::{ContMap, Predicate, Result};

pub struct ImageForall;

impl Quantifiers for ImageForall {
    fn exists(&self, f: &ContMap, phi: &Predicate) -> Result<Predicate> {
        exists_along(f, phi)
    }

    fn forall(&self, f: &ContMap, phi: &Predicate) -> Result<Predicate> {
        exists_along(f, phi)
    }
}
