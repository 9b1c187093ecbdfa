//! Exhaustive law checkers. Each returns a [`LawReport`] whose witness, on
//! failure, is the first violation in canonical enumeration order.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{inverse_image, pullback::BeckChevalleySquare, reindex, Quantifiers};
use crate::error::Result;
use crate::heyting::{ClopenAlgebra, Predicate};
use crate::topology::ContMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

pub type Witness = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub status: Status,
    pub cases: u64,
    /// Serialized as `{}` when the law passes.
    #[serde(serialize_with = "witness_or_empty")]
    pub witness: Option<Witness>,
}

fn witness_or_empty<S: serde::Serializer>(w: &Option<Witness>, s: S) -> std::result::Result<S::Ok, S::Error> {
    w.clone().unwrap_or_default().serialize(s)
}

impl LawReport {
    pub fn pass(law: impl Into<String>, cases: u64) -> Self {
        LawReport {
            law: law.into(),
            status: Status::Pass,
            cases,
            witness: None,
        }
    }

    pub fn fail(law: impl Into<String>, cases: u64, witness: Witness) -> Self {
        LawReport {
            law: law.into(),
            status: Status::Fail,
            cases,
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Folds another report for the same law into this one, keeping the first failure.
    pub fn absorb(&mut self, other: LawReport) {
        self.cases += other.cases;
        if self.passed() && !other.passed() {
            self.status = Status::Fail;
            self.witness = other.witness;
        }
    }
}

pub fn witness<const N: usize>(entries: [(&str, String); N]) -> Witness {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

pub fn describe_map(f: &ContMap) -> String {
    let pairs: Vec<String> = f
        .table()
        .iter()
        .enumerate()
        .map(|(x, &y)| format!("{}↦{}", f.dom().label(x), f.cod().label(y)))
        .collect();
    format!("{}: {} → {} [{}]", f.name(), f.dom().name(), f.cod().name(), pairs.join(", "))
}

/// Both Galois connections of `∃_f ⊣ f* ⊣ ∀_f`, over every pair of predicates.
pub fn check_adjoint_chain(f: &ContMap, q: &dyn Quantifiers) -> Result<LawReport> {
    let dom: Vec<Predicate> = ClopenAlgebra::of(f.dom())?.predicates().collect();
    let cod: Vec<Predicate> = ClopenAlgebra::of(f.cod())?.predicates().collect();
    check_adjoint_chain_on(f, q, &dom, &cod)
}

/// The adjoint chain restricted to the given `φ` on the domain and `ψ` on the codomain.
pub fn check_adjoint_chain_on(
    f: &ContMap,
    q: &dyn Quantifiers,
    phis: &[Predicate],
    psis: &[Predicate],
) -> Result<LawReport> {
    const LAW: &str = "adjoint-chain";
    let hom = inverse_image(f);
    let mut cases = 0;
    for phi in phis {
        let ex = q.exists(f, phi)?;
        let all = q.forall(f, phi)?;
        for psi in psis {
            cases += 1;
            let pulled = hom.apply(psi)?;
            let left = ex.leq(psi)? == phi.leq(&pulled)?;
            let right = pulled.leq(phi)? == psi.leq(&all)?;
            if !(left && right) {
                let side = if left { "forall" } else { "exists" };
                return Ok(LawReport::fail(
                    LAW,
                    cases,
                    witness([
                        ("map", describe_map(f)),
                        ("phi", phi.to_string()),
                        ("psi", psi.to_string()),
                        ("adjoint", side.to_string()),
                    ]),
                ));
            }
        }
    }
    Ok(LawReport::pass(LAW, cases))
}

/// `y ∈ ∀_f φ` iff every preimage of `y` lies in `φ`, checked pointwise.
pub fn check_forall_fibers(f: &ContMap, q: &dyn Quantifiers) -> Result<LawReport> {
    const LAW: &str = "forall-fibers";
    let dom = ClopenAlgebra::of(f.dom())?;
    let mut cases = 0;
    for phi in dom.predicates() {
        cases += 1;
        let all = q.forall(f, &phi)?;
        for y in 0..f.cod().size() {
            let fibre_inside = (0..f.dom().size())
                .filter(|&x| f.apply(x) == y)
                .all(|x| phi.contains(x));
            if fibre_inside != all.contains(y) {
                return Ok(LawReport::fail(
                    LAW,
                    cases,
                    witness([
                        ("map", describe_map(f)),
                        ("phi", phi.to_string()),
                        ("point", f.cod().label(y).to_string()),
                    ]),
                ));
            }
        }
    }
    Ok(LawReport::pass(LAW, cases))
}

/// Inverse image preserves `⊤, ⊥, ∧, ∨, ¬, →`.
pub fn check_hom(f: &ContMap) -> Result<LawReport> {
    const LAW: &str = "inverse-image-hom";
    let hom = inverse_image(f);
    let source = ClopenAlgebra::of(f.cod())?;
    let target = ClopenAlgebra::of(f.dom())?;
    let mut cases = 1;
    let top_ok = hom.apply(&Predicate::top(f.cod()))?.is_top();
    let bottom_ok = hom.apply(&Predicate::bottom(f.cod()))?.is_bottom();
    if !(top_ok && bottom_ok) {
        return Ok(LawReport::fail(
            LAW,
            cases,
            witness([("map", describe_map(f)), ("operation", "bounds".into())]),
        ));
    }
    for a in source.predicates() {
        let ha = hom.apply(&a)?;
        if !target.contains(ha.extent()) {
            return Ok(LawReport::fail(
                LAW,
                cases,
                witness([("map", describe_map(f)), ("operation", "clopen".into()), ("phi", a.to_string())]),
            ));
        }
        if hom.apply(&a.neg())? != ha.neg() {
            return Ok(LawReport::fail(
                LAW,
                cases,
                witness([("map", describe_map(f)), ("operation", "neg".into()), ("phi", a.to_string())]),
            ));
        }
        for b in source.predicates() {
            cases += 1;
            let hb = hom.apply(&b)?;
            let checks = [
                ("meet", hom.apply(&a.meet(&b)?)? == ha.meet(&hb)?),
                ("join", hom.apply(&a.join(&b)?)? == ha.join(&hb)?),
                ("implies", hom.apply(&a.implies(&b)?)? == ha.implies(&hb)?),
            ];
            if let Some((op, _)) = checks.iter().find(|(_, ok)| !ok) {
                return Ok(LawReport::fail(
                    LAW,
                    cases,
                    witness([
                        ("map", describe_map(f)),
                        ("operation", op.to_string()),
                        ("phi", a.to_string()),
                        ("psi", b.to_string()),
                    ]),
                ));
            }
        }
    }
    Ok(LawReport::pass(LAW, cases))
}

/// `(g∘f)* = f*∘g*` on every predicate of the final codomain, and `id* = id`.
pub fn check_functoriality(f: &ContMap, g: &ContMap) -> Result<LawReport> {
    const LAW: &str = "functoriality";
    let gf = f.then(g)?;
    let id = ContMap::identity(f.dom());
    let mut cases = 0;
    for phi in ClopenAlgebra::of(g.cod())?.predicates() {
        cases += 1;
        let composite = reindex(&gf, &phi)?;
        let stepwise = reindex(f, &reindex(g, &phi)?)?;
        if composite != stepwise || reindex(&id, &composite)? != composite {
            return Ok(LawReport::fail(
                LAW,
                cases,
                witness([
                    ("f", describe_map(f)),
                    ("g", describe_map(g)),
                    ("phi", phi.to_string()),
                ]),
            ));
        }
    }
    Ok(LawReport::pass(LAW, cases))
}

/// Both Beck-Chevalley equalities for every predicate on `X×Δ`.
pub fn check_beck_chevalley(sq: &BeckChevalleySquare, q: &dyn Quantifiers) -> Result<LawReport> {
    let phis: Vec<Predicate> = ClopenAlgebra::of(&sq.x_delta.space)?.predicates().collect();
    check_beck_chevalley_on(sq, q, &phis)
}

/// Beck-Chevalley for the given predicates on `X×Δ`.
pub fn check_beck_chevalley_on(
    sq: &BeckChevalleySquare,
    q: &dyn Quantifiers,
    phis: &[Predicate],
) -> Result<LawReport> {
    const LAW: &str = "beck-chevalley";
    let s = &sq.square;
    let mut cases = 0;
    for phi in phis {
        cases += 1;
        let pulled = reindex(&s.left, phi)?;
        let sides = [
            (
                "exists",
                q.exists(&s.top, &pulled)?,
                reindex(&s.right, &q.exists(&s.bottom, phi)?)?,
            ),
            (
                "forall",
                q.forall(&s.top, &pulled)?,
                reindex(&s.right, &q.forall(&s.bottom, phi)?)?,
            ),
        ];
        for (side, lhs, rhs) in sides {
            if lhs != rhs {
                return Ok(LawReport::fail(
                    LAW,
                    cases,
                    witness([
                        ("X", sq.x.name().to_string()),
                        ("k", describe_map(&sq.k)),
                        ("phi", phi.to_string()),
                        ("quantifier", side.to_string()),
                        ("lhs", lhs.to_string()),
                        ("rhs", rhs.to_string()),
                    ]),
                ));
            }
        }
    }
    Ok(LawReport::pass(LAW, cases))
}
