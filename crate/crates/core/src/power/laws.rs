use super::{
    compact_open_topology, equality_predicate_with, extend_infinity, transpose_into, PowerObject,
};
use crate::error::Result;
use crate::heyting::{ClopenAlgebra, Predicate};
use crate::topology::{product, PointSet, Space, DEFAULT_POINT_CAP};
use crate::topology::ContMap;
use crate::tripos::{reindex, witness, LawReport};

/// `(id × {γ})*(∈_X) = γ` for every clopen `γ` on `X × Y`.
pub fn check_beta_law(bundle: &PowerObject, y: &Space) -> Result<LawReport> {
    let xy = product(&bundle.base, y)?;
    let gammas: Vec<Predicate> = ClopenAlgebra::of(&xy.space)?.predicates().collect();
    check_beta_law_on(bundle, y, &gammas)
}

/// The β-law for the given predicates on `X × Y`.
pub fn check_beta_law_on(bundle: &PowerObject, y: &Space, gammas: &[Predicate]) -> Result<LawReport> {
    const LAW: &str = "weak-power-object";
    let x = &bundle.base;
    let xy = product(x, y)?;
    let mut cases = 0;
    for gamma in gammas {
        cases += 1;
        let name = bundle.name(y, gamma)?;
        if name.table().contains(&bundle.infinity()) {
            return Ok(LawReport::fail(
                LAW,
                cases,
                witness([("gamma", gamma.to_string()), ("issue", "name hits ∞".into())]),
            ));
        }
        let id_times_name = xy.map_factors(
            &[ContMap::identity(x), name],
            &bundle.membership_space,
        )?;
        let pulled = reindex(&id_times_name, &bundle.membership)?;
        if pulled.extent() != gamma.extent() {
            return Ok(LawReport::fail(
                LAW,
                cases,
                witness([
                    ("X", x.name().to_string()),
                    ("Y", y.name().to_string()),
                    ("gamma", gamma.to_string()),
                    ("pulled_back", pulled.to_string()),
                ]),
            ));
        }
    }
    Ok(LawReport::pass(LAW, cases))
}

/// `ev ∘ (id × χ̄_φ) = χ_φ` for every clopen `φ` on `A × B`.
pub fn check_transpose(bundle: &PowerObject, b: &Space) -> Result<LawReport> {
    const LAW: &str = "transpose";
    let a = &bundle.base;
    let ab = product(a, b)?;
    let (ev_domain, ev) = &bundle.evaluation;
    let mut cases = 0;
    for phi in ClopenAlgebra::of(&ab.space)?.predicates() {
        cases += 1;
        let bar = transpose_into(a, b, &phi, &bundle.function_space)?;
        let composite = ab
            .map_factors(&[ContMap::identity(a), bar], ev_domain)?
            .then(ev)?;
        let chi: Vec<usize> = (0..ab.space.size())
            .map(|p| usize::from(phi.contains(p)))
            .collect();
        if composite.table() != chi.as_slice() {
            return Ok(LawReport::fail(
                LAW,
                cases,
                witness([("phi", phi.to_string())]),
            ));
        }
    }
    Ok(LawReport::pass(LAW, cases))
}

/// `δ_X` equals the diagonal `{(x, x)}` built directly.
pub fn check_delta_diagonal(x: &Space) -> Result<LawReport> {
    const LAW: &str = "delta-diagonal";
    let bundle = PowerObject::new(x)?;
    let delta = equality_predicate_with(&bundle, DEFAULT_POINT_CAP)?;
    let n = x.size();
    let diagonal = PointSet::from_indices(n * n, (0..n).map(|i| i * n + i));
    if delta.extent() == &diagonal {
        Ok(LawReport::pass(LAW, 1))
    } else {
        Ok(LawReport::fail(
            LAW,
            1,
            witness([
                ("X", x.name().to_string()),
                ("delta", delta.to_string()),
                ("diagonal", delta.space().format_set(&diagonal)),
            ]),
        ))
    }
}

/// `f∞` agrees with `f` on `A × B`, is `0` on `A × {∞}`, and
/// `f∞⁻¹{1} = (id × i)[f⁻¹{1}]`. Checked for `f = ev`.
pub fn check_infinity_extension(bundle: &PowerObject) -> Result<LawReport> {
    const LAW: &str = "infinity-extension";
    let a = &bundle.base;
    let (ev_domain, ev) = &bundle.evaluation;
    let (ext_domain, ext) = extend_infinity(ev, a, &bundle.compactification, DEFAULT_POINT_CAP)?;
    let inf = bundle.infinity();
    let id_times_i = ev_domain.map_factors(
        &[
            ContMap::identity(a),
            bundle.compactification.inclusion.clone(),
        ],
        &ext_domain,
    )?;
    let ones = PointSet::singleton(2, 1);
    let image_of_ones = id_times_i.image(&ev.preimage(&ones));
    let mut cases = 0;
    for p in 0..ext_domain.space.size() {
        cases += 1;
        let c = ext_domain.coords(p);
        let expected = if c[1] == inf {
            0
        } else {
            ev.apply(ev_domain.index(&[c[0], c[1]]))
        };
        if ext.apply(p) != expected {
            return Ok(LawReport::fail(
                LAW,
                cases,
                witness([("point", ext_domain.space.label(p).to_string())]),
            ));
        }
    }
    if ext.preimage(&ones) != image_of_ones || !ext_domain.space.is_open(&image_of_ones) {
        return Ok(LawReport::fail(
            LAW,
            cases,
            witness([("issue", "preimage of {1} is not the image of ev⁻¹{1}".into())]),
        ));
    }
    let inf_set = PointSet::singleton(bundle.power().size(), inf);
    if !bundle.power().is_open(&inf_set) {
        return Ok(LawReport::fail(
            LAW,
            cases,
            witness([("issue", "{∞} is not open".into())]),
        ));
    }
    Ok(LawReport::pass(LAW, cases))
}

/// `|2^A| = 2^|A|`, `|PA| = 2^|A| + 1`, both discrete, membership avoids `∞`,
/// and `point_of` / `predicate_of_point` are inverse. Optionally recomputes the
/// compact-open topology on `2^A` and checks it is discrete.
pub fn check_power_shape(bundle: &PowerObject, verify_compact_open: bool) -> Result<LawReport> {
    const LAW: &str = "power-shape";
    let a = &bundle.base;
    let n = a.size();
    let fail = |issue: &str| {
        Ok(LawReport::fail(
            LAW,
            1,
            witness([("A", a.name().to_string()), ("issue", issue.to_string())]),
        ))
    };
    if bundle.function_space.size() != 1 << n || !bundle.function_space.is_discrete() {
        return fail("2^A has the wrong size or is not discrete");
    }
    if bundle.power().size() != (1 << n) + 1 || !bundle.power().is_discrete() {
        return fail("PA has the wrong size or is not discrete");
    }
    if !bundle.membership_space.space.is_clopen(bundle.membership.extent()) {
        return fail("membership is not clopen");
    }
    let inf = bundle.infinity();
    if bundle
        .membership
        .extent()
        .iter()
        .any(|p| bundle.membership_space.coords(p)[1] == inf)
    {
        return fail("membership contains a pair at ∞");
    }
    for point in 0..inf {
        let phi: Predicate = bundle.predicate_of_point(point).expect("below ∞");
        if bundle.point_of(&phi)? != point {
            return fail("point indexing is not a bijection");
        }
    }
    if verify_compact_open {
        let co = compact_open_topology(a)?;
        if co.size() != 1 << n || !co.is_discrete() {
            return fail("compact-open topology on 2^A is not discrete");
        }
    }
    Ok(LawReport::pass(LAW, 1 + (1 << n) as u64))
}
