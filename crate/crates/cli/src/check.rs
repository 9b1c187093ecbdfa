//! The law suite behind `check`.
//!
//! Every law is one job producing one [`LawReport`]. Jobs are exhaustive up
//! to size 3 and sample with a seeded generator above that, up to
//! `max_size`. Within a job cases run in a fixed order, so the reported
//! witness is the first failure in that order.

use rayon::prelude::*;

use kh_tripos::heyting::ClopenAlgebra;
use kh_tripos::logic::{battery_model, parse, parse_context, BatteryExtents, Evaluator, TAUTOLOGIES};
use kh_tripos::power::{
    check_beta_law, check_beta_law_on, check_delta_diagonal, check_infinity_extension,
    check_power_shape, check_transpose,
};
use kh_tripos::topology::{alexandroff, all_topologies, product_all, DEFAULT_POINT_CAP};
use kh_tripos::tripos::{
    beck_chevalley_square, check_adjoint_chain, check_adjoint_chain_on, check_beck_chevalley,
    check_beck_chevalley_on, check_forall_fibers, check_functoriality, check_hom,
    classifier_square, describe_map, witness, LawReport, Quantifiers,
};
use kh_tripos::{ContMap, PointSet, PowerObject, Predicate, Result, Space};
use rand::Rng;

use crate::gen::{discrete, random_formula, random_map, rng_for, sample_predicates};
use crate::model::LoadedModel;

/// Largest size enumerated exhaustively.
pub const EXHAUSTIVE: usize = 3;
/// Random instances per size combination above [`EXHAUSTIVE`].
const SAMPLES: usize = 8;
/// Random predicates per sampled instance.
const SAMPLED_PREDICATES: usize = 16;

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub max_size: usize,
    pub seed: u64,
    pub verify_compact_open: bool,
    /// Run only laws whose name contains one of these; empty runs all.
    pub laws: Vec<String>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_size: 4,
            seed: 0,
            verify_compact_open: false,
            laws: Vec::new(),
        }
    }
}

pub const LAWS: &[&str] = &[
    "adjoint-chain",
    "alexandroff-hausdorff",
    "alexandroff-inclusion-open",
    "beck-chevalley",
    "boolean-algebra",
    "classifier-pullback",
    "delta-diagonal",
    "dsl-comprehension",
    "dsl-substitutivity",
    "dsl-tautologies",
    "forall-fibers",
    "functoriality",
    "hausdorff-discrete",
    "infinity-extension",
    "infinity-open",
    "inverse-image-hom",
    "parser-roundtrip",
    "power-shape",
    "projection-clopen",
    "transpose",
    "weak-power-object",
];

struct Ctx<'a> {
    model: &'a LoadedModel,
    opts: &'a CheckOptions,
    q: &'a dyn Quantifiers,
}

/// Runs the selected laws and returns reports sorted by law name, then witness.
pub fn run_check(
    model: &LoadedModel,
    opts: &CheckOptions,
    q: &dyn Quantifiers,
) -> Result<Vec<LawReport>> {
    let ctx = Ctx { model, opts, q };
    let selected: Vec<(usize, &str)> = LAWS
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, law)| opts.laws.is_empty() || opts.laws.iter().any(|f| law.contains(f.as_str())))
        .collect();
    let mut reports = selected
        .par_iter()
        .map(|&(stream, law)| run_law(&ctx, law, stream as u64))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.law.cmp(&b.law).then_with(|| a.witness.cmp(&b.witness)));
    Ok(reports)
}

fn run_law(c: &Ctx, law: &str, stream: u64) -> Result<LawReport> {
    let mut rng = rng_for(c.opts.seed, stream);
    let report = match law {
        "adjoint-chain" => adjoint_chain(c, &mut rng),
        "forall-fibers" => for_maps(c, law, &mut rng, |f| check_forall_fibers(f, c.q)),
        "inverse-image-hom" => for_maps(c, law, &mut rng, check_hom),
        "functoriality" => functoriality(c, &mut rng),
        "beck-chevalley" => beck_chevalley(c, &mut rng),
        "boolean-algebra" => boolean_algebra(c, &mut rng),
        "weak-power-object" => weak_power_object(c, &mut rng),
        "transpose" => transpose(c),
        "delta-diagonal" => delta_diagonal(c),
        "power-shape" => power_shape(c),
        "infinity-extension" => infinity_extension(c),
        "classifier-pullback" => classifier_pullback(c),
        "hausdorff-discrete" => hausdorff_discrete(c),
        "projection-clopen" => projection_clopen(c),
        "alexandroff-inclusion-open" | "infinity-open" | "alexandroff-hausdorff" => {
            compactification(c, law)
        }
        "dsl-tautologies" => dsl_tautologies(c, &mut rng),
        "dsl-comprehension" => dsl_comprehension(),
        "dsl-substitutivity" => dsl_substitutivity(),
        "parser-roundtrip" => parser_roundtrip(&mut rng),
        other => unreachable!("unknown law {other}"),
    }?;
    debug_assert_eq!(report.law, law);
    Ok(report)
}

/// Folds reports until the first failure.
struct Acc(LawReport);

impl Acc {
    fn new(law: &str) -> Self {
        Acc(LawReport::pass(law, 0))
    }

    /// Returns `false` once a failure has been recorded.
    fn add(&mut self, r: LawReport) -> bool {
        self.0.absorb(r);
        self.0.passed()
    }

    fn fail(&mut self, cases: u64, w: kh_tripos::tripos::Witness) -> bool {
        let law = self.0.law.clone();
        self.add(LawReport::fail(law, cases, w))
    }

    fn pass(&mut self, cases: u64) {
        let law = self.0.law.clone();
        self.add(LawReport::pass(law, cases));
    }

    fn done(self) -> Result<LawReport> {
        Ok(self.0)
    }
}

/// All maps between discrete spaces of size ≤ 3 in (domain size, codomain
/// size, table) order.
fn exhaustive_maps() -> impl Iterator<Item = ContMap> {
    (0..=EXHAUSTIVE).flat_map(|n| {
        (0..=EXHAUSTIVE).flat_map(move |k| ContMap::all_maps(&discrete("X", n), &discrete("Y", k)))
    })
}

/// Size pairs with both sides ≤ `max` and at least one side above 3.
fn sampled_sizes(max: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |n| {
                    let mut w = v.clone();
                    w.push(n);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&n| n > EXHAUSTIVE));
    out
}

fn sampled_maps(c: &Ctx, rng: &mut impl Rng) -> Vec<ContMap> {
    let mut out = Vec::new();
    for sizes in sampled_sizes(c.opts.max_size, 2) {
        let (x, y) = (discrete("X", sizes[0]), discrete("Y", sizes[1]));
        for _ in 0..SAMPLES {
            out.extend(random_map(rng, &x, &y));
        }
    }
    out
}

fn adjoint_chain(c: &Ctx, rng: &mut impl Rng) -> Result<LawReport> {
    let mut acc = Acc::new("adjoint-chain");
    for f in exhaustive_maps().chain(c.model.maps.iter().filter(|f| f.is_clopen_map()).cloned()) {
        if !acc.add(check_adjoint_chain(&f, c.q)?) {
            return acc.done();
        }
    }
    for f in sampled_maps(c, rng) {
        let phis = sample_predicates(rng, f.dom(), SAMPLED_PREDICATES);
        let psis = sample_predicates(rng, f.cod(), SAMPLED_PREDICATES);
        if !acc.add(check_adjoint_chain_on(&f, c.q, &phis, &psis)?) {
            break;
        }
    }
    acc.done()
}

fn for_maps(
    c: &Ctx,
    law: &str,
    rng: &mut impl Rng,
    check: impl Fn(&ContMap) -> Result<LawReport>,
) -> Result<LawReport> {
    let mut acc = Acc::new(law);
    let quantified = law == "forall-fibers";
    let model_maps = c
        .model
        .maps
        .iter()
        .filter(|f| !quantified || f.is_clopen_map())
        .cloned();
    for f in exhaustive_maps().chain(model_maps).chain(sampled_maps(c, rng)) {
        if !acc.add(check(&f)?) {
            break;
        }
    }
    acc.done()
}

fn functoriality(c: &Ctx, rng: &mut impl Rng) -> Result<LawReport> {
    let mut acc = Acc::new("functoriality");
    for n in 0..=EXHAUSTIVE {
        for k in 0..=EXHAUSTIVE {
            for l in 0..=EXHAUSTIVE {
                let (x, y, z) = (discrete("X", n), discrete("Y", k), discrete("Z", l));
                for f in ContMap::all_maps(&x, &y) {
                    for g in ContMap::all_maps(&y, &z) {
                        if !acc.add(check_functoriality(&f, &g)?) {
                            return acc.done();
                        }
                    }
                }
            }
        }
    }
    let maps = &c.model.maps;
    for f in maps {
        for g in maps.iter().filter(|g| g.dom() == f.cod()) {
            if !acc.add(check_functoriality(f, g)?) {
                return acc.done();
            }
        }
        if !acc.add(check_functoriality(f, &ContMap::identity(f.cod()))?) {
            return acc.done();
        }
    }
    for sizes in sampled_sizes(c.opts.max_size.min(8), 3) {
        let (x, y, z) = (discrete("X", sizes[0]), discrete("Y", sizes[1]), discrete("Z", sizes[2]));
        for _ in 0..SAMPLES {
            if let (Some(f), Some(g)) = (random_map(rng, &x, &y), random_map(rng, &y, &z)) {
                if !acc.add(check_functoriality(&f, &g)?) {
                    return acc.done();
                }
            }
        }
    }
    acc.done()
}

fn beck_chevalley(c: &Ctx, rng: &mut impl Rng) -> Result<LawReport> {
    let mut acc = Acc::new("beck-chevalley");
    for nx in 0..=EXHAUSTIVE {
        let x = discrete("X", nx);
        for ng in 0..=EXHAUSTIVE {
            for nd in 0..=EXHAUSTIVE {
                for k in ContMap::all_maps(&discrete("G", ng), &discrete("D", nd)) {
                    let sq = beck_chevalley_square(&x, &k)?;
                    if !acc.add(check_beck_chevalley(&sq, c.q)?) {
                        return acc.done();
                    }
                }
            }
        }
    }
    for sizes in sampled_sizes(c.opts.max_size, 3) {
        let x = discrete("X", sizes[0]);
        let (g, d) = (discrete("G", sizes[1]), discrete("D", sizes[2]));
        for _ in 0..SAMPLES {
            let Some(k) = random_map(rng, &g, &d) else { continue };
            let sq = match beck_chevalley_square(&x, &k) {
                Ok(sq) => sq,
                Err(kh_tripos::Error::SizeCap { .. }) => continue,
                Err(e) => return Err(e),
            };
            let phis = sample_predicates(rng, &sq.x_delta.space, SAMPLED_PREDICATES);
            if !acc.add(check_beck_chevalley_on(&sq, c.q, &phis)?) {
                return acc.done();
            }
        }
    }
    acc.done()
}

/// Spaces that topology laws range over: every topology up to `min(max_size, 4)` points,
/// then the model's spaces.
fn topology_universe(c: &Ctx) -> Vec<Space> {
    let mut out: Vec<Space> = (0..=c.opts.max_size.min(4)).flat_map(all_topologies).collect();
    out.extend(c.model.spaces.iter().cloned());
    out
}

fn boolean_algebra(c: &Ctx, rng: &mut impl Rng) -> Result<LawReport> {
    let mut acc = Acc::new("boolean-algebra");
    let mut spaces = topology_universe(c);
    spaces.extend((0..=c.opts.max_size.min(8)).map(|n| discrete("X", n)));
    for s in spaces {
        let alg = ClopenAlgebra::of(&s)?;
        let fail = |axiom: &str, preds: &[&Predicate]| {
            let mut w = witness([("space", s.name().to_string()), ("axiom", axiom.to_string())]);
            for (name, p) in ["a", "b", "c"].iter().zip(preds) {
                w.insert(name.to_string(), p.to_string());
            }
            w
        };
        if !alg.is_boolean_subalgebra() {
            acc.fail(1, fail("closure", &[]));
            return acc.done();
        }
        let preds: Vec<Predicate> = alg.predicates().collect();
        let triples: Vec<[usize; 3]> = if preds.len() <= 16 {
            let n = preds.len();
            (0..n * n * n).map(|i| [i / (n * n), i / n % n, i % n]).collect()
        } else {
            let n = preds.len();
            (0..4096).map(|_| [0; 3].map(|_| rng.gen_range(0..n))).collect()
        };
        let top = Predicate::top(&s);
        let bottom = Predicate::bottom(&s);
        let mut cases = 0;
        for [i, j, k] in triples {
            cases += 1;
            let (a, b, cc) = (&preds[i], &preds[j], &preds[k]);
            let checks = [
                ("distributivity", a.meet(&b.join(cc)?)? == a.meet(b)?.join(&a.meet(cc)?)?),
                ("excluded-middle", a.join(&a.neg())? == top),
                ("non-contradiction", a.meet(&a.neg())? == bottom),
                ("double-negation", a.neg().neg() == *a),
                ("material-implication", a.implies(b)? == a.neg().join(b)?),
                ("residuation", a.meet(b)?.leq(cc)? == a.leq(&b.implies(cc)?)?),
                ("commutativity", a.meet(b)? == b.meet(a)? && a.join(b)? == b.join(a)?),
            ];
            if let Some((axiom, _)) = checks.iter().find(|(_, ok)| !ok) {
                acc.fail(cases, fail(axiom, &[a, b, cc]));
                return acc.done();
            }
        }
        acc.pass(cases);
    }
    acc.done()
}

fn weak_power_object(c: &Ctx, rng: &mut impl Rng) -> Result<LawReport> {
    let mut acc = Acc::new("weak-power-object");
    for nx in 0..=EXHAUSTIVE {
        let bundle = PowerObject::new(&discrete("X", nx))?;
        for ny in 0..=EXHAUSTIVE {
            if !acc.add(check_beta_law(&bundle, &discrete("Y", ny))?) {
                return acc.done();
            }
        }
    }
    for x in c.model.spaces.iter().filter(|s| s.is_discrete() && s.size() <= 6) {
        let bundle = PowerObject::new(x)?;
        for ny in 0..=2 {
            let y = discrete("Y", ny);
            let xy = product_all(&[x.clone(), y.clone()], DEFAULT_POINT_CAP)?;
            let gammas = sample_predicates(rng, &xy.space, SAMPLED_PREDICATES);
            if !acc.add(check_beta_law_on(&bundle, &y, &gammas)?) {
                return acc.done();
            }
        }
    }
    for sizes in sampled_sizes(c.opts.max_size.min(8), 2) {
        let bundle = PowerObject::new(&discrete("X", sizes[0]))?;
        let y = discrete("Y", sizes[1]);
        let xy = product_all(&[bundle.base.clone(), y.clone()], DEFAULT_POINT_CAP)?;
        let gammas = sample_predicates(rng, &xy.space, SAMPLED_PREDICATES);
        if !acc.add(check_beta_law_on(&bundle, &y, &gammas)?) {
            return acc.done();
        }
    }
    acc.done()
}

fn transpose(_c: &Ctx) -> Result<LawReport> {
    let mut acc = Acc::new("transpose");
    for na in 0..=EXHAUSTIVE {
        let bundle = PowerObject::new(&discrete("A", na))?;
        for nb in 0..=EXHAUSTIVE {
            if !acc.add(check_transpose(&bundle, &discrete("B", nb))?) {
                return acc.done();
            }
        }
    }
    acc.done()
}

/// Whether `X × X × PX` fits under the point cap.
fn delta_fits(n: usize) -> bool {
    n < 20 && n * n * ((1 << n) + 1) <= DEFAULT_POINT_CAP
}

fn delta_diagonal(c: &Ctx) -> Result<LawReport> {
    let mut acc = Acc::new("delta-diagonal");
    let generated = (0..=c.opts.max_size.max(4)).map(|n| discrete("X", n));
    let model = c.model.spaces.iter().filter(|s| s.is_discrete()).cloned();
    for x in generated.chain(model).filter(|x| delta_fits(x.size())) {
        if !acc.add(check_delta_diagonal(&x)?) {
            break;
        }
    }
    acc.done()
}

fn power_bases(c: &Ctx) -> Vec<Space> {
    let generated = (0..=c.opts.max_size.max(EXHAUSTIVE)).map(|n| discrete("A", n));
    let model = c.model.spaces.iter().filter(|s| s.is_discrete()).cloned();
    generated.chain(model).filter(|a| delta_fits(a.size())).collect()
}

fn power_shape(c: &Ctx) -> Result<LawReport> {
    let mut acc = Acc::new("power-shape");
    for a in power_bases(c) {
        let verify = c.opts.verify_compact_open && a.size() <= EXHAUSTIVE;
        if !acc.add(check_power_shape(&PowerObject::new(&a)?, verify)?) {
            break;
        }
    }
    acc.done()
}

fn infinity_extension(c: &Ctx) -> Result<LawReport> {
    let mut acc = Acc::new("infinity-extension");
    for a in power_bases(c) {
        if !acc.add(check_infinity_extension(&PowerObject::new(&a)?)?) {
            break;
        }
    }
    acc.done()
}

fn classifier_pullback(c: &Ctx) -> Result<LawReport> {
    let mut acc = Acc::new("classifier-pullback");
    let spaces = (0..=EXHAUSTIVE)
        .map(|n| discrete("Y", n))
        .chain(c.model.spaces.iter().cloned());
    for y in spaces {
        let mut cases = 0;
        for phi in ClopenAlgebra::of(&y)?.predicates() {
            cases += 1;
            let ok = match classifier_square(&phi) {
                Ok(sq) => sq.inclusion().image(&PointSet::full(sq.subspace.size())) == *phi.extent(),
                Err(_) => false,
            };
            if !ok {
                acc.fail(cases, witness([("space", y.name().to_string()), ("phi", phi.to_string())]));
                return acc.done();
            }
        }
        acc.pass(cases);
    }
    acc.done()
}

fn describe_space(s: &Space) -> String {
    match s.opens() {
        Ok(opens) if !s.is_discrete() => format!(
            "{} opens [{}]",
            s.format_set(&s.full_set()),
            opens.iter().map(|u| s.format_set(u)).collect::<Vec<_>>().join(", ")
        ),
        _ => format!("{} discrete", s.format_set(&s.full_set())),
    }
}

fn hausdorff_discrete(c: &Ctx) -> Result<LawReport> {
    let mut acc = Acc::new("hausdorff-discrete");
    for s in topology_universe(c) {
        if s.is_hausdorff() != s.is_discrete() {
            acc.fail(1, witness([("space", describe_space(&s))]));
            break;
        }
        acc.pass(1);
    }
    acc.done()
}

fn projection_clopen(c: &Ctx) -> Result<LawReport> {
    let mut acc = Acc::new("projection-clopen");
    let mut factors: Vec<Space> = (0..=c.opts.max_size.max(EXHAUSTIVE)).map(|n| discrete("X", n)).collect();
    factors.extend(c.model.spaces.iter().filter(|s| s.is_discrete()).cloned());
    for x in &factors {
        for y in &factors {
            let Ok(p) = product_all(&[x.clone(), y.clone()], DEFAULT_POINT_CAP) else { continue };
            for pi in &p.projections {
                if !(pi.is_open_map() && pi.is_closed_map()) {
                    acc.fail(1, witness([("projection", describe_map(pi))]));
                    return acc.done();
                }
                acc.pass(1);
            }
        }
    }
    acc.done()
}

fn compactification(c: &Ctx, law: &str) -> Result<LawReport> {
    let mut acc = Acc::new(law);
    for b in topology_universe(c) {
        let comp = alexandroff(&b)?;
        let inf = PointSet::singleton(comp.space.size(), comp.tag.infinity);
        let ok = match law {
            "alexandroff-inclusion-open" => comp.inclusion.is_open_map(),
            "infinity-open" => comp.space.is_open(&inf),
            _ => comp.space.is_hausdorff() == b.is_hausdorff(),
        };
        if !ok {
            acc.fail(1, witness([("B", describe_space(&b))]));
            break;
        }
        acc.pass(1);
    }
    acc.done()
}

/// Random models of the battery signature checked against every tautology.
pub const TAUTOLOGY_MODELS: usize = 100;

fn dsl_tautologies(c: &Ctx, rng: &mut impl Rng) -> Result<LawReport> {
    let mut acc = Acc::new("dsl-tautologies");
    let max = c.opts.max_size.min(4);
    for _ in 0..TAUTOLOGY_MODELS {
        let n = rng.gen_range(0..=max);
        let e = BatteryExtents {
            p: rng.gen_range(0..1u64 << n),
            q: rng.gen_range(0..1u64 << n),
            r: rng.gen_range(0..1u64 << (n * n)),
            a: rng.gen(),
            b: rng.gen(),
        };
        let model = battery_model(n, e)?;
        let ev = Evaluator::new(&model);
        for (ctx_text, text) in TAUTOLOGIES {
            let ctx = ev.context(&parse_context(ctx_text)?)?;
            let value = ev.eval(&parse(text)?, &ctx)?;
            if !value.is_top() {
                acc.fail(
                    1,
                    witness([
                        ("formula", text.to_string()),
                        ("size", n.to_string()),
                        ("model", format!("p={:b} q={:b} r={:b} a={} b={}", e.p, e.q, e.r, e.a, e.b)),
                        ("fails_at", value.space().format_set(&value.extent().complement())),
                    ]),
                );
                return acc.done();
            }
            acc.pass(1);
        }
    }
    acc.done()
}

fn dsl_comprehension() -> Result<LawReport> {
    let mut acc = Acc::new("dsl-comprehension");
    let member = parse("x in { w : X | p(w) }")?;
    let axiom = parse("exists t : P(X) . forall w : X . w in t iff p(w)")?;
    for n in 0..=EXHAUSTIVE {
        for p in 0..1u64 << n {
            let model = battery_model(n, BatteryExtents { p, ..Default::default() })?;
            let ev = Evaluator::new(&model);
            let ctx = ev.context(&parse_context("x : X")?)?;
            let got = ev.eval(&member, &ctx)?;
            let expected = PointSet::from_indices(n, (0..n).filter(|&i| p >> i & 1 == 1));
            if *got.extent() != expected || !ev.eval(&axiom, &ctx)?.is_top() {
                acc.fail(1, witness([("size", n.to_string()), ("p", format!("{p:b}"))]));
                return acc.done();
            }
            acc.pass(1);
        }
    }
    acc.done()
}

fn dsl_substitutivity() -> Result<LawReport> {
    let mut acc = Acc::new("dsl-substitutivity");
    let unary = parse("x = y implies (p(x) iff p(y))")?;
    let binary = parse("x = y implies (r(x, z) iff r(y, z)) and (r(z, x) iff r(z, y))")?;
    let set = parse("x = y implies (x in s iff y in s)")?;
    for n in 0..=EXHAUSTIVE {
        let cases: Vec<(BatteryExtents, &_, &str)> = (0..1u64 << n)
            .map(|p| (BatteryExtents { p, ..Default::default() }, &unary, "x : X, y : X"))
            .chain((0..1u64 << (n * n)).map(|r| {
                (BatteryExtents { r, ..Default::default() }, &binary, "x : X, y : X, z : X")
            }))
            .chain(std::iter::once((BatteryExtents::default(), &set, "x : X, y : X, s : P(X)")))
            .collect();
        for (e, f, ctx_text) in cases {
            let model = battery_model(n, e)?;
            let ev = Evaluator::new(&model);
            let ctx = ev.context(&parse_context(ctx_text)?)?;
            if !ev.eval(f, &ctx)?.is_top() {
                acc.fail(
                    1,
                    witness([
                        ("formula", f.to_string()),
                        ("size", n.to_string()),
                        ("model", format!("p={:b} r={:b}", e.p, e.r)),
                    ]),
                );
                return acc.done();
            }
            acc.pass(1);
        }
    }
    acc.done()
}

/// Generated formulas printed and parsed back.
pub const ROUNDTRIP_CASES: usize = 1000;

fn parser_roundtrip(rng: &mut impl Rng) -> Result<LawReport> {
    let mut acc = Acc::new("parser-roundtrip");
    for _ in 0..ROUNDTRIP_CASES {
        let f = random_formula(rng, 5);
        let text = f.to_string();
        let ok = matches!(parse(&text), Ok(ref g) if *g == f);
        if !ok {
            acc.fail(1, witness([("formula", text)]));
            break;
        }
        acc.pass(1);
    }
    acc.done()
}
