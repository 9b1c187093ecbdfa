//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::process::ExitCode;

use kh_tripos::heyting::ClopenAlgebra;
use kh_tripos::logic::{battery_model, parse, parse_context, BatteryExtents, Evaluator};
use kh_tripos::power::{
    check_beta_law, check_delta_diagonal, check_power_shape, compact_open_topology,
    equality_predicate,
};
use kh_tripos::topology::{alexandroff, all_topologies, product_all, DEFAULT_POINT_CAP};
use kh_tripos::tripos::{
    beck_chevalley_square, check_adjoint_chain, check_beck_chevalley, ClopenQuantifiers,
};
use kh_tripos::{ContMap, FinSpace, PointSet, PowerObject, Space};
use kh_tripos_cli::{cmd_check, example_model, run_check, CheckOptions, Format};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn discrete(name: &str, n: usize) -> Space {
    FinSpace::discrete(name, (0..n).map(|i| format!("{name}{i}")).collect()).unwrap()
}

fn law(name: &str) -> Outcome {
    let opts = CheckOptions {
        laws: vec![name.into()],
        ..Default::default()
    };
    let r = run_check(&example_model(), &opts, &ClopenQuantifiers).map_err(|e| e.to_string())?;
    match r.iter().find(|r| !r.passed()) {
        None => Ok(format!("check --law {name}: {} cases", r.iter().map(|r| r.cases).sum::<u64>())),
        Some(f) => Err(format!("{:?}", f.witness)),
    }
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn adjoint_chain() -> Outcome {
    let mut maps = 0;
    for n in 0..=3 {
        for k in 0..=3 {
            for f in ContMap::all_maps(&discrete("X", n), &discrete("Y", k)) {
                maps += 1;
                let r = check_adjoint_chain(&f, &ClopenQuantifiers).map_err(|e| e.to_string())?;
                ensure(r.passed(), format!("{:?}", r.witness))?;
            }
        }
    }
    Ok(format!("{maps} maps; {}", law("adjoint-chain")?))
}

fn beck_chevalley() -> Outcome {
    let mut squares = 0;
    for nx in 0..=3 {
        for ng in 0..=3 {
            for nd in 0..=3 {
                for k in ContMap::all_maps(&discrete("G", ng), &discrete("D", nd)) {
                    squares += 1;
                    let sq = beck_chevalley_square(&discrete("X", nx), &k).map_err(|e| e.to_string())?;
                    let r = check_beck_chevalley(&sq, &ClopenQuantifiers).map_err(|e| e.to_string())?;
                    ensure(r.passed(), format!("{:?}", r.witness))?;
                }
            }
        }
    }
    Ok(format!("{squares} squares"))
}

fn beta_law() -> Outcome {
    let mut cases = 0;
    for nx in 0..=3 {
        let bundle = PowerObject::new(&discrete("X", nx)).map_err(|e| e.to_string())?;
        for ny in 0..=3 {
            let r = check_beta_law(&bundle, &discrete("Y", ny)).map_err(|e| e.to_string())?;
            ensure(r.passed(), format!("{:?}", r.witness))?;
            cases += r.cases;
        }
    }
    Ok(format!("{cases} predicates γ"))
}

fn delta() -> Outcome {
    for n in 0..=4 {
        let x = discrete("X", n);
        let d = equality_predicate(&x).map_err(|e| e.to_string())?;
        // Oracle: the diagonal, index i·n + i.
        let diag = PointSet::from_indices(n * n, (0..n).map(|i| i * n + i));
        ensure(*d.extent() == diag, format!("|X| = {n}: {d}"))?;
        ensure(check_delta_diagonal(&x).map_err(|e| e.to_string())?.passed(), "report")?;
    }
    Ok("|X| = 0..4".into())
}

fn topologies() -> Vec<Space> {
    (0..=4).flat_map(all_topologies).collect()
}

fn hausdorff_search(s: &Space) -> bool {
    let opens = s.opens().unwrap();
    (0..s.size()).all(|x| {
        (0..s.size()).filter(|&y| y != x).all(|y| {
            opens.iter().any(|u| u.contains(x) && opens.iter().any(|v| v.contains(y) && u.is_disjoint(v)))
        })
    })
}

fn hausdorff_discrete() -> Outcome {
    let ts = topologies();
    for t in &ts {
        let discrete = (0..t.size()).all(|x| t.is_open(&PointSet::singleton(t.size(), x)));
        ensure(hausdorff_search(t) == discrete && t.is_hausdorff() == discrete, format!("{t:?}"))?;
    }
    Ok(format!("{} topologies", ts.len()))
}

fn projections() -> Outcome {
    for a in 0..=4 {
        for b in 0..=4 {
            let p = product_all(&[discrete("X", a), discrete("Y", b)], DEFAULT_POINT_CAP)
                .map_err(|e| e.to_string())?;
            for pi in &p.projections {
                for u in ClopenAlgebra::of(&p.space).unwrap().carrier() {
                    let img = pi.image(u);
                    ensure(pi.cod().is_open(&img) && pi.cod().is_closed(&img), format!("{a}×{b}"))?;
                }
            }
        }
    }
    Ok("discrete factors of size 0..4".into())
}

fn alexandroff_each(check: impl Fn(&Space) -> bool) -> Outcome {
    let ts = topologies();
    for b in &ts {
        ensure(check(b), format!("{b:?}"))?;
    }
    Ok(format!("{} topologies", ts.len()))
}

fn power_shape() -> Outcome {
    for n in 0..=4 {
        let p = PowerObject::new(&discrete("A", n)).map_err(|e| e.to_string())?;
        ensure(p.function_space.size() == 1 << n, "|2^A|")?;
        ensure(p.power().size() == (1 << n) + 1, "|PA|")?;
        ensure(check_power_shape(&p, false).map_err(|e| e.to_string())?.passed(), "report")?;
    }
    Ok("|A| = 0..4".into())
}

fn compact_open() -> Outcome {
    for n in 0..=3 {
        let a = discrete("A", n);
        let co = compact_open_topology(&a).map_err(|e| e.to_string())?;
        ensure(co.is_discrete() && co.size() == 1 << n, format!("|A| = {n}"))?;
        let p = PowerObject::new(&a).map_err(|e| e.to_string())?;
        ensure(check_power_shape(&p, true).map_err(|e| e.to_string())?.passed(), "report")?;
    }
    Ok("|A| = 0..3".into())
}

fn comprehension_and_substitutivity() -> Outcome {
    let member = parse("x in { w : X | p(w) } iff p(x)").unwrap();
    let subst = parse("x = y implies (p(x) iff p(y))").unwrap();
    for n in 0..=3usize {
        for p in 0..1u64 << n {
            let m = battery_model(n, BatteryExtents { p, ..Default::default() }).unwrap();
            let ev = Evaluator::new(&m);
            let c1 = ev.context(&parse_context("x : X").unwrap()).unwrap();
            let c2 = ev.context(&parse_context("x : X, y : X").unwrap()).unwrap();
            ensure(ev.eval(&member, &c1).unwrap().is_top(), format!("comprehension n={n} p={p:b}"))?;
            ensure(ev.eval(&subst, &c2).unwrap().is_top(), format!("substitutivity n={n} p={p:b}"))?;
        }
    }
    law("dsl-comprehension")?;
    law("dsl-substitutivity")
}

fn mutation() -> Outcome {
    let out = cmd_check(&example_model(), &CheckOptions::default(), &common::ImageForall, Format::Text)
        .map_err(|e| e.to_string())?;
    ensure(out.exit_code() == 1, "mutant check did not exit 1")?;
    let block: Vec<&str> = out
        .output
        .lines()
        .skip_while(|l| !l.starts_with("FAIL adjoint-chain"))
        .take(5)
        .collect();
    ensure(!block.is_empty(), "adjoint-chain not reported as failing")?;
    let text = block.join(" | ");
    ensure(text.contains("map: f[]: X → Y []") && text.contains("psi: {y0}"), text.clone())?;
    Ok(text)
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("adjoint chain, all maps between discrete spaces of size 0-3", adjoint_chain),
        ("Beck-Chevalley, |X|,|Γ|,|Δ| ≤ 3", beck_chevalley),
        ("weak power object β-law, |X|,|Y| ≤ 3", beta_law),
        ("δ is the diagonal, |X| ≤ 4", delta),
        ("topology: Hausdorff ⇔ discrete on ≤ 4 points", hausdorff_discrete),
        ("topology: projections of discrete products are open and closed", projections),
        ("topology: alexandroff inclusion is open", || {
            alexandroff_each(|b| alexandroff(b).unwrap().inclusion.is_open_map())
        }),
        ("topology: {∞} is open", || {
            alexandroff_each(|b| {
                let c = alexandroff(b).unwrap();
                c.space.is_open(&PointSet::singleton(c.space.size(), c.tag.infinity))
            })
        }),
        ("topology: alex(B) Hausdorff ⇔ B Hausdorff", || {
            alexandroff_each(|b| hausdorff_search(&alexandroff(b).unwrap().space) == hausdorff_search(b))
        }),
        ("power shape: |2^A| = 2^|A|, |PA| = 2^|A|+1", power_shape),
        ("power shape: compact-open topology discrete for |A| ≤ 3", compact_open),
        ("DSL: tautology battery is top in 100 seeded models", || law("dsl-tautologies")),
        ("DSL: comprehension and equality substitutivity, size ≤ 3", comprehension_and_substitutivity),
        ("DSL: parser round-trips 1000 generated ASTs", || law("parser-roundtrip")),
        ("mutation: ∀ := Im makes check exit 1 naming adjoint-chain", mutation),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name} [{detail}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
