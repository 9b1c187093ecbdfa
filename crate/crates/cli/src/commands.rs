//! The subcommands. Each returns its rendered output and whether a law was violated.

use serde::Serialize;
use serde_json::json;

use kh_tripos::logic::{parse, parse_context, parse_sequent, Evaluator};
use kh_tripos::power::{check_delta_diagonal, check_power_shape, equality_predicate};
use kh_tripos::topology::alexandroff;
use kh_tripos::tripos::{LawReport, Quantifiers};
use kh_tripos::{PointSet, PowerObject, Predicate, Space};

use crate::check::{run_check, CheckOptions};
use crate::error::InputError;
use crate::model::LoadedModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Rendered output plus the violation flag that decides exit code 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub violation: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        u8::from(self.violation)
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn render_reports(reports: &[LawReport], format: Format) -> String {
    if format == Format::Json {
        return to_json(&reports);
    }
    let mut out = String::new();
    for r in reports {
        let tag = if r.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{tag} {} ({} cases)\n", r.law, r.cases));
        for (k, v) in r.witness.iter().flatten() {
            out.push_str(&format!("  {k}: {v}\n"));
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("{} laws, {failed} failed\n", reports.len()));
    out
}

pub fn cmd_check(
    model: &LoadedModel,
    opts: &CheckOptions,
    q: &dyn Quantifiers,
    format: Format,
) -> Result<Outcome, InputError> {
    for f in &opts.laws {
        if !crate::check::LAWS.iter().any(|l| l.contains(f.as_str())) {
            return Err(InputError::Schema(format!("no law matches `{f}`")));
        }
    }
    let reports = run_check(model, opts, q)?;
    Ok(Outcome {
        violation: reports.iter().any(|r| !r.passed()),
        output: render_reports(&reports, format),
    })
}

fn labels(p: &Predicate) -> Vec<String> {
    p.extent().iter().map(|i| p.space().label(i).to_string()).collect()
}

fn value_word(p: &Predicate) -> &'static str {
    if p.is_top() {
        "top"
    } else if p.is_bottom() {
        "bottom"
    } else {
        "partial"
    }
}

/// `eval`: a formula in a context, or a sequent `φ |- ψ`.
pub fn cmd_eval(
    model: &LoadedModel,
    formula: Option<&str>,
    sequent: Option<&str>,
    context: &str,
    format: Format,
) -> Result<Outcome, InputError> {
    let ev = Evaluator::new(&model.logic);
    let ctx = ev.context(&parse_context(context)?)?;
    match (formula, sequent) {
        (Some(text), None) => {
            let value = ev.eval(&parse(text)?, &ctx)?;
            let word = value_word(&value);
            let output = match format {
                Format::Json => to_json(&json!({
                    "formula": text,
                    "context": context,
                    "value": word,
                    "extent": labels(&value),
                })),
                Format::Text if word == "partial" => {
                    labels(&value).into_iter().map(|l| l + "\n").collect()
                }
                Format::Text => format!("{word}\n"),
            };
            Ok(Outcome {
                output,
                violation: false,
            })
        }
        (None, Some(text)) => {
            let (lhs, rhs) = parse_sequent(text)?;
            let out = ev.sequent(&lhs, &rhs, &ctx)?;
            let counterexample = out.counterexample.map(|(_, label)| label);
            let output = match format {
                Format::Json => to_json(&json!({
                    "sequent": text,
                    "context": context,
                    "holds": out.holds,
                    "counterexample": counterexample,
                })),
                Format::Text => match &counterexample {
                    None => "holds\n".to_string(),
                    Some(c) => format!("fails\ncounterexample: {c}\n"),
                },
            };
            Ok(Outcome {
                output,
                violation: !out.holds,
            })
        }
        _ => Err(InputError::Schema(
            "eval needs exactly one of a formula (-e) or --sequent".into(),
        )),
    }
}

/// `power --space A`: `2^A`, `PA` and the membership predicate.
pub fn cmd_power(
    model: &LoadedModel,
    space: &str,
    verify_compact_open: bool,
    format: Format,
) -> Result<Outcome, InputError> {
    let a = model.space(space)?;
    let bundle = PowerObject::new(a)?;
    let shape = check_power_shape(&bundle, verify_compact_open)?;
    let pa = bundle.power();
    let points: Vec<_> = (0..pa.size())
        .map(|p| json!({"label": pa.label(p), "point": bundle.serialize_point(p)}))
        .collect();
    let membership = labels(&bundle.membership);
    let output = match format {
        Format::Json => to_json(&json!({
            "space": a.name(),
            "function_space_size": bundle.function_space.size(),
            "power": pa.name(),
            "points": points,
            "infinity": bundle.infinity(),
            "membership": membership,
            "report": shape,
        })),
        Format::Text => {
            let mut out = format!(
                "{}: {} points\n2^{}: {} points\n{}: {} points, ∞ at index {}\n",
                a.name(),
                a.size(),
                a.name(),
                bundle.function_space.size(),
                pa.name(),
                pa.size(),
                bundle.infinity()
            );
            for p in 0..pa.size() {
                out.push_str(&format!("  {p}  {}\n", pa.label(p)));
            }
            out.push_str(&format!("membership: {}\n", membership.join(" ")));
            out.push_str(&render_reports(std::slice::from_ref(&shape), Format::Text));
            out
        }
    };
    Ok(Outcome {
        violation: !shape.passed(),
        output,
    })
}

/// `delta --space X`: the equality predicate built from membership.
pub fn cmd_delta(model: &LoadedModel, space: &str, format: Format) -> Result<Outcome, InputError> {
    let x = model.space(space)?;
    let delta = equality_predicate(x)?;
    let report = check_delta_diagonal(x)?;
    let extent = labels(&delta);
    let output = match format {
        Format::Json => to_json(&json!({
            "space": x.name(),
            "delta": extent,
            "report": report,
        })),
        Format::Text => {
            let mut out = format!("δ_{} = {}\n", x.name(), delta);
            out.push_str(&render_reports(std::slice::from_ref(&report), Format::Text));
            out
        }
    };
    Ok(Outcome {
        violation: !report.passed(),
        output,
    })
}

fn opens_of(s: &Space) -> Result<Vec<String>, InputError> {
    Ok(s.opens()?.iter().map(|u| s.format_set(u)).collect())
}

/// `compactify --space B`: `B∞` and its basic properties.
pub fn cmd_compactify(model: &LoadedModel, space: &str, format: Format) -> Result<Outcome, InputError> {
    let b = model.space(space)?;
    let comp = alexandroff(b)?;
    let s = &comp.space;
    let inf = comp.tag.infinity;
    let checks = [
        ("inclusion-open", comp.inclusion.is_open_map()),
        ("infinity-open", s.is_open(&PointSet::singleton(s.size(), inf))),
        ("hausdorff-agrees", s.is_hausdorff() == b.is_hausdorff()),
        ("compact", s.is_compact()),
    ];
    let violation = checks.iter().any(|(_, ok)| !ok);
    let opens = opens_of(s)?;
    let output = match format {
        Format::Json => to_json(&json!({
            "base": b.name(),
            "space": s.descriptor(),
            "infinity": inf,
            "opens": opens,
            "hausdorff": s.is_hausdorff(),
            "checks": checks.iter().map(|(k, v)| (k.to_string(), *v)).collect::<std::collections::BTreeMap<_, _>>(),
        })),
        Format::Text => {
            let mut out = format!(
                "{} = {} with ∞ at index {}\nopens: {}\nhausdorff: {}\n",
                s.name(),
                s.format_set(&s.full_set()),
                inf,
                opens.join(" "),
                s.is_hausdorff()
            );
            for (k, ok) in checks {
                out.push_str(&format!("{} {k}\n", if ok { "PASS" } else { "FAIL" }));
            }
            out
        }
    };
    Ok(Outcome { output, violation })
}
