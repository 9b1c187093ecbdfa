use proptest::prelude::*;

use kh_tripos::logic::{
    battery_model, parse, parse_context, BatteryExtents, Evaluator, Formula, SetTerm, Term,
    TypeExpr, TAUTOLOGIES,
};

fn battery_holds(n: usize, e: BatteryExtents) -> Result<(), String> {
    let m = battery_model(n, e).unwrap();
    let ev = Evaluator::new(&m);
    for (c, t) in TAUTOLOGIES {
        let ctx = ev.context(&parse_context(c).unwrap()).unwrap();
        let v = ev.eval(&parse(t).unwrap(), &ctx).unwrap();
        if !v.is_top() {
            return Err(format!("`{t}` fails at {} with n={n}, {e:?}", v.neg()));
        }
    }
    Ok(())
}

fn extents(n: usize) -> impl Strategy<Value = BatteryExtents> {
    let full = |bits: usize| if bits == 0 { 0 } else { (1u64 << bits) - 1 };
    (0..=full(n), 0..=full(n), 0..=full(n * n), any::<bool>(), any::<bool>())
        .prop_map(|(p, q, r, a, b)| BatteryExtents { p, q, r, a, b })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tautologies_in_random_models(
        (n, e) in (0usize..=4).prop_flat_map(|n| (Just(n), extents(n)))
    ) {
        battery_holds(n, e).map_err(TestCaseError::fail)?;
    }
}

#[test]
fn battery_parses_and_round_trips() {
    for (_, t) in TAUTOLOGIES {
        let f = parse(t).unwrap();
        assert_eq!(parse(&f.to_string()).unwrap(), f, "{t}");
    }
}

#[test]
fn comprehension_exhaustive() {
    for n in 0..=3usize {
        for p in 0..1u64 << n {
            let m = battery_model(n, BatteryExtents { p, ..Default::default() }).unwrap();
            let ev = Evaluator::new(&m);
            let ctx = ev.context(&parse_context("x : X").unwrap()).unwrap();
            let member = ev.eval(&parse("x in { w : X | p(w) }").unwrap(), &ctx).unwrap();
            // Oracle: the extent of p itself.
            let got: u64 = member.extent().iter().fold(0, |m, i| m | 1 << i);
            assert_eq!(got, p);
            let ax = parse("exists t : P(X) . forall w : X . w in t iff p(w)").unwrap();
            assert!(ev.eval(&ax, &ctx).unwrap().is_top());
        }
    }
}

#[test]
fn equality_substitutivity_exhaustive() {
    let unary = parse("x = y implies (p(x) iff p(y))").unwrap();
    let binary = parse("x = y implies (r(x, z) iff r(y, z)) and (r(z, x) iff r(z, y))").unwrap();
    for n in 0..=3usize {
        for p in 0..1u64 << n {
            let m = battery_model(n, BatteryExtents { p, ..Default::default() }).unwrap();
            let ev = Evaluator::new(&m);
            let ctx = ev.context(&parse_context("x : X, y : X").unwrap()).unwrap();
            assert!(ev.eval(&unary, &ctx).unwrap().is_top());
        }
        for r in 0..1u64 << (n * n) {
            let m = battery_model(n, BatteryExtents { r, ..Default::default() }).unwrap();
            let ev = Evaluator::new(&m);
            let ctx = ev.context(&parse_context("x : X, y : X, z : X").unwrap()).unwrap();
            assert!(ev.eval(&binary, &ctx).unwrap().is_top());
        }
    }
}

#[test]
fn non_tautology_is_caught() {
    let m = battery_model(2, BatteryExtents { p: 0b01, ..Default::default() }).unwrap();
    let ev = Evaluator::new(&m);
    let ctx = ev.context(&parse_context("x : X").unwrap()).unwrap();
    let (l, r) = kh_tripos::logic::parse_sequent("top |- p(x)").unwrap();
    let out = ev.sequent(&l, &r, &ctx).unwrap();
    assert!(!out.holds);
    assert_eq!(out.counterexample.unwrap().1, "(x1)");
}

const KEYWORDS: &[&str] = &[
    "forall", "exists", "and", "or", "not", "implies", "iff", "in", "top", "bottom", "P",
];

fn ident() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_]{0,4}".prop_filter("keyword", |s| !KEYWORDS.contains(&s.as_str()))
}

fn type_expr() -> impl Strategy<Value = TypeExpr> {
    "[A-Z][a-z]{0,2}"
        .prop_filter("power", |s| s != "P")
        .prop_map(TypeExpr::Named)
        .prop_recursive(2, 3, 1, |inner| inner.prop_map(|t| TypeExpr::Power(Box::new(t))))
}

fn term() -> impl Strategy<Value = Term> {
    prop_oneof![
        ident().prop_map(Term::Var),
        (ident(), "[A-Z][a-z]{0,2}".prop_filter("power", |s| s != "P"))
            .prop_map(|(label, space)| Term::Point { label, space }),
        ("[a-z ]{1,3}", "[A-Z]").prop_filter("power", |(_, s)| s != "P")
            .prop_map(|(label, space)| Term::Point { label, space }),
    ]
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::Top),
        Just(Formula::Bottom),
        (ident(), prop::collection::vec(term(), 0..3)).prop_map(|(n, a)| Formula::Atom(n, a)),
        (term(), term()).prop_map(|(a, b)| Formula::Eq(a, b)),
        (term(), ident()).prop_map(|(t, s)| Formula::Member(t, SetTerm::Var(s))),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::iff(a, b)),
            (ident(), type_expr(), inner.clone())
                .prop_map(|(v, t, b)| Formula::Forall(v, t, Box::new(b))),
            (ident(), type_expr(), inner.clone())
                .prop_map(|(v, t, b)| Formula::Exists(v, t, Box::new(b))),
            (term(), ident(), type_expr(), inner).prop_map(|(t, var, ty, body)| {
                Formula::Member(t, SetTerm::Comprehension { var, ty, body: Box::new(body) })
            }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_parse_round_trip(f in formula()) {
        let text = f.to_string();
        let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert_eq!(back, f, "{}", text);
    }
}
