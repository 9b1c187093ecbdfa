//! Seeded generation of spaces, maps, predicates and formulas.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kh_tripos::logic::{Formula, SetTerm, Term, TypeExpr};
use kh_tripos::{ContMap, FinSpace, PointSet, Predicate, Space};

/// An independent stream per law, so results do not depend on scheduling.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn discrete(name: &str, n: usize) -> Space {
    let prefix = name.to_lowercase();
    FinSpace::discrete(name, (0..n).map(|i| format!("{prefix}{i}")).collect())
        .expect("generated labels are distinct")
}

/// A uniformly random map between discrete spaces; `None` if there is none.
pub fn random_map(rng: &mut impl Rng, dom: &Space, cod: &Space) -> Option<ContMap> {
    if cod.size() == 0 && dom.size() > 0 {
        return None;
    }
    let table: Vec<usize> = (0..dom.size()).map(|_| rng.gen_range(0..cod.size())).collect();
    ContMap::new(format!("f{table:?}"), dom.clone(), cod.clone(), table).ok()
}

/// A uniformly random subset of a discrete space.
pub fn random_predicate(rng: &mut impl Rng, space: &Space) -> Predicate {
    let set = PointSet::from_indices(space.size(), (0..space.size()).filter(|_| rng.gen_bool(0.5)));
    Predicate::new(space, set).expect("every subset of a discrete space is clopen")
}

/// `count` random predicates, plus `⊥` and `⊤` first.
pub fn sample_predicates(rng: &mut impl Rng, space: &Space, count: usize) -> Vec<Predicate> {
    let mut out = vec![Predicate::bottom(space), Predicate::top(space)];
    out.extend((0..count).map(|_| random_predicate(rng, space)));
    out
}

const IDENTS: &[&str] = &["x", "y", "z", "s", "t", "p", "q", "r", "a1", "b_2", "x'", "phi"];
const SPACES: &[&str] = &["X", "Y", "Empty", "S1"];
const LABELS: &[&str] = &["a", "b", "0", "∞", "two words", "{a}"];

fn ident(rng: &mut impl Rng) -> String {
    IDENTS.choose(rng).unwrap().to_string()
}

fn type_expr(rng: &mut impl Rng) -> TypeExpr {
    let base = TypeExpr::Named(SPACES.choose(rng).unwrap().to_string());
    (0..rng.gen_range(0..3)).fold(base, |t, _| TypeExpr::Power(Box::new(t)))
}

fn term(rng: &mut impl Rng) -> Term {
    if rng.gen_bool(0.7) {
        Term::Var(ident(rng))
    } else {
        Term::Point {
            label: LABELS.choose(rng).unwrap().to_string(),
            space: SPACES.choose(rng).unwrap().to_string(),
        }
    }
}

/// A random formula of depth at most `depth`.
pub fn random_formula(rng: &mut impl Rng, depth: usize) -> Formula {
    let leaf = depth == 0 || rng.gen_bool(0.25);
    if leaf {
        return match rng.gen_range(0..5) {
            0 => Formula::Top,
            1 => Formula::Bottom,
            2 => Formula::Atom(ident(rng), (0..rng.gen_range(0..3)).map(|_| term(rng)).collect()),
            3 => Formula::Eq(term(rng), term(rng)),
            _ => Formula::Member(term(rng), SetTerm::Var(ident(rng))),
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..8) {
        0 => Formula::not(random_formula(rng, d)),
        1 => Formula::and(random_formula(rng, d), random_formula(rng, d)),
        2 => Formula::or(random_formula(rng, d), random_formula(rng, d)),
        3 => Formula::implies(random_formula(rng, d), random_formula(rng, d)),
        4 => Formula::iff(random_formula(rng, d), random_formula(rng, d)),
        5 => Formula::Forall(ident(rng), type_expr(rng), Box::new(random_formula(rng, d))),
        6 => Formula::Exists(ident(rng), type_expr(rng), Box::new(random_formula(rng, d))),
        _ => Formula::Member(
            term(rng),
            SetTerm::Comprehension {
                var: ident(rng),
                ty: type_expr(rng),
                body: Box::new(random_formula(rng, d)),
            },
        ),
    }
}
