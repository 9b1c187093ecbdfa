//! Formulas that hold in every model of the battery signature.
//!
//! Signature: a discrete space `X`, unary predicates `p`, `q` on `X`, a
//! binary predicate `r` on `X × X`, and nullary predicates `a`, `b`. Each
//! formula comes with the context it is read in, and holds even when `X` is
//! empty.

use super::Model;
use crate::error::Result;
use crate::topology::FinSpace;

pub const TAUTOLOGIES: &[(&str, &str)] = &[
    ("x : X", "p(x) or not p(x)"),
    ("x : X", "not not p(x) iff p(x)"),
    ("x : X", "(p(x) implies q(x)) iff not p(x) or q(x)"),
    ("x : X", "not (p(x) and q(x)) iff not p(x) or not q(x)"),
    ("", "a and b implies a"),
    ("", "a implies b implies a"),
    ("", "(a implies b) implies not b implies not a"),
    ("x : X", "p(x) and (q(x) or a) iff p(x) and q(x) or p(x) and a"),
    ("", "not (exists w : X . p(w)) iff (forall w : X . not p(w))"),
    ("", "(forall w : X . p(w) and q(w)) iff (forall w : X . p(w)) and (forall w : X . q(w))"),
    ("", "(exists w : X . p(w) or q(w)) iff (exists w : X . p(w)) or (exists w : X . q(w))"),
    ("", "(forall w : X . p(w)) and (exists w : X . q(w)) implies (exists w : X . p(w) and q(w))"),
    ("", "(exists u : X . exists v : X . r(u, v)) iff (exists v : X . exists u : X . r(u, v))"),
    ("", "(exists v : X . forall u : X . r(u, v)) implies (forall u : X . exists v : X . r(u, v))"),
    ("x : X", "(forall w : X . p(w)) implies p(x)"),
    ("x : X", "p(x) implies (exists w : X . p(w))"),
    ("", "(forall w : X . a) or not a implies (forall w : X . a or not a)"),
    ("", "forall w : X . w = w"),
    ("x : X, y : X", "x = y iff y = x"),
    ("x : X, y : X, z : X", "x = y and y = z implies x = z"),
    ("x : X, y : X", "x = y implies (p(x) iff p(y))"),
    ("x : X, y : X, z : X", "x = y implies (r(x, z) iff r(y, z))"),
    ("x : X", "(forall w : X . x = w implies p(w)) iff p(x)"),
    ("x : X", "(exists w : X . x = w and p(w)) iff p(x)"),
    ("x : X", "x in { w : X | p(w) } iff p(x)"),
    ("x : X", "x in { w : X | p(w) and q(w) } iff x in { w : X | p(w) } and q(x)"),
    ("x : X, s : P(X)", "x in s or not x in s"),
    ("", "exists t : P(X) . forall w : X . w in t iff p(w)"),
    ("x : X", "exists t : P(X) . forall w : X . w in t iff r(w, x)"),
    ("x : X, s : P(X)", "x in s implies (exists t : P(X) . x in t)"),
    ("x : X, y : X, s : P(X)", "x = y implies (x in s iff y in s)"),
];

/// Extents of the battery predicates as bitmasks; `r` is indexed by `u·n + v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BatteryExtents {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub a: bool,
    pub b: bool,
}

fn bits(mask: u64, len: usize) -> Vec<usize> {
    (0..len).filter(|&i| mask >> i & 1 == 1).collect()
}

/// A model of the battery signature with `X = {x0, …, x(n-1)}`, `n ≤ 8`.
pub fn battery_model(n: usize, e: BatteryExtents) -> Result<Model> {
    let x = FinSpace::discrete("X", (0..n).map(|i| format!("x{i}")).collect())?;
    let mut m = Model::new();
    m.add_space(x.clone());
    m.add_predicate("p", vec![x.clone()], &bits(e.p, n))?;
    m.add_predicate("q", vec![x.clone()], &bits(e.q, n))?;
    m.add_predicate("r", vec![x.clone(), x], &bits(e.r, n * n))?;
    m.add_predicate("a", vec![], &bits(e.a as u64, 1))?;
    m.add_predicate("b", vec![], &bits(e.b as u64, 1))?;
    Ok(m)
}
