//! Type checking and evaluation of formulas into clopen predicates.
//!
//! A formula in context `x1 : T1, …, xn : Tn` denotes a predicate on the
//! left-major product `T1 × … × Tn`. Variables are resolved to context
//! positions before evaluation; a bound variable is always appended as the
//! last factor, so quantifiers act along the projection that drops it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use super::ast::{Formula, SetTerm, Term, TypeExpr};
use crate::error::{Error, Result};
use crate::heyting::Predicate;
use crate::power::{equality_predicate_with, PowerObject};
use crate::topology::{
    product_all, ContMap, Product, Space, DEFAULT_POINT_CAP,
};
use crate::tripos::{exists_along, forall_along, reindex};

/// A resolved type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ty {
    Base(Space),
    Power(Box<Ty>),
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ty::Base(s) => f.write_str(s.name()),
            Ty::Power(t) => write!(f, "P({t})"),
        }
    }
}

/// A predicate symbol: a clopen predicate on the product of its signature.
#[derive(Debug, Clone)]
pub struct ModelPredicate {
    pub signature: Vec<Space>,
    pub predicate: Predicate,
}

/// Named spaces and predicates that formulas refer to.
#[derive(Debug, Clone, Default)]
pub struct Model {
    spaces: BTreeMap<String, Space>,
    predicates: BTreeMap<String, ModelPredicate>,
}

impl Model {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_space(&mut self, space: Space) {
        self.spaces.insert(space.name().to_string(), space);
    }

    /// Registers a predicate on `signature[0] × … × signature[n-1]` given by
    /// the product point indices in `extent`.
    pub fn add_predicate(
        &mut self,
        name: impl Into<String>,
        signature: Vec<Space>,
        extent: &[usize],
    ) -> Result<()> {
        let prod = product_all(&signature, DEFAULT_POINT_CAP)?;
        let predicate = Predicate::from_indices(&prod.space, extent)?;
        self.predicates.insert(
            name.into(),
            ModelPredicate {
                signature,
                predicate,
            },
        );
        Ok(())
    }

    pub fn space(&self, name: &str) -> Result<&Space> {
        self.spaces
            .get(name)
            .ok_or_else(|| Error::UnknownSpace(name.to_string()))
    }

    pub fn spaces(&self) -> impl Iterator<Item = &Space> {
        self.spaces.values()
    }

    pub fn predicate(&self, name: &str) -> Result<&ModelPredicate> {
        self.predicates
            .get(name)
            .ok_or_else(|| Error::UnknownPredicate(name.to_string()))
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&String, &ModelPredicate)> {
        self.predicates.iter()
    }
}

/// A typing context: distinct variables with their types.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Context {
    vars: Vec<(String, Ty)>,
}

impl Context {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(vars: Vec<(String, Ty)>) -> Result<Self> {
        for (i, (v, _)) in vars.iter().enumerate() {
            if vars[..i].iter().any(|(w, _)| w == v) {
                return Err(Error::Type(format!("variable `{v}` declared twice in context")));
            }
        }
        Ok(Context { vars })
    }

    pub fn vars(&self) -> &[(String, Ty)] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }
}

#[derive(Debug, Clone)]
enum CTerm {
    Var(usize),
    Point(usize),
}

#[derive(Debug, Clone)]
enum CSet {
    Var(usize),
    Comprehension(Ty, Box<Core>),
}

/// Resolved formula: variables are context positions, every term is typed.
#[derive(Debug, Clone)]
enum Core {
    Top,
    Bottom,
    Atom(String, Vec<(CTerm, Ty)>),
    Not(Box<Core>),
    And(Box<Core>, Box<Core>),
    Or(Box<Core>, Box<Core>),
    Implies(Box<Core>, Box<Core>),
    Iff(Box<Core>, Box<Core>),
    Forall(Ty, Box<Core>),
    Exists(Ty, Box<Core>),
    Member(CTerm, Ty, CSet),
    Eq(CTerm, CTerm, Ty),
}

/// Result of checking `φ ⊢ ψ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequentOutcome {
    pub holds: bool,
    /// Least context point satisfying `φ` but not `ψ`, with its label.
    pub counterexample: Option<(usize, String)>,
}

/// Evaluates formulas against a model. Power objects, equality predicates
/// and context products are cached; the cache is shared across threads.
pub struct Evaluator<'m> {
    model: &'m Model,
    cap: usize,
    powers: Mutex<HashMap<Space, Arc<PowerObject>>>,
    deltas: Mutex<HashMap<Space, Predicate>>,
    products: Mutex<HashMap<Vec<Space>, Arc<Product>>>,
}

impl<'m> Evaluator<'m> {
    pub fn new(model: &'m Model) -> Self {
        Self::with_cap(model, DEFAULT_POINT_CAP)
    }

    pub fn with_cap(model: &'m Model, cap: usize) -> Self {
        Evaluator {
            model,
            cap,
            powers: Mutex::new(HashMap::new()),
            deltas: Mutex::new(HashMap::new()),
            products: Mutex::new(HashMap::new()),
        }
    }

    pub fn model(&self) -> &Model {
        self.model
    }

    pub fn power_object(&self, base: &Space) -> Result<Arc<PowerObject>> {
        if let Some(p) = self.powers.lock().unwrap().get(base) {
            return Ok(p.clone());
        }
        let p = Arc::new(PowerObject::with_cap(base, self.cap)?);
        self.powers
            .lock()
            .unwrap()
            .insert(base.clone(), p.clone());
        Ok(p)
    }

    fn delta(&self, t: &Space) -> Result<Predicate> {
        if let Some(d) = self.deltas.lock().unwrap().get(t) {
            return Ok(d.clone());
        }
        let d = equality_predicate_with(&*self.power_object(t)?, self.cap)?;
        self.deltas.lock().unwrap().insert(t.clone(), d.clone());
        Ok(d)
    }

    fn product(&self, factors: &[Space]) -> Result<Arc<Product>> {
        if let Some(p) = self.products.lock().unwrap().get(factors) {
            return Ok(p.clone());
        }
        let p = Arc::new(product_all(factors, self.cap)?);
        self.products
            .lock()
            .unwrap()
            .insert(factors.to_vec(), p.clone());
        Ok(p)
    }

    /// The space a type denotes.
    pub fn space_of(&self, ty: &Ty) -> Result<Space> {
        match ty {
            Ty::Base(s) => Ok(s.clone()),
            Ty::Power(inner) => Ok(self.power_object(&self.space_of(inner)?)?.power().clone()),
        }
    }

    pub fn resolve_type(&self, t: &TypeExpr) -> Result<Ty> {
        match t {
            TypeExpr::Named(n) => Ok(Ty::Base(self.model.space(n)?.clone())),
            TypeExpr::Power(inner) => Ok(Ty::Power(Box::new(self.resolve_type(inner)?))),
        }
    }

    /// Builds a context from surface declarations.
    pub fn context(&self, decls: &[(String, TypeExpr)]) -> Result<Context> {
        Context::new(
            decls
                .iter()
                .map(|(v, t)| Ok((v.clone(), self.resolve_type(t)?)))
                .collect::<Result<_>>()?,
        )
    }

    /// The space a context denotes.
    pub fn context_space(&self, ctx: &Context) -> Result<Space> {
        let spaces = ctx
            .vars
            .iter()
            .map(|(_, t)| self.space_of(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.product(&spaces)?.space.clone())
    }

    /// Checks `f` in `ctx` and evaluates it to a predicate on the context space.
    pub fn eval(&self, f: &Formula, ctx: &Context) -> Result<Predicate> {
        let mut scope = ctx.vars.clone();
        let core = self.check(f, &mut scope)?;
        let types: Vec<Ty> = ctx.vars.iter().map(|(_, t)| t.clone()).collect();
        self.eval_core(&core, &types)
    }

    /// `φ ⊢ ψ`: whether `⟦φ⟧ ≤ ⟦ψ⟧` in the context algebra.
    pub fn sequent(&self, lhs: &Formula, rhs: &Formula, ctx: &Context) -> Result<SequentOutcome> {
        let l = self.eval(lhs, ctx)?;
        let r = self.eval(rhs, ctx)?;
        let witness = l.extent().difference(r.extent()).first();
        Ok(SequentOutcome {
            holds: witness.is_none(),
            counterexample: witness.map(|p| (p, l.space().label(p).to_string())),
        })
    }

    fn lookup(scope: &[(String, Ty)], name: &str) -> Result<(usize, Ty)> {
        scope
            .iter()
            .rposition(|(v, _)| v == name)
            .map(|i| (i, scope[i].1.clone()))
            .ok_or_else(|| Error::UnboundVariable(name.to_string()))
    }

    fn check_term(&self, t: &Term, scope: &[(String, Ty)]) -> Result<(CTerm, Ty)> {
        match t {
            Term::Var(v) => {
                let (i, ty) = Self::lookup(scope, v)?;
                Ok((CTerm::Var(i), ty))
            }
            Term::Point { label, space } => {
                let s = self.model.space(space)?;
                let p = s.index_of(label).ok_or_else(|| Error::UnknownPoint {
                    space: space.clone(),
                    label: label.clone(),
                })?;
                Ok((CTerm::Point(p), Ty::Base(s.clone())))
            }
        }
    }

    fn check_binder(
        &self,
        var: &str,
        ty: &TypeExpr,
        body: &Formula,
        scope: &mut Vec<(String, Ty)>,
    ) -> Result<(Ty, Core)> {
        let ty = self.resolve_type(ty)?;
        scope.push((var.to_string(), ty.clone()));
        let body = self.check(body, scope);
        scope.pop();
        Ok((ty, body?))
    }

    fn check(&self, f: &Formula, scope: &mut Vec<(String, Ty)>) -> Result<Core> {
        let bin = |s: &Self, a: &Formula, b: &Formula, scope: &mut Vec<(String, Ty)>| {
            Ok::<_, Error>((Box::new(s.check(a, scope)?), Box::new(s.check(b, scope)?)))
        };
        Ok(match f {
            Formula::Top => Core::Top,
            Formula::Bottom => Core::Bottom,
            Formula::Atom(name, args) => {
                let sym = self.model.predicate(name)?;
                if sym.signature.len() != args.len() {
                    return Err(Error::Type(format!(
                        "`{name}` takes {} argument(s), got {}",
                        sym.signature.len(),
                        args.len()
                    )));
                }
                let mut checked = Vec::with_capacity(args.len());
                for (arg, expected) in args.iter().zip(&sym.signature) {
                    let (t, ty) = self.check_term(arg, scope)?;
                    if ty != Ty::Base(expected.clone()) {
                        return Err(Error::Type(format!(
                            "argument `{arg}` of `{name}` has type {ty}, expected {}",
                            expected.name()
                        )));
                    }
                    checked.push((t, ty));
                }
                Core::Atom(name.clone(), checked)
            }
            Formula::Not(a) => Core::Not(Box::new(self.check(a, scope)?)),
            Formula::And(a, b) => {
                let (a, b) = bin(self, a, b, scope)?;
                Core::And(a, b)
            }
            Formula::Or(a, b) => {
                let (a, b) = bin(self, a, b, scope)?;
                Core::Or(a, b)
            }
            Formula::Implies(a, b) => {
                let (a, b) = bin(self, a, b, scope)?;
                Core::Implies(a, b)
            }
            Formula::Iff(a, b) => {
                let (a, b) = bin(self, a, b, scope)?;
                Core::Iff(a, b)
            }
            Formula::Forall(v, t, body) => {
                let (ty, body) = self.check_binder(v, t, body, scope)?;
                Core::Forall(ty, Box::new(body))
            }
            Formula::Exists(v, t, body) => {
                let (ty, body) = self.check_binder(v, t, body, scope)?;
                Core::Exists(ty, Box::new(body))
            }
            Formula::Eq(a, b) => {
                let (ca, ta) = self.check_term(a, scope)?;
                let (cb, tb) = self.check_term(b, scope)?;
                if ta != tb {
                    return Err(Error::Type(format!(
                        "`{a} = {b}` compares {ta} with {tb}"
                    )));
                }
                Core::Eq(ca, cb, ta)
            }
            Formula::Member(t, s) => {
                let (ct, elem) = self.check_term(t, scope)?;
                let set = match s {
                    SetTerm::Var(v) => {
                        let (i, ty) = Self::lookup(scope, v)?;
                        if ty != Ty::Power(Box::new(elem.clone())) {
                            return Err(Error::Type(format!(
                                "`{t} in {v}`: `{v}` has type {ty}, expected P({elem})"
                            )));
                        }
                        CSet::Var(i)
                    }
                    SetTerm::Comprehension { var, ty, body } => {
                        let (ty, body) = self.check_binder(var, ty, body, scope)?;
                        if ty != elem {
                            return Err(Error::Type(format!(
                                "`{t}` has type {elem} but the comprehension ranges over {ty}"
                            )));
                        }
                        CSet::Comprehension(ty, Box::new(body))
                    }
                };
                Core::Member(ct, elem, set)
            }
        })
    }

    fn term_map(&self, t: &CTerm, ctx: &Product, ty: &Ty) -> Result<ContMap> {
        match t {
            CTerm::Var(i) => Ok(ctx.projections[*i].clone()),
            CTerm::Point(p) => ContMap::constant(&ctx.space, &self.space_of(ty)?, *p),
        }
    }

    /// Projection `Γ × T → Γ` dropping the last factor.
    fn drop_last(&self, extended: &Product, ctx: &Product) -> Result<ContMap> {
        let last = extended
            .factors
            .last()
            .map(|s| s.size())
            .expect("extended context has a last factor");
        let table = (0..extended.space.size()).map(|p| p / last).collect();
        ContMap::new("drop", extended.space.clone(), ctx.space.clone(), table)
    }

    fn extend(types: &[Ty], ty: &Ty) -> Vec<Ty> {
        let mut ext = types.to_vec();
        ext.push(ty.clone());
        ext
    }

    fn spaces(&self, types: &[Ty]) -> Result<Vec<Space>> {
        types.iter().map(|t| self.space_of(t)).collect()
    }

    fn eval_core(&self, core: &Core, types: &[Ty]) -> Result<Predicate> {
        let ctx = self.product(&self.spaces(types)?)?;
        let space = &ctx.space;
        match core {
            Core::Top => Ok(Predicate::top(space)),
            Core::Bottom => Ok(Predicate::bottom(space)),
            Core::Atom(name, args) => {
                let sym = self.model.predicate(name)?;
                let target = self.product(&sym.signature)?;
                let pairing = if args.is_empty() {
                    ContMap::to_terminal(space, &target.space)?
                } else {
                    let maps = args
                        .iter()
                        .map(|(t, ty)| self.term_map(t, &ctx, ty))
                        .collect::<Result<Vec<_>>>()?;
                    target.tuple(&maps)?
                };
                reindex(&pairing, &sym.predicate)
            }
            Core::Not(a) => Ok(self.eval_core(a, types)?.neg()),
            Core::And(a, b) => self.eval_core(a, types)?.meet(&self.eval_core(b, types)?),
            Core::Or(a, b) => self.eval_core(a, types)?.join(&self.eval_core(b, types)?),
            Core::Implies(a, b) => self.eval_core(a, types)?.implies(&self.eval_core(b, types)?),
            Core::Iff(a, b) => self.eval_core(a, types)?.iff(&self.eval_core(b, types)?),
            Core::Forall(ty, body) | Core::Exists(ty, body) => {
                let ext_types = Self::extend(types, ty);
                let ext = self.product(&self.spaces(&ext_types)?)?;
                let inner = self.eval_core(body, &ext_types)?;
                let drop = self.drop_last(&ext, &ctx)?;
                if matches!(core, Core::Forall(..)) {
                    forall_along(&drop, &inner)
                } else {
                    exists_along(&drop, &inner)
                }
            }
            Core::Eq(a, b, ty) => {
                let t = self.space_of(ty)?;
                let delta = self.delta(&t)?;
                let tt = self.product(&[t.clone(), t.clone()])?;
                let pairing = tt.tuple(&[self.term_map(a, &ctx, ty)?, self.term_map(b, &ctx, ty)?])?;
                reindex(&pairing, &delta)
            }
            Core::Member(t, elem, set) => {
                let bundle = self.power_object(&self.space_of(elem)?)?;
                let elem_map = self.term_map(t, &ctx, elem)?;
                let set_map = match set {
                    CSet::Var(i) => ctx.projections[*i].clone(),
                    CSet::Comprehension(ty, body) => self.name_of_comprehension(&bundle, ty, body, types, &ctx)?,
                };
                let pairing = bundle.membership_space.tuple(&[elem_map, set_map])?;
                reindex(&pairing, &bundle.membership)
            }
        }
    }

    /// `{ x : T | body }` as the name `Γ → PT` of the body, reordered onto `T × Γ`.
    fn name_of_comprehension(
        &self,
        bundle: &PowerObject,
        ty: &Ty,
        body: &Core,
        types: &[Ty],
        ctx: &Product,
    ) -> Result<ContMap> {
        let ext_types = Self::extend(types, ty);
        let ext = self.product(&self.spaces(&ext_types)?)?;
        let inner = self.eval_core(body, &ext_types)?;
        let elem = &bundle.base;
        let swapped = self.product(&[elem.clone(), ctx.space.clone()])?;
        let n = elem.size();
        let table = (0..swapped.space.size())
            .map(|p| {
                let c = swapped.coords(p);
                c[1] * n + c[0]
            })
            .collect();
        let swap = ContMap::new("swap", swapped.space.clone(), ext.space.clone(), table)?;
        let gamma = reindex(&swap, &inner)?;
        bundle.name(&ctx.space, &gamma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse, parse_context, parse_sequent};
    use crate::topology::FinSpace;

    fn model() -> Model {
        let x = FinSpace::discrete("X", vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let mut m = Model::new();
        m.add_space(x.clone());
        m.add_predicate("p", vec![x.clone()], &[0, 2]).unwrap();
        // r(u, v) iff u = a
        m.add_predicate("r", vec![x.clone(), x], &[0, 1, 2]).unwrap();
        m
    }

    fn ctx(ev: &Evaluator, s: &str) -> Context {
        ev.context(&parse_context(s).unwrap()).unwrap()
    }

    #[test]
    fn atoms_and_connectives() {
        let m = model();
        let ev = Evaluator::new(&m);
        let c = ctx(&ev, "x : X");
        let p = ev.eval(&parse("p(x)").unwrap(), &c).unwrap();
        assert_eq!(p.extent().iter().collect::<Vec<_>>(), vec![0, 2]);
        let np = ev.eval(&parse("not p(x) or x = b@X").unwrap(), &c).unwrap();
        assert_eq!(np.extent().iter().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn quantifiers_drop_the_bound_variable() {
        let m = model();
        let ev = Evaluator::new(&m);
        let c = ctx(&ev, "x : X");
        let some = ev.eval(&parse("exists y : X . r(x, y)").unwrap(), &c).unwrap();
        assert_eq!(some.extent().iter().collect::<Vec<_>>(), vec![0]);
        let all = ev.eval(&parse("forall y : X . r(y, x)").unwrap(), &c).unwrap();
        assert!(all.is_bottom());
        let closed = ev.eval(&parse("exists x : X . p(x)").unwrap(), &Context::empty()).unwrap();
        assert!(closed.is_top());
    }

    #[test]
    fn equality_is_the_diagonal() {
        let m = model();
        let ev = Evaluator::new(&m);
        let c = ctx(&ev, "x : X, y : X");
        let eq = ev.eval(&parse("x = y").unwrap(), &c).unwrap();
        assert_eq!(eq.extent().iter().collect::<Vec<_>>(), vec![0, 4, 8]);
    }

    #[test]
    fn comprehension_members() {
        let m = model();
        let ev = Evaluator::new(&m);
        let c = ctx(&ev, "x : X");
        let f = parse("x in { y : X | p(y) } iff p(x)").unwrap();
        assert!(ev.eval(&f, &c).unwrap().is_top());
        let c = ctx(&ev, "x : X, s : P(X)");
        let f = parse("x in s implies exists y : X . y in s").unwrap();
        assert!(ev.eval(&f, &c).unwrap().is_top());
    }

    #[test]
    fn sequent_counterexample() {
        let m = model();
        let ev = Evaluator::new(&m);
        let c = ctx(&ev, "x : X");
        let (l, r) = parse_sequent("top |- p(x)").unwrap();
        let out = ev.sequent(&l, &r, &c).unwrap();
        assert!(!out.holds);
        assert_eq!(out.counterexample, Some((1, "(b)".to_string())));
    }

    #[test]
    fn type_errors() {
        let m = model();
        let ev = Evaluator::new(&m);
        let c = ctx(&ev, "x : X, s : P(X)");
        assert!(matches!(ev.eval(&parse("x = s").unwrap(), &c), Err(Error::Type(_))));
        assert!(matches!(ev.eval(&parse("p(x, x)").unwrap(), &c), Err(Error::Type(_))));
        assert!(matches!(ev.eval(&parse("q(x)").unwrap(), &c), Err(Error::UnknownPredicate(_))));
        assert!(matches!(ev.eval(&parse("p(z)").unwrap(), &c), Err(Error::UnboundVariable(_))));
        assert!(matches!(
            ev.eval(&parse("d@X = x").unwrap(), &c),
            Err(Error::UnknownPoint { .. })
        ));
    }
}
