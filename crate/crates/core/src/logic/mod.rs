//! A small first-order language with power types, interpreted in the
//! clopen tripos of finite discrete spaces.

mod ast;
mod battery;
mod eval;
mod parser;

pub use battery::{battery_model, BatteryExtents, TAUTOLOGIES};
pub use ast::{Formula, SetTerm, Term, TypeExpr};
pub use eval::{Context, Evaluator, Model, ModelPredicate, SequentOutcome, Ty};
pub use parser::{parse, parse_context, parse_sequent};
