//! An executable model of the tripos of compact Hausdorff spaces with
//! clopen predicates, restricted to finite spaces.
//!
//! * [`topology`]: finite spaces, maps, products, subspaces, one-point compactification.
//! * [`heyting`]: clopen predicates and the Boolean algebra they form.
//! * [`tripos`]: inverse image, the quantifier adjoints and their law checkers.
//! * [`power`]: the weak power object `(2^A)∞`, naming maps and the equality predicate.
//! * [`logic`]: a small higher-order language evaluated in this structure.

pub mod error;
pub mod heyting;
pub mod logic;
pub mod power;
pub mod topology;
pub mod tripos;

pub use error::{Error, Result};
pub use heyting::{ClopenAlgebra, Predicate};
pub use power::PowerObject;
pub use topology::{ContMap, FinSpace, PointSet, Space};
