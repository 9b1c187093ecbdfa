//! Finite topological spaces and continuous maps.
//!
//! Every finite space is compact, and a finite space is Hausdorff exactly
//! when it is discrete, so the finite objects of compact Hausdorff spaces are
//! the discrete spaces. Non-discrete spaces are still representable so that
//! model files can be validated and the topological lemmas checked on them.

mod construct;
mod map;
mod pointset;
mod space;

pub use construct::{
    all_topologies, alexandroff, product, product_all, product_with_cap, subspace,
    Compactification, CompactificationTag, Product, DEFAULT_POINT_CAP,
};
pub use map::{same_space, ContMap};
pub use pointset::PointSet;
pub use space::{FinSpace, Space, SpaceDescriptor, Topology, OPEN_FAMILY_CAP};
