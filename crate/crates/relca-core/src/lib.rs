//! Relational concept analysis over finite formal contexts.
//!
//! The crate is `no_std` (it needs `alloc`). It covers formal contexts and
//! concept lattices, relational and conceptual scaling, the expansion and
//! contraction functions on families of context-lattice pairs, both fixed-point
//! semantics, and the enumeration of acceptable families.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod error;

pub mod conceptual;
pub mod context;
pub mod engine;
pub mod lattice;
pub mod name;
pub mod oracle;
pub mod relational;
pub mod scaling;
pub mod set;
pub mod space;

pub use context::{Attribute, FormalContext};
pub use engine::{ContextLatticePair, Family};
pub use error::{Error, Result};
pub use lattice::{fca, kappa, Concept, ConceptLattice};
pub use relational::RelationalContextFamily;
pub use scaling::{Relation, RelOp, ScaledAttribute, ScalingConfig};
pub use set::ObjSet;
