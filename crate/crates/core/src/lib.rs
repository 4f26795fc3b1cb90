//! Turaev-Viro invariants of closed 3-manifold triangulations, computed
//! exactly in cyclotomic fields.
//!
//! Colours are stored doubled throughout: an edge colour i ∈ {0, 1/2, …}
//! is held as the integer 2i.

pub mod colourings;
pub mod cyclotomic;
pub mod error;
pub mod fastalgo;
pub mod homology;
pub mod loopcoords;
pub mod triangulation;

pub use colourings::{tv, tv_at_class, tv_with_stats, Colouring, EnumerationStats, Filter};
pub use cyclotomic::{CycElement, FieldContext};
pub use error::{Error, Result};
pub use fastalgo::{adm4_structured, bounds, tv4_structured, tv_odd_fast, Adm3Certificate, BoundReport};
pub use triangulation::{parse_triangulation, serialise_triangulation, Triangulation};
