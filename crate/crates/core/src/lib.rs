//! Combinatorics of the discrete cluster category of type A with `n` limit
//! points: arcs and their triangles, non-crossing partitions and the
//! Kreweras complement, thick subcategories, t-structures and their lattice.

pub mod arcs;
pub mod circle;
pub mod error;
pub mod lattice;
pub mod noncrossing;
pub mod oracle;
pub mod render;
pub mod thick;
pub mod tstructure;
pub mod verify;

pub use arcs::{
    cocone_of_crossing, factors_through, hom_dim, zigzag_cone, ArcObject, Construction, Triangle,
};
pub use circle::{
    cross, cyclic_lt3, make_arc, Arc, ArcOrZero, CircleModel, CirclePoint, HalfOpenRegion,
    MarkedPoint,
};
pub use error::{Error, Result};
pub use lattice::{ts_join, ts_leq, ts_meet, HasseGraph};
pub use noncrossing::{catalan, nc_enumerate, nnc_count, nnc_enumerate, Partition};
pub use thick::{thick_contains, thick_generated, ThickSubcat};
pub use tstructure::{
    aisle_contains, aisle_generated, approx_triangle, coaisle_contains, coaisle_presentation,
    heart, Decoration, DecorationLevel, EquivClass, TStructure,
};
