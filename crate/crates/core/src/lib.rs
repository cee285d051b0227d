//! Enumeration of combinatorially different axis-parallel stabbers for a set
//! of planar segments: halfplanes, strips, quadrants, 3-sided rectangles and
//! rectangles that contain exactly one endpoint of every segment.

pub mod cascade;
pub mod classify;
pub mod coord;
pub mod error;
pub mod gen;
pub mod geom;
pub mod index;
pub mod io;
pub mod oracle;
pub mod rank;
pub mod regions;
pub mod render;
pub mod shape;
pub mod solvers;

pub use classify::{canonical_class, Classification, Color, StabberClass};
pub use coord::Coord;
pub use error::{Result, StabError};
pub use geom::{validate_general_position, Axis, End, EndpointId, Instance, Point, Segment};
pub use shape::{
    realize_region, verify_solution, HalfplaneDir, OpenDir, QuadrantKind, Region, Shape, Side,
    Solution, StripAxis,
};
