//! Points, segments, and instances.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coord::Coord;
use crate::error::{Result, StabError};
use crate::shape::Shape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::X => f.write_str("x"),
            Axis::Y => f.write_str("y"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: impl Into<Coord>, y: impl Into<Coord>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn coord(&self, axis: Axis) -> &Coord {
        match axis {
            Axis::X => &self.x,
            Axis::Y => &self.y,
        }
    }
}

/// Which of the two stored endpoints of a segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum End {
    A,
    B,
}

impl End {
    pub fn other(self) -> End {
        match self {
            End::A => End::B,
            End::B => End::A,
        }
    }
}

/// An endpoint of segment `seg`. Orders by `(seg, end)`, which is the
/// canonical order for stabber classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndpointId {
    pub seg: usize,
    pub end: End,
}

impl EndpointId {
    pub fn new(seg: usize, end: End) -> Self {
        EndpointId { seg, end }
    }

    /// Dense index `2 * seg + end`.
    pub fn index(self) -> usize {
        2 * self.seg + (self.end == End::B) as usize
    }

    pub fn from_index(i: usize) -> Self {
        EndpointId {
            seg: i / 2,
            end: if i.is_multiple_of(2) { End::A } else { End::B },
        }
    }

    pub fn partner(self) -> Self {
        EndpointId {
            seg: self.seg,
            end: self.end.other(),
        }
    }
}

impl fmt::Display for EndpointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{:?})", self.seg, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn endpoint(&self, end: End) -> &Point {
        match end {
            End::A => &self.a,
            End::B => &self.b,
        }
    }

    /// Both endpoints share an x-coordinate.
    pub fn is_vertical(&self) -> bool {
        self.a.x == self.b.x
    }

    /// Both endpoints share a y-coordinate.
    pub fn is_horizontal(&self) -> bool {
        self.a.y == self.b.y
    }

    fn extreme(&self, axis: Axis, high: bool) -> End {
        let (ca, cb) = (self.a.coord(axis), self.b.coord(axis));
        if (ca > cb) == high {
            End::A
        } else {
            End::B
        }
    }

    /// Endpoint with the larger y (ties resolve to `B`).
    pub fn upper(&self) -> End {
        self.extreme(Axis::Y, true)
    }

    pub fn lower(&self) -> End {
        self.upper().other()
    }

    pub fn left(&self) -> End {
        self.right().other()
    }

    pub fn right(&self) -> End {
        self.extreme(Axis::X, true)
    }
}

/// A nonempty ordered list of segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    segments: Vec<Segment>,
}

impl Instance {
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(StabError::EmptyInstance);
        }
        if let Some(i) = segments.iter().position(|s| s.a == s.b) {
            return Err(StabError::ZeroLength(i));
        }
        Ok(Instance { segments })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(segs: &[[(i64, i64); 2]]) -> Result<Self> {
        Instance::new(
            segs.iter()
                .map(|[a, b]| Segment::new(Point::new(a.0, a.1), Point::new(b.0, b.1)))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.segments.len()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn point(&self, id: EndpointId) -> &Point {
        self.segments[id.seg].endpoint(id.end)
    }

    pub fn endpoint_ids(&self) -> impl Iterator<Item = EndpointId> + '_ {
        (0..2 * self.n()).map(EndpointId::from_index)
    }

    /// Applies a coordinate map to every endpoint, keeping endpoint identities.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Instance {
        Instance {
            segments: self
                .segments
                .iter()
                .map(|s| Segment::new(f(&s.a), f(&s.b)))
                .collect(),
        }
    }

    /// Swaps x and y.
    pub fn transpose(&self) -> Instance {
        self.map_points(|p| Point {
            x: p.y.clone(),
            y: p.x.clone(),
        })
    }
}

/// Checks that the endpoint coordinates the shape depends on are pairwise
/// distinct, reporting the first colliding pair.
pub fn validate_general_position(instance: &Instance, shape: Shape) -> Result<()> {
    for axis in shape.constrained_axes() {
        let mut ids: Vec<EndpointId> = instance.endpoint_ids().collect();
        ids.sort_by(|a, b| {
            instance
                .point(*a)
                .coord(axis)
                .cmp(instance.point(*b).coord(axis))
                .then(a.cmp(b))
        });
        if let Some(w) = ids
            .windows(2)
            .find(|w| instance.point(w[0]).coord(axis) == instance.point(w[1]).coord(axis))
        {
            return Err(StabError::DegenerateInput {
                axis,
                first: w[0],
                second: w[1],
            });
        }
    }
    Ok(())
}
