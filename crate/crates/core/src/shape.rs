//! Stabber shapes, solutions, and the closed regions they describe.

use std::fmt;
use std::str::FromStr;

use crate::classify::StabberClass;
use crate::coord::Coord;
use crate::error::{Result, StabError};
use crate::geom::{Axis, EndpointId, Instance, Point};

/// Direction in which a halfplane extends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HalfplaneDir {
    Up,
    Down,
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StripAxis {
    Horizontal,
    Vertical,
}

/// Named by the direction the quadrant extends to: `BR` is `{x ≥ a, y ≤ b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadrantKind {
    TL,
    TR,
    BL,
    BR,
}

/// The unbounded direction of a 3-sided rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpenDir {
    Down,
    Up,
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Halfplane(HalfplaneDir),
    Strip(StripAxis),
    Quadrant(QuadrantKind),
    ThreeRect(OpenDir),
    Rect,
}

/// A boundary side. The declaration order is the serialization order of
/// anchors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Top,
    Right,
    Bottom,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Left, Side::Top, Side::Right, Side::Bottom];

    pub fn axis(self) -> Axis {
        match self {
            Side::Left | Side::Right => Axis::X,
            Side::Top | Side::Bottom => Axis::Y,
        }
    }

    /// True for sides that bound the region from above in their axis.
    pub fn is_upper(self) -> bool {
        matches!(self, Side::Top | Side::Right)
    }
}

impl Shape {
    /// Every shape/orientation combination.
    pub const ALL: [Shape; 15] = [
        Shape::Halfplane(HalfplaneDir::Up),
        Shape::Halfplane(HalfplaneDir::Down),
        Shape::Halfplane(HalfplaneDir::Left),
        Shape::Halfplane(HalfplaneDir::Right),
        Shape::Strip(StripAxis::Horizontal),
        Shape::Strip(StripAxis::Vertical),
        Shape::Quadrant(QuadrantKind::TL),
        Shape::Quadrant(QuadrantKind::TR),
        Shape::Quadrant(QuadrantKind::BL),
        Shape::Quadrant(QuadrantKind::BR),
        Shape::ThreeRect(OpenDir::Down),
        Shape::ThreeRect(OpenDir::Up),
        Shape::ThreeRect(OpenDir::Left),
        Shape::ThreeRect(OpenDir::Right),
        Shape::Rect,
    ];

    /// Bounded sides in anchor order.
    pub fn sides(self) -> &'static [Side] {
        use Side::*;
        match self {
            Shape::Halfplane(HalfplaneDir::Up) => &[Bottom],
            Shape::Halfplane(HalfplaneDir::Down) => &[Top],
            Shape::Halfplane(HalfplaneDir::Left) => &[Right],
            Shape::Halfplane(HalfplaneDir::Right) => &[Left],
            Shape::Strip(StripAxis::Horizontal) => &[Top, Bottom],
            Shape::Strip(StripAxis::Vertical) => &[Left, Right],
            Shape::Quadrant(QuadrantKind::TL) => &[Right, Bottom],
            Shape::Quadrant(QuadrantKind::TR) => &[Left, Bottom],
            Shape::Quadrant(QuadrantKind::BL) => &[Top, Right],
            Shape::Quadrant(QuadrantKind::BR) => &[Left, Top],
            Shape::ThreeRect(OpenDir::Down) => &[Left, Top, Right],
            Shape::ThreeRect(OpenDir::Up) => &[Left, Right, Bottom],
            Shape::ThreeRect(OpenDir::Left) => &[Top, Right, Bottom],
            Shape::ThreeRect(OpenDir::Right) => &[Left, Top, Bottom],
            Shape::Rect => &[Left, Top, Right, Bottom],
        }
    }

    pub fn has_side(self, side: Side) -> bool {
        self.sides().contains(&side)
    }

    /// Axes on which endpoint coordinates must be pairwise distinct.
    pub fn constrained_axes(self) -> Vec<Axis> {
        let mut axes: Vec<Axis> = Vec::new();
        for s in self.sides() {
            if !axes.contains(&s.axis()) {
                axes.push(s.axis());
            }
        }
        axes.sort();
        axes
    }

    pub fn kind_name(self) -> &'static str {
        match self {
            Shape::Halfplane(_) => "halfplane",
            Shape::Strip(_) => "strip",
            Shape::Quadrant(_) => "quadrant",
            Shape::ThreeRect(_) => "three-rect",
            Shape::Rect => "rect",
        }
    }

    pub fn orientation_name(self) -> Option<&'static str> {
        Some(match self {
            Shape::Halfplane(HalfplaneDir::Up) | Shape::ThreeRect(OpenDir::Up) => "up",
            Shape::Halfplane(HalfplaneDir::Down) | Shape::ThreeRect(OpenDir::Down) => "down",
            Shape::Halfplane(HalfplaneDir::Left) | Shape::ThreeRect(OpenDir::Left) => "left",
            Shape::Halfplane(HalfplaneDir::Right) | Shape::ThreeRect(OpenDir::Right) => "right",
            Shape::Strip(StripAxis::Horizontal) => "horizontal",
            Shape::Strip(StripAxis::Vertical) => "vertical",
            Shape::Quadrant(QuadrantKind::TL) => "tl",
            Shape::Quadrant(QuadrantKind::TR) => "tr",
            Shape::Quadrant(QuadrantKind::BL) => "bl",
            Shape::Quadrant(QuadrantKind::BR) => "br",
            Shape::Rect => return None,
        })
    }

    /// Parses a kind name plus optional orientation, e.g. `("strip", Some("vertical"))`.
    pub fn parse(kind: &str, orientation: Option<&str>) -> Result<Shape> {
        let kind = kind.to_ascii_lowercase();
        let orientation = orientation.map(|o| o.to_ascii_lowercase());
        Shape::ALL
            .into_iter()
            .find(|s| s.kind_name() == kind && s.orientation_name() == orientation.as_deref())
            .ok_or_else(|| {
                StabError::Parse(format!(
                    "unknown shape {kind:?} with orientation {orientation:?}"
                ))
            })
    }

    /// All orientations of the shape kind named `kind`.
    pub fn orientations_of(kind: &str) -> Vec<Shape> {
        let kind = kind.to_ascii_lowercase();
        Shape::ALL
            .into_iter()
            .filter(|s| s.kind_name() == kind)
            .collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.orientation_name() {
            Some(o) => write!(f, "{}-{}", self.kind_name(), o),
            None => f.write_str(self.kind_name()),
        }
    }
}

impl FromStr for Shape {
    type Err = StabError;

    fn from_str(s: &str) -> Result<Shape> {
        match s.rsplit_once('-') {
            Some((k, o)) if k != "three" => Shape::parse(k, Some(o)),
            _ => Shape::parse(s, None),
        }
    }
}

/// A closed axis-parallel region; `None` bounds are infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub x_min: Option<Coord>,
    pub x_max: Option<Coord>,
    pub y_min: Option<Coord>,
    pub y_max: Option<Coord>,
}

impl Region {
    pub fn contains(&self, p: &Point) -> bool {
        self.x_min.as_ref().is_none_or(|v| &p.x >= v)
            && self.x_max.as_ref().is_none_or(|v| &p.x <= v)
            && self.y_min.as_ref().is_none_or(|v| &p.y >= v)
            && self.y_max.as_ref().is_none_or(|v| &p.y <= v)
    }

    pub fn bound(&self, side: Side) -> Option<&Coord> {
        match side {
            Side::Left => self.x_min.as_ref(),
            Side::Right => self.x_max.as_ref(),
            Side::Bottom => self.y_min.as_ref(),
            Side::Top => self.y_max.as_ref(),
        }
    }
}

/// A stabber: its shape, one anchor endpoint per bounded side (in `Side`
/// order), its class, and whether a stabber with fewer sides is equivalent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    pub shape: Shape,
    pub anchors: Vec<EndpointId>,
    pub class: StabberClass,
    pub trivial: bool,
}

impl Solution {
    /// Builds the minimal representation of `class` under `shape`: each side
    /// is anchored at the red endpoint extreme in that side's direction.
    pub fn from_class(shape: Shape, class: StabberClass, inst: &Instance) -> Solution {
        let anchors = shape
            .sides()
            .iter()
            .map(|&side| extreme_red(&class, inst, side))
            .collect();
        Solution {
            shape,
            anchors,
            class,
            trivial: false,
        }
    }
}

fn extreme_red(class: &StabberClass, inst: &Instance, side: Side) -> EndpointId {
    let axis = side.axis();
    let key = |id: &&EndpointId| inst.point(**id).coord(axis);
    let it = class.reds().iter();
    *if side.is_upper() {
        it.max_by_key(key)
    } else {
        it.min_by_key(key)
    }
    .expect("class is nonempty")
}

/// The inclusion-wise smallest closed region of the solution's shape whose
/// sides pass through its anchors.
pub fn realize_region(sol: &Solution, inst: &Instance) -> Result<Region> {
    let sides = sol.shape.sides();
    if sol.anchors.len() != sides.len() {
        return Err(StabError::MalformedSolution(format!(
            "{} needs {} anchors, got {}",
            sol.shape,
            sides.len(),
            sol.anchors.len()
        )));
    }
    if sol.class.n() != inst.n() {
        return Err(StabError::MalformedSolution(format!(
            "class covers {} segments, instance has {}",
            sol.class.n(),
            inst.n()
        )));
    }
    let mut region = Region {
        x_min: None,
        x_max: None,
        y_min: None,
        y_max: None,
    };
    for (&side, &anchor) in sides.iter().zip(&sol.anchors) {
        if !sol.class.contains(anchor) {
            return Err(StabError::MalformedSolution(format!(
                "anchor {anchor} is not red"
            )));
        }
        let v = Some(inst.point(anchor).coord(side.axis()).clone());
        match side {
            Side::Left => region.x_min = v,
            Side::Right => region.x_max = v,
            Side::Bottom => region.y_min = v,
            Side::Top => region.y_max = v,
        }
    }
    Ok(region)
}

/// True iff the realized region contains exactly the class's red endpoints.
pub fn verify_solution(sol: &Solution, inst: &Instance) -> bool {
    let Ok(region) = realize_region(sol, inst) else {
        return false;
    };
    inst.endpoint_ids()
        .all(|id| region.contains(inst.point(id)) == sol.class.contains(id))
}
