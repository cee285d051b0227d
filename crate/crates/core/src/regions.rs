//! The red / blue / gray partition of the plane maintained while cascading.
//!
//! The red region is the smallest region of the stabber's shape containing
//! every red point: a box whose unbounded sides sit at infinity. A point `p`
//! is blue (forbidden) iff the smallest such region containing the red points
//! and `p` would contain a blue point. Relative to the red box the plane
//! splits into a 3x3 grid of cells; a blue point in an edge cell forbids a
//! halfplane, and a blue point in a corner cell forbids a quadrant. Corner
//! quadrants are kept as staircases of non-dominated corners.
//!
//! Strips, quadrants and 3-sided rectangles are the special cases with two,
//! two and one unbounded sides.

use std::collections::BTreeMap;

use crate::classify::Color;
use crate::index::{RBox, NEG_INF, POS_INF};
use crate::rank::RPoint;
use crate::shape::Side;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Band {
    Low,
    Mid,
    High,
}

/// A cell of the grid around the red box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: Band,
    pub y: Band,
}

impl Cell {
    pub const fn new(x: Band, y: Band) -> Self {
        Cell { x, y }
    }

    // Names of the gray cells around a downward-open 3-sided rectangle.
    pub const A: Cell = Cell::new(Band::Low, Band::Mid);
    pub const B: Cell = Cell::new(Band::Low, Band::High);
    pub const C: Cell = Cell::new(Band::Mid, Band::High);
    pub const D: Cell = Cell::new(Band::High, Band::High);
    pub const E: Cell = Cell::new(Band::High, Band::Mid);
    pub const BELOW: Cell = Cell::new(Band::Mid, Band::Low);

    pub fn is_edge(self) -> bool {
        (self.x == Band::Mid) != (self.y == Band::Mid)
    }

    /// The side of the red box an edge cell lies beyond.
    pub fn edge_side(self) -> Option<Side> {
        match (self.x, self.y) {
            (Band::Low, Band::Mid) => Some(Side::Left),
            (Band::High, Band::Mid) => Some(Side::Right),
            (Band::Mid, Band::Low) => Some(Side::Bottom),
            (Band::Mid, Band::High) => Some(Side::Top),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Red,
    Blue,
    Gray(Cell),
    White,
}

/// The red region would have to overlap a blue point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Contradiction;

/// A region whose endpoints must now take `color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Query {
    pub area: RBox,
    pub color: Color,
}

fn side_index(s: Side) -> usize {
    match s {
        Side::Left => 0,
        Side::Top => 1,
        Side::Right => 2,
        Side::Bottom => 3,
    }
}

/// Coordinate of `p` measured outward across side `s`.
pub fn outward(p: RPoint, s: Side) -> i64 {
    match s {
        Side::Left => -p.x,
        Side::Right => p.x,
        Side::Bottom => -p.y,
        Side::Top => p.y,
    }
}

/// The closed halfplane `{q : outward(q, s) >= t}`.
fn beyond(s: Side, t: i64) -> RBox {
    let mut b = RBox::ALL;
    match s {
        Side::Left => b.x_hi = -t,
        Side::Right => b.x_lo = t,
        Side::Bottom => b.y_hi = -t,
        Side::Top => b.y_lo = t,
    }
    b
}

fn intersect(a: RBox, b: RBox) -> RBox {
    RBox {
        x_lo: a.x_lo.max(b.x_lo),
        x_hi: a.x_hi.min(b.x_hi),
        y_lo: a.y_lo.max(b.y_lo),
        y_hi: a.y_hi.min(b.y_hi),
    }
}

/// Blue corners beyond an x-side `sx` and a y-side `sy`, stored as
/// `(u, w) = (outward(b, sx), outward(b, sy))`. Each forbids
/// `{u >= bu, w >= bw}`; only minimal corners are kept, so the map is sorted
/// by increasing `u` with strictly decreasing `w`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Staircase {
    steps: BTreeMap<i64, i64>,
}

impl Staircase {
    pub fn covers(&self, u: i64, w: i64) -> bool {
        self.steps
            .range(..=u)
            .next_back()
            .is_some_and(|(_, &bw)| bw <= w)
    }

    /// Inserts a corner; returns false if it was already covered.
    pub fn insert(&mut self, u: i64, w: i64) -> bool {
        if self.covers(u, w) {
            return false;
        }
        let dominated: Vec<i64> = self
            .steps
            .range(u..)
            .take_while(|(_, &bw)| bw >= w)
            .map(|(&bu, _)| bu)
            .collect();
        for bu in dominated {
            self.steps.remove(&bu);
        }
        self.steps.insert(u, w);
        true
    }

    /// Removes corners with `u <= max_u`; returns the smallest `w` among them.
    fn pop_low_u(&mut self, max_u: i64) -> Option<i64> {
        let gone: Vec<(i64, i64)> = self.steps.range(..=max_u).map(|(&a, &b)| (a, b)).collect();
        for (bu, _) in &gone {
            self.steps.remove(bu);
        }
        gone.last().map(|&(_, w)| w)
    }

    /// Removes corners with `w <= max_w`; returns the smallest `u` among them.
    fn pop_low_w(&mut self, max_w: i64) -> Option<i64> {
        let gone: Vec<i64> = self
            .steps
            .iter()
            .rev()
            .take_while(|(_, &bw)| bw <= max_w)
            .map(|(&bu, _)| bu)
            .collect();
        for bu in &gone {
            self.steps.remove(bu);
        }
        gone.last().copied()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.steps.iter().map(|(&u, &w)| (u, w))
    }
}

const CORNERS: [(Side, Side); 4] = [
    (Side::Left, Side::Top),
    (Side::Right, Side::Top),
    (Side::Left, Side::Bottom),
    (Side::Right, Side::Bottom),
];

fn corner_index(sx: Side, sy: Side) -> usize {
    CORNERS
        .iter()
        .position(|&c| c == (sx, sy))
        .expect("x side then y side")
}

/// Red/blue state for any stabber shape with the given bounded sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRegions {
    bounded: [bool; 4],
    // outward extent of the red box per side; POS_INF for unbounded sides
    red: Option<[i64; 4]>,
    // a blue point in the edge cell beyond side s forbids outward(., s) >= edge[s]
    edge: [i64; 4],
    corners: [Staircase; 4],
    white: Vec<Cell>,
    blue_count: usize,
}

impl BoxRegions {
    /// Empty state for a shape whose bounded sides are `sides`.
    pub fn new(sides: &[Side]) -> Self {
        let mut bounded = [false; 4];
        for &s in sides {
            bounded[side_index(s)] = true;
        }
        BoxRegions {
            bounded,
            red: None,
            edge: [POS_INF; 4],
            corners: Default::default(),
            white: Vec::new(),
            blue_count: 0,
        }
    }

    /// Marks a cell as white: gray points there are reported as `White`.
    pub fn with_white(mut self, cell: Cell) -> Self {
        self.white.push(cell);
        self
    }

    pub fn is_bounded(&self, s: Side) -> bool {
        self.bounded[side_index(s)]
    }

    pub fn has_red(&self) -> bool {
        self.red.is_some()
    }

    /// The red region, if any point is red.
    pub fn red_box(&self) -> Option<RBox> {
        let r = self.red?;
        let get = |s: Side| r[side_index(s)];
        Some(RBox {
            x_lo: if get(Side::Left) >= POS_INF { NEG_INF } else { -get(Side::Left) },
            x_hi: get(Side::Right),
            y_lo: if get(Side::Bottom) >= POS_INF { NEG_INF } else { -get(Side::Bottom) },
            y_hi: get(Side::Top),
        })
    }

    /// Threshold of the halfplane forbidden beyond side `s`.
    pub fn edge_threshold(&self, s: Side) -> Option<i64> {
        let t = self.edge[side_index(s)];
        (t < POS_INF).then_some(t)
    }

    pub fn staircase(&self, sx: Side, sy: Side) -> &Staircase {
        &self.corners[corner_index(sx, sy)]
    }

    pub fn in_red(&self, p: RPoint) -> bool {
        match &self.red {
            Some(r) => Side::ALL
                .iter()
                .all(|&s| outward(p, s) <= r[side_index(s)]),
            None => false,
        }
    }

    pub fn is_forbidden(&self, p: RPoint) -> bool {
        Side::ALL
            .iter()
            .any(|&s| outward(p, s) >= self.edge[side_index(s)])
            || CORNERS.iter().enumerate().any(|(i, &(sx, sy))| {
                self.corners[i].covers(outward(p, sx), outward(p, sy))
            })
    }

    /// Grid cell of `p`; `None` while no point is red.
    pub fn cell(&self, p: RPoint) -> Option<Cell> {
        let r = self.red.as_ref()?;
        let band = |lo: Side, hi: Side| {
            if outward(p, lo) > r[side_index(lo)] {
                Band::Low
            } else if outward(p, hi) > r[side_index(hi)] {
                Band::High
            } else {
                Band::Mid
            }
        };
        Some(Cell {
            x: band(Side::Left, Side::Right),
            y: band(Side::Bottom, Side::Top),
        })
    }

    pub fn locate(&self, p: RPoint) -> Location {
        if self.in_red(p) {
            return Location::Red;
        }
        if self.is_forbidden(p) {
            return Location::Blue;
        }
        match self.cell(p) {
            Some(c) if self.white.contains(&c) => Location::White,
            Some(c) => Location::Gray(c),
            // before anything is red only blue points constrain the plane
            None => Location::White,
        }
    }

    /// Colors `p` red, growing the red region. Returns the regions whose
    /// points changed status.
    pub fn add_red(&mut self, p: RPoint) -> Result<Vec<Query>, Contradiction> {
        let Some(old) = self.red else {
            assert!(self.blue_count == 0, "blue points before any red one");
            let mut r = [POS_INF; 4];
            for s in Side::ALL {
                if self.is_bounded(s) {
                    r[side_index(s)] = outward(p, s);
                }
            }
            self.red = Some(r);
            return Ok(vec![self.red_query()]);
        };
        if self.in_red(p) {
            return Ok(Vec::new());
        }
        if self.is_forbidden(p) {
            return Err(Contradiction);
        }
        let mut r = old;
        for s in Side::ALL {
            let i = side_index(s);
            r[i] = r[i].max(outward(p, s));
        }
        self.red = Some(r);
        let mut out = vec![self.red_query()];
        // corners whose extent along a grown side is now covered by red
        // become edge points of the other side
        for (ci, &(sx, sy)) in CORNERS.iter().enumerate() {
            let (ix, iy) = (side_index(sx), side_index(sy));
            if r[ix] > old[ix] {
                if let Some(w) = self.corners[ci].pop_low_u(r[ix]) {
                    self.lower_edge(sy, w, &mut out);
                }
            }
            if r[iy] > old[iy] {
                if let Some(u) = self.corners[ci].pop_low_w(r[iy]) {
                    self.lower_edge(sx, u, &mut out);
                }
            }
        }
        Ok(out)
    }

    fn lower_edge(&mut self, s: Side, t: i64, out: &mut Vec<Query>) {
        let i = side_index(s);
        if t < self.edge[i] {
            self.edge[i] = t;
            out.push(Query {
                area: beyond(s, t),
                color: Color::Blue,
            });
        }
    }

    fn red_query(&self) -> Query {
        Query {
            area: self.red_box().expect("red"),
            color: Color::Red,
        }
    }

    /// Colors `p` blue. Returns the newly forbidden regions.
    pub fn add_blue(&mut self, p: RPoint) -> Result<Vec<Query>, Contradiction> {
        assert!(self.red.is_some(), "blue point before any red one");
        if self.in_red(p) {
            return Err(Contradiction);
        }
        self.blue_count += 1;
        if self.is_forbidden(p) {
            return Ok(Vec::new());
        }
        let cell = self.cell(p).expect("red");
        let mut out = Vec::new();
        if let Some(s) = cell.edge_side() {
            self.lower_edge(s, outward(p, s), &mut out);
        } else {
            let sx = if cell.x == Band::Low { Side::Left } else { Side::Right };
            let sy = if cell.y == Band::Low { Side::Bottom } else { Side::Top };
            let (u, w) = (outward(p, sx), outward(p, sy));
            self.corners[corner_index(sx, sy)].insert(u, w);
            out.push(Query {
                area: intersect(beyond(sx, u), beyond(sy, w)),
                color: Color::Blue,
            });
        }
        Ok(out)
    }
}
