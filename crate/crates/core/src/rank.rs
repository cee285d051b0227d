//! Rank space: every algorithm in this crate only compares coordinates, so
//! solvers work on dense integer ranks instead of rationals.

use std::sync::Arc;

use crate::coord::Coord;
use crate::geom::{Axis, EndpointId, Instance};

/// A point in rank space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RPoint {
    pub x: i64,
    pub y: i64,
}

impl RPoint {
    pub fn new(x: i64, y: i64) -> Self {
        RPoint { x, y }
    }

    pub fn get(self, axis: Axis) -> i64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
        }
    }
}

/// Endpoints of an instance mapped to ranks, indexed by
/// [`EndpointId::index`]. Equal coordinates share a rank.
#[derive(Debug, Clone)]
pub struct Ranked {
    pts: Arc<[RPoint]>,
}

fn ranks(inst: &Instance, axis: Axis) -> Vec<i64> {
    let coords: Vec<&Coord> = inst.endpoint_ids().map(|id| inst.point(id).coord(axis)).collect();
    let mut sorted = coords.clone();
    sorted.sort();
    sorted.dedup();
    coords
        .iter()
        .map(|c| sorted.binary_search(c).expect("present") as i64)
        .collect()
}

impl Ranked {
    pub fn new(inst: &Instance) -> Self {
        let xs = ranks(inst, Axis::X);
        let ys = ranks(inst, Axis::Y);
        Ranked {
            pts: xs
                .into_iter()
                .zip(ys)
                .map(|(x, y)| RPoint { x, y })
                .collect(),
        }
    }

    pub fn from_points(pts: Vec<RPoint>) -> Self {
        assert!(pts.len().is_multiple_of(2), "endpoints come in pairs");
        Ranked { pts: pts.into() }
    }

    /// Applies an order-preserving-or-reversing map such as a reflection or
    /// a swap of the axes.
    pub fn map(&self, f: impl Fn(RPoint) -> RPoint) -> Ranked {
        Ranked {
            pts: self.pts.iter().map(|&p| f(p)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.pts.len() / 2
    }

    pub fn len(&self) -> usize {
        self.pts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pts.is_empty()
    }

    pub fn at(&self, idx: usize) -> RPoint {
        self.pts[idx]
    }

    pub fn point(&self, id: EndpointId) -> RPoint {
        self.pts[id.index()]
    }

    pub fn points(&self) -> &[RPoint] {
        &self.pts
    }

    pub fn shared(&self) -> Arc<[RPoint]> {
        self.pts.clone()
    }

    /// Index of the endpoint of segment `seg` with the larger coordinate on
    /// `axis` (ties go to `B`).
    pub fn high_end(&self, seg: usize, axis: Axis) -> usize {
        let (a, b) = (2 * seg, 2 * seg + 1);
        if self.pts[a].get(axis) > self.pts[b].get(axis) {
            a
        } else {
            b
        }
    }

    pub fn low_end(&self, seg: usize, axis: Axis) -> usize {
        self.high_end(seg, axis) ^ 1
    }
}
