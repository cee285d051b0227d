use crate::geom::{Axis, Instance};
use crate::index::{RBox, RangeIndex};
use crate::rank::Ranked;
use crate::shape::{Side, Solution};

/// Static range-emptiness structure over all endpoints of an instance.
#[derive(Debug, Clone)]
pub struct RangeCounter {
    pts: Ranked,
    index: RangeIndex,
}

impl RangeCounter {
    pub fn new(inst: &Instance) -> Self {
        let pts = Ranked::new(inst);
        let index = RangeIndex::over_all(pts.points(), Axis::X);
        RangeCounter { pts, index }
    }

    pub fn any_in(&self, q: &RBox) -> bool {
        self.index.any_in(q)
    }
}

/// True iff pushing some side of the solution's region to infinity sweeps
/// over no endpoint, so a stabber with fewer sides has the same class.
pub fn is_trivial(sol: &Solution, inst: &Instance, counter: &RangeCounter) -> bool {
    debug_assert_eq!(inst.n() * 2, counter.pts.len());
    let mut region = RBox::ALL;
    for (&side, &anchor) in sol.shape.sides().iter().zip(&sol.anchors) {
        let p = counter.pts.point(anchor);
        match side {
            Side::Left => region.x_lo = p.x,
            Side::Right => region.x_hi = p.x,
            Side::Bottom => region.y_lo = p.y,
            Side::Top => region.y_hi = p.y,
        }
    }
    sol.shape.sides().iter().any(|&side| {
        let mut slab = region;
        match side {
            Side::Left => {
                slab.x_hi = region.x_lo - 1;
                slab.x_lo = RBox::ALL.x_lo;
            }
            Side::Right => {
                slab.x_lo = region.x_hi + 1;
                slab.x_hi = RBox::ALL.x_hi;
            }
            Side::Bottom => {
                slab.y_hi = region.y_lo - 1;
                slab.y_lo = RBox::ALL.y_lo;
            }
            Side::Top => {
                slab.y_lo = region.y_hi + 1;
                slab.y_hi = RBox::ALL.y_hi;
            }
        }
        !counter.any_in(&slab)
    })
}
