use std::collections::BTreeSet;

use crate::classify::StabberClass;
use crate::geom::{Axis, End, Instance};
use crate::rank::Ranked;
use crate::shape::{HalfplaneDir, Shape};

/// The two complementary halfplane classes along y, if the highest lower
/// endpoint lies below the lowest upper endpoint.
pub(crate) fn halfplane_classes(pts: &Ranked) -> BTreeSet<StabberClass> {
    let n = pts.n();
    let y_b = (0..n).map(|s| pts.at(pts.low_end(s, Axis::Y)).y).max();
    let y_t = (0..n).map(|s| pts.at(pts.high_end(s, Axis::Y)).y).min();
    let mut out = BTreeSet::new();
    if y_b < y_t {
        let end = |i: usize| if i.is_multiple_of(2) { End::A } else { End::B };
        out.insert(StabberClass::from_red_ends(
            (0..n).map(|s| end(pts.high_end(s, Axis::Y))),
        ));
        out.insert(StabberClass::from_red_ends(
            (0..n).map(|s| end(pts.low_end(s, Axis::Y))),
        ));
    }
    out
}

/// Which of the two halfplanes along `dir`'s axis realizes `class`.
pub(crate) fn shape_of(inst: &Instance, dir: HalfplaneDir, class: &StabberClass) -> Shape {
    let vertical = matches!(dir, HalfplaneDir::Up | HalfplaneDir::Down);
    let seg = &inst.segments()[0];
    let high = if vertical { seg.upper() } else { seg.right() };
    let red_is_high = class.red_end(0) == high;
    Shape::Halfplane(match (vertical, red_is_high) {
        (true, true) => HalfplaneDir::Up,
        (true, false) => HalfplaneDir::Down,
        (false, true) => HalfplaneDir::Right,
        (false, false) => HalfplaneDir::Left,
    })
}
