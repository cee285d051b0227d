//! Brute-force ground truth.
//!
//! Every stabber can be shrunk side by side until each bounded side passes
//! through an endpoint without changing the endpoints it contains, and a side
//! that cannot be shrunk that way may as well be pushed to infinity. So
//! trying every endpoint coordinate (or infinity) for every side finds every
//! class.

use std::collections::BTreeSet;

use crate::classify::StabberClass;
use crate::coord::Coord;
use crate::error::{Result, StabError};
use crate::geom::{validate_general_position, Axis, EndpointId, Instance};
use crate::shape::{HalfplaneDir, Shape, Side, StripAxis};

pub const DEFAULT_CAP: usize = 12;
const HARD_CAP: usize = 64;

/// The oracle's size limit: `STABBER_ORACLE_CAP` if set and valid, else 12.
pub fn oracle_cap() -> usize {
    std::env::var("STABBER_ORACLE_CAP")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_CAP)
        .min(HARD_CAP)
}

pub fn oracle_classes(inst: &Instance, shape: Shape) -> Result<BTreeSet<StabberClass>> {
    oracle_classes_with_cap(inst, shape, oracle_cap())
}

/// All classes of `shape` stabbers. A halfplane and its complement are
/// enumerated together, matching the halfplane solver.
pub fn oracle_classes_with_cap(
    inst: &Instance,
    shape: Shape,
    cap: usize,
) -> Result<BTreeSet<StabberClass>> {
    let n = inst.n();
    if n > cap.min(HARD_CAP) {
        return Err(StabError::OracleCapExceeded { n, cap });
    }
    validate_general_position(inst, shape)?;
    let shapes = match shape {
        Shape::Halfplane(d) => vec![shape, Shape::Halfplane(opposite(d))],
        _ => vec![shape],
    };
    let mut out = BTreeSet::new();
    for s in shapes {
        enumerate(inst, s.sides(), &mut out);
    }
    Ok(out)
}

fn opposite(d: HalfplaneDir) -> HalfplaneDir {
    match d {
        HalfplaneDir::Up => HalfplaneDir::Down,
        HalfplaneDir::Down => HalfplaneDir::Up,
        HalfplaneDir::Left => HalfplaneDir::Right,
        HalfplaneDir::Right => HalfplaneDir::Left,
    }
}

/// Bit `i` set iff endpoint `i` lies on the inner side of a boundary at `v`.
fn side_mask(inst: &Instance, side: Side, v: &Coord) -> u128 {
    let mut m = 0u128;
    for id in inst.endpoint_ids() {
        let p = inst.point(id);
        let inside = match side {
            Side::Left => &p.x >= v,
            Side::Right => &p.x <= v,
            Side::Bottom => &p.y >= v,
            Side::Top => &p.y <= v,
        };
        if inside {
            m |= 1 << id.index();
        }
    }
    m
}

fn enumerate(inst: &Instance, sides: &[Side], out: &mut BTreeSet<StabberClass>) {
    let n = inst.n();
    let full: u128 = if 2 * n == 128 { u128::MAX } else { (1u128 << (2 * n)) - 1 };
    // per side: the masks of every placement, infinity (all points) included
    let options: Vec<Vec<u128>> = sides
        .iter()
        .map(|&side| {
            let axis = match side {
                Side::Left | Side::Right => Axis::X,
                Side::Top | Side::Bottom => Axis::Y,
            };
            let mut vals: Vec<&Coord> = inst
                .endpoint_ids()
                .map(|id| inst.point(id).coord(axis))
                .collect();
            vals.sort();
            vals.dedup();
            let mut ms: Vec<u128> = vals.into_iter().map(|v| side_mask(inst, side, v)).collect();
            ms.push(full);
            ms.sort();
            ms.dedup();
            ms
        })
        .collect();
    let even: u128 = (0..n).fold(0, |m, s| m | (1u128 << (2 * s)));
    let mut seen = BTreeSet::new();
    let mut stack = vec![(0usize, full)];
    while let Some((k, mask)) = stack.pop() {
        // masks only shrink; stop once some segment has lost both endpoints
        if (mask | mask >> 1) & even != even {
            continue;
        }
        if k == options.len() {
            let a = mask & even;
            let b = (mask >> 1) & even;
            if a | b == even && a & b == 0 && seen.insert(mask) {
                let reds = (0..2 * n)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(EndpointId::from_index)
                    .collect();
                out.insert(StabberClass::from_reds(reds, n).expect("one red per segment"));
            }
            continue;
        }
        for &m in &options[k] {
            stack.push((k + 1, mask & m));
        }
    }
}

/// Width of the narrowest strip stabber along `axis`, if any exists.
pub fn oracle_narrowest_strip(inst: &Instance, axis: StripAxis) -> Result<Option<Coord>> {
    let classes = oracle_classes(inst, Shape::Strip(axis))?;
    let coord_axis = match axis {
        StripAxis::Horizontal => Axis::Y,
        StripAxis::Vertical => Axis::X,
    };
    Ok(classes
        .iter()
        .map(|c| {
            let vals: Vec<&Coord> = c
                .reds()
                .iter()
                .map(|&id| inst.point(id).coord(coord_axis))
                .collect();
            let lo = *vals.iter().min().expect("nonempty");
            let hi = *vals.iter().max().expect("nonempty");
            hi - lo
        })
        .min())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::End;

    fn i2() -> Instance {
        Instance::from_ints(&[[(0, 0), (2, 1)], [(4, 2), (1, 3)], [(3, 4), (5, 5)]]).unwrap()
    }

    fn i3() -> Instance {
        Instance::from_ints(&[[(0, 0), (2, 1)], [(3, 2), (1, 3)]]).unwrap()
    }

    #[test]
    fn two_spans_have_one_horizontal_strip() {
        let got = oracle_classes(&i3(), Shape::Strip(StripAxis::Horizontal)).unwrap();
        let want = StabberClass::from_red_ends([End::B, End::A]);
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![want]);
        assert_eq!(
            oracle_narrowest_strip(&i3(), StripAxis::Horizontal).unwrap(),
            Some(Coord::from(1))
        );
    }

    #[test]
    fn stacked_spans_have_none() {
        assert!(oracle_classes(&i2(), Shape::Strip(StripAxis::Horizontal))
            .unwrap()
            .is_empty());
        assert_eq!(
            oracle_narrowest_strip(&i2(), StripAxis::Horizontal).unwrap(),
            None
        );
    }

    #[test]
    fn single_segment_rect() {
        let inst = Instance::from_ints(&[[(0, 0), (1, 1)]]).unwrap();
        assert_eq!(oracle_classes(&inst, Shape::Rect).unwrap().len(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let segs: Vec<[(i64, i64); 2]> = (0..13).map(|i| [(i, 100 + i), (50 + i, i)]).collect();
        let inst = Instance::from_ints(&segs).unwrap();
        assert!(matches!(
            oracle_classes_with_cap(&inst, Shape::Rect, 12),
            Err(StabError::OracleCapExceeded { n: 13, cap: 12 })
        ));
    }
}
