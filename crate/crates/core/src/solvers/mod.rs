//! Shape solvers. Each works in rank space on one canonical orientation and
//! returns a set of classes; [`solve_with`] validates the input, maps other
//! orientations onto the canonical one, and turns classes into anchored
//! solutions with triviality flags.

mod bottomless;
mod halfplane;
mod quadrant;
mod strip;
mod trivial;

use std::collections::BTreeSet;

use crate::cascade::{CascadeState, Discipline, SegStatus};
use crate::classify::{Classification, Color, StabberClass};
use crate::error::{Result, StabError};
use crate::geom::{validate_general_position, EndpointId, Instance};
use crate::rank::{RPoint, Ranked};
use crate::regions::{Cell, Location};
use crate::shape::{HalfplaneDir, OpenDir, QuadrantKind, Shape, Solution, StripAxis};

pub use bottomless::{SweepMode, SweepTrace};
pub use trivial::{is_trivial, RangeCounter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Solve the rectangle subproblems on the rayon thread pool.
    pub parallel: bool,
    pub sweep: SweepMode,
    pub discipline: Discipline,
    /// Verify bookkeeping and structural invariants at every quiescent
    /// state; a violation is reported as `InternalInvariantViolation`.
    pub check_invariants: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            parallel: true,
            sweep: SweepMode::Rollback,
            discipline: Discipline::Fifo,
            check_invariants: true,
        }
    }
}

pub fn solve(inst: &Instance, shape: Shape) -> Result<Vec<Solution>> {
    solve_with(inst, shape, &SolveOptions::default())
}

pub fn solve_with(inst: &Instance, shape: Shape, opts: &SolveOptions) -> Result<Vec<Solution>> {
    let classes = solve_classes(inst, shape, opts)?;
    Ok(finish(inst, shape, classes))
}

pub fn solve_halfplane(inst: &Instance, dir: HalfplaneDir) -> Result<Vec<Solution>> {
    solve(inst, Shape::Halfplane(dir))
}

pub fn solve_strip(inst: &Instance, axis: StripAxis) -> Result<Vec<Solution>> {
    solve(inst, Shape::Strip(axis))
}

pub fn solve_quadrant(inst: &Instance, kind: QuadrantKind) -> Result<Vec<Solution>> {
    solve(inst, Shape::Quadrant(kind))
}

/// 3-sided rectangles, optionally restricted to classes that agree with a
/// partial classification.
pub fn solve_three_rect(
    inst: &Instance,
    open: OpenDir,
    preseed: Option<&Classification>,
) -> Result<Vec<Solution>> {
    let shape = Shape::ThreeRect(open);
    validate_general_position(inst, shape)?;
    let extra: Vec<_> = preseed.map(|c| c.iter().collect()).unwrap_or_default();
    let pts = canonical(inst, shape);
    let classes =
        bottomless::three_rect_classes(&pts, &extra, &SolveOptions::default(), None)?;
    Ok(finish(inst, shape, classes))
}

pub fn solve_rect(inst: &Instance) -> Result<Vec<Solution>> {
    solve(inst, Shape::Rect)
}

/// The class set only, without anchors or triviality flags.
pub fn solve_classes(
    inst: &Instance,
    shape: Shape,
    opts: &SolveOptions,
) -> Result<BTreeSet<StabberClass>> {
    validate_general_position(inst, shape)?;
    let pts = canonical(inst, shape);
    match shape {
        Shape::Halfplane(_) => Ok(halfplane::halfplane_classes(&pts)),
        Shape::Strip(_) => strip::strip_classes(&pts, opts),
        Shape::Quadrant(_) => quadrant::quadrant_classes(&pts, opts),
        Shape::ThreeRect(_) => bottomless::three_rect_classes(&pts, &[], opts, None),
        Shape::Rect => bottomless::rect_classes(&pts, opts),
    }
}

/// 3-sided rectangle classes together with the sweep trace used by the
/// structural checks.
pub fn three_rect_traced(
    inst: &Instance,
    open: OpenDir,
    opts: &SolveOptions,
) -> Result<(BTreeSet<StabberClass>, SweepTrace)> {
    let shape = Shape::ThreeRect(open);
    validate_general_position(inst, shape)?;
    let pts = canonical(inst, shape);
    let mut trace = SweepTrace::default();
    let classes = bottomless::three_rect_classes(&pts, &[], opts, Some(&mut trace))?;
    Ok((classes, trace))
}

/// Ranks of `inst` mapped so that `shape` becomes its canonical
/// orientation: halfplanes and strips bounded in y, bottom-right quadrants,
/// downward-open 3-sided rectangles.
pub(crate) fn canonical(inst: &Instance, shape: Shape) -> Ranked {
    let r = Ranked::new(inst);
    let f: fn(RPoint) -> RPoint = match shape {
        Shape::Halfplane(HalfplaneDir::Left | HalfplaneDir::Right)
        | Shape::Strip(StripAxis::Vertical)
        | Shape::ThreeRect(OpenDir::Left) => |p| RPoint::new(p.y, p.x),
        Shape::Quadrant(QuadrantKind::BL) => |p| RPoint::new(-p.x, p.y),
        Shape::Quadrant(QuadrantKind::TR) | Shape::ThreeRect(OpenDir::Up) => {
            |p| RPoint::new(p.x, -p.y)
        }
        Shape::Quadrant(QuadrantKind::TL) => |p| RPoint::new(-p.x, -p.y),
        Shape::ThreeRect(OpenDir::Right) => |p| RPoint::new(p.y, -p.x),
        _ => |p| p,
    };
    r.map(f)
}

fn finish(inst: &Instance, shape: Shape, classes: BTreeSet<StabberClass>) -> Vec<Solution> {
    let counter = RangeCounter::new(inst);
    classes
        .into_iter()
        .map(|class| {
            let class_shape = match shape {
                Shape::Halfplane(d) => halfplane::shape_of(inst, d, &class),
                _ => shape,
            };
            let mut sol = Solution::from_class(class_shape, class, inst);
            sol.trivial = is_trivial(&sol, inst, &counter);
            sol
        })
        .collect()
}

/// Checks that every unknown segment has one endpoint in each of the gray
/// cells `a` and `b`.
pub(crate) fn check_split(st: &CascadeState, a: Cell, b: Cell) -> Result<()> {
    for seg in st.unknown_segments() {
        let la = st.locate(EndpointId::from_index(2 * seg));
        let lb = st.locate(EndpointId::from_index(2 * seg + 1));
        let ok = matches!((la, lb), (Location::Gray(x), Location::Gray(y))
            if (x, y) == (a, b) || (x, y) == (b, a));
        if !ok {
            return Err(StabError::InternalInvariantViolation(format!(
                "unknown segment {seg} at quiescence lies in {la:?} and {lb:?}"
            )));
        }
    }
    Ok(())
}

/// The class that keeps every forced color and takes, for every unknown
/// segment, its endpoint in `cell`.
pub(crate) fn complete_toward(st: &CascadeState, cell: Cell) -> StabberClass {
    let reds = (0..st.n())
        .map(|seg| {
            let a = EndpointId::from_index(2 * seg);
            let a_red = match st.status(seg) {
                SegStatus::Unknown => st.locate(a) == Location::Gray(cell),
                _ => st.color(a) == Some(Color::Red),
            };
            if a_red {
                a
            } else {
                a.partner()
            }
        })
        .collect();
    StabberClass::from_reds(reds, st.n()).expect("one red per segment")
}
