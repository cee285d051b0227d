//! Downward-open 3-sided rectangles, and rectangles as one 3-sided problem
//! per choice of the lowest red endpoint.
//!
//! Every stabber that is not equivalent to a vertical halfplane contains the
//! points where the vertical lines through the rightmost left endpoint and
//! the leftmost right endpoint meet the horizontal line through the highest
//! lower endpoint. Seeding those and cascading leaves unknown segments whose
//! endpoints lie in the gray cells A (left), B (upper left), C (above),
//! D (upper right) and E (right) of the red box. Within an edge cell the red
//! points of any stabber are the ones closest to the red box, so the
//! enumeration sweeps the number of such points, cascading after each
//! choice, and recurses on what is left.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::SolveOptions;
use crate::cascade::{CascadeState, Outcome};
use crate::classify::{Color, StabberClass};
use crate::error::{Result, StabError};
use crate::geom::{Axis, EndpointId};
use crate::rank::{RPoint, Ranked};
use crate::regions::{outward, BoxRegions, Cell, Location};
use crate::shape::Side;

/// How sweep steps are separated from each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SweepMode {
    /// Checkpoint before a step and roll the journal back after it.
    #[default]
    Rollback,
    /// Rebuild every step from an untouched state by replaying all seeds.
    Recompute,
}

/// What the 3-sided rectangle sweep saw.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepTrace {
    /// For each top-level sweep over cell A: the unknown segments left after
    /// each step's cascade.
    pub sweeps: Vec<Vec<Vec<usize>>>,
    /// Quiescent states explored.
    pub states: usize,
    /// States where only corner cells held unknown endpoints.
    pub corner_branches: usize,
}

#[derive(Debug, Clone, Copy)]
enum Seed {
    Virtual(RPoint),
    Color(EndpointId, Color),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Level {
    Main,
    Inner,
}

const ALLOWED_TYPES: [(Cell, Cell); 5] = [
    (Cell::A, Cell::C),
    (Cell::A, Cell::D),
    (Cell::A, Cell::E),
    (Cell::B, Cell::E),
    (Cell::C, Cell::E),
];

const SWEEP_ORDER: [Cell; 4] = [Cell::A, Cell::E, Cell::C, Cell::BELOW];

fn apply(st: &mut CascadeState, seeds: &[Seed]) -> Result<Outcome> {
    let mut colors = Vec::new();
    let mut seen = BTreeMap::new();
    for s in seeds {
        match *s {
            Seed::Virtual(p) => {
                if !st.grow_red(p).is_consistent() {
                    return Ok(st.failed().expect("failed"));
                }
            }
            Seed::Color(id, c) => {
                // a preseed may disagree with a branch's own seeds
                if seen.insert(id, c).is_some_and(|old| old != c) {
                    return Ok(Outcome::Contradiction(Some(id)));
                }
                colors.push((id, c));
            }
        }
    }
    st.seed(&colors)
}

struct Enumerator<'t> {
    base: CascadeState,
    path: Vec<Seed>,
    opts: SolveOptions,
    out: BTreeSet<StabberClass>,
    trace: Option<&'t mut SweepTrace>,
}

impl<'t> Enumerator<'t> {
    fn new(base: CascadeState, opts: SolveOptions, trace: Option<&'t mut SweepTrace>) -> Self {
        Enumerator {
            base,
            path: Vec::new(),
            opts,
            out: BTreeSet::new(),
            trace,
        }
    }

    fn root(&mut self, seeds: Vec<Seed>, extra: &[Seed]) -> Result<()> {
        let mut st = self.base.clone();
        self.path = seeds;
        let path = self.path.clone();
        if !apply(&mut st, &path)?.is_consistent() || !st.run().is_consistent() {
            return Ok(());
        }
        self.bottomless(&mut st, extra)
    }

    fn bottomless(&mut self, st: &mut CascadeState, extra: &[Seed]) -> Result<()> {
        let unknown = st.unknown_segments();
        if unknown.is_empty() {
            self.branch(st, extra.to_vec(), Level::Inner)?;
            return Ok(());
        }
        let pts = st.points().clone();
        let y_b = unknown
            .iter()
            .map(|&s| pts.at(pts.low_end(s, Axis::Y)).y)
            .max()
            .expect("nonempty");
        let x_l = unknown
            .iter()
            .map(|&s| pts.at(pts.low_end(s, Axis::X)).x)
            .max()
            .expect("nonempty");
        let x_r = unknown
            .iter()
            .map(|&s| pts.at(pts.high_end(s, Axis::X)).x)
            .min()
            .expect("nonempty");
        if x_r > x_l {
            // stabbers equivalent to the vertical halfplanes between the lines
            for high in [false, true] {
                let mut seeds: Vec<Seed> = unknown
                    .iter()
                    .map(|&s| {
                        let i = if high {
                            pts.high_end(s, Axis::X)
                        } else {
                            pts.low_end(s, Axis::X)
                        };
                        Seed::Color(EndpointId::from_index(i), Color::Red)
                    })
                    .collect();
                seeds.extend_from_slice(extra);
                self.branch(st, seeds, Level::Inner)?;
            }
        }
        let mut seeds = vec![
            Seed::Virtual(RPoint::new(x_l, y_b)),
            Seed::Virtual(RPoint::new(x_r, y_b)),
        ];
        seeds.extend_from_slice(extra);
        self.branch(st, seeds, Level::Main)?;
        Ok(())
    }

    /// Explores `st` extended by `seeds` and restores `st` afterwards.
    /// Returns the unknown segments after cascading, or `None` on a
    /// contradiction.
    fn branch(
        &mut self,
        st: &mut CascadeState,
        seeds: Vec<Seed>,
        level: Level,
    ) -> Result<Option<Vec<usize>>> {
        match self.opts.sweep {
            SweepMode::Rollback => {
                let cp = st.checkpoint();
                let r = if apply(st, &seeds)?.is_consistent() {
                    self.explore(st, level)
                } else {
                    Ok(None)
                };
                st.rollback(&cp)?;
                r
            }
            SweepMode::Recompute => {
                let mark = self.path.len();
                self.path.extend(seeds);
                let mut fresh = self.base.clone();
                let path = self.path.clone();
                let r = if apply(&mut fresh, &path)?.is_consistent() {
                    self.explore(&mut fresh, level)
                } else {
                    Ok(None)
                };
                self.path.truncate(mark);
                r
            }
        }
    }

    fn explore(&mut self, st: &mut CascadeState, level: Level) -> Result<Option<Vec<usize>>> {
        if !st.run().is_consistent() {
            return Ok(None);
        }
        let check = self.opts.check_invariants;
        if check {
            st.check_partition()?;
        }
        if let Some(t) = self.trace.as_deref_mut() {
            t.states += 1;
        }
        let unknown = st.unknown_segments();
        if unknown.is_empty() {
            self.out.insert(st.class().expect("complete"));
            return Ok(Some(unknown));
        }
        let mut by_cell: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
        let mut cells = Vec::with_capacity(unknown.len());
        for &seg in &unknown {
            let mut pair = [Cell::A; 2];
            for (k, i) in [2 * seg, 2 * seg + 1].into_iter().enumerate() {
                match st.regions().locate(st.points().at(i)) {
                    Location::Gray(c) => {
                        by_cell.entry(c).or_default().push(i);
                        pair[k] = c;
                    }
                    other => {
                        return Err(StabError::InternalInvariantViolation(format!(
                            "endpoint {} of unknown segment is {other:?} at quiescence",
                            EndpointId::from_index(i)
                        )))
                    }
                }
            }
            cells.push((seg, pair));
        }
        if level == Level::Main && check {
            for (seg, [a, b]) in cells {
                if !ALLOWED_TYPES.contains(&(a, b)) && !ALLOWED_TYPES.contains(&(b, a)) {
                    return Err(StabError::InternalInvariantViolation(format!(
                        "segment {seg} has endpoints in cells {a:?} and {b:?}"
                    )));
                }
            }
        }
        let Some(&cell) = SWEEP_ORDER.iter().find(|c| by_cell.contains_key(c)) else {
            if let Some(t) = self.trace.as_deref_mut() {
                t.corner_branches += 1;
            }
            let seg = unknown[0];
            for i in [2 * seg, 2 * seg + 1] {
                let seeds = vec![Seed::Color(EndpointId::from_index(i), Color::Red)];
                self.branch(st, seeds, Level::Inner)?;
            }
            return Ok(Some(unknown));
        };
        let side = cell.edge_side().expect("edge cell");
        let mut pts = by_cell.remove(&cell).expect("nonempty");
        pts.sort_by_key(|&i| (outward(st.points().at(i), side), i));
        let record = level == Level::Main && cell == Cell::A;
        let mut steps = Vec::new();
        for j in 0..=pts.len() {
            let seeds = pts
                .iter()
                .enumerate()
                .map(|(t, &i)| {
                    let c = if t < j { Color::Red } else { Color::Blue };
                    Seed::Color(EndpointId::from_index(i), c)
                })
                .collect();
            let g = self.branch(st, seeds, Level::Inner)?;
            if record {
                steps.push(g.unwrap_or_default());
            }
        }
        if record {
            if let Some(t) = self.trace.as_deref_mut() {
                t.sweeps.push(steps);
            }
        }
        Ok(Some(unknown))
    }
}

impl SweepTrace {
    /// Segments left unknown by more than one step of the same sweep, as
    /// `(sweep, segment, first step, second step)`.
    pub fn overlaps(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for (k, steps) in self.sweeps.iter().enumerate() {
            let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
            for (i, g) in steps.iter().enumerate() {
                for &seg in g {
                    if let Some(&j) = owner.get(&seg) {
                        out.push((k, seg, j, i));
                    } else {
                        owner.insert(seg, i);
                    }
                }
            }
        }
        out
    }
}

fn colors(extra: &[(EndpointId, Color)]) -> Vec<Seed> {
    extra.iter().map(|&(id, c)| Seed::Color(id, c)).collect()
}

/// Downward-open 3-sided rectangles agreeing with `extra`.
pub(crate) fn three_rect_classes(
    pts: &Ranked,
    extra: &[(EndpointId, Color)],
    opts: &SolveOptions,
    trace: Option<&mut SweepTrace>,
) -> Result<BTreeSet<StabberClass>> {
    let base = CascadeState::new(
        pts.clone(),
        BoxRegions::new(&[Side::Left, Side::Top, Side::Right]),
        Axis::X,
    )
    .with_discipline(opts.discipline);
    let mut e = Enumerator::new(base, *opts, trace);
    e.root(Vec::new(), &colors(extra))?;
    Ok(e.out)
}

/// Rectangles whose lowest red endpoint is `v`: everything below `v` is
/// blue, and above `v` the problem is a 3-sided one.
fn rect_with_bottom(pts: &Ranked, v: usize, opts: &SolveOptions) -> Result<BTreeSet<StabberClass>> {
    let yv = pts.at(v).y;
    let below = |i: usize| pts.at(i).y < yv;
    if (0..pts.n()).any(|s| below(2 * s) && below(2 * s + 1)) {
        return Ok(BTreeSet::new());
    }
    let mut seeds = vec![Seed::Color(EndpointId::from_index(v), Color::Red)];
    seeds.extend(
        (0..pts.len())
            .filter(|&i| below(i))
            .map(|i| Seed::Color(EndpointId::from_index(i), Color::Blue)),
    );
    let base = CascadeState::new(pts.clone(), BoxRegions::new(&Side::ALL), Axis::X)
        .with_discipline(opts.discipline);
    let mut e = Enumerator::new(base, *opts, None);
    e.root(seeds, &[])?;
    Ok(e.out)
}

pub(crate) fn rect_classes(pts: &Ranked, opts: &SolveOptions) -> Result<BTreeSet<StabberClass>> {
    let parts: Vec<BTreeSet<StabberClass>> = if opts.parallel {
        (0..pts.len())
            .into_par_iter()
            .map(|v| rect_with_bottom(pts, v, opts))
            .collect::<Result<_>>()?
    } else {
        (0..pts.len())
            .map(|v| rect_with_bottom(pts, v, opts))
            .collect::<Result<_>>()?
    };
    Ok(parts.into_iter().flatten().collect())
}
