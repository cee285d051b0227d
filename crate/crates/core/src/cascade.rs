//! The cascading engine.
//!
//! Segments are Unknown (U), Waiting (W: one endpoint's color is forced but
//! not yet applied to the regions) or Classified (C). Processing a waiting
//! segment applies both colors to the regions; every region change yields
//! query boxes, and the endpoints of unknown segments inside them become
//! waiting with the query's color. Every mutation is journaled so that a
//! [`Checkpoint`] can be restored exactly.

use std::collections::{BTreeMap, VecDeque};

use crate::classify::{Classification, Color, StabberClass};
use crate::error::{Result, StabError};
use crate::geom::{Axis, EndpointId};
use crate::index::RangeIndex;
use crate::rank::{RPoint, Ranked};
use crate::regions::{BoxRegions, Location};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegStatus {
    Unknown,
    Waiting,
    Classified,
}

/// Order in which waiting segments are processed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Discipline {
    #[default]
    Fifo,
    Lifo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// No contradiction so far; after [`CascadeState::run`] this means W is empty.
    Consistent,
    /// The coloring of this endpoint (or of a virtual red point, `None`)
    /// made red and blue overlap.
    Contradiction(Option<EndpointId>),
}

impl Outcome {
    pub fn is_consistent(self) -> bool {
        self == Outcome::Consistent
    }
}

#[derive(Debug, Clone, Copy)]
enum Op {
    Color(usize),
    Applied(usize),
    Status(usize, SegStatus),
    Deleted(usize),
}

/// A restorable snapshot of a [`CascadeState`].
#[derive(Debug, Clone)]
pub struct Checkpoint {
    serial: u64,
    len: usize,
    regions: BoxRegions,
    waiting: VecDeque<usize>,
    failed: Option<Outcome>,
    iterations: usize,
}

#[derive(Debug, Clone)]
pub struct CascadeState {
    pts: Ranked,
    regions: BoxRegions,
    color: Vec<Option<Color>>,
    applied: Vec<bool>,
    status: Vec<SegStatus>,
    unknown: usize,
    waiting: VecDeque<usize>,
    discipline: Discipline,
    index: RangeIndex,
    journal: Vec<Op>,
    live: Vec<(u64, usize)>,
    next_serial: u64,
    failed: Option<Outcome>,
    iterations: usize,
}

impl CascadeState {
    /// Every segment unknown; `primary` is the sort axis of the range index.
    pub fn new(pts: Ranked, regions: BoxRegions, primary: Axis) -> Self {
        let n = pts.n();
        let index = RangeIndex::over_all(pts.points(), primary);
        CascadeState {
            color: vec![None; 2 * n],
            applied: vec![false; 2 * n],
            status: vec![SegStatus::Unknown; n],
            unknown: n,
            waiting: VecDeque::new(),
            discipline: Discipline::Fifo,
            index,
            journal: Vec::new(),
            live: Vec::new(),
            next_serial: 0,
            failed: None,
            iterations: 0,
            pts,
            regions,
        }
    }

    pub fn with_discipline(mut self, d: Discipline) -> Self {
        self.discipline = d;
        self
    }

    pub fn n(&self) -> usize {
        self.status.len()
    }

    pub fn points(&self) -> &Ranked {
        &self.pts
    }

    pub fn regions(&self) -> &BoxRegions {
        &self.regions
    }

    pub fn index(&self) -> &RangeIndex {
        &self.index
    }

    pub fn status(&self, seg: usize) -> SegStatus {
        self.status[seg]
    }

    pub fn color(&self, id: EndpointId) -> Option<Color> {
        self.color[id.index()]
    }

    pub fn unknown_count(&self) -> usize {
        self.unknown
    }

    pub fn unknown_segments(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&s| self.status[s] == SegStatus::Unknown)
            .collect()
    }

    pub fn waiting(&self) -> impl Iterator<Item = usize> + '_ {
        self.waiting.iter().copied()
    }

    /// Number of waiting segments processed so far.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn journal_len(&self) -> usize {
        self.journal.len()
    }

    pub fn failed(&self) -> Option<Outcome> {
        self.failed
    }

    pub fn locate(&self, id: EndpointId) -> Location {
        self.regions.locate(self.pts.point(id))
    }

    pub fn classification(&self) -> Classification {
        let mut c = Classification::new();
        for (i, col) in self.color.iter().enumerate() {
            if let Some(col) = col {
                c.assign(EndpointId::from_index(i), *col)
                    .expect("partners are colored oppositely");
            }
        }
        c
    }

    /// Colored endpoints in index order.
    pub fn assignments(&self) -> Vec<(EndpointId, Color)> {
        self.color
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.map(|c| (EndpointId::from_index(i), c)))
            .collect()
    }

    /// The class, once every segment is colored.
    pub fn class(&self) -> Option<StabberClass> {
        if self.unknown > 0 {
            return None;
        }
        let reds = (0..self.n())
            .map(|s| {
                let a = EndpointId::from_index(2 * s);
                if self.color[2 * s] == Some(Color::Red) {
                    a
                } else {
                    a.partner()
                }
            })
            .collect();
        StabberClass::from_reds(reds, self.n()).ok()
    }

    /// Forces the given colors. Reds are applied before blues so that the red
    /// region exists before any blue point is placed.
    pub fn seed(&mut self, assignments: &[(EndpointId, Color)]) -> Result<Outcome> {
        let mut seen: BTreeMap<EndpointId, Color> = BTreeMap::new();
        for &(id, c) in assignments {
            if seen.insert(id, c).is_some_and(|old| old != c) {
                return Err(StabError::DoubleAssignmentConflict(id));
            }
        }
        for want in [Color::Red, Color::Blue] {
            for &(id, c) in assignments.iter().filter(|a| a.1 == want) {
                if self.failed.is_some() {
                    break;
                }
                self.force(id, c);
            }
        }
        Ok(self.failed.unwrap_or(Outcome::Consistent))
    }

    fn force(&mut self, id: EndpointId, c: Color) {
        let i = id.index();
        if self.color[i].is_some_and(|old| old != c) {
            self.failed = Some(Outcome::Contradiction(Some(id)));
            return;
        }
        if self.status[id.seg] == SegStatus::Unknown {
            self.discover(i, c);
        }
        if !self.applied[i] {
            self.apply(i);
        }
    }

    /// Grows the red region to contain a point that need not be an endpoint.
    pub fn grow_red(&mut self, p: RPoint) -> Outcome {
        if let Some(f) = self.failed {
            return f;
        }
        match self.regions.add_red(p) {
            Ok(queries) => self.absorb(queries),
            Err(_) => self.failed = Some(Outcome::Contradiction(None)),
        }
        self.failed.unwrap_or(Outcome::Consistent)
    }

    /// Processes waiting segments until none is left or a contradiction
    /// appears.
    pub fn run(&mut self) -> Outcome {
        loop {
            if let Some(f) = self.failed {
                return f;
            }
            let next = match self.discipline {
                Discipline::Fifo => self.waiting.pop_front(),
                Discipline::Lifo => self.waiting.pop_back(),
            };
            let Some(seg) = next else {
                return Outcome::Consistent;
            };
            self.iterations += 1;
            let a = 2 * seg;
            let (red, blue) = if self.color[a] == Some(Color::Red) {
                (a, a + 1)
            } else {
                (a + 1, a)
            };
            for i in [red, blue] {
                if !self.applied[i] && self.failed.is_none() {
                    self.apply(i);
                }
            }
            if self.failed.is_none() {
                self.set_status(seg, SegStatus::Classified);
            }
        }
    }

    fn set_status(&mut self, seg: usize, s: SegStatus) {
        let old = self.status[seg];
        self.journal.push(Op::Status(seg, old));
        if old == SegStatus::Unknown {
            self.unknown -= 1;
        }
        if s == SegStatus::Unknown {
            self.unknown += 1;
        }
        self.status[seg] = s;
    }

    fn discover(&mut self, i: usize, c: Color) {
        let seg = i / 2;
        debug_assert_eq!(self.status[seg], SegStatus::Unknown);
        self.set_status(seg, SegStatus::Waiting);
        for (j, col) in [(i, c), (i ^ 1, c.opposite())] {
            self.color[j] = Some(col);
            self.journal.push(Op::Color(j));
            if self.index.is_alive(j) {
                self.index.delete(j);
                self.journal.push(Op::Deleted(j));
            }
        }
        self.waiting.push_back(seg);
    }

    fn apply(&mut self, i: usize) {
        self.applied[i] = true;
        self.journal.push(Op::Applied(i));
        let p = self.pts.at(i);
        let res = match self.color[i].expect("colored before applied") {
            Color::Red => self.regions.add_red(p),
            Color::Blue => self.regions.add_blue(p),
        };
        match res {
            Ok(queries) => self.absorb(queries),
            Err(_) => {
                self.failed = Some(Outcome::Contradiction(Some(EndpointId::from_index(i))));
            }
        }
    }

    fn absorb(&mut self, queries: Vec<crate::regions::Query>) {
        for q in queries {
            for h in self.index.report(&q.area) {
                if self.status[h / 2] == SegStatus::Unknown {
                    self.discover(h, q.color);
                }
            }
        }
    }

    pub fn checkpoint(&mut self) -> Checkpoint {
        let serial = self.next_serial;
        self.next_serial += 1;
        self.live.push((serial, self.journal.len()));
        Checkpoint {
            serial,
            len: self.journal.len(),
            regions: self.regions.clone(),
            waiting: self.waiting.clone(),
            failed: self.failed,
            iterations: self.iterations,
        }
    }

    /// Restores the state to the moment `cp` was taken. Checkpoints taken
    /// after `cp` become stale.
    pub fn rollback(&mut self, cp: &Checkpoint) -> Result<()> {
        let Some(k) = self.live.iter().position(|&(s, _)| s == cp.serial) else {
            return Err(StabError::StaleCheckpoint);
        };
        if self.live[k].1 != cp.len || self.journal.len() < cp.len {
            return Err(StabError::StaleCheckpoint);
        }
        self.live.truncate(k + 1);
        while self.journal.len() > cp.len {
            match self.journal.pop().expect("nonempty") {
                Op::Color(j) => self.color[j] = None,
                Op::Applied(j) => self.applied[j] = false,
                Op::Status(seg, old) => {
                    let cur = self.status[seg];
                    if cur == SegStatus::Unknown {
                        self.unknown -= 1;
                    }
                    if old == SegStatus::Unknown {
                        self.unknown += 1;
                    }
                    self.status[seg] = old;
                }
                Op::Deleted(j) => self.index.revive(j),
            }
        }
        self.regions = cp.regions.clone();
        self.waiting = cp.waiting.clone();
        self.failed = cp.failed;
        self.iterations = cp.iterations;
        Ok(())
    }

    /// Checks the bookkeeping invariants: {C, W, U} partition the segments,
    /// the waiting queue lists exactly the waiting segments, colored
    /// segments are exactly the non-unknown ones, and the range index holds
    /// exactly the endpoints of unknown segments.
    pub fn check_partition(&self) -> Result<()> {
        let bad = |m: String| Err(StabError::InternalInvariantViolation(m));
        let mut in_queue = vec![0usize; self.n()];
        for &s in &self.waiting {
            in_queue[s] += 1;
        }
        let mut unknown = 0;
        for seg in 0..self.n() {
            let st = self.status[seg];
            let expect_queued = usize::from(st == SegStatus::Waiting);
            if self.failed.is_none() && in_queue[seg] != expect_queued {
                return bad(format!("segment {seg} is {st:?} but queued {} times", in_queue[seg]));
            }
            let (a, b) = (self.color[2 * seg], self.color[2 * seg + 1]);
            match st {
                SegStatus::Unknown => {
                    unknown += 1;
                    if a.is_some() || b.is_some() {
                        return bad(format!("unknown segment {seg} is colored"));
                    }
                    if !self.index.is_alive(2 * seg) || !self.index.is_alive(2 * seg + 1) {
                        return bad(format!("unknown segment {seg} missing from index"));
                    }
                }
                _ => {
                    if a.is_none() || a.map(Color::opposite) != b {
                        return bad(format!("segment {seg} colored {a:?}/{b:?}"));
                    }
                    if self.index.is_alive(2 * seg) || self.index.is_alive(2 * seg + 1) {
                        return bad(format!("{st:?} segment {seg} still indexed"));
                    }
                }
            }
        }
        if unknown != self.unknown {
            return bad(format!("unknown count {} but {unknown} unknown", self.unknown));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{End, Instance};
    use crate::shape::Side;

    fn strip_state(inst: &Instance) -> CascadeState {
        CascadeState::new(
            Ranked::new(inst),
            BoxRegions::new(&[Side::Top, Side::Bottom]),
            Axis::Y,
        )
    }

    fn i3() -> Instance {
        Instance::from_ints(&[[(0, 0), (2, 1)], [(3, 2), (1, 3)]]).unwrap()
    }

    fn ep(seg: usize, end: End) -> EndpointId {
        EndpointId::new(seg, end)
    }

    #[test]
    fn strip_seed_on_two_spans() {
        let inst = i3();
        let mut st = strip_state(&inst);
        // q_b = lower end of the second span, p_t = upper end of the first
        let out = st
            .seed(&[(ep(1, End::A), Color::Red), (ep(0, End::B), Color::Red)])
            .unwrap();
        assert_eq!(out, Outcome::Consistent);
        let mut w: Vec<usize> = st.waiting().collect();
        w.sort();
        assert_eq!(w, vec![0, 1]);
        let r = st.regions().red_box().unwrap();
        // ranks of y = 1 and y = 2
        assert_eq!((r.y_lo, r.y_hi), (1, 2));
        assert_eq!(st.run(), Outcome::Consistent);
        assert_eq!(st.unknown_count(), 0);
        assert_eq!(
            st.class().unwrap().reds(),
            &[ep(0, End::B), ep(1, End::A)]
        );
        st.check_partition().unwrap();
    }

    #[test]
    fn conflicting_seed() {
        let inst = i3();
        let mut st = strip_state(&inst);
        assert_eq!(
            st.seed(&[(ep(0, End::A), Color::Red), (ep(0, End::A), Color::Blue)]),
            Err(StabError::DoubleAssignmentConflict(ep(0, End::A)))
        );
    }

    #[test]
    fn stacked_spans_contradict() {
        let inst = Instance::from_ints(&[[(0, 0), (2, 1)], [(4, 2), (1, 3)], [(3, 4), (5, 5)]])
            .unwrap();
        let mut st = strip_state(&inst);
        st.seed(&[(ep(2, End::A), Color::Red), (ep(0, End::B), Color::Red)])
            .unwrap();
        match st.run() {
            Outcome::Contradiction(Some(e)) => assert_eq!(e.seg, 1),
            other => panic!("expected contradiction, got {other:?}"),
        }
    }

    #[test]
    fn rollback_restores_everything() {
        let inst = i3();
        let mut st = strip_state(&inst);
        st.grow_red(RPoint::new(0, 1));
        let before = (st.assignments(), st.regions().clone(), st.unknown_count());
        let cp = st.checkpoint();
        st.seed(&[(ep(1, End::A), Color::Red)]).unwrap();
        st.run();
        assert_eq!(st.unknown_count(), 0);
        st.rollback(&cp).unwrap();
        assert_eq!(before, (st.assignments(), st.regions().clone(), st.unknown_count()));
        st.check_partition().unwrap();
        // idempotent
        st.rollback(&cp).unwrap();
        assert_eq!(before.0, st.assignments());
    }

    #[test]
    fn stale_checkpoint() {
        let inst = i3();
        let mut st = strip_state(&inst);
        st.grow_red(RPoint::new(0, 1));
        let outer = st.checkpoint();
        st.seed(&[(ep(1, End::A), Color::Red)]).unwrap();
        let inner = st.checkpoint();
        st.rollback(&outer).unwrap();
        assert_eq!(st.rollback(&inner), Err(StabError::StaleCheckpoint));
    }
}
