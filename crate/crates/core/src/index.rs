//! Orthogonal range reporting over a fixed point set with deletions.
//!
//! A static segment tree over the points sorted by a primary axis; every node
//! keeps the number of alive points below it and the extent of their
//! secondary coordinates. Deleting or reviving a point costs O(log n).
//! Reporting prunes on both axes, and because callers delete what they get
//! reported, the total reporting work of a cascade stays near-linear.

use crate::geom::Axis;
use crate::rank::RPoint;

pub const NEG_INF: i64 = i64::MIN / 4;
pub const POS_INF: i64 = i64::MAX / 4;

/// A closed axis-parallel box in rank space; infinite sides use
/// [`NEG_INF`] / [`POS_INF`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RBox {
    pub x_lo: i64,
    pub x_hi: i64,
    pub y_lo: i64,
    pub y_hi: i64,
}

impl RBox {
    pub const ALL: RBox = RBox {
        x_lo: NEG_INF,
        x_hi: POS_INF,
        y_lo: NEG_INF,
        y_hi: POS_INF,
    };

    pub fn contains(&self, p: RPoint) -> bool {
        self.x_lo <= p.x && p.x <= self.x_hi && self.y_lo <= p.y && p.y <= self.y_hi
    }

    pub fn is_empty(&self) -> bool {
        self.x_lo > self.x_hi || self.y_lo > self.y_hi
    }

    fn range(&self, axis: Axis) -> (i64, i64) {
        match axis {
            Axis::X => (self.x_lo, self.x_hi),
            Axis::Y => (self.y_lo, self.y_hi),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Node {
    alive: u32,
    min_s: i64,
    max_s: i64,
}

const DEAD: Node = Node {
    alive: 0,
    min_s: POS_INF,
    max_s: NEG_INF,
};

#[derive(Debug, Clone)]
pub struct RangeIndex {
    primary: Axis,
    // point ids sorted by (primary, id)
    order: Vec<usize>,
    keys: Vec<i64>,
    sec: Vec<i64>,
    // position of each id in `order`, or usize::MAX if the id is not indexed
    pos: Vec<usize>,
    alive: Vec<bool>,
    tree: Vec<Node>,
}

impl RangeIndex {
    /// Indexes the points `ids` (indices into `pts`), all initially alive.
    pub fn new(pts: &[RPoint], ids: impl IntoIterator<Item = usize>, primary: Axis) -> Self {
        let secondary = match primary {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        };
        let mut order: Vec<usize> = ids.into_iter().collect();
        order.sort_by_key(|&i| (pts[i].get(primary), i));
        let mut pos = vec![usize::MAX; pts.len()];
        for (k, &i) in order.iter().enumerate() {
            pos[i] = k;
        }
        let m = order.len().max(1);
        let mut idx = RangeIndex {
            primary,
            keys: order.iter().map(|&i| pts[i].get(primary)).collect(),
            sec: order.iter().map(|&i| pts[i].get(secondary)).collect(),
            order,
            pos,
            alive: vec![false; pts.len()],
            tree: vec![DEAD; 4 * m],
        };
        for &i in &idx.order {
            idx.alive[i] = true;
        }
        if !idx.order.is_empty() {
            idx.build(1, 0, idx.order.len() - 1);
        }
        idx
    }

    /// All `pts` indexed.
    pub fn over_all(pts: &[RPoint], primary: Axis) -> Self {
        RangeIndex::new(pts, 0..pts.len(), primary)
    }

    fn build(&mut self, node: usize, l: usize, r: usize) {
        if l == r {
            let s = self.sec[l];
            self.tree[node] = Node {
                alive: 1,
                min_s: s,
                max_s: s,
            };
            return;
        }
        let m = (l + r) / 2;
        self.build(2 * node, l, m);
        self.build(2 * node + 1, m + 1, r);
        self.pull(node);
    }

    fn pull(&mut self, node: usize) {
        let (a, b) = (self.tree[2 * node], self.tree[2 * node + 1]);
        self.tree[node] = Node {
            alive: a.alive + b.alive,
            min_s: a.min_s.min(b.min_s),
            max_s: a.max_s.max(b.max_s),
        };
    }

    fn set(&mut self, node: usize, l: usize, r: usize, at: usize, on: bool) {
        if l == r {
            self.tree[node] = if on {
                Node {
                    alive: 1,
                    min_s: self.sec[l],
                    max_s: self.sec[l],
                }
            } else {
                DEAD
            };
            return;
        }
        let m = (l + r) / 2;
        if at <= m {
            self.set(2 * node, l, m, at, on);
        } else {
            self.set(2 * node + 1, m + 1, r, at, on);
        }
        self.pull(node);
    }

    fn toggle(&mut self, id: usize, on: bool) {
        let p = self.pos[id];
        assert!(p != usize::MAX, "point {id} is not indexed");
        if self.alive[id] == on {
            return;
        }
        self.alive[id] = on;
        let last = self.order.len() - 1;
        self.set(1, 0, last, p, on);
    }

    pub fn delete(&mut self, id: usize) {
        self.toggle(id, false);
    }

    pub fn revive(&mut self, id: usize) {
        self.toggle(id, true);
    }

    pub fn is_alive(&self, id: usize) -> bool {
        self.alive[id]
    }

    pub fn alive_count(&self) -> usize {
        self.tree[1].alive as usize
    }

    /// Positions `[l, r)` of keys inside `[lo, hi]`.
    fn span(&self, lo: i64, hi: i64) -> (usize, usize) {
        let l = self.keys.partition_point(|&k| k < lo);
        let r = self.keys.partition_point(|&k| k <= hi);
        (l, r)
    }

    /// Alive ids inside `q`, in primary order.
    pub fn report(&self, q: &RBox) -> Vec<usize> {
        let mut out = Vec::new();
        self.visit(q, &mut |id| {
            out.push(id);
            true
        });
        out
    }

    /// Whether some alive point lies in `q`.
    pub fn any_in(&self, q: &RBox) -> bool {
        let mut found = false;
        self.visit(q, &mut |_| {
            found = true;
            false
        });
        found
    }

    fn visit(&self, q: &RBox, f: &mut dyn FnMut(usize) -> bool) {
        if self.order.is_empty() || q.is_empty() {
            return;
        }
        let (plo, phi) = q.range(self.primary);
        let (slo, shi) = q.range(match self.primary {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        });
        let (l, r) = self.span(plo, phi);
        if l < r {
            self.walk(1, 0, self.order.len() - 1, l, r - 1, slo, shi, f);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        node: usize,
        l: usize,
        r: usize,
        ql: usize,
        qr: usize,
        slo: i64,
        shi: i64,
        f: &mut dyn FnMut(usize) -> bool,
    ) -> bool {
        let nd = self.tree[node];
        if nd.alive == 0 || r < ql || qr < l || nd.max_s < slo || nd.min_s > shi {
            return true;
        }
        if l == r {
            return f(self.order[l]);
        }
        let m = (l + r) / 2;
        self.walk(2 * node, l, m, ql, qr, slo, shi, f)
            && self.walk(2 * node + 1, m + 1, r, ql, qr, slo, shi, f)
    }

    /// Alive id with the smallest primary key `>= bound`.
    pub fn succ(&self, bound: i64) -> Option<usize> {
        let (l, _) = self.span(bound, POS_INF);
        self.first_alive(1, 0, self.order.len().checked_sub(1)?, l)
    }

    /// Alive id with the largest primary key `<= bound`.
    pub fn pred(&self, bound: i64) -> Option<usize> {
        let (_, r) = self.span(NEG_INF, bound);
        self.last_alive(1, 0, self.order.len().checked_sub(1)?, r.checked_sub(1)?)
    }

    fn first_alive(&self, node: usize, l: usize, r: usize, from: usize) -> Option<usize> {
        if r < from || self.tree[node].alive == 0 {
            return None;
        }
        if l == r {
            return Some(self.order[l]);
        }
        let m = (l + r) / 2;
        self.first_alive(2 * node, l, m, from)
            .or_else(|| self.first_alive(2 * node + 1, m + 1, r, from))
    }

    fn last_alive(&self, node: usize, l: usize, r: usize, to: usize) -> Option<usize> {
        if l > to || self.tree[node].alive == 0 {
            return None;
        }
        if l == r {
            return Some(self.order[l]);
        }
        let m = (l + r) / 2;
        self.last_alive(2 * node + 1, m + 1, r, to)
            .or_else(|| self.last_alive(2 * node, l, m, to))
    }

    /// Alive id with the smallest secondary key among primary keys in
    /// `[lo, hi]`.
    pub fn min_secondary(&self, lo: i64, hi: i64) -> Option<usize> {
        let (l, r) = self.span(lo, hi);
        if l >= r {
            return None;
        }
        let best = self.min_sec_value(1, 0, self.order.len() - 1, l, r - 1);
        if best == POS_INF {
            return None;
        }
        self.find_sec(1, 0, self.order.len() - 1, l, r - 1, best)
    }

    fn min_sec_value(&self, node: usize, l: usize, r: usize, ql: usize, qr: usize) -> i64 {
        let nd = self.tree[node];
        if r < ql || qr < l || nd.alive == 0 {
            return POS_INF;
        }
        if ql <= l && r <= qr {
            return nd.min_s;
        }
        let m = (l + r) / 2;
        self.min_sec_value(2 * node, l, m, ql, qr)
            .min(self.min_sec_value(2 * node + 1, m + 1, r, ql, qr))
    }

    fn find_sec(&self, node: usize, l: usize, r: usize, ql: usize, qr: usize, v: i64) -> Option<usize> {
        let nd = self.tree[node];
        if r < ql || qr < l || nd.alive == 0 || nd.min_s > v {
            return None;
        }
        if l == r {
            return Some(self.order[l]);
        }
        let m = (l + r) / 2;
        self.find_sec(2 * node, l, m, ql, qr, v)
            .or_else(|| self.find_sec(2 * node + 1, m + 1, r, ql, qr, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Vec<RPoint> {
        vec![
            RPoint::new(0, 5),
            RPoint::new(1, 2),
            RPoint::new(2, 8),
            RPoint::new(3, 0),
            RPoint::new(4, 6),
            RPoint::new(5, 1),
        ]
    }

    #[test]
    fn report_and_delete() {
        let pts = grid();
        let mut idx = RangeIndex::over_all(&pts, Axis::X);
        let q = RBox {
            x_lo: 1,
            x_hi: 4,
            y_lo: 1,
            y_hi: 6,
        };
        assert_eq!(idx.report(&q), vec![1, 4]);
        idx.delete(1);
        assert_eq!(idx.report(&q), vec![4]);
        idx.revive(1);
        assert_eq!(idx.report(&q), vec![1, 4]);
        assert!(idx.any_in(&RBox::ALL));
    }

    #[test]
    fn succ_pred_and_min() {
        let pts = grid();
        let mut idx = RangeIndex::over_all(&pts, Axis::Y);
        assert_eq!(idx.succ(3), Some(0));
        assert_eq!(idx.pred(4), Some(1));
        idx.delete(0);
        assert_eq!(idx.succ(3), Some(4));
        assert_eq!(idx.pred(-1), None);
        let xi = RangeIndex::over_all(&pts, Axis::X);
        assert_eq!(xi.min_secondary(2, POS_INF), Some(3));
        assert_eq!(xi.min_secondary(4, 4), Some(4));
        assert_eq!(xi.min_secondary(6, 9), None);
    }
}
