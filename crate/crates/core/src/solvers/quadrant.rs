use std::collections::BTreeSet;

use super::{check_split, complete_toward, SolveOptions};
use crate::cascade::CascadeState;
use crate::classify::{Color, StabberClass};
use crate::error::Result;
use crate::geom::{Axis, EndpointId};
use crate::index::POS_INF;
use crate::rank::{RPoint, Ranked};
use crate::regions::{BoxRegions, Cell};
use crate::shape::Side;

/// Bottom-right quadrants `{x >= l, y <= t}`. Any such stabber contains the
/// apex `(min_s max x, max_s min y)`. After cascading, each unknown segment
/// has one endpoint above the red quadrant (cell C) and one left of it
/// (cell A); the enumeration mirrors the strip case.
pub(crate) fn quadrant_classes(
    pts: &Ranked,
    opts: &SolveOptions,
) -> Result<BTreeSet<StabberClass>> {
    let n = pts.n();
    let apex = RPoint::new(
        (0..n).map(|s| pts.at(pts.high_end(s, Axis::X)).x).min().expect("nonempty"),
        (0..n).map(|s| pts.at(pts.low_end(s, Axis::Y)).y).max().expect("nonempty"),
    );
    let mut out = BTreeSet::new();
    let mut st = CascadeState::new(
        pts.clone(),
        BoxRegions::new(&[Side::Left, Side::Top]).with_white(Cell::B),
        Axis::X,
    )
    .with_discipline(opts.discipline);
    st.grow_red(apex);
    let mut seeds = Vec::new();
    loop {
        if !st.seed(&seeds)?.is_consistent() || !st.run().is_consistent() {
            break;
        }
        if opts.check_invariants {
            st.check_partition()?;
            check_split(&st, Cell::C, Cell::A)?;
        }
        if let Some(class) = st.class() {
            out.insert(class);
            break;
        }
        out.insert(complete_toward(&st, Cell::C));
        out.insert(complete_toward(&st, Cell::A));
        let red = st.regions().red_box().expect("seeded");
        let up = st.index().min_secondary(red.x_lo, POS_INF).expect("gray endpoint above");
        let left = st.index().pred(red.x_lo - 1).expect("gray endpoint left");
        seeds = vec![
            (EndpointId::from_index(up), Color::Red),
            (EndpointId::from_index(left), Color::Red),
        ];
    }
    Ok(out)
}
