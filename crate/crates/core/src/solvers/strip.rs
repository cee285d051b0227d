use std::collections::BTreeSet;

use super::{check_split, complete_toward, halfplane::halfplane_classes, SolveOptions};
use crate::cascade::CascadeState;
use crate::classify::{Color, StabberClass};
use crate::error::Result;
use crate::geom::{Axis, EndpointId};
use crate::rank::Ranked;
use crate::regions::{BoxRegions, Cell};
use crate::shape::Side;

/// Horizontal strips. Every strip contains the highest lower endpoint and
/// the lowest upper endpoint unless it is equivalent to a halfplane. After
/// cascading, each unknown segment has one endpoint in the gray band above
/// the red strip and one below; a stabber either takes a whole band, or
/// contains the gray endpoint closest to red on both sides.
pub(crate) fn strip_classes(pts: &Ranked, opts: &SolveOptions) -> Result<BTreeSet<StabberClass>> {
    let n = pts.n();
    let mut out = halfplane_classes(pts);
    let q_b = (0..n)
        .map(|s| pts.low_end(s, Axis::Y))
        .max_by_key(|&i| pts.at(i).y)
        .expect("nonempty");
    let p_t = (0..n)
        .map(|s| pts.high_end(s, Axis::Y))
        .min_by_key(|&i| pts.at(i).y)
        .expect("nonempty");
    let mut st = CascadeState::new(
        pts.clone(),
        BoxRegions::new(&[Side::Top, Side::Bottom]),
        Axis::Y,
    )
    .with_discipline(opts.discipline);
    let mut seeds = vec![
        (EndpointId::from_index(q_b), Color::Red),
        (EndpointId::from_index(p_t), Color::Red),
    ];
    loop {
        if !st.seed(&seeds)?.is_consistent() || !st.run().is_consistent() {
            break;
        }
        if opts.check_invariants {
            st.check_partition()?;
            check_split(&st, Cell::C, Cell::BELOW)?;
        }
        if let Some(class) = st.class() {
            out.insert(class);
            break;
        }
        out.insert(complete_toward(&st, Cell::C));
        out.insert(complete_toward(&st, Cell::BELOW));
        let red = st.regions().red_box().expect("seeded");
        let tau = st.index().succ(red.y_hi + 1).expect("gray endpoint above");
        let beta = st.index().pred(red.y_lo - 1).expect("gray endpoint below");
        seeds = vec![
            (EndpointId::from_index(tau), Color::Red),
            (EndpointId::from_index(beta), Color::Red),
        ];
    }
    Ok(out)
}
