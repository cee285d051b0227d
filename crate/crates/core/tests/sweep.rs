use std::collections::BTreeSet;

use stabber::oracle::oracle_classes;
use stabber::solvers::{solve_classes, solve_three_rect, three_rect_traced, SolveOptions, SweepMode};
use stabber::{Classification, Color, End, EndpointId, Instance, OpenDir, Shape, StabberClass};

/// A downward-open instance where one segment stays undecided in two
/// consecutive steps of the top-level sweep.
fn overlap_instance() -> Instance {
    Instance::from_ints(&[
        [(7, 3), (-8, -9)],
        [(12, -10), (-1, 7)],
        [(4, -7), (-10, -1)],
        [(-6, 2), (8, 0)],
        [(-12, 11), (2, -11)],
    ])
    .unwrap()
}

#[test]
fn sweep_steps_can_share_undecided_segments() {
    let inst = overlap_instance();
    let (classes, trace) = three_rect_traced(&inst, OpenDir::Down, &SolveOptions::default()).unwrap();
    assert_eq!(classes, oracle_classes(&inst, Shape::ThreeRect(OpenDir::Down)).unwrap());
    assert!(trace.overlaps().contains(&(0, 1, 0, 1)));

    // Step 0 colors both left-cell points blue, step 1 colors the nearer one
    // (the second endpoint of segment 0) red. Under either choice segment 1
    // still has completions through both of its endpoints.
    let ends = |c: &StabberClass| (0..inst.n()).map(|s| c.red_end(s)).collect::<Vec<_>>();
    for seg0 in [End::A, End::B] {
        let seg1: BTreeSet<End> = classes
            .iter()
            .map(ends)
            .filter(|e| e[0] == seg0 && e[2] == End::A)
            .map(|e| e[1])
            .collect();
        assert_eq!(seg1, BTreeSet::from([End::A, End::B]), "segment 0 red at {seg0:?}");
    }
}

#[test]
fn recompute_matches_rollback_on_the_overlap_instance() {
    let inst = overlap_instance();
    let opts = SolveOptions {
        sweep: SweepMode::Recompute,
        ..SolveOptions::default()
    };
    let (a, _) = three_rect_traced(&inst, OpenDir::Down, &opts).unwrap();
    let (b, _) = three_rect_traced(&inst, OpenDir::Down, &SolveOptions::default()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn preseed_restricts_three_rect_classes() {
    let inst = overlap_instance();
    let all = solve_classes(&inst, Shape::ThreeRect(OpenDir::Down), &SolveOptions::default()).unwrap();
    for seg in 0..inst.n() {
        for end in [End::A, End::B] {
            let mut pre = Classification::new();
            pre.assign_segment(EndpointId::new(seg, end), Color::Red).unwrap();
            let got: BTreeSet<StabberClass> = solve_three_rect(&inst, OpenDir::Down, Some(&pre))
                .unwrap()
                .into_iter()
                .map(|s| s.class)
                .collect();
            let want: BTreeSet<StabberClass> =
                all.iter().filter(|c| c.red_end(seg) == end).cloned().collect();
            assert_eq!(got, want, "segment {seg} red at {end:?}");
        }
    }
}
