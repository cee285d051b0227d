use proptest::prelude::*;
use stabber::cascade::{CascadeState, Discipline, Outcome};
use stabber::rank::{RPoint, Ranked};
use stabber::regions::BoxRegions;
use stabber::{Axis, Color, EndpointId, Side};

const SHAPES: [&[Side]; 4] = [
    &[Side::Top, Side::Bottom],
    &[Side::Left, Side::Top],
    &[Side::Left, Side::Top, Side::Right],
    &Side::ALL,
];

/// Fixpoint of the forcing rules on explicit point sets, or `None` on a
/// contradiction.
fn naive_cascade(
    pts: &[RPoint],
    sides: &[Side],
    seeds: &[(usize, Color)],
) -> Option<Vec<Option<Color>>> {
    let hull_has = |reds: &[RPoint], q: RPoint| {
        sides.iter().all(|&s| match s {
            Side::Left => reds.iter().any(|p| p.x <= q.x),
            Side::Right => reds.iter().any(|p| p.x >= q.x),
            Side::Bottom => reds.iter().any(|p| p.y <= q.y),
            Side::Top => reds.iter().any(|p| p.y >= q.y),
        })
    };
    let mut color: Vec<Option<Color>> = vec![None; pts.len()];
    let set = |color: &mut Vec<Option<Color>>, i: usize, c: Color| -> Option<bool> {
        match color[i] {
            Some(old) if old != c => None,
            Some(_) => Some(false),
            None => {
                color[i] = Some(c);
                Some(true)
            }
        }
    };
    for &(i, c) in seeds {
        set(&mut color, i, c)?;
    }
    loop {
        let mut changed = false;
        for i in 0..pts.len() {
            if let Some(c) = color[i] {
                changed |= set(&mut color, i ^ 1, c.opposite())?;
            }
        }
        let reds: Vec<RPoint> = (0..pts.len())
            .filter(|&i| color[i] == Some(Color::Red))
            .map(|i| pts[i])
            .collect();
        let blues: Vec<RPoint> = (0..pts.len())
            .filter(|&i| color[i] == Some(Color::Blue))
            .map(|i| pts[i])
            .collect();
        if blues.iter().any(|&b| hull_has(&reds, b)) {
            return None;
        }
        for i in 0..pts.len() {
            if hull_has(&reds, pts[i]) {
                changed |= set(&mut color, i, Color::Red)?;
            } else {
                let mut with = reds.clone();
                with.push(pts[i]);
                if blues.iter().any(|&b| hull_has(&with, b)) {
                    changed |= set(&mut color, i, Color::Blue)?;
                }
            }
        }
        if !changed {
            return Some(color);
        }
    }
}

fn points(n: usize) -> impl Strategy<Value = Vec<RPoint>> {
    let ranks = move || Just((0..2 * n as i64).collect::<Vec<_>>()).prop_shuffle();
    (ranks(), ranks())
        .prop_map(|(xs, ys)| xs.into_iter().zip(ys).map(|(x, y)| RPoint::new(x, y)).collect())
}

fn seeds(n: usize) -> impl Strategy<Value = Vec<(usize, Color)>> {
    let first = (0..2 * n).prop_map(|i| (i, Color::Red));
    let rest = proptest::collection::vec(
        (0..2 * n, any::<bool>()).prop_map(|(i, r)| (i, if r { Color::Red } else { Color::Blue })),
        0..3,
    );
    (first, rest).prop_map(|(f, mut r)| {
        r.retain(|s| s.0 != f.0);
        r.sort_by_key(|s| s.0);
        r.dedup_by_key(|s| s.0);
        r.insert(0, f);
        r
    })
}

fn state(pts: &[RPoint], sides: &[Side], d: Discipline) -> CascadeState {
    CascadeState::new(Ranked::from_points(pts.to_vec()), BoxRegions::new(sides), Axis::X)
        .with_discipline(d)
}

fn assigned(seeds: &[(usize, Color)]) -> Vec<(EndpointId, Color)> {
    seeds.iter().map(|&(i, c)| (EndpointId::from_index(i), c)).collect()
}

fn run(st: &mut CascadeState, seeds: &[(usize, Color)]) -> Outcome {
    match st.seed(&assigned(seeds)) {
        Ok(o) if o.is_consistent() => st.run(),
        Ok(o) => o,
        Err(e) => panic!("{e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn agrees_with_fixpoint(
        shape in 0usize..SHAPES.len(),
        pts in points(7),
        seeds in seeds(7),
    ) {
        let sides = SHAPES[shape];
        let want = naive_cascade(&pts, sides, &seeds);
        for d in [Discipline::Fifo, Discipline::Lifo] {
            let mut st = state(&pts, sides, d);
            let out = run(&mut st, &seeds);
            prop_assert_eq!(out.is_consistent(), want.is_some(), "{:?}", d);
            if let Some(want) = &want {
                st.check_partition().unwrap();
                let got: Vec<Option<Color>> =
                    (0..pts.len()).map(|i| st.color(EndpointId::from_index(i))).collect();
                prop_assert_eq!(&got, want);
            }
        }
    }

    #[test]
    fn rollback_restores_and_replays(
        shape in 0usize..SHAPES.len(),
        pts in points(7),
        first in seeds(7),
        more in proptest::collection::vec((0usize..14, any::<bool>()), 1..3),
    ) {
        let sides = SHAPES[shape];
        let mut st = state(&pts, sides, Discipline::Fifo);
        if !run(&mut st, &first).is_consistent() {
            return Ok(());
        }
        let before = st.clone();
        let cp = st.checkpoint();
        let more: Vec<(usize, Color)> = more
            .into_iter()
            .map(|(i, r)| (i, if r { Color::Red } else { Color::Blue }))
            .filter(|&(i, c)| st.color(EndpointId::from_index(i)).is_none_or(|old| old == c))
            .collect();
        let mut dedup = more.clone();
        dedup.sort_by_key(|s| s.0);
        dedup.dedup_by_key(|s| s.0);
        let out = run(&mut st, &dedup);
        let after: Vec<Option<Color>> =
            (0..pts.len()).map(|i| st.color(EndpointId::from_index(i))).collect();
        st.rollback(&cp).unwrap();
        prop_assert_eq!(st.assignments(), before.assignments());
        prop_assert_eq!(st.regions(), before.regions());
        prop_assert_eq!(st.unknown_segments(), before.unknown_segments());
        prop_assert_eq!(st.iterations(), before.iterations());
        st.check_partition().unwrap();
        // replaying the same seeds after rollback reproduces the result
        let again = run(&mut st, &dedup);
        prop_assert_eq!(again, out);
        let replay: Vec<Option<Color>> =
            (0..pts.len()).map(|i| st.color(EndpointId::from_index(i))).collect();
        if out.is_consistent() {
            prop_assert_eq!(replay, after);
        }
    }
}

#[test]
fn fifo_and_lifo_count_the_same_iterations_on_a_chain() {
    use stabber::gen::gen_cascade_chain;
    for n in [5, 12, 40] {
        let inst = gen_cascade_chain(n).unwrap();
        let ranked = Ranked::new(&inst);
        let pts: Vec<RPoint> = ranked.points().to_vec();
        for d in [Discipline::Fifo, Discipline::Lifo] {
            let mut st = state(&pts, &[Side::Top, Side::Bottom], d);
            // the two extreme segments: the top of the first span and the
            // bottom of the second are red
            let seeds = [(1, Color::Red), (2, Color::Red)];
            assert!(run(&mut st, &seeds).is_consistent());
            assert_eq!(st.unknown_count(), 0, "n = {n}");
            assert_eq!(st.iterations(), n);
        }
    }
}
