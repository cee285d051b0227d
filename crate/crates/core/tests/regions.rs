use proptest::prelude::*;
use stabber::rank::RPoint;
use stabber::regions::{BoxRegions, Location};
use stabber::Side;

/// Reference model: a point is forbidden iff the smallest shape holding all
/// reds and the point also holds a blue point.
struct Naive {
    sides: Vec<Side>,
    reds: Vec<RPoint>,
    blues: Vec<RPoint>,
}

impl Naive {
    fn hull_contains(&self, pts: &[RPoint], q: RPoint) -> bool {
        self.sides.iter().all(|&s| match s {
            Side::Left => pts.iter().any(|p| p.x <= q.x),
            Side::Right => pts.iter().any(|p| p.x >= q.x),
            Side::Bottom => pts.iter().any(|p| p.y <= q.y),
            Side::Top => pts.iter().any(|p| p.y >= q.y),
        })
    }

    fn in_red(&self, q: RPoint) -> bool {
        !self.reds.is_empty() && self.hull_contains(&self.reds, q)
    }

    fn forbidden(&self, q: RPoint) -> bool {
        let mut pts = self.reds.clone();
        pts.push(q);
        self.blues.iter().any(|&b| self.hull_contains(&pts, b))
    }
}

const SHAPES: [&[Side]; 5] = [
    &[Side::Top],
    &[Side::Top, Side::Bottom],
    &[Side::Left, Side::Top],
    &[Side::Left, Side::Top, Side::Right],
    &Side::ALL,
];

fn points(n: usize) -> impl Strategy<Value = Vec<RPoint>> {
    let ranks = || Just((0..n as i64).collect::<Vec<_>>()).prop_shuffle();
    (ranks(), ranks())
        .prop_map(|(xs, ys)| xs.into_iter().zip(ys).map(|(x, y)| RPoint::new(x, y)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn matches_reference_model(
        shape in 0usize..SHAPES.len(),
        pts in points(14),
        colors in proptest::collection::vec(any::<bool>(), 14),
    ) {
        let sides = SHAPES[shape];
        let mut reg = BoxRegions::new(sides);
        let mut naive = Naive { sides: sides.to_vec(), reds: vec![], blues: vec![] };
        let (queries, ops) = pts.split_at(6);
        for (k, (&p, &red)) in ops.iter().zip(&colors).enumerate() {
            let red = red || k == 0;
            if red {
                let bad = naive.forbidden(p);
                let r = reg.add_red(p);
                prop_assert_eq!(r.is_err(), bad);
                if bad {
                    break;
                }
                naive.reds.push(p);
            } else {
                let bad = naive.in_red(p);
                let r = reg.add_blue(p);
                prop_assert_eq!(r.is_err(), bad);
                if bad {
                    break;
                }
                naive.blues.push(p);
            }
            for &q in queries {
                prop_assert_eq!(reg.in_red(q), naive.in_red(q));
                if !naive.in_red(q) {
                    prop_assert_eq!(reg.is_forbidden(q), naive.forbidden(q), "{:?} {:?}", sides, q);
                }
                let loc = reg.locate(q);
                prop_assert_eq!(loc == Location::Red, naive.in_red(q));
                prop_assert_eq!(loc == Location::Blue, !naive.in_red(q) && naive.forbidden(q));
            }
        }
    }
}
