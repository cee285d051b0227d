//! Instance generators: the max-gap reduction, the quadratic rectangle
//! family, a forced-move chain, and seeded random instances.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coord::Coord;
use crate::error::{Result, StabError};
use crate::geom::{Instance, Point, Segment};

/// Strip instance whose narrowest vertical strip stabber has width
/// `max(xs) + 1 - maxgap(xs)`, where `maxgap` is the largest difference
/// between consecutive sorted values.
///
/// Values must be distinct and at least 1. `delta` shifts the two guard
/// segments off the values; it must be positive and below 1 and the smallest
/// gap. When omitted a suitable one is picked.
pub fn gen_maxgap(xs: &[Coord], delta: Option<&Coord>) -> Result<Instance> {
    if xs.len() < 2 {
        return Err(StabError::BadSize {
            n: xs.len(),
            reason: "need at least two values",
        });
    }
    let mut sorted = xs.to_vec();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(StabError::DuplicateValues(w[0].to_string()));
    }
    let zero = Coord::zero();
    // below 1 the left end of the smallest value's segment passes the guard
    if sorted[0] < Coord::from(1) {
        return Err(StabError::InvalidParameter(format!(
            "values must be at least 1, got {}",
            sorted[0]
        )));
    }
    let x_min = sorted[0].clone();
    let x_max = sorted[sorted.len() - 1].clone();
    let min_gap = sorted
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .min()
        .expect("two values");
    let bound = min_gap.min(Coord::from(1));

    let build = |d: &Coord| -> Instance {
        let one = Coord::from(1);
        let mut segs: Vec<Segment> = xs
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let y = Coord::from(i as i64 + 1);
                let left = &(x - &x_max) - &one;
                Segment::new(Point::new(left, y.clone()), Point::new(x.clone(), y))
            })
            .collect();
        segs.push(Segment::new(
            Point::new(&x_min - d, 0),
            Point::new(&x_max - d, 0),
        ));
        segs.push(Segment::new(
            Point::new(&(-&x_max) - d, 0),
            Point::new(-d.clone(), 0),
        ));
        Instance::new(segs).expect("nonempty, positive lengths")
    };
    let distinct_x = |inst: &Instance| {
        let vals: BTreeSet<&Coord> = inst.endpoint_ids().map(|id| &inst.point(id).x).collect();
        vals.len() == 2 * inst.n()
    };

    match delta {
        Some(d) => {
            if *d <= zero || *d >= bound {
                return Err(StabError::InvalidParameter(format!(
                    "delta must lie strictly between 0 and {bound}"
                )));
            }
            let inst = build(d);
            if !distinct_x(&inst) {
                return Err(StabError::InvalidParameter(format!(
                    "delta {d} makes two x-coordinates coincide"
                )));
            }
            Ok(inst)
        }
        None => {
            let half = Coord::new(1, 2)?;
            let mut d = &bound * &Coord::new(1, 4)?;
            loop {
                let inst = build(&d);
                if distinct_x(&inst) {
                    return Ok(inst);
                }
                d = &d * &half;
            }
        }
    }
}

/// The max-gap instance laid on the x-axis and turned by 45 degrees
/// (scaled), so that bottom-right quadrants play the role of vertical
/// strips.
pub fn gen_maxgap_rotated(xs: &[Coord], delta: Option<&Coord>) -> Result<Instance> {
    Ok(rotate45(&flatten(&gen_maxgap(xs, delta)?)))
}

fn flatten(inst: &Instance) -> Instance {
    inst.map_points(|p| Point::new(p.x.clone(), 0))
}

/// The map `(x, y) -> (x - y, x + y)`.
pub fn rotate45(inst: &Instance) -> Instance {
    inst.map_points(|p| Point::new(&p.x - &p.y, &p.x + &p.y))
}

/// Two crossing families of `n / 2` segments each, built so that the number
/// of rectangle stabber classes grows quadratically in `n`. Requires `n` to
/// be a multiple of 4 and at least 8.
pub fn gen_quadratic_rect(n: usize) -> Result<Instance> {
    if n < 8 || !n.is_multiple_of(4) {
        return Err(StabError::BadSize {
            n,
            reason: "need a multiple of 4, at least 8",
        });
    }
    let m = (n / 2) as i64;
    let mut segs = Vec::with_capacity(n);
    for i in 1..=m {
        segs.push(Segment::new(
            Point::new(i, m + i),
            Point::new(3 * m + i, 2 * m + i),
        ));
    }
    for j in 1..=m {
        segs.push(Segment::new(
            Point::new(m + j, j),
            Point::new(2 * m + j, 3 * m + j),
        ));
    }
    Instance::new(segs)
}

/// Horizontal-strip instance in which seeding the two extreme segments
/// forces every other segment one at a time.
pub fn gen_cascade_chain(n: usize) -> Result<Instance> {
    if n < 3 {
        return Err(StabError::BadSize {
            n,
            reason: "need at least three segments",
        });
    }
    let base = 4 * n as i64;
    let mut ys: Vec<(i64, i64)> = vec![(0, base), (base + 1, 2 * base)];
    let mut prev_b = 2 * base;
    let mut j = 1;
    while ys.len() < n {
        let r = base - 2 * j;
        let b = 2 * base - 2 * j;
        ys.push((prev_b + 1, r));
        if ys.len() < n {
            ys.push((r + 1, b));
        }
        prev_b = b;
        j += 1;
    }
    Instance::new(
        ys.iter()
            .enumerate()
            .map(|(k, &(ya, yb))| {
                let x = 2 * k as i64;
                Segment::new(Point::new(x, ya), Point::new(x + 1, yb))
            })
            .collect(),
    )
}

/// Parameters of [`gen_random`]. Coordinates are `k * delta` with `k`
/// uniform in `-range..=range`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    pub n: usize,
    pub range: i64,
    pub delta: Coord,
}

impl GenConfig {
    pub fn new(seed: u64, n: usize) -> Self {
        GenConfig {
            seed,
            n,
            range: 50,
            delta: Coord::from(1),
        }
    }
}

/// Random instance in general position for every shape: all x-coordinates
/// are pairwise distinct and so are all y-coordinates. A segment that would
/// collide with earlier ones is redrawn.
pub fn gen_random(cfg: &GenConfig) -> Result<Instance> {
    if cfg.n == 0 {
        return Err(StabError::BadSize {
            n: 0,
            reason: "need at least one segment",
        });
    }
    if cfg.range < 1 {
        return Err(StabError::InvalidParameter(format!(
            "range must be positive, got {}",
            cfg.range
        )));
    }
    if cfg.delta <= Coord::zero() {
        return Err(StabError::InvalidParameter(format!(
            "delta must be positive, got {}",
            cfg.delta
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let budget = 1000 + 100 * cfg.n;
    let mut xs = BTreeSet::new();
    let mut ys = BTreeSet::new();
    let mut segs = Vec::with_capacity(cfg.n);
    let mut attempts = 0;
    while segs.len() < cfg.n {
        if attempts == budget {
            return Err(StabError::ExhaustedRetries(attempts));
        }
        attempts += 1;
        let k: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-cfg.range..=cfg.range));
        let (xa, ya, xb, yb) = (k[0], k[1], k[2], k[3]);
        if xa == xb || ya == yb || xs.contains(&xa) || xs.contains(&xb) {
            continue;
        }
        if ys.contains(&ya) || ys.contains(&yb) {
            continue;
        }
        xs.extend([xa, xb]);
        ys.extend([ya, yb]);
        let c = |v: i64| &Coord::from(v) * &cfg.delta;
        segs.push(Segment::new(Point::new(c(xa), c(ya)), Point::new(c(xb), c(yb))));
    }
    Instance::new(segs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::validate_general_position;
    use crate::shape::{Shape, StripAxis};

    fn ints(v: &[i64]) -> Vec<Coord> {
        v.iter().map(|&x| Coord::from(x)).collect()
    }

    #[test]
    fn maxgap_rejects_bad_input() {
        assert!(matches!(
            gen_maxgap(&ints(&[3, 1, 3]), None),
            Err(StabError::DuplicateValues(_))
        ));
        assert!(matches!(gen_maxgap(&ints(&[3]), None), Err(StabError::BadSize { .. })));
        assert!(matches!(
            gen_maxgap(&ints(&[0, 2]), None),
            Err(StabError::InvalidParameter(_))
        ));
        assert!(matches!(
            gen_maxgap(&[Coord::new(1, 2).unwrap(), Coord::from(3)], None),
            Err(StabError::InvalidParameter(_))
        ));
        assert!(matches!(
            gen_maxgap(&ints(&[1, 2]), Some(&Coord::from(1))),
            Err(StabError::InvalidParameter(_))
        ));
    }

    #[test]
    fn maxgap_shape() {
        let inst = gen_maxgap(&ints(&[7, 4, 1, 2, 8]), None).unwrap();
        assert_eq!(inst.n(), 7);
        validate_general_position(&inst, Shape::Strip(StripAxis::Vertical)).unwrap();
        let rot = gen_maxgap_rotated(&ints(&[7, 4, 1, 2, 8]), None).unwrap();
        for s in rot.segments() {
            assert_eq!(s.a.x, s.a.y);
        }
    }

    #[test]
    fn qrect_sizes() {
        for n in [4, 10, 6] {
            assert!(matches!(gen_quadratic_rect(n), Err(StabError::BadSize { .. })));
        }
        let inst = gen_quadratic_rect(12).unwrap();
        assert_eq!(inst.n(), 12);
        validate_general_position(&inst, Shape::Rect).unwrap();
    }

    #[test]
    fn chain_is_in_general_position() {
        assert!(gen_cascade_chain(2).is_err());
        for n in 3..40 {
            let inst = gen_cascade_chain(n).unwrap();
            assert_eq!(inst.n(), n);
            validate_general_position(&inst, Shape::Rect).unwrap();
        }
    }

    #[test]
    fn random_is_seeded() {
        let cfg = GenConfig::new(42, 9);
        let a = gen_random(&cfg).unwrap();
        assert_eq!(a, gen_random(&cfg).unwrap());
        assert_ne!(a, gen_random(&GenConfig::new(43, 9)).unwrap());
        validate_general_position(&a, Shape::Rect).unwrap();
        assert!(gen_random(&GenConfig::new(1, 0)).is_err());
        let tight = GenConfig { range: 2, ..GenConfig::new(1, 5) };
        assert!(matches!(gen_random(&tight), Err(StabError::ExhaustedRetries(_))));
        let frac = GenConfig { delta: Coord::new(1, 3).unwrap(), ..GenConfig::new(5, 4) };
        let f = gen_random(&frac).unwrap();
        assert!(f.segments().iter().all(|s| (&s.a.x * &Coord::from(3)).is_integer()));
    }
}
