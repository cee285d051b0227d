//! JSON files for instances and solutions.
//!
//! Coordinates are written as JSON integers when integral and as `"p/q"`
//! strings otherwise; both forms are accepted on input.

use serde::{Deserialize, Serialize};

use crate::classify::StabberClass;
use crate::coord::Coord;
use crate::error::{Result, StabError};
use crate::geom::{End, EndpointId, Instance, Point, Segment};
use crate::shape::{Shape, Solution};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum CoordRepr {
    Int(i64),
    Text(String),
}

impl CoordRepr {
    fn of(c: &Coord) -> CoordRepr {
        match c.to_i64() {
            Some(v) => CoordRepr::Int(v),
            None => CoordRepr::Text(c.to_string()),
        }
    }

    fn value(&self) -> Result<Coord> {
        match self {
            CoordRepr::Int(v) => Ok(Coord::from(*v)),
            CoordRepr::Text(s) => s.parse(),
        }
    }
}

type PointRepr = [CoordRepr; 2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    segments: Vec<[PointRepr; 2]>,
}

fn parse_err(e: serde_json::Error) -> StabError {
    StabError::Parse(e.to_string())
}

pub fn instance_from_json(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(parse_err)?;
    let point = |p: &PointRepr| -> Result<Point> { Ok(Point::new(p[0].value()?, p[1].value()?)) };
    let segs = file
        .segments
        .iter()
        .map(|[a, b]| Ok(Segment::new(point(a)?, point(b)?)))
        .collect::<Result<Vec<_>>>()?;
    Instance::new(segs)
}

fn compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// `{"key": [` then one item per line.
fn listing(head: &str, key: &str, items: Vec<String>) -> String {
    let mut out = format!("{{\n{head}  \"{key}\": [");
    for (i, item) in items.iter().enumerate() {
        out.push_str(if i == 0 { "\n    " } else { ",\n    " });
        out.push_str(item);
    }
    out.push_str(if items.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
    out
}

/// Instance file with one segment per line.
pub fn instance_to_json(inst: &Instance) -> String {
    let point = |p: &Point| [CoordRepr::of(&p.x), CoordRepr::of(&p.y)];
    let segs = inst
        .segments()
        .iter()
        .map(|s| compact(&[point(&s.a), point(&s.b)]))
        .collect();
    listing("", "segments", segs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
struct ShapeRepr {
    kind: &'static str,
    orientation: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
struct ShapeIn {
    kind: String,
    orientation: Option<String>,
}

impl ShapeIn {
    fn shape(&self) -> Result<Shape> {
        Shape::parse(&self.kind, self.orientation.as_deref())
    }
}

fn shape_repr(shape: Shape) -> ShapeRepr {
    ShapeRepr {
        kind: shape.kind_name(),
        orientation: shape.orientation_name(),
    }
}

type EndRepr = (usize, String);

fn end_repr(id: EndpointId) -> EndRepr {
    let end = match id.end {
        End::A => "A",
        End::B => "B",
    };
    (id.seg, end.to_string())
}

fn end_value((seg, end): &EndRepr) -> Result<EndpointId> {
    let end = match end.as_str() {
        "A" => End::A,
        "B" => End::B,
        other => return Err(StabError::Parse(format!("bad endpoint name {other:?}"))),
    };
    Ok(EndpointId::new(*seg, end))
}

#[derive(Serialize)]
struct SolutionOut {
    shape: ShapeRepr,
    anchors: Vec<EndRepr>,
    class: Vec<EndRepr>,
    trivial: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SolutionIn {
    shape: Option<ShapeIn>,
    anchors: Vec<EndRepr>,
    class: Vec<EndRepr>,
    trivial: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SolutionFileIn {
    shape: ShapeIn,
    solutions: Vec<SolutionIn>,
}

/// Solutions of `shape`, sorted by class. Each solution also names its own
/// shape, which differs from the requested one for the complementary
/// halfplane.
pub fn solutions_to_json(shape: Shape, sols: &[Solution]) -> String {
    let mut sols: Vec<&Solution> = sols.iter().collect();
    sols.sort_by(|a, b| a.class.cmp(&b.class).then(a.shape.cmp(&b.shape)));
    let items = sols
        .into_iter()
        .map(|s| {
            compact(&SolutionOut {
                shape: shape_repr(s.shape),
                anchors: s.anchors.iter().map(|&a| end_repr(a)).collect(),
                class: s.class.reds().iter().map(|&a| end_repr(a)).collect(),
                trivial: s.trivial,
            })
        })
        .collect();
    let head = format!("  \"shape\": {},\n", compact(&shape_repr(shape)));
    listing(&head, "solutions", items)
}

/// Parses a solution file for an instance with `n` segments.
pub fn solutions_from_json(text: &str, n: usize) -> Result<(Shape, Vec<Solution>)> {
    let file: SolutionFileIn = serde_json::from_str(text).map_err(parse_err)?;
    let shape = file.shape.shape()?;
    let sols = file
        .solutions
        .iter()
        .map(|s| {
            let reds = s.class.iter().map(end_value).collect::<Result<Vec<_>>>()?;
            if reds.iter().any(|r| r.seg >= n) {
                return Err(StabError::MalformedSolution(
                    "class names a segment outside the instance".into(),
                ));
            }
            Ok(Solution {
                shape: match &s.shape {
                    Some(sh) => sh.shape()?,
                    None => shape,
                },
                anchors: s.anchors.iter().map(end_value).collect::<Result<_>>()?,
                class: StabberClass::from_reds(reds, n)?,
                trivial: s.trivial,
            })
        })
        .collect::<Result<_>>()?;
    Ok((shape, sols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{HalfplaneDir, StripAxis};
    use crate::solvers::solve;

    #[test]
    fn instance_round_trip() {
        let text = r#"{"segments": [[[0, "1/2"], [2, 1]], [["-7/3", 2], [1, 3]]]}"#;
        let inst = instance_from_json(text).unwrap();
        assert_eq!(inst.point(EndpointId::new(0, End::A)).y, Coord::new(1, 2).unwrap());
        let out = instance_to_json(&inst);
        assert_eq!(instance_from_json(&out).unwrap(), inst);
        assert_eq!(instance_to_json(&instance_from_json(&out).unwrap()), out);
        assert!(out.contains("\"-7/3\""));
    }

    #[test]
    fn instance_parse_errors() {
        for bad in [
            "",
            "{",
            r#"{"segments": []}"#,
            r#"{"segments": [[[0, 1.5], [2, 1]]]}"#,
            r#"{"segments": [[[0, "x"], [2, 1]]]}"#,
            r#"{"segments": [[[0, "1/0"], [2, 1]]]}"#,
            r#"{"points": []}"#,
        ] {
            assert!(instance_from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn solutions_round_trip() {
        let inst = Instance::from_ints(&[[(0, 0), (2, 2)], [(1, 1), (3, 3)]]).unwrap();
        for shape in [Shape::Halfplane(HalfplaneDir::Up), Shape::Strip(StripAxis::Horizontal)] {
            let sols = solve(&inst, shape).unwrap();
            let text = solutions_to_json(shape, &sols);
            let (back_shape, back) = solutions_from_json(&text, inst.n()).unwrap();
            assert_eq!(back_shape, shape);
            let mut want = sols.clone();
            want.sort_by(|a, b| a.class.cmp(&b.class));
            assert_eq!(back, want);
        }
        let text = solutions_to_json(Shape::Rect, &[]);
        assert!(text.contains("\"orientation\":null"));
        assert_eq!(solutions_from_json(&text, 2).unwrap().1, vec![]);
    }
}
