//! Scene files: a JSON document holding one multiset, labeled multiset or
//! polygon with exact coordinates.
//!
//! ```json
//! { "kind": "polygon", "points": [[0, 0], ["7/2", 1.25], [1, "-3"]] }
//! ```
//!
//! Coordinates are JSON numbers or strings holding `p/q` or a decimal
//! literal; decimals are read digit by digit into exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::geom::{format_scalar, Point, Scalar, Similarity};
use crate::symmetry::{LabeledMultiset, Multiset, Polygon, Symmetric, SymmetryGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Multiset,
    Labeled,
    Polygon,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Multiset => "multiset",
            Kind::Labeled => "labeled",
            Kind::Polygon => "polygon",
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawScene {
    kind: Kind,
    points: Vec<[Value; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<u64>>,
}

/// Parsed scene with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SceneFile {
    pub kind: Kind,
    pub points: Vec<Point>,
    pub labels: Option<Vec<u64>>,
}

/// Parses `p/q`, an integer, or a decimal literal with optional exponent
/// into an exact rational.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("not a number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Invalid(format!("zero denominator in {s:?}")));
        }
        return Ok(Scalar::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all = format!("{int_part}{frac_part}");
    let mut n: BigInt = all.parse().map_err(|_| bad())?;
    if neg {
        n = -n;
    }
    let shift = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let p = ten.pow(shift.unsigned_abs());
    Ok(if shift >= 0 {
        Scalar::from_integer(n * p)
    } else {
        Scalar::new(n, p)
    })
}

fn parse_value(v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => parse_scalar(&n.to_string()),
        Value::String(s) => parse_scalar(s),
        other => Err(Error::Invalid(format!("coordinate must be a number or string, got {other}"))),
    }
}

impl SceneFile {
    pub fn parse(text: &str) -> Result<SceneFile> {
        let raw: RawScene =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("scene: {e}")))?;
        let points = raw
            .points
            .iter()
            .map(|[x, y]| Ok(Point::new(parse_value(x)?, parse_value(y)?)))
            .collect::<Result<Vec<_>>>()?;
        let scene = SceneFile {
            kind: raw.kind,
            points,
            labels: raw.labels,
        };
        scene.validate()?;
        Ok(scene)
    }

    fn validate(&self) -> Result<()> {
        if self.points.is_empty() {
            return Err(Error::Invalid("scene has no points".into()));
        }
        match (&self.kind, &self.labels) {
            (Kind::Labeled, None) => Err(Error::Invalid("labeled scene needs labels".into())),
            (_, Some(l)) if l.len() != self.points.len() => Err(Error::Invalid(format!(
                "{} points but {} labels",
                self.points.len(),
                l.len()
            ))),
            (Kind::Polygon, _) if self.points.len() < 3 => {
                Err(Error::Invalid("a polygon needs at least 3 vertices".into()))
            }
            _ => Ok(()),
        }
    }

    /// JSON with every coordinate written as an exact `p/q` string.
    pub fn to_json(&self) -> String {
        let raw = RawScene {
            kind: self.kind,
            points: self
                .points
                .iter()
                .map(|p| [Value::String(format_scalar(&p.x)), Value::String(format_scalar(&p.y))])
                .collect(),
            labels: self.labels.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }

    pub fn shape(&self) -> Result<Shape> {
        Ok(match self.kind {
            Kind::Multiset => Shape::Multiset(Multiset::new(self.points.clone())?),
            Kind::Labeled => Shape::Labeled(LabeledMultiset::new(
                self.points.clone(),
                self.labels.clone().unwrap_or_default(),
            )?),
            Kind::Polygon => Shape::Polygon(Polygon::new(self.points.clone())?),
        })
    }

    pub fn from_shape(shape: &Shape) -> SceneFile {
        SceneFile {
            kind: shape.kind(),
            points: shape.points().to_vec(),
            labels: match shape {
                Shape::Labeled(l) => Some(l.labels().to_vec()),
                _ => None,
            },
        }
    }
}

/// Any of the three object kinds.
#[derive(Clone, Debug)]
pub enum Shape {
    Multiset(Multiset),
    Labeled(LabeledMultiset),
    Polygon(Polygon),
}

impl Shape {
    pub fn kind(&self) -> Kind {
        match self {
            Shape::Multiset(_) => Kind::Multiset,
            Shape::Labeled(_) => Kind::Labeled,
            Shape::Polygon(_) => Kind::Polygon,
        }
    }

    pub fn points(&self) -> &[Point] {
        match self {
            Shape::Multiset(m) => m.points(),
            Shape::Labeled(l) => l.points(),
            Shape::Polygon(p) => p.vertices(),
        }
    }

    pub fn len(&self) -> usize {
        self.points().len()
    }

    pub fn is_empty(&self) -> bool {
        self.points().is_empty()
    }

    pub fn transform(&self, t: &Similarity) -> Shape {
        match self {
            Shape::Multiset(m) => Shape::Multiset(m.transform(t)),
            Shape::Labeled(l) => Shape::Labeled(l.transform(t)),
            Shape::Polygon(p) => Shape::Polygon(p.transform(t)),
        }
    }

    /// Largest coordinate magnitude, at least 1; used to scale tolerances.
    pub fn extent(&self) -> f64 {
        self.points()
            .iter()
            .flat_map(|p| p.to_f64())
            .fold(1.0, |m: f64, v| m.max(v.abs()))
    }

    pub fn describe(&self) -> String {
        let pts: Vec<String> = self.points().iter().map(|p| p.to_string()).collect();
        match self {
            Shape::Labeled(l) => format!("{} [{}] labels {:?}", self.kind(), pts.join(" "), l.labels()),
            _ => format!("{} [{}]", self.kind(), pts.join(" ")),
        }
    }
}

impl Symmetric for Shape {
    fn symmetry_group(&self) -> SymmetryGroup {
        match self {
            Shape::Multiset(m) => m.symmetry_group(),
            Shape::Labeled(l) => l.symmetry_group(),
            Shape::Polygon(p) => p.symmetry_group(),
        }
    }
}

/// Whether no two non-adjacent edges of the polygon meet and adjacent
/// edges meet only at their shared vertex.
pub fn is_simple(p: &Polygon) -> bool {
    use crate::geom::orient;
    let v = p.vertices();
    let n = v.len();
    let on_segment = |a: &Point, b: &Point, c: &Point| {
        orient(a, b, c) == 0
            && (&c.x - &a.x) * (&c.x - &b.x) <= Scalar::zero()
            && (&c.y - &a.y) * (&c.y - &b.y) <= Scalar::zero()
    };
    let meet = |a: &Point, b: &Point, c: &Point, d: &Point| {
        let o1 = orient(a, b, c);
        let o2 = orient(a, b, d);
        let o3 = orient(c, d, a);
        let o4 = orient(c, d, b);
        (o1 * o2 < 0 && o3 * o4 < 0)
            || on_segment(a, b, c)
            || on_segment(a, b, d)
            || on_segment(c, d, a)
            || on_segment(c, d, b)
    };
    if (0..n).any(|i| v[i] == v[(i + 1) % n]) {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (&v[i], &v[(i + 1) % n]);
            let (c, d) = (&v[j], &v[(j + 1) % n]);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // shared vertex; they overlap only if collinear and folding back
                let (shared, x, y) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                if orient(x, shared, y) == 0 && (x - shared).dot(&(y - shared)) > Scalar::zero() {
                    return false;
                }
            } else if meet(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ratio as q;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_scalar("0.1").unwrap(), q(1, 10));
        assert_eq!(parse_scalar("-2.50").unwrap(), q(-5, 2));
        assert_eq!(parse_scalar("1e3").unwrap(), q(1000, 1));
        assert_eq!(parse_scalar("12.5E-2").unwrap(), q(1, 8));
        assert_eq!(parse_scalar("7/21").unwrap(), q(1, 3));
        assert_eq!(parse_scalar(" -3 ").unwrap(), q(-3, 1));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar(".").is_err());
    }

    #[test]
    fn scene_round_trip() {
        let text = r#"{"kind":"labeled","points":[[0.1,"2/3"],[-1,3e2]],"labels":[1,2]}"#;
        let s = SceneFile::parse(text).unwrap();
        assert_eq!(s.points[0], Point::new(q(1, 10), q(2, 3)));
        assert_eq!(s.points[1], Point::new(q(-1, 1), q(300, 1)));
        let again = SceneFile::parse(&s.to_json()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn scene_validation() {
        assert!(SceneFile::parse(r#"{"kind":"polygon","points":[[0,0],[1,1]]}"#).is_err());
        assert!(SceneFile::parse(r#"{"kind":"labeled","points":[[0,0]]}"#).is_err());
        assert!(SceneFile::parse(r#"{"kind":"multiset","points":[]}"#).is_err());
        assert!(SceneFile::parse(r#"{"kind":"multiset","points":[[0,true]]}"#).is_err());
    }

    #[test]
    fn simplicity() {
        let pts = |v: &[(i64, i64)]| v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
        assert!(is_simple(&Polygon::new(pts(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap()));
        assert!(!is_simple(&Polygon::new(pts(&[(0, 0), (1, 1), (1, 0), (0, 1)])).unwrap()));
        assert!(!is_simple(&Polygon::new(pts(&[(0, 0), (1, 0), (3, 0)])).unwrap()));
    }
}
