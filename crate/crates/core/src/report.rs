//! Everything computable about one scene: its symmetry group, class, fixed
//! set and center values, plus a serializable summary.

use serde::Serialize;

use crate::geom::{all_collinear, circumcircle, format_scalar, Circle, Point};
use crate::multiset_centers::{
    b_center_labeled_of_points, b_center_of_points, centroid_center, x_center_detail, y_center_with,
};
use crate::polygon_centers::{x_center_polygon_detail, y_center_polygon_tol};
use crate::scene::{Kind, Shape};
use crate::symmetry::{describe_line, Class, FixedSet, Multiset, Symmetric, SymmetryGroup};
use crate::value::{affinely_independent, CenterValue};
use crate::Result;

#[derive(Clone, Debug)]
pub struct Analysis {
    pub shape: Shape,
    pub group: SymmetryGroup,
    pub class: Class,
    pub fixed: FixedSet,
    pub centroid: CenterValue,
    /// Circle through the distinct points, when they are concyclic.
    pub circle: Option<Circle>,
    /// Cyclic center of the distinct points (labeled when the scene is).
    pub cyclic_center: Option<CenterValue>,
    /// Undefined for labeled scenes.
    pub x: Option<CenterValue>,
    pub y: Option<CenterValue>,
    pub tol: f64,
}

fn concyclic(points: &[Point]) -> Option<Circle> {
    let mut d = points.to_vec();
    d.sort();
    d.dedup();
    match d.len() {
        0 | 1 => None,
        2 => circumcircle(&d).ok(),
        _ if all_collinear(&d) => None,
        _ => circumcircle(&d).ok().filter(|c| d.iter().all(|p| c.contains(p))),
    }
}

pub fn analyze(shape: &Shape, tol: f64) -> Result<Analysis> {
    let group = shape.symmetry_group();
    let fixed = crate::symmetry::fixed_set(&group);
    let class = fixed.class();
    let circle = concyclic(shape.points());
    let (centroid, x, y, cyclic_center) = match shape {
        Shape::Multiset(m) => {
            let x = x_center_detail(m, tol)?;
            let y = if class == Class::C {
                y_center_with(m, &x, tol)?
            } else {
                centroid_center(m)
            };
            let b = circle.as_ref().map(|_| b_center_of_points(m)).transpose()?;
            (centroid_center(m), Some(x.value), Some(y), b)
        }
        Shape::Labeled(l) => {
            let b = circle.as_ref().map(|_| b_center_labeled_of_points(l)).transpose()?;
            (centroid_center(&l.unlabeled()), None, None, b)
        }
        Shape::Polygon(p) => {
            let x = x_center_polygon_detail(p, tol)?.value;
            let y = y_center_polygon_tol(p, tol)?;
            let vm: Multiset = p.vertex_multiset();
            let b = circle.as_ref().map(|_| b_center_of_points(&vm)).transpose()?;
            (CenterValue::exact(p.centroid()), Some(x), Some(y), b)
        }
    };
    Ok(Analysis {
        shape: shape.clone(),
        group,
        class,
        fixed,
        centroid,
        circle,
        cyclic_center,
        x,
        y,
        tol,
    })
}

impl Analysis {
    pub fn x_eq_centroid(&self) -> Option<bool> {
        self.x.as_ref().map(|x| x.is_exact() && x.exact_point() == self.centroid.exact_point())
    }

    pub fn triple_collinear(&self) -> Option<bool> {
        let (x, y) = (self.x.as_ref()?, self.y.as_ref()?);
        Some(!affinely_independent(&self.centroid, x, y, self.tol))
    }

    pub fn report(&self, digits: usize) -> CenterReport {
        let render = |v: &CenterValue| v.render(digits);
        CenterReport {
            kind: self.shape.kind(),
            n: self.shape.len(),
            symmetry: SymmetryReport {
                group: self.group.to_string(),
                rotation_order: self.group.rotation_order,
                axes: self.group.axes.len(),
                axis_lines: self.group.axes.iter().map(describe_line).collect(),
                center: [format_scalar(&self.group.center.x), format_scalar(&self.group.center.y)],
                continuous: self.group.continuous,
            },
            class: self.class,
            fixed_set: describe_fixed_set(&self.fixed),
            centers: Centers {
                centroid: render(&self.centroid),
                circumcenter: self
                    .circle
                    .as_ref()
                    .map(|c| [format_scalar(&c.center.x), format_scalar(&c.center.y)]),
                cyclic: self.cyclic_center.as_ref().map(render),
                x: self.x.as_ref().map(render),
                y: self.y.as_ref().map(render),
            },
            flags: match (self.x_eq_centroid(), self.triple_collinear()) {
                (Some(x_eq_centroid), Some(triple_collinear)) => Some(Flags {
                    x_eq_centroid,
                    triple_collinear,
                }),
                _ => None,
            },
        }
    }
}

pub fn describe_fixed_set(f: &FixedSet) -> String {
    match f {
        FixedSet::Plane => "plane".into(),
        FixedSet::Line(l) => format!("line {}", describe_line(l)),
        FixedSet::SinglePoint(p) => format!("point ({}, {})", format_scalar(&p.x), format_scalar(&p.y)),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SymmetryReport {
    pub group: String,
    pub rotation_order: usize,
    pub axes: usize,
    pub axis_lines: Vec<String>,
    pub center: [String; 2],
    pub continuous: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Centers {
    pub centroid: [String; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circumcenter: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<[String; 2]>,
    #[serde(rename = "X", skip_serializing_if = "Option::is_none")]
    pub x: Option<[String; 2]>,
    #[serde(rename = "Y", skip_serializing_if = "Option::is_none")]
    pub y: Option<[String; 2]>,
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct Flags {
    #[serde(rename = "X_eq_centroid")]
    pub x_eq_centroid: bool,
    pub triple_collinear: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CenterReport {
    pub kind: Kind,
    pub n: usize,
    pub symmetry: SymmetryReport,
    pub class: Class,
    pub fixed_set: String,
    pub centers: Centers,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flags: Option<Flags>,
}

impl CenterReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
