//! Similarity-equivariant centers of point multisets and polygons.
//!
//! A center is a map sending each finite configuration of points in the
//! plane to a point, commuting with every similarity of the plane. The
//! constructions here pick centers that coincide with the centroid exactly
//! when the configuration has enough symmetry to force it.

pub mod angle;
pub mod corpus;
pub mod cyclic;
pub mod error;
pub mod geom;
pub mod multiset_centers;
pub mod oracle;
pub mod polygon_centers;
pub mod real;
pub mod report;
pub mod scene;
pub mod svg;
pub mod symmetry;
pub mod value;

pub use angle::{Angle, ArcMode, DEFAULT_ANGLE_TOL};
pub use cyclic::{
    a_center, b_center, b_center_labeled, circle_adjacency, orbit_partition, phi, CyclicCenter,
    CyclicConfiguration, CyclicPoint, OrbitPartition,
};
pub use error::{Error, Result};
pub use geom::{centroid, circumcircle, Circle, Point, Scalar, Similarity};
pub use real::Real;
pub use value::CenterValue;
pub use symmetry::{
    classify, fixed_set, is_rotationally_symmetric, symmetry_group_labeled,
    symmetry_group_multiset, symmetry_group_polygon, Class, FixedSet, LabeledMultiset, Line,
    Multiset, Polygon, Symmetric, SymmetryGroup,
};
