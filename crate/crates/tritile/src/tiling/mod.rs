//! Exact geometry: polygons, triangles, the two tiling constructors, and
//! a certifying verifier built on exact predicates.

pub mod construct;
pub mod predicates;
pub mod shape;
pub mod verify;

pub use construct::{canonical_tiling, square_ladder_tiling};
pub use shape::{similar_to, Handedness, ShapeClass};
pub use verify::{verify_tiling, verify_tiling_shape, VerificationReport};

use crate::error::{Error, Result};
use crate::field::rational::rat;
use crate::field::{CycloNum, PiAngle};
use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// A vertex: an exact complex coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    pub z: CycloNum,
}

impl Point {
    pub fn new(z: CycloNum) -> Self {
        Point { z }
    }
}

/// A closed triangle given by its three vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Triangle {
    pub fn new(a: CycloNum, b: CycloNum, c: CycloNum) -> Self {
        Triangle {
            a: Point::new(a),
            b: Point::new(b),
            c: Point::new(c),
        }
    }

    pub fn vertices(&self) -> [&CycloNum; 3] {
        [&self.a.z, &self.b.z, &self.c.z]
    }

    /// Exact centroid `(a + b + c) / 3`.
    pub fn centroid(&self) -> CycloNum {
        self.a
            .z
            .try_add(&self.b.z)
            .and_then(|s| s.try_add(&self.c.z))
            .expect("tile vertices share an order")
            .scale(&rat(1, 3))
    }
}

// On the wire a triangle is a 3-element array of points.
impl Serialize for Triangle {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        (&self.a, &self.b, &self.c).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Triangle {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let (a, b, c) = <(Point, Point, Point)>::deserialize(deserializer)?;
        Ok(Triangle { a, b, c })
    }
}

/// The target polygon being tiled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PolygonSpec {
    /// Regular n-gon, circumradius 1, centered at the origin, one vertex
    /// at 1.
    Ngon { n: u64 },
    /// The unit square `[0,1] x [0,1]`.
    Square,
}

impl PolygonSpec {
    /// Interior angle at each corner.
    pub fn interior_angle(&self) -> PiAngle {
        match self {
            PolygonSpec::Ngon { n } => PiAngle::interior_angle(*n),
            PolygonSpec::Square => PiAngle::right(),
        }
    }

    /// The field order the constructors use for this polygon.
    pub fn natural_order(&self) -> u64 {
        match self {
            PolygonSpec::Ngon { n } => 2 * n,
            PolygonSpec::Square => 4,
        }
    }

    /// Counterclockwise vertex list in Q(zeta_order).
    pub fn vertices(&self, order: u64) -> Result<Vec<CycloNum>> {
        match self {
            PolygonSpec::Ngon { n } => {
                if *n < 3 {
                    return Err(Error::MalformedTiling(format!(
                        "ngon needs n >= 3, got {}",
                        n
                    )));
                }
                if !order.is_multiple_of(*n) {
                    return Err(Error::BadEmbedding { old: *n, new: order });
                }
                let step = (order / n) as i64;
                Ok((0..*n)
                    .map(|j| CycloNum::root_power(order, step * j as i64))
                    .collect())
            }
            PolygonSpec::Square => {
                if !order.is_multiple_of(4) {
                    return Err(Error::BadEmbedding { old: 4, new: order });
                }
                let i = CycloNum::root_power(order, (order / 4) as i64);
                let one = CycloNum::one(order);
                Ok(vec![
                    CycloNum::zero(order),
                    one.clone(),
                    one.try_add(&i).unwrap(),
                    i,
                ])
            }
        }
    }

    /// The quantity `4i * area` as an exact field element: the shoelace
    /// sum written with conjugations only, so it stays inside Q(zeta_m).
    pub fn area_form(&self, order: u64) -> Result<CycloNum> {
        let verts = self.vertices(order)?;
        let mut acc = CycloNum::zero(order);
        for j in 0..verts.len() {
            let edge_form = CycloNum::cross_form(&verts[j], &verts[(j + 1) % verts.len()]);
            acc = acc.try_add(&edge_form)?;
        }
        Ok(acc)
    }
}

/// Exact polygon area as a real cyclotomic number. The result lives in
/// Q(zeta_M) with M = lcm(order, 4), since dividing the shoelace form by
/// `4i` needs `i` in the field.
pub fn polygon_area(polygon: &PolygonSpec, field_order: u64) -> Result<CycloNum> {
    let form = polygon.area_form(field_order)?;
    let m = field_order.lcm(&4);
    let neg_i = CycloNum::root_power(m, -((m / 4) as i64));
    form.embed(m)?
        .try_mul(&neg_i)
        .map(|x| x.scale(&rat(1, 4)))
}

/// A dissection of a polygon into triangles, all sharing one field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tiling {
    pub field_order: u64,
    pub polygon: PolygonSpec,
    pub tiles: Vec<Triangle>,
}

impl Tiling {
    /// Structural checks: a nonempty tile list, one shared field order,
    /// and a polygon representable at that order.
    pub fn validate(&self) -> Result<()> {
        if self.tiles.is_empty() {
            return Err(Error::MalformedTiling("no tiles".into()));
        }
        for tri in &self.tiles {
            for v in tri.vertices() {
                if v.order() != self.field_order {
                    return Err(Error::OrderMismatch(self.field_order, v.order()));
                }
            }
        }
        self.polygon.vertices(self.field_order)?;
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tiling serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Tiling> {
        let t: Tiling = serde_json::from_str(text)?;
        t.validate()?;
        Ok(t)
    }
}
