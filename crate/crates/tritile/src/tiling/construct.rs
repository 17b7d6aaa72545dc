//! The two constructive witnesses.

use crate::field::rational::{rat, Rational};
use crate::field::CycloNum;
use crate::tiling::{PolygonSpec, Tiling, Triangle};
use num_bigint::BigInt;

/// Dissects the regular n-gon into 2n congruent right triangles: connect
/// the center to each vertex and drop the apothem foot onto each edge
/// midpoint. Tile angles are `pi/n` at the center and `(n-2)pi/(2n)` at
/// the polygon vertex; coordinates live in Q(zeta_2n).
pub fn canonical_tiling(n: u64) -> Tiling {
    assert!(n >= 3, "canonical tiling needs n >= 3");
    let order = 2 * n;
    let polygon = PolygonSpec::Ngon { n };
    let verts = polygon
        .vertices(order)
        .expect("2n is always a compatible order");
    let center = CycloNum::zero(order);
    let half = rat(1, 2);
    let mut tiles = Vec::with_capacity(2 * n as usize);
    for j in 0..n as usize {
        let v0 = &verts[j];
        let v1 = &verts[(j + 1) % n as usize];
        let mid = v0.try_add(v1).unwrap().scale(&half);
        tiles.push(Triangle::new(center.clone(), v0.clone(), mid.clone()));
        tiles.push(Triangle::new(center.clone(), v1.clone(), mid));
    }
    Tiling {
        field_order: order,
        polygon,
        tiles,
    }
}

/// Dissects the unit square into `2*steps` right triangles with legs
/// `1` and `1/steps`: horizontal strips of height `1/steps`, each cut
/// along a diagonal. Coordinates live in Q(i).
pub fn square_ladder_tiling(steps: u64) -> Tiling {
    assert!(steps >= 1, "ladder needs at least one step");
    let order = 4;
    let pt = |x: Rational, y: Rational| {
        CycloNum::from_poly_coeffs(order, vec![x, y]).expect("two coefficients fit order 4")
    };
    let frac_of = |k: u64| Rational::new(BigInt::from(k), BigInt::from(steps));
    let zero = rat(0, 1);
    let one = rat(1, 1);
    let mut tiles = Vec::with_capacity(2 * steps as usize);
    for k in 0..steps {
        let y0 = frac_of(k);
        let y1 = frac_of(k + 1);
        // lower-right triangle, right angle at (1, y0)
        tiles.push(Triangle::new(
            pt(zero.clone(), y0.clone()),
            pt(one.clone(), y0.clone()),
            pt(one.clone(), y1.clone()),
        ));
        // upper-left triangle, right angle at (0, y1)
        tiles.push(Triangle::new(
            pt(zero.clone(), y0),
            pt(one.clone(), y1.clone()),
            pt(zero.clone(), y1),
        ));
    }
    Tiling {
        field_order: order,
        polygon: PolygonSpec::Square,
        tiles,
    }
}
