//! The certifying verifier: similarity, containment, pairwise interior
//! disjointness, and exact area bookkeeping.
//!
//! Coverage of a convex target follows from containment + pairwise
//! disjointness + exact area equality, so no arrangement structure is
//! needed. Disjointness is a separating-axis test, which is complete for
//! convex shapes: two nondegenerate triangles have disjoint interiors iff
//! some edge line of one keeps the whole other triangle weakly on its
//! non-interior side.

use crate::error::Result;
use crate::field::cyclo::CycloNum;
use crate::field::Sign;
use crate::tiling::predicates::{orient, EvalPt};
use crate::tiling::shape::{classify, Handedness, ShapeClass};
use crate::tiling::Tiling;
use crate::vertex::TrianglePair;
use serde::{Deserialize, Serialize};

/// Results of the four checks; `verdict` is their conjunction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub similarity_ok: bool,
    /// Chirality per tile; `None` marks a tile that failed the similarity
    /// check.
    pub tile_handedness: Vec<Option<Handedness>>,
    pub disjoint_ok: bool,
    /// First interior-overlapping pair found, if any.
    pub first_overlap: Option<(usize, usize)>,
    pub inside_ok: bool,
    /// First tile with a vertex strictly outside the polygon, if any.
    pub first_outside: Option<usize>,
    pub area_ok: bool,
    pub verdict: bool,
}

struct TileData<'a> {
    pts: [EvalPt<'a>; 3],
    orientation: Sign,
    bbox: [f64; 4], // x_lo, x_hi, y_lo, y_hi (outward bounds)
}

fn tile_bbox(pts: &[EvalPt; 3]) -> [f64; 4] {
    let mut bb = [f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY];
    for p in pts {
        bb[0] = bb[0].min(p.bx.re.lo);
        bb[1] = bb[1].max(p.bx.re.hi);
        bb[2] = bb[2].min(p.bx.im.lo);
        bb[3] = bb[3].max(p.bx.im.hi);
    }
    bb
}

fn bboxes_strictly_apart(a: &[f64; 4], b: &[f64; 4]) -> bool {
    a[1] < b[0] || b[1] < a[0] || a[3] < b[2] || b[3] < a[2]
}

/// Verifies a tiling against a similarity class given as a pair of acute
/// angles.
pub fn verify_tiling(t: &Tiling, pair: &TrianglePair) -> Result<VerificationReport> {
    verify_tiling_shape(t, &ShapeClass::Angles(pair.clone()))
}

/// Verifies a tiling against any similarity class.
pub fn verify_tiling_shape(t: &Tiling, shape: &ShapeClass) -> Result<VerificationReport> {
    t.validate()?;
    let refs = shape.reference_ratios(t.field_order)?;

    let mut tiles: Vec<TileData> = Vec::with_capacity(t.tiles.len());
    for tri in &t.tiles {
        let pts = [
            EvalPt::new(&tri.a.z),
            EvalPt::new(&tri.b.z),
            EvalPt::new(&tri.c.z),
        ];
        let orientation = orient(&pts[0], &pts[1], &pts[2])?;
        let bbox = tile_bbox(&pts);
        tiles.push(TileData {
            pts,
            orientation,
            bbox,
        });
    }

    // (1) similarity
    let mut tile_handedness = Vec::with_capacity(tiles.len());
    for td in &tiles {
        tile_handedness.push(classify([&td.pts[0], &td.pts[1], &td.pts[2]], &refs)?);
    }
    let similarity_ok = tile_handedness.iter().all(Option::is_some);

    // (2) containment: every tile vertex weakly inside every polygon edge
    // half-plane (the polygon is convex and counterclockwise)
    let poly_verts = t.polygon.vertices(t.field_order)?;
    let poly_pts: Vec<EvalPt> = poly_verts.iter().map(EvalPt::new).collect();
    let mut first_outside = None;
    'outside: for (idx, td) in tiles.iter().enumerate() {
        for p in &td.pts {
            for e in 0..poly_pts.len() {
                let e1 = &poly_pts[(e + 1) % poly_pts.len()];
                if orient(&poly_pts[e], e1, p)? == Sign::Negative {
                    first_outside = Some(idx);
                    break 'outside;
                }
            }
        }
    }
    let inside_ok = first_outside.is_none();

    // (3) pairwise interior disjointness
    let mut first_overlap = None;
    'pairs: for i in 0..tiles.len() {
        if tiles[i].orientation == Sign::Zero {
            continue; // degenerate: empty interior
        }
        for j in (i + 1)..tiles.len() {
            if tiles[j].orientation == Sign::Zero {
                continue;
            }
            if bboxes_strictly_apart(&tiles[i].bbox, &tiles[j].bbox) {
                continue;
            }
            if interiors_overlap(&tiles[i], &tiles[j])? {
                first_overlap = Some((i, j));
                break 'pairs;
            }
        }
    }
    let disjoint_ok = first_overlap.is_none();

    // (4) exact area: the signed shoelace forms must add up to the
    // polygon's, term for term in Q(zeta_m)
    let mut sum = CycloNum::zero(t.field_order);
    for (tri, td) in t.tiles.iter().zip(&tiles) {
        if td.orientation == Sign::Zero {
            continue;
        }
        let u = tri.b.z.try_sub(&tri.a.z)?;
        let v = tri.c.z.try_sub(&tri.a.z)?;
        let form = CycloNum::cross_form(&u, &v); // 4i * signed area
        sum = match td.orientation {
            Sign::Positive => sum.try_add(&form)?,
            Sign::Negative => sum.try_sub(&form)?,
            Sign::Zero => unreachable!(),
        };
    }
    let area_ok = sum == t.polygon.area_form(t.field_order)?;

    let verdict = similarity_ok && disjoint_ok && inside_ok && area_ok;
    Ok(VerificationReport {
        similarity_ok,
        tile_handedness,
        disjoint_ok,
        first_overlap,
        inside_ok,
        first_outside,
        area_ok,
        verdict,
    })
}

/// Interior overlap for two nondegenerate triangles by separating axes.
fn interiors_overlap(a: &TileData, b: &TileData) -> Result<bool> {
    Ok(!has_separating_edge(a, b)? && !has_separating_edge(b, a)?)
}

/// True if some edge line of `host` has every vertex of `other` weakly on
/// its non-interior side. The interior of a triangle with orientation s
/// lies strictly on the s side of each directed edge.
fn has_separating_edge(host: &TileData, other: &TileData) -> Result<bool> {
    debug_assert_ne!(host.orientation, Sign::Zero);
    'edges: for e in 0..3 {
        let (a, b) = (&host.pts[e], &host.pts[(e + 1) % 3]);
        for v in &other.pts {
            if orient(a, b, v)? == host.orientation {
                continue 'edges; // v strictly inside this half-plane
            }
        }
        return Ok(true);
    }
    Ok(false)
}
