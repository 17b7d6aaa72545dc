//! SVG rendering: one polygon element per tile, coordinates from interval
//! midpoints at the requested precision.

use tritile::field::approx;
use tritile::tiling::{PolygonSpec, Tiling};

fn coord(v: f64, digits: u32) -> String {
    let v = if v == 0.0 { 0.0 } else { v }; // normalize -0.0
    format!("{:.*}", digits as usize, v)
}

/// Deterministic SVG document for a tiling. The viewport covers the target
/// polygon with a 5% margin; the y axis is flipped so the mathematical
/// orientation reads the usual way.
pub fn render_svg(t: &Tiling, digits: u32) -> String {
    assert!(digits >= 3, "render needs at least 3 digits");
    // polygon bounds in math coordinates, then flipped for SVG
    let (x0, y0, w, h): (f64, f64, f64, f64) = match t.polygon {
        PolygonSpec::Ngon { .. } => (-1.0, -1.0, 2.0, 2.0),
        PolygonSpec::Square => (0.0, 0.0, 1.0, 1.0),
    };
    let margin = 0.05 * w.max(h);
    let view = format!(
        "{} {} {} {}",
        coord(x0 - margin, 3),
        coord(-(y0 + h) - margin, 3),
        coord(w + 2.0 * margin, 3),
        coord(h + 2.0 * margin, 3),
    );

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{}\">\n",
        view
    ));
    for tri in &t.tiles {
        let mut pts = Vec::with_capacity(3);
        for v in tri.vertices() {
            let (x, y) = approx(v, digits).mid_f64();
            pts.push(format!("{},{}", coord(x, digits), coord(-y, digits)));
        }
        out.push_str(&format!(
            "  <polygon points=\"{}\" fill=\"#dbe9f4\" stroke=\"#1f3552\" stroke-width=\"{}\"/>\n",
            pts.join(" "),
            0.004 * w.max(h),
        ));
    }
    out.push_str("</svg>\n");
    out
}
