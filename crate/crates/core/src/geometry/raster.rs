use super::{orient2d, ImagePoint, SegMask, TriangleSet};

const EDGE_EPS: f64 = 1e-9;

/// Marks pixel `(u, v)` navigable when its centre, the point `(u, v)`, lies
/// inside or on the boundary of any triangle.
pub fn rasterize_triangles(tris: &TriangleSet, width: usize, height: usize) -> SegMask {
    let mut mask = SegMask::filled(width, height, false).expect("raster target must be at least 2x2");
    for t in 0..tris.len() {
        let [a, b, c] = tris.corners(t);
        let u_min = a.u.min(b.u).min(c.u).floor().max(0.0) as usize;
        let v_min = a.v.min(b.v).min(c.v).floor().max(0.0) as usize;
        let u_max = (a.u.max(b.u).max(c.u).ceil() as usize).min(width - 1);
        let v_max = (a.v.max(b.v).max(c.v).ceil() as usize).min(height - 1);
        let area = orient2d(a, b, c);
        if area == 0.0 {
            continue;
        }
        let sign = area.signum();
        for v in v_min..=v_max {
            for u in u_min..=u_max {
                if mask.get(u, v) {
                    continue;
                }
                let q = ImagePoint::new(u as f64, v as f64);
                let inside = [(a, b), (b, c), (c, a)]
                    .iter()
                    .all(|&(p0, p1)| edge_value(p0, p1, q) * sign >= -EDGE_EPS);
                if inside {
                    mask.set(u, v, true);
                }
            }
        }
    }
    mask
}

/// Signed distance-like edge function normalised by edge length, so the
/// tolerance is in pixels.
fn edge_value(p0: ImagePoint, p1: ImagePoint, q: ImagePoint) -> f64 {
    let len = ((p1.u - p0.u).powi(2) + (p1.v - p0.v).powi(2)).sqrt();
    if len == 0.0 {
        return 0.0;
    }
    orient2d(p0, p1, q) / len
}
