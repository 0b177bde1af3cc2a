use super::{ImagePoint, Polyline, TriangleSet};

const EPS: f64 = 1e-9;

/// Keeps the triangles that a vertical drop line from the polyline passes
/// through on its way to the bottom border.
///
/// Drop lines start at every polyline vertex and at the midpoint of every
/// polyline edge. A drop line from `(u, v)` runs from just below its start
/// down to `(u, height - 1)`, closed at the bottom. The start point itself is
/// excluded so that triangles above the boundary that merely share a vertex
/// are discarded. A start on the bottom border degenerates to a point.
pub fn select_triangles(tris: &TriangleSet, polyline: &Polyline, height: usize) -> TriangleSet {
    let bottom = (height - 1) as f64;
    let verts = polyline.vertices();
    let starts: Vec<ImagePoint> = verts
        .iter()
        .copied()
        .chain(
            verts
                .windows(2)
                .map(|w| ImagePoint::new((w[0].u + w[1].u) / 2.0, (w[0].v + w[1].v) / 2.0)),
        )
        .collect();
    let kept = tris
        .triangles
        .iter()
        .enumerate()
        .filter(|&(t, _)| {
            let corners = tris.corners(t);
            starts.iter().any(|p| hits_drop_line(&corners, *p, bottom))
        })
        .map(|(_, tri)| *tri)
        .collect();
    TriangleSet::new(tris.points.clone(), kept)
}

/// Range of `v` covered by the closed triangle on the vertical line `u = x`.
fn vertical_extent(corners: &[ImagePoint; 3], x: f64) -> Option<(f64, f64)> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..3 {
        let (a, b) = (corners[i], corners[(i + 1) % 3]);
        let (left, right) = if a.u <= b.u { (a, b) } else { (b, a) };
        if x < left.u - EPS || x > right.u + EPS {
            continue;
        }
        if (right.u - left.u).abs() <= EPS {
            lo = lo.min(left.v.min(right.v));
            hi = hi.max(left.v.max(right.v));
        } else {
            let t = ((x - left.u) / (right.u - left.u)).clamp(0.0, 1.0);
            let v = left.v + t * (right.v - left.v);
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    (lo <= hi).then_some((lo, hi))
}

fn hits_drop_line(corners: &[ImagePoint; 3], vertex: ImagePoint, bottom: f64) -> bool {
    let Some((lo, hi)) = vertical_extent(corners, vertex.u) else {
        return false;
    };
    if vertex.v >= bottom - EPS {
        lo <= vertex.v + EPS && hi >= vertex.v - EPS
    } else {
        hi > vertex.v + EPS && lo <= bottom + EPS
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{augment_with_anchors, delaunay_triangulate, rasterize_triangles, SegMask};

    fn p(u: f64, v: f64) -> ImagePoint {
        ImagePoint::new(u, v)
    }

    #[test]
    fn keeps_triangle_below_vertex_and_drops_the_one_above() {
        let points = vec![p(0.0, 9.0), p(9.0, 9.0), p(4.5, 4.0), p(4.5, 0.0)];
        let below = [0, 1, 2];
        let above = [0, 2, 3];
        let tris = TriangleSet::new(points, vec![below, above]);
        let line = Polyline::new(vec![p(4.5, 4.0)], 10, 10).unwrap();
        let kept = select_triangles(&tris, &line, 10);
        assert_eq!(kept.triangles, vec![below]);
    }

    #[test]
    fn bottom_vertices_keep_touching_triangles() {
        let points = vec![p(0.0, 9.0), p(4.0, 9.0), p(9.0, 9.0), p(2.0, 3.0), p(7.0, 3.0), p(4.0, 0.0)];
        let touching = [0, 1, 3];
        let far = [3, 4, 5];
        let tris = TriangleSet::new(points, vec![touching, far]);
        let line = Polyline::new(vec![p(4.0, 9.0)], 10, 10).unwrap();
        let kept = select_triangles(&tris, &line, 10);
        assert_eq!(kept.triangles, vec![touching]);
    }

    #[test]
    fn convex_boundary_reconstructs_fill_below() {
        // Six vertices on a convex (bowl-shaped from below) boundary.
        let verts = vec![
            p(0.0, 20.0),
            p(12.0, 12.0),
            p(25.0, 8.0),
            p(38.0, 8.0),
            p(51.0, 12.0),
            p(63.0, 20.0),
        ];
        let line = Polyline::new(verts.clone(), 64, 64).unwrap();
        let aug = augment_with_anchors(&line, 64, 64);
        let tris = delaunay_triangulate(&aug.points).unwrap();
        let kept = select_triangles(&tris, &line, 64);
        let mask = rasterize_triangles(&kept, 64, 64);

        // Scanline oracle: a pixel is inside when it lies on or below the
        // piecewise-linear boundary at its column.
        let boundary_at = |u: f64| {
            let i = verts.windows(2).position(|w| u <= w[1].u).unwrap();
            let (a, b) = (verts[i], verts[i + 1]);
            a.v + (u - a.u) / (b.u - a.u) * (b.v - a.v)
        };
        let oracle = SegMask::from_fn(64, 64, |u, v| v as f64 >= boundary_at(u as f64) - 1e-9).unwrap();
        let diff = mask
            .cells()
            .iter()
            .zip(oracle.cells())
            .filter(|(a, b)| a != b)
            .count();
        assert_eq!(diff, 0, "kept triangles differ from fill-below region");
    }
}
