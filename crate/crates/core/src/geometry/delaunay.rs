use std::collections::HashMap;

use super::{ImagePoint, TriangleSet};
use crate::error::{Error, Result};

/// Absolute tolerance on the in-circle determinant.
pub const IN_CIRCLE_TOLERANCE: f64 = 1e-9;
/// Triangles with signed area magnitude at or below this are degenerate.
pub const MIN_TRIANGLE_AREA: f64 = 1e-9;

/// Twice the signed area of `(a, b, c)`; positive when counter-clockwise in
/// the `(u, v)` plane.
#[inline]
pub fn orient2d(a: ImagePoint, b: ImagePoint, c: ImagePoint) -> f64 {
    (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u)
}

/// Positive when `d` lies strictly inside the circumcircle of the
/// counter-clockwise triangle `(a, b, c)`.
#[inline]
pub fn in_circle(a: ImagePoint, b: ImagePoint, c: ImagePoint, d: ImagePoint) -> f64 {
    let (adx, ady) = (a.u - d.u, a.v - d.v);
    let (bdx, bdy) = (b.u - d.u, b.v - d.v);
    let (cdx, cdy) = (c.u - d.u, c.v - d.v);
    let ad = adx * adx + ady * ady;
    let bd = bdx * bdx + bdy * bdy;
    let cd = cdx * cdx + cdy * cdy;
    ad * (bdx * cdy - cdx * bdy) - bd * (adx * cdy - cdx * ady) + cd * (adx * bdy - bdx * ady)
}

const MIN_TWICE_AREA: f64 = 2.0 * MIN_TRIANGLE_AREA;

/// Delaunay triangulation of `points`.
///
/// A triangulation covering the convex hull is built by inserting points in
/// lexicographic order, then edges are flipped until every interior edge is
/// locally Delaunay. Cocircular quads take the diagonal with the lowest point
/// index. Exact duplicate points are triangulated once (first occurrence).
pub fn delaunay_triangulate(points: &[ImagePoint]) -> Result<TriangleSet> {
    if points.len() < 3 {
        return Err(Error::DegeneratePointSet);
    }
    let mut triangles = hull_triangulation(points)?;
    flip_to_delaunay(points, &mut triangles);
    Ok(TriangleSet::new(points.to_vec(), triangles))
}

fn ccw(points: &[ImagePoint], a: usize, b: usize, c: usize) -> [usize; 3] {
    if orient2d(points[a], points[b], points[c]) >= 0.0 {
        [a, b, c]
    } else {
        [a, c, b]
    }
}

fn hull_triangulation(points: &[ImagePoint]) -> Result<Vec<[usize; 3]>> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| {
        points[i]
            .u
            .total_cmp(&points[j].u)
            .then(points[i].v.total_cmp(&points[j].v))
            .then(i.cmp(&j))
    });
    order.dedup_by(|a, b| points[*a] == points[*b]);
    if order.len() < 3 {
        return Err(Error::DegeneratePointSet);
    }

    let (s0, s1) = (order[0], order[1]);
    let k = (2..order.len())
        .find(|&j| orient2d(points[s0], points[s1], points[order[j]]).abs() > MIN_TWICE_AREA)
        .ok_or(Error::DegeneratePointSet)?;
    let apex = order[k];

    let mut triangles: Vec<[usize; 3]> = order[..k]
        .windows(2)
        .map(|w| ccw(points, w[0], w[1], apex))
        .collect();

    let mut hull: Vec<usize> = order[..k].to_vec();
    if orient2d(points[s0], points[s1], points[apex]) > 0.0 {
        hull.push(apex);
    } else {
        hull.reverse();
        hull.insert(0, apex);
    }

    for &p in &order[k + 1..] {
        let n = hull.len();
        let visible =
            |i: usize| orient2d(points[hull[i]], points[hull[(i + 1) % n]], points[p]) < -MIN_TWICE_AREA;
        let Some(start) = (0..n).find(|&i| visible(i) && !visible((i + n - 1) % n)) else {
            // Only reachable through rounding on nearly collinear input.
            debug_assert!(false, "inserted point sees no hull edge");
            continue;
        };
        hull.rotate_left(start);
        let mut count = 0;
        while count < n && visible_after_rotate(points, &hull, count, p) {
            let (a, b) = (hull[count], hull[(count + 1) % n]);
            triangles.push([b, a, p]);
            count += 1;
        }
        let mut next = Vec::with_capacity(n + 1);
        next.push(hull[0]);
        next.push(p);
        next.extend_from_slice(&hull[count..]);
        if count == n {
            next.truncate(2);
        }
        hull = next;
    }
    Ok(triangles)
}

fn visible_after_rotate(points: &[ImagePoint], hull: &[usize], i: usize, p: usize) -> bool {
    let n = hull.len();
    orient2d(points[hull[i]], points[hull[(i + 1) % n]], points[p]) < -MIN_TWICE_AREA
}

type EdgeMap = HashMap<(usize, usize), Vec<usize>>;

fn edge_map(triangles: &[[usize; 3]]) -> EdgeMap {
    let mut map: EdgeMap = HashMap::with_capacity(triangles.len() * 3);
    for (t, tri) in triangles.iter().enumerate() {
        for e in 0..3 {
            let (a, b) = (tri[e], tri[(e + 1) % 3]);
            map.entry((a.min(b), a.max(b))).or_default().push(t);
        }
    }
    map
}

/// Rotates a CCW triangle so that it starts with `a`.
fn starting_at(tri: [usize; 3], a: usize) -> [usize; 3] {
    match tri.iter().position(|&x| x == a) {
        Some(0) => tri,
        Some(1) => [tri[1], tri[2], tri[0]],
        _ => [tri[2], tri[0], tri[1]],
    }
}

fn flip_to_delaunay(points: &[ImagePoint], triangles: &mut [[usize; 3]]) {
    let n = points.len();
    let mut budget = 10 * n * n + 100;
    loop {
        let edges = edge_map(triangles);
        let mut keys: Vec<(usize, usize)> = edges
            .iter()
            .filter(|(_, ts)| ts.len() == 2)
            .map(|(k, _)| *k)
            .collect();
        keys.sort_unstable();

        let mut flipped = false;
        for key in keys {
            let ts = &edges[&key];
            let (t1, t2) = (ts[0], ts[1]);
            // t1 = (a, b, c) counter-clockwise, t2 holds the edge as (b, a, d).
            let r1 = starting_at(triangles[t1], key.0);
            let (a, b, c) = if r1[1] == key.1 {
                (r1[0], r1[1], r1[2])
            } else {
                (r1[2], r1[0], r1[1])
            };
            let d = *triangles[t2].iter().find(|&&x| x != a && x != b).unwrap();

            let det = in_circle(points[a], points[b], points[c], points[d]);
            let tie = det.abs() <= IN_CIRCLE_TOLERANCE;
            let wants_flip = det > IN_CIRCLE_TOLERANCE || (tie && c.min(d) < a.min(b) && budget > 0);
            if !wants_flip {
                continue;
            }
            let new1 = [a, d, c];
            let new2 = [d, b, c];
            let convex = orient2d(points[a], points[d], points[c]) > MIN_TWICE_AREA
                && orient2d(points[d], points[b], points[c]) > MIN_TWICE_AREA;
            if !convex {
                continue;
            }
            triangles[t1] = new1;
            triangles[t2] = new2;
            if tie {
                budget -= 1;
            }
            flipped = true;
            // Adjacency is stale after a flip.
            break;
        }
        if !flipped {
            break;
        }
    }
}
