use super::{ObstacleBoundarySet, Pixel};
use crate::geometry::SegMask;

/// Non-navigable pixels with at least one navigable 4-neighbour.
pub fn compute_edge_map(mask: &SegMask) -> ObstacleBoundarySet {
    let (w, h) = (mask.width(), mask.height());
    let mut set = ObstacleBoundarySet::empty(w, h);
    for v in 0..h {
        for u in 0..w {
            if mask.get(u, v) {
                continue;
            }
            let touches = (u > 0 && mask.get(u - 1, v))
                || (u + 1 < w && mask.get(u + 1, v))
                || (v > 0 && mask.get(u, v - 1))
                || (v + 1 < h && mask.get(u, v + 1));
            if touches {
                set.points.insert(Pixel { u, v });
            }
        }
    }
    set
}

/// Strong obstacle boundaries: edge pixels strictly below row `v_thres`
/// (`v > v_thres`), i.e. close to the robot.
pub fn filter_sob(edges: &ObstacleBoundarySet, v_thres: usize) -> ObstacleBoundarySet {
    ObstacleBoundarySet {
        width: edges.width,
        height: edges.height,
        points: edges.points.iter().copied().filter(|p| p.v > v_thres).collect(),
    }
}

/// Weak obstacle boundaries: the edge pixels that [`filter_sob`] drops.
/// They are reported but never costed.
pub fn weak_boundaries(edges: &ObstacleBoundarySet, v_thres: usize) -> ObstacleBoundarySet {
    edges.difference(&filter_sob(edges, v_thres))
}
