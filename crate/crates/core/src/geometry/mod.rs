//! Masks, boundary polylines and the mask <-> polyline round trip.
//!
//! Pixel `(u, v)` is column `u`, row `v`, with row 0 at the top of the image.
//! Continuous image coordinates place pixel centres on integer positions, so
//! the bottom border row sits at `v = height - 1`.

mod boundary;
mod delaunay;
mod mask;
mod metrics;
mod polyline;
mod raster;
mod select;

pub use boundary::{extract_boundary, BoundaryFunction};
pub use delaunay::{delaunay_triangulate, in_circle, orient2d, IN_CIRCLE_TOLERANCE, MIN_TRIANGLE_AREA};
pub use mask::SegMask;
pub use metrics::{segmentation_metrics, ConfusionCounts, SegmentationMetrics};
pub use polyline::{augment_with_anchors, sample_vertices, AugmentedPoints, Polyline, DEFAULT_VERTEX_COUNT};
pub use raster::rasterize_triangles;
pub use select::select_triangles;

/// Real-valued image coordinate (column `u`, row `v`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImagePoint {
    pub u: f64,
    pub v: f64,
}

impl ImagePoint {
    pub const fn new(u: f64, v: f64) -> Self {
        ImagePoint { u, v }
    }
}

impl From<(f64, f64)> for ImagePoint {
    fn from((u, v): (f64, f64)) -> Self {
        ImagePoint { u, v }
    }
}

/// Triangles indexing into a point list.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TriangleSet {
    pub points: Vec<ImagePoint>,
    pub triangles: Vec<[usize; 3]>,
}

impl TriangleSet {
    pub fn new(points: Vec<ImagePoint>, triangles: Vec<[usize; 3]>) -> Self {
        TriangleSet { points, triangles }
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn corners(&self, t: usize) -> [ImagePoint; 3] {
        let [a, b, c] = self.triangles[t];
        [self.points[a], self.points[b], self.points[c]]
    }

    /// Indices are distinct and in range and every triangle has non-negligible area.
    pub fn is_well_formed(&self) -> bool {
        self.triangles.iter().all(|&[a, b, c]| {
            let n = self.points.len();
            a < n
                && b < n
                && c < n
                && a != b
                && b != c
                && a != c
                && (orient2d(self.points[a], self.points[b], self.points[c]) / 2.0).abs()
                    > MIN_TRIANGLE_AREA
        })
    }
}

/// Full mask -> polyline -> mask reconstruction with `k` boundary vertices.
pub fn reconstruct_mask(mask: &SegMask, k: usize) -> crate::Result<(Polyline, TriangleSet, SegMask)> {
    let boundary = extract_boundary(mask);
    let polyline = sample_vertices(&boundary, k)?;
    let augmented = augment_with_anchors(&polyline, mask.width(), mask.height());
    let tris = delaunay_triangulate(&augmented.points)?;
    let kept = select_triangles(&tris, &polyline, mask.height());
    let rebuilt = rasterize_triangles(&kept, mask.width(), mask.height());
    Ok((polyline, kept, rebuilt))
}
