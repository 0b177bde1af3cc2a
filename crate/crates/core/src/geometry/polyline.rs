use super::{BoundaryFunction, ImagePoint};
use crate::error::{Error, Result};

/// Default number of boundary vertices.
pub const DEFAULT_VERTEX_COUNT: usize = 16;

/// Function-shaped boundary outline: vertices strictly increasing in `u`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    vertices: Vec<ImagePoint>,
}

impl Polyline {
    pub fn new(vertices: Vec<ImagePoint>, width: usize, height: usize) -> Result<Self> {
        for (i, p) in vertices.iter().enumerate() {
            if !(p.u >= 0.0 && p.u < width as f64 && p.v >= 0.0 && p.v < height as f64) {
                return Err(Error::OutOfRange(format!(
                    "vertex {i} at ({}, {}) outside {width}x{height}",
                    p.u, p.v
                )));
            }
        }
        if vertices.windows(2).any(|w| w[1].u <= w[0].u) {
            return Err(Error::param("polyline vertices must be strictly increasing in u"));
        }
        Ok(Polyline { vertices })
    }

    pub fn vertices(&self) -> &[ImagePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Samples `k` vertices uniformly over the span of valid boundary columns.
///
/// Positions that fall between two valid columns interpolate linearly; a
/// position next to an invalid column takes the nearest valid column's row.
pub fn sample_vertices(boundary: &BoundaryFunction, k: usize) -> Result<Polyline> {
    if k < 2 {
        return Err(Error::param("vertex count k must be at least 2"));
    }
    let cols: Vec<usize> = boundary.valid_columns().collect();
    if cols.len() < k {
        return Err(Error::InsufficientSupport {
            needed: k,
            found: cols.len(),
        });
    }
    let first = cols[0] as f64;
    let last = *cols.last().unwrap() as f64;
    let row_at = |c: usize| boundary.values[c] as f64;
    let nearest_valid = |u: f64| -> usize {
        *cols
            .iter()
            .min_by(|&&a, &&b| (a as f64 - u).abs().total_cmp(&(b as f64 - u).abs()))
            .unwrap()
    };

    let mut vertices = Vec::with_capacity(k);
    for i in 0..k {
        let u = if i == k - 1 {
            last
        } else {
            first + (last - first) * i as f64 / (k - 1) as f64
        };
        let lo = u.floor() as usize;
        let frac = u - lo as f64;
        let v = if frac == 0.0 && boundary.valid[lo] {
            row_at(lo)
        } else if lo + 1 < boundary.width() && boundary.valid[lo] && boundary.valid[lo + 1] {
            row_at(lo) * (1.0 - frac) + row_at(lo + 1) * frac
        } else {
            row_at(nearest_valid(u))
        };
        vertices.push(ImagePoint::new(u, v));
    }
    Polyline::new(vertices, boundary.width(), boundary.height)
}

/// Polyline vertices followed by the bottom-border anchors.
#[derive(Clone, Debug, PartialEq)]
pub struct AugmentedPoints {
    pub points: Vec<ImagePoint>,
    pub is_anchor: Vec<bool>,
}

impl AugmentedPoints {
    pub fn anchor_count(&self) -> usize {
        self.is_anchor.iter().filter(|&&a| a).count()
    }
}

/// Appends the two bottom corners and the bottom midpoint. An anchor that
/// coincides exactly with a polyline vertex is not emitted a second time.
pub fn augment_with_anchors(polyline: &Polyline, width: usize, height: usize) -> AugmentedPoints {
    let bottom = (height - 1) as f64;
    let anchors = [
        ImagePoint::new(0.0, bottom),
        ImagePoint::new((width - 1) as f64 / 2.0, bottom),
        ImagePoint::new((width - 1) as f64, bottom),
    ];
    let mut points = polyline.vertices().to_vec();
    let mut is_anchor = vec![false; points.len()];
    for a in anchors {
        if !points.contains(&a) {
            points.push(a);
            is_anchor.push(true);
        }
    }
    AugmentedPoints { points, is_anchor }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary(values: Vec<usize>, height: usize) -> BoundaryFunction {
        let valid = values.iter().map(|&v| v < height).collect();
        BoundaryFunction {
            values,
            valid,
            height,
        }
    }

    fn pts(p: &Polyline) -> Vec<(f64, f64)> {
        p.vertices().iter().map(|p| (p.u, p.v)).collect()
    }

    #[test]
    fn flat_boundary_uniform_spacing() {
        let b = boundary(vec![3; 9], 10);
        let p = sample_vertices(&b, 3).unwrap();
        assert_eq!(pts(&p), vec![(0.0, 3.0), (4.0, 3.0), (8.0, 3.0)]);
    }

    #[test]
    fn two_vertices_are_the_valid_endpoints() {
        let mut b = boundary(vec![3; 9], 10);
        b.valid[0] = false;
        b.values[0] = 10;
        b.values[7] = 5;
        b.valid[8] = false;
        b.values[8] = 10;
        let p = sample_vertices(&b, 2).unwrap();
        assert_eq!(pts(&p), vec![(1.0, 3.0), (7.0, 5.0)]);
    }

    #[test]
    fn ramp_boundary() {
        let b = boundary((0..9).collect(), 10);
        let p = sample_vertices(&b, 5).unwrap();
        assert_eq!(
            pts(&p),
            vec![(0.0, 0.0), (2.0, 2.0), (4.0, 4.0), (6.0, 6.0), (8.0, 8.0)]
        );
    }

    #[test]
    fn fractional_positions_interpolate() {
        let b = boundary((0..8).collect(), 10);
        let p = sample_vertices(&b, 3).unwrap();
        assert_eq!(pts(&p), vec![(0.0, 0.0), (3.5, 3.5), (7.0, 7.0)]);
    }

    #[test]
    fn too_few_valid_columns() {
        let mut b = boundary(vec![2; 4], 5);
        b.valid[1] = false;
        assert!(matches!(
            sample_vertices(&b, 4),
            Err(Error::InsufficientSupport { needed: 4, found: 3 })
        ));
        assert!(sample_vertices(&b, 1).is_err());
    }

    #[test]
    fn anchors_on_bottom_border() {
        let b = boundary(vec![40; 160], 120);
        let p = sample_vertices(&b, 16).unwrap();
        let aug = augment_with_anchors(&p, 160, 120);
        assert_eq!(aug.points.len(), p.len() + 3);
        assert_eq!(aug.anchor_count(), 3);
        let anchors: Vec<(f64, f64)> = aug
            .points
            .iter()
            .zip(&aug.is_anchor)
            .filter(|(_, &a)| a)
            .map(|(p, _)| (p.u, p.v))
            .collect();
        assert_eq!(anchors, vec![(0.0, 119.0), (79.5, 119.0), (159.0, 119.0)]);
    }

    #[test]
    fn corner_vertex_is_not_duplicated() {
        let p = Polyline::new(
            vec![ImagePoint::new(0.0, 9.0), ImagePoint::new(5.0, 2.0), ImagePoint::new(9.0, 4.0)],
            10,
            10,
        )
        .unwrap();
        let aug = augment_with_anchors(&p, 10, 10);
        assert_eq!(aug.points.len(), 5);
        assert_eq!(aug.anchor_count(), 2);
        // Set-union oracle: distinct points of vertices + anchors.
        let mut all: Vec<(f64, f64)> = p.vertices().iter().map(|p| (p.u, p.v)).collect();
        for a in [(0.0, 9.0), (4.5, 9.0), (9.0, 9.0)] {
            if !all.contains(&a) {
                all.push(a);
            }
        }
        assert_eq!(aug.points.iter().map(|p| (p.u, p.v)).collect::<Vec<_>>(), all);
    }

    #[test]
    fn polyline_invariants_enforced() {
        let bad_order = vec![ImagePoint::new(2.0, 1.0), ImagePoint::new(2.0, 3.0)];
        assert!(Polyline::new(bad_order, 5, 5).is_err());
        let outside = vec![ImagePoint::new(0.0, 1.0), ImagePoint::new(5.0, 3.0)];
        assert!(Polyline::new(outside, 5, 5).is_err());
    }
}
