//! Obstacle boundaries and the scaled Euclidean distance field (SEDF).
//!
//! Pipeline: [`compute_edge_map`] -> [`filter_sob`] -> [`exact_edt`] ->
//! [`apply_scale`], then [`collision_potential`] per query pixel.

mod edges;
mod edt;
mod sedf;

use std::collections::BTreeSet;

pub use edges::{compute_edge_map, filter_sob, weak_boundaries};
pub use edt::{exact_edt, exact_sq_edt};
pub use sedf::{apply_scale, collision_potential, sedf_from_mask, CollisionMode, Sedf};

/// Per-pixel distance in pixel units.
pub type DistanceField = crate::grid::Grid<f64>;

/// Integer pixel `(u, v)`; ordered row-major so sets iterate top to bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pixel {
    pub u: usize,
    pub v: usize,
}

impl Ord for Pixel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.v, self.u).cmp(&(other.v, other.u))
    }
}

impl PartialOrd for Pixel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Set of boundary pixels inside a `width x height` image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstacleBoundarySet {
    width: usize,
    height: usize,
    points: BTreeSet<Pixel>,
}

impl ObstacleBoundarySet {
    pub fn empty(width: usize, height: usize) -> Self {
        ObstacleBoundarySet {
            width,
            height,
            points: BTreeSet::new(),
        }
    }

    pub fn from_points(
        width: usize,
        height: usize,
        points: impl IntoIterator<Item = (usize, usize)>,
    ) -> crate::Result<Self> {
        let mut set = Self::empty(width, height);
        for (u, v) in points {
            set.insert(u, v)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, u: usize, v: usize) -> crate::Result<()> {
        if u >= self.width || v >= self.height {
            return Err(crate::Error::OutOfRange(format!(
                "pixel ({u}, {v}) outside {}x{}",
                self.width, self.height
            )));
        }
        self.points.insert(Pixel { u, v });
        Ok(())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.points.contains(&Pixel { u, v })
    }

    pub fn iter(&self) -> impl Iterator<Item = Pixel> + '_ {
        self.points.iter().copied()
    }

    pub fn union(&self, other: &Self) -> Self {
        ObstacleBoundarySet {
            width: self.width,
            height: self.height,
            points: self.points.union(&other.points).copied().collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        ObstacleBoundarySet {
            width: self.width,
            height: self.height,
            points: self.points.difference(&other.points).copied().collect(),
        }
    }
}
