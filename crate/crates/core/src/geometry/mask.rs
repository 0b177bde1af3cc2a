use crate::error::{Error, Result};
use crate::grid::Grid;

/// Binary navigability grid; `true` is navigable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegMask {
    width: usize,
    height: usize,
    cells: Vec<bool>,
}

impl SegMask {
    pub fn new(width: usize, height: usize, cells: Vec<bool>) -> Result<Self> {
        if width < 2 || height < 2 {
            return Err(Error::InvalidMask(format!(
                "mask must be at least 2x2, got {width}x{height}"
            )));
        }
        if cells.len() != width * height {
            return Err(Error::InvalidMask(format!(
                "{}x{} mask needs {} cells, got {}",
                width,
                height,
                width * height,
                cells.len()
            )));
        }
        Ok(SegMask {
            width,
            height,
            cells,
        })
    }

    pub fn filled(width: usize, height: usize, navigable: bool) -> Result<Self> {
        Self::new(width, height, vec![navigable; width * height])
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut cells = Vec::with_capacity(width * height);
        for v in 0..height {
            for u in 0..width {
                cells.push(f(u, v));
            }
        }
        Self::new(width, height, cells)
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> bool {
        self.cells[v * self.width + u]
    }

    #[inline]
    pub fn set(&mut self, u: usize, v: usize, navigable: bool) {
        self.cells[v * self.width + u] = navigable;
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn navigable_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn complement(&self) -> SegMask {
        SegMask {
            width: self.width,
            height: self.height,
            cells: self.cells.iter().map(|c| !c).collect(),
        }
    }

    pub fn to_grid(&self) -> Grid<bool> {
        Grid::from_vec(self.width, self.height, self.cells.clone()).expect("shape checked at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        assert!(SegMask::new(1, 5, vec![true; 5]).is_err());
        assert!(SegMask::new(3, 3, vec![true; 8]).is_err());
        assert!(SegMask::new(2, 2, vec![true; 4]).is_ok());
    }

    #[test]
    fn complement_flips_every_cell() {
        let m = SegMask::from_fn(4, 3, |u, v| (u + v) % 2 == 0).unwrap();
        let c = m.complement();
        assert_eq!(m.navigable_count() + c.navigable_count(), 12);
        assert!(m.cells().iter().zip(c.cells()).all(|(a, b)| a != b));
    }
}
