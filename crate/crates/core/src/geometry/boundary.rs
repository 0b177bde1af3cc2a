use super::SegMask;

/// Per-column boundary row `v_b(u)`: the top row of the navigable run that
/// touches the bottom of the image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryFunction {
    pub values: Vec<usize>,
    pub valid: Vec<bool>,
    pub height: usize,
}

impl BoundaryFunction {
    pub fn width(&self) -> usize {
        self.values.len()
    }

    pub fn valid_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.valid.iter().enumerate().filter(|(_, &ok)| ok).map(|(u, _)| u)
    }

    pub fn valid_count(&self) -> usize {
        self.valid.iter().filter(|&&ok| ok).count()
    }
}

/// Columns whose bottom pixel is not navigable have no bottom-connected run
/// and are marked invalid with `v_b = height`.
pub fn extract_boundary(mask: &SegMask) -> BoundaryFunction {
    let (w, h) = (mask.width(), mask.height());
    let mut values = vec![h; w];
    let mut valid = vec![false; w];
    for u in 0..w {
        let mut top = h;
        while top > 0 && mask.get(u, top - 1) {
            top -= 1;
        }
        if top < h {
            values[u] = top;
            valid[u] = true;
        }
    }
    BoundaryFunction {
        values,
        valid,
        height: h,
    }
}
