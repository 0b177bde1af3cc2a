use std::fmt::Write as _;

use super::Pose2;
use crate::error::{Error, Result};

/// Constant-curvature arc sampled at equal arc-length stations, expressed
/// in the robot frame at selection time (first pose is the origin).
#[derive(Clone, Debug, PartialEq)]
pub struct MotionPrimitive {
    pub curvature: f64,
    pub poses: Vec<Pose2>,
}

impl MotionPrimitive {
    /// Closed-form unicycle arc of length `arc_length` with `m` stations.
    pub fn arc(curvature: f64, m: usize, arc_length: f64) -> Self {
        let poses = (0..m)
            .map(|j| {
                let s = if j == m - 1 {
                    arc_length
                } else {
                    arc_length * j as f64 / (m - 1) as f64
                };
                if s == 0.0 {
                    Pose2::origin()
                } else if curvature == 0.0 {
                    Pose2::new(s, 0.0, 0.0)
                } else {
                    let heading = curvature * s;
                    Pose2::new(heading.sin() / curvature, (1.0 - heading.cos()) / curvature, heading)
                }
            })
            .collect();
        MotionPrimitive { curvature, poses }
    }

    pub fn len(&self) -> usize {
        self.poses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poses.is_empty()
    }
}

/// Library shape: `n_curvatures` arcs (odd, symmetric about straight) of
/// `m_poses` stations over `arc_length` metres, curvatures spanning
/// `[-kappa_max, kappa_max]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LibraryParams {
    pub n_curvatures: usize,
    pub m_poses: usize,
    pub arc_length: f64,
    pub kappa_max: f64,
}

impl Default for LibraryParams {
    fn default() -> Self {
        LibraryParams {
            n_curvatures: 15,
            m_poses: 10,
            arc_length: 1.0,
            kappa_max: 1.2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrimitiveLibrary {
    primitives: Vec<MotionPrimitive>,
}

pub fn generate_primitives(params: &LibraryParams) -> Result<PrimitiveLibrary> {
    let LibraryParams {
        n_curvatures: n,
        m_poses: m,
        arc_length,
        kappa_max,
    } = *params;
    if n == 0 || n % 2 == 0 {
        return Err(Error::param(format!("curvature count must be odd and positive, got {n}")));
    }
    if m < 2 {
        return Err(Error::param(format!("need at least 2 poses per primitive, got {m}")));
    }
    if !(arc_length > 0.0) || !(kappa_max >= 0.0) {
        return Err(Error::param("arc length must be positive and kappa_max non-negative"));
    }
    let primitives = (0..n)
        .map(|i| {
            let kappa = if n == 1 {
                0.0
            } else {
                // Exact zero at the centre and exact negation across it.
                kappa_max * (2.0 * i as f64 - (n - 1) as f64) / (n - 1) as f64
            };
            MotionPrimitive::arc(kappa, m, arc_length)
        })
        .collect();
    PrimitiveLibrary::new(primitives)
}

impl PrimitiveLibrary {
    pub fn new(primitives: Vec<MotionPrimitive>) -> Result<Self> {
        let Some(first) = primitives.first() else {
            return Err(Error::param("primitive library is empty"));
        };
        let m = first.len();
        if m < 2 || primitives.iter().any(|p| p.len() != m) {
            return Err(Error::param("all primitives need the same pose count (>= 2)"));
        }
        for (i, p) in primitives.iter().enumerate() {
            let o = p.poses[0];
            if o.x.abs() > 1e-9 || o.y.abs() > 1e-9 || o.psi.abs() > 1e-9 {
                return Err(Error::param(format!("primitive {i} does not start at the origin")));
            }
        }
        Ok(PrimitiveLibrary { primitives })
    }

    pub fn len(&self) -> usize {
        self.primitives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primitives.is_empty()
    }

    pub fn poses_per_primitive(&self) -> usize {
        self.primitives[0].len()
    }

    pub fn get(&self, i: usize) -> &MotionPrimitive {
        &self.primitives[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &MotionPrimitive> {
        self.primitives.iter()
    }

    /// Index of the zero-curvature primitive, if present.
    pub fn straight_index(&self) -> Option<usize> {
        self.primitives.iter().position(|p| p.curvature == 0.0)
    }

    /// Plain-text form: a `primitive <index> <curvature>` header per block,
    /// then one `x y psi` line per pose; blocks are separated by a blank line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, p) in self.primitives.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "primitive {i} {}", p.curvature);
            for q in &p.poses {
                let _ = writeln!(out, "{} {} {}", q.x, q.y, q.psi);
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut primitives: Vec<MotionPrimitive> = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let start = offset;
            offset += line.len();
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| Error::Parse {
                offset: start,
                msg: msg.to_string(),
            };
            match fields.as_slice() {
                [] => {}
                ["primitive", _, kappa] => {
                    let curvature = kappa.parse().map_err(|_| bad("bad curvature"))?;
                    primitives.push(MotionPrimitive {
                        curvature,
                        poses: Vec::new(),
                    });
                }
                [x, y, psi] => {
                    let current = primitives.last_mut().ok_or_else(|| bad("pose before any header"))?;
                    let num = |s: &str| s.parse::<f64>().map_err(|_| bad("bad number"));
                    current.poses.push(Pose2 {
                        x: num(x)?,
                        y: num(y)?,
                        psi: num(psi)?,
                    });
                }
                _ => return Err(bad("expected a header or three numbers")),
            }
        }
        Self::new(primitives)
    }
}
