//! Navigable-space toolkit for camera-only robot navigation.
//!
//! The crate is split along the processing chain:
//!
//! - [`geometry`]: binary navigability masks, their polyline boundary
//!   representation, Delaunay triangulation, triangle selection and
//!   rasterization, and segmentation metrics.
//! - [`kernels`]: the loss and layer arithmetic used to train the
//!   segmentation networks (Gumbel-Softmax, categorical KL, SSIM,
//!   graph convolution, bilinear feature pooling).
//! - [`field`]: obstacle boundary extraction and the scaled Euclidean
//!   distance field used for collision costs.
//! - [`planner`]: motion primitive libraries, ground-plane camera
//!   projection, and cost-based primitive selection.
//! - [`sim`]: a small 2D world simulator and the alpha-sweep harness.
//! - [`pnm`]: PGM/PPM and plain-text matrix I/O.

pub mod error;
pub mod field;
pub mod geometry;
pub mod grid;
pub mod kernels;
pub mod planner;
pub mod pnm;
pub mod sim;

pub use error::{Error, Result};
pub use field::{DistanceField, ObstacleBoundarySet, Sedf};
pub use geometry::{ImagePoint, Polyline, SegMask, TriangleSet};
pub use grid::Grid;
pub use planner::{CameraModel, MotionPrimitive, Pose2, PrimitiveLibrary};
pub use sim::{EpisodeConfig, EpisodeResult, Outcome, WorldMap};
