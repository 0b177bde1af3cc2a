//! Loss and layer arithmetic for the two segmentation networks.
//!
//! Everything here is a pure function over plain numbers; there is no
//! autodiff or parameter learning.

mod gcn;
mod loss;
mod pool;
mod prob;
mod ssim;

pub use gcn::{gcn_layer_forward, gcn_stack_forward, Activation, GcnLayerParams, GraphSpec, GRAPH_RESNET_DEPTH};
pub use loss::{net1_loss, net2_loss, Net1LossConfig, Net2LossConfig, DEFAULT_LAMBDA1, DEFAULT_LAMBDA2};
pub use pool::{bilinear_pool, FeatureMap};
pub use prob::{categorical_kl, gumbel_noise, gumbel_softmax_sample, gumbel_softmax_with_noise, softmax, ProbVector};
pub use ssim::{ssim, SsimParams};

/// Single-channel real-valued image.
pub type Image = crate::grid::Grid<f64>;
