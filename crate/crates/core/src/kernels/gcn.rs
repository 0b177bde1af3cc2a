use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Number of residual graph convolution layers in the vertex encoder.
pub const GRAPH_RESNET_DEPTH: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Activation {
    Identity,
    Relu,
    Tanh,
    Sigmoid,
}

impl Activation {
    #[inline]
    pub fn apply(self, x: f64) -> f64 {
        match self {
            Activation::Identity => x,
            Activation::Relu => x.max(0.0),
            Activation::Tanh => x.tanh(),
            Activation::Sigmoid => 1.0 / (1.0 + (-x).exp()),
        }
    }
}

/// Self and neighbour weights of one graph convolution layer.
#[derive(Clone, Debug, PartialEq)]
pub struct GcnLayerParams {
    pub w0: DMatrix<f64>,
    pub w1: DMatrix<f64>,
    pub activation: Activation,
}

impl GcnLayerParams {
    pub fn new(w0: DMatrix<f64>, w1: DMatrix<f64>, activation: Activation) -> Result<Self> {
        if w0.shape() != w1.shape() {
            return Err(Error::dims(format!("w0 is {:?} but w1 is {:?}", w0.shape(), w1.shape())));
        }
        Ok(GcnLayerParams { w0, w1, activation })
    }

    pub fn d_in(&self) -> usize {
        self.w0.ncols()
    }

    pub fn d_out(&self) -> usize {
        self.w0.nrows()
    }
}

/// Undirected graph with per-node feature vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphSpec {
    adjacency: Vec<Vec<usize>>,
    features: Vec<DVector<f64>>,
}

impl GraphSpec {
    pub fn new(adjacency: Vec<Vec<usize>>, features: Vec<DVector<f64>>) -> Result<Self> {
        let n = features.len();
        if adjacency.len() != n {
            return Err(Error::dims(format!("{} adjacency lists for {n} nodes", adjacency.len())));
        }
        for (i, nbrs) in adjacency.iter().enumerate() {
            for &j in nbrs {
                if j >= n {
                    return Err(Error::OutOfRange(format!("node {i} lists neighbour {j} of {n}")));
                }
                if j == i {
                    return Err(Error::param(format!("self-loop on node {i}")));
                }
                if !adjacency[j].contains(&i) {
                    return Err(Error::param(format!("edge {i}-{j} is not symmetric")));
                }
            }
        }
        Ok(GraphSpec { adjacency, features })
    }

    /// Path graph over the nodes in order, the shape of a boundary polyline.
    pub fn chain(features: Vec<DVector<f64>>) -> Self {
        let n = features.len();
        let adjacency = (0..n)
            .map(|i| {
                let mut nbrs = Vec::with_capacity(2);
                if i > 0 {
                    nbrs.push(i - 1);
                }
                if i + 1 < n {
                    nbrs.push(i + 1);
                }
                nbrs
            })
            .collect();
        GraphSpec { adjacency, features }
    }

    pub fn n_nodes(&self) -> usize {
        self.features.len()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn features(&self) -> &[DVector<f64>] {
        &self.features
    }

    pub fn with_features(&self, features: Vec<DVector<f64>>) -> Result<Self> {
        Self::new(self.adjacency.clone(), features)
    }
}

/// `f_i' = act(w0 f_i + sum_{j in N(i)} w1 f_j)`, all nodes updated from the
/// input features.
pub fn gcn_layer_forward(graph: &GraphSpec, params: &GcnLayerParams) -> Result<Vec<DVector<f64>>> {
    propagate(&graph.adjacency, &graph.features, params)
}

fn propagate(
    adjacency: &[Vec<usize>],
    features: &[DVector<f64>],
    params: &GcnLayerParams,
) -> Result<Vec<DVector<f64>>> {
    if let Some(bad) = features.iter().position(|f| f.len() != params.d_in()) {
        return Err(Error::dims(format!(
            "node {bad} has {} features, layer expects {}",
            features[bad].len(),
            params.d_in()
        )));
    }
    Ok(features
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let mut acc = &params.w0 * f;
            for &j in &adjacency[i] {
                acc += &params.w1 * &features[j];
            }
            acc.map(|x| params.activation.apply(x))
        })
        .collect())
}

/// Residual stack: each layer's input is added to its output.
pub fn gcn_stack_forward(graph: &GraphSpec, layers: &[GcnLayerParams]) -> Result<Vec<DVector<f64>>> {
    if layers.is_empty() {
        return Err(Error::param("stack needs at least one layer"));
    }
    let mut h = graph.features.clone();
    for (l, layer) in layers.iter().enumerate() {
        if layer.d_in() != layer.d_out() {
            return Err(Error::dims(format!(
                "residual layer {l} maps {} -> {} features",
                layer.d_in(),
                layer.d_out()
            )));
        }
        let out = propagate(&graph.adjacency, &h, layer)?;
        h = out.into_iter().zip(h).map(|(o, x)| o + x).collect();
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar_chain(values: &[f64]) -> GraphSpec {
        GraphSpec::chain(values.iter().map(|&x| DVector::from_element(1, x)).collect())
    }

    fn scalar_layer(w0: f64, w1: f64, act: Activation) -> GcnLayerParams {
        GcnLayerParams::new(DMatrix::from_element(1, 1, w0), DMatrix::from_element(1, 1, w1), act).unwrap()
    }

    fn flat(v: &[DVector<f64>]) -> Vec<f64> {
        v.iter().flat_map(|x| x.iter().copied()).collect()
    }

    #[test]
    fn chain_fixture() {
        let out = gcn_layer_forward(&scalar_chain(&[1.0, 2.0, 3.0]), &scalar_layer(2.0, 1.0, Activation::Identity)).unwrap();
        assert_eq!(flat(&out), vec![4.0, 8.0, 8.0]);
    }

    #[test]
    fn zero_weights_give_activation_of_zero() {
        let g = scalar_chain(&[1.0, -2.0, 3.0]);
        let out = gcn_layer_forward(&g, &scalar_layer(0.0, 0.0, Activation::Sigmoid)).unwrap();
        assert_eq!(flat(&out), vec![0.5; 3]);
    }

    #[test]
    fn isolated_node_uses_self_weight_only() {
        let g = GraphSpec::new(vec![vec![]], vec![DVector::from_element(1, -3.0)]).unwrap();
        let out = gcn_layer_forward(&g, &scalar_layer(2.0, 5.0, Activation::Relu)).unwrap();
        assert_eq!(flat(&out), vec![0.0]);
        let out = gcn_layer_forward(&g, &scalar_layer(2.0, 5.0, Activation::Identity)).unwrap();
        assert_eq!(flat(&out), vec![-6.0]);
    }

    #[test]
    fn residual_stack_fixtures() {
        let g = scalar_chain(&[1.0, 2.0, 3.0]);
        let zero = vec![scalar_layer(0.0, 0.0, Activation::Identity); GRAPH_RESNET_DEPTH];
        assert_eq!(flat(&gcn_stack_forward(&g, &zero).unwrap()), vec![1.0, 2.0, 3.0]);

        let layer = scalar_layer(2.0, 1.0, Activation::Identity);
        assert_eq!(flat(&gcn_stack_forward(&g, std::slice::from_ref(&layer)).unwrap()), vec![5.0, 10.0, 11.0]);
        // Second layer on (5, 10, 11): (20, 36, 32) + residual.
        assert_eq!(
            flat(&gcn_stack_forward(&g, &[layer.clone(), layer]).unwrap()),
            vec![25.0, 46.0, 43.0]
        );
    }

    #[test]
    fn graph_validation() {
        let f = vec![DVector::zeros(1); 2];
        assert!(GraphSpec::new(vec![vec![1], vec![]], f.clone()).is_err());
        assert!(GraphSpec::new(vec![vec![0], vec![]], f.clone()).is_err());
        assert!(GraphSpec::new(vec![vec![2], vec![]], f.clone()).is_err());
        assert!(GraphSpec::new(vec![vec![1], vec![0]], f).is_ok());
    }

    #[test]
    fn dimension_mismatch() {
        let g = scalar_chain(&[1.0, 2.0]);
        let p = GcnLayerParams::new(DMatrix::zeros(2, 2), DMatrix::zeros(2, 2), Activation::Identity).unwrap();
        assert!(gcn_layer_forward(&g, &p).is_err());
        assert!(GcnLayerParams::new(DMatrix::zeros(2, 2), DMatrix::zeros(2, 3), Activation::Identity).is_err());
        let widen = GcnLayerParams::new(DMatrix::zeros(2, 1), DMatrix::zeros(2, 1), Activation::Identity).unwrap();
        assert!(gcn_stack_forward(&g, &[widen]).is_err());
    }
}
