use super::SegMask;
use crate::error::{Error, Result};

/// Pixel confusion matrix with "navigable" as the positive class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConfusionCounts {
    pub n_tp: u64,
    pub n_tn: u64,
    pub n_fp: u64,
    pub n_fn: u64,
}

impl ConfusionCounts {
    pub fn from_masks(pred: &SegMask, gt: &SegMask) -> Result<Self> {
        if pred.width() != gt.width() || pred.height() != gt.height() {
            return Err(Error::dims(format!(
                "prediction {}x{} vs ground truth {}x{}",
                pred.width(),
                pred.height(),
                gt.width(),
                gt.height()
            )));
        }
        let mut c = ConfusionCounts::default();
        for (&p, &g) in pred.cells().iter().zip(gt.cells()) {
            match (p, g) {
                (true, true) => c.n_tp += 1,
                (false, false) => c.n_tn += 1,
                (true, false) => c.n_fp += 1,
                (false, true) => c.n_fn += 1,
            }
        }
        Ok(c)
    }

    pub fn total(&self) -> u64 {
        self.n_tp + self.n_tn + self.n_fp + self.n_fn
    }

    pub fn metrics(&self) -> SegmentationMetrics {
        let (tp, tn, fp, fneg) = (self.n_tp, self.n_tn, self.n_fp, self.n_fn);
        SegmentationMetrics {
            accuracy: ratio(tp + tn, tp + tn + fp + fneg),
            precision: ratio(tp, tp + fp),
            recall: ratio(tp, tp + fneg),
            // 2tp^2 / (2tp^2 + tp(fp + fn)) with the common factor tp cancelled.
            f_score: ratio(2 * tp, 2 * tp + fp + fneg),
            iou: ratio(tp, tp + fp + fneg),
        }
    }
}

/// `None` marks a metric whose denominator is zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SegmentationMetrics {
    pub accuracy: Option<f64>,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub f_score: Option<f64>,
    pub iou: Option<f64>,
}

fn ratio(num: u64, den: u64) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

pub fn segmentation_metrics(pred: &SegMask, gt: &SegMask) -> Result<SegmentationMetrics> {
    Ok(ConfusionCounts::from_masks(pred, gt)?.metrics())
}
