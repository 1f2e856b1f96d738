use super::PairedSamples;
use crate::error::{Error, Result};

/// Single-feature k-nearest-neighbour regressor.
///
/// Features are used as-is (no scaling). Neighbours are ranked by absolute
/// difference, ties broken by lower training index, and a prediction is the
/// unweighted mean of the neighbours' targets.
#[derive(Clone, Debug, PartialEq)]
pub struct KnnModel {
    k: usize,
    train_x: Vec<f64>,
    train_y: Vec<f64>,
}

impl KnnModel {
    pub const DEFAULT_K: usize = 5;

    pub fn fit(train: &PairedSamples, k: usize) -> Result<Self> {
        if k == 0 || k > train.len() {
            return Err(Error::InvalidConfig(format!(
                "k = {k} must lie in 1..={}",
                train.len()
            )));
        }
        Ok(Self {
            k,
            train_x: train.xs.clone(),
            train_y: train.ys.clone(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn predict_one(&self, x: f64) -> f64 {
        let mut order: Vec<usize> = (0..self.train_x.len()).collect();
        let dist = |i: usize| (self.train_x[i] - x).abs();
        // Stable sort keeps lower indices first among equal distances.
        order.sort_by(|&a, &b| dist(a).total_cmp(&dist(b)));
        order[..self.k].iter().map(|&i| self.train_y[i]).sum::<f64>() / self.k as f64
    }

    pub fn predict(&self, xs: &[f64]) -> Vec<f64> {
        xs.iter().map(|&x| self.predict_one(x)).collect()
    }
}

pub fn knn_fit_predict(train: &PairedSamples, test_x: &[f64], k: usize) -> Result<Vec<f64>> {
    Ok(KnnModel::fit(train, k)?.predict(test_x))
}
