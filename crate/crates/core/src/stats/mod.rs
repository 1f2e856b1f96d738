//! Correlation, least-squares fits, KNN regression and seeded splitting.

mod correlation;
mod knn;
mod regression;
mod special;
mod split;

pub use correlation::{pearson, pearson_pvalue, pearson_with_pvalue};
pub use knn::{knn_fit_predict, KnnModel};
pub use regression::{linear_fit, r2_score, RegressionFit};
pub use split::train_test_split;

use crate::error::{Error, Result};

/// Two equally long real-valued series, optionally labelled per row.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PairedSamples {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub labels: Option<Vec<String>>,
}

impl PairedSamples {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidInput(format!(
                "series lengths differ: {} vs {}",
                xs.len(),
                ys.len()
            )));
        }
        if xs.iter().chain(&ys).any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("samples must be finite".into()));
        }
        Ok(Self {
            xs,
            ys,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.xs.len() {
            return Err(Error::InvalidInput("label count differs from sample count".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }
}

pub(crate) fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Sum of squared deviations from the mean.
pub(crate) fn sum_sq_dev(v: &[f64]) -> f64 {
    let m = mean(v);
    v.iter().map(|x| (x - m) * (x - m)).sum()
}
