use super::{mean, sum_sq_dev, PairedSamples};
use crate::error::{Error, Result};

/// Ordinary least-squares line `y = slope · x + intercept`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegressionFit {
    pub slope: f64,
    pub intercept: f64,
    /// Coefficient of determination of the fit on its own data. 0 when `ys` is constant.
    pub r2: f64,
}

impl RegressionFit {
    pub fn predict(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

pub fn linear_fit(samples: &PairedSamples) -> Result<RegressionFit> {
    let n = samples.len();
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "linear fit needs at least 2 samples, got {n}"
        )));
    }
    let sxx = sum_sq_dev(&samples.xs);
    if sxx == 0.0 {
        return Err(Error::Degenerate("linear fit undefined for constant x".into()));
    }
    let (mx, my) = (mean(&samples.xs), mean(&samples.ys));
    let sxy: f64 = samples
        .xs
        .iter()
        .zip(&samples.ys)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let syy = sum_sq_dev(&samples.ys);
    let r2 = if syy == 0.0 {
        0.0
    } else {
        let ss_res: f64 = samples
            .xs
            .iter()
            .zip(&samples.ys)
            .map(|(x, y)| {
                let e = y - (slope * x + intercept);
                e * e
            })
            .sum();
        1.0 - ss_res / syy
    };
    Ok(RegressionFit {
        slope,
        intercept,
        r2,
    })
}

/// `1 − SS_res / SS_tot`; negative when predictions are worse than the mean.
pub fn r2_score(y_true: &[f64], y_pred: &[f64]) -> Result<f64> {
    if y_true.len() != y_pred.len() {
        return Err(Error::InvalidInput("r2: length mismatch".into()));
    }
    if y_true.len() < 2 {
        return Err(Error::InvalidInput("r2 needs at least 2 samples".into()));
    }
    let ss_tot = sum_sq_dev(y_true);
    if ss_tot == 0.0 {
        return Err(Error::Degenerate("r2 undefined for constant targets".into()));
    }
    let ss_res: f64 = y_true
        .iter()
        .zip(y_pred)
        .map(|(t, p)| (t - p) * (t - p))
        .sum();
    Ok(1.0 - ss_res / ss_tot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fit(xs: &[f64], ys: &[f64]) -> RegressionFit {
        linear_fit(&PairedSamples::new(xs.to_vec(), ys.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn identity_line() {
        let f = fit(&[1., 2., 3., 4.], &[1., 2., 3., 4.]);
        assert_eq!((f.slope, f.intercept, f.r2), (1.0, 0.0, 1.0));
    }

    #[test]
    fn constant_response() {
        let f = fit(&[1., 2., 3.], &[5., 5., 5.]);
        assert_eq!(f.slope, 0.0);
        assert_eq!(f.r2, 0.0);
    }

    #[test]
    fn exact_line() {
        let f = fit(&[0., 1., 2., 3.], &[1., 3., 5., 7.]);
        assert_eq!((f.slope, f.intercept), (2.0, 1.0));
    }

    #[test]
    fn constant_x_is_degenerate() {
        let s = PairedSamples::new(vec![2., 2.], vec![1., 3.]).unwrap();
        assert!(matches!(linear_fit(&s), Err(Error::Degenerate(_))));
    }

    #[test]
    fn r2_examples() {
        let y = [1., 2., 3.];
        assert_eq!(r2_score(&y, &y).unwrap(), 1.0);
        assert_eq!(r2_score(&y, &[2., 2., 2.]).unwrap(), 0.0);
        // SS_res = 8, SS_tot = 2
        assert_eq!(r2_score(&y, &[3., 2., 1.]).unwrap(), -3.0);
        assert!(matches!(r2_score(&[4., 4.], &[1., 2.]), Err(Error::Degenerate(_))));
    }

    proptest! {
        #[test]
        fn recovers_noiseless_lines(
            xs in prop::collection::vec(-100.0f64..100.0, 2..50),
            slope in -20.0f64..20.0,
            intercept in -100.0f64..100.0,
        ) {
            prop_assume!(sum_sq_dev(&xs) > 1e-3);
            let ys: Vec<f64> = xs.iter().map(|x| slope * x + intercept).collect();
            let f = fit(&xs, &ys);
            prop_assert!((f.slope - slope).abs() < 1e-9);
            prop_assert!((f.intercept - intercept).abs() < 1e-9);
            prop_assert!(f.r2 <= 1.0);
        }

        #[test]
        fn r2_of_perfect_prediction_is_one(ys in prop::collection::vec(-1e3f64..1e3, 2..50)) {
            prop_assume!(sum_sq_dev(&ys) > 0.0);
            prop_assert_eq!(r2_score(&ys, &ys).unwrap(), 1.0);
        }
    }
}
