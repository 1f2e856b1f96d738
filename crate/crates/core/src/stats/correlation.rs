use super::special::incomplete_beta;
use super::{mean, PairedSamples};
use crate::error::{Error, Result};

/// Pearson product-moment correlation.
///
/// Needs at least two rows and non-zero variance in both series.
pub fn pearson(samples: &PairedSamples) -> Result<f64> {
    let n = samples.len();
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "pearson needs at least 2 samples, got {n}"
        )));
    }
    let (mx, my) = (mean(&samples.xs), mean(&samples.ys));
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in samples.xs.iter().zip(&samples.ys) {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::Degenerate(
            "pearson correlation undefined for a constant series".into(),
        ));
    }
    let r = (sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0);
    // Rounding leaves exact linear relations a few ulps short of ±1.
    if 1.0 - r.abs() <= 4.0 * f64::EPSILON {
        return Ok(r.signum());
    }
    Ok(r)
}

/// Two-sided p-value for `H0: ρ = 0` from Student's t with `n − 2` degrees of freedom.
///
/// `|r| = 1` gives exactly 0.
pub fn pearson_pvalue(samples: &PairedSamples) -> Result<f64> {
    pearson_with_pvalue(samples).map(|(_, p)| p)
}

/// `(r, p)` in one pass.
pub fn pearson_with_pvalue(samples: &PairedSamples) -> Result<(f64, f64)> {
    let n = samples.len();
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "p-value needs at least 3 samples, got {n}"
        )));
    }
    let r = pearson(samples)?;
    Ok((r, pvalue_for_r(r, n)))
}

pub(crate) fn pvalue_for_r(r: f64, n: usize) -> f64 {
    if r.abs() >= 1.0 {
        return 0.0;
    }
    let df = (n - 2) as f64;
    let t2 = r * r * df / (1.0 - r * r);
    // P(|T| > t) = I_{df/(df+t²)}(df/2, 1/2)
    incomplete_beta(df / 2.0, 0.5, df / (df + t2)).clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn samples(xs: &[f64], ys: &[f64]) -> PairedSamples {
        PairedSamples::new(xs.to_vec(), ys.to_vec()).unwrap()
    }

    /// Student-t density integrated with composite Simpson's rule.
    fn t_two_sided_tail(t: f64, df: f64) -> f64 {
        use super::super::special::ln_gamma;
        let c = (ln_gamma((df + 1.0) / 2.0) - ln_gamma(df / 2.0)).exp() / (df * std::f64::consts::PI).sqrt();
        let pdf = |x: f64| c * (1.0 + x * x / df).powf(-(df + 1.0) / 2.0);
        let steps = 200_000;
        let h = t / steps as f64;
        let mut acc = pdf(0.0) + pdf(t);
        for i in 1..steps {
            acc += pdf(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        let central = acc * h / 3.0;
        1.0 - 2.0 * central
    }

    #[test]
    fn exact_lines() {
        assert!((pearson(&samples(&[1., 2., 3.], &[2., 4., 6.])).unwrap() - 1.0).abs() < 1e-15);
        assert!((pearson(&samples(&[1., 2., 3.], &[6., 4., 2.])).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn hand_evaluated_value() {
        // cov = 4/4... sxy = 4, sxx = syy = 5 -> 0.8
        let r = pearson(&samples(&[1., 2., 3., 4.], &[1., 3., 2., 4.])).unwrap();
        assert!((r - 0.8).abs() < 1e-9);
    }

    #[test]
    fn constant_series_is_degenerate() {
        let err = pearson(&samples(&[1., 1., 1.], &[1., 2., 3.])).unwrap_err();
        assert!(matches!(err, Error::Degenerate(_)));
        assert!(pearson(&samples(&[1.], &[1.])).is_err());
    }

    #[test]
    fn pvalue_limits() {
        assert_eq!(pvalue_for_r(0.0, 10), 1.0);
        assert_eq!(pearson_pvalue(&samples(&[1., 2., 3., 4.], &[3., 5., 7., 9.])).unwrap(), 0.0);
        assert!(pearson_pvalue(&samples(&[1., 2.], &[1., 2.])).is_err());
    }

    #[test]
    fn pvalue_matches_numerical_integration() {
        let t = 0.5 * (18.0f64 / 0.75).sqrt();
        let oracle = t_two_sided_tail(t, 18.0);
        let p = pvalue_for_r(0.5, 20);
        assert!((p - oracle).abs() < 1e-8, "{p} vs {oracle}");
        assert!((p - 0.0248).abs() < 5e-4);
        for &(r, n) in &[(0.1, 50usize), (0.3, 12), (0.8, 5), (-0.6, 30)] {
            let df = (n - 2) as f64;
            let t = f64::abs(r) * (df / (1.0 - r * r)).sqrt();
            assert!((pvalue_for_r(r, n) - t_two_sided_tail(t, df)).abs() < 1e-8);
        }
    }

    proptest! {
        #[test]
        fn affine_images_correlate_perfectly(
            xs in prop::collection::vec(-100.0f64..100.0, 3..40),
            a in 0.1f64..10.0,
            b in -50.0f64..50.0,
        ) {
            prop_assume!(super::super::sum_sq_dev(&xs) > 1e-6);
            let up: Vec<f64> = xs.iter().map(|x| a * x + b).collect();
            let down: Vec<f64> = xs.iter().map(|x| -a * x + b).collect();
            prop_assert!((pearson(&samples(&xs, &up)).unwrap() - 1.0).abs() < 1e-9);
            prop_assert!((pearson(&samples(&xs, &down)).unwrap() + 1.0).abs() < 1e-9);
        }

        #[test]
        fn symmetric_and_affine_invariant(
            pts in prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 3..40),
            a in 0.1f64..10.0,
            b in -50.0f64..50.0,
        ) {
            let xs: Vec<f64> = pts.iter().map(|p| p.0).collect();
            let ys: Vec<f64> = pts.iter().map(|p| p.1).collect();
            prop_assume!(super::super::sum_sq_dev(&xs) > 1e-6 && super::super::sum_sq_dev(&ys) > 1e-6);
            let r = pearson(&samples(&xs, &ys)).unwrap();
            prop_assert!((r - pearson(&samples(&ys, &xs)).unwrap()).abs() < 1e-9);
            let scaled: Vec<f64> = xs.iter().map(|x| a * x + b).collect();
            prop_assert!((r - pearson(&samples(&scaled, &ys)).unwrap()).abs() < 1e-9);
        }
    }
}
