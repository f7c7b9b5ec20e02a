//! Power-law fit of edge counts against point counts.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingSample {
    pub n: usize,
    pub edges: usize,
    pub edges_per_n: f64,
}

impl ScalingSample {
    pub fn new(n: usize, edges: usize) -> Self {
        ScalingSample {
            n,
            edges,
            edges_per_n: edges as f64 / n as f64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FitError {
    #[error("need at least two samples")]
    TooFew,
    #[error("sample counts must be positive")]
    NonPositive,
    #[error("point counts must not all be equal")]
    SameN,
}

/// Least-squares line through `(ln n, ln edges)`.
pub fn fit_exponent(samples: &[ScalingSample]) -> Result<FitResult, FitError> {
    if samples.len() < 2 {
        return Err(FitError::TooFew);
    }
    if samples.iter().any(|s| s.n == 0 || s.edges == 0) {
        return Err(FitError::NonPositive);
    }
    let xs: Vec<f64> = samples.iter().map(|s| (s.n as f64).ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|s| (s.edges as f64).ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(FitError::SameN);
    }
    let slope = sxy / sxx;
    let r_squared = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok(FitResult {
        slope,
        intercept: my - slope * mx,
        r_squared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let f = fit_exponent(&[ScalingSample::new(10, 100), ScalingSample::new(100, 10000)]).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12);
        let lin: Vec<_> = [10, 100, 1000].iter().map(|&n| ScalingSample::new(n, 7 * n)).collect();
        let f = fit_exponent(&lin).unwrap();
        assert!((f.slope - 1.0).abs() < 1e-12);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
        assert!((f.intercept - 7f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(fit_exponent(&[ScalingSample::new(5, 5)]), Err(FitError::TooFew));
        assert_eq!(
            fit_exponent(&[ScalingSample::new(5, 5), ScalingSample::new(5, 9)]),
            Err(FitError::SameN)
        );
        assert_eq!(
            fit_exponent(&[ScalingSample::new(5, 0), ScalingSample::new(6, 9)]),
            Err(FitError::NonPositive)
        );
    }

    proptest! {
        #[test]
        fn recovers_exact_power_laws(a in 1u32..4, c in 1usize..50) {
            let samples: Vec<_> = [2usize, 3, 5, 8, 13]
                .iter()
                .map(|&n| ScalingSample::new(n, c * n.pow(a)))
                .collect();
            let f = fit_exponent(&samples).unwrap();
            prop_assert!((f.slope - a as f64).abs() < 1e-9);
            prop_assert!(f.r_squared > 1.0 - 1e-9);
        }
    }
}
