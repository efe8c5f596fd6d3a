//! Small least-squares helpers for log-log exponent fits.

/// Result of a straight-line fit y ~ intercept + slope * x.
#[derive(Debug, Clone, Copy)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub slope_se: f64,
    pub r_squared: f64,
}

/// Ordinary least squares. Slope standard error comes from the residual
/// variance; it is zero for an exact line.
pub fn ols(x: &[f64], y: &[f64]) -> LineFit {
    let w: Vec<f64> = vec![1.0; x.len()];
    wls_known_weights(x, y, &w, false)
}

/// Weighted least squares with weights 1/var_i. When `known_variance` is
/// true the slope standard error is taken from the supplied weights
/// (Var slope = 1 / sum w (x - xbar)^2); otherwise it is scaled by the
/// weighted residual variance.
pub fn wls(x: &[f64], y: &[f64], weights: &[f64]) -> LineFit {
    wls_known_weights(x, y, weights, true)
}

fn wls_known_weights(x: &[f64], y: &[f64], w: &[f64], known_variance: bool) -> LineFit {
    assert_eq!(x.len(), y.len());
    assert_eq!(x.len(), w.len());
    assert!(x.len() >= 2, "need at least two points for a line fit");

    let sw: f64 = w.iter().sum();
    let xb = x.iter().zip(w).map(|(xi, wi)| wi * xi).sum::<f64>() / sw;
    let yb = y.iter().zip(w).map(|(yi, wi)| wi * yi).sum::<f64>() / sw;

    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for i in 0..x.len() {
        sxx += w[i] * (x[i] - xb) * (x[i] - xb);
        sxy += w[i] * (x[i] - xb) * (y[i] - yb);
    }
    let slope = sxy / sxx;
    let intercept = yb - slope * xb;

    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    for i in 0..x.len() {
        let fit = intercept + slope * x[i];
        ss_res += w[i] * (y[i] - fit) * (y[i] - fit);
        ss_tot += w[i] * (y[i] - yb) * (y[i] - yb);
    }
    let r_squared = if ss_tot > 0.0 { 1.0 - ss_res / ss_tot } else { 1.0 };

    let slope_se = if known_variance {
        (1.0 / sxx).sqrt()
    } else if x.len() > 2 {
        let dof = (x.len() - 2) as f64;
        (ss_res / dof / sxx).sqrt()
    } else {
        0.0
    };

    LineFit {
        slope,
        intercept,
        slope_se,
        r_squared,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line_recovered() {
        let x = [0.0, 1.0, 2.0, 3.0];
        let y: Vec<f64> = x.iter().map(|v| 2.5 * v - 1.0).collect();
        let fit = ols(&x, &y);
        assert!((fit.slope - 2.5).abs() < 1e-12);
        assert!((fit.intercept + 1.0).abs() < 1e-12);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
        assert!(fit.slope_se < 1e-12);
    }

    #[test]
    fn weights_pull_fit_toward_precise_points() {
        let x = [0.0, 1.0, 2.0];
        let y = [0.0, 1.0, 4.0]; // last point off the line y = x
        let w = [1e6, 1e6, 1e-6];
        let fit = wls(&x, &y, &w);
        assert!((fit.slope - 1.0).abs() < 1e-3);
    }
}
