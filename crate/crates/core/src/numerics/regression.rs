//! Least-squares slope of log(error) against log(eps).

use crate::error::NumericsError;

/// Fits the slope of `log(error)` vs `log(eps)` over `(eps, error)` pairs.
///
/// This is the observed convergence order of an error sweep.
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> Result<f64, NumericsError> {
    if points.len() < 3 {
        return Err(NumericsError::InsufficientData {
            needed: 3,
            got: points.len(),
        });
    }
    for (i, &(eps, err)) in points.iter().enumerate() {
        if !(eps > 0.0 && err > 0.0) {
            return Err(NumericsError::NonpositiveValue(i));
        }
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(e, v)| (e.ln(), v.ln())).collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line_gives_unit_slope() {
        let pts = [(0.1, 0.1), (0.01, 0.01), (0.001, 0.001)];
        assert!((fit_loglog_slope(&pts).unwrap() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn cubic_line_gives_slope_three() {
        let pts: Vec<(f64, f64)> = [0.2, 0.05, 0.01]
            .iter()
            .map(|&e: &f64| (e, e.powi(3)))
            .collect();
        assert!((fit_loglog_slope(&pts).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn perturbed_cubic_data_stays_near_three() {
        let pts: Vec<(f64, f64)> = (0..8)
            .map(|j| {
                let eps = 10f64.powf(-0.25 * j as f64);
                let noise = 1.0 + 0.01 * ((j as f64) * 2.399).sin();
                (eps, eps.powi(3) * noise)
            })
            .collect();
        let slope = fit_loglog_slope(&pts).unwrap();
        assert!((slope - 3.0).abs() < 0.05, "slope {slope}");
    }

    #[test]
    fn too_few_points_rejected() {
        let err = fit_loglog_slope(&[(0.1, 0.1), (0.01, 0.01)]).unwrap_err();
        assert!(matches!(err, NumericsError::InsufficientData { .. }));
    }

    #[test]
    fn nonpositive_values_rejected() {
        let err = fit_loglog_slope(&[(0.1, 0.1), (0.01, 0.0), (0.001, 0.001)]).unwrap_err();
        assert!(matches!(err, NumericsError::NonpositiveValue(1)));
    }
}
