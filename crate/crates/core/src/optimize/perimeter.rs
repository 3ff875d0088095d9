//! Perimeter comparison between a regular right-angled compact polygon and
//! regular right-angled cusps.
//!
//! With `s = ln(√2 + 1)`:
//! - `f(x) = 2x acosh(√2 cos(π/x))`, perimeter of the regular right-angled `x`-gon;
//! - `g(x) = 2x s`, perimeter of the regular right-angled `x`-sided cusp;
//! - `h(x) = f(x) - g(x - 4)`.

use std::f64::consts::{PI, SQRT_2};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::json;

fn silver_log() -> f64 {
    (SQRT_2 + 1.0).ln()
}

/// `f(x)` for real `x ≥ 4`; `f(4) = 0` in the limit.
pub fn right_polygon_perimeter(x: f64) -> Result<f64> {
    if !(x >= 4.0 && x.is_finite()) {
        return Err(Error::domain(format!(
            "right-angled polygon needs x ≥ 4, got {x}"
        )));
    }
    let arg = SQRT_2 * (PI / x).cos();
    // At x = 4 the argument is 1 up to roundoff either way.
    let arg = if (arg - 1.0).abs() < 1e-12 { 1.0 } else { arg };
    Ok(2.0 * x * arg.acosh())
}

/// `f(n)`, perimeter of the regular right-angled compact `n`-gon (`n ≥ 5`).
pub fn regular_right_polygon_perimeter(n: usize) -> Result<f64> {
    if n < 5 {
        return Err(Error::invalid(format!(
            "a right-angled compact polygon needs n ≥ 5, got {n}"
        )));
    }
    right_polygon_perimeter(n as f64)
}

/// `g(x)`, perimeter of the regular right-angled `x`-sided cusp.
pub fn right_cusp_perimeter(x: f64) -> f64 {
    2.0 * x * silver_log()
}

/// `h(x) = f(x) - g(x - 4)`.
pub fn perimeter_gap(x: f64) -> Result<f64> {
    Ok(right_polygon_perimeter(x)? - right_cusp_perimeter(x - 4.0))
}

/// Closed-form `h′(x)` for `x > 4`.
pub fn perimeter_gap_slope(x: f64) -> f64 {
    let (s, c) = (PI / x).sin_cos();
    let root = (2.0 * PI / x).cos().sqrt();
    let head = SQRT_2 * c + root;
    2.0 * (head.ln() - silver_log())
        + (2.0 * PI / x) * (SQRT_2 * s + (2.0 * PI / x).sin() / root) / head
}

/// Closed-form `h″(x) = -2π²√2 cos(π/x) / (x³ cos^{3/2}(2π/x))` for `x > 4`.
pub fn perimeter_gap_curvature(x: f64) -> f64 {
    -2.0 * PI * PI * SQRT_2 * (PI / x).cos() / (x.powi(3) * (2.0 * PI / x).cos().powf(1.5))
}

/// Richardson-extrapolated central second difference of `f` at `x`.
pub fn second_difference(x: f64, d: f64) -> Result<f64> {
    let f0 = right_polygon_perimeter(x)?;
    let dd = |d: f64| -> Result<f64> {
        Ok(
            (right_polygon_perimeter(x + d)? - 2.0 * f0 + right_polygon_perimeter(x - d)?)
                / (d * d),
        )
    };
    let (coarse, fine) = (dd(d)?, dd(d / 2.0)?);
    Ok((4.0 * fine - coarse) / 3.0)
}

#[derive(Debug, Clone, Serialize)]
pub struct PerimeterGapReport {
    #[serde(serialize_with = "json::real")]
    pub x_max: f64,
    #[serde(serialize_with = "json::real")]
    pub step: f64,
    pub points: usize,
    #[serde(serialize_with = "json::real")]
    pub h_at_4: f64,
    #[serde(serialize_with = "json::real")]
    pub h_at_5: f64,
    #[serde(serialize_with = "json::real")]
    pub min_h: f64,
    /// Smallest `h(x_{k+1}) - h(x_k)` on the grid.
    #[serde(serialize_with = "json::real")]
    pub min_increment: f64,
    #[serde(serialize_with = "json::real")]
    pub min_slope: f64,
    #[serde(serialize_with = "json::real")]
    pub max_curvature: f64,
    /// Largest `|h″ - second difference of f|` on the grid.
    #[serde(serialize_with = "json::real")]
    pub max_curvature_error: f64,
    #[serde(serialize_with = "json::real")]
    pub worst_curvature_x: f64,
    pub zero_at_4: bool,
    pub increasing: bool,
    pub positive: bool,
    pub slope_positive: bool,
    pub concave: bool,
    pub curvature_matches: bool,
}

impl PerimeterGapReport {
    pub fn passed(&self) -> bool {
        self.zero_at_4
            && self.increasing
            && self.positive
            && self.slope_positive
            && self.concave
            && self.curvature_matches
    }
}

/// Check on the grid `4 + k·step ≤ x_max`, `k ≥ 1`, that `h(4) = 0`, that
/// `h` is positive and strictly increasing, that `h′ > 0 > h″`, and that the
/// closed-form `h″` agrees with second differences of `f` to `curvature_tol`.
pub fn verify_perimeter_gap(
    x_max: f64,
    step: f64,
    curvature_tol: f64,
) -> Result<PerimeterGapReport> {
    if !(x_max > 5.0 && x_max.is_finite()) {
        return Err(Error::invalid(format!("x_max must exceed 5, got {x_max}")));
    }
    if !(step > 0.0 && step < x_max - 4.0) {
        return Err(Error::invalid(format!(
            "step must lie in (0, x_max - 4), got {step}"
        )));
    }
    let n = ((x_max - 4.0) / step + 1e-9).floor() as usize;
    let h_at_4 = perimeter_gap(4.0)?;
    let mut prev = h_at_4;
    let mut min_h = f64::INFINITY;
    let mut min_increment = f64::INFINITY;
    let mut min_slope = f64::INFINITY;
    let mut max_curvature = f64::NEG_INFINITY;
    let mut worst = (0.0f64, f64::NAN);
    for k in 1..=n {
        let x = 4.0 + k as f64 * step;
        let h = perimeter_gap(x)?;
        min_h = min_h.min(h);
        min_increment = min_increment.min(h - prev);
        prev = h;
        min_slope = min_slope.min(perimeter_gap_slope(x));
        let curvature = perimeter_gap_curvature(x);
        max_curvature = max_curvature.max(curvature);
        let d = (0.02 * (x - 4.0)).min(1e-3);
        let err = (curvature - second_difference(x, d)?).abs();
        if err.is_nan() || err > worst.0 {
            worst = (err, x);
        }
    }
    Ok(PerimeterGapReport {
        x_max,
        step,
        points: n,
        h_at_4,
        h_at_5: perimeter_gap(5.0)?,
        min_h,
        min_increment,
        min_slope,
        max_curvature,
        max_curvature_error: worst.0,
        worst_curvature_x: worst.1,
        zero_at_4: h_at_4.abs() <= 1e-12,
        increasing: min_increment > 0.0,
        positive: min_h > 0.0,
        slope_positive: min_slope > 0.0,
        concave: max_curvature < 0.0,
        curvature_matches: worst.0 <= curvature_tol,
    })
}

/// `Perim(R₁) + Perim(R₂) ≥ Perim(R)` for a right-angled compact `n1`-gon,
/// a right-angled `n2`-sided cusp and the glued `m`-sided cusp, `m = n1 + n2 - 4`.
#[derive(Debug, Clone, Serialize)]
pub struct PerimeterComparison {
    pub n1: usize,
    pub n2: usize,
    pub m: usize,
    #[serde(serialize_with = "json::real")]
    pub f_n1: f64,
    #[serde(serialize_with = "json::real")]
    pub g_n2: f64,
    #[serde(serialize_with = "json::real")]
    pub g_m: f64,
    #[serde(serialize_with = "json::real")]
    pub h_value: f64,
    pub holds: bool,
}

pub fn perimeter_comparison(n1: usize, n2: usize) -> Result<PerimeterComparison> {
    if n2 < 3 {
        return Err(Error::invalid(format!(
            "a cusp needs at least 3 sides, got {n2}"
        )));
    }
    let f_n1 = regular_right_polygon_perimeter(n1)?;
    let m = n1 + n2 - 4;
    let g_n2 = right_cusp_perimeter(n2 as f64);
    let g_m = right_cusp_perimeter(m as f64);
    let h_value = perimeter_gap(n1 as f64)?;
    Ok(PerimeterComparison {
        n1,
        n2,
        m,
        f_n1,
        g_n2,
        g_m,
        h_value,
        holds: f_n1 + g_n2 > g_m && h_value > 0.0,
    })
}
