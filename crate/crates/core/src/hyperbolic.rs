//! Closed-form hyperbolic trigonometry in the upper half-plane.
//!
//! Three families of kernels live here:
//!
//! * generic finite triangles solved by the hyperbolic law of cosines;
//! * triangles with a fixed base `c` whose other two sides sum to `l`
//!   (the apex slides along a "hyperbolic ellipse"), with closed-form
//!   derivatives of the angle sum;
//! * triangles with one ideal vertex, both in the `Δ(θ, l, φ)` form used to
//!   triangulate polygonal cusps and in the explicit configuration with
//!   finite vertices `ai`, `bi` and an ideal vertex `x` on the real axis.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Inputs to inverse trig functions are clamped only inside this band.
pub const CLAMP_BAND: f64 = 1e-12;
/// Side lengths at or below this are treated as degenerate.
pub const MIN_LENGTH: f64 = 1e-12;
/// Relative tolerance for the ideal-vertex compatibility relation.
pub const COMPAT_TOL: f64 = 1e-9;

/// Map `v` into `[-1, 1]`, tolerating roundoff but not genuine excursions.
pub(crate) fn unit(v: f64, what: &str) -> Result<f64> {
    if !v.is_finite() {
        return Err(Error::domain(format!("{what}: non-finite argument {v}")));
    }
    if v.abs() <= 1.0 {
        Ok(v)
    } else if v.abs() - 1.0 <= CLAMP_BAND {
        Ok(v.signum())
    } else {
        Err(Error::domain(format!(
            "{what}: argument {v} outside [-1, 1]"
        )))
    }
}

fn acos_checked(v: f64, what: &str) -> Result<f64> {
    Ok(unit(v, what)?.acos())
}

fn asin_checked(v: f64, what: &str) -> Result<f64> {
    Ok(unit(v, what)?.asin())
}

fn positive_length(v: f64, what: &str) -> Result<f64> {
    if v.is_finite() && v > MIN_LENGTH {
        Ok(v)
    } else {
        Err(Error::domain(format!(
            "{what} must exceed {MIN_LENGTH}, got {v}"
        )))
    }
}

// ---------------------------------------------------------------------------
// Points, distances, tangent directions
// ---------------------------------------------------------------------------

/// A point `x + iy` of the upper half-plane, `y > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UhpPoint {
    pub x: f64,
    pub y: f64,
}

impl UhpPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && y > 0.0) {
            return Err(Error::domain(format!(
                "({x}, {y}) is not in the upper half-plane"
            )));
        }
        Ok(Self { x, y })
    }

    /// Hyperbolic distance, via `2 asinh(|z - w| / (2 sqrt(y_z y_w)))`.
    pub fn distance(&self, other: &UhpPoint) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let chord = (dx * dx + dy * dy).sqrt();
        2.0 * (chord / (2.0 * (self.y * other.y).sqrt())).asinh()
    }

    /// Unit Euclidean tangent at `self` of the geodesic arc running to `other`.
    pub fn tangent_toward(&self, other: &UhpPoint) -> [f64; 2] {
        let dx = other.x - self.x;
        if dx.abs() <= 1e-15 * (self.x.abs() + other.x.abs()).max(1.0) {
            return [0.0, (other.y - self.y).signum()];
        }
        let center = geodesic_center(self, other);
        // Radius vector is (x - c, y); the arc tangent is perpendicular to it,
        // oriented so that x moves toward `other`.
        let (rx, ry) = (self.x - center, self.y);
        let norm = rx.hypot(ry);
        if dx > 0.0 {
            [ry / norm, -rx / norm]
        } else {
            [-ry / norm, rx / norm]
        }
    }

    /// Apply the isometry `z ↦ λz + t` (λ > 0), which fixes the point at infinity.
    pub fn scale_translate(&self, lambda: f64, t: f64) -> UhpPoint {
        UhpPoint {
            x: lambda * self.x + t,
            y: lambda * self.y,
        }
    }
}

/// Real-axis center of the semicircle through two points with distinct `x`.
pub(crate) fn geodesic_center(p: &UhpPoint, q: &UhpPoint) -> f64 {
    ((q.x * q.x + q.y * q.y) - (p.x * p.x + p.y * p.y)) / (2.0 * (q.x - p.x))
}

/// Counterclockwise angle from `u` to `v`, in `[0, 2π)`.
pub fn ccw_angle(u: [f64; 2], v: [f64; 2]) -> f64 {
    let cross = u[0] * v[1] - u[1] * v[0];
    let dot = u[0] * v[0] + u[1] * v[1];
    let a = cross.atan2(dot);
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

// ---------------------------------------------------------------------------
// Finite triangles
// ---------------------------------------------------------------------------

/// A compact hyperbolic triangle given by its three side lengths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteTriangle {
    a: f64,
    b: f64,
    c: f64,
}

impl FiniteTriangle {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let a = positive_length(a, "side a")?;
        let b = positive_length(b, "side b")?;
        let c = positive_length(c, "side c")?;
        if !(a < b + c && b < a + c && c < a + b) {
            return Err(Error::domain(format!(
                "sides ({a}, {b}, {c}) violate the strict triangle inequality"
            )));
        }
        Ok(Self { a, b, c })
    }

    pub fn sides(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// Angles opposite `a`, `b`, `c` from the hyperbolic law of cosines.
    pub fn angles(&self) -> Result<[f64; 3]> {
        let (a, b, c) = (self.a, self.b, self.c);
        let opposite = |x: f64, y: f64, z: f64| {
            acos_checked(
                (y.cosh() * z.cosh() - x.cosh()) / (y.sinh() * z.sinh()),
                "law of cosines",
            )
        };
        Ok([opposite(a, b, c)?, opposite(b, c, a)?, opposite(c, a, b)?])
    }

    /// Angle defect `π - α - β - γ`.
    pub fn area(&self) -> Result<f64> {
        let [x, y, z] = self.angles()?;
        Ok(PI - x - y - z)
    }
}

/// Convenience wrapper around [`FiniteTriangle::angles`].
pub fn triangle_angles(t: &FiniteTriangle) -> Result<[f64; 3]> {
    t.angles()
}

// ---------------------------------------------------------------------------
// Fixed base, fixed sum of the other two sides
// ---------------------------------------------------------------------------

fn check_fixed_base(base: f64, total: f64, x: f64) -> Result<()> {
    positive_length(base, "base")?;
    if !(total.is_finite() && total > base) {
        return Err(Error::domain(format!(
            "side sum {total} must exceed base {base}"
        )));
    }
    let (lo, hi) = ((total - base) / 2.0, (total + base) / 2.0);
    if !(x > lo && x < hi) {
        return Err(Error::domain(format!(
            "x = {x} outside the open interval ({lo}, {hi})"
        )));
    }
    Ok(())
}

/// Angles of the triangle `ABC` with `AB = base`, `AC = x`, `BC = total - x`.
///
/// Returns `[α, β, γ]`, the angles at `A`, `B` and the moving apex `C`.
pub fn fixed_base_angles(base: f64, total: f64, x: f64) -> Result<[f64; 3]> {
    check_fixed_base(base, total, x)?;
    let (c, y) = (base, total - x);
    let alpha = acos_checked(
        (x.cosh() * c.cosh() - y.cosh()) / (x.sinh() * c.sinh()),
        "alpha",
    )?;
    let beta = acos_checked(
        (y.cosh() * c.cosh() - x.cosh()) / (y.sinh() * c.sinh()),
        "beta",
    )?;
    let gamma = acos_checked(
        (x.cosh() * y.cosh() - c.cosh()) / (x.sinh() * y.sinh()),
        "gamma",
    )?;
    Ok([alpha, beta, gamma])
}

/// Closed-form derivatives `[dα/dx, dβ/dx, dγ/dx]` for [`fixed_base_angles`].
pub fn fixed_base_angle_derivatives(base: f64, total: f64, x: f64) -> Result<[f64; 3]> {
    check_fixed_base(base, total, x)?;
    let (c, l, y) = (base, total, total - x);
    let spread = l.cosh() - c.cosh();

    let n_alpha = x.cosh() * c.cosh() - y.cosh();
    let n_beta = y.cosh() * c.cosh() - x.cosh();
    let n_gamma = x.cosh() * y.cosh() - c.cosh();
    let root = |s: f64, n: f64| (s * s - n * n).max(0.0).sqrt();

    let d_alpha = -spread / (x.sinh() * root(x.sinh() * c.sinh(), n_alpha));
    let d_beta = spread / (y.sinh() * root(y.sinh() * c.sinh(), n_beta));
    let d_gamma = (y.sinh() * y.cosh() - x.sinh() * x.cosh() - c.cosh() * (l - 2.0 * x).sinh())
        / (x.sinh() * y.sinh() * root(x.sinh() * y.sinh(), n_gamma));
    Ok([d_alpha, d_beta, d_gamma])
}

/// Derivative in `x` of the angle sum `α + β + γ`.
pub fn fixed_base_angle_sum_derivative(base: f64, total: f64, x: f64) -> Result<f64> {
    Ok(fixed_base_angle_derivatives(base, total, x)?.iter().sum())
}

/// Angle sum of the isosceles member (`x = total / 2`), in closed form:
/// `2 acos(coth(l/2) tanh(c/2)) + acos(coth²(l/2) - csch²(l/2) cosh c)`.
pub fn isosceles_angle_sum(base: f64, total: f64) -> Result<f64> {
    positive_length(base, "base")?;
    if !(total.is_finite() && total > base) {
        return Err(Error::domain(format!(
            "side sum {total} must exceed base {base}"
        )));
    }
    let half = total / 2.0;
    let coth = 1.0 / half.tanh();
    let csch = 1.0 / half.sinh();
    let base_angle = acos_checked(coth * (base / 2.0).tanh(), "isosceles base angle")?;
    let apex = acos_checked(
        coth * coth - csch * csch * base.cosh(),
        "isosceles apex angle",
    )?;
    Ok(2.0 * base_angle + apex)
}

// ---------------------------------------------------------------------------
// Triangles with one ideal vertex
// ---------------------------------------------------------------------------

/// A triangle `Δ(θ, l, φ)` with one ideal vertex, finite side `l` and base
/// angles `θ`, `φ` at the two finite vertices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CuspTriangle {
    pub l: f64,
    pub theta: f64,
    pub phi: f64,
}

impl CuspTriangle {
    /// Build from the finite side and one base angle; the other base angle is
    /// `φ = 2 atan(e^{-l} cot(θ/2))`, the closed-form solution of
    /// `cosh l · sin θ · sin φ = 1 + cos θ · cos φ`.
    pub fn new(l: f64, theta: f64) -> Result<Self> {
        let l = positive_length(l, "finite side")?;
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::domain(format!("base angle {theta} outside (0, π)")));
        }
        let phi = 2.0 * ((-l).exp() / (theta / 2.0).tan()).atan();
        Ok(Self { l, theta, phi })
    }

    /// Validate an explicit triple against the compatibility relation.
    pub fn from_parts(l: f64, theta: f64, phi: f64) -> Result<Self> {
        let l = positive_length(l, "finite side")?;
        for (name, a) in [("theta", theta), ("phi", phi)] {
            if !(a > 0.0 && a < PI) {
                return Err(Error::domain(format!("{name} = {a} outside (0, π)")));
            }
        }
        if theta + phi >= PI {
            return Err(Error::domain(format!(
                "base angles sum to {} ≥ π",
                theta + phi
            )));
        }
        let t = Self { l, theta, phi };
        let residual = t.compatibility_residual();
        if residual > COMPAT_TOL {
            return Err(Error::Inconsistent(format!(
                "ideal-vertex relation violated for l={l}, θ={theta}, φ={phi} (relative residual {residual:e})"
            )));
        }
        Ok(t)
    }

    /// The symmetric triangle `Δ(l, θ)` with `θ = φ = asin(2e^{l/2} / (1 + e^l))`.
    pub fn symmetric(l: f64) -> Result<Self> {
        let l = positive_length(l, "finite side")?;
        let a = symmetric_base_angle(l);
        Ok(Self {
            l,
            theta: a,
            phi: a,
        })
    }

    /// Relative residual of `cosh l sin θ sin φ = 1 + cos θ cos φ`.
    pub fn compatibility_residual(&self) -> f64 {
        let lhs = self.l.cosh() * self.theta.sin() * self.phi.sin();
        let rhs = 1.0 + self.theta.cos() * self.phi.cos();
        (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE)
    }

    /// Angle defect `π - θ - φ`.
    pub fn area(&self) -> f64 {
        PI - self.theta - self.phi
    }
}

/// Base angle of the symmetric ideal triangle on a side of length `l`:
/// `asin(2e^{l/2} / (1 + e^l))`, evaluated as `asin(2 / (e^{-l/2} + e^{l/2}))`
/// so large `l` does not overflow.
pub fn symmetric_base_angle(l: f64) -> f64 {
    let h = l / 2.0;
    (2.0 / ((-h).exp() + h.exp())).min(1.0).asin()
}

/// Which closed form of the ideal-apex angle sum applies at `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApexCase {
    /// `x > b`: both geodesic centers positive.
    Beyond,
    /// `x < a`: both centers negative.
    Below,
    /// `a ≤ x ≤ b`: centers of opposite sign.
    Between,
}

impl ApexCase {
    pub fn classify(a: f64, b: f64, x: f64) -> Self {
        if x > b {
            ApexCase::Beyond
        } else if x < a {
            ApexCase::Below
        } else {
            ApexCase::Between
        }
    }
}

/// Center and radius of the geodesic through `ai` and the boundary point `x`:
/// `((x² - a²) / 2x, (x² + a²) / 2x)`.
pub fn boundary_geodesic(a: f64, x: f64) -> Result<(f64, f64)> {
    if !(a > 0.0 && x > 0.0 && a.is_finite() && x.is_finite()) {
        return Err(Error::domain(format!(
            "need a > 0 and x > 0, got a={a}, x={x}"
        )));
    }
    Ok(((x * x - a * a) / (2.0 * x), (x * x + a * a) / (2.0 * x)))
}

fn check_apex(a: f64, b: f64, x: f64) -> Result<()> {
    if !(a > 0.0 && a < b && b.is_finite()) {
        return Err(Error::domain(format!("need 0 < a < b, got a={a}, b={b}")));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!(
            "ideal vertex must satisfy x > 0, got {x}"
        )));
    }
    Ok(())
}

/// Evaluate one specific closed form of the angle sum at `ai` and `bi`,
/// ignoring which range `x` falls in.
pub fn apex_case_value(a: f64, b: f64, x: f64, case: ApexCase) -> Result<f64> {
    check_apex(a, b, x)?;
    let sa = asin_checked(2.0 * a * x / (x * x + a * a), "apex a")?;
    let sb = asin_checked(2.0 * b * x / (x * x + b * b), "apex b")?;
    Ok(match case {
        ApexCase::Beyond => FRAC_PI_2 + sa + (FRAC_PI_2 - sb),
        ApexCase::Below => FRAC_PI_2 + (FRAC_PI_2 - sa) + sb,
        ApexCase::Between => sa + sb,
    })
}

/// Sum of the angles at `ai` and `bi` in the triangle `(ai, bi, x)` whose
/// third vertex `x > 0` is ideal.
pub fn ideal_apex_angle_sum(a: f64, b: f64, x: f64) -> Result<f64> {
    check_apex(a, b, x)?;
    apex_case_value(a, b, x, ApexCase::classify(a, b, x))
}

/// `d/dx` of [`ideal_apex_angle_sum`]: `2(x² - ab)(b - a) / ((a² + x²)(b² + x²))`.
pub fn ideal_apex_slope(a: f64, b: f64, x: f64) -> f64 {
    2.0 * (x * x - a * b) * (b - a) / ((a * a + x * x) * (b * b + x * x))
}

/// Minimum of [`ideal_apex_angle_sum`], attained at `x = √(ab)`.
pub fn ideal_apex_min(a: f64, b: f64) -> f64 {
    2.0 * (2.0 * (a * b).sqrt() / (a + b)).min(1.0).asin()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Geodesic tangent recomputed from scratch: circle through both points.
    fn oracle_tangent(p: (f64, f64), q: (f64, f64)) -> (f64, f64) {
        let c = ((q.0 * q.0 + q.1 * q.1) - (p.0 * p.0 + p.1 * p.1)) / (2.0 * (q.0 - p.0));
        let (mut tx, mut ty) = (p.1, c - p.0);
        if tx * (q.0 - p.0) + ty * (q.1 - p.1) < 0.0 {
            tx = -tx;
            ty = -ty;
        }
        let n = tx.hypot(ty);
        (tx / n, ty / n)
    }

    fn unsigned_angle(u: (f64, f64), v: (f64, f64)) -> f64 {
        (u.0 * v.0 + u.1 * v.1).clamp(-1.0, 1.0).acos()
    }

    #[test]
    fn equilateral_angles() {
        let s = 2f64.acosh();
        let t = FiniteTriangle::new(s, s, s).unwrap();
        let angles = t.angles().unwrap();
        for a in angles {
            assert!((a - (2.0f64 / 3.0).acos()).abs() < 1e-14);
        }
        assert_eq!(angles[0], angles[1]);
        assert_eq!(angles[1], angles[2]);
    }

    #[test]
    fn law_of_cosines_matches_explicit_placement() {
        // A = i, B = e^c i on the imaginary axis; C is where the distance
        // circles around A (radius b) and B (radius a) meet.
        let (a, b, c) = (1.0f64, 1.0f64, 1.9f64);
        let (ca, ra) = (b.cosh(), b.sinh());
        let (cb, rb) = (c.exp() * a.cosh(), c.exp() * a.sinh());
        let y = (ra * ra - rb * rb + cb * cb - ca * ca) / (2.0 * (cb - ca));
        let x = (ra * ra - (y - ca) * (y - ca)).sqrt();
        let (pa, pb, pc) = ((0.0, 1.0), (0.0, c.exp()), (x, y));
        let up = (0.0, 1.0);
        let down = (0.0, -1.0);
        let alpha = unsigned_angle(up, oracle_tangent(pa, pc));
        let beta = unsigned_angle(down, oracle_tangent(pb, pc));
        let gamma = unsigned_angle(oracle_tangent(pc, pa), oracle_tangent(pc, pb));

        let got = FiniteTriangle::new(a, b, c).unwrap().angles().unwrap();
        assert!((got[0] - alpha).abs() < 1e-10, "{got:?} vs {alpha}");
        assert!((got[1] - beta).abs() < 1e-10);
        assert!((got[2] - gamma).abs() < 1e-10);
        let pa = UhpPoint::new(pa.0, pa.1).unwrap();
        let pc = UhpPoint::new(pc.0, pc.1).unwrap();
        assert!((pa.distance(&pc) - b).abs() < 1e-12);
    }

    #[test]
    fn rejects_degenerate_triangles() {
        assert!(FiniteTriangle::new(1.0, 1.0, 2.0).is_err());
        assert!(FiniteTriangle::new(1.0, 1.0, 2.5).is_err());
        assert!(FiniteTriangle::new(0.0, 1.0, 1.0).is_err());
        assert!(FiniteTriangle::new(1e-13, 1.0, 1.0).is_err());
    }

    #[test]
    fn fixed_base_symmetry_and_cross_check() {
        let [a, b, _] = fixed_base_angles(1.0, 3.0, 1.5).unwrap();
        assert!((a - b).abs() < 1e-15);

        let direct = fixed_base_angles(1.0, 3.0, 1.2).unwrap();
        let generic = FiniteTriangle::new(3.0 - 1.2, 1.2, 1.0)
            .unwrap()
            .angles()
            .unwrap();
        for k in 0..3 {
            assert!((direct[k] - generic[k]).abs() < 1e-12);
        }

        // Flat limit: AB + AC = BC, so the angle at A opens up.
        let [alpha, beta, gamma] = fixed_base_angles(1.0, 3.0, 1.0 + 1e-9).unwrap();
        assert!((alpha - PI).abs() < 1e-3 && beta < 1e-3 && gamma < 1e-3);
    }

    #[test]
    fn fixed_base_domain() {
        assert!(fixed_base_angles(1.0, 3.0, 1.0).is_err());
        assert!(fixed_base_angles(1.0, 3.0, 2.0).is_err());
        assert!(fixed_base_angles(1.0, 0.5, 0.3).is_err());
        assert!(fixed_base_angle_sum_derivative(1.0, 3.0, 2.5).is_err());
    }

    #[test]
    fn angle_sum_derivative_examples() {
        let at_mid = fixed_base_angle_sum_derivative(1.0, 3.0, 1.5).unwrap();
        assert!(at_mid.abs() < 1e-12);
        assert!(fixed_base_angle_sum_derivative(1.0, 3.0, 1.7).unwrap() > 0.0);
        assert!(fixed_base_angle_sum_derivative(1.0, 3.0, 1.3).unwrap() < 0.0);

        let sum = |x: f64| fixed_base_angles(1.0, 3.0, x).unwrap().iter().sum::<f64>();
        let h = 1e-6;
        let fd = (sum(1.3 + h) - sum(1.3 - h)) / (2.0 * h);
        let closed = fixed_base_angle_sum_derivative(1.0, 3.0, 1.3).unwrap();
        assert!((fd - closed).abs() < 1e-6, "{fd} vs {closed}");
    }

    #[test]
    fn each_angle_derivative_matches_finite_difference() {
        let h = 1e-6;
        for &(c, l, x) in &[(1.0, 3.0, 1.3), (0.5, 4.0, 2.2), (2.0, 2.5, 1.0)] {
            let d = fixed_base_angle_derivatives(c, l, x).unwrap();
            let p = fixed_base_angles(c, l, x + h).unwrap();
            let m = fixed_base_angles(c, l, x - h).unwrap();
            for k in 0..3 {
                let fd = (p[k] - m[k]) / (2.0 * h);
                assert!(
                    (fd - d[k]).abs() < 1e-5,
                    "({c},{l},{x}) angle {k}: {fd} vs {}",
                    d[k]
                );
            }
        }
    }

    #[test]
    fn isosceles_closed_form() {
        let direct: f64 = fixed_base_angles(1.0, 3.0, 1.5).unwrap().iter().sum();
        assert!((isosceles_angle_sum(1.0, 3.0).unwrap() - direct).abs() < 1e-10);

        let seq: Vec<f64> = [2.0, 3.0, 4.0, 5.0]
            .iter()
            .map(|&l| isosceles_angle_sum(1.0, l).unwrap())
            .collect();
        assert!(seq.windows(2).all(|w| w[1] < w[0]), "{seq:?}");
        assert!((isosceles_angle_sum(1.0, 1.0 + 1e-9).unwrap() - PI).abs() < 1e-3);
        assert!(isosceles_angle_sum(1.0, 1.0).is_err());
    }

    #[test]
    fn cusp_triangle_areas() {
        let t = CuspTriangle::from_parts(2.0 * (1.0f64 + 2f64.sqrt()).ln(), PI / 4.0, PI / 4.0)
            .unwrap();
        assert!((t.area() - FRAC_PI_2).abs() < 1e-14);

        let l = 2.0 * (2f64.sqrt() + 1.0).ln();
        let s = CuspTriangle::symmetric(l).unwrap();
        assert!((s.theta - PI / 4.0).abs() < 1e-14);
        assert!((s.area() - FRAC_PI_2).abs() < 1e-14);

        let long = CuspTriangle::symmetric(60.0).unwrap();
        assert!((long.area() - PI).abs() < 1e-12);
    }

    #[test]
    fn derived_angle_satisfies_relation() {
        for &(l, theta) in &[(0.3, 0.2), (1.0, 1.0), (2.0, 2.5), (5.0, 0.05)] {
            let t = CuspTriangle::new(l, theta).unwrap();
            assert!(t.phi > 0.0 && t.theta + t.phi < PI);
            assert!(t.compatibility_residual() < 1e-12, "{t:?}");
        }
        assert!(CuspTriangle::from_parts(1.0, 1.0, 1.0).is_err());
        assert!(CuspTriangle::new(1.0, PI).is_err());
    }

    #[test]
    fn apex_examples() {
        let v = ideal_apex_angle_sum(1.0, 4.0, 2.0).unwrap();
        assert!((v - 2.0 * 0.8f64.asin()).abs() < 1e-14);
        assert!((v - 1.854590436003225).abs() < 1e-12);

        let edge = FRAC_PI_2 + (8.0f64 / 17.0).asin();
        assert!((ideal_apex_angle_sum(1.0, 4.0, 1.0).unwrap() - edge).abs() < 1e-14);
        assert!((ideal_apex_angle_sum(1.0, 4.0, 4.0).unwrap() - edge).abs() < 1e-14);

        assert!(ideal_apex_angle_sum(4.0, 1.0, 2.0).is_err());
        assert!(ideal_apex_angle_sum(1.0, 4.0, 0.0).is_err());
    }

    #[test]
    fn apex_grid_minimum() {
        let mut best = (f64::INFINITY, 0.0);
        let mut x = 0.05;
        while x < 20.0 {
            let v = ideal_apex_angle_sum(1.0, 4.0, x).unwrap();
            if v < best.0 {
                best = (v, x);
            }
            x += 0.001;
        }
        assert!((best.1 - 2.0).abs() <= 0.001 + 1e-9, "{best:?}");
    }

    #[test]
    fn apex_matches_tangent_geometry() {
        // Angles at ai and bi measured from the vertical side and the arcs to x.
        let (a, b) = (0.7, 2.9);
        for &x in &[0.2, 0.7, 1.3, 2.0, 2.9, 6.0] {
            let up = (0.0, 1.0);
            let down = (0.0, -1.0);
            let at_a = unsigned_angle(up, oracle_tangent((0.0, a), (x, 1e-9)));
            let at_b = unsigned_angle(down, oracle_tangent((0.0, b), (x, 1e-9)));
            let got = ideal_apex_angle_sum(a, b, x).unwrap();
            assert!(
                (got - (at_a + at_b)).abs() < 1e-7,
                "x={x}: {got} vs {}",
                at_a + at_b
            );
        }
    }

    #[test]
    fn boundary_geodesic_examples() {
        assert_eq!(boundary_geodesic(1.0, 1.0).unwrap(), (0.0, 1.0));
        let (c, r) = boundary_geodesic(1.0, 3.0).unwrap();
        assert!((c - 4.0 / 3.0).abs() < 1e-15 && (r - 5.0 / 3.0).abs() < 1e-15);
        assert!(boundary_geodesic(0.0, 1.0).is_err());
    }

    #[test]
    fn clamp_band() {
        assert_eq!(unit(1.0 + 5e-13, "t").unwrap(), 1.0);
        assert!(unit(1.0 + 1e-9, "t").is_err());
        assert!(unit(f64::NAN, "t").is_err());
    }
}
