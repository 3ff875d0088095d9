//! Polygonal cusps in the upper half-plane and their regular members.
//!
//! A cusp is stored with the puncture at `∞`: the boundary is the
//! `ω`-periodic piecewise-geodesic chain through `v_0, …, v_{p-1}`, closed by
//! the arc from `v_{p-1}` to `v_0 + ω`. The cusp region lies above the chain.
//! Vertices are ordered by strictly increasing `x` across one period.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperbolic::{ccw_angle, geodesic_center, symmetric_base_angle, CuspTriangle, UhpPoint};
use crate::json;

/// Tolerance for arc intersections in the embeddedness check.
pub const EMBED_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalCusp {
    vertices: Vec<UhpPoint>,
    width: f64,
}

/// A geodesic arc between two boundary vertices.
#[derive(Debug, Clone, Copy)]
struct Arc {
    start: UhpPoint,
    end: UhpPoint,
}

impl Arc {
    fn shifted(self, t: f64) -> Arc {
        Arc {
            start: self.start.scale_translate(1.0, t),
            end: self.end.scale_translate(1.0, t),
        }
    }

    fn x_range(&self) -> (f64, f64) {
        (self.start.x.min(self.end.x), self.start.x.max(self.end.x))
    }

    /// Interior crossing points of two arcs, ignoring shared endpoints.
    fn crosses(&self, other: &Arc) -> bool {
        let (a0, a1) = self.x_range();
        let (b0, b1) = other.x_range();
        let lo = a0.max(b0);
        let hi = a1.min(b1);
        if lo > hi + EMBED_TOL {
            return false;
        }
        let vertical_a = (a1 - a0).abs() <= EMBED_TOL;
        let vertical_b = (b1 - b0).abs() <= EMBED_TOL;
        let is_endpoint = |x: f64, y: f64| {
            [self.start, self.end, other.start, other.end]
                .iter()
                .any(|p| {
                    (p.x - x).abs() <= EMBED_TOL && (p.y - y).abs() <= EMBED_TOL * p.y.max(1.0)
                })
        };
        let y_on = |arc: &Arc, x: f64| -> Option<f64> {
            let c = geodesic_center(&arc.start, &arc.end);
            let r2 = (arc.start.x - c).powi(2) + arc.start.y.powi(2);
            let h = r2 - (x - c).powi(2);
            (h > 0.0).then(|| h.sqrt())
        };
        let y_span = |arc: &Arc| (arc.start.y.min(arc.end.y), arc.start.y.max(arc.end.y));
        match (vertical_a, vertical_b) {
            (true, true) => {
                if (a0 - b0).abs() > EMBED_TOL {
                    return false;
                }
                let (s0, s1) = y_span(self);
                let (t0, t1) = y_span(other);
                s0.max(t0) < s1.min(t1) - EMBED_TOL
            }
            (true, false) | (false, true) => {
                let (v, c) = if vertical_a {
                    (self, other)
                } else {
                    (other, self)
                };
                let x = v.start.x;
                match y_on(c, x) {
                    Some(y) => {
                        let (s0, s1) = y_span(v);
                        y >= s0 - EMBED_TOL && y <= s1 + EMBED_TOL && !is_endpoint(x, y)
                    }
                    None => false,
                }
            }
            (false, false) => {
                let c1 = geodesic_center(&self.start, &self.end);
                let c2 = geodesic_center(&other.start, &other.end);
                let r1 = (self.start.x - c1).powi(2) + self.start.y.powi(2);
                let r2 = (other.start.x - c2).powi(2) + other.start.y.powi(2);
                if (c1 - c2).abs() <= EMBED_TOL {
                    // Same geodesic: overlap of x ranges with positive length.
                    return (r1 - r2).abs() <= EMBED_TOL * r1.max(1.0) && hi - lo > EMBED_TOL;
                }
                let x = (r1 - r2 + c2 * c2 - c1 * c1) / (2.0 * (c2 - c1));
                if x < lo - EMBED_TOL || x > hi + EMBED_TOL {
                    return false;
                }
                match y_on(self, x) {
                    Some(y) => !is_endpoint(x, y),
                    None => false,
                }
            }
        }
    }
}

impl PolygonalCusp {
    /// Validate and build a cusp from its vertex chain and parabolic width.
    pub fn new(vertices: Vec<UhpPoint>, width: f64) -> Result<Self> {
        let p = vertices.len();
        if p < 3 {
            return Err(Error::invalid(format!(
                "a polygonal cusp needs at least 3 vertices, got {p}"
            )));
        }
        if !(width.is_finite() && width > 0.0) {
            return Err(Error::invalid(format!(
                "width must be positive, got {width}"
            )));
        }
        for (k, v) in vertices.iter().enumerate() {
            UhpPoint::new(v.x, v.y).map_err(|e| Error::invalid(format!("vertex {k}: {e}")))?;
        }
        for k in 0..p {
            let next_x = if k + 1 < p {
                vertices[k + 1].x
            } else {
                vertices[0].x + width
            };
            if next_x <= vertices[k].x {
                return Err(Error::invalid(format!(
                    "vertex {k}: x must strictly increase along one period (next x {next_x} ≤ {})",
                    vertices[k].x
                )));
            }
        }
        let cusp = Self { vertices, width };
        cusp.check_embedded()?;
        for (k, a) in cusp.angles().into_iter().enumerate() {
            if !(a > 0.0 && a < PI) {
                return Err(Error::invalid(format!(
                    "interior angle {a} at vertex {k} outside (0, π)"
                )));
            }
        }
        Ok(cusp)
    }

    pub fn vertices(&self) -> &[UhpPoint] {
        &self.vertices
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn side_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex `k` of the periodic lift, for any integer `k`.
    fn lift(&self, k: isize) -> UhpPoint {
        let p = self.vertices.len() as isize;
        let period = k.div_euclid(p);
        let v = self.vertices[k.rem_euclid(p) as usize];
        v.scale_translate(1.0, period as f64 * self.width)
    }

    fn arc(&self, k: usize) -> Arc {
        Arc {
            start: self.lift(k as isize),
            end: self.lift(k as isize + 1),
        }
    }

    fn check_embedded(&self) -> Result<()> {
        let p = self.vertices.len();
        for i in 0..p {
            for j in i..p {
                for shift in [-1.0, 0.0, 1.0] {
                    if i == j && shift == 0.0 {
                        continue;
                    }
                    let a = self.arc(i);
                    let b = self.arc(j).shifted(shift * self.width);
                    if a.crosses(&b) {
                        return Err(Error::invalid(format!(
                            "boundary arcs {i} and {j} (shift {shift}) intersect"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Hyperbolic lengths of the `p` sides.
    pub fn side_lengths(&self) -> Vec<f64> {
        (0..self.vertices.len())
            .map(|k| self.lift(k as isize).distance(&self.lift(k as isize + 1)))
            .collect()
    }

    pub fn perimeter(&self) -> f64 {
        self.side_lengths().iter().sum()
    }

    /// Interior angles on the cusp side, measured from arc tangents.
    pub fn angles(&self) -> Vec<f64> {
        (0..self.vertices.len() as isize)
            .map(|k| {
                let v = self.lift(k);
                let forward = v.tangent_toward(&self.lift(k + 1));
                let backward = v.tangent_toward(&self.lift(k - 1));
                ccw_angle(forward, backward)
            })
            .collect()
    }

    /// Angle defect `pπ - Σ angles`.
    pub fn area(&self) -> f64 {
        let p = self.vertices.len() as f64;
        p * PI - self.angles().iter().sum::<f64>()
    }

    /// Triangulation by vertical geodesics to the cusp point: triangle `k`
    /// has finite vertices `v_k`, `v_{k+1}` and base angles read off the
    /// semicircle parametrization `c + R e^{iψ}` (`θ = π - ψ_start`,
    /// `φ = ψ_end`).
    pub fn triangles(&self) -> Result<Vec<CuspTriangle>> {
        (0..self.vertices.len())
            .map(|k| {
                let (s, e) = (self.lift(k as isize), self.lift(k as isize + 1));
                let c = geodesic_center(&s, &e);
                let psi_s = s.y.atan2(s.x - c);
                let psi_e = e.y.atan2(e.x - c);
                CuspTriangle::from_parts(s.distance(&e), PI - psi_s, psi_e)
            })
            .collect()
    }

    /// Image under `z ↦ λz + t`, with the width scaled to match.
    pub fn transform(&self, lambda: f64, t: f64) -> Result<Self> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.scale_translate(lambda, t))
            .collect();
        Self::new(vertices, lambda * self.width)
    }

    /// Translate and scale so the first vertex sits at `i`.
    pub fn normalized(&self) -> Result<Self> {
        let v0 = self.vertices[0];
        self.transform(1.0 / v0.y, -v0.x / v0.y)
    }
}

/// Serialized form of a [`PolygonalCusp`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolygonalCuspDoc {
    #[serde(serialize_with = "json::pairs")]
    pub vertices: Vec<[f64; 2]>,
    #[serde(serialize_with = "json::real")]
    pub width: f64,
}

impl From<&PolygonalCusp> for PolygonalCuspDoc {
    fn from(c: &PolygonalCusp) -> Self {
        Self {
            vertices: c.vertices.iter().map(|v| [v.x, v.y]).collect(),
            width: c.width,
        }
    }
}

impl TryFrom<PolygonalCuspDoc> for PolygonalCusp {
    type Error = Error;

    fn try_from(doc: PolygonalCuspDoc) -> Result<Self> {
        let vertices = doc
            .vertices
            .iter()
            .map(|&[x, y]| UhpPoint::new(x, y))
            .collect::<Result<Vec<_>>>()?;
        PolygonalCusp::new(vertices, doc.width)
    }
}

impl Serialize for PolygonalCusp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolygonalCuspDoc::from(self).serialize(s)
    }
}

/// Interior angle of the regular cusp with side `l`: `2 asin(2e^{l/2} / (1 + e^l))`.
pub fn regular_angle(l: f64) -> f64 {
    2.0 * symmetric_base_angle(l)
}

/// Side length of the regular cusp with interior angle `θ`: `2 ln cot(θ/4)`.
pub fn regular_side(theta: f64) -> f64 {
    2.0 * (1.0 / (theta / 4.0).tan()).ln()
}

/// A regular polygonal cusp: `p` sides of length `l`, every interior angle `theta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegularCusp {
    pub p: usize,
    #[serde(serialize_with = "json::real")]
    pub l: f64,
    #[serde(serialize_with = "json::real")]
    pub theta: f64,
}

fn check_sides(p: usize) -> Result<()> {
    if p < 3 {
        return Err(Error::invalid(format!(
            "side count must be at least 3, got {p}"
        )));
    }
    Ok(())
}

impl RegularCusp {
    /// The area maximizer among `p`-sided cusps of perimeter `perimeter`.
    pub fn from_perimeter(p: usize, perimeter: f64) -> Result<Self> {
        check_sides(p)?;
        if !(perimeter.is_finite() && perimeter > 0.0) {
            return Err(Error::invalid(format!(
                "perimeter must be positive, got {perimeter}"
            )));
        }
        let l = perimeter / p as f64;
        Ok(Self {
            p,
            l,
            theta: regular_angle(l),
        })
    }

    /// The regular cusp with prescribed interior angle.
    pub fn from_angle(p: usize, theta: f64) -> Result<Self> {
        check_sides(p)?;
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::invalid(format!(
                "interior angle must lie in (0, π), got {theta}"
            )));
        }
        Ok(Self {
            p,
            l: regular_side(theta),
            theta,
        })
    }

    /// The perimeter minimizer among `p`-sided cusps of area `area`.
    pub fn from_area(p: usize, area: f64) -> Result<Self> {
        check_sides(p)?;
        let max = p as f64 * PI;
        if !(area > 0.0 && area < max) {
            return Err(Error::invalid(format!(
                "area must lie in (0, {max}), got {area}"
            )));
        }
        Self::from_angle(p, PI - area / p as f64)
    }

    pub fn perimeter(&self) -> f64 {
        self.p as f64 * self.l
    }

    pub fn area(&self) -> f64 {
        self.p as f64 * (PI - self.theta)
    }

    /// Explicit vertex chain: `v_k = k·w + i` with `w = 2 sinh(l/2)`, the
    /// orbit of `i` under the parabolic rotation `z ↦ z + w` about the cusp.
    pub fn realize(&self) -> Result<PolygonalCusp> {
        let w = 2.0 * (self.l / 2.0).sinh();
        let vertices = (0..self.p)
            .map(|k| UhpPoint {
                x: k as f64 * w,
                y: 1.0,
            })
            .collect();
        PolygonalCusp::new(vertices, self.p as f64 * w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn silver() -> f64 {
        (2f64.sqrt() + 1.0).ln()
    }

    fn pt(x: f64, y: f64) -> UhpPoint {
        UhpPoint::new(x, y).unwrap()
    }

    fn sample_cusp() -> PolygonalCusp {
        PolygonalCusp::new(
            vec![pt(0.0, 1.0), pt(0.9, 1.3), pt(2.1, 0.8), pt(3.0, 1.1)],
            4.2,
        )
        .unwrap()
    }

    /// Arc length by quadrature of `|dz| / y` along the semicircle.
    fn quadrature_length(a: UhpPoint, b: UhpPoint) -> f64 {
        let c = geodesic_center(&a, &b);
        let r = (a.x - c).hypot(a.y);
        let (t0, t1) = (a.y.atan2(a.x - c), b.y.atan2(b.x - c));
        let n = 20_000;
        let h = (t1 - t0) / n as f64;
        // Simpson on r / (r sin t) = 1 / sin t.
        let f = |t: f64| r / (r * t.sin());
        let mut s = f(t0) + f(t1);
        for k in 1..n {
            let t = t0 + k as f64 * h;
            s += if k % 2 == 1 { 4.0 } else { 2.0 } * f(t);
        }
        (s * h / 3.0).abs()
    }

    #[test]
    fn vertical_distance_is_log_ratio() {
        let (a, b) = (0.7, 3.1);
        assert!((pt(0.0, a).distance(&pt(0.0, b)) - (b / a).ln()).abs() < 1e-14);
    }

    #[test]
    fn side_lengths_scale_invariant_and_match_quadrature() {
        let c = sample_cusp();
        let scaled = c.transform(2.7, -1.3).unwrap();
        for (x, y) in c.side_lengths().iter().zip(scaled.side_lengths()) {
            assert!((x - y).abs() < 1e-12);
        }
        let lens = c.side_lengths();
        for k in 0..4 {
            let q = quadrature_length(c.lift(k), c.lift(k + 1));
            assert!(
                (lens[k as usize] - q).abs() < 1e-7,
                "side {k}: {} vs {q}",
                lens[k as usize]
            );
        }
    }

    #[test]
    fn angles_agree_with_triangulation() {
        let c = sample_cusp();
        let tri = c.triangles().unwrap();
        let angles = c.angles();
        let p = tri.len();
        for k in 0..p {
            let from_tri = tri[(k + p - 1) % p].phi + tri[k].theta;
            assert!((angles[k] - from_tri).abs() < 1e-9, "vertex {k}");
        }
        let area_tri: f64 = tri.iter().map(|t| t.area()).sum();
        assert!((c.area() - area_tri).abs() < 1e-9);
        assert!(c.area() > 0.0 && c.area() < 4.0 * PI);
    }

    #[test]
    fn mirror_symmetric_angles_are_palindromic() {
        // Reflection x ↦ -x maps the chain to itself up to relabelling.
        let c = PolygonalCusp::new(vec![pt(0.0, 1.0), pt(1.0, 1.4), pt(2.0, 1.0)], 3.0).unwrap();
        let a = c.angles();
        // Vertex 1 is the axis of symmetry; vertices 0 and 2 are mirror images.
        assert!((a[0] - a[2]).abs() < 1e-12, "{a:?}");
        let b = PolygonalCusp::new(
            vec![pt(0.0, 1.0), pt(1.0, 1.5), pt(2.5, 1.5), pt(3.5, 1.0)],
            4.2,
        )
        .unwrap()
        .angles();
        assert!(
            (b[1] - b[2]).abs() < 1e-12 && (b[0] - b[3]).abs() < 1e-12,
            "{b:?}"
        );
    }

    #[test]
    fn rejects_invalid_chains() {
        assert!(PolygonalCusp::new(vec![pt(0.0, 1.0), pt(1.0, 1.0)], 2.0).is_err());
        assert!(PolygonalCusp::new(vec![pt(0.0, 1.0), pt(1.0, 1.0), pt(1.0, 2.0)], 3.0).is_err());
        assert!(PolygonalCusp::new(vec![pt(0.0, 1.0), pt(1.0, 1.0), pt(2.0, 1.0)], -1.0).is_err());
        // A tall spike makes an interior angle exceed π.
        assert!(PolygonalCusp::new(vec![pt(0.0, 1.0), pt(1.0, 3.0), pt(2.0, 1.0)], 3.0).is_err());
    }

    #[test]
    fn regular_examples() {
        let rc = RegularCusp::from_perimeter(4, 8.0 * silver()).unwrap();
        assert!((rc.theta - FRAC_PI_2).abs() < 1e-14);
        let rc = RegularCusp::from_perimeter(6, 12.0).unwrap();
        let expected = 2.0 * (2.0 * 1f64.exp() / (1.0 + 2f64.exp())).asin();
        assert!((rc.theta - expected).abs() < 1e-14);
        assert!((rc.theta - 1.410_053_687_110_476).abs() < 1e-12);
        let tiny = RegularCusp::from_perimeter(5, 1e-8).unwrap();
        assert!((tiny.theta - PI).abs() < 1e-8);

        let rc = RegularCusp::from_angle(4, FRAC_PI_2).unwrap();
        assert!((rc.l - 2.0 * silver()).abs() < 1e-14);
        assert!(RegularCusp::from_angle(4, PI - 1e-9).unwrap().l < 1e-8);
        assert!(RegularCusp::from_angle(4, PI).is_err());
        assert!(RegularCusp::from_angle(2, 1.0).is_err());

        let rc = RegularCusp::from_area(12, 6.0 * PI).unwrap();
        assert!((rc.theta - FRAC_PI_2).abs() < 1e-14);
        assert!((rc.perimeter() - 24.0 * silver()).abs() < 1e-12);
        assert!((rc.perimeter() - 21.152_966_088_469_03).abs() < 1e-10);
        let rc = RegularCusp::from_area(4, 2.0 * PI).unwrap();
        assert!((rc.perimeter() - 8.0 * silver()).abs() < 1e-13);
        let small = RegularCusp::from_area(4, 1e-9).unwrap();
        assert!(small.perimeter() < 1e-8 && (small.theta - PI).abs() < 1e-9);
        assert!(RegularCusp::from_area(4, 4.0 * PI).is_err());
        assert!(RegularCusp::from_area(4, 0.0).is_err());
    }

    #[test]
    fn round_trip_perimeter_angle() {
        for &(p, big_l) in &[(3, 0.5), (4, 7.0), (9, 30.0)] {
            let a = RegularCusp::from_perimeter(p, big_l).unwrap();
            let b = RegularCusp::from_angle(p, a.theta).unwrap();
            assert!((b.perimeter() - big_l).abs() < 1e-10);
        }
    }

    #[test]
    fn realized_square_cusp() {
        let rc = RegularCusp::from_angle(4, FRAC_PI_2).unwrap();
        let c = rc.realize().unwrap();
        assert!((c.area() - 2.0 * PI).abs() < 1e-9);
        for a in c.angles() {
            assert!((a - FRAC_PI_2).abs() < 1e-9);
        }
        for l in c.side_lengths() {
            assert!((l - rc.l).abs() < 1e-9);
        }
        assert_eq!(c.vertices()[0], pt(0.0, 1.0));
    }

    #[test]
    fn realized_cusps_match_formulas() {
        for &(p, l) in &[(3, 0.2), (5, 1.0), (8, 2.5), (12, 4.0)] {
            let rc = RegularCusp::from_perimeter(p, p as f64 * l).unwrap();
            let c = rc.realize().unwrap();
            let dev = c
                .side_lengths()
                .iter()
                .map(|x| (x - rc.l).abs())
                .fold(0.0, f64::max);
            assert!(dev <= 1e-9);
            assert!((c.area() - p as f64 * (PI - rc.theta)).abs() < 1e-9);
            assert!((c.area() - rc.area()).abs() < 1e-9);
        }
    }

    #[test]
    fn json_round_trip() {
        let c = sample_cusp();
        let s = serde_json::to_string(&c).unwrap();
        let doc: PolygonalCuspDoc = serde_json::from_str(&s).unwrap();
        let back = PolygonalCusp::try_from(doc).unwrap();
        assert_eq!(back, c);
        let rc = RegularCusp::from_perimeter(4, 3.0).unwrap();
        let back: RegularCusp = serde_json::from_str(&serde_json::to_string(&rc).unwrap()).unwrap();
        assert_eq!(back, rc);
    }
}
