//! From a filling pair to the length bound: faces, genus, dual graph, spread
//! forest, gluing, and the regular right-angled cusp that bounds the length.

use std::f64::consts::PI;

use serde::Serialize;

use super::dual::dual_graph;
use super::glue::{glue_along_forest, GluedPolygon};
use super::map::{compute_faces, genus_of, CombinatorialMap, Curve, GenusData};
use super::spread::{check_spread_forest, find_spread_forest, SpreadForest};
use crate::cusp::RegularCusp;
use crate::error::{Error, Result};
use crate::json;
use crate::optimize::{perimeter_comparison, PerimeterComparison};

/// `(8g - 4) ln(√2 + 1)`.
pub fn length_lower_bound(g: usize) -> Result<f64> {
    if g < 1 {
        return Err(Error::invalid(format!("genus must be at least 1, got {g}")));
    }
    Ok((8 * g - 4) as f64 * (2f64.sqrt() + 1.0).ln())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparationCase {
    /// At least one curve does not separate: glue along a spread tree.
    NonSeparating,
    /// Both curves separate: glue each side of `α` along a spread forest.
    BothSeparating,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegerIdentity {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

fn identity(name: impl Into<String>, lhs: usize, rhs: usize) -> IntegerIdentity {
    IntegerIdentity {
        name: name.into(),
        lhs: lhs as i64,
        rhs: rhs as i64,
        holds: lhs == rhs,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub genus: GenusData,
    pub face_sides: Vec<usize>,
    pub punctured_face: usize,
    pub alpha_separating: bool,
    pub beta_separating: bool,
    pub case: SeparationCase,
    pub spread_forest: SpreadForest,
    pub search_nodes: u64,
    pub polygons: Vec<GluedPolygon>,
    /// `n(Q)` of the glued polygon holding the puncture.
    pub cusp_sides: usize,
    /// Area of that polygon, `2π(2g - 1)`, in the right-angled extremal case.
    #[serde(serialize_with = "json::real")]
    pub cusp_area: f64,
    /// Least perimeter of an `(8g - 4)`-sided cusp of that area.
    #[serde(serialize_with = "json::real")]
    pub regular_perimeter: f64,
    #[serde(serialize_with = "json::real")]
    pub bound: f64,
    pub identities: Vec<IntegerIdentity>,
    /// Compact-plus-cusp comparison used when both curves separate.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<PerimeterComparison>,
    pub passed: bool,
}

/// Run the whole chain on `map`. Structural failures are errors; the
/// identities are reported individually and summarized in `passed`.
pub fn verify_bound_pipeline(map: &CombinatorialMap) -> Result<PipelineReport> {
    let faces = compute_faces(map)?;
    let genus = genus_of(map, &faces)?;
    let dual = dual_graph(map, &faces);
    let alpha_separating = dual.separates(Curve::Alpha);
    let beta_separating = dual.separates(Curve::Beta);
    let g = genus.g;

    let mut identities = vec![
        identity("sum of face sides = 4i", faces.side_total(), 4 * genus.i),
        identity(
            "sum of face sides = 8g - 8 + 4r",
            faces.side_total(),
            8 * g + 4 * genus.r - 8,
        ),
        identity("i = 2g - 2 + r", genus.i, 2 * g + genus.r - 2),
        identity("dual edges = 2i", dual.edge_count(), 2 * genus.i),
        identity("dual vertices = r", dual.vertex_count, genus.r),
    ];

    let (case, components, mask) = if alpha_separating && beta_separating {
        let mask: Vec<bool> = dual.edge_curve.iter().map(|&c| c == Curve::Beta).collect();
        (SeparationCase::BothSeparating, 2, Some(mask))
    } else {
        (SeparationCase::NonSeparating, 1, None)
    };
    let search = find_spread_forest(&dual, components, mask.as_deref())?;
    let forest = search.forest.ok_or_else(|| {
        Error::Inconsistent(format!(
            "no spread spanning forest with {components} component(s) after {} search nodes",
            search.nodes
        ))
    })?;
    check_spread_forest(&dual, &forest.edges, components)?;
    let polygons = glue_along_forest(map, &faces, &forest)?;
    for (k, p) in polygons.iter().enumerate() {
        identities.push(identity(
            format!("n(Q{k}) = sum n(P) - 4 * forest edges"),
            p.sides,
            p.expected_sides(),
        ));
    }

    let cusp = polygons
        .iter()
        .find(|p| p.punctured)
        .ok_or_else(|| Error::Inconsistent("no glued polygon holds the puncture".into()))?;
    let mut comparison = None;
    match case {
        SeparationCase::NonSeparating => {
            identities.push(identity("n(Q) = 8g - 4", cusp.sides, 8 * g - 4));
        }
        SeparationCase::BothSeparating => {
            let mut genus_sum = 0;
            for (k, p) in polygons.iter().enumerate() {
                // A side of α with r_j faces has genus (i - 2 r_j + 2) / 4.
                let twice = 2 * genus.i + 4;
                let gj = twice.checked_sub(4 * p.faces.len()).map_or(0, |v| v / 8);
                genus_sum += gj;
                identities.push(identity(format!("n(Q{k}) = 8 g{k}"), p.sides, 8 * gj));
            }
            identities.push(identity("g1 + g2 = g", genus_sum, g));
            if let Some(compact) = polygons.iter().find(|p| !p.punctured) {
                let c = perimeter_comparison(compact.sides, cusp.sides)?;
                identities.push(identity("n1 + n2 - 4 = 8g - 4", c.m, 8 * g - 4));
                comparison = Some(c);
            }
        }
    }

    let cusp_area = 2.0 * PI * (2 * g - 1) as f64;
    let regular_perimeter = RegularCusp::from_area(8 * g - 4, cusp_area)?.perimeter();
    let bound = length_lower_bound(g)?;
    let passed = identities.iter().all(|c| c.holds)
        && comparison.as_ref().is_none_or(|c| c.holds)
        && (regular_perimeter / 2.0 - bound).abs() <= 1e-12 * bound;
    Ok(PipelineReport {
        genus,
        face_sides: faces.sides.clone(),
        punctured_face: faces.punctured_face,
        alpha_separating,
        beta_separating,
        case,
        spread_forest: forest,
        search_nodes: search.nodes,
        cusp_sides: cusp.sides,
        polygons,
        cusp_area,
        regular_perimeter,
        bound,
        identities,
        comparison,
        passed,
    })
}
