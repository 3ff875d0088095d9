//! Gluing the complementary polygons along the edges dual to a spread forest.
//!
//! Each forest edge identifies two sides and merges the two corners at each
//! end of the shared primal edge; because the forest is spread, those merged
//! corners are straight and disappear, so every forest edge removes four
//! sides in total.

use serde::Serialize;

use super::map::{CombinatorialMap, FaceStructure};
use super::spread::SpreadForest;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GluedPolygon {
    /// Faces merged into this polygon.
    pub faces: Vec<usize>,
    pub forest_edges: usize,
    /// `Σ n(P_k)` over the merged faces.
    pub side_sum: usize,
    /// `n(Q)`, counted by walking the glued boundary.
    pub sides: usize,
    /// Straight corners created by the gluing.
    pub straight_corners: usize,
    pub punctured: bool,
}

impl GluedPolygon {
    /// `Σ n(P_k) - 4·(forest edges)`.
    pub fn expected_sides(&self) -> usize {
        self.side_sum - 4 * self.forest_edges
    }
}

pub fn glue_along_forest(
    map: &CombinatorialMap,
    faces: &FaceStructure,
    forest: &SpreadForest,
) -> Result<Vec<GluedPolygon>> {
    let spanned: usize = forest.components.iter().map(Vec::len).sum();
    if spanned != faces.count() {
        return Err(Error::invalid(format!(
            "forest covers {spanned} of {} faces",
            faces.count()
        )));
    }
    let edge_index = map.edge_index();
    let edges = map.edges();
    let mut in_forest = vec![false; map.edge_count()];
    for &e in &forest.edges {
        *in_forest
            .get_mut(e)
            .ok_or_else(|| Error::invalid(format!("forest edge {e} does not exist")))? = true;
    }
    let glued = |d: usize| in_forest[edge_index[d]];

    let mut component_of = vec![usize::MAX; faces.count()];
    for (c, verts) in forest.components.iter().enumerate() {
        for &f in verts {
            component_of[f] = c;
        }
    }
    let mut polygons = Vec::with_capacity(forest.components.len());
    for (c, verts) in forest.components.iter().enumerate() {
        let forest_edges = forest
            .edges
            .iter()
            .filter(|&&e| component_of[faces.face_of[edges[e][0]]] == c)
            .count();
        let boundary: Vec<usize> = (0..map.dart_count())
            .filter(|&d| component_of[faces.face_of[d]] == c && !glued(d))
            .collect();

        let (mut walked, mut skips) = (0usize, 0usize);
        if let Some(&start) = boundary.first() {
            let mut d = start;
            loop {
                walked += 1;
                if walked > boundary.len() {
                    return Err(Error::Inconsistent(format!(
                        "boundary walk of component {c} does not close"
                    )));
                }
                let mut x = map.face_step(d);
                let mut hops = 0;
                while glued(x) {
                    hops += 1;
                    if hops > 1 {
                        return Err(Error::Inconsistent(format!(
                            "corner before dart {x} is glued more than once; the forest is not spread"
                        )));
                    }
                    x = map.face_step(map.opposite(x));
                }
                skips += hops;
                d = x;
                if d == start {
                    break;
                }
            }
        }
        if walked != boundary.len() {
            return Err(Error::Inconsistent(format!(
                "glued boundary of component {c} splits into several cycles ({walked} of {} sides reached)",
                boundary.len()
            )));
        }
        let polygon = GluedPolygon {
            faces: verts.clone(),
            forest_edges,
            side_sum: verts.iter().map(|&f| faces.sides[f]).sum(),
            sides: boundary.len() - skips,
            straight_corners: skips,
            punctured: verts.contains(&faces.punctured_face),
        };
        if polygon.sides != polygon.expected_sides() {
            return Err(Error::Inconsistent(format!(
                "component {c}: boundary walk gives {} sides, side count identity gives {}",
                polygon.sides,
                polygon.expected_sides()
            )));
        }
        polygons.push(polygon);
    }
    Ok(polygons)
}
