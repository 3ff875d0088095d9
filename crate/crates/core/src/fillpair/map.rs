//! Combinatorial maps of a pair of transverse curves.
//!
//! Darts are half-edges. `σ` (vertex rotation) cycles the four darts at a
//! crossing counterclockwise; `α` (edge involution) swaps the two darts of an
//! edge. Faces are the cycles of `φ = σ ∘ α`: from dart `d`, cross the edge
//! to `α(d)` and turn to the next dart around that vertex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Curve {
    #[serde(rename = "A")]
    Alpha,
    #[serde(rename = "B")]
    Beta,
}

impl Curve {
    pub fn other(self) -> Self {
        match self {
            Curve::Alpha => Curve::Beta,
            Curve::Beta => Curve::Alpha,
        }
    }
}

/// On-disk form of a map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub darts: usize,
    pub vertex_rotation: Vec<Vec<usize>>,
    pub edge_involution: Vec<[usize; 2]>,
    pub labels: BTreeMap<String, Curve>,
    pub punctured_face: usize,
}

/// A validated 4-valent map whose edges belong to two simple closed curves
/// crossing transversally at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialMap {
    rotation: Vec<usize>,
    involution: Vec<usize>,
    labels: Vec<Curve>,
    vertex_of: Vec<usize>,
    vertices: Vec<Vec<usize>>,
    punctured_face: usize,
}

fn bad(dart: usize, reason: impl Into<String>) -> Error {
    Error::InvalidMap {
        dart,
        reason: reason.into(),
    }
}

impl CombinatorialMap {
    /// Validate raw permutations. `vertices` lists each rotation cycle.
    pub fn new(
        vertices: Vec<Vec<usize>>,
        involution: Vec<usize>,
        labels: Vec<Curve>,
        punctured_face: usize,
    ) -> Result<Self> {
        let n = involution.len();
        if n == 0 {
            return Err(Error::invalid("map has no darts"));
        }
        if labels.len() != n {
            return Err(Error::invalid(format!(
                "{} labels for {n} darts",
                labels.len()
            )));
        }

        let mut rotation = vec![usize::MAX; n];
        let mut vertex_of = vec![usize::MAX; n];
        for (v, cycle) in vertices.iter().enumerate() {
            if cycle.len() != 4 {
                let d = cycle.first().copied().unwrap_or(0);
                return Err(bad(
                    d,
                    format!("vertex {v} has valence {}, expected 4", cycle.len()),
                ));
            }
            for (k, &d) in cycle.iter().enumerate() {
                if d >= n {
                    return Err(bad(d, format!("dart out of range 0..{n}")));
                }
                if vertex_of[d] != usize::MAX {
                    return Err(bad(d, "dart appears in two rotation slots"));
                }
                vertex_of[d] = v;
                rotation[d] = cycle[(k + 1) % 4];
            }
        }
        if let Some(d) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(bad(d, "dart missing from the vertex rotation"));
        }

        for (d, &e) in involution.iter().enumerate() {
            if e >= n {
                return Err(bad(d, format!("involution image {e} out of range")));
            }
            if e == d {
                return Err(bad(d, "fixed point of the edge involution"));
            }
            if involution[e] != d {
                return Err(bad(d, "edge involution is not an involution"));
            }
            if labels[e] != labels[d] {
                return Err(bad(d, "edge joins darts of different curves"));
            }
        }

        for cycle in &vertices {
            for k in 0..4 {
                if labels[cycle[k]] == labels[cycle[(k + 1) % 4]] {
                    return Err(bad(
                        cycle[k],
                        "curve labels do not alternate around the vertex",
                    ));
                }
            }
        }

        let map = Self {
            rotation,
            involution,
            labels,
            vertex_of,
            vertices,
            punctured_face,
        };
        for curve in [Curve::Alpha, Curve::Beta] {
            let passes = map.curve_passes(curve);
            if passes.len() != 2 {
                let d = passes.get(2).or(passes.first()).map_or(0, |p| p[0]);
                return Err(bad(
                    d,
                    format!(
                        "curve {curve:?} splits into {} closed components",
                        passes.len() / 2
                    ),
                ));
            }
        }
        Ok(map)
    }

    pub fn from_document(doc: &MapDocument) -> Result<Self> {
        let n = doc.darts;
        let mut involution = vec![usize::MAX; n];
        for pair in &doc.edge_involution {
            if pair[0] == pair[1] {
                return Err(bad(pair[0], "fixed point of the edge involution"));
            }
            for (a, b) in [(pair[0], pair[1]), (pair[1], pair[0])] {
                if a >= n {
                    return Err(bad(a, format!("dart out of range 0..{n}")));
                }
                if involution[a] != usize::MAX {
                    return Err(bad(a, "dart appears in two involution pairs"));
                }
                involution[a] = b;
            }
        }
        if let Some(d) = involution.iter().position(|&e| e == usize::MAX) {
            return Err(bad(d, "dart missing from the edge involution"));
        }
        let mut labels = vec![None; n];
        for (key, &curve) in &doc.labels {
            let d: usize = key
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("label key {key:?} is not a dart index")))?;
            if d >= n {
                return Err(bad(d, format!("labelled dart out of range 0..{n}")));
            }
            labels[d] = Some(curve);
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(d, c)| c.ok_or_else(|| bad(d, "dart has no curve label")))
            .collect::<Result<Vec<_>>>()?;
        Self::new(
            doc.vertex_rotation.clone(),
            involution,
            labels,
            doc.punctured_face,
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_document(&serde_json::from_str(text)?)
    }

    pub fn to_document(&self) -> MapDocument {
        let mut edge_involution: Vec<[usize; 2]> = (0..self.dart_count())
            .filter(|&d| d < self.involution[d])
            .map(|d| [d, self.involution[d]])
            .collect();
        edge_involution.sort_unstable();
        MapDocument {
            darts: self.dart_count(),
            vertex_rotation: self.vertices.clone(),
            edge_involution,
            labels: self
                .labels
                .iter()
                .enumerate()
                .map(|(d, &c)| (d.to_string(), c))
                .collect(),
            punctured_face: self.punctured_face,
        }
    }

    pub fn dart_count(&self) -> usize {
        self.involution.len()
    }

    /// Number of crossings `i(α, β)`.
    pub fn intersections(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.dart_count() / 2
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    /// `σ(d)`.
    pub fn rotate(&self, d: usize) -> usize {
        self.rotation[d]
    }

    /// `α(d)`.
    pub fn opposite(&self, d: usize) -> usize {
        self.involution[d]
    }

    /// `φ(d) = σ(α(d))`, the next dart along the face of `d`.
    pub fn face_step(&self, d: usize) -> usize {
        self.rotation[self.involution[d]]
    }

    pub fn label(&self, d: usize) -> Curve {
        self.labels[d]
    }

    pub fn punctured_face(&self) -> usize {
        self.punctured_face
    }

    /// Edges as `[d, α(d)]` with `d < α(d)`, ordered by `d`.
    pub fn edges(&self) -> Vec<[usize; 2]> {
        (0..self.dart_count())
            .filter(|&d| d < self.involution[d])
            .map(|d| [d, self.involution[d]])
            .collect()
    }

    /// Index into [`Self::edges`] for every dart.
    pub fn edge_index(&self) -> Vec<usize> {
        let mut index = vec![0; self.dart_count()];
        for (k, [a, b]) in self.edges().into_iter().enumerate() {
            index[a] = k;
            index[b] = k;
        }
        index
    }

    /// Orbits of "cross the edge, go straight through the vertex" on the
    /// darts of `curve`. A simple closed curve gives two, one per direction.
    pub fn curve_passes(&self, curve: Curve) -> Vec<Vec<usize>> {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut passes = Vec::new();
        for start in 0..n {
            if seen[start] || self.labels[start] != curve {
                continue;
            }
            let mut pass = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                pass.push(d);
                d = self.rotation[self.rotation[self.involution[d]]];
            }
            passes.push(pass);
        }
        passes
    }
}

/// Faces of a map: cycles of `φ`, each listed from its least dart and
/// ordered by that dart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceStructure {
    pub faces: Vec<Vec<usize>>,
    /// `n(P_k)`: sides (equivalently corners) of each face.
    pub sides: Vec<usize>,
    pub punctured_face: usize,
    #[serde(skip)]
    pub face_of: Vec<usize>,
}

impl FaceStructure {
    pub fn count(&self) -> usize {
        self.faces.len()
    }

    pub fn side_total(&self) -> usize {
        self.sides.iter().sum()
    }
}

pub fn compute_faces(map: &CombinatorialMap) -> Result<FaceStructure> {
    let n = map.dart_count();
    let mut face_of = vec![usize::MAX; n];
    let mut faces = Vec::new();
    for start in 0..n {
        if face_of[start] != usize::MAX {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while face_of[d] == usize::MAX {
            face_of[d] = faces.len();
            face.push(d);
            d = map.face_step(d);
        }
        faces.push(face);
    }
    if map.punctured_face() >= faces.len() {
        return Err(Error::invalid(format!(
            "punctured face {} does not exist; the map has {} faces",
            map.punctured_face(),
            faces.len()
        )));
    }
    let sides = faces.iter().map(Vec::len).collect::<Vec<_>>();
    let total: usize = sides.iter().sum();
    if total != 4 * map.intersections() {
        return Err(Error::Inconsistent(format!(
            "face sides sum to {total}, expected {}",
            4 * map.intersections()
        )));
    }
    Ok(FaceStructure {
        faces,
        sides,
        punctured_face: map.punctured_face(),
        face_of,
    })
}

/// Genus and the counts entering `i = 2g - 2 + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenusData {
    pub g: usize,
    pub r: usize,
    pub i: usize,
}

/// `g = (i - r + 2) / 2` from `V - E + F = i - 2i + r = 2 - 2g`.
pub fn genus_of(map: &CombinatorialMap, faces: &FaceStructure) -> Result<GenusData> {
    let (i, r) = (map.intersections() as i64, faces.count() as i64);
    let twice = i - r + 2;
    if twice <= 0 || twice % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "Euler count i - r + 2 = {twice} does not give a positive integer genus; \
             the curves do not fill a once-punctured surface of genus ≥ 1"
        )));
    }
    Ok(GenusData {
        g: (twice / 2) as usize,
        r: r as usize,
        i: i as usize,
    })
}
