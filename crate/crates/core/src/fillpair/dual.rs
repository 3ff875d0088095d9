//! Dual graph of the curve pair: a vertex per face, an edge per primal edge.

use serde::Serialize;

use super::map::{CombinatorialMap, Curve, FaceStructure};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub vertex_count: usize,
    /// Endpoints of dual edge `k`: the faces of the two darts of primal edge `k`.
    pub edges: Vec<[usize; 2]>,
    /// Curve that primal edge `k` belongs to.
    pub edge_curve: Vec<Curve>,
    /// Dual edges around each dual vertex in the boundary order of its face.
    /// A loop occupies two slots.
    pub rotation: Vec<Vec<usize>>,
}

pub fn dual_graph(map: &CombinatorialMap, faces: &FaceStructure) -> DualGraph {
    let index = map.edge_index();
    let primal = map.edges();
    DualGraph {
        vertex_count: faces.count(),
        edges: primal
            .iter()
            .map(|&[a, b]| [faces.face_of[a], faces.face_of[b]])
            .collect(),
        edge_curve: primal.iter().map(|&[a, _]| map.label(a)).collect(),
        rotation: faces
            .faces
            .iter()
            .map(|face| face.iter().map(|&d| index[d]).collect())
            .collect(),
    }
}

impl DualGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Connected components using only edges allowed by `mask`, as sorted
    /// vertex lists ordered by least vertex.
    pub fn components(&self, mask: Option<&[bool]>) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertex_count);
        for (k, &[a, b]) in self.edges.iter().enumerate() {
            if mask.is_none_or(|m| m[k]) {
                uf.union(a, b);
            }
        }
        uf.groups()
    }

    /// Whether removing `curve` disconnects the surface: the faces stay
    /// connected only through edges of the other curve.
    pub fn separates(&self, curve: Curve) -> bool {
        let mask: Vec<bool> = self.edge_curve.iter().map(|&c| c != curve).collect();
        self.components(Some(&mask)).len() > 1
    }
}

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub(crate) fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let r = self.find(v);
            by_root[r].push(v);
        }
        by_root.into_iter().filter(|g| !g.is_empty()).collect()
    }
}
