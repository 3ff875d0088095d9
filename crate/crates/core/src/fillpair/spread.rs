//! Spread spanning forests: spanning forests of the dual graph in which no
//! two chosen edges sit in cyclically consecutive slots of a face.

use serde::Serialize;

use super::dual::{DualGraph, UnionFind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpreadForest {
    /// Chosen dual edges, ascending.
    pub edges: Vec<usize>,
    /// Vertex sets of the forest's trees, each sorted, ordered by least vertex.
    pub components: Vec<Vec<usize>>,
}

/// Result of an exhaustive search. `forest` is `None` when no spread forest
/// with the requested shape exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpreadSearch {
    pub forest: Option<SpreadForest>,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

/// `(slot, neighbours)` for each dart-end of each dual edge.
fn slot_table(dual: &DualGraph) -> Vec<Vec<(usize, usize, usize)>> {
    let mut table = vec![Vec::new(); dual.edge_count()];
    for (f, rot) in dual.rotation.iter().enumerate() {
        for (pos, &e) in rot.iter().enumerate() {
            table[e].push((f, pos, rot.len()));
        }
    }
    table
}

/// Check that `edges` is a spread spanning forest with `components` trees.
pub fn check_spread_forest(dual: &DualGraph, edges: &[usize], components: usize) -> Result<()> {
    let mut uf = UnionFind::new(dual.vertex_count);
    for &e in edges {
        let [a, b] = *dual
            .edges
            .get(e)
            .ok_or_else(|| Error::invalid(format!("no dual edge {e}")))?;
        if !uf.union(a, b) {
            return Err(Error::Inconsistent(format!("dual edge {e} closes a cycle")));
        }
    }
    let trees = dual.vertex_count - edges.len();
    if trees != components {
        return Err(Error::Inconsistent(format!(
            "forest has {trees} components, expected {components}"
        )));
    }
    let mut used = vec![false; dual.edge_count()];
    for &e in edges {
        used[e] = true;
    }
    for (f, rot) in dual.rotation.iter().enumerate() {
        let len = rot.len();
        for pos in 0..len {
            let next = (pos + 1) % len;
            if next != pos && used[rot[pos]] && used[rot[next]] {
                return Err(Error::Inconsistent(format!(
                    "dual edges {} and {} are consecutive at dual vertex {f}",
                    rot[pos], rot[next]
                )));
            }
        }
    }
    Ok(())
}

struct Search<'a> {
    dual: &'a DualGraph,
    allowed: Vec<bool>,
    slots: Vec<Vec<(usize, usize, usize)>>,
    occupied: Vec<Vec<bool>>,
    chosen: Vec<usize>,
    target: usize,
    trees: usize,
    suffix_allowed: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn spread_ok(&self, e: usize) -> bool {
        self.slots[e].iter().all(|&(f, pos, len)| {
            let occ = &self.occupied[f];
            !occ[(pos + 1) % len] && !occ[(pos + len - 1) % len]
        })
    }

    fn set(&mut self, e: usize, value: bool) {
        for &(f, pos, _) in &self.slots[e] {
            self.occupied[f][pos] = value;
        }
    }

    fn forest(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.dual.vertex_count);
        for &e in &self.chosen {
            let [a, b] = self.dual.edges[e];
            uf.union(a, b);
        }
        uf
    }

    /// Chosen plus still-undecided edges must be able to reach `trees` components.
    fn can_still_span(&self, from: usize) -> bool {
        let mut uf = self.forest();
        for e in from..self.dual.edge_count() {
            if self.allowed[e] {
                let [a, b] = self.dual.edges[e];
                uf.union(a, b);
            }
        }
        uf.groups().len() <= self.trees
    }

    fn run(&mut self, k: usize) -> bool {
        self.nodes += 1;
        if self.chosen.len() == self.target {
            return true;
        }
        if k == self.dual.edge_count() || self.chosen.len() + self.suffix_allowed[k] < self.target {
            return false;
        }
        if !self.can_still_span(k) {
            return false;
        }
        if self.allowed[k] && self.spread_ok(k) {
            let [a, b] = self.dual.edges[k];
            let mut uf = self.forest();
            if uf.find(a) != uf.find(b) {
                self.chosen.push(k);
                self.set(k, true);
                if self.run(k + 1) {
                    return true;
                }
                self.set(k, false);
                self.chosen.pop();
            }
        }
        self.run(k + 1)
    }
}

/// Exhaustive include-first backtracking over dual edges in index order, so
/// the forest returned is the lexicographically least one. `mask`, if given,
/// restricts which dual edges may be used.
pub fn find_spread_forest(
    dual: &DualGraph,
    components: usize,
    mask: Option<&[bool]>,
) -> Result<SpreadSearch> {
    if !(components == 1 || components == 2) {
        return Err(Error::invalid(format!(
            "a spread forest has 1 or 2 components, not {components}"
        )));
    }
    if dual.vertex_count < components {
        return Err(Error::invalid(format!(
            "{components} components requested on a dual graph with {} vertices",
            dual.vertex_count
        )));
    }
    if let Some(m) = mask {
        if m.len() != dual.edge_count() {
            return Err(Error::invalid(format!(
                "mask has {} entries for {} dual edges",
                m.len(),
                dual.edge_count()
            )));
        }
    }
    if components == 1 && dual.components(None).len() != 1 {
        return Err(Error::invalid(
            "dual graph is disconnected; no spanning tree exists",
        ));
    }
    let allowed: Vec<bool> = (0..dual.edge_count())
        .map(|e| mask.is_none_or(|m| m[e]))
        .collect();
    let mut suffix_allowed = vec![0; dual.edge_count() + 1];
    for e in (0..dual.edge_count()).rev() {
        suffix_allowed[e] = suffix_allowed[e + 1] + allowed[e] as usize;
    }
    let mut search = Search {
        dual,
        allowed,
        slots: slot_table(dual),
        occupied: dual.rotation.iter().map(|r| vec![false; r.len()]).collect(),
        chosen: Vec::new(),
        target: dual.vertex_count - components,
        trees: components,
        suffix_allowed,
        nodes: 0,
    };
    let found = search.run(0);
    let forest = found.then(|| {
        let mut edges = search.chosen.clone();
        edges.sort_unstable();
        SpreadForest {
            components: search.forest().groups(),
            edges,
        }
    });
    Ok(SpreadSearch {
        forest,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fillpair::map::Curve;

    /// Three dual vertices in a path 0 - 1 - 2 with loops padding the rotations.
    fn path_dual(middle: Vec<usize>) -> DualGraph {
        DualGraph {
            vertex_count: 3,
            edges: vec![[0, 1], [1, 2], [0, 0], [1, 1], [2, 2]],
            edge_curve: vec![Curve::Alpha; 5],
            rotation: vec![vec![0, 2, 2], middle, vec![1, 4, 4]],
        }
    }

    #[test]
    fn path_is_found_when_slots_are_apart() {
        let d = path_dual(vec![0, 3, 1, 3]);
        let s = find_spread_forest(&d, 1, None).unwrap();
        let f = s.forest.unwrap();
        assert_eq!(f.edges, vec![0, 1]);
        assert_eq!(f.components, vec![vec![0, 1, 2]]);
        check_spread_forest(&d, &f.edges, 1).unwrap();
    }

    #[test]
    fn adjacent_slots_block_the_only_tree() {
        let d = path_dual(vec![0, 1, 3, 3]);
        let s = find_spread_forest(&d, 1, None).unwrap();
        assert!(s.forest.is_none());
        assert!(check_spread_forest(&d, &[0, 1], 1).is_err());
        let two = find_spread_forest(&d, 2, None).unwrap().forest.unwrap();
        assert_eq!(two.edges, vec![0]);
        assert_eq!(two.components, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn single_vertex_needs_no_edges() {
        let d = DualGraph {
            vertex_count: 1,
            edges: vec![[0, 0]],
            edge_curve: vec![Curve::Beta],
            rotation: vec![vec![0, 0]],
        };
        let f = find_spread_forest(&d, 1, None).unwrap().forest.unwrap();
        assert!(f.edges.is_empty());
        assert!(find_spread_forest(&d, 3, None).is_err());
        assert!(find_spread_forest(&d, 2, None).is_err());
    }

    #[test]
    fn mask_is_respected() {
        let d = path_dual(vec![0, 3, 1, 3]);
        let mask = [true, false, true, true, true];
        let f = find_spread_forest(&d, 2, Some(&mask))
            .unwrap()
            .forest
            .unwrap();
        assert_eq!(f.edges, vec![0]);
        assert!(find_spread_forest(&d, 1, Some(&mask))
            .unwrap()
            .forest
            .is_none());
    }
}
