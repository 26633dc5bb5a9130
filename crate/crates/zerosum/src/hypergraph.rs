//! Multi-hypergraphs whose hyperedges carry matroid labels.
//!
//! Vertex deletion returns a view sharing the underlying edge data, so the
//! repeated deletions performed by the matching engine stay cheap and
//! hyperedge ids stay stable across views. All set-valued answers come back
//! in ascending id order.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::matroid::{ElementId, Matroid};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HyperedgeId(pub u32);

#[derive(Debug)]
struct EdgeDef {
    vertices: Vec<Vertex>, // sorted, distinct
    label: ElementId,
}

#[derive(Debug)]
struct Core {
    edges: Vec<EdgeDef>,
    matroid: Arc<Matroid>,
    r: usize,
}

/// A multi-hypergraph with a hyperedge labelling into a matroid ground set.
/// Distinct hyperedges may share vertex sets and labels.
#[derive(Debug, Clone)]
pub struct LabelledHypergraph {
    core: Arc<Core>,
    vertices: BTreeSet<Vertex>,
    /// Alive edge ids, ascending. Views after deletion keep original ids.
    alive: Vec<HyperedgeId>,
}

impl LabelledHypergraph {
    /// Builds a hypergraph. Every edge must be nonempty, have at most `r`
    /// distinct endpoints inside `vertices`, and carry a label valid in the
    /// matroid. Edge ids are assigned densely in list order.
    pub fn new(
        vertices: BTreeSet<Vertex>,
        edges: Vec<(Vec<Vertex>, ElementId)>,
        r: usize,
        matroid: Arc<Matroid>,
    ) -> Result<Self> {
        let mut defs = Vec::with_capacity(edges.len());
        for (vs, label) in edges {
            if vs.is_empty() {
                return Err(Error::EmptyInput("hyperedge with no vertices"));
            }
            let mut vs = vs;
            vs.sort_unstable();
            let before = vs.len();
            vs.dedup();
            if vs.len() != before {
                return Err(Error::Malformed("hyperedge lists a vertex twice".into()));
            }
            if vs.len() > r {
                return Err(Error::Malformed(format!(
                    "hyperedge has {} vertices, limit is {r}",
                    vs.len()
                )));
            }
            for &v in &vs {
                if !vertices.contains(&v) {
                    return Err(Error::UnknownVertex(v));
                }
            }
            if !matroid.contains(label) {
                return Err(Error::ForeignElement(label));
            }
            defs.push(EdgeDef { vertices: vs, label });
        }
        let alive = (0..defs.len() as u32).map(HyperedgeId).collect();
        Ok(LabelledHypergraph {
            core: Arc::new(Core {
                edges: defs,
                matroid,
                r,
            }),
            vertices,
            alive,
        })
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Alive hyperedge ids in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = HyperedgeId> + '_ {
        self.alive.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.alive.len()
    }

    pub fn max_edge_size(&self) -> usize {
        self.core.r
    }

    pub fn matroid(&self) -> &Arc<Matroid> {
        &self.core.matroid
    }

    pub fn contains_edge(&self, e: HyperedgeId) -> bool {
        self.alive.binary_search(&e).is_ok()
    }

    fn def(&self, e: HyperedgeId) -> Result<&EdgeDef> {
        if !self.contains_edge(e) {
            return Err(Error::UnknownEdge(e));
        }
        Ok(&self.core.edges[e.0 as usize])
    }

    /// Sorted distinct endpoints of an alive edge.
    pub fn edge_vertices(&self, e: HyperedgeId) -> Result<&[Vertex]> {
        Ok(&self.def(e)?.vertices)
    }

    pub fn label(&self, e: HyperedgeId) -> Result<ElementId> {
        Ok(self.def(e)?.label)
    }

    /// The hypergraph `H - U`: vertex set `V \ U`, keeping exactly the edges
    /// disjoint from `U` with their ids and labels unchanged.
    pub fn delete_vertices(&self, u: &BTreeSet<Vertex>) -> Result<LabelledHypergraph> {
        for &v in u {
            if !self.vertices.contains(&v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        let vertices: BTreeSet<Vertex> = self.vertices.difference(u).copied().collect();
        let alive = self
            .alive
            .iter()
            .copied()
            .filter(|&e| {
                self.core.edges[e.0 as usize]
                    .vertices
                    .iter()
                    .all(|v| !u.contains(v))
            })
            .collect();
        Ok(LabelledHypergraph {
            core: Arc::clone(&self.core),
            vertices,
            alive,
        })
    }

    /// The edges of `m` sharing at least one vertex with `e` (ascending).
    pub fn meets(&self, e: HyperedgeId, m: &Matching) -> Result<Vec<HyperedgeId>> {
        let ev = self.edge_vertices(e)?;
        let mut out = Vec::new();
        for &f in m.edges() {
            let fv = self.edge_vertices(f)?;
            if ev.iter().any(|v| fv.contains(v)) {
                out.push(f);
            }
        }
        Ok(out)
    }

    /// Union of the endpoint sets of the given edges.
    pub fn covered_vertices(&self, x: &[HyperedgeId]) -> Result<BTreeSet<Vertex>> {
        let mut out = BTreeSet::new();
        for &e in x {
            out.extend(self.edge_vertices(e)?.iter().copied());
        }
        Ok(out)
    }

    /// Connectivity of the subhypergraph formed by `x` and its vertices,
    /// via union-find over the covered vertex set.
    pub fn edge_set_connected(&self, x: &[HyperedgeId]) -> Result<bool> {
        if x.is_empty() {
            return Err(Error::EmptyInput("connectivity of no edges"));
        }
        let covered: Vec<Vertex> = self.covered_vertices(x)?.into_iter().collect();
        let index = |v: Vertex| covered.binary_search(&v).expect("covered vertex");
        let mut parent: Vec<usize> = (0..covered.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for &e in x {
            let vs = self.edge_vertices(e)?;
            let first = index(vs[0]);
            for &v in &vs[1..] {
                let (a, b) = (find(&mut parent, first), find(&mut parent, index(v)));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        Ok((1..covered.len()).all(|i| find(&mut parent, i) == root))
    }

    /// One-pass validity check for a candidate matching: edges alive,
    /// pairwise vertex-disjoint, labels pairwise distinct.
    pub fn is_valid_matching(&self, m: &Matching) -> Result<bool> {
        let mut seen_vertices = BTreeSet::new();
        let mut seen_labels = BTreeSet::new();
        for &e in m.edges() {
            let def = self.def(e)?;
            for &v in &def.vertices {
                if !seen_vertices.insert(v) {
                    return Ok(false);
                }
            }
            if !seen_labels.insert(def.label) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Labels of a matching in ascending edge-id order.
    pub fn labels_of(&self, m: &Matching) -> Result<Vec<ElementId>> {
        m.edges().iter().map(|&e| self.label(e)).collect()
    }
}

/// Hypergraph equality is id-set equality: same vertex set, same alive edges
/// over the same shared edge data.
impl PartialEq for LabelledHypergraph {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.core, &other.core)
            && self.vertices == other.vertices
            && self.alive == other.alive
    }
}

impl Eq for LabelledHypergraph {}

/// A set of hyperedge ids intended to be pairwise vertex-disjoint with
/// pairwise distinct labels; validity is checked against a hypergraph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    edges: BTreeSet<HyperedgeId>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn from_edges(edges: impl IntoIterator<Item = HyperedgeId>) -> Self {
        Matching {
            edges: edges.into_iter().collect(),
        }
    }

    pub fn edges(&self) -> &BTreeSet<HyperedgeId> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: HyperedgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn insert(&mut self, e: HyperedgeId) {
        self.edges.insert(e);
    }

    pub fn remove(&mut self, e: HyperedgeId) {
        self.edges.remove(&e);
    }

    pub fn union(&self, other: &Matching) -> Matching {
        Matching {
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    pub fn difference(&self, other: &Matching) -> Matching {
        Matching {
            edges: self.edges.difference(&other.edges).copied().collect(),
        }
    }
}

impl FromIterator<HyperedgeId> for Matching {
    fn from_iter<T: IntoIterator<Item = HyperedgeId>>(iter: T) -> Self {
        Matching::from_edges(iter)
    }
}
