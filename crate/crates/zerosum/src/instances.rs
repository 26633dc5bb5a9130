//! Seeded random instance generators shared by the stress suites, tests and
//! examples. Identical parameters and seed always produce identical
//! instances.

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::cycle::LabelledDigraph;
use crate::gf::{FieldSpec, GroupVector};
use crate::hypergraph::{LabelledHypergraph, Vertex};
use crate::matroid::{ElementId, Matroid};
use crate::Result;

/// Uniform i.i.d. arc labels over `Z_p^d`. Arcs are sampled in lexicographic
/// `(u, v)` order, one coordinate at a time.
pub fn random_digraph(spec: FieldSpec, n: usize, seed: u64) -> Result<LabelledDigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    LabelledDigraph::from_fn(n, spec, |_, _| {
        GroupVector::new(
            spec,
            (0..spec.dimension())
                .map(|_| rng.random_range(0..spec.modulus()))
                .collect(),
        )
        .expect("valid coordinates")
    })
}

/// Parameters for random matroid-labelled hypergraphs.
#[derive(Debug, Clone, Copy)]
pub struct HypergraphParams {
    pub p: u64,
    /// Dimension is drawn from `1..=max_dimension`.
    pub max_dimension: usize,
    /// Vertex count is drawn from `min_vertices..=max_vertices`.
    pub min_vertices: u32,
    pub max_vertices: u32,
    /// Edge count is drawn from `min_edges..=max_edges`.
    pub min_edges: usize,
    pub max_edges: usize,
    /// Edge sizes are drawn from `min_edge_size..=max_edge_size`.
    pub min_edge_size: usize,
    pub max_edge_size: usize,
}

impl HypergraphParams {
    /// The default stress ensemble: up to 10 vertices, edges of size at most
    /// 3, linear labels over `Z_2^d` with `d <= 3`.
    pub fn small_binary() -> Self {
        HypergraphParams {
            p: 2,
            max_dimension: 3,
            min_vertices: 3,
            max_vertices: 10,
            min_edges: 1,
            max_edges: 15,
            min_edge_size: 1,
            max_edge_size: 3,
        }
    }

    /// A crowded ensemble where maximal matchings often leave labels
    /// unspanned, so exchange and peel steps get exercised.
    pub fn crowded_binary() -> Self {
        HypergraphParams {
            p: 2,
            max_dimension: 3,
            min_vertices: 3,
            max_vertices: 5,
            min_edges: 8,
            max_edges: 20,
            min_edge_size: 2,
            max_edge_size: 3,
        }
    }
}

/// A random hypergraph labelled by a linear matroid with one element per
/// hyperedge; zero vectors (loops) and repeated vectors (parallel elements)
/// occur naturally.
pub fn random_linear_hypergraph(
    params: HypergraphParams,
    seed: u64,
) -> Result<LabelledHypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(params.min_vertices.max(3)..=params.max_vertices);
    let d = rng.random_range(1..=params.max_dimension);
    let spec = FieldSpec::new(params.p, d)?;
    let count = rng.random_range(params.min_edges.max(1)..=params.max_edges);
    let mut edges = Vec::with_capacity(count);
    let mut vectors = Vec::with_capacity(count);
    for i in 0..count {
        let size = rng.random_range(
            params.min_edge_size.max(1)..=params.max_edge_size.min(n as usize),
        );
        let mut vs: Vec<u32> = (0..n).collect();
        vs.shuffle(&mut rng);
        vs.truncate(size);
        edges.push((
            vs.into_iter().map(Vertex).collect::<Vec<_>>(),
            ElementId(i as u32),
        ));
        vectors.push(GroupVector::new(
            spec,
            (0..d).map(|_| rng.random_range(0..params.p)).collect(),
        )?);
    }
    let matroid = Arc::new(Matroid::linear(spec, vectors)?);
    LabelledHypergraph::new(
        (0..n).map(Vertex).collect(),
        edges,
        params.max_edge_size,
        matroid,
    )
}

/// A random 3-uniform hypergraph with edges colored from `1..=colors`,
/// labelled by the free matroid on the colors (the rainbow setting).
pub fn random_colored_hypergraph(
    max_vertices: u32,
    max_colors: usize,
    max_edges: usize,
    seed: u64,
) -> Result<(LabelledHypergraph, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(6..=max_vertices.max(6));
    let colors = rng.random_range(1..=max_colors);
    let count = rng.random_range(1..=max_edges);
    let matroid = Arc::new(Matroid::free(colors));
    let mut edges = Vec::with_capacity(count);
    for _ in 0..count {
        let mut vs: Vec<u32> = (0..n).collect();
        vs.shuffle(&mut rng);
        vs.truncate(3);
        edges.push((
            vs.into_iter().map(Vertex).collect::<Vec<_>>(),
            ElementId(rng.random_range(0..colors as u32)),
        ));
    }
    let h = LabelledHypergraph::new((0..n).map(Vertex).collect(), edges, 3, matroid)?;
    Ok((h, colors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_generation_is_deterministic() {
        let spec = FieldSpec::new(3, 2).unwrap();
        let a = random_digraph(spec, 6, 42).unwrap();
        let b = random_digraph(spec, 6, 42).unwrap();
        assert_eq!(a, b);
        let c = random_digraph(spec, 6, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn hypergraph_generation_is_deterministic() {
        let params = HypergraphParams::small_binary();
        let a = random_linear_hypergraph(params, 7).unwrap();
        let b = random_linear_hypergraph(params, 7).unwrap();
        assert_eq!(a.edge_count(), b.edge_count());
        assert_eq!(a.vertex_count(), b.vertex_count());
        let ea: Vec<_> = a.edges().map(|e| a.edge_vertices(e).unwrap().to_vec()).collect();
        let eb: Vec<_> = b.edges().map(|e| b.edge_vertices(e).unwrap().to_vec()).collect();
        assert_eq!(ea, eb);
    }

    #[test]
    fn colored_hypergraph_is_three_uniform() {
        for seed in 0..10 {
            let (h, colors) = random_colored_hypergraph(12, 4, 20, seed).unwrap();
            assert!(colors >= 1);
            for e in h.edges() {
                assert_eq!(h.edge_vertices(e).unwrap().len(), 3);
            }
        }
    }
}
