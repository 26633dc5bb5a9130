//! Several pairwise disjoint basis matchings at once, via the m-fold
//! direct-sum lift: every hyperedge is duplicated once per copy of the
//! matroid, one spanning matching is computed upstairs, and splitting it by
//! copy index yields the disjoint bases downstairs.
//!
//! ```bash
//! cargo run --example disjoint_bases
//! ```

use zerosum::instances::{random_linear_hypergraph, HypergraphParams};
use zerosum::matching::{disjoint_basis_matchings, Mode};

fn main() -> zerosum::Result<()> {
    let params = HypergraphParams {
        max_vertices: 16,
        min_vertices: 12,
        max_edges: 30,
        ..HypergraphParams::small_binary()
    };
    for seed in 0..5 {
        let h = random_linear_hypergraph(params, seed)?;
        if h.matroid().rank() == 0 {
            continue;
        }
        let res = disjoint_basis_matchings(&h, 2, Mode::Heuristic)?;
        println!(
            "seed {seed}: {} vertices, {} edges, rank {} -> two disjoint bases of sizes {:?}, {} vertices deleted",
            h.vertex_count(),
            h.edge_count(),
            h.matroid().rank(),
            res.matchings.iter().map(|m| m.len()).collect::<Vec<_>>(),
            res.u.len()
        );
    }
    Ok(())
}
