//! Spanning matchings in a matroid-labelled hypergraph, on the smallest
//! instance where deletion kicks in: two edges sharing a vertex whose labels
//! span a rank-2 matroid, so no matching can span everything and a peel
//! removes one connected clump.
//!
//! ```bash
//! cargo run --example spanning_matching
//! ```

use std::sync::Arc;

use zerosum::gf::{FieldSpec, GroupVector};
use zerosum::hypergraph::{LabelledHypergraph, Vertex};
use zerosum::matching::{spanning_matching, Mode, SpanningKind};
use zerosum::matroid::{ElementId, Matroid};

fn main() -> zerosum::Result<()> {
    let spec = FieldSpec::new(2, 2)?;
    let vectors = vec![
        GroupVector::new(spec, vec![1, 0])?, // edge {1,2}
        GroupVector::new(spec, vec![0, 1])?, // edge {2,3}
    ];
    let matroid = Arc::new(Matroid::linear(spec, vectors)?);
    let h = LabelledHypergraph::new(
        [1, 2, 3].into_iter().map(Vertex).collect(),
        vec![
            (vec![Vertex(1), Vertex(2)], ElementId(0)),
            (vec![Vertex(2), Vertex(3)], ElementId(1)),
        ],
        3,
        matroid,
    )?;

    let res = spanning_matching(&h, Mode::Exact)?;
    match res.kind {
        SpanningKind::FullRank => println!("full-rank matching of size {}", res.matching.len()),
        SpanningKind::Deficient => {
            println!(
                "deficient: deleted {:?} (a = {}, budget (2r-1)a = {}), matching size {}",
                res.u.iter().map(|v| v.0).collect::<Vec<_>>(),
                res.a,
                5 * res.a,
                res.matching.len()
            );
            println!("after deletion the matching labels span every surviving edge label");
        }
    }
    println!("certified maximal search: {}", res.certified);
    Ok(())
}
