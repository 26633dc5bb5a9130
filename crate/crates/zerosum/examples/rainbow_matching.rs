//! The free-matroid specialization: labels are colors, independent matchings
//! are rainbow matchings, and the spanning search either produces a rainbow
//! matching with every color or a small deletion set after which at most
//! d - k colors survive.
//!
//! ```bash
//! cargo run --example rainbow_matching
//! ```

use std::collections::BTreeSet;

use zerosum::instances::random_colored_hypergraph;
use zerosum::matching::{spanning_matching, Mode, SpanningKind};
use zerosum::matroid::ElementId;

fn main() -> zerosum::Result<()> {
    for seed in 0..6 {
        let (h, colors) = random_colored_hypergraph(12, 4, 20, seed)?;
        let res = spanning_matching(&h, Mode::Exact)?;
        match res.kind {
            SpanningKind::FullRank => {
                println!(
                    "seed {seed}: rainbow matching with all {colors} colors on {} vertices",
                    h.vertex_count()
                );
            }
            SpanningKind::Deficient => {
                let survivor = h.delete_vertices(&res.u)?;
                let left: BTreeSet<ElementId> = survivor
                    .edges()
                    .map(|e| survivor.label(e))
                    .collect::<zerosum::Result<_>>()?;
                let k = colors - res.matching.len();
                println!(
                    "seed {seed}: no full rainbow; deleting {} vertices (budget {}) leaves {} of {colors} colors",
                    res.u.len(),
                    5 * (k - 1),
                    left.len()
                );
            }
        }
    }
    Ok(())
}
