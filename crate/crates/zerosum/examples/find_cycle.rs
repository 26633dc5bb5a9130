//! Find a verified zero-sum cycle in a random labelled complete digraph.
//!
//! ```bash
//! cargo run --example find_cycle
//! ```

use zerosum::cycle::{find_zero_sum_cycle, verify_cycle};
use zerosum::gf::FieldSpec;
use zerosum::instances::random_digraph;
use zerosum::matching::Mode;

fn main() -> zerosum::Result<()> {
    let spec = FieldSpec::new(2, 3)?;
    let n = 15; // 5 d suffices for p = 2
    let dg = random_digraph(spec, n, 42)?;
    println!("complete digraph on {n} vertices, arc labels in {spec}");

    let out = find_zero_sum_cycle(&dg, None, Mode::Heuristic)?;
    println!(
        "found a cycle of length {} using {} basis matching(s), {} vertices deleted",
        out.witness.len(),
        out.m_used,
        out.deleted.len()
    );
    print!("cycle:");
    for v in out.witness.vertices() {
        print!(" {v}");
    }
    println!();

    // Re-verify from scratch.
    assert!(verify_cycle(&dg, out.witness.vertices())?);
    println!("label sum along the cycle: {} (verified)", out.witness.sum());
    Ok(())
}
