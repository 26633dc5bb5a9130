//! The block construction showing that (p-1)d vertices are never enough:
//! every arc points at a block and carries that block's basis vector, so any
//! cycle sums to a vector with a coordinate strictly between 0 and p.
//!
//! ```bash
//! cargo run --example lower_bound
//! ```

use zerosum::cycle::{bf_zero_sum_cycle, lower_bound_witness};
use zerosum::gf::FieldSpec;

fn main() -> zerosum::Result<()> {
    for (p, d) in [(2, 2), (2, 3), (3, 2)] {
        let spec = FieldSpec::new(p, d)?;
        let dg = lower_bound_witness(spec)?;
        let n = dg.vertex_count();
        match bf_zero_sum_cycle(&dg)? {
            None => println!("{spec}: {n} vertices, exhaustive search confirms no zero-sum cycle"),
            Some(w) => println!("{spec}: unexpected zero-sum cycle {:?}", w.vertices()),
        }
    }
    Ok(())
}
