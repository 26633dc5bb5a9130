//! Probe the least number of linear bases of Z_p^d whose multiset union is
//! always an additive basis. Exhaustive where the bases are enumerable,
//! seeded sampling elsewhere.
//!
//! ```bash
//! cargo run --example probe_f
//! ```

use zerosum::cycle::probe_f;
use zerosum::gf::FieldSpec;

fn main() -> zerosum::Result<()> {
    println!("{:>4} {:>4} {:>6} {:>10}", "p", "d", "value", "mode");
    for (p, d) in [(2, 1), (2, 3), (2, 6), (2, 8), (3, 1), (3, 2), (5, 1), (7, 1)] {
        let spec = FieldSpec::new(p, d)?;
        let res = probe_f(spec, 200, 1)?;
        println!(
            "{p:>4} {d:>4} {:>6} {:>10}",
            res.value,
            if res.exact { "exhaustive" } else { "sampled" }
        );
    }
    Ok(())
}
