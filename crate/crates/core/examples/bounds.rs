//! Upper bounds on A_q(v, d; k) from the derived-code recursion.

use subspace_codes::analysis::{partial_spread_max, recursive_bound, BoundQuery};

fn main() -> subspace_codes::Result<()> {
    for (v, d, k, q) in [(6, 4, 3, 2), (6, 4, 3, 3), (6, 4, 2, 2), (7, 4, 3, 2), (8, 6, 4, 2), (13, 6, 5, 2)] {
        let t = recursive_bound(BoundQuery::new(v, d, k, q)?);
        let value = t.value.map_or("unknown".to_string(), |b| b.to_string());
        println!("A_{q}({v},{d};{k}) <= {value}   ({} / {} * A_{q}({},{};{}))", t.numerator, t.denominator, t.inner_v, d, d / 2);
    }
    for v in 4..=9 {
        println!("max partial line spread in PG({},2): {}", v - 1, partial_spread_max(v, 2)?);
    }
    Ok(())
}
