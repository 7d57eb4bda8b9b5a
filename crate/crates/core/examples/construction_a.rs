//! Builds the (6, q^6 + 2q^2 + 2q + 1, 4; 3)_q code and checks its distance.
//!
//!     cargo run --release --example construction_a -- 3

use subspace_codes::analysis::min_distance_witness;
use subspace_codes::constructions::construction_a_core;

fn main() -> subspace_codes::Result<()> {
    let q: u32 = std::env::args().nth(1).map_or(2, |a| a.parse().expect("q"));
    let parts = construction_a_core(q)?;
    println!("q = {q}, v0 = {}", parts.v0.0);
    println!("  lifted Gabidulin planes kept: {}", parts.old_planes.len());
    println!("  removed:                      {}", parts.removed_planes.len());
    println!("  planes meeting S in a point:  {}", parts.new_planes.len());
    println!("  planes meeting S in a line:   {}", parts.line_planes.len());
    let code = parts.full();
    let (d, i, j) = min_distance_witness(&code)?;
    println!("total {} codewords, minimum distance {d} (codewords {i}, {j})", code.len());
    Ok(())
}
