//! Flat counts of PG(5, q), the special plane and the field-reduction plane spread.

use subspace_codes::geometry::{gaussian, lines_disjoint_from, plane_spread_field_reduction, special_flat, GeometrySpec};

fn main() -> subspace_codes::Result<()> {
    for q in [2u32, 3] {
        let g = GeometrySpec::new(6, q)?;
        let counts: Vec<u128> = (1..6).map(|k| g.flat_count(k)).collect();
        println!("PG(5,{q}): points, lines, planes, solids, hyperplanes = {counts:?}");
        let s = special_flat(6, 3, q);
        println!("  lines disjoint from S: {}", lines_disjoint_from(&g, &s).count());
        let spread = plane_spread_field_reduction(q)?;
        println!("  plane spread: {} planes (= q^3 + 1 = {})", spread.len(), q.pow(3) + 1);
    }
    println!("[8 choose 4]_2 = {}", gaussian(8, 4, 2));
    Ok(())
}
