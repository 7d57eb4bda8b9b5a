//! Collineation search: automorphisms, self-duality and an explicit
//! isomorphism between the 77-code and a scrambled copy.

use subspace_codes::analysis::{automorphism_order, find_code_isomorphism};
use subspace_codes::binary::{mask_subspace, subspace_mask, DEFAULT_BUDGET};
use subspace_codes::constructions::construction_a;
use subspace_codes::linalg::SubspaceCode;

fn main() -> subspace_codes::Result<()> {
    let a = construction_a(2)?;
    let aut = automorphism_order(&a, DEFAULT_BUDGET)?;
    println!("collineations fixing the code: {}, self-dual: {}", aut.collineations, aut.self_dual);

    // coordinate swap x0 <-> x5 followed by x1 += x2
    let g = |x: u64| {
        let mut y = x & !0b100001 | (x & 1) << 5 | (x >> 5 & 1);
        y ^= (y >> 2 & 1) << 1;
        y
    };
    let moved: Vec<_> = a
        .iter()
        .map(|e| {
            let m = subspace_mask(e);
            let image = (1..64u64).filter(|&x| m >> x & 1 == 1).fold(0u64, |acc, x| acc | 1 << g(x));
            mask_subspace(6, image)
        })
        .collect();
    let b = SubspaceCode::new(6, 2, moved)?;
    let iso = find_code_isomorphism(&a, &b, DEFAULT_BUDGET)?.expect("isomorphic by construction");
    let units: Vec<u8> = (0..6).map(|i| iso.apply(1 << i)).collect();
    println!("found an isomorphism; images of the unit vectors: {units:?}");
    Ok(())
}
