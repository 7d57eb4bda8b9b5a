//! The Gabidulin code of 3x3 matrices with rank distance 2, and the
//! removable subset used by Construction A.

use subspace_codes::gabidulin::{rank_distribution, rank_distribution_formula, verify_removable};

fn main() -> subspace_codes::Result<()> {
    for q in [2u32, 3, 4] {
        let got = rank_distribution(q)?;
        assert_eq!(got, rank_distribution_formula(q as u64));
        println!("q={q}: codewords by rank 0..3 = {got:?}");
    }
    for q in [2u32, 3] {
        let r = verify_removable(q)?;
        println!(
            "q={q}: |R| = {}, D-spaces inside R: {}, Z -> Z' bijective: {}, cosets separated: {}",
            r.size, r.contains_d_spaces, r.corr_bijective, r.cosets_separated
        );
    }
    Ok(())
}
