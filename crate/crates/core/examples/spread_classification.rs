//! Size-9 partial line spreads of PG(4,2): exhaustive classification,
//! stabilizers and the orbit structure of the matching 9-configurations.

use subspace_codes::binary::DEFAULT_BUDGET;
use subspace_codes::spreads::{classify_all_size9, nine_configuration_symmetry, profile, spread_aut_and_orbits};

fn main() -> subspace_codes::Result<()> {
    let c = classify_all_size9(DEFAULT_BUDGET)?;
    println!("{} spreads through <e1,e2>, <e3,e4>; {} classes", c.enumerated, c.classes.len());
    for k in &c.classes {
        let p = profile(&k.representative)?;
        let s = spread_aut_and_orbits(&k.representative, DEFAULT_BUDGET)?;
        let n = nine_configuration_symmetry(&k.representative, DEFAULT_BUDGET)?;
        println!(
            "{:<4} found {:>5}  stabilizer {:>2}  orbits {:?}  holes {}  |  in PG(5,2): {} with orbits {:?}",
            k.ty.to_string(),
            k.found,
            s.order,
            s.orbits,
            p.holes.len(),
            n.order,
            n.orbits
        );
    }
    Ok(())
}
