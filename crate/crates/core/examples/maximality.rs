//! Extension sweeps: which planes can still be added to a code.

use subspace_codes::analysis::is_maximal;
use subspace_codes::constructions::{construction_a, construction_a_core, lmrd_cap_check, maximal_core_plus_s};

fn main() -> subspace_codes::Result<()> {
    let cap = lmrd_cap_check(2)?;
    println!(
        "LMRD code (q=2): {} planes, {} blocked, {} meet S in a line, S addable {}, cap {}",
        cap.planes, cap.rejected, cap.meeting_s_in_line, cap.s_addable, cap.bound
    );

    let core = construction_a_core(2)?.core();
    let m = is_maximal(&core, 4)?;
    println!("core ({} planes): {} addable planes", core.len(), m.addable.len());

    for (name, code) in [("construction A", construction_a(2)?), ("core + S", maximal_core_plus_s(2)?)] {
        let m = is_maximal(&code, 4)?;
        println!("{name} ({} planes): maximal {}, {} planes blocked", code.len(), m.maximal(), m.blockers.len());
    }
    Ok(())
}
