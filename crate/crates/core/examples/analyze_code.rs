//! Structural report of the 77-code: degrees, light plane, 9- and
//! 17-configurations, incidence constraints and automorphisms.

use subspace_codes::analysis::{analyze, AnalyzeOptions};
use subspace_codes::codefile::report_summary;
use subspace_codes::constructions::{construction_a, lift_gabidulin};

fn main() -> subspace_codes::Result<()> {
    let a = construction_a(2)?;
    let r = analyze(&a, AnalyzeOptions { aut: true, ..Default::default() })?;
    print!("{}", report_summary(&r));

    println!();
    let lmrd = analyze(&lift_gabidulin(2)?, AnalyzeOptions::default())?;
    print!("{}", report_summary(&lmrd));
    Ok(())
}
