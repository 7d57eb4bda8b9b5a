//! Writes a code file and a key-value report, then reads both back.

use subspace_codes::analysis::{analyze, AnalyzeOptions};
use subspace_codes::codefile::{format_report, parse_report, read_code, write_code};
use subspace_codes::geometry::plane_spread_field_reduction;

fn main() -> subspace_codes::Result<()> {
    let dir = std::env::temp_dir().join("subspace-codes-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("spread3.txt");
    let code = plane_spread_field_reduction(3)?;
    write_code(&path, &code)?;
    print!("{}", std::fs::read_to_string(&path)?.lines().take(3).map(|l| format!("{l}\n")).collect::<String>());
    let back = read_code(&path)?;
    assert_eq!(back, code);

    let report = analyze(&back, AnalyzeOptions::default())?;
    let text = format_report(&report);
    print!("{text}");
    assert_eq!(parse_report(&text)?, report);
    Ok(())
}
