//! Command-line front end. Exit codes: 0 pass, 1 verification failure,
//! 2 usage or input error, 3 search budget exhausted.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use subspace_codes::analysis::{analyze, min_distance_witness, recursive_bound, AnalyzeOptions, BoundQuery};
use subspace_codes::binary::DEFAULT_BUDGET;
use subspace_codes::codefile::{format_code, format_report, format_subspace, parse_codewords, read_code, report_summary};
use subspace_codes::constructions::{construction_a, construction_a_core, lift_gabidulin, maximal_core_plus_s};
use subspace_codes::geometry::plane_spread_field_reduction;
use subspace_codes::linalg::SubspaceCode;
use subspace_codes::selfcheck::{property_suite, subcode_suite, DEFAULT_CASES, DEFAULT_SEED};
use subspace_codes::spreads::{
    classify_all_size9, construct_type, nine_configuration_symmetry, profile, spread_aut_and_orbits, SpreadType, GL52_ORDER,
};
use subspace_codes::Error;

#[derive(Parser)]
#[command(name = "subcode", version, about = "Constant-dimension subspace codes in PG(5,q)")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Node budget for collineation searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Lmrd,
    ConstructionACore,
    ConstructionA,
    CorePlusS,
    PlaneSpread,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a code and write it in code-file format.
    Construct {
        kind: Kind,
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Output file (stdout if omitted).
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check the minimum distance of a code file.
    Verify {
        path: PathBuf,
        #[arg(long)]
        min_distance: usize,
    },
    /// Structural report of a code file.
    Analyze {
        path: PathBuf,
        /// Also compute the automorphism group and self-duality (q = 2).
        #[arg(long)]
        aut: bool,
        /// Print the key-value report instead of the summary.
        #[arg(long)]
        kv: bool,
        /// Write the key-value report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Recursive upper bound for A_q(v, d; k).
    Bounds { v: usize, d: usize, k: usize, q: u32 },
    /// Size-9 partial spreads of PG(4,2).
    Spreads {
        #[command(subcommand)]
        cmd: SpreadCmd,
    },
    /// Randomized property suites with a fixed seed.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CASES)]
        cases: usize,
    },
}

#[derive(Subcommand)]
enum SpreadCmd {
    /// Exhaustive classification up to GL(5,2).
    Classify {
        /// Stabilizer orbits and 9-configuration symmetry per class.
        #[arg(long)]
        orbits: bool,
    },
    /// Lines and regulus structure of a representative (X, E, ID, ID').
    Show { ty: String },
}

enum Outcome {
    Pass,
    Fail,
}

fn build(kind: Kind, q: u32) -> subspace_codes::Result<SubspaceCode> {
    match kind {
        Kind::Lmrd => lift_gabidulin(q),
        Kind::ConstructionACore => Ok(construction_a_core(q)?.core()),
        Kind::ConstructionA => construction_a(q),
        Kind::CorePlusS => maximal_core_plus_s(q),
        Kind::PlaneSpread => plane_spread_field_reduction(q),
    }
}

fn write_or_print(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn verify(path: &Path, want: usize) -> anyhow::Result<Outcome> {
    let (h, words) = parse_codewords(&std::fs::read_to_string(path)?)?;
    println!("code: v={} q={} count={}", h.v, h.q, words.len());
    for j in 0..words.len() {
        if let Some(i) = words[..j].iter().position(|w| *w == words[j]) {
            println!("min_distance = 0 (codewords {i} and {j} coincide: {})", format_subspace(&words[j]));
            println!("FAIL: expected at least {want}");
            return Ok(Outcome::Fail);
        }
    }
    let code = SubspaceCode::new(h.v, h.q, words)?;
    if code.len() < 2 {
        println!("fewer than two codewords; distance undefined");
        return Ok(Outcome::Fail);
    }
    let (d, i, j) = min_distance_witness(&code)?;
    println!("min_distance = {d} (attained by codewords {i} and {j})");
    if d >= want {
        println!("PASS");
        Ok(Outcome::Pass)
    } else {
        let m = code.members();
        println!("violating pair: {} | {}", format_subspace(&m[i]), format_subspace(&m[j]));
        println!("FAIL: expected at least {want}");
        Ok(Outcome::Fail)
    }
}

fn bounds(v: usize, d: usize, k: usize, q: u32) -> anyhow::Result<Outcome> {
    let t = recursive_bound(BoundQuery::new(v, d, k, q)?);
    println!("A_{q}({v},{d};{k}): t = {}, delta = {}", t.t, t.delta);
    println!("  gauss({v},{})_{q} / gauss({k},{})_{q} = {} / {}", t.t - 1, t.t - 1, t.numerator, t.denominator);
    match (t.inner, t.value) {
        (Some(a), Some(b)) => {
            println!("  A_{q}({},{};{}) = {a}", t.inner_v, 2 * t.delta, t.delta);
            println!("bound = {b}");
        }
        _ => {
            println!("  A_{q}({},{};{}) not covered (delta does not divide {} and delta != 2)", t.inner_v, 2 * t.delta, t.delta, t.inner_v);
            println!("bound = unknown");
        }
    }
    Ok(Outcome::Pass)
}

fn orbit_string(o: &[usize]) -> String {
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &x in o {
        match counts.last_mut() {
            Some((y, m)) if *y == x => *m += 1,
            _ => counts.push((x, 1)),
        }
    }
    subspace_codes::analysis::power_notation(counts)
}

fn classify(orbits: bool, budget: u64) -> anyhow::Result<Outcome> {
    let c = classify_all_size9(budget)?;
    println!("size-9 partial spreads through a fixed skew pair: {}", c.enumerated);
    println!("isomorphism classes: {}", c.classes.len());
    let mut mass = 0;
    for k in &c.classes {
        let s = spread_aut_and_orbits(&k.representative, budget)?;
        mass += GL52_ORDER / s.order * 36 / 8680;
        println!("  {:<4} pattern {:<3} found {:>5}  stabilizer {:>3}", k.ty.to_string(), k.pattern.to_string(), k.found, s.order);
        if orbits {
            let n = nine_configuration_symmetry(&k.representative, budget)?;
            println!("       orbits on covered points: {}", orbit_string(&s.orbits));
            println!("       doubled: {}", orbit_string(&s.doubled()));
            println!("       9-configuration stabilizer in GL(6,2): {} orbits on M: {}", n.order, orbit_string(&n.orbits));
        }
    }
    println!("orbit-stabilizer count: {mass} (enumerated {})", c.enumerated);
    Ok(if mass as usize == c.enumerated && c.classes.len() == 4 { Outcome::Pass } else { Outcome::Fail })
}

fn show(ty: &str) -> anyhow::Result<Outcome> {
    let t: SpreadType = ty.parse()?;
    let ps = construct_type(t);
    let p = profile(&ps)?;
    println!("type {t} (pattern {})", p.pattern);
    for (i, l) in ps.lines().iter().enumerate() {
        println!("  L{i} {}  in {} reguli", format_subspace(l), p.regulus_counts[i]);
    }
    let holes: Vec<String> = p.holes.iter().map(format_subspace).collect();
    println!("holes: {}", holes.join(" "));
    println!("hole plane: {}", format_subspace(&p.plane));
    println!("hole-free line of that plane: {}", format_subspace(&p.line));
    for r in &p.reguli {
        println!("regulus: L{} L{} L{}", r[0], r[1], r[2]);
    }
    Ok(Outcome::Pass)
}

fn selftest(seed: u64, cases: usize) -> anyhow::Result<Outcome> {
    let mut ok = true;
    let mut results = property_suite(seed, cases);
    results.push(subcode_suite(&construction_a(2)?, 73, 4, seed)?);
    for r in &results {
        println!("{:<40} {:>6} cases  {} violations", r.name, r.cases, r.violations);
        if let Some(f) = &r.first {
            println!("  first: {f}");
        }
        ok &= r.pass();
    }
    println!("seed {seed}: {}", if ok { "PASS" } else { "FAIL" });
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match cli.cmd {
        Cmd::Construct { kind, q, out } => {
            write_or_print(out.as_deref(), &format_code(&build(kind, q)?))?;
            Ok(Outcome::Pass)
        }
        Cmd::Verify { path, min_distance } => verify(&path, min_distance),
        Cmd::Analyze { path, aut, kv, report } => {
            let code = read_code(&path)?;
            let r = analyze(&code, AnalyzeOptions { aut, budget: cli.budget })?;
            if let Some(p) = report {
                std::fs::write(p, format_report(&r))?;
            }
            print!("{}", if kv { format_report(&r) } else { report_summary(&r) });
            let feasible = r.feasibility.is_none_or(|f| f.pass());
            Ok(if feasible { Outcome::Pass } else { Outcome::Fail })
        }
        Cmd::Bounds { v, d, k, q } => bounds(v, d, k, q),
        Cmd::Spreads { cmd: SpreadCmd::Classify { orbits } } => classify(orbits, cli.budget),
        Cmd::Spreads { cmd: SpreadCmd::Show { ty } } => show(&ty),
        Cmd::Selftest { seed, cases } => selftest(seed, cases),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e.downcast_ref::<Error>() {
                Some(Error::BudgetExceeded(_)) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
