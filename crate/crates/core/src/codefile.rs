//! Text formats: code files and key-value analysis reports.
//!
//! A code file is a header line followed by one codeword per line:
//!
//! ```text
//! # anything after '#' is ignored
//! subspace-code v=6 q=2 k=3 count=2
//! 100000,010000,001000
//! 100110,010011,001101
//! ```
//!
//! Each codeword is its canonical matrix, rows separated by commas, each row
//! a string of base-q digits (field element indices), columns left to right.
//! `k=*` marks a code of mixed dimension.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::analysis::{power_notation, AutInfo, CodeReport, Distribution, FamilyCheck, Feasibility};
use crate::error::{Error, Result};
use crate::fields::gf;
use crate::linalg::{Matrix, Subspace, SubspaceCode};
use crate::spreads::SpreadType;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Header {
    pub v: usize,
    pub q: u32,
    pub k: Option<usize>,
    pub count: usize,
}

/// `100110,010011,001101`
pub fn format_subspace(s: &Subspace) -> String {
    let rows: Vec<String> = s
        .cm()
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|&d| char::from_digit(d as u32, 10).expect("q <= 9")).collect())
        .collect();
    rows.join(",")
}

/// Parses a codeword and insists on the canonical form.
pub fn parse_subspace(text: &str, v: usize, q: u32, line: usize) -> Result<Subspace> {
    let mut rows = Vec::new();
    for r in text.split(',') {
        let r = r.trim();
        if r.chars().count() != v {
            return Err(Error::parse(line, format!("row {r:?} does not have {v} digits")));
        }
        let mut row = Vec::with_capacity(v);
        for ch in r.chars() {
            match ch.to_digit(10) {
                Some(d) if d < q => row.push(d as u8),
                _ => return Err(Error::parse(line, format!("{ch:?} is not a base-{q} digit"))),
            }
        }
        rows.push(row);
    }
    let m = Matrix::from_rows(q, v, &rows).map_err(|e| Error::parse(line, e.to_string()))?;
    Subspace::from_canonical(m).map_err(|_| Error::parse(line, "codeword is not a canonical matrix"))
}

fn header_line(h: &Header) -> String {
    let k = h.k.map_or("*".to_string(), |k| k.to_string());
    format!("subspace-code v={} q={} k={} count={}", h.v, h.q, k, h.count)
}

fn parse_header(text: &str, line: usize) -> Result<Header> {
    let mut words = text.split_whitespace();
    if words.next() != Some("subspace-code") {
        return Err(Error::parse(line, "expected 'subspace-code' header"));
    }
    let mut fields = BTreeMap::new();
    for w in words {
        let (key, val) = w.split_once('=').ok_or_else(|| Error::parse(line, format!("bad header field {w:?}")))?;
        if fields.insert(key, val).is_some() {
            return Err(Error::parse(line, format!("header field {key} repeated")));
        }
    }
    let num = |key: &str| -> Result<usize> {
        let val = fields.get(key).ok_or_else(|| Error::parse(line, format!("header lacks {key}")))?;
        val.parse().map_err(|_| Error::parse(line, format!("{key}={val} is not a number")))
    };
    let k = match fields.get("k") {
        Some(&"*") => None,
        _ => Some(num("k")?),
    };
    let h = Header { v: num("v")?, q: num("q")? as u32, k, count: num("count")? };
    if fields.len() != 4 {
        return Err(Error::parse(line, "header has unknown fields"));
    }
    gf(h.q).map_err(|e| Error::parse(line, e.to_string()))?;
    if h.v == 0 || h.v > crate::linalg::MAX_DIM {
        return Err(Error::parse(line, format!("v={} out of range", h.v)));
    }
    Ok(h)
}

/// Header and codewords in file order; duplicates are kept so that callers
/// can report them.
pub fn parse_codewords(text: &str) -> Result<(Header, Vec<Subspace>)> {
    let mut header = None;
    let mut words = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        match header {
            None => header = Some(parse_header(body, line)?),
            Some(h) => {
                let s = parse_subspace(body, h.v, h.q, line)?;
                if let Some(k) = h.k {
                    if s.dim() != k {
                        return Err(Error::parse(line, format!("codeword has dimension {}, header says {k}", s.dim())));
                    }
                }
                words.push(s);
            }
        }
    }
    let h = header.ok_or_else(|| Error::parse(0, "missing header"))?;
    if words.len() != h.count {
        return Err(Error::parse(0, format!("header count {} but {} codewords", h.count, words.len())));
    }
    Ok((h, words))
}

pub fn parse_code(text: &str) -> Result<SubspaceCode> {
    let (h, words) = parse_codewords(text)?;
    SubspaceCode::new(h.v, h.q, words)
}

pub fn format_code(c: &SubspaceCode) -> String {
    let h = Header { v: c.ambient_dim(), q: c.q(), k: c.constant_dim(), count: c.len() };
    let mut out = header_line(&h);
    out.push('\n');
    for s in c {
        out.push_str(&format_subspace(s));
        out.push('\n');
    }
    out
}

pub fn read_code(path: &Path) -> Result<SubspaceCode> {
    parse_code(&std::fs::read_to_string(path)?)
}

pub fn write_code(path: &Path, c: &SubspaceCode) -> Result<()> {
    Ok(std::fs::write(path, format_code(c))?)
}

// Reports: one `key = value` per line. Optional keys are omitted when the
// report has no value for them. `nine_config_types` and
// `aut.with_correlations` are derived and ignored on parse.

fn parse_distribution(v: &str, line: usize) -> Result<Distribution> {
    let mut d = Distribution::new();
    for item in v.split_whitespace() {
        let (k, m) = item.split_once('^').unwrap_or((item, "1"));
        let k = k.parse().map_err(|_| Error::parse(line, format!("bad value {k:?}")))?;
        let m = m.parse().map_err(|_| Error::parse(line, format!("bad multiplicity {m:?}")))?;
        d.insert(k, m);
    }
    Ok(d)
}

fn parse_family(v: &str, line: usize) -> Result<FamilyCheck> {
    let bad = || Error::parse(line, format!("expected 'max/bound pass|fail', got {v:?}"));
    let (ratio, _) = v.split_once(' ').ok_or_else(bad)?;
    let (a, b) = ratio.split_once('/').ok_or_else(bad)?;
    Ok(FamilyCheck { max_seen: a.parse().map_err(|_| bad())?, bound: b.parse().map_err(|_| bad())? })
}

pub fn format_report(r: &CodeReport) -> String {
    let mut out = String::new();
    let mut kv = |k: &str, v: String| writeln!(out, "{k} = {v}").expect("string write");
    kv("v", r.v.to_string());
    kv("q", r.q.to_string());
    kv("k", r.k.map_or("*".into(), |k| k.to_string()));
    kv("size", r.size.to_string());
    if let Some(d) = r.min_distance {
        kv("min_distance", d.to_string());
    }
    kv("degree_distribution", power_notation(r.degree_distribution.iter().map(|(k, m)| (k, *m))));
    if let Some(s) = &r.light_plane {
        kv("light_plane", format_subspace(s));
    }
    if let Some(s) = &r.s_plane {
        kv("s_plane", format_subspace(s));
    }
    if let Some(p) = &r.s_profile {
        kv("s_profile", power_notation(p.iter().enumerate().map(|(i, m)| (i, *m))));
    }
    if !r.nine_configs.is_empty() {
        kv("nine_config_types", r.nine_config_summary());
        for (p, t) in &r.nine_configs {
            kv("nine_config", format!("{} {}", format_subspace(p), t.ascii()));
        }
    }
    if let Some(n) = r.seventeen_config_count {
        kv("seventeen_config_count", n.to_string());
    }
    if let Some(f) = &r.feasibility {
        for (name, c) in f.families() {
            kv(&format!("feasibility.{name}"), format!("{}/{} {}", c.max_seen, c.bound, if c.pass() { "pass" } else { "fail" }));
        }
    }
    if let Some(a) = &r.aut {
        kv("aut.collineations", a.collineations.to_string());
        kv("aut.self_dual", a.self_dual.to_string());
        kv("aut.with_correlations", a.with_correlations().to_string());
    }
    out
}

pub fn parse_report(text: &str) -> Result<CodeReport> {
    let mut map: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    let mut nine = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (k, v) = body.split_once('=').ok_or_else(|| Error::parse(line, "expected 'key = value'"))?;
        let (k, v) = (k.trim(), v.trim());
        if k == "nine_config" {
            nine.push((line, v));
        } else if map.insert(k, (line, v)).is_some() {
            return Err(Error::parse(line, format!("key {k} repeated")));
        }
    }
    let get = |k: &str| map.get(k).copied();
    let need = |k: &str| get(k).ok_or_else(|| Error::parse(0, format!("report lacks {k}")));
    let num = |k: &str| -> Result<Option<usize>> {
        match get(k) {
            None => Ok(None),
            Some((_, "*")) if k == "k" => Ok(None),
            Some((line, v)) => v.parse().map(Some).map_err(|_| Error::parse(line, format!("{k} is not a number"))),
        }
    };
    let v = num("v")?.ok_or_else(|| Error::parse(0, "report lacks v"))?;
    let q = num("q")?.ok_or_else(|| Error::parse(0, "report lacks q"))? as u32;
    let sub = |k: &str| -> Result<Option<Subspace>> { get(k).map(|(line, s)| parse_subspace(s, v, q, line)).transpose() };
    let s_plane = sub("s_plane")?;
    let s_profile = match get("s_profile") {
        None => None,
        Some((line, p)) => {
            let len = s_plane.as_ref().ok_or_else(|| Error::parse(line, "s_profile without s_plane"))?.dim() + 1;
            let d = parse_distribution(p, line)?;
            let mut out = vec![0; len];
            for (i, m) in d {
                *out.get_mut(i).ok_or_else(|| Error::parse(line, "s_profile index out of range"))? = m;
            }
            Some(out)
        }
    };
    let mut nine_configs = Vec::new();
    for (line, s) in nine {
        let (p, t) = s.rsplit_once(' ').ok_or_else(|| Error::parse(line, "expected 'point type'"))?;
        let t: SpreadType = t.parse().map_err(|_| Error::parse(line, format!("unknown type {t:?}")))?;
        nine_configs.push((parse_subspace(p.trim(), v, q, line)?, t));
    }
    let feasibility = match get("feasibility.lines") {
        None => None,
        Some(_) => {
            let fam = |k: &str| -> Result<FamilyCheck> {
                let (line, s) = need(&format!("feasibility.{k}"))?;
                parse_family(s, line)
            };
            Some(Feasibility { lines: fam("lines")?, points: fam("points")?, hyperplanes: fam("hyperplanes")?, solids: fam("solids")? })
        }
    };
    let aut = match get("aut.collineations") {
        None => None,
        Some((line, c)) => {
            let collineations = c.parse().map_err(|_| Error::parse(line, "aut.collineations is not a number"))?;
            let (line, d) = need("aut.self_dual")?;
            let self_dual = d.parse().map_err(|_| Error::parse(line, "aut.self_dual is not a boolean"))?;
            Some(AutInfo { collineations, self_dual })
        }
    };
    let (line, dd) = need("degree_distribution")?;
    Ok(CodeReport {
        v,
        q,
        k: num("k")?,
        size: num("size")?.ok_or_else(|| Error::parse(0, "report lacks size"))?,
        min_distance: num("min_distance")?,
        degree_distribution: parse_distribution(dd, line)?,
        light_plane: sub("light_plane")?,
        s_plane,
        s_profile,
        nine_configs,
        seventeen_config_count: num("seventeen_config_count")?,
        feasibility,
        aut,
    })
}

/// Short human-readable rendering.
pub fn report_summary(r: &CodeReport) -> String {
    let mut out = String::new();
    let k = r.k.map_or("*".into(), |k| k.to_string());
    let d = r.min_distance.map_or("-".into(), |d| d.to_string());
    writeln!(out, "({}, {}, {}; {})_{} code", r.v, r.size, d, k, r.q).unwrap();
    writeln!(out, "degree distribution: {}", power_notation(r.degree_distribution.iter().map(|(k, m)| (k, *m)))).unwrap();
    match &r.light_plane {
        Some(s) => writeln!(out, "light plane: {}", format_subspace(s)).unwrap(),
        None if r.s_plane.is_some() => writeln!(out, "light plane: none (profile taken against the special plane)").unwrap(),
        None => {}
    }
    if let Some(p) = &r.s_profile {
        writeln!(out, "position of S: {}", power_notation(p.iter().enumerate().map(|(i, m)| (i, *m)))).unwrap();
    }
    if !r.nine_configs.is_empty() {
        writeln!(out, "9-configurations: {}", r.nine_config_summary()).unwrap();
    }
    if let Some(n) = r.seventeen_config_count {
        writeln!(out, "17-configurations: {n}").unwrap();
    }
    if let Some(f) = &r.feasibility {
        let parts: Vec<String> = f
            .families()
            .iter()
            .map(|(n, c)| format!("{n} {}/{} {}", c.max_seen, c.bound, if c.pass() { "ok" } else { "FAIL" }))
            .collect();
        writeln!(out, "constraints: {}", parts.join(", ")).unwrap();
    }
    if let Some(a) = &r.aut {
        writeln!(
            out,
            "automorphisms: {} collineations, {} ({} with correlations)",
            a.collineations,
            if a.self_dual { "self-dual" } else { "not self-dual" },
            a.with_correlations()
        )
        .unwrap();
    }
    out
}
