use anyhow::bail;
use clap::ValueEnum;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use torus_ideals::divisors::a_coeffs;
use torus_ideals::hilbert::{pg_values, pg_via_odd_divisors};
use torus_ideals::{fpoly, pg, tcheb, ChebCache, IntPoly};

use crate::render;
use crate::{Format, Output, UsageError};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Pg_n(N) next to F_{n-1}(N).
    Values,
    /// Pg_n(X), n >= 1.
    Pg,
    /// Monic Chebyshev T_k(X), k >= 0.
    Tcheb,
    /// F_k(X), k >= 0.
    Fpoly,
    /// Pg_n as a sum of T_k and as a signed sum of F_k.
    Decomp,
    /// Candidate b-file "n Pg_n(N)" for N = --at.
    Bfile,
}

/// How `Pg_n(N)` compares with `F_{n-1}(N)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equal,
    DifferBy1,
    Other,
}

impl Relation {
    fn of(a: &BigInt, b: &BigInt) -> Self {
        let d = a - b;
        if d == BigInt::from(0) {
            Relation::Equal
        } else if d == BigInt::from(1) || d == BigInt::from(-1) {
            Relation::DifferBy1
        } else {
            Relation::Other
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Relation::Equal => "equal",
            Relation::DifferBy1 => "differ-by-1",
            Relation::Other => "other",
        }
    }
}

#[derive(Serialize)]
struct Cell {
    at: i64,
    pg: String,
    f: String,
    relation: Relation,
}

#[derive(Serialize)]
struct ValuesRow {
    n: u64,
    values: Vec<Cell>,
}

#[derive(Serialize)]
struct PolyRow<'a> {
    n: u64,
    poly: &'a IntPoly,
}

#[derive(Serialize)]
struct DecompRow {
    n: u64,
    a: Vec<u64>,
    tsum: String,
    fsum: String,
}

pub fn run(which: TableKind, max_n: Option<u64>, points: &[i64], at: i64, format: Format) -> anyhow::Result<Output> {
    let body = match which {
        TableKind::Values => values(max_n.unwrap_or(16), points, format)?,
        TableKind::Pg => polys(1, max_n.unwrap_or(12), pg, "Pg", format)?,
        TableKind::Tcheb => polys(0, max_n.unwrap_or(12), |k| tcheb(k as usize), "T", format)?,
        TableKind::Fpoly => polys(0, max_n.unwrap_or(11), |k| fpoly(k as usize), "F", format)?,
        TableKind::Decomp => decomp(max_n.unwrap_or(16), format)?,
        TableKind::Bfile => bfile(max_n.unwrap_or(1000), at)?,
    };
    Ok(Output::ok(body))
}

fn require_range(max_n: u64) -> anyhow::Result<()> {
    if max_n == 0 {
        bail!(UsageError::Invalid("--max-n must be >= 1".into()));
    }
    Ok(())
}

fn values(max_n: u64, points: &[i64], format: Format) -> anyhow::Result<String> {
    require_range(max_n)?;
    if points.is_empty() {
        bail!(UsageError::Invalid("--N needs at least one point".into()));
    }
    let cache = ChebCache::global();
    let rows: Vec<ValuesRow> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let pgs = pg_values(n, points);
            let f = cache.f(n as usize - 1);
            let values = points
                .iter()
                .zip(pgs)
                .map(|(&at, p)| {
                    let fv = f.eval_i64(at);
                    Cell {
                        at,
                        relation: Relation::of(&p, &fv),
                        pg: p.to_string(),
                        f: fv.to_string(),
                    }
                })
                .collect();
            ValuesRow { n, values }
        })
        .collect();
    match format {
        Format::Json => render::json(&rows),
        Format::Csv => {
            let mut header = vec!["n".to_string()];
            for at in points {
                header.extend([format!("pg({at})"), format!("f({at})"), format!("rel({at})")]);
            }
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            render::csv(
                &header,
                rows.iter().map(|r| {
                    let mut cells = vec![r.n.to_string()];
                    for c in &r.values {
                        cells.extend([c.pg.clone(), c.f.clone(), c.relation.as_str().to_string()]);
                    }
                    cells
                }),
            )
        }
        Format::Text => {
            let mut header = vec!["n".to_string()];
            for at in points {
                header.extend([format!("Pg_n({at})"), format!("F_n-1({at})"), String::new()]);
            }
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut cells = vec![r.n.to_string()];
                    for c in &r.values {
                        let mark = match c.relation {
                            Relation::Equal => "=",
                            Relation::DifferBy1 => "~",
                            Relation::Other => "",
                        };
                        cells.extend([c.pg.clone(), c.f.clone(), mark.to_string()]);
                    }
                    cells
                })
                .collect();
            Ok(format!(
                "{}(= equal, ~ differ by 1)\n",
                render::text_table(&header, &body)
            ))
        }
    }
}

fn polys(start: u64, max_n: u64, make: impl Fn(u64) -> IntPoly + Sync, name: &str, format: Format) -> anyhow::Result<String> {
    if start > 0 {
        require_range(max_n)?;
    }
    let rows: Vec<(u64, IntPoly)> = (start..=max_n).into_par_iter().map(|n| (n, make(n))).collect();
    match format {
        Format::Json => render::json(
            &rows
                .iter()
                .map(|(n, poly)| PolyRow { n: *n, poly })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => render::csv(&["n", "polynomial"], rows.iter().map(|(n, p)| [n.to_string(), p.to_string()])),
        Format::Text => Ok(rows.iter().map(|(n, p)| format!("{name}_{n} = {p}\n")).collect()),
    }
}

/// `a_{n,0} + sum a_{n,i} T_i`, writing a constant 2 as `T_0`.
fn tsum(a: &[u64]) -> String {
    let mut terms = Vec::new();
    match a[0] {
        0 => {}
        2 => terms.push("T_0".to_string()),
        c => terms.push(c.to_string()),
    }
    for (i, &c) in a.iter().enumerate().skip(1) {
        match c {
            0 => {}
            1 => terms.push(format!("T_{i}")),
            c => terms.push(format!("{c}T_{i}")),
        }
    }
    terms.join(" + ")
}

fn decomp(max_n: u64, format: Format) -> anyhow::Result<String> {
    require_range(max_n)?;
    let rows: Vec<DecompRow> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let a = a_coeffs(n);
            let last = a.iter().rposition(|&c| c != 0).unwrap_or(0);
            let a = a[..=last].to_vec();
            DecompRow {
                n,
                tsum: tsum(&a),
                fsum: pg_via_odd_divisors(n).to_string(),
                a,
            }
        })
        .collect();
    match format {
        Format::Json => render::json(&rows),
        Format::Csv => render::csv(
            &["n", "tsum", "fsum"],
            rows.iter().map(|r| [r.n.to_string(), r.tsum.clone(), r.fsum.clone()]),
        ),
        Format::Text => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![r.n.to_string(), r.tsum.clone(), r.fsum.clone()])
                .collect();
            let mut out = String::new();
            for row in &body {
                out.push_str(&format!("{:>3} | {} | {}\n", row[0], row[1], row[2]));
            }
            Ok(out)
        }
    }
}

/// Offset 1: line `n Pg_n(at)` for n = 1..=max_n.
fn bfile(max_n: u64, at: i64) -> anyhow::Result<String> {
    require_range(max_n)?;
    let values: Vec<BigInt> = (1..=max_n)
        .into_par_iter()
        .map(|n| pg_values(n, &[at]).pop().unwrap())
        .collect();
    let mut out = format!("# Pg_n({at}) for n = 1..{max_n}\n");
    for (n, v) in (1..).zip(values) {
        out.push_str(&format!("{n} {v}\n"));
    }
    Ok(out)
}
