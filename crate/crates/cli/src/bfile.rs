//! OEIS b-files and the index transforms between them and our families.
//!
//! | sequence      | b-file index `i` maps to | typical reference |
//! |---------------|--------------------------|-------------------|
//! | `pg3`         | `Pg_i(3)`, `i >= 1`      | A329156           |
//! | `pg_eval N`   | `Pg_i(N)`, `i >= 1`      |                   |
//! | `pg_abs N`    | `abs(Pg_i(N))`, `i >= 1` | A002654 (N = -2), A002325 (N = 0) |
//! | `f_eval N`    | `F_i(N)`, `i >= 0`       | A002878 (3), A001834 (4), A030221 (5) |
//! | `sigma`       | `sigma(i)`, `i >= 1`     | A000203           |
//! | `odd_div_count` | odd divisors of `i`, `i >= 1` | A001227      |
//!
//! For `f_eval 3`: `F_i(3) = L(2i + 1)`, i.e. `F_{n-1}(3) = L(2n - 1)`.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context};
use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use torus_ideals::divisors::{odd_divisors, sigma};
use torus_ideals::hilbert::pg_values;
use torus_ideals::verdict::Verdict;

use crate::report::{self, VerifySuiteReport};
use crate::{Format, Output, UsageError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub id: String,
    pub entries: Vec<(i64, BigInt)>,
}

#[derive(Debug, thiserror::Error)]
#[error("{path}:{line}: {msg}")]
pub struct ParseError {
    pub path: String,
    pub line: usize,
    pub msg: String,
}

impl BFile {
    /// Two whitespace-separated integers per line; blank lines and lines
    /// starting with `#` are skipped. Indices must strictly increase.
    pub fn parse(id: &str, path: &str, text: &str) -> Result<Self, ParseError> {
        let err = |line: usize, msg: String| ParseError {
            path: path.to_string(),
            line,
            msg,
        };
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err(no + 1, format!("expected 'index value', got {line:?}")));
            };
            let i: i64 = i
                .parse()
                .map_err(|_| err(no + 1, format!("bad index {i:?}")))?;
            let v: BigInt = v
                .parse()
                .map_err(|_| err(no + 1, format!("bad value {v:?}")))?;
            if let Some((prev, _)) = entries.last() {
                if i <= *prev {
                    return Err(err(no + 1, format!("index {i} does not increase after {prev}")));
                }
            }
            entries.push((i, v));
        }
        Ok(Self {
            id: id.to_string(),
            entries,
        })
    }

    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let id = sequence_id(path);
        Ok(Self::parse(&id, &path.display().to_string(), &text)?)
    }
}

/// `b002878.txt` -> `A002878`; otherwise the file stem.
fn sequence_id(path: &Path) -> String {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("");
    match stem.strip_prefix('b') {
        Some(digits) if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) => {
            format!("A{digits}")
        }
        _ => stem.to_string(),
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Sequence {
    PgEval(i64),
    PgAbs(i64),
    FEval(i64),
    Sigma,
    OddDivCount,
}

impl Sequence {
    fn name(self) -> String {
        match self {
            Sequence::PgEval(n) => format!("Pg_i({n})"),
            Sequence::PgAbs(n) => format!("|Pg_i({n})|"),
            Sequence::FEval(n) => format!("F_i({n})"),
            Sequence::Sigma => "sigma(i)".into(),
            Sequence::OddDivCount => "odd divisors of i".into(),
        }
    }

    fn first_index(self) -> i64 {
        match self {
            Sequence::FEval(_) => 0,
            _ => 1,
        }
    }

    /// Values for indices `first_index..=last`, in order.
    fn values(self, last: i64) -> Vec<BigInt> {
        let first = self.first_index();
        if last < first {
            return Vec::new();
        }
        match self {
            Sequence::FEval(at) => {
                // F_0 = 1, F_1 = N + 1, F_{k+1} = N F_k - F_{k-1}
                let at = BigInt::from(at);
                let mut out = vec![BigInt::from(1), &at + 1];
                while (out.len() as i64) <= last {
                    let k = out.len();
                    let next = &at * &out[k - 1] - &out[k - 2];
                    out.push(next);
                }
                out.truncate(last as usize + 1);
                out
            }
            _ => (first as u64..=last as u64)
                .into_par_iter()
                .map(|i| match self {
                    Sequence::PgEval(at) => pg_values(i, &[at]).pop().unwrap(),
                    Sequence::PgAbs(at) => pg_values(i, &[at]).pop().unwrap().abs(),
                    Sequence::Sigma => BigInt::from(sigma(i)),
                    Sequence::OddDivCount => BigInt::from(odd_divisors(i).len()),
                    Sequence::FEval(_) => unreachable!(),
                })
                .collect(),
        }
    }
}

/// `sequence` plus the remaining positional words (`[N] BFILE`).
pub fn parse_args<'a>(sequence: &str, rest: &'a [String]) -> anyhow::Result<(Sequence, &'a str)> {
    let point = |s: &str| -> anyhow::Result<i64> {
        s.parse()
            .map_err(|_| UsageError::Invalid(format!("{sequence} needs an integer N, got {s:?}")).into())
    };
    let seq = match (sequence, rest) {
        ("pg3", [file]) => return Ok((Sequence::PgEval(3), file)),
        ("sigma", [file]) => return Ok((Sequence::Sigma, file)),
        ("odd_div_count", [file]) => return Ok((Sequence::OddDivCount, file)),
        ("pg_eval", [n, file]) => (Sequence::PgEval(point(n)?), file),
        ("pg_abs", [n, file]) => (Sequence::PgAbs(point(n)?), file),
        ("f_eval", [n, file]) => (Sequence::FEval(point(n)?), file),
        _ => bail!(UsageError::Invalid(format!(
            "unknown sequence or wrong arguments: {sequence} {}; expected pg3 FILE | pg_eval N FILE | pg_abs N FILE | f_eval N FILE | sigma FILE | odd_div_count FILE",
            rest.join(" ")
        ))),
    };
    Ok((seq.0, seq.1.as_str()))
}

pub fn check(seq: Sequence, bfile: &BFile, max_index: Option<u64>) -> VerifySuiteReport {
    let first = seq.first_index();
    let cap = max_index.map(|m| m as i64).unwrap_or(i64::MAX);
    let overlap: Vec<&(i64, BigInt)> = bfile
        .entries
        .iter()
        .filter(|(i, _)| *i >= first && *i <= cap)
        .collect();
    let last = overlap.last().map(|(i, _)| *i).unwrap_or(first - 1);
    let computed = seq.values(last);
    let range = match (overlap.first(), overlap.last()) {
        (Some((a, _)), Some((b, _))) => format!("{} vs {}, i in {a}..={b}", seq.name(), bfile.id),
        _ => format!("{} vs {}, no overlap", seq.name(), bfile.id),
    };
    let mut r = VerifySuiteReport::new("oeis-check", range);
    let mut v = Verdict::new(bfile.id.clone());
    for (i, expected) in &overlap {
        v.expect_eq(format!("i = {i}"), expected, &computed[(i - first) as usize]);
    }
    let skipped = bfile.entries.len() - overlap.len();
    if skipped > 0 {
        r.notes.push(format!("{skipped} entries outside the checked index range"));
    }
    r.add(v);
    r
}

pub fn run(sequence: &str, rest: &[String], max_n: Option<u64>, format: Format) -> anyhow::Result<Output> {
    let (seq, file) = parse_args(sequence, rest)?;
    let bfile = BFile::read(Path::new(file))?;
    let r = check(seq, &bfile, max_n);
    Ok(Output {
        failed: !r.ok(),
        body: report::render(std::slice::from_ref(&r), format)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let b = BFile::parse("A1", "x", "# header\n\n1 1\n2   3\n3 -4\n").unwrap();
        assert_eq!(b.entries.len(), 3);
        assert_eq!(b.entries[2], (3, BigInt::from(-4)));
    }

    #[test]
    fn reports_line_numbers() {
        let e = BFile::parse("A1", "f.txt", "# c\n1 1\n2 x\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.to_string(), "f.txt:3: bad value \"x\"");
        let e = BFile::parse("A1", "f.txt", "1 1\n1 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = BFile::parse("A1", "f.txt", "1 1 1\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn ids_from_file_names() {
        assert_eq!(sequence_id(Path::new("/tmp/b002878.txt")), "A002878");
        assert_eq!(sequence_id(Path::new("pg4.txt")), "pg4");
    }

    #[test]
    fn lucas_offset() {
        // A002878 starts 1, 4, 11, 29, 76 at index 0
        let b = BFile::parse("A002878", "-", "0 1\n1 4\n2 11\n3 29\n4 76\n").unwrap();
        assert!(check(Sequence::FEval(3), &b, None).ok());
        let shifted = BFile::parse("A002878", "-", "1 1\n2 4\n3 11\n").unwrap();
        assert!(!check(Sequence::FEval(3), &shifted, None).ok());
    }

    #[test]
    fn overlap_only() {
        let b = BFile::parse("A000203", "-", "0 0\n1 1\n2 3\n3 4\n4 7\n").unwrap();
        let r = check(Sequence::Sigma, &b, None);
        assert!(r.ok());
        assert_eq!(r.passed, 4);
        assert_eq!(r.notes, vec!["1 entries outside the checked index range"]);
    }
}
