//! Local and Hasse–Weil zeta functions of the Hilbert scheme of `n` points,
//! kept as exponent multisets. A local factor `1 - q^e t` is stored as `e`,
//! a Hasse–Weil factor `zeta(s - s0)` as `s0`. Nothing is evaluated.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::divisors::odd_divisor_terms;
use crate::hilbert::cn_coefficients;
use crate::verdict::Verdict;

/// `prod (1 - q^e t)` over `numerator` divided by the same over `denominator`.
/// Both lists are sorted ascending; common factors are kept unless
/// [`ZetaFactorization::cancelled`] is called.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaFactorization {
    pub n: u64,
    #[serde(rename = "num")]
    pub numerator: Vec<i64>,
    #[serde(rename = "den")]
    pub denominator: Vec<i64>,
}

/// `prod zeta(s - s0)` over `numerator_shifts` divided by the same over
/// `denominator_shifts`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseWeilFactorization {
    pub n: u64,
    pub numerator_shifts: Vec<i64>,
    pub denominator_shifts: Vec<i64>,
}

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}

/// `(numerator, denominator)` exponent pairs for each odd divisor, in
/// divisor order.
fn divisor_groups(n: u64) -> Vec<([i64; 2], [i64; 2])> {
    let n = n as i64;
    odd_divisor_terms(n as u64)
        .into_iter()
        .map(|t| ([n + t.r, n - t.r], [n + t.r + 1, n - t.r - 1]))
        .collect()
}

pub fn local_zeta_factors(n: u64) -> ZetaFactorization {
    assert!(n >= 1);
    let groups = divisor_groups(n);
    ZetaFactorization {
        n,
        numerator: sorted(groups.iter().flat_map(|g| g.0).collect()),
        denominator: sorted(groups.iter().flat_map(|g| g.1).collect()),
    }
}

pub fn hasse_weil_factors(n: u64) -> HasseWeilFactorization {
    assert!(n >= 1);
    let groups = divisor_groups(n);
    HasseWeilFactorization {
        n,
        numerator_shifts: sorted(groups.iter().flat_map(|g| g.0).collect()),
        denominator_shifts: sorted(groups.iter().flat_map(|g| g.1).collect()),
    }
}

impl ZetaFactorization {
    /// Removes factors common to numerator and denominator.
    pub fn cancelled(&self) -> Self {
        let mut net: BTreeMap<i64, i64> = BTreeMap::new();
        for &e in &self.numerator {
            *net.entry(e).or_insert(0) += 1;
        }
        for &e in &self.denominator {
            *net.entry(e).or_insert(0) -= 1;
        }
        let mut numerator = Vec::new();
        let mut denominator = Vec::new();
        for (e, m) in net {
            let side = if m > 0 { &mut numerator } else { &mut denominator };
            side.extend(std::iter::repeat_n(e, m.unsigned_abs() as usize));
        }
        Self {
            n: self.n,
            numerator,
            denominator,
        }
    }
}

fn factor(e: i64) -> String {
    match e {
        0 => "(1-t)".into(),
        1 => "(1-qt)".into(),
        _ => format!("(1-q^{e}t)"),
    }
}

/// Product of factors with repeats folded into powers, in first-seen order.
fn factor_product(exps: &[i64]) -> (String, usize) {
    let mut seen: Vec<(i64, usize)> = Vec::new();
    for &e in exps {
        match seen.iter_mut().find(|(x, _)| *x == e) {
            Some((_, m)) => *m += 1,
            None => seen.push((e, 1)),
        }
    }
    let s = seen
        .iter()
        .map(|&(e, m)| if m == 1 { factor(e) } else { format!("{}^{m}", factor(e)) })
        .collect();
    (s, seen.len())
}

fn fraction(num: &[i64], den: &[i64]) -> String {
    let (top, _) = factor_product(num);
    let (bottom, distinct) = factor_product(den);
    if distinct > 1 {
        format!("{top}/({bottom})")
    } else {
        format!("{top}/{bottom}")
    }
}

/// One fraction per odd divisor, e.g. for `n = 3`:
/// `(1-q^5t)(1-qt)/((1-q^6t)(1-t)) * (1-q^2t)(1-q^4t)/(1-q^3t)^2`.
pub fn render_local_zeta(n: u64) -> String {
    divisor_groups(n)
        .iter()
        .map(|(num, den)| fraction(num, den))
        .collect::<Vec<_>>()
        .join(" * ")
}

impl fmt::Display for ZetaFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fraction(&self.numerator, &self.denominator))
    }
}

impl fmt::Display for HasseWeilFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |shifts: &[i64]| {
            shifts
                .iter()
                .map(|&s| match s {
                    0 => "zeta(s)".to_string(),
                    s if s < 0 => format!("zeta(s+{})", -s),
                    s => format!("zeta(s-{s})"),
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(
            f,
            "{} / ({})",
            side(&self.numerator_shifts),
            side(&self.denominator_shifts)
        )
    }
}

fn reflected(n: u64, shifts: &[i64]) -> Vec<i64> {
    sorted(shifts.iter().map(|s| 2 * n as i64 - s).collect())
}

fn show(v: &[i64]) -> String {
    format!("{v:?}")
}

/// `s0 -> 2n - s0` preserves both shift multisets, and each side has twice
/// as many factors as `n` has odd divisors.
pub fn check_functional_equation(n: u64) -> Verdict {
    let mut v = Verdict::new(format!("functional equation, n = {n}"));
    let hw = hasse_weil_factors(n);
    let count = 2 * odd_divisor_terms(n).len();
    v.expect_eq("numerator size", &count, &hw.numerator_shifts.len());
    v.expect_eq("denominator size", &count, &hw.denominator_shifts.len());
    v.expect_eq(
        "numerator reflected",
        &show(&hw.numerator_shifts),
        &show(&reflected(n, &hw.numerator_shifts)),
    );
    v.expect_eq(
        "denominator reflected",
        &show(&hw.denominator_shifts),
        &show(&reflected(n, &hw.denominator_shifts)),
    );
    let local = local_zeta_factors(n);
    v.expect_eq("local and global numerators", &show(&local.numerator), &show(&hw.numerator_shifts));
    v.expect_eq("local and global denominators", &show(&local.denominator), &show(&hw.denominator_shifts));
    v
}

/// Rebuilds the cancelled factorization from the coefficients `c_{n,i}`:
/// `c_{n,i} < 0` puts `n +/- i` in the numerator, `c_{n,i} > 0` in the
/// denominator, each with multiplicity `|c_{n,i}|` (once for `i = 0`
/// counted `|c_{n,0}|` times).
pub fn zeta_from_cn(n: u64) -> crate::error::Result<ZetaFactorization> {
    let c = cn_coefficients(n)?;
    let ni = n as i64;
    let mut numerator = Vec::new();
    let mut denominator = Vec::new();
    for (i, &ci) in c.iter().enumerate() {
        let i = i as i64;
        let side = if ci < 0 { &mut numerator } else { &mut denominator };
        for _ in 0..ci.unsigned_abs() {
            side.push(ni + i);
            if i != 0 {
                side.push(ni - i);
            }
        }
    }
    Ok(ZetaFactorization {
        n,
        numerator: sorted(numerator),
        denominator: sorted(denominator),
    })
}

pub fn zeta_consistency_with_cn(n: u64) -> Verdict {
    let mut v = Verdict::new(format!("zeta exponents vs c_{{{n},i}}"));
    let local = local_zeta_factors(n).cancelled();
    match zeta_from_cn(n) {
        Ok(rebuilt) => {
            v.expect_eq("numerator", &show(&rebuilt.numerator), &show(&local.numerator));
            v.expect_eq("denominator", &show(&rebuilt.denominator), &show(&local.denominator));
        }
        Err(e) => {
            v.require("coefficients", false, e);
        }
    }
    v
}
