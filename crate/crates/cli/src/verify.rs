use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use torus_ideals::chebfam::{fpoly_closed, tcheb_closed, tcheb_trace};
use torus_ideals::divisors::{
    gcd, sequence_laws, sigma, square_plus_twice_square_count, two_squares_count,
};
use torus_ideals::hilbert::{
    approx_defect, cn_via_coeff_formula, cn_via_odd_divisors, lemma_cf, mult_check,
    mult_factor_identities, pg_roundtrip, pg_values, pg_via_interval, pg_via_odd_divisors,
    pg_via_sequences, pn_from_cn, special_family_check, DefectClass,
};
use torus_ideals::series::{
    expand_f_gf, expand_pg_product, expand_tcheb_gf, pg_from_series, replay_f_generating_function,
};
use torus_ideals::zeta::{check_functional_equation, render_local_zeta, zeta_consistency_with_cn};
use torus_ideals::{fpoly, pg, tcheb, IntPoly, Verdict};

use crate::report::{self, VerifySuiteReport};
use crate::{Format, Output};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    /// Pg by four routes, C_n by two routes plus structure.
    Routes,
    /// T_k and F_k by recurrence, closed forms, trace, generating functions.
    Cheb,
    /// Infinite-product expansion against the closed routes.
    Series,
    /// Product laws at N in {-2, -1, 0, 1, 2} over coprime pairs.
    Mult,
    /// Local and Hasse-Weil factorizations.
    Zeta,
    /// Pg_n - F_{n-1} in {0, +-F_0, +-F_1}.
    Special,
    /// deg(Pg_n - F_{n-1}) < n/2 - 1.
    Approx,
    /// Pg_n(2), Pg_n(-2), Pg_n(0) against divisor and representation counts.
    Roots,
    /// Increasing-sequence combinatorics.
    Sequences,
}

impl Suite {
    const EACH: [Suite; 9] = [
        Suite::Routes,
        Suite::Cheb,
        Suite::Series,
        Suite::Mult,
        Suite::Zeta,
        Suite::Special,
        Suite::Approx,
        Suite::Roots,
        Suite::Sequences,
    ];

    fn default_max(self) -> u64 {
        match self {
            Suite::All | Suite::Routes => 200,
            Suite::Cheb => 64,
            Suite::Series => 100,
            Suite::Mult => 60,
            Suite::Zeta => 500,
            Suite::Special => 10_000,
            Suite::Approx | Suite::Sequences => 1000,
            Suite::Roots => 300,
        }
    }
}

pub fn run(suite: Suite, max_n: Option<u64>, format: Format) -> Output {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let reports: Vec<VerifySuiteReport> = suites
        .into_iter()
        .map(|s| run_one(s, max_n.unwrap_or_else(|| s.default_max()).max(1)))
        .collect();
    let failed = reports.iter().any(|r| !r.ok());
    let body = report::render(&reports, format).expect("report rendering");
    Output { body, failed }
}

/// Runs `check` for each n in parallel and folds the verdicts in order.
fn sweep(report: &mut VerifySuiteReport, range: impl IntoParallelIterator<Item = u64>, check: impl Fn(u64) -> Verdict + Sync + Send) {
    let verdicts: Vec<Verdict> = range.into_par_iter().map(check).collect();
    for v in verdicts {
        report.add(v);
    }
}

pub fn run_one(suite: Suite, max: u64) -> VerifySuiteReport {
    match suite {
        Suite::All => unreachable!(),
        Suite::Routes => routes(max),
        Suite::Cheb => cheb(max),
        Suite::Series => series(max),
        Suite::Mult => mult(max),
        Suite::Zeta => zeta(max),
        Suite::Special => special(max),
        Suite::Approx => approx(max),
        Suite::Roots => roots(max),
        Suite::Sequences => sequences(max),
    }
}

fn routes(max: u64) -> VerifySuiteReport {
    let mut r = VerifySuiteReport::new("routes", format!("n <= {max}"));
    let series = pg_from_series(max as usize);
    if let Err(e) = &series {
        let mut v = Verdict::new("series extraction");
        v.require("exact division by X - 2", false, e);
        r.add(v);
    }
    let series = series.ok();
    sweep(&mut r, 1..=max, |n| {
        let mut v = Verdict::new(format!("n = {n}"));
        let interval = pg_via_interval(n);
        v.expect_eq("Pg odd divisors vs interval", &interval, &pg_via_odd_divisors(n).polynomial);
        match pg_roundtrip(n) {
            Ok(p) => {
                v.expect_eq("Pg roundtrip vs interval", &interval, &p);
            }
            Err(e) => {
                v.require("Pg roundtrip", false, e);
            }
        }
        if let Some(s) = &series {
            v.expect_eq("Pg series vs interval", &interval, &s[n as usize - 1]);
        }
        let cn = cn_via_odd_divisors(n);
        match cn_via_coeff_formula(n) {
            Ok(c) => {
                v.expect_eq("C_n coefficient formula vs odd divisors", &cn.full, &c.full);
            }
            Err(e) => {
                v.require("C_n coefficient formula", false, e);
            }
        }
        v.absorb(cn.check_structure());
        v
    });
    r
}

fn cheb(max: u64) -> VerifySuiteReport {
    let mut r = VerifySuiteReport::new("cheb", format!("k <= {max}"));
    let k_max = max as usize;
    let t_gf = expand_tcheb_gf(k_max);
    let f_gf = expand_f_gf(k_max);
    let x = IntPoly::x();
    sweep(&mut r, 0..=max, |k| {
        let k = k as usize;
        let mut v = Verdict::new(format!("k = {k}"));
        let t = tcheb(k);
        let f = fpoly(k);
        v.expect_eq("T trace", &t, &tcheb_trace(k));
        if k >= 1 {
            v.expect_eq("T closed form", &t, &tcheb_closed(k).expect("k >= 1"));
            v.expect_eq("F closed form", &f, &fpoly_closed(k).expect("k >= 1"));
            v.expect_eq("F recurrence", &fpoly(k + 1), &(&(&x * &f) - &fpoly(k - 1)));
        }
        v.expect_eq("T generating function", &t, &t_gf[k]);
        v.expect_eq("F generating function", &f, &f_gf[k]);
        v.absorb(lemma_cf(k));
        v
    });
    r
}

fn series(max: u64) -> VerifySuiteReport {
    let mut r = VerifySuiteReport::new("series", format!("t^{max}"));
    let order = max as usize;
    match pg_from_series(order) {
        Ok(pgs) => sweep(&mut r, 1..=max, |n| {
            let mut v = Verdict::new(format!("n = {n}"));
            v.expect_eq("series vs odd divisors", &pg(n), &pgs[n as usize - 1]);
            v
        }),
        Err(e) => {
            let mut v = Verdict::new("series extraction");
            v.require("exact division by X - 2", false, e);
            r.add(v);
        }
    }
    r.add(replay_f_generating_function(order));
    let mut v = Verdict::new("truncation");
    let half = order / 2;
    v.require(
        format!("order {order} truncated to {half}"),
        expand_pg_product(order).truncate(half) == expand_pg_product(half),
        "differs",
    );
    r.add(v);
    r
}

fn mult(max: u64) -> VerifySuiteReport {
    let mut r = VerifySuiteReport::new("mult", format!("coprime m, k <= {max}"));
    let pairs: Vec<(u64, u64)> = (1..=max)
        .flat_map(|m| (m..=max).map(move |k| (m, k)))
        .filter(|&(m, k)| gcd(m, k) == 1)
        .collect();
    let verdicts: Vec<Verdict> = pairs
        .par_iter()
        .map(|&(m, k)| {
            let mut v = Verdict::new(format!("(m, k) = ({m}, {k})"));
            for at in [-2i64, -1, 0, 1, 2] {
                match mult_check(at, m, k) {
                    Ok(c) => {
                        let expected = c.expected_factor.unwrap_or(1).to_string();
                        v.require(format!("N = {at}, factor {expected}"), c.holds == Some(true), c.ratio());
                    }
                    Err(e) => {
                        v.require(format!("N = {at}"), false, e);
                    }
                }
            }
            v
        })
        .collect();
    r.notes.push(format!("{} coprime pairs", pairs.len()));
    for v in verdicts {
        r.add(v);
    }
    r.add(mult_factor_identities());
    r
}

fn zeta(max: u64) -> VerifySuiteReport {
    let mut r = VerifySuiteReport::new("zeta", format!("n <= {max}"));
    let mut v = Verdict::new("displays");
    v.expect_eq("n = 4", &"(1-q^7t)(1-qt)/((1-q^8t)(1-t))".to_string(), &render_local_zeta(4));
    v.expect_eq(
        "n = 3",
        &"(1-q^5t)(1-qt)/((1-q^6t)(1-t)) * (1-q^2t)(1-q^4t)/(1-q^3t)^2".to_string(),
        &render_local_zeta(3),
    );
    r.add(v);
    sweep(&mut r, 1..=max, |n| {
        let mut v = check_functional_equation(n);
        v.absorb(zeta_consistency_with_cn(n));
        v
    });
    r
}

fn special(max: u64) -> VerifySuiteReport {
    let mut r = VerifySuiteReport::new("special", format!("n <= {max}"));
    let results: Vec<_> = (1..=max).into_par_iter().map(special_family_check).collect();
    let mut by_class: Vec<(DefectClass, Vec<u64>)> = [
        DefectClass::PlusF0,
        DefectClass::MinusF0,
        DefectClass::PlusF1,
        DefectClass::MinusF1,
    ]
    .into_iter()
    .map(|c| (c, Vec::new()))
    .collect();
    for s in &results {
        let mut v = Verdict::new(format!("n = {}", s.n));
        v.expect_eq("defect class", &s.predicted, &s.observed);
        v.expect_eq("F_0 present iff n triangular", &s.triangular.is_some(), &s.f0_sign.is_some());
        v.expect_eq("F_1 present iff n = r(r+3)/2", &s.r_r_plus_3.is_some(), &s.f1_sign.is_some());
        r.add(v);
        if let Some((_, ns)) = by_class.iter_mut().find(|(c, _)| *c == s.observed) {
            ns.push(s.n);
        }
    }
    for (c, ns) in by_class {
        r.notes.push(format!("{c}: {ns:?}"));
    }
    r
}

fn approx(max: u64) -> VerifySuiteReport {
    let mut r = VerifySuiteReport::new("approx", format!("2 <= n <= {max}"));
    let defects: Vec<_> = (2..=max.max(2))
        .into_par_iter()
        .map(|n| approx_defect(n).expect("n >= 2"))
        .collect();
    let mut zero = Vec::new();
    for d in defects {
        if d.defect.is_zero() {
            zero.push(d.n);
        }
        r.add(d.verdict());
    }
    r.notes.push(format!("zero defect at {zero:?}"));
    r
}

fn roots(max: u64) -> VerifySuiteReport {
    let mut r = VerifySuiteReport::new("roots", format!("n <= {max}"));
    sweep(&mut r, 1..=max, |n| {
        let mut v = Verdict::new(format!("n = {n}"));
        let vals = pg_values(n, &[2, -2, 0]);
        v.expect_eq("Pg_n(2) = sigma(n)", &BigInt::from(sigma(n)), &vals[0]);
        v.expect_eq("4|Pg_n(-2)| = r_2(n)", &BigInt::from(two_squares_count(n)), &(vals[1].abs() * 4));
        v.expect_eq(
            "2|Pg_n(0)| = #{x^2 + 2y^2 = n}",
            &BigInt::from(square_plus_twice_square_count(n)),
            &(vals[2].abs() * 2),
        );
        v
    });
    r
}

fn sequences(max: u64) -> VerifySuiteReport {
    let mut r = VerifySuiteReport::new("sequences", format!("n <= {max}"));
    sweep(&mut r, 1..=max, |n| {
        let mut v = sequence_laws(n);
        match pn_from_cn(n) {
            Ok(p) => {
                v.expect_eq("sequence sum vs centred P_n", &p.shift(-(n as i64 - 1)), &pg_via_sequences(n));
            }
            Err(e) => {
                v.require("P_n", false, e);
            }
        }
        v
    });
    r
}
