//! The ideal-count polynomials `C_n(q)`, `P_n(q) = C_n(q)/(q-1)^2` and
//! `Pg_n(X)` with `Pg_n(q + 1/q) = P_n(q)/q^(n-1)`.
//!
//! Each family has more than one construction here, and the constructions
//! share as little as possible:
//!
//! | route                      | input                                    |
//! |----------------------------|------------------------------------------|
//! | [`pg_via_interval`]        | divisor counts `a_{n,i}` and `T_i`       |
//! | [`pg_via_odd_divisors`]    | odd divisors and `F_{r_n(d)}`            |
//! | [`pg_roundtrip`]           | `C_n` divided by `(q-1)^2`, basis change |
//! | [`pg_via_sequences`]       | increasing-sequence set differences      |
//! | [`cn_via_odd_divisors`]    | four monomials per odd divisor           |
//! | [`cn_via_coeff_formula`]   | triangular test plus `2n = k(k+2i±1)`    |
//!
//! The power-series route lives in [`crate::series`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chebfam::ChebCache;
use crate::divisors::{
    a_coeffs, divisors, gcd, is_prime, odd_divisor_terms, r_r_plus_3_index, sequence_for_divisor,
    triangular_index, OddDivisorTerm,
};
use crate::error::{Error, Result};
use crate::intpoly::{q_minus_one_squared, IntPoly, LaurentPoly};
use crate::verdict::Verdict;

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be >= 1".into()));
    }
    Ok(())
}

/// `Pg_n = a_{n,0} + sum_{i>=1} a_{n,i} T_i`.
pub fn pg_via_interval(n: u64) -> IntPoly {
    assert!(n >= 1);
    let cache = ChebCache::global();
    let a = a_coeffs(n);
    let mut out = IntPoly::constant(BigInt::from(a[0]));
    for (i, &ai) in a.iter().enumerate().skip(1) {
        if ai != 0 {
            out += &cache.t(i).scale(&BigInt::from(ai));
        }
    }
    out
}

/// `Pg_n` as a signed sum of `F_k`, one term per odd divisor of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DecompositionWire", into = "DecompositionWire")]
pub struct PgDecomposition {
    pub n: u64,
    pub terms: Vec<OddDivisorTerm>,
    pub polynomial: IntPoly,
}

#[derive(Serialize, Deserialize)]
struct DecompositionWire {
    n: u64,
    terms: Vec<OddDivisorTerm>,
}

impl From<PgDecomposition> for DecompositionWire {
    fn from(d: PgDecomposition) -> Self {
        Self {
            n: d.n,
            terms: d.terms,
        }
    }
}

impl TryFrom<DecompositionWire> for PgDecomposition {
    type Error = String;
    fn try_from(w: DecompositionWire) -> std::result::Result<Self, String> {
        let expected = odd_divisor_terms(w.n);
        if w.n == 0 || expected != w.terms {
            return Err(format!("terms do not match the odd divisors of {}", w.n));
        }
        Ok(pg_via_odd_divisors(w.n))
    }
}

impl PgDecomposition {
    /// Coefficient of each `F_k` in the combination.
    pub fn f_combination(&self) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for t in &self.terms {
            *out.entry(t.f_index).or_insert(0) += t.sign as i64;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Terms by descending `F` index.
    pub fn ordered_terms(&self) -> Vec<OddDivisorTerm> {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| b.f_index.cmp(&a.f_index).then(a.d.cmp(&b.d)));
        terms
    }
}

impl fmt::Display for PgDecomposition {
    /// e.g. `F_14 - F_6 + F_3 + F_0`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.ordered_terms().iter().enumerate() {
            match (i, t.sign) {
                (0, 1) => {}
                (0, _) => f.write_str("-")?,
                (_, 1) => f.write_str(" + ")?,
                _ => f.write_str(" - ")?,
            }
            write!(f, "F_{}", t.f_index)?;
        }
        Ok(())
    }
}

pub fn pg_via_odd_divisors(n: u64) -> PgDecomposition {
    assert!(n >= 1);
    let cache = ChebCache::global();
    let terms = odd_divisor_terms(n);
    let mut polynomial = IntPoly::zero();
    for t in &terms {
        let f = cache.f(t.f_index);
        if t.sign > 0 {
            polynomial += &f;
        } else {
            polynomial -= &f;
        }
    }
    PgDecomposition {
        n,
        terms,
        polynomial,
    }
}

/// `Pg_n` by the cheapest route.
pub fn pg(n: u64) -> IntPoly {
    pg_via_odd_divisors(n).polynomial
}

/// `C_n(q)` together with its centred form `C_n(q)/q^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnPolynomial {
    pub n: u64,
    pub centered: LaurentPoly,
    pub full: LaurentPoly,
}

impl CnPolynomial {
    pub fn from_centered(n: u64, centered: LaurentPoly) -> Self {
        let full = centered.shift(n as i64);
        Self { n, centered, full }
    }

    /// `c_{n,i}`, the coefficient of `q^i` (and of `q^-i`) in the centred form.
    pub fn c(&self, i: i64) -> BigInt {
        self.centered.coeff(i)
    }

    /// Palindromic, monic, degree `2n`, divisible by `(q-1)^2` exactly twice
    /// with a non-negative palindromic quotient, and the absolute coefficient
    /// sum equal to four times the odd-divisor count.
    pub fn check_structure(&self) -> Verdict {
        let n = self.n;
        let mut v = Verdict::new(format!("C_{n} structure"));
        v.require("centred symmetric", self.centered.is_centered() && self.centered.is_palindromic(), &self.centered);
        v.require("palindromic", self.full.is_palindromic(), &self.full);
        v.require("monic", self.full.is_monic(), &self.full);
        v.expect_eq("min exponent", &0, &self.full.min_exp().unwrap_or(-1));
        v.expect_eq("degree", &(2 * n as i64), &self.full.max_exp().unwrap_or(-1));
        match self.full.exact_div(&q_minus_one_squared()) {
            Ok(p) => {
                v.require(
                    "quotient non-negative",
                    p.coeffs().iter().all(|c| !c.is_negative()),
                    &p,
                );
                v.require("quotient palindromic", p.is_palindromic(), &p);
                // C_n(1) = 0 with multiplicity exactly two.
                let at_one: BigInt = p.coeffs().iter().sum();
                v.require("quotient nonzero at q = 1", !at_one.is_zero(), &at_one);
            }
            Err(e) => {
                v.require("divisible by (q-1)^2", false, e);
            }
        }
        let odd = odd_divisor_terms(n).len() as u64;
        v.expect_eq(
            "absolute coefficient sum",
            &BigInt::from(4 * odd),
            &self.centered.abs_coeff_sum(),
        );
        v
    }
}

/// Four monomials per odd divisor `d`:
/// `q^(n/d - (d-1)/2) + q^-(n/d - (d-1)/2) - q^(n/d - (d+1)/2) - q^-(n/d - (d+1)/2)`.
pub fn cn_via_odd_divisors(n: u64) -> CnPolynomial {
    assert!(n >= 1);
    let mut terms = Vec::new();
    for t in odd_divisor_terms(n) {
        let outer = t.r + 1;
        terms.push((outer, BigInt::one()));
        terms.push((-outer, BigInt::one()));
        terms.push((t.r, -BigInt::one()));
        terms.push((-t.r, -BigInt::one()));
    }
    CnPolynomial::from_centered(n, LaurentPoly::from_terms(terms))
}

/// `c_{n,0}, ..., c_{n,n}`: `c_{n,0} = 2(-1)^r` for `n = r(r+1)/2`, and for
/// `i >= 1` the sign `(-1)^k` when `2n = k(k+2i+1)` or `(-1)^(k-1)` when
/// `2n = k(k+2i-1)`.
///
/// A slot hit twice means the two congruence families overlapped, which
/// cannot happen; it is reported as a consistency failure.
pub fn cn_coefficients(n: u64) -> Result<Vec<i64>> {
    require_positive(n)?;
    let mut c = vec![0i64; n as usize + 1];
    if let Some(r) = triangular_index(n) {
        c[0] = if r % 2 == 0 { 2 } else { -2 };
    }
    let sign = |e: u64| if e.is_multiple_of(2) { 1 } else { -1 };
    let mut hit = vec![false; n as usize + 1];
    for k in divisors(2 * n) {
        let m = (2 * n / k) as i64 - k as i64;
        for (t, s, family) in [(m - 1, sign(k), "k(k+2i+1)"), (m + 1, -sign(k), "k(k+2i-1)")] {
            if t < 2 || t % 2 != 0 {
                continue;
            }
            let i = (t / 2) as usize;
            if i > n as usize {
                return Err(Error::Consistency(format!("c_{{{n},{i}}} beyond degree")));
            }
            if hit[i] {
                return Err(Error::Consistency(format!(
                    "c_{{{n},{i}}} matched twice (second via 2n = {family}, k = {k})"
                )));
            }
            hit[i] = true;
            c[i] = s;
        }
    }
    Ok(c)
}

pub fn cn_via_coeff_formula(n: u64) -> Result<CnPolynomial> {
    let c = cn_coefficients(n)?;
    let mut terms = vec![(0, BigInt::from(c[0]))];
    for (i, &ci) in c.iter().enumerate().skip(1) {
        if ci != 0 {
            terms.push((i as i64, BigInt::from(ci)));
            terms.push((-(i as i64), BigInt::from(ci)));
        }
    }
    Ok(CnPolynomial::from_centered(n, LaurentPoly::from_terms(terms)))
}

/// `P_n(q) = C_n(q)/(q-1)^2` as an ordinary polynomial in `q`.
pub fn pn_from_cn(n: u64) -> Result<LaurentPoly> {
    require_positive(n)?;
    cn_via_odd_divisors(n)
        .full
        .exact_div(&q_minus_one_squared())
        .map_err(|e| Error::Consistency(format!("C_{n}(q) / (q-1)^2: {e}")))
}

/// `P_n(q)/q^(n-1)` pulled back through `X = q + 1/q`.
pub fn pg_roundtrip(n: u64) -> Result<IntPoly> {
    let centered = pn_from_cn(n)?.shift(-(n as i64 - 1));
    centered.to_x_basis()
}

/// `P_n(q)/q^(n-1)` assembled from increasing-sequence set differences:
/// for each odd divisor with odd sequence `S` and involute `S'`, add the
/// monomials of `S' \ S` when `S` is positive, subtract those of `S \ S'`
/// otherwise.
pub fn pg_via_sequences(n: u64) -> LaurentPoly {
    assert!(n >= 1);
    let mut terms = Vec::new();
    for d in crate::divisors::odd_divisors(n) {
        let (odd, even) = sequence_for_divisor(n, d).expect("odd divisor");
        if odd.is_positive() {
            terms.extend(even.difference(&odd).into_iter().map(|i| (i, BigInt::one())));
        } else {
            terms.extend(odd.difference(&even).into_iter().map(|i| (i, -BigInt::one())));
        }
    }
    LaurentPoly::from_terms(terms)
}

/// `Pg_n - F_{n-1}` and the two facts claimed about it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApproxDefect {
    pub n: u64,
    pub defect: IntPoly,
    /// `deg < n/2 - 1`, tested as `2 deg < n - 2`.
    pub degree_bound_holds: bool,
    pub power_of_two: bool,
}

impl ApproxDefect {
    pub fn verdict(&self) -> Verdict {
        let mut v = Verdict::new(format!("Pg_{} - F_{}", self.n, self.n - 1));
        v.require("degree bound", self.degree_bound_holds, &self.defect);
        v.expect_eq(
            "vanishes iff n is a power of two",
            &self.power_of_two,
            &self.defect.is_zero(),
        );
        v
    }
}

pub fn approx_defect(n: u64) -> Result<ApproxDefect> {
    if n < 2 {
        return Err(Error::OutOfRange("approx_defect needs n >= 2".into()));
    }
    let defect = &pg(n) - &*ChebCache::global().f(n as usize - 1);
    let degree_bound_holds = match defect.degree() {
        None => true,
        Some(d) => 2 * d + 2 < n as usize,
    };
    Ok(ApproxDefect {
        n,
        defect,
        degree_bound_holds,
        power_of_two: n.is_power_of_two(),
    })
}

/// `T_0(N), ..., T_{len-1}(N)` as integers.
fn tcheb_values(at: i64, len: usize) -> Vec<BigInt> {
    let at = BigInt::from(at);
    let mut out = Vec::with_capacity(len.max(2));
    out.push(BigInt::from(2));
    out.push(at.clone());
    while out.len() < len {
        let k = out.len();
        let next = &at * &out[k - 1] - &out[k - 2];
        out.push(next);
    }
    out.truncate(len);
    out
}

/// `Pg_n(N)` for each requested `N`, from the interval counts and integer
/// `T_i(N)` values; no polynomial in `X` is built.
pub fn pg_values(n: u64, ats: &[i64]) -> Vec<BigInt> {
    assert!(n >= 1);
    let a = a_coeffs(n);
    ats.iter()
        .map(|&at| {
            let t = tcheb_values(at, a.len());
            let mut acc = BigInt::from(a[0]);
            for (i, &ai) in a.iter().enumerate().skip(1) {
                if ai != 0 {
                    acc += &t[i] * BigInt::from(ai);
                }
            }
            acc
        })
        .collect()
}

pub fn pg_value(n: u64, at: i64) -> BigInt {
    pg_values(n, &[at]).pop().unwrap()
}

/// Expected `f` in `|Pg_m(1)| |Pg_k(1)| = f |Pg_mk(1)|` from `(m, k) mod 3`.
pub fn sixth_root_factor(m: u64, k: u64) -> u32 {
    let (a, b) = ((m % 3).min(k % 3), (m % 3).max(k % 3));
    match (a, b) {
        (0, 2) => 2,
        (2, 2) => 4,
        _ => 1,
    }
}

/// Outcome of comparing `|Pg_m(N)| |Pg_k(N)|` with `|Pg_mk(N)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultCheck {
    pub at: i64,
    pub m: u64,
    pub k: u64,
    #[serde(serialize_with = "crate::intpoly::bigint_string::serialize")]
    pub pm: BigInt,
    #[serde(serialize_with = "crate::intpoly::bigint_string::serialize")]
    pub pk: BigInt,
    #[serde(serialize_with = "crate::intpoly::bigint_string::serialize")]
    pub pmk: BigInt,
    /// `f` with `|Pg_m| |Pg_k| = f |Pg_mk|` where a law applies.
    pub expected_factor: Option<u32>,
    /// `None` when no law is asserted at this `N`.
    pub holds: Option<bool>,
}

impl MultCheck {
    pub fn from_values(at: i64, m: u64, k: u64, pm: BigInt, pk: BigInt, pmk: BigInt) -> Self {
        let (pm, pk, pmk) = (pm.abs(), pk.abs(), pmk.abs());
        let expected_factor = match at {
            -2 | -1 | 0 | 2 => Some(1),
            1 => Some(sixth_root_factor(m, k)),
            _ => None,
        };
        let holds = expected_factor.map(|f| &pm * &pk == &pmk * BigInt::from(f));
        Self {
            at,
            m,
            k,
            pm,
            pk,
            pmk,
            expected_factor,
            holds,
        }
    }

    /// `|Pg_m| |Pg_k| / |Pg_mk|` as a reduced fraction string.
    pub fn ratio(&self) -> String {
        let num = &self.pm * &self.pk;
        if self.pmk.is_zero() {
            return if num.is_zero() { "0/0".into() } else { format!("{num}/0") };
        }
        let g = num_integer::Integer::gcd(&num, &self.pmk);
        let (a, b) = (&num / &g, &self.pmk / &g);
        if b.is_one() {
            a.to_string()
        } else {
            format!("{a}/{b}")
        }
    }
}

pub fn mult_check(at: i64, m: u64, k: u64) -> Result<MultCheck> {
    require_positive(m)?;
    require_positive(k)?;
    if gcd(m, k) != 1 {
        return Err(Error::NotCoprime { m, k });
    }
    Ok(MultCheck::from_values(
        at,
        m,
        k,
        pg_value(m, at),
        pg_value(k, at),
        pg_value(m * k, at),
    ))
}

fn product(factors: &[IntPoly]) -> IntPoly {
    factors.iter().fold(IntPoly::one(), |acc, f| &acc * f)
}

/// The two factorizations of `Pg_6 -/+ Pg_2 Pg_3` and the coprime
/// divisibility corollary for `(m, k) = (3, 4)`.
pub fn mult_factor_identities() -> Verdict {
    let mut v = Verdict::new("Pg_6 -/+ Pg_2 Pg_3 factorizations");
    let lin = IntPoly::linear_root;
    let prod23 = &pg_via_interval(2) * &pg_via_interval(3);
    let p6 = pg_via_interval(6);
    let minus = product(&[lin(1), lin(-1), lin(-1), lin(2), lin(-2)]);
    let plus = product(&[lin(0), lin(1), lin(1), lin(-1), lin(-2)]);
    v.expect_eq("Pg_6 - Pg_2 Pg_3", &minus, &(&p6 - &prod23));
    v.expect_eq("Pg_6 + Pg_2 Pg_3", &plus, &(&p6 + &prod23));
    v.absorb(coprime_divisibility(3, 4));
    v
}

/// `Pg_mk^2 - Pg_m^2 Pg_k^2` is divisible by `X(X+1)(X^2-4)`, and also by
/// `X - 1` when the sixth-root factor is 1.
pub fn coprime_divisibility(m: u64, k: u64) -> Verdict {
    let mut v = Verdict::new(format!("Pg_{}^2 - Pg_{m}^2 Pg_{k}^2 divisibility", m * k));
    let (pm, pk, pmk) = (pg(m), pg(k), pg(m * k));
    let lhs = &(&pmk * &pmk) - &(&(&pm * &pm) * &(&pk * &pk));
    let lin = IntPoly::linear_root;
    let base = product(&[lin(0), lin(-1), lin(2), lin(-2)]);
    let (_, r) = lhs.div_rem_monic(&base).expect("monic divisor");
    v.expect_eq("remainder mod X(X+1)(X^2-4)", &IntPoly::zero(), &r);
    if sixth_root_factor(m, k) == 1 {
        let (_, r) = lhs.div_linear(&BigInt::one());
        v.expect_eq("remainder mod X - 1", &BigInt::zero(), &r);
    }
    v
}

/// Shape of `Pg_n - F_{n-1}` in the `F` basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DefectClass {
    Zero,
    PlusF0,
    MinusF0,
    PlusF1,
    MinusF1,
    Other,
}

impl fmt::Display for DefectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DefectClass::Zero => "0",
            DefectClass::PlusF0 => "+F_0",
            DefectClass::MinusF0 => "-F_0",
            DefectClass::PlusF1 => "+F_1",
            DefectClass::MinusF1 => "-F_1",
            DefectClass::Other => "other",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialFamily {
    pub n: u64,
    /// Read off the `F`-combination of the odd-divisor decomposition.
    pub observed: DefectClass,
    /// From `n = 2^a p` with `p = 2^(a+1) -/+ 1` or `2^(a+1) -/+ 3` prime.
    pub predicted: DefectClass,
    /// Sign of `F_0` in the decomposition, if present.
    pub f0_sign: Option<i64>,
    /// Sign of `F_1` in the decomposition, if present.
    pub f1_sign: Option<i64>,
    pub triangular: Option<u64>,
    pub r_r_plus_3: Option<u64>,
}

impl SpecialFamily {
    pub fn consistent(&self) -> bool {
        self.observed == self.predicted
            && self.f0_sign.is_some() == self.triangular.is_some()
            && self.f1_sign.is_some() == self.r_r_plus_3.is_some()
    }
}

fn predicted_class(n: u64) -> DefectClass {
    let a = n.trailing_zeros();
    let p = n >> a;
    if p == 1 {
        return DefectClass::Zero;
    }
    if !is_prime(p) || a >= 62 {
        return DefectClass::Other;
    }
    let two = 1u64 << (a + 1);
    if p + 1 == two {
        DefectClass::PlusF0
    } else if p == two + 1 {
        DefectClass::MinusF0
    } else if p + 3 == two {
        DefectClass::PlusF1
    } else if p == two + 3 {
        DefectClass::MinusF1
    } else {
        DefectClass::Other
    }
}

/// Classifies `Pg_n - F_{n-1}` through the `F`-basis coefficients of the
/// odd-divisor decomposition (the `F_k` are monic of degree `k`, hence a
/// basis), then compares with the number-theoretic prediction.
pub fn special_family_check(n: u64) -> SpecialFamily {
    assert!(n >= 1);
    let terms = odd_divisor_terms(n);
    let mut combo: BTreeMap<usize, i64> = BTreeMap::new();
    for t in &terms {
        *combo.entry(t.f_index).or_insert(0) += t.sign as i64;
    }
    let f0_sign = combo.get(&0).copied().filter(|&c| c != 0);
    let f1_sign = combo.get(&1).copied().filter(|&c| c != 0);
    *combo.entry(n as usize - 1).or_insert(0) -= 1;
    combo.retain(|_, c| *c != 0);
    let observed = match combo.iter().collect::<Vec<_>>().as_slice() {
        [] => DefectClass::Zero,
        [(0, 1)] => DefectClass::PlusF0,
        [(0, -1)] => DefectClass::MinusF0,
        [(1, 1)] => DefectClass::PlusF1,
        [(1, -1)] => DefectClass::MinusF1,
        _ => DefectClass::Other,
    };
    SpecialFamily {
        n,
        observed,
        predicted: predicted_class(n),
        f0_sign,
        f1_sign,
        triangular: triangular_index(n),
        r_r_plus_3: r_r_plus_3_index(n),
    }
}

/// `T_{r+1} - T_r = (X - 2) F_r`, and its Laurent form
/// `q^(r+1) + q^-(r+1) - q^r - q^-r = q^-1 (q-1)^2 F_r(q + 1/q)`.
pub fn lemma_cf(r: usize) -> Verdict {
    let cache = ChebCache::global();
    let mut v = Verdict::new(format!("T_{} - T_{r} = (X-2) F_{r}", r + 1));
    let f = cache.f(r);
    let lhs = &*cache.t(r + 1) - &*cache.t(r);
    v.expect_eq("X basis", &(&IntPoly::linear_root(2) * &*f), &lhs);
    let ri = r as i64;
    let laurent_lhs = LaurentPoly::from_i64_terms(&[(ri + 1, 1), (-ri - 1, 1), (ri, -1), (-ri, -1)]);
    let laurent_rhs = (&q_minus_one_squared() * &f.substitute_q_plus_inverse()).shift(-1);
    v.expect_eq("q basis", &laurent_lhs, &laurent_rhs);
    v
}
