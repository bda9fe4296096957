//! Dense big-integer polynomials in `X` and Laurent polynomials in `q`.
//!
//! Both types keep a canonical form at all times: no zero coefficient at
//! either end of the stored range, and the zero polynomial is the empty
//! coefficient vector. Equality is therefore structural equality.
//!
//! The bridge between the two is the substitution `X = q + 1/q`: a
//! centred palindromic Laurent polynomial is the image of exactly one
//! polynomial in `X`, recovered by [`LaurentPoly::to_x_basis`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chebfam::ChebCache;
use crate::error::{Error, Result};

/// Polynomial in `X` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `X^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `X - c`
    pub fn linear_root(c: i64) -> Self {
        Self::from_i64s(&[-c, 1])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `X^i`, zero outside the stored range.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_i64(&self, at: i64) -> BigInt {
        self.eval(&BigInt::from(at))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Synthetic division by `X - c`: returns `(quotient, remainder)`.
    pub fn div_linear(&self, c: &BigInt) -> (IntPoly, BigInt) {
        let Some(deg) = self.degree() else {
            return (Self::zero(), BigInt::zero());
        };
        let mut quotient = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for i in (0..=deg).rev() {
            carry = &carry * c + &self.coeffs[i];
            if i > 0 {
                quotient[i - 1] = carry.clone();
            }
        }
        (Self::new(quotient), carry)
    }

    /// Long division by a divisor whose leading coefficient is `±1`.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead = divisor.leading().expect("nonzero divisor");
        if !lead.abs().is_one() {
            return Err(Error::NonMonicDivisor);
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quotient = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quotient.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let q = top * lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quotient[k] = q;
        }
        Ok((Self::new(quotient), Self::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem_monic(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// The Laurent polynomial `self(q + 1/q)`.
    pub fn substitute_q_plus_inverse(&self) -> LaurentPoly {
        let x = LaurentPoly::from_terms([(-1, BigInt::one()), (1, BigInt::one())]);
        self.coeffs.iter().rev().fold(LaurentPoly::zero(), |acc, c| {
            &(&acc * &x) + &LaurentPoly::monomial(0, c.clone())
        })
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c));
        render_terms(terms, var)
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (i64, &'a BigInt)>, var: &str) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one();
        if e == 0 {
            out.push_str(&mag.to_string());
            continue;
        }
        if !unit {
            out.push_str(&mag.to_string());
        }
        out.push_str(var);
        if e != 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("X"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Schoolbook convolution of two dense coefficient vectors.
///
/// Every product in the crate goes through here; a Karatsuba or
/// Kronecker-substitution kernel would slot in at this point.
fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(convolve(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $imp:ident, $method:ident) => {
        impl $imp<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $imp::$method(&self, &rhs)
            }
        }
        impl $imp<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $imp::$method(&self, rhs)
            }
        }
        impl $imp<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $imp::$method(self, &rhs)
            }
        }
    };
}

forward_owned_binop!(IntPoly, Add, add);
forward_owned_binop!(IntPoly, Sub, sub);
forward_owned_binop!(IntPoly, Mul, mul);

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Finitely supported Laurent polynomial in `q` with integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^(min_exp + i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { min_exp, coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i64, c: BigInt) -> Self {
        Self::new(exp, vec![c])
    }

    /// Sums `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::new(lo, coeffs)
    }

    /// Signed unit monomials, e.g. `[(3, 1), (-2, -1)]` for `q^3 - q^-2`.
    pub fn from_i64_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    /// An ordinary polynomial in `q` (ascending coefficients from `q^0`).
    pub fn from_poly_coeffs(coeffs: Vec<BigInt>) -> Self {
        Self::new(0, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.min_exp;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let base = self.min_exp;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (base + i as i64, c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Support symmetric about `q^0`.
    pub fn is_centered(&self) -> bool {
        self.is_zero() || self.min_exp() == self.max_exp().map(|m| -m)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn abs_coeff_sum(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Views a Laurent polynomial with no negative exponents as coefficients
    /// of `q^0, q^1, ...`.
    pub fn to_poly_coeffs(&self) -> Option<Vec<BigInt>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        if self.min_exp < 0 {
            return None;
        }
        let mut out = vec![BigInt::zero(); self.min_exp as usize];
        out.extend(self.coeffs.iter().cloned());
        Some(out)
    }

    /// Returns `G` with `G(q + 1/q) = self`, expanding in the monic
    /// Chebyshev basis: `b_0 + sum_i b_i (q^i + q^-i)` becomes
    /// `b_0 + sum_i b_i T_i(X)`.
    pub fn to_x_basis(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if !self.is_palindromic() {
            return Err(Error::NotPalindromic(self.to_string()));
        }
        let (lo, hi) = (self.min_exp, self.max_exp().unwrap());
        if lo != -hi {
            return Err(Error::NotCentered {
                min_exp: lo,
                max_exp: hi,
            });
        }
        let cache = ChebCache::global();
        let mut out = IntPoly::constant(self.coeff(0));
        for i in 1..=hi {
            let b = self.coeff(i);
            if !b.is_zero() {
                out += &cache.t(i as usize).scale(&b);
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.coeffs.len();
        let m = divisor.coeffs.len();
        if n < m {
            return Err(Error::NotDivisible);
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quotient = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = &rem[k + m - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quotient[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::new(self.min_exp - divisor.min_exp, quotient))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, &BigInt)> = self.terms().collect();
        f.write_str(&render_terms(terms.into_iter().rev(), "q"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn laurent_combine(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.min_exp.min(b.min_exp);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.min_exp - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.min_exp - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::new(lo, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        laurent_combine(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        laurent_combine(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::new(
            self.min_exp + rhs.min_exp,
            convolve(&self.coeffs, &rhs.coeffs),
        )
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned_binop!(LaurentPoly, Add, add);
forward_owned_binop!(LaurentPoly, Sub, sub);
forward_owned_binop!(LaurentPoly, Mul, mul);

/// `(q - 1)^2 = q^2 - 2q + 1`
pub fn q_minus_one_squared() -> LaurentPoly {
    LaurentPoly::from_i64_terms(&[(0, 1), (1, -2), (2, 1)])
}

// JSON: coefficients travel as decimal strings so that no precision is lost.

/// Serializes a `BigInt` field as a decimal string.
pub mod bigint_string {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WireInt {
    Str(String),
    Int(i64),
}

impl WireInt {
    fn into_bigint(self) -> std::result::Result<BigInt, String> {
        match self {
            WireInt::Int(i) => Ok(BigInt::from(i)),
            WireInt::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|e| format!("bad integer {s:?}: {e}")),
        }
    }
}

fn to_strings(coeffs: &[BigInt]) -> Vec<String> {
    coeffs.iter().map(ToString::to_string).collect()
}

fn parse_ints<E: serde::de::Error>(raw: Vec<WireInt>) -> std::result::Result<Vec<BigInt>, E> {
    raw.into_iter()
        .map(|w| w.into_bigint().map_err(E::custom))
        .collect()
}

#[derive(Serialize)]
struct IntPolyOut {
    coeffs: Vec<String>,
}

#[derive(Deserialize)]
struct IntPolyIn {
    coeffs: Vec<WireInt>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IntPolyOut {
            coeffs: to_strings(&self.coeffs),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = IntPolyIn::deserialize(d)?;
        Ok(IntPoly::new(parse_ints(raw.coeffs)?))
    }
}

#[derive(Serialize)]
struct LaurentOut {
    min_exp: i64,
    coeffs: Vec<String>,
}

#[derive(Deserialize)]
struct LaurentIn {
    min_exp: i64,
    coeffs: Vec<WireInt>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentOut {
            min_exp: self.min_exp,
            coeffs: to_strings(&self.coeffs),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = LaurentIn::deserialize(d)?;
        Ok(LaurentPoly::new(raw.min_exp, parse_ints(raw.coeffs)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_i64_terms(terms)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let a = p(&[-1, 1, 1]);
        assert_eq!(&a + &IntPoly::zero(), a);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert!(z.coeffs().is_empty());
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let a = p(&[3, 0, 0]);
        assert_eq!(a.degree(), Some(0));
        assert_eq!(p(&[0, 0]), IntPoly::zero());
    }

    #[test]
    fn evaluation_matches_table_values() {
        // Pg_2 = X + 1 at 3, F_4 at 5
        assert_eq!(p(&[1, 1]).eval_i64(3), BigInt::from(4));
        assert_eq!(p(&[1, -2, -3, 1, 1]).eval_i64(5), BigInt::from(666));
        assert_eq!(IntPoly::zero().eval_i64(17), BigInt::zero());
    }

    #[test]
    fn palindromic_checks() {
        assert!(lp(&[(2, 1), (1, 1), (0, 1)]).is_palindromic());
        assert!(!lp(&[(2, 1), (1, 2)]).is_palindromic());
        let c3 = lp(&[(6, 1), (5, -1), (4, -1), (3, 2), (2, -1), (1, -1), (0, 1)]);
        assert!(c3.is_palindromic());
    }

    #[test]
    fn basis_change_examples() {
        let l = lp(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(l.to_x_basis().unwrap(), p(&[1, 1]));
        let l = lp(&[(2, 1), (-2, 1)]);
        assert_eq!(l.to_x_basis().unwrap(), p(&[-2, 0, 1]));
    }

    #[test]
    fn basis_change_rejects_bad_input() {
        assert!(matches!(
            lp(&[(1, 1), (-1, 2)]).to_x_basis(),
            Err(Error::NotPalindromic(_))
        ));
        assert!(matches!(
            lp(&[(2, 1), (0, 1)]).to_x_basis(),
            Err(Error::NotCentered { .. })
        ));
    }

    #[test]
    fn exact_division_examples() {
        let sq = q_minus_one_squared();
        let f = lp(&[(0, 1), (1, 1), (2, 1)]);
        assert_eq!((&sq * &f).exact_div(&sq).unwrap(), f);
        assert_eq!(sq.exact_div(&sq).unwrap(), lp(&[(0, 1)]));
        assert_eq!(
            lp(&[(2, 1), (0, 1)]).exact_div(&sq),
            Err(Error::NotDivisible)
        );
        assert_eq!(sq.exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn synthetic_division() {
        // X^2 - 4 = (X - 2)(X + 2)
        let (q, r) = p(&[-4, 0, 1]).div_linear(&BigInt::from(2));
        assert_eq!(q, p(&[2, 1]));
        assert!(r.is_zero());
        let (_, r) = p(&[1, 0, 1]).div_linear(&BigInt::from(2));
        assert_eq!(r, BigInt::from(5));
    }

    #[test]
    fn monic_long_division() {
        let a = p(&[1, 2, 3, 4, 5]);
        let d = p(&[-1, 0, 1]);
        let (q, r) = a.div_rem_monic(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree() < d.degree());
        assert_eq!(a.div_rem_monic(&p(&[1, 2])), Err(Error::NonMonicDivisor));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[-1, 1, 1]).to_string(), "X^2 + X - 1");
        assert_eq!(p(&[2]).to_string(), "2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(lp(&[(1, 1), (-1, 1), (0, -2)]).to_string(), "q - 2 + q^-1");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let a = p(&[-1, 0, 1]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"coeffs":["-1","0","1"]}"#);
        let l = lp(&[(-1, 1), (1, 1)]);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"min_exp":-1,"coeffs":["1","0","1"]}"#);
        let big: IntPoly =
            serde_json::from_str(r#"{"coeffs":["123456789012345678901234567890", 2]}"#).unwrap();
        assert_eq!(big.coeff(1), BigInt::from(2));
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-50i64..50, 0..8).prop_map(|c| IntPoly::from_i64s(&c))
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        (-5i64..5, prop::collection::vec(-20i64..20, 0..8)).prop_map(|(lo, c)| {
            LaurentPoly::new(lo, c.into_iter().map(BigInt::from).collect())
        })
    }

    fn is_canonical(p: &IntPoly) -> bool {
        p.coeffs().last().is_none_or(|c| !c.is_zero())
    }

    proptest! {
        #[test]
        fn eval_is_ring_homomorphism(a in arb_poly(), b in arb_poly(), x in -6i64..6) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
            prop_assert_eq!((&a - &b).eval(&x), a.eval(&x) - b.eval(&x));
        }

        #[test]
        fn products_stay_canonical(a in arb_poly(), b in arb_poly()) {
            let prod = &a * &b;
            prop_assert!(is_canonical(&prod) && is_canonical(&(&a - &b)));
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!(prod.degree(), Some(da + db));
            }
        }

        #[test]
        fn exact_div_inverts_mul(a in arb_laurent(), d in arb_laurent()) {
            prop_assume!(!d.is_zero());
            let prod = &a * &d;
            prop_assert_eq!(prod.exact_div(&d).unwrap(), a);
        }

        #[test]
        fn basis_change_is_section_of_substitution(b in prop::collection::vec(-30i64..30, 1..10)) {
            // sum_i b_i (q^i + q^-i) with b_0 as the constant
            let mut terms = vec![(0i64, BigInt::from(b[0]))];
            for (i, &c) in b.iter().enumerate().skip(1) {
                terms.push((i as i64, BigInt::from(c)));
                terms.push((-(i as i64), BigInt::from(c)));
            }
            let l = LaurentPoly::from_terms(terms);
            let g = l.to_x_basis().unwrap();
            prop_assert_eq!(g.substitute_q_plus_inverse(), l);
        }
    }
}
