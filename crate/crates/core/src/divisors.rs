//! Arithmetic helpers: divisors, odd-divisor parameters, the interval
//! counts `a_{n,i}`, brute-force representation counts, and increasing
//! sequences of consecutive integers with their involution.

use std::ops::RangeInclusive;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::verdict::Verdict;

/// All positive divisors of `n`, ascending. Trial division up to `sqrt(n)`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0 are undefined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn odd_divisors(n: u64) -> Vec<u64> {
    divisors(n).into_iter().filter(|d| d % 2 == 1).collect()
}

pub fn sigma(n: u64) -> u64 {
    divisors(n).iter().sum()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

fn is_square(v: u64) -> Option<u64> {
    let r = v.sqrt();
    (r * r == v).then_some(r)
}

/// Whether `d` lies in `((i + s)/2, i + s]` with `s = sqrt(2n + i^2)`,
/// decided on squared integers.
fn in_interval(n: u64, i: u64, d: u64) -> bool {
    let (n, i, d) = (n as i128, i as i128, d as i128);
    let s2 = 2 * n + i * i;
    let upper = d <= i || (d - i) * (d - i) <= s2;
    let lower = 2 * d - i > 0 && (2 * d - i) * (2 * d - i) > s2;
    upper && lower
}

/// Number of divisors `d` of `n` with `(i + s)/2 < d <= i + s`, `s = sqrt(2n + i^2)`.
pub fn a_coeff(n: u64, i: u64) -> Result<u64> {
    if n == 0 || i >= n {
        return Err(Error::OutOfRange(format!(
            "a_coeff needs 0 <= i <= n - 1, got n = {n}, i = {i}"
        )));
    }
    Ok(divisors(n)
        .into_iter()
        .filter(|&d| in_interval(n, i, d))
        .count() as u64)
}

/// `a_{n,0}, ..., a_{n,n-1}` in one pass over the divisors.
pub fn a_coeffs(n: u64) -> Vec<u64> {
    let divs = divisors(n);
    (0..n)
        .map(|i| divs.iter().filter(|&&d| in_interval(n, i, d)).count() as u64)
        .collect()
}

fn check_odd_divisor(n: u64, d: u64) -> Result<()> {
    if n == 0 || d == 0 || d.is_multiple_of(2) || !n.is_multiple_of(d) {
        return Err(Error::InvalidDivisor { n, d });
    }
    Ok(())
}

/// `r_n(d) = n/d - (d+1)/2` for an odd divisor `d` of `n`.
pub fn r_nd(n: u64, d: u64) -> Result<i64> {
    check_odd_divisor(n, d)?;
    Ok((n / d) as i64 - d.div_ceil(2) as i64)
}

/// `Some(r)` when `n = r(r+1)/2`.
pub fn triangular_index(n: u64) -> Option<u64> {
    let s = is_square(8 * n + 1)?;
    (n >= 1).then_some((s - 1) / 2)
}

/// `Some(r)` when `n = r(r+3)/2` with `r >= 1`.
pub fn r_r_plus_3_index(n: u64) -> Option<u64> {
    let s = is_square(8 * n + 9)?;
    (s >= 5).then_some((s - 3) / 2)
}

/// Ordered signed pairs `(x, y)` with `x^2 + y^2 = n`, by enumeration.
pub fn two_squares_count(n: u64) -> u64 {
    let bound = n.sqrt() as i64;
    let n = n as i64;
    let mut count = 0;
    for x in -bound..=bound {
        for y in -bound..=bound {
            if x * x + y * y == n {
                count += 1;
            }
        }
    }
    count
}

/// Ordered signed pairs `(x, y)` with `x^2 + 2y^2 = n`, by enumeration.
pub fn square_plus_twice_square_count(n: u64) -> u64 {
    let bound = n.sqrt() as i64;
    let n = n as i64;
    let mut count = 0;
    for x in -bound..=bound {
        for y in -bound..=bound {
            if x * x + 2 * y * y == n {
                count += 1;
            }
        }
    }
    count
}

/// One odd divisor `d` of `n` and the index of the `F` term it contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TermWire", into = "TermWire")]
pub struct OddDivisorTerm {
    pub d: u64,
    pub r: i64,
    pub sign: i8,
    pub f_index: usize,
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    d: u64,
    r: i64,
    sign: i8,
}

impl From<OddDivisorTerm> for TermWire {
    fn from(t: OddDivisorTerm) -> Self {
        TermWire {
            d: t.d,
            r: t.r,
            sign: t.sign,
        }
    }
}

impl TryFrom<TermWire> for OddDivisorTerm {
    type Error = String;
    fn try_from(w: TermWire) -> std::result::Result<Self, String> {
        let t = OddDivisorTerm::from_r(w.d, w.r);
        if t.sign != w.sign {
            return Err(format!("sign {} inconsistent with r = {}", w.sign, w.r));
        }
        Ok(t)
    }
}

impl OddDivisorTerm {
    pub fn new(n: u64, d: u64) -> Result<Self> {
        Ok(Self::from_r(d, r_nd(n, d)?))
    }

    fn from_r(d: u64, r: i64) -> Self {
        let (sign, f_index) = if r >= 0 { (1, r) } else { (-1, -r - 1) };
        Self {
            d,
            r,
            sign,
            f_index: f_index as usize,
        }
    }
}

/// One term per odd divisor of `n`, ascending in `d`.
pub fn odd_divisor_terms(n: u64) -> Vec<OddDivisorTerm> {
    odd_divisors(n)
        .into_iter()
        .map(|d| OddDivisorTerm::new(n, d).expect("odd divisor"))
        .collect()
}

/// The consecutive integers `a+1, ..., a+h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IncreasingSequence {
    pub a: i64,
    pub h: u64,
}

impl IncreasingSequence {
    pub fn new(a: i64, h: u64) -> Result<Self> {
        if h == 0 {
            return Err(Error::OutOfRange("increasing sequence needs h >= 1".into()));
        }
        Ok(Self { a, h })
    }

    pub fn first(&self) -> i64 {
        self.a + 1
    }

    pub fn last(&self) -> i64 {
        self.a + self.h as i64
    }

    pub fn elements(&self) -> RangeInclusive<i64> {
        self.first()..=self.last()
    }

    /// `h(h + 2a + 1) / 2`
    pub fn sum(&self) -> i64 {
        let h = self.h as i64;
        h * (h + 2 * self.a + 1) / 2
    }

    pub fn is_positive(&self) -> bool {
        self.a >= 0
    }

    pub fn is_odd(&self) -> bool {
        self.h % 2 == 1
    }

    /// `(a', h')` with `a + a' + 1 = 0` and `a' + h' = a + h`.
    pub fn involute(&self) -> Self {
        let a = -self.a - 1;
        let h = self.a + self.h as i64 - a;
        Self { a, h: h as u64 }
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.first() <= other.first() && other.last() <= self.last()
    }

    /// Elements of `self` not in `other`, ascending.
    pub fn difference(&self, other: &Self) -> Vec<i64> {
        self.elements()
            .filter(|x| !other.elements().contains(x))
            .collect()
    }
}

pub fn involute(s: &IncreasingSequence) -> IncreasingSequence {
    s.involute()
}

/// The odd sequence centred on `n/d` and its (even) involute.
pub fn sequence_for_divisor(
    n: u64,
    d: u64,
) -> Result<(IncreasingSequence, IncreasingSequence)> {
    let a = r_nd(n, d)?;
    let odd = IncreasingSequence::new(a, d)?;
    let even = IncreasingSequence::new(-((n / d) as i64) + ((d - 1) / 2) as i64, 2 * n / d)?;
    debug_assert_eq!(odd.involute(), even);
    Ok((odd, even))
}

/// Every `(a, h)` with `h >= 1` and `h(h + 2a + 1) = 2n`, by divisor scan of `2n`.
pub fn all_representations(n: u64) -> Vec<IncreasingSequence> {
    divisors(2 * n)
        .into_iter()
        .filter_map(|h| {
            let t = (2 * n / h) as i64 - h as i64 - 1;
            (t % 2 == 0).then_some(IncreasingSequence { a: t / 2, h })
        })
        .collect()
}

/// The odd-divisor / representation bijection for `n`: each odd divisor
/// gives an odd-length sequence and its even-length involute, both summing
/// to `n`, the shorter contained in the longer, and together they exhaust
/// the representations of `n`.
pub fn sequence_laws(n: u64) -> Verdict {
    let mut v = Verdict::new(format!("increasing sequences for n = {n}"));
    let mut reps = all_representations(n);
    reps.sort();
    let mut paired = Vec::new();
    for d in odd_divisors(n) {
        let (odd, even) = match sequence_for_divisor(n, d) {
            Ok(pair) => pair,
            Err(e) => {
                v.require(format!("d = {d}"), false, e);
                continue;
            }
        };
        v.expect_eq(format!("d = {d}: odd sum"), &(n as i64), &odd.sum());
        v.expect_eq(format!("d = {d}: even sum"), &(n as i64), &even.sum());
        v.require(format!("d = {d}: parity"), odd.is_odd() && !even.is_odd() && odd.h == d, format!("{odd:?} {even:?}"));
        v.require(format!("d = {d}: involution"), odd.involute() == even && even.involute() == odd, format!("{odd:?} {even:?}"));
        let (big, small) = if odd.is_positive() { (even, odd) } else { (odd, even) };
        v.require(format!("d = {d}: containment"), big.contains(&small), format!("{big:?} {small:?}"));
        v.expect_eq(format!("d = {d}: difference size"), &(big.h - small.h), &(big.difference(&small).len() as u64));
        paired.push(odd);
        paired.push(even);
    }
    paired.sort();
    v.require("bijection with representations", paired == reps, format!("{} representations, {} paired", reps.len(), paired.len()));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(97), vec![1, 97]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn odd_divisor_lists() {
        assert_eq!(odd_divisors(18), vec![1, 3, 9]);
        assert_eq!(odd_divisors(16), vec![1]);
        assert_eq!(odd_divisors(15), vec![1, 3, 5, 15]);
    }

    #[test]
    fn odd_divisor_count_is_multiplicative() {
        for m in 1..=100u64 {
            for n in 1..=100u64 {
                if gcd(m, n) == 1 {
                    assert_eq!(
                        odd_divisors(m * n).len(),
                        odd_divisors(m).len() * odd_divisors(n).len()
                    );
                }
            }
        }
    }

    #[test]
    fn interval_counts() {
        assert_eq!(a_coeff(6, 0).unwrap(), 2);
        assert_eq!(a_coeff(12, 1).unwrap(), 2);
        assert_eq!(a_coeff(9, 8).unwrap(), 1);
        assert!(a_coeff(9, 9).is_err());
        assert!(a_coeff(0, 0).is_err());
    }

    #[test]
    fn interval_boundary_is_exact() {
        // n = 4, i = 0: s = sqrt(8); (s/2, s] contains 2 only.
        assert_eq!(a_coeff(4, 0).unwrap(), 1);
        // n = 2, i = 0: s = 2 so d = 2 sits on the closed upper end, d = 1 on the open lower end.
        assert!(in_interval(2, 0, 2));
        assert!(!in_interval(2, 0, 1));
    }

    #[test]
    fn last_half_counts_are_one() {
        for n in 2..=300u64 {
            for i in 0..n {
                if 2 * i + 2 >= n {
                    assert_eq!(a_coeff(n, i).unwrap(), 1, "n = {n}, i = {i}");
                }
            }
        }
    }

    #[test]
    fn r_values() {
        for n in 1..50 {
            assert_eq!(r_nd(n, 1).unwrap(), n as i64 - 1);
        }
        assert_eq!(r_nd(15, 3).unwrap(), 3);
        assert_eq!(r_nd(10, 5).unwrap(), -1);
        assert_eq!(r_nd(10, 2), Err(Error::InvalidDivisor { n: 10, d: 2 }));
        assert_eq!(r_nd(10, 3), Err(Error::InvalidDivisor { n: 10, d: 3 }));
    }

    #[test]
    fn triangular() {
        assert_eq!(triangular_index(10), Some(4));
        assert_eq!(triangular_index(6), Some(3));
        assert_eq!(triangular_index(5), None);
        assert_eq!(triangular_index(1), Some(1));
        assert_eq!(r_r_plus_3_index(2), Some(1));
        assert_eq!(r_r_plus_3_index(20), Some(5));
        assert_eq!(r_r_plus_3_index(3), None);
    }

    #[test]
    fn representation_counts() {
        assert_eq!(two_squares_count(1), 4);
        assert_eq!(two_squares_count(5), 8);
        assert_eq!(two_squares_count(3), 0);
        assert_eq!(two_squares_count(25), 12);
        assert_eq!(square_plus_twice_square_count(1), 2);
        assert_eq!(square_plus_twice_square_count(2), 2);
        assert_eq!(square_plus_twice_square_count(3), 4);
    }

    #[test]
    fn sequences_for_eighteen() {
        let (odd, even) = sequence_for_divisor(18, 3).unwrap();
        assert_eq!(odd, IncreasingSequence { a: 4, h: 3 });
        assert_eq!(odd.elements().collect::<Vec<_>>(), vec![5, 6, 7]);
        assert_eq!(even, IncreasingSequence { a: -5, h: 12 });

        let (odd, even) = sequence_for_divisor(18, 9).unwrap();
        assert_eq!(odd, IncreasingSequence { a: -3, h: 9 });
        assert_eq!(even, IncreasingSequence { a: 2, h: 4 });
        assert_eq!(even.elements().collect::<Vec<_>>(), vec![3, 4, 5, 6]);

        let (odd, even) = sequence_for_divisor(8, 1).unwrap();
        assert_eq!(odd, IncreasingSequence { a: 7, h: 1 });
        assert_eq!(even, IncreasingSequence { a: -8, h: 16 });

        assert!(sequence_for_divisor(18, 2).is_err());
    }

    #[test]
    fn involution_examples() {
        let s = IncreasingSequence::new(4, 3).unwrap();
        assert_eq!(involute(&s), IncreasingSequence { a: -5, h: 12 });
        assert_eq!(involute(&involute(&s)), s);
        let s = IncreasingSequence::new(2, 4).unwrap();
        assert_eq!(s.involute(), IncreasingSequence { a: -3, h: 9 });
        assert!(IncreasingSequence::new(0, 0).is_err());
    }

    #[test]
    fn term_json_shape() {
        let t = OddDivisorTerm::new(10, 5).unwrap();
        assert_eq!(t.f_index, 0);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"d":5,"r":-1,"sign":-1}"#);
        let back: OddDivisorTerm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<OddDivisorTerm>(r#"{"d":5,"r":-1,"sign":1}"#).is_err());
    }
}
