//! Truncated power series in `t` with polynomial-in-`X` coefficients, used
//! as an independent oracle: the infinite product generating `Pg_n` and the
//! rational generating functions of `T_k` and `F_k` are expanded term by
//! term and compared with the closed constructions.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::verdict::Verdict;

/// `sum_{k=0}^{order} coeffs[k] t^k`, exact through `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<IntPoly>,
}

impl TruncatedSeries {
    /// Pads with zeros or drops terms beyond `t^order`.
    pub fn new(order: usize, mut coeffs: Vec<IntPoly>) -> Self {
        coeffs.resize(order + 1, IntPoly::zero());
        Self { order, coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![IntPoly::one()])
    }

    /// Series with integer (constant-in-`X`) coefficients.
    pub fn from_i64s(order: usize, coeffs: &[i64]) -> Self {
        Self::new(
            order,
            coeffs
                .iter()
                .map(|&c| IntPoly::constant(BigInt::from(c)))
                .collect(),
        )
    }

    /// `1 - X t^step + t^(2 step)`
    pub fn chebyshev_denominator(order: usize, step: usize) -> Self {
        let mut coeffs = vec![IntPoly::zero(); order + 1];
        coeffs[0] = IntPoly::one();
        if step <= order {
            coeffs[step] = -IntPoly::x();
        }
        if 2 * step <= order {
            coeffs[2 * step] = IntPoly::one();
        }
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &IntPoly {
        &self.coeffs[k]
    }

    /// Re-truncates at a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order);
        Self::new(order, self.coeffs[..=order].to_vec())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    /// Product truncated at the common order. Zero coefficients are skipped,
    /// so sparse factors like `(1 - t^i)^2` cost one pass.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = vec![IntPoly::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Ok(Self::new(self.order, out))
    }

    /// `b` with `self * b = 1`, via `b_k = -sum_{j=1..k} a_j b_{k-j}`.
    pub fn inverse(&self) -> Result<Self> {
        Self::one(self.order).div(self)
    }

    /// `q` with `divisor * q = self`; the divisor must have constant term 1.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.check_order(divisor)?;
        if divisor.coeffs[0] != IntPoly::one() {
            return Err(Error::NonUnitConstant);
        }
        let support: Vec<(usize, &IntPoly)> = divisor
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out: Vec<IntPoly> = Vec::with_capacity(self.order + 1);
        for k in 0..=self.order {
            let mut acc = self.coeffs[k].clone();
            for &(j, d) in support.iter().take_while(|(j, _)| *j <= k) {
                let prev = &out[k - j];
                if !prev.is_zero() {
                    acc -= &(d * prev);
                }
            }
            out.push(acc);
        }
        Ok(Self {
            order: self.order,
            coeffs: out,
        })
    }
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.mul(b)
}

pub fn series_inverse(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.inverse()
}

/// `prod_{i=1}^{order} (1 - t^i)^2 / (1 - X t^i + t^(2i))` through `t^order`.
///
/// Factors with `i > order` start at `t^(order+1)` and are omitted. Each
/// denominator is applied by series division, which equals multiplying by
/// its inverse but touches only the two nonzero terms.
pub fn expand_pg_product(order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for i in 1..=order {
        let mut numer = vec![0i64; order + 1];
        numer[0] = 1;
        numer[i] = -2;
        if 2 * i <= order {
            numer[2 * i] = 1;
        }
        acc = acc
            .mul(&TruncatedSeries::from_i64s(order, &numer))
            .and_then(|s| s.div(&TruncatedSeries::chebyshev_denominator(order, i)))
            .expect("orders agree and denominator is unital");
    }
    acc
}

/// `Pg_1, ..., Pg_order` read off the product: the `t^n` coefficient is
/// `(X - 2) Pg_n`.
pub fn pg_from_series(order: usize) -> Result<Vec<IntPoly>> {
    let series = expand_pg_product(order);
    if series.coeff(0) != &IntPoly::one() {
        return Err(Error::Consistency("product constant term is not 1".into()));
    }
    let two = BigInt::from(2);
    (1..=order)
        .map(|n| {
            let (q, r) = series.coeff(n).div_linear(&two);
            if r != BigInt::from(0) {
                return Err(Error::Consistency(format!(
                    "t^{n} coefficient not divisible by X - 2 (remainder {r})"
                )));
            }
            Ok(q)
        })
        .collect()
}

/// `(1 + t) / (1 - X t + t^2)`
pub fn expand_f_gf(order: usize) -> TruncatedSeries {
    let inv = TruncatedSeries::chebyshev_denominator(order, 1)
        .inverse()
        .expect("unital");
    TruncatedSeries::from_i64s(order, &[1, 1])
        .mul(&inv)
        .expect("same order")
}

/// `(2 - X t) / (1 - X t + t^2)`
pub fn expand_tcheb_gf(order: usize) -> TruncatedSeries {
    let inv = TruncatedSeries::chebyshev_denominator(order, 1)
        .inverse()
        .expect("unital");
    let numer = TruncatedSeries::new(
        order,
        vec![IntPoly::constant(BigInt::from(2)), -IntPoly::x()],
    );
    numer.mul(&inv).expect("same order")
}

/// Replays the derivation of the `F` generating function: `(1 - t^2)/(1 - Xt + t^2)`
/// equals `1 + sum T_k t^k` and equals `(1 - t)` times the `F` series.
pub fn replay_f_generating_function(order: usize) -> Verdict {
    let mut v = Verdict::new(format!("F generating function through t^{order}"));
    let inv = TruncatedSeries::chebyshev_denominator(order, 1)
        .inverse()
        .expect("unital");
    let lhs = TruncatedSeries::from_i64s(order, &[1, 0, -1])
        .mul(&inv)
        .expect("same order");
    let rhs = TruncatedSeries::from_i64s(order, &[1, -1])
        .mul(&expand_f_gf(order))
        .expect("same order");
    let t_series = expand_tcheb_gf(order);
    for k in 0..=order {
        v.expect_eq(format!("t^{k}: (1-t^2)/D vs (1-t) F"), lhs.coeff(k), rhs.coeff(k));
        let expected = if k == 0 {
            IntPoly::one()
        } else {
            t_series.coeff(k).clone()
        };
        v.expect_eq(format!("t^{k}: (1-t^2)/D vs 1 + sum T_k"), &expected, lhs.coeff(k));
    }
    v
}

impl std::ops::Index<usize> for TruncatedSeries {
    type Output = IntPoly;
    fn index(&self, k: usize) -> &IntPoly {
        &self.coeffs[k]
    }
}

/// `X - 2` times `p`, for assembling expected series coefficients.
pub fn times_x_minus_two(p: &IntPoly) -> IntPoly {
    &IntPoly::linear_root(2) * p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebfam::{fpoly, tcheb};

    fn c(v: &[i64]) -> IntPoly {
        IntPoly::from_i64s(v)
    }

    #[test]
    fn multiplication_examples() {
        let a = TruncatedSeries::from_i64s(2, &[1, 1]);
        let b = TruncatedSeries::from_i64s(2, &[1, -1]);
        assert_eq!(a.mul(&b).unwrap(), TruncatedSeries::from_i64s(2, &[1, 0, -1]));
        assert_eq!(a.mul(&TruncatedSeries::one(2)).unwrap(), a);

        let p = TruncatedSeries::new(3, vec![IntPoly::one(), -IntPoly::x()]);
        let q = TruncatedSeries::new(3, vec![IntPoly::one(), IntPoly::x()]);
        let expected = TruncatedSeries::new(3, vec![IntPoly::one(), IntPoly::zero(), c(&[0, 0, -1])]);
        assert_eq!(p.mul(&q).unwrap(), expected);

        let other = TruncatedSeries::one(4);
        assert_eq!(a.mul(&other), Err(Error::OrderMismatch(2, 4)));
    }

    #[test]
    fn inverse_examples() {
        let a = TruncatedSeries::from_i64s(3, &[1, -1]);
        assert_eq!(a.inverse().unwrap(), TruncatedSeries::from_i64s(3, &[1, 1, 1, 1]));

        let d = TruncatedSeries::chebyshev_denominator(2, 1);
        let inv = d.inverse().unwrap();
        assert_eq!(inv.coeffs(), &[IntPoly::one(), IntPoly::x(), c(&[-1, 0, 1])]);

        let bad = TruncatedSeries::from_i64s(3, &[2, 1]);
        assert_eq!(bad.inverse(), Err(Error::NonUnitConstant));
    }

    #[test]
    fn inverse_is_two_sided() {
        let a = TruncatedSeries::new(
            6,
            vec![IntPoly::one(), c(&[3, -1]), c(&[0, 2, 5]), c(&[-7]), IntPoly::zero(), c(&[1, 1, 1])],
        );
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), TruncatedSeries::one(6));
    }

    #[test]
    fn product_low_coefficients() {
        let s = expand_pg_product(6);
        assert_eq!(s[0], IntPoly::one());
        assert_eq!(s[1], c(&[-2, 1]));
        assert_eq!(s[2], &c(&[-2, 1]) * &c(&[1, 1]));
    }

    #[test]
    fn extracted_rows() {
        let pgs = pg_from_series(7).unwrap();
        assert_eq!(pgs[0], IntPoly::one());
        assert_eq!(pgs[6], c(&[0, 2, 5, -4, -5, 1, 1]));
    }

    #[test]
    fn generating_function_rows() {
        let f = expand_f_gf(64);
        assert_eq!(f[0], IntPoly::one());
        assert_eq!(f[3], c(&[-1, -2, 1, 1]));
        let t = expand_tcheb_gf(64);
        assert_eq!(t[0], c(&[2]));
        assert_eq!(t[5], c(&[0, 5, 0, -5, 0, 1]));
        for k in 0..=64 {
            assert_eq!(f[k], fpoly(k));
            assert_eq!(t[k], tcheb(k));
        }
    }

    #[test]
    fn truncation_is_stable() {
        let short = expand_pg_product(15);
        let long = expand_pg_product(30);
        assert_eq!(long.truncate(15), short);
    }

    #[test]
    fn f_derivation_replays() {
        assert!(replay_f_generating_function(40).passed());
    }
}
