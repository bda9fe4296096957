//! Monic Chebyshev polynomials `T_k(X)` (defined by `T_k(q + 1/q) = q^k + q^-k`)
//! and their partial sums `F_k(X) = 1 + T_1 + ... + T_k`.
//!
//! The recurrence route lives in [`ChebCache`], which every other module
//! reads from. The binomial closed forms and the matrix-trace route are
//! independent and exist to cross-check the cache.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

#[derive(Default)]
struct Families {
    t: Vec<Arc<IntPoly>>,
    f: Vec<Arc<IntPoly>>,
}

/// Append-only memo of `T_0..T_max` and `F_0..F_max`.
///
/// Readers share a read lock; growth takes the write lock, so extension is
/// serialized while lookups of already-built indices proceed concurrently.
pub struct ChebCache {
    inner: RwLock<Families>,
}

impl Default for ChebCache {
    fn default() -> Self {
        Self::new()
    }
}

impl ChebCache {
    pub fn new() -> Self {
        let t0 = Arc::new(IntPoly::constant(BigInt::from(2)));
        let t1 = Arc::new(IntPoly::x());
        let f0 = Arc::new(IntPoly::one());
        let f1 = Arc::new(&*f0 + &*t1);
        Self {
            inner: RwLock::new(Families {
                t: vec![t0, t1],
                f: vec![f0, f1],
            }),
        }
    }

    /// Process-wide cache shared by all modules.
    pub fn global() -> &'static ChebCache {
        static CACHE: OnceLock<ChebCache> = OnceLock::new();
        CACHE.get_or_init(ChebCache::new)
    }

    /// Highest index currently stored.
    pub fn max_index(&self) -> usize {
        self.inner.read().unwrap().t.len() - 1
    }

    fn ensure(&self, k: usize) {
        if self.inner.read().unwrap().t.len() > k {
            return;
        }
        let mut fam = self.inner.write().unwrap();
        let x = IntPoly::x();
        while fam.t.len() <= k {
            let n = fam.t.len();
            let next = &(&x * &*fam.t[n - 1]) - &*fam.t[n - 2];
            let f_next = &*fam.f[n - 1] + &next;
            fam.t.push(Arc::new(next));
            fam.f.push(Arc::new(f_next));
        }
    }

    /// `T_k` by the three-term recurrence.
    pub fn t(&self, k: usize) -> Arc<IntPoly> {
        self.ensure(k);
        self.inner.read().unwrap().t[k].clone()
    }

    /// `F_k` as the running sum of the `T` family.
    pub fn f(&self, k: usize) -> Arc<IntPoly> {
        self.ensure(k);
        self.inner.read().unwrap().f[k].clone()
    }
}

pub fn tcheb(k: usize) -> IntPoly {
    (*ChebCache::global().t(k)).clone()
}

pub fn fpoly(k: usize) -> IntPoly {
    (*ChebCache::global().f(k)).clone()
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 1..=k {
        // exact at every step: acc = C(n - k + j, j)
        acc = acc * BigInt::from(n - k + j) / BigInt::from(j);
    }
    acc
}

fn signed(m: usize, v: BigInt) -> BigInt {
    if m.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// `T_k` from the binomial expansion
/// `sum (-1)^m (C(k-m, m) + C(k-m-1, m-1)) X^(k-2m)`. Valid for `k >= 1`.
pub fn tcheb_closed(k: usize) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::OutOfRange(
            "binomial closed form for T_k needs k >= 1".into(),
        ));
    }
    let n = k as i64;
    let mut coeffs = vec![BigInt::zero(); k + 1];
    for m in 0..=k / 2 {
        let mi = m as i64;
        let c = binomial(n - mi, mi) + binomial(n - mi - 1, mi - 1);
        coeffs[k - 2 * m] = signed(m, c);
    }
    Ok(IntPoly::new(coeffs))
}

type Mat2 = [[IntPoly; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let entry = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// `T_k` as the trace of `M^k` with `M = [[X, -1], [1, 0]]`, by repeated squaring.
pub fn tcheb_trace(k: usize) -> IntPoly {
    let mut result: Mat2 = [
        [IntPoly::one(), IntPoly::zero()],
        [IntPoly::zero(), IntPoly::one()],
    ];
    let mut base: Mat2 = [
        [IntPoly::x(), IntPoly::from_i64s(&[-1])],
        [IntPoly::one(), IntPoly::zero()],
    ];
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base);
        }
    }
    &result[0][0] + &result[1][1]
}

/// `F_k` from its two binomial sums. Valid for `k >= 1`.
pub fn fpoly_closed(k: usize) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::OutOfRange(
            "binomial closed form for F_k needs k >= 1".into(),
        ));
    }
    let n = k as i64;
    let mut coeffs = vec![BigInt::zero(); k + 1];
    for m in 0..=k / 2 {
        let mi = m as i64;
        coeffs[k - 2 * m] += signed(m, binomial(n - mi, mi));
    }
    for m in 0..=(k - 1) / 2 {
        let mi = m as i64;
        coeffs[k - 2 * m - 1] += signed(m, binomial(n - mi - 1, mi));
    }
    Ok(IntPoly::new(coeffs))
}

/// `F_k(0) = (-1)^floor(k/2)`, checked against the cached polynomial.
pub fn fpoly_constant_term(k: usize) -> Result<i64> {
    let expected: i64 = if (k / 2).is_multiple_of(2) { 1 } else { -1 };
    let actual = ChebCache::global().f(k).coeff(0);
    if actual != BigInt::from(expected) {
        return Err(Error::Consistency(format!(
            "F_{k}(0) = {actual}, expected {expected}"
        )));
    }
    Ok(expected)
}
