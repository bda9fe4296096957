//! Exact computation of the ideal-count polynomials of the two-variable
//! Laurent polynomial ring over a finite field, the monic Chebyshev family
//! and its partial sums, with several independent routes to each object so
//! that they can be checked against one another.

pub mod chebfam;
pub mod divisors;
pub mod error;
pub mod hilbert;
pub mod intpoly;
pub mod series;
pub mod verdict;
pub mod zeta;

pub use chebfam::{fpoly, tcheb, ChebCache};
pub use error::{Error, Result};
pub use hilbert::{cn_via_odd_divisors, pg, pg_via_interval, pg_via_odd_divisors, CnPolynomial, PgDecomposition};
pub use intpoly::{IntPoly, LaurentPoly};
pub use series::TruncatedSeries;
pub use verdict::Verdict;
pub use zeta::{hasse_weil_factors, local_zeta_factors, HasseWeilFactorization, ZetaFactorization};
