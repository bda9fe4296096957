use num_bigint::BigInt;
use proptest::prelude::*;
use torus_ideals::chebfam::tcheb_closed;
use torus_ideals::divisors::{gcd, sequence_laws, IncreasingSequence};
use torus_ideals::hilbert::{cn_via_coeff_formula, mult_check, pg_roundtrip, pg_value, pg_via_sequences};
use torus_ideals::series::series_inverse;
use torus_ideals::zeta::{check_functional_equation, zeta_consistency_with_cn};
use torus_ideals::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pg_routes_agree(n in 1u64..400) {
        let interval = pg_via_interval(n);
        prop_assert_eq!(&pg_via_odd_divisors(n).polynomial, &interval);
        prop_assert_eq!(&pg_roundtrip(n).unwrap(), &interval);
        prop_assert!(interval.is_monic());
        prop_assert_eq!(interval.degree(), Some(n as usize - 1));
    }

    #[test]
    fn pg_matches_sequences_in_q(n in 1u64..200) {
        // Pg_n(q + 1/q) written out in q
        prop_assert_eq!(pg_via_sequences(n), pg(n).substitute_q_plus_inverse());
    }

    #[test]
    fn pg_value_matches_eval(n in 1u64..300, at in -6i64..=6) {
        prop_assert_eq!(pg_value(n, at), pg(n).eval_i64(at));
    }

    #[test]
    fn cn_structure(n in 1u64..600) {
        let c = cn_via_odd_divisors(n);
        let v = c.check_structure();
        prop_assert!(v.passed(), "{:?}", v);
        prop_assert_eq!(cn_via_coeff_formula(n).unwrap(), c);
    }

    #[test]
    fn zeta_symmetry(n in 1u64..3000) {
        let v = check_functional_equation(n);
        prop_assert!(v.passed(), "{:?}", v);
        let v = zeta_consistency_with_cn(n);
        prop_assert!(v.passed(), "{:?}", v);
        let z = local_zeta_factors(n);
        prop_assert_eq!(z.numerator.len(), z.denominator.len());
    }

    #[test]
    fn involution(a in 0i64..5000, h in 1u64..5000) {
        let s = IncreasingSequence::new(a, h).unwrap();
        let t = s.involute();
        prop_assert_eq!(t.involute(), s);
        prop_assert_eq!(t.sum(), s.sum());
        prop_assert_ne!(t.is_odd(), s.is_odd());
        prop_assert!(t.contains(&s));
        prop_assert_eq!(t.h - s.h, 2 * a as u64 + 1);
    }

    #[test]
    fn sequences(n in 1u64..5000) {
        let v = sequence_laws(n);
        prop_assert!(v.passed(), "{:?}", v);
    }

    #[test]
    fn multiplicative_at_small_points(m in 1u64..60, k in 1u64..60, at in -2i64..=2) {
        prop_assume!(gcd(m, k) == 1);
        let c = mult_check(at, m, k).unwrap();
        prop_assert_eq!(c.holds, Some(true), "{:?}", c);
    }

    #[test]
    fn chebyshev_product_and_composition(m in 0usize..40, k in 0usize..40) {
        // T_m T_k = T_{m+k} + T_{|m-k|} with T_0 = 2
        prop_assert_eq!(&tcheb(m) * &tcheb(k), &tcheb(m + k) + &tcheb(m.abs_diff(k)));
        if m >= 1 {
            prop_assert_eq!(tcheb_closed(m).unwrap(), tcheb(m));
        }
        // T_m(T_k(x)) = T_{mk}(x), checked pointwise
        for x in -3i64..=3 {
            let x = BigInt::from(x);
            let inner = tcheb(k).eval(&x);
            prop_assert_eq!(tcheb(m).eval(&inner), tcheb(m * k).eval(&x));
        }
    }

    #[test]
    fn f_is_partial_sum(k in 1usize..60) {
        prop_assert_eq!(&fpoly(k) - &fpoly(k - 1), tcheb(k));
    }

    #[test]
    fn series_inverse_is_two_sided(
        order in 1usize..12,
        coeffs in prop::collection::vec(prop::collection::vec(-5i64..=5, 0..4), 0..12),
    ) {
        let mut cs = vec![IntPoly::one()];
        cs.extend(coeffs.iter().map(|c| IntPoly::from_i64s(c)));
        cs.truncate(order);
        let s = TruncatedSeries::new(order, cs);
        let inv = series_inverse(&s).unwrap();
        let one = TruncatedSeries::one(order);
        prop_assert_eq!(s.mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.mul(&s).unwrap(), one);
    }

    #[test]
    fn json_round_trip(n in 1u64..80) {
        let p = pg(n);
        let back: IntPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
        let c = cn_via_odd_divisors(n);
        let back: CnPolynomial = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        prop_assert_eq!(back, c);
        let d = pg_via_odd_divisors(n);
        let back: PgDecomposition = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        prop_assert_eq!(back.polynomial, d.polynomial);
    }
}
