use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use ptmpow::arith::{binom, nu2_binom, nu2_int, s2, Valuation};
use ptmpow::fpoly::FSeries;
use ptmpow::harness::{CachedPrefix, Family};
use ptmpow::poly::IntPoly;
use ptmpow::tm::{self, TmSeq};

fn poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-1_000_000i64..1_000_000, 0..max_len).prop_map(|c| IntPoly::from_i64s(&c))
}

fn naive_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    IntPoly::from_coeffs(out)
}

proptest! {
    #[test]
    fn multiplication_matches_schoolbook(a in poly(200), b in poly(200)) {
        prop_assert_eq!(&a * &b, naive_mul(&a, &b));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(30), b in poly(30), x in -50i64..50) {
        prop_assert_eq!((&a * &b).eval_i64(x), a.eval_i64(x) * b.eval_i64(x));
        prop_assert_eq!((&a + &b).eval_i64(x), a.eval_i64(x) + b.eval_i64(x));
    }

    #[test]
    fn valuation_is_additive(a in any::<i64>(), b in any::<i64>()) {
        let (x, y) = (BigInt::from(a), BigInt::from(b));
        let expected = match (nu2_int(&x), nu2_int(&y)) {
            (Valuation::Finite(u), Valuation::Finite(v)) => Valuation::Finite(u + v),
            _ => Valuation::Infinite,
        };
        prop_assert_eq!(nu2_int(&(x * y)), expected);
    }

    #[test]
    fn kummer_carries(a in 0u64..2000, b in 0u64..2000) {
        let (n, k) = (a.max(b), a.min(b));
        let direct = nu2_int(&BigInt::from(binom(n, k))).finite().unwrap();
        prop_assert_eq!(nu2_binom(n, k).unwrap(), direct);
        prop_assert_eq!(direct, u64::from(s2(k) + s2(n - k) - s2(n)));
    }

    #[test]
    fn f_addition_formula(n in 0u64..25, t1 in -6i64..6, t2 in -6i64..6) {
        let s = FSeries::up_to(n);
        let lhs = s.f(n).eval_int(t1 + t2);
        let rhs: BigRational = (0..=n).map(|j| s.f(j).eval_int(t1) * s.f(n - j).eval_int(t2)).sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn t_m_parity_is_binomial(m in 1u64..8, n in 0u64..300) {
        // F(x) == 1/(1-x) mod 2.
        let t = TmSeq::with_max(m, n).unwrap();
        let odd = t.at(n) % 2u32 != BigInt::zero();
        prop_assert_eq!(odd, binom(n + m - 1, m - 1) % 2u32 == 1u32.into());
    }

    #[test]
    fn t3_zero_membership(n in 0u64..5000) {
        let t = TmSeq::with_max(3, n).unwrap();
        prop_assert_eq!(t.at(n).is_zero(), tm::t3_is_zero(n));
    }

    #[test]
    fn t2_partner_negates(n in 0u64..4000) {
        let t2 = tm::t2_prefix(3 * n + 3);
        let p = tm::t2_symmetry_partner(&t2, n).unwrap();
        prop_assert_eq!(t2[p as usize], -t2[n as usize]);
        prop_assert_eq!(tm::t2_symmetry_partner(&t2, p).unwrap(), n);
    }

    #[test]
    fn cache_text_round_trips(m in 1u64..6, count in 1u64..400, t in any::<bool>()) {
        let family = if t { Family::T } else { Family::B };
        let prefix = CachedPrefix::compute(family, m, count).unwrap();
        prop_assert_eq!(CachedPrefix::decode(&prefix.encode()).unwrap(), prefix);
    }
}
