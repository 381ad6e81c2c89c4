//! Randomized ring-axiom checks for the Laurent polynomial layer.
//!
//! All assertions are exact integer identities; there is no tolerance.

use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;
use selfdual::laurent::LaurentPoly;

const RANK: usize = 2;

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    vec((vec(-4i32..=4, RANK), -9i64..=9), 0..6).prop_map(|terms| {
        LaurentPoly::from_terms(
            RANK,
            terms.into_iter().map(|(e, c)| (e, BigInt::from(c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn addition_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn addition_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn subtraction_inverts_addition(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.add(&b).sub(&b), a);
    }

    #[test]
    fn exact_div_inverts_mul(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b);
        let quot = prod.exact_div(&b).expect("a*b is divisible by b");
        prop_assert_eq!(&quot, &a);
        prop_assert_eq!(quot.mul(&b), prod);
    }

    #[test]
    fn power_substitute_is_a_ring_homomorphism(
        a in arb_poly(),
        b in arb_poly(),
        l in 1u32..=4,
    ) {
        prop_assert_eq!(
            a.mul(&b).power_substitute(l),
            a.power_substitute(l).mul(&b.power_substitute(l))
        );
        prop_assert_eq!(
            a.add(&b).power_substitute(l),
            a.power_substitute(l).add(&b.power_substitute(l))
        );
    }

    #[test]
    fn results_stay_canonical(a in arb_poly(), b in arb_poly()) {
        prop_assert!(a.add(&b).is_canonical());
        prop_assert!(a.sub(&b).is_canonical());
        prop_assert!(a.mul(&b).is_canonical());
    }

    #[test]
    fn evaluate_at_one_is_additive_and_multiplicative(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(
            a.add(&b).evaluate_at_one(),
            a.evaluate_at_one() + b.evaluate_at_one()
        );
        prop_assert_eq!(
            a.mul(&b).evaluate_at_one(),
            a.evaluate_at_one() * b.evaluate_at_one()
        );
    }
}
