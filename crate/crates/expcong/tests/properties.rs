//! Cross-module invariants: exhaustive sweeps at moderate scale plus
//! randomized structural checks. The heavier full-scale sweeps live in the
//! `acceptance` test target.

use expcong::arith::{crt_combine, factorize, gcd, is_prime, mod_pow, multiplicative_order};
use expcong::partition::enumerate_partition;
use expcong::symbol::{
    invert_argument, is_in_sign_subgroup, negate_argument, power_compat, symbol, symbol_via_crt,
    symbol_via_order, SymbolQuery, SymbolValue,
};

use proptest::prelude::*;

/// Oracle: e-fold multiplication, no squaring tricks.
fn pow_naive(a: i64, e: u64, n: u64) -> u64 {
    let a = a.rem_euclid(n as i64) as u64;
    let mut acc = 1 % n;
    for _ in 0..e {
        acc = (acc as u128 * a as u128 % n as u128) as u64;
    }
    acc
}

#[test]
fn totient_counts_units_up_to_ten_thousand() {
    for n in 1..=10_000u64 {
        let brute = (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64;
        assert_eq!(factorize(n).unwrap().euler_phi(), brute, "n={n}");
    }
}

#[test]
fn lambda_annihilates_every_unit_up_to_ten_thousand() {
    for n in 2..=10_000u64 {
        let lambda = factorize(n).unwrap().carmichael_lambda();
        for a in 1..n {
            if gcd(a, n) == 1 {
                assert_eq!(mod_pow(a as i64, lambda, n).unwrap(), 1, "a={a} n={n}");
            }
        }
    }
}

#[test]
fn orders_divide_lambda_and_are_minimal() {
    for n in 2..=500u64 {
        let f = factorize(n).unwrap();
        let lambda = f.carmichael_lambda();
        for a in 1..n {
            if gcd(a, n) != 1 {
                continue;
            }
            let d = multiplicative_order(a as i64, &f).unwrap().order;
            assert_eq!(lambda % d, 0, "a={a} n={n}");
        }
    }
}

#[test]
fn symbol_is_periodic_in_the_exponent_with_period_ord() {
    for n in 2..=120u64 {
        let f = factorize(n).unwrap();
        for a in 1..n {
            if gcd(a, n) != 1 {
                continue;
            }
            let r = multiplicative_order(a as i64, &f).unwrap().order;
            for k in 1..=3 * r {
                let here = symbol(&SymbolQuery::new(a as i64, n, k).unwrap());
                let shifted = symbol(&SymbolQuery::new(a as i64, n, k + r).unwrap());
                assert_eq!(here, shifted, "a={a} n={n} k={k} r={r}");
            }
        }
    }
}

proptest! {
    #[test]
    fn symbol_depends_only_on_the_residue_class(
        a in -50_000i64..50_000,
        n in 2u64..3000,
        k in 1u64..60,
        shift in -3i64..=3,
    ) {
        let base = symbol(&SymbolQuery::new(a, n, k).unwrap());
        let moved = symbol(&SymbolQuery::new(a + shift * n as i64, n, k).unwrap());
        prop_assert_eq!(base, moved);
    }

    #[test]
    fn nonzero_symbol_implies_a_unit(
        a in -50_000i64..50_000,
        n in 2u64..3000,
        k in 1u64..60,
    ) {
        let q = SymbolQuery::new(a, n, k).unwrap();
        if symbol(&q) != SymbolValue::Zero {
            prop_assert_eq!(gcd(q.a(), n), 1);
        }
    }

    #[test]
    fn the_three_evaluation_routes_agree(
        a in -50_000i64..50_000,
        n in 2u64..1500,
        k in 1u64..40,
    ) {
        let q = SymbolQuery::new(a, n, k).unwrap();
        let f = factorize(n).unwrap();
        let direct = symbol(&q);
        prop_assert_eq!(direct, symbol_via_crt(&q, &f).unwrap());
        prop_assert_eq!(direct, symbol_via_order(&q));
    }

    #[test]
    fn self_asserting_laws_hold_on_random_queries(
        a in -50_000i64..50_000,
        n in 3u64..1500,
        k in 1u64..30,
        t in 1u64..5,
    ) {
        // These operations compare against direct evaluation internally and
        // panic on any disagreement.
        let q = SymbolQuery::new(a, n, k).unwrap();
        negate_argument(&q);
        power_compat(a, t, n, k).unwrap();
        if gcd(q.a(), n) == 1 {
            invert_argument(&q).unwrap();
        }
    }

    #[test]
    fn sign_subgroup_products_stay_multiplicative(
        n in 2u64..800,
        k in 1u64..20,
        i in 0usize..4096,
        j in 0usize..4096,
    ) {
        let part = enumerate_partition(n, k).unwrap();
        let members: Vec<u64> = part
            .r_plus()
            .iter()
            .chain(part.r_minus())
            .copied()
            .collect();
        let a = members[i % members.len()];
        let b = members[j % members.len()];
        let ab = (a as u128 * b as u128 % n as u128) as u64;
        let sym = |x: u64| symbol(&SymbolQuery::new(x as i64, n, k).unwrap());
        prop_assert!(is_in_sign_subgroup(&SymbolQuery::new(a as i64, n, k).unwrap()));
        prop_assert_eq!(sym(ab), sym(a) * sym(b));
    }

    #[test]
    fn mod_pow_agrees_with_repeated_multiplication(
        a in 0i64..1000,
        e in 0u64..40,
        n in 1u64..2000,
    ) {
        prop_assert_eq!(mod_pow(a, e, n).unwrap(), pow_naive(a, e, n));
    }

    #[test]
    fn factorization_reconstructs_and_certifies(n in 1u64..1_000_000_000) {
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.value(), n);
        prop_assert_eq!(f.prime_powers().product::<u64>(), n);
        let mut previous = 1;
        for &(p, e) in f.factors() {
            prop_assert!(p > previous);
            prop_assert!(e >= 1);
            prop_assert!(is_prime(p));
            previous = p;
        }
    }

    #[test]
    fn crt_solution_reduces_back_to_the_inputs(
        picks in proptest::sample::subsequence(
            vec![(4u64), 9, 5, 49, 11, 13, 17, 19, 23, 29, 31, 37],
            1..=6,
        ),
        x_seed in proptest::num::u64::ANY,
    ) {
        let product: u64 = picks.iter().product();
        let x = x_seed % product;
        let congruences: Vec<(u64, u64)> = picks.iter().map(|&m| (x % m, m)).collect();
        prop_assert_eq!(crt_combine(&congruences).unwrap(), (x, product));
    }
}
