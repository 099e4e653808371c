use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use resprime::arith::{d_k, factorize, is_prime, FactorBudget};
use resprime::bivar::BivarPoly;
use resprime::bound::kth_root_bounds;
use resprime::cert::Ctx;
use resprime::criteria::bivariate::delta_k;
use resprime::oracle::{factor_over_q, OracleBudget};
use resprime::resultant::{
    hadamard_bound, resultant, resultant_bivar_y, resultant_quadratic_binet,
    resultant_quadratic_shift, resultant_sylvester,
};
use resprime::roots::{all_roots_in_disk, annulus_exclusion, enclose_roots, no_roots_in_disk};
use resprime::{BigRat, IntPoly, RatPoly};

fn poly_strategy(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1)
        .prop_map(|c| IntPoly::from_i64(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn nonconstant(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    poly_strategy(max_deg, bound).prop_filter("nonconstant", |p| p.deg() >= 1)
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Brute-force `d_k(n)`: largest divisor `d` with `d^(k+1) <= n`.
fn d_k_brute(n: u64, k: u32) -> u64 {
    (1..=n)
        .take_while(|d| d.checked_pow(k + 1).is_some_and(|p| p <= n))
        .filter(|d| n.is_multiple_of(*d))
        .max()
        .unwrap_or(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiplication_distributes(p in poly_strategy(5, 20), q in poly_strategy(5, 20), r in poly_strategy(5, 20)) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
    }

    #[test]
    fn homogeneous_evaluation_specializes(f in poly_strategy(6, 20), c in -30i64..=30) {
        prop_assert_eq!(f.eval_homogeneous(&big(c), &BigInt::one()).unwrap(), f.eval(&big(c)));
    }

    #[test]
    fn reciprocal_swaps_homogeneous_arguments(f in nonconstant(6, 20), b in -9i64..=9, c in -9i64..=9) {
        prop_assume!(!f.constant_term().is_zero() && b != 0 && c != 0);
        let r = f.reciprocal().unwrap();
        prop_assert_eq!(r.eval_homogeneous(&big(b), &big(c)).unwrap(), f.eval_homogeneous(&big(c), &big(b)).unwrap());
        prop_assert_eq!(r.reciprocal().unwrap(), f);
    }

    #[test]
    fn text_forms_round_trip(f in poly_strategy(8, 1000)) {
        prop_assert_eq!(f.to_bracket().parse::<IntPoly>().unwrap(), f.clone());
        prop_assert_eq!(f.to_human().parse::<IntPoly>().unwrap(), f);
    }

    #[test]
    fn resultant_methods_agree(f in nonconstant(8, 20), a in -20i64..=20, b in -20i64..=20, c in -20i64..=20) {
        prop_assume!(a != 0);
        let g = IntPoly::from_i64(&[c, b, a]);
        let general = resultant(&f, &g).unwrap().abs();
        prop_assert_eq!(&general, &resultant_sylvester(&f, &g).unwrap().abs());
        prop_assert_eq!(&general, &resultant_quadratic_shift(&f, &big(a), &big(b), &big(c)).unwrap().abs());
        prop_assert_eq!(&general, &resultant_quadratic_binet(&f, &big(a), &big(b), &big(c)).unwrap().abs());
    }

    #[test]
    fn resultant_is_multiplicative(f1 in nonconstant(3, 9), f2 in nonconstant(3, 9), g in nonconstant(4, 9)) {
        let lhs = resultant(&(&f1 * &f2), &g).unwrap();
        prop_assert_eq!(lhs, resultant(&f1, &g).unwrap() * resultant(&f2, &g).unwrap());
    }

    #[test]
    fn resultant_swap_sign(f in nonconstant(5, 20), g in nonconstant(5, 20)) {
        let sign = if (f.deg() * g.deg()) % 2 == 0 { big(1) } else { big(-1) };
        prop_assert_eq!(resultant(&f, &g).unwrap(), sign * resultant(&g, &f).unwrap());
    }

    #[test]
    fn resultant_with_linear_is_evaluation(f in nonconstant(6, 20), m in -15i64..=15) {
        let g = IntPoly::from_i64(&[-m, 1]);
        prop_assert_eq!(resultant(&g, &f).unwrap(), f.eval(&big(m)));
        prop_assert_eq!(resultant(&f, &g).unwrap().abs(), f.eval(&big(m)).abs());
    }

    #[test]
    fn hadamard_bounds_resultant(f in nonconstant(5, 20), g in nonconstant(5, 20)) {
        let res = BigRat::from_integer(resultant(&f, &g).unwrap().abs());
        prop_assert!(hadamard_bound(&f, &g).unwrap() >= res);
    }

    #[test]
    fn factorization_multiplies_back(n in 1u64..u64::MAX) {
        let n = BigInt::from(n);
        let fac = factorize(&n, FactorBudget::default());
        prop_assert_eq!(fac.product(), n);
        for (p, e) in &fac.factors {
            prop_assert!(is_prime(p));
            prop_assert!(*e >= 1);
        }
    }

    #[test]
    fn d_one_is_the_small_cofactor(p_idx in 0usize..200, q in 1u64..2000) {
        let primes: Vec<u64> = (2u64..).filter(|x| is_prime(&BigInt::from(*x))).skip(300).take(200).collect();
        let p = primes[p_idx];
        prop_assume!(p > q);
        let n = BigInt::from(p) * BigInt::from(q);
        prop_assert_eq!(d_k(&n, 1, FactorBudget::default()).unwrap(), BigInt::from(q));
    }

    #[test]
    fn kth_root_bounds_are_directed(num in 0i64..1_000_000, den in 1i64..10_000, k in 1u32..8) {
        let x = BigRat::new(big(num), big(den));
        let b = kth_root_bounds(&x, k).unwrap();
        prop_assert!(b.lo <= b.hi);
        prop_assert!(num_traits::pow(b.lo.clone(), k as usize) <= x);
        prop_assert!(num_traits::pow(b.hi.clone(), k as usize) >= x);
    }

    #[test]
    fn enclosures_cover_every_root(f in nonconstant(6, 20)) {
        let enc = enclose_roots(&f).unwrap();
        prop_assert_eq!(enc.degree() as usize, f.deg());
    }

    #[test]
    fn disk_exclusions_are_sound(f in nonconstant(5, 20), num in 1i64..12, den in 1i64..4) {
        prop_assume!(!f.constant_term().is_zero());
        let delta = BigRat::new(big(num), big(den));
        let enc = enclose_roots(&f).unwrap();
        if no_roots_in_disk(&f, &delta, true).unwrap() {
            for d in &enc.disks {
                prop_assert!(d.modulus_bounds().hi > delta);
            }
        }
        if all_roots_in_disk(&f, &delta, true).unwrap() {
            for d in &enc.disks {
                prop_assert!(d.modulus_bounds().lo < delta);
            }
        }
        for j in 0..=f.deg() {
            if let Ok(ann) = annulus_exclusion(&f, j, &delta) {
                prop_assert!(ann.inner.lo < delta);
                if let Some(outer) = &ann.outer {
                    prop_assert!(outer.hi > delta);
                }
                let inside = enc.disks.iter().filter(|d| d.modulus_bounds().hi < delta).map(|d| d.multiplicity as usize).sum::<usize>();
                let outside = enc.disks.iter().filter(|d| d.modulus_bounds().lo > delta).map(|d| d.multiplicity as usize).sum::<usize>();
                prop_assert!(inside <= j && outside <= f.deg() - j);
            }
        }
    }

    #[test]
    fn oracle_factorization_multiplies_back(f in nonconstant(6, 9)) {
        let rat = f.to_rat();
        let fac = factor_over_q(&rat, &OracleBudget::default()).unwrap();
        prop_assert_eq!(fac.product(), rat);
    }

    #[test]
    fn oracle_accepts_eisenstein(n in 2usize..9, mids in prop::collection::vec(-4i64..=4, 8), lead in 1i64..3, a0 in 1i64..3) {
        let p = 3i64;
        let mut c: Vec<i64> = vec![p * a0];
        c.extend(mids.iter().take(n - 1).map(|x| p * x));
        c.push(lead);
        let f = RatPoly::from_i64(&c);
        prop_assert!(factor_over_q(&f, &OracleBudget::default()).unwrap().is_irreducible());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn bivariate_reciprocal_resultant(
        f in prop::collection::vec(prop::collection::vec(-3i64..=3, 1..=3), 2..=4),
        g in prop::collection::vec(prop::collection::vec(-3i64..=3, 1..=3), 2..=3),
    ) {
        let rows = |v: &Vec<Vec<i64>>| BivarPoly::new(v.iter().map(|r| RatPoly::from_i64(r)).collect());
        let (f, g) = (rows(&f), rows(&g));
        prop_assume!(f.degree_y().unwrap_or(0) >= 1 && g.degree_y().unwrap_or(0) >= 1);
        prop_assume!(!f.coeff(0).is_zero() && !g.coeff(0).is_zero());
        let direct = resultant_bivar_y(&f, &g).unwrap();
        let mirrored = resultant_bivar_y(&f.reciprocal_y(), &g.reciprocal_y()).unwrap();
        prop_assert!(mirrored == direct || mirrored == direct.scale(&BigRat::from_integer(big(-1))));
    }

    #[test]
    fn delta_k_is_non_increasing(
        f in prop::collection::vec(prop::collection::vec(-3i64..=3, 1..=3), 2..=3),
        g in prop::collection::vec(prop::collection::vec(-3i64..=3, 1..=3), 2..=3),
    ) {
        let rows = |v: &Vec<Vec<i64>>| BivarPoly::new(v.iter().map(|r| RatPoly::from_i64(r)).collect());
        let (f, g) = (rows(&f), rows(&g));
        prop_assume!(f.degree_y().unwrap_or(0) >= 1 && g.degree_y().unwrap_or(0) >= 1);
        let ctx = Ctx::default();
        let mut last = usize::MAX;
        for k in 1..=4 {
            match delta_k(&ctx, &f, &g, k) {
                Ok(Some(d)) => {
                    prop_assert!(d <= last);
                    last = d;
                }
                _ => break,
            }
        }
        let res = resultant_bivar_y(&f, &g).unwrap();
        if !res.is_zero() && res.deg() >= 1 && factor_over_q(&res, &OracleBudget::default()).unwrap().is_irreducible() {
            prop_assert_eq!(delta_k(&ctx, &f, &g, 1).unwrap(), Some(0));
        }
    }
}

#[test]
fn d_k_matches_brute_force_on_small_range() {
    for n in (1u64..=3000).chain([9_240, 65_536, 99_991, 100_000]) {
        let mut last = u64::MAX;
        for k in 1..=20 {
            let fast = d_k(&BigInt::from(n), k, FactorBudget::default()).unwrap();
            let slow = d_k_brute(n, k);
            assert_eq!(fast, BigInt::from(slow), "n = {n}, k = {k}");
            assert!(slow <= last);
            last = slow;
        }
        assert_eq!(last, 1);
    }
}

#[test]
fn factorization_near_the_top_of_u64() {
    let n: BigInt = "13590374919470431283".parse().unwrap();
    let fac = factorize(&n, FactorBudget::default());
    assert_eq!(fac.product(), n);
}
