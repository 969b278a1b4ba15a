//! Property tests. Expected values come from independent routes (closed-form
//! coefficient products, recurrences, constructed roots), never from the
//! code path under test.

use lagflow_core::basis::{
    heat_semigroup, lambda_apply, laguerre, laguerre_transform_basis, laguerre_transform_semigroup,
    monic_laguerre, power_of_x, scaled_hermite, AlphaParam, XiParam,
};
use lagflow_core::flow::semigroup_check;
use lagflow_core::orthocheck::{hermite_inner, laguerre_inner, laguerre_diagonal_expected};
use lagflow_core::ratpoly::{int, rat, Poly, Rational};
use lagflow_core::realroot::{certify, count_real_roots, isolate_roots, Endpoint};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

fn alpha() -> impl Strategy<Value = AlphaParam> {
    (0i64..=40, 1i64..=8).prop_map(|(n, d)| AlphaParam::new(rat(n.min(5 * d), d)).unwrap())
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(Poly::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// Coefficients of `(−1)^n n! L_n^α` straight from the monomial rule
/// `Λ x^k = k(k+α) x^{k−1}`: coefficient of `x^{n−j}` is
/// `(−1)^j / j! · Π_{i<j} (n−i)(n+α−i)`.
fn monic_laguerre_oracle(n: usize, alpha: &Rational) -> Poly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    let mut prod = Rational::one();
    let mut fact = Rational::one();
    for j in 0..=n {
        if j > 0 {
            let i = int((j - 1) as i64);
            let nn = int(n as i64);
            prod *= (&nn - &i) * (&nn + alpha - &i);
            fact *= int(j as i64);
        }
        let sign = if j % 2 == 1 { -Rational::one() } else { Rational::one() };
        coeffs[n - j] = sign * &prod / &fact;
    }
    Poly::new(coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distributive(f in poly(6), g in poly(6), h in poly(6)) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
    }

    #[test]
    fn product_degree(f in nonzero_poly(7), g in nonzero_poly(7)) {
        prop_assert_eq!((&f * &g).degree().unwrap(), f.degree().unwrap() + g.degree().unwrap());
    }

    #[test]
    fn shift_inverts(f in poly(8), a in small_rat()) {
        prop_assert_eq!(f.shift(&a).shift(&-a.clone()), f.clone());
        // evaluation oracle
        let x = rat(3, 7);
        prop_assert_eq!(f.shift(&a).eval(&x), f.eval(&(&x + &a)));
    }

    #[test]
    fn scale_arg_matches_evaluation(f in poly(8), s in small_rat(), x in small_rat()) {
        prop_assert_eq!(f.scale_arg(&s).eval(&x), f.eval(&(&s * &x)));
    }

    #[test]
    fn square_free_divides(roots in prop::collection::vec((small_rat(), 1u32..=3), 1..4), g in nonzero_poly(3)) {
        let f = &Poly::from_roots(&roots, int(1)) * &g;
        let sf = f.square_free().unwrap();
        let (_, r) = f.div_rem(&sf).unwrap();
        prop_assert!(r.is_zero());
        prop_assert!(sf.gcd(&sf.derivative()).degree() == Some(0));
    }

    #[test]
    fn derivative_linear(f in poly(8), g in poly(8), a in small_rat(), b in small_rat()) {
        let lhs = (&f.scale(&a) + &g.scale(&b)).derivative();
        let rhs = &f.derivative().scale(&a) + &g.derivative().scale(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lambda_linear(f in poly(8), g in poly(8), a in small_rat(), b in small_rat(), al in alpha()) {
        let lhs = lambda_apply(&(&f.scale(&a) + &g.scale(&b)), &al);
        let rhs = &lambda_apply(&f, &al).scale(&a) + &lambda_apply(&g, &al).scale(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn heat_identity_matches_oracle(n in 0usize..=16, al in alpha()) {
        let via_heat = heat_semigroup(&power_of_x(n), &al, &Rational::one());
        prop_assert_eq!(&via_heat, &monic_laguerre_oracle(n, al.value()));
        prop_assert_eq!(via_heat, monic_laguerre(n, &al));
    }

    #[test]
    fn two_path_transform(f in poly(12), al in alpha()) {
        prop_assert_eq!(laguerre_transform_basis(&f, &al), laguerre_transform_semigroup(&f, &al));
    }

    #[test]
    fn semigroup_law(f in poly(10), al in alpha(), h1 in small_rat(), h2 in small_rat()) {
        prop_assert!(semigroup_check(&f, &al, &h1, &h2));
    }

    #[test]
    fn heat_keeps_degree_and_lead(f in nonzero_poly(10), al in alpha(), h in small_rat()) {
        let g = heat_semigroup(&f, &al, &h);
        prop_assert_eq!(g.degree(), f.degree());
        prop_assert_eq!(g.leading_coeff(), f.leading_coeff());
    }

    #[test]
    fn sturm_counts_match_construction(
        roots in prop::collection::btree_set((-30i64..=30, 1i64..=6), 1..6),
        mults in prop::collection::vec(1u32..=3, 6),
        lead in (1i64..=9, prop::bool::ANY),
        window in (small_rat(), small_rat()),
    ) {
        let rs: Vec<Rational> = roots.iter().map(|&(n, d)| rat(n, d)).collect();
        let mut distinct = rs.clone();
        distinct.sort();
        distinct.dedup();
        let spec: Vec<_> = rs.iter().cloned().zip(mults.iter().copied()).collect();
        let lead = if lead.1 { int(lead.0) } else { -int(lead.0) };
        // times an irreducible quadratic: no extra real roots
        let f = &Poly::from_roots(&spec, lead) * &Poly::from_ints(&[1, 0, 1]);
        prop_assert_eq!(count_real_roots(&f, &Endpoint::NegInf, &Endpoint::PosInf).unwrap(), distinct.len());
        let (a, b) = window;
        if a < b {
            let inside = distinct.iter().filter(|r| **r > a && **r <= b).count();
            prop_assert_eq!(
                count_real_roots(&f, &Endpoint::Finite(a), &Endpoint::Finite(b)).unwrap(),
                inside
            );
        }
        let ivs = isolate_roots(&f, &rat(1, 64)).unwrap();
        prop_assert_eq!(ivs.len(), distinct.len());
        for (iv, r) in ivs.iter().zip(&distinct) {
            prop_assert!(iv.lo < *r && *r <= iv.hi);
            prop_assert_eq!(
                count_real_roots(&f, &Endpoint::Finite(iv.lo.clone()), &Endpoint::Finite(iv.hi.clone())).unwrap(),
                1
            );
        }
    }

    #[test]
    fn certificate_invariant_under_scaling_and_shift(f in nonzero_poly(6), c in 1i64..=20, s in small_rat()) {
        prop_assume!(f.degree().unwrap() >= 1);
        let base = certify(&f).unwrap();
        let scaled = certify(&f.scale(&int(c))).unwrap();
        let shifted = certify(&f.shift(&s)).unwrap();
        prop_assert_eq!(base.is_real_rooted, scaled.is_real_rooted);
        prop_assert_eq!(base.is_real_rooted, shifted.is_real_rooted);
        prop_assert_eq!(base.distinct_real_roots, shifted.distinct_real_roots);
        prop_assert_eq!(base.is_simple, shifted.is_simple);
    }
}

#[test]
fn laguerre_three_term_recurrence() {
    for al in [int(0), rat(1, 2), rat(7, 3), int(5)] {
        let a = AlphaParam::new(al.clone()).unwrap();
        for n in 1..=20usize {
            let nn = int(n as i64);
            let lhs = laguerre(n + 1, &a).scale(&(&nn + int(1)));
            let factor = Poly::new(vec![int(2) * &nn + int(1) + &al, int(-1)]);
            let rhs = &(&factor * &laguerre(n, &a)) - &laguerre(n - 1, &a).scale(&(&nn + &al));
            assert_eq!(lhs, rhs, "n = {n}, alpha = {al}");
        }
    }
}

#[test]
fn hermite_recurrence() {
    for xi in [rat(1, 2), int(1), int(3), rat(-2, 5)] {
        let x = XiParam::new(xi.clone());
        for k in 1..=20usize {
            let rhs = &(&Poly::x() * &scaled_hermite(k, &x))
                - &scaled_hermite(k - 1, &x).scale(&(int(2) * &xi * int(k as i64)));
            assert_eq!(scaled_hermite(k + 1, &x), rhs, "k = {k}");
        }
    }
}

#[test]
fn hermite_is_second_derivative_flow() {
    // e^{−ξD²} x^k through the truncated exponential series in D², term by term
    let xi = rat(5, 4);
    for k in 0..=12usize {
        let mut term = power_of_x(k);
        let mut acc = term.clone();
        let mut weight = Rational::one();
        let mut j = 0i64;
        loop {
            term = term.derivative().derivative();
            if term.is_zero() {
                break;
            }
            j += 1;
            weight = weight * -xi.clone() / int(j);
            acc = &acc + &term.scale(&weight);
        }
        assert_eq!(scaled_hermite(k, &XiParam::new(xi.clone())), acc);
    }
}

#[test]
fn orthogonality_small_table() {
    let a = AlphaParam::new(rat(3, 2)).unwrap();
    let xi = XiParam::new(rat(2, 3));
    for n in 0..=6 {
        for m in 0..=6 {
            let l = laguerre_inner(n, m, &a);
            let h = hermite_inner(n, m, &xi).unwrap();
            if n == m {
                assert_eq!(l.coeff, laguerre_diagonal_expected(n, &a));
                assert!(h.coeff > int(0));
            } else {
                assert!(l.is_zero() && h.is_zero());
            }
        }
    }
}

#[test]
fn spec_quadratic_images() {
    // x² − 3x at α = 0, h = 1/100
    let h = rat(1, 100);
    let img = heat_semigroup(&Poly::from_ints(&[0, -3, 1]), &AlphaParam::zero(), &h);
    assert_eq!(img, Poly::new(vec![rat(151, 5000), rat(-76, 25), int(1)]));
    // (x − 1)² at α = 0
    let img = heat_semigroup(&Poly::from_ints(&[1, -2, 1]), &AlphaParam::zero(), &h);
    let expected = Poly::new(vec![
        int(2) * &h * &h + int(2) * &h + int(1),
        -(int(4) * &h + int(2)),
        int(1),
    ]);
    assert_eq!(img, expected);
}
