//! Acceptance criteria, one test per criterion. Each prints a single
//! `[PASS]`/`[FAIL]` line with its measured runtime and budget; run with
//! `cargo test -p lagflow --test acceptance -- --nocapture` to see them.

use std::time::{Duration, Instant};

use lagflow::batch::{semigroup_batch, sturm_oracle_batch, theorem_batch, transform_agreement_batch};
use lagflow::generate::Generator;
use lagflow_core::basis::{heat_semigroup, laguerre, monic_laguerre, power_of_x, scaled_hermite};
use lagflow_core::flow::{counterexample_search, lemma1_ladder, lemma2_ladder, verify_theorem1};
use lagflow_core::orthocheck::{hermite_diagonal_ratio, hermite_inner, laguerre_inner, MomentBase};
use lagflow_core::ratpoly::{approx_decimal, int, rat};
use lagflow_core::realroot::certify;
use lagflow_core::{AlphaParam, Poly, Rational, XiParam};
use num_traits::{One, Zero};

const SEED: u64 = 20_261_016;

fn criterion(id: u32, title: &str, budget_secs: u64, body: impl FnOnce() -> (bool, String)) {
    let start = Instant::now();
    let (ok, detail) = body();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget_secs);
    let in_time = elapsed < budget;
    let verdict = if ok && in_time { "PASS" } else { "FAIL" };
    println!(
        "[{verdict}] AC{id:02} {title}: {detail} ({:.2}s / budget {budget_secs}s)",
        elapsed.as_secs_f64()
    );
    assert!(ok, "AC{id:02} {title}: {detail}");
    assert!(in_time, "AC{id:02} {title}: runtime {elapsed:?} exceeds {budget:?}");
}

fn alpha(v: Rational) -> AlphaParam {
    AlphaParam::new(v).unwrap()
}

fn random_alphas(stream: u64, count: usize) -> Vec<AlphaParam> {
    let mut g = Generator::new(SEED, stream);
    (0..count).map(|_| g.alpha()).collect()
}

#[test]
fn ac01_operator_identity() {
    criterion(1, "heat_semigroup(x^n, a, 1) = monic Laguerre, n <= 30", 10, || {
        let alphas = random_alphas(1_000_001, 20);
        let mut checked = 0;
        let mut bad = Vec::new();
        for al in &alphas {
            for n in 0..=30 {
                if heat_semigroup(&power_of_x(n), al, &Rational::one()) != monic_laguerre(n, al) {
                    bad.push((n, al.value().to_string()));
                }
                checked += 1;
            }
        }
        (bad.is_empty(), format!("{checked} (n, alpha) pairs, mismatches {bad:?}"))
    });
}

#[test]
fn ac02_two_path_transform() {
    criterion(2, "semigroup route = basis-sum route, 500 random deg <= 20", 30, || {
        let agree = transform_agreement_batch(SEED, 500, 20);
        let bad = agree.iter().filter(|a| !**a).count();
        (bad == 0 && agree.len() == 500, format!("{} trials, {bad} disagreements", agree.len()))
    });
}

#[test]
fn ac03_laguerre_orthogonality() {
    criterion(3, "Laguerre inner products, n, m <= 10, 5 random alpha", 20, || {
        let mut bad = 0;
        for al in random_alphas(1_000_003, 5) {
            for n in 0..=10usize {
                for m in 0..=10usize {
                    let v = laguerre_inner(n, m, &al);
                    let ok = if n == m {
                        // Γ(n+α+1)/n! in units of Γ(α+1)
                        let expected = (1..=n).fold(Rational::one(), |acc, i| {
                            acc * (al.value() + int(i as i64)) / int(i as i64)
                        });
                        v.coeff == expected && v.base == MomentBase::GammaAlphaPlus1
                    } else {
                        v.coeff.is_zero()
                    };
                    bad += usize::from(!ok);
                }
            }
        }
        (bad == 0, format!("605 entries, {bad} wrong"))
    });
}

/// `∫ x^m e^{−x²/4ξ}` in units of `√(πξ)` by integration by parts:
/// `M_0 = 2`, `M_1 = 0`, `M_{m+2} = (m+1)·2ξ·M_m`.
fn gaussian_moments(xi: &Rational, count: usize) -> Vec<Rational> {
    let mut m = vec![int(2), int(0)];
    while m.len() < count {
        let k = m.len() - 2;
        let next = int(k as i64 + 1) * int(2) * xi * &m[k];
        m.push(next);
    }
    m
}

#[test]
fn ac04_hermite_orthogonality() {
    criterion(4, "Hermite inner products, k, l <= 10, xi in {1/2, 1, 3}", 20, || {
        let mut bad = 0;
        let mut ratios = Vec::new();
        for xi_v in [rat(1, 2), int(1), int(3)] {
            let xi = XiParam::new(xi_v.clone());
            let moments = gaussian_moments(&xi_v, 2 * 10 + 1);
            for k in 0..=10usize {
                for l in 0..=10usize {
                    let v = hermite_inner(k, l, &xi).unwrap();
                    if k != l {
                        bad += usize::from(!v.is_zero());
                        continue;
                    }
                    let hk = scaled_hermite(k, &xi);
                    let sq = &hk * &hk;
                    let oracle = sq
                        .coeffs()
                        .iter()
                        .enumerate()
                        .fold(Rational::zero(), |acc, (i, c)| acc + c * &moments[i]);
                    bad += usize::from(v.coeff != oracle || v.base != MomentBase::SqrtPiXi);
                    let ratio = hermite_diagonal_ratio(k, &xi).unwrap();
                    let two_xi_pow = (0..k).fold(Rational::one(), |acc, _| acc * int(2) * &xi_v);
                    bad += usize::from(ratio != two_xi_pow);
                    if k == 10 {
                        ratios.push(format!("xi={xi_v}: ratio(k=10)={}", approx_decimal(&ratio, 6)));
                    }
                }
            }
        }
        (
            bad == 0,
            format!("363 entries, {bad} wrong; diagonal/quoted = (2 xi)^k [{}]", ratios.join(", ")),
        )
    });
}

#[test]
fn ac05_distinct_real_roots() {
    criterion(5, "L_k^a and H_k^xi have k simple real roots, k <= 12", 30, || {
        let mut bad = Vec::new();
        for k in 1..=12usize {
            for al in [int(0), rat(1, 2), int(2)] {
                let c = certify(&laguerre(k, &alpha(al.clone()))).unwrap();
                if !(c.distinct_real_roots == k && c.is_real_rooted && c.is_simple && c.intervals.len() == k) {
                    bad.push(format!("L_{k}^{al}"));
                }
            }
            for xi in [rat(1, 2), int(1), int(3)] {
                let c = certify(&scaled_hermite(k, &XiParam::new(xi.clone()))).unwrap();
                if !(c.distinct_real_roots == k && c.is_real_rooted && c.is_simple && c.intervals.len() == k) {
                    bad.push(format!("H_{k}^{xi}"));
                }
            }
        }
        (bad.is_empty(), format!("72 polynomials, failures {bad:?}"))
    });
}

#[test]
fn ac06_theorem_regime() {
    criterion(6, "1000 random real-rooted P, roots >= 0, deg <= 12", 300, || {
        let trials = theorem_batch(SEED, 1000, 12, true, None).unwrap();
        let failures: Vec<u64> = trials.iter().filter(|t| !t.ok()).map(|t| t.trial).collect();
        let degs = trials.iter().map(|t| t.input.degree().unwrap()).max().unwrap_or(0);
        (
            failures.is_empty() && trials.len() == 1000,
            format!("{} trials (max degree {degs}), failing trials {failures:?}", trials.len()),
        )
    });
}

#[test]
fn ac07_counterexample_pin() {
    criterion(7, "(x+2)^2 -> x^2+2 fails; xi grid flips at -1", 5, || {
        let z = AlphaParam::zero();
        let check = verify_theorem1(&Poly::from_ints(&[4, 4, 1]), &z).unwrap();
        let pinned = check.transformed == Poly::from_ints(&[2, 0, 1]) && !check.passed;

        let grid = [int(-4), int(-3), int(-2), rat(-3, 2), int(-1), rat(-1, 2), int(0), int(1)];
        let points = counterexample_search(&z, &grid, 2).unwrap();
        // real-rooted iff disc/4 = α + 2 + 2ξ ≥ 0
        let oracle: Vec<bool> = grid.iter().map(|xi| int(2) + int(2) * xi >= int(0)).collect();
        let got: Vec<bool> = points.iter().map(|p| p.passed).collect();
        let flip = points.iter().position(|p| p.passed).map(|i| grid[i].clone());
        let boundary = verify_theorem1(&Poly::from_roots(&[(int(-1), 2)], int(1)), &z).unwrap();
        let boundary_double = boundary.passed && !boundary.certificate.is_simple;
        (
            pinned && got == oracle && flip == Some(int(-1)) && boundary_double,
            format!(
                "image {}, pass map {got:?}, first pass at xi={}",
                check.transformed,
                flip.as_ref().map_or("none".to_string(), |x| x.to_string())
            ),
        )
    });
}

fn lemma_ps() -> Vec<Poly> {
    vec![Poly::from_ints(&[-3, 1]), Poly::from_ints(&[1, 1]), Poly::from_ints(&[1, 1, 1])]
}

#[test]
fn ac08_lemma2_ladder() {
    criterion(8, "origin localization, h = 2^-j ladder passes for all j >= 10", 300, || {
        let mut bad = Vec::new();
        let mut latest_tail = 0;
        let mut non_monotone = 0;
        for k in 1..=4usize {
            for p in lemma_ps() {
                for al in [int(0), rat(1, 2), int(2)] {
                    let ladder = lemma2_ladder(k, &p, &alpha(al.clone()), 20).unwrap();
                    non_monotone += usize::from(!ladder.is_monotone());
                    if ladder.has_passing_tail() {
                        latest_tail = latest_tail.max(ladder.tail_start().unwrap() + 1);
                    } else {
                        bad.push(format!("k={k} p={p} a={al}"));
                    }
                }
            }
        }
        (bad.is_empty(), format!(
                "36 ladders, latest tail start j={latest_tail}, {non_monotone} with a pass before the tail, failures {bad:?}"
            ))
    });
}

#[test]
fn ac09_lemma1_ladder() {
    criterion(9, "localization at xi > 0, eta = 2^-j ladder passes for all j >= 10", 300, || {
        let mut bad = Vec::new();
        let mut latest_tail = 0;
        let mut degenerate = Vec::new();
        let mut non_monotone = 0;
        for xi in [rat(1, 2), int(1), int(3)] {
            let x = XiParam::new(xi.clone());
            for p in lemma_ps() {
                for al in [int(0), rat(1, 2), int(2)] {
                    let al = alpha(al);
                    for k in 2..=4usize {
                        let ladder = lemma1_ladder(k, &x, &p, &al, 20).unwrap();
                        non_monotone += usize::from(!ladder.is_monotone());
                        if ladder.has_passing_tail() {
                            latest_tail = latest_tail.max(ladder.tail_start().unwrap() + 1);
                        } else {
                            bad.push(format!("k={k} xi={xi} p={p} a={}", al.value()));
                        }
                    }
                    // k = 1: fallback radius, reported only
                    let ladder = lemma1_ladder(1, &x, &p, &al, 20).unwrap();
                    assert!(ladder.steps.iter().all(|(_, r)| r.degenerate_radius));
                    degenerate.push(ladder.has_passing_tail());
                }
            }
        }
        let deg_ok = degenerate.iter().filter(|b| **b).count();
        (
            bad.is_empty(),
            format!(
                "81 ladders, latest tail start j={latest_tail}, {non_monotone} with a pass before the tail, failures {bad:?}; k=1 fallback radius: {deg_ok}/{} with passing tail (not asserted)",
                degenerate.len()
            ),
        )
    });
}

#[test]
fn ac10_semigroup_law() {
    criterion(10, "e^{-h2 L} e^{-h1 L} f = e^{-(h1+h2) L} f, 500 random", 30, || {
        let trials = semigroup_batch(SEED, 500, 20);
        let bad = trials.iter().filter(|t| !t.holds).count();
        let negative = trials.iter().filter(|t| t.h1 < int(0) || t.h2 < int(0)).count();
        (
            bad == 0 && trials.len() == 500,
            format!("{} trials ({negative} with a negative step), {bad} violations", trials.len()),
        )
    });
}

#[test]
fn ac11_sturm_oracle() {
    criterion(11, "Sturm counts match constructed rational roots, 500 polynomials", 30, || {
        let trials = sturm_oracle_batch(SEED, 500, 12).unwrap();
        let bad: Vec<u64> = trials.iter().filter(|t| !t.ok()).map(|t| t.trial).collect();
        (
            bad.is_empty() && trials.len() == 500,
            format!("{} polynomials, failing trials {bad:?}", trials.len()),
        )
    });
}
