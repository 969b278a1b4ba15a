//! Experiment harnesses built on the heat semigroup.
//!
//! Everything here is sampled: flow times are rational, the Hermite lemma
//! is parametrized by `η` with `h = η²`, and every root count is an exact
//! Sturm count on a rational window.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::basis::{heat_semigroup, laguerre, laguerre_transform, scaled_hermite, AlphaParam, XiParam};
use crate::error::{Error, Result};
use crate::ratpoly::{Poly, Rational};
use crate::realroot::{
    all_real_roots_at_origin, certify, default_width, largest_root_enclosure, Endpoint, RootCertificate,
    RootCounter,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub transformed: Poly,
    pub certificate: RootCertificate,
    pub passed: bool,
}

/// Applies the Laguerre transform and certifies the image.
///
/// `passed` is the real-rootedness verdict on the image; the caller is
/// responsible for `f` being real-rooted.
pub fn verify_theorem1(f: &Poly, alpha: &AlphaParam) -> Result<TheoremCheck> {
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(_) => {}
    }
    let transformed = laguerre_transform(f, alpha);
    let certificate = certify(&transformed)?;
    Ok(TheoremCheck {
        passed: certificate.is_real_rooted,
        transformed,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationReport {
    pub k: usize,
    pub window_lo: Rational,
    pub window_hi: Rational,
    pub roots_in_window: usize,
    pub passed: bool,
    /// Rational upper enclosure of the radius (or the fallback).
    pub radius_used: Rational,
    pub degenerate_radius: bool,
}

fn two() -> Rational {
    Rational::from_integer(BigInt::from(2))
}

fn check_lemma_inputs(k: usize, p: &Poly, step: &Rational) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    if p.coeff(0).is_zero() {
        return Err(Error::VanishesAtOrigin);
    }
    if !step.is_positive() {
        return Err(Error::NonPositiveStep);
    }
    Ok(())
}

/// `x^k · p(x)`
fn with_root_at_origin(k: usize, p: &Poly) -> Poly {
    &Poly::monomial(Rational::one(), k) * p
}

fn localize(flowed: &Poly, center: &Rational, half_width: &Rational) -> Result<(Rational, Rational, usize)> {
    let lo = center - half_width;
    let hi = center + half_width;
    let n = RootCounter::new(flowed)?.count_open(&Endpoint::Finite(lo.clone()), &Endpoint::Finite(hi.clone()))?;
    Ok((lo, hi, n))
}

/// Upper enclosure of `s_k(α)`, the largest root of `L_k^α`.
pub fn laguerre_radius(k: usize, alpha: &AlphaParam) -> Result<Rational> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    Ok(largest_root_enclosure(&laguerre(k, alpha), &default_width())?.1)
}

/// Upper enclosure of `r_k(ξ)` for `ξ > 0`, and whether it degenerates to 0
/// (`k = 1`, where `H_1^ξ = x`). Degenerate radii are replaced by 1.
pub fn hermite_radius(k: usize, xi: &XiParam) -> Result<(Rational, bool)> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    if xi.value().is_zero() {
        return Err(Error::ZeroXi);
    }
    if xi.value().is_negative() {
        return Err(Error::NegativeXiRadius);
    }
    let h = scaled_hermite(k, xi);
    if all_real_roots_at_origin(&h)? {
        return Ok((Rational::one(), true));
    }
    Ok((largest_root_enclosure(&h, &default_width())?.1, false))
}

/// Counts roots of `e^{−hΛ}(x^k p)` in `(−2 s_k(α) h, 2 s_k(α) h)`.
pub fn lemma2_localize(k: usize, p: &Poly, alpha: &AlphaParam, h: &Rational) -> Result<LocalizationReport> {
    check_lemma_inputs(k, p, h)?;
    let radius = laguerre_radius(k, alpha)?;
    lemma2_with_radius(k, p, alpha, h, radius)
}

fn lemma2_with_radius(
    k: usize,
    p: &Poly,
    alpha: &AlphaParam,
    h: &Rational,
    radius: Rational,
) -> Result<LocalizationReport> {
    let flowed = heat_semigroup(&with_root_at_origin(k, p), alpha, h);
    let half = two() * &radius * h;
    let (window_lo, window_hi, roots_in_window) = localize(&flowed, &Rational::zero(), &half)?;
    Ok(LocalizationReport {
        k,
        window_lo,
        window_hi,
        roots_in_window,
        passed: roots_in_window >= k,
        radius_used: radius,
        degenerate_radius: false,
    })
}

/// Counts roots of `e^{−η²Λ}((x−ξ)^k p(x−ξ))` in `(ξ − 2 r_k(ξ) η, ξ + 2 r_k(ξ) η)`.
pub fn lemma1_localize(
    k: usize,
    xi: &XiParam,
    p: &Poly,
    alpha: &AlphaParam,
    eta: &Rational,
) -> Result<LocalizationReport> {
    check_lemma_inputs(k, p, eta)?;
    let (radius, degenerate) = hermite_radius(k, xi)?;
    lemma1_with_radius(k, xi, p, alpha, eta, radius, degenerate)
}

fn lemma1_with_radius(
    k: usize,
    xi: &XiParam,
    p: &Poly,
    alpha: &AlphaParam,
    eta: &Rational,
    radius: Rational,
    degenerate: bool,
) -> Result<LocalizationReport> {
    let centered = with_root_at_origin(k, p).shift(&-xi.value());
    let flowed = heat_semigroup(&centered, alpha, &(eta * eta));
    let half = two() * &radius * eta;
    let (window_lo, window_hi, roots_in_window) = localize(&flowed, xi.value(), &half)?;
    Ok(LocalizationReport {
        k,
        window_lo,
        window_hi,
        roots_in_window,
        passed: roots_in_window >= k,
        radius_used: radius,
        degenerate_radius: degenerate,
    })
}

/// `2^−j`
pub fn dyadic(j: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << j as usize)
}

/// Localization reports along a decreasing ladder of step sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub steps: Vec<(Rational, LocalizationReport)>,
}

impl Ladder {
    /// Index of the first step from which every later (smaller) step passes.
    pub fn tail_start(&self) -> Option<usize> {
        let failing_after = self.steps.iter().rposition(|(_, r)| !r.passed);
        match failing_after {
            None if self.steps.is_empty() => None,
            None => Some(0),
            Some(i) if i + 1 == self.steps.len() => None,
            Some(i) => Some(i + 1),
        }
    }

    /// Passing tail that covers at least the smaller half of the ladder.
    ///
    /// Passes at large steps, before the tail, are outside the asymptotic
    /// regime and are ignored.
    pub fn has_passing_tail(&self) -> bool {
        self.tail_start().is_some_and(|i| i <= self.steps.len() / 2)
    }

    /// No passing step is followed by a failing one.
    pub fn is_monotone(&self) -> bool {
        match self.tail_start() {
            Some(start) => self.steps[..start].iter().all(|(_, r)| !r.passed),
            None => self.steps.iter().all(|(_, r)| !r.passed),
        }
    }
}

/// Lemma-2 reports at `h = 2^−j` for `j = 1..=depth`.
pub fn lemma2_ladder(k: usize, p: &Poly, alpha: &AlphaParam, depth: u32) -> Result<Ladder> {
    check_lemma_inputs(k, p, &Rational::one())?;
    let radius = laguerre_radius(k, alpha)?;
    let steps = (1..=depth)
        .map(|j| {
            let h = dyadic(j);
            lemma2_with_radius(k, p, alpha, &h, radius.clone()).map(|r| (h, r))
        })
        .collect::<Result<_>>()?;
    Ok(Ladder { steps })
}

/// Lemma-1 reports at `η = 2^−j` for `j = 1..=depth`.
pub fn lemma1_ladder(k: usize, xi: &XiParam, p: &Poly, alpha: &AlphaParam, depth: u32) -> Result<Ladder> {
    check_lemma_inputs(k, p, &Rational::one())?;
    let (radius, degenerate) = hermite_radius(k, xi)?;
    let steps = (1..=depth)
        .map(|j| {
            let eta = dyadic(j);
            lemma1_with_radius(k, xi, p, alpha, &eta, radius.clone(), degenerate).map(|r| (eta, r))
        })
        .collect::<Result<_>>()?;
    Ok(Ladder { steps })
}

/// `e^{−h₂Λ} e^{−h₁Λ} f == e^{−(h₁+h₂)Λ} f`, exactly.
pub fn semigroup_check(f: &Poly, alpha: &AlphaParam, h1: &Rational, h2: &Rational) -> bool {
    let stepped = heat_semigroup(&heat_semigroup(f, alpha, h1), alpha, h2);
    stepped == heat_semigroup(f, alpha, &(h1 + h2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowSample {
    pub h: Rational,
    pub flowed: Poly,
    pub certificate: RootCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowTrace {
    pub alpha: AlphaParam,
    pub input: Poly,
    pub samples: Vec<FlowSample>,
}

impl FlowTrace {
    /// Every sample with `h > 0` is real-rooted with simple roots.
    pub fn interior_simple(&self) -> bool {
        self.samples
            .iter()
            .filter(|s| s.h.is_positive())
            .all(|s| s.certificate.is_real_rooted && s.certificate.is_simple)
    }
}

/// Certificates of `e^{−hΛ} f` along `h_grid`, which must start at 0 and increase.
pub fn flow_trace(f: &Poly, alpha: &AlphaParam, h_grid: &[Rational]) -> Result<FlowTrace> {
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(_) => {}
    }
    let first = h_grid.first().ok_or(Error::EmptyGrid)?;
    if !first.is_zero() || h_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadGrid);
    }
    let samples = h_grid
        .iter()
        .map(|h| {
            let flowed = heat_semigroup(f, alpha, h);
            certify(&flowed).map(|certificate| FlowSample {
                h: h.clone(),
                flowed,
                certificate,
            })
        })
        .collect::<Result<_>>()?;
    Ok(FlowTrace {
        alpha: alpha.clone(),
        input: f.clone(),
        samples,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchPoint {
    pub xi: Rational,
    pub passed: bool,
}

/// Runs the transform check on `(x − ξ)^k` for each `ξ` in the grid.
pub fn counterexample_search(alpha: &AlphaParam, xi_grid: &[Rational], k: usize) -> Result<Vec<SearchPoint>> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    xi_grid
        .iter()
        .map(|xi| {
            let f = Poly::from_roots(&[(xi.clone(), k as u32)], Rational::one());
            verify_theorem1(&f, alpha).map(|c| SearchPoint {
                xi: xi.clone(),
                passed: c.passed,
            })
        })
        .collect()
}
