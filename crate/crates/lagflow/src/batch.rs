//! Randomized verification batches. Trials run in parallel and are returned
//! in trial order.

use lagflow_core::basis::{laguerre_transform_basis, laguerre_transform_semigroup};
use lagflow_core::flow::{semigroup_check, verify_theorem1, TheoremCheck};
use lagflow_core::realroot::{count_real_roots, isolate_roots, Endpoint};
use lagflow_core::{AlphaParam, Poly, Rational, Result};
use rayon::prelude::*;

use crate::generate::Generator;

#[derive(Debug, Clone)]
pub struct TheoremTrial {
    pub trial: u64,
    pub alpha: AlphaParam,
    pub input: Poly,
    pub check: TheoremCheck,
}

impl TheoremTrial {
    /// Real-rooted image with simple roots.
    pub fn ok(&self) -> bool {
        self.check.passed && self.check.certificate.is_simple
    }
}

/// Random real-rooted inputs through the Laguerre transform. α is drawn per
/// trial from `[0, 5]` unless fixed.
pub fn theorem_batch(
    seed: u64,
    trials: u64,
    max_degree: usize,
    nonneg_roots: bool,
    alpha: Option<&AlphaParam>,
) -> Result<Vec<TheoremTrial>> {
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut g = Generator::new(seed, trial);
            let (input, _) = g.real_rooted(max_degree, nonneg_roots);
            let alpha = alpha.cloned().unwrap_or_else(|| g.alpha());
            let check = verify_theorem1(&input, &alpha)?;
            Ok(TheoremTrial {
                trial,
                alpha,
                input,
                check,
            })
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SemigroupTrial {
    pub trial: u64,
    pub alpha: AlphaParam,
    pub input: Poly,
    pub h1: Rational,
    pub h2: Rational,
    pub holds: bool,
}

pub fn semigroup_batch(seed: u64, trials: u64, max_degree: usize) -> Vec<SemigroupTrial> {
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut g = Generator::new(seed, trial);
            let input = g.poly(max_degree);
            let alpha = g.alpha();
            let (h1, h2) = (g.small(), g.small());
            let holds = semigroup_check(&input, &alpha, &h1, &h2);
            SemigroupTrial {
                trial,
                alpha,
                input,
                h1,
                h2,
                holds,
            }
        })
        .collect()
}

/// Basis-sum and semigroup routes of the transform on random inputs;
/// `true` where they agree exactly.
pub fn transform_agreement_batch(seed: u64, trials: u64, max_degree: usize) -> Vec<bool> {
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut g = Generator::new(seed, trial);
            let f = g.poly(max_degree);
            let alpha = g.alpha();
            laguerre_transform_basis(&f, &alpha) == laguerre_transform_semigroup(&f, &alpha)
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SturmTrial {
    pub trial: u64,
    pub input: Poly,
    pub expected_distinct: usize,
    pub counted_distinct: usize,
    pub window_counts_match: bool,
    pub intervals_match: bool,
}

impl SturmTrial {
    pub fn ok(&self) -> bool {
        self.expected_distinct == self.counted_distinct && self.window_counts_match && self.intervals_match
    }
}

/// Polynomials with constructed signed rational roots; Sturm counts and
/// isolating intervals are compared against the construction.
pub fn sturm_oracle_batch(seed: u64, trials: u64, max_degree: usize) -> Result<Vec<SturmTrial>> {
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut g = Generator::new(seed, trial);
            let (input, roots) = g.real_rooted(max_degree, false);
            let mut distinct: Vec<Rational> = roots.iter().map(|(r, _)| r.clone()).collect();
            distinct.sort();
            let counted_distinct = count_real_roots(&input, &Endpoint::NegInf, &Endpoint::PosInf)?;

            let mut window_counts_match = true;
            for _ in 0..4 {
                let (a, b) = (g.root(false), g.root(false));
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                if lo == hi {
                    continue;
                }
                let expected = distinct.iter().filter(|r| **r > lo && **r <= hi).count();
                let counted = count_real_roots(&input, &Endpoint::Finite(lo), &Endpoint::Finite(hi))?;
                window_counts_match &= expected == counted;
            }

            let width = Rational::new(1.into(), 1024.into());
            let ivs = isolate_roots(&input, &width)?;
            let mut intervals_match = ivs.len() == distinct.len();
            for (iv, r) in ivs.iter().zip(&distinct) {
                intervals_match &= iv.lo < *r && *r <= iv.hi && iv.width() <= width;
                let inside = count_real_roots(
                    &input,
                    &Endpoint::Finite(iv.lo.clone()),
                    &Endpoint::Finite(iv.hi.clone()),
                )?;
                intervals_match &= inside == 1;
            }

            Ok(SturmTrial {
                trial,
                input,
                expected_distinct: distinct.len(),
                counted_distinct,
                window_counts_match,
                intervals_match,
            })
        })
        .collect()
}
