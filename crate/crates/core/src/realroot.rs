//! Sturm-chain real-root counting, certification and isolation.
//!
//! Counts are of *distinct* real roots in half-open intervals `(lo, hi]`.
//! Chain elements are content-stripped primitive parts; only evaluation
//! signs matter, so positive rescaling is harmless.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratpoly::{Poly, Rational};

/// Interval endpoint for counting; infinities use leading-term signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl From<Rational> for Endpoint {
    fn from(r: Rational) -> Self {
        Endpoint::Finite(r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<Poly>,
    // Integer coefficients of each chain element (denominators are 1 after
    // content stripping), cached for fraction-free sign evaluation.
    ints: Vec<Vec<BigInt>>,
}

impl SturmChain {
    /// `f₀ = f, f₁ = f′, f_{i+1} = −rem(f_{i−1}, f_i)`, each content-stripped.
    pub fn new(f: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![f.primitive_part()];
        let d = f.derivative();
        if !d.is_zero() {
            chain.push(d.primitive_part());
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
                if r.is_zero() {
                    break;
                }
                chain.push((-r).primitive_part());
            }
        }
        let ints = chain
            .iter()
            .map(|p| p.coeffs().iter().map(|c| c.numer().clone()).collect())
            .collect();
        Ok(SturmChain { chain, ints })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign changes in the chain at `at`, zeros skipped.
    pub fn variations(&self, at: &Endpoint) -> usize {
        let signs = self.ints.iter().map(|c| match at {
            Endpoint::PosInf => sign_int(c.last().expect("nonzero")),
            Endpoint::NegInf => {
                let s = sign_int(c.last().expect("nonzero"));
                if (c.len() - 1) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
            Endpoint::Finite(x) => sign_at_int(c, x),
        });
        count_variations(signs)
    }

    /// Distinct roots in `(lo, hi]`; exact when the chain's input is square-free.
    pub fn count(&self, lo: &Endpoint, hi: &Endpoint) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

fn sign_int(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `Σ a_i (p/q)^i` via `Σ a_i p^i q^{n−i}` (q > 0), all in integers.
fn sign_at_int(coeffs: &[BigInt], x: &Rational) -> i8 {
    let n = coeffs.len() - 1;
    let (p, q) = (x.numer(), x.denom());
    let mut acc = coeffs[n].clone();
    let mut qpow = BigInt::one();
    for a in coeffs[..n].iter().rev() {
        qpow *= q;
        acc = acc * p + a * &qpow;
    }
    sign_int(&acc)
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Half-open `(lo, hi]` containing exactly one distinct real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCertificate {
    pub degree: usize,
    pub distinct_real_roots: usize,
    pub is_real_rooted: bool,
    pub is_simple: bool,
    pub intervals: Vec<IsolatingInterval>,
}

/// `2^−20`
pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 20usize)
}

/// Square-free part together with its Sturm chain; reused across many counts.
#[derive(Clone, Debug)]
pub struct RootCounter {
    square_free: Poly,
    chain: SturmChain,
}

impl RootCounter {
    pub fn new(f: &Poly) -> Result<Self> {
        let square_free = f.square_free()?;
        let chain = SturmChain::new(&square_free)?;
        Ok(RootCounter { square_free, chain })
    }

    pub fn square_free(&self) -> &Poly {
        &self.square_free
    }

    pub fn chain(&self) -> &SturmChain {
        &self.chain
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
        check_order(lo, hi)?;
        Ok(self.chain.count(lo, hi))
    }

    /// Distinct real roots in the open interval `(lo, hi)`.
    pub fn count_open(&self, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
        let n = self.count(lo, hi)?;
        Ok(match hi {
            Endpoint::Finite(b) if self.is_root(b) => n - 1,
            _ => n,
        })
    }

    pub fn total(&self) -> usize {
        self.chain.count(&Endpoint::NegInf, &Endpoint::PosInf)
    }

    fn is_root(&self, x: &Rational) -> bool {
        sign_at_int(&self.chain.ints[0], x) == 0
    }
}

fn check_order(lo: &Endpoint, hi: &Endpoint) -> Result<()> {
    let ok = match (lo, hi) {
        (Endpoint::PosInf, _) | (_, Endpoint::NegInf) => false,
        (Endpoint::NegInf, _) | (_, Endpoint::PosInf) => true,
        (Endpoint::Finite(a), Endpoint::Finite(b)) => a < b,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::EmptyInterval)
    }
}

pub fn sturm_chain(f: &Poly) -> Result<SturmChain> {
    SturmChain::new(f)
}

/// Distinct real roots of `f` in `(lo, hi]`.
pub fn count_real_roots(f: &Poly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    RootCounter::new(f)?.count(lo, hi)
}

/// Distinct real roots of `f` in the open interval `(lo, hi)`.
pub fn count_real_roots_open(f: &Poly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    RootCounter::new(f)?.count_open(lo, hi)
}

/// `1 + max |a_i / a_n|`; every complex root has strictly smaller modulus.
pub fn cauchy_bound(f: &Poly) -> Result<Rational> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let lc = &f.coeffs()[n];
    let max = f.coeffs()[..n]
        .iter()
        .map(|a| (a / lc).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(max + Rational::one())
}

fn require_nonconstant(f: &Poly) -> Result<()> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(()),
    }
}

/// Real-rootedness and simplicity verdict with isolating intervals at the
/// default width.
pub fn certify(f: &Poly) -> Result<RootCertificate> {
    certify_with_width(f, &default_width())
}

pub fn certify_with_width(f: &Poly, width: &Rational) -> Result<RootCertificate> {
    require_nonconstant(f)?;
    let counter = RootCounter::new(f)?;
    let degree = f.degree().expect("nonconstant");
    let sf_degree = counter.square_free().degree().expect("nonconstant");
    let distinct_real_roots = counter.total();
    let intervals = isolate_with(&counter, width)?;
    Ok(RootCertificate {
        degree,
        distinct_real_roots,
        is_real_rooted: distinct_real_roots == sf_degree,
        is_simple: *counter.square_free() == f.monic(),
        intervals,
    })
}

/// One interval per distinct real root, sorted, each of length ≤ `width`.
pub fn isolate_roots(f: &Poly, width: &Rational) -> Result<Vec<IsolatingInterval>> {
    require_nonconstant(f)?;
    isolate_with(&RootCounter::new(f)?, width)
}

/// Picks a split point in `(lo, hi)` that is not a root: the midpoint, nudged
/// right by `(hi − lo)/4`, `/8`, ... if the midpoint happens to be a root.
fn split_point(counter: &RootCounter, lo: &Rational, hi: &Rational) -> Rational {
    let two = Rational::from_integer(BigInt::from(2));
    let w = hi - lo;
    let mid = (lo + hi) / &two;
    if !counter.is_root(&mid) {
        return mid;
    }
    let mut step = &w / Rational::from_integer(BigInt::from(4));
    loop {
        let cand = &mid + &step;
        if !counter.is_root(&cand) {
            return cand;
        }
        step /= &two;
    }
}

fn isolate_with(counter: &RootCounter, width: &Rational) -> Result<Vec<IsolatingInterval>> {
    if !width.is_positive() {
        return Err(Error::NonPositiveWidth);
    }
    let bound = cauchy_bound(counter.square_free())?;
    let mut out = Vec::new();
    if counter.total() == 0 {
        return Ok(out);
    }
    // depth-first, left half first, so output comes out sorted; each entry
    // carries the sign variations at both ends
    let chain = counter.chain();
    let v = |x: &Rational| chain.variations(&Endpoint::Finite(x.clone()));
    let (lo, hi) = (-bound.clone(), bound);
    let (v_lo, v_hi) = (v(&lo), v(&hi));
    let mut stack = vec![(lo, hi, v_lo, v_hi)];
    while let Some((lo, hi, v_lo, v_hi)) = stack.pop() {
        let n = v_lo.saturating_sub(v_hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo <= *width {
            out.push(IsolatingInterval { lo, hi });
            continue;
        }
        let mid = split_point(counter, &lo, &hi);
        let v_mid = v(&mid);
        stack.push((mid.clone(), hi, v_mid, v_hi));
        stack.push((lo, mid, v_lo, v_mid));
    }
    Ok(out)
}

/// Rational enclosure `lo ≤ R < hi` of `R = max |root|` over real roots,
/// with `hi − lo ≤ width`. Bisection starts from `[0, cauchy_bound]`.
pub fn largest_root_enclosure(f: &Poly, width: &Rational) -> Result<(Rational, Rational)> {
    require_nonconstant(f)?;
    if !width.is_positive() {
        return Err(Error::NonPositiveWidth);
    }
    let counter = RootCounter::new(f)?;
    if counter.total() == 0 {
        return Err(Error::NoRealRoots);
    }
    let two = Rational::from_integer(BigInt::from(2));
    let mut lo = Rational::zero();
    let mut hi = cauchy_bound(f)?;
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        if roots_with_magnitude_at_least(&counter, &mid)? > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Distinct real roots with `|x| ≥ t`, for `t > 0`.
fn roots_with_magnitude_at_least(counter: &RootCounter, t: &Rational) -> Result<usize> {
    let neg = counter.count(&Endpoint::NegInf, &Endpoint::Finite(-t))?;
    let pos = counter.count(&Endpoint::Finite(t.clone()), &Endpoint::PosInf)?;
    Ok(neg + pos + usize::from(counter.is_root(t)))
}

/// True when the only real root (if any) is 0.
pub fn all_real_roots_at_origin(f: &Poly) -> Result<bool> {
    let counter = RootCounter::new(f)?;
    let total = counter.total();
    Ok(total == 0 || (total == 1 && counter.is_root(&Rational::zero())))
}
