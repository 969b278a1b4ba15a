//! Polynomial families and the Laguerre operator.
//!
//! `Λ = x·d²/dx² + (α+1)·d/dx` lowers degree by exactly one on nonconstant
//! polynomials, so `e^{−hΛ} = Σ_j (−h)^j Λ^j / j!` is a finite sum on
//! polynomials and everything here is exact.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratpoly::{Poly, Rational};

/// Laguerre parameter α, a nonnegative rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaParam(Rational);

impl AlphaParam {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeAlpha);
        }
        Ok(AlphaParam(value))
    }

    pub fn zero() -> Self {
        AlphaParam(Rational::zero())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

/// Hermite scale / root location ξ. Any rational; callers that need `ξ > 0`
/// check for themselves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XiParam(Rational);

impl XiParam {
    pub fn new(value: Rational) -> Self {
        XiParam(value)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn require_positive(&self) -> Result<&Rational> {
        if self.0.is_positive() {
            Ok(&self.0)
        } else {
            Err(Error::NonPositiveXi)
        }
    }
}

fn from_usize(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, i| acc * from_usize(i))
}

/// Generalized binomial `C(top, k) = Π_{j<k} (top − j) / k!`.
fn gen_binomial(top: &Rational, k: usize) -> Rational {
    let num = (0..k).fold(Rational::one(), |acc, j| acc * (top - from_usize(j)));
    num / factorial(k)
}

/// `L_n^α(x) = Σ_{i=0}^n (−1)^i C(n+α, n−i) x^i / i!`
pub fn laguerre(n: usize, alpha: &AlphaParam) -> Poly {
    let top = from_usize(n) + alpha.value();
    let coeffs = (0..=n)
        .map(|i| {
            let c = gen_binomial(&top, n - i) / factorial(i);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Poly::new(coeffs)
}

/// `(−1)^n n! L_n^α`, monic of degree `n`.
pub fn monic_laguerre(n: usize, alpha: &AlphaParam) -> Poly {
    let mut c = factorial(n);
    if n % 2 == 1 {
        c = -c;
    }
    laguerre(n, alpha).scale(&c)
}

/// `H_k^ξ = e^{−ξ d²/dx²} x^k = Σ_j (−ξ)^j k!/(j!(k−2j)!) x^{k−2j}`
pub fn scaled_hermite(k: usize, xi: &XiParam) -> Poly {
    let mut coeffs = vec![Rational::zero(); k + 1];
    let neg_xi = -xi.value();
    let mut power = Rational::one();
    for j in 0..=k / 2 {
        coeffs[k - 2 * j] = &power * factorial(k) / (factorial(j) * factorial(k - 2 * j));
        power *= &neg_xi;
    }
    Poly::new(coeffs)
}

/// `Λf = x·f″ + (α+1)·f′`
pub fn lambda_apply(f: &Poly, alpha: &AlphaParam) -> Poly {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let x_d2 = &Poly::x() * &d2;
    &x_d2 + &d1.scale(&(alpha.value() + Rational::one()))
}

/// `e^{−hΛ} f`, summed until `Λ^j f` vanishes.
pub fn heat_semigroup(f: &Poly, alpha: &AlphaParam, h: &Rational) -> Poly {
    if h.is_zero() {
        return f.clone();
    }
    let neg_h = -h;
    let mut term = f.clone();
    let mut weight = Rational::one();
    let mut acc = f.clone();
    let mut j = 0usize;
    loop {
        term = lambda_apply(&term, alpha);
        if term.is_zero() {
            break;
        }
        j += 1;
        weight = weight * &neg_h / from_usize(j);
        acc = &acc + &term.scale(&weight);
    }
    acc
}

/// `Σ a_i x^i ↦ Σ (−1)^i i! a_i L_i^α`, i.e. `x^n ↦ (−1)^n n! L_n^α`.
///
/// Uses the basis sum. Debug builds also run the semigroup route
/// `e^{−Λ} f` and assert that the two agree.
pub fn laguerre_transform(f: &Poly, alpha: &AlphaParam) -> Poly {
    let out = laguerre_transform_basis(f, alpha);
    debug_assert_eq!(out, laguerre_transform_semigroup(f, alpha));
    out
}

pub fn laguerre_transform_basis(f: &Poly, alpha: &AlphaParam) -> Poly {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .fold(Poly::zero(), |acc, (i, a)| {
            &acc + &monic_laguerre(i, alpha).scale(a)
        })
}

pub fn laguerre_transform_semigroup(f: &Poly, alpha: &AlphaParam) -> Poly {
    heat_semigroup(f, alpha, &Rational::one())
}

/// Both routes, for callers that want the comparison in release builds.
pub fn laguerre_transform_checked(f: &Poly, alpha: &AlphaParam) -> (Poly, bool) {
    let basis = laguerre_transform_basis(f, alpha);
    let agree = basis == laguerre_transform_semigroup(f, alpha);
    (basis, agree)
}

/// `x^n` for convenience in identity checks.
pub fn power_of_x(n: usize) -> Poly {
    Poly::monomial(Rational::one(), n)
}

/// The first `count` monic Laguerre polynomials, `0..count`.
pub fn monic_laguerre_table(count: usize, alpha: &AlphaParam) -> Vec<Poly> {
    (0..count).map(|n| monic_laguerre(n, alpha)).collect()
}
