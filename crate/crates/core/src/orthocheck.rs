//! Orthogonality integrals evaluated exactly through moment functionals.
//!
//! Every integrand is a polynomial times a fixed weight, so an integral is a
//! rational combination of closed-form monomial moments. The transcendental
//! part (`Γ(α+1)` or `√(πξ)`) is carried as a tag, never evaluated.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::basis::{laguerre, scaled_hermite, AlphaParam, XiParam};
use crate::error::{Error, Result};
use crate::ratpoly::{Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MomentBase {
    /// `Γ(α+1)`
    GammaAlphaPlus1,
    /// `√(πξ)`
    SqrtPiXi,
    Unit,
}

impl MomentBase {
    pub fn as_str(self) -> &'static str {
        match self {
            MomentBase::GammaAlphaPlus1 => "gamma_alpha_plus_1",
            MomentBase::SqrtPiXi => "sqrt_pi_xi",
            MomentBase::Unit => "unit",
        }
    }
}

/// `coeff × base`. A zero coefficient is zero whatever the tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentValue {
    pub coeff: Rational,
    pub base: MomentBase,
}

impl MomentValue {
    pub fn new(coeff: Rational, base: MomentBase) -> Self {
        MomentValue { coeff, base }
    }

    pub fn zero(base: MomentBase) -> Self {
        MomentValue::new(Rational::zero(), base)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn try_add(&self, other: &MomentValue) -> Result<MomentValue> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.base != other.base {
            return Err(Error::MismatchedMomentBase);
        }
        Ok(MomentValue::new(&self.coeff + &other.coeff, self.base))
    }

    pub fn scale(&self, c: &Rational) -> MomentValue {
        MomentValue::new(&self.coeff * c, self.base)
    }
}

fn from_usize(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `∫_0^∞ x^{m+α} e^{−x} dx = Γ(m+α+1) = [Π_{i=1}^m (α+i)] · Γ(α+1)`
pub fn laguerre_moment(m: usize, alpha: &AlphaParam) -> MomentValue {
    let coeff = (1..=m).fold(Rational::one(), |acc, i| acc * (alpha.value() + from_usize(i)));
    MomentValue::new(coeff, MomentBase::GammaAlphaPlus1)
}

/// `∫_ℝ x^m e^{−x²/4ξ} dx`: zero for odd `m`, `(2t−1)!! (2ξ)^t · 2√(πξ)` for `m = 2t`.
pub fn hermite_moment(m: usize, xi: &XiParam) -> Result<MomentValue> {
    let xi = xi.require_positive()?;
    if m % 2 == 1 {
        return Ok(MomentValue::zero(MomentBase::SqrtPiXi));
    }
    let t = m / 2;
    let double_fact = (1..=t).fold(BigInt::one(), |acc, i| acc * BigInt::from(2 * i - 1));
    let two_xi = xi * from_usize(2);
    let power = (0..t).fold(Rational::one(), |acc, _| acc * &two_xi);
    let coeff = from_usize(2) * Rational::from_integer(double_fact) * power;
    Ok(MomentValue::new(coeff, MomentBase::SqrtPiXi))
}

/// `∫_0^∞ x^α e^{−x} f(x) dx`
pub fn laguerre_functional(f: &Poly, alpha: &AlphaParam) -> MomentValue {
    f.coeffs()
        .iter()
        .enumerate()
        .fold(MomentValue::zero(MomentBase::GammaAlphaPlus1), |acc, (m, c)| {
            acc.try_add(&laguerre_moment(m, alpha).scale(c))
                .expect("same base")
        })
}

/// `∫_ℝ e^{−x²/4ξ} f(x) dx`
pub fn hermite_functional(f: &Poly, xi: &XiParam) -> Result<MomentValue> {
    let mut acc = MomentValue::zero(MomentBase::SqrtPiXi);
    for (m, c) in f.coeffs().iter().enumerate() {
        acc = acc.try_add(&hermite_moment(m, xi)?.scale(c))?;
    }
    Ok(acc)
}

/// `∫_0^∞ x^α e^{−x} L_n^α L_m^α dx`
pub fn laguerre_inner(n: usize, m: usize, alpha: &AlphaParam) -> MomentValue {
    laguerre_functional(&(&laguerre(n, alpha) * &laguerre(m, alpha)), alpha)
}

/// `∫_ℝ H_k^ξ H_ℓ^ξ e^{−x²/4ξ} dx`; requires `ξ > 0`.
pub fn hermite_inner(k: usize, l: usize, xi: &XiParam) -> Result<MomentValue> {
    xi.require_positive()?;
    hermite_functional(&(&scaled_hermite(k, xi) * &scaled_hermite(l, xi)), xi)
}

/// `Π_{i=1}^n (α+i) / n!`, i.e. `Γ(n+α+1)/n!` in units of `Γ(α+1)`.
pub fn laguerre_diagonal_expected(n: usize, alpha: &AlphaParam) -> Rational {
    let fact = (1..=n).fold(Rational::one(), |acc, i| acc * from_usize(i));
    laguerre_moment(n, alpha).coeff / fact
}

/// The commonly quoted Hermite normalization `2·k!` (in units of `√(πξ)`).
pub fn hermite_quoted_diagonal(k: usize) -> Rational {
    (1..=k).fold(from_usize(2), |acc, i| acc * from_usize(i))
}

/// Computed Hermite diagonal divided by the quoted `2·k!√(πξ)`.
pub fn hermite_diagonal_ratio(k: usize, xi: &XiParam) -> Result<Rational> {
    Ok(hermite_inner(k, k, xi)?.coeff / hermite_quoted_diagonal(k))
}
