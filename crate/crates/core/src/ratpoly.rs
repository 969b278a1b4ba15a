//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Coefficients are stored in ascending degree order and the vector never
//! carries trailing zeros, so the zero polynomial is the empty vector.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num / den` from machine integers. Panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c · x^n`
    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Poly::new(coeffs)
    }

    /// `lead · Π (x − r)^m`
    pub fn from_roots(roots: &[(Rational, u32)], lead: Rational) -> Self {
        let mut p = Poly::constant(lead);
        for (r, m) in roots {
            let factor = Poly::new(vec![-r.clone(), Rational::one()]);
            for _ in 0..*m {
                p = &p * &factor;
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// `f(x + c)`, by Horner's scheme on the shifted variable.
    pub fn shift(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return self.clone();
        }
        let x_plus_c = Poly::new(vec![c.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, a| &(&acc * &x_plus_c) + &Poly::constant(a.clone()))
    }

    /// `f(s·x)`
    pub fn scale_arg(&self, s: &Rational) -> Poly {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= s;
        }
        Poly::new(coeffs)
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Scales to leading coefficient 1. The zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Poly::zero(),
        }
    }

    /// Positive rational multiple with coprime integer coefficients.
    ///
    /// The sign of every coefficient is preserved.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num_gcd = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
        self.scale(&Rational::new(den_lcm, num_gcd))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    /// Monic polynomial with the same distinct complex roots, all simple.
    pub fn square_free(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.div_rem(&g)?;
        Ok(q.monic())
    }

    /// Sign of `f(x)` as −1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign_of(&self.eval(x))
    }
}

pub(crate) fn sign_of(v: &Rational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Decimal approximation of `q` rounded to `sig` significant digits (half
/// away from zero), computed exactly. Display only.
pub fn approx_decimal(q: &Rational, sig: usize) -> String {
    use alloc::string::ToString;
    assert!(sig > 0);
    if q.is_zero() {
        return "0".to_string();
    }
    let ten = BigInt::from(10);
    let a = q.abs();
    let pow10 = |e: i64| -> Rational {
        let p = num_traits::pow(ten.clone(), e.unsigned_abs() as usize);
        if e >= 0 {
            Rational::from_integer(p)
        } else {
            Rational::new(BigInt::one(), p)
        }
    };
    let digits_of = |n: &BigInt| n.to_string().len() as i64;
    let mut e = digits_of(a.numer()) - digits_of(a.denom());
    while a < pow10(e) {
        e -= 1;
    }
    while a >= pow10(e + 1) {
        e += 1;
    }
    let scaled = &a * pow10(sig as i64 - 1 - e);
    let mut n = (scaled + Rational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    if digits_of(&n) > sig as i64 {
        n /= &ten;
        e += 1;
    }
    let digits = n.to_string();
    let mut out = String::new();
    if q.is_negative() {
        out.push('-');
    }
    if e >= sig as i64 - 1 {
        out.push_str(&digits);
        out.extend(core::iter::repeat_n('0', (e - sig as i64 + 1) as usize));
        return out;
    }
    let (int_part, frac) = if e < 0 {
        let mut frac = String::new();
        frac.extend(core::iter::repeat_n('0', (-e - 1) as usize));
        frac.push_str(&digits);
        ("0".to_string(), frac)
    } else {
        let split = (e + 1) as usize;
        (digits[..split].to_string(), digits[split..].to_string())
    };
    let frac = frac.trim_end_matches('0');
    out.push_str(&int_part);
    if !frac.is_empty() {
        out.push('.');
        out.push_str(frac);
    }
    out
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Human-readable form such as `x^2 - 8x + 10`, highest degree first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut body = String::new();
            let unit = mag.is_one();
            if !unit || i == 0 {
                if mag.is_integer() {
                    body = alloc::format!("{}", mag.numer());
                } else {
                    body = alloc::format!("({mag})");
                }
            }
            match i {
                0 => {}
                1 => body.push('x'),
                _ => body.push_str(&alloc::format!("x^{i}")),
            }
            f.write_str(&body)?;
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
