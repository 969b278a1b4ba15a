use core::fmt;

/// Everything that can go wrong in the exact core.
///
/// Variants that correspond to a hypothesis of the underlying mathematics
/// (nonnegative α, ξ > 0, p(0) ≠ 0, ...) say so in their message.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    ZeroPolynomial,
    ConstantPolynomial,
    DivisionByZero,
    NegativeAlpha,
    NonPositiveXi,
    ZeroXi,
    NegativeXiRadius,
    VanishesAtOrigin,
    ZeroOrder,
    NonPositiveStep,
    NonPositiveWidth,
    EmptyInterval,
    NoRealRoots,
    EmptyGrid,
    BadGrid,
    MismatchedMomentBase,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Error::ZeroPolynomial => "the zero polynomial is not allowed here",
            Error::ConstantPolynomial => "a nonconstant polynomial is required (constants carry no roots)",
            Error::DivisionByZero => "polynomial division by zero",
            Error::NegativeAlpha => "alpha must be a nonnegative rational (alpha >= 0)",
            Error::NonPositiveXi => "xi must be positive: the Hermite weight exp(-x^2/(4 xi)) is integrable only for xi > 0",
            Error::ZeroXi => "xi must be nonzero (the Hermite localization lemma assumes xi != 0)",
            Error::NegativeXiRadius => {
                "Hermite radius undefined: H_k^xi has no full set of real roots for xi<0"
            }
            Error::VanishesAtOrigin => "p(0) must be nonzero (localization lemmas assume p(0) != 0)",
            Error::ZeroOrder => "the root order k must be a positive integer",
            Error::NonPositiveStep => "the flow time h (or eta) must be positive",
            Error::NonPositiveWidth => "interval width must be positive",
            Error::EmptyInterval => "interval endpoints must satisfy lo < hi",
            Error::NoRealRoots => "polynomial has no real roots, so its largest-root radius is undefined",
            Error::EmptyGrid => "the h grid must not be empty",
            Error::BadGrid => "the h grid must start at 0 and be strictly increasing",
            Error::MismatchedMomentBase => "cannot add moment values carrying different base constants",
        };
        f.write_str(msg)
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
impl core::error::Error for Error {}
