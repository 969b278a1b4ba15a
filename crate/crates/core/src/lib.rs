//! Exact-arithmetic core: rational polynomials, Laguerre and scaled Hermite
//! families, the heat semigroup `e^{−hΛ}` of the Laguerre operator
//! `Λ = x·d²/dx² + (α+1)·d/dx`, Sturm real-root certification, exact
//! orthogonality moments, and the harnesses that tie them together.
//!
//! `no_std`; needs `alloc`.

#![no_std]

extern crate alloc;

pub mod basis;
pub mod error;
pub mod flow;
pub mod orthocheck;
pub mod ratpoly;
pub mod realroot;

pub use basis::{AlphaParam, XiParam};
pub use error::{Error, Result};
pub use ratpoly::{Poly, Rational};
pub use realroot::{Endpoint, IsolatingInterval, RootCertificate, SturmChain};
