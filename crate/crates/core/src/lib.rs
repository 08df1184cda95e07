//! Exact computational commutative algebra over the rationals, specialized
//! for constructing and checking type II unprojection rings.
//!
//! The crate is organized in layers:
//!
//! * [`ring`], [`monomial`], [`poly`], [`matrix`], [`subst`], [`parse`]:
//!   weighted polynomial rings with exact rational coefficients.
//! * [`order`], [`groebner`]: monomial orders, a Buchberger engine with the
//!   Gebauer-Moeller criteria, normal forms with quotient tracking,
//!   elimination, colon ideals, saturation, codimension, minimal generators
//!   and weighted Hilbert series.
//! * [`unprojection`]: the determinantal divisor format, its complete
//!   intersection data, numerators of the unprojection sections, the linear
//!   and quadratic relation families, presentation ideals and the
//!   elimination kernel oracle.
//! * [`verify`]: an executable audit of the identities, codimension counts,
//!   oracle equalities and Hilbert symmetry the construction promises.
//!
//! All values are immutable and deterministic; cached Groebner bases are
//! written once behind a lock and shared afterwards.

pub mod error;
pub mod groebner;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod subst;

pub(crate) mod linalg;
pub mod unprojection;
pub mod verify;

pub use error::{Error, Result};
pub use groebner::{
    divide_with_quotients, DivisionResult, EngineConfig, GroebnerBasis, HilbertSeries, Ideal,
    LiftingBasis,
};
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use order::{BaseOrder, MonomialOrder};
pub use poly::{coeff_int, coeff_ratio, Coeff, Homogeneity, Polynomial};
pub use ring::RingDescriptor;
pub use subst::SubstitutionMap;
