//! Exact pushforwards of tautological classes from the space of limit
//! linear series to the boundary of the moduli space of curves, and the
//! slopes of the effective divisors they produce.
//!
//! Layout:
//!
//! * [`numeric`]: big rationals, factorials, binomials, parsing.
//! * [`schubert`]: Schubert calculus on `G(r, P^d)`.
//! * [`tautpush`]: closed-form pushforwards `η_* a`, `η_* b`, `η_* c`.
//! * [`divisors`]: the Gieseker–Petri, hypersurface and syzygy families.
//! * [`families`]: test-curve checks and reconstruction of the formulas.
//!
//! The class containers are generic over the coefficient ring; the aliases
//! below fix it to [`numeric::Rational`], which is what every formula uses.
//! A typical call is `push_b(&GrdParams::brill_noether_zero(10, 4, 12)?)`.

pub mod divisors;
pub mod error;
pub mod families;
pub mod linalg;
pub mod numeric;
pub mod schubert;
pub mod tautpush;

pub use error::{Error, Result};
pub use numeric::Rational;
pub use schubert::{GrassmannianSpec, SchubertIndex};
pub use tautpush::{castelnuovo_n, push_a, push_b, push_c, push_combo, xi, GrdParams};

/// A Chow class on a Grassmannian with rational coefficients.
pub type Chow = schubert::ChowClass<Rational>;
/// A divisor class on the moduli space of pointed curves.
pub type Divisor = tautpush::DivisorClass<Rational>;
/// A linear combination `p_a a + p_b b + p_c c + p_λ λ`.
pub type Combo = tautpush::TautCombo<Rational>;
