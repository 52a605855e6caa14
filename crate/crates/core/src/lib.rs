//! Exact computer-algebra kernel for verifying divisor-class classifications
//! of semidualizing modules over determinantal rings, trivial extensions, and
//! regular-sequence quotients.
//!
//! Layering, bottom to top:
//! - [`algebra`]: fields (F_p, Q), monomials and orders, polynomials, parser.
//! - [`groebner`]: Buchberger engine for ideals and submodules of free
//!   modules, syzygies, lifting, ideal arithmetic.
//! - [`homalg`]: graded quotient rings, finitely presented modules, minimal
//!   presentations and resolutions, Hom/Tensor/Ext, Hilbert series, depth,
//!   Bass numbers, rank.
//! - [`divisor`]: fractional ideals, divisorial hulls, divisor-class tests.
//! - [`builders`]: determinantal rings, trivial extensions, power quotients,
//!   regular-sequence quotients, chain constructions.
//! - [`semidual`]: semidualizing/dualizing/total-reflexivity verdicts.
//! - [`classify`]: class-group scans and theorem-shaped verification reports.

pub mod algebra;
pub mod builders;
pub mod classify;
pub mod divisor;
pub mod error;
pub mod groebner;
pub mod homalg;
pub mod semidual;

pub use error::{AlgebraError, Result};
