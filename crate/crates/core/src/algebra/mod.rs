//! Exact base algebra: coefficient fields, monomials and orders, polynomial
//! arithmetic, and the expression parser.

pub mod field;
pub mod monomial;
pub mod parse;
pub mod poly;

pub use field::{is_prime_u64, Coeff, FieldKind};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::{PolyRing, Polynomial, MAX_VARIABLES};
