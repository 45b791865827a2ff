//! Monomials, term orders, and multivariate polynomial arithmetic over Z_p,
//! including division, Buchberger's algorithm and reduced Gröbner bases.

mod basis;
mod monomial;
mod order;
mod polynomial;

pub use basis::{buchberger, normal_form, MarkedPolynomial, ReducedGB};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use polynomial::Polynomial;
