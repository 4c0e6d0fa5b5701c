//! Exact scalars, monomials, sparse polynomials and dense/sparse linear algebra.

pub mod matrix;
pub mod monomial;
pub mod polynomial;
pub mod rational;

pub use matrix::{PolyMatrix, RatMatrix, SparseMatrix};
pub use monomial::{binomial, monomials_of_degree, Monomial, MAX_VARS};
pub use polynomial::Polynomial;
pub use rational::{format_rational, parse_rational, rat, Rational};
