//! Exact sparse multivariate polynomials over the integers, with
//! Gaussian-rational evaluation and specialization.

mod gaussian;
mod json;
mod monomial;
mod polynomial;
mod variable;

pub use gaussian::GaussianRational;
pub use monomial::Monomial;
pub use polynomial::{Assignment, Image, Point, Polynomial, ScaledPolynomial};
pub use variable::{Family, Variable};

/// Product of the given variables as a polynomial.
pub fn monomial<I: IntoIterator<Item = Variable>>(vars: I) -> Polynomial {
    Polynomial::from(Monomial::product(vars))
}
