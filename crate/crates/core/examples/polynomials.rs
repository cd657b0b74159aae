//! Exact sparse polynomials: arithmetic, derivatives, substitution,
//! evaluation at Gaussian-rational points and the canonical JSON form.

use stablegram::polyring::{monomial, Assignment, Image, Point};
use stablegram::{GaussianRational, Polynomial, Variable};

fn main() {
    let (x1, y1, z1) = (Variable::x(1), Variable::y(1), Variable::z(1));
    let p = &monomial([x1, y1]) + &Polynomial::var(z1);
    let q = &(&p * &p) - &Polynomial::constant(3);
    println!("p = {p}");
    println!("q = p^2 - 3 = {q}");
    println!("dq/dx1 = {}", q.partial_derivative(x1));

    let diagonal = Assignment::from([(x1, Image::Var(Variable::x(0))), (y1, Image::from(2)), (z1, Image::from(1))]);
    println!("q(x0, 2, 1) = {}", q.specialize(&diagonal).unwrap());

    let point = Point::from([(x1, GaussianRational::i()), (y1, GaussianRational::from_ratios(1, 2, 1, 3)), (z1, 1.into())]);
    println!("q at (i, 1/2 + i/3, 1) = {}", q.evaluate(&point).unwrap());

    let json = q.to_json();
    println!("{json}");
    assert_eq!(Polynomial::from_json(&json).unwrap(), q);
}
