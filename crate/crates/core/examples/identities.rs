//! Identities between the univariate polynomials.

use stablegram::stability::{gessel_stanley_series, stirling2, tn_from_eulerian, Specialization};

fn main() {
    for n in 1..=6 {
        let t = Specialization::T.polynomial(n);
        println!("T_{n}(x) = {t}  (matches sum 2^(n-k) C(n,k) x^k: {})", t == tn_from_eulerian(n));
    }
    for k in 1..=4 {
        let series: Vec<String> = gessel_stanley_series(k, 8).iter().map(ToString::to_string).collect();
        let stirling: Vec<String> = (0..=8).map(|n| stirling2(n + k, n).to_string()).collect();
        println!("k={k}: C_k(x)/(1-x)^(2k+1) = [{}], S(n+k,n) = [{}]", series.join(", "), stirling.join(", "));
    }
}
