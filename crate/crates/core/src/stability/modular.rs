//! Arithmetic in `F_p[i]` for `p = 2^61 - 1`. Since `p ≡ 3 (mod 4)` this
//! is the field with `p²` elements, and reduction mod `p` is a ring map from
//! Gaussian rationals whose denominators are prime to `p`. A nonzero image
//! therefore proves a nonzero value; a zero image proves nothing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::polyring::GaussianRational;

pub(crate) const P: u64 = (1 << 61) - 1;

fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn reduce_int(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().expect("residue fits in u64")
}

fn reduce_ratio(q: &BigRational) -> Option<u64> {
    let d = reduce_int(q.denom());
    if d == 0 {
        return None;
    }
    Some(mul(reduce_int(q.numer()), pow(d, P - 2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Fp2 {
    re: u64,
    im: u64,
}

impl Fp2 {
    pub const ZERO: Fp2 = Fp2 { re: 0, im: 0 };
    pub const ONE: Fp2 = Fp2 { re: 1, im: 0 };

    pub fn from_int(n: &BigInt) -> Fp2 {
        Fp2 { re: reduce_int(n), im: 0 }
    }

    /// `None` when a denominator vanishes mod `p`.
    pub fn from_gaussian(z: &GaussianRational) -> Option<Fp2> {
        Some(Fp2 { re: reduce_ratio(&z.re)?, im: reduce_ratio(&z.im)? })
    }

    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(self, o: Fp2) -> Fp2 {
        Fp2 { re: add(self.re, o.re), im: add(self.im, o.im) }
    }

    pub fn mul(self, o: Fp2) -> Fp2 {
        Fp2 {
            re: sub(mul(self.re, o.re), mul(self.im, o.im)),
            im: add(mul(self.re, o.im), mul(self.im, o.re)),
        }
    }

    pub fn pow(self, mut e: u32) -> Fp2 {
        let (mut base, mut r) = (self, Fp2::ONE);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_a_ring_map() {
        let a = GaussianRational::from_ratios(-3, 7, 5, 2);
        let b = GaussianRational::from_ratios(1, 64, -9, 13);
        let (fa, fb) = (Fp2::from_gaussian(&a).unwrap(), Fp2::from_gaussian(&b).unwrap());
        assert_eq!(Fp2::from_gaussian(&(&a * &b)).unwrap(), fa.mul(fb));
        assert_eq!(Fp2::from_gaussian(&(&a + &b)).unwrap(), fa.add(fb));
        assert_eq!(Fp2::from_gaussian(&a.pow(5)).unwrap(), fa.pow(5));
        let i = Fp2::from_gaussian(&GaussianRational::i()).unwrap();
        assert!(i.mul(i).add(Fp2::ONE).is_zero());
    }
}
