//! Falsifying stability by searching for exact zeros in the open upper
//! half-plane.
//!
//! Point `i` of the stream depends only on the seed and `i` (one ChaCha
//! stream per point), injected points come first, and the search returns the
//! lowest-indexed hit, so results do not depend on thread count.
//!
//! Each point is tested twice: directly (screened mod a large prime, then
//! confirmed exactly), and after moving one coordinate, in which the
//! polynomial is affine, onto the exact root it forces. The second test only
//! yields a zero when that root lies in the upper half-plane, which a stable
//! polynomial never allows.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::modular::Fp2;
use crate::polyring::{GaussianRational, Point, Polynomial, Variable};

/// Polynomials larger than this are only tested pointwise; the axis solve
/// needs two exact evaluations per point.
const AXIS_TERM_LIMIT: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    pub samples: usize,
    pub seed: u64,
    /// Real parts are drawn from `[-re_bound, re_bound]`.
    pub re_bound: i64,
    /// Imaginary parts are drawn from `(0, im_bound]`.
    pub im_bound: i64,
    pub max_denominator: i64,
    /// Tested before the random stream. Coordinates missing from an injected
    /// point are filled from the random point of the same index.
    pub injected: Vec<Point>,
    pub axis_solve: bool,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            samples: 10_000,
            seed: 42,
            re_bound: 10,
            im_bound: 10,
            max_denominator: 64,
            injected: Vec::new(),
            axis_solve: true,
        }
    }
}

impl SamplerConfig {
    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn inject(mut self, point: Point) -> Self {
        self.injected.push(point);
        self
    }

    pub fn without_axis_solve(mut self) -> Self {
        self.axis_solve = false;
        self
    }

    /// Total number of points examined.
    pub fn stream_len(&self) -> usize {
        self.injected.len() + self.samples
    }
}

/// An exact zero with every coordinate in the open upper half-plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: Point,
    /// Position in the stream (injected points first).
    pub index: usize,
}

struct Coordinates<'a>(&'a Point);

impl Serialize for Coordinates<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (v, z) in self.0 {
            map.serialize_entry(&v.to_string(), &z.to_ratio_strings())?;
        }
        map.end()
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(1))?;
        map.serialize_entry("witness", &Coordinates(&self.point))?;
        map.end()
    }
}

impl Witness {
    /// `{"witness": {"a0": ["-1/2", "1/2"], ...}}`
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serialization is infallible")
    }
}

/// The `index`-th random point over `vars`.
pub fn sample_point(vars: &[Variable], cfg: &SamplerConfig, index: usize) -> Point {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    vars.iter()
        .map(|&v| {
            let d = rng.random_range(1..=cfg.max_denominator);
            let re = rng.random_range(-cfg.re_bound * d..=cfg.re_bound * d);
            let im = rng.random_range(1..=cfg.im_bound * d);
            (v, GaussianRational::from_ratios(re, d, im, d))
        })
        .collect()
}

fn in_upper_half_plane(point: &Point) -> bool {
    point.values().all(GaussianRational::in_upper_half_plane)
}

/// What the search needs to know about the polynomial under test.
pub(crate) trait Probe: Sync {
    fn variables(&self) -> &[Variable];

    /// Exact zero test.
    fn vanishes_at(&self, point: &Point) -> bool;

    /// Cheap necessary condition for [`Probe::vanishes_at`].
    fn may_vanish_at(&self, _point: &Point) -> bool {
        true
    }

    /// Moves one coordinate (chosen from `pick`) onto the exact root it
    /// forces, if the polynomial is affine in it.
    fn axis_root(&self, point: &Point, pick: usize) -> Option<Point>;
}

pub(crate) fn stream_point(vars: &[Variable], cfg: &SamplerConfig, index: usize) -> Point {
    let random = sample_point(vars, cfg, index);
    match cfg.injected.get(index) {
        None => random,
        Some(injected) => random
            .into_iter()
            .map(|(v, z)| (v, injected.get(&v).cloned().unwrap_or(z)))
            .collect(),
    }
}

pub(crate) fn search<P: Probe>(probe: &P, cfg: &SamplerConfig) -> Option<Witness> {
    (0..cfg.stream_len()).into_par_iter().find_map_first(|index| {
        let point = stream_point(probe.variables(), cfg, index);
        if !in_upper_half_plane(&point) {
            return None;
        }
        if probe.may_vanish_at(&point) && probe.vanishes_at(&point) {
            return Some(Witness { point, index });
        }
        if cfg.axis_solve {
            if let Some(moved) = probe.axis_root(&point, index) {
                if in_upper_half_plane(&moved) && probe.vanishes_at(&moved) {
                    return Some(Witness { point: moved, index });
                }
            }
        }
        None
    })
}

struct ExpandedProbe<'a> {
    p: &'a Polynomial,
    vars: Vec<Variable>,
    residues: Vec<(Fp2, Vec<(usize, u32)>)>,
    /// `(v, p|_{v=0}, ∂p/∂v)` for each `v` in which `p` is affine.
    splits: Vec<(Variable, Polynomial, Polynomial)>,
}

impl<'a> ExpandedProbe<'a> {
    fn new(p: &'a Polynomial, axis_solve: bool) -> Self {
        let vars: Vec<Variable> = p.variables().into_iter().collect();
        let position: BTreeMap<Variable, usize> = vars.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let residues = p
            .terms()
            .map(|(m, c)| (Fp2::from_int(c), m.exponents().iter().map(|&(v, e)| (position[&v], e)).collect()))
            .collect();
        let splits = if axis_solve && p.len() <= AXIS_TERM_LIMIT {
            vars.iter()
                .filter(|&&v| p.degree_in(v) == 1)
                .map(|&v| {
                    let beta = p.partial_derivative(v);
                    let alpha = p - &(&Polynomial::var(v) * &beta);
                    (v, alpha, beta)
                })
                .collect()
        } else {
            Vec::new()
        };
        ExpandedProbe { p, vars, residues, splits }
    }
}

impl Probe for ExpandedProbe<'_> {
    fn variables(&self) -> &[Variable] {
        &self.vars
    }

    fn vanishes_at(&self, point: &Point) -> bool {
        self.p.evaluate(point).map(|z| z.is_zero()).unwrap_or(false)
    }

    fn may_vanish_at(&self, point: &Point) -> bool {
        let Some(coords) = self.vars.iter().map(|v| Fp2::from_gaussian(&point[v])).collect::<Option<Vec<_>>>() else {
            return true;
        };
        let value = self.residues.iter().fold(Fp2::ZERO, |acc, (c, mono)| {
            acc.add(mono.iter().fold(*c, |t, &(k, e)| t.mul(coords[k].pow(e))))
        });
        value.is_zero()
    }

    fn axis_root(&self, point: &Point, pick: usize) -> Option<Point> {
        if self.splits.is_empty() {
            return None;
        }
        let (v, alpha, beta) = &self.splits[pick % self.splits.len()];
        let b = beta.evaluate(point).ok()?;
        let root = &(-alpha.evaluate(point).ok()?) * &b.recip()?;
        if !root.in_upper_half_plane() {
            return None;
        }
        let mut moved = point.clone();
        moved.insert(*v, root);
        Some(moved)
    }
}

/// Searches `cfg.stream_len()` points for an exact upper-half-plane zero of
/// `p`. `None` is evidence of stability, not proof. A constant polynomial
/// has a witness iff it is zero.
pub fn sample_falsify(p: &Polynomial, cfg: &SamplerConfig) -> Option<Witness> {
    if p.is_zero() {
        return Some(Witness { point: Point::new(), index: 0 });
    }
    search(&ExpandedProbe::new(p, cfg.axis_solve), cfg)
}

/// Exact check that `w` is an upper-half-plane zero of `p`.
pub fn certify(p: &Polynomial, w: &Witness) -> bool {
    in_upper_half_plane(&w.point) && p.evaluate(&w.point).is_ok_and(|z| z.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::monomial;

    fn i() -> GaussianRational {
        GaussianRational::i()
    }

    #[test]
    fn product_plus_one_has_a_witness() {
        let (z1, z2) = (Variable::z(1), Variable::z(2));
        let p = &monomial([z1, z2]) + &Polynomial::one();
        let cfg = SamplerConfig::default().inject(Point::from([(z1, i()), (z2, i())]));
        let w = sample_falsify(&p, &cfg).unwrap();
        assert_eq!(w.index, 0);
        assert_eq!(w.point, Point::from([(z1, i()), (z2, i())]));
        assert!(certify(&p, &w));
        assert_eq!(w.to_json(), r#"{"witness":{"z1":["0/1","1/1"],"z2":["0/1","1/1"]}}"#);
    }

    #[test]
    fn axis_solve_finds_witness_without_injection() {
        let (z1, z2) = (Variable::z(1), Variable::z(2));
        let p = &monomial([z1, z2]) + &Polynomial::one();
        let w = sample_falsify(&p, &SamplerConfig::default().with_samples(100)).unwrap();
        assert!(certify(&p, &w));
        assert!(sample_falsify(&p, &SamplerConfig::default().with_samples(100).without_axis_solve()).is_none());
    }

    #[test]
    fn sum_is_stable() {
        let p = &Polynomial::var(Variable::z(1)) + &Polynomial::var(Variable::z(2));
        assert_eq!(sample_falsify(&p, &SamplerConfig::default().with_samples(2000)), None);
    }

    #[test]
    fn points_are_deterministic_and_in_range() {
        let vars = [Variable::x(1), Variable::y(3)];
        let cfg = SamplerConfig::default();
        for k in 0..50 {
            let pt = sample_point(&vars, &cfg, k);
            assert_eq!(pt, sample_point(&vars, &cfg, k));
            for z in pt.values() {
                assert!(z.in_upper_half_plane());
                assert!(z.im <= num_rational::BigRational::from_integer(10.into()));
                assert!(z.re.denom() <= &64.into() && z.im.denom() <= &64.into());
            }
        }
        assert_ne!(sample_point(&vars, &cfg, 0), sample_point(&vars, &cfg.clone().with_seed(7), 0));
    }
}
