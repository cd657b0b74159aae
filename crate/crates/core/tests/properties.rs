use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use stablegram::polyring::{Assignment, Image, Point};
use stablegram::stability::{root_report, sample_falsify, SamplerConfig};
use stablegram::structures::{enumerate, statistics};
use stablegram::{FamilyKind, GaussianRational, Monomial, Polynomial, StructureFamily, Variable};

fn vars() -> Vec<Variable> {
    vec![Variable::x(0), Variable::x(1), Variable::y(1), Variable::z(1), Variable::z(2)]
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    let term = (-5i64..=5, prop::collection::vec(0u32..=2, 5));
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(c, exps)| {
            let m = Monomial::from_pairs(vars().into_iter().zip(exps));
            (m, BigInt::from(c))
        }))
    })
}

fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
    (-20i64..=20, 1i64..=8, -20i64..=20, 1i64..=8).prop_map(|(a, b, c, d)| GaussianRational::from_ratios(a, b, c, d))
}

fn arb_point() -> impl Strategy<Value = Point> {
    prop::collection::vec(arb_gaussian(), 5).prop_map(|zs| vars().into_iter().zip(zs).collect())
}

fn arb_assignment() -> impl Strategy<Value = Assignment> {
    prop::collection::vec((0usize..3, -4i64..=4), 5).prop_map(|choices| {
        vars()
            .into_iter()
            .zip(choices)
            .map(|(v, (kind, k))| {
                let image = match kind {
                    0 => Image::from(k),
                    1 => Image::from(BigRational::new(k.into(), 2.into())),
                    _ => Image::Var(Variable::x(9)),
                };
                (v, image)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Polynomial::one(), p.clone());
    }

    #[test]
    fn partial_derivative_rules(p in arb_poly(), q in arb_poly(), k in 0usize..5) {
        let v = vars()[k];
        let d = |f: &Polynomial| f.partial_derivative(v);
        prop_assert_eq!(d(&(&p + &q)), &d(&p) + &d(&q));
        prop_assert_eq!(d(&(&p * &q)), &(&d(&p) * &q) + &(&p * &d(&q)));
    }

    #[test]
    fn specialization_is_a_ring_map(p in arb_poly(), q in arb_poly(), a in arb_assignment()) {
        // compare numerator/denominator pairs by cross-multiplying
        let s = |f: &Polynomial| f.specialize_scaled(&a);
        let k = |c: &BigInt| Polynomial::constant(c.clone());
        let (sp, sq) = (s(&p), s(&q));
        let (prod, sum) = (s(&(&p * &q)), s(&(&p + &q)));
        let d = k(&(&sp.denominator * &sq.denominator));
        prop_assert_eq!(&prod.numerator * &d, &(&sp.numerator * &sq.numerator) * &k(&prod.denominator));
        let cross = &(&sp.numerator * &k(&sq.denominator)) + &(&sq.numerator * &k(&sp.denominator));
        prop_assert_eq!(&sum.numerator * &d, &cross * &k(&sum.denominator));
    }

    #[test]
    fn evaluation_is_a_ring_map(p in arb_poly(), q in arb_poly(), pt in arb_point()) {
        let e = |f: &Polynomial| f.evaluate(&pt).unwrap();
        prop_assert_eq!(e(&(&p * &q)), &e(&p) * &e(&q));
        prop_assert_eq!(e(&(&p + &q)), &e(&p) + &e(&q));
    }

    #[test]
    fn json_round_trip(p in arb_poly()) {
        let s = p.to_json();
        prop_assert_eq!(Polynomial::from_json(&s).unwrap(), p.clone());
        prop_assert_eq!(Polynomial::from_json(&s).unwrap().to_json(), s);
    }

    #[test]
    fn grammar_derivative_is_a_derivation(p in arb_poly(), q in arb_poly(), step in 1usize..4) {
        let g = FamilyKind::Stirling2Multi.grammar(step);
        prop_assert_eq!(g.derive(&(&p + &q)), &g.derive(&p) + &g.derive(&q));
        prop_assert_eq!(g.derive(&(&p * &q)), &(&g.derive(&p) * &q) + &(&p * &g.derive(&q)));
    }

    #[test]
    fn sturm_on_products_of_linear_factors(roots in prop::collection::vec(0i64..6, 1..7), c in 1i64..5) {
        let x = Polynomial::var(Variable::x(0));
        let p: Polynomial = roots.iter().map(|&r| &x + &Polynomial::constant(r)).product();
        let (_, coeffs) = p.to_univariate().unwrap();
        let report = root_report(&coeffs).unwrap();
        let mut distinct = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert!(report.all_real && report.all_nonpositive);
        prop_assert_eq!(report.degree, roots.len());
        prop_assert_eq!(report.real_root_count, roots.len());
        prop_assert_eq!(report.distinct, distinct.len() == roots.len());

        let q = &p * &(&(&x * &x) + &Polynomial::constant(c));
        let (_, coeffs) = q.to_univariate().unwrap();
        let report = root_report(&coeffs).unwrap();
        prop_assert!(!report.all_real);
        prop_assert_eq!(report.real_root_count, roots.len());
    }

    #[test]
    fn statistics_partition_the_gaps(n in 1usize..4, pick in any::<prop::sample::Index>()) {
        let words = enumerate(StructureFamily::Stirling, n);
        let w = &words[pick.index(words.len())];
        let s = statistics(w).unwrap();
        // every one of the 2n+1 gaps between sentinels is an ascent or a descent or a plateau
        prop_assert_eq!(s.asc.len() + s.des.len() + s.plat.len(), 2 * n + 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn falsification_is_deterministic(seed in any::<u64>(), k in 1usize..4) {
        let cfg = SamplerConfig::default().with_samples(200).with_seed(seed);
        let stable: Polynomial = (1..=k as u32).map(|i| Polynomial::var(Variable::z(i))).sum();
        prop_assert_eq!(sample_falsify(&stable, &cfg), None);
        let unstable = &(&stable * &stable) + &Polynomial::one();
        let first = sample_falsify(&unstable, &cfg);
        prop_assert_eq!(&first, &sample_falsify(&unstable, &cfg));
        prop_assert!(first.iter().all(|w| w.point.len() == k));
    }
}
