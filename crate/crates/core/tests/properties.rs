use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use eulerlink::complex::{barycentric_subdivision, ConstructibleSet};
use eulerlink::constructible::ConstructibleFunction;
use eulerlink::links::point_link_chi;
use eulerlink::monodromy::{check_fiber_congruences, milnor_number, validate, WeightedPoly};
use eulerlink::selftest::{random_closed, random_complex, random_locally_closed, random_set};
use eulerlink::Complex;

fn complex_from(seed: u64, max: usize) -> (ChaCha8Rng, Arc<Complex>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = Arc::new(random_complex(&mut rng, max));
    (rng, x)
}

fn random_function(rng: &mut ChaCha8Rng, x: &Arc<Complex>) -> ConstructibleFunction {
    let mut weights = BTreeMap::new();
    for s in x.iter() {
        if rng.gen_bool(0.4) {
            weights.insert(s.clone(), rng.gen_range(-3..=3));
        }
    }
    ConstructibleFunction::from_weights(x.clone(), weights).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chi_c_is_additive(seed in any::<u64>()) {
        let (mut rng, x) = complex_from(seed, 80);
        let a = random_set(&mut rng, &x);
        let b = random_set(&mut rng, &x);
        prop_assert_eq!(
            a.union(&b).chi_c() + a.intersection(&b).chi_c(),
            a.chi_c() + b.chi_c()
        );
        prop_assert_eq!(a.chi_c() + a.complement().chi_c(), x.euler_characteristic());
    }

    #[test]
    fn closed_sets_have_chi_equal_to_chi_c(seed in any::<u64>()) {
        let (mut rng, x) = complex_from(seed, 80);
        let y = random_closed(&mut rng, &x);
        prop_assert_eq!(y.chi(), y.chi_c());
        prop_assert_eq!(y.chi(), y.to_complex().unwrap().euler_characteristic());
    }

    #[test]
    fn subdivision_preserves_chi(seed in any::<u64>()) {
        let (mut rng, x) = complex_from(seed, 40);
        let s = random_locally_closed(&mut rng, &x);
        let sd = barycentric_subdivision(&x);
        prop_assert_eq!(sd.target.euler_characteristic(), x.euler_characteristic());
        let t = sd.transport(&s);
        prop_assert_eq!(t.chi_c(), s.chi_c());
        prop_assert_eq!(t.chi(), s.chi());
    }

    #[test]
    fn lambda_is_linear(seed in any::<u64>(), a in -4i64..=4, b in -4i64..=4) {
        let (mut rng, x) = complex_from(seed, 60);
        let f = random_function(&mut rng, &x);
        let g = random_function(&mut rng, &x);
        let lhs = f.combine(a, &g, b).lambda_op();
        let rhs = f.lambda_op().combine(a, &g.lambda_op(), b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lambda_matches_point_links(seed in any::<u64>()) {
        // Λφ(x) is the weighted Euler characteristic of φ over the link of x.
        let (mut rng, x) = complex_from(seed, 50);
        let f = random_function(&mut rng, &x);
        let lf = f.lambda_op();
        for alpha in x.iter() {
            // The link of a point of α is S^(dim α - 1) joined with lk(α): it meets α in
            // that sphere and each ρ > α in an open cell of dimension dim ρ - 1.
            let sphere = if alpha.dim() % 2 == 0 { 0 } else { 2 };
            let mut expected = sphere * f.value(alpha);
            for (rho, w) in f.weights() {
                if alpha.is_face_of(rho) && alpha != rho {
                    expected += w * if rho.dim() % 2 == 1 { 1 } else { -1 };
                }
            }
            let closure_link = point_link_chi(alpha, &x).unwrap();
            let whole = ConstructibleFunction::indicator(&ConstructibleSet::whole(x.clone()));
            prop_assert_eq!(whole.lambda_op().value(alpha), closure_link);
            prop_assert_eq!(lf.value(alpha), expected, "cell {:?}", alpha);
        }
    }

    #[test]
    fn lambda_is_independent_of_representation(seed in any::<u64>()) {
        // The same function written as a sum of closed indicators or by cell weights.
        let (mut rng, x) = complex_from(seed, 40);
        let terms: Vec<(i64, ConstructibleSet)> = (0..3)
            .map(|_| (rng.gen_range(-2..=2), random_closed(&mut rng, &x)))
            .collect();
        let f = ConstructibleFunction::from_indicators(x.clone(), &terms).unwrap();
        let mut g = ConstructibleFunction::zero(x.clone());
        for (c, y) in &terms {
            g = g.add(&ConstructibleFunction::indicator(y).scale(*c));
        }
        prop_assert_eq!(f.lambda_op(), g.lambda_op());
        let sd = barycentric_subdivision(&x);
        prop_assert_eq!(f.lambda_op().transport(&sd), f.transport(&sd).lambda_op());
        prop_assert_eq!(f.duality_op(), f.sub(&f.lambda_op()));
    }

    #[test]
    fn duality_is_an_involution(seed in any::<u64>()) {
        let (mut rng, x) = complex_from(seed, 60);
        let f = random_function(&mut rng, &x);
        prop_assert_eq!(f.duality_op().duality_op(), f.clone());
        let lf = f.lambda_op();
        prop_assert_eq!(lf.lambda_op(), lf.scale(2));
    }

    #[test]
    fn euler_integral_is_additive(seed in any::<u64>()) {
        let (mut rng, x) = complex_from(seed, 60);
        let u = random_set(&mut rng, &x);
        let f = ConstructibleFunction::indicator(&u);
        prop_assert_eq!(f.euler_integral(), u.chi_c());
        let g = random_function(&mut rng, &x);
        prop_assert_eq!(f.add(&g).euler_integral(), f.euler_integral() + g.euler_integral());
    }
}

/// A random polynomial with the given weights, degree and small coefficients.
fn random_poly(rng: &mut ChaCha8Rng, w: (u32, u32), d: u32) -> Option<WeightedPoly> {
    let terms: Vec<((u32, u32), BigRational)> = (0..=d / w.0)
        .filter_map(|i| {
            let rest = d - i * w.0;
            rest.is_multiple_of(w.1).then_some((i, rest / w.1))
        })
        .map(|e| {
            (
                e,
                BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3))),
            )
        })
        .collect();
    let f = WeightedPoly::new(w, d, terms).ok()?;
    validate(&f).ok().map(|_| f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn random_reduced_polys_satisfy_the_congruences(
        seed in any::<u64>(),
        w1 in 1u32..=3,
        w2 in 1u32..=3,
        d in 2u32..=9,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(f) = random_poly(&mut rng, (w1, w2), d) {
            let mu = milnor_number(&f).unwrap();
            let (w1, w2, d) = (i64::from(w1), i64::from(w2), i64::from(d));
            prop_assert_eq!(mu * w1 * w2, (d - w1) * (d - w2));
            let report = check_fiber_congruences(&f).unwrap();
            prop_assert_eq!((report.difference - 2 * report.monodromy.l_minus_one).rem_euclid(4), 0);
            prop_assert_eq!((report.sum - 2 * report.monodromy.l_one).rem_euclid(4), 0);
            if d % 2 == 1 {
                // f(-x, -y) = -f(x, y) swaps the two fibres.
                prop_assert_eq!(report.real.chi_plus, report.real.chi_minus);
            }
        }
    }
}
