use frobenius::arith::{frobenius_two, gcd, gcd_ext, mod_inverse, solve_congruence, CoprimePair};
use frobenius::engine::{
    candidate_points, closed_form_g3, decompose, decompose_via_lattice, dispatch, explain_candidate,
    johnson_reduce_with, CandidateClass, CaseLabel,
};
use frobenius::oracle::{
    frobenius_oracle, is_representable, representable_sieve, sieve_frobenius, GeneratorSet, Semigroup,
};
use frobenius::region::{
    brauer_form, classify_point, count_exceptional, enumerate_exceptional, enumerate_region, linear_form,
    mirror_point, BrauerForm, PointColor,
};
use proptest::prelude::*;

fn coprime_pair(max: i64) -> impl Strategy<Value = CoprimePair> {
    (2..max, 3..=max)
        .prop_filter("a < b, coprime", |&(a, b)| a < b && gcd(a, b) == 1)
        .prop_map(|(a, b)| CoprimePair::new(a, b).unwrap())
}

fn generator_set(max_len: usize) -> impl Strategy<Value = GeneratorSet> {
    prop::collection::vec(2i64..60, 1..=max_len)
        .prop_filter("coprime", |g| g.iter().fold(0, |d, &x| gcd(d, x)) == 1)
        .prop_map(|g| GeneratorSet::new(g).unwrap())
}

/// Pair plus one of its exceptional third generators.
fn exceptional_triple() -> impl Strategy<Value = (CoprimePair, i64)> {
    coprime_pair(40)
        .prop_filter("has exceptional values", |&p| count_exceptional(p) > 0)
        .prop_flat_map(|p| {
            let values = enumerate_exceptional(p).unwrap();
            (
                Just(p),
                prop::sample::select(values.into_iter().map(|v| v.c).collect::<Vec<_>>()),
            )
        })
}

proptest! {
    #[test]
    fn bezout_holds(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        let (g, x, y) = gcd_ext(a, b).unwrap();
        prop_assert_eq!(g, gcd(a, b));
        prop_assert_eq!(a as i128 * x as i128 + b as i128 * y as i128, g as i128);
    }

    #[test]
    fn inverse_is_inverse(x in 1i64..5000, m in 2i64..5000) {
        match mod_inverse(x, m) {
            Ok(inv) => {
                prop_assert!((0..m).contains(&inv));
                prop_assert_eq!(x * inv % m, 1 % m);
            }
            Err(_) => prop_assert!(gcd(x, m) > 1),
        }
    }

    #[test]
    fn congruence_solution_is_canonical(p in coprime_pair(200), c in 1i64..5000) {
        let s = solve_congruence(p, c).unwrap();
        prop_assert!((0..p.b()).contains(&s.x1));
        prop_assert_eq!(p.a() * s.x1 + p.b() * s.y1, c);
    }

    #[test]
    fn mirror_is_an_involution(p in coprime_pair(40)) {
        let region = enumerate_region(p).unwrap();
        for &pt in region.blue.iter().chain(&region.red) {
            let m = mirror_point(p, pt).unwrap();
            prop_assert_eq!(mirror_point(p, m).unwrap(), pt);
            prop_assert_eq!(linear_form(p, pt) + linear_form(p, m), p.product() as i128);
            prop_assert_ne!(classify_point(p, pt), classify_point(p, m));
        }
        for &pt in &region.green {
            prop_assert!(mirror_point(p, pt).is_err());
        }
    }

    #[test]
    fn brauer_forms_reconstruct(p in coprime_pair(40), frac in 0.0f64..1.0) {
        let (a, b) = (p.a(), p.b());
        let c = 1 + ((a * b - 2) as f64 * frac) as i64;
        match brauer_form(p, c).unwrap() {
            BrauerForm::PositiveForm { x, y } => {
                prop_assert!(x > 0 && y > 0);
                prop_assert_eq!(a * x + b * y, c);
                prop_assert!(is_representable(c, &GeneratorSet::new([a, b]).unwrap()).unwrap().0);
            }
            BrauerForm::NegativeForm { x, y } => {
                prop_assert!(x > 0 && y > 0);
                prop_assert_eq!(a * b - a * x - b * y, c);
                prop_assert!(!is_representable(c, &GeneratorSet::new([a, b]).unwrap()).unwrap().0);
            }
            BrauerForm::GreenMultiple => prop_assert!(c % a == 0 || c % b == 0),
        }
    }

    #[test]
    fn census_matches_counts(p in coprime_pair(60)) {
        let (a, b) = (p.a(), p.b());
        let c = enumerate_region(p).unwrap().census;
        prop_assert_eq!(c.blue_count as i64, (a - 1) * (b - 1) / 2);
        prop_assert_eq!(c.red_count, c.blue_count);
        prop_assert_eq!(c.green_count as i64, a + b + 1);
        prop_assert_eq!(count_exceptional(p) as i64, (a - 3) * (b - 1) / 2 + b / a);
    }

    #[test]
    fn decomposition_is_sound((p, c) in exceptional_triple()) {
        let (a, b) = (p.a(), p.b());
        let dec = decompose(p, c).unwrap().unwrap();
        prop_assert_eq!(dec.c(p), c as i128);
        prop_assert!(1 < dec.l && dec.l < a && 0 < dec.h && dec.h < b);
        prop_assert_eq!(dec.q * dec.l + dec.r, a);
        prop_assert_eq!(decompose_via_lattice(p, c).unwrap(), Some(dec));
        let case = dispatch(p, &dec).unwrap();
        prop_assert_ne!(case, CaseLabel::NonExceptional);
        let kinds: Vec<_> = candidate_points(p, &dec).iter().map(|c| c.kind).collect();
        prop_assert!(kinds.contains(&case.winner().unwrap()));
    }

    #[test]
    fn agreeing_closed_form_is_a_gap((p, c) in exceptional_triple()) {
        let gs = GeneratorSet::new([p.a(), p.b(), c]).unwrap();
        let sg = Semigroup::new(gs).unwrap();
        let formula = closed_form_g3(p.a(), p.b(), c).unwrap();
        // the oracle's g is never above the two-generator value
        prop_assert!(sg.frobenius() < frobenius_two(p));
        if formula == sg.frobenius() {
            prop_assert!(!sg.contains(formula));
        }
    }

    #[test]
    fn explain_matches_representability((p, c) in exceptional_triple()) {
        let dec = decompose(p, c).unwrap().unwrap();
        let sg = Semigroup::new(GeneratorSet::new([p.a(), p.b(), c]).unwrap()).unwrap();
        for cand in candidate_points(p, &dec) {
            if let CandidateClass::Expressible(w) = explain_candidate(p, &dec, cand.u, cand.v).unwrap() {
                prop_assert_eq!(w.evaluate(&[p.a(), p.b(), c]), cand.value_xy as i128);
                prop_assert!(sg.contains(cand.value_xy));
            }
        }
    }

    #[test]
    fn oracle_matches_sieve(gs in generator_set(4)) {
        prop_assert_eq!(frobenius_oracle(&gs).unwrap(), sieve_frobenius(&gs).unwrap());
    }

    #[test]
    fn witnesses_are_valid(gs in generator_set(3), n in 0i64..400) {
        let (ok, witness) = is_representable(n, &gs).unwrap();
        let sieve = representable_sieve(gs.gens(), 401);
        prop_assert_eq!(ok, sieve[n as usize]);
        prop_assert_eq!(ok, witness.is_some());
        if let Some(w) = witness {
            prop_assert_eq!(w.evaluate(gs.gens()), n as i128);
        }
    }

    #[test]
    fn johnson_identity_with_oracle_inner(a in 2i64..20, b in 3i64..40, c in 3i64..80, d in 2i64..4) {
        let (a, b) = (a * d, b * d);
        prop_assume!(a != b && gcd(gcd(a, b), c) == 1);
        let via = johnson_reduce_with(a, b, c, |t| frobenius_oracle(&GeneratorSet::new(t).unwrap())).unwrap();
        prop_assert_eq!(via, frobenius_oracle(&GeneratorSet::new([a, b, c]).unwrap()).unwrap());
    }
}

#[test]
fn red_values_are_two_generator_gaps() {
    for (a, b) in [(3, 5), (7, 9), (8, 13), (11, 12)] {
        let p = CoprimePair::new(a, b).unwrap();
        let gs = GeneratorSet::new([a, b]).unwrap();
        let region = enumerate_region(p).unwrap();
        let mut red: Vec<i64> = region.red.iter().map(|&pt| linear_form(p, pt) as i64).collect();
        red.sort_unstable();
        assert_eq!(red, frobenius::oracle::gaps(&gs).unwrap(), "({a}, {b})");
        assert!(region
            .red
            .iter()
            .all(|&pt| classify_point(p, pt) == PointColor::Red));
    }
}
