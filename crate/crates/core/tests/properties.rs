use chm_core::arith::{format_rational, int, parse_rational, rat, QuadExt};
use chm_core::classify::{classify_params, Branch};
use chm_core::graphs::{paley_graph, triangular_graph, verify_srg};
use chm_core::hadamard::{
    all_ek_vanish, bordered_from_graph, verify_gram, verify_spectral, CoreWeights, GeneralSchemeData,
};
use chm_core::poly::{count_real_roots, Interval, RatPoly, SturmChain};
use chm_core::srg::{enumerate_params, params_from_nklm, SrgParams};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use std::cmp::Ordering;
use std::sync::OnceLock;

const FIELDS: [i64; 6] = [-1, -3, -15, 2, 5, 35];

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn quad_in(d: i64) -> impl Strategy<Value = QuadExt> {
    (small_rat(), small_rat()).prop_map(move |(a, b)| QuadExt::new(a, b, d).unwrap())
}

fn triple() -> impl Strategy<Value = (QuadExt, QuadExt, QuadExt)> {
    proptest::sample::select(FIELDS.to_vec()).prop_flat_map(|d| (quad_in(d), quad_in(d), quad_in(d)))
}

fn int_poly() -> impl Strategy<Value = RatPoly> {
    proptest::collection::vec(-6i64..=6, 2..=6)
        .prop_map(|c| RatPoly::from_i64s(&c))
        .prop_filter("nonconstant", |p| p.degree().unwrap_or(0) >= 1)
}

fn scan_params() -> &'static [SrgParams] {
    static CELL: OnceLock<Vec<SrgParams>> = OnceLock::new();
    CELL.get_or_init(|| enumerate_params(150))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms((x, y, z) in triple()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert!(x.try_mul(&x.inv().unwrap()).unwrap().is_one());
        }
    }

    #[test]
    fn modulus_is_nonnegative_rational(x in proptest::sample::select(vec![-1i64, -3, -15])
        .prop_flat_map(quad_in))
    {
        let m = x.abs_sq();
        let q = m.to_rational().expect("rational");
        prop_assert!(*q >= int(0));
        prop_assert_eq!(q.is_zero(), x.is_zero());
    }

    #[test]
    fn canonical_form_is_idempotent(x in proptest::sample::select(FIELDS.to_vec()).prop_flat_map(quad_in)) {
        let again = QuadExt::new(x.a().clone(), x.b().clone(), x.d()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(x.b().is_zero(), x.d() == 0);
    }

    #[test]
    fn rational_text_round_trip(q in small_rat()) {
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn sturm_counts_are_additive(p in int_poly(), a in small_rat(), gap1 in 1i64..=40, gap2 in 1i64..=40) {
        let b = &a + rat(gap1, 4);
        let c = &b + rat(gap2, 4);
        for e in [&a, &b, &c] {
            prop_assume!(!p.eval(e).is_zero());
        }
        let q = |x: &BigRational| QuadExt::from_rational(x.clone());
        let count = |lo: &BigRational, hi: &BigRational| {
            count_real_roots(&p, &Interval::between(&q(lo), &q(hi)).unwrap()).unwrap()
        };
        prop_assert_eq!(count(&a, &b) + count(&b, &c), count(&a, &c));
        let whole = count_real_roots(&p, &Interval::whole_line()).unwrap();
        prop_assert!(whole <= p.degree().unwrap());
        prop_assert!(count(&a, &c) <= whole);
    }

    #[test]
    fn normalized_chain_counts_agree(p in int_poly(), a in small_rat(), gap in 1i64..=40) {
        let b = &a + rat(gap, 3);
        prop_assume!(!p.eval(&a).is_zero() && !p.eval(&b).is_zero());
        let iv = Interval::between(&QuadExt::from_rational(a), &QuadExt::from_rational(b)).unwrap();
        let plain = SturmChain::new(&p).unwrap().count(&iv).unwrap();
        let normalized = SturmChain::new_normalized(&p).unwrap().count(&iv).unwrap();
        prop_assert_eq!(plain, normalized);
    }

    #[test]
    fn quadratic_root_count_follows_discriminant(a in 1i64..=6, b in -12i64..=12, c in -12i64..=12) {
        let p = RatPoly::from_i64s(&[c, b, a]);
        let disc = b * b - 4 * a * c;
        let expect = match disc.cmp(&0) {
            Ordering::Greater => 2,
            Ordering::Equal => 1,
            Ordering::Less => 0,
        };
        prop_assert_eq!(count_real_roots(&p, &Interval::whole_line()).unwrap(), expect);
    }

    #[test]
    fn last_chain_member_detects_repeated_roots(p in int_poly()) {
        let chain = SturmChain::new(&p).unwrap();
        let last = chain.sequence().last().unwrap();
        let repeated = p.gcd(&p.derivative()).degree().unwrap_or(0) > 0;
        prop_assert_eq!(last.degree().unwrap_or(0) > 0, repeated);
        for member in chain.sequence() {
            prop_assert!(member.rem(last).unwrap().is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn srg_invariants_and_normalization(i in any::<proptest::sample::Index>()) {
        let all = scan_params();
        let p = &all[i.index(all.len())];
        let (n, k1, lambda, mu) = p.tuple();
        let again = params_from_nklm(n, k1, lambda, mu).unwrap();
        prop_assert_eq!(&again.tuple(), &p.tuple());
        prop_assert!(!again.complemented);
        prop_assert_eq!(&p.m1 + &p.m2, int(n - 1));
        let trace = (&p.r.scale(&p.m1) + &p.s.scale(&p.m2)).to_rational().cloned();
        prop_assert_eq!(trace, Some(int(-k1)));
        prop_assert!(p.r_plus_s() >= -1);
        prop_assert_eq!(p.is_conference(), p.m1 == p.m2);
        // The complement tuple normalizes back to this one, unless it is
        // itself normalized (r + s = −1 is fixed by complementation).
        let complement = params_from_nklm(n, p.k2, n - 2 - 2 * k1 + mu, n - 2 * k1 + lambda).unwrap();
        if p.r_plus_s() == -1 {
            prop_assert_eq!(complement.r_plus_s(), -1);
        } else {
            prop_assert!(complement.complemented);
            prop_assert_eq!(complement.tuple(), p.tuple());
        }
    }

    #[test]
    fn classifier_output_survives_resubstitution(i in any::<proptest::sample::Index>()) {
        let all = scan_params();
        let p = &all[i.index(all.len())];
        let report = classify_params(p).unwrap();
        if p.r_plus_s() > 0 {
            prop_assert!(report.solutions.is_empty());
        }
        for sol in &report.solutions {
            let scheme = GeneralSchemeData::from_srg(p);
            prop_assert!(verify_spectral(&scheme, sol.weights.w()).unwrap().passes());
            prop_assert!(all_ek_vanish(&scheme, sol.weights.w()).unwrap());
        }
        for c in &report.candidates {
            prop_assert!(Branch::BOTH.contains(&c.branch));
        }
    }
}

fn menu() -> Vec<CoreWeights> {
    let i = QuadExt::i();
    let minus_i = -&i;
    let w = |d: i64, a: (i64, i64), b: (i64, i64)| QuadExt::new(rat(a.0, a.1), rat(b.0, b.1), d).unwrap();
    let omega = w(-3, (-1, 2), (1, 2));
    let one = QuadExt::one();
    let minus_one = -&one;
    let mk = |a: &QuadExt, b: &QuadExt, c: &QuadExt| CoreWeights::new(a.clone(), b.clone(), c.clone()).unwrap();
    vec![
        mk(&minus_one, &i, &minus_i),
        mk(&minus_one, &minus_i, &i),
        mk(&one, &minus_one, &one),
        mk(&one, &i, &minus_i),
        mk(&minus_one, &minus_one, &one),
        mk(&one, &omega, &omega.conj()),
        mk(&omega, &one, &minus_one),
        mk(&one, &w(-15, (-1, 4), (1, 4)), &w(-15, (-1, 4), (-1, 4))),
        mk(&one, &w(-35, (-1, 6), (1, 6)), &w(-35, (-1, 6), (-1, 6))),
        mk(&one, &w(-35, (-1, 6), (-1, 6)), &w(-35, (-1, 6), (1, 6))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn verification_routes_agree(g in proptest::sample::select(vec![5u64, 9, 13, 17, 25, 29, 101, 106]),
                                 w in proptest::sample::select(menu())) {
        let graph = match g {
            101 => triangular_graph(5).unwrap(),
            106 => triangular_graph(6).unwrap(),
            q => paley_graph(q).unwrap(),
        };
        let p = verify_srg(&graph).unwrap();
        let scheme = GeneralSchemeData::from_srg(&p);
        let gram = verify_gram(&bordered_from_graph(&graph, &w, "g")).unwrap().is_hadamard();
        let spectral = verify_spectral(&scheme, w.w()).unwrap().passes();
        let ek = all_ek_vanish(&scheme, w.w()).unwrap();
        prop_assert_eq!(gram, spectral);
        prop_assert_eq!(spectral, ek);
    }
}
