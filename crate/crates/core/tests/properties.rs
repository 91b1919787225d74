//! Property tests over randomly chosen parameters and perturbations.

use proptest::prelude::*;

use hopfext::braided_ext::{
    build_braid_data, check_hexagons_reduced, generator_objects, hexagons_on_modules_report,
};
use hopfext::cli::{specfile, ty_select_braiding, Options};
use hopfext::examples::{
    build_sf, build_sweedler, build_ty, sweedler, sweedler_gamma, sweedler_lambda, sweedler_rescaling, ExampleData,
    SfParams, TyParams,
};
use hopfext::gvect::Mor;
use hopfext::hopfcore::{verify_hopf, HopfAlgebra};
use hopfext::monoidal_ext::{
    build_ext_data, check_pentagon_reduced, normalisation_scalar, pentagon_on_modules_report, transport, ExtData, Obj,
};
use hopfext::CycNum;

fn nonzero_rat() -> impl Strategy<Value = CycNum> {
    (-9i64..=9, 1i64..=7).prop_filter("nonzero", |(p, _)| *p != 0).prop_map(|(p, q)| CycNum::frac(p, q))
}

/// Small Gaussian rationals `(a + b i)/q`, nonzero.
fn gaussian() -> impl Strategy<Value = CycNum> {
    (-5i64..=5, -5i64..=5, 1i64..=4)
        .prop_filter("nonzero", |(a, b, _)| *a != 0 || *b != 0)
        .prop_map(|(a, b, q)| CycNum::frac(a, q).add(&CycNum::i().mul(&CycNum::frac(b, q))))
}

fn split(h: &HopfAlgebra) -> (Vec<Obj>, Vec<Obj>) {
    generator_objects(h).into_iter().partition(|o| o.sector() == 0)
}

fn small_example(k: usize) -> ExampleData {
    match k {
        0 => build_sweedler(&CycNum::int(3)).unwrap(),
        1 => build_ty(&TyParams::standard(vec![2], false).unwrap()).unwrap(),
        2 => build_sf(&SfParams { d: 2, zeta: -1, i_plus: true, beta_principal: true }).unwrap(),
        _ => build_ty(&TyParams::standard(vec![3], true).unwrap()).unwrap(),
    }
}

fn failing(e: &ExtData) -> (Vec<String>, Vec<String>) {
    let own = |r: &hopfext::report::Report| r.failing_ids().iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let (o0, o1) = split(&e.hopf);
    (own(&check_pentagon_reduced(e).unwrap()), own(&pentagon_on_modules_report(e, &o0, &o1).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn normalisation_scalar_is_t2_s_over_2(t in gaussian(), s in gaussian()) {
        let h = sweedler().unwrap();
        let got = normalisation_scalar(&h, &sweedler_gamma(&h, &s).unwrap(), &sweedler_lambda(&h, &t).unwrap()).unwrap();
        prop_assert_eq!(got, t.mul(&t).mul(&s).mul(&CycNum::frac(1, 2)));
    }

    #[test]
    fn sweedler_family_is_monoidal(t in gaussian()) {
        let d = build_sweedler(&t).unwrap();
        let e = build_ext_data(&d.hopf, &d.gamma, &d.lambda).unwrap();
        let (a, b) = failing(&e);
        prop_assert!(a.is_empty() && b.is_empty(), "{:?} {:?}", a, b);
    }

    #[test]
    fn rescaling_relates_the_sweedler_family(t in nonzero_rat(), c in nonzero_rat()) {
        let d = build_sweedler(&t).unwrap();
        let e = build_ext_data(&d.hopf, &d.gamma, &d.lambda).unwrap();
        let moved = transport(&e, &d.hopf, &sweedler_rescaling(&c)).unwrap();
        let target = build_sweedler(&t.mul(&c)).unwrap();
        prop_assert_eq!(&moved.gamma, &target.gamma);
        prop_assert_eq!(&moved.lambda, &target.lambda);
    }

    #[test]
    fn pentagon_routes_agree_on_perturbed_data(
        which in 0usize..4,
        field in 0usize..3,
        idx in any::<prop::sample::Index>(),
        by in nonzero_rat(),
    ) {
        let d = small_example(which);
        let mut e = build_ext_data(&d.hopf, &d.gamma, &d.lambda).unwrap();
        let m: &mut Mor = match field {
            0 => &mut e.delta,
            1 => &mut e.phi,
            _ => &mut e.gamma,
        };
        let k = idx.index(m.entries.len());
        m.entries[k] = m.entries[k].add(&by);
        let (a, b) = failing(&e);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn perturbed_sweedler_is_not_hopf(which in 0usize..5, idx in any::<prop::sample::Index>(), by in gaussian()) {
        let mut h = sweedler().unwrap();
        let m = match which {
            0 => &mut h.mu,
            1 => &mut h.eta,
            2 => &mut h.delta,
            3 => &mut h.eps,
            _ => &mut h.s,
        };
        let k = idx.index(m.entries.len());
        m.entries[k] = m.entries[k].add(&by);
        prop_assert!(!verify_hopf(&h).unwrap().all_pass());
    }

    #[test]
    fn ty_braidings_satisfy_both_hexagon_routes(positive in any::<bool>(), k in 0usize..4) {
        let d = ty_select_braiding(&TyParams::standard(vec![2], positive).unwrap(), k).unwrap();
        let e = build_ext_data(&d.hopf, &d.gamma, &d.lambda).unwrap();
        let b = build_braid_data(&e, d.sigma.as_ref().unwrap(), d.beta.as_ref().unwrap()).unwrap();
        prop_assert!(check_hexagons_reduced(&b).unwrap().all_pass());
        let (o0, o1) = split(&d.hopf);
        prop_assert!(hexagons_on_modules_report(&b, &o0, &o1).unwrap().all_pass());
    }

    #[test]
    fn spec_roundtrip(t in gaussian(), zeta in prop::sample::select(vec![1i8, -1]), i_plus in any::<bool>()) {
        for d in [
            build_sweedler(&t).unwrap(),
            build_sf(&SfParams { d: 2, zeta, i_plus, beta_principal: i_plus }).unwrap(),
        ] {
            let v = specfile::to_value(&d, None).unwrap();
            let back = specfile::from_value(&v, &Options::default()).unwrap();
            prop_assert_eq!(&back.hopf, &d.hopf);
            prop_assert_eq!(&back.gamma, &d.gamma);
            prop_assert_eq!(&back.lambda, &d.lambda);
            prop_assert_eq!(&back.sigma, &d.sigma);
            prop_assert_eq!(&back.beta, &d.beta);
            let text = serde_json::to_string(&v).unwrap();
            prop_assert_eq!(specfile::from_str(&text, &Options::default()).unwrap().gamma, d.gamma.clone());
        }
    }

    #[test]
    fn compact_number_text_roundtrips(
        n in prop::sample::select(vec![1u32, 3, 4, 5, 8, 12, 16]),
        coeffs in prop::collection::vec((-20i64..=20, 1i64..=9), 16),
    ) {
        let x = (0..n as i64).zip(&coeffs).fold(CycNum::zero(), |acc, (k, (p, q))| {
            acc.add(&CycNum::root_of_unity(n, k).mul(&CycNum::frac(*p, *q)))
        });
        let back: CycNum = x.to_compact().parse().unwrap();
        prop_assert_eq!(back, x.clone());
        let m = if n % 2 == 1 { 2 * n } else { n };
        prop_assert!(x.lies_in(m));
    }
}
