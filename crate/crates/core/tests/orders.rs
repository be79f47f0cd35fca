use zappatic_core::certify::{verify, Method, Outcome};
use zappatic_core::enumeration::{order, parabolic_index, CosetTable, EnumerationOptions, Status, Strategy};
use zappatic_core::presentation::{
    coxeter_presentation, coxeter_translate, e10_appendix_presentation, quotient_star, star_presentation,
};
use zappatic_core::symverify::{check_homomorphism, GeneratorAssignment};

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

fn opts(s: Strategy) -> EnumerationOptions {
    EnumerationOptions::new(4_000_000, s)
}

#[test]
fn coxeter_orders_six_to_nine() {
    for n in 6..=9 {
        let r = order(&coxeter_presentation(n).unwrap(), opts(Strategy::Mixed)).unwrap();
        assert_eq!(r.index, Some(factorial(n)), "n={n}");
    }
}

#[test]
fn staged_orders_eight_and_nine() {
    for n in [8, 9] {
        let p = star_presentation(n).unwrap();
        let mut t = CosetTable::new(&p, &[], opts(Strategy::Mixed)).unwrap();
        let r = t.run();
        assert_eq!(r.index, Some(factorial(n)), "n={n}");
        assert!(t.verify_closed());
    }
}

#[test]
fn certificates_six_to_nine() {
    for n in 6..=9 {
        let c = verify(n, Method::Full, opts(Strategy::Mixed)).unwrap();
        assert!(c.certified, "n={n}");
        assert_eq!(c.outcome, Outcome::Passed);
        assert_eq!(c.order, Some(factorial(n)));
    }
}

#[test]
fn strategies_agree_on_staged_eight() {
    for s in Strategy::ALL {
        let r = order(&star_presentation(8).unwrap(), opts(s)).unwrap();
        assert_eq!(r.index, Some(40320), "{s}");
    }
}

#[test]
fn translation_keeps_the_order() {
    let p = star_presentation(8).unwrap();
    let t = coxeter_translate(&p).unwrap();
    assert_ne!(p.relators, t.relators);
    let a = order(&p, opts(Strategy::Mixed)).unwrap().index;
    let b = order(&t, opts(Strategy::Mixed)).unwrap().index;
    assert_eq!(a, Some(40320));
    assert_eq!(a, b);
}

#[test]
fn tight_limits_never_give_a_wrong_order() {
    let p = star_presentation(8).unwrap();
    for cap in [1_000, 20_000, 41_000, 50_000, 120_000] {
        for s in Strategy::ALL {
            let r = order(&p, EnumerationOptions::new(cap, s)).unwrap();
            match r.status {
                Status::Completed => assert_eq!(r.index, Some(40320), "{s} cap={cap}"),
                Status::LimitExceeded => assert_eq!(r.index, None),
            }
            assert!(r.max_live as usize <= cap);
        }
    }
}

#[test]
fn appendix_and_staged_parabolic_indices() {
    let appendix = quotient_star(&e10_appendix_presentation().unwrap()).unwrap();
    let staged = star_presentation(10).unwrap();
    for p in [&appendix, &staged] {
        for s in Strategy::ALL {
            let r = parabolic_index(p, 10, opts(s)).unwrap();
            assert_eq!(r.index, Some(10), "{s}");
        }
    }
    let a = GeneratorAssignment::star(10).unwrap();
    assert!(check_homomorphism(&appendix, &a).unwrap().surjective_homomorphism());
}

#[test]
fn parabolic_scales() {
    let start = std::time::Instant::now();
    let r = parabolic_index(&coxeter_presentation(40).unwrap(), 40, opts(Strategy::Mixed)).unwrap();
    assert_eq!(r.index, Some(40));
    assert!(start.elapsed().as_secs_f64() < 5.0);
    let r = parabolic_index(&coxeter_presentation(6).unwrap(), 3, opts(Strategy::Hlt)).unwrap();
    assert_eq!(r.index, Some(6));
}
