use nearmis_core::bounds::bound_p;
use nearmis_core::generate::{gnp, h_np};
use nearmis_core::oracle::exact_alpha;
use nearmis_core::pipeline::{
    decide, decide_many, decide_with, verify_certificate, Answer, Certificate, DecideOptions, Step,
};

#[test]
fn decisions_match_the_oracle() {
    let skip = DecideOptions {
        skip_bound_steps: true,
        ..Default::default()
    };
    for seed in 0..200u64 {
        let n = 4 + seed as usize % 22;
        let g = gnp(n, 0.1 * (1 + seed % 9) as f64, 500 + seed).unwrap();
        let p = bound_p(&g);
        let alpha = exact_alpha(&g).unwrap().0;
        for k in 0..=(p - 1) / 2 {
            let d = decide(&g, k).unwrap();
            assert_eq!(d.answer == Answer::Yes, alpha <= p - k, "k = {k}, {g:?}");
            assert!(verify_certificate(&g, &d));
            if d.resolved_at == Step::P2Bound {
                assert!(d.bounds.p1 > p - k);
            }
            if let Certificate::IndependentSet(s) = &d.certificate {
                assert_eq!(s.len(), p - k + 1);
            }
            let forced = decide_with(&g, k, &skip).unwrap();
            assert_eq!(forced.answer, d.answer);
            assert!(matches!(forced.resolved_at, Step::KernelTrivial | Step::VcSearch));
            assert!(verify_certificate(&g, &forced));
        }
    }
}

#[test]
fn decide_many_has_a_yes_prefix() {
    for seed in 0..60u64 {
        let g = gnp(5 + seed as usize % 16, 0.1 * (1 + seed % 9) as f64, seed).unwrap();
        let all = decide_many(&g).unwrap();
        assert_eq!(all.len(), (bound_p(&g) - 1) / 2 + 1);
        let yes = all.iter().take_while(|(_, d)| d.answer == Answer::Yes).count();
        assert!(all[yes..].iter().all(|(_, d)| d.answer == Answer::No));
    }
}

#[test]
fn tight_family_is_no_at_every_positive_k() {
    for n in 4..=14 {
        for p in 3..n {
            let g = h_np(n, p).unwrap();
            for (k, d) in decide_many(&g).unwrap() {
                let expect = if k == 0 { Answer::Yes } else { Answer::No };
                assert_eq!(d.answer, expect);
            }
        }
    }
}

#[test]
fn tampered_certificates_are_rejected() {
    let g = h_np(10, 4).unwrap();
    let mut d = decide(&g, 1).unwrap();
    d.certificate = Certificate::IndependentSet(vec![0, 6, 7, 8]);
    assert!(!verify_certificate(&g, &d));
    d.certificate = Certificate::P1 { p1: 4 };
    assert!(!verify_certificate(&g, &d));
}
