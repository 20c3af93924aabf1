mod common;

use groebner_descent::descent::{
    conjugate_poly, descent_check, is_invariant, lemma_check, Verdict,
};
use groebner_descent::groebner::ideal_membership;
use groebner_descent::poly::TermOrder;

#[test]
fn lemma_holds() {
    for (s, setting) in common::settings().iter().enumerate() {
        for kind in common::ORDERS {
            let mut rng = common::rng(100 + 10 * s as u64 + kind as u64);
            for case in 0..30 {
                let n = 1 + case % 3;
                let ring = common::ring(&setting.field, n);
                let o = TermOrder::new(kind, n);
                let ideal = common::ideal(&mut rng, &ring, &o, 3, 3, true);
                assert!(
                    lemma_check(&ideal, &setting.sigma, &o).unwrap(),
                    "{} {kind}: {ideal}",
                    setting.name
                );
            }
        }
    }
}

#[test]
fn symmetrized_ideals_descend() {
    for (s, setting) in common::settings().iter().enumerate() {
        let group = setting.group();
        let mut rng = common::rng(200 + s as u64);
        for case in 0..40 {
            let n = 1 + case % 3;
            let ring = common::ring(&setting.field, n);
            let o = TermOrder::new(common::random_order(&mut rng), n);
            let seeds: Vec<_> = (0..1 + case % 2)
                .map(|_| common::nonzero_poly(&mut rng, &ring, &o, 3, 3, true))
                .collect();
            let ideal = common::symmetrize(&group, &seeds);
            let report = descent_check(&ideal, &group, &o, false).unwrap();
            assert_eq!(
                report.verdict,
                Verdict::DefinedOverFixedField,
                "{}: {ideal}",
                setting.name
            );
            assert!(report
                .invariance
                .iter()
                .all(|i| i.invariant && i.witness.is_none()));
            for g in report.basis.elements() {
                for t in g.terms() {
                    assert!(group.fixes(&t.coeff));
                }
            }
            assert!(report.is_consistent());
        }
    }
}

#[test]
fn non_invariant_ideals_have_witnesses() {
    for (s, setting) in common::settings().iter().enumerate() {
        let group = setting.group();
        let mut rng = common::rng(300 + s as u64);
        let mut seen = 0;
        while seen < 20 {
            let n = 1 + seen % 3;
            let ring = common::ring(&setting.field, n);
            let o = TermOrder::new(common::random_order(&mut rng), n);
            let ideal = common::ideal(&mut rng, &ring, &o, 2, 2, true);
            if !common::has_extension_coefficient(&ideal, &group)
                || is_invariant(&ideal, &group, &o).unwrap().0
            {
                continue;
            }
            seen += 1;
            let report = descent_check(&ideal, &group, &o, false).unwrap();
            assert_eq!(report.verdict, Verdict::NotInvariant);
            let failed: Vec<_> = report.invariance.iter().filter(|i| !i.invariant).collect();
            assert!(!failed.is_empty());
            for inv in failed {
                let w = inv.witness.as_ref().unwrap();
                assert!(ideal.generators().contains(&w.generator));
                assert_eq!(
                    w.image,
                    conjugate_poly(&inv.automorphism, &w.generator).unwrap()
                );
                assert!(!ideal_membership(&w.image, &ideal, &o).unwrap());
            }
        }
    }
}

#[test]
fn conjugation_preserves_leading_monomials() {
    let mut rng = common::rng(400);
    for setting in common::settings() {
        for tau in setting.group().elements() {
            for case in 0..100 {
                let n = 1 + case % 3;
                let ring = common::ring(&setting.field, n);
                let o = TermOrder::new(common::random_order(&mut rng), n);
                let f = common::nonzero_poly(&mut rng, &ring, &o, 5, 4, true);
                let g = conjugate_poly(tau, &f).unwrap();
                assert_eq!(g.leading_monomial(), f.leading_monomial());
                assert_eq!(g.len(), f.len());
            }
        }
    }
}

#[test]
fn trivial_group_always_descends() {
    let mut rng = common::rng(500);
    for setting in common::settings() {
        let group = groebner_descent::arith::AutomorphismGroup::trivial(&setting.field);
        for case in 0..20 {
            let n = 1 + case % 3;
            let ring = common::ring(&setting.field, n);
            let o = TermOrder::new(common::random_order(&mut rng), n);
            let ideal = common::ideal(&mut rng, &ring, &o, 3, 3, true);
            let report = descent_check(&ideal, &group, &o, false).unwrap();
            assert_eq!(report.verdict, Verdict::DefinedOverFixedField);
            assert!(report.all_coefficients_fixed());
        }
    }
}
