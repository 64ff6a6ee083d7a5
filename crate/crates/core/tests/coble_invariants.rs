mod common;

use common::int;
use sextic_core::coble::*;
use sextic_core::double_six::{projective_equivalence, second_model};
use sextic_core::plane::ref6;
use sextic_core::random::{random_config, random_perm, rng_for};
use sextic_core::{Perm, Rational};

#[test]
fn ref6_coble_vector_is_frozen() {
    let v = coble_vector(&ref6());
    let expected = [-7, 1, 9, -5, -2, -27].map(int);
    assert_eq!(v.x, expected);
    assert!(relation_residual(&v, RelationVariant::Plus).is_zero());
    assert_eq!(relation_residual(&v, RelationVariant::Minus), int(784));
}

#[test]
fn plus_variant_holds_on_random_configurations() {
    let mut minus_failures = 0;
    for k in 0..25 {
        let v = coble_vector(&random_config(&mut rng_for(41, k)));
        assert!(relation_residual(&v, RelationVariant::Plus).is_zero());
        if !relation_residual(&v, RelationVariant::Minus).is_zero() {
            minus_failures += 1;
        }
    }
    assert!(minus_failures > 0);
}

#[test]
fn arbitrary_vector_misses_the_hypersurface() {
    let v = CobleVector {
        x: [1, 2, 3, 4, 5, 6].map(int),
        representatives: ref6().representatives().clone(),
    };
    for variant in RelationVariant::BOTH {
        assert!(!relation_residual(&v, variant).is_zero());
    }
}

#[test]
fn reference_rows_reproduced() {
    let sampler = ActionSampler::new().unwrap();
    for (name, rows) in REFERENCE_ACTION_ROWS {
        let perm: Perm = name.parse().unwrap();
        let r = sampler.record(&perm).unwrap();
        assert_eq!(r.matrix, reference_matrix(&rows), "{name}");
        assert_eq!(r.sign, perm.sign(), "{name}");
    }
}

#[test]
fn action_is_a_homomorphism() {
    let sampler = ActionSampler::new().unwrap();
    let mut rng = rng_for(42, 0);
    for _ in 0..10 {
        let (s, t) = (random_perm(&mut rng), random_perm(&mut rng));
        let ms = sampler.record(&s).unwrap();
        let mt = sampler.record(&t).unwrap();
        let mst = sampler.record(&s.then(&t)).unwrap();
        assert_eq!(mst.matrix, &ms.matrix * &mt.matrix);
        assert_eq!(mst.sign, ms.sign * mt.sign);
    }
}

#[test]
fn action_predicts_relabelled_vectors() {
    let sampler = ActionSampler::new().unwrap();
    let mut rng = rng_for(43, 0);
    let c = random_config(&mut rng);
    let s = random_perm(&mut rng);
    let r = sampler.record(&s).unwrap();
    let before = coble_vector(&c);
    let after = coble_vector(&c.relabel(&s));
    assert_eq!(r.matrix.mul_vec(&before.linear_part()), after.linear_part().to_vec());
    assert_eq!(after.x[5], Rational::from(r.sign as i64) * &before.x[5]);
}

#[test]
fn character_is_the_outer_twist() {
    let report = character_report().unwrap();
    assert_eq!(report.classes.len(), 11);
    assert_eq!(report.classes.iter().map(|c| c.size).sum::<usize>(), 720);
    assert_eq!(report.classes[0].trace, int(5));
    assert_eq!(report.inner_product, Rational::one());
    assert!(report.differs_from_standard);
}

#[test]
fn quartic_is_invariant_only_for_plus() {
    let sampler = ActionSampler::new().unwrap();
    let plus = relation_quartic(RelationVariant::Plus);
    let minus = relation_quartic(RelationVariant::Minus);
    let mut minus_broken = false;
    for (name, _) in REFERENCE_ACTION_ROWS {
        let r = sampler.record(&name.parse().unwrap()).unwrap();
        assert!(quartic_invariant_under(&plus, &r).unwrap(), "{name}");
        minus_broken |= !quartic_invariant_under(&minus, &r).unwrap();
    }
    assert!(minus_broken);
}

#[test]
fn association_negates_x5() {
    assert!(schlaefli_sign_check(&ref6()).unwrap().accepted);
    for k in 0..5 {
        let c = random_config(&mut rng_for(44, k));
        let check = schlaefli_sign_check(&c).unwrap();
        assert!(check.accepted, "config {k}");
    }
}

#[test]
fn double_association_restores_the_weighted_vector() {
    let c = random_config(&mut rng_for(45, 0));
    let once = second_model(&c).unwrap().associated;
    let twice = second_model(&once).unwrap().associated;
    assert!(projective_equivalence(&c, &twice, true).is_some());
    let a = coble_vector(&c);
    let b = coble_vector(&twice);
    let lambda = a.weighted_scale_to(&b).expect("same weighted class");
    assert!(!lambda.is_zero());
    // one association alone flips x5 relative to the linear part
    let mid = coble_vector(&once);
    assert!(a.weighted_scale_to(&mid).is_none() || a.x[5].is_zero());
}
