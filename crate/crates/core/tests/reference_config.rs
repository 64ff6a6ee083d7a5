//! The frozen reference configuration and the double six built on it.

mod common;

use common::*;
use sextic_core::double_six::{exceptional_conics, parametrize_exceptional, projective_equivalence, quintic_image, second_model};
use sextic_core::plane::{
    det3, is_general_position, projective_stabilizer, quintic_system, ref6, same_point, veronese_row, Config6,
    Position,
};
use sextic_core::random::{random_config, random_perm, random_projectivity, rng_for};
use sextic_core::{Matrix, Perm, Rational};

#[test]
fn ref6_coordinates_are_frozen() {
    let expected = Config6::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3], [2, 5, 1]]).unwrap();
    assert_eq!(ref6(), expected);
}

#[test]
fn ref6_is_general_by_direct_checks() {
    let c = ref6();
    let mut triples = 0;
    for i in 1..=6 {
        for j in i + 1..=6 {
            for k in j + 1..=6 {
                let rows: Vec<Vec<Rational>> = [i, j, k].iter().map(|&l| c.rep(l).to_vec()).collect();
                assert!(!cofactor_det(&rows).is_zero(), "triple {i}{j}{k}");
                triples += 1;
            }
        }
    }
    assert_eq!(triples, 20);
    let veronese: Vec<Vec<Rational>> = (1..=6).map(|i| veronese_row(2, c.rep(i))).collect();
    assert!(!cofactor_det(&veronese).is_zero());
    assert_eq!(is_general_position(&c), Position::General);
}

#[test]
fn ref6_has_trivial_stabilizer() {
    let stab = projective_stabilizer(&ref6()).unwrap();
    assert_eq!(stab.len(), 1);
    assert!(stab[0].perm.is_identity());
}

#[test]
fn involution_symmetric_configuration() {
    // g swaps x and y
    let g = Matrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let base = [[1, 3, 2], [2, -1, 5], [4, 1, -3]];
    let moved = base.map(|p| [p[1], p[0], p[2]]);
    let c = Config6::from_i64([base[0], base[1], base[2], moved[0], moved[1], moved[2]]).unwrap();
    // a configuration with an involution always lies on an invariant conic
    assert!(matches!(is_general_position(&c), Position::OnConic { .. }));
    let stab = projective_stabilizer(&c).unwrap();
    let swap: Perm = "(14)(25)(36)".parse().unwrap();
    let sym = stab.iter().find(|s| s.perm == swap).expect("swap symmetry");
    let scale = &g[(0, 1)] / &sym.matrix[(0, 1)];
    assert_eq!(sym.matrix.scale(&scale), g);
}

#[test]
fn stabilizer_size_is_equivariant() {
    let c = ref6();
    let mut rng = rng_for(21, 0);
    let moved = c.relabel(&random_perm(&mut rng)).transform(&random_projectivity(&mut rng, 3));
    assert_eq!(projective_stabilizer(&moved).unwrap().len(), 1);
}

#[test]
fn conic_incidence_is_off_diagonal() {
    let c = ref6();
    let conics = exceptional_conics(&c).unwrap();
    for i in 1..=6 {
        for j in 1..=6 {
            assert_eq!(conics[i - 1].eval(c.rep(j)).is_zero(), i != j, "f{i}(x{j})");
        }
    }
}

#[test]
fn two_conics_meet_only_in_shared_points() {
    use sextic_core::form::Var;
    use sextic_core::resultant::resultant_eliminate;
    use sextic_core::BinaryForm;
    let c = ref6();
    // coordinates where no two configuration points share a projection from (1:0:0)
    let a = Matrix::from_i64_rows(&[&[1, 2, 3], &[-1, 1, 4], &[2, -3, 1]]);
    let a_inv = a.inverse().unwrap();
    let moved = c.transform(&a_inv);
    let conics = exceptional_conics(&moved).unwrap();
    for i in 0..6 {
        for j in i + 1..6 {
            assert!(!conics[i].coeff((2, 0, 0)).is_zero());
            let r = resultant_eliminate(&conics[i], &conics[j], Var::X).unwrap();
            let coeffs: Vec<Rational> = (0..=4).map(|k| r.coeff((0, 4 - k, k))).collect();
            let r = BinaryForm::new(4, coeffs).unwrap();
            let shared = (1..=6)
                .filter(|&k| k != i + 1 && k != j + 1)
                .fold(BinaryForm::new(0, vec![Rational::one()]).unwrap(), |acc, k| {
                    let p = moved.rep(k);
                    acc.mul(&BinaryForm::vanishing_at(&p[1], &p[2]))
                });
            assert!(r.proportional(&shared), "f{} and f{}", i + 1, j + 1);
        }
    }
}

#[test]
fn quintic_map_contracts_each_conic() {
    let c = ref6();
    let conics = exceptional_conics(&c).unwrap();
    let basis = quintic_system(&c).basis;
    for i in 1..=6 {
        let param = parametrize_exceptional(&c, &conics, i).unwrap();
        let a = quintic_image(&basis, &param.point(&int(1), &int(3)));
        let b = quintic_image(&basis, &param.point(&int(2), &int(-7)));
        assert!(same_point(&a, &b), "conic {i}");
    }
}

#[test]
fn association_on_ref6() {
    let c = ref6();
    let assoc = second_model(&c).unwrap().associated;
    assert!(is_general_position(&assoc).is_general());
    assert!(projective_equivalence(&c, &assoc, false).is_none());
    let back = second_model(&assoc).unwrap().associated;
    let (_, perm) = projective_equivalence(&c, &back, true).unwrap();
    assert!(perm.is_identity());
}

#[test]
fn association_is_equivariant() {
    let mut rng = rng_for(22, 0);
    let c = random_config(&mut rng);
    let g = random_projectivity(&mut rng, 3);
    let a = second_model(&c).unwrap().associated;
    let b = second_model(&c.transform(&g)).unwrap().associated;
    assert!(projective_equivalence(&a, &b, true).is_some());
}

#[test]
fn equivalence_recovers_transport_and_relabelling() {
    let c = ref6();
    let g = random_projectivity(&mut rng_for(23, 0), 3);
    let (h, perm) = projective_equivalence(&c, &c.transform(&g), true).unwrap();
    assert!(perm.is_identity());
    let scale = (0..9)
        .map(|k| (k / 3, k % 3))
        .find(|&rc| !h[rc].is_zero())
        .map(|rc| &g[rc] / &h[rc])
        .unwrap();
    assert_eq!(h.scale(&scale), g);

    let s: Perm = "(153)(26)".parse().unwrap();
    let (h, perm) = projective_equivalence(&c, &c.relabel(&s), false).unwrap();
    assert_eq!(perm, s.inverse());
    assert!(!h.is_zero() && (0..3).all(|i| (0..3).all(|j| i == j || h[(i, j)].is_zero())));
    assert_eq!(h[(0, 0)], h[(1, 1)]);
}

#[test]
fn brackets_of_ref6() {
    let c = ref6();
    assert_eq!(det3(c.rep(1), c.rep(2), c.rep(3)), Rational::one());
}
