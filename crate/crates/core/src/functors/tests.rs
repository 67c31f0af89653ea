use super::*;
use crate::exactlin::ratio;
use crate::groupoid::Groupoid;
use crate::internal::{
    algebra_corpus, dualize_algebra, groupoid_algebra, internal_end, unit_algebra, unit_summand_algebra,
    unit_summand_coalgebra,
};
use crate::sampling::{random_morphism, random_object, rng, SampleRng};
use proptest::prelude::*;

fn cat(g: Groupoid) -> Category {
    Category::new(g)
}

fn z2() -> Category {
    cat(Groupoid::cyclic(2).unwrap())
}

fn pair2() -> Category {
    cat(Groupoid::pair(2).unwrap())
}

fn fixtures() -> Vec<Category> {
    vec![
        cat(Groupoid::trivial()),
        z2(),
        cat(Groupoid::symmetric3()),
        pair2(),
        cat(Groupoid::pair(3).unwrap()),
        cat(Groupoid::disjoint_union(&Groupoid::cyclic(2).unwrap(), &Groupoid::cyclic(2).unwrap())),
    ]
}

fn kz2() -> InternalAlgebra {
    groupoid_algebra(&z2(), &[0]).unwrap()
}

fn pairs(c: &Category, r: &mut SampleRng, count: usize, hi: usize) -> Vec<(GradedObject, GradedObject)> {
    (0..count).map(|_| (random_object(c, r, 0, hi), random_object(c, r, 0, hi))).collect()
}

#[test]
fn free_module_examples() {
    let a = kz2();
    let m = free_module(&z2().unit(), &a).unwrap();
    assert_eq!(m.carrier, a.carrier);
    assert_eq!(m.action, a.mult);
    assert!(m.validate(&a).unwrap());
    let zero = free_module(&z2().zero(), &a).unwrap();
    assert!(zero.carrier.is_zero() && zero.validate(&a).unwrap());

    let c = pair2();
    let a1 = unit_summand_algebra(&c, 1).unwrap();
    let m = free_module(&c.simple(1), &a1).unwrap();
    assert!(m.carrier.same_class(&c.simple(1)));
    assert!(m.validate(&a1).unwrap());
}

#[test]
fn induce_is_functorial() {
    let c = cat(Groupoid::symmetric3());
    let a = groupoid_algebra(&c, &[0]).unwrap();
    let mut r = rng(5);
    let (x, y, z) = (random_object(&c, &mut r, 1, 3), random_object(&c, &mut r, 1, 3), random_object(&c, &mut r, 1, 3));
    let f = random_morphism(&mut r, &x, &y);
    let g = random_morphism(&mut r, &y, &z);
    assert!(induce_mor(&GradedMorphism::identity(&x), &a).unwrap().is_identity());
    assert_eq!(
        induce_mor(&g.compose(&f).unwrap(), &a).unwrap(),
        induce_mor(&g, &a).unwrap().compose(&induce_mor(&f, &a).unwrap()).unwrap()
    );
    let (mx, my) = (free_module(&x, &a).unwrap(), free_module(&y, &a).unwrap());
    assert!(is_module_morphism(&induce_mor(&f, &a).unwrap(), &mx, &my, &a).unwrap());
}

#[test]
fn free_extensions_are_module_maps() {
    let c = pair2();
    let a = groupoid_algebra(&c, &[0, 1]).unwrap();
    let mut r = rng(11);
    for _ in 0..10 {
        let (m, n) = (random_object(&c, &mut r, 0, 3), random_object(&c, &mut r, 0, 3));
        let na = tensor_obj(&n, &a.carrier).unwrap();
        let phi = random_morphism(&mut r, &m, &na);
        let g = free_extension(&phi, &n, &a).unwrap();
        assert!(is_module_morphism(&g, &free_module(&m, &a).unwrap(), &free_module(&n, &a).unwrap(), &a).unwrap());
    }
}

#[test]
fn verdict_examples() {
    let v = separability_verdict(&kz2()).unwrap();
    assert!(v.separable && v.semiseparable && v.idempotent_trivial);
    let c = pair2();
    let v = separability_verdict(&unit_summand_algebra(&c, 0).unwrap()).unwrap();
    assert!(!v.separable && v.semiseparable && v.naturally_full && !v.idempotent_trivial);
    for c in fixtures() {
        let v = separability_verdict(&unit_algebra(&c)).unwrap();
        assert!(v.separable && v.naturally_full);
    }
    let zero = c.zero();
    let za = InternalAlgebra::new(
        zero.clone(),
        GradedMorphism::zero(&zero, &zero).unwrap(),
        GradedMorphism::zero(&c.unit(), &zero).unwrap(),
    );
    assert!(matches!(separability_verdict(&za), Err(Error::ZeroInput(_))));
}

#[test]
fn section_identity_examples() {
    let a = kz2();
    let r = separability_verdict(&a).unwrap().witness.unwrap().witness;
    let one = z2().unit();
    assert!(check_section_identity(&a, &r, &[(one.clone(), one)]).unwrap());
    let mut rg = rng(50);
    assert!(check_section_identity(&a, &r, &pairs(&z2(), &mut rg, 50, 3)).unwrap());

    let c = pair2();
    let a = groupoid_algebra(&c, &[0, 1]).unwrap();
    let r = separability_verdict(&a).unwrap().witness.unwrap().witness;
    assert!(check_section_identity(&a, &r, &pairs(&c, &mut rg, 50, 3)).unwrap());
}

#[test]
fn bad_retraction_is_rejected() {
    let a = kz2();
    let zero = GradedMorphism::zero(&a.carrier, &z2().unit()).unwrap();
    assert!(matches!(check_section_identity(&a, &zero, &[]), Err(Error::InvalidAlgebra(_))));
}

#[test]
fn section_is_natural() {
    let c = cat(Groupoid::symmetric3());
    let a = groupoid_algebra(&c, &[0]).unwrap();
    let r = separability_verdict(&a).unwrap().witness.unwrap().witness;
    let mut rg = rng(3);
    for _ in 0..10 {
        let (m0, m, n, n0) = (
            random_object(&c, &mut rg, 0, 2),
            random_object(&c, &mut rg, 0, 2),
            random_object(&c, &mut rg, 0, 2),
            random_object(&c, &mut rg, 0, 2),
        );
        let phi = random_morphism(&mut rg, &m, &tensor_obj(&n, &a.carrier).unwrap());
        let h = random_morphism(&mut rg, &m0, &m);
        let k = random_morphism(&mut rg, &n, &n0);
        assert!(check_section_naturality(&a, &r, &phi, &h, &k).unwrap());
    }
}

#[test]
fn idempotent_examples() {
    for c in fixtures() {
        let m = c.atomic(&vec![1; c.grades()]).unwrap();
        assert!(idempotent_e(&unit_algebra(&c), &m).unwrap().is_identity());
    }
    let c = pair2();
    let e = idempotent_e(&unit_summand_algebra(&c, 0).unwrap(), &c.unit()).unwrap();
    let ip = unit_inclusion(&c, &[0]).unwrap().compose(&unit_projection(&c, &[0]).unwrap()).unwrap();
    assert_eq!(e, ip);
    assert!(!e.is_identity());
    let m = z2().atomic(&[2, 1]).unwrap();
    assert!(idempotent_e(&kz2(), &m).unwrap().is_identity());
}

#[test]
fn faithfulness_examples() {
    let c = pair2();
    let a = unit_summand_algebra(&c, 0).unwrap();
    let f = is_faithful_tensor(&a).unwrap();
    assert!(!f.faithful);
    let w = f.witness.unwrap();
    assert!(!w.is_zero());
    assert!(induce_mor(&w, &a).unwrap().is_zero());
    assert!(is_faithful_tensor(&kz2()).unwrap().faithful);
    for c in fixtures() {
        assert!(is_faithful_tensor(&unit_algebra(&c)).unwrap().faithful);
    }
}

#[test]
fn reflection_examples() {
    let c = pair2();
    let rep = reflection_checks(&unit_summand_algebra(&c, 0).unwrap(), &[]).unwrap();
    for r in [&rep.maschke, &rep.dual_maschke, &rep.conservative] {
        assert!(!r.holds);
        let w = r.witness.as_ref().unwrap();
        assert_eq!(w.source().total_dim() + w.target().total_dim(), 1);
    }
    let mut rg = rng(9);
    let samples: Vec<_> = (0..40)
        .map(|_| {
            let (x, y) = (random_object(&z2(), &mut rg, 0, 3), random_object(&z2(), &mut rg, 0, 3));
            random_morphism(&mut rg, &x, &y)
        })
        .collect();
    let rep = reflection_checks(&kz2(), &samples).unwrap();
    assert!(rep.maschke.holds && rep.dual_maschke.holds && rep.conservative.holds);
    assert_eq!(rep.maschke.sampled, 40);
}

#[test]
fn coalgebra_examples() {
    let co = dualize_algebra(&kz2()).unwrap();
    let v = coseparability_verdict(&co).unwrap();
    assert!(v.separable);
    let s = v.witness.unwrap().witness;
    let mut rg = rng(4);
    assert!(check_cosection_identity(&co, &s, &pairs(&z2(), &mut rg, 30, 3)).unwrap());

    let c = pair2();
    let co0 = dualize_algebra(&unit_summand_algebra(&c, 0).unwrap()).unwrap();
    assert_eq!(co0, unit_summand_coalgebra(&c, 0).unwrap());
    let v = coseparability_verdict(&co0).unwrap();
    assert!(!v.separable && v.naturally_full && !v.idempotent_trivial);
    assert!(!is_faithful_cotensor(&co0).unwrap().faithful);
    assert!(!coreflection_checks(&co0, &[]).unwrap().maschke.holds);

    let unit_co = dualize_algebra(&unit_algebra(&c)).unwrap();
    let v = coseparability_verdict(&unit_co).unwrap();
    assert!(v.separable && v.naturally_full);
    let m = cofree_comodule(&c.simple(1), &unit_co).unwrap();
    assert!(m.validate(&unit_co).unwrap());
}

#[test]
fn cosection_is_natural() {
    let c = pair2();
    let co = dualize_algebra(&groupoid_algebra(&c, &[0, 1]).unwrap()).unwrap();
    let s = coseparability_verdict(&co).unwrap().witness.unwrap().witness;
    let mut rg = rng(8);
    for _ in 0..10 {
        let (m0, m, n, n0) = (
            random_object(&c, &mut rg, 0, 2),
            random_object(&c, &mut rg, 0, 2),
            random_object(&c, &mut rg, 0, 2),
            random_object(&c, &mut rg, 0, 2),
        );
        let phi = random_morphism(&mut rg, &tensor_obj(&m, &co.carrier).unwrap(), &n);
        let h = random_morphism(&mut rg, &m0, &m);
        let k = random_morphism(&mut rg, &n, &n0);
        assert!(check_cosection_naturality(&co, &s, &phi, &h, &k).unwrap());
        let g = cofree_extension(&phi, &m, &co).unwrap();
        let (cm, cn) = (cofree_comodule(&m, &co).unwrap(), cofree_comodule(&n, &co).unwrap());
        assert_eq!(
            cn.coaction.compose(&g).unwrap(),
            tensor_mor(&g, &GradedMorphism::identity(&co.carrier)).unwrap().compose(&cm.coaction).unwrap()
        );
    }
}

#[test]
fn rj_on_unit_and_all() {
    let c = pair2();
    assert_eq!(c.unit().restrict(&[0]), c.unit_summand(&[0]).unwrap());
    let mut rg = rng(2);
    let x = random_object(&c, &mut rg, 1, 3);
    let y = random_object(&c, &mut rg, 1, 3);
    assert!(rj_phi(&x, &y, &[0, 1]).unwrap().is_identity());
    assert!(rj_psi(&x, &y, &[0, 1]).unwrap().is_identity());
    // X_{g01} ⊗ X_{g10} lands in g00, but each factor is killed by R_{0}
    let (a, b) = (c.simple(1), c.simple(2));
    let phi = rj_phi(&a, &b, &[0]).unwrap();
    assert!(phi.source().is_zero() && !phi.target().is_zero());
    let t = [(a.clone(), b.clone(), a.clone())];
    let checks = rj_structure_checks(&c, &[0], &t, &[]).unwrap();
    assert!(!checks.phi_psi_identity && checks.psi_phi_identity && checks.lax_associativity && checks.frobenius_left);
}

#[test]
fn rj_of_groupoid_algebra_is_unit_summand() {
    let c = pair2();
    let a = groupoid_algebra(&c, &[0, 1]).unwrap();
    let r = restrict_to_j(&a, &[0]).unwrap();
    let b = unit_summand_algebra(&c, 0).unwrap();
    assert!(r.algebra.carrier.same_class(&b.carrier));
    assert_eq!(r.algebra.mult.blocks(), b.mult.blocks());
    assert_eq!(r.algebra.carrier, a.carrier.restrict(&[0]));
}

#[test]
fn lj_rejects_objects_outside() {
    let c = pair2();
    let x = c.simple(1);
    let t = [(x.clone(), x.clone(), x)];
    assert!(matches!(lj_structure_checks(&c, &[0], &t, &[]), Err(Error::Input(_))));
    assert!(matches!(lj_structure_checks(&c, &[], &[], &[]), Err(Error::EmptyIndexSet)));
}

#[test]
fn frobenius_pair_unit_example() {
    let c = pair2();
    let b = c.unit_summand(&[0]).unwrap();
    let a = c.unit();
    assert_eq!(GradedMorphism::hom_dim(&b, &a), 1);
    assert_eq!(GradedMorphism::hom_dim(&b, &a.restrict(&[0])), 1);
    let rep = frobenius_pair_check(&[0], &b, &a, &[], &[]).unwrap();
    assert!(rep.left_adjunction && rep.right_adjunction && rep.dims_equal);
}

#[test]
fn restricted_separability_examples() {
    let c = pair2();
    let a = unit_summand_algebra(&c, 0).unwrap();
    assert!(!separability_verdict(&a).unwrap().separable);
    assert_eq!(restricted_separability(&a).unwrap().objects, vec![0]);
    assert_eq!(restricted_separability(&kz2()).unwrap().objects, vec![0]);
    let e = internal_end(&c.simple(1)).unwrap();
    let rs = restricted_separability(&e).unwrap();
    assert_eq!(rs.objects, vec![0]);
    let u = restrict_to_j(&e, &[0]).unwrap().algebra.unit;
    assert!(rs.retraction.verify(&u).unwrap());
}

fn objects_in(c: &Category, j: &[usize], r: &mut SampleRng) -> GradedObject {
    random_object(c, r, 0, 3).restrict(j).relabelled()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdict_invariants(seed in any::<u64>(), which in 0usize..6) {
        let c = &fixtures()[which];
        for e in algebra_corpus(c, seed, 3).unwrap() {
            let v = separability_verdict(&e.algebra).unwrap();
            prop_assert!(v.semiseparable);
            prop_assert_eq!(v.separable, v.idempotent_trivial);
            prop_assert_eq!(v.separable, is_faithful_tensor(&e.algebra).unwrap().faithful);
            prop_assert!(v.weak_inverse.verify(&e.algebra.unit).unwrap());
            let co = dualize_algebra(&e.algebra).unwrap();
            let w = coseparability_verdict(&co).unwrap();
            prop_assert!(w.semiseparable);
            prop_assert_eq!(w.separable, w.idempotent_trivial);
            prop_assert_eq!(w.separable, v.separable);
            prop_assert!(restricted_separability(&e.algebra).is_ok());
        }
    }

    #[test]
    fn hom_map_kernel_matches_faithfulness(seed in any::<u64>(), which in 0usize..6) {
        let c = &fixtures()[which];
        let mut r = rng(seed);
        for e in algebra_corpus(c, seed, 2).unwrap() {
            let faithful = is_faithful_tensor(&e.algebra).unwrap();
            for (m, n) in pairs(c, &mut r, 4, 3) {
                let k = hom_map_kernel(&e.algebra.carrier, &m, &n).unwrap();
                if faithful.faithful {
                    prop_assert!(k.is_none());
                }
                if let Some(f) = k {
                    prop_assert!(!f.is_zero());
                    prop_assert!(induce_mor(&f, &e.algebra).unwrap().is_zero());
                }
            }
            if let Some(w) = faithful.witness {
                let s = w.source().clone();
                prop_assert!(hom_map_kernel(&e.algebra.carrier, &s, &s).unwrap().is_some());
            }
        }
    }

    #[test]
    fn idempotent_is_idempotent_and_natural(seed in any::<u64>(), which in 0usize..6) {
        let c = &fixtures()[which];
        let mut r = rng(seed);
        for e in algebra_corpus(c, seed, 2).unwrap() {
            let (m, n) = (random_object(c, &mut r, 0, 3), random_object(c, &mut r, 0, 3));
            let f = random_morphism(&mut r, &m, &n);
            let (em, en) = (idempotent_e(&e.algebra, &m).unwrap(), idempotent_e(&e.algebra, &n).unwrap());
            prop_assert_eq!(em.compose(&em).unwrap(), em.clone());
            prop_assert_eq!(f.compose(&em).unwrap(), en.compose(&f).unwrap());
        }
    }

    #[test]
    fn rj_axioms_hold(seed in any::<u64>(), which in 0usize..6) {
        let c = &fixtures()[which];
        let mut r = rng(seed);
        let n = c.groupoid().object_count();
        let j = crate::sampling::random_subset(&mut r, n);
        let triples: Vec<_> = (0..3).map(|_| (random_object(c, &mut r, 0, 3), random_object(c, &mut r, 0, 3), random_object(c, &mut r, 0, 3))).collect();
        let mors: Vec<_> = (0..3).map(|_| {
            let (a, b, x, y) = (random_object(c, &mut r, 0, 2), random_object(c, &mut r, 0, 2), random_object(c, &mut r, 0, 2), random_object(c, &mut r, 0, 2));
            (random_morphism(&mut r, &a, &b), random_morphism(&mut r, &x, &y))
        }).collect();
        let ch = rj_structure_checks(c, &j, &triples, &mors).unwrap();
        prop_assert!(ch.lax_associativity && ch.lax_unitality && ch.colax_coassociativity && ch.colax_counitality);
        prop_assert!(ch.phi_natural && ch.psi_natural && ch.psi_phi_identity);
        prop_assert!(ch.frobenius_left && ch.frobenius_right);
    }

    #[test]
    fn lj_axioms_hold(seed in any::<u64>(), which in 0usize..6) {
        let c = &fixtures()[which];
        let mut r = rng(seed);
        let n = c.groupoid().object_count();
        let j = crate::sampling::random_subset(&mut r, n);
        let triples: Vec<_> = (0..3).map(|_| (objects_in(c, &j, &mut r), objects_in(c, &j, &mut r), objects_in(c, &j, &mut r))).collect();
        let mors: Vec<_> = (0..3).map(|_| {
            let (a, b, x, y) = (objects_in(c, &j, &mut r), objects_in(c, &j, &mut r), objects_in(c, &j, &mut r), objects_in(c, &j, &mut r));
            (random_morphism(&mut r, &a, &b), random_morphism(&mut r, &x, &y))
        }).collect();
        let ch = lj_structure_checks(c, &j, &triples, &mors).unwrap();
        prop_assert!(ch.lax_associativity && ch.lax_unitality && ch.colax_coassociativity && ch.colax_counitality);
        prop_assert!(ch.phi_natural && ch.psi_natural && ch.phi_psi_identity && ch.psi_phi_identity);
        prop_assert!(ch.frobenius_left && ch.frobenius_right);
    }

    #[test]
    fn frobenius_pair_bijections(seed in any::<u64>(), which in 0usize..6) {
        let c = &fixtures()[which];
        let mut r = rng(seed);
        let n = c.groupoid().object_count();
        let j = crate::sampling::random_subset(&mut r, n);
        let b = objects_in(c, &j, &mut r);
        let a = random_object(c, &mut r, 0, 3);
        let b0 = objects_in(c, &j, &mut r);
        let a1 = random_object(c, &mut r, 0, 3);
        let b_maps = vec![random_morphism(&mut r, &b0, &b), random_morphism(&mut r, &b, &b0)];
        let a_maps = vec![random_morphism(&mut r, &a, &a1), random_morphism(&mut r, &a1, &a)];
        let rep = frobenius_pair_check(&j, &b, &a, &b_maps, &a_maps).unwrap();
        prop_assert!(rep.left_adjunction && rep.right_adjunction && rep.dims_equal && rep.naturality);
    }

    #[test]
    fn reflection_holds_when_faithful(seed in any::<u64>(), which in 0usize..6) {
        let c = &fixtures()[which];
        let mut r = rng(seed);
        let samples: Vec<_> = (0..12).map(|_| crate::sampling::random_arrow(c, &mut r, 3)).collect();
        for e in algebra_corpus(c, seed, 2).unwrap() {
            let rep = reflection_checks(&e.algebra, &samples).unwrap();
            let faithful = is_faithful_tensor(&e.algebra).unwrap().faithful;
            prop_assert_eq!(rep.maschke.holds, faithful);
            prop_assert_eq!(rep.dual_maschke.holds, faithful);
            prop_assert_eq!(rep.conservative.holds, faithful);
        }
    }
}

#[test]
fn scaled_unit_is_not_a_retraction() {
    let a = kz2();
    let r = separability_verdict(&a).unwrap().witness.unwrap().witness.scale(&ratio(2, 1));
    assert!(check_section_identity(&a, &r, &[]).is_err());
}
