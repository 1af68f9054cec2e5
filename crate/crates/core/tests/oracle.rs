use tsglab::oracle::{
    check_orbits_lemma, enumerate_action_profiles, involutions, subgroups_of_product, verify_3cycle_consequences,
    verify_d2_lemma, verify_fixed_vertex_lemma, verify_orbits_lemma, verify_pq_lemma, ActionProfile, AxiomSet,
};
use tsglab::perm::Permutation;
use tsglab::realizability::is_type4;

fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
    Permutation::from_cycles(n, &cycles).unwrap()
}

/// Points lying in orbits of size at most 3.
fn small(profile: &ActionProfile) -> usize {
    profile.orbit_sizes().iter().filter(|&&s| s <= 3).sum()
}

#[test]
fn subgroup_counts() {
    assert_eq!(subgroups_of_product(3, 3).len(), 6);
    // Z3 x Z9 has 10 subgroups: 1, four of order 3, four of order 9
    // (one of them Z3 x Z3), and the whole group.
    assert_eq!(subgroups_of_product(3, 9).len(), 10);
    assert_eq!(subgroups_of_product(5, 5).len(), 8);
    assert_eq!(subgroups_of_product(3, 15).len(), 12);
}

#[test]
fn orbits_lemma_examples() {
    let a = cyc(9, &[&[1, 2, 3]]);
    let b = cyc(9, &[&[4, 5, 6], &[7, 8, 9]]);
    assert_eq!(check_orbits_lemma(&a, &b).unwrap(), None);
    let c = cyc(3, &[&[1, 2, 3]]);
    assert_eq!(check_orbits_lemma(&c, &c).unwrap(), None);
}

#[test]
fn orbits_lemma_randomized_is_seeded() {
    let a = verify_orbits_lemma(20, 300, 7).unwrap();
    let b = verify_orbits_lemma(20, 300, 7).unwrap();
    assert!(a.is_consistent());
    assert_eq!(a.cases, 300);
    assert_eq!(a.params, b.params);
    assert_eq!(a.seed, Some(7));
}

#[test]
fn involution_count_n7() {
    // 7! / (2^3 * 3!) = 105 involutions of shape 2^3 1^1
    let flat = involutions(7).unwrap();
    assert_eq!(flat.len(), 105 * 7);
}

#[test]
fn d2_example_pair() {
    let a = cyc(7, &[&[1, 2], &[3, 4], &[5, 6]]);
    let b = cyc(7, &[&[1, 2], &[3, 5], &[4, 6]]);
    assert!(a.commutes_with(&b).unwrap());
    let prod = a.compose(&b).unwrap();
    // (3 6)(4 5): an involution with 3 fixed points, outside the m = 2 shape
    assert_eq!(prod.order(), 2);
    assert_eq!(prod.fixed_points().len(), 3);
    assert!(!tsglab::realizability::check(&prod.cycle_type(), 2).unwrap().realizable);
}

#[test]
fn d2_lemma_n15_and_range() {
    let r = verify_d2_lemma(15).unwrap();
    assert!(r.is_consistent(), "{:?}", r.counterexamples);
    assert!(r.cases > 0);
    for n in [5, 9, 19] {
        assert!(verify_d2_lemma(n).is_err(), "{n}");
    }
}

#[test]
fn profile_examples() {
    let nine = enumerate_action_profiles(3, 3, 9, AxiomSet::ALL).unwrap();
    assert!(nine.iter().any(|p| p.orbit_sizes() == vec![9]));
    assert!(enumerate_action_profiles(3, 9, 7, AxiomSet::ALL).unwrap().is_empty());
    for p in enumerate_action_profiles(3, 3, 15, AxiomSet::ALL).unwrap() {
        assert_eq!((15 - small(&p)) % 9, 0);
    }
    assert!(enumerate_action_profiles(3, 5, 15, AxiomSet::ALL).is_err());
    assert!(enumerate_action_profiles(4, 8, 15, AxiomSet::ALL).is_err());
}

#[test]
fn axioms_only_remove_profiles() {
    for (p, q) in [(3, 3), (3, 9), (5, 5)] {
        for n in 7..=36 {
            let none = enumerate_action_profiles(p, q, n, AxiomSet::NONE).unwrap();
            let some = enumerate_action_profiles(p, q, n, AxiomSet::REALIZABILITY_ONLY).unwrap();
            let all = enumerate_action_profiles(p, q, n, AxiomSet::ALL).unwrap();
            assert!(some.iter().all(|x| none.contains(x)));
            assert!(all.iter().all(|x| some.contains(x)));
            for x in &all {
                assert!(x.is_faithful());
                assert_eq!(x.n(), n);
                assert_eq!(x.orbits().iter().map(|o| o.size).sum::<usize>(), n);
                for o in x.orbits() {
                    assert_eq!(o.size * o.stabilizer.order(), p * q);
                }
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_action_profiles(3, 9, 39, AxiomSet::ALL).unwrap();
    let b = enumerate_action_profiles(3, 9, 39, AxiomSet::ALL).unwrap();
    assert_eq!(a, b);
}

#[test]
fn fixed_vertex_examples() {
    let r = verify_fixed_vertex_lemma(5, 5, 40).unwrap();
    assert!(r.is_consistent());
    // independent check: no admissible Z5 x Z5 profile gives beta fixed points
    for n in 7..=40 {
        for prof in enumerate_action_profiles(5, 5, n, AxiomSet::ALL).unwrap() {
            let g = prof.group();
            assert_eq!(prof.fixed_count(g.beta()), 0);
            assert_eq!(prof.fixed_count(g.alpha()), 0);
        }
    }
    let twelve = enumerate_action_profiles(3, 3, 12, AxiomSet::ALL).unwrap();
    assert!(twelve.iter().any(|p| p.fixed_count(p.group().alpha()) == 3));
    for (p, q) in [(3, 3), (3, 9), (3, 15), (5, 15), (7, 7)] {
        assert!(verify_fixed_vertex_lemma(p, q, 45).unwrap().is_consistent(), "{p},{q}");
    }
}

#[test]
fn three_cycle_examples() {
    for (p, q) in [(9, 9), (3, 15), (3, 3), (3, 9)] {
        let r = verify_3cycle_consequences(p, q, 63).unwrap();
        assert!(r.is_consistent(), "{p},{q}: {:?}", r.counterexamples);
    }
    // independent restatement over Z9 x Z9 and Z3 x Z15
    for n in 7..=63 {
        for prof in enumerate_action_profiles(9, 9, n, AxiomSet::ALL).unwrap() {
            let g = prof.group();
            assert!(!is_type4(&prof.cycle_type_of(g.alpha()), 9).unwrap());
        }
        for prof in enumerate_action_profiles(3, 15, n, AxiomSet::ALL).unwrap() {
            let g = prof.group();
            let (a, b) = (prof.cycle_type_of(g.alpha()), prof.cycle_type_of(g.beta()));
            if a.fixed() == 0 && b.fixed() == 0 && b.count_of(3) == 0 {
                assert_eq!(n % 45, 0, "n = {n}");
            }
        }
    }
    let r = verify_3cycle_consequences(3, 3, 45).unwrap();
    assert!(r.params["rejected_by_triples_axiom"].as_u64().unwrap() > 0);
}

#[test]
fn pq_examples() {
    // Z5 x Z5: 25 | n for every admissible profile
    for n in 7..=63 {
        for _ in enumerate_action_profiles(5, 5, n, AxiomSet::ALL).unwrap() {
            assert_eq!(n % 25, 0, "n = {n}");
        }
    }
    // Z3 x Z9 at n = 30 with beta of type 4 forces 27 | n - 3
    let mut type4 = 0;
    for prof in enumerate_action_profiles(3, 9, 30, AxiomSet::ALL).unwrap() {
        if is_type4(&prof.cycle_type_of(prof.group().beta()), 9).unwrap() {
            type4 += 1;
        }
    }
    assert!(type4 > 0);
    // Z3 x Z3 at n = 15: exactly six points in small orbits
    let fifteen = enumerate_action_profiles(3, 3, 15, AxiomSet::ALL).unwrap();
    assert!(!fifteen.is_empty());
    for prof in &fifteen {
        assert_eq!(small(prof), 6);
    }
    let r = verify_pq_lemma(15, 45).unwrap();
    assert!(r.is_consistent());
}
