use proptest::prelude::*;
use tsglab::oracle::{enumerate_action_profiles, ActionProfile, AxiomSet};
use tsglab::perm::{closure, commute, compose, orbits, realize_action, CycleType, Permutation};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn triple(max: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

proptest! {
    #[test]
    fn compose_is_associative((a, b, c) in triple(12)) {
        let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
        let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_is_two_sided((a, _, _) in triple(12)) {
        prop_assert!(compose(&a, &a.inverse()).unwrap().is_identity());
        prop_assert!(compose(&a.inverse(), &a).unwrap().is_identity());
    }

    #[test]
    fn order_is_lcm_and_minimal((a, _, _) in triple(16)) {
        let lcm = a.cycles().iter().fold(1u64, |acc, c| acc / gcd(acc, c.len() as u64) * c.len() as u64);
        prop_assert_eq!(a.order(), lcm);
        prop_assert!(a.pow(a.order()).is_identity());
        for k in 1..a.order() {
            prop_assert!(!a.pow(k).is_identity());
        }
        prop_assert_eq!(a.cycle_type().order(), lcm);
    }

    // β maps each α-orbit onto an α-orbit of the same size whenever they commute.
    #[test]
    fn commuting_maps_orbits_to_orbits((a, s, _) in triple(14), i in 0u64..6, j in 0u64..6) {
        // conjugating a commuting pair by s keeps it commuting
        let alpha = a.pow(i).conjugate_by(&s).unwrap();
        let beta = a.pow(j).conjugate_by(&s).unwrap();
        prop_assert!(commute(&alpha, &beta).unwrap());
        let n = a.len();
        let blocks = orbits(std::slice::from_ref(&alpha), n).unwrap();
        for block in &blocks {
            let mut image: Vec<usize> = block.iter().map(|&x| beta.apply(x)).collect();
            image.sort();
            prop_assert!(blocks.contains(&image));
        }
    }

    #[test]
    fn conjugation_preserves_cycle_type((a, s, _) in triple(12)) {
        prop_assert_eq!(a.conjugate_by(&s).unwrap().cycle_type(), a.cycle_type());
    }
}

#[test]
fn cycle_type_examples() {
    assert_eq!(Permutation::identity(7).cycle_type(), CycleType::new(7, vec![], 7).unwrap());
    let a = Permutation::from_cycles(7, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
    assert_eq!(a.cycle_type(), CycleType::new(7, vec![3, 3], 1).unwrap());
    assert_eq!(a.order(), 3);
    let b = Permutation::from_cycles(12, &[(0..9).collect(), vec![9, 10, 11]]).unwrap();
    assert_eq!(b.cycle_type(), CycleType::new(12, vec![9, 3], 0).unwrap());
    assert_eq!(b.order(), 9);
    assert_eq!(Permutation::identity(5).order(), 1);
}

#[test]
fn orbit_examples() {
    assert_eq!(orbits(&[], 3).unwrap(), vec![vec![0], vec![1], vec![2]]);
    let c = Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
    assert_eq!(orbits(&[c], 4).unwrap(), vec![vec![0, 1, 2], vec![3]]);
    let x = Permutation::from_cycles(6, &[vec![0, 1, 2]]).unwrap();
    let y = Permutation::from_cycles(6, &[vec![3, 4, 5]]).unwrap();
    assert_eq!(orbits(&[x.clone(), y.clone()], 6).unwrap(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    assert!(commute(&x, &y).unwrap());
}

#[test]
fn commute_examples() {
    let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
    let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
    assert!(!commute(&a, &b).unwrap());
    let c = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
    assert!(commute(&c, &c.pow(2)).unwrap());
    assert!(commute(&a, &Permutation::identity(4)).is_err());
}

#[test]
fn parse_is_one_indexed() {
    let p = Permutation::parse("(1 2 3)(4 5 6)", 7).unwrap();
    assert_eq!(p.apply(0), 1);
    assert_eq!(p.apply(6), 6);
    assert!(Permutation::parse("(1 2)(2 3)", 4).is_err());
    assert!(Permutation::parse("(0 1)", 4).is_err());
    assert!(Permutation::parse("(1 5)", 4).is_err());
}

#[test]
fn realize_action_round_trips() {
    let mut checked = 0;
    for (p, q) in [(3, 3), (3, 9), (5, 5), (3, 15), (3, 27), (7, 7), (9, 9)] {
        for n in 7..=45 {
            for profile in enumerate_action_profiles(p, q, n, AxiomSet::REALIZABILITY_ONLY).unwrap() {
                let (alpha, beta) = realize_action(&profile).unwrap();
                assert!(commute(&alpha, &beta).unwrap());
                assert!(alpha.pow(p as u64).is_identity() && beta.pow(q as u64).is_identity());
                assert_eq!(closure(&[alpha.clone(), beta.clone()], n).unwrap().len(), p * q);
                let back = ActionProfile::from_generators(p, q, &alpha, &beta).unwrap();
                assert_eq!(back, profile);
                checked += 1;
            }
        }
    }
    assert!(checked > 50, "{checked}");
}

// Without axioms the space explodes quickly; small carriers only.
#[test]
fn realize_action_round_trips_without_axioms() {
    for (p, q) in [(3, 3), (3, 9), (5, 5)] {
        for n in 7..=15 {
            for profile in enumerate_action_profiles(p, q, n, AxiomSet::NONE).unwrap() {
                let (alpha, beta) = realize_action(&profile).unwrap();
                assert_eq!(ActionProfile::from_generators(p, q, &alpha, &beta).unwrap(), profile);
            }
        }
    }
}

#[test]
fn realize_action_examples() {
    use tsglab::oracle::{ProductGroup, Subgroup};
    let g = ProductGroup::new(3, 3);
    let free = Subgroup::trivial(&g);
    let profile = ActionProfile::new(3, 3, vec![free.clone(), free.clone(), free.clone()]).unwrap();
    let (alpha, _) = realize_action(&profile).unwrap();
    assert_eq!(alpha.cycle_type(), CycleType::new(27, vec![3; 9], 0).unwrap());

    let stab_alpha = Subgroup::generated(&g, &[g.alpha()]);
    let profile = ActionProfile::new(3, 3, vec![free, stab_alpha]).unwrap();
    let (alpha, beta) = realize_action(&profile).unwrap();
    assert_eq!(alpha.fixed_points().len(), 3);
    let fixed = alpha.fixed_points();
    let cycle = beta.cycles().into_iter().find(|c| c.contains(&fixed[0])).unwrap();
    assert_eq!(cycle.len(), 3);

    let trivial = ActionProfile::new(3, 3, vec![Subgroup::whole(&g)]).unwrap();
    assert!(realize_action(&trivial).is_err());
}
