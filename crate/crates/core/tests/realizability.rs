use tsglab::perm::CycleType;
use tsglab::realizability::{check, realizable_cycle_types, Condition};

fn ct(n: usize, cycles: &[usize]) -> CycleType {
    CycleType::from_cycles(n, cycles.to_vec()).unwrap()
}

/// Reference decision procedure written directly from the theorem's wording.
fn reference(t: &CycleType, m: u64) -> Option<u8> {
    let m = m as usize;
    let all_m = t.cycles().iter().all(|&c| c == m);
    if m > 2 && m.is_multiple_of(2) && all_m && t.fixed() == 0 {
        return Some(1);
    }
    if m == 2 && all_m && t.fixed() <= 2 {
        return Some(2);
    }
    if m % 2 == 1 && all_m && t.fixed() <= 3 {
        return Some(3);
    }
    let threes = t.cycles().iter().filter(|&&c| c == 3).count();
    let rest_m = t.cycles().iter().filter(|&&c| c != 3).all(|&c| c == m);
    if m > 3 && m % 2 == 1 && m.is_multiple_of(3) && threes == 1 && rest_m && t.fixed() == 0 {
        return Some(4);
    }
    None
}

fn partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=max.min(n)).rev() {
        prefix.push(part);
        partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

#[test]
fn clause_examples() {
    let v = check(&ct(7, &[3, 3]), 3).unwrap();
    assert!(v.realizable);
    assert_eq!(v.condition, Some(Condition::OddOrder));
    assert!(!check(&ct(9, &[2, 2, 2]), 2).unwrap().realizable);
    assert_eq!(check(&ct(12, &[9, 3]), 9).unwrap().condition.map(|c| c.number()), Some(4));
    assert_eq!(check(&ct(7, &[2, 2, 2]), 2).unwrap().condition.map(|c| c.number()), Some(2));
    assert_eq!(check(&ct(8, &[4, 4]), 4).unwrap().condition.map(|c| c.number()), Some(1));
}

#[test]
fn preconditions() {
    assert!(check(&ct(6, &[3, 3]), 3).is_err());
    assert!(check(&ct(7, &[3, 3]), 9).is_err());
    assert!(check(&ct(7, &[]), 2).is_err());
    assert!(check(&ct(7, &[2]), 1).is_err());
    assert!(realizable_cycle_types(6, 3).is_err());
}

#[test]
fn list_examples() {
    assert_eq!(realizable_cycle_types(7, 3).unwrap(), vec![ct(7, &[3, 3])]);
    assert_eq!(realizable_cycle_types(7, 2).unwrap(), vec![ct(7, &[2, 2, 2])]);
    assert!(realizable_cycle_types(7, 4).unwrap().is_empty());
}

#[test]
fn exhaustive_against_reference_up_to_30() {
    for n in 7..=30 {
        let mut all = Vec::new();
        partitions(n, n, &mut Vec::new(), &mut all);
        let types: Vec<CycleType> = all
            .iter()
            .map(|parts| ct(n, &parts.iter().copied().filter(|&c| c > 1).collect::<Vec<_>>()))
            .filter(|t| !t.is_identity())
            .collect();
        for m in 2..=n as u64 {
            let listed = realizable_cycle_types(n, m).unwrap();
            for t in types.iter().filter(|t| t.order() == m) {
                let v = check(t, m).unwrap();
                let want = reference(t, m);
                assert_eq!(v.condition.map(|c| c.number()), want, "{t} m={m}");
                assert_eq!(v.realizable, v.condition.is_some());
                assert_eq!(listed.contains(t), v.realizable, "{t} m={m}");
            }
            for t in &listed {
                match m {
                    2 => assert!(t.fixed() <= 2),
                    m if m % 2 == 0 => assert_eq!(t.fixed(), 0),
                    _ => assert!(t.fixed() <= 3),
                }
            }
        }
    }
}
