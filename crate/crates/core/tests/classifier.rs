use std::collections::BTreeSet;

use tsglab::classifier::{admits, candidate_filter, d2_obstruction, enumerate_tsg, GroupId};

/// Independent restatement of the main theorem for n = 4r+3.
fn expected(n: usize) -> BTreeSet<GroupId> {
    let divides = |d: usize, x: usize| x.is_multiple_of(d);
    let mut out = BTreeSet::new();
    out.insert(GroupId::Cyclic(2));
    for p in (3..=n).step_by(2) {
        if (0..4).any(|k| n >= k && divides(p, n - k)) {
            out.insert(GroupId::Cyclic(p));
            out.insert(GroupId::Dihedral(p));
        }
    }
    for q in (3..=n).step_by(2) {
        for p in (3..=q).step_by(2).filter(|p| q % p == 0) {
            let pq = p * q;
            if divides(pq, n) || (p == 3 && n >= 3 && divides(pq, n - 3)) || (p == 3 && q == 3 && n >= 6 && divides(pq, n - 6)) {
                out.insert(GroupId::ProductCyclic(p, q));
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_independent_restatement() {
    for n in (7..=403).step_by(4) {
        let got: BTreeSet<GroupId> = enumerate_tsg(n).unwrap().into_iter().collect();
        assert_eq!(got, expected(n), "n = {n}");
    }
}

#[test]
fn enumeration_is_deterministic_and_sorted_stably() {
    assert_eq!(enumerate_tsg(99).unwrap(), enumerate_tsg(99).unwrap());
}

#[test]
fn out_of_scope_n_is_an_error() {
    for n in [0, 3, 5, 8, 9, 13, 14] {
        assert!(enumerate_tsg(n).is_err(), "{n}");
        assert!(admits(n, GroupId::Cyclic(3)).is_err(), "{n}");
    }
}

#[test]
fn admits_examples() {
    let w = admits(15, GroupId::ProductCyclic(3, 3)).unwrap();
    assert!(w.admitted);
    assert_eq!(w.clause.as_deref(), Some("p=q=3,pq|n-6"));
    let w = admits(27, GroupId::ProductCyclic(3, 9)).unwrap();
    assert!(w.admitted);
    assert_eq!(w.clause.as_deref(), Some("pq|n"));
    let w = admits(7, GroupId::Dihedral(2)).unwrap();
    assert!(!w.admitted);
    assert!(w.reason.starts_with("D2 lemma"));
    assert!(!admits(15, GroupId::Cyclic(4)).unwrap().admitted);
    for g in [GroupId::Alt4, GroupId::Sym4, GroupId::Alt5] {
        assert!(!admits(7, g).unwrap().admitted);
    }
    assert!(admits(7, GroupId::Cyclic(2)).unwrap().clause.as_deref() == Some("Z2"));
}

#[test]
fn clause_order_prefers_pq_then_p3() {
    // n = 39: 9 | 36 = n-3 and 9 ∤ 39, 9 ∤ 33
    assert_eq!(admits(39, GroupId::ProductCyclic(3, 3)).unwrap().clause.as_deref(), Some("p=3,pq|n-3"));
    // n = 63: 9 | 63 and 9 | 63 - ... only pq|n reported
    assert_eq!(admits(63, GroupId::ProductCyclic(3, 3)).unwrap().clause.as_deref(), Some("pq|n"));
}

#[test]
fn candidate_filter_families() {
    for g in [
        GroupId::Cyclic(12),
        GroupId::Dihedral(8),
        GroupId::ProductCyclic(3, 9),
        GroupId::Alt4,
        GroupId::Sym4,
        GroupId::Alt5,
    ] {
        assert!(candidate_filter(g), "{g}");
    }
}

#[test]
fn group_names_round_trip() {
    for s in ["Z2", "Z15", "D7", "Z3xZ9", "A4", "S4", "A5"] {
        let g: GroupId = s.parse().unwrap();
        assert_eq!(g.to_string(), s);
    }
    for bad in ["Z1", "Z4xZ8", "Z3xZ4", "Q8", "", "D"] {
        assert!(bad.parse::<GroupId>().is_err(), "{bad}");
    }
}

#[test]
fn d2_obstruction_for_all_small_r() {
    for r in 0..50 {
        let n = 4 * r + 3;
        if n < 7 {
            continue;
        }
        let o = d2_obstruction(n).unwrap();
        // each involution: (n-1)/2 transpositions, which is odd for n = 4r+3
        assert_eq!(((n - 1) / 2) % 2, 1);
        assert!(o.render().contains("contradiction"), "{}", o.render());
    }
    assert!(d2_obstruction(11).unwrap().render().contains("5 two-cycles + 1 fixed"));
}

#[test]
fn listed_groups_never_contain_d2() {
    for n in (7..=199).step_by(4) {
        for g in enumerate_tsg(n).unwrap() {
            assert!(!g.contains_d2(), "{g} at {n}");
        }
    }
}
