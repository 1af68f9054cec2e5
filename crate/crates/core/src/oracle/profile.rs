//! Abstract actions of `Z_p x Z_q` on finite sets.
//!
//! A transitive action of an abelian group is determined by its (normal)
//! point stabilizer `H`: it is the translation action on `G/H`. An arbitrary
//! action is therefore determined by the multiset of stabilizers of its
//! orbits, which is what [`ActionProfile`] records.

use std::collections::BTreeMap;

use serde::Serialize;

use super::group::{subgroups_of_product, GroupElement, ProductGroup, Subgroup};
use super::OracleError;
use crate::perm::{CycleType, Permutation};
use crate::realizability;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitType {
    pub stabilizer: Subgroup,
    pub size: usize,
}

impl OrbitType {
    pub fn new(stabilizer: Subgroup) -> Self {
        let size = stabilizer.index();
        OrbitType { stabilizer, size }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ActionProfile {
    p: usize,
    q: usize,
    n: usize,
    orbits: Vec<OrbitType>,
}

fn check_params(p: usize, q: usize) -> Result<(), OracleError> {
    if p < 3 || q < 3 || p.is_multiple_of(2) || q.is_multiple_of(2) || !q.is_multiple_of(p) {
        return Err(OracleError::InvalidParameters(format!(
            "Z{p} x Z{q}: need p, q odd, at least 3, with p | q"
        )));
    }
    Ok(())
}

impl ActionProfile {
    /// Orbits are stored largest first, then by stabilizer. Faithfulness is
    /// not required here; see [`ActionProfile::is_faithful`].
    pub fn new(p: usize, q: usize, stabilizers: Vec<Subgroup>) -> Result<Self, OracleError> {
        check_params(p, q)?;
        let group = ProductGroup::new(p, q);
        if let Some(bad) = stabilizers.iter().find(|h| h.group() != group) {
            return Err(OracleError::InvalidParameters(format!(
                "stabilizer {bad} is not a subgroup of Z{p} x Z{q}"
            )));
        }
        let mut orbits: Vec<OrbitType> = stabilizers.into_iter().map(OrbitType::new).collect();
        orbits.sort_by(|x, y| y.size.cmp(&x.size).then_with(|| x.stabilizer.cmp(&y.stabilizer)));
        let n = orbits.iter().map(|o| o.size).sum();
        Ok(ActionProfile { p, q, n, orbits })
    }

    /// Recovers the profile of the action generated by commuting `alpha`
    /// (of order dividing `p`) and `beta` (of order dividing `q`).
    pub fn from_generators(
        p: usize,
        q: usize,
        alpha: &Permutation,
        beta: &Permutation,
    ) -> Result<Self, OracleError> {
        check_params(p, q)?;
        let n = alpha.len();
        if !alpha.commutes_with(beta)? {
            return Err(OracleError::InvalidParameters("generators do not commute".into()));
        }
        if !alpha.pow(p as u64).is_identity() || !beta.pow(q as u64).is_identity() {
            return Err(OracleError::InvalidParameters(format!(
                "generator orders do not divide ({p}, {q})"
            )));
        }
        let group = ProductGroup::new(p, q);
        let alpha_powers: Vec<Permutation> = (0..p as u64).map(|k| alpha.pow(k)).collect();
        let beta_powers: Vec<Permutation> = (0..q as u64).map(|k| beta.pow(k)).collect();
        let mut stabilizers = Vec::new();
        for block in crate::perm::orbits(&[alpha.clone(), beta.clone()], n)? {
            let x = block[0];
            let members: Vec<GroupElement> = group
                .elements()
                .filter(|e| alpha_powers[e.a].apply(beta_powers[e.b].apply(x)) == x)
                .collect();
            stabilizers.push(Subgroup::generated(&group, &members));
        }
        Self::new(p, q, stabilizers)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> ProductGroup {
        ProductGroup::new(self.p, self.q)
    }

    pub fn orbits(&self) -> &[OrbitType] {
        &self.orbits
    }

    /// Intersection of all stabilizers: the elements acting trivially.
    pub fn kernel(&self) -> Subgroup {
        let group = self.group();
        self.orbits
            .iter()
            .fold(Subgroup::whole(&group), |k, o| k.intersect(&o.stabilizer))
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().order() == 1
    }

    /// Cycle type of the permutation induced by `x`: on an orbit `G/H` it
    /// acts with cycles of length `ord(x + H)`.
    pub fn cycle_type_of(&self, x: GroupElement) -> CycleType {
        let group = self.group();
        let mut cycles = Vec::new();
        for orbit in &self.orbits {
            let len = coset_order(&group, &orbit.stabilizer, x);
            if len > 1 {
                cycles.extend(std::iter::repeat_n(len, orbit.size / len));
            }
        }
        CycleType::from_cycles(self.n, cycles).expect("cycles fit in n points")
    }

    pub fn fixed_count(&self, x: GroupElement) -> usize {
        self.orbits
            .iter()
            .filter(|o| o.stabilizer.contains(x))
            .map(|o| o.size)
            .sum()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.size).collect()
    }

    /// Largest number of pairwise disjoint 3-point sets invariant under the
    /// whole group: each 3-point orbit is one, and any three global fixed
    /// points make another.
    pub fn invariant_triples(&self) -> usize {
        let threes = self.orbits.iter().filter(|o| o.size == 3).count();
        let ones = self.orbits.iter().filter(|o| o.size == 1).count();
        threes + ones / 3
    }

    /// Points lying in orbits of size at most 3.
    pub fn small_orbit_points(&self) -> usize {
        self.orbits.iter().filter(|o| o.size <= 3).map(|o| o.size).sum()
    }
}

fn coset_order(group: &ProductGroup, h: &Subgroup, x: GroupElement) -> usize {
    let mut k = 1;
    let mut multiple = x;
    while !h.contains(multiple) {
        multiple = group.add(multiple, x);
        k += 1;
    }
    k
}

/// Topological facts that are assumed, not verified. Each one can be toggled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AxiomSet {
    /// Elements generating a non-cyclic subgroup share no fixed point
    /// (for these odd-order groups: every point stabilizer is cyclic).
    pub disjoint_fixed_points: bool,
    /// At most two disjoint 3-point sets are invariant under the whole group.
    pub at_most_two_invariant_triples: bool,
    /// Every non-trivial element induces a realizable automorphism.
    pub realizability_per_element: bool,
}

impl AxiomSet {
    pub const ALL: AxiomSet = AxiomSet {
        disjoint_fixed_points: true,
        at_most_two_invariant_triples: true,
        realizability_per_element: true,
    };

    pub const REALIZABILITY_ONLY: AxiomSet = AxiomSet {
        disjoint_fixed_points: false,
        at_most_two_invariant_triples: false,
        realizability_per_element: true,
    };

    pub const NONE: AxiomSet = AxiomSet {
        disjoint_fixed_points: false,
        at_most_two_invariant_triples: false,
        realizability_per_element: false,
    };

    pub fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.disjoint_fixed_points {
            out.push("disjoint_fixed_points");
        }
        if self.at_most_two_invariant_triples {
            out.push("at_most_two_invariant_triples");
        }
        if self.realizability_per_element {
            out.push("realizability_per_element");
        }
        out
    }

    /// Whether `self` enables at least every axiom `other` enables.
    pub fn includes(&self, other: &AxiomSet) -> bool {
        (self.disjoint_fixed_points || !other.disjoint_fixed_points)
            && (self.at_most_two_invariant_triples || !other.at_most_two_invariant_triples)
            && (self.realizability_per_element || !other.realizability_per_element)
    }

    /// Which axiom (if any) rejects a faithful profile.
    pub fn rejection(&self, profile: &ActionProfile) -> Option<&'static str> {
        if self.disjoint_fixed_points && profile.orbits.iter().any(|o| !o.stabilizer.is_cyclic()) {
            return Some("disjoint_fixed_points");
        }
        if self.at_most_two_invariant_triples && profile.invariant_triples() > 2 {
            return Some("at_most_two_invariant_triples");
        }
        if self.realizability_per_element && !all_elements_realizable(profile) {
            return Some("realizability_per_element");
        }
        None
    }
}

fn all_elements_realizable(profile: &ActionProfile) -> bool {
    let group = profile.group();
    group.elements().skip(1).all(|x| {
        let ct = profile.cycle_type_of(x);
        let m = ct.order();
        m >= 2
            && realizability::check(&ct, m)
                .map(|v| v.realizable)
                .unwrap_or(false)
    })
}

/// Every faithful action of `Z_p x Z_q` on `n` points passing the enabled
/// axioms, in a deterministic order.
///
/// Orbit types are chosen in canonical order (largest orbits first), so each
/// multiset is produced once. With `realizability_per_element` enabled the
/// search is pruned as soon as some element fixes more than three points,
/// which no realizable odd-order automorphism does.
pub fn enumerate_action_profiles(
    p: usize,
    q: usize,
    n: usize,
    axioms: AxiomSet,
) -> Result<Vec<ActionProfile>, OracleError> {
    check_params(p, q)?;
    enumerate_with_subgroups(p, q, n, axioms, &subgroups_of_product(p, q))
}

/// As [`enumerate_action_profiles`], reusing a precomputed subgroup list.
pub(super) fn enumerate_with_subgroups(
    p: usize,
    q: usize,
    n: usize,
    axioms: AxiomSet,
    subgroups: &[Subgroup],
) -> Result<Vec<ActionProfile>, OracleError> {
    check_params(p, q)?;
    if n < 7 {
        return Err(OracleError::InvalidParameters(format!(
            "profiles are searched on n >= 7 points (got {n})"
        )));
    }
    let group = ProductGroup::new(p, q);
    let mut candidates: Vec<Subgroup> = subgroups
        .iter().filter(|&h| h.index() <= n).filter(|&h| !axioms.disjoint_fixed_points || h.is_cyclic()).cloned()
        .collect();
    candidates.sort_by(|x, y| y.index().cmp(&x.index()).then_with(|| x.cmp(y)));

    let mut search = Search {
        group,
        candidates: &candidates,
        axioms,
        fixed: vec![0; group.order()],
        chosen: Vec::new(),
        found: Vec::new(),
    };
    search.run(0, n);
    Ok(search.found)
}

struct Search<'a> {
    group: ProductGroup,
    candidates: &'a [Subgroup],
    axioms: AxiomSet,
    fixed: Vec<usize>,
    chosen: Vec<Subgroup>,
    found: Vec<ActionProfile>,
}

impl Search<'_> {
    fn run(&mut self, next: usize, remaining: usize) {
        if remaining == 0 {
            self.leaf();
            return;
        }
        if next == self.candidates.len() {
            return;
        }
        let h = &self.candidates[next];
        let size = h.index();
        let max_copies = remaining / size;
        // more copies first keeps the output order "largest orbits first"
        for copies in (0..=max_copies).rev() {
            if copies > 0 && !self.push(next, copies) {
                self.pop(next, copies);
                continue;
            }
            self.run(next + 1, remaining - copies * size);
            if copies > 0 {
                self.pop(next, copies);
            }
        }
    }

    /// Adds `copies` orbits of candidate `idx`; false if pruned.
    fn push(&mut self, idx: usize, copies: usize) -> bool {
        let h = &self.candidates[idx];
        let size = h.index();
        let mut ok = true;
        for &x in h.members().iter().skip(1) {
            let slot = &mut self.fixed[self.group.index_of(x)];
            *slot += copies * size;
            if *slot > 3 {
                ok = false;
            }
        }
        for _ in 0..copies {
            self.chosen.push(h.clone());
        }
        ok || !self.axioms.realizability_per_element
    }

    fn pop(&mut self, idx: usize, copies: usize) {
        let h = &self.candidates[idx];
        let size = h.index();
        for &x in h.members().iter().skip(1) {
            self.fixed[self.group.index_of(x)] -= copies * size;
        }
        for _ in 0..copies {
            self.chosen.pop();
        }
    }

    fn leaf(&mut self) {
        let profile = ActionProfile::new(self.group.p(), self.group.q(), self.chosen.clone())
            .expect("parameters were validated");
        if profile.is_faithful() && self.axioms.rejection(&profile).is_none() {
            self.found.push(profile);
        }
    }
}

/// Number of profiles per enabled-axiom outcome, for reporting.
pub fn rejection_tally(
    p: usize,
    q: usize,
    n: usize,
    base: AxiomSet,
    full: AxiomSet,
) -> Result<BTreeMap<&'static str, usize>, OracleError> {
    let mut tally = BTreeMap::new();
    for profile in enumerate_action_profiles(p, q, n, base)? {
        if let Some(axiom) = full.rejection(&profile) {
            *tally.entry(axiom).or_insert(0) += 1;
        }
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::realize_action;

    #[test]
    fn free_orbit_on_nine_points() {
        let profiles = enumerate_action_profiles(3, 3, 9, AxiomSet::ALL).unwrap();
        assert_eq!(profiles.len(), 1);
        assert_eq!(profiles[0].orbit_sizes(), [9]);
    }

    #[test]
    fn nothing_fits_z3z9_on_seven_points() {
        for axioms in [AxiomSet::ALL, AxiomSet::REALIZABILITY_ONLY, AxiomSet::NONE] {
            assert!(enumerate_action_profiles(3, 9, 7, axioms).unwrap().is_empty());
        }
    }

    #[test]
    fn z3z3_on_fifteen_points_leaves_a_multiple_of_nine() {
        let profiles = enumerate_action_profiles(3, 3, 15, AxiomSet::ALL).unwrap();
        assert!(!profiles.is_empty());
        for profile in &profiles {
            assert_eq!((15 - profile.small_orbit_points()) % 9, 0);
            assert_eq!(profile.orbit_sizes(), [9, 3, 3]);
        }
    }

    #[test]
    fn axioms_shrink_the_search_space() {
        let none = enumerate_action_profiles(3, 3, 10, AxiomSet::NONE).unwrap();
        let real = enumerate_action_profiles(3, 3, 10, AxiomSet::REALIZABILITY_ONLY).unwrap();
        let all = enumerate_action_profiles(3, 3, 10, AxiomSet::ALL).unwrap();
        assert!(none.len() > real.len());
        // one free orbit + a global fixed point is realizable, but the fixed
        // point has stabilizer Z3 x Z3
        assert_eq!(real.len(), 1);
        assert!(all.is_empty());
    }

    #[test]
    fn cycle_types_match_realized_permutations() {
        for profile in enumerate_action_profiles(3, 3, 12, AxiomSet::NONE).unwrap() {
            let (alpha, beta) = realize_action(&profile).unwrap();
            let group = profile.group();
            assert_eq!(profile.cycle_type_of(group.alpha()), alpha.cycle_type());
            assert_eq!(profile.cycle_type_of(group.beta()), beta.cycle_type());
            let ab = alpha.compose(&beta).unwrap();
            let x = group.add(group.alpha(), group.beta());
            assert_eq!(profile.cycle_type_of(x), ab.cycle_type());
        }
    }

    #[test]
    fn invariant_triples_counts_orbits_and_fixed_points() {
        let g = ProductGroup::new(3, 3);
        let whole = Subgroup::whole(&g);
        let a = Subgroup::generated(&g, &[g.alpha()]);
        let profile = ActionProfile::new(3, 3, vec![a, whole.clone(), whole.clone(), whole]).unwrap();
        assert_eq!(profile.invariant_triples(), 2);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(enumerate_action_profiles(3, 5, 9, AxiomSet::ALL).is_err());
        assert!(enumerate_action_profiles(2, 4, 9, AxiomSet::ALL).is_err());
        assert!(enumerate_action_profiles(3, 3, 6, AxiomSet::ALL).is_err());
        assert!(ActionProfile::new(1, 5, vec![]).is_err());
    }
}
