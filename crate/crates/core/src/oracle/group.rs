//! The abelian group `Z_p x Z_q` and its subgroups.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(serializer)
    }
}

/// `Z_p x Z_q`, elements `(a, b)` with `a mod p`, `b mod q`. Indexed as `a*q + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProductGroup {
    p: usize,
    q: usize,
}

impl ProductGroup {
    pub fn new(p: usize, q: usize) -> Self {
        assert!(p >= 1 && q >= 1, "Z_p x Z_q needs p, q >= 1");
        ProductGroup { p, q }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn order(&self) -> usize {
        self.p * self.q
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { a: 0, b: 0 }
    }

    /// Generator `(1, 0)` of the `Z_p` factor.
    pub fn alpha(&self) -> GroupElement {
        GroupElement { a: 1 % self.p, b: 0 }
    }

    /// Generator `(0, 1)` of the `Z_q` factor.
    pub fn beta(&self) -> GroupElement {
        GroupElement { a: 0, b: 1 % self.q }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        let group = *self;
        (0..self.order()).map(move |i| group.element_at(i))
    }

    pub fn index_of(&self, x: GroupElement) -> usize {
        x.a * self.q + x.b
    }

    pub fn element_at(&self, index: usize) -> GroupElement {
        GroupElement {
            a: index / self.q,
            b: index % self.q,
        }
    }

    pub fn add(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        GroupElement {
            a: (x.a + y.a) % self.p,
            b: (x.b + y.b) % self.q,
        }
    }

    pub fn neg(&self, x: GroupElement) -> GroupElement {
        GroupElement {
            a: (self.p - x.a) % self.p,
            b: (self.q - x.b) % self.q,
        }
    }

    pub fn scale(&self, k: usize, x: GroupElement) -> GroupElement {
        GroupElement {
            a: (k % self.p) * x.a % self.p,
            b: (k % self.q) * x.b % self.q,
        }
    }

    pub fn element_order(&self, x: GroupElement) -> usize {
        let oa = self.p / crate::perm::gcd(self.p as u64, x.a as u64) as usize;
        let ob = self.q / crate::perm::gcd(self.q as u64, x.b as u64) as usize;
        crate::perm::lcm(oa as u64, ob as u64) as usize
    }

    /// Ordered pairs `(x, y)` with `|x| = p`, `|y| = q` and
    /// `<x> ∩ <y> = {0}`; each such pair generates the whole group.
    pub fn bases(&self) -> Vec<(GroupElement, GroupElement)> {
        let of_order = |k: usize| -> Vec<GroupElement> {
            self.elements().filter(|&x| self.element_order(x) == k).collect()
        };
        let mut out = Vec::new();
        let xs = of_order(self.p);
        let ys = of_order(self.q);
        for &x in &xs {
            let span_x = Subgroup::generated(self, &[x]);
            for &y in &ys {
                let meets_trivially = (1..self.q).all(|k| !span_x.contains(self.scale(k, y)));
                if meets_trivially {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// A subgroup of `Z_p x Z_q`, canonically represented by its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    p: usize,
    q: usize,
    members: Vec<GroupElement>,
}

impl Subgroup {
    pub fn trivial(group: &ProductGroup) -> Self {
        Subgroup {
            p: group.p,
            q: group.q,
            members: vec![group.zero()],
        }
    }

    pub fn whole(group: &ProductGroup) -> Self {
        Subgroup {
            p: group.p,
            q: group.q,
            members: group.elements().collect(),
        }
    }

    /// The subgroup generated by `gens` (closure under addition).
    pub fn generated(group: &ProductGroup, gens: &[GroupElement]) -> Self {
        let mut members = BTreeSet::from([group.zero()]);
        for &g in gens {
            let current: Vec<GroupElement> = members.iter().copied().collect();
            let mut multiple = g;
            while multiple != group.zero() {
                for &h in &current {
                    members.insert(group.add(h, multiple));
                }
                multiple = group.add(multiple, g);
            }
        }
        Subgroup {
            p: group.p,
            q: group.q,
            members: members.into_iter().collect(),
        }
    }

    pub fn group(&self) -> ProductGroup {
        ProductGroup::new(self.p, self.q)
    }

    pub fn members(&self) -> &[GroupElement] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.p * self.q / self.order()
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            p: self.p,
            q: self.q,
            members: self
                .members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    pub fn is_cyclic(&self) -> bool {
        let group = self.group();
        self.members
            .iter()
            .any(|&x| group.element_order(x) == self.order())
    }

    /// Greedy generating set: repeatedly adjoin the least member not yet spanned.
    pub fn generators(&self) -> Vec<GroupElement> {
        let group = self.group();
        let mut gens = Vec::new();
        let mut span = Subgroup::trivial(&group);
        for &x in &self.members {
            if !span.contains(x) {
                gens.push(x);
                span = Subgroup::generated(&group, &gens);
            }
        }
        gens
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl Serialize for Subgroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.generators().serialize(serializer)
    }
}

/// Every subgroup of `Z_p x Z_q`, sorted by order and then by members.
///
/// Subgroups of a rank-2 abelian group are 2-generated, so they are exactly
/// the joins of pairs of cyclic subgroups.
pub fn subgroups_of_product(p: usize, q: usize) -> Vec<Subgroup> {
    let group = ProductGroup::new(p, q);
    let cyclic: BTreeSet<Subgroup> = group
        .elements()
        .map(|x| Subgroup::generated(&group, &[x]))
        .collect();
    let cyclic: Vec<Subgroup> = cyclic.into_iter().collect();
    let mut all = BTreeSet::new();
    for (i, h) in cyclic.iter().enumerate() {
        for k in &cyclic[i..] {
            let mut gens = h.generators();
            gens.extend(k.generators());
            all.insert(Subgroup::generated(&group, &gens));
        }
    }
    let mut all: Vec<Subgroup> = all.into_iter().collect();
    all.sort_by(|x, y| x.order().cmp(&y.order()).then_with(|| x.members.cmp(&y.members)));
    all
}
