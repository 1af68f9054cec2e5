//! Which finite groups occur as the orientation-preserving topological
//! symmetry group `TSG+(Γ)` of some embedding `Γ` of `K_n` in `S^3`, for
//! `n ≡ 3 (mod 4)`.
//!
//! A group occurs exactly when it is
//!
//! * `Z2`;
//! * `Zp` or `Dp` with `p` odd dividing one of `n`, `n-1`, `n-2`, `n-3`;
//! * `Zp x Zq` with `p`, `q` odd, `p | q`, and `pq | n`, or `p = 3` and
//!   `pq | n-3`, or `p = q = 3` and `pq | n-6`.
//!
//! The trivial group is not part of this list and is never reported.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifierError {
    #[error("classification covers K_n with n = 4r+3 >= 7 only (got n = {n})")]
    OutOfScope { n: usize },
    #[error("{0} is a family of candidates, not a concrete group")]
    UnsupportedQuery(GroupId),
    #[error("cannot parse group name {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid group parameters: {0}")]
    InvalidGroup(String),
}

/// Abstract group descriptor.
///
/// `ProductCyclic(p, q)` is always in normal form (`p`, `q` odd, `p >= 3`,
/// `p | q`); cyclic groups are never written as products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupId {
    Cyclic(usize),
    Dihedral(usize),
    ProductCyclic(usize, usize),
    Alt4,
    Sym4,
    Alt5,
    /// "some subgroup of `D_m x D_m`", `m` odd. Only meaningful to
    /// [`candidate_filter`].
    SubDmDm(usize),
}

impl GroupId {
    pub fn cyclic(p: usize) -> Result<Self, ClassifierError> {
        if p < 2 {
            return Err(ClassifierError::InvalidGroup(format!(
                "Z{p}: the trivial group is not represented"
            )));
        }
        Ok(GroupId::Cyclic(p))
    }

    pub fn dihedral(p: usize) -> Result<Self, ClassifierError> {
        if p < 2 {
            return Err(ClassifierError::InvalidGroup(format!(
                "D{p}: dihedral groups need p >= 2"
            )));
        }
        Ok(GroupId::Dihedral(p))
    }

    pub fn product(p: usize, q: usize) -> Result<Self, ClassifierError> {
        if p < 3 || q < 3 || p.is_multiple_of(2) || q.is_multiple_of(2) {
            return Err(ClassifierError::InvalidGroup(format!(
                "Z{p}xZ{q}: both factors must be odd and at least 3"
            )));
        }
        if !q.is_multiple_of(p) {
            return Err(ClassifierError::InvalidGroup(format!(
                "Z{p}xZ{q}: normal form requires p | q"
            )));
        }
        Ok(GroupId::ProductCyclic(p, q))
    }

    pub fn sub_dm_dm(m: usize) -> Result<Self, ClassifierError> {
        if m < 3 || m.is_multiple_of(2) {
            return Err(ClassifierError::InvalidGroup(format!(
                "subgroups of D{m}xD{m}: m must be odd and at least 3"
            )));
        }
        Ok(GroupId::SubDmDm(m))
    }

    /// Group order; `None` for the `SubDmDm` family marker.
    pub fn order(&self) -> Option<usize> {
        match *self {
            GroupId::Cyclic(p) => Some(p),
            GroupId::Dihedral(p) => Some(2 * p),
            GroupId::ProductCyclic(p, q) => Some(p * q),
            GroupId::Alt4 => Some(12),
            GroupId::Sym4 => Some(24),
            GroupId::Alt5 => Some(60),
            GroupId::SubDmDm(_) => None,
        }
    }

    /// Whether the group has a subgroup isomorphic to `D2 = Z2 x Z2`.
    pub fn contains_d2(&self) -> bool {
        match *self {
            GroupId::Cyclic(_) => false,
            GroupId::Dihedral(p) => p % 2 == 0,
            GroupId::ProductCyclic(p, q) => p % 2 == 0 && q % 2 == 0,
            GroupId::Alt4 | GroupId::Sym4 | GroupId::Alt5 => true,
            GroupId::SubDmDm(_) => true,
        }
    }

    fn sort_key(&self) -> (u8, usize, usize) {
        match *self {
            GroupId::Cyclic(p) => (0, p, 0),
            GroupId::Dihedral(p) => (1, p, 0),
            GroupId::ProductCyclic(p, q) => (2, p, q),
            GroupId::Alt4 => (3, 0, 0),
            GroupId::Sym4 => (4, 0, 0),
            GroupId::Alt5 => (5, 0, 0),
            GroupId::SubDmDm(m) => (6, m, 0),
        }
    }
}

impl Ord for GroupId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for GroupId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupId::Cyclic(p) => write!(f, "Z{p}"),
            GroupId::Dihedral(p) => write!(f, "D{p}"),
            GroupId::ProductCyclic(p, q) => write!(f, "Z{p}xZ{q}"),
            GroupId::Alt4 => f.write_str("A4"),
            GroupId::Sym4 => f.write_str("S4"),
            GroupId::Alt5 => f.write_str("A5"),
            GroupId::SubDmDm(m) => write!(f, "Sub(D{m}xD{m})"),
        }
    }
}

impl Serialize for GroupId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses `Z2`, `Z<p>`, `D<p>`, `Z<p>xZ<q>`, `A4`, `S4`, `A5` and
/// `Sub(D<m>xD<m>)`, case-insensitively and without spaces.
impl FromStr for GroupId {
    type Err = ClassifierError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ClassifierError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.to_ascii_lowercase();
        let number = |digits: &str| -> Result<usize, ClassifierError> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected a decimal parameter"));
            }
            digits.parse().map_err(|_| err("parameter out of range"))
        };
        match s.as_str() {
            "a4" => return Ok(GroupId::Alt4),
            "s4" => return Ok(GroupId::Sym4),
            "a5" => return Ok(GroupId::Alt5),
            _ => {}
        }
        if let Some(inner) = s.strip_prefix("sub(d").and_then(|r| r.strip_suffix(')')) {
            let (a, b) = inner.split_once("xd").ok_or_else(|| err("expected Sub(DmxDm)"))?;
            let (a, b) = (number(a)?, number(b)?);
            if a != b {
                return Err(err("both dihedral factors must be D_m for the same m"));
            }
            return GroupId::sub_dm_dm(a);
        }
        if let Some(rest) = s.strip_prefix('d') {
            return GroupId::dihedral(number(rest)?);
        }
        if let Some(rest) = s.strip_prefix('z') {
            if let Some((a, b)) = rest.split_once("xz") {
                return GroupId::product(number(a)?, number(b)?);
            }
            return GroupId::cyclic(number(rest)?);
        }
        Err(err("unknown group family"))
    }
}

fn ensure_in_scope(n: usize) -> Result<(), ClassifierError> {
    if n < 7 || n % 4 != 3 {
        return Err(ClassifierError::OutOfScope { n });
    }
    Ok(())
}

fn divides(d: usize, x: usize) -> bool {
    x.is_multiple_of(d)
}

/// The groups realized as `TSG+` of embeddings of `K_n`, sorted: cyclic,
/// then dihedral, then products, each by ascending parameters.
pub fn enumerate_tsg(n: usize) -> Result<Vec<GroupId>, ClassifierError> {
    ensure_in_scope(n)?;
    let mut groups = vec![GroupId::Cyclic(2)];
    let odd_params: Vec<usize> = (3..=n)
        .step_by(2)
        .filter(|&p| (0..=3).any(|shift| divides(p, n - shift)))
        .collect();
    groups.extend(odd_params.iter().map(|&p| GroupId::Cyclic(p)));
    groups.extend(odd_params.iter().map(|&p| GroupId::Dihedral(p)));
    for p in (3..=n).step_by(2) {
        for q in (p..=n / p).step_by(2).filter(|q| q % p == 0) {
            let pq = p * q;
            if divides(pq, n) || (p == 3 && divides(pq, n - 3)) || (p == 3 && q == 3 && divides(pq, n - 6)) {
                groups.push(GroupId::ProductCyclic(p, q));
            }
        }
    }
    groups.sort();
    Ok(groups)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmitsWitness {
    pub admitted: bool,
    /// Matched divisibility clause, e.g. `"p|n-1"` or `"p=3,pq|n-3"`.
    pub clause: Option<String>,
    pub reason: String,
}

impl AdmitsWitness {
    fn admit(clause: &str, reason: String) -> Self {
        AdmitsWitness {
            admitted: true,
            clause: Some(clause.to_string()),
            reason,
        }
    }

    fn reject(reason: String) -> Self {
        AdmitsWitness {
            admitted: false,
            clause: None,
            reason,
        }
    }
}

/// Decides whether `g` is `TSG+` of some embedding of `K_n`, reporting the
/// first matching clause in the order `p|n`, `p|n-1`, `p|n-2`, `p|n-3`
/// (resp. `pq|n`, `p=3,pq|n-3`, `p=q=3,pq|n-6`).
pub fn admits(n: usize, g: GroupId) -> Result<AdmitsWitness, ClassifierError> {
    ensure_in_scope(n)?;
    let witness = match g {
        GroupId::SubDmDm(_) => return Err(ClassifierError::UnsupportedQuery(g)),
        GroupId::Cyclic(0 | 1) | GroupId::Dihedral(0 | 1) => {
            return Err(ClassifierError::InvalidGroup(format!("{g} is not a supported group")))
        }
        GroupId::Cyclic(2) => AdmitsWitness::admit("Z2", "Z2 is realized for every n = 4r+3".into()),
        GroupId::Dihedral(2) => AdmitsWitness::reject(format!(
            "D2 lemma: no embedding of K_{n} has D2 among its symmetries; {}",
            d2_obstruction(n)?.summary()
        )),
        GroupId::Cyclic(p) | GroupId::Dihedral(p) if p % 2 == 0 => AdmitsWitness::reject(format!(
            "{g}: p = {p} is even; elements of even order {p} > 2 fix no vertices, \
             so p would divide n = {n}, which is odd"
        )),
        GroupId::Cyclic(p) | GroupId::Dihedral(p) => {
            let clauses = ["p|n", "p|n-1", "p|n-2", "p|n-3"];
            match (0..=3).find(|&shift| divides(p, n - shift)) {
                Some(shift) => AdmitsWitness::admit(
                    clauses[shift],
                    format!("{p} divides {} = n-{shift}", n - shift),
                ),
                None => AdmitsWitness::reject(format!(
                    "{g}: p = {p} divides none of n, n-1, n-2, n-3 ({n}, {}, {}, {})",
                    n - 1,
                    n - 2,
                    n - 3
                )),
            }
        }
        GroupId::ProductCyclic(p, q) => {
            if GroupId::product(p, q).is_err() {
                return Err(ClassifierError::InvalidGroup(format!(
                    "{g} is not in normal form (p, q odd >= 3, p | q)"
                )));
            }
            let pq = p * q;
            if divides(pq, n) {
                AdmitsWitness::admit("pq|n", format!("{pq} divides n = {n}"))
            } else if p == 3 && divides(pq, n - 3) {
                AdmitsWitness::admit("p=3,pq|n-3", format!("p = 3 and {pq} divides n-3 = {}", n - 3))
            } else if p == 3 && q == 3 && divides(pq, n - 6) {
                AdmitsWitness::admit("p=q=3,pq|n-6", format!("p = q = 3 and 9 divides n-6 = {}", n - 6))
            } else if p > 3 {
                AdmitsWitness::reject(format!("{g}: p = {p} > 3 requires pq = {pq} | n = {n}"))
            } else if q > 3 {
                AdmitsWitness::reject(format!(
                    "{g}: p = 3 requires pq = {pq} to divide n = {n} or n-3 = {}",
                    n - 3
                ))
            } else {
                AdmitsWitness::reject(format!(
                    "{g}: 9 divides none of n, n-3, n-6 ({n}, {}, {})",
                    n - 3,
                    n - 6
                ))
            }
        }
        GroupId::Alt4 | GroupId::Sym4 | GroupId::Alt5 => AdmitsWitness::reject(format!(
            "{g} contains D2, which no embedding of K_{n} admits (D2 lemma)"
        )),
    };
    Ok(witness)
}

/// Families that occur as `TSG+` of some embedded complete graph at all:
/// cyclic, dihedral, `S4`, `A4`, `A5`, and subgroups of `D_m x D_m` for odd `m`.
pub fn candidate_filter(g: GroupId) -> bool {
    match g {
        GroupId::Cyclic(p) | GroupId::Dihedral(p) => p >= 2,
        GroupId::Alt4 | GroupId::Sym4 | GroupId::Alt5 => true,
        // Z_p x Z_q sits inside D_q x D_q
        GroupId::ProductCyclic(p, q) => GroupId::product(p, q).is_ok(),
        GroupId::SubDmDm(m) => m % 2 == 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Parity argument ruling out `D2` for `n = 4r+3`.
///
/// Both non-trivial commuting involutions must be `2r+1` transpositions with
/// one fixed vertex, so their product is a product of `4r+2` transpositions
/// (even), while as an involution itself it must again be `2r+1`
/// transpositions (odd).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct D2Obstruction {
    pub n: usize,
    pub r: usize,
    pub involution_two_cycles: usize,
    pub involution_fixed: usize,
    pub factor_parity: Parity,
    pub product_transpositions: usize,
    pub product_parity: Parity,
    pub required_parity: Parity,
    pub contradiction: bool,
}

impl D2Obstruction {
    pub fn shape(&self) -> String {
        format!(
            "{} two-cycles + {} fixed",
            self.involution_two_cycles, self.involution_fixed
        )
    }

    pub fn summary(&self) -> String {
        format!(
            "each involution is {}, the product is {} transpositions ({}) but must be {} ({})",
            self.shape(),
            self.product_transpositions,
            self.product_parity,
            self.involution_two_cycles,
            self.required_parity
        )
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("D2 obstruction for K_{} (r = {})\n", self.n, self.r));
        out.push_str(&format!("  forced involution shape: {}\n", self.shape()));
        out.push_str(&format!("  parity of each factor:   {}\n", self.factor_parity));
        out.push_str(&format!(
            "  product of two factors:  {} transpositions, parity {}\n",
            self.product_transpositions, self.product_parity
        ));
        out.push_str(&format!(
            "  product as involution:   {} two-cycles, parity {}\n",
            self.involution_two_cycles, self.required_parity
        ));
        out.push_str(if self.contradiction {
            "  contradiction: no permutation is both even and odd\n"
        } else {
            "  no contradiction\n"
        });
        out
    }
}

pub fn d2_obstruction(n: usize) -> Result<D2Obstruction, ClassifierError> {
    ensure_in_scope(n)?;
    let r = (n - 3) / 4;
    let two_cycles = 2 * r + 1;
    let product_transpositions = 2 * two_cycles;
    let product_parity = Parity::of(product_transpositions);
    let required_parity = Parity::of(two_cycles);
    Ok(D2Obstruction {
        n,
        r,
        involution_two_cycles: two_cycles,
        involution_fixed: n - 2 * two_cycles,
        factor_parity: Parity::of(two_cycles),
        product_transpositions,
        product_parity,
        required_parity,
        contradiction: product_parity != required_parity,
    })
}
