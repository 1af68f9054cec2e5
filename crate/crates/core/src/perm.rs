//! Permutations of `{0, .., n-1}`, cycle types, orbits and concrete
//! realizations of abstract `Z_p x Z_q` actions.
//!
//! Points are 0-indexed internally. Textual I/O uses 1-indexed disjoint
//! cycle notation such as `(1 2 3)(4 5)`, with fixed points omitted.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::oracle::ActionProfile;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("incompatible carriers: {left} points vs {right} points")]
    SizeMismatch { left: usize, right: usize },
    #[error("a permutation needs at least one point")]
    Empty,
    #[error("images do not form a bijection of 0..{n}")]
    NotBijection { n: usize },
    #[error("point {point} is outside 1..={n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("cannot parse cycle notation {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),
    #[error("action profile is not faithful: kernel has order {kernel_order}")]
    NonFaithful { kernel_order: usize },
}

/// A bijection of `{0, .., n-1}`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotBijection { n });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-indexed disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &x in cycle {
                if x >= n {
                    return Err(PermError::PointOutOfRange { point: x + 1, n });
                }
                if used[x] {
                    return Err(PermError::NotBijection { n });
                }
                used[x] = true;
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-indexed cycle notation on `n` points. Entries inside a cycle
    /// may be separated by whitespace or commas; `()` and the empty string
    /// denote the identity.
    pub fn parse(input: &str, n: usize) -> Result<Self, PermError> {
        let err = |reason: &str| PermError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut cycles = Vec::new();
        let mut rest = input.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(err("expected '('"));
            };
            let Some(close) = body.find(')') else {
                return Err(err("unbalanced parentheses"));
            };
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(err("nested parentheses"));
            }
            let mut cycle = Vec::new();
            for token in inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                let point: usize = token
                    .parse()
                    .map_err(|_| err(&format!("{token:?} is not a point")))?;
                if point == 0 || point > n {
                    return Err(PermError::PointOutOfRange { point, n });
                }
                cycle.push(point - 1);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles).map_err(|e| match e {
            PermError::NotBijection { .. } => err("cycles are not disjoint"),
            other => other,
        })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: maps `i` to `self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        self.check_size(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, exponent: u64) -> Permutation {
        let mut result = Permutation::identity(self.len());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = base.compose(&result).expect("same carrier");
            }
            base = base.compose(&base).expect("same carrier");
            e >>= 1;
        }
        result
    }

    pub fn commutes_with(&self, other: &Permutation) -> Result<bool, PermError> {
        self.check_size(other)?;
        Ok((0..self.len()).all(|i| self.images[other.images[i]] == other.images[self.images[i]]))
    }

    /// Conjugate `sigma ∘ self ∘ sigma⁻¹`, i.e. relabel points through `sigma`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Result<Permutation, PermError> {
        self.check_size(sigma)?;
        let mut images = vec![0; self.len()];
        for i in 0..self.len() {
            images[sigma.images[i]] = sigma.images[self.images[i]];
        }
        Ok(Permutation { images })
    }

    /// Non-trivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.images[i] == i).collect()
    }

    pub fn cycle_type(&self) -> CycleType {
        let cycles: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        CycleType::from_cycles(self.len(), cycles).expect("cycle lengths sum to at most n")
    }

    /// Least `k >= 1` with `self^k = id`.
    pub fn order(&self) -> u64 {
        self.cycle_type().order()
    }

    fn check_size(&self, other: &Permutation) -> Result<(), PermError> {
        if self.len() != other.len() {
            return Err(PermError::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self, self.len())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation, PermError> {
    a.compose(b)
}

pub fn commute(a: &Permutation, b: &Permutation) -> Result<bool, PermError> {
    a.commutes_with(b)
}

/// Non-trivial cycle lengths (sorted descending) plus the number of fixed points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleType {
    n: usize,
    cycles: Vec<usize>,
    fixed: usize,
}

impl CycleType {
    pub fn new(n: usize, mut cycles: Vec<usize>, fixed: usize) -> Result<Self, PermError> {
        if let Some(&bad) = cycles.iter().find(|&&c| c < 2) {
            return Err(PermError::InvalidCycleType(format!(
                "cycle length {bad} is not a non-trivial cycle"
            )));
        }
        let moved: usize = cycles.iter().sum();
        if moved + fixed != n {
            return Err(PermError::InvalidCycleType(format!(
                "cycles cover {moved} points and {fixed} are fixed, but n = {n}"
            )));
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { n, cycles, fixed })
    }

    /// The fixed-point count is whatever the cycles leave over.
    pub fn from_cycles(n: usize, cycles: Vec<usize>) -> Result<Self, PermError> {
        let moved: usize = cycles.iter().sum();
        if moved > n {
            return Err(PermError::InvalidCycleType(format!(
                "cycles cover {moved} points but n = {n}"
            )));
        }
        Self::new(n, cycles, n - moved)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[usize] {
        &self.cycles
    }

    pub fn fixed(&self) -> usize {
        self.fixed
    }

    pub fn is_identity(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn count_of(&self, length: usize) -> usize {
        self.cycles.iter().filter(|&&c| c == length).count()
    }

    /// lcm of the cycle lengths; 1 for the identity.
    pub fn order(&self) -> u64 {
        self.cycles.iter().fold(1u64, |acc, &c| lcm(acc, c as u64))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.cycles.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}} fixed {} (n={})", self.fixed, self.n)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Orbit partition of `{0, .., n-1}` under the group generated by `generators`.
/// Blocks are sorted internally and listed by least element.
pub fn orbits(generators: &[Permutation], n: usize) -> Result<Vec<Vec<usize>>, PermError> {
    if let Some(bad) = generators.iter().find(|g| g.len() != n) {
        return Err(PermError::SizeMismatch {
            left: bad.len(),
            right: n,
        });
    }
    let mut block_of = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if block_of[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut block = vec![start];
        block_of[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = g.apply(x);
                if block_of[y] == usize::MAX {
                    block_of[y] = id;
                    block.push(y);
                    queue.push_back(y);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    Ok(blocks)
}

/// All elements of the permutation group generated by `generators`, sorted.
/// Intended for the small groups this crate deals with.
pub fn closure(generators: &[Permutation], n: usize) -> Result<Vec<Permutation>, PermError> {
    if let Some(bad) = generators.iter().find(|g| g.len() != n) {
        return Err(PermError::SizeMismatch {
            left: bad.len(),
            right: n,
        });
    }
    let identity = Permutation::identity(n);
    let mut seen = std::collections::BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x)?;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Concrete commuting generators `(alpha, beta)` for the action of
/// `Z_p x Z_q` described by `profile`. `alpha` translates by `(1, 0)` and
/// `beta` by `(0, 1)` on each coset space `G/H`; points are numbered orbit
/// by orbit in profile order, cosets by least representative.
pub fn realize_action(profile: &ActionProfile) -> Result<(Permutation, Permutation), PermError> {
    let kernel = profile.kernel();
    if kernel.order() != 1 {
        return Err(PermError::NonFaithful {
            kernel_order: kernel.order(),
        });
    }
    let group = profile.group();
    let n = profile.n();
    let mut alpha = vec![0; n];
    let mut beta = vec![0; n];
    let mut offset = 0;
    for orbit in profile.orbits() {
        let stabilizer = &orbit.stabilizer;
        // coset representative (least element) for every group element
        let reps: Vec<usize> = group
            .elements()
            .map(|x| {
                stabilizer
                    .members()
                    .iter()
                    .map(|&h| group.index_of(group.add(x, h)))
                    .min()
                    .expect("subgroups are non-empty")
            })
            .collect();
        let mut distinct = reps.clone();
        distinct.sort_unstable();
        distinct.dedup();
        debug_assert_eq!(distinct.len(), orbit.size);
        let point_of = |x| offset + distinct.binary_search(&reps[group.index_of(x)]).unwrap();
        for &rep in &distinct {
            let x = group.element_at(rep);
            let here = point_of(x);
            alpha[here] = point_of(group.add(x, group.alpha()));
            beta[here] = point_of(group.add(x, group.beta()));
        }
        offset += orbit.size;
    }
    Ok((
        Permutation::from_images(alpha)?,
        Permutation::from_images(beta)?,
    ))
}
