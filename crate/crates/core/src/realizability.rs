//! Which cycle types of an automorphism of `K_n` (`n > 6`) are induced by an
//! orientation-preserving diffeomorphism of order `m` of some embedding of
//! `K_n` in `S^3`.
//!
//! An order-`m` automorphism is realizable exactly when one of four shapes
//! holds:
//!
//! 1. `m > 2` even, every cycle has length `m`, no fixed vertices;
//! 2. `m = 2`, every cycle has length 2, at most two fixed vertices;
//! 3. `m` odd, every cycle has length `m`, at most three fixed vertices;
//! 4. `m > 3` an odd multiple of 3, every cycle has length `m` except exactly
//!    one 3-cycle, no fixed vertices ("type 4").

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::perm::CycleType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizabilityError {
    #[error("realizability is only characterized for n > 6 (got n = {n})")]
    UnsupportedRange { n: usize },
    #[error("order m = {m} is not a non-trivial order (m >= 2 required)")]
    InvalidOrder { m: u64 },
    #[error("cycle type {cycle_type} has order {actual}, not m = {m}")]
    Inconsistent {
        cycle_type: String,
        actual: u64,
        m: u64,
    },
}

/// The clause of the characterization an automorphism satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    EvenOrder,
    Involution,
    OddOrder,
    Type4,
}

impl Condition {
    pub fn number(self) -> u8 {
        match self {
            Condition::EvenOrder => 1,
            Condition::Involution => 2,
            Condition::OddOrder => 3,
            Condition::Type4 => 4,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl Serialize for Condition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.number())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizabilityVerdict {
    pub realizable: bool,
    pub condition: Option<Condition>,
    pub reason: String,
}

impl RealizabilityVerdict {
    fn yes(condition: Condition) -> Self {
        RealizabilityVerdict {
            realizable: true,
            condition: Some(condition),
            reason: format!("matches condition {condition}"),
        }
    }

    fn no(reason: String) -> Self {
        RealizabilityVerdict {
            realizable: false,
            condition: None,
            reason,
        }
    }
}

fn validate(ct: &CycleType, m: u64) -> Result<(), RealizabilityError> {
    if ct.n() <= 6 {
        return Err(RealizabilityError::UnsupportedRange { n: ct.n() });
    }
    if m < 2 {
        return Err(RealizabilityError::InvalidOrder { m });
    }
    let actual = ct.order();
    if actual != m {
        return Err(RealizabilityError::Inconsistent {
            cycle_type: ct.to_string(),
            actual,
            m,
        });
    }
    Ok(())
}

fn is_type4_shape(ct: &CycleType, m: u64) -> bool {
    let m_len = m as usize;
    m % 2 == 1
        && m.is_multiple_of(3)
        && m > 3
        && ct.fixed() == 0
        && ct.count_of(3) == 1
        && ct.cycles().iter().all(|&c| c == m_len || c == 3)
}

pub fn check(ct: &CycleType, m: u64) -> Result<RealizabilityVerdict, RealizabilityError> {
    validate(ct, m)?;
    let m_len = m as usize;
    let uniform = ct.cycles().iter().all(|&c| c == m_len);
    let fixed = ct.fixed();

    if uniform {
        let verdict = if m == 2 {
            if fixed <= 2 {
                RealizabilityVerdict::yes(Condition::Involution)
            } else {
                RealizabilityVerdict::no(format!(
                    "an involution fixes at most two vertices, this one fixes {fixed}"
                ))
            }
        } else if m.is_multiple_of(2) {
            if fixed == 0 {
                RealizabilityVerdict::yes(Condition::EvenOrder)
            } else {
                RealizabilityVerdict::no(format!(
                    "an automorphism of even order {m} > 2 fixes no vertices, this one fixes {fixed}"
                ))
            }
        } else if fixed <= 3 {
            RealizabilityVerdict::yes(Condition::OddOrder)
        } else {
            RealizabilityVerdict::no(format!(
                "an automorphism of odd order {m} fixes at most three vertices, this one fixes {fixed}"
            ))
        };
        return Ok(verdict);
    }

    if is_type4_shape(ct, m) {
        return Ok(RealizabilityVerdict::yes(Condition::Type4));
    }

    let odd_lengths: Vec<usize> = ct.cycles().iter().copied().filter(|&c| c != m_len).collect();
    let reason = if m % 2 == 1 && m.is_multiple_of(3) && m > 3 && odd_lengths.iter().all(|&c| c == 3) {
        if odd_lengths.len() > 1 {
            format!(
                "{} cycles of length 3 alongside cycles of length {m}; at most one is allowed",
                odd_lengths.len()
            )
        } else {
            format!("one 3-cycle alongside {m}-cycles requires no fixed vertices, found {fixed}")
        }
    } else {
        format!(
            "cycle lengths {:?} are not all equal to m = {m} (and do not form the 3-cycle exception)",
            ct.cycles()
        )
    };
    Ok(RealizabilityVerdict::no(reason))
}

pub fn is_type4(ct: &CycleType, m: u64) -> Result<bool, RealizabilityError> {
    Ok(check(ct, m)?.condition == Some(Condition::Type4))
}

/// Every cycle type on `n` points that is realizable with order `m`,
/// constructed directly from the four shapes, sorted by fixed count and then
/// by cycle multiset.
pub fn realizable_cycle_types(n: usize, m: u64) -> Result<Vec<CycleType>, RealizabilityError> {
    if n <= 6 {
        return Err(RealizabilityError::UnsupportedRange { n });
    }
    if m < 2 {
        return Err(RealizabilityError::InvalidOrder { m });
    }
    let m_len = m as usize;
    let max_fixed = match m {
        2 => 2,
        _ if m.is_multiple_of(2) => 0,
        _ => 3,
    };
    let mut out = Vec::new();
    for fixed in 0..=max_fixed.min(n) {
        let moved = n - fixed;
        if moved > 0 && moved.is_multiple_of(m_len) {
            let ct = CycleType::new(n, vec![m_len; moved / m_len], fixed)
                .expect("lengths sum to n");
            out.push(ct);
        }
    }
    if m % 2 == 1 && m.is_multiple_of(3) && m > 3 && n >= 3 + m_len && (n - 3).is_multiple_of(m_len) {
        let mut cycles = vec![m_len; (n - 3) / m_len];
        cycles.push(3);
        out.push(CycleType::new(n, cycles, 0).expect("lengths sum to n"));
    }
    out.sort_by(|a, b| a.fixed().cmp(&b.fixed()).then_with(|| a.cycles().cmp(b.cycles())));
    Ok(out)
}
