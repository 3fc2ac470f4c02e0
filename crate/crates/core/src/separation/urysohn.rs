use crate::element::ElementSet;
use crate::error::{MtError, Result};
use crate::space::FinSpace;

use super::{interpolate, mt_rather, normality_failure};

pub const DEFAULT_URYSOHN_DEPTH: u32 = 4;

/// Open elements `u_p` for the dyadic `p = k / 2^depth` in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UrysohnFamily {
    pub depth: u32,
    /// `members[k]` is `u_{k / 2^depth}`.
    pub members: Vec<ElementSet>,
}

impl UrysohnFamily {
    pub fn index(&self, k: usize) -> (usize, usize) {
        (k, 1 << self.depth)
    }

    pub fn at(&self, k: usize) -> ElementSet {
        self.members[k]
    }

    /// The first broken requirement: `c ≤ u_0`, `u_1 ≤ a`, every member
    /// open, and `u_p ⊲ u_q` for all `p < q`.
    pub fn violation(&self, m: &FinSpace, c: ElementSet, a: ElementSet) -> Option<String> {
        let last = self.members.len() - 1;
        if !c.is_subset(self.members[0]) {
            return Some(format!("{c} is not below u_0 = {}", self.members[0]));
        }
        if !self.members[last].is_subset(a) {
            return Some(format!("u_1 = {} is not below {a}", self.members[last]));
        }
        if let Some(k) = (0..=last).find(|&k| !m.is_open(self.members[k])) {
            return Some(format!("u_{k}/{} is not open", last));
        }
        for p in 0..=last {
            for q in p + 1..=last {
                if !mt_rather(m, self.members[p], self.members[q]) {
                    return Some(format!("u_{p}/{last} is not rather below u_{q}/{last}"));
                }
            }
        }
        None
    }
}

/// Builds the family by interpolating `c ⊲ u_0 ⊲ u_1 = a` and then between
/// neighbours, one dyadic level at a time.
pub fn urysohn_family(m: &FinSpace, c: ElementSet, a: ElementSet, depth: u32) -> Result<UrysohnFamily> {
    if normality_failure(m).is_some() {
        return Err(MtError::NotNormal);
    }
    let pre = |msg: String| Err(MtError::PreconditionViolated(msg));
    if depth == 0 {
        return pre("depth must be at least 1".into());
    }
    if depth > 16 {
        return pre(format!("depth {depth} is larger than supported"));
    }
    if !m.is_closed(c) {
        return pre(format!("{c} is not closed"));
    }
    if !m.is_open(a) {
        return pre(format!("{a} is not open"));
    }
    if !c.is_subset(a) {
        return pre(format!("{c} is not below {a}"));
    }
    let mut members = vec![interpolate(m, c, a)?, a];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(2 * members.len() - 1);
        for w in members.windows(2) {
            next.push(w[0]);
            next.push(interpolate(m, w[0], w[1])?);
        }
        next.push(*members.last().expect("nonempty"));
        members = next;
    }
    let family = UrysohnFamily { depth, members };
    debug_assert_eq!(family.violation(m, c, a), None);
    Ok(family)
}
