//! Labeled topologies on `n` points.
//!
//! Finite topologies correspond to preorders (through specialization), and a
//! preorder on `0..=k` restricts uniquely to one on `0..k`. So each preorder
//! is produced exactly once by adding point `k` with a down-closed set `D`
//! of points below it and an up-closed set `U` above it, subject to
//! `x ⊑ y` for all `x ∈ D`, `y ∈ U`.

use crate::element::ElementSet;
use crate::error::{MtError, Result};
use crate::space::FinSpace;

/// Hard ceiling for exhaustive enumeration (`n = 7` already has about
/// ten million labeled topologies).
pub const ENUMERATION_CEILING: usize = 6;

/// Subset-family enumeration is used only as an oracle on tiny `n`.
pub const ORACLE_CEILING: usize = 4;

/// All preorders on `n` points as up-set rows: bit `y` of `rows[x]` means `x ⊑ y`.
pub fn preorders(n: usize) -> Result<Vec<Vec<u32>>> {
    if n > ENUMERATION_CEILING {
        return Err(MtError::BoundExceeded {
            n,
            max: ENUMERATION_CEILING,
        });
    }
    let mut level: Vec<Vec<u32>> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for rows in &level {
            for d in 0u32..1 << k {
                // D must be down-closed: x ⊑ z ∈ D ⇒ x ∈ D.
                if (0..k).any(|x| d >> x & 1 == 0 && rows[x] & d != 0) {
                    continue;
                }
                for u in 0u32..1 << k {
                    // U up-closed: U ∋ y ⊑ z ⇒ z ∈ U.
                    if (0..k).any(|y| u >> y & 1 == 1 && rows[y] & !u != 0) {
                        continue;
                    }
                    if (0..k).any(|x| d >> x & 1 == 1 && u & !rows[x] != 0) {
                        continue;
                    }
                    let mut grown: Vec<u32> = (0..k)
                        .map(|x| rows[x] | if d >> x & 1 == 1 { 1 << k } else { 0 })
                        .collect();
                    grown.push(u | 1 << k);
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Every topology on `n` labeled points, sorted by canonical id.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FinSpace>> {
    let mut spaces: Vec<FinSpace> = preorders(n)?
        .into_iter()
        .map(|rows| FinSpace::from_preorder(n, |x, y| rows[x] >> y & 1 == 1).expect("preorder"))
        .collect();
    spaces.sort_by(|a, b| a.opens().cmp(b.opens()));
    Ok(spaces)
}

/// Oracle: filter every family of subsets for the topology axioms.
pub fn enumerate_by_subset_families(n: usize) -> Result<Vec<FinSpace>> {
    if n > ORACLE_CEILING {
        return Err(MtError::BoundExceeded { n, max: ORACLE_CEILING });
    }
    let full = ElementSet::full(n);
    let middle: Vec<ElementSet> = ElementSet::all(n).filter(|&s| !s.is_empty() && s != full).collect();
    let mut out = Vec::new();
    for pick in 0u64..1 << middle.len() {
        let mut fam: Vec<ElementSet> = vec![ElementSet::EMPTY, full];
        fam.extend((0..middle.len()).filter(|i| pick >> i & 1 == 1).map(|i| middle[i]));
        let closed = fam.iter().all(|&a| {
            fam.iter()
                .all(|&b| fam.contains(&a.union(b)) && fam.contains(&a.intersection(b)))
        });
        if closed {
            out.push(FinSpace::new(n, fam).expect("checked above"));
        }
    }
    out.sort_by(|a, b| a.opens().cmp(b.opens()));
    Ok(out)
}
