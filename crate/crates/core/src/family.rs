//! Distinguished element families of a powerset interior algebra, the
//! Heyting/co-Heyting structure on opens/closeds, and generation checks.

use std::collections::BTreeSet;
use std::fmt;

use crate::element::{join_all, meet_all, ElementSet};
use crate::error::{MtError, Result};
use crate::space::FinSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Open,
    Closed,
    Saturated,
    Cosaturated,
    /// Locally closed: `u ∧ c` with `u` open, `c` closed.
    Lc,
    /// Co-locally closed: `c ∨ u`.
    Lo,
    /// Weakly locally closed: `s ∧ c` with `s` saturated.
    Wlc,
    /// Weakly co-locally closed: `s ∨ u` with `s` co-saturated.
    Wlo,
    /// Approximated from below by regular opens.
    Go,
    /// Approximated from above by regular closeds.
    Gc,
    /// Regular open: `b = □◇b`.
    Ro,
    /// Regular closed: `c = ◇□c`.
    Rc,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 12] = [
        FamilyKind::Open,
        FamilyKind::Closed,
        FamilyKind::Saturated,
        FamilyKind::Cosaturated,
        FamilyKind::Lc,
        FamilyKind::Lo,
        FamilyKind::Wlc,
        FamilyKind::Wlo,
        FamilyKind::Go,
        FamilyKind::Gc,
        FamilyKind::Ro,
        FamilyKind::Rc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Open => "OPEN",
            FamilyKind::Closed => "CLOSED",
            FamilyKind::Saturated => "SATURATED",
            FamilyKind::Cosaturated => "COSATURATED",
            FamilyKind::Lc => "LC",
            FamilyKind::Lo => "LO",
            FamilyKind::Wlc => "WLC",
            FamilyKind::Wlo => "WLO",
            FamilyKind::Go => "GO",
            FamilyKind::Gc => "GC",
            FamilyKind::Ro => "RO",
            FamilyKind::Rc => "RC",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A computed family; `members` is deduplicated and canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementFamily {
    pub kind: FamilyKind,
    pub members: Vec<ElementSet>,
}

impl ElementFamily {
    pub fn contains(&self, a: ElementSet) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

fn sorted(items: impl IntoIterator<Item = ElementSet>) -> Vec<ElementSet> {
    items.into_iter().collect::<BTreeSet<_>>().into_iter().collect()
}

/// Closes `seed` under a binary operation, adding `unit` for the empty case.
fn close_under(
    seed: impl IntoIterator<Item = ElementSet>,
    unit: ElementSet,
    op: impl Fn(ElementSet, ElementSet) -> ElementSet,
) -> BTreeSet<ElementSet> {
    let mut out = BTreeSet::from([unit]);
    let mut work: Vec<ElementSet> = seed.into_iter().collect();
    while let Some(x) = work.pop() {
        if !out.insert(x) {
            continue;
        }
        let existing: Vec<ElementSet> = out.iter().copied().collect();
        for y in existing {
            let z = op(x, y);
            if !out.contains(&z) {
                work.push(z);
            }
        }
    }
    out
}

fn products(
    left: &[ElementSet],
    right: &[ElementSet],
    op: impl Fn(ElementSet, ElementSet) -> ElementSet,
) -> Vec<ElementSet> {
    sorted(left.iter().flat_map(|&l| right.iter().map(move |&r| (l, r))).map(|(l, r)| op(l, r)))
}

/// Computes `kind` for `m` directly from its definition.
pub fn family(m: &FinSpace, kind: FamilyKind) -> ElementFamily {
    let n = m.n();
    let members = match kind {
        FamilyKind::Open => m.opens().to_vec(),
        FamilyKind::Closed => m.closeds(),
        FamilyKind::Saturated => close_under(m.opens().iter().copied(), m.full(), ElementSet::intersection)
            .into_iter()
            .collect(),
        FamilyKind::Cosaturated => close_under(m.closeds(), ElementSet::EMPTY, ElementSet::union)
            .into_iter()
            .collect(),
        FamilyKind::Lc => products(m.opens(), &m.closeds(), ElementSet::intersection),
        FamilyKind::Lo => products(&m.closeds(), m.opens(), ElementSet::union),
        FamilyKind::Wlc => products(
            &family(m, FamilyKind::Saturated).members,
            &m.closeds(),
            ElementSet::intersection,
        ),
        FamilyKind::Wlo => products(
            &family(m, FamilyKind::Cosaturated).members,
            m.opens(),
            ElementSet::union,
        ),
        FamilyKind::Ro => sorted(
            m.opens()
                .iter()
                .copied()
                .filter(|&b| m.interior(m.closure(b)) == b),
        ),
        FamilyKind::Rc => sorted(m.closeds().into_iter().filter(|&c| m.closure(m.interior(c)) == c)),
        FamilyKind::Go => sorted(m.elements().filter(|&a| {
            let approx = join_all(
                m.elements()
                    .filter(|&b| m.closure(b).is_subset(a))
                    .map(|b| m.interior(m.closure(b))),
            );
            approx == a
        })),
        FamilyKind::Gc => sorted(m.elements().filter(|&a| {
            let approx = meet_all(
                n,
                m.elements()
                    .filter(|&c| a.is_subset(m.interior(c)))
                    .map(|c| m.closure(m.interior(c))),
            );
            approx == a
        })),
    };
    ElementFamily { kind, members }
}

/// First element of `m` that is not the join of the members of `s` below
/// it, in canonical order.
pub fn join_generation_failure(s: &[ElementSet], m: &FinSpace) -> Option<ElementSet> {
    m.elements()
        .find(|&a| join_all(s.iter().copied().filter(|x| x.is_subset(a))) != a)
}

/// First element of `m` that is not the meet of the members of `s` above it.
pub fn meet_generation_failure(s: &[ElementSet], m: &FinSpace) -> Option<ElementSet> {
    m.elements()
        .find(|&a| meet_all(m.n(), s.iter().copied().filter(|x| a.is_subset(*x))) != a)
}

pub fn join_generates(s: &[ElementSet], m: &FinSpace) -> bool {
    join_generation_failure(s, m).is_none()
}

pub fn meet_generates(s: &[ElementSet], m: &FinSpace) -> bool {
    meet_generation_failure(s, m).is_none()
}

/// Closure of `s` under complement and arbitrary union.
pub fn generated_complete_boolean(s: &[ElementSet], m: &FinSpace) -> Vec<ElementSet> {
    let n = m.n();
    let mut out: BTreeSet<ElementSet> = BTreeSet::new();
    let mut work: Vec<ElementSet> = s.to_vec();
    work.push(ElementSet::EMPTY);
    while let Some(x) = work.pop() {
        if !out.insert(x) {
            continue;
        }
        work.push(x.complement(n));
        let existing: Vec<ElementSet> = out.iter().copied().collect();
        for y in existing {
            let z = x.union(y);
            if !out.contains(&z) {
                work.push(z);
            }
        }
    }
    out.into_iter().collect()
}

/// Closure of `s` under arbitrary union and arbitrary intersection.
pub fn generated_complete_lattice(s: &[ElementSet], m: &FinSpace) -> Vec<ElementSet> {
    let mut out: BTreeSet<ElementSet> = BTreeSet::new();
    let mut work: Vec<ElementSet> = s.to_vec();
    work.extend([ElementSet::EMPTY, m.full()]);
    while let Some(x) = work.pop() {
        if !out.insert(x) {
            continue;
        }
        let existing: Vec<ElementSet> = out.iter().copied().collect();
        for y in existing {
            for z in [x.union(y), x.intersection(y)] {
                if !out.contains(&z) {
                    work.push(z);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// `a → b = □(¬a ∨ b)` on open elements.
pub fn heyting_impl(m: &FinSpace, a: ElementSet, b: ElementSet) -> Result<ElementSet> {
    for x in [a, b] {
        if !m.is_open(x) {
            return Err(MtError::NotOpen(x));
        }
    }
    Ok(m.interior(m.complement(a).union(b)))
}

/// `a ← b = ◇(b ∧ ¬a)` on closed elements.
pub fn coheyting_diff(m: &FinSpace, a: ElementSet, b: ElementSet) -> Result<ElementSet> {
    for x in [a, b] {
        if !m.is_closed(x) {
            return Err(MtError::NotClosed(x));
        }
    }
    Ok(m.closure(b.intersection(m.complement(a))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[usize]) -> ElementSet {
        ElementSet::from_points(points.iter().copied())
    }

    fn sets(items: &[&[usize]]) -> Vec<ElementSet> {
        let mut v: Vec<ElementSet> = items.iter().map(|p| set(p)).collect();
        v.sort();
        v
    }

    /// Brute-force oracle for LC: every (open, closed) pair.
    fn lc_oracle(m: &FinSpace) -> Vec<ElementSet> {
        let mut out = BTreeSet::new();
        for &u in m.opens() {
            for c in m.elements().filter(|&c| m.is_closed(c)) {
                out.insert(u.intersection(c));
            }
        }
        out.into_iter().collect()
    }

    /// Oracle for saturated elements: meets of every subfamily of opens.
    fn saturated_oracle(m: &FinSpace) -> Vec<ElementSet> {
        let opens = m.opens();
        let mut out = BTreeSet::new();
        for pick in 0u64..1 << opens.len() {
            let chosen = (0..opens.len()).filter(|i| pick >> i & 1 == 1).map(|i| opens[i]);
            out.insert(meet_all(m.n(), chosen));
        }
        out.into_iter().collect()
    }

    #[test]
    fn sierpinski_lc_and_saturated() {
        let s = FinSpace::sierpinski();
        let lc = family(&s, FamilyKind::Lc).members;
        assert_eq!(lc, lc_oracle(&s));
        assert_eq!(lc, sets(&[&[], &[0], &[1], &[0, 1]]));
        let sat = family(&s, FamilyKind::Saturated).members;
        assert_eq!(sat, saturated_oracle(&s));
        assert_eq!(sat, sets(&[&[], &[1], &[0, 1]]));
    }

    #[test]
    fn discrete_gc_is_everything() {
        let d = FinSpace::discrete(2);
        // Direct evaluation of the GC definition: in a discrete space ◇□c = c.
        for a in d.elements() {
            let approx = meet_all(2, d.elements().filter(|&c| a.is_subset(c)));
            assert_eq!(approx, a);
        }
        assert_eq!(family(&d, FamilyKind::Gc).members.len(), 4);
    }

    #[test]
    fn regular_families_of_sierpinski() {
        let s = FinSpace::sierpinski();
        assert_eq!(family(&s, FamilyKind::Ro).members, sets(&[&[], &[0, 1]]));
        assert_eq!(family(&s, FamilyKind::Rc).members, sets(&[&[], &[0, 1]]));
        assert_eq!(family(&s, FamilyKind::Go).members, sets(&[&[], &[0, 1]]));
        assert_eq!(family(&s, FamilyKind::Gc).members, sets(&[&[], &[0, 1]]));
    }

    #[test]
    fn generation_examples() {
        let d = FinSpace::discrete(2);
        let atoms = sets(&[&[0], &[1]]);
        assert!(join_generates(&atoms, &d));
        let s = FinSpace::sierpinski();
        assert!(!join_generates(&[ElementSet::EMPTY], &s));
        let closed = family(&s, FamilyKind::Closed).members;
        assert_eq!(join_generation_failure(&closed, &s), Some(set(&[1])));
        assert!(meet_generates(&family(&d, FamilyKind::Open).members, &d));
        assert_eq!(meet_generation_failure(s.opens(), &s), Some(set(&[0])));
    }

    #[test]
    fn generated_algebras() {
        let s = FinSpace::sierpinski();
        assert_eq!(generated_complete_boolean(s.opens(), &s).len(), 4);
        let t = FinSpace::indiscrete(2);
        assert_eq!(generated_complete_boolean(t.opens(), &t), sets(&[&[], &[0, 1]]));
        let d = FinSpace::discrete(2);
        assert_eq!(generated_complete_boolean(d.opens(), &d).len(), 4);
        assert_eq!(generated_complete_lattice(s.opens(), &s), s.opens().to_vec());
    }

    #[test]
    fn heyting_examples() {
        let s = FinSpace::sierpinski();
        assert_eq!(heyting_impl(&s, set(&[1]), set(&[])).unwrap(), set(&[]));
        for &a in s.opens() {
            assert_eq!(heyting_impl(&s, a, a).unwrap(), s.full());
        }
        let d = FinSpace::discrete(2);
        for a in d.elements() {
            for b in d.elements() {
                assert_eq!(heyting_impl(&d, a, b).unwrap(), a.complement(2).union(b));
            }
        }
        assert_eq!(heyting_impl(&s, set(&[0]), set(&[1])), Err(MtError::NotOpen(set(&[0]))));
        assert_eq!(coheyting_diff(&s, set(&[1]), set(&[0])), Err(MtError::NotClosed(set(&[1]))));
    }

    #[test]
    fn residuation_on_opens() {
        let s = FinSpace::from_preorder(3, |x, y| x <= y).unwrap();
        for &a in s.opens() {
            for &b in s.opens() {
                let imp = heyting_impl(&s, a, b).unwrap();
                assert!(s.is_open(imp));
                for &c in s.opens() {
                    assert_eq!(c.intersection(a).is_subset(b), c.is_subset(imp));
                }
            }
        }
        let closeds = s.closeds();
        for &a in &closeds {
            for &b in &closeds {
                let diff = coheyting_diff(&s, a, b).unwrap();
                assert!(s.is_closed(diff));
                for &c in &closeds {
                    assert_eq!(b.is_subset(a.union(c)), diff.is_subset(c));
                }
            }
        }
    }
}
