//! Finite topological spaces, read as the powerset interior algebra `P(X)`.
//!
//! Specialization convention, used throughout the crate: `x ⊑ y` iff
//! `x ∈ cl{y}`, equivalently `y ∈ minopen(x)` where `minopen(x)` is the
//! intersection of all opens containing `x`. Opens are the `⊑`-up-sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::element::{join_all, meet_all, ElementSet, MAX_POINTS};
use crate::error::{MtError, Result, TopologyDefect};

/// Spaces up to this many points carry a full `a ↦ □a` table.
const TABLE_POINTS: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinSpace {
    n: usize,
    /// Sorted canonically, deduplicated.
    opens: Vec<ElementSet>,
    min_open: Vec<ElementSet>,
    interior_table: Option<Vec<ElementSet>>,
}

impl FinSpace {
    /// Validates `opens` as a topology on `n` points.
    pub fn new(n: usize, opens: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(MtError::BoundExceeded { n, max: MAX_POINTS });
        }
        let full = ElementSet::full(n);
        let set: BTreeSet<ElementSet> = opens.into_iter().collect();
        if let Some(bad) = set.iter().find(|o| !o.is_subset(full)) {
            return Err(MtError::NotATopology(TopologyDefect::OutOfRange(*bad)));
        }
        if !set.contains(&ElementSet::EMPTY) {
            return Err(MtError::NotATopology(TopologyDefect::MissingEmpty));
        }
        if !set.contains(&full) {
            return Err(MtError::NotATopology(TopologyDefect::MissingFull));
        }
        let opens: Vec<ElementSet> = set.iter().copied().collect();
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i + 1..] {
                if !set.contains(&a.union(b)) {
                    return Err(MtError::NotATopology(TopologyDefect::UnionEscapes(a, b)));
                }
                if !set.contains(&a.intersection(b)) {
                    return Err(MtError::NotATopology(TopologyDefect::IntersectionEscapes(a, b)));
                }
            }
        }
        let space = Self::from_validated(n, opens);
        if n <= 5 {
            assert_eq!(space.kuratowski_violation(), None, "derived interior breaks Kuratowski laws");
        }
        Ok(space)
    }

    fn from_validated(n: usize, opens: Vec<ElementSet>) -> Self {
        let min_open = (0..n)
            .map(|x| meet_all(n, opens.iter().copied().filter(|o| o.contains(x))))
            .collect();
        let mut space = FinSpace {
            n,
            opens,
            min_open,
            interior_table: None,
        };
        if n <= TABLE_POINTS {
            space.interior_table = Some(ElementSet::all(n).map(|a| space.interior_by_scan(a)).collect());
        }
        space
    }

    /// The space whose opens are the up-sets of a preorder, given as
    /// `leq(x, y)` meaning `x ⊑ y`. The relation must be reflexive and
    /// transitive.
    pub fn from_preorder(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(MtError::BoundExceeded { n, max: MAX_POINTS });
        }
        let ups: Vec<ElementSet> = (0..n)
            .map(|x| ElementSet::from_points((0..n).filter(|&y| leq(x, y))))
            .collect();
        // Opens are unions of principal up-sets.
        let mut opens = BTreeSet::from([ElementSet::EMPTY]);
        for up in &ups {
            let current: Vec<ElementSet> = opens.iter().copied().collect();
            for o in current {
                opens.insert(o.union(*up));
            }
        }
        Self::new(n, opens)
    }

    pub fn discrete(n: usize) -> Self {
        Self::new(n, ElementSet::all(n)).expect("powerset is a topology")
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::new(n, [ElementSet::EMPTY, ElementSet::full(n)]).expect("trivial topology")
    }

    /// Two points, opens `∅, {1}, {0,1}`.
    pub fn sierpinski() -> Self {
        Self::new(2, [0, 2, 3].map(ElementSet::from_bits)).expect("Sierpiński topology")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn opens(&self) -> &[ElementSet] {
        &self.opens
    }

    /// Complements of the opens, sorted canonically.
    pub fn closeds(&self) -> Vec<ElementSet> {
        let mut c: Vec<ElementSet> = self.opens.iter().map(|o| o.complement(self.n)).collect();
        c.sort();
        c
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementSet> {
        ElementSet::all(self.n)
    }

    pub fn carrier_size(&self) -> usize {
        1 << self.n
    }

    pub fn is_open(&self, a: ElementSet) -> bool {
        self.opens.binary_search(&a).is_ok()
    }

    pub fn is_closed(&self, a: ElementSet) -> bool {
        self.is_open(a.complement(self.n))
    }

    pub fn complement(&self, a: ElementSet) -> ElementSet {
        a.complement(self.n)
    }

    /// Smallest open containing `x`.
    pub fn min_open(&self, x: usize) -> ElementSet {
        self.min_open[x]
    }

    /// `x ⊑ y` iff `x ∈ cl{y}`.
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.min_open[x].contains(y)
    }

    /// `□a`: the largest open contained in `a`.
    pub fn interior(&self, a: ElementSet) -> ElementSet {
        match &self.interior_table {
            Some(t) => t[a.bits() as usize],
            None => self.interior_by_preorder(a),
        }
    }

    /// `◇a = ¬□¬a`.
    pub fn closure(&self, a: ElementSet) -> ElementSet {
        self.complement(self.interior(self.complement(a)))
    }

    /// `□a` as the join of all opens below `a`.
    pub fn interior_by_scan(&self, a: ElementSet) -> ElementSet {
        join_all(self.opens.iter().copied().filter(|o| o.is_subset(a)))
    }

    /// `□a = {x | minopen(x) ⊆ a}`.
    pub fn interior_by_preorder(&self, a: ElementSet) -> ElementSet {
        ElementSet::from_points((0..self.n).filter(|&x| self.min_open[x].is_subset(a)))
    }

    /// `◇a` as the meet of all closed elements above `a`.
    pub fn closure_by_closed_sets(&self, a: ElementSet) -> ElementSet {
        meet_all(self.n, self.closeds().into_iter().filter(|c| a.is_subset(*c)))
    }

    /// First counterexample to `□1=1`, `□(a∧b)=□a∧□b`, `□a≤a`, `□a≤□□a`.
    pub fn kuratowski_violation(&self) -> Option<(&'static str, ElementSet, ElementSet)> {
        let full = self.full();
        if self.interior(full) != full {
            return Some(("top", full, full));
        }
        for a in self.elements() {
            let ia = self.interior(a);
            if !ia.is_subset(a) {
                return Some(("deflationary", a, a));
            }
            if !ia.is_subset(self.interior(ia)) {
                return Some(("idempotent", a, a));
            }
            for b in self.elements() {
                if self.interior(a.intersection(b)) != ia.intersection(self.interior(b)) {
                    return Some(("meet", a, b));
                }
            }
        }
        None
    }

    /// Canonical identifier: the sorted opens as hexadecimal bitmasks.
    pub fn canonical_id(&self) -> String {
        let parts: Vec<String> = self.opens.iter().map(|o| format!("{:x}", o.bits())).collect();
        format!("n{}:{}", self.n, parts.join(","))
    }

    /// A homeomorphism `self → other` (as a point map), if one exists.
    ///
    /// Finite topologies are determined by their specialization preorders,
    /// so a bijection is a homeomorphism iff it preserves and reflects `⊑`.
    pub fn find_homeomorphism(&self, other: &FinSpace) -> Option<Vec<usize>> {
        if self.n != other.n || self.opens.len() != other.opens.len() {
            return None;
        }
        let sig = |s: &FinSpace, x: usize| (s.min_open[x].len(), s.closure(ElementSet::singleton(x)).len());
        let mine: Vec<_> = (0..self.n).map(|x| sig(self, x)).collect();
        let theirs: Vec<_> = (0..other.n).map(|x| sig(other, x)).collect();
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        fn go(
            x: usize,
            a: &FinSpace,
            b: &FinSpace,
            mine: &[(usize, usize)],
            theirs: &[(usize, usize)],
            image: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if x == a.n {
                return true;
            }
            for y in 0..b.n {
                if used[y] || mine[x] != theirs[y] {
                    continue;
                }
                let consistent = (0..x).all(|z| {
                    a.specializes(z, x) == b.specializes(image[z], y)
                        && a.specializes(x, z) == b.specializes(y, image[z])
                });
                if !consistent {
                    continue;
                }
                image[x] = y;
                used[y] = true;
                if go(x + 1, a, b, mine, theirs, image, used) {
                    return true;
                }
                used[y] = false;
            }
            false
        }
        if !go(0, self, other, &mine, &theirs, &mut image, &mut used) {
            return None;
        }
        debug_assert!(self.is_homeomorphism(other, &image));
        Some(image)
    }

    /// Whether the point bijection `map` carries the opens of `self` exactly
    /// onto the opens of `other`.
    pub fn is_homeomorphism(&self, other: &FinSpace, map: &[usize]) -> bool {
        if map.len() != self.n || self.n != other.n {
            return false;
        }
        let mut seen = vec![false; other.n];
        for &y in map {
            if y >= other.n || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        let mut images: Vec<ElementSet> = self.opens.iter().map(|o| o.map(|x| map[x])).collect();
        images.sort();
        images == other.opens
    }

    /// The same space with points renamed by the bijection `perm`
    /// (old point `x` becomes `perm[x]`).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let opens: Vec<ElementSet> = self.opens.iter().map(|o| o.map(|x| perm[x])).collect();
        Self::new(self.n, opens).expect("relabelling preserves topologies")
    }
}

impl fmt::Debug for FinSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinSpace").field("n", &self.n).field("opens", &self.opens).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[usize]) -> ElementSet {
        ElementSet::from_points(points.iter().copied())
    }

    #[test]
    fn validate_examples() {
        let sierp = FinSpace::new(2, [set(&[]), set(&[1]), set(&[0, 1])]).unwrap();
        assert_eq!(sierp, FinSpace::sierpinski());
        let disc = FinSpace::new(2, [set(&[]), set(&[0]), set(&[1]), set(&[0, 1])]).unwrap();
        assert_eq!(disc, FinSpace::discrete(2));
        assert_eq!(
            FinSpace::new(2, [set(&[]), set(&[0])]),
            Err(MtError::NotATopology(TopologyDefect::MissingFull))
        );
    }

    #[test]
    fn validate_rejects_escapes() {
        let err = FinSpace::new(3, [set(&[]), set(&[0]), set(&[1]), set(&[0, 1, 2])]).unwrap_err();
        assert_eq!(err, MtError::NotATopology(TopologyDefect::UnionEscapes(set(&[0]), set(&[1]))));
        let err = FinSpace::new(3, [set(&[]), set(&[0, 1]), set(&[1, 2]), set(&[0, 1, 2])]).unwrap_err();
        assert_eq!(
            err,
            MtError::NotATopology(TopologyDefect::IntersectionEscapes(set(&[0, 1]), set(&[1, 2])))
        );
        assert!(matches!(FinSpace::new(2, [set(&[]), set(&[0, 1]), set(&[2])]), Err(MtError::NotATopology(TopologyDefect::OutOfRange(_)))));
        assert_eq!(FinSpace::new(25, []), Err(MtError::BoundExceeded { n: 25, max: 24 }));
    }

    #[test]
    fn interior_examples() {
        let s = FinSpace::sierpinski();
        assert_eq!(s.interior(set(&[0])), set(&[]));
        assert_eq!(s.interior(set(&[1])), set(&[1]));
        let d = FinSpace::discrete(2);
        for a in d.elements() {
            assert_eq!(d.interior(a), a);
        }
    }

    #[test]
    fn closure_examples() {
        let s = FinSpace::sierpinski();
        assert_eq!(s.closure(set(&[1])), set(&[0, 1]));
        assert_eq!(s.closure(set(&[0])), set(&[0]));
        assert_eq!(s.closure(ElementSet::EMPTY), ElementSet::EMPTY);
        for a in s.elements() {
            assert_eq!(s.closure(a), s.closure_by_closed_sets(a));
        }
    }

    #[test]
    fn specialization_convention() {
        // In Sierpiński space 0 ∈ cl{1}.
        let s = FinSpace::sierpinski();
        assert!(s.specializes(0, 1));
        assert!(!s.specializes(1, 0));
        assert_eq!(s.min_open(0), set(&[0, 1]));
        assert_eq!(s.min_open(1), set(&[1]));
    }

    #[test]
    fn from_preorder_matches_direct() {
        let s = FinSpace::from_preorder(2, |x, y| x == y || (x == 0 && y == 1)).unwrap();
        assert_eq!(s, FinSpace::sierpinski());
        assert_eq!(FinSpace::from_preorder(3, |_, _| true).unwrap(), FinSpace::indiscrete(3));
    }

    #[test]
    fn large_space_uses_preorder_path() {
        let s = FinSpace::from_preorder(14, |x, y| x <= y).unwrap();
        assert_eq!(s.opens().len(), 15);
        let a = ElementSet::from_points([3, 10, 11, 12, 13]);
        assert_eq!(s.interior(a), ElementSet::from_points([10, 11, 12, 13]));
        assert_eq!(s.interior(a), s.interior_by_scan(a));
    }

    #[test]
    fn canonical_id_is_hex() {
        assert_eq!(FinSpace::sierpinski().canonical_id(), "n2:0,2,3");
        assert_eq!(FinSpace::discrete(4).canonical_id().rsplit(',').next(), Some("f"));
    }

    #[test]
    fn homeomorphism_search() {
        let s = FinSpace::sierpinski();
        let flipped = s.relabel(&[1, 0]);
        assert_ne!(s, flipped);
        let h = s.find_homeomorphism(&flipped).unwrap();
        assert_eq!(h, vec![1, 0]);
        assert!(s.is_homeomorphism(&flipped, &h));
        assert_eq!(s.find_homeomorphism(&FinSpace::discrete(2)), None);
        assert_eq!(s.find_homeomorphism(&FinSpace::indiscrete(2)), None);
    }

    #[test]
    fn empty_space() {
        let e = FinSpace::new(0, [ElementSet::EMPTY]).unwrap();
        assert_eq!(e.opens().len(), 1);
        assert_eq!(e.interior(ElementSet::EMPTY), ElementSet::EMPTY);
    }
}
