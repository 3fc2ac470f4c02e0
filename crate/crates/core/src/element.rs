use std::fmt;

/// Largest supported point count; one characteristic vector fits a `u32`.
pub const MAX_POINTS: usize = 24;

/// A subset of the points `0..n`, stored as its characteristic vector.
///
/// The owning space supplies `n`; operations that need it (complement,
/// full set) take it explicitly. Ordering is the numeric order of the
/// vector, which is the canonical order used for every listing and witness.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        ElementSet(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(x: usize) -> Self {
        ElementSet(1 << x)
    }

    pub fn from_points(points: impl IntoIterator<Item = usize>) -> Self {
        ElementSet(points.into_iter().fold(0, |acc, x| acc | 1 << x))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ElementSet) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSet) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElementSet) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        ElementSet(!self.0 & Self::full(n).0)
    }

    pub fn with(self, x: usize) -> Self {
        ElementSet(self.0 | 1 << x)
    }

    pub fn points(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |x| bits >> x & 1 == 1)
    }

    /// Every subset of the `n`-point carrier in canonical order.
    pub fn all(n: usize) -> impl Iterator<Item = ElementSet> {
        (0..1u64 << n).map(|b| ElementSet(b as u32))
    }

    /// Every subset of `self` in canonical order.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> {
        let top = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == top { None } else { Some(cur.wrapping_sub(top) & top) };
            Some(ElementSet(cur))
        })
    }

    /// Image under a point map.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Self {
        ElementSet::from_points(self.points().map(f))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.points().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Union of a family (the empty union is `∅`).
pub fn join_all(items: impl IntoIterator<Item = ElementSet>) -> ElementSet {
    items.into_iter().fold(ElementSet::EMPTY, ElementSet::union)
}

/// Intersection of a family inside the `n`-point carrier (the empty meet is
/// the full set).
pub fn meet_all(n: usize, items: impl IntoIterator<Item = ElementSet>) -> ElementSet {
    items.into_iter().fold(ElementSet::full(n), ElementSet::intersection)
}
