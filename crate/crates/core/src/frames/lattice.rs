use crate::bits::Relation;
use crate::error::{LatticeDefect, MtError, Result};

/// An explicit finite bounded lattice on the ids `0..size`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    size: usize,
    leq: Relation,
    meet: Vec<usize>,
    join: Vec<usize>,
    bot: usize,
    top: usize,
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("size", &self.size)
            .field("bot", &self.bot)
            .field("top", &self.top)
            .field("leq", &self.leq)
            .finish()
    }
}

/// Validates the order given as the list of pairs `(i, j)` with `i ≤ j`.
pub fn validate_lattice(size: usize, pairs: &[(usize, usize)]) -> Result<FiniteLattice> {
    if let Some(&(i, j)) = pairs.iter().find(|(i, j)| *i >= size || *j >= size) {
        return Err(MtError::NotALattice(LatticeDefect::OutOfRange(i, j)));
    }
    let mut leq = Relation::empty(size);
    for &(i, j) in pairs {
        leq.set(i, j, true);
    }
    FiniteLattice::from_relation(leq)
}

impl FiniteLattice {
    pub fn from_leq(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        Self::from_relation(Relation::from_fn(size, leq))
    }

    pub fn from_relation(leq: Relation) -> Result<Self> {
        let size = leq.size();
        let bad = |d| Err(MtError::NotALattice(d));
        if size == 0 {
            return bad(LatticeDefect::Empty);
        }
        if let Some(x) = (0..size).find(|&x| !leq.holds(x, x)) {
            return bad(LatticeDefect::NotReflexive(x));
        }
        for x in 0..size {
            for y in 0..size {
                if x != y && leq.holds(x, y) && leq.holds(y, x) {
                    return bad(LatticeDefect::NotAntisymmetric(x, y));
                }
                if !leq.holds(x, y) {
                    continue;
                }
                if let Some(z) = leq.row(y).iter().find(|&z| !leq.holds(x, z)) {
                    return bad(LatticeDefect::NotTransitive(x, y, z));
                }
            }
        }
        let mut meet = vec![0; size * size];
        let mut join = vec![0; size * size];
        for x in 0..size {
            for y in 0..size {
                let lower: Vec<usize> = (0..size).filter(|&z| leq.holds(z, x) && leq.holds(z, y)).collect();
                match lower.iter().find(|&&g| lower.iter().all(|&z| leq.holds(z, g))) {
                    Some(&g) => meet[x * size + y] = g,
                    None => return bad(LatticeDefect::NoMeet(x, y)),
                }
                let upper: Vec<usize> = (0..size).filter(|&z| leq.holds(x, z) && leq.holds(y, z)).collect();
                match upper.iter().find(|&&l| upper.iter().all(|&z| leq.holds(l, z))) {
                    Some(&l) => join[x * size + y] = l,
                    None => return bad(LatticeDefect::NoJoin(x, y)),
                }
            }
        }
        let bot = (0..size).find(|&b| (0..size).all(|x| leq.holds(b, x)));
        let top = (0..size).find(|&t| (0..size).all(|x| leq.holds(x, t)));
        // A finite lattice always has bounds; these only fail for size 0.
        let (bot, top) = (bot.expect("finite lattice has a bottom"), top.expect("finite lattice has a top"));
        Ok(FiniteLattice {
            size,
            leq,
            meet,
            join,
            bot,
            top,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.holds(a, b)
    }

    pub fn order(&self) -> &Relation {
        &self.leq
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.bot, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// The full order relation as sorted pairs.
    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        self.leq.pairs().collect()
    }

    /// Nonzero elements that are not the join of two strictly smaller ones.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| a != self.bot)
            .filter(|&a| {
                let below: Vec<usize> = self.elements().filter(|&b| b != a && self.leq(b, a)).collect();
                !below
                    .iter()
                    .any(|&b| below.iter().any(|&c| self.join(b, c) == a))
            })
            .collect()
    }

    /// Non-top elements that are not the meet of two strictly bigger ones.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| a != self.top)
            .filter(|&a| {
                let above: Vec<usize> = self.elements().filter(|&b| b != a && self.leq(a, b)).collect();
                !above
                    .iter()
                    .any(|&b| above.iter().any(|&c| self.meet(b, c) == a))
            })
            .collect()
    }

    /// Least triple `(a, b, c)` with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_failure(&self) -> Option<(usize, usize, usize)> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// An order isomorphism `self → other` as an id map, if one exists.
    pub fn find_isomorphism(&self, other: &FiniteLattice) -> Option<Vec<usize>> {
        if self.size != other.size {
            return None;
        }
        let sig = |l: &FiniteLattice, x: usize| {
            let down = l.elements().filter(|&y| l.leq(y, x)).count();
            let up = l.elements().filter(|&y| l.leq(x, y)).count();
            (down, up)
        };
        let mine: Vec<_> = self.elements().map(|x| sig(self, x)).collect();
        let theirs: Vec<_> = other.elements().map(|x| sig(other, x)).collect();
        let mut image = vec![usize::MAX; self.size];
        let mut used = vec![false; self.size];
        fn go(
            x: usize,
            a: &FiniteLattice,
            b: &FiniteLattice,
            mine: &[(usize, usize)],
            theirs: &[(usize, usize)],
            image: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if x == a.size {
                return true;
            }
            for y in 0..b.size {
                if used[y] || mine[x] != theirs[y] {
                    continue;
                }
                let consistent = (0..x).all(|z| {
                    a.leq(z, x) == b.leq(image[z], y) && a.leq(x, z) == b.leq(y, image[z])
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
        go(0, self, other, &mine, &theirs, &mut image, &mut used).then_some(image)
    }

    /// Whether `map: self → other` is an order isomorphism.
    pub fn is_isomorphism(&self, other: &FiniteLattice, map: &[usize]) -> bool {
        if map.len() != self.size || self.size != other.size {
            return false;
        }
        let mut seen = vec![false; other.size];
        for &y in map {
            if y >= other.size || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        self.elements()
            .all(|a| self.elements().all(|b| self.leq(a, b) == other.leq(map[a], map[b])))
    }
}
