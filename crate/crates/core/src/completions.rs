//! MacNeille completion of finite posets, the Boolean envelope of a finite
//! distributive lattice, the lower extension of an interior operator from a
//! Boolean subalgebra, and the MT-algebra built from a finite frame.
//!
//! For a finite distributive `L` the completed envelope is the powerset of
//! the join-irreducibles `J(L)`, with `L` sitting inside as the down-sets
//! `e(a) = {j ∈ J(L) | j ≤ a}`. [`mt_from_frame`] takes that shortcut;
//! [`mt_from_frame_generic`] goes the long way through points, the generated
//! Boolean algebra, [`macneille`] and [`lower_extension`], and exists to be
//! compared with the shortcut.

use std::collections::BTreeSet;

use crate::bits::{BitSet, Relation};
use crate::element::{join_all, ElementSet, MAX_POINTS};
use crate::error::{LatticeDefect, MtError, Result};
use crate::family::generated_complete_boolean;
use crate::frames::{pt_space, validate_frame, FiniteFrame, FiniteLattice};
use crate::space::FinSpace;

/// A finite partial order on `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinPoset {
    leq: Relation,
}

impl FinPoset {
    /// Validates the order given as the full list of pairs `(i, j)`, `i ≤ j`.
    pub fn new(size: usize, pairs: &[(usize, usize)]) -> Result<FinPoset> {
        if let Some(&(i, j)) = pairs.iter().find(|(i, j)| *i >= size || *j >= size) {
            return Err(MtError::NotAPoset(LatticeDefect::OutOfRange(i, j)));
        }
        let mut leq = Relation::empty(size);
        for &(i, j) in pairs {
            leq.set(i, j, true);
        }
        Self::from_relation(leq)
    }

    pub fn from_leq(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<FinPoset> {
        Self::from_relation(Relation::from_fn(size, leq))
    }

    pub fn from_relation(leq: Relation) -> Result<FinPoset> {
        let size = leq.size();
        let bad = |d| Err(MtError::NotAPoset(d));
        if let Some(x) = (0..size).find(|&x| !leq.holds(x, x)) {
            return bad(LatticeDefect::NotReflexive(x));
        }
        for x in 0..size {
            for y in leq.row(x).iter() {
                if x != y && leq.holds(y, x) {
                    return bad(LatticeDefect::NotAntisymmetric(x, y));
                }
                if let Some(z) = leq.row(y).iter().find(|&z| !leq.holds(x, z)) {
                    return bad(LatticeDefect::NotTransitive(x, y, z));
                }
            }
        }
        Ok(FinPoset { leq })
    }

    pub fn of_lattice(l: &FiniteLattice) -> FinPoset {
        FinPoset { leq: l.order().clone() }
    }

    pub fn size(&self) -> usize {
        self.leq.size()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq.holds(x, y)
    }

    pub fn order(&self) -> &Relation {
        &self.leq
    }

    pub fn down(&self, x: usize) -> BitSet {
        BitSet::from_indices(self.size(), (0..self.size()).filter(|&y| self.leq(y, x)))
    }

    /// Common upper bounds of `a`.
    pub fn upper(&self, a: &BitSet) -> BitSet {
        BitSet::from_indices(self.size(), (0..self.size()).filter(|&y| a.iter().all(|x| self.leq(x, y))))
    }

    /// Common lower bounds of `b`.
    pub fn lower(&self, b: &BitSet) -> BitSet {
        BitSet::from_indices(self.size(), (0..self.size()).filter(|&x| b.iter().all(|y| self.leq(x, y))))
    }

    /// Least element of `a`, if it has one.
    fn least(&self, a: &BitSet) -> Option<usize> {
        a.iter().find(|&x| a.iter().all(|y| self.leq(x, y)))
    }

    fn greatest(&self, a: &BitSet) -> Option<usize> {
        a.iter().find(|&x| a.iter().all(|y| self.leq(y, x)))
    }
}

/// The lattice of cuts of a poset together with `x ↦ ↓x`.
#[derive(Debug, Clone)]
pub struct Completion {
    /// Element ids of `lattice` index into `cuts`.
    pub lattice: FiniteLattice,
    /// Each cut stored as its lower set, sorted.
    pub cuts: Vec<BitSet>,
    /// `embedding[x]` is the id of `↓x`.
    pub embedding: Vec<usize>,
}

/// MacNeille completion. The cuts `lower(upper(A))` are exactly the
/// intersections of principal down-sets (the empty intersection being the
/// whole poset), which is how they are generated here.
pub fn macneille(p: &FinPoset) -> Completion {
    let m = p.size();
    let mut cuts: BTreeSet<BitSet> = BTreeSet::from([BitSet::full(m)]);
    for x in 0..m {
        let dx = p.down(x);
        let current: Vec<BitSet> = cuts.iter().cloned().collect();
        for c in current {
            let mut meet = c;
            meet.intersect_with(&dx);
            cuts.insert(meet);
        }
    }
    let cuts: Vec<BitSet> = cuts.into_iter().collect();
    debug_assert!(cuts.iter().all(|c| &p.lower(&p.upper(c)) == c));
    let lattice = FiniteLattice::from_leq(cuts.len(), |i, j| cuts[i].is_subset(&cuts[j]))
        .expect("cuts form a complete lattice");
    let embedding = (0..m)
        .map(|x| {
            let dx = p.down(x);
            cuts.binary_search(&dx).expect("principal down-sets are cuts")
        })
        .collect();
    let completion = Completion {
        lattice,
        cuts,
        embedding,
    };
    if m <= 8 {
        assert!(completion.preserves_existing_bounds(p), "MacNeille embedding lost a join or meet");
    }
    completion
}

impl Completion {
    /// Whether every join and meet that exists in `p` (of any subset) is
    /// carried to the corresponding join and meet of cuts. Exponential in
    /// the poset size.
    pub fn preserves_existing_bounds(&self, p: &FinPoset) -> bool {
        let m = p.size();
        let l = &self.lattice;
        (0u64..1 << m).all(|pick| {
            let s = BitSet::from_indices(m, (0..m).filter(|i| pick >> i & 1 == 1));
            let image = || s.iter().map(|x| self.embedding[x]);
            let join_ok = match p.least(&p.upper(&s)) {
                Some(j) => self.embedding[j] == l.join_all(image()),
                None => true,
            };
            let meet_ok = match p.greatest(&p.lower(&s)) {
                Some(g) => self.embedding[g] == l.meet_all(image()),
                None => true,
            };
            join_ok && meet_ok
        })
    }
}

/// `B(L)` realized as the powerset of `J(L)`.
#[derive(Debug, Clone)]
pub struct Envelope {
    frame: FiniteFrame,
    join_irreducibles: Vec<usize>,
    /// The powerset of `J(L)` with opens `e[L]`.
    carrier: FinSpace,
    embed: Vec<ElementSet>,
}

pub fn boolean_envelope(l: &FiniteLattice) -> Result<Envelope> {
    let frame = validate_frame(l.clone())?;
    let js = frame.join_irreducibles();
    if js.len() > MAX_POINTS {
        return Err(MtError::BoundExceeded {
            n: js.len(),
            max: MAX_POINTS,
        });
    }
    let embed: Vec<ElementSet> = frame
        .elements()
        .map(|a| ElementSet::from_points((0..js.len()).filter(|&i| frame.leq(js[i], a))))
        .collect();
    let carrier = FinSpace::new(js.len(), embed.iter().copied())
        .expect("down-sets of join-irreducibles are closed under union and intersection");
    let env = Envelope {
        frame,
        join_irreducibles: js,
        carrier,
        embed,
    };
    debug_assert!(env.is_lattice_embedding());
    Ok(env)
}

impl Envelope {
    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    /// Point `i` of the carrier is the join-irreducible `join_irreducibles()[i]`.
    pub fn join_irreducibles(&self) -> &[usize] {
        &self.join_irreducibles
    }

    pub fn carrier(&self) -> &FinSpace {
        &self.carrier
    }

    pub fn embed(&self, a: usize) -> ElementSet {
        self.embed[a]
    }

    pub fn embedding(&self) -> &[ElementSet] {
        &self.embed
    }

    /// Largest `b` in `L` with `e(b) ⊆ s`.
    pub fn retract(&self, s: ElementSet) -> usize {
        self.frame
            .join_all(self.frame.elements().filter(|&b| self.embed[b].is_subset(s)))
    }

    /// `□s = e(⋁{b | e(b) ⊆ s})`.
    pub fn box_op(&self, s: ElementSet) -> ElementSet {
        self.embed[self.retract(s)]
    }

    pub fn fixpoints(&self) -> Vec<ElementSet> {
        self.carrier.elements().filter(|&s| self.box_op(s) == s).collect()
    }

    /// `e` is injective and preserves bounds, binary meets and binary joins.
    pub fn is_lattice_embedding(&self) -> bool {
        let l = &self.frame;
        let distinct: BTreeSet<ElementSet> = self.embed.iter().copied().collect();
        distinct.len() == l.size()
            && self.embed[l.bot()] == ElementSet::EMPTY
            && self.embed[l.top()] == self.carrier.full()
            && l.elements().all(|a| {
                l.elements().all(|b| {
                    self.embed[l.meet(a, b)] == self.embed[a].intersection(self.embed[b])
                        && self.embed[l.join(a, b)] == self.embed[a].union(self.embed[b])
                })
            })
    }

    /// Brute-force check of the universal property against the Boolean
    /// algebras `2^k`, `k ≤ max_k`: every bounded lattice homomorphism
    /// `h: L → 2^k` equals `g ∘ e` for exactly one Boolean homomorphism
    /// `g: P(J) → 2^k`. Returns a description of the first failure.
    ///
    /// Boolean homomorphisms `P(J) → 2^k` are the preimage maps of functions
    /// `k → J`, so both sides are enumerated outright.
    pub fn universal_property_failure(&self, max_k: usize) -> Option<String> {
        let l = &self.frame;
        let nj = self.join_irreducibles.len();
        for k in 0..=max_k {
            let target = 1usize << k;
            let homs = bounded_homs_into_powerset(l, k);
            // Each g is given by f: k → J, g(S) = {i | f(i) ∈ S}.
            let gs: Vec<Vec<usize>> = if nj == 0 && k > 0 {
                Vec::new()
            } else {
                (0..nj.pow(k as u32))
                    .map(|code| (0..k).map(|i| code / nj.pow(i as u32) % nj.max(1)).collect())
                    .collect()
            };
            for h in &homs {
                let factorizations = gs
                    .iter()
                    .filter(|f| {
                        l.elements().all(|a| {
                            let ga = (0..k).filter(|&i| self.embed[a].contains(f[i])).fold(0, |acc, i| acc | 1 << i);
                            ga == h[a]
                        })
                    })
                    .count();
                if factorizations != 1 {
                    return Some(format!(
                        "hom {h:?} into 2^{k} has {factorizations} factorizations (target size {target})"
                    ));
                }
            }
        }
        None
    }
}

/// All maps `L → 2^k` (subsets of `0..k` as bitmasks) preserving bounds and
/// binary meets and joins.
fn bounded_homs_into_powerset(l: &FiniteLattice, k: usize) -> Vec<Vec<usize>> {
    let full = (1usize << k) - 1;
    let mut out = Vec::new();
    let mut h = vec![0usize; l.size()];
    fn go(a: usize, l: &FiniteLattice, full: usize, h: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if a == l.size() {
            let hom = l.elements().all(|x| {
                l.elements()
                    .all(|y| h[l.meet(x, y)] == h[x] & h[y] && h[l.join(x, y)] == h[x] | h[y])
            });
            if hom {
                out.push(h.clone());
            }
            return;
        }
        for v in 0..=full {
            if a == l.bot() && v != 0 || a == l.top() && v != full {
                continue;
            }
            h[a] = v;
            let ok = (0..=a).all(|b| {
                let (m, j) = (l.meet(a, b), l.join(a, b));
                (m > a || h[m] == h[a] & h[b]) && (j > a || h[j] == h[a] | h[b])
            });
            if ok {
                go(a + 1, l, full, h, out);
            }
        }
    }
    go(0, l, full, &mut h, &mut out);
    out
}

/// The MT-algebra `overline{B(L)}` on the points `J(L)` with opens `e[L]`,
/// plus the isomorphism `L → O(result)` as indices into `result.opens()`.
pub fn mt_from_frame(l: &FiniteFrame) -> Result<(FinSpace, Vec<usize>)> {
    let env = boolean_envelope(l.lattice())?;
    let space = env.carrier.clone();
    let iso: Vec<usize> = l
        .elements()
        .map(|a| space.opens().binary_search(&env.embed[a]).expect("e(a) is open"))
        .collect();
    assert!(
        l.elements()
            .all(|a| l.elements().all(|b| l.leq(a, b) == env.embed[a].is_subset(env.embed[b]))),
        "e is not an order embedding"
    );
    assert_eq!(space.opens().len(), l.size(), "e[L] is not all of O");
    Ok((space, iso))
}

/// Upper bound on the number of points accepted by [`mt_from_frame_generic`].
pub const GENERIC_MAX_POINTS: usize = 8;

/// `overline{B(L)}` built without the join-irreducible shortcut: represent
/// `L` on its points, close under the Boolean operations, complete with
/// [`macneille`], then extend `□` with [`lower_extension`] and read the
/// result off on the atoms of the completion.
pub fn mt_from_frame_generic(l: &FiniteFrame) -> Result<FinSpace> {
    let (pt, zeta) = pt_space(l)?;
    let k = pt.n();
    if k > GENERIC_MAX_POINTS {
        return Err(MtError::BoundExceeded {
            n: k,
            max: GENERIC_MAX_POINTS,
        });
    }
    let boolean = generated_complete_boolean(&zeta, &FinSpace::discrete(k));
    let box_b = |x: ElementSet| zeta[l.join_all(l.elements().filter(|&b| zeta[b].is_subset(x)))];

    let poset = FinPoset::from_leq(boolean.len(), |i, j| boolean[i].is_subset(boolean[j]))?;
    let completion = macneille(&poset);
    let c = &completion.lattice;
    let atoms: Vec<usize> = c
        .elements()
        .filter(|&a| a != c.bot() && c.elements().all(|b| b == a || b == c.bot() || !c.leq(b, a)))
        .collect();
    let as_set =
        |cut: usize| ElementSet::from_points((0..atoms.len()).filter(|&i| c.leq(atoms[i], cut)));
    if c.size() != 1 << atoms.len() || c.elements().map(as_set).collect::<BTreeSet<_>>().len() != c.size() {
        return Err(MtError::PreconditionViolated("completion is not atomic Boolean".into()));
    }
    let transport = |i: usize| as_set(completion.embedding[i]);
    let sub: Vec<ElementSet> = (0..boolean.len()).map(transport).collect();
    let box_t = |s: ElementSet| {
        let i = sub.iter().position(|&t| t == s).expect("argument lies in the subalgebra");
        let img = box_b(boolean[i]);
        transport(boolean.binary_search(&img).expect("box lands in the subalgebra"))
    };
    lower_extension(atoms.len(), &sub, box_t)
}

/// Extends an interior operator `box` on the Boolean subalgebra `sub` of the
/// powerset of `n` points to the whole powerset by
/// `□x = ⋁{box(a) | a ∈ sub, a ⊆ x}`. The extension is returned as the space
/// whose opens are its fixpoints.
pub fn lower_extension(
    n: usize,
    sub: &[ElementSet],
    boxf: impl Fn(ElementSet) -> ElementSet,
) -> Result<FinSpace> {
    if n > MAX_POINTS {
        return Err(MtError::BoundExceeded { n, max: MAX_POINTS });
    }
    let full = ElementSet::full(n);
    let set: BTreeSet<ElementSet> = sub.iter().copied().collect();
    let fail = |msg: String| Err(MtError::PreconditionViolated(msg));
    if !set.contains(&ElementSet::EMPTY) || !set.contains(&full) {
        return fail("subalgebra lacks a bound".into());
    }
    for &a in &set {
        if !a.is_subset(full) {
            return fail(format!("{a} is outside the ambient algebra"));
        }
        if !set.contains(&a.complement(n)) {
            return fail(format!("complement of {a} missing from the subalgebra"));
        }
        if let Some(b) = set.iter().find(|b| !set.contains(&a.union(**b))) {
            return fail(format!("union of {a} and {b} missing from the subalgebra"));
        }
    }
    let boxed: Vec<(ElementSet, ElementSet)> = set.iter().map(|&a| (a, boxf(a))).collect();
    let lookup = |a: ElementSet| boxed[set.iter().position(|&s| s == a).expect("member")].1;
    let not_interior = |msg: String| Err(MtError::NotAnInteriorOperator(msg));
    if lookup(full) != full {
        return not_interior("box does not fix the top".into());
    }
    for &(a, ba) in &boxed {
        if !set.contains(&ba) {
            return not_interior(format!("box{a} = {ba} leaves the subalgebra"));
        }
        if !ba.is_subset(a) {
            return not_interior(format!("box{a} = {ba} is not below {a}"));
        }
        if lookup(ba) != ba {
            return not_interior(format!("box is not idempotent at {a}"));
        }
        for &(b, bb) in &boxed {
            if lookup(a.intersection(b)) != ba.intersection(bb) {
                return not_interior(format!("box does not preserve the meet of {a} and {b}"));
            }
        }
    }
    let space = FinSpace::new(n, boxed.iter().map(|&(_, ba)| ba))?;
    let extension =
        |x: ElementSet| join_all(boxed.iter().filter(|(a, _)| a.is_subset(x)).map(|&(_, ba)| ba));
    if n <= 10 {
        assert!(space.elements().all(|x| space.interior(x) == extension(x)));
    }
    debug_assert!(boxed.iter().all(|&(a, ba)| space.interior(a) == ba));
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn es(bits: u32) -> ElementSet {
        ElementSet::from_bits(bits)
    }

    #[test]
    fn macneille_of_antichain() {
        let p = FinPoset::from_leq(2, |x, y| x == y).unwrap();
        let c = macneille(&p);
        // Cuts by hand: ∅, ↓a, ↓b, everything.
        let expected: Vec<BitSet> = vec![
            BitSet::new(2),
            BitSet::from_indices(2, [0]),
            BitSet::from_indices(2, [1]),
            BitSet::full(2),
        ];
        let mut got = c.cuts.clone();
        got.sort();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
        let boolean = FiniteFrame::boolean(2);
        assert!(c.lattice.find_isomorphism(boolean.lattice()).is_some());
    }

    #[test]
    fn macneille_of_lattice_and_empty() {
        let c3 = FiniteFrame::chain(3);
        let c = macneille(&FinPoset::of_lattice(&c3));
        assert!(c.lattice.find_isomorphism(&c3).is_some());
        let empty = macneille(&FinPoset::from_leq(0, |_, _| true).unwrap());
        assert_eq!(empty.lattice.size(), 1);
        assert!(empty.embedding.is_empty());
    }

    #[test]
    fn macneille_is_idempotent() {
        // A crown-free poset with no top: a < c, b < c, b < d.
        let p = FinPoset::from_leq(4, |x, y| x == y || matches!((x, y), (0, 2) | (1, 2) | (1, 3))).unwrap();
        let once = macneille(&p);
        let twice = macneille(&FinPoset::of_lattice(&once.lattice));
        assert!(once.lattice.find_isomorphism(&twice.lattice).is_some());
        assert!(once.preserves_existing_bounds(&p));
    }

    #[test]
    fn poset_validation() {
        assert_eq!(
            FinPoset::new(2, &[(0, 0)]),
            Err(MtError::NotAPoset(LatticeDefect::NotReflexive(1)))
        );
        assert!(FinPoset::new(2, &[(0, 0), (1, 1)]).is_ok());
    }

    #[test]
    fn envelope_of_three_chain() {
        let env = boolean_envelope(FiniteFrame::chain(3).lattice()).unwrap();
        assert_eq!(env.join_irreducibles(), &[1, 2]);
        // e(0) = ∅, e(m) = {m}, e(1) = {m, 1}.
        assert_eq!(env.embedding(), &[es(0), es(1), es(3)]);
        assert_eq!(env.carrier().opens(), &[es(0), es(1), es(3)]);
        assert!(env.carrier().find_homeomorphism(&FinSpace::sierpinski()).is_some());
        assert_eq!(env.fixpoints(), env.carrier().opens().to_vec());
        for s in env.carrier().elements() {
            assert_eq!(env.box_op(s), env.carrier().interior(s));
        }
        assert_eq!(env.universal_property_failure(2), None);
    }

    #[test]
    fn envelope_of_boolean_is_bijective() {
        for k in 0..=3 {
            let b = FiniteFrame::boolean(k);
            let env = boolean_envelope(b.lattice()).unwrap();
            assert_eq!(env.carrier().opens().len(), 1 << env.carrier().n());
            assert_eq!(env.carrier(), &FinSpace::discrete(k));
            assert_eq!(env.universal_property_failure(2), None);
        }
        let two = boolean_envelope(FiniteFrame::chain(2).lattice()).unwrap();
        assert_eq!(two.carrier().n(), 1);
    }

    #[test]
    fn envelope_rejects_non_distributive() {
        let m3 = FiniteLattice::from_leq(5, |x, y| x == y || x == 0 || y == 4).unwrap();
        assert!(matches!(boolean_envelope(&m3), Err(MtError::NotDistributive { .. })));
    }

    #[test]
    fn mt_from_frame_examples() {
        let (s, iso) = mt_from_frame(&FiniteFrame::chain(3)).unwrap();
        assert!(s.find_homeomorphism(&FinSpace::sierpinski()).is_some());
        assert_eq!(iso, vec![0, 1, 2]);
        let (d, _) = mt_from_frame(&FiniteFrame::boolean(2)).unwrap();
        assert_eq!(d, FinSpace::discrete(2));
        let (p, _) = mt_from_frame(&FiniteFrame::chain(2)).unwrap();
        assert_eq!(p.n(), 1);
        let (e, _) = mt_from_frame(&FiniteFrame::chain(1)).unwrap();
        assert_eq!(e.n(), 0);
    }

    #[test]
    fn frame_embedding_preserves_all_joins() {
        // 0 < 1 < {2, 3} < 4
        let diamond_over_chain =
            FiniteLattice::from_leq(5, |x, y| x == y || x < 2 && x <= y || y == 4).unwrap();
        let l = validate_frame(diamond_over_chain).unwrap();
        let env = boolean_envelope(l.lattice()).unwrap();
        for pick in 0u32..1 << l.size() {
            let s: Vec<usize> = (0..l.size()).filter(|i| pick >> i & 1 == 1).collect();
            let j = l.join_all(s.iter().copied());
            assert_eq!(env.embed(j), join_all(s.iter().map(|&a| env.embed(a))));
        }
        assert!(env.is_lattice_embedding());
        assert_eq!(env.universal_property_failure(2), None);
    }

    #[test]
    fn generic_pipeline_matches_shortcut() {
        let frames = [
            FiniteFrame::chain(1),
            FiniteFrame::chain(2),
            FiniteFrame::chain(3),
            FiniteFrame::chain(5),
            FiniteFrame::boolean(2),
            FiniteFrame::boolean(3),
        ];
        for l in frames {
            let (short, _) = mt_from_frame(&l).unwrap();
            let long = mt_from_frame_generic(&l).unwrap();
            assert!(short.find_homeomorphism(&long).is_some(), "{l:?}");
        }
    }

    #[test]
    fn lower_extension_examples() {
        // Whole algebra: the extension is the given operator.
        let s = FinSpace::sierpinski();
        let all: Vec<ElementSet> = s.elements().collect();
        let ext = lower_extension(2, &all, |a| s.interior(a)).unwrap();
        assert_eq!(ext, s);
        // Envelope of the 3-chain: □{1} = ∅, point 1 being the top.
        let env = boolean_envelope(FiniteFrame::chain(3).lattice()).unwrap();
        let all: Vec<ElementSet> = env.carrier().elements().collect();
        let ext = lower_extension(2, &all, |a| env.box_op(a)).unwrap();
        assert_eq!(ext.interior(es(2)), ElementSet::EMPTY);
        // Identity on {∅, X} extends to the indiscrete interior.
        let ext = lower_extension(3, &[es(0), es(7)], |a| a).unwrap();
        assert_eq!(ext, FinSpace::indiscrete(3));
        for x in ext.elements() {
            let want = if x == es(7) { x } else { ElementSet::EMPTY };
            assert_eq!(ext.interior(x), want);
        }
    }

    #[test]
    fn lower_extension_on_proper_subalgebra() {
        // Subalgebra {∅, {0}, {1,2}, X} of P(3) with box = id.
        let sub = [es(0), es(1), es(6), es(7)];
        let ext = lower_extension(3, &sub, |a| a).unwrap();
        assert_eq!(ext.opens(), &sub);
        assert_eq!(ext.interior(es(3)), es(1));
        assert_eq!(ext.interior(es(2)), ElementSet::EMPTY);
    }

    #[test]
    fn lower_extension_rejects_bad_input() {
        assert!(matches!(
            lower_extension(2, &[es(0), es(1), es(3)], |a| a),
            Err(MtError::PreconditionViolated(_))
        ));
        let all: Vec<ElementSet> = ElementSet::all(2).collect();
        assert!(matches!(
            lower_extension(2, &all, |a| a.complement(2)),
            Err(MtError::NotAnInteriorOperator(_))
        ));
    }
}
