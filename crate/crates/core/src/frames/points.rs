use crate::bits::BitSet;
use crate::element::{ElementSet, MAX_POINTS};
use crate::error::{MtError, Result};
use crate::space::FinSpace;

use super::FiniteFrame;

/// A completely prime filter, as the set of element ids it contains.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FramePoint {
    pub filter: BitSet,
}

impl FramePoint {
    pub fn contains(&self, a: usize) -> bool {
        self.filter.contains(a)
    }
}

/// Whether `set` is a completely prime filter of `l`.
///
/// On a finite frame complete primeness is `0 ∉ F` (the empty join) plus
/// binary primeness, since every join is a finite join.
pub fn is_completely_prime_filter(l: &FiniteFrame, set: &BitSet) -> bool {
    if !set.contains(l.top()) || set.contains(l.bot()) {
        return false;
    }
    for a in set.iter() {
        if l.elements().any(|b| l.leq(a, b) && !set.contains(b)) {
            return false;
        }
        if set.iter().any(|b| !set.contains(l.meet(a, b))) {
            return false;
        }
    }
    l.elements().all(|a| {
        l.elements()
            .all(|b| !set.contains(l.join(a, b)) || set.contains(a) || set.contains(b))
    })
}

/// Points through meet-irreducibles: `m ↦ {a | a ≰ m}`.
pub fn points(l: &FiniteFrame) -> Vec<FramePoint> {
    let mut pts: Vec<FramePoint> = l
        .meet_irreducibles()
        .into_iter()
        .map(|m| FramePoint {
            filter: BitSet::from_indices(l.size(), l.elements().filter(|&a| !l.leq(a, m))),
        })
        .collect();
    pts.sort();
    debug_assert!(pts.iter().all(|p| is_completely_prime_filter(l, &p.filter)));
    pts
}

/// Points by testing every subset of elements. Exponential in the frame
/// size; intended for frames with at most 16 elements.
pub fn points_by_filters(l: &FiniteFrame) -> Vec<FramePoint> {
    assert!(l.size() <= 16, "brute-force filter enumeration is limited to 16 elements");
    let mut pts: Vec<FramePoint> = (0u32..1 << l.size())
        .map(|pick| BitSet::from_indices(l.size(), (0..l.size()).filter(|i| pick >> i & 1 == 1)))
        .filter(|s| is_completely_prime_filter(l, s))
        .map(|filter| FramePoint { filter })
        .collect();
    pts.sort();
    pts
}

/// `pt(L)` with the topology `ζ[L]`, `ζ(a) = {p | a ∈ p}`. Returns the space
/// together with `ζ` as a table indexed by element id.
pub fn pt_space(l: &FiniteFrame) -> Result<(FinSpace, Vec<ElementSet>)> {
    let pts = points(l);
    if pts.len() > MAX_POINTS {
        return Err(MtError::BoundExceeded {
            n: pts.len(),
            max: MAX_POINTS,
        });
    }
    let zeta: Vec<ElementSet> = l
        .elements()
        .map(|a| ElementSet::from_points((0..pts.len()).filter(|&i| pts[i].contains(a))))
        .collect();
    let space = FinSpace::new(pts.len(), zeta.iter().copied())?;
    Ok((space, zeta))
}

/// A map preserving finite meets and all joins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameHom {
    source: FiniteFrame,
    target: FiniteFrame,
    map: Vec<usize>,
}

impl FrameHom {
    pub fn new(source: &FiniteFrame, target: &FiniteFrame, map: Vec<usize>) -> Result<FrameHom> {
        let fail = |msg: String| Err(MtError::NotAFrameHom(msg));
        if map.len() != source.size() {
            return fail(format!("expected {} images, got {}", source.size(), map.len()));
        }
        if let Some(&y) = map.iter().find(|&&y| y >= target.size()) {
            return fail(format!("image {y} outside target"));
        }
        if map[source.top()] != target.top() {
            return fail("top not preserved".into());
        }
        if map[source.bot()] != target.bot() {
            return fail("bottom not preserved".into());
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.meet(a, b)] != target.meet(map[a], map[b]) {
                    return fail(format!("meet of {a} and {b} not preserved"));
                }
                if map[source.join(a, b)] != target.join(map[a], map[b]) {
                    return fail(format!("join of {a} and {b} not preserved"));
                }
            }
        }
        Ok(FrameHom {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(l: &FiniteFrame) -> FrameHom {
        FrameHom {
            source: l.clone(),
            target: l.clone(),
            map: l.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteFrame {
        &self.source
    }

    pub fn target(&self) -> &FiniteFrame {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `h*(x) = ⋀{a | x ≤ h(a)}`.
    pub fn left_adjoint(&self, x: usize) -> usize {
        self.source
            .meet_all(self.source.elements().filter(|&a| self.target.leq(x, self.map[a])))
    }
}

/// `pt(h)(p) = h⁻¹[p]`, as a map from points of the target to points of the
/// source (indices into [`points`]). Continuity against the `ζ`-opens is
/// checked.
pub fn apply_pt(h: &FrameHom) -> Result<Vec<usize>> {
    let src_pts = points(h.source());
    let tgt_pts = points(h.target());
    let mut out = Vec::with_capacity(tgt_pts.len());
    for p in &tgt_pts {
        let pre = BitSet::from_indices(h.source().size(), h.source().elements().filter(|&a| p.contains(h.apply(a))));
        let idx = src_pts
            .iter()
            .position(|q| q.filter == pre)
            .expect("preimage of a completely prime filter is completely prime");
        out.push(idx);
    }
    let (src_space, _) = pt_space(h.source())?;
    let (tgt_space, _) = pt_space(h.target())?;
    crate::morphism::check_mt_morphism(&src_space, &tgt_space, &out)?;
    Ok(out)
}
