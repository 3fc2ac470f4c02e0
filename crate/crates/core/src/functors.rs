//! The functors `P`, `O`, `Ω`, `at`, `pt` at finite scale and the natural
//! maps `η`, `ε`, `ϑ`, `δ`, `ζ`.
//!
//! A [`FinSpace`] is both a space and (through its powerset) an MT-algebra.
//! [`MtAlgebra`] tags the algebra reading so that `at` and `O` are computed
//! from algebra structure (atoms, fixpoints of `□`) rather than read off the
//! space they came from.

use crate::bits::BitSet;
use crate::element::{ElementSet, MAX_POINTS};
use crate::error::{MtError, Result};
use crate::frames::{points, pt_space, validate_frame, FiniteFrame, FiniteLattice, FrameHom};
use crate::morphism::{check_mt_morphism, MtMorphism};
use crate::separation::classical::{is_sober, is_t0};
use crate::separation::{mt_axiom, Axiom};
use crate::space::FinSpace;

/// `P(X)` with its interior operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MtAlgebra {
    carrier: FinSpace,
}

impl MtAlgebra {
    pub fn carrier(&self) -> &FinSpace {
        &self.carrier
    }

    pub fn interior(&self, a: ElementSet) -> ElementSet {
        self.carrier.interior(a)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementSet> {
        self.carrier.elements()
    }

    /// Minimal nonzero elements, canonically sorted.
    pub fn atoms(&self) -> Vec<ElementSet> {
        self.elements()
            .filter(|&a| !a.is_empty() && a.subsets().all(|b| b.is_empty() || b == a))
            .collect()
    }

    /// Fixpoints of `□`, canonically sorted.
    pub fn open_elements(&self) -> Vec<ElementSet> {
        self.elements().filter(|&a| self.interior(a) == a).collect()
    }
}

pub fn functor_p(x: &FinSpace) -> MtAlgebra {
    MtAlgebra { carrier: x.clone() }
}

/// `P(f) = f⁻¹: P(Y) → P(X)` for a continuous `f: X → Y`.
pub fn functor_p_hom(x: &FinSpace, y: &FinSpace, f: &[usize]) -> Result<MtMorphism> {
    check_mt_morphism(y, x, f)
}

fn frame_on(family: &[ElementSet]) -> FiniteFrame {
    let lat = FiniteLattice::from_leq(family.len(), |i, j| family[i].is_subset(family[j]))
        .expect("opens of a finite space form a lattice");
    validate_frame(lat).expect("opens of a finite space form a frame")
}

/// `Ω(X)`: the opens of the space, ordered by inclusion. Element ids index
/// `x.opens()`.
pub fn omega(x: &FinSpace) -> FiniteFrame {
    frame_on(x.opens())
}

/// `O(M)`: the fixpoints of `□`, ordered as in `M`. Returns the frame and
/// the open element behind each id.
pub fn functor_o(m: &MtAlgebra) -> (FiniteFrame, Vec<ElementSet>) {
    let opens = m.open_elements();
    (frame_on(&opens), opens)
}

/// `O(h) = h|O(M): O(M) → O(N)`.
pub fn functor_o_hom(h: &MtMorphism) -> FrameHom {
    let (src, src_opens) = functor_o(&functor_p(h.source()));
    let (tgt, tgt_opens) = functor_o(&functor_p(h.target()));
    let map: Vec<usize> = src_opens
        .iter()
        .map(|&a| {
            let ha = h.apply(a);
            assert_eq!(h.target().interior(ha), ha, "h(□a) = □h(a) fails at open {a}");
            tgt_opens.binary_search(&ha).expect("image of an open is open")
        })
        .collect();
    FrameHom::new(&src, &tgt, map).expect("restriction of an MT-morphism is a frame homomorphism")
}

/// `η(a) = {x ∈ at(M) | x ≤ a}`, points being indices into `atoms`.
fn eta_with(atoms: &[ElementSet], a: ElementSet) -> ElementSet {
    ElementSet::from_points((0..atoms.len()).filter(|&i| atoms[i].is_subset(a)))
}

/// `at(M)`: the atoms with opens `η[O(M)]`.
pub fn functor_at(m: &MtAlgebra) -> FinSpace {
    let atoms = m.atoms();
    FinSpace::new(atoms.len(), m.open_elements().into_iter().map(|u| eta_with(&atoms, u)))
        .expect("η preserves finite meets and joins of opens")
}

/// `at(h): at(N) → at(M)`, `x ↦ h*(x)`, continuity checked.
pub fn functor_at_hom(h: &MtMorphism) -> Result<Vec<usize>> {
    let m = functor_p(h.source());
    let n = functor_p(h.target());
    let (m_atoms, n_atoms) = (m.atoms(), n.atoms());
    let mut map = Vec::with_capacity(n_atoms.len());
    for &x in &n_atoms {
        let image = h.left_adjoint(x);
        let idx = m_atoms
            .iter()
            .position(|&a| a == image)
            .ok_or_else(|| MtError::BadPointMap(format!("h*({x}) = {image} is not an atom")))?;
        map.push(idx);
    }
    check_mt_morphism(&functor_at(&m), &functor_at(&n), &map)?;
    Ok(map)
}

/// The natural maps attached to one finite space `X` (also read as `M = P(X)`
/// and `L = Ω(X)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitMaps {
    /// `η: M → P(at(M))`, indexed by element bitmask.
    pub eta: Vec<ElementSet>,
    /// `ε: X → at(P(X))`, as atom indices.
    pub epsilon: Vec<usize>,
    /// `ϑ: at(M) → pt(O(M))`, as indices into [`points`].
    pub vartheta: Vec<Option<usize>>,
    /// `δ: X → pt(Ω(X))`.
    pub delta: Vec<usize>,
    /// `ζ: L → Ω(pt(L))`, indexed by element id of `L`.
    pub zeta: Vec<ElementSet>,
}

pub fn unit_maps(x: &FinSpace) -> UnitMaps {
    assert!(x.n() <= 16, "unit maps tabulate the whole carrier");
    let m = functor_p(x);
    let atoms = m.atoms();
    let eta = m.elements().map(|a| eta_with(&atoms, a)).collect();
    let epsilon = (0..x.n())
        .map(|p| atoms.iter().position(|&a| a == ElementSet::singleton(p)).expect("singletons are atoms"))
        .collect();

    let (o, o_opens) = functor_o(&m);
    let o_points = points(&o);
    let vartheta = atoms
        .iter()
        .map(|&atom| {
            let filter = BitSet::from_indices(o.size(), (0..o_opens.len()).filter(|&i| atom.is_subset(o_opens[i])));
            o_points.iter().position(|p| p.filter == filter)
        })
        .collect();

    let l = omega(x);
    let l_points = points(&l);
    let delta = (0..x.n())
        .map(|p| {
            let filter = BitSet::from_indices(l.size(), (0..x.opens().len()).filter(|&i| x.opens()[i].contains(p)));
            l_points
                .iter()
                .position(|q| q.filter == filter)
                .expect("neighbourhood filters are completely prime")
        })
        .collect();
    let (_, zeta) = pt_space(&l).expect("Ω(X) has at most as many points as X");
    UnitMaps {
        eta,
        epsilon,
        vartheta,
        delta,
        zeta,
    }
}

/// `ϑ` examined directly, next to what the axiom checkers predict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarthetaReport {
    pub injective: bool,
    pub surjective: bool,
    pub homeomorphism: bool,
    /// A collision (two atoms, same point) or a missed point.
    pub witness: Option<String>,
    /// `T0` of the atom space, by the point-set checker.
    pub at_t0: bool,
    pub weakly_sober: bool,
    pub sober: bool,
}

impl VarthetaReport {
    /// Injective iff `at(M)` is `T0`, onto iff weakly sober, and a
    /// homeomorphism iff both.
    pub fn consistent(&self) -> bool {
        self.injective == self.at_t0
            && self.surjective == self.weakly_sober
            && self.homeomorphism == (self.at_t0 && self.weakly_sober)
            && (!self.sober || self.homeomorphism)
    }
}

pub fn vartheta_analysis(x: &FinSpace) -> VarthetaReport {
    let m = functor_p(x);
    let at = functor_at(&m);
    let (o, _) = functor_o(&m);
    let (pt, _) = pt_space(&o).expect("O(M) has at most as many points as M has atoms");
    let maps = unit_maps(x);
    let theta: Vec<usize> = maps
        .vartheta
        .iter()
        .map(|t| t.expect("↑x ∩ O(M) is a completely prime filter"))
        .collect();
    let mut witness = None;
    let mut hit = vec![None; pt.n()];
    let mut injective = true;
    for (i, &p) in theta.iter().enumerate() {
        if let Some(j) = hit[p] {
            injective = false;
            witness.get_or_insert(format!("atoms {j} and {i} share point {p}"));
        } else {
            hit[p] = Some(i);
        }
    }
    let missed = hit.iter().position(|h| h.is_none());
    let surjective = missed.is_none();
    if let Some(p) = missed {
        witness.get_or_insert(format!("point {p} of pt(O(M)) is not hit"));
    }
    let homeomorphism = injective && surjective && at.is_homeomorphism(&pt, &theta);
    VarthetaReport {
        injective,
        surjective,
        homeomorphism,
        witness,
        at_t0: is_t0(&at),
        weakly_sober: mt_axiom(x, Axiom::WSober).holds,
        sober: mt_axiom(x, Axiom::Sober).holds,
    }
}

/// `pt(Ω(X))`.
pub fn soberify(x: &FinSpace) -> FinSpace {
    let (s, _) = pt_space(&omega(x)).expect("Ω(X) has at most as many points as X");
    if s.n() <= 8 {
        assert!(is_sober(&s), "soberification is not sober");
    }
    s
}

/// `Ω(pt(L))` together with the isomorphism `L → Ω(pt(L))` induced by `ζ`,
/// as ids of the result.
pub fn spatialize(l: &FiniteFrame) -> Result<(FiniteFrame, Vec<usize>)> {
    let (pt, zeta) = pt_space(l)?;
    if pt.n() > MAX_POINTS {
        return Err(MtError::BoundExceeded {
            n: pt.n(),
            max: MAX_POINTS,
        });
    }
    let s = omega(&pt);
    let iso: Vec<usize> = zeta
        .iter()
        .map(|z| pt.opens().binary_search(z).expect("ζ(a) is open"))
        .collect();
    assert!(l.is_isomorphism(&s, &iso), "finite frame failed to be spatial");
    Ok((s, iso))
}

/// Two distinct MT-endomorphisms of the two-point trivial algebra, the
/// identity and the atom swap, that agree on `O = {∅, X}`.
pub fn o_not_faithful_witness() -> (MtMorphism, MtMorphism) {
    let triv = FinSpace::indiscrete(2);
    let id = check_mt_morphism(&triv, &triv, &[0, 1]).expect("identity is continuous");
    let swap = check_mt_morphism(&triv, &triv, &[1, 0]).expect("every map into an indiscrete space is continuous");
    assert_ne!(id, swap);
    assert_eq!(functor_o_hom(&id), functor_o_hom(&swap));
    (id, swap)
}
