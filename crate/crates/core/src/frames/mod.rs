//! Finite frames: distributive lattices, their points, frame homomorphisms
//! and the pointfree separation axioms.
//!
//! A finite lattice is a frame exactly when it is distributive: with finitely
//! many elements every join is a finite join, so join-infinite
//! distributivity reduces to the binary law.

mod axioms;
mod lattice;
mod points;

use std::ops::Deref;

use crate::bits::Relation;
use crate::error::{MtError, Result};
use crate::interpolation::interpolative_core;

pub use axioms::{frame_axiom, FrameAxiom};
pub use lattice::{validate_lattice, FiniteLattice};
pub use points::{apply_pt, points, points_by_filters, pt_space, FrameHom, FramePoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFrame {
    lattice: FiniteLattice,
}

pub fn validate_frame(lattice: FiniteLattice) -> Result<FiniteFrame> {
    if let Some((a, b, c)) = lattice.distributivity_failure() {
        return Err(MtError::NotDistributive { a, b, c });
    }
    let frame = FiniteFrame { lattice };
    if frame.size() <= 8 {
        assert!(frame.join_infinite_distributive(), "finite distributive lattice failed JID");
    }
    Ok(frame)
}

impl Deref for FiniteFrame {
    type Target = FiniteLattice;

    fn deref(&self) -> &FiniteLattice {
        &self.lattice
    }
}

impl FiniteFrame {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    /// The `k`-element chain `0 < 1 < … < k-1`.
    pub fn chain(k: usize) -> FiniteFrame {
        validate_frame(FiniteLattice::from_leq(k, |x, y| x <= y).expect("chain")).expect("chains are distributive")
    }

    /// The powerset of a `k`-element set, ids being characteristic vectors.
    pub fn boolean(k: usize) -> FiniteFrame {
        let lat = FiniteLattice::from_leq(1 << k, |x, y| x & !y == 0).expect("powerset");
        validate_frame(lat).expect("Boolean lattices are distributive")
    }

    /// `a ∧ ⋁S = ⋁{a ∧ s | s ∈ S}` for every `a` and every subset `S`.
    pub fn join_infinite_distributive(&self) -> bool {
        let m = self.size();
        self.elements().all(|a| {
            (0u64..1 << m).all(|pick| {
                let s: Vec<usize> = (0..m).filter(|i| pick >> i & 1 == 1).collect();
                self.meet(a, self.join_all(s.iter().copied())) == self.join_all(s.iter().map(|&x| self.meet(a, x)))
            })
        })
    }

    /// Heyting implication `a → b = ⋁{c | c ∧ a ≤ b}`.
    pub fn implies(&self, a: usize, b: usize) -> usize {
        self.join_all(self.elements().filter(|&c| self.leq(self.meet(c, a), b)))
    }

    /// `a* = ⋁{b | b ∧ a = 0}`.
    pub fn pseudocomplement(&self, a: usize) -> usize {
        self.join_all(self.elements().filter(|&b| self.meet(b, a) == self.bot()))
    }

    /// `b ≺ a` iff `b* ∨ a = 1`.
    pub fn rather_below(&self, b: usize, a: usize) -> bool {
        self.join(self.pseudocomplement(b), a) == self.top()
    }

    pub fn rather_below_relation(&self) -> Relation {
        let pc: Vec<usize> = self.elements().map(|b| self.pseudocomplement(b)).collect();
        Relation::from_fn(self.size(), |b, a| self.join(pc[b], a) == self.top())
    }

    /// `≺≺` as the largest interpolative subrelation of `≺`.
    pub fn completely_below_relation(&self) -> Relation {
        interpolative_core(&self.rather_below_relation())
    }

    pub fn completely_below(&self, b: usize, a: usize) -> bool {
        self.completely_below_relation().holds(b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interpolation::completely_below_by_chains;

    fn m3() -> FiniteLattice {
        FiniteLattice::from_leq(5, |x, y| x == y || x == 0 || y == 4).unwrap()
    }

    #[test]
    fn validate_examples() {
        let diamond = FiniteLattice::from_leq(4, |x, y| x == y || x == 0 || y == 3).unwrap();
        assert!(validate_frame(diamond).is_ok());
        assert!(matches!(validate_frame(m3()), Err(MtError::NotDistributive { .. })));
        let chain = validate_lattice(3, &[(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(validate_frame(chain).unwrap(), FiniteFrame::chain(3));
    }

    #[test]
    fn pseudocomplements() {
        let c3 = FiniteFrame::chain(3);
        assert_eq!(c3.pseudocomplement(1), 0);
        for l in [FiniteFrame::chain(1), FiniteFrame::chain(4), FiniteFrame::boolean(3)] {
            assert_eq!(l.pseudocomplement(l.bot()), l.top());
        }
        let b4 = FiniteFrame::boolean(2);
        assert_eq!(b4.pseudocomplement(1), 2);
    }

    #[test]
    fn rather_below_examples() {
        let b4 = FiniteFrame::boolean(2);
        assert!(b4.rather_below(1, 1));
        let c3 = FiniteFrame::chain(3);
        assert!(c3.rather_below(1, 2));
        assert!(!c3.rather_below(1, 1));
        for l in [c3, b4, FiniteFrame::chain(5)] {
            for a in l.elements() {
                assert!(l.completely_below(l.bot(), a));
                assert!(l.completely_below(a, l.top()));
            }
        }
    }

    #[test]
    fn completely_below_matches_chain_search() {
        for l in [FiniteFrame::chain(4), FiniteFrame::boolean(3)] {
            let fix = l.completely_below_relation();
            let chains = completely_below_by_chains(&l.rather_below_relation(), l.order());
            assert_eq!(fix, chains);
        }
    }

    #[test]
    fn heyting_residuation() {
        let l = FiniteFrame::chain(4);
        for a in l.elements() {
            for b in l.elements() {
                let i = l.implies(a, b);
                for c in l.elements() {
                    assert_eq!(l.leq(l.meet(c, a), b), l.leq(c, i));
                }
            }
        }
    }

    #[test]
    fn degenerate_frame() {
        let one = FiniteFrame::chain(1);
        assert_eq!(one.bot(), one.top());
        assert!(one.join_infinite_distributive());
    }
}
