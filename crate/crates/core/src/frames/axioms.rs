use std::fmt;

use super::{points, FiniteFrame};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameAxiom {
    Subfit,
    Fit,
    Hausdorff,
    Regular,
    CRegular,
    Normal,
    Spatial,
}

impl FrameAxiom {
    pub const ALL: [FrameAxiom; 7] = [
        FrameAxiom::Subfit,
        FrameAxiom::Fit,
        FrameAxiom::Hausdorff,
        FrameAxiom::Regular,
        FrameAxiom::CRegular,
        FrameAxiom::Normal,
        FrameAxiom::Spatial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrameAxiom::Subfit => "SUBFIT",
            FrameAxiom::Fit => "FIT",
            FrameAxiom::Hausdorff => "HAUSDORFF",
            FrameAxiom::Regular => "REGULAR",
            FrameAxiom::CRegular => "CREGULAR",
            FrameAxiom::Normal => "NORMAL",
            FrameAxiom::Spatial => "SPATIAL",
        }
    }
}

impl fmt::Display for FrameAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evaluates the axiom's defining quantifiers directly over `l`.
pub fn frame_axiom(l: &FiniteFrame, which: FrameAxiom) -> bool {
    let top = l.top();
    let pairs = || l.elements().flat_map(|a| l.elements().map(move |b| (a, b)));
    match which {
        // a ≰ b ⇒ ∃c: a ∨ c = 1 ≠ b ∨ c
        FrameAxiom::Subfit => pairs()
            .filter(|&(a, b)| !l.leq(a, b))
            .all(|(a, b)| l.elements().any(|c| l.join(a, c) == top && l.join(b, c) != top)),
        // a ≰ b ⇒ ∃c: a ∨ c = 1 and (c → b) ≰ b
        FrameAxiom::Fit => pairs()
            .filter(|&(a, b)| !l.leq(a, b))
            .all(|(a, b)| {
                l.elements()
                    .any(|c| l.join(a, c) == top && !l.leq(l.implies(c, b), b))
            }),
        // a ≠ 1 ⇒ a = ⋁{u ≤ a | u* ≰ a}
        FrameAxiom::Hausdorff => l.elements().filter(|&a| a != top).all(|a| {
            let approx = l.join_all(
                l.elements()
                    .filter(|&u| l.leq(u, a) && !l.leq(l.pseudocomplement(u), a)),
            );
            approx == a
        }),
        FrameAxiom::Regular => {
            let r = l.rather_below_relation();
            l.elements()
                .all(|a| l.join_all(l.elements().filter(|&b| r.holds(b, a))) == a)
        }
        FrameAxiom::CRegular => {
            let r = l.completely_below_relation();
            l.elements()
                .all(|a| l.join_all(l.elements().filter(|&b| r.holds(b, a))) == a)
        }
        // a ∨ b = 1 ⇒ ∃u, v: u ∧ v = 0, a ∨ v = 1 = b ∨ u
        FrameAxiom::Normal => pairs().filter(|&(a, b)| l.join(a, b) == top).all(|(a, b)| {
            l.elements().any(|u| {
                l.join(b, u) == top
                    && l.elements()
                        .any(|v| l.meet(u, v) == l.bot() && l.join(a, v) == top)
            })
        }),
        // a ≰ b ⇒ some point contains a and not b
        FrameAxiom::Spatial => {
            let pts = points(l);
            pairs()
                .filter(|&(a, b)| !l.leq(a, b))
                .all(|(a, b)| pts.iter().any(|p| p.contains(a) && !p.contains(b)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_not_subfit() {
        let c3 = FiniteFrame::chain(3);
        assert!(!frame_axiom(&c3, FrameAxiom::Subfit));
        // Witness a = m, b = 0: the only c with m ∨ c = 1 is 1, and 0 ∨ 1 = 1.
        let (m, zero) = (1, 0);
        let cs: Vec<usize> = c3.elements().filter(|&c| c3.join(m, c) == c3.top()).collect();
        assert_eq!(cs, vec![2]);
        assert_eq!(c3.join(zero, 2), c3.top());
    }

    #[test]
    fn boolean_frames_satisfy_everything() {
        for k in 0..=3 {
            let b = FiniteFrame::boolean(k);
            for ax in FrameAxiom::ALL {
                assert!(frame_axiom(&b, ax), "{ax} fails on 2^{k}");
            }
        }
    }

    #[test]
    fn finite_frames_are_spatial() {
        for l in [FiniteFrame::chain(1), FiniteFrame::chain(4), FiniteFrame::boolean(2)] {
            assert!(frame_axiom(&l, FrameAxiom::Spatial));
        }
    }

    #[test]
    fn two_element_frame_is_fit() {
        // O of the four-element algebra with the simple interior operator.
        let two = FiniteFrame::chain(2);
        assert!(frame_axiom(&two, FrameAxiom::Fit));
        assert!(frame_axiom(&two, FrameAxiom::Subfit));
    }

    #[test]
    fn chain_separation() {
        let c3 = FiniteFrame::chain(3);
        assert!(!frame_axiom(&c3, FrameAxiom::Regular));
        assert!(!frame_axiom(&c3, FrameAxiom::Hausdorff));
        assert!(frame_axiom(&c3, FrameAxiom::Normal));
        assert!(!frame_axiom(&c3, FrameAxiom::Fit));
    }
}
