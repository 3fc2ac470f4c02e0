//! Point-set separation axioms, written against points and open sets only.

use crate::element::ElementSet;
use crate::space::FinSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalAxiom {
    T0,
    Td,
    T1,
    T2,
    T3,
    T3Half,
    T4,
    Sober,
}

impl ClassicalAxiom {
    pub const ALL: [ClassicalAxiom; 8] = [
        ClassicalAxiom::T0,
        ClassicalAxiom::Td,
        ClassicalAxiom::T1,
        ClassicalAxiom::T2,
        ClassicalAxiom::T3,
        ClassicalAxiom::T3Half,
        ClassicalAxiom::T4,
        ClassicalAxiom::Sober,
    ];

    /// The algebraic axiom with the same content on `P(X)`.
    pub fn algebraic(self) -> super::Axiom {
        use super::Axiom;
        match self {
            ClassicalAxiom::T0 => Axiom::T0,
            ClassicalAxiom::Td => Axiom::THalf,
            ClassicalAxiom::T1 => Axiom::T1,
            ClassicalAxiom::T2 => Axiom::T2,
            ClassicalAxiom::T3 => Axiom::T3,
            ClassicalAxiom::T3Half => Axiom::T3Half,
            ClassicalAxiom::T4 => Axiom::T4,
            ClassicalAxiom::Sober => Axiom::Sober,
        }
    }
}

fn pts(x: &FinSpace) -> std::ops::Range<usize> {
    0..x.n()
}

/// Closure as the intersection of the closed sets containing `a`.
fn cl(x: &FinSpace, a: ElementSet) -> ElementSet {
    let mut out = x.full();
    for c in x.closeds() {
        if a.is_subset(c) {
            out = out.intersection(c);
        }
    }
    out
}

fn separated(x: &FinSpace, a: ElementSet, b: ElementSet) -> bool {
    x.opens().iter().any(|&u| {
        a.is_subset(u) && x.opens().iter().any(|&v| b.is_subset(v) && u.intersection(v).is_empty())
    })
}

pub fn is_t0(x: &FinSpace) -> bool {
    pts(x).all(|p| {
        pts(x).all(|q| p == q || x.opens().iter().any(|u| u.contains(p) != u.contains(q)))
    })
}

/// Every derived set `cl{x} \ {x}` is closed.
pub fn is_td(x: &FinSpace) -> bool {
    pts(x).all(|p| {
        let d = cl(x, ElementSet::singleton(p)).difference(ElementSet::singleton(p));
        x.is_closed(d)
    })
}

pub fn is_t1(x: &FinSpace) -> bool {
    pts(x).all(|p| x.is_closed(ElementSet::singleton(p)))
}

pub fn is_t2(x: &FinSpace) -> bool {
    pts(x).all(|p| {
        pts(x).all(|q| p == q || separated(x, ElementSet::singleton(p), ElementSet::singleton(q)))
    })
}

/// A point and a closed set missing it have disjoint neighbourhoods.
pub fn is_regular(x: &FinSpace) -> bool {
    x.closeds().into_iter().all(|c| {
        pts(x)
            .filter(|&p| !c.contains(p))
            .all(|p| separated(x, ElementSet::singleton(p), c))
    })
}

/// A point and a closed set missing it are separated by a continuous
/// function to `[0, 1]`. A continuous map from a finite space to `[0, 1]`
/// has finitely many values, each with a clopen fibre, so it suffices to
/// look for `{0, 1}`-valued ones, i.e. clopen sets.
pub fn is_completely_regular(x: &FinSpace) -> bool {
    let clopens: Vec<ElementSet> = x.opens().iter().copied().filter(|&u| x.is_closed(u)).collect();
    x.closeds().into_iter().all(|c| {
        pts(x)
            .filter(|&p| !c.contains(p))
            .all(|p| clopens.iter().any(|&z| z.contains(p) && z.intersection(c).is_empty()))
    })
}

pub fn is_normal(x: &FinSpace) -> bool {
    let closeds = x.closeds();
    closeds.iter().all(|&c| {
        closeds
            .iter()
            .all(|&d| !c.intersection(d).is_empty() || separated(x, c, d))
    })
}

/// Every irreducible closed set is the closure of exactly one point.
pub fn is_sober(x: &FinSpace) -> bool {
    let closeds = x.closeds();
    let irreducible = |f: ElementSet| {
        !f.is_empty()
            && !closeds
                .iter()
                .any(|&a| a != f && a.is_subset(f) && closeds.iter().any(|&b| b != f && b.is_subset(f) && a.union(b) == f))
    };
    closeds.iter().copied().filter(|&f| irreducible(f)).all(|f| {
        pts(x)
            .filter(|&p| cl(x, ElementSet::singleton(p)) == f)
            .count()
            == 1
    })
}

/// Evaluates the axiom on `x` as a topological space. `T3`, `T3½` and `T4`
/// include `T1`.
pub fn classical_axiom(x: &FinSpace, which: ClassicalAxiom) -> bool {
    match which {
        ClassicalAxiom::T0 => is_t0(x),
        ClassicalAxiom::Td => is_td(x),
        ClassicalAxiom::T1 => is_t1(x),
        ClassicalAxiom::T2 => is_t2(x),
        ClassicalAxiom::T3 => is_t1(x) && is_regular(x),
        ClassicalAxiom::T3Half => is_t1(x) && is_completely_regular(x),
        ClassicalAxiom::T4 => is_t1(x) && is_normal(x),
        ClassicalAxiom::Sober => is_sober(x),
    }
}
