use crate::element::{meet_all, ElementSet};
use crate::error::{MtError, Result};
use crate::space::FinSpace;

/// An MT-morphism `h: P(source) → P(target)` presented by its point map
/// `target → source`; `h` is the preimage map, so it is a complete Boolean
/// homomorphism by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MtMorphism {
    source: FinSpace,
    target: FinSpace,
    pointmap: Vec<usize>,
}

/// Validates `pointmap: target → source` as a continuous map, which is what
/// makes its preimage map an MT-morphism `P(source) → P(target)`.
pub fn check_mt_morphism(source: &FinSpace, target: &FinSpace, pointmap: &[usize]) -> Result<MtMorphism> {
    if pointmap.len() != target.n() {
        return Err(MtError::BadPointMap(format!(
            "expected {} images, got {}",
            target.n(),
            pointmap.len()
        )));
    }
    if let Some(&y) = pointmap.iter().find(|&&y| y >= source.n()) {
        return Err(MtError::BadPointMap(format!("image {y} outside {} points", source.n())));
    }
    let h = MtMorphism {
        source: source.clone(),
        target: target.clone(),
        pointmap: pointmap.to_vec(),
    };
    if let Some(&u) = source.opens().iter().find(|&&u| !target.is_open(h.apply(u))) {
        return Err(MtError::NotContinuous(u));
    }
    if source.n() <= 10 {
        for a in source.elements() {
            assert!(
                h.apply(source.interior(a)).is_subset(target.interior(h.apply(a))),
                "continuous preimage failed h(□a) ≤ □h(a) at {a}"
            );
        }
    }
    Ok(h)
}

impl MtMorphism {
    pub fn source(&self) -> &FinSpace {
        &self.source
    }

    pub fn target(&self) -> &FinSpace {
        &self.target
    }

    pub fn pointmap(&self) -> &[usize] {
        &self.pointmap
    }

    /// `h(a)`: the preimage of `a` under the point map.
    pub fn apply(&self, a: ElementSet) -> ElementSet {
        ElementSet::from_points((0..self.target.n()).filter(|&x| a.contains(self.pointmap[x])))
    }

    /// Left adjoint `h*(b) = ⋀{a | b ≤ h(a)}`, evaluated over every element
    /// of the source.
    pub fn left_adjoint(&self, b: ElementSet) -> ElementSet {
        meet_all(
            self.source.n(),
            self.source.elements().filter(|&a| b.is_subset(self.apply(a))),
        )
    }

    /// `g ∘ self` where `g: P(target) → P(other)`.
    pub fn then(&self, g: &MtMorphism) -> MtMorphism {
        assert_eq!(&self.target, &g.source, "morphisms do not compose");
        MtMorphism {
            source: self.source.clone(),
            target: g.target.clone(),
            pointmap: g.pointmap.iter().map(|&z| self.pointmap[z]).collect(),
        }
    }

    pub fn identity(space: &FinSpace) -> MtMorphism {
        MtMorphism {
            source: space.clone(),
            target: space.clone(),
            pointmap: (0..space.n()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_domain_is_always_continuous() {
        let sierp = FinSpace::sierpinski();
        let disc = FinSpace::discrete(2);
        for g in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            let h = check_mt_morphism(&sierp, &disc, &g).unwrap();
            assert_eq!(h.pointmap(), &g);
        }
    }

    #[test]
    fn trivial_domain() {
        let sierp = FinSpace::sierpinski();
        let triv = FinSpace::indiscrete(2);
        assert!(check_mt_morphism(&sierp, &triv, &[1, 1]).is_ok());
        assert_eq!(
            check_mt_morphism(&sierp, &triv, &[0, 1]),
            Err(MtError::NotContinuous(ElementSet::from_points([1])))
        );
    }

    #[test]
    fn identity_is_valid() {
        let sierp = FinSpace::sierpinski();
        let h = check_mt_morphism(&sierp, &sierp, &[0, 1]).unwrap();
        assert_eq!(h, MtMorphism::identity(&sierp));
    }

    #[test]
    fn malformed_maps() {
        let s = FinSpace::sierpinski();
        assert!(matches!(check_mt_morphism(&s, &s, &[0]), Err(MtError::BadPointMap(_))));
        assert!(matches!(check_mt_morphism(&s, &s, &[0, 2]), Err(MtError::BadPointMap(_))));
    }

    #[test]
    fn left_adjoint_on_singletons_recovers_point_map() {
        let sierp = FinSpace::sierpinski();
        let disc = FinSpace::discrete(2);
        let h = check_mt_morphism(&sierp, &disc, &[1, 0]).unwrap();
        assert_eq!(h.left_adjoint(ElementSet::singleton(0)), ElementSet::singleton(1));
        assert_eq!(h.left_adjoint(ElementSet::singleton(1)), ElementSet::singleton(0));
    }
}
