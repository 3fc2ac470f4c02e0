//! Statements checked on every labeled topology up to a small size.

use mtkit_core::completions::{mt_from_frame, mt_from_frame_generic};
use mtkit_core::enumerate::enumerate_topologies;
use mtkit_core::family::{family, generated_complete_boolean, generated_complete_lattice, FamilyKind};
use mtkit_core::frames::{frame_axiom, FrameAxiom};
use mtkit_core::functors::{functor_o, functor_p, vartheta_analysis};
use mtkit_core::separation::{
    classify, completely_relation, dual_axiom_check, mt_axiom, mt_rather, normality_failure, Axiom,
};
use mtkit_core::{ElementSet, FinSpace};

fn spaces(max_n: usize) -> Vec<FinSpace> {
    (0..=max_n).flat_map(|n| enumerate_topologies(n).unwrap()).collect()
}

#[test]
fn dual_formulations_agree() {
    for m in spaces(4) {
        for ax in Axiom::ALL {
            assert_eq!(dual_axiom_check(&m, ax), mt_axiom(&m, ax).holds, "{ax} on {}", m.canonical_id());
        }
    }
}

#[test]
fn generation_characterizations() {
    for m in spaces(4) {
        let all: Vec<ElementSet> = m.elements().collect();
        let p = classify(&m);
        assert_eq!(p.t0, generated_complete_boolean(m.opens(), &m) == all, "{}", m.canonical_id());
        assert_eq!(p.t1, generated_complete_lattice(m.opens(), &m) == all, "{}", m.canonical_id());
    }
}

#[test]
fn envelope_of_opens() {
    for m in spaces(4) {
        let (o, _) = functor_o(&functor_p(&m));
        let (env, iso) = mt_from_frame(&o).unwrap();
        let (o_env, _) = functor_o(&functor_p(&env));
        assert!(o.is_isomorphism(&o_env, &iso));
        assert!(mt_axiom(&env, Axiom::THalf).holds);
        assert_eq!(mt_axiom(&env, Axiom::T1).holds, frame_axiom(&o, FrameAxiom::Subfit));
        let t_half = mt_axiom(&m, Axiom::THalf).holds;
        assert_eq!(env.find_homeomorphism(&m).is_some(), t_half, "{}", m.canonical_id());
        if o.size() <= 6 {
            let generic = mt_from_frame_generic(&o).unwrap();
            assert!(generic.find_homeomorphism(&env).is_some());
        }
    }
}

#[test]
fn vartheta_matches_axioms() {
    for m in spaces(4) {
        let r = vartheta_analysis(&m);
        assert!(r.consistent(), "{}: {r:?}", m.canonical_id());
    }
}

#[test]
fn regular_algebras_have_all_opens_approximated() {
    for m in spaces(4) {
        if mt_axiom(&m, Axiom::T3).holds {
            assert_eq!(family(&m, FamilyKind::Go).members, m.opens());
            assert_eq!(family(&m, FamilyKind::Gc).members, m.closeds());
        }
    }
}

#[test]
fn completely_below_laws() {
    for m in spaces(3) {
        let c = completely_relation(&m);
        let n = m.n();
        let id = |a: ElementSet| a.bits() as usize;
        let holds = |a: ElementSet, b: ElementSet| c.holds(id(a), id(b));
        for a in m.elements() {
            assert!(holds(ElementSet::EMPTY, a) && holds(a, m.full()));
            for b in m.elements() {
                if !holds(a, b) {
                    continue;
                }
                assert!(a.is_subset(b));
                assert!(mt_rather(&m, a, b));
                assert!(holds(b.complement(n), a.complement(n)));
                for x in a.subsets() {
                    for y in m.elements().filter(|y| b.is_subset(*y)) {
                        assert!(holds(x, y));
                    }
                }
                for a2 in m.elements() {
                    for b2 in m.elements().filter(|&b2| holds(a2, b2)) {
                        assert!(holds(a.union(a2), b.union(b2)));
                        assert!(holds(a.intersection(a2), b.intersection(b2)));
                    }
                }
            }
        }
        // Open elements approximated by regular opens, in completely regular M.
        if mt_axiom(&m, Axiom::T3Half).holds {
            let ro = family(&m, FamilyKind::Ro).members;
            for &a in m.opens() {
                let approx = ro.iter().filter(|&&b| holds(b, a)).fold(ElementSet::EMPTY, |x, &b| x.union(b));
                assert_eq!(approx, a);
            }
        }
        // Normality collapses the two relations.
        if normality_failure(&m).is_none() {
            for a in m.elements() {
                for b in m.elements() {
                    assert_eq!(holds(a, b), mt_rather(&m, a, b));
                }
            }
        }
    }
}

#[test]
fn fit_frame_without_t1() {
    // Two points, trivial topology: the frame of opens is 0 < 1.
    let m = FinSpace::indiscrete(2);
    let (o, _) = functor_o(&functor_p(&m));
    assert!(frame_axiom(&o, FrameAxiom::Fit));
    assert!(!mt_axiom(&m, Axiom::T1).holds);
}
