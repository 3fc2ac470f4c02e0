//! The theorem suite: each statement checked on every labeled topology with
//! a given number of points. A violation records the space and a witness so
//! it can be replayed through the CLI.

use std::time::Instant;

use mtkit_core::completions::{mt_from_frame, mt_from_frame_generic, GENERIC_MAX_POINTS};
use mtkit_core::family::{family, generated_complete_boolean, generated_complete_lattice, FamilyKind};
use mtkit_core::frames::{pt_space, validate_frame};
use mtkit_core::functors::{functor_o, functor_p, omega, unit_maps, vartheta_analysis, functor_at};
use mtkit_core::interpolation::completely_below_by_chains;
use mtkit_core::separation::classical::{classical_axiom, is_sober, ClassicalAxiom};
use mtkit_core::separation::{
    carrier_order, classify, completely_relation, dual_axiom_check, mt_axiom, mt_rather, normality_failure,
    rather_relation, urysohn_family, Axiom, DEFAULT_URYSOHN_DEPTH,
};
use mtkit_core::{frame_axiom, ElementSet, FinSpace, FrameAxiom, MtError};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::census::spaces;
use crate::io::space_value;

type Check = fn(&FinSpace) -> Option<String>;

pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    check: Check,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub space: Value,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub id: &'static str,
    pub statement: &'static str,
    pub instances: usize,
    pub violations: Vec<Violation>,
    pub elapsed_ms: f64,
}

fn fails(ok: bool, witness: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(witness)
}

fn holds(m: &FinSpace, a: Axiom) -> bool {
    mt_axiom(m, a).holds
}

fn frame_holds(m: &FinSpace, a: FrameAxiom) -> bool {
    frame_axiom(&omega(m), a)
}

fn kuratowski(m: &FinSpace) -> Option<String> {
    m.kuratowski_violation().map(|(law, a, b)| format!("{law} at ({a}, {b})"))
}

fn opens_frame(m: &FinSpace) -> Option<String> {
    let opens = m.opens();
    for &a in opens {
        for &b in opens {
            if !m.is_open(a.union(b)) || !m.is_open(a.intersection(b)) {
                return Some(format!("opens {a}, {b} not closed under ∪/∩"));
            }
        }
    }
    validate_frame(omega(m).lattice().clone()).err().map(|e| e.to_string())
}

fn interior_paths(m: &FinSpace) -> Option<String> {
    m.elements()
        .find(|&a| {
            let i = m.interior(a);
            i != m.interior_by_scan(a) || i != m.interior_by_preorder(a) || m.closure(a) != m.closure_by_closed_sets(a)
        })
        .map(|a| format!("interior/closure routes disagree at {a}"))
}

fn ladder(m: &FinSpace) -> Option<String> {
    let v = classify(m).ladder_violations();
    fails(v.is_empty(), || format!("{v:?}"))
}

fn duals(m: &FinSpace) -> Option<String> {
    Axiom::ALL
        .into_iter()
        .find(|&a| dual_axiom_check(m, a) != holds(m, a))
        .map(|a| format!("{a} disagrees with its dual"))
}

fn t0_boolean(m: &FinSpace) -> Option<String> {
    let all: Vec<ElementSet> = m.elements().collect();
    let gen = generated_complete_boolean(m.opens(), m) == all;
    let t0 = holds(m, Axiom::T0);
    fails(gen == t0, || format!("T0 = {t0}, generation = {gen}"))
}

fn t1_lattice(m: &FinSpace) -> Option<String> {
    let all: Vec<ElementSet> = m.elements().collect();
    let gen = generated_complete_lattice(m.opens(), m) == all;
    let t1 = holds(m, Axiom::T1);
    fails(gen == t1, || format!("T1 = {t1}, generation = {gen}"))
}

fn t1_subfit(m: &FinSpace) -> Option<String> {
    let lhs = holds(m, Axiom::T1);
    let rhs = holds(m, Axiom::THalf) && frame_holds(m, FrameAxiom::Subfit);
    fails(lhs == rhs, || format!("T1 = {lhs}, T½ ∧ subfit = {rhs}"))
}

fn t2_sober(m: &FinSpace) -> Option<String> {
    fails(!holds(m, Axiom::T2) || holds(m, Axiom::Sober), || "T2 but not sober".into())
}

fn t2_hausdorff(m: &FinSpace) -> Option<String> {
    fails(!holds(m, Axiom::T2) || frame_holds(m, FrameAxiom::Hausdorff), || {
        "T2 but O(M) not Hausdorff".into()
    })
}

fn regular_go_gc(m: &FinSpace) -> Option<String> {
    if !holds(m, Axiom::T3) {
        return None;
    }
    let go = family(m, FamilyKind::Go).members;
    let gc = family(m, FamilyKind::Gc).members;
    fails(go == m.opens() && gc == m.closeds(), || "GO ≠ O or GC ≠ C".into())
}

fn t3half_cregular(m: &FinSpace) -> Option<String> {
    let lhs = holds(m, Axiom::T3Half);
    let rhs = holds(m, Axiom::T1) && frame_holds(m, FrameAxiom::CRegular);
    fails(lhs == rhs, || format!("T3½ = {lhs}, T1 ∧ completely regular = {rhs}"))
}

fn t4_normal(m: &FinSpace) -> Option<String> {
    let lhs = holds(m, Axiom::T4);
    let rhs = holds(m, Axiom::T1) && frame_holds(m, FrameAxiom::Normal);
    fails(lhs == rhs, || format!("T4 = {lhs}, T1 ∧ normal = {rhs}"))
}

fn t4_t3half(m: &FinSpace) -> Option<String> {
    fails(!holds(m, Axiom::T4) || holds(m, Axiom::T3Half), || "T4 but not T3½".into())
}

fn t4_t3(m: &FinSpace) -> Option<String> {
    fails(!holds(m, Axiom::T4) || holds(m, Axiom::T3), || "T4 but not T3".into())
}

fn normal_collapse(m: &FinSpace) -> Option<String> {
    if normality_failure(m).is_some() {
        return None;
    }
    let c = completely_relation(m);
    let r = rather_relation(m);
    fails(c == r, || "⊲⊲ differs from ⊲ in a normal algebra".into())
}

fn thalf_envelope(m: &FinSpace) -> Option<String> {
    let (o, _) = functor_o(&functor_p(m));
    let (env, _) = mt_from_frame(&o).expect("finite frame");
    let iso = env.find_homeomorphism(m);
    if let Some(h) = &iso {
        if !env.is_homeomorphism(m, h) {
            return Some("homeomorphism certificate does not verify".into());
        }
    }
    let (t_half, found) = (holds(m, Axiom::THalf), iso.is_some());
    fails(found == t_half, || format!("T½ = {t_half}, isomorphic to envelope = {found}"))
}

fn envelope_opens(m: &FinSpace) -> Option<String> {
    let (o, _) = functor_o(&functor_p(m));
    let (env, iso) = mt_from_frame(&o).expect("finite frame");
    let (o_env, _) = functor_o(&functor_p(&env));
    fails(o.is_isomorphism(&o_env, &iso), || "L → O(envelope) is not an isomorphism".into())
}

fn envelope_axioms(m: &FinSpace) -> Option<String> {
    let (o, _) = functor_o(&functor_p(m));
    let (env, _) = mt_from_frame(&o).expect("finite frame");
    if !holds(&env, Axiom::THalf) {
        return Some("envelope is not T½".into());
    }
    let t1 = holds(&env, Axiom::T1);
    let subfit = frame_axiom(&o, FrameAxiom::Subfit);
    fails(t1 == subfit, || format!("envelope T1 = {t1}, subfit = {subfit}"))
}

fn envelope_generic(m: &FinSpace) -> Option<String> {
    let (o, _) = functor_o(&functor_p(m));
    let (env, _) = mt_from_frame(&o).expect("finite frame");
    if env.n() > GENERIC_MAX_POINTS {
        return None;
    }
    let generic = mt_from_frame_generic(&o).expect("within bounds");
    fails(generic.find_homeomorphism(&env).is_some(), || "generic and shortcut envelopes differ".into())
}

fn vartheta(m: &FinSpace) -> Option<String> {
    let r = vartheta_analysis(m);
    fails(r.consistent(), || format!("{r:?}"))
}

fn delta_sober(m: &FinSpace) -> Option<String> {
    let maps = unit_maps(m);
    let (pt, _) = pt_space(&omega(m)).expect("finite frame");
    let mut image = maps.delta.clone();
    image.sort();
    image.dedup();
    let homeo = image.len() == m.n() && pt.n() == m.n() && m.is_homeomorphism(&pt, &maps.delta);
    let sober = is_sober(m);
    fails(homeo == sober, || format!("δ homeomorphism = {homeo}, sober = {sober}"))
}

fn eta(m: &FinSpace) -> Option<String> {
    let maps = unit_maps(m);
    let at = functor_at(&functor_p(m));
    let e = |a: ElementSet| maps.eta[a.bits() as usize];
    let mut distinct = maps.eta.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != m.carrier_size() {
        return Some("η is not injective".into());
    }
    m.elements()
        .find(|&a| e(m.interior(a)) != at.interior(e(a)) || e(m.closure(a)) != at.closure(e(a)))
        .map(|a| format!("η does not commute with □/◇ at {a}"))
}

fn o_of_p(m: &FinSpace) -> Option<String> {
    fails(functor_o(&functor_p(m)).0 == omega(m), || "O(P(X)) ≠ Ω(X)".into())
}

fn completely_below_oracle(m: &FinSpace) -> Option<String> {
    let fix = completely_relation(m);
    let chains = completely_below_by_chains(&rather_relation(m), &carrier_order(m));
    fails(fix == chains, || "fixpoint and chain search disagree".into())
}

fn completely_below_laws(m: &FinSpace) -> Option<String> {
    let c = completely_relation(m);
    let n = m.n();
    let id = |a: ElementSet| a.bits() as usize;
    let rel = |a: ElementSet, b: ElementSet| c.holds(id(a), id(b));
    let pairs: Vec<(ElementSet, ElementSet)> = c
        .pairs()
        .map(|(a, b)| (ElementSet::from_bits(a as u32), ElementSet::from_bits(b as u32)))
        .collect();
    for a in m.elements() {
        if !rel(ElementSet::EMPTY, a) || !rel(a, m.full()) {
            return Some(format!("0 ⊲⊲ {a} ⊲⊲ 1 fails"));
        }
    }
    for &(a, b) in &pairs {
        if !a.is_subset(b) || !mt_rather(m, a, b) || !rel(b.complement(n), a.complement(n)) {
            return Some(format!("order, ⊲ or contraposition fails at ({a}, {b})"));
        }
        for x in a.subsets() {
            if let Some(y) = m.elements().find(|&y| b.is_subset(y) && !rel(x, y)) {
                return Some(format!("squeezing ({a}, {b}) to ({x}, {y}) fails"));
            }
        }
        for &(a2, b2) in &pairs {
            if !rel(a.union(a2), b.union(b2)) || !rel(a.intersection(a2), b.intersection(b2)) {
                return Some(format!("({a}, {b}) and ({a2}, {b2}) not closed under ∨/∧"));
            }
        }
    }
    None
}

fn regular_open_approximation(m: &FinSpace) -> Option<String> {
    if !holds(m, Axiom::T3Half) {
        return None;
    }
    let c = completely_relation(m);
    let ro = family(m, FamilyKind::Ro).members;
    m.opens()
        .iter()
        .copied()
        .find(|&a| {
            let approx = ro
                .iter()
                .filter(|b| c.holds(b.bits() as usize, a.bits() as usize))
                .fold(ElementSet::EMPTY, |x, &b| x.union(b));
            approx != a
        })
        .map(|a| format!("{a} is not the join of the regular opens completely below it"))
}

fn urysohn(m: &FinSpace) -> Option<String> {
    if normality_failure(m).is_some() {
        return None;
    }
    for c in m.closeds() {
        for &a in m.opens().iter().filter(|a| c.is_subset(**a)) {
            match urysohn_family(m, c, a, DEFAULT_URYSOHN_DEPTH) {
                Ok(f) => {
                    if let Some(v) = f.violation(m, c, a) {
                        return Some(format!("c = {c}, a = {a}: {v}"));
                    }
                }
                Err(e) => return Some(format!("c = {c}, a = {a}: {e}")),
            }
        }
    }
    None
}

fn classical(m: &FinSpace) -> Option<String> {
    ClassicalAxiom::ALL
        .into_iter()
        .find(|&a| classical_axiom(m, a) != holds(m, a.algebraic()))
        .map(|a| format!("{a:?} disagrees with {}", a.algebraic()))
}

pub const THEOREMS: &[Theorem] = &[
    Theorem { id: "kuratowski", statement: "□ fixes 1, is deflationary and idempotent, and preserves binary meets", check: kuratowski },
    Theorem { id: "opens-frame", statement: "O(M) is closed under finite joins and meets and is a frame", check: opens_frame },
    Theorem { id: "interior-routes", statement: "□ and ◇ agree across the table, scan, preorder and closed-set computations", check: interior_paths },
    Theorem { id: "ladder", statement: "T4 ⇒ T3½ ⇒ T3 ⇒ T2 ⇒ T1 ⇒ T½ ⇒ T0 and T2 ⇒ sober ⇒ weakly sober", check: ladder },
    Theorem { id: "dual-axioms", statement: "every axiom agrees with its order-dual formulation", check: duals },
    Theorem { id: "t0-iff-boolean-generation", statement: "M is T0 iff O(M) generates M as a complete Boolean algebra", check: t0_boolean },
    Theorem { id: "t1-iff-lattice-generation", statement: "M is T1 iff O(M) generates M as a complete lattice", check: t1_lattice },
    Theorem { id: "t1-iff-thalf-subfit", statement: "M is T1 iff M is T½ and O(M) is subfit", check: t1_subfit },
    Theorem { id: "t2-implies-sober", statement: "every T2-algebra is sober", check: t2_sober },
    Theorem { id: "t2-implies-hausdorff-frame", statement: "if M is T2 then O(M) is a Hausdorff frame", check: t2_hausdorff },
    Theorem { id: "regular-go-gc", statement: "if M is regular then GO(M) = O(M) and GC(M) = C(M)", check: regular_go_gc },
    Theorem { id: "t3half-iff-t1-cregular-frame", statement: "M is T3½ iff M is T1 and O(M) is completely regular", check: t3half_cregular },
    Theorem { id: "t4-iff-t1-normal-frame", statement: "M is T4 iff M is T1 and O(M) is normal", check: t4_normal },
    Theorem { id: "t4-implies-t3half", statement: "every T4-algebra is T3½", check: t4_t3half },
    Theorem { id: "t4-implies-t3", statement: "every normal T1-algebra is regular", check: t4_t3 },
    Theorem { id: "normal-completely-below", statement: "if disjoint closed elements have disjoint open neighbourhoods then a ⊲⊲ b iff a ⊲ b", check: normal_collapse },
    Theorem { id: "thalf-iff-envelope", statement: "M is T½ iff M is isomorphic to the completed Boolean envelope of O(M)", check: thalf_envelope },
    Theorem { id: "envelope-opens", statement: "O of the completed Boolean envelope of L is isomorphic to L", check: envelope_opens },
    Theorem { id: "envelope-axioms", statement: "the completed Boolean envelope of L is T½, and T1 iff L is subfit", check: envelope_axioms },
    Theorem { id: "envelope-generic", statement: "the join-irreducible envelope matches the MacNeille and lower-extension construction", check: envelope_generic },
    Theorem { id: "vartheta", statement: "ϑ is one-to-one iff at(M) is T0, onto iff M is weakly sober, a homeomorphism iff both", check: vartheta },
    Theorem { id: "delta-iff-sober", statement: "δ: X → pt(Ω(X)) is a homeomorphism iff X is sober", check: delta_sober },
    Theorem { id: "eta-isomorphism", statement: "η: M → P(at(M)) is an isomorphism with η(□a) = int η(a) and η(◇a) = cl η(a)", check: eta },
    Theorem { id: "o-of-p-is-omega", statement: "O(P(X)) = Ω(X)", check: o_of_p },
    Theorem { id: "completely-below-oracle", statement: "the interpolative-core ⊲⊲ equals the dyadic chain search", check: completely_below_oracle },
    Theorem { id: "completely-below-laws", statement: "0 ⊲⊲ a ⊲⊲ 1; ⊲⊲ ⊆ ⊲ ⊆ ≤; squeezing; a ⊲⊲ b iff ¬b ⊲⊲ ¬a; closure under ∨ and ∧", check: completely_below_laws },
    Theorem { id: "regular-open-approximation", statement: "in a T3½-algebra every open a is the join of the regular opens completely below it", check: regular_open_approximation },
    Theorem { id: "urysohn", statement: "in a normal algebra every closed c below an open a has a dyadic family c ≤ u_0, u_1 ≤ a, p < q ⇒ u_p ⊲ u_q", check: urysohn },
    Theorem { id: "classical-agreement", statement: "each axiom on P(X) agrees with its point-set version on X", check: classical },
];

impl Theorem {
    /// `None` when the statement holds on `m`, else a witness.
    pub fn check(&self, m: &FinSpace) -> Option<String> {
        (self.check)(m)
    }
}

pub fn theorem(id: &str) -> Option<&'static Theorem> {
    THEOREMS.iter().find(|t| t.id == id)
}

pub fn run_theorem(t: &Theorem, spaces: &[FinSpace]) -> TheoremReport {
    let start = Instant::now();
    let violations: Vec<Violation> = spaces
        .par_iter()
        .filter_map(|m| {
            (t.check)(m).map(|witness| Violation {
                space: space_value(m),
                witness,
            })
        })
        .collect();
    TheoremReport {
        id: t.id,
        statement: t.statement,
        instances: spaces.len(),
        violations,
        elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
    }
}

/// Every theorem on every labeled topology with exactly `n` points.
pub fn run_theorem_suite(n: usize) -> Result<Vec<TheoremReport>, MtError> {
    let all = spaces(n)?;
    Ok(THEOREMS.iter().map(|t| run_theorem(t, &all)).collect())
}

/// The id → statement table as Markdown.
pub fn theorem_table() -> String {
    let mut out = String::from("| id | statement |\n|---|---|\n");
    for t in THEOREMS {
        out.push_str(&format!("| `{}` | {} |\n", t.id, t.statement));
    }
    out
}
