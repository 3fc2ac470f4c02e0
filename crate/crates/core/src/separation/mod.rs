//! Separation axioms for finite MT-algebras, the relations `⊲` and `⊲⊲`,
//! interpolation and the Urysohn family.
//!
//! Every checker reads the axiom off the algebra `P(X)` of a [`FinSpace`]:
//! elements, opens, closeds, `□` and `◇`. Point-set versions of the same
//! axioms live in [`classical`] and serve as oracles.

pub mod classical;
mod urysohn;

use std::collections::BTreeMap;
use std::fmt;

use crate::bits::Relation;
use crate::element::{join_all, meet_all, ElementSet};
use crate::error::{MtError, Result};
use crate::family::{family, join_generation_failure, meet_generation_failure, FamilyKind};
use crate::interpolation::interpolative_core;
use crate::space::FinSpace;

pub use urysohn::{urysohn_family, UrysohnFamily, DEFAULT_URYSOHN_DEPTH};

/// Largest `n` for which relations over the whole carrier `2^n` are built.
pub const CARRIER_RELATION_POINTS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    T0,
    THalf,
    T1,
    WSober,
    Sober,
    T2,
    T3,
    T3Half,
    T4,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::T0,
        Axiom::THalf,
        Axiom::T1,
        Axiom::WSober,
        Axiom::Sober,
        Axiom::T2,
        Axiom::T3,
        Axiom::T3Half,
        Axiom::T4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::T0 => "T0",
            Axiom::THalf => "T_HALF",
            Axiom::T1 => "T1",
            Axiom::WSober => "WSOBER",
            Axiom::Sober => "SOBER",
            Axiom::T2 => "T2",
            Axiom::T3 => "T3",
            Axiom::T3Half => "T3HALF",
            Axiom::T4 => "T4",
        }
    }

    pub fn from_name(name: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.name().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a failed axiom points at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// An element that is not generated, or a join-irreducible closed
    /// element with no atom.
    Element(ElementSet),
    /// Two disjoint closed elements that cannot be separated.
    Pair(ElementSet, ElementSet),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element(a) => write!(f, "{a}"),
            Witness::Pair(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    const PASS: Verdict = Verdict {
        holds: true,
        witness: None,
    };

    fn fail(w: Witness) -> Verdict {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }

    fn from_element(failure: Option<ElementSet>) -> Verdict {
        failure.map_or(Verdict::PASS, |a| Verdict::fail(Witness::Element(a)))
    }

    fn from_pair(failure: Option<(ElementSet, ElementSet)>) -> Verdict {
        failure.map_or(Verdict::PASS, |(a, b)| Verdict::fail(Witness::Pair(a, b)))
    }
}

/// `a ⊲ b` iff `◇a ≤ □b`.
pub fn mt_rather(m: &FinSpace, a: ElementSet, b: ElementSet) -> bool {
    m.closure(a).is_subset(m.interior(b))
}

/// `⊲` over the whole carrier, element ids being bitmasks.
pub fn rather_relation(m: &FinSpace) -> Relation {
    assert!(m.n() <= CARRIER_RELATION_POINTS, "carrier too large for a full relation");
    let size = m.carrier_size();
    let cl: Vec<ElementSet> = m.elements().map(|a| m.closure(a)).collect();
    let int: Vec<ElementSet> = m.elements().map(|a| m.interior(a)).collect();
    Relation::from_fn(size, |a, b| cl[a].is_subset(int[b]))
}

/// Inclusion over the whole carrier.
pub fn carrier_order(m: &FinSpace) -> Relation {
    let size = m.carrier_size();
    Relation::from_fn(size, |a, b| a & !b == 0)
}

/// `⊲⊲` over the whole carrier as the largest interpolative subrelation of `⊲`.
pub fn completely_relation(m: &FinSpace) -> Relation {
    interpolative_core(&rather_relation(m))
}

pub fn mt_completely(m: &FinSpace, a: ElementSet, b: ElementSet) -> bool {
    completely_relation(m).holds(a.bits() as usize, b.bits() as usize)
}

/// `⊲⊲` restricted to open elements, indexed like `m.opens()`.
///
/// Interpolants may always be taken open (replace `c` by `□c`), so this is
/// the interpolative core of `⊲` on `O(M)` and needs no carrier-sized table.
pub fn completely_on_opens(m: &FinSpace) -> Relation {
    let opens = m.opens();
    let cl: Vec<ElementSet> = opens.iter().map(|&u| m.closure(u)).collect();
    interpolative_core(&Relation::from_fn(opens.len(), |i, j| cl[i].is_subset(opens[j])))
}

/// `⊲⊲` restricted to closed elements, indexed like `m.closeds()`.
pub fn completely_on_closeds(m: &FinSpace) -> Relation {
    let closeds = m.closeds();
    let int: Vec<ElementSet> = closeds.iter().map(|&c| m.interior(c)).collect();
    interpolative_core(&Relation::from_fn(closeds.len(), |i, j| closeds[i].is_subset(int[j])))
}

/// Least pair of disjoint closed elements with no disjoint open
/// neighbourhoods. The smallest open above `c` is `⋀{u ∈ O(M) | c ≤ u}`,
/// so only those need comparing.
pub fn normality_failure(m: &FinSpace) -> Option<(ElementSet, ElementSet)> {
    let closeds = m.closeds();
    let hull = |c: ElementSet| meet_all(m.n(), m.opens().iter().copied().filter(|u| c.is_subset(*u)));
    let hulls: Vec<ElementSet> = closeds.iter().map(|&c| hull(c)).collect();
    for (i, &c) in closeds.iter().enumerate() {
        for (j, &d) in closeds.iter().enumerate() {
            if c.intersection(d).is_empty() && !hulls[i].intersection(hulls[j]).is_empty() {
                return Some((c, d));
            }
        }
    }
    None
}

/// Least pair of opens `a, b` with `a ∨ b = 1` and no closed `c ≤ a`,
/// `d ≤ b` with `c ∨ d = 1`.
fn conormality_failure(m: &FinSpace) -> Option<(ElementSet, ElementSet)> {
    let opens = m.opens();
    let core = |u: ElementSet| join_all(m.closeds().into_iter().filter(|c| c.is_subset(u)));
    let cores: Vec<ElementSet> = opens.iter().map(|&u| core(u)).collect();
    for (i, &a) in opens.iter().enumerate() {
        for (j, &b) in opens.iter().enumerate() {
            if a.union(b) == m.full() && cores[i].union(cores[j]) != m.full() {
                return Some((a, b));
            }
        }
    }
    None
}

/// Closed elements that are not the join of the closed elements strictly
/// below them, in canonical order. `∅` is the empty join and is excluded.
pub fn closed_join_irreducibles(m: &FinSpace) -> Vec<ElementSet> {
    let closeds = m.closeds();
    closeds
        .iter()
        .copied()
        .filter(|&p| !p.is_empty())
        .filter(|&p| {
            let below = closeds.iter().copied().filter(|&q| q != p && q.is_subset(p));
            join_all(below) != p
        })
        .collect()
}

/// Open elements that are not the meet of the opens strictly above them.
fn open_meet_irreducibles(m: &FinSpace) -> Vec<ElementSet> {
    let opens = m.opens();
    opens
        .iter()
        .copied()
        .filter(|&u| u != m.full())
        .filter(|&u| {
            let above = opens.iter().copied().filter(|&v| v != u && u.is_subset(v));
            meet_all(m.n(), above) != u
        })
        .collect()
}

fn weak_sobriety(m: &FinSpace) -> Verdict {
    let missing = closed_join_irreducibles(m)
        .into_iter()
        .find(|&p| !(0..m.n()).any(|x| m.closure(ElementSet::singleton(x)) == p));
    Verdict::from_element(missing)
}

/// `a = ⋁{b ∈ O(M) | b R a}` for every open `a`, with `R` given on opens.
fn opens_approximated(m: &FinSpace, r: impl Fn(usize, usize) -> bool) -> Verdict {
    let opens = m.opens();
    let failure = (0..opens.len())
        .find(|&j| join_all((0..opens.len()).filter(|&i| r(i, j)).map(|i| opens[i])) != opens[j])
        .map(|j| opens[j]);
    Verdict::from_element(failure)
}

/// `c = ⋀{d ∈ C(M) | c R d}` for every closed `c`, with `R` given on closeds.
fn closeds_approximated(m: &FinSpace, r: impl Fn(usize, usize) -> bool) -> Verdict {
    let closeds = m.closeds();
    let failure = (0..closeds.len())
        .find(|&i| meet_all(m.n(), (0..closeds.len()).filter(|&j| r(i, j)).map(|j| closeds[j])) != closeds[i])
        .map(|i| closeds[i]);
    Verdict::from_element(failure)
}

fn then(first: Verdict, rest: impl FnOnce() -> Verdict) -> Verdict {
    if first.holds {
        rest()
    } else {
        first
    }
}

/// Evaluates one axiom on `m`, with the canonically least witness on
/// failure. Spaces with at most one point satisfy everything.
pub fn mt_axiom(m: &FinSpace, which: Axiom) -> Verdict {
    if m.n() <= 1 {
        return Verdict::PASS;
    }
    let joins = |kind| Verdict::from_element(join_generation_failure(&family(m, kind).members, m));
    match which {
        Axiom::T0 => joins(FamilyKind::Wlc),
        Axiom::THalf => joins(FamilyKind::Lc),
        Axiom::T1 => joins(FamilyKind::Closed),
        Axiom::WSober => weak_sobriety(m),
        Axiom::Sober => {
            let verdict = then(weak_sobriety(m), || mt_axiom(m, Axiom::T0));
            if verdict.holds {
                for p in closed_join_irreducibles(m) {
                    let generic = (0..m.n())
                        .filter(|&x| m.closure(ElementSet::singleton(x)) == p)
                        .count();
                    assert_eq!(generic, 1, "sober algebra with a non-unique atom for {p}");
                }
            }
            verdict
        }
        Axiom::T2 => joins(FamilyKind::Gc),
        Axiom::T3 => then(mt_axiom(m, Axiom::T1), || {
            let opens = m.opens();
            opens_approximated(m, |i, j| mt_rather(m, opens[i], opens[j]))
        }),
        Axiom::T3Half => then(mt_axiom(m, Axiom::T1), || {
            let r = completely_on_opens(m);
            opens_approximated(m, |i, j| r.holds(i, j))
        }),
        Axiom::T4 => then(mt_axiom(m, Axiom::T1), || Verdict::from_pair(normality_failure(m))),
    }
}

/// The order-dual formulation of each axiom, evaluated independently.
pub fn dual_axiom_check(m: &FinSpace, which: Axiom) -> bool {
    if m.n() <= 1 {
        return true;
    }
    let meets = |kind| meet_generation_failure(&family(m, kind).members, m).is_none();
    match which {
        Axiom::T0 => meets(FamilyKind::Wlo),
        Axiom::THalf => meets(FamilyKind::Lo),
        Axiom::T1 => meets(FamilyKind::Open),
        Axiom::WSober => dual_weak_sobriety(m),
        Axiom::Sober => dual_weak_sobriety(m) && dual_axiom_check(m, Axiom::T0),
        Axiom::T2 => meets(FamilyKind::Go),
        Axiom::T3 => {
            let closeds = m.closeds();
            dual_axiom_check(m, Axiom::T1)
                && closeds_approximated(m, |i, j| mt_rather(m, closeds[i], closeds[j])).holds
        }
        Axiom::T3Half => {
            let r = completely_on_closeds(m);
            dual_axiom_check(m, Axiom::T1) && closeds_approximated(m, |i, j| r.holds(i, j)).holds
        }
        Axiom::T4 => dual_axiom_check(m, Axiom::T1) && conormality_failure(m).is_none(),
    }
}

/// Every meet-irreducible open is `□¬x` for an atom `x`.
fn dual_weak_sobriety(m: &FinSpace) -> bool {
    open_meet_irreducibles(m).into_iter().all(|u| {
        (0..m.n()).any(|x| m.interior(ElementSet::singleton(x).complement(m.n())) == u)
    })
}

/// The first open `u` in canonical order with `a ⊲ u ⊲ b`.
///
/// Requires the normality condition (disjoint closed elements have disjoint
/// open neighbourhoods); the `T1` half of `T4` is not needed.
pub fn interpolate(m: &FinSpace, a: ElementSet, b: ElementSet) -> Result<ElementSet> {
    if normality_failure(m).is_some() {
        return Err(MtError::NotNormal);
    }
    if !mt_rather(m, a, b) {
        return Err(MtError::NotRatherBelow { a, b });
    }
    let u = m
        .opens()
        .iter()
        .copied()
        .find(|&u| mt_rather(m, a, u) && mt_rather(m, u, b))
        .expect("normality yields an interpolant");
    Ok(u)
}

/// Verdicts for every axiom, plus the failure witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationProfile {
    pub t0: bool,
    pub t_half: bool,
    pub t1: bool,
    pub weakly_sober: bool,
    pub sober: bool,
    pub t2: bool,
    pub t3: bool,
    pub t3half: bool,
    pub t4: bool,
    pub witnesses: BTreeMap<Axiom, Witness>,
}

impl SeparationProfile {
    pub fn get(&self, which: Axiom) -> bool {
        match which {
            Axiom::T0 => self.t0,
            Axiom::THalf => self.t_half,
            Axiom::T1 => self.t1,
            Axiom::WSober => self.weakly_sober,
            Axiom::Sober => self.sober,
            Axiom::T2 => self.t2,
            Axiom::T3 => self.t3,
            Axiom::T3Half => self.t3half,
            Axiom::T4 => self.t4,
        }
    }

    /// Implications of the ladder that this profile breaks, as
    /// `(stronger, weaker)` pairs.
    pub fn ladder_violations(&self) -> Vec<(Axiom, Axiom)> {
        use Axiom::*;
        const LADDER: [(Axiom, Axiom); 9] = [
            (T4, T3Half),
            (T3Half, T3),
            (T3, T2),
            (T2, T1),
            (T1, THalf),
            (THalf, T0),
            (T2, Sober),
            (Sober, WSober),
            (Sober, T0),
        ];
        LADDER
            .into_iter()
            .filter(|&(strong, weak)| self.get(strong) && !self.get(weak))
            .collect()
    }
}

pub fn classify(m: &FinSpace) -> SeparationProfile {
    let mut witnesses = BTreeMap::new();
    let mut verdicts = BTreeMap::new();
    for ax in Axiom::ALL {
        let v = mt_axiom(m, ax);
        if let Some(w) = v.witness {
            witnesses.insert(ax, w);
        }
        verdicts.insert(ax, v.holds);
    }
    let profile = SeparationProfile {
        t0: verdicts[&Axiom::T0],
        t_half: verdicts[&Axiom::THalf],
        t1: verdicts[&Axiom::T1],
        weakly_sober: verdicts[&Axiom::WSober],
        sober: verdicts[&Axiom::Sober],
        t2: verdicts[&Axiom::T2],
        t3: verdicts[&Axiom::T3],
        t3half: verdicts[&Axiom::T3Half],
        t4: verdicts[&Axiom::T4],
        witnesses,
    };
    debug_assert_eq!(profile.ladder_violations(), vec![], "ladder broken on {m:?}");
    profile
}
