use std::collections::BTreeMap;

use mtkit_core::enumerate::{enumerate_topologies, ENUMERATION_CEILING};
use mtkit_core::functors::omega;
use mtkit_core::separation::{classify, Axiom, SeparationProfile};
use mtkit_core::{frame_axiom, FinSpace, FrameAxiom, MtError};
use rayon::prelude::*;
use serde::Serialize;

/// Default bound on `n` for enumeration-driven commands.
pub const DEFAULT_MAX_POINTS: usize = 4;

/// `MTKIT_MAX_POINTS` if set and parseable, else the default; never above
/// the enumeration ceiling.
pub fn max_points() -> usize {
    std::env::var("MTKIT_MAX_POINTS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_POINTS)
        .min(ENUMERATION_CEILING)
}

pub fn check_bound(n: usize) -> Result<(), MtError> {
    let max = max_points();
    if n > max {
        return Err(MtError::BoundExceeded { n, max });
    }
    Ok(())
}

pub fn spaces(n: usize) -> Result<Vec<FinSpace>, MtError> {
    check_bound(n)?;
    enumerate_topologies(n)
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub space_id: String,
    pub profile: BTreeMap<&'static str, bool>,
    pub witnesses: BTreeMap<&'static str, String>,
    pub frame: BTreeMap<&'static str, bool>,
    #[serde(skip)]
    pub separation: SeparationProfile,
}

pub fn profile_map(p: &SeparationProfile) -> BTreeMap<&'static str, bool> {
    Axiom::ALL.iter().map(|&a| (a.name(), p.get(a))).collect()
}

pub fn witness_map(p: &SeparationProfile) -> BTreeMap<&'static str, String> {
    p.witnesses.iter().map(|(a, w)| (a.name(), w.to_string())).collect()
}

pub fn frame_profile(m: &FinSpace) -> BTreeMap<&'static str, bool> {
    let o = omega(m);
    FrameAxiom::ALL.iter().map(|&a| (a.name(), frame_axiom(&o, a))).collect()
}

pub fn census_row(m: &FinSpace) -> CensusRow {
    let separation = classify(m);
    CensusRow {
        n: m.n(),
        space_id: m.canonical_id(),
        profile: profile_map(&separation),
        witnesses: witness_map(&separation),
        frame: frame_profile(m),
        separation,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Census {
    pub n: usize,
    pub rows: Vec<CensusRow>,
    /// Number of rows satisfying each axiom, separation and frame alike.
    pub counts: BTreeMap<&'static str, usize>,
}

/// One row per labeled topology on `n` points, ordered by space id.
pub fn census(n: usize) -> Result<Census, MtError> {
    let mut rows: Vec<CensusRow> = spaces(n)?.par_iter().map(census_row).collect();
    rows.sort_by(|a, b| a.space_id.cmp(&b.space_id));
    let mut counts = BTreeMap::new();
    for row in &rows {
        for (name, &holds) in row.profile.iter().chain(row.frame.iter()) {
            *counts.entry(*name).or_insert(0) += usize::from(holds);
        }
    }
    Ok(Census { n, rows, counts })
}
