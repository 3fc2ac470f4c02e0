//! Acceptance criteria, one line each on stdout:
//! `criterion N: PASS|FAIL (<detail>)`.

use std::io::Write;
use std::time::{Duration, Instant};

use mtkit::theorems::theorem;
use mtkit_core::enumerate::{enumerate_by_subset_families, enumerate_topologies, preorders, ORACLE_CEILING};
use mtkit_core::functors::{functor_o_hom, o_not_faithful_witness, vartheta_analysis};
use mtkit_core::interpolation::completely_below_by_chains;
use mtkit_core::separation::{
    carrier_order, completely_relation, normality_failure, rather_relation, urysohn_family, DEFAULT_URYSOHN_DEPTH,
};
use mtkit_core::{check_mt_morphism, FinSpace};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn upto(max_n: usize) -> Vec<FinSpace> {
    (1..=max_n).flat_map(|n| enumerate_topologies(n).unwrap()).collect()
}

/// Runs `id` on every space; returns the first violation.
fn suite(ids: &[&str], spaces: &[FinSpace]) -> Result<(), String> {
    for id in ids {
        let t = theorem(id).unwrap_or_else(|| panic!("unknown theorem {id}"));
        if let Some((m, w)) = spaces.iter().find_map(|m| t.check(m).map(|w| (m, w))) {
            return Err(format!("{id} on {}: {w}", m.canonical_id()));
        }
    }
    Ok(())
}

fn outcome(result: Result<String, String>, elapsed: Duration, limit: Option<Duration>) -> Outcome {
    let ms = elapsed.as_secs_f64() * 1000.0;
    match result {
        Ok(detail) => match limit {
            Some(limit) if elapsed > limit => Outcome {
                pass: false,
                detail: format!("{detail}; {ms:.0} ms exceeds {} ms", limit.as_millis()),
            },
            _ => Outcome {
                pass: true,
                detail: format!("{detail}; {ms:.0} ms"),
            },
        },
        Err(detail) => Outcome { pass: false, detail },
    }
}

fn kuratowski_and_frames() -> Result<String, String> {
    let spaces = upto(4);
    if spaces.len() != 389 {
        return Err(format!("expected 389 spaces, got {}", spaces.len()));
    }
    suite(&["kuratowski", "opens-frame", "interior-routes"], &spaces)?;
    Ok("389 spaces".into())
}

fn ladder() -> Result<String, String> {
    let spaces: Vec<FinSpace> = (0..=4).flat_map(|n| enumerate_topologies(n).unwrap()).collect();
    suite(&["ladder", "t2-implies-sober"], &spaces)?;
    Ok(format!("{} spaces", spaces.len()))
}

fn equivalences() -> Result<String, String> {
    let spaces: Vec<FinSpace> = (0..=4).flat_map(|n| enumerate_topologies(n).unwrap()).collect();
    let ids = [
        "t1-iff-thalf-subfit",
        "t4-iff-t1-normal-frame",
        "t3half-iff-t1-cregular-frame",
        "t2-implies-hausdorff-frame",
    ];
    suite(&ids, &spaces)?;
    Ok(format!("{} statements on {} spaces", ids.len(), spaces.len()))
}

fn envelope_round_trip() -> Result<String, String> {
    let spaces: Vec<FinSpace> = (0..=3).flat_map(|n| enumerate_topologies(n).unwrap()).collect();
    suite(&["envelope-opens", "thalf-iff-envelope", "envelope-axioms", "envelope-generic"], &spaces)?;
    Ok(format!("{} spaces", spaces.len()))
}

fn vartheta() -> Result<String, String> {
    let spaces: Vec<FinSpace> = (0..=4).flat_map(|n| enumerate_topologies(n).unwrap()).collect();
    let mut homeomorphisms = 0;
    for m in &spaces {
        let r = vartheta_analysis(m);
        if !r.consistent() {
            return Err(format!("{}: {r:?}", m.canonical_id()));
        }
        homeomorphisms += r.homeomorphism as usize;
    }
    Ok(format!("{} spaces, {homeomorphisms} homeomorphisms", spaces.len()))
}

/// A random preorder on `n` points: random relation, reflexive-transitive closure.
fn random_space(rng: &mut ChaCha8Rng, n: usize) -> FinSpace {
    let density = rng.gen_range(0.05..0.4);
    let mut leq: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| x == y || rng.gen_bool(density)).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    FinSpace::from_preorder(n, |x, y| leq[x][y]).unwrap()
}

fn completely_below_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x006d_746b_6974);
    let mut spaces: Vec<FinSpace> = (0..=3).flat_map(|n| enumerate_topologies(n).unwrap()).collect();
    spaces.extend(enumerate_topologies(4).unwrap());
    spaces.extend(enumerate_topologies(5).unwrap().choose_multiple(&mut rng, 40).cloned());
    for n in 6..=8 {
        spaces.extend((0..8).map(|_| random_space(&mut rng, n)));
    }
    spaces.push(FinSpace::discrete(8));
    spaces.push(FinSpace::from_preorder(8, |x, y| x <= y).unwrap());
    for m in &spaces {
        let fix = completely_relation(m);
        let chains = completely_below_by_chains(&rather_relation(m), &carrier_order(m));
        if fix != chains {
            return Err(format!("disagreement on {}", m.canonical_id()));
        }
    }
    Ok(format!("{} algebras, up to 8 atoms", spaces.len()))
}

fn urysohn() -> Result<String, String> {
    let (mut normal, mut pairs) = (0, 0);
    for m in upto(4) {
        if normality_failure(&m).is_some() {
            continue;
        }
        normal += 1;
        for c in m.closeds() {
            for &a in m.opens().iter().filter(|a| c.is_subset(**a)) {
                pairs += 1;
                let f = urysohn_family(&m, c, a, DEFAULT_URYSOHN_DEPTH)
                    .map_err(|e| format!("{}: c = {c}, a = {a}: {e}", m.canonical_id()))?;
                if let Some(v) = f.violation(&m, c, a) {
                    return Err(format!("{}: c = {c}, a = {a}: {v}", m.canonical_id()));
                }
            }
        }
    }
    Ok(format!("{normal} normal spaces, {pairs} pairs, depth {DEFAULT_URYSOHN_DEPTH}"))
}

fn counts() -> Result<String, String> {
    const PINNED: [usize; 5] = [1, 1, 4, 29, 355];
    for (n, &pinned) in PINNED.iter().enumerate().take(ORACLE_CEILING + 1) {
        let oracle = enumerate_by_subset_families(n).map_err(|e| e.to_string())?;
        let fast = enumerate_topologies(n).map_err(|e| e.to_string())?;
        let from_preorders = preorders(n).map_err(|e| e.to_string())?.len();
        if oracle != fast || from_preorders != oracle.len() {
            return Err(format!("n = {n}: oracle {}, enumeration {}, preorders {from_preorders}", oracle.len(), fast.len()));
        }
        if oracle.len() != pinned {
            return Err(format!("n = {n}: {} topologies, pinned {pinned}", oracle.len()));
        }
    }
    Ok("1, 4, 29, 355 for n = 1..4".into())
}

fn classical() -> Result<String, String> {
    let spaces: Vec<FinSpace> = (0..=4).flat_map(|n| enumerate_topologies(n).unwrap()).collect();
    suite(&["classical-agreement"], &spaces)?;
    Ok(format!("8 axioms on {} spaces", spaces.len()))
}

fn not_faithful() -> Result<String, String> {
    let (f, g) = o_not_faithful_witness();
    if f.source() != f.target() || g.source() != g.target() || f.source() != g.source() {
        return Err("not endomorphisms of one algebra".into());
    }
    for h in [&f, &g] {
        check_mt_morphism(h.source(), h.target(), h.pointmap()).map_err(|e| e.to_string())?;
    }
    let differ = f.source().elements().any(|a| f.apply(a) != g.apply(a));
    if f == g || !differ {
        return Err("the two morphisms coincide".into());
    }
    let (of, og) = (functor_o_hom(&f), functor_o_hom(&g));
    if of != og || of.map() != og.map() {
        return Err("O-restrictions differ".into());
    }
    Ok(format!("pointmaps {:?} and {:?}, O-map {:?}", f.pointmap(), g.pointmap(), of.map()))
}

#[test]
fn acceptance() {
    type Criterion = (fn() -> Result<String, String>, Option<u64>);
    let criteria: [Criterion; 10] = [
        (kuratowski_and_frames, Some(5)),
        (ladder, None),
        (equivalences, Some(60)),
        (envelope_round_trip, None),
        (vartheta, None),
        (completely_below_oracle, None),
        (urysohn, None),
        (counts, Some(10)),
        (classical, None),
        (not_faithful, None),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout();
    for (i, (run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let o = outcome(result, start.elapsed(), limit.map(Duration::from_secs));
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        writeln!(out, "criterion {}: {verdict} ({})", i + 1, o.detail).unwrap();
        if !o.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
