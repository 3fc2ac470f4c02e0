//! Completely-below relations on finite carriers.
//!
//! A rational-indexed chain `b ≤ c_0`, `c_1 ≤ a`, `p < q ⇒ c_p R c_q` exists
//! on a finite carrier exactly when `(b, a)` survives in the largest
//! interpolative subrelation of `R` (given that `R` is monotone: shrinking
//! the left side or growing the right side preserves it). Two independent
//! routes are provided: the fixpoint, and a bounded chain search used as
//! its oracle.

use crate::bits::{BitSet, Relation};

/// Largest subrelation `S ⊆ r` with `x S y ⇒ ∃z: x S z ∧ z S y`.
///
/// Computed by `R₀ = r`, `R_{k+1} = {(x,y) ∈ R_k | ∃z: x R_k z ∧ z R_k y}`
/// until stable.
pub fn interpolative_core(r: &Relation) -> Relation {
    let mut cur = r.clone();
    loop {
        let cols = cur.transpose();
        let mut next = Relation::empty(cur.size());
        let mut changed = false;
        for (x, y) in cur.pairs() {
            if cur.row(x).intersects(cols.row(y)) {
                next.set(x, y, true);
            } else {
                changed = true;
            }
        }
        if !changed {
            return next;
        }
        cur = next;
    }
}

/// Smallest dyadic depth `d` such that a chain with `2^d` steps over a
/// carrier of `size` elements must revisit an element.
pub fn sufficient_depth(size: usize) -> u32 {
    let mut d = 0;
    while (1usize << d) < size.max(1) {
        d += 1;
    }
    d
}

/// Searches for a chain `c_0 r c_1 r ... r c_K` with `K = 2^depth`,
/// `b ≤ c_0` and `c_K ≤ a`, where `order` is the carrier order.
///
/// This is the dyadic family at level `depth` read left to right; for a
/// monotone `r` consecutive links imply all the `p < q` links.
pub fn dyadic_chain_exists(r: &Relation, order: &Relation, b: usize, a: usize, depth: u32) -> bool {
    let steps = 1usize << depth;
    let mut frontier = order.row(b).clone();
    for _ in 0..steps {
        let mut next = BitSet::new(r.size());
        for c in frontier.iter() {
            next.union_with(r.row(c));
        }
        if next == frontier {
            break;
        }
        frontier = next;
        if frontier.is_empty() {
            return false;
        }
    }
    let found = frontier.iter().any(|c| order.holds(c, a));
    found
}

/// The completely-below relation obtained by running the chain search on
/// every pair at a depth large enough to force a repeated element.
pub fn completely_below_by_chains(r: &Relation, order: &Relation) -> Relation {
    let depth = sufficient_depth(r.size()) + 1;
    Relation::from_fn(r.size(), |b, a| dyadic_chain_exists(r, order, b, a, depth))
}
