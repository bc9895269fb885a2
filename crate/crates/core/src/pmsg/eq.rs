//! The decision procedure for process equivalence.

use super::normalize::{alpha_canonical_proc, normalize_proc_fuel, DEFAULT_FUEL};
use super::rewrite::step_all;
use super::types::Proc;
use std::collections::BTreeSet;

/// Verdict of `proc_eq`: sound, not complete. `Unknown` carries the search
/// depth that was exhausted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    NotEqual,
    Unknown(usize),
}

/// Canonical forms decide most instances; on disagreement a bounded
/// bidirectional search over single rewrite steps is tried before giving up.
/// The two terms must use the same free channel names.
pub fn proc_eq(p: &Proc, q: &Proc) -> Equivalence {
    proc_eq_depth(p, q, 3)
}

pub fn proc_eq_depth(p: &Proc, q: &Proc, depth: usize) -> Equivalence {
    let np = match normalize_proc_fuel(p, DEFAULT_FUEL) {
        Ok(t) => t,
        Err(_) => return Equivalence::Unknown(0),
    };
    let nq = match normalize_proc_fuel(q, DEFAULT_FUEL) {
        Ok(t) => t,
        Err(_) => return Equivalence::Unknown(0),
    };
    if np == nq {
        return Equivalence::Equal;
    }

    // Frontier search: all one-step reducts of anything seen so far,
    // renormalised; meet in the middle.
    let mut seen_p: BTreeSet<Proc> = [np.clone()].into();
    let mut seen_q: BTreeSet<Proc> = [nq.clone()].into();
    let mut frontier_p = vec![np];
    let mut frontier_q = vec![nq];
    for d in 0..depth {
        let mut next_p = Vec::new();
        for t in &frontier_p {
            for (r, _) in step_all(t) {
                if let Ok(n) = normalize_proc_fuel(&r, DEFAULT_FUEL) {
                    let n = alpha_canonical_proc(&n);
                    if seen_p.insert(n.clone()) {
                        next_p.push(n);
                    }
                }
            }
        }
        let mut next_q = Vec::new();
        for t in &frontier_q {
            for (r, _) in step_all(t) {
                if let Ok(n) = normalize_proc_fuel(&r, DEFAULT_FUEL) {
                    let n = alpha_canonical_proc(&n);
                    if seen_q.insert(n.clone()) {
                        next_q.push(n);
                    }
                }
            }
        }
        if seen_p.intersection(&seen_q).next().is_some() {
            return Equivalence::Equal;
        }
        if next_p.is_empty() && next_q.is_empty() {
            // Both reduction graphs fully explored.
            return Equivalence::NotEqual;
        }
        frontier_p = next_p;
        frontier_q = next_q;
        if frontier_p.is_empty() && frontier_q.is_empty() {
            return Equivalence::NotEqual;
        }
        let _ = d;
    }
    Equivalence::Unknown(depth)
}
