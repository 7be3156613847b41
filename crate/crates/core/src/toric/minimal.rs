//! Degree-by-degree minimalization of a generating set.
//!
//! Candidates are processed in ascending degree. A candidate of degree d is
//! kept exactly when its two monomials are disconnected in the fiber graph
//! whose moves are the generators kept so far (all of degree <= d). Each
//! kept element therefore merges two components of its fiber, so the number
//! kept per degree is the graded Betti number and independent of candidate
//! order.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};

use super::expo::{degree, divides, rewrite, Expo};
use super::Budget;

/// Filters `markov` down to a minimal generating set (exponent pairs over
/// the engine ring).
pub(crate) fn minimalize(markov: &[(Expo, Expo)], budget: &Budget) -> Result<Vec<(Expo, Expo)>> {
    let mut candidates: Vec<(Expo, Expo)> = markov
        .iter()
        .map(|(a, b)| {
            if a <= b {
                (a.clone(), b.clone())
            } else {
                (b.clone(), a.clone())
            }
        })
        .collect();
    candidates.sort_unstable_by_key(|(a, b)| (degree(a), a.clone(), b.clone()));
    candidates.dedup();
    let mut kept: Vec<(Expo, Expo)> = Vec::new();
    for (a, b) in candidates {
        if !connected(&a, &b, &kept, budget)? {
            kept.push((a, b));
        }
    }
    Ok(kept)
}

/// Breadth-first search inside the fiber of `from`, using the moves both
/// ways, looking for `to`.
pub(crate) fn connected(
    from: &Expo,
    to: &Expo,
    moves: &[(Expo, Expo)],
    budget: &Budget,
) -> Result<bool> {
    if from == to {
        return Ok(true);
    }
    let mut seen: BTreeSet<Expo> = BTreeSet::new();
    let mut queue: VecDeque<Expo> = VecDeque::new();
    seen.insert(from.clone());
    queue.push_back(from.clone());
    while let Some(state) = queue.pop_front() {
        for (p, q) in moves {
            for (src, dst) in [(p, q), (q, p)] {
                if divides(src, &state) {
                    let next = rewrite(&state, src, dst);
                    if next == *to {
                        return Ok(true);
                    }
                    if seen.insert(next.clone()) {
                        if seen.len() > budget.max_fiber {
                            return Err(Error::FiberTooLarge {
                                bound: budget.max_fiber,
                            });
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(false)
}
