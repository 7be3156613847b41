//! Buchberger's algorithm specialized to binomial ideals.
//!
//! Every S-pair of two binomials is again a binomial and reduction of a
//! binomial by a binomial stays binomial, so the whole computation is pure
//! exponent-vector arithmetic with coefficients fixed at +/-1. Pairs are
//! processed by ascending lcm degree with the coprime-leading-term
//! criterion; the result is inter-reduced to the unique reduced basis for
//! the order.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use crate::error::{Error, Result};

use super::expo::{degree, divides, is_coprime, lcm, rewrite, Expo};
use super::order::OrderKey;
use super::Budget;

/// An oriented binomial `x^lead - x^tail` with `lead > tail` in the active
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Bin {
    pub lead: Expo,
    pub tail: Expo,
}

impl Bin {
    /// Orients a monomial pair under the order; `None` if the difference is
    /// zero.
    pub(crate) fn oriented(a: Expo, b: Expo, ord: &OrderKey) -> Option<Bin> {
        match ord.cmp(&a, &b) {
            Ordering::Greater => Some(Bin { lead: a, tail: b }),
            Ordering::Less => Some(Bin { lead: b, tail: a }),
            Ordering::Equal => None,
        }
    }
}

/// Reduces a monomial to its normal form modulo the leading terms.
fn reduce_monomial(mut m: Expo, basis: &[Bin]) -> Expo {
    'outer: loop {
        for g in basis {
            if divides(&g.lead, &m) {
                m = rewrite(&m, &g.lead, &g.tail);
                continue 'outer;
            }
        }
        return m;
    }
}

/// Fully reduces an unoriented monomial pair; `None` when it drops to zero.
fn reduce_pair(a: Expo, b: Expo, basis: &[Bin], ord: &OrderKey) -> Option<Bin> {
    let a = reduce_monomial(a, basis);
    let b = reduce_monomial(b, basis);
    Bin::oriented(a, b, ord)
}

/// Runs Buchberger on the given binomial generators and returns the reduced
/// Groebner basis under the order.
pub(crate) fn groebner(gens: &[(Expo, Expo)], ord: &OrderKey, budget: &Budget) -> Result<Vec<Bin>> {
    let mut basis: Vec<Bin> = Vec::new();
    for (a, b) in gens {
        if let Some(bin) = Bin::oriented(a.clone(), b.clone(), ord) {
            basis.push(bin);
        }
    }
    basis.sort_unstable_by(|x, y| ord.cmp(&x.lead, &y.lead));
    basis.dedup();

    let mut pairs: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    for i in 0..basis.len() {
        for j in 0..i {
            let score = degree(&lcm(&basis[j].lead, &basis[i].lead));
            pairs.push(Reverse((score, j, i)));
        }
    }
    let mut processed = 0usize;
    let mut treated: alloc::collections::BTreeSet<(usize, usize)> = alloc::collections::BTreeSet::new();
    while let Some(Reverse((_, i, j))) = pairs.pop() {
        processed += 1;
        if processed > budget.max_spairs {
            return Err(Error::BudgetExhausted {
                what: "S-pairs in one Groebner run",
                limit: budget.max_spairs,
            });
        }
        treated.insert((i, j));
        let (gi, gj) = (&basis[i], &basis[j]);
        if is_coprime(&gi.lead, &gj.lead) {
            continue;
        }
        let common = lcm(&gi.lead, &gj.lead);
        // Chain criterion: a third leading term dividing the lcm, whose
        // pairs with both ends are already treated, makes this pair
        // redundant.
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && treated.contains(&(k.min(i), k.max(i)))
                && treated.contains(&(k.min(j), k.max(j)))
                && divides(&basis[k].lead, &common)
        });
        if chained {
            continue;
        }
        let a = rewrite(&common, &gi.lead, &gi.tail);
        let b = rewrite(&common, &gj.lead, &gj.tail);
        if let Some(s) = reduce_pair(a, b, &basis, ord) {
            if basis.len() + 1 > budget.max_basis {
                return Err(Error::BudgetExhausted {
                    what: "basis size in one Groebner run",
                    limit: budget.max_basis,
                });
            }
            basis.push(s);
            let new_index = basis.len() - 1;
            for k in 0..new_index {
                let score = degree(&lcm(&basis[k].lead, &basis[new_index].lead));
                pairs.push(Reverse((score, k, new_index)));
            }
        }
    }
    Ok(inter_reduce(basis, ord))
}

/// Removes elements whose leading term is divisible by another leading term
/// and reduces every tail to normal form; the outcome is the reduced basis.
fn inter_reduce(mut basis: Vec<Bin>, ord: &OrderKey) -> Vec<Bin> {
    basis.sort_unstable_by(|x, y| ord.cmp(&x.lead, &y.lead));
    basis.dedup();
    let mut minimal: Vec<Bin> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| divides(&h.lead, &g.lead)) {
            minimal.push(g);
        }
    }
    let snapshot = minimal.clone();
    for g in &mut minimal {
        g.tail = reduce_monomial(g.tail.clone(), &snapshot);
    }
    minimal.sort_unstable_by(|x, y| ord.cmp(&x.lead, &y.lead));
    minimal
}

/// Normal form of a monomial pair modulo a reduced basis; `true` iff the
/// binomial reduces to zero (lies in the ideal).
pub(crate) fn reduces_to_zero(a: &Expo, b: &Expo, basis: &[Bin]) -> bool {
    reduce_monomial(a.clone(), basis) == reduce_monomial(b.clone(), basis)
}
