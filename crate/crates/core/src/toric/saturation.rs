//! Markov bases by saturating the lattice-basis ideal.
//!
//! Starting from binomials of a (saturated) kernel lattice basis, the toric
//! ideal is the saturation of that ideal with respect to the product of all
//! variables. Because the ideal is homogeneous, saturating by one variable
//! is a single Groebner computation under a degrevlex order in which that
//! variable is cheapest, followed by dividing each element by its largest
//! power; doing this for every variable in turn yields a generating set of
//! the full toric ideal.

use alloc::vec::Vec;

use crate::error::Result;

use super::buchberger::groebner;
use super::expo::Expo;
use super::kernel::kernel_basis;
use super::order::OrderKey;
use super::ring::Ring;
use super::Budget;

/// Splits a kernel vector into the exponent pair of its binomial.
fn split(v: &[i64]) -> (Expo, Expo) {
    let plus: Expo = v.iter().map(|&x| if x > 0 { x as u32 } else { 0 }).collect();
    let minus: Expo = v.iter().map(|&x| if x < 0 { (-x) as u32 } else { 0 }).collect();
    (plus, minus)
}

/// Divides out every variable power common to both monomials. The target
/// ideal is prime and contains no variable, so dividing a binomial of it by
/// a variable stays inside; doing this eagerly keeps intermediate degrees
/// down without affecting which ideal the saturation converges to.
fn strip_common_factors(pair: (Expo, Expo)) -> (Expo, Expo) {
    let (mut lead, mut tail) = pair;
    for j in 0..lead.len() {
        let k = lead[j].min(tail[j]);
        lead[j] -= k;
        tail[j] -= k;
    }
    (lead, tail)
}

/// Quadratic and cubic members of the toric ideal, found by matching column
/// sums directly. Seeding the saturation with them keeps the intermediate
/// ideals close to their final prime shape.
fn low_degree_relations(ring: &Ring) -> Vec<(Expo, Expo)> {
    let m = ring.variables();
    let mut out: Vec<(Expo, Expo)> = Vec::new();
    let mut by_sum: alloc::collections::BTreeMap<[i64; 4], Vec<Expo>> =
        alloc::collections::BTreeMap::new();
    let push = |monomial: Expo, by_sum: &mut alloc::collections::BTreeMap<[i64; 4], Vec<Expo>>| {
        by_sum
            .entry(ring.image(&monomial))
            .or_default()
            .push(monomial);
    };
    for i in 0..m {
        for j in i..m {
            let mut e = alloc::vec![0u32; m];
            e[i] += 1;
            e[j] += 1;
            push(e, &mut by_sum);
            for k in j..m {
                let mut e = alloc::vec![0u32; m];
                e[i] += 1;
                e[j] += 1;
                e[k] += 1;
                push(e, &mut by_sum);
            }
        }
    }
    for group in by_sum.into_values() {
        for other in group.iter().skip(1) {
            out.push(strip_common_factors((group[0].clone(), other.clone())));
        }
    }
    out
}

/// A generating set of the toric ideal of the ring's columns, as exponent
/// pairs over the distinct variables.
pub(crate) fn markov_internal(ring: &Ring, budget: &Budget) -> Result<Vec<(Expo, Expo)>> {
    let mut gens: Vec<(Expo, Expo)> = kernel_basis(&ring.cols).iter().map(|v| split(v)).collect();
    gens.extend(low_degree_relations(ring));
    gens.sort_unstable();
    gens.dedup();
    for var in 0..ring.variables() {
        let ord = OrderKey::degrevlex_cheapest(var);
        let gb = groebner(&gens, &ord, budget)?;
        gens = gb
            .into_iter()
            .map(|b| strip_common_factors((b.lead, b.tail)))
            .collect();
        gens.sort_unstable();
        gens.dedup();
    }
    Ok(gens)
}
