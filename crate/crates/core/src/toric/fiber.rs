//! Fibers of the configuration map over the full labeling-indexed ring.
//!
//! The fiber of an image vector is the set of monomials (nonnegative
//! exponent vectors over all 2^n variables) sharing that image. A set of
//! binomial moves connects the fiber when the graph with one edge per
//! applicable move is connected; a Markov basis connects every fiber.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::config::Configuration;
use crate::error::{Error, Result};

use super::expo::{divides, rewrite, Expo};
use super::{Binomial, Budget};

/// All monomials over the 2^n labeling variables with the given image,
/// sorted. Errors out when the fiber exceeds the budget's fiber bound.
pub fn fiber_monomials(c: &Configuration, image: [i64; 4], budget: &Budget) -> Result<Vec<Expo>> {
    let columns: Vec<[i64; 4]> = c.columns().iter().map(|v| v.as_i64()).collect();
    let mut out: Vec<Expo> = Vec::new();
    let mut partial = vec![0u32; columns.len()];
    search(&columns, 0, image, &mut partial, &mut out, budget.max_fiber)?;
    out.sort_unstable();
    Ok(out)
}

fn search(
    columns: &[[i64; 4]],
    var: usize,
    remaining: [i64; 4],
    partial: &mut [u32],
    out: &mut Vec<Expo>,
    max_fiber: usize,
) -> Result<()> {
    if remaining == [0; 4] {
        if out.len() >= max_fiber {
            return Err(Error::FiberTooLarge { bound: max_fiber });
        }
        out.push(partial.to_vec());
        // Later variables stay zero on this branch; keep exploring siblings.
    }
    if var == columns.len() || remaining.iter().any(|&x| x < 0) || remaining == [0; 4] {
        return Ok(());
    }
    let col = columns[var];
    let mut cap = i64::MAX;
    for r in 0..4 {
        if col[r] > 0 {
            cap = cap.min(remaining[r] / col[r]);
        }
    }
    debug_assert!(cap < i64::MAX, "columns are nonzero for n >= 2");
    for e in (0..=cap.max(0)).rev() {
        partial[var] = e as u32;
        let rest = [
            remaining[0] - e * col[0],
            remaining[1] - e * col[1],
            remaining[2] - e * col[2],
            remaining[3] - e * col[3],
        ];
        search(columns, var + 1, rest, partial, out, max_fiber)?;
    }
    partial[var] = 0;
    Ok(())
}

/// Dense full-ring exponent vector of a sparse labeling-indexed monomial.
fn dense(c: &Configuration, sparse: &[(crate::config::Labeling, u32)]) -> Expo {
    let mut out = vec![0u32; c.column_count()];
    for (l, e) in sparse {
        out[l.index() as usize] += e;
    }
    out
}

/// The image of a monomial under the configuration.
pub fn monomial_image(c: &Configuration, monomial: &Expo) -> [i64; 4] {
    let mut out = [0i64; 4];
    for (col, &e) in c.columns().iter().zip(monomial) {
        let v = col.as_i64();
        for r in 0..4 {
            out[r] += v[r] * e as i64;
        }
    }
    out
}

/// True iff the moves connect the whole fiber of the image (trivially true
/// for fibers of size <= 1).
pub fn moves_connect_fiber(
    c: &Configuration,
    image: [i64; 4],
    moves: &[Binomial],
    budget: &Budget,
) -> Result<bool> {
    let fiber = fiber_monomials(c, image, budget)?;
    if fiber.len() <= 1 {
        return Ok(true);
    }
    let dense_moves: Vec<(Expo, Expo)> = moves
        .iter()
        .map(|m| (dense(c, &m.plus), dense(c, &m.minus)))
        .collect();
    let index: BTreeMap<&Expo, usize> = fiber.iter().zip(0..).collect();
    let mut component: Vec<usize> = (0..fiber.len()).collect();
    fn find(component: &mut [usize], i: usize) -> usize {
        let mut root = i;
        while component[root] != root {
            root = component[root];
        }
        let mut walk = i;
        while component[walk] != root {
            let next = component[walk];
            component[walk] = root;
            walk = next;
        }
        root
    }
    for (i, monomial) in fiber.iter().enumerate() {
        for (p, q) in &dense_moves {
            if divides(p, monomial) {
                let target = rewrite(monomial, p, q);
                let j = index[&target];
                let (a, b) = (find(&mut component, i), find(&mut component, j));
                component[a] = b;
            }
        }
    }
    let root = find(&mut component, 0);
    Ok((0..fiber.len()).all(|i| find(&mut component, i) == root))
}
