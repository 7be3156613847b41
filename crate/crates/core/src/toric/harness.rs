//! Per-tree report probing the degree conjectures.

use alloc::string::String;
use alloc::vec::Vec;

use crate::config::Configuration;
use crate::error::Result;
use crate::tree::Tree;

use super::{minimal_generators, Budget, GeneratingSet};

/// What the minimal generating set of one tree says about the conjectures:
/// degree-2 generation for trees with uniform child counts, the cubic
/// profile of paths, and whether some generator reaches degree n.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub tree: String,
    pub n: usize,
    pub is_binary: bool,
    /// The shared out-degree when every internal node has the same number of
    /// children (>= 2).
    pub uniform_child_count: Option<usize>,
    pub minimal: GeneratingSet,
    /// Max generator degree <= 2.
    pub generated_in_degree_2: bool,
    /// For paths: (expected cubic count `2n - 4`, observed cubic count).
    pub path_cubics: Option<(usize, usize)>,
    /// Some minimal generator has degree n.
    pub has_degree_n_generator: bool,
}

/// Computes the minimal generating set of the tree's ideal and summarizes
/// the conjecture-relevant facts.
pub fn conjecture_harness(t: &Tree, budget: &Budget) -> Result<ConjectureReport> {
    let c = Configuration::build(t)?;
    let minimal = minimal_generators(&c, budget)?;
    let n = t.n();
    let kids = t.children();
    let internal_degrees: Vec<usize> = kids
        .iter()
        .skip(1)
        .map(Vec::len)
        .filter(|&d| d > 0)
        .collect();
    let uniform_child_count = match internal_degrees.split_first() {
        Some((&d, rest)) if d >= 2 && rest.iter().all(|&e| e == d) => Some(d),
        _ => None,
    };
    let is_path = (2..=n).all(|j| t.parent(j) == j - 1);
    let path_cubics = is_path.then(|| {
        let cubics = minimal.degree_histogram.get(&3).copied().unwrap_or(0);
        (2 * n - 4, cubics)
    });
    Ok(ConjectureReport {
        tree: t.canonical_string(),
        n,
        is_binary: t.is_binary(),
        generated_in_degree_2: minimal.max_degree <= 2,
        has_degree_n_generator: minimal.max_degree as usize == n,
        uniform_child_count,
        path_cubics,
        minimal,
    })
}
