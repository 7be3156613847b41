use std::time::Instant;

use phylotoric_core::config::Configuration;
use phylotoric_core::toric::{markov_basis, minimal_generators, Budget};
use phylotoric_core::tree::{enumerate_binary_trees, Tree};

fn main() {
    let budget = Budget::default();
    let mut trees: Vec<(String, Tree)> = enumerate_binary_trees(7)
        .unwrap()
        .enumerate()
        .map(|(i, t)| (format!("binary7 #{i}"), t))
        .collect();
    trees.push(("path7".into(), Tree::path(7).unwrap()));
    for (label, t) in trees {
        let c = Configuration::build(&t).unwrap();
        let start = Instant::now();
        let markov = markov_basis(&c, &budget).unwrap();
        println!(
            "{label}: markov {} gens (max degree {}) in {:?}",
            markov.len(),
            markov.max_degree,
            start.elapsed()
        );
        let start = Instant::now();
        let minimal = minimal_generators(&c, &budget).unwrap();
        println!(
            "{label}: minimal {} gens (max degree {}) in {:?}",
            minimal.len(),
            minimal.max_degree,
            start.elapsed()
        );
    }
}
