//! The binomial ideal of relations among labeling probabilities.
//!
//! The configuration matrix defines a monomial map whose kernel is a prime
//! binomial ideal in variables indexed by labelings. This module computes
//! an integer kernel basis, a Markov basis (generating set) by saturation,
//! a minimal generating set with its degree histogram, reduced Groebner
//! bases under configurable term orders, and the ideal's degree both from
//! the polytope volume and from the Hilbert series of an initial ideal.
//!
//! Coefficients are always +/-1, so every computation is exponent-vector
//! arithmetic. Resource limits are explicit: when a budget runs out the
//! engine reports a hard error rather than truncating anything.

mod buchberger;
mod expo;
pub mod fiber;
mod harness;
mod hilbert;
mod kernel;
mod minimal;
mod order;
mod ring;
mod saturation;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::config::{transition_vector, Configuration, Labeling};
use crate::error::{Error, Result};
use crate::polytope::{hull, normalized_volume};
use crate::tree::Tree;

pub use harness::{conjecture_harness, ConjectureReport};
pub use kernel::{lattice_kernel, KernelLattice};
pub use order::TermOrder;

use buchberger::Bin;
use expo::Expo;
use ring::Ring;

/// Hard resource limits for the ideal engine. Defaults are sized for trees
/// with up to 7 nodes; exceeding a limit is an error, never a truncation.
#[derive(Clone, Debug)]
pub struct Budget {
    /// Cap on ring variables (2^n).
    pub max_variables: usize,
    /// Cap on S-pairs processed in a single Groebner run.
    pub max_spairs: usize,
    /// Cap on the basis size of a single Groebner run.
    pub max_basis: usize,
    /// Cap on enumerated or searched fiber size.
    pub max_fiber: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_variables: 128,
            max_spairs: 2_000_000,
            max_basis: 100_000,
            max_fiber: 10_000,
        }
    }
}

/// A difference of two monomials in labeling-indexed variables, stored as
/// sparse exponent lists sorted by labeling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Binomial {
    pub plus: Vec<(Labeling, u32)>,
    pub minus: Vec<(Labeling, u32)>,
}

impl Binomial {
    /// Total degree (of either monomial; the ideal is homogeneous).
    pub fn degree(&self) -> u32 {
        self.plus.iter().map(|(_, e)| e).sum()
    }

    /// Supports of the two monomials are disjoint.
    pub fn supports_disjoint(&self) -> bool {
        self.plus
            .iter()
            .all(|(l, _)| !self.minus.iter().any(|(m, _)| m == l))
    }

    /// Substitutes the edge-transition monomials of the tree: a genuine
    /// relation maps both sides to the same product, i.e. the weighted sums
    /// of transition vectors agree (and so do the total degrees).
    pub fn is_relation(&self, t: &Tree) -> Result<bool> {
        let side = |monomial: &[(Labeling, u32)]| -> Result<[i64; 4]> {
            let mut out = [0i64; 4];
            for (l, e) in monomial {
                let v = transition_vector(t, l)?.as_i64();
                for r in 0..4 {
                    out[r] += v[r] * *e as i64;
                }
            }
            Ok(out)
        };
        Ok(side(&self.plus)? == side(&self.minus)?
            && self.plus.iter().map(|(_, e)| e).sum::<u32>()
                == self.minus.iter().map(|(_, e)| e).sum::<u32>())
    }

    /// Sign- and order-insensitive canonical form for set comparison.
    pub fn unordered(&self) -> (Vec<(Labeling, u32)>, Vec<(Labeling, u32)>) {
        let a = self.plus.clone();
        let b = self.minus.clone();
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_side = |f: &mut fmt::Formatter<'_>, side: &[(Labeling, u32)]| -> fmt::Result {
            if side.is_empty() {
                return write!(f, "1");
            }
            for (i, (l, e)) in side.iter().enumerate() {
                if i > 0 {
                    write!(f, "*")?;
                }
                write!(f, "x_{{{l}}}")?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
            Ok(())
        };
        write_side(f, &self.plus)?;
        write!(f, " - ")?;
        write_side(f, &self.minus)
    }
}

/// A set of binomials generating (or contained in) the toric ideal, with
/// its degree profile.
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    pub binomials: Vec<Binomial>,
    /// Count of elements per degree; sums to `binomials.len()`.
    pub degree_histogram: BTreeMap<u32, usize>,
    pub max_degree: u32,
    pub is_minimal: bool,
    /// Number of degree-1 elements (duplicate-column differences), also
    /// counted in the histogram. Tables that exclude them subtract this.
    pub linear_count: usize,
}

impl GeneratingSet {
    fn assemble(binomials: Vec<Binomial>, is_minimal: bool) -> GeneratingSet {
        let mut degree_histogram: BTreeMap<u32, usize> = BTreeMap::new();
        for b in &binomials {
            *degree_histogram.entry(b.degree()).or_insert(0) += 1;
        }
        let max_degree = degree_histogram.keys().max().copied().unwrap_or(0);
        let linear_count = degree_histogram.get(&1).copied().unwrap_or(0);
        GeneratingSet {
            binomials,
            degree_histogram,
            max_degree,
            is_minimal,
            linear_count,
        }
    }

    pub fn len(&self) -> usize {
        self.binomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.binomials.is_empty()
    }
}

/// A reduced Groebner basis together with the order that produced it.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub set: GeneratingSet,
    pub order: TermOrder,
    /// Always true for this engine's output; recorded for serialization.
    pub reduced: bool,
}

fn assemble_from_internal(
    ring: &Ring,
    internal: &[(Expo, Expo)],
    with_linear: bool,
    is_minimal: bool,
) -> GeneratingSet {
    let mut binomials: Vec<Binomial> = if with_linear {
        ring.linear_binomials()
    } else {
        Vec::new()
    };
    binomials.extend(internal.iter().map(|(a, b)| ring.inflate(a, b)));
    binomials.sort_unstable_by_key(|b| (b.degree(), b.unordered()));
    GeneratingSet::assemble(binomials, is_minimal)
}

/// A finite generating set of the toric ideal: the saturation of the
/// kernel-lattice ideal with respect to every variable in turn, plus the
/// linear binomials of duplicate columns.
pub fn markov_basis(c: &Configuration, budget: &Budget) -> Result<GeneratingSet> {
    let ring = Ring::build(c, budget)?;
    let internal = saturation::markov_internal(&ring, budget)?;
    debug_assert!(internal.iter().all(|(a, b)| {
        ring.image(a) == ring.image(b)
    }));
    Ok(assemble_from_internal(&ring, &internal, true, false))
}

/// A minimal homogeneous generating set with its degree histogram. The
/// duplicate-column differences are exactly the degree-1 part.
pub fn minimal_generators(c: &Configuration, budget: &Budget) -> Result<GeneratingSet> {
    let ring = Ring::build(c, budget)?;
    let internal = saturation::markov_internal(&ring, budget)?;
    let kept = minimal::minimalize(&internal, budget)?;
    Ok(assemble_from_internal(&ring, &kept, true, true))
}

/// The reduced Groebner basis of the full labeling-indexed ideal under the
/// given order.
pub fn groebner_basis(c: &Configuration, order: &TermOrder, budget: &Budget) -> Result<GroebnerBasis> {
    if let TermOrder::WeightDegRevLex { weights } = order {
        if weights.len() != c.column_count() {
            return Err(Error::Domain("weight vector length must be 2^n"));
        }
        if weights.iter().any(|&w| w < 0) {
            return Err(Error::Domain("weights must be nonnegative"));
        }
    }
    let ring = Ring::build(c, budget)?;
    let internal = saturation::markov_internal(&ring, budget)?;
    // Full-ring generators: inflated Markov basis plus duplicate-column
    // differences.
    let vars = c.column_count();
    let dense = |side: &[(Labeling, u32)]| -> Expo {
        let mut out = alloc::vec![0u32; vars];
        for (l, e) in side {
            out[l.index() as usize] += e;
        }
        out
    };
    let gens: Vec<(Expo, Expo)> = assemble_from_internal(&ring, &internal, true, false)
        .binomials
        .iter()
        .map(|b| (dense(&b.plus), dense(&b.minus)))
        .collect();
    let key = order.key();
    let gb = buchberger::groebner(&gens, &key, budget)?;
    let sparse = |u: &Expo| -> Vec<(Labeling, u32)> {
        u.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Labeling::from_index(c.n(), i as u64), e))
            .collect()
    };
    let binomials: Vec<Binomial> = gb
        .iter()
        .map(|b: &Bin| Binomial {
            plus: sparse(&b.lead),
            minus: sparse(&b.tail),
        })
        .collect();
    Ok(GroebnerBasis {
        set: GeneratingSet::assemble(binomials, false),
        order: order.clone(),
        reduced: true,
    })
}

/// Ideal membership: the binomial reduces to zero modulo the reduced basis.
pub fn in_ideal(c: &Configuration, gb: &GroebnerBasis, binomial: &Binomial) -> bool {
    let vars = c.column_count();
    let dense = |side: &[(Labeling, u32)]| -> Expo {
        let mut out = alloc::vec![0u32; vars];
        for (l, e) in side {
            out[l.index() as usize] += e;
        }
        out
    };
    let key = gb.order.key();
    let basis: Vec<Bin> = gb
        .set
        .binomials
        .iter()
        .filter_map(|b| Bin::oriented(dense(&b.plus), dense(&b.minus), &key))
        .collect();
    buchberger::reduces_to_zero(&dense(&binomial.plus), &dense(&binomial.minus), &basis)
}

/// Degree of the toric ideal as the normalized volume of the polytope of
/// the distinct columns.
pub fn ideal_degree(c: &Configuration) -> Result<u64> {
    let points: Vec<crate::config::TransitionVector> = c.distinct().map(|(v, _)| *v).collect();
    normalized_volume(&hull(&points)?)
}

/// Degree of the toric ideal by the Groebner route: reduced degrevlex basis
/// over distinct columns, Hilbert numerator of the initial ideal, strip
/// `(1 - z)` factors, evaluate at 1. The strip count recovers the Krull
/// dimension, which is checked against 4.
pub fn ideal_degree_via_initial_ideal(c: &Configuration, budget: &Budget) -> Result<u64> {
    let ring = Ring::build(c, budget)?;
    let internal = saturation::markov_internal(&ring, budget)?;
    let gb = buchberger::groebner(&internal, &TermOrder::DegRevLex.key(), budget)?;
    let leads: Vec<Expo> = gb.into_iter().map(|b| b.lead).collect();
    let numerator = hilbert::hilbert_numerator(leads);
    let (strips, value) = hilbert::strip_and_evaluate(numerator);
    if strips + 4 != ring.variables() || value <= 0 {
        return Err(Error::Domain("initial ideal does not have dimension 4"));
    }
    Ok(value as u64)
}

/// Reduced Groebner bases under random nonnegative weight orders, looking
/// for one of maximum degree <= 2. Deterministic in the seed; returns the
/// winning weight vector and the basis on success, `None` if the attempt
/// budget runs out first.
pub fn quadratic_groebner_search(
    c: &Configuration,
    seed: u64,
    attempts: usize,
    budget: &Budget,
) -> Result<Option<(Vec<i64>, GroebnerBasis)>> {
    let mut state = seed.max(1);
    let mut next = move || {
        // splitmix64
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut x = state;
        x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
        x ^ (x >> 31)
    };
    for attempt in 0..attempts {
        let order = if attempt == 0 {
            TermOrder::DegRevLex
        } else {
            let weights: Vec<i64> = (0..c.column_count()).map(|_| (next() % 64) as i64).collect();
            TermOrder::WeightDegRevLex { weights }
        };
        let gb = groebner_basis(c, &order, budget)?;
        if gb.set.max_degree <= 2 {
            let weights = match order {
                TermOrder::DegRevLex => alloc::vec![0; c.column_count()],
                TermOrder::WeightDegRevLex { weights } => weights,
            };
            return Ok(Some((weights, gb)));
        }
    }
    Ok(None)
}

/// Renders a binomial's variables by labeling bit strings, e.g.
/// `x_{011}*x_{100} - x_{001}*x_{110}`.
pub fn render_binomial(b: &Binomial) -> String {
    alloc::format!("{b}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::enumerate_rooted_trees;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn parse_binomial(text: &str) -> Binomial {
        // "x001^2*x111 - x000*x011^2" without braces for test brevity.
        let (plus, minus) = text.split_once('-').unwrap();
        let side = |s: &str| -> Vec<(Labeling, u32)> {
            let mut out: Vec<(Labeling, u32)> = Vec::new();
            for factor in s.split('*') {
                let factor = factor.trim();
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse().unwrap()),
                    None => (factor, 1),
                };
                let l = Labeling::parse(name.trim_start_matches('x')).unwrap();
                out.push((l, exp));
            }
            out.sort_unstable();
            out
        };
        Binomial {
            plus: side(plus),
            minus: side(minus),
        }
    }

    fn example1_printed() -> Vec<Binomial> {
        [
            "x101 - x010",
            "x001*x100 - x000*x010",
            "x011*x100 - x001*x110",
            "x011*x110 - x010*x111",
            "x001^2*x111 - x000*x011^2",
            "x100^2*x111 - x000*x110^2",
        ]
        .iter()
        .map(|t| parse_binomial(t))
        .collect()
    }

    #[test]
    fn path3_minimal_generators_match_the_printed_ideal() {
        let t = Tree::path(3).unwrap();
        let c = Configuration::build(&t).unwrap();
        let gens = minimal_generators(&c, &Budget::default()).unwrap();
        assert_eq!(gens.len(), 6);
        assert!(gens.is_minimal);
        assert_eq!(gens.max_degree, 3);
        assert_eq!(
            gens.degree_histogram,
            BTreeMap::from([(1, 1), (2, 3), (3, 2)])
        );
        let got: BTreeSet<_> = gens.binomials.iter().map(|b| b.unordered()).collect();
        let want: BTreeSet<_> = example1_printed().iter().map(|b| b.unordered()).collect();
        assert_eq!(got, want);
        for b in &gens.binomials {
            assert!(b.is_relation(&t).unwrap());
            assert!(b.supports_disjoint());
        }
    }

    #[test]
    fn binary3_minimal_generators() {
        let c = Configuration::build(&Tree::parse("3; 1 1").unwrap()).unwrap();
        let gens = minimal_generators(&c, &Budget::default()).unwrap();
        assert_eq!(gens.len(), 4);
        assert_eq!(gens.max_degree, 2);
        assert_eq!(gens.linear_count, 2);
    }

    #[test]
    fn path4_minimal_generators() {
        let c = Configuration::build(&Tree::path(4).unwrap()).unwrap();
        let gens = minimal_generators(&c, &Budget::default()).unwrap();
        assert_eq!(gens.len(), 32);
        assert_eq!(gens.max_degree, 3);
        assert_eq!(gens.degree_histogram.get(&3), Some(&4));
    }

    #[test]
    fn markov_basis_elements_are_relations() {
        for n in 2..=5 {
            for t in enumerate_rooted_trees(n) {
                let c = Configuration::build(&t).unwrap();
                let markov = markov_basis(&c, &Budget::default()).unwrap();
                assert!(!markov.is_minimal);
                for b in &markov.binomials {
                    assert!(b.is_relation(&t).unwrap(), "{t}: {b}");
                    assert!(b.supports_disjoint(), "{t}: {b}");
                }
                let histogram_total: usize = markov.degree_histogram.values().sum();
                assert_eq!(histogram_total, markov.len());
            }
        }
    }

    #[test]
    fn markov_moves_connect_the_printed_ideal() {
        // The printed generators of the 3-node path ideal all reduce to zero
        // against the engine's Groebner basis, so the engine's basis
        // generates at least the printed ideal.
        let t = Tree::path(3).unwrap();
        let c = Configuration::build(&t).unwrap();
        let gb = groebner_basis(&c, &TermOrder::DegRevLex, &Budget::default()).unwrap();
        for b in example1_printed() {
            assert!(in_ideal(&c, &gb, &b), "{b}");
        }
    }

    #[test]
    fn groebner_path3_contains_the_linear_binomial() {
        let c = Configuration::build(&Tree::path(3).unwrap()).unwrap();
        let gb = groebner_basis(&c, &TermOrder::DegRevLex, &Budget::default()).unwrap();
        let linear = parse_binomial("x101 - x010").unordered();
        assert!(gb.set.binomials.iter().any(|b| b.unordered() == linear));
        assert!(gb.reduced);
        // Reduced bases are unique per order: a second run is identical.
        let again = groebner_basis(&c, &TermOrder::DegRevLex, &Budget::default()).unwrap();
        let a: Vec<_> = gb.set.binomials.iter().map(|b| b.unordered()).collect();
        let b: Vec<_> = again.set.binomials.iter().map(|b| b.unordered()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn ideal_degree_examples() {
        let degree_of = |text: &str| {
            ideal_degree(&Configuration::build(&Tree::parse(text).unwrap()).unwrap()).unwrap()
        };
        assert_eq!(degree_of("3; 1 2"), 6);
        assert_eq!(degree_of("3; 1 1"), 4);
        assert_eq!(degree_of("5; 1 1 2 2"), 28);
        let path5 = Tree::path(5).unwrap();
        assert_eq!(
            ideal_degree(&Configuration::build(&path5).unwrap()).unwrap(),
            36
        );
    }

    #[test]
    fn degree_routes_agree_on_tiny_trees() {
        let budget = Budget::default();
        for n in 2..=4 {
            for t in enumerate_rooted_trees(n) {
                let c = Configuration::build(&t).unwrap();
                let via_volume = ideal_degree(&c).unwrap();
                let via_gb = ideal_degree_via_initial_ideal(&c, &budget).unwrap();
                assert_eq!(via_volume, via_gb, "{t}");
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let c = Configuration::build(&Tree::path(5).unwrap()).unwrap();
        let starved = Budget {
            max_spairs: 3,
            ..Budget::default()
        };
        assert!(matches!(
            markov_basis(&c, &starved),
            Err(Error::BudgetExhausted { .. })
        ));
        let capped = Budget {
            max_variables: 8,
            ..Budget::default()
        };
        assert!(matches!(
            markov_basis(&c, &capped),
            Err(Error::VariableCap { .. })
        ));
    }

    #[test]
    fn harness_profiles() {
        let budget = Budget::default();
        let b5 = conjecture_harness(&Tree::parse("5; 1 1 2 2").unwrap(), &budget).unwrap();
        assert!(b5.is_binary);
        assert_eq!(b5.uniform_child_count, Some(2));
        assert!(b5.generated_in_degree_2);
        let p5 = conjecture_harness(&Tree::path(5).unwrap(), &budget).unwrap();
        assert_eq!(p5.minimal.max_degree, 3);
        assert_eq!(p5.path_cubics, Some((6, 6)));
        assert!(!p5.generated_in_degree_2);
    }
}
