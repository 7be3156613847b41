//! Max-sum decoding in logarithmic coordinates.
//!
//! In log-coordinates `b_ij` the probability of a labeling is the linear
//! functional `b . (transition vector)`, so the most likely labelings for
//! given parameters are the ones whose transition vectors maximize that
//! functional over the polytope. Decoding is a two-state max-sum dynamic
//! program over the tree; tie handling is exact, with the full set of
//! optimal transition vectors propagated, because the cones of the normal
//! fan are defined by strict inequalities. All arithmetic is exact rational;
//! the coordinates are never logarithms of anything in particular.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::config::{achievable_points, transition_vector, Labeling, TransitionVector};
use crate::error::{Error, Result};
use crate::polytope::{hull, LatticePolytope};
use crate::tree::Tree;

/// Exact rational log-parameters `(b00, b01, b10, b11)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogParams {
    pub b: [BigRational; 4],
}

impl LogParams {
    pub fn new(b: [BigRational; 4]) -> LogParams {
        LogParams { b }
    }

    pub fn from_integers(b: [i64; 4]) -> LogParams {
        LogParams {
            b: b.map(|x| BigRational::from_integer(BigInt::from(x))),
        }
    }

    /// Value of the functional on a transition vector.
    pub fn value(&self, v: &TransitionVector) -> BigRational {
        let mut out = BigRational::zero();
        for (b, &t) in self.b.iter().zip(&v.0) {
            out += b * BigRational::from_integer(BigInt::from(t));
        }
        out
    }

    /// The 0 <-> 1 swap on coordinates.
    pub fn swapped(&self) -> LogParams {
        let [a, b, c, d] = self.b.clone();
        LogParams { b: [d, c, b, a] }
    }

    /// Clears denominators into a proportional integer functional.
    pub fn integer_functional(&self) -> [i64; 4] {
        let mut lcm = BigInt::one();
        for x in &self.b {
            lcm = num_integer::lcm(lcm, x.denom().clone());
        }
        let mut out = [0i64; 4];
        for (slot, x) in out.iter_mut().zip(&self.b) {
            let scaled = x.numer() * (&lcm / x.denom());
            *slot = i64::try_from(&scaled).expect("functional fits i64");
        }
        out
    }
}

/// Result of decoding: the optimal value, every transition vector attaining
/// it, and the lexicographically least optimal labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub value: BigRational,
    pub optimal: Vec<TransitionVector>,
    pub witness: Labeling,
}

/// Per-node, per-label state of the max-sum dynamic program.
#[derive(Clone)]
struct NodeState {
    value: BigRational,
    vectors: BTreeSet<TransitionVector>,
}

/// Max-sum decoding: maximizes `b . (transition vector)` over all 2^n
/// labelings by a two-state dynamic program over the tree.
pub fn decode(t: &Tree, params: &LogParams) -> Decoded {
    let n = t.n();
    let kids = t.children();
    let edge_value = |p: usize, c: usize| params.b[2 * p + c].clone();
    let mut states: Vec<Option<[NodeState; 2]>> = vec![None; n + 1];
    for v in (1..=n).rev() {
        let mut per_label: Vec<NodeState> = Vec::with_capacity(2);
        for r in 0..2usize {
            let mut value = BigRational::zero();
            let mut vectors: BTreeSet<TransitionVector> = BTreeSet::new();
            vectors.insert(TransitionVector::ZERO);
            for &c in &kids[v] {
                let child = states[c].as_ref().expect("children processed first");
                let zero = edge_value(r, 0) + &child[0].value;
                let one = edge_value(r, 1) + &child[1].value;
                let (best, tie) = if zero > one {
                    (zero, [true, false])
                } else if one > zero {
                    (one, [false, true])
                } else {
                    (zero, [true, true])
                };
                let mut shifted: BTreeSet<TransitionVector> = BTreeSet::new();
                for (s, used) in tie.iter().enumerate() {
                    if !used {
                        continue;
                    }
                    for tv in &child[s].vectors {
                        let mut sum = tv.0;
                        sum[2 * r + s] += 1;
                        shifted.insert(TransitionVector(sum));
                    }
                }
                value += best;
                let mut combined: BTreeSet<TransitionVector> = BTreeSet::new();
                for a in &vectors {
                    for b in &shifted {
                        let mut sum = a.0;
                        for (slot, e) in sum.iter_mut().zip(b.0) {
                            *slot += e;
                        }
                        combined.insert(TransitionVector(sum));
                    }
                }
                vectors = combined;
            }
            per_label.push(NodeState { value, vectors });
        }
        for &c in &kids[v] {
            states[c] = None;
        }
        let one = per_label.pop().expect("two states");
        let zero = per_label.pop().expect("two states");
        states[v] = Some([zero, one]);
    }
    let [root_zero, root_one] = states[1].take().expect("root state");
    let (value, optimal) = if root_zero.value > root_one.value {
        (root_zero.value, root_zero.vectors)
    } else if root_one.value > root_zero.value {
        (root_one.value, root_one.vectors)
    } else {
        let mut all = root_zero.vectors;
        all.extend(root_one.vectors);
        (root_zero.value, all)
    };

    // Witness: preferring 0 at each node in index order yields the
    // lexicographically least optimal labeling, because the choice at a node
    // only constrains its own subtree.
    let mut value_of = vec![[BigRational::zero(), BigRational::zero()]; n + 1];
    for v in (1..=n).rev() {
        for r in 0..2usize {
            let mut total = BigRational::zero();
            for &c in &kids[v] {
                let zero = edge_value(r, 0) + &value_of[c][0];
                let one = edge_value(r, 1) + &value_of[c][1];
                total += zero.max(one);
            }
            value_of[v][r] = total;
        }
    }
    let mut bits = vec![0u8; n];
    bits[0] = u8::from(value_of[1][0] < value_of[1][1]);
    for j in 2..=n {
        let p = bits[t.parent(j) - 1] as usize;
        let zero = edge_value(p, 0) + &value_of[j][0];
        let one = edge_value(p, 1) + &value_of[j][1];
        bits[j - 1] = u8::from(zero < one);
    }
    let witness = Labeling::new(bits).expect("bits are 0/1");
    debug_assert_eq!(params.value(optimal.iter().next().unwrap()), value);

    Decoded {
        value,
        optimal: optimal.into_iter().collect(),
        witness,
    }
}

/// A labeling is a Viterbi sequence when some parameter choice makes it the
/// strict unique maximizer: exactly when its transition vector is a vertex
/// of the polytope and no other labeling shares that vector.
pub fn is_viterbi_sequence(t: &Tree, l: &Labeling) -> Result<bool> {
    if l.len() != t.n() {
        return Err(Error::LabelingLength {
            expected: t.n(),
            got: l.len(),
        });
    }
    let v = transition_vector(t, l)?;
    let points = achievable_points(t)?;
    let count = &points.get(&v).expect("own vector is achievable").count;
    if !count.is_one() {
        return Ok(false);
    }
    let poly = hull(&points.vectors().copied().collect::<Vec<_>>())?;
    Ok(poly.is_vertex(&v.as_i64()))
}

/// Cross-checks decoding against the polytope: for each functional, the
/// optimal face's vertex set must be exactly the decoded optimal vectors
/// that are vertices, and the witness must attain the optimal value.
pub fn normal_fan_consistency(t: &Tree, samples: usize, seed: u64) -> Result<bool> {
    let points = achievable_points(t)?;
    let poly = hull(&points.vectors().copied().collect::<Vec<_>>())?;
    // Deterministic cases first: the zero functional (optimal face is the
    // whole polytope) and every facet normal (optimal face is that facet),
    // then seeded random rationals.
    let mut functionals: Vec<LogParams> = vec![LogParams::from_integers([0, 0, 0, 0])];
    for facet in poly.facets() {
        functionals.push(LogParams::from_integers(facet.normal));
    }
    let mut state = seed.max(1);
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut x = state;
        x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
        x ^ (x >> 31)
    };
    for _ in 0..samples {
        let b = core::array::from_fn(|_| {
            let numer = (next() % 41) as i64 - 20;
            let denom = (next() % 7) as i64 + 1;
            BigRational::new(BigInt::from(numer), BigInt::from(denom))
        });
        functionals.push(LogParams::new(b));
    }
    for params in &functionals {
        if !consistent(t, &poly, params)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn consistent(t: &Tree, poly: &LatticePolytope, params: &LogParams) -> Result<bool> {
    let decoded = decode(t, params);
    let functional = params.integer_functional();
    let face = poly.face_maximizing(&functional);
    let decoded_vertices: Vec<[i64; 4]> = decoded
        .optimal
        .iter()
        .map(|v| v.as_i64())
        .filter(|v| poly.is_vertex(v))
        .collect();
    if face != decoded_vertices {
        return Ok(false);
    }
    let witness_vector = transition_vector(t, &decoded.witness)?;
    Ok(params.value(&witness_vector) == decoded.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::enumerate_rooted_trees;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn brute_force(
        t: &Tree,
        params: &LogParams,
    ) -> (BigRational, BTreeSet<TransitionVector>, Labeling) {
        let n = t.n();
        let mut best: Option<(BigRational, BTreeSet<TransitionVector>, Labeling)> = None;
        for idx in 0..(1u64 << n) {
            let l = Labeling::from_index(n, idx);
            let v = transition_vector(t, &l).unwrap();
            let value = params.value(&v);
            match &mut best {
                None => best = Some((value, BTreeSet::from([v]), l)),
                Some((b, set, _)) => {
                    if value > *b {
                        best = Some((value, BTreeSet::from([v]), l));
                    } else if value == *b {
                        set.insert(v);
                    }
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn all_zeros_is_the_unique_optimum_for_b00() {
        let params = LogParams::from_integers([1, 0, 0, 0]);
        for t in [
            Tree::path(6).unwrap(),
            Tree::star(5).unwrap(),
            Tree::parse("5; 1 1 2 2").unwrap(),
        ] {
            let d = decode(&t, &params);
            let n = t.n();
            assert_eq!(d.value, rational(n as i64 - 1, 1));
            assert_eq!(d.optimal, vec![TransitionVector([n as u32 - 1, 0, 0, 0])]);
            assert_eq!(d.witness, Labeling::zeros(n));
        }
    }

    #[test]
    fn path3_alternating_tie() {
        let params = LogParams::from_integers([0, 1, 1, 0]);
        let d = decode(&Tree::path(3).unwrap(), &params);
        assert_eq!(d.value, rational(2, 1));
        assert_eq!(d.optimal, vec![TransitionVector([0, 1, 1, 0])]);
        // Both 010 and 101 attain the vector; the witness is the lex-least.
        assert_eq!(d.witness, Labeling::parse("010").unwrap());
    }

    #[test]
    fn decode_agrees_with_brute_force() {
        let mut state = 0xfeed5eed_u64;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut x = state;
            x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
            x ^ (x >> 31)
        };
        for n in 1..=7 {
            for t in enumerate_rooted_trees(n) {
                for _ in 0..6 {
                    let params = LogParams::new(core::array::from_fn(|_| {
                        rational((next() % 21) as i64 - 10, (next() % 5) as i64 + 1)
                    }));
                    let d = decode(&t, &params);
                    let (value, optimal, _) = brute_force(&t, &params);
                    assert_eq!(d.value, value, "{t}");
                    let got: BTreeSet<TransitionVector> = d.optimal.iter().copied().collect();
                    assert_eq!(got, optimal, "{t}");
                    let witness_value = params.value(&transition_vector(&t, &d.witness).unwrap());
                    assert_eq!(witness_value, d.value, "{t}: witness is optimal");
                }
            }
        }
    }

    #[test]
    fn constant_shift_preserves_the_argmax() {
        let t = Tree::parse("5; 1 1 2 2").unwrap();
        let base = LogParams::new([
            rational(1, 2),
            rational(-3, 1),
            rational(2, 5),
            rational(0, 1),
        ]);
        let shifted = LogParams::new(base.b.clone().map(|x| x + rational(7, 3)));
        let a = decode(&t, &base);
        let b = decode(&t, &shifted);
        assert_eq!(a.optimal, b.optimal);
        assert_eq!(a.witness, b.witness);
        assert_eq!(b.value, a.value + rational(4 * 7, 3));
    }

    #[test]
    fn swap_maps_optima_to_complements() {
        let t = Tree::parse("7; 1 1 2 2 3 3").unwrap();
        let params = LogParams::new([
            rational(2, 1),
            rational(-1, 3),
            rational(1, 7),
            rational(0, 1),
        ]);
        let a = decode(&t, &params);
        let b = decode(&t, &params.swapped());
        let swapped: BTreeSet<TransitionVector> = a.optimal.iter().map(|v| v.swapped()).collect();
        let got: BTreeSet<TransitionVector> = b.optimal.iter().copied().collect();
        assert_eq!(got, swapped);
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn viterbi_sequence_examples() {
        for t in [Tree::path(5).unwrap(), Tree::star(6).unwrap()] {
            assert!(is_viterbi_sequence(&t, &Labeling::zeros(t.n())).unwrap());
        }
        // 010 shares its transition vector with 101 on the 3-node path.
        let p3 = Tree::path(3).unwrap();
        assert!(!is_viterbi_sequence(&p3, &Labeling::parse("010").unwrap()).unwrap());
        // An edge-interior point of the star polytope: one leaf flipped.
        let star = Tree::star(5).unwrap();
        assert!(!is_viterbi_sequence(&star, &Labeling::ones_at(5, &[2])).unwrap());
        assert!(is_viterbi_sequence(&p3, &Labeling::zeros(4)).is_err());
    }

    #[test]
    fn star_has_exactly_four_viterbi_sequences() {
        let t = Tree::star(5).unwrap();
        let mut hits: Vec<Labeling> = Vec::new();
        for idx in 0..(1u64 << 5) {
            let l = Labeling::from_index(5, idx);
            if is_viterbi_sequence(&t, &l).unwrap() {
                hits.push(l);
            }
        }
        let want = [
            Labeling::parse("00000").unwrap(),
            Labeling::parse("01111").unwrap(),
            Labeling::parse("10000").unwrap(),
            Labeling::parse("11111").unwrap(),
        ];
        assert_eq!(hits, want);
    }

    #[test]
    fn viterbi_count_equals_multiplicity_one_vertices() {
        for n in 2..=7 {
            for t in enumerate_rooted_trees(n) {
                let points = achievable_points(&t).unwrap();
                let poly = hull(&points.vectors().copied().collect::<Vec<_>>()).unwrap();
                let expected = points
                    .iter()
                    .filter(|(v, p)| p.count.is_one() && poly.is_vertex(&v.as_i64()))
                    .count();
                let got = (0..(1u64 << n))
                    .filter(|&idx| is_viterbi_sequence(&t, &Labeling::from_index(n, idx)).unwrap())
                    .count();
                assert_eq!(got, expected, "{t}");
            }
        }
    }

    #[test]
    fn normal_fan_matches_decoding() {
        for text in ["3; 1 2", "3; 1 1", "5; 1 1 2 2", "6; 1 2 2 4 4", "7; 1 2 3 4 5 6"] {
            let t = Tree::parse(text).unwrap();
            assert!(normal_fan_consistency(&t, 25, 0xabcdef).unwrap(), "{text}");
        }
    }
}
