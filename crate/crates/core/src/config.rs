//! The monomial parameterization: labelings, transition-count vectors, the
//! 4 x 2^n configuration matrix, and the achievable-point dynamic program.
//!
//! A labeling assigns 0 or 1 to every node. Its transition vector counts the
//! parent-to-child label transitions over all edges, in row order
//! `(t00, t01, t10, t11)`, so every column of the configuration sums to
//! `n - 1`. The root's distribution is uniform and contributes no factor, so
//! only edge transitions are modeled.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Default cap on node count for anything that loops over all 2^n labelings.
pub const DEFAULT_NODE_CAP: usize = 24;

/// Largest node count supported by the witness bookkeeping of the
/// achievable-point dynamic program (one bit per node in a `u64`).
pub const MAX_DP_NODES: usize = 64;

/// A 0/1 assignment to every node; doubles as the variable index `i1..in`.
///
/// Labelings of equal length are ordered by reading the bits as a binary
/// number with the root bit most significant, which the derived `Ord` on the
/// bit vector provides.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Labeling {
    bits: Vec<u8>,
}

impl Labeling {
    /// Wraps a bit vector; every entry must be 0 or 1.
    pub fn new(bits: Vec<u8>) -> Result<Labeling> {
        if bits.is_empty() || bits.iter().any(|&b| b > 1) {
            return Err(Error::Parse(String::from("labeling bits must be 0 or 1")));
        }
        Ok(Labeling { bits })
    }

    /// The `idx`-th labeling of an `n`-node tree in binary order
    /// (root bit most significant). Requires `n <= 63`.
    pub fn from_index(n: usize, idx: u64) -> Labeling {
        debug_assert!(n >= 1 && n < 64 && idx < (1u64 << n));
        let bits = (0..n).map(|j| ((idx >> (n - 1 - j)) & 1) as u8).collect();
        Labeling { bits }
    }

    /// Position of this labeling in binary order.
    pub fn index(&self) -> u64 {
        debug_assert!(self.bits.len() < 64);
        self.bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }

    /// Label of node `j` (1-based).
    pub fn bit(&self, node: usize) -> u8 {
        self.bits[node - 1]
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// All zeros on `n` nodes.
    pub fn zeros(n: usize) -> Labeling {
        Labeling { bits: vec![0; n] }
    }

    /// All zeros except a 1 at the given nodes.
    pub fn ones_at(n: usize, nodes: &[usize]) -> Labeling {
        let mut bits = vec![0u8; n];
        for &v in nodes {
            bits[v - 1] = 1;
        }
        Labeling { bits }
    }

    /// Global 0 <-> 1 swap.
    pub fn complement(&self) -> Labeling {
        Labeling {
            bits: self.bits.iter().map(|&b| 1 - b).collect(),
        }
    }

    /// Parses a bit string such as `"010"`.
    pub fn parse(text: &str) -> Result<Labeling> {
        let mut bits = Vec::with_capacity(text.len());
        for c in text.trim().chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(Error::Parse(alloc::format!(
                        "labeling must be a 0/1 string, found {c:?}"
                    )))
                }
            }
        }
        Labeling::new(bits)
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Edge-transition counts `(t00, t01, t10, t11)` of a labeling; one column
/// of the configuration. Always sums to `n - 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TransitionVector(pub [u32; 4]);

impl TransitionVector {
    pub const ZERO: TransitionVector = TransitionVector([0; 4]);

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Image under the global 0 <-> 1 label swap:
    /// `(t00, t01, t10, t11) -> (t11, t10, t01, t00)`.
    pub fn swapped(&self) -> TransitionVector {
        let [a, b, c, d] = self.0;
        TransitionVector([d, c, b, a])
    }

    pub fn as_i64(&self) -> [i64; 4] {
        [
            self.0[0] as i64,
            self.0[1] as i64,
            self.0[2] as i64,
            self.0[3] as i64,
        ]
    }

    fn add(&self, other: &TransitionVector) -> TransitionVector {
        TransitionVector([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
            self.0[3] + other.0[3],
        ])
    }

    /// Unit vector for one parent-label/child-label transition.
    fn edge(parent: u8, child: u8) -> TransitionVector {
        let mut t = [0u32; 4];
        t[(2 * parent + child) as usize] = 1;
        TransitionVector(t)
    }
}

impl fmt::Display for TransitionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// Counts the parent-to-child transitions of `l` over the edges of `t`.
pub fn transition_vector(t: &Tree, l: &Labeling) -> Result<TransitionVector> {
    if l.len() != t.n() {
        return Err(Error::LabelingLength {
            expected: t.n(),
            got: l.len(),
        });
    }
    let mut counts = [0u32; 4];
    for j in 2..=t.n() {
        let p = l.bit(t.parent(j));
        let c = l.bit(j);
        counts[(2 * p + c) as usize] += 1;
    }
    Ok(TransitionVector(counts))
}

/// A distinct column of the configuration together with how it arises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedupEntry {
    /// Number of labelings sharing the column.
    pub multiplicity: u64,
    /// The first labeling in binary order attaining the column.
    pub representative: Labeling,
}

/// The 4 x 2^n configuration: one transition-vector column per labeling, in
/// binary labeling order (all-zeros first), plus the dedup map over distinct
/// columns.
#[derive(Clone, Debug)]
pub struct Configuration {
    n: usize,
    columns: Vec<TransitionVector>,
    dedup: BTreeMap<TransitionVector, DedupEntry>,
}

impl Configuration {
    /// Builds the configuration of `t` with the default node cap.
    pub fn build(t: &Tree) -> Result<Configuration> {
        Configuration::build_with_cap(t, DEFAULT_NODE_CAP)
    }

    /// Builds the configuration, bounding the 2^n column loop by `cap` nodes.
    pub fn build_with_cap(t: &Tree, cap: usize) -> Result<Configuration> {
        let n = t.n();
        if n > cap || n >= 64 {
            return Err(Error::NodeCap { n, cap });
        }
        let mut columns = Vec::with_capacity(1usize << n);
        let mut dedup: BTreeMap<TransitionVector, DedupEntry> = BTreeMap::new();
        for idx in 0..(1u64 << n) {
            let l = Labeling::from_index(n, idx);
            let v = transition_vector(t, &l).expect("length matches by construction");
            columns.push(v);
            dedup
                .entry(v)
                .and_modify(|e| e.multiplicity += 1)
                .or_insert_with(|| DedupEntry {
                    multiplicity: 1,
                    representative: l,
                });
        }
        Ok(Configuration { n, columns, dedup })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns, 2^n.
    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// Columns in binary labeling order.
    pub fn columns(&self) -> &[TransitionVector] {
        &self.columns
    }

    /// Distinct columns with multiplicities, in vector order.
    pub fn distinct(&self) -> impl Iterator<Item = (&TransitionVector, &DedupEntry)> {
        self.dedup.iter()
    }

    pub fn distinct_count(&self) -> usize {
        self.dedup.len()
    }

    pub fn dedup_entry(&self, v: &TransitionVector) -> Option<&DedupEntry> {
        self.dedup.get(v)
    }

    /// All labelings attaining a column, in binary order. Linear scan; meant
    /// for reporting, not inner loops.
    pub fn labelings_attaining(&self, v: &TransitionVector) -> Vec<Labeling> {
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, c)| *c == v)
            .map(|(i, _)| Labeling::from_index(self.n, i as u64))
            .collect()
    }

    /// One row of the matrix (0..=3) in column order.
    pub fn row(&self, i: usize) -> impl Iterator<Item = u32> + '_ {
        self.columns.iter().map(move |c| c.0[i])
    }
}

/// A distinct achievable transition vector: how many labelings attain it and
/// one witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCount {
    /// Number of labelings attaining the vector; can reach 2^n.
    pub count: BigUint,
    /// Lexicographically least labeling attaining the vector.
    pub witness: Labeling,
}

/// The set of distinct columns of the configuration with multiplicities,
/// computed by a subtree dynamic program (no 2^n loop).
#[derive(Clone, Debug)]
pub struct AchievablePoints {
    n: usize,
    points: BTreeMap<TransitionVector, PointCount>,
}

impl AchievablePoints {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TransitionVector, &PointCount)> {
        self.points.iter()
    }

    pub fn get(&self, v: &TransitionVector) -> Option<&PointCount> {
        self.points.get(v)
    }

    pub fn vectors(&self) -> impl Iterator<Item = &TransitionVector> {
        self.points.keys()
    }

    /// Sum of all counts; equals 2^n.
    pub fn total(&self) -> BigUint {
        self.points.values().map(|p| &p.count).sum()
    }
}

/// Per-subtree DP state: achievable partial vectors with counts and the
/// least witness mask over the subtree's nodes.
type DpTable = BTreeMap<TransitionVector, (BigUint, u64)>;

/// Computes the distinct transition vectors of `t` with their labeling
/// counts by combining subtree tables bottom-up: for each node and each of
/// its two possible labels, the children's tables are shifted by the
/// connecting-edge transition and merged by sum-convolution.
///
/// Runs in time polynomial in the number of achievable points, so it is
/// usable far beyond the 2^n labeling loop (witness bookkeeping caps the
/// node count at 64).
pub fn achievable_points(t: &Tree) -> Result<AchievablePoints> {
    let n = t.n();
    if n > MAX_DP_NODES {
        return Err(Error::NodeCap { n, cap: MAX_DP_NODES });
    }
    let kids = t.children();
    // Witness masks give node j the bit at position n - j, so smaller masks
    // are lexicographically smaller labelings.
    let bit = |node: usize, label: u8| (label as u64) << (n - node);
    let mut tables: Vec<Option<[DpTable; 2]>> = vec![None; n + 1];
    for v in (1..=n).rev() {
        let mut per_label: [DpTable; 2] = [BTreeMap::new(), BTreeMap::new()];
        for (r, table) in per_label.iter_mut().enumerate() {
            let r = r as u8;
            table.insert(TransitionVector::ZERO, (BigUint::one(), bit(v, r)));
            for &c in &kids[v] {
                let child = tables[c].as_ref().expect("children are processed first");
                // Shift each child table by its connecting edge, merge the two
                // child labels, then convolve with what we have so far.
                let mut shifted: DpTable = BTreeMap::new();
                for (s, child_table) in child.iter().enumerate() {
                    let edge = TransitionVector::edge(r, s as u8);
                    for (tv, (count, mask)) in child_table {
                        merge(&mut shifted, tv.add(&edge), count.clone(), *mask);
                    }
                }
                let mut next: DpTable = BTreeMap::new();
                for (tv_a, (count_a, mask_a)) in table.iter() {
                    for (tv_b, (count_b, mask_b)) in shifted.iter() {
                        merge(&mut next, tv_a.add(tv_b), count_a * count_b, mask_a | mask_b);
                    }
                }
                *table = next;
            }
        }
        for &c in &kids[v] {
            tables[c] = None;
        }
        tables[v] = Some(per_label);
    }
    let [zero_table, one_table] = tables[1].take().expect("root table");
    let mut points: BTreeMap<TransitionVector, PointCount> = BTreeMap::new();
    for table in [zero_table, one_table] {
        for (tv, (count, mask)) in table {
            let witness_bits = (0..n).map(|j| ((mask >> (n - 1 - j)) & 1) as u8).collect();
            let witness = Labeling::new(witness_bits).expect("bits are 0/1");
            points
                .entry(tv)
                .and_modify(|p| {
                    p.count += &count;
                    if witness < p.witness {
                        p.witness = witness.clone();
                    }
                })
                .or_insert(PointCount { count, witness });
        }
    }
    Ok(AchievablePoints { n, points })
}

fn merge(table: &mut DpTable, key: TransitionVector, count: BigUint, mask: u64) {
    table
        .entry(key)
        .and_modify(|(c, m)| {
            *c += &count;
            if mask < *m {
                *m = mask;
            }
        })
        .or_insert((count, mask));
}

/// Checks the column identity behind the non-smoothness of the projective
/// toric variety of a binary tree: writing `~a_l` for the column of labeling
/// `l` minus the all-zeros column, the labelings "1 at the root", "1 at one
/// leaf", and "1 at that leaf's parent" satisfy
/// `~a(root) + ~a(leaf) = ~a(parent)`.
///
/// For n = 3 the only internal node is the root, so the parent role
/// degenerates; there the equivalent witness is `~a(leaf A) + ~a(leaf B) =
/// ~a(both leaves)` with the root as the shared parent.
pub fn nonsmoothness_identity(t: &Tree) -> Result<bool> {
    if !t.is_binary() {
        return Err(Error::NotBinary);
    }
    let n = t.n();
    if n < 3 {
        return Err(Error::Domain("identity needs at least 3 nodes"));
    }
    let reduced = |l: &Labeling| -> Result<[i64; 4]> {
        let v = transition_vector(t, l)?.as_i64();
        Ok([v[0] - (n as i64 - 1), v[1], v[2], v[3]])
    };
    if n == 3 {
        let leaves = t.leaves();
        let a = reduced(&Labeling::ones_at(n, &[leaves[0]]))?;
        let b = reduced(&Labeling::ones_at(n, &[leaves[1]]))?;
        let c = reduced(&Labeling::ones_at(n, &leaves))?;
        return Ok((0..4).all(|i| a[i] + b[i] == c[i]));
    }
    let depth = t.depths();
    let leaf = *t
        .leaves()
        .iter()
        .max_by_key(|&&v| depth[v])
        .expect("tree has leaves");
    let parent = t.parent(leaf);
    debug_assert!(parent != 1, "a deepest leaf of a binary tree with n >= 5 is below depth 1");
    let at_root = reduced(&Labeling::ones_at(n, &[1]))?;
    let at_leaf = reduced(&Labeling::ones_at(n, &[leaf]))?;
    let at_parent = reduced(&Labeling::ones_at(n, &[parent]))?;
    Ok((0..4).all(|i| at_root[i] + at_leaf[i] == at_parent[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{enumerate_binary_trees, enumerate_rooted_trees};
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn tv(a: u32, b: u32, c: u32, d: u32) -> TransitionVector {
        TransitionVector([a, b, c, d])
    }

    #[test]
    fn labeling_order_is_binary_order() {
        let n = 3;
        let all: Vec<Labeling> = (0..8).map(|i| Labeling::from_index(n, i)).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[5].to_string(), "101");
        assert_eq!(Labeling::parse("101").unwrap(), all[5]);
        assert_eq!(all[5].index(), 5);
    }

    #[test]
    fn transition_vector_examples() {
        // All-zeros labeling of any tree.
        for t in [Tree::path(5).unwrap(), Tree::star(6).unwrap()] {
            let n = t.n() as u32;
            let v = transition_vector(&t, &Labeling::zeros(t.n())).unwrap();
            assert_eq!(v, tv(n - 1, 0, 0, 0));
        }
        // Binary tree, 1 at the root: two 1->0 edges.
        for t in [Tree::parse("3; 1 1").unwrap(), Tree::parse("5; 1 1 2 2").unwrap()] {
            let n = t.n() as u32;
            let v = transition_vector(&t, &Labeling::ones_at(t.n(), &[1])).unwrap();
            assert_eq!(v, tv(n - 3, 0, 2, 0));
        }
        // Path on 3 nodes, labeling 010.
        let p3 = Tree::path(3).unwrap();
        let v = transition_vector(&p3, &Labeling::parse("010").unwrap()).unwrap();
        assert_eq!(v, tv(0, 1, 1, 0));
        // Length mismatch is an error.
        assert!(transition_vector(&p3, &Labeling::zeros(4)).is_err());
    }

    /// The printed 4 x 8 matrix of the 3-node path.
    pub(crate) const PATH3_MATRIX: [[u32; 8]; 4] = [
        [2, 1, 0, 0, 1, 0, 0, 0],
        [0, 1, 1, 1, 0, 1, 0, 0],
        [0, 0, 1, 0, 1, 1, 1, 0],
        [0, 0, 0, 1, 0, 0, 1, 2],
    ];

    #[test]
    fn path3_configuration_matches_printed_matrix() {
        let c = Configuration::build(&Tree::path(3).unwrap()).unwrap();
        assert_eq!(c.column_count(), 8);
        for (i, row) in PATH3_MATRIX.iter().enumerate() {
            let got: Vec<u32> = c.row(i).collect();
            assert_eq!(&got, row, "row {i}");
        }
        // Dedup: 7 distinct columns, (0,1,1,0) attained by 010 and 101.
        assert_eq!(c.distinct_count(), 7);
        let entry = c.dedup_entry(&tv(0, 1, 1, 0)).unwrap();
        assert_eq!(entry.multiplicity, 2);
        assert_eq!(entry.representative, Labeling::parse("010").unwrap());
        assert_eq!(
            c.labelings_attaining(&tv(0, 1, 1, 0)),
            vec![Labeling::parse("010").unwrap(), Labeling::parse("101").unwrap()]
        );
    }

    #[test]
    fn binary3_configuration_columns() {
        // Columns for 000..111 computed by hand from the two root edges.
        let c = Configuration::build(&Tree::parse("3; 1 1").unwrap()).unwrap();
        let want = [
            tv(2, 0, 0, 0),
            tv(1, 1, 0, 0),
            tv(1, 1, 0, 0),
            tv(0, 2, 0, 0),
            tv(0, 0, 2, 0),
            tv(0, 0, 1, 1),
            tv(0, 0, 1, 1),
            tv(0, 0, 0, 2),
        ];
        assert_eq!(c.columns(), &want);
    }

    #[test]
    fn configuration_cap() {
        let t = Tree::path(6).unwrap();
        assert!(Configuration::build_with_cap(&t, 5).is_err());
        assert!(Configuration::build_with_cap(&t, 6).is_ok());
    }

    /// Brute-force dedup of the 2^n columns; the independent oracle for the
    /// dynamic program.
    fn brute_force_points(t: &Tree) -> BTreeMap<TransitionVector, (u64, Labeling)> {
        let n = t.n();
        let mut map: BTreeMap<TransitionVector, (u64, Labeling)> = BTreeMap::new();
        for idx in 0..(1u64 << n) {
            let l = Labeling::from_index(n, idx);
            let v = transition_vector(t, &l).unwrap();
            map.entry(v)
                .and_modify(|(c, _)| *c += 1)
                .or_insert((1, l));
        }
        map
    }

    #[test]
    fn achievable_points_match_brute_force_for_small_trees() {
        for n in 1..=8 {
            for t in enumerate_rooted_trees(n) {
                let dp = achievable_points(&t).unwrap();
                let brute = brute_force_points(&t);
                assert_eq!(dp.len(), brute.len(), "{t}");
                for (v, (count, witness)) in &brute {
                    let p = dp.get(v).unwrap();
                    assert_eq!(p.count, BigUint::from(*count), "{t} {v}");
                    assert_eq!(&p.witness, witness, "{t} {v}");
                }
            }
        }
    }

    #[test]
    fn achievable_points_star_formula() {
        // Star: root label fixes the row pair; leaves are independent, so the
        // points are (n-1-j, j, 0, 0) and (0, 0, j, n-1-j) with binomial counts.
        for n in [4usize, 7, 12, 31] {
            let ap = achievable_points(&Tree::star(n).unwrap()).unwrap();
            assert_eq!(ap.len(), 2 * (n - 1) + 2);
            let mut choose = BigUint::one();
            for j in 0..n as u32 {
                if j > 0 {
                    choose = choose * (n as u32 - j) / j;
                }
                let zero_root = ap.get(&tv(n as u32 - 1 - j, j, 0, 0)).unwrap();
                let one_root = ap.get(&tv(0, 0, j, n as u32 - 1 - j)).unwrap();
                assert_eq!(zero_root.count, choose);
                assert_eq!(one_root.count, choose);
            }
            assert_eq!(ap.total(), BigUint::from(1u8) << n);
        }
    }

    #[test]
    fn achievable_points_path3_counts() {
        let ap = achievable_points(&Tree::path(3).unwrap()).unwrap();
        let got: Vec<u64> = ap
            .iter()
            .map(|(_, p)| u64::try_from(&p.count).unwrap())
            .collect();
        // In vector order the counts are a permutation of the binary-order
        // list (1,1,2,1,1,1,1); pin both the multiset and the doubled point.
        assert_eq!(ap.len(), 7);
        assert_eq!(got.iter().sum::<u64>(), 8);
        assert_eq!(
            u64::try_from(&ap.get(&tv(0, 1, 1, 0)).unwrap().count).unwrap(),
            2
        );
        assert_eq!(got.iter().filter(|&&c| c == 2).count(), 1);
    }

    #[test]
    fn achievable_points_run_beyond_the_labeling_cap() {
        // n = 40 would never finish by enumeration; the DP is immediate.
        let mut parents: Vec<usize> = (1..20).collect(); // path of 20
        for _ in 20..40 {
            parents.push(10); // bushy middle
        }
        let t = Tree::from_parents(40, &parents).unwrap();
        let ap = achievable_points(&t).unwrap();
        assert_eq!(ap.total(), BigUint::from(1u8) << 40);
        for v in ap.vectors() {
            assert_eq!(v.sum(), 39);
        }
    }

    #[test]
    fn swap_involution_and_sums() {
        for n in 2..=7 {
            for t in enumerate_rooted_trees(n) {
                let ap = achievable_points(&t).unwrap();
                let set: BTreeSet<TransitionVector> = ap.vectors().copied().collect();
                for v in &set {
                    assert_eq!(v.sum(), (n - 1) as u32);
                    assert!(set.contains(&v.swapped()));
                    let mult = &ap.get(v).unwrap().count;
                    assert_eq!(mult, &ap.get(&v.swapped()).unwrap().count);
                }
            }
        }
    }

    #[test]
    fn nonsmoothness_examples() {
        assert!(nonsmoothness_identity(&Tree::parse("3; 1 1").unwrap()).unwrap());
        // n = 5: (-2,0,2,0) + (-1,1,0,0) = (-3,1,2,0), the column of "1 at
        // node 2" reduced by the all-zeros column (n-4, 1, 2, 0).
        let b5 = Tree::parse("5; 1 1 2 2").unwrap();
        let v = transition_vector(&b5, &Labeling::ones_at(5, &[2])).unwrap();
        assert_eq!(v, tv(1, 1, 2, 0));
        assert!(nonsmoothness_identity(&b5).unwrap());
        for t in enumerate_binary_trees(7).unwrap() {
            assert!(nonsmoothness_identity(&t).unwrap());
        }
        assert!(nonsmoothness_identity(&Tree::path(4).unwrap()).is_err());
    }
}
