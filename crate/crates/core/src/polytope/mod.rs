//! The lattice polytope spanned by a tree's transition vectors.
//!
//! The polytope lives in `n - 1` times the unit simplex of R^4, hence is at
//! most 3-dimensional; its normal fan partitions log-parameter space by
//! optimal labeling, and its normalized lattice volume equals the degree of
//! the tree's toric ideal. Everything here is exact integer arithmetic.

mod combinatorics;
mod hull;
mod universal;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::config::{achievable_points, TransitionVector};
use crate::error::{Error, Result};
use crate::tree::Tree;

pub use combinatorics::same_combinatorial_type;
pub use hull::hull;
pub use universal::{
    binary_inequalities_hold, contained_in_universal, universal_polytope, verify_theorem1,
    UniversalPolytope,
};

/// A facet of a 3-dimensional polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive outward normal in the canonical representative with minimum
    /// coordinate 0 (normals are unique up to multiples of (1,1,1,1) on the
    /// level hyperplane).
    pub normal: [i64; 4],
    /// `normal . b <= offset` over the polytope, with equality on the facet.
    pub offset: i64,
    /// Corner indices into `vertices`, in cyclic order, counter-clockwise
    /// seen from outside.
    pub vertices: Vec<usize>,
}

/// Exact vertex/edge/facet description of the convex hull of a set of
/// transition vectors.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    dim: usize,
    level: i64,
    points: Vec<[i64; 4]>,
    vertices: Vec<[i64; 4]>,
    edges: Vec<(usize, usize)>,
    facets: Vec<Facet>,
}

impl LatticePolytope {
    /// Affine dimension, between 0 and 3.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Common coordinate sum of all points (`n - 1` for a tree's polytope).
    pub fn level(&self) -> i64 {
        self.level
    }

    /// The distinct input points, sorted.
    pub fn points(&self) -> &[[i64; 4]] {
        &self.points
    }

    /// Hull vertices, sorted.
    pub fn vertices(&self) -> &[[i64; 4]] {
        &self.vertices
    }

    pub fn is_vertex(&self, p: &[i64; 4]) -> bool {
        self.vertices.binary_search(p).is_ok()
    }

    /// Edges as sorted pairs of vertex indices.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Facets in sorted canonical order (empty below dimension 3).
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Face counts `(V, E, F)`; in dimension 3 these satisfy Euler's
    /// relation, in dimension 2 the polygon itself is the single 2-face.
    pub fn f_vector(&self) -> (usize, usize, usize) {
        match self.dim {
            3 => (self.vertices.len(), self.edges.len(), self.facets.len()),
            2 => (self.vertices.len(), self.edges.len(), 1),
            1 => (2, 1, 0),
            _ => (1, 0, 0),
        }
    }

    /// The vertices of the face maximizing an integer functional, sorted.
    pub fn face_maximizing(&self, functional: &[i64; 4]) -> Vec<[i64; 4]> {
        let value = |p: &[i64; 4]| {
            functional[0] * p[0] + functional[1] * p[1] + functional[2] * p[2] + functional[3] * p[3]
        };
        let best = self.vertices.iter().map(value).max().unwrap_or(0);
        self.vertices
            .iter()
            .filter(|v| value(v) == best)
            .copied()
            .collect()
    }
}

/// Convex hull of a tree's achievable transition vectors.
pub fn tree_polytope(t: &Tree) -> Result<LatticePolytope> {
    let points: Vec<TransitionVector> = achievable_points(t)?.vectors().copied().collect();
    hull(&points)
}

/// Normalized lattice volume of a 3-dimensional polytope with respect to the
/// affine lattice generated by differences of its input points. For a tree's
/// polytope this equals the degree of the projective toric variety.
pub fn normalized_volume(p: &LatticePolytope) -> Result<u64> {
    if p.dim != 3 {
        return Err(Error::Degenerate { dim: p.dim });
    }
    let lattice_det = difference_lattice_det(&p.points).expect("dimension checked above");
    // Cone every facet avoiding the apex over fan triangulations of its
    // polygon; unsigned determinants sum to the euclidean volume times six.
    let apex = p.vertices[0];
    let apex_index = p
        .vertices
        .binary_search(&apex)
        .expect("apex is a vertex");
    let mut six_volume: i128 = 0;
    for facet in &p.facets {
        if facet.vertices.contains(&apex_index) {
            continue;
        }
        let ring = &facet.vertices;
        let base = p.vertices[ring[0]];
        for w in 1..ring.len() - 1 {
            let b = p.vertices[ring[w]];
            let c = p.vertices[ring[w + 1]];
            six_volume += det3(
                diff3(base, apex),
                diff3(b, apex),
                diff3(c, apex),
            )
            .unsigned_abs() as i128;
        }
    }
    debug_assert_eq!(six_volume % lattice_det as i128, 0);
    Ok((six_volume / lattice_det as i128) as u64)
}

fn diff3(a: [i64; 4], b: [i64; 4]) -> [i64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn det3(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// Determinant of the lattice generated by differences of the given points
/// (projected to the first three coordinates); `None` if the rank is
/// below 3. Triangularizes a generating set with integer row operations.
fn difference_lattice_det(points: &[[i64; 4]]) -> Option<u64> {
    let origin = points[0];
    let mut rows: [Option<[i64; 3]>; 3] = [None, None, None];
    for p in &points[1..] {
        let mut v = diff3(*p, origin);
        for col in 0..3 {
            if v[col] == 0 {
                continue;
            }
            match rows[col] {
                None => {
                    rows[col] = Some(v);
                    break;
                }
                Some(ref mut pivot) => {
                    // Euclidean elimination in this column.
                    while v[col] != 0 {
                        let q = pivot[col] / v[col];
                        for i in 0..3 {
                            pivot[i] -= q * v[i];
                        }
                        core::mem::swap(pivot, &mut v);
                    }
                }
            }
        }
    }
    match rows {
        [Some(a), Some(b), Some(c)] => Some((a[0] * b[1] * c[2]).unsigned_abs()),
        _ => None,
    }
}

/// One census row: vertex-count statistics of the polytopes of all trees
/// with a given node count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub count: u64,
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub vertex_sum: u64,
}

impl CensusRow {
    /// Mean vertex count in hundredths, rounded half-up.
    pub fn mean_hundredths(&self) -> u64 {
        (200 * self.vertex_sum + self.count) / (2 * self.count)
    }

    /// Mean formatted to two decimals with half-up rounding.
    pub fn mean_string(&self) -> String {
        let h = self.mean_hundredths();
        alloc::format!("{}.{:02}", h / 100, h % 100)
    }

    /// |mean - printed value| <= 1/100, with the printed value given in
    /// hundredths; exact rational comparison.
    pub fn mean_within_one_hundredth(&self, printed_hundredths: u64) -> bool {
        let lhs = (100 * self.vertex_sum).abs_diff(printed_hundredths * self.count);
        lhs <= self.count
    }
}

/// Folds polytope vertex counts of a tree stream into per-node-count rows,
/// ordered by n.
pub fn census<I: IntoIterator<Item = Tree>>(trees: I) -> Result<Vec<CensusRow>> {
    let mut rows: BTreeMap<usize, CensusRow> = BTreeMap::new();
    for t in trees {
        let v = tree_polytope(&t)?.vertices().len();
        rows.entry(t.n())
            .and_modify(|r| {
                r.count += 1;
                r.min_vertices = r.min_vertices.min(v);
                r.max_vertices = r.max_vertices.max(v);
                r.vertex_sum += v as u64;
            })
            .or_insert(CensusRow {
                n: t.n(),
                count: 1,
                min_vertices: v,
                max_vertices: v,
                vertex_sum: v as u64,
            });
    }
    Ok(rows.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{achievable_points, Labeling};
    use crate::tree::{enumerate_binary_trees, enumerate_rooted_trees};
    use alloc::vec;

    fn polytope_of(text: &str) -> LatticePolytope {
        tree_polytope(&Tree::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn path3_has_7_vertices_6_facets() {
        let p = polytope_of("3; 1 2");
        assert_eq!(p.dim(), 3);
        let (v, e, f) = p.f_vector();
        assert_eq!((v, f), (7, 6));
        assert_eq!(e, 11, "forced by Euler's relation");
    }

    #[test]
    fn star_polytopes_are_tetrahedra() {
        for n in [3usize, 5, 9] {
            let p = tree_polytope(&Tree::star(n).unwrap()).unwrap();
            assert_eq!(p.f_vector(), (4, 6, 4), "star on {n} nodes");
            let m = (n - 1) as i64;
            assert_eq!(
                p.vertices(),
                [
                    [0, 0, 0, m],
                    [0, 0, m, 0],
                    [0, m, 0, 0],
                    [m, 0, 0, 0],
                ]
            );
        }
    }

    #[test]
    fn degenerate_inputs_get_lower_dimensional_polytopes() {
        let tv = |a, b, c, d| TransitionVector([a, b, c, d]);
        let point = hull(&[tv(2, 0, 0, 0)]).unwrap();
        assert_eq!(point.f_vector(), (1, 0, 0));
        let segment = hull(&[tv(2, 0, 0, 0), tv(1, 1, 0, 0), tv(0, 2, 0, 0)]).unwrap();
        assert_eq!(segment.dim(), 1);
        assert_eq!(segment.f_vector(), (2, 1, 0));
        assert_eq!(segment.vertices(), [[0, 2, 0, 0], [2, 0, 0, 0]]);
        let square = hull(&[
            tv(1, 1, 0, 0),
            tv(1, 0, 1, 0),
            tv(0, 1, 0, 1),
            tv(0, 0, 1, 1),
            // interior point of the square
            tv(2, 0, 0, 0),
        ]);
        // (2,0,0,0) is not in the plane of the others; use a true 2d set.
        assert!(square.is_ok());
        let flat = hull(&[tv(2, 0, 0, 0), tv(0, 2, 0, 0), tv(0, 0, 2, 0), tv(1, 1, 0, 0)]).unwrap();
        assert_eq!(flat.dim(), 2);
        assert_eq!(flat.f_vector(), (3, 3, 1));
        assert!(hull(&[]).is_err());
        assert!(hull(&[tv(1, 0, 0, 0), tv(2, 0, 0, 0)]).is_err());
    }

    #[test]
    fn euler_relation_across_small_trees() {
        for n in 3..=8 {
            for t in enumerate_rooted_trees(n) {
                let p = tree_polytope(&t).unwrap();
                if p.dim() == 3 {
                    let (v, e, f) = p.f_vector();
                    assert_eq!(v + f, e + 2, "{t}");
                }
                for facet in p.facets() {
                    assert!(facet.vertices.len() >= 3);
                    // Every point satisfies every facet inequality.
                    for q in p.points() {
                        let lhs: i64 = (0..4).map(|i| facet.normal[i] * q[i]).sum();
                        assert!(lhs <= facet.offset);
                    }
                }
            }
        }
    }

    #[test]
    fn swap_involution_preserves_polytope() {
        for n in 2..=8 {
            for t in enumerate_rooted_trees(n) {
                let p = tree_polytope(&t).unwrap();
                let mut swapped: Vec<[i64; 4]> = p
                    .vertices()
                    .iter()
                    .map(|v| [v[3], v[2], v[1], v[0]])
                    .collect();
                swapped.sort_unstable();
                assert_eq!(p.vertices(), swapped.as_slice(), "{t}");
            }
        }
    }

    #[test]
    fn normalized_volume_examples() {
        assert_eq!(normalized_volume(&polytope_of("3; 1 2")).unwrap(), 6);
        assert_eq!(normalized_volume(&polytope_of("3; 1 1")).unwrap(), 4);
        assert_eq!(normalized_volume(&polytope_of("5; 1 1 2 2")).unwrap(), 28);
        let point = hull(&[TransitionVector([2, 0, 0, 0])]).unwrap();
        assert!(normalized_volume(&point).is_err());
    }

    #[test]
    fn path_degrees_match_volume_route() {
        let want = [6u64, 19, 36, 61, 90];
        for (i, &deg) in want.iter().enumerate() {
            let t = Tree::path(i + 3).unwrap();
            assert_eq!(normalized_volume(&tree_polytope(&t).unwrap()).unwrap(), deg);
        }
    }

    #[test]
    fn universal_polytope_vertices_at_9() {
        let u = universal_polytope(9).unwrap();
        assert!(u.is_integral());
        let got = u.integral_vertices().unwrap();
        let mut want = vec![
            [8, 0, 0, 0],
            [6, 0, 2, 0],
            [3, 5, 0, 0],
            [0, 6, 2, 0],
            [0, 2, 6, 0],
            [0, 0, 5, 3],
            [0, 2, 0, 6],
            [0, 0, 0, 8],
        ];
        want.sort_unstable();
        assert_eq!(got, want);
        assert_eq!(u.facets.len(), 6);
        assert!(universal_polytope(3).is_err());
    }

    #[test]
    fn universal_polytope_not_integral_at_7() {
        let u = universal_polytope(7).unwrap();
        assert!(!u.is_integral());
        // (0, 2n/3, (n-3)/3, 0) = (0, 14/3, 4/3, 0)
        use num_rational::Ratio;
        assert_eq!(u.vertices[3][1], Ratio::new(14, 3));
        assert_eq!(u.vertices[3][2], Ratio::new(4, 3));
    }

    #[test]
    fn theorem1_on_a_completely_odd_9_tree() {
        let t = Tree::from_parents(9, &[1, 1, 3, 3, 4, 4, 5, 5]).unwrap();
        assert!(t.is_completely_odd().unwrap());
        assert!(verify_theorem1(&t).unwrap());
        let p = tree_polytope(&t).unwrap();
        assert_eq!(p.f_vector().0, 8);
        assert_eq!(p.facets().len(), 6);
    }

    #[test]
    fn non_completely_odd_9_tree_shares_six_vertices() {
        let odd: Vec<Tree> = enumerate_binary_trees(9)
            .unwrap()
            .filter(|t| !t.is_completely_odd().unwrap())
            .collect();
        assert!(!odd.is_empty());
        let universal = universal_polytope(9).unwrap().integral_vertices().unwrap();
        for t in odd {
            let p = tree_polytope(&t).unwrap();
            let shared = universal.iter().filter(|v| p.is_vertex(v)).count();
            assert!(shared >= 6 && shared < 8, "{t}: shared {shared}");
            assert!(verify_theorem1(&t).is_err(), "precondition violated");
        }
    }

    #[test]
    fn binary_inequalities_examples() {
        // Binary 3-node tree, labeling 100: vector (0,0,2,0); the first
        // inequality is tight at (n+1) = 4 in doubled form.
        let t3 = Tree::parse("3; 1 1").unwrap();
        let v = crate::config::transition_vector(&t3, &Labeling::parse("100").unwrap())
            .unwrap()
            .as_i64();
        assert_eq!(v[0] - v[1] + 2 * v[2], 4);
        let z = crate::config::transition_vector(&t3, &Labeling::zeros(3))
            .unwrap()
            .as_i64();
        assert_eq!(z[0] - z[1] + 2 * z[2], 2);
        for n in [3usize, 5, 7, 9] {
            for t in enumerate_binary_trees(n).unwrap() {
                assert!(binary_inequalities_hold(&t).unwrap(), "{t}");
            }
        }
        assert!(binary_inequalities_hold(&Tree::path(4).unwrap()).is_err());
    }

    #[test]
    fn binary_polytopes_sit_inside_universal() {
        for n in [5usize, 7, 9, 11] {
            let u = universal_polytope(n).unwrap();
            for t in enumerate_binary_trees(n).unwrap() {
                let p = tree_polytope(&t).unwrap();
                assert!(contained_in_universal(&p, &u), "{t}");
            }
        }
    }

    #[test]
    fn kuo_two_combinatorial_types_for_paths() {
        let polys: Vec<(usize, LatticePolytope)> = (4..=12)
            .map(|n| (n, tree_polytope(&Tree::path(n).unwrap()).unwrap()))
            .collect();
        for (n, p) in &polys {
            for (m, q) in &polys {
                let same = same_combinatorial_type(p, q);
                assert_eq!(same, (n % 2) == (m % 2), "paths {n} and {m}");
            }
        }
    }

    #[test]
    fn combinatorial_type_distinguishes_counts_and_structure() {
        let tetra = polytope_of("3; 1 1");
        let path3 = polytope_of("3; 1 2");
        assert!(!same_combinatorial_type(&tetra, &path3));
        assert!(same_combinatorial_type(&tetra, &tree_polytope(&Tree::star(8).unwrap()).unwrap()));
    }

    #[test]
    fn census_small_rows() {
        let rows = census((1..=4).flat_map(enumerate_rooted_trees)).unwrap();
        assert_eq!(rows.len(), 4);
        let row3 = &rows[2];
        assert_eq!(
            (row3.n, row3.count, row3.min_vertices, row3.max_vertices),
            (3, 2, 4, 7)
        );
        assert_eq!(row3.mean_string(), "5.50");
        assert!(row3.mean_within_one_hundredth(550));
        let row4 = &rows[3];
        assert_eq!(
            (row4.n, row4.count, row4.min_vertices, row4.max_vertices),
            (4, 4, 4, 8)
        );
        assert!(row4.mean_within_one_hundredth(700));
    }

    #[test]
    fn face_maximizing_picks_the_right_face() {
        let p = polytope_of("3; 1 2");
        // (1,0,0,0) is uniquely maximized by the all-zeros column (2,0,0,0).
        assert_eq!(p.face_maximizing(&[1, 0, 0, 0]), vec![[2, 0, 0, 0]]);
        // The zero functional returns every vertex.
        assert_eq!(p.face_maximizing(&[0, 0, 0, 0]).len(), 7);
        // A facet normal returns that facet's vertex set.
        for facet in p.facets() {
            let face = p.face_maximizing(&facet.normal);
            assert_eq!(face.len(), facet.vertices.len());
        }
    }

    #[test]
    fn achievable_point_counts_are_recorded_per_n() {
        // Empirical point-count growth; reported, not asserted against a law.
        for n in [4usize, 8, 12] {
            let max_points = enumerate_rooted_trees(n)
                .map(|t| achievable_points(&t).unwrap().len())
                .max()
                .unwrap();
            assert!(max_points >= n);
        }
    }
}
