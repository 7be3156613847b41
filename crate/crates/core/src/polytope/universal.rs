//! The universal polytope of binary trees.
//!
//! Every binary tree's transition vectors satisfy, on top of the simplex
//! bounds `b_ij >= 0` and the level constraint `sum b = n - 1`, the two
//! inequalities
//!
//! ```text
//! (b00 - b01) / 2 + b10 <= (n + 1) / 2
//! (b11 - b10) / 2 + b01 <= (n + 1) / 2
//! ```
//!
//! whose left sides count the zeros (ones) created while moving down the
//! tree, bounded by the leaf count. The six inequalities cut out a
//! 3-dimensional polytope with eight vertices, rational in general and
//! integral exactly when `n = 3 mod 6`. For completely odd binary trees the
//! polytope of the tree coincides with it.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::config::{achievable_points, transition_vector, Labeling};
use crate::error::{Error, Result};
use crate::tree::Tree;

use super::{hull, Facet, LatticePolytope};

type Rat = Ratio<i64>;

/// The eight-vertex polytope cut out by the simplex bounds and the two
/// binary-tree inequalities at a given node count.
#[derive(Clone, Debug)]
pub struct UniversalPolytope {
    pub n: usize,
    /// The eight vertex formulas evaluated at `n`, as exact rationals.
    pub vertices: Vec<[Rat; 4]>,
    /// Canonical facet descriptions `(normal, offset)` with
    /// `normal . b <= offset`, in sorted order.
    pub facets: Vec<([i64; 4], i64)>,
}

/// Evaluates the eight vertex formulas and six facets at `n >= 4`.
pub fn universal_polytope(n: usize) -> Result<UniversalPolytope> {
    if n < 4 {
        return Err(Error::Domain("the universal polytope needs n >= 4"));
    }
    let i = |x: i64| Rat::from_integer(x);
    let r = |num: i64, den: i64| Rat::new(num, den);
    let n_i = n as i64;
    let vertices = vec![
        [i(n_i - 1), i(0), i(0), i(0)],
        [i(n_i - 3), i(0), i(2), i(0)],
        [r(n_i - 3, 2), r(n_i + 1, 2), i(0), i(0)],
        [i(0), r(2 * n_i, 3), r(n_i - 3, 3), i(0)],
        [i(0), r(n_i - 3, 3), r(2 * n_i, 3), i(0)],
        [i(0), i(0), r(n_i + 1, 2), r(n_i - 3, 2)],
        [i(0), i(2), i(0), i(n_i - 3)],
        [i(0), i(0), i(0), i(n_i - 1)],
    ];
    let mut facets = vec![
        // b_ij >= 0, lifted to min-coordinate-0 form on the level hyperplane.
        ([0, 1, 1, 1], n_i - 1),
        ([1, 0, 1, 1], n_i - 1),
        ([1, 1, 0, 1], n_i - 1),
        ([1, 1, 1, 0], n_i - 1),
        // b00 - b01 + 2 b10 <= n + 1 and its 0 <-> 1 swap.
        ([2, 0, 3, 1], 2 * n_i),
        ([1, 3, 0, 2], 2 * n_i),
    ];
    facets.sort_unstable();
    Ok(UniversalPolytope { n, vertices, facets })
}

impl UniversalPolytope {
    /// True iff all eight vertices are lattice points (n = 3 mod 6).
    pub fn is_integral(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|x| x.is_integer()))
    }

    /// The vertices as integer points, sorted; `None` unless integral.
    pub fn integral_vertices(&self) -> Option<Vec<[i64; 4]>> {
        if !self.is_integral() {
            return None;
        }
        let mut out: Vec<[i64; 4]> = self
            .vertices
            .iter()
            .map(|v| [
                v[0].to_integer(),
                v[1].to_integer(),
                v[2].to_integer(),
                v[3].to_integer(),
            ])
            .collect();
        out.sort_unstable();
        Some(out)
    }
}

/// Checks that the polytope of a completely odd binary tree on more than
/// three nodes has exactly the universal polytope's vertex and facet sets.
pub fn verify_theorem1(t: &Tree) -> Result<bool> {
    if !t.is_completely_odd()? {
        return Err(Error::Domain("tree is not completely odd"));
    }
    if t.n() <= 3 {
        return Err(Error::Domain("theorem needs more than three nodes"));
    }
    let poly = hull(&achievable_points(t)?.vectors().copied().collect::<Vec<_>>())?;
    let universal = universal_polytope(t.n())?;
    let Some(expected_vertices) = universal.integral_vertices() else {
        return Ok(false);
    };
    let got_facets: Vec<([i64; 4], i64)> = poly
        .facets()
        .iter()
        .map(|f: &Facet| (f.normal, f.offset))
        .collect();
    Ok(poly.vertices() == expected_vertices.as_slice() && got_facets == universal.facets)
}

/// Exhaustively checks the two binary-tree inequalities over all labelings
/// and the tightness characterization of the first: equality holds exactly
/// for labelings with a one at the root and zeros at all leaves (and, by the
/// 0 <-> 1 swap, mirrored for the second).
pub fn binary_inequalities_hold(t: &Tree) -> Result<bool> {
    if !t.is_binary() {
        return Err(Error::NotBinary);
    }
    let n = t.n();
    if n >= 64 {
        return Err(Error::NodeCap { n, cap: 63 });
    }
    let bound = n as i64 + 1;
    let leaves = t.leaves();
    for idx in 0..(1u64 << n) {
        let l = Labeling::from_index(n, idx);
        let v = transition_vector(t, &l)?.as_i64();
        let lhs1 = v[0] - v[1] + 2 * v[2];
        let lhs2 = v[3] - v[2] + 2 * v[1];
        if lhs1 > bound || lhs2 > bound {
            return Ok(false);
        }
        let root_one_leaves_zero = l.bit(1) == 1 && leaves.iter().all(|&w| l.bit(w) == 0);
        let root_zero_leaves_one = l.bit(1) == 0 && leaves.iter().all(|&w| l.bit(w) == 1);
        if (lhs1 == bound) != root_one_leaves_zero || (lhs2 == bound) != root_zero_leaves_one {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The polytope of a binary tree sits inside the universal polytope.
pub fn contained_in_universal(poly: &LatticePolytope, universal: &UniversalPolytope) -> bool {
    poly.points().iter().all(|p| {
        universal
            .facets
            .iter()
            .all(|(g, c)| g[0] * p[0] + g[1] * p[1] + g[2] * p[2] + g[3] * p[3] <= *c)
    })
}
