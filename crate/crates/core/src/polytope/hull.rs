//! Exact convex hull of the transition vectors.
//!
//! All points live on the hyperplane `b00 + b01 + b10 + b11 = n - 1`, so the
//! hull is computed after projecting out the last coordinate (an affine
//! isomorphism). Every geometric decision is an integer sign test; there is
//! no floating point and hence no tolerance anywhere.
//!
//! The point sets here are tiny (the number of distinct transition vectors
//! grows slowly with n), so facets are found by supporting-plane
//! enumeration: every non-collinear triple of points spans a candidate
//! plane, and a plane with all points on one side is a facet. Coplanar
//! triangles never have to be merged because each supporting plane is kept
//! once and its two-dimensional face is rebuilt as a polygon.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::config::TransitionVector;
use crate::error::{Error, Result};

use super::{Facet, LatticePolytope};

type P3 = [i64; 3];

fn sub(a: P3, b: P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: P3, b: P3) -> P3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: P3, b: P3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn is_zero(a: P3) -> bool {
    a == [0, 0, 0]
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Divides by the gcd of the entries; the zero vector stays zero.
fn primitive(v: P3) -> P3 {
    let g = gcd(gcd(v[0], v[1]), v[2]);
    if g == 0 {
        v
    } else {
        [v[0] / g, v[1] / g, v[2] / g]
    }
}

/// Sign-normalizes so the first nonzero entry is positive.
fn signed_canonical(v: P3) -> P3 {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => [-v[0], -v[1], -v[2]],
        _ => v,
    }
}

/// Computes the exact hull of a set of transition vectors.
///
/// The input must be nonempty with one common coordinate sum. Inputs of
/// affine dimension below 3 come back as the correct lower-dimensional
/// polytope (point, segment, or polygon).
pub fn hull(points: &[TransitionVector]) -> Result<LatticePolytope> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let level = points[0].sum() as i64;
    if points.iter().any(|p| p.sum() as i64 != level) {
        return Err(Error::MixedCoordinateSums);
    }
    let mut points4: Vec<[i64; 4]> = points.iter().map(|p| p.as_i64()).collect();
    points4.sort_unstable();
    points4.dedup();
    let proj: Vec<P3> = points4.iter().map(|p| [p[0], p[1], p[2]]).collect();

    let frame = affine_frame(&proj);
    match frame.len() {
        0 => Ok(LatticePolytope {
            dim: 0,
            level,
            vertices: points4.clone(),
            points: points4,
            edges: Vec::new(),
            facets: Vec::new(),
        }),
        1 => Ok(segment(level, points4, &proj, frame[0])),
        2 => Ok(polygon(level, points4, &proj, frame[0], frame[1])),
        _ => Ok(full_dimensional(level, points4, &proj)),
    }
}

/// Indices of up to three points that, with point 0, span the affine hull.
fn affine_frame(proj: &[P3]) -> Vec<usize> {
    let p0 = proj[0];
    let mut frame = Vec::new();
    let Some(i1) = (1..proj.len()).find(|&i| proj[i] != p0) else {
        return frame;
    };
    frame.push(i1);
    let d1 = sub(proj[i1], p0);
    let Some(i2) = (1..proj.len()).find(|&i| !is_zero(cross(d1, sub(proj[i], p0)))) else {
        return frame;
    };
    frame.push(i2);
    let normal = cross(d1, sub(proj[i2], p0));
    if let Some(i3) = (1..proj.len()).find(|&i| dot(normal, sub(proj[i], p0)) != 0) {
        frame.push(i3);
    }
    frame
}

fn segment(level: i64, points4: Vec<[i64; 4]>, proj: &[P3], along: usize) -> LatticePolytope {
    let d = sub(proj[along], proj[0]);
    let lo = (0..proj.len()).min_by_key(|&i| dot(d, proj[i])).unwrap();
    let hi = (0..proj.len()).max_by_key(|&i| dot(d, proj[i])).unwrap();
    let mut vertices = alloc::vec![points4[lo], points4[hi]];
    vertices.sort_unstable();
    LatticePolytope {
        dim: 1,
        level,
        vertices,
        points: points4,
        edges: alloc::vec![(0, 1)],
        facets: Vec::new(),
    }
}

fn polygon(
    level: i64,
    points4: Vec<[i64; 4]>,
    proj: &[P3],
    f1: usize,
    f2: usize,
) -> LatticePolytope {
    let normal = cross(sub(proj[f1], proj[0]), sub(proj[f2], proj[0]));
    let ring = polygon_in_plane(proj, &(0..proj.len()).collect::<Vec<_>>(), normal);
    let mut vertices: Vec<[i64; 4]> = ring.iter().map(|&i| points4[i]).collect();
    vertices.sort_unstable();
    let index_of = |p: &[i64; 4]| vertices.binary_search(p).unwrap();
    let mut edges = BTreeSet::new();
    for w in 0..ring.len() {
        let a = index_of(&points4[ring[w]]);
        let b = index_of(&points4[ring[(w + 1) % ring.len()]]);
        edges.insert((a.min(b), a.max(b)));
    }
    LatticePolytope {
        dim: 2,
        level,
        vertices,
        points: points4,
        edges: edges.into_iter().collect(),
        facets: Vec::new(),
    }
}

fn full_dimensional(level: i64, points4: Vec<[i64; 4]>, proj: &[P3]) -> LatticePolytope {
    let m = proj.len();
    // Supporting-plane enumeration over point triples.
    let mut tested: BTreeSet<(P3, i64)> = BTreeSet::new();
    let mut supports: Vec<(P3, i64)> = Vec::new(); // outward normal, offset
    for i in 0..m {
        for j in (i + 1)..m {
            let d1 = sub(proj[j], proj[i]);
            for k in (j + 1)..m {
                let normal = primitive(cross(d1, sub(proj[k], proj[i])));
                if is_zero(normal) {
                    continue;
                }
                let canon = signed_canonical(normal);
                let key = (canon, dot(canon, proj[i]));
                if !tested.insert(key) {
                    continue;
                }
                let c = dot(normal, proj[i]);
                let mut above = false;
                let mut below = false;
                for p in proj {
                    match dot(normal, *p).cmp(&c) {
                        core::cmp::Ordering::Greater => above = true,
                        core::cmp::Ordering::Less => below = true,
                        core::cmp::Ordering::Equal => {}
                    }
                    if above && below {
                        break;
                    }
                }
                if above && below {
                    continue;
                }
                if above {
                    supports.push(([-normal[0], -normal[1], -normal[2]], -c));
                } else {
                    supports.push((normal, c));
                }
            }
        }
    }
    supports.sort_unstable();

    // Rebuild each facet as the polygon of its on-plane points; corner points
    // of some facet are exactly the vertices.
    let mut facet_rings: Vec<((P3, i64), Vec<usize>)> = Vec::new();
    let mut vertex_points: BTreeSet<[i64; 4]> = BTreeSet::new();
    for (normal, c) in supports {
        let on_plane: Vec<usize> = (0..m).filter(|&i| dot(normal, proj[i]) == c).collect();
        let ring = polygon_in_plane(proj, &on_plane, normal);
        for &i in &ring {
            vertex_points.insert(points4[i]);
        }
        facet_rings.push(((normal, c), ring));
    }
    let vertices: Vec<[i64; 4]> = vertex_points.into_iter().collect();
    let index_of = |p: &[i64; 4]| vertices.binary_search(p).unwrap();

    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut facets: Vec<Facet> = Vec::new();
    for ((normal, c), ring) in facet_rings {
        let ring_idx: Vec<usize> = ring.iter().map(|&i| index_of(&points4[i])).collect();
        for w in 0..ring_idx.len() {
            let a = ring_idx[w];
            let b = ring_idx[(w + 1) % ring_idx.len()];
            edges.insert((a.min(b), a.max(b)));
        }
        let (normal4, offset) = lift(normal, c, level);
        facets.push(Facet {
            normal: normal4,
            offset,
            vertices: ring_idx,
        });
    }
    facets.sort_unstable_by(|a, b| (a.normal, a.offset).cmp(&(b.normal, b.offset)));

    let poly = LatticePolytope {
        dim: 3,
        level,
        vertices,
        points: points4,
        edges: edges.into_iter().collect(),
        facets,
    };
    debug_assert_eq!(
        poly.vertices.len() + poly.facets.len(),
        poly.edges.len() + 2,
        "Euler relation"
    );
    poly
}

/// Orders the (at least three, coplanar) points with the given indices as a
/// convex polygon, dropping interior and edge-interior points. The ring is
/// counter-clockwise as seen from the tip of the plane normal.
fn polygon_in_plane(proj: &[P3], on_plane: &[usize], normal: P3) -> Vec<usize> {
    // Drop the axis where the normal is largest; the projection is injective
    // on the plane.
    let axis = (0..3).max_by_key(|&i| normal[i].abs()).unwrap();
    let (u, v) = match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let mut pts: Vec<(i64, i64, usize)> = on_plane
        .iter()
        .map(|&i| (proj[i][u], proj[i][v], i))
        .collect();
    pts.sort_unstable();
    pts.dedup_by_key(|p| (p.0, p.1));

    let turn = |o: &(i64, i64, usize), a: &(i64, i64, usize), b: &(i64, i64, usize)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(i64, i64, usize)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<(i64, i64, usize)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let mut ring: Vec<usize> = lower.into_iter().map(|(_, _, i)| i).collect();

    if ring.len() >= 3 {
        let face_normal = cross(
            sub(proj[ring[1]], proj[ring[0]]),
            sub(proj[ring[2]], proj[ring[0]]),
        );
        if dot(face_normal, normal) < 0 {
            ring.reverse();
        }
    }
    ring
}

/// Lifts a projected outward normal back to the canonical four-coordinate
/// form: adding multiples of (1,1,1,1) is free on the hyperplane, so the
/// representative with minimum coordinate 0 is chosen and made primitive.
/// The gcd always divides the offset because the facet carries a lattice
/// point.
pub(super) fn lift(normal: P3, offset: i64, level: i64) -> ([i64; 4], i64) {
    let mut g = [normal[0], normal[1], normal[2], 0];
    let min = *g.iter().min().unwrap();
    for x in &mut g {
        *x -= min;
    }
    let mut c = offset - min * level;
    let div = g.iter().fold(0, |acc, &x| gcd(acc, x));
    if div > 1 {
        debug_assert_eq!(c % div, 0);
        for x in &mut g {
            *x /= div;
        }
        c /= div;
    }
    (g, c)
}
