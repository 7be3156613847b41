//! Facet-lattice comparison of polytopes as abstract incidence structures.
//!
//! Two polytopes have the same combinatorial type when some bijection of
//! vertices and facets preserves the vertex-facet incidences. That is graph
//! isomorphism of the bipartite incidence graph with sides distinguished.
//! The instances here are tiny (tens of nodes), so iterative color
//! refinement followed by exhaustive backtracking is plenty.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::LatticePolytope;

/// Bipartite incidence graph: nodes are vertices then facets, edges are
/// incidences.
struct Graph {
    adjacency: Vec<Vec<usize>>,
    color: Vec<u64>,
}

fn incidence_graph(p: &LatticePolytope) -> Graph {
    let nv = p.vertices().len();
    let nf = p.facets().len();
    let mut adjacency = vec![Vec::new(); nv + nf];
    for (fi, f) in p.facets().iter().enumerate() {
        for &v in &f.vertices {
            adjacency[v].push(nv + fi);
            adjacency[nv + fi].push(v);
        }
    }
    for a in &mut adjacency {
        a.sort_unstable();
    }
    // Initial colors separate the two sides.
    let color = (0..nv + nf).map(|i| u64::from(i >= nv)).collect();
    let mut g = Graph { adjacency, color };
    refine(&mut g);
    g
}

/// Refines node colors by sorted neighbor-color multisets until stable.
fn refine(g: &mut Graph) {
    loop {
        let signatures: Vec<(u64, Vec<u64>)> = g
            .adjacency
            .iter()
            .zip(&g.color)
            .map(|(nbrs, &own)| {
                let mut multi: Vec<u64> = nbrs.iter().map(|&w| g.color[w]).collect();
                multi.sort_unstable();
                (own, multi)
            })
            .collect();
        let mut ids: BTreeMap<&(u64, Vec<u64>), u64> = BTreeMap::new();
        let mut sorted: Vec<&(u64, Vec<u64>)> = signatures.iter().collect();
        sorted.sort_unstable();
        for sig in sorted {
            let next = ids.len() as u64;
            ids.entry(sig).or_insert(next);
        }
        let new_color: Vec<u64> = signatures.iter().map(|sig| ids[sig]).collect();
        if new_color == g.color {
            return;
        }
        g.color = new_color;
    }
}

/// True iff the two polytopes have isomorphic vertex-facet incidence
/// structures (with equal dimension and f-vector).
pub fn same_combinatorial_type(a: &LatticePolytope, b: &LatticePolytope) -> bool {
    if a.dim() != b.dim() || a.f_vector() != b.f_vector() {
        return false;
    }
    if a.dim() < 3 {
        // Face lattices below dimension 3 are determined by the f-vector.
        return true;
    }
    let ga = incidence_graph(a);
    let gb = incidence_graph(b);
    let mut ca = ga.color.clone();
    let mut cb = gb.color.clone();
    ca.sort_unstable();
    cb.sort_unstable();
    if ca != cb {
        return false;
    }
    let mut mapping = vec![usize::MAX; ga.color.len()];
    let mut used = vec![false; gb.color.len()];
    backtrack(&ga, &gb, 0, &mut mapping, &mut used)
}

fn backtrack(ga: &Graph, gb: &Graph, next: usize, mapping: &mut [usize], used: &mut [bool]) -> bool {
    if next == ga.color.len() {
        return true;
    }
    'candidates: for cand in 0..gb.color.len() {
        if used[cand] || ga.color[next] != gb.color[cand] {
            continue;
        }
        // Edges to already-mapped nodes must be preserved both ways.
        for &w in &ga.adjacency[next] {
            if w < next && !gb.adjacency[cand].contains(&mapping[w]) {
                continue 'candidates;
            }
        }
        // No extra edges from the candidate into the mapped region either.
        let mapped_degree = ga.adjacency[next].iter().filter(|&&w| w < next).count();
        let cand_mapped_degree = gb.adjacency[cand].iter().filter(|&&w| used[w]).count();
        if mapped_degree != cand_mapped_degree {
            continue;
        }
        mapping[next] = cand;
        used[cand] = true;
        if backtrack(ga, gb, next + 1, mapping, used) {
            return true;
        }
        mapping[next] = usize::MAX;
        used[cand] = false;
    }
    false
}
