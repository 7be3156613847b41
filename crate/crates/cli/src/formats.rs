//! Text and JSON renderings of the core types.
//!
//! Outputs are deterministic byte-for-byte: everything is sorted upstream
//! and serialization adds nothing nondeterministic.

use phylotoric_core::config::Configuration;
use phylotoric_core::polytope::{CensusRow, LatticePolytope};
use phylotoric_core::toric::{Binomial, GeneratingSet, GroebnerBasis};
use phylotoric_core::viterbi::Decoded;
use serde::{Deserialize, Serialize};

/// Matrix file: `rows cols` header, then one whitespace-separated row per
/// matrix row.
pub fn matrix_text(c: &Configuration) -> String {
    let mut out = format!("4 {}\n", c.column_count());
    for r in 0..4 {
        let row: Vec<String> = c.row(r).map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
pub struct DedupPoint {
    pub vector: [u32; 4],
    pub multiplicity: u64,
    pub representative: String,
}

#[derive(Serialize, Deserialize)]
pub struct DedupJson {
    pub n: usize,
    pub columns: usize,
    pub distinct: usize,
    pub points: Vec<DedupPoint>,
}

pub fn dedup_json(c: &Configuration) -> DedupJson {
    DedupJson {
        n: c.n(),
        columns: c.column_count(),
        distinct: c.distinct_count(),
        points: c
            .distinct()
            .map(|(v, e)| DedupPoint {
                vector: v.0,
                multiplicity: e.multiplicity,
                representative: e.representative.to_string(),
            })
            .collect(),
    }
}

#[derive(Serialize, Deserialize)]
pub struct FacetJson {
    pub normal: [i64; 4],
    pub offset: i64,
    pub vertices: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub level: i64,
    pub vertices: Vec<[i64; 4]>,
    pub edges: Vec<(usize, usize)>,
    pub facets: Vec<FacetJson>,
    pub fvector: (usize, usize, usize),
}

pub fn polytope_json(p: &LatticePolytope) -> PolytopeJson {
    PolytopeJson {
        dim: p.dim(),
        level: p.level(),
        vertices: p.vertices().to_vec(),
        edges: p.edges().to_vec(),
        facets: p
            .facets()
            .iter()
            .map(|f| FacetJson {
                normal: f.normal,
                offset: f.offset,
                vertices: f.vertices.clone(),
            })
            .collect(),
        fvector: p.f_vector(),
    }
}

/// OFF export of the 3-dimensional projection (first three coordinates).
pub fn off_text(p: &LatticePolytope) -> String {
    let (v, e, f) = p.f_vector();
    let mut out = String::from("OFF\n");
    out.push_str(&format!("{v} {f} {e}\n"));
    for vertex in p.vertices() {
        out.push_str(&format!("{} {} {}\n", vertex[0], vertex[1], vertex[2]));
    }
    for facet in p.facets() {
        let ids: Vec<String> = facet.vertices.iter().map(|i| i.to_string()).collect();
        out.push_str(&format!("{} {}\n", facet.vertices.len(), ids.join(" ")));
    }
    out
}

/// Exponent-vector basis file: header `count variables`, then two lines per
/// binomial (plus monomial, minus monomial), each a dense exponent vector
/// over the 2^n labeling variables in binary order.
pub fn basis_exponent_text(set: &[Binomial], n: usize) -> String {
    let variables = 1usize << n;
    let mut out = format!("{} {}\n", set.len(), variables);
    let dense = |side: &[(phylotoric_core::config::Labeling, u32)]| {
        let mut row = vec![0u32; variables];
        for (l, e) in side {
            row[l.index() as usize] += e;
        }
        row.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    for b in set {
        out.push_str(&dense(&b.plus));
        out.push('\n');
        out.push_str(&dense(&b.minus));
        out.push('\n');
    }
    out
}

/// Human-readable basis: one binomial per line with variables named by
/// labeling bit strings.
pub fn basis_readable_text(set: &[Binomial]) -> String {
    let mut out = String::new();
    for b in set {
        out.push_str(&b.to_string());
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
pub struct GeneratingSetJson {
    pub count: usize,
    pub max_degree: u32,
    pub is_minimal: bool,
    pub linear_count: usize,
    /// degree -> count, ascending.
    pub degree_histogram: Vec<(u32, usize)>,
}

pub fn generating_set_json(set: &GeneratingSet) -> GeneratingSetJson {
    GeneratingSetJson {
        count: set.len(),
        max_degree: set.max_degree,
        is_minimal: set.is_minimal,
        linear_count: set.linear_count,
        degree_histogram: set.degree_histogram.iter().map(|(&d, &c)| (d, c)).collect(),
    }
}

#[derive(Serialize, Deserialize)]
pub struct GroebnerJson {
    pub order: String,
    pub reduced: bool,
    pub set: GeneratingSetJson,
}

pub fn groebner_json(gb: &GroebnerBasis) -> GroebnerJson {
    GroebnerJson {
        order: match &gb.order {
            phylotoric_core::toric::TermOrder::DegRevLex => "degrevlex".to_string(),
            phylotoric_core::toric::TermOrder::WeightDegRevLex { weights } => {
                let w: Vec<String> = weights.iter().map(|x| x.to_string()).collect();
                format!("weight({})-degrevlex", w.join(","))
            }
        },
        reduced: gb.reduced,
        set: generating_set_json(&gb.set),
    }
}

#[derive(Serialize, Deserialize)]
pub struct ViterbiJson {
    /// Exact rational optimal value, `p/q`.
    pub value: String,
    pub optimal_vectors: Vec<[u32; 4]>,
    pub witness: String,
    /// Per optimal vector: whether it is a polytope vertex.
    pub is_vertex: Vec<bool>,
}

pub fn viterbi_json(d: &Decoded, p: &LatticePolytope) -> ViterbiJson {
    ViterbiJson {
        value: d.value.to_string(),
        optimal_vectors: d.optimal.iter().map(|v| v.0).collect(),
        witness: d.witness.to_string(),
        is_vertex: d.optimal.iter().map(|v| p.is_vertex(&v.as_i64())).collect(),
    }
}

/// Census CSV in the paper's column order.
pub fn census_csv(rows: &[CensusRow], tree_column: &str) -> String {
    let mut out = format!(
        "Number of nodes,Number of {tree_column},Min vertices,Max vertices,Ave vertices\n"
    );
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.n,
            row.count,
            row.min_vertices,
            row.max_vertices,
            row.mean_string()
        ));
    }
    out
}
