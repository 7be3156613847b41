//! Degree of the toric ideal from the Hilbert series of its initial ideal.
//!
//! The quotient by the initial monomial ideal has Hilbert series
//! `Q(z) / (1 - z)^M`. Writing it as `P(z) / (1 - z)^d` with `P(1) != 0`
//! gives the Krull dimension d (always 4 here) and the degree `P(1)`. The
//! numerator is computed by the standard pivot recursion
//! `Q(I) = Q(I + (x)) + z * Q(I : x)`.

use alloc::vec;
use alloc::vec::Vec;

use super::expo::{degree, divides, Expo};

/// Polynomial in z with integer coefficients, index = power.
type Poly = Vec<i64>;

fn poly_add(a: &mut Poly, b: &Poly, shift: usize, scale: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += scale * c;
    }
}

/// Multiplies by `(1 - z^d)`.
fn poly_mul_one_minus(a: &Poly, d: usize) -> Poly {
    let mut out = vec![0i64; a.len() + d];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    out
}

fn minimalize(mut gens: Vec<Expo>) -> Vec<Expo> {
    gens.sort_unstable_by_key(|g| (degree(g), g.clone()));
    gens.dedup();
    let mut out: Vec<Expo> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

/// Hilbert numerator of the monomial ideal generated by `gens`.
pub(crate) fn hilbert_numerator(gens: Vec<Expo>) -> Poly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.len() == 1 {
        return poly_mul_one_minus(&vec![1], degree(&gens[0]) as usize);
    }
    // Pivot on the variable hitting the most generators. When no variable
    // hits two generators they are pairwise coprime, hence a regular
    // sequence, and the numerator is the product of (1 - z^deg).
    let vars = gens[0].len();
    let (pivot, hits) = (0..vars)
        .map(|j| (j, gens.iter().filter(|g| g[j] > 0).count()))
        .max_by_key(|&(_, c)| c)
        .expect("nonempty generators");
    if hits <= 1 {
        let mut q = vec![1i64];
        for g in &gens {
            q = poly_mul_one_minus(&q, degree(g) as usize);
        }
        return q;
    }
    // I + (x_pivot): generators using the pivot variable are swallowed.
    let mut plus: Vec<Expo> = gens.iter().filter(|g| g[pivot] == 0).cloned().collect();
    let mut unit = vec![0u32; vars];
    unit[pivot] = 1;
    plus.push(unit);
    // I : x_pivot divides the pivot exponent out once.
    let colon: Vec<Expo> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            if h[pivot] > 0 {
                h[pivot] -= 1;
            }
            h
        })
        .collect();
    let mut q = hilbert_numerator(plus);
    let q_colon = hilbert_numerator(colon);
    poly_add(&mut q, &q_colon, 1, 1);
    q
}

/// Divides out `(1 - z)` factors and evaluates at 1: returns
/// `(strips, value)` with `value != 0`.
pub(crate) fn strip_and_evaluate(mut q: Poly) -> (usize, i64) {
    let mut strips = 0usize;
    loop {
        let at_one: i64 = q.iter().sum();
        if at_one != 0 {
            return (strips, at_one);
        }
        // Synthetic division by (1 - z): with q = (1 - z) r, the remainders
        // accumulate as r_i = q_i + r_{i-1}.
        let mut r = vec![0i64; q.len().saturating_sub(1)];
        let mut acc = 0i64;
        for i in 0..r.len() {
            acc += q[i];
            r[i] = acc;
        }
        q = r;
        strips += 1;
        if q.is_empty() {
            return (strips, 0);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numerator_of_simple_ideals() {
        // Empty ideal over 2 variables: series 1/(1-z)^2.
        assert_eq!(hilbert_numerator(Vec::new()), vec![1]);
        // (x y) in 2 variables: numerator 1 - z^2.
        assert_eq!(hilbert_numerator(vec![vec![1, 1]]), vec![1, 0, -1]);
        // (x, y): quotient is the ground field, numerator (1 - z)^2.
        let q = hilbert_numerator(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(q, vec![1, -2, 1]);
        let (strips, value) = strip_and_evaluate(q);
        assert_eq!((strips, value), (2, 1));
        // (x^2, x y): numerator 1 - 2 z^2 + z^3.
        let q = hilbert_numerator(vec![vec![2, 0], vec![1, 1]]);
        let mut expanded = vec![0i64; 4];
        for (i, c) in q.iter().enumerate() {
            expanded[i] += c;
        }
        assert_eq!(expanded, vec![1, 0, -2, 1]);
        // Quotient k[x,y]/(x^2, xy) has Hilbert function 1, 2, 1, 1, 1, ...:
        // dimension 1, degree 1.
        assert_eq!(strip_and_evaluate(expanded), (1, 1));
    }
}
