//! Saturated integer kernel of a configuration matrix.
//!
//! Unimodular column reduction of the 4 x N matrix: tracking the column
//! operations in an N x N matrix U, the columns of U over the zero columns
//! of the reduced matrix form a basis of the full integer kernel lattice,
//! so the quotient of the ambient lattice by their span is torsion-free by
//! construction.

use alloc::vec;
use alloc::vec::Vec;

use crate::config::Configuration;
use crate::error::{Error, Result};

use super::Budget;

/// A basis of the integer kernel lattice of the configuration, vectors of
/// length 2^n over the labeling-indexed variables.
#[derive(Clone, Debug)]
pub struct KernelLattice {
    pub basis: Vec<Vec<i64>>,
}

impl KernelLattice {
    /// Rank of the kernel, `2^n - rank(matrix)`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// Kernel of the full configuration matrix (all 2^n columns).
pub fn lattice_kernel(c: &Configuration, budget: &Budget) -> Result<KernelLattice> {
    let columns: Vec<[i64; 4]> = c.columns().iter().map(|v| v.as_i64()).collect();
    if columns.len() > budget.max_variables {
        return Err(Error::VariableCap {
            variables: columns.len(),
            cap: budget.max_variables,
        });
    }
    Ok(KernelLattice {
        basis: kernel_basis(&columns),
    })
}

/// Kernel basis of an arbitrary list of 4-dimensional integer columns,
/// size-reduced so the lattice-basis binomials start small.
pub(crate) fn kernel_basis(columns: &[[i64; 4]]) -> Vec<Vec<i64>> {
    let mut basis = raw_kernel_basis(columns);
    reduce_basis(&mut basis);
    basis
}

/// Pairwise size-reduction sweeps (unimodular row operations): subtract the
/// rounded projection of every vector onto every other until stable. Not a
/// full LLL, but it brings the echelon-form kernel vectors down to the short
/// relations the saturation step needs to stay tame.
fn reduce_basis(basis: &mut [Vec<i64>]) {
    let norm = |v: &[i64]| -> i64 { v.iter().map(|&x| x * x).sum() };
    let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(&x, &y)| x * y).sum() };
    for _ in 0..100 {
        basis.sort_unstable_by_key(|v| norm(v));
        let mut improved = false;
        for j in 0..basis.len() {
            for i in 0..basis.len() {
                if i == j {
                    continue;
                }
                let denominator = norm(&basis[j]);
                if denominator == 0 {
                    continue;
                }
                let numerator = dot(&basis[i], &basis[j]);
                let q = (2 * numerator + denominator.signum() * denominator)
                    .div_euclid(2 * denominator);
                if q != 0 {
                    let before = norm(&basis[i]);
                    let candidate: Vec<i64> = basis[i]
                        .iter()
                        .zip(&basis[j])
                        .map(|(&x, &y)| x - q * y)
                        .collect();
                    if norm(&candidate) < before {
                        basis[i] = candidate;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }
}

fn raw_kernel_basis(columns: &[[i64; 4]]) -> Vec<Vec<i64>> {
    let n = columns.len();
    let mut a: Vec<[i64; 4]> = columns.to_vec();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut row = vec![0i64; n];
            row[i] = 1;
            row
        })
        .collect();
    let mut cursor = 0usize;
    for row in 0..4 {
        if cursor >= n {
            break;
        }
        // Clear this row across columns cursor.. by gcd elimination.
        loop {
            let Some(pivot) = (cursor..n)
                .filter(|&j| a[j][row] != 0)
                .min_by_key(|&j| a[j][row].unsigned_abs())
            else {
                break;
            };
            a.swap(cursor, pivot);
            u.swap(cursor, pivot);
            let mut finished = true;
            for j in cursor + 1..n {
                let q = a[j][row] / a[cursor][row];
                if q != 0 {
                    for r in 0..4 {
                        a[j][r] -= q * a[cursor][r];
                    }
                    for k in 0..n {
                        u[j][k] -= q * u[cursor][k];
                    }
                }
                if a[j][row] != 0 {
                    finished = false;
                }
            }
            if finished {
                cursor += 1;
                break;
            }
        }
    }
    u.split_off(cursor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::Tree;

    fn apply(columns: &[[i64; 4]], v: &[i64]) -> [i64; 4] {
        let mut out = [0i64; 4];
        for (col, &x) in columns.iter().zip(v) {
            for r in 0..4 {
                out[r] += col[r] * x;
            }
        }
        out
    }

    #[test]
    fn kernel_rank_of_small_trees_is_four() {
        // 8 columns, matrix rank 4, for both 3-node trees.
        for text in ["3; 1 2", "3; 1 1"] {
            let c = Configuration::build(&Tree::parse(text).unwrap()).unwrap();
            let k = lattice_kernel(&c, &Budget::default()).unwrap();
            assert_eq!(k.rank(), 4, "{text}");
            let columns: Vec<[i64; 4]> = c.columns().iter().map(|v| v.as_i64()).collect();
            for v in &k.basis {
                assert_eq!(apply(&columns, v), [0; 4]);
            }
        }
    }

    #[test]
    fn kernel_respects_variable_cap() {
        let c = Configuration::build(&Tree::path(8).unwrap()).unwrap();
        let tight = Budget {
            max_variables: 100,
            ..Budget::default()
        };
        assert!(lattice_kernel(&c, &tight).is_err());
    }
}
