//! The engine's working ring: one variable per distinct configuration
//! column.
//!
//! Duplicate columns are eliminated up front: each non-representative
//! labeling contributes the linear binomial `x_dup - x_rep`, and the hard
//! computation runs over distinct columns only. Results are re-inflated to
//! labeling-indexed variables at the end; for degree >= 2 the per-degree
//! minimal generator counts are unchanged by this substitution.

use alloc::vec::Vec;

use crate::config::{Configuration, Labeling};
use crate::error::{Error, Result};

use super::expo::Expo;
use super::{Binomial, Budget};

pub(crate) struct Ring {
    /// Distinct columns, ordered by their representative labeling.
    pub cols: Vec<[i64; 4]>,
    /// Representative labeling per variable (first attaining labeling in
    /// binary order).
    pub reps: Vec<Labeling>,
    /// Non-representative labelings with the variable of their column.
    pub dups: Vec<(Labeling, usize)>,
}

impl Ring {
    pub(crate) fn build(c: &Configuration, budget: &Budget) -> Result<Ring> {
        if c.column_count() > budget.max_variables {
            return Err(Error::VariableCap {
                variables: c.column_count(),
                cap: budget.max_variables,
            });
        }
        let mut by_rep: Vec<(Labeling, [i64; 4])> = c
            .distinct()
            .map(|(v, e)| (e.representative.clone(), v.as_i64()))
            .collect();
        by_rep.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let cols: Vec<[i64; 4]> = by_rep.iter().map(|(_, v)| *v).collect();
        let reps: Vec<Labeling> = by_rep.into_iter().map(|(l, _)| l).collect();
        let var_of = |v: [i64; 4]| cols.iter().position(|&c| c == v).expect("distinct column");
        let mut dups = Vec::new();
        for (idx, v) in c.columns().iter().enumerate() {
            let l = Labeling::from_index(c.n(), idx as u64);
            let var = var_of(v.as_i64());
            if reps[var] != l {
                dups.push((l, var));
            }
        }
        Ok(Ring { cols, reps, dups })
    }

    pub(crate) fn variables(&self) -> usize {
        self.cols.len()
    }

    /// Expands an internal exponent pair into a labeling-indexed binomial.
    pub(crate) fn inflate(&self, plus: &Expo, minus: &Expo) -> Binomial {
        let sparse = |u: &Expo| {
            u.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| (self.reps[j].clone(), e))
                .collect::<Vec<_>>()
        };
        Binomial {
            plus: sparse(plus),
            minus: sparse(minus),
        }
    }

    /// The linear binomials of the duplicate columns, `x_dup - x_rep`.
    pub(crate) fn linear_binomials(&self) -> Vec<Binomial> {
        self.dups
            .iter()
            .map(|(dup, var)| Binomial {
                plus: alloc::vec![(dup.clone(), 1)],
                minus: alloc::vec![(self.reps[*var].clone(), 1)],
            })
            .collect()
    }

    /// Image of an exponent vector under the configuration, as a 4-vector.
    pub(crate) fn image(&self, u: &Expo) -> [i64; 4] {
        let mut out = [0i64; 4];
        for (col, &e) in self.cols.iter().zip(u) {
            for r in 0..4 {
                out[r] += col[r] * e as i64;
            }
        }
        out
    }
}
