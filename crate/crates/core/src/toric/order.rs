//! Monomial orders.
//!
//! Variables follow the binary labeling order (the all-zeros labeling is the
//! largest variable). The default order is degree reverse lexicographic; a
//! nonnegative weight vector can be layered on top with degrevlex breaking
//! ties. Saturation internally uses degrevlex with a chosen variable moved
//! to the cheapest position.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::expo::{degree, Expo};

/// A term order selection, as exposed on generating-set computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    /// Degree reverse lexicographic in binary labeling order.
    DegRevLex,
    /// Compare by `weights . u` first, then degrevlex. Weights must be
    /// nonnegative for this to be a monomial order.
    WeightDegRevLex { weights: Vec<i64> },
}

impl TermOrder {
    pub(crate) fn key(&self) -> OrderKey<'_> {
        match self {
            TermOrder::DegRevLex => OrderKey {
                weights: None,
                cheapest: None,
            },
            TermOrder::WeightDegRevLex { weights } => OrderKey {
                weights: Some(weights),
                cheapest: None,
            },
        }
    }
}

/// Internal comparison key; `cheapest` moves one variable to the front of
/// the reverse-lexicographic scan.
#[derive(Clone, Copy)]
pub(crate) struct OrderKey<'a> {
    pub weights: Option<&'a [i64]>,
    pub cheapest: Option<usize>,
}

impl OrderKey<'_> {
    pub(crate) fn degrevlex_cheapest(var: usize) -> OrderKey<'static> {
        OrderKey {
            weights: None,
            cheapest: Some(var),
        }
    }

    pub(crate) fn cmp(&self, u: &Expo, v: &Expo) -> Ordering {
        debug_assert_eq!(u.len(), v.len());
        if let Some(w) = self.weights {
            let wu: i64 = u.iter().zip(w).map(|(&e, &w)| e as i64 * w).sum();
            let wv: i64 = v.iter().zip(w).map(|(&e, &w)| e as i64 * w).sum();
            match wu.cmp(&wv) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        match degree(u).cmp(&degree(v)) {
            Ordering::Equal => {}
            other => return other,
        }
        // Reverse lexicographic: scanning from the cheapest variable, the
        // first difference decides, with more of a cheap variable meaning a
        // smaller monomial.
        let scan_at = |i: usize| match u[i].cmp(&v[i]) {
            Ordering::Less => Some(Ordering::Greater),
            Ordering::Greater => Some(Ordering::Less),
            Ordering::Equal => None,
        };
        if let Some(c) = self.cheapest {
            if let Some(ord) = scan_at(c) {
                return ord;
            }
            for i in (0..u.len()).rev() {
                if i == c {
                    continue;
                }
                if let Some(ord) = scan_at(i) {
                    return ord;
                }
            }
        } else {
            for i in (0..u.len()).rev() {
                if let Some(ord) = scan_at(i) {
                    return ord;
                }
            }
        }
        Ordering::Equal
    }
}
