//! Facet and extremal-ray computations for small rational polyhedral cones.
//!
//! Generators are integer vectors; a cone need not be full-dimensional, in
//! which case everything is computed in coordinates on its linear span.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::lattice::{int_dot, normal_vector, pivot_columns, primitive_coords, rank};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ConeFacet {
    /// Inward primitive normal, in span coordinates.
    pub normal: Vec<BigInt>,
    /// Indices of the generators lying on the facet.
    pub members: Vec<usize>,
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Projects generators onto pivot coordinates of their span.
pub(crate) fn span_coordinates(gens: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let pivots = pivot_columns(gens);
    let projected = gens
        .iter()
        .map(|g| pivots.iter().map(|&c| g[c].clone()).collect())
        .collect();
    (projected, pivots)
}

/// Facets of the cone generated by `gens`, which must span `Z^d`.
pub(crate) fn facets_full_dim(gens: &[Vec<BigInt>], d: usize) -> Vec<ConeFacet> {
    let mut found: BTreeMap<Vec<BigInt>, Vec<usize>> = BTreeMap::new();
    if d == 0 {
        return Vec::new();
    }
    for subset in combinations(gens.len(), d - 1) {
        let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| gens[i].clone()).collect();
        if d > 1 && rank(&rows) != d - 1 {
            continue;
        }
        let mut n = primitive_coords(&normal_vector(&rows, d));
        if found.contains_key(&n) {
            continue;
        }
        let values: Vec<BigInt> = gens.iter().map(|g| int_dot(&n, g)).collect();
        let pos = values.iter().any(|v| v.is_positive());
        let neg = values.iter().any(|v| v.is_negative());
        if pos && neg {
            continue;
        }
        if neg {
            n = n.iter().map(|x| -x).collect();
            if found.contains_key(&n) {
                continue;
            }
        }
        let members = values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_zero())
            .map(|(i, _)| i)
            .collect();
        found.insert(n, members);
    }
    found
        .into_iter()
        .map(|(normal, members)| ConeFacet { normal, members })
        .collect()
}

/// Facets of the cone computed inside its own linear span.
pub(crate) fn facets_in_span(gens: &[Vec<BigInt>]) -> Vec<ConeFacet> {
    let (proj, pivots) = span_coordinates(gens);
    facets_full_dim(&proj, pivots.len())
}

/// Strong convexity: the cone contains no line.
pub(crate) fn is_pointed(gens: &[Vec<BigInt>]) -> bool {
    if gens.is_empty() {
        return true;
    }
    let (proj, pivots) = span_coordinates(gens);
    let d = pivots.len();
    if d == 0 {
        return false;
    }
    let facets = facets_full_dim(&proj, d);
    if facets.is_empty() {
        return false;
    }
    let mut sum = vec![BigInt::zero(); d];
    for f in &facets {
        for (s, x) in sum.iter_mut().zip(&f.normal) {
            *s += x;
        }
    }
    proj.iter().all(|g| int_dot(&sum, g).is_positive())
}

/// Generators spanning extremal rays of the cone (indices into `gens`).
/// Parallel duplicates keep only the first index.
pub(crate) fn extremal_generators(gens: &[Vec<BigInt>]) -> Vec<usize> {
    let (proj, pivots) = span_coordinates(gens);
    let d = pivots.len();
    let facets = facets_full_dim(&proj, d);
    let mut seen: Vec<Vec<BigInt>> = Vec::new();
    let mut out = Vec::new();
    for (i, g) in proj.iter().enumerate() {
        let prim = primitive_coords(g);
        if seen.contains(&prim) {
            continue;
        }
        let tight: Vec<Vec<BigInt>> = facets
            .iter()
            .filter(|f| f.members.contains(&i))
            .map(|f| f.normal.clone())
            .collect();
        let r = if tight.is_empty() { 0 } else { rank(&tight) };
        if r + 1 == d {
            seen.push(prim);
            out.push(i);
        }
    }
    out
}

/// Membership of an integer point in a full-dimensional cone given by facets.
pub(crate) fn contains_point(facets: &[ConeFacet], p: &[BigInt]) -> bool {
    facets.iter().all(|f| !int_dot(&f.normal, p).is_negative())
}
