//! G-parking functions of oriented multigraphs, tested by two independent
//! algorithms, plus the k-parking specialization in both of its classical
//! formulations.
//!
//! `f` is a G-parking function when every non-empty vertex subset `I` has a
//! witness `i` whose out-multiplicity into the complement of `I` is at least
//! `f(i)`. The library follows the `>=` convention throughout; it is the one
//! under which the complete-multigraph case specializes exactly to
//! `f(i) <= k(n - #I)`.

use std::collections::BTreeSet;

use crate::types::{Multigraph, ParkVec};

/// Total multiplicity of edges from `i` into the vertex set `s`.
pub fn out_multiplicity(g: &Multigraph, i: usize, s: &BTreeSet<usize>) -> u64 {
    s.iter().map(|&j| g.multiplicity(i, j)).sum()
}

/// Per-vertex out-multiplicities into every vertex subset, as bitmask rows:
/// `table[i - 1][mask]` sums multiplicities from `i` into the vertices of
/// `mask` (bit `v - 1` set means vertex `v` is in the set).
fn out_table(g: &Multigraph) -> Vec<Vec<u64>> {
    let n = g.n();
    (1..=n)
        .map(|i| {
            let mut row = vec![0u64; 1 << n];
            for mask in 1..1usize << n {
                let low = mask.trailing_zeros() as usize;
                row[mask] = row[mask & (mask - 1)] + g.multiplicity(i, low + 1);
            }
            row
        })
        .collect()
}

fn subset_has_witness(table: &[Vec<u64>], n: usize, f: &ParkVec, mask: usize) -> bool {
    let complement = !mask & ((1 << n) - 1);
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize + 1;
        if table[i - 1][complement] >= f.value(i) {
            return true;
        }
        bits &= bits - 1;
    }
    false
}

/// Subset-definition test: true iff every non-empty `I` has a witness
/// `i` in `I` with `out_multiplicity(g, i, complement(I)) >= f(i)`.
/// Exponential in the vertex count.
pub fn is_g_parking_subsets(g: &Multigraph, f: &ParkVec) -> bool {
    assert_eq!(f.len(), g.n(), "function length must match vertex count");
    let table = out_table(g);
    (1..1usize << g.n()).all(|mask| subset_has_witness(&table, g.n(), f, mask))
}

/// The lexicographically smallest violating subset, or `None` when `f` is a
/// G-parking function. Subsets compare as ascending vertex lists.
pub fn g_parking_violation(g: &Multigraph, f: &ParkVec) -> Option<Vec<usize>> {
    assert_eq!(f.len(), g.n(), "function length must match vertex count");
    let n = g.n();
    let table = out_table(g);
    let mut smallest: Option<Vec<usize>> = None;
    for mask in 1..1usize << n {
        if !subset_has_witness(&table, n, f, mask) {
            let subset: Vec<usize> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
            if smallest.as_ref().is_none_or(|best| subset < *best) {
                smallest = Some(subset);
            }
        }
    }
    smallest
}

/// Burning-style test: greedily remove any vertex whose out-multiplicity to
/// the already-removed set is at least its value; `f` is G-parking iff every
/// vertex burns. Removing a vertex never decreases anyone else's
/// out-multiplicity to the removed set, so removal order does not affect the
/// verdict; the smallest eligible vertex is taken for determinism.
pub fn is_g_parking_burning(g: &Multigraph, f: &ParkVec) -> bool {
    assert_eq!(f.len(), g.n(), "function length must match vertex count");
    let n = g.n();
    let mut unburnt: BTreeSet<usize> = (1..=n).collect();
    let mut burnt: BTreeSet<usize> = BTreeSet::new();
    loop {
        let next = unburnt
            .iter()
            .copied()
            .find(|&i| out_multiplicity(g, i, &burnt) >= f.value(i));
        match next {
            Some(i) => {
                unburnt.remove(&i);
                burnt.insert(i);
            }
            None => return unburnt.is_empty(),
        }
    }
}

/// Iterates every vector `0 <= f <= bounds` coordinatewise, in lexicographic
/// order.
pub fn value_box(bounds: &[u64]) -> impl Iterator<Item = ParkVec> + '_ {
    let mut values: Option<Vec<u64>> = Some(vec![0; bounds.len()]);
    std::iter::from_fn(move || {
        let current = values.take()?;
        let result = ParkVec::from_values(current.clone());
        let mut next = current;
        let mut pos = bounds.len();
        loop {
            if pos == 0 {
                // Odometer exhausted; `values` stays `None`.
                break;
            }
            pos -= 1;
            if next[pos] < bounds[pos] {
                next[pos] += 1;
                values = Some(next);
                break;
            }
            next[pos] = 0;
        }
        Some(result)
    })
}

/// The per-coordinate enumeration bounds implied by singleton subsets:
/// `f(i) <= out_degree(i)`.
pub fn coordinate_bounds(g: &Multigraph) -> Vec<u64> {
    (1..=g.n()).map(|i| g.out_degree(i)).collect()
}

/// All G-parking functions of `g`, sorted lexicographically.
///
/// The singleton subset `I = {i}` bounds every coordinate by the out-degree
/// of `i`, so the search box is finite.
pub fn enumerate_g_parking(g: &Multigraph) -> Vec<ParkVec> {
    let n = g.n();
    let bounds = coordinate_bounds(g);
    let table = out_table(g);
    value_box(&bounds)
        .filter(|f| (1..1usize << n).all(|mask| subset_has_witness(&table, n, f, mask)))
        .collect()
}

/// Classical k-parking test: every non-empty `I` has `i` with
/// `f(i) <= k(n - #I)`. Implemented literally over subsets; the sorted
/// formulation lives in [`is_k_parking_diagram`] as an independent route.
pub fn is_k_parking(n: usize, k: u64, f: &ParkVec) -> bool {
    assert!(k >= 1, "k must be at least 1");
    assert_eq!(f.len(), n, "function length must match n");
    (1..1usize << n).all(|mask| {
        let size = mask.count_ones() as u64;
        let allowance = k * (n as u64 - size);
        (1..=n).any(|i| mask >> (i - 1) & 1 == 1 && f.value(i) <= allowance)
    })
}

/// Young-diagram formulation: sort the values non-increasingly as row
/// lengths; `f` is k-parking iff the diagram fits under the diagonal of an
/// n-by-kn rectangle, i.e. the i-th smallest value is at most `k(i-1)`.
pub fn is_k_parking_diagram(n: usize, k: u64, f: &ParkVec) -> bool {
    assert!(k >= 1, "k must be at least 1");
    assert_eq!(f.len(), n, "function length must match n");
    let mut sorted = f.values().to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .all(|(idx, &v)| v <= k * idx as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Multigraph;

    /// The oriented cycle 1 -> 2 -> 3 -> 1.
    fn cycle_graph() -> Multigraph {
        let mut g = Multigraph::new(3).unwrap();
        g.set_multiplicity(1, 2, 1).unwrap();
        g.set_multiplicity(2, 3, 1).unwrap();
        g.set_multiplicity(3, 1, 1).unwrap();
        g
    }

    /// The path 1 - 2 - 3 with one edge each direction.
    fn path_graph() -> Multigraph {
        let mut g = Multigraph::new(3).unwrap();
        for (i, j) in [(1, 2), (2, 1), (2, 3), (3, 2)] {
            g.set_multiplicity(i, j, 1).unwrap();
        }
        g
    }

    fn pv(values: &[u64]) -> ParkVec {
        ParkVec::from_values(values.to_vec())
    }

    #[test]
    fn out_multiplicity_examples() {
        let set: BTreeSet<usize> = [2, 3].into_iter().collect();
        assert_eq!(out_multiplicity(&cycle_graph(), 1, &set), 1);
        let complete = Multigraph::complete(3, 2).unwrap();
        assert_eq!(out_multiplicity(&complete, 1, &set), 4);
        assert_eq!(out_multiplicity(&cycle_graph(), 1, &BTreeSet::new()), 0);
    }

    #[test]
    fn zero_function_is_always_parking() {
        assert!(is_g_parking_subsets(&cycle_graph(), &pv(&[0, 0, 0])));
        assert!(is_g_parking_burning(&cycle_graph(), &pv(&[0, 0, 0])));
    }

    #[test]
    fn all_ones_on_cycle_violates_full_set() {
        let g = cycle_graph();
        let f = pv(&[1, 1, 1]);
        assert!(!is_g_parking_subsets(&g, &f));
        assert_eq!(g_parking_violation(&g, &f), Some(vec![1, 2, 3]));
    }

    #[test]
    fn path_examples() {
        let g = path_graph();
        assert!(is_g_parking_subsets(&g, &pv(&[0, 2, 0])));
        assert!(is_g_parking_burning(&g, &pv(&[1, 1, 0])));
    }

    #[test]
    fn cycle_examples() {
        let g = cycle_graph();
        assert!(is_g_parking_burning(&g, &pv(&[0, 1, 1])));
        // f(1) = 2 exceeds the out-degree of vertex 1.
        assert!(!is_g_parking_burning(&g, &pv(&[2, 0, 0])));
        assert_eq!(g_parking_violation(&g, &pv(&[2, 0, 0])), Some(vec![1]));
    }

    #[test]
    fn enumerate_path_graph() {
        let labels: Vec<String> = enumerate_g_parking(&path_graph())
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(
            labels,
            vec!["000", "001", "010", "011", "020", "100", "101", "110"]
        );
    }

    #[test]
    fn enumerate_cycle_graph() {
        let labels: Vec<String> = enumerate_g_parking(&cycle_graph())
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(
            labels,
            vec!["000", "001", "010", "011", "100", "101", "110"]
        );
    }

    #[test]
    fn single_vertex_graph() {
        let g = Multigraph::new(1).unwrap();
        assert_eq!(enumerate_g_parking(&g), vec![pv(&[0])]);
    }

    #[test]
    fn every_parking_function_has_a_zero() {
        for g in [cycle_graph(), path_graph(), Multigraph::complete(3, 2).unwrap()] {
            for f in enumerate_g_parking(&g) {
                assert!(f.has_zero_entry(), "{f} lacks a zero entry");
            }
        }
    }

    #[test]
    fn k_parking_examples() {
        assert!(is_k_parking(3, 1, &pv(&[2, 1, 0])));
        assert!(!is_k_parking(3, 1, &pv(&[1, 1, 1])));
        assert!(is_k_parking(2, 2, &pv(&[0, 2])));
        let count = (0..=4u64)
            .flat_map(|a| (0..=4u64).map(move |b| pv(&[a, b])))
            .filter(|f| is_k_parking(2, 2, f))
            .count();
        assert_eq!(count, 5);
    }

    #[test]
    fn diagram_formulation_examples() {
        assert!(is_k_parking_diagram(3, 1, &pv(&[0, 1, 2])));
        assert!(is_k_parking_diagram(3, 1, &pv(&[2, 0, 1])));
        assert!(!is_k_parking_diagram(3, 1, &pv(&[0, 2, 2])));
        assert!(is_k_parking_diagram(4, 3, &pv(&[0, 0, 0, 0])));
    }

    #[test]
    fn formulations_agree_on_small_boxes() {
        for n in 1..=3usize {
            for k in 1..=2u64 {
                let bounds = vec![k * n as u64; n];
                for f in value_box(&bounds) {
                    assert_eq!(
                        is_k_parking(n, k, &f),
                        is_k_parking_diagram(n, k, &f),
                        "disagreement at n={n} k={k} f={f}"
                    );
                }
            }
        }
    }

    #[test]
    fn complete_graph_specializes_to_k_parking() {
        let n = 3usize;
        let k = 2u64;
        let g = Multigraph::complete(n, k).unwrap();
        for a in 0..=k * 2 {
            for b in 0..=k * 2 {
                for c in 0..=k * 2 {
                    let f = pv(&[a, b, c]);
                    assert_eq!(is_g_parking_subsets(&g, &f), is_k_parking(n, k, &f));
                }
            }
        }
    }

    #[test]
    fn burning_agrees_with_subsets_on_small_graphs() {
        let graphs = [cycle_graph(), path_graph(), Multigraph::complete(3, 1).unwrap()];
        for g in graphs {
            for f in value_box(&coordinate_bounds(&g)) {
                assert_eq!(
                    is_g_parking_subsets(&g, &f),
                    is_g_parking_burning(&g, &f),
                    "disagreement on {f}"
                );
            }
        }
    }

    #[test]
    fn parking_count_matches_formula_for_complete_graphs() {
        for (n, k, expected) in [(2usize, 1u64, 3usize), (2, 2, 5), (3, 1, 16)] {
            let g = Multigraph::complete(n, k).unwrap();
            assert_eq!(enumerate_g_parking(&g).len(), expected);
        }
    }
}
