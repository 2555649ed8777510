//! Constructors for the named arrangements and the multigraph of an
//! arrangement.
//!
//! The k-Shi arrangement is built pre-shifted: the classical levels
//! `-k < l <= k` over pairs `i > j` are translated so the origin sits at
//! `p_i = (i-1)/n`, an interior point of the fundamental region. Every
//! constant then comes out positive and the all-minus region contains the
//! origin. Any interior shift point yields a translate with identical
//! combinatorics; this one keeps the constants simple.

use crate::error::Error;
use crate::types::{ratio, Arrangement, Hyperplane, Multigraph};

/// The shifted k-Shi arrangement on `n >= 2` vertices with `k >= 1` levels:
/// `k * n * (n-1)` hyperplanes, the complete multigraph with multiplicity
/// `k` in each direction.
pub fn k_shi(n: usize, k: u64) -> Result<Arrangement, Error> {
    if n < 2 {
        return Err(Error::BadParams(format!(
            "k-Shi arrangements need n >= 2, got n = {n}"
        )));
    }
    if k < 1 {
        return Err(Error::BadParams("k-Shi arrangements need k >= 1".into()));
    }
    let mut hyperplanes = Vec::with_capacity(k as usize * n * (n - 1));
    for i in 2..=n {
        for j in 1..i {
            let gap = (i - j) as i64;
            // Levels l = 1..=k cross on the i side of the shifted origin:
            // x_i - x_j = l - (i-j)/n.
            for l in 1..=k as i64 {
                hyperplanes.push(
                    Hyperplane::canonical(i, j, ratio(l * n as i64 - gap, n as i64))
                        .expect("positive constant by construction"),
                );
            }
            // Levels l = 0, -1, ..., -(k-1) land on the j side:
            // x_j - x_i = (i-j)/n - l.
            for l in 0..k as i64 {
                hyperplanes.push(
                    Hyperplane::canonical(j, i, ratio(gap + l * n as i64, n as i64))
                        .expect("positive constant by construction"),
                );
            }
        }
    }
    Arrangement::new(n, hyperplanes)
}

/// The G-Shi arrangement: the sub-arrangement of the 1-Shi arrangement using
/// only the listed unordered edges. Edges must be distinct pairs of distinct
/// vertices in `1..=n`.
pub fn g_shi(n: usize, edges: &[(usize, usize)]) -> Result<Arrangement, Error> {
    if n < 2 {
        return Err(Error::BadParams(format!(
            "G-Shi arrangements need n >= 2, got n = {n}"
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut hyperplanes = Vec::with_capacity(2 * edges.len());
    for &(u, v) in edges {
        if u == v {
            return Err(Error::BadEdge(format!("edge {u}-{v} is a self-loop")));
        }
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::BadEdge(format!(
                "edge {u}-{v} has a vertex outside 1..={n}"
            )));
        }
        let (j, i) = if u < v { (u, v) } else { (v, u) };
        if !seen.insert((j, i)) {
            return Err(Error::BadEdge(format!("edge {j}-{i} listed twice")));
        }
        let gap = (i - j) as i64;
        // Level 1 and level 0 of the pair (i, j), shifted as in `k_shi`.
        hyperplanes.push(
            Hyperplane::canonical(i, j, ratio(n as i64 - gap, n as i64))
                .expect("positive constant by construction"),
        );
        hyperplanes.push(
            Hyperplane::canonical(j, i, ratio(gap, n as i64))
                .expect("positive constant by construction"),
        );
    }
    Arrangement::new(n, hyperplanes)
}

/// An arrangement realizing the multigraph `g` under the default constant
/// policy: the m parallel hyperplanes of an edge class `i -> j` get constants
/// `1/2, 3/2, ..., m - 1/2`. Any positive constants realize the same
/// multigraph; explicit constants can be supplied through the arrangement
/// file format instead.
pub fn from_multigraph(g: &Multigraph) -> Arrangement {
    let n = g.n();
    let mut hyperplanes = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for c in 1..=g.multiplicity(i, j) {
                hyperplanes.push(
                    Hyperplane::canonical(i, j, ratio(2 * c as i64 - 1, 2))
                        .expect("positive constant by construction"),
                );
            }
        }
    }
    Arrangement::new(n, hyperplanes).expect("constructed arrangement is valid")
}

/// The oriented multigraph of an arrangement: `mult[i][j]` counts the
/// hyperplanes stored as `(i, j, a)`.
pub fn multigraph_of(arr: &Arrangement) -> Multigraph {
    let mut g = Multigraph::new(arr.n()).expect("arrangement vertex count is positive");
    for h in arr.hyperplanes() {
        let m = g.multiplicity(h.p(), h.q());
        g.set_multiplicity(h.p(), h.q(), m + 1)
            .expect("hyperplane endpoints are valid and distinct");
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::region_count;
    use crate::types::ratio;

    fn triples(arr: &Arrangement) -> Vec<(usize, usize, String)> {
        arr.hyperplanes()
            .iter()
            .map(|h| (h.p(), h.q(), h.constant().to_string()))
            .collect()
    }

    #[test]
    fn k_shi_2_1_exact_hyperplanes() {
        let arr = k_shi(2, 1).unwrap();
        assert_eq!(
            triples(&arr),
            vec![(2, 1, "1/2".to_string()), (1, 2, "1/2".to_string())]
        );
        assert_eq!(region_count(&arr).unwrap(), 3);
    }

    #[test]
    fn k_shi_3_1_exact_hyperplanes() {
        let arr = k_shi(3, 1).unwrap();
        let expected: Vec<(usize, usize, String)> = vec![
            (2, 1, "2/3".into()),
            (1, 2, "1/3".into()),
            (3, 1, "1/3".into()),
            (1, 3, "2/3".into()),
            (3, 2, "2/3".into()),
            (2, 3, "1/3".into()),
        ];
        assert_eq!(triples(&arr), expected);
    }

    #[test]
    fn k_shi_3_2_shape() {
        let arr = k_shi(3, 2).unwrap();
        assert_eq!(arr.hyperplane_count(), 12);
        assert_eq!(multigraph_of(&arr), Multigraph::complete(3, 2).unwrap());
    }

    #[test]
    fn k_shi_constants_are_in_range() {
        for (n, k) in [(2usize, 3u64), (3, 2), (4, 1), (5, 2)] {
            let arr = k_shi(n, k).unwrap();
            assert_eq!(arr.hyperplane_count(), k as usize * n * (n - 1));
            let upper = ratio((k + 1) as i64, 1);
            for h in arr.hyperplanes() {
                assert!(h.constant() > &ratio(0, 1) && h.constant() < &upper);
            }
        }
    }

    #[test]
    fn k_shi_rejects_bad_params() {
        assert!(matches!(k_shi(1, 1), Err(Error::BadParams(_))));
        assert!(matches!(k_shi(3, 0), Err(Error::BadParams(_))));
    }

    #[test]
    fn g_shi_path_has_four_hyperplanes() {
        let arr = g_shi(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(arr.hyperplane_count(), 4);
        assert_eq!(region_count(&arr).unwrap(), 9);
    }

    #[test]
    fn g_shi_full_edge_set_is_one_shi() {
        let full = g_shi(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let shi = k_shi(3, 1).unwrap();
        let mut a = full.hyperplanes().to_vec();
        let mut b = shi.hyperplanes().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn g_shi_empty_edge_set() {
        let arr = g_shi(3, &[]).unwrap();
        assert_eq!(arr.hyperplane_count(), 0);
        assert_eq!(region_count(&arr).unwrap(), 1);
    }

    #[test]
    fn g_shi_rejects_bad_edges() {
        assert!(matches!(g_shi(3, &[(1, 1)]), Err(Error::BadEdge(_))));
        assert!(matches!(g_shi(3, &[(1, 4)]), Err(Error::BadEdge(_))));
        assert!(matches!(
            g_shi(3, &[(1, 2), (2, 1)]),
            Err(Error::BadEdge(_))
        ));
    }

    #[test]
    fn from_multigraph_cycle() {
        let mut g = Multigraph::new(3).unwrap();
        g.set_multiplicity(1, 2, 1).unwrap();
        g.set_multiplicity(2, 3, 1).unwrap();
        g.set_multiplicity(3, 1, 1).unwrap();
        let arr = from_multigraph(&g);
        assert_eq!(
            triples(&arr),
            vec![
                (1, 2, "1/2".to_string()),
                (2, 3, "1/2".to_string()),
                (3, 1, "1/2".to_string())
            ]
        );
        assert_eq!(region_count(&arr).unwrap(), 7);
    }

    #[test]
    fn from_multigraph_empty() {
        let g = Multigraph::new(4).unwrap();
        let arr = from_multigraph(&g);
        assert_eq!(arr.hyperplane_count(), 0);
    }

    #[test]
    fn from_multigraph_parallel_constants() {
        let mut g = Multigraph::new(2).unwrap();
        g.set_multiplicity(1, 2, 3).unwrap();
        let arr = from_multigraph(&g);
        let constants: Vec<String> = arr
            .hyperplanes()
            .iter()
            .map(|h| h.constant().to_string())
            .collect();
        assert_eq!(constants, vec!["1/2", "3/2", "5/2"]);
    }

    #[test]
    fn multigraph_round_trip() {
        let mut g = Multigraph::new(4).unwrap();
        g.set_multiplicity(1, 2, 2).unwrap();
        g.set_multiplicity(2, 1, 1).unwrap();
        g.set_multiplicity(3, 4, 3).unwrap();
        assert_eq!(multigraph_of(&from_multigraph(&g)), g);
    }

    #[test]
    fn multigraph_of_k_shi_is_complete() {
        assert_eq!(
            multigraph_of(&k_shi(3, 2).unwrap()),
            Multigraph::complete(3, 2).unwrap()
        );
        assert_eq!(
            multigraph_of(&k_shi(4, 1).unwrap()),
            Multigraph::complete(4, 1).unwrap()
        );
    }

    #[test]
    fn multigraph_of_empty_arrangement_is_zero() {
        let arr = Arrangement::new(3, Vec::new()).unwrap();
        assert!(multigraph_of(&arr).is_edgeless());
    }
}
