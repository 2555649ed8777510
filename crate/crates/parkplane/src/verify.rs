//! End-to-end checks: every region label is a parking function of the
//! arrangement's multigraph, the label set covers all parking functions
//! (verified both by set comparison and constructively through the walk),
//! and the k-Shi counting identities.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::factory::{k_shi, multigraph_of};
use crate::parking::{
    enumerate_g_parking, is_g_parking_subsets, is_k_parking, value_box,
};
use crate::regions::{enumerate_regions_with_limit, separating_set, DEFAULT_MAX_HYPERPLANES};
use crate::types::{Arrangement, Multigraph, ParkVec};
use crate::walk::find_region;

/// Guard on vertex count: parking-function enumeration is exponential in it.
pub const MAX_VERIFY_VERTICES: usize = 12;

/// Default guards for the k-Shi bijectivity check.
pub const MAX_KSHI_N: usize = 4;
pub const MAX_KSHI_K: u64 = 3;

/// Outcome of a surjectivity check on one arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectivityReport {
    pub region_count: usize,
    /// How many regions carry each label; keys are the distinct labels.
    pub label_multiplicities: BTreeMap<ParkVec, usize>,
    /// The parking functions of the arrangement's multigraph, sorted.
    pub parking_functions: Vec<ParkVec>,
    /// Every region label passes the subset test.
    pub labels_are_gpf: bool,
    /// The label set contains every parking function.
    pub surjective_by_set: bool,
    /// Every parking function is reached constructively by the walk.
    pub surjective_constructive: bool,
}

impl SurjectivityReport {
    pub fn distinct_label_count(&self) -> usize {
        self.label_multiplicities.len()
    }

    /// The surjectivity verdict: both the set route and the constructive
    /// route must agree.
    pub fn surjective(&self) -> bool {
        self.surjective_by_set && self.surjective_constructive
    }

    pub fn passed(&self) -> bool {
        self.labels_are_gpf && self.surjective()
    }
}

/// Outcome of a k-Shi bijectivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectivityReport {
    pub n: usize,
    pub k: u64,
    pub region_count: usize,
    /// Parking functions of the complete multigraph, via subset enumeration.
    pub parking_count: usize,
    /// Independent count over the value box using the k-parking test.
    pub k_parking_count: usize,
    /// The closed-form count `(kn+1)^(n-1)`.
    pub formula_count: usize,
    pub labels_distinct: bool,
}

impl BijectivityReport {
    /// All four counts agree and no label repeats.
    pub fn bijective(&self) -> bool {
        self.labels_distinct
            && self.region_count == self.parking_count
            && self.parking_count == self.k_parking_count
            && self.k_parking_count == self.formula_count
    }
}

/// Checks that the labeling of `arr` is surjective onto the parking
/// functions of its multigraph. See [`verify_surjectivity_with_limit`].
pub fn verify_surjectivity(arr: &Arrangement) -> Result<SurjectivityReport, Error> {
    verify_surjectivity_with_limit(arr, DEFAULT_MAX_HYPERPLANES)
}

/// Surjectivity check with an explicit hyperplane-count cap.
///
/// Enumerates all regions and all parking functions, then verifies: every
/// label is a parking function; the label set includes every parking
/// function; and every parking function is reached by [`find_region`] with
/// an exactly matching label.
pub fn verify_surjectivity_with_limit(
    arr: &Arrangement,
    max_hyperplanes: usize,
) -> Result<SurjectivityReport, Error> {
    if arr.n() > MAX_VERIFY_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count for surjectivity verification",
            actual: arr.n(),
            limit: MAX_VERIFY_VERTICES,
        });
    }
    let regions = enumerate_regions_with_limit(arr, max_hyperplanes)?;
    let graph = multigraph_of(arr);

    let mut label_multiplicities: BTreeMap<ParkVec, usize> = BTreeMap::new();
    let mut labels_are_gpf = true;
    for region in &regions {
        *label_multiplicities.entry(region.label().clone()).or_insert(0) += 1;
        if !is_g_parking_subsets(&graph, region.label()) {
            labels_are_gpf = false;
        }
        debug_assert_eq!(
            region.label().sum() as usize,
            separating_set(arr, region.signs())?.len()
        );
    }

    let parking_functions = enumerate_g_parking(&graph);
    let surjective_by_set = parking_functions
        .iter()
        .all(|f| label_multiplicities.contains_key(f));
    let surjective_constructive = parking_functions.iter().all(|f| {
        find_region(arr, f)
            .map(|(region, _)| region.label() == f)
            .unwrap_or(false)
    });

    Ok(SurjectivityReport {
        region_count: regions.len(),
        label_multiplicities,
        parking_functions,
        labels_are_gpf,
        surjective_by_set,
        surjective_constructive,
    })
}

/// The closed-form k-Shi region count `(kn+1)^(n-1)`.
pub fn kshi_formula_count(n: usize, k: u64) -> usize {
    (k as usize * n + 1).pow(n as u32 - 1)
}

/// Checks the bijectivity of the k-Shi labeling at desk scale
/// (`n <= 4`, `k <= 3` by default; see
/// [`verify_bijectivity_kshi_with_limit`]).
pub fn verify_bijectivity_kshi(n: usize, k: u64) -> Result<BijectivityReport, Error> {
    if n > MAX_KSHI_N {
        return Err(Error::TooLarge {
            what: "n for k-Shi bijectivity verification",
            actual: n,
            limit: MAX_KSHI_N,
        });
    }
    if k > MAX_KSHI_K {
        return Err(Error::TooLarge {
            what: "k for k-Shi bijectivity verification",
            actual: k as usize,
            limit: MAX_KSHI_K as usize,
        });
    }
    verify_bijectivity_kshi_with_limit(n, k, DEFAULT_MAX_HYPERPLANES)
}

/// Bijectivity check guarded only by the hyperplane-count cap.
///
/// Compares four counts: enumerated regions, parking functions of the
/// complete multigraph, the independent k-parking box enumeration, and the
/// closed-form value; also requires all region labels to be pairwise
/// distinct.
pub fn verify_bijectivity_kshi_with_limit(
    n: usize,
    k: u64,
    max_hyperplanes: usize,
) -> Result<BijectivityReport, Error> {
    let arr = k_shi(n, k)?;
    let regions = enumerate_regions_with_limit(&arr, max_hyperplanes)?;

    let mut labels: Vec<&ParkVec> = regions.iter().map(|r| r.label()).collect();
    labels.sort();
    let labels_distinct = labels.windows(2).all(|w| w[0] != w[1]);

    let complete = Multigraph::complete(n, k).expect("n >= 2 validated by k_shi");
    let parking_count = enumerate_g_parking(&complete).len();

    let bounds = vec![k * n as u64; n];
    let k_parking_count = value_box(&bounds).filter(|f| is_k_parking(n, k, f)).count();

    Ok(BijectivityReport {
        n,
        k,
        region_count: regions.len(),
        parking_count,
        k_parking_count,
        formula_count: kshi_formula_count(n, k),
        labels_distinct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factory::g_shi;
    use crate::types::ratio;
    use crate::types::Hyperplane;

    #[test]
    fn g_shi_path_is_surjective_with_one_repeated_label() {
        let arr = g_shi(3, &[(1, 2), (2, 3)]).unwrap();
        let report = verify_surjectivity(&arr).unwrap();
        assert_eq!(report.region_count, 9);
        assert_eq!(report.distinct_label_count(), 8);
        assert_eq!(report.parking_functions.len(), 8);
        assert!(report.passed());
        let repeated = ParkVec::from_values(vec![0, 1, 0]);
        assert_eq!(report.label_multiplicities[&repeated], 2);
    }

    #[test]
    fn small_shi_reports_are_bijective() {
        for (n, k, expected) in [(2usize, 1u64, 3usize), (2, 2, 5), (3, 1, 16)] {
            let report = verify_bijectivity_kshi(n, k).unwrap();
            assert_eq!(report.region_count, expected);
            assert_eq!(report.parking_count, expected);
            assert_eq!(report.k_parking_count, expected);
            assert_eq!(report.formula_count, expected);
            assert!(report.bijective());
        }
    }

    #[test]
    fn kshi_guards_reject_large_parameters() {
        assert!(matches!(
            verify_bijectivity_kshi(5, 1),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            verify_bijectivity_kshi(3, 4),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn surjectivity_guard_rejects_large_arrangements() {
        let hyperplanes: Vec<Hyperplane> = (1..=5)
            .map(|i| Hyperplane::canonical(1, 2, ratio(i, 1)).unwrap())
            .collect();
        let arr = Arrangement::new(2, hyperplanes).unwrap();
        assert!(matches!(
            verify_surjectivity_with_limit(&arr, 4),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn formula_count_values() {
        assert_eq!(kshi_formula_count(3, 1), 16);
        assert_eq!(kshi_formula_count(3, 2), 49);
        assert_eq!(kshi_formula_count(4, 1), 125);
        assert_eq!(kshi_formula_count(2, 3), 7);
    }
}
