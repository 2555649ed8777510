//! Region enumeration by sign-vector search, and region labels.
//!
//! Adjacent regions differ in exactly one sign, so a breadth-first search
//! over feasibility-checked single flips starting from the all-minus vector
//! visits every region without any face-lattice geometry.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::Error;
use crate::feasibility::{check_signs, check_signs_cached, ConstraintSystem, Verdict};
use crate::types::{Arrangement, Hyperplane, ParkVec, Point, SignVector};

/// Default cap on hyperplane count for enumeration; sign-vector counts
/// explode beyond desk scale. Callers may raise it explicitly.
pub const DEFAULT_MAX_HYPERPLANES: usize = 64;

/// A region of an arrangement: its sign vector, its label, and an exact
/// interior witness point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    signs: SignVector,
    label: ParkVec,
    witness: Point,
}

impl Region {
    pub fn signs(&self) -> &SignVector {
        &self.signs
    }

    pub fn label(&self) -> &ParkVec {
        &self.label
    }

    pub fn witness(&self) -> &Point {
        &self.witness
    }

    /// Number of hyperplanes separating this region from the fundamental
    /// region; equals the sum of the label.
    pub fn separation_count(&self) -> usize {
        self.signs.plus_count()
    }
}

/// The sign vector of the fundamental region: all minus, since every
/// constant is positive and the origin satisfies `x_p - x_q = 0 < a`.
pub fn fundamental_signs(arr: &Arrangement) -> SignVector {
    SignVector::all_minus(arr.hyperplane_count())
}

/// The hyperplanes separating the region `sv` from the fundamental region:
/// exactly the `Plus` positions, in arrangement order.
pub fn separating_set(arr: &Arrangement, sv: &SignVector) -> Result<Vec<Hyperplane>, Error> {
    check_length(arr, sv)?;
    Ok(sv
        .plus_positions()
        .map(|pos| arr.hyperplane(pos).clone())
        .collect())
}

/// The label of the sign vector `sv`: coordinate `i` counts separating
/// hyperplanes whose first index is `i`. Purely combinatorial; `sv` need not
/// be feasible.
pub fn label_of(arr: &Arrangement, sv: &SignVector) -> Result<ParkVec, Error> {
    check_length(arr, sv)?;
    let mut label = ParkVec::zero(arr.n());
    for pos in sv.plus_positions() {
        label.increment(arr.hyperplane(pos).p());
    }
    Ok(label)
}

/// The feasible single-flip neighbors of a region, in ascending flip
/// position. Errors with `InfeasibleSigns` when `sv` itself is not a region.
pub fn neighbors(arr: &Arrangement, sv: &SignVector) -> Result<Vec<(usize, SignVector)>, Error> {
    if !check_signs(arr, sv)?.is_feasible() {
        return Err(Error::InfeasibleSigns);
    }
    let mut result = Vec::new();
    for pos in 0..sv.len() {
        let flipped = sv.flipped(pos);
        if check_signs(arr, &flipped)?.is_feasible() {
            result.push((pos, flipped));
        }
    }
    Ok(result)
}

/// Enumerates every region of `arr`, sorted by separation count and then by
/// sign vector. See [`enumerate_regions_with_limit`] for the size guard.
pub fn enumerate_regions(arr: &Arrangement) -> Result<Vec<Region>, Error> {
    enumerate_regions_with_limit(arr, DEFAULT_MAX_HYPERPLANES)
}

/// Region enumeration with an explicit hyperplane-count cap.
///
/// Breadth-first search from the fundamental region over feasible single
/// flips; the dual graph of regions is connected through shared facets, so
/// this visits every region exactly once. Output is deterministic: sorted by
/// (number of separating hyperplanes, sign vector).
pub fn enumerate_regions_with_limit(
    arr: &Arrangement,
    max_hyperplanes: usize,
) -> Result<Vec<Region>, Error> {
    if arr.hyperplane_count() > max_hyperplanes {
        return Err(Error::TooLarge {
            what: "hyperplane count for region enumeration",
            actual: arr.hyperplane_count(),
            limit: max_hyperplanes,
        });
    }

    let system = ConstraintSystem::new(arr);
    let start = fundamental_signs(arr);
    let mut witnesses: BTreeMap<SignVector, Point> = BTreeMap::new();
    let mut infeasible: BTreeSet<SignVector> = BTreeSet::new();
    match check_signs_cached(arr, &system, &start)? {
        Verdict::Feasible(point) => {
            witnesses.insert(start.clone(), point);
        }
        Verdict::Infeasible(_) => unreachable!("all-minus is feasible: every constant is positive"),
    }

    let mut queue = VecDeque::from([start]);
    while let Some(sv) = queue.pop_front() {
        for pos in 0..sv.len() {
            let flipped = sv.flipped(pos);
            if witnesses.contains_key(&flipped) || infeasible.contains(&flipped) {
                continue;
            }
            match check_signs_cached(arr, &system, &flipped)? {
                Verdict::Feasible(point) => {
                    witnesses.insert(flipped.clone(), point);
                    queue.push_back(flipped);
                }
                Verdict::Infeasible(_) => {
                    infeasible.insert(flipped);
                }
            }
        }
    }

    let mut order: Vec<SignVector> = witnesses.keys().cloned().collect();
    order.sort_by_key(|sv| (sv.plus_count(), sv.clone()));

    order
        .into_iter()
        .map(|sv| {
            let witness = witnesses.remove(&sv).expect("every visited vector has a witness");
            let label = label_of(arr, &sv)?;
            debug_assert_eq!(label.sum() as usize, sv.plus_count());
            Ok(Region {
                signs: sv,
                label,
                witness,
            })
        })
        .collect()
}

/// The number of regions of `arr`.
pub fn region_count(arr: &Arrangement) -> Result<usize, Error> {
    Ok(enumerate_regions(arr)?.len())
}

/// Builds the [`Region`] value for a known-feasible sign vector.
pub fn region_for_signs(arr: &Arrangement, sv: &SignVector) -> Result<Region, Error> {
    match check_signs(arr, sv)? {
        Verdict::Feasible(witness) => Ok(Region {
            signs: sv.clone(),
            label: label_of(arr, sv)?,
            witness,
        }),
        Verdict::Infeasible(_) => Err(Error::InfeasibleSigns),
    }
}

fn check_length(arr: &Arrangement, sv: &SignVector) -> Result<(), Error> {
    if sv.len() != arr.hyperplane_count() {
        return Err(Error::LengthMismatch {
            expected: arr.hyperplane_count(),
            found: sv.len(),
        });
    }
    Ok(())
}
