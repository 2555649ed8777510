//! Constructive inversion of the labeling: given a G-parking function `f` of
//! the arrangement's multigraph, walk from the fundamental region to a region
//! labeled `f`.
//!
//! The walk keeps the vertex split `I = {i : f(i) > label(i)}` (deficient)
//! and `J` (satisfied, `label(j) = f(j)`). Each step crosses one hyperplane
//! `(p, q, a)` with `p` deficient, `q` satisfied, and current sign `Minus`;
//! the crossing adds that hyperplane to the separating set and increments
//! `label(p)` only, so the label total grows by one per step and the walk
//! ends after exactly `sum(f)` crossings. Candidates are ordered by the
//! parameter at which the ray
//! `x_i = r_i + t/#I (i in I), x_j = r_j - t/#J (j in J)` from an interior
//! point `r` meets each candidate wall; the first candidate whose single
//! flip is feasible is taken, which keeps every invariant of the ray
//! argument without any exact tie-breaking at wall intersections.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::factory::multigraph_of;
use crate::feasibility::{
    check_signs_cached, interior_witness, interior_witness_cached, ConstraintSystem,
};
use crate::parking::g_parking_violation;
use crate::regions::{label_of, region_for_signs, Region};
use crate::types::{ratio_int, Arrangement, Hyperplane, ParkVec, Rational, Sign, SignVector};

/// State of a labeling-inversion walk.
#[derive(Clone, Debug)]
pub struct WalkState {
    current: SignVector,
    label: ParkVec,
    deficient: BTreeSet<usize>,
    satisfied: BTreeSet<usize>,
    trace: Vec<Hyperplane>,
}

impl WalkState {
    /// The state at the fundamental region for target `f`.
    pub fn start(arr: &Arrangement, f: &ParkVec) -> Result<WalkState, Error> {
        if f.len() != arr.n() {
            return Err(Error::LengthMismatch {
                expected: arr.n(),
                found: f.len(),
            });
        }
        let deficient: BTreeSet<usize> = (1..=arr.n()).filter(|&i| f.value(i) > 0).collect();
        let satisfied: BTreeSet<usize> = (1..=arr.n()).filter(|&i| f.value(i) == 0).collect();
        Ok(WalkState {
            current: SignVector::all_minus(arr.hyperplane_count()),
            label: ParkVec::zero(arr.n()),
            deficient,
            satisfied,
            trace: Vec::new(),
        })
    }

    /// Sign vector of the region the walk currently sits in.
    pub fn current(&self) -> &SignVector {
        &self.current
    }

    /// Label of the current region.
    pub fn label(&self) -> &ParkVec {
        &self.label
    }

    /// Vertices whose label value is still below the target (the set `I`).
    pub fn deficient(&self) -> &BTreeSet<usize> {
        &self.deficient
    }

    /// Vertices whose label value already equals the target (the set `J`).
    pub fn satisfied(&self) -> &BTreeSet<usize> {
        &self.satisfied
    }

    /// Hyperplanes crossed so far, in crossing order.
    pub fn trace(&self) -> &[Hyperplane] {
        &self.trace
    }
}

/// Candidate crossings from the current region: hyperplane positions
/// `(p, q, a)` with `p` deficient, `q` satisfied, and sign `Minus`, ordered
/// by the ray-crossing parameter
/// `t = (a - (r_p - r_q)) / (1/#I + 1/#J)` ascending, ties broken by
/// `(p, q, a)`. Errors with `EmptyDeficientSet` when the walk is complete.
pub fn step_candidates(arr: &Arrangement, state: &WalkState) -> Result<Vec<usize>, Error> {
    if state.deficient.is_empty() {
        return Err(Error::EmptyDeficientSet);
    }
    step_candidates_with(arr, state, &interior_witness(arr, &state.current)?)
}

fn step_candidates_with(
    arr: &Arrangement,
    state: &WalkState,
    witness: &crate::types::Point,
) -> Result<Vec<usize>, Error> {
    if state.deficient.is_empty() {
        return Err(Error::EmptyDeficientSet);
    }
    if state.satisfied.is_empty() {
        // Every vertex deficient means the target has no zero entry, so the
        // full vertex set already violates the parking condition.
        return Err(Error::NotGParking {
            violating: (1..=arr.n()).collect(),
        });
    }
    let rate = ratio_int(1) / ratio_int(state.deficient.len() as i64)
        + ratio_int(1) / ratio_int(state.satisfied.len() as i64);

    let mut candidates: Vec<(Rational, &Hyperplane, usize)> = arr
        .hyperplanes()
        .iter()
        .enumerate()
        .filter(|&(pos, h)| {
            state.current.get(pos) == Sign::Minus
                && state.deficient.contains(&h.p())
                && state.satisfied.contains(&h.q())
        })
        .map(|(pos, h)| {
            let t = (h.constant() - witness.difference(h.p(), h.q())) / &rate;
            (t, h, pos)
        })
        .collect();
    candidates.sort_by(|(ta, ha, _), (tb, hb, _)| ta.cmp(tb).then_with(|| ha.cmp(hb)));
    Ok(candidates.into_iter().map(|(_, _, pos)| pos).collect())
}

/// Finds a region of `arr` labeled exactly `f`, returning it together with
/// the ordered trace of crossed hyperplanes.
///
/// `f` must be a G-parking function of the arrangement's multigraph
/// (otherwise `NotGParking` reports the smallest violating subset). The walk
/// is guaranteed to finish in exactly `sum(f)` crossings; running out of
/// feasible candidates earlier is impossible, and treated as an internal
/// bug: the function panics rather than return a wrong answer.
pub fn find_region(arr: &Arrangement, f: &ParkVec) -> Result<(Region, Vec<Hyperplane>), Error> {
    if f.len() != arr.n() {
        return Err(Error::LengthMismatch {
            expected: arr.n(),
            found: f.len(),
        });
    }
    let graph = multigraph_of(arr);
    if let Some(violating) = g_parking_violation(&graph, f) {
        return Err(Error::NotGParking { violating });
    }

    let system = ConstraintSystem::new(arr);
    let mut state = WalkState::start(arr, f)?;
    while !state.deficient.is_empty() {
        assert_invariants(arr, f, &state);

        let witness = interior_witness_cached(arr, &system, &state.current)?;
        let candidates = step_candidates_with(arr, &state, &witness)?;
        let step = candidates
            .into_iter()
            .map(|pos| (pos, state.current.flipped(pos)))
            .find(|(_, flipped)| {
                check_signs_cached(arr, &system, flipped)
                    .expect("lengths already validated")
                    .is_feasible()
            });
        // A feasible candidate always exists while some vertex is deficient:
        // the ray from an interior point hits a wall of the required form,
        // or else the deficient set would violate the parking condition.
        let (pos, flipped) = step.unwrap_or_else(|| {
            panic!(
                "walk stuck at {} with deficient set {:?}: no feasible crossing; \
                 this is a bug",
                state.current, state.deficient
            )
        });

        let crossed = arr.hyperplane(pos).clone();
        let p = crossed.p();
        state.current = flipped;
        state.label.increment(p);
        state.trace.push(crossed);
        if state.label.value(p) == f.value(p) {
            state.deficient.remove(&p);
            state.satisfied.insert(p);
        }
    }

    assert_invariants(arr, f, &state);
    assert_eq!(state.label, *f, "walk must stop exactly at the target");
    assert_eq!(state.trace.len() as u64, f.sum());
    let region = region_for_signs(arr, &state.current)?;
    debug_assert_eq!(region.label(), f);
    Ok((region, state.trace))
}

/// The walk's running invariants; violations are bugs, so they panic.
///
/// (1) satisfied vertices already carry their target value, (2) the
/// deficient set is exactly `{i : f(i) > label(i)}` and the label never
/// exceeds the target, so the set can only shrink under the walk's
/// remove-only bookkeeping, (3) no separating hyperplane has both endpoints
/// deficient. The label is also rechecked against the sign vector.
fn assert_invariants(arr: &Arrangement, f: &ParkVec, state: &WalkState) {
    for &j in &state.satisfied {
        assert_eq!(
            state.label.value(j),
            f.value(j),
            "satisfied vertex {j} must hold its target value"
        );
    }
    for i in 1..=arr.n() {
        assert!(
            state.label.value(i) <= f.value(i),
            "label must never exceed the target"
        );
        assert_eq!(
            state.deficient.contains(&i),
            f.value(i) > state.label.value(i),
            "vertex split must match its definition at vertex {i}"
        );
    }
    for pos in state.current.plus_positions() {
        let h = arr.hyperplane(pos);
        assert!(
            !(state.deficient.contains(&h.p()) && state.deficient.contains(&h.q())),
            "separating hyperplane {h} has both endpoints deficient"
        );
    }
    debug_assert_eq!(
        label_of(arr, &state.current).expect("lengths match"),
        state.label
    );
}
