//! Feasibility of sign vectors as systems of strict difference constraints.
//!
//! Each hyperplane `{x_p - x_q = a}` with a chosen side contributes one
//! strict constraint: `Minus` gives `x_p - x_q < a`, `Plus` gives
//! `x_q - x_p < -a`. The sign vector is a region exactly when the constraint
//! digraph has no lexicographically negative cycle, strictness being encoded
//! in the second weight component instead of a numeric epsilon. A negative
//! cycle maps back to hyperplanes whose summed inequalities read
//! `0 > a_1 + ... + a_k`, the standard contradiction certificate.

use std::ops::Add;

use num::{Signed, Zero};

use crate::error::Error;
use crate::types::{Arrangement, Hyperplane, Point, Rational, Sign, SignVector};

/// Weight of a path of strict constraints: exact cost plus the negated count
/// of strict edges. Comparison and addition are lexicographic/componentwise,
/// so `(c, s) < (0, 0)` captures both `c < 0` and the boundary case
/// `c = 0` with at least one strict edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LexWeight {
    cost: Rational,
    strict: i64,
}

impl LexWeight {
    pub fn new(cost: Rational, strict: i64) -> LexWeight {
        debug_assert!(strict <= 0, "strictness is a negated count");
        LexWeight { cost, strict }
    }

    pub fn zero() -> LexWeight {
        LexWeight {
            cost: Rational::zero(),
            strict: 0,
        }
    }

    pub fn cost(&self) -> &Rational {
        &self.cost
    }

    /// Negated number of strict edges accumulated; never positive.
    pub fn strictness(&self) -> i64 {
        self.strict
    }
}

impl Add<&LexWeight> for &LexWeight {
    type Output = LexWeight;

    fn add(self, rhs: &LexWeight) -> LexWeight {
        LexWeight {
            cost: &self.cost + &rhs.cost,
            strict: self.strict + rhs.strict,
        }
    }
}

/// Outcome of a feasibility query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The sign vector is a region; carries an exact interior point.
    Feasible(Point),
    /// Not a region; carries an oriented cycle of constraints whose summed
    /// inequalities contradict.
    Infeasible(Vec<Hyperplane>),
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible(_))
    }
}

/// One strict difference constraint `x_to - x_from < cost`.
#[derive(Clone, Debug)]
struct Edge {
    from: usize,
    to: usize,
    cost: Rational,
}

/// Both constraint orientations of every hyperplane, precomputed once per
/// arrangement so repeated queries clone no rationals.
pub(crate) struct ConstraintSystem {
    n: usize,
    /// Per hyperplane position: the `Minus` edge (`x_p - x_q < a`) and the
    /// `Plus` edge (`x_q - x_p < -a`).
    oriented: Vec<[Edge; 2]>,
}

impl ConstraintSystem {
    pub(crate) fn new(arr: &Arrangement) -> ConstraintSystem {
        let oriented = arr
            .hyperplanes()
            .iter()
            .map(|h| {
                [
                    Edge {
                        from: h.q(),
                        to: h.p(),
                        cost: h.constant().clone(),
                    },
                    Edge {
                        from: h.p(),
                        to: h.q(),
                        cost: -h.constant().clone(),
                    },
                ]
            })
            .collect();
        ConstraintSystem {
            n: arr.n(),
            oriented,
        }
    }

    fn edge(&self, pos: usize, sign: Sign) -> &Edge {
        match sign {
            Sign::Minus => &self.oriented[pos][0],
            Sign::Plus => &self.oriented[pos][1],
        }
    }

    fn edges<'a>(&'a self, sv: &'a SignVector) -> impl Iterator<Item = &'a Edge> + 'a {
        (0..sv.len()).map(move |pos| self.edge(pos, sv.get(pos)))
    }
}

enum Relaxation {
    /// Converged potentials, one per vertex (1-based; slot 0 unused).
    Converged(Vec<LexWeight>),
    /// Hyperplane positions of a lexicographically negative cycle, in cycle
    /// order.
    NegativeCycle(Vec<usize>),
}

/// Label-correcting relaxation from an implicit virtual source that reaches
/// every vertex with weight zero. Deterministic: edges are relaxed in
/// arrangement order, `n` full rounds with early exit, then one detection
/// round.
fn relax(system: &ConstraintSystem, sv: &SignVector) -> Relaxation {
    let n = system.n;
    let mut dist = vec![LexWeight::zero(); n + 1];
    let mut pred: Vec<Option<usize>> = vec![None; n + 1];

    let relax_round = |dist: &mut Vec<LexWeight>, pred: &mut Vec<Option<usize>>| -> Option<usize> {
        let mut first_update = None;
        for pos in 0..sv.len() {
            let e = system.edge(pos, sv.get(pos));
            let candidate = LexWeight {
                cost: dist[e.from].cost() + &e.cost,
                strict: dist[e.from].strictness() - 1,
            };
            if candidate < dist[e.to] {
                dist[e.to] = candidate;
                pred[e.to] = Some(pos);
                first_update.get_or_insert(pos);
            }
        }
        first_update
    };

    for _ in 0..n {
        if relax_round(&mut dist, &mut pred).is_none() {
            return Relaxation::Converged(dist);
        }
    }

    // Detection round: an edge that still relaxes after n rounds proves a
    // negative cycle, and the pred chain from its freshly updated head must
    // run into that cycle within n+1 steps.
    for pos in 0..sv.len() {
        let e = system.edge(pos, sv.get(pos));
        let candidate = LexWeight {
            cost: dist[e.from].cost() + &e.cost,
            strict: dist[e.from].strictness() - 1,
        };
        if candidate < dist[e.to] {
            dist[e.to] = candidate;
            pred[e.to] = Some(pos);
            let mut x = e.to;
            for _ in 0..=n {
                let pos = pred[x].expect("predecessor exists on negative-cycle walk");
                x = system.edge(pos, sv.get(pos)).from;
            }
            let start = x;
            let mut cycle = Vec::new();
            let mut cur = start;
            loop {
                let pos = pred[cur].expect("predecessor exists on negative-cycle walk");
                cycle.push(pos);
                cur = system.edge(pos, sv.get(pos)).from;
                if cur == start {
                    break;
                }
            }
            cycle.reverse();
            return Relaxation::NegativeCycle(cycle);
        }
    }

    Relaxation::Converged(dist)
}

/// Turns converged potentials into a strictly interior rational point.
///
/// The potentials satisfy every constraint weakly in lexicographic order;
/// instantiating the strictness margin as half the smallest threshold at
/// which any comparison would flip yields a strictly feasible point. The
/// result is gauge-normalized so the last coordinate is zero.
fn witness_from_potentials(system: &ConstraintSystem, sv: &SignVector, dist: &[LexWeight]) -> Point {
    let mut margin: Option<Rational> = None;
    for e in system.edges(sv) {
        let gap = dist[e.from].cost() + &e.cost - dist[e.to].cost();
        debug_assert!(!gap.is_negative(), "potentials must satisfy every edge");
        let strict_rise = dist[e.to].strictness() - dist[e.from].strictness();
        if gap.is_positive() && strict_rise > 0 {
            let threshold = gap / Rational::from_integer(strict_rise.into());
            if margin.as_ref().is_none_or(|m| threshold < *m) {
                margin = Some(threshold);
            }
        }
    }
    let eps = margin.map_or_else(
        || Rational::from_integer(1.into()),
        |m| m / Rational::from_integer(2.into()),
    );

    let coords: Vec<Rational> = (1..=system.n)
        .map(|v| dist[v].cost() + &eps * Rational::from_integer(dist[v].strictness().into()))
        .collect();
    let point = Point::gauge_normalized(coords);

    debug_assert!(
        system
            .edges(sv)
            .all(|e| point.difference(e.to, e.from) < e.cost),
        "witness must satisfy every strict constraint"
    );
    point
}

pub(crate) fn check_signs_cached(
    arr: &Arrangement,
    system: &ConstraintSystem,
    sv: &SignVector,
) -> Result<Verdict, Error> {
    if sv.len() != arr.hyperplane_count() {
        return Err(Error::LengthMismatch {
            expected: arr.hyperplane_count(),
            found: sv.len(),
        });
    }
    match relax(system, sv) {
        Relaxation::Converged(dist) => {
            Ok(Verdict::Feasible(witness_from_potentials(system, sv, &dist)))
        }
        Relaxation::NegativeCycle(cycle) => Ok(Verdict::Infeasible(
            cycle
                .into_iter()
                .map(|pos| arr.hyperplane(pos).clone())
                .collect(),
        )),
    }
}

/// Decides whether `sv` is a region of `arr`.
///
/// Returns `Feasible` with an exact interior witness (gauge `x_n = 0`), or
/// `Infeasible` with an oriented constraint cycle certifying the
/// contradiction.
pub fn check_signs(arr: &Arrangement, sv: &SignVector) -> Result<Verdict, Error> {
    check_signs_cached(arr, &ConstraintSystem::new(arr), sv)
}

pub(crate) fn interior_witness_cached(
    arr: &Arrangement,
    system: &ConstraintSystem,
    sv: &SignVector,
) -> Result<Point, Error> {
    match check_signs_cached(arr, system, sv)? {
        Verdict::Feasible(point) => Ok(point),
        Verdict::Infeasible(_) => Err(Error::InfeasibleSigns),
    }
}

/// An exact interior point of the region described by `sv`.
///
/// Deterministic for fixed input; errors with `InfeasibleSigns` when `sv` is
/// not a region.
pub fn interior_witness(arr: &Arrangement, sv: &SignVector) -> Result<Point, Error> {
    interior_witness_cached(arr, &ConstraintSystem::new(arr), sv)
}

/// Maximum hyperplane count accepted by [`fm_feasible_oracle`].
pub const FM_ORACLE_MAX_HYPERPLANES: usize = 12;

/// Independent feasibility oracle by Fourier-Motzkin elimination over exact
/// rationals, on the same strict system as [`check_signs`]. Exponential;
/// intended for cross-validation in tests only.
pub fn fm_feasible_oracle(arr: &Arrangement, sv: &SignVector) -> Result<bool, Error> {
    if arr.hyperplane_count() > FM_ORACLE_MAX_HYPERPLANES {
        return Err(Error::TooLarge {
            what: "hyperplane count for the Fourier-Motzkin oracle",
            actual: arr.hyperplane_count(),
            limit: FM_ORACLE_MAX_HYPERPLANES,
        });
    }
    if sv.len() != arr.hyperplane_count() {
        return Err(Error::LengthMismatch {
            expected: arr.hyperplane_count(),
            found: sv.len(),
        });
    }

    let n = arr.n();
    // Rows of `sum_i coeffs[i] * x_i < rhs`, all strict.
    let mut rows: Vec<(Vec<Rational>, Rational)> = arr
        .hyperplanes()
        .iter()
        .enumerate()
        .map(|(pos, h)| {
            let mut coeffs = vec![Rational::zero(); n];
            let rhs = match sv.get(pos) {
                Sign::Minus => {
                    coeffs[h.p() - 1] = Rational::from_integer(1.into());
                    coeffs[h.q() - 1] = Rational::from_integer((-1).into());
                    h.constant().clone()
                }
                Sign::Plus => {
                    coeffs[h.q() - 1] = Rational::from_integer(1.into());
                    coeffs[h.p() - 1] = Rational::from_integer((-1).into());
                    -h.constant().clone()
                }
            };
            (coeffs, rhs)
        })
        .collect();

    for var in 0..n {
        let mut lower = Vec::new(); // coefficient of var is negative
        let mut upper = Vec::new(); // coefficient of var is positive
        let mut rest = Vec::new();
        for (coeffs, rhs) in rows {
            if coeffs[var].is_positive() {
                upper.push((coeffs, rhs));
            } else if coeffs[var].is_negative() {
                lower.push((coeffs, rhs));
            } else {
                rest.push((coeffs, rhs));
            }
        }

        for (uc, ur) in &upper {
            for (lc, lr) in &lower {
                let up_scale = &uc[var];
                let low_scale = -&lc[var];
                let mut coeffs: Vec<Rational> = (0..n)
                    .map(|i| &uc[i] / up_scale + &lc[i] / &low_scale)
                    .collect();
                coeffs[var] = Rational::zero();
                let rhs = ur / up_scale + lr / &low_scale;
                if coeffs.iter().all(|c| c.is_zero()) {
                    // Derived `0 < rhs`.
                    if !rhs.is_positive() {
                        return Ok(false);
                    }
                } else {
                    rest.push((coeffs, rhs));
                }
            }
        }

        rest.sort();
        rest.dedup();
        rows = rest;
    }

    debug_assert!(rows.is_empty(), "all variables eliminated");
    Ok(true)
}
