//! Core value types: exact rationals, hyperplanes, arrangements, multigraphs,
//! sign vectors, label vectors, and witness points.
//!
//! All geometry lives in the quotient of R^n by the line (1,...,1); witness
//! points pin the last coordinate to zero. Vertex indices are 1-based
//! throughout, matching the usual convention for parking functions.

use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigInt;
use num::{BigRational, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar. Always in lowest terms with a positive denominator;
/// zero is `0/1`. No floating point is used anywhere in the library.
pub type Rational = BigRational;

/// Shorthand for building a rational from machine integers.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer-valued rational.
pub fn ratio_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Side of a hyperplane relative to the fundamental region.
///
/// `Minus` is the origin side (`x_p - x_q < a`), `Plus` the far side
/// (`x_p - x_q > a`). `Minus` sorts before `Plus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn is_plus(self) -> bool {
        matches!(self, Sign::Plus)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}

/// One orientation bit per arrangement hyperplane, in arrangement list order.
///
/// A feasible sign vector identifies a region; the all-minus vector is the
/// fundamental region. The derived ordering is lexicographic with
/// `Minus < Plus`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn all_minus(len: usize) -> SignVector {
        SignVector(vec![Sign::Minus; len])
    }

    pub fn from_signs(signs: Vec<Sign>) -> SignVector {
        SignVector(signs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, pos: usize) -> Sign {
        self.0[pos]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// A copy with the sign at `pos` flipped.
    pub fn flipped(&self, pos: usize) -> SignVector {
        let mut signs = self.0.clone();
        signs[pos] = signs[pos].flipped();
        SignVector(signs)
    }

    pub fn plus_count(&self) -> usize {
        self.0.iter().filter(|s| s.is_plus()).count()
    }

    /// Positions carrying `Plus`, ascending.
    pub fn plus_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_plus())
            .map(|(i, _)| i)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignVector, Error> {
        s.chars()
            .map(|c| match c {
                '-' => Ok(Sign::Minus),
                '+' => Ok(Sign::Plus),
                other => Err(Error::BadParams(format!(
                    "invalid sign character {other:?}, expected '+' or '-'"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignVector)
    }
}

/// The hyperplane `{x_p - x_q = a}` with `a > 0` and `p != q`.
///
/// The positive-constant orientation is the stored one: `(q, p, -a)` and
/// `(p, q, a)` denote the same hyperplane and canonicalize identically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    p: usize,
    q: usize,
    a: Rational,
}

impl Hyperplane {
    /// Canonicalizes `(p, q, a)` so the stored constant is positive.
    ///
    /// Returns `(p, q, a)` when `a > 0` and `(q, p, -a)` when `a < 0`.
    pub fn canonical(p: usize, q: usize, a: Rational) -> Result<Hyperplane, Error> {
        if p == q {
            return Err(Error::EqualIndices(p));
        }
        if p == 0 || q == 0 {
            return Err(Error::IndexOutOfRange {
                index: 0,
                bound: None,
            });
        }
        if a.is_zero() {
            return Err(Error::ZeroConstant);
        }
        if a.is_positive() {
            Ok(Hyperplane { p, q, a })
        } else {
            Ok(Hyperplane { p: q, q: p, a: -a })
        }
    }

    /// First vertex index (1-based); the positive side increments this
    /// coordinate of the label.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Second vertex index (1-based).
    pub fn q(&self) -> usize {
        self.q
    }

    /// The constant `a`; always positive.
    pub fn constant(&self) -> &Rational {
        &self.a
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.p, self.q, self.a)
    }
}

/// A finite arrangement of difference hyperplanes on vertices `1..=n`.
///
/// Entries are kept in construction order; two entries may not be equal as
/// `(p, q, a)` triples. Entries with swapped `(p, q)` are distinct
/// hyperplanes since both constants are positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Builds an arrangement, rejecting out-of-range vertices and duplicate
    /// hyperplanes. Duplicates are an error rather than silently merged:
    /// parallel multiplicities define the multigraph, so merging would
    /// corrupt it.
    pub fn new(n: usize, hyperplanes: Vec<Hyperplane>) -> Result<Arrangement, Error> {
        if n == 0 {
            return Err(Error::BadParams(
                "vertex count must be positive".to_string(),
            ));
        }
        let mut seen = BTreeSet::new();
        for h in &hyperplanes {
            for index in [h.p(), h.q()] {
                if index > n {
                    return Err(Error::IndexOutOfRange {
                        index,
                        bound: Some(n),
                    });
                }
            }
            if !seen.insert(h.clone()) {
                return Err(Error::DuplicateHyperplane(h.clone()));
            }
        }
        Ok(Arrangement { n, hyperplanes })
    }

    /// Number of coordinates (vertices).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane_count(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn hyperplane(&self, pos: usize) -> &Hyperplane {
        &self.hyperplanes[pos]
    }
}

/// An oriented multigraph on vertices `1..=n` stored as an n-by-n
/// multiplicity matrix with a zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u64>,
}

impl Multigraph {
    /// The edgeless multigraph on `n >= 1` vertices.
    pub fn new(n: usize) -> Result<Multigraph, Error> {
        if n == 0 {
            return Err(Error::BadParams(
                "vertex count must be positive".to_string(),
            ));
        }
        Ok(Multigraph {
            n,
            mult: vec![0; n * n],
        })
    }

    /// The complete multigraph with multiplicity `k` in each direction on
    /// every pair of distinct vertices.
    pub fn complete(n: usize, k: u64) -> Result<Multigraph, Error> {
        let mut g = Multigraph::new(n)?;
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    g.set_multiplicity(i, j, k)?;
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "vertex index out of range: ({i}, {j}) with n = {}",
            self.n
        );
        (i - 1) * self.n + (j - 1)
    }

    /// Multiplicity of the edge `i -> j` (1-based indices).
    pub fn multiplicity(&self, i: usize, j: usize) -> u64 {
        self.mult[self.slot(i, j)]
    }

    pub fn set_multiplicity(&mut self, i: usize, j: usize, m: u64) -> Result<(), Error> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange {
                index: if i == 0 || i > self.n { i } else { j },
                bound: Some(self.n),
            });
        }
        if i == j && m > 0 {
            return Err(Error::SelfLoop(i));
        }
        let slot = self.slot(i, j);
        self.mult[slot] = m;
        Ok(())
    }

    /// Total multiplicity of edges leaving `i`.
    pub fn out_degree(&self, i: usize) -> u64 {
        (1..=self.n).map(|j| self.multiplicity(i, j)).sum()
    }

    /// True if every multiplicity is zero.
    pub fn is_edgeless(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }
}

/// A function `{1..n} -> Z>=0`: either a region label or a candidate
/// parking function.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParkVec(Vec<u64>);

impl ParkVec {
    pub fn zero(n: usize) -> ParkVec {
        ParkVec(vec![0; n])
    }

    pub fn from_values(values: Vec<u64>) -> ParkVec {
        ParkVec(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at vertex `i` (1-based).
    pub fn value(&self, i: usize) -> u64 {
        self.0[i - 1]
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn increment(&mut self, i: usize) {
        self.0[i - 1] += 1;
    }

    pub fn has_zero_entry(&self) -> bool {
        self.0.contains(&0)
    }

    /// Comma-separated form, e.g. `2,1,0`; the parseable interchange format.
    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for ParkVec {
    /// Compact digit string like `210` when all values are single digits,
    /// otherwise the comma-separated form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v <= 9) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_csv())
        }
    }
}

impl From<Vec<u64>> for ParkVec {
    fn from(values: Vec<u64>) -> ParkVec {
        ParkVec(values)
    }
}

/// An exact point of the ambient space, gauge-normalized so the last
/// coordinate is zero. The arrangement is invariant under translation by
/// `(1,...,1)`, so pinning one coordinate loses nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point(Vec<Rational>);

impl Point {
    /// Builds a point from raw coordinates, translating along `(1,...,1)`
    /// so the last coordinate becomes zero.
    pub fn gauge_normalized(coords: Vec<Rational>) -> Point {
        assert!(!coords.is_empty(), "a point needs at least one coordinate");
        let last = coords.last().expect("nonempty").clone();
        Point(coords.into_iter().map(|c| c - &last).collect())
    }

    pub fn origin(n: usize) -> Point {
        Point(vec![Rational::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinate `i` (1-based).
    pub fn coord(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// The difference `x_p - x_q`.
    pub fn difference(&self, p: usize, q: usize) -> Rational {
        self.coord(p) - self.coord(q)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_keeps_positive_constant() {
        let h = Hyperplane::canonical(1, 2, ratio(1, 2)).unwrap();
        assert_eq!((h.p(), h.q()), (1, 2));
        assert_eq!(h.constant(), &ratio(1, 2));
    }

    #[test]
    fn canonical_flips_negative_constant() {
        let h = Hyperplane::canonical(2, 1, ratio(-1, 2)).unwrap();
        assert_eq!((h.p(), h.q()), (1, 2));
        assert_eq!(h.constant(), &ratio(1, 2));
    }

    #[test]
    fn canonical_rejects_zero_constant() {
        assert!(matches!(
            Hyperplane::canonical(1, 2, ratio_int(0)),
            Err(Error::ZeroConstant)
        ));
    }

    #[test]
    fn canonical_rejects_equal_indices() {
        assert!(matches!(
            Hyperplane::canonical(3, 3, ratio(1, 2)),
            Err(Error::EqualIndices(3))
        ));
    }

    #[test]
    fn canonical_is_idempotent() {
        for (p, q, num, den) in [(1, 2, 1, 2), (2, 1, -1, 2), (5, 3, 7, 3), (3, 5, -7, 3)] {
            let once = Hyperplane::canonical(p, q, ratio(num, den)).unwrap();
            let twice =
                Hyperplane::canonical(once.p(), once.q(), once.constant().clone()).unwrap();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn arrangement_rejects_duplicates() {
        let h = Hyperplane::canonical(1, 2, ratio(1, 2)).unwrap();
        let err = Arrangement::new(3, vec![h.clone(), h]).unwrap_err();
        assert!(matches!(err, Error::DuplicateHyperplane(_)));
    }

    #[test]
    fn arrangement_allows_antiparallel_pair() {
        let a = Hyperplane::canonical(1, 2, ratio(1, 2)).unwrap();
        let b = Hyperplane::canonical(2, 1, ratio(1, 2)).unwrap();
        let arr = Arrangement::new(2, vec![a, b]).unwrap();
        assert_eq!(arr.hyperplane_count(), 2);
    }

    #[test]
    fn arrangement_rejects_out_of_range_vertex() {
        let h = Hyperplane::canonical(1, 4, ratio(1, 2)).unwrap();
        let err = Arrangement::new(3, vec![h]).unwrap_err();
        assert!(matches!(
            err,
            Error::IndexOutOfRange {
                index: 4,
                bound: Some(3)
            }
        ));
    }

    #[test]
    fn multigraph_rejects_self_loop() {
        let mut g = Multigraph::new(3).unwrap();
        assert!(matches!(g.set_multiplicity(2, 2, 1), Err(Error::SelfLoop(2))));
        // A zero multiplicity on the diagonal is a no-op, not an error.
        g.set_multiplicity(2, 2, 0).unwrap();
    }

    #[test]
    fn sign_vector_flip_and_order() {
        let sv = SignVector::all_minus(3);
        let flipped = sv.flipped(1);
        assert_eq!(flipped.to_string(), "-+-");
        assert!(sv < flipped);
        assert_eq!(flipped.plus_count(), 1);
        assert_eq!(flipped.plus_positions().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn sign_vector_round_trips_text() {
        let sv: SignVector = "+-+".parse().unwrap();
        assert_eq!(sv.to_string(), "+-+");
    }

    #[test]
    fn parkvec_display_compact_and_csv() {
        let f = ParkVec::from_values(vec![2, 1, 0]);
        assert_eq!(f.to_string(), "210");
        assert_eq!(f.to_csv(), "2,1,0");
        let big = ParkVec::from_values(vec![12, 0]);
        assert_eq!(big.to_string(), "12,0");
    }

    #[test]
    fn point_gauge_normalization() {
        let p = Point::gauge_normalized(vec![ratio(3, 2), ratio_int(1), ratio_int(1)]);
        assert_eq!(p.coord(3), &Rational::zero());
        assert_eq!(p.difference(1, 2), ratio(1, 2));
    }

    #[test]
    fn core_types_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Rational>();
        assert_send_sync::<Hyperplane>();
        assert_send_sync::<Arrangement>();
        assert_send_sync::<Multigraph>();
        assert_send_sync::<SignVector>();
        assert_send_sync::<ParkVec>();
        assert_send_sync::<Point>();
    }
}
