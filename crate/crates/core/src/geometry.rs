//! Exact polyhedral ground truth: incidence vectors, affine rank, hull
//! membership and the LP face oracles for maximal chain polytopes.
//!
//! Nothing here looks at crowns or stars. These routines answer the same
//! questions as the combinatorial engine from the geometry alone, so the two
//! can be checked against each other.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::chain::{Chain, ChainFamily};
use crate::error::{Error, Result};
use crate::lp::{rat, LinearProgram, LpOutcome, Rational, Relation, Sense};
use crate::poset::{Element, Poset};

/// A point of `ℚ^p` with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalVector(coords)
    }

    pub fn zeros(len: usize) -> Self {
        RationalVector(vec![Rational::zero(); len])
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| rat(c)).collect())
    }

    /// `e_Q`: the 0/1 vector with support `Q`.
    pub fn incidence(size: usize, elems: impl IntoIterator<Item = Element>) -> Self {
        let mut v = Self::zeros(size);
        for x in elems {
            v.0[x - 1] = Rational::one();
        }
        v
    }

    pub fn of_chain(size: usize, chain: &Chain) -> Self {
        Self::incidence(size, chain.elements().iter().copied())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Coordinate of element `x` (1-based).
    pub fn at(&self, x: Element) -> &Rational {
        &self.0[x - 1]
    }

    pub fn dot(&self, other: &RationalVector) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, q: &Rational) -> RationalVector {
        RationalVector(self.0.iter().map(|a| a * q).collect())
    }

    pub fn sub(&self, other: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Sum of the coordinates over `elems`, i.e. `f(Q)` for a weight `f`.
    pub fn total_over(&self, elems: &[Element]) -> Rational {
        elems.iter().map(|&x| self.at(x)).sum()
    }

    /// Coordinates as exact fraction strings (`"3/2"`, `"-1"`, `"0"`).
    pub fn fraction_strings(&self) -> Vec<String> {
        self.0.iter().map(|q| q.to_string()).collect()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.fraction_strings().join(", "))
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.fraction_strings().serialize(s)
    }
}

/// Average of the incidence vectors of a nonempty family.
pub fn barycenter(size: usize, family: &ChainFamily) -> Result<RationalVector> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = rat(family.len() as i64);
    let coords = family
        .incidence_sum(size)
        .into_iter()
        .map(|c| rat(c as i64) / &n)
        .collect();
    Ok(RationalVector(coords))
}

fn check_dims(points: &[RationalVector]) -> Result<usize> {
    let dim = points.first().ok_or(Error::EmptyFamily)?.len();
    match points.iter().find(|p| p.len() != dim) {
        Some(p) => Err(Error::DimensionMismatch {
            expected: dim,
            found: p.len(),
        }),
        None => Ok(dim),
    }
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col].clone();
        let pivot_row: Vec<Rational> = rows[rank].iter().map(|v| v / &p).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * pv;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Dimension of the affine hull of a nonempty point set.
pub fn affine_rank(points: &[RationalVector]) -> Result<usize> {
    check_dims(points)?;
    let base = &points[0];
    let diffs = points[1..].iter().map(|p| p.sub(base).0).collect();
    Ok(rank(diffs))
}

/// Affine rank of `{e_C : C ∈ family}`.
pub fn family_rank(size: usize, family: &ChainFamily) -> Result<usize> {
    let points: Vec<_> = family
        .iter()
        .map(|c| RationalVector::of_chain(size, c))
        .collect();
    affine_rank(&points)
}

/// Whether `point` is a convex combination of `points`, decided by an exact
/// feasibility LP.
pub fn member_of_hull(point: &RationalVector, points: &[RationalVector]) -> Result<bool> {
    let dim = check_dims(points)?;
    if point.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: point.len(),
        });
    }
    let k = points.len();
    let mut lp = LinearProgram::new(k, Sense::Minimize);
    lp.add_constraint(vec![Rational::one(); k], Relation::Equal, Rational::one())?;
    for coord in 0..dim {
        let row = points.iter().map(|p| p.0[coord].clone()).collect();
        lp.add_constraint(row, Relation::Equal, point.0[coord].clone())?;
    }
    Ok(lp.solve().is_feasible())
}

/// Row `e_A − e_B` in the split variables `(f⁺, f⁻)`, so that a weight
/// `f = f⁺ − f⁻` gives `f(A) − f(B)`.
fn split_row(size: usize, plus: &Chain, minus: &Chain) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); 2 * size];
    for &x in plus.elements() {
        row[x - 1] += Rational::one();
        row[size + x - 1] -= Rational::one();
    }
    for &x in minus.elements() {
        row[x - 1] -= Rational::one();
        row[size + x - 1] += Rational::one();
    }
    row
}

fn unsplit(size: usize, solution: &[Rational]) -> RationalVector {
    RationalVector((0..size).map(|x| &solution[x] - &solution[size + x]).collect())
}

/// Looks for a weight `f` that is constant on `family` and exceeds every
/// other maximal chain by at least 1. Such an `f` exists exactly when
/// `conv(family)` is a face of the polytope. The returned witness has
/// minimal ℓ¹ norm; for the full family it is the zero function.
pub fn face_oracle(poset: &Poset, family: &ChainFamily) -> Result<Option<RationalVector>> {
    let anchor = family.first().ok_or(Error::EmptyFamily)?;
    let size = poset.size();
    let all = poset.maximal_chains();
    if family.len() == all.len() {
        return Ok(Some(RationalVector::zeros(size)));
    }

    let mut lp = LinearProgram::new(2 * size, Sense::Minimize);
    lp.set_objective(vec![Rational::one(); 2 * size])?;
    for c in family.iter().skip(1) {
        lp.add_constraint(split_row(size, c, anchor), Relation::Equal, Rational::zero())?;
    }
    for d in all.iter().filter(|d| !family.contains(d)) {
        lp.add_constraint(split_row(size, anchor, d), Relation::GreaterEq, Rational::one())?;
    }
    Ok(match lp.solve() {
        LpOutcome::Optimal { solution, .. } => Some(unsplit(size, &solution)),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("ℓ¹ objective is bounded below"),
    })
}

/// Checks that `weights` separates `family`: equal totals on the family and
/// strictly smaller totals on every other maximal chain.
pub fn separates(poset: &Poset, family: &ChainFamily, weights: &RationalVector) -> bool {
    let Some(anchor) = family.first() else {
        return false;
    };
    let top = weights.total_over(anchor.elements());
    poset.maximal_chains().iter().all(|d| {
        let t = weights.total_over(d.elements());
        if family.contains(d) {
            t == top
        } else {
            t < top
        }
    })
}

/// Chains lying on every face that contains `conv(family)`: one LP per
/// candidate maximising `f(C₁) − f(D)` (capped at 1) over weights that are
/// constant on the family and maximal there. A zero optimum forces `D`.
pub fn minimal_face_oracle(poset: &Poset, family: &ChainFamily) -> Result<ChainFamily> {
    let anchor = family.first().ok_or(Error::EmptyFamily)?;
    let size = poset.size();
    let all = poset.maximal_chains();

    let mut base = LinearProgram::new(2 * size, Sense::Maximize);
    for c in family.iter().skip(1) {
        base.add_constraint(split_row(size, c, anchor), Relation::Equal, Rational::zero())?;
    }
    for d in all.iter().filter(|d| !family.contains(d)) {
        base.add_constraint(split_row(size, anchor, d), Relation::GreaterEq, Rational::zero())?;
    }

    let mut out = family.clone();
    for d in all.iter().filter(|d| !family.contains(d)) {
        let gap = split_row(size, anchor, d);
        let mut lp = base.clone();
        lp.add_constraint(gap.clone(), Relation::LessEq, Rational::one())?;
        lp.set_objective(gap)?;
        let value = match lp.solve() {
            LpOutcome::Optimal { value, .. } => value,
            other => unreachable!("zero weight is feasible and the gap is capped: {other:?}"),
        };
        if !value.is_positive() {
            out.insert(d.clone());
        }
    }
    Ok(out)
}
