//! Cyclic covers branched at singular points, and the reverse (quotient)
//! direction.
//!
//! For a cyclic cover `X → Z` of prime degree `n`, unramified in codimension
//! one and totally branched over `b` singular points of `Z`:
//!
//! * `K_X² = n·K_Z²`
//! * `e(X) = n·(e(Z) − b) + b`
//! * every unbranched singular point has `n` preimages of the same type.
//!
//! The resolution invariants of `X` then follow from the discrepancies of its
//! singular points, and Noether's identity on the resolution is the
//! consistency check.

mod lattice;
mod p2;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use lattice::{discriminant_certificate, DiscriminantCertificate};
pub use p2::{p2_quotient_analysis, LocalFixedPoint, MonomialAction, P2QuotientAnalysis};

use crate::error::{CoverError, LedgerError, ParseError};
use crate::exact::{int, is_prime, Rational};
use crate::ledger::{derived_invariants, SurfaceLedger};
use crate::singularity::{discrepancy, CyclicQuotientSingularity};

/// What sits over a branch point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PreimageType {
    Smooth,
    Singular(CyclicQuotientSingularity),
}

impl fmt::Display for PreimageType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PreimageType::Smooth => f.write_str("smooth"),
            PreimageType::Singular(s) => s.fmt(f),
        }
    }
}

impl FromStr for PreimageType {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        if s.trim().eq_ignore_ascii_case("smooth") {
            return Ok(PreimageType::Smooth);
        }
        s.parse()
            .map(PreimageType::Singular)
            .map_err(|_| ParseError::new("preimage type", s))
    }
}

impl Serialize for PreimageType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Built-in preimage table: a point of type `1/n(1,q)` totally branched in a
/// cyclic cover of degree `n` has a smooth preimage (the local cover is the
/// quotient map C² → C²/μ_n). This covers the cusp under C₃ and `1/7(1,5)`
/// under C₇.
pub fn builtin_preimage(degree: u32, s: &CyclicQuotientSingularity) -> Option<PreimageType> {
    (s.order() == degree as u64).then_some(PreimageType::Smooth)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSpec {
    pub label: String,
    pub degree: u32,
    pub base: SurfaceLedger,
    /// Indices into `base.singularities()`.
    pub branch_points: Vec<usize>,
    /// One entry per branch point.
    pub preimages: Vec<PreimageType>,
    /// Irregularity and geometric genus declared for the cover's resolution.
    pub cover_pg: u32,
    pub cover_q: u32,
}

impl CoverSpec {
    /// Validates the branch data. `preimages = None` takes the built-in table.
    pub fn new(
        label: impl Into<String>,
        degree: u32,
        base: SurfaceLedger,
        branch_points: Vec<usize>,
        preimages: Option<Vec<PreimageType>>,
    ) -> Result<Self, CoverError> {
        if degree != 1 && !is_prime(degree as u64) {
            return Err(CoverError::DegreeNotPrime(degree));
        }
        let count = base.singularities().len();
        for (k, &i) in branch_points.iter().enumerate() {
            if i >= count {
                return Err(CoverError::BranchIndexOutOfRange { index: i, count });
            }
            if branch_points[..k].contains(&i) {
                return Err(CoverError::DuplicateBranchPoint(i));
            }
        }
        if degree == 1 && !branch_points.is_empty() {
            return Err(CoverError::BranchMismatch(
                "a degree 1 cover has no branch points".into(),
            ));
        }
        let preimages = match preimages {
            Some(p) => p,
            None => branch_points
                .iter()
                .map(|&i| {
                    let s = base.singularities()[i];
                    builtin_preimage(degree, &s).ok_or(CoverError::MissingPreimage {
                        singularity: s.to_string(),
                        degree,
                    })
                })
                .collect::<Result<_, _>>()?,
        };
        if preimages.len() != branch_points.len() {
            return Err(CoverError::PreimageCountMismatch {
                branch: branch_points.len(),
                preimages: preimages.len(),
            });
        }
        for &i in &branch_points {
            let s = base.singularities()[i];
            if !s.order().is_multiple_of(degree as u64) {
                return Err(CoverError::BranchMismatch(format!(
                    "local group of {s} has no quotient of order {degree}"
                )));
            }
        }
        Ok(CoverSpec {
            label: label.into(),
            degree,
            base,
            branch_points,
            preimages,
            cover_pg: 0,
            cover_q: 0,
        })
    }

    pub fn with_irregularity(mut self, pg: u32, q: u32) -> Self {
        self.cover_pg = pg;
        self.cover_q = q;
        self
    }
}

/// Builds the resolution ledger of a surface from the invariants of the
/// singular surface and its singular points.
fn resolution_ledger(
    label: &str,
    k2_singular: Rational,
    e_singular: i64,
    pg: u32,
    q: u32,
    singularities: Vec<CyclicQuotientSingularity>,
) -> Result<SurfaceLedger, CoverError> {
    let mut k2 = k2_singular;
    let mut e = e_singular;
    for s in &singularities {
        let chain = s.resolve();
        k2 += discrepancy(&chain).self_square;
        e += chain.len() as i64;
    }
    if !k2.is_integer() {
        return Err(CoverError::BranchMismatch(format!(
            "resolution K^2 = {k2} is not an integer"
        )));
    }
    SurfaceLedger::new(label, k2, e, pg, q, singularities).map_err(|err| match err {
        LedgerError::NoetherViolation { lhs, rhs, .. } => CoverError::BranchMismatch(format!(
            "Noether fails on the resolution: K^2 + e = {lhs}, expected {rhs}"
        )),
        other => other.into(),
    })
}

pub fn cover_invariants(spec: &CoverSpec) -> Result<SurfaceLedger, CoverError> {
    if spec.degree == 1 {
        return Ok(spec.base.clone().with_label(spec.label.clone()));
    }
    let n = spec.degree as i64;
    let base = derived_invariants(&spec.base);
    let b = spec.branch_points.len() as i64;

    let k2 = &base.k2_singular * int(n);
    let e = n * (base.e_singular - b) + b;

    let mut singularities = Vec::new();
    for (i, s) in spec.base.singularities().iter().enumerate() {
        match spec.branch_points.iter().position(|&j| j == i) {
            Some(k) => {
                if let PreimageType::Singular(t) = spec.preimages[k] {
                    singularities.push(t);
                }
            }
            None => singularities.extend(std::iter::repeat_n(*s, spec.degree as usize)),
        }
    }
    resolution_ledger(
        &spec.label,
        k2,
        e,
        spec.cover_pg,
        spec.cover_q,
        singularities,
    )
}

/// An isolated fixed point of the group acting on the total space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    /// Index of the point among the total space's singularities, or `None`
    /// when the point is smooth upstairs.
    pub upstairs: Option<usize>,
    /// Singularity type of the image point.
    pub image: CyclicQuotientSingularity,
}

/// Quotient of a surface by a cyclic group of prime order with isolated
/// fixed points only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpec {
    pub label: String,
    pub degree: u32,
    pub total: SurfaceLedger,
    /// Singular points of the total space permuted freely, one orbit per entry.
    pub free_orbits: Vec<Vec<usize>>,
    pub fixed_points: Vec<FixedPoint>,
    pub quotient_pg: u32,
    pub quotient_q: u32,
}

/// The reverse of [`cover_invariants`]: `K_Z² = K_X²/n`,
/// `e(Z) = (e(X) − f)/n + f` for `f` fixed points.
pub fn quotient_invariants(spec: &QuotientSpec) -> Result<SurfaceLedger, CoverError> {
    let n = spec.degree;
    if !is_prime(n as u64) {
        return Err(CoverError::DegreeNotPrime(n));
    }
    let total_sing = spec.total.singularities();
    let mut seen = vec![false; total_sing.len()];
    let mut mark = |i: usize| -> Result<(), CoverError> {
        if i >= seen.len() {
            return Err(CoverError::BranchIndexOutOfRange {
                index: i,
                count: seen.len(),
            });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(CoverError::DuplicateBranchPoint(i));
        }
        Ok(())
    };
    let mut singularities = Vec::new();
    for orbit in &spec.free_orbits {
        if orbit.len() != n as usize {
            return Err(CoverError::BranchMismatch(format!(
                "free orbit of size {} under a group of order {n}",
                orbit.len()
            )));
        }
        for &i in orbit {
            mark(i)?;
        }
        let first = total_sing[orbit[0]];
        if orbit.iter().any(|&i| total_sing[i] != first) {
            return Err(CoverError::BranchMismatch(
                "a free orbit mixes singularity types".into(),
            ));
        }
        singularities.push(first);
    }
    for fp in &spec.fixed_points {
        if let Some(i) = fp.upstairs {
            mark(i)?;
        }
        singularities.push(fp.image);
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(CoverError::BranchMismatch(format!(
            "singular point {i} of the total space is neither fixed nor in a free orbit"
        )));
    }

    let total = derived_invariants(&spec.total);
    let f = spec.fixed_points.len() as i64;
    let free_part = total.e_singular - f;
    if free_part % n as i64 != 0 {
        return Err(CoverError::NonIntegralEuler {
            numerator: free_part,
            order: n,
        });
    }
    let e = free_part / n as i64 + f;
    let k2 = total.k2_singular / int(n as i64);
    resolution_ledger(
        &spec.label,
        k2,
        e,
        spec.quotient_pg,
        spec.quotient_q,
        singularities,
    )
}
