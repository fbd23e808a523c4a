//! Cyclic quotient singularities `1/n(1,q)`, their Hirzebruch–Jung chains and
//! discrepancy divisors.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{ParseError, SingularityError};
use crate::exact::{int, mod_inverse, solve_linear_rational, IntMatrix, Rational};

/// The germ of C²/μ_n with μ_n acting by weights (1, q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicQuotientSingularity {
    n: u64,
    q: u64,
}

impl CyclicQuotientSingularity {
    /// Builds `1/n(1,q)`, reducing `q` modulo `n`.
    pub fn new(n: u64, q: u64) -> Result<Self, SingularityError> {
        if n < 2 {
            return Err(SingularityError::InvalidOrder(n));
        }
        let q = q % n;
        if q == 0 || q.gcd(&n) != 1 {
            return Err(SingularityError::InvalidWeight { n, q });
        }
        Ok(CyclicQuotientSingularity { n, q })
    }

    /// Normalizes weights `(a, b)` with `a` a unit to `(1, b/a)`.
    pub fn with_weights(n: u64, a: u64, b: u64) -> Result<Self, SingularityError> {
        if n < 2 {
            return Err(SingularityError::InvalidOrder(n));
        }
        let inv = mod_inverse(a % n, n).ok_or(SingularityError::InvalidWeight { n, q: a })?;
        Self::new(n, (b % n) * inv % n)
    }

    /// `1/3(1,2)`, the A₂ point.
    pub fn cusp() -> Self {
        CyclicQuotientSingularity { n: 3, q: 2 }
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn weight(&self) -> u64 {
        self.q
    }

    /// `1/n(1,q')` with `q·q' ≡ 1 (mod n)`: the same germ with the axes swapped.
    pub fn dual(&self) -> Self {
        let q = mod_inverse(self.q, self.n).expect("weight is a unit");
        CyclicQuotientSingularity { n: self.n, q }
    }

    /// Same germ up to swapping coordinates.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.n == other.n && (self.q == other.q || self.dual().q == other.q)
    }

    /// Type A_{n-1}: the only cyclic quotients with zero discrepancy.
    pub fn is_rational_double_point(&self) -> bool {
        self.q == self.n - 1
    }

    pub fn resolve(&self) -> ExceptionalChain {
        hj_resolve(self)
    }
}

impl fmt::Display for CyclicQuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.n, self.q)
    }
}

impl Serialize for CyclicQuotientSingularity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for CyclicQuotientSingularity {
    type Err = ParseError;

    /// Accepts `1/7(1,5)`, and more generally `1/n(a,b)` with `a` a unit mod n.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::new("singularity", s);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = compact.strip_prefix("1/").ok_or_else(bad)?;
        let (n, weights) = rest.split_once('(').ok_or_else(bad)?;
        let weights = weights.strip_suffix(')').ok_or_else(bad)?;
        let (a, b) = weights.split_once(',').ok_or_else(bad)?;
        let n: u64 = n.parse().map_err(|_| bad())?;
        let a: u64 = a.parse().map_err(|_| bad())?;
        let b: u64 = b.parse().map_err(|_| bad())?;
        Self::with_weights(n, a, b).map_err(|_| bad())
    }
}

/// A chain of smooth rational curves with self-intersections `b_i ≤ -2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExceptionalChain {
    self_intersections: Vec<i64>,
}

impl ExceptionalChain {
    pub fn new(self_intersections: Vec<i64>) -> Result<Self, SingularityError> {
        if self_intersections.is_empty() {
            return Err(SingularityError::InvalidChain("empty chain".into()));
        }
        if let Some(b) = self_intersections.iter().find(|&&b| b > -2) {
            return Err(SingularityError::InvalidChain(format!(
                "self-intersection {b} > -2"
            )));
        }
        Ok(ExceptionalChain { self_intersections })
    }

    /// The A_k chain of k (-2)-curves.
    pub fn a_chain(k: usize) -> Self {
        assert!(k > 0);
        ExceptionalChain {
            self_intersections: vec![-2; k],
        }
    }

    pub fn self_intersections(&self) -> &[i64] {
        &self.self_intersections
    }

    pub fn len(&self) -> usize {
        self.self_intersections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.self_intersections.is_empty()
    }

    /// True when every curve is a (-2)-curve.
    pub fn is_ade(&self) -> bool {
        self.self_intersections.iter().all(|&b| b == -2)
    }

    /// Tridiagonal: `b_i` on the diagonal, 1 between neighbours.
    pub fn intersection_matrix(&self) -> IntMatrix {
        let m = self.len();
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            self.self_intersections[i]
                        } else if i.abs_diff(j) == 1 {
                            1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(&rows)
    }

    /// Value of `c_1 - 1/(c_2 - 1/(… - 1/c_m))` with `c_i = -b_i`.
    pub fn continued_fraction(&self) -> Rational {
        let mut acc: Option<Rational> = None;
        for &b in self.self_intersections.iter().rev() {
            let c = int(-b);
            acc = Some(match acc {
                None => c,
                Some(tail) => c - tail.recip(),
            });
        }
        acc.expect("nonempty chain")
    }

    /// `|det|` of the intersection matrix; equals the group order. The matrix
    /// is tridiagonal, so the determinant is a continuant.
    pub fn abs_determinant(&self) -> BigInt {
        let (mut cur, mut prev) = (BigInt::one(), BigInt::zero());
        for &b in &self.self_intersections {
            let next = BigInt::from(b) * &cur - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        cur.abs()
    }

    /// Topological Euler number of the chain as a curve configuration.
    pub fn euler_number(&self) -> i64 {
        self.len() as i64 + 1
    }

    /// Recovers `1/n(1,q)` from the continued fraction `n/q`.
    pub fn singularity(&self) -> CyclicQuotientSingularity {
        let v = self.continued_fraction();
        let n = u64::try_from(v.numer()).expect("fits");
        let q = u64::try_from(v.denom()).expect("fits");
        CyclicQuotientSingularity { n, q }
    }
}

impl fmt::Display for ExceptionalChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .self_intersections
            .iter()
            .map(|b| format!("({b})"))
            .collect();
        f.write_str(&parts.join("-"))
    }
}

impl Serialize for ExceptionalChain {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.self_intersections.serialize(s)
    }
}

/// Negative-regular continued fraction of `n/q`: `b_i = ⌈n/q⌉`, then
/// `(n, q) ← (q, b_i·q − n)`.
pub fn hj_resolve(s: &CyclicQuotientSingularity) -> ExceptionalChain {
    let (mut n, mut q) = (s.n, s.q);
    let mut out = Vec::new();
    while q != 0 {
        let b = n.div_ceil(q);
        out.push(-(b as i64));
        (n, q) = (q, b * q - n);
    }
    ExceptionalChain {
        self_intersections: out,
    }
}

/// `D_p = Σ a_j A_j` with `D_p·A_j = 2 + A_j²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyDivisor {
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub coefficients: Vec<Rational>,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub self_square: Rational,
}

impl DiscrepancyDivisor {
    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }
}

pub fn discrepancy(chain: &ExceptionalChain) -> DiscrepancyDivisor {
    let m = chain.intersection_matrix();
    let rhs: Vec<Rational> = chain
        .self_intersections()
        .iter()
        .map(|&b| int(2 + b))
        .collect();
    // Negative definite, hence invertible.
    let coefficients = solve_linear_rational(&m, &rhs).expect("chain matrix is invertible");
    let self_square = m.quadratic_form(&coefficients).expect("dimensions agree");
    DiscrepancyDivisor {
        coefficients,
        self_square,
    }
}

pub fn is_rational_double_point(s: &CyclicQuotientSingularity) -> bool {
    s.is_rational_double_point()
}
