//! Quotients of the projective plane by monomial actions of prime order.
//!
//! An element of order `p` acting on P² with eigenvalues `ω^{e_0}, ω^{e_1},
//! ω^{e_2}` (ω a primitive p-th root of unity) has an isolated fixed point on
//! each eigenline when the exponents are distinct. The local type at
//! eigenline `i` is `1/p(e_j − e_i, e_k − e_i)`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{quotient_invariants, FixedPoint, QuotientSpec};
use crate::error::{CoverError, ParseError};
use crate::ledger::SurfaceLedger;
use crate::singularity::CyclicQuotientSingularity;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialAction {
    /// `(x:y:z) ↦ (ω^a x : ω^b y : ω^c z)` with ω of prime order `order`.
    Diagonal { order: u32, weights: [u32; 3] },
    /// `(x:y:z) ↦ (z : x : y)`, possibly twisted by a diagonal scalar matrix.
    CyclicPermutation,
    /// The group of order 9 generated by a diagonal element of order 3 and
    /// the cyclic permutation.
    Generated { sigma: [u32; 3] },
}

impl MonomialAction {
    pub fn identity() -> Self {
        MonomialAction::Diagonal {
            order: 1,
            weights: [0; 3],
        }
    }
}

impl fmt::Display for MonomialAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialAction::Diagonal { order: 1, .. } => f.write_str("identity"),
            MonomialAction::Diagonal {
                order: 3,
                weights: [a, b, c],
            } => write!(f, "diag({a},{b},{c})"),
            MonomialAction::Diagonal {
                order,
                weights: [a, b, c],
            } => write!(f, "diag[{order}]({a},{b},{c})"),
            MonomialAction::CyclicPermutation => f.write_str("cycle"),
            MonomialAction::Generated { sigma: [a, b, c] } => {
                write!(f, "diag({a},{b},{c})+cycle")
            }
        }
    }
}

impl Serialize for MonomialAction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_diagonal(text: &str) -> Option<(u32, [u32; 3])> {
    let rest = text.strip_prefix("diag")?;
    let (order, rest) = match rest.strip_prefix('[') {
        Some(r) => {
            let (o, r) = r.split_once(']')?;
            (o.trim().parse().ok()?, r)
        }
        None => (3, rest),
    };
    let inner = rest.trim().strip_prefix('(')?.strip_suffix(')')?;
    let w: Vec<u32> = inner
        .split(',')
        .map(|x| x.trim().parse())
        .collect::<Result<_, _>>()
        .ok()?;
    let weights: [u32; 3] = w.try_into().ok()?;
    Some((order, weights))
}

/// Accepts `identity`, `cycle`, `diag(a,b,c)` (order 3), `diag[p](a,b,c)`
/// and `diag(a,b,c)+cycle`.
impl FromStr for MonomialAction {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || ParseError::new("monomial action", s);
        match text.as_str() {
            "identity" => return Ok(MonomialAction::identity()),
            "cycle" => return Ok(MonomialAction::CyclicPermutation),
            _ => {}
        }
        if let Some(d) = text.strip_suffix("+cycle") {
            let (order, sigma) = parse_diagonal(d).ok_or_else(err)?;
            if order != 3 {
                return Err(err());
            }
            return Ok(MonomialAction::Generated { sigma });
        }
        let (order, weights) = parse_diagonal(&text).ok_or_else(err)?;
        if order == 0 {
            return Err(err());
        }
        Ok(MonomialAction::Diagonal { order, weights })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalFixedPoint {
    pub stage: usize,
    pub location: String,
    pub local_type: CyclicQuotientSingularity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P2QuotientAnalysis {
    pub action: MonomialAction,
    pub fixed_points: Vec<LocalFixedPoint>,
    /// One ledger per quotient stage; the last one is the final quotient.
    pub stages: Vec<SurfaceLedger>,
}

impl P2QuotientAnalysis {
    pub fn quotient(&self) -> &SurfaceLedger {
        self.stages.last().expect("at least one stage")
    }
}

/// Local types at the three eigenlines of an element with eigen-exponents
/// `e` modulo `p`. `Ok(None)` means the element acts trivially.
fn eigenline_types(
    p: u32,
    e: [u32; 3],
) -> Result<Option<[CyclicQuotientSingularity; 3]>, CoverError> {
    let e = e.map(|x| (x % p) as u64);
    if e[0] == e[1] && e[1] == e[2] {
        return Ok(None);
    }
    if e[0] == e[1] || e[1] == e[2] || e[0] == e[2] {
        return Err(CoverError::UnsupportedAction(
            "two equal eigenvalues: the element fixes a line pointwise".into(),
        ));
    }
    let p = p as u64;
    let local = |i: usize| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        CyclicQuotientSingularity::with_weights(p, (e[j] + p - e[i]) % p, (e[k] + p - e[i]) % p)
            .map_err(|err| CoverError::UnsupportedAction(err.to_string()))
    };
    Ok(Some([local(0)?, local(1)?, local(2)?]))
}

fn quotient_by_fixed_points(
    label: &str,
    degree: u32,
    total: SurfaceLedger,
    free_orbits: Vec<Vec<usize>>,
    images: &[CyclicQuotientSingularity],
) -> Result<SurfaceLedger, CoverError> {
    quotient_invariants(&QuotientSpec {
        label: label.into(),
        degree,
        total,
        free_orbits,
        fixed_points: images
            .iter()
            .map(|&image| FixedPoint {
                upstairs: None,
                image,
            })
            .collect(),
        quotient_pg: 0,
        quotient_q: 0,
    })
}

const COORDINATE_POINTS: [&str; 3] = ["(1:0:0)", "(0:1:0)", "(0:0:1)"];

pub fn p2_quotient_analysis(action: &MonomialAction) -> Result<P2QuotientAnalysis, CoverError> {
    let p2 = SurfaceLedger::projective_plane();
    let single = |order: u32, e: [u32; 3], names: [String; 3]| {
        if order != 1 && !crate::exact::is_prime(order as u64) {
            return Err(CoverError::DegreeNotPrime(order));
        }
        match eigenline_types(order.max(1), e)? {
            None => Ok((Vec::new(), p2.clone())),
            Some(types) => {
                let stage = quotient_by_fixed_points("P2/G", order, p2.clone(), vec![], &types)?;
                let fixed = names
                    .into_iter()
                    .zip(types)
                    .map(|(location, local_type)| LocalFixedPoint {
                        stage: 1,
                        location,
                        local_type,
                    })
                    .collect();
                Ok((fixed, stage))
            }
        }
    };
    let (fixed_points, stages) = match *action {
        MonomialAction::Diagonal { order, weights } => {
            let (fixed, stage) = single(order, weights, COORDINATE_POINTS.map(String::from))?;
            (fixed, vec![stage])
        }
        MonomialAction::CyclicPermutation => {
            let names = [0, 1, 2].map(|k| format!("(1:w^{k}:w^{})", 2 * k % 3));
            let (fixed, stage) = single(3, [0, 1, 2], names)?;
            (fixed, vec![stage])
        }
        MonomialAction::Generated { sigma } => {
            let (mut fixed, stage1) = single(3, sigma, COORDINATE_POINTS.map(String::from))?;
            if stage1.singularities().len() != 3 {
                return Err(CoverError::UnsupportedAction(
                    "the diagonal generator must have three isolated fixed points".into(),
                ));
            }
            // Projective commutation with the 3-cycle: the weight differences
            // must be constant modulo 3.
            let d = |i: usize, j: usize| (sigma[j] % 3 + 3 - sigma[i] % 3) % 3;
            if d(0, 1) != d(1, 2) || d(1, 2) != d(2, 0) {
                return Err(CoverError::UnsupportedAction(
                    "the generators do not commute projectively".into(),
                ));
            }
            // The permutation moves the three coordinate points in one free
            // orbit. Each element σ^k·τ is a monomial 3-cycle, so its cube is
            // scalar and its eigen-exponents are (0,1,2); its three fixed
            // points form one free orbit of σ and give one fixed point of τ
            // on the first quotient.
            let types = eigenline_types(3, [0, 1, 2])?.expect("distinct exponents");
            let images: Vec<_> = (0..3).map(|_| types[0]).collect();
            let stage2 =
                quotient_by_fixed_points("P2/G", 3, stage1.clone(), vec![vec![0, 1, 2]], &images)?;
            fixed.extend((0..3).map(|k| LocalFixedPoint {
                stage: 2,
                location: format!("image of Fix(sigma^{k}*tau)"),
                local_type: types[0],
            }));
            (fixed, vec![stage1.with_label("P2/<sigma>"), stage2])
        }
    };
    Ok(P2QuotientAnalysis {
        action: *action,
        fixed_points,
        stages,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::ledger::qhpp_check;
    use num_bigint::BigInt;

    #[test]
    fn diagonal_order_three() {
        let a = p2_quotient_analysis(&"diag(0,1,2)".parse().unwrap()).unwrap();
        let z = a.quotient();
        assert_eq!(z.singularities(), &[CyclicQuotientSingularity::cusp(); 3]);
        assert_eq!((z.resolution_k2().clone(), z.resolution_e()), (int(3), 9));
        let r = qhpp_check(z);
        assert_eq!(r.square_criterion_value, Some(BigInt::from(81)));
        assert!(r.is_qhpp_candidate);
    }

    #[test]
    fn identity_gives_plane() {
        let a = p2_quotient_analysis(&MonomialAction::identity()).unwrap();
        assert_eq!(a.quotient(), &SurfaceLedger::projective_plane());
        assert!(a.fixed_points.is_empty());
    }

    #[test]
    fn reflection_is_unsupported() {
        assert!(matches!(
            p2_quotient_analysis(&"diag(0,0,1)".parse().unwrap()),
            Err(CoverError::UnsupportedAction(_))
        ));
    }

    #[test]
    fn order_nine_group_gives_four_cusps() {
        let a = p2_quotient_analysis(&"diag(0,1,2)+cycle".parse().unwrap()).unwrap();
        let z = a.quotient();
        assert_eq!(z.singularities(), &[CyclicQuotientSingularity::cusp(); 4]);
        assert_eq!((z.resolution_k2().clone(), z.resolution_e()), (int(1), 11));
        assert_eq!(a.stages.len(), 2);
        assert_eq!(a.fixed_points.len(), 6);
    }

    #[test]
    fn order_seven_diagonal() {
        let a = p2_quotient_analysis(&"diag[7](0,1,3)".parse().unwrap()).unwrap();
        let types: Vec<String> = a
            .fixed_points
            .iter()
            .map(|f| f.local_type.to_string())
            .collect();
        assert_eq!(types, ["1/7(1,3)"; 3]);
        assert!(a.quotient().noether_holds());
    }

    #[test]
    fn display_roundtrip() {
        for s in [
            "identity",
            "cycle",
            "diag(0,1,2)",
            "diag[7](0,1,3)",
            "diag(0,1,2)+cycle",
        ] {
            let a: MonomialAction = s.parse().unwrap();
            assert_eq!(a.to_string(), s);
        }
        assert!("diag(1,2)".parse::<MonomialAction>().is_err());
    }
}
