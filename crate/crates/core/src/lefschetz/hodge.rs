//! Enumeration of the traces σ can have on cohomology.
//!
//! σ acts on `H^{0,1}` and `H^{0,2}` with eigenvalues `ζ^e`; the conjugate
//! eigenvalues sit on `H^{1,0}` and `H^{2,0}`. On `H^{1,1}` the eigenvalues
//! other than 1 come in full Galois orbits of size `p − 1`, each of trace −1,
//! so `Tr(σ | H^{1,1}) = inv − orbits` with `inv + orbits·(p − 1) = h^{1,1}`.

use std::collections::HashSet;

use serde::Serialize;

use super::coefficients::{holomorphic_lhs, power_traces};
use crate::error::LefschetzError;
use crate::exact::{is_odd_prime, to_i64, CyclotomicElement, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeTraceQuery {
    pub p: u32,
    pub pg: u32,
    pub q: u32,
    pub h11_rank: u32,
    /// Dimension of the part of `H^{1,1}` known to be invariant.
    pub forced_invariant_h11: u32,
    /// Drop cases with no fixed points.
    pub forbid_free_action: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeTraceCase {
    /// Exponents `e` of the eigenvalues `ζ^e` on `H^{0,1}`.
    pub eigen_h01: Vec<u32>,
    /// Exponents on `H^{0,2}`.
    pub eigen_h02: Vec<u32>,
    pub tr_h1: i64,
    /// Trace on `H^{2,0} ⊕ H^{0,2}`.
    pub tr_h20_h02: i64,
    pub tr_h11: i64,
    pub tr_h2: i64,
    pub euler_fixed: i64,
    pub quotient_pg: u32,
    pub quotient_q: u32,
    /// Rank of the invariant part of `H²`.
    pub quotient_b2: u32,
    /// Averaged holomorphic Lefschetz number.
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub lhs: Rational,
}

/// Nondecreasing sequences of length `k` over `0..p`.
fn multisets(p: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k as usize);
    fn rec(p: u32, k: u32, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k as usize {
            out.push(cur.clone());
            return;
        }
        for e in start..p {
            cur.push(e);
            rec(p, k, e, cur, out);
            cur.pop();
        }
    }
    rec(p, k, 0, &mut cur, &mut out);
    out
}

/// `Σ (ζ^e + ζ^{−e})` when it is an integer.
fn real_trace(p: u32, exponents: &[u32]) -> Result<Option<i64>, LefschetzError> {
    let mut t = CyclotomicElement::zero(p)?;
    for &e in exponents {
        t = &t + &CyclotomicElement::zeta_power(p, e as i64)?;
        t = &t + &CyclotomicElement::zeta_power(p, -(e as i64))?;
    }
    Ok(t.as_rational().and_then(|x| to_i64(&x)))
}

pub fn hodge_trace_enumerate(
    query: &HodgeTraceQuery,
) -> Result<Vec<HodgeTraceCase>, LefschetzError> {
    let p = query.p;
    if !is_odd_prime(p) {
        return Err(LefschetzError::NotOddPrime(p));
    }
    if query.forced_invariant_h11 > query.h11_rank {
        return Err(LefschetzError::ForcedExceedsRank {
            forced: query.forced_invariant_h11,
            rank: query.h11_rank,
        });
    }
    let h11_options: Vec<(u32, u32)> = (0..=query.h11_rank / (p - 1))
        .map(|orbits| (query.h11_rank - orbits * (p - 1), orbits))
        .filter(|&(inv, _)| inv >= query.forced_invariant_h11)
        .collect();

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for h01 in multisets(p, query.q) {
        let Some(tr_h1) = real_trace(p, &h01)? else {
            continue;
        };
        let traces01 = power_traces(p, &h01)?;
        for h02 in multisets(p, query.pg) {
            let Some(tr_h20_h02) = real_trace(p, &h02)? else {
                continue;
            };
            let lhs = holomorphic_lhs(p, &traces01, &power_traces(p, &h02)?)?;
            let quotient_q = h01.iter().filter(|&&e| e == 0).count() as u32;
            let quotient_pg = h02.iter().filter(|&&e| e == 0).count() as u32;
            for &(inv, orbits) in &h11_options {
                let tr_h11 = inv as i64 - orbits as i64;
                let tr_h2 = tr_h20_h02 + tr_h11;
                let euler_fixed = 2 - 2 * tr_h1 + tr_h2;
                if query.forbid_free_action && euler_fixed == 0 {
                    continue;
                }
                let key = (
                    tr_h1,
                    tr_h20_h02,
                    tr_h11,
                    quotient_pg,
                    quotient_q,
                    lhs.clone(),
                );
                if !seen.insert(key) {
                    continue;
                }
                out.push(HodgeTraceCase {
                    eigen_h01: h01.clone(),
                    eigen_h02: h02.clone(),
                    tr_h1,
                    tr_h20_h02,
                    tr_h11,
                    tr_h2,
                    euler_fixed,
                    quotient_pg,
                    quotient_q,
                    quotient_b2: inv + 2 * quotient_pg,
                    lhs: lhs.clone(),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn query(p: u32, pg: u32, q: u32, h11: u32, forced: u32, forbid: bool) -> HodgeTraceQuery {
        HodgeTraceQuery {
            p,
            pg,
            q,
            h11_rank: h11,
            forced_invariant_h11: forced,
            forbid_free_action: forbid,
        }
    }

    #[test]
    fn order_three_irregular_surface() {
        let cases = hodge_trace_enumerate(&query(3, 1, 1, 3, 2, true)).unwrap();
        let mut sig: Vec<_> = cases
            .iter()
            .map(|c| {
                (
                    c.quotient_pg,
                    c.quotient_q,
                    c.euler_fixed,
                    c.tr_h11,
                    c.lhs.clone(),
                )
            })
            .collect();
        sig.sort();
        assert_eq!(
            sig,
            vec![
                (0, 0, 6, 3, int(1)),
                (1, 0, 9, 3, ratio(5, 2)),
                (1, 1, 3, 3, int(1)),
            ]
        );
        let all = hodge_trace_enumerate(&query(3, 1, 1, 3, 2, false)).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all
            .iter()
            .any(|c| c.euler_fixed == 0 && (c.quotient_pg, c.quotient_q) == (0, 1)));
    }

    #[test]
    fn abelian_surface() {
        let cases = hodge_trace_enumerate(&query(3, 1, 2, 4, 1, false)).unwrap();
        let mut tr: Vec<_> = cases
            .iter()
            .filter(|c| c.quotient_pg == 0)
            .map(|c| (c.tr_h11, c.quotient_b2))
            .collect();
        tr.sort();
        tr.dedup();
        assert_eq!(tr, vec![(1, 2), (4, 4)]);
    }

    #[test]
    fn order_seven_forces_invariance() {
        let cases = hodge_trace_enumerate(&query(7, 2, 2, 5, 1, true)).unwrap();
        assert_eq!(cases.len(), 1);
        let c = &cases[0];
        assert_eq!((c.tr_h1, c.tr_h2, c.euler_fixed), (4, 9, 3));
        assert_eq!(c.lhs, int(1));
    }

    #[test]
    fn regular_surface_single_case() {
        let cases = hodge_trace_enumerate(&query(7, 0, 0, 1, 1, true)).unwrap();
        assert_eq!(cases.len(), 1);
        assert_eq!((cases[0].tr_h2, cases[0].euler_fixed), (1, 3));
    }

    #[test]
    fn forced_exceeds_rank() {
        assert_eq!(
            hodge_trace_enumerate(&query(3, 0, 0, 1, 2, false)),
            Err(LefschetzError::ForcedExceedsRank { forced: 2, rank: 1 })
        );
    }
}
