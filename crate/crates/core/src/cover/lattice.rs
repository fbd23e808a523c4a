//! Discriminant groups of exceptional-curve lattices.
//!
//! The sublattice `R` spanned by the exceptional curves has discriminant
//! group `Z^r / M·Z^r` for the block-diagonal intersection matrix `M`. Its
//! structure is read off the Smith normal form. If the cover branched over
//! these points exists, `R` has to be glued to its orthogonal complement in
//! `H²(·, Z)` modulo torsion, which needs `length(disc R) ≤ rank(R^⊥)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::CoverError;
use crate::exact::{smith_normal_form, IntMatrix};
use crate::singularity::ExceptionalChain;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantCertificate {
    pub p: u32,
    pub exceptional_rank: usize,
    pub ambient_rank: usize,
    /// Diagonal of the Smith form, unit entries included.
    #[serde(serialize_with = "crate::serde_util::bigints")]
    pub elementary_divisors: Vec<BigInt>,
    pub is_p_elementary: bool,
    /// Minimal number of generators of the discriminant group.
    pub length: usize,
    pub complement_rank: usize,
    /// `length > complement_rank`: the overlattice cannot be unimodular.
    pub glue_required: bool,
    /// Hypotheses the certificate relies on but does not verify.
    pub assumptions: Vec<String>,
}

impl DiscriminantCertificate {
    pub fn nontrivial_divisors(&self) -> Vec<BigInt> {
        self.elementary_divisors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

pub fn discriminant_certificate(
    p: u32,
    chains: &[ExceptionalChain],
    ambient_rank: usize,
) -> Result<DiscriminantCertificate, CoverError> {
    let exceptional_rank: usize = chains.iter().map(ExceptionalChain::len).sum();
    if exceptional_rank > ambient_rank {
        return Err(CoverError::AmbientRankTooSmall {
            ambient: ambient_rank,
            required: exceptional_rank,
        });
    }
    let elementary_divisors = if chains.is_empty() {
        Vec::new()
    } else {
        let blocks: Vec<IntMatrix> = chains
            .iter()
            .map(ExceptionalChain::intersection_matrix)
            .collect();
        smith_normal_form(&IntMatrix::block_diagonal(&blocks)).elementary_divisors()
    };
    let prime = BigInt::from(p);
    let nontrivial = elementary_divisors.iter().filter(|d| !d.is_one());
    let length = nontrivial.clone().count();
    let is_p_elementary = nontrivial.clone().all(|d| *d == prime);
    debug_assert!(elementary_divisors.iter().all(|d| !d.is_zero()));
    let complement_rank = ambient_rank - exceptional_rank;

    let mut assumptions = vec![
        "H^2 modulo torsion is unimodular of the given rank".to_string(),
        format!(
            "the torsion twist needed for an unramified cyclic p-power cover (p = {p}) is assumed, not constructed"
        ),
        format!("branch divisor coefficients lie in 1..{} and are not checked", p.saturating_sub(1)),
    ];
    if p == 7 {
        assumptions.push(
            "the (2,4)-elliptic parity condition on the branch divisor is recorded, not verified"
                .to_string(),
        );
    }

    Ok(DiscriminantCertificate {
        p,
        exceptional_rank,
        ambient_rank,
        elementary_divisors,
        is_p_elementary,
        length,
        complement_rank,
        glue_required: length > complement_rank,
        assumptions,
    })
}
