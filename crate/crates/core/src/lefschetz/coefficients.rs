use crate::error::LefschetzError;
use crate::exact::{int, is_odd_prime, ratio, CyclotomicElement, Rational};

fn check_prime(p: u32) -> Result<(), LefschetzError> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(LefschetzError::NotOddPrime(p))
    }
}

pub(crate) fn rational_or_error(x: &CyclotomicElement) -> Result<Rational, LefschetzError> {
    x.as_rational()
        .ok_or_else(|| LefschetzError::NonRationalResult(x.to_string()))
}

/// Coefficient `a_i` of `r_i` in the averaged holomorphic formula.
pub fn a_coeff(p: u32, i: u32) -> Result<Rational, LefschetzError> {
    check_prime(p)?;
    if i == 0 || i >= p {
        return Err(LefschetzError::IndexOutOfRange { p, i });
    }
    // (1 − ζ)⁻¹ = −(1/p) Σ_j j ζ^j; the inverse of 1 − ζ^i is its conjugate under ζ ↦ ζ^i.
    let weights: Vec<Rational> = (0..p as i64).map(|j| ratio(-j, p as i64)).collect();
    let inv = CyclotomicElement::from_poly(p, &weights)?;
    let base = &inv * &inv.galois(i);
    Ok(base.trace() / int((p - 1) as i64))
}

/// `[a_1, …, a_{p−1}]`.
pub fn a_coefficients(p: u32) -> Result<Vec<Rational>, LefschetzError> {
    (1..p).map(|i| a_coeff(p, i)).collect()
}

/// Traces of `σ^i` for `i = 1..p−1` on a space where σ acts with
/// eigenvalues `ζ^e`, `e ∈ exponents`.
pub fn power_traces(p: u32, exponents: &[u32]) -> Result<Vec<CyclotomicElement>, LefschetzError> {
    check_prime(p)?;
    (1..p)
        .map(|i| {
            let mut t = CyclotomicElement::zero(p)?;
            for &e in exponents {
                t = &t + &CyclotomicElement::zeta_power(p, i as i64 * e as i64)?;
            }
            Ok(t)
        })
        .collect()
}

/// `(1/(p−1)) Σ_i (1 − Tr(σ^i | H^{0,1}) + Tr(σ^i | H^{0,2}))`.
pub fn holomorphic_lhs(
    p: u32,
    tr_h01: &[CyclotomicElement],
    tr_h02: &[CyclotomicElement],
) -> Result<Rational, LefschetzError> {
    check_prime(p)?;
    let expected = (p - 1) as usize;
    for found in [tr_h01.len(), tr_h02.len()] {
        if found != expected {
            return Err(LefschetzError::TraceCount { expected, found });
        }
    }
    let one = CyclotomicElement::one(p)?;
    let mut sum = CyclotomicElement::zero(p)?;
    for (a, b) in tr_h01.iter().zip(tr_h02) {
        let term = (&one - a).checked_add(b)?;
        sum = sum.checked_add(&term)?;
    }
    Ok(rational_or_error(&sum)? / int(expected as i64))
}
