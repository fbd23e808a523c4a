//! Elements of the cyclotomic field Q(ζ_p) for an odd prime p.
//!
//! An element is stored in the basis 1, ζ, …, ζ^{p-2}; any polynomial in ζ is
//! reduced with ζ^p = 1 and ζ^{p-1} = -(1 + ζ + … + ζ^{p-2}), so the
//! representation is canonical and equality is coefficient-wise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::primes::is_odd_prime;
use super::rational::Rational;
use crate::error::ExactError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    p: u32,
    coeffs: Vec<Rational>,
}

impl CyclotomicElement {
    /// Reduces `Σ poly[k]·ζ^k` (any length) into canonical form.
    pub fn from_poly(p: u32, poly: &[Rational]) -> Result<Self, ExactError> {
        check_conductor(p)?;
        Ok(Self::reduce(
            p,
            poly.iter().enumerate().map(|(k, c)| (k as u64, c.clone())),
        ))
    }

    fn reduce(p: u32, terms: impl Iterator<Item = (u64, Rational)>) -> Self {
        let pu = p as usize;
        let mut full = vec![Rational::zero(); pu];
        for (k, c) in terms {
            full[(k % p as u64) as usize] += c;
        }
        let top = full.pop().unwrap();
        if !top.is_zero() {
            for c in full.iter_mut() {
                *c -= &top;
            }
        }
        CyclotomicElement { p, coeffs: full }
    }

    pub fn zero(p: u32) -> Result<Self, ExactError> {
        Self::from_rational(p, Rational::zero())
    }

    pub fn one(p: u32) -> Result<Self, ExactError> {
        Self::from_rational(p, Rational::one())
    }

    pub fn from_rational(p: u32, value: Rational) -> Result<Self, ExactError> {
        check_conductor(p)?;
        Ok(Self::reduce(p, std::iter::once((0, value))))
    }

    /// ζ^k, with k taken modulo p.
    pub fn zeta_power(p: u32, k: i64) -> Result<Self, ExactError> {
        check_conductor(p)?;
        let e = k.rem_euclid(p as i64) as u64;
        Ok(Self::reduce(p, std::iter::once((e, Rational::one()))))
    }

    pub fn conductor(&self) -> u32 {
        self.p
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value in Q when every non-constant coefficient vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The Galois automorphism ζ ↦ ζ^k (k must be a unit modulo p).
    pub fn galois(&self, k: u32) -> Self {
        debug_assert!(!k.is_multiple_of(self.p));
        let p = self.p as u64;
        Self::reduce(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| ((e as u64 * k as u64) % p, c.clone())),
        )
    }

    /// Trace down to Q: sum of all Galois conjugates.
    pub fn trace(&self) -> Rational {
        // Tr(1) = p - 1, Tr(ζ^e) = -1 for 0 < e < p.
        let rest = self.coeffs[1..]
            .iter()
            .fold(Rational::zero(), |acc, c| acc + c);
        &self.coeffs[0] * Rational::from_integer((self.p - 1).into()) - rest
    }

    /// Complex conjugate, ζ ↦ ζ^{-1}.
    pub fn conjugate(&self) -> Self {
        self.galois(self.p - 1)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        CyclotomicElement {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_field(other)?;
        Ok(CyclotomicElement {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_field(other)?;
        let mut terms = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    terms.push(((i + j) as u64, a * b));
                }
            }
        }
        Ok(Self::reduce(self.p, terms.into_iter()))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_p.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let phi: Poly = vec![Rational::one(); self.p as usize];
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Φ_p is irreducible, so the gcd r0 is a nonzero constant.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        Ok(Self::reduce(
            self.p,
            s0.into_iter().enumerate().map(|(k, x)| (k as u64, x * &c)),
        ))
    }

    fn same_field(&self, other: &Self) -> Result<(), ExactError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(ExactError::ConductorMismatch(self.p, other.p))
        }
    }
}

pub fn cyclotomic_inverse(a: &CyclotomicElement) -> Result<CyclotomicElement, ExactError> {
    a.inverse()
}

fn check_conductor(p: u32) -> Result<(), ExactError> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(ExactError::UnsupportedConductor(p))
    }
}

type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap().recip();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let k = rem.last().unwrap() * &lead;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &k * c;
        }
        quot[shift] = k;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn add(self, rhs: Self) -> CyclotomicElement {
        self.checked_add(rhs).expect("conductor mismatch")
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn sub(self, rhs: Self) -> CyclotomicElement {
        self.checked_add(&-rhs).expect("conductor mismatch")
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn mul(self, rhs: Self) -> CyclotomicElement {
        self.checked_mul(rhs).expect("conductor mismatch")
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};

    fn el(p: u32, c: &[Rational]) -> CyclotomicElement {
        CyclotomicElement::from_poly(p, c).unwrap()
    }

    #[test]
    fn inverse_of_one() {
        let one = CyclotomicElement::one(5).unwrap();
        assert_eq!(one.inverse().unwrap(), one);
    }

    #[test]
    fn inverse_of_zeta_mod_three() {
        let z = CyclotomicElement::zeta_power(3, 1).unwrap();
        // ζ^{-1} = ζ² = -1 - ζ
        assert_eq!(z.inverse().unwrap(), el(3, &[int(-1), int(-1)]));
    }

    #[test]
    fn inverse_of_one_minus_zeta() {
        let a = el(3, &[int(1), int(-1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, el(3, &[ratio(2, 3), ratio(1, 3)]));
        // (1 - ζ)(2 + ζ) = 2 - ζ - ζ² = 3 with ζ² = -1 - ζ
        let check = &a * &el(3, &[int(2), int(1)]);
        assert_eq!(check.as_rational(), Some(int(3)));
    }

    #[test]
    fn zero_has_no_inverse() {
        let z = CyclotomicElement::zero(7).unwrap();
        assert_eq!(z.inverse(), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn reduction_is_canonical() {
        // 1 + ζ + ζ² + ... + ζ^6 = 0 in Q(ζ_7)
        let all = el(7, &vec![int(1); 7]);
        assert!(all.is_zero());
        assert_eq!(
            CyclotomicElement::zeta_power(7, 9).unwrap(),
            CyclotomicElement::zeta_power(7, 2).unwrap()
        );
    }

    #[test]
    fn traces() {
        let z = CyclotomicElement::zeta_power(7, 3).unwrap();
        assert_eq!(z.trace(), int(-1));
        assert_eq!(CyclotomicElement::one(7).unwrap().trace(), int(6));
    }

    #[test]
    fn even_or_composite_conductors_rejected() {
        assert_eq!(
            CyclotomicElement::one(9),
            Err(ExactError::UnsupportedConductor(9))
        );
        assert!(CyclotomicElement::one(2).is_err());
    }

    #[test]
    fn display() {
        let a = el(5, &[ratio(2, 3), int(-1), int(0), int(3)]);
        assert_eq!(a.to_string(), "2/3 - z + 3*z^3");
    }
}
