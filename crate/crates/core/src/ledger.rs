//! Invariant ledgers for a normal surface and its minimal resolution.
//!
//! A ledger records hypotheses (K² and e of the resolution, p_g, q, the
//! singular points) and derives the invariants of the singular surface:
//!
//! * `K_S² = K_{S'}² − Σ_p D_p²`
//! * `e(S) = e(S') − Σ_p m_p`, where `m_p` is the length of the chain over `p`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::LedgerError;
use crate::exact::{int, is_perfect_square, Rational};
use crate::singularity::{discrepancy, CyclicQuotientSingularity};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceLedger {
    label: String,
    #[serde(rename = "K2", serialize_with = "crate::serde_util::rational")]
    resolution_k2: Rational,
    #[serde(rename = "e")]
    resolution_e: i64,
    pg: u32,
    q: u32,
    singularities: Vec<CyclicQuotientSingularity>,
}

impl SurfaceLedger {
    /// Checks Noether's identity `K² + e = 12(1 − q + p_g)` on the resolution.
    pub fn new(
        label: impl Into<String>,
        resolution_k2: Rational,
        resolution_e: i64,
        pg: u32,
        q: u32,
        singularities: Vec<CyclicQuotientSingularity>,
    ) -> Result<Self, LedgerError> {
        let ledger = SurfaceLedger {
            label: label.into(),
            resolution_k2,
            resolution_e,
            pg,
            q,
            singularities,
        };
        if !ledger.noether_holds() {
            return Err(LedgerError::NoetherViolation {
                label: ledger.label.clone(),
                lhs: (&ledger.resolution_k2 + int(ledger.resolution_e)).to_string(),
                rhs: ledger.twelve_chi(),
            });
        }
        Ok(ledger)
    }

    /// The projective plane: K² = 9, e = 3.
    pub fn projective_plane() -> Self {
        SurfaceLedger::new("P2", int(9), 3, 0, 0, Vec::new()).expect("P2 satisfies Noether")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn resolution_k2(&self) -> &Rational {
        &self.resolution_k2
    }

    pub fn resolution_e(&self) -> i64 {
        self.resolution_e
    }

    pub fn pg(&self) -> u32 {
        self.pg
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn singularities(&self) -> &[CyclicQuotientSingularity] {
        &self.singularities
    }

    fn twelve_chi(&self) -> i64 {
        12 * (1 - self.q as i64 + self.pg as i64)
    }

    pub fn noether_holds(&self) -> bool {
        &self.resolution_k2 + int(self.resolution_e) == int(self.twelve_chi())
    }

    /// b₂ of the resolution: `e = 2 − 2b₁ + b₂` with `b₁ = 2q`.
    pub fn resolution_b2(&self) -> i64 {
        self.resolution_e - 2 + 4 * self.q as i64
    }

    /// Number of exceptional curves over all singular points.
    pub fn exceptional_curve_count(&self) -> usize {
        self.singularities.iter().map(|s| s.resolve().len()).sum()
    }

    /// Picard rank of the resolution, available only when p_g = 0 (then it
    /// equals b₂).
    pub fn picard_rank(&self) -> Result<i64, LedgerError> {
        if self.pg != 0 {
            return Err(LedgerError::IrregularLedger(self.label.clone()));
        }
        Ok(self.resolution_b2())
    }

    /// Product of the local group orders `Π n_p`.
    pub fn local_order_product(&self) -> BigInt {
        self.singularities
            .iter()
            .fold(BigInt::from(1), |acc, s| acc * s.order())
    }
}

impl fmt::Display for SurfaceLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: K2={} e={} pg={} q={} sing=[{}]",
            self.label,
            self.resolution_k2,
            self.resolution_e,
            self.pg,
            self.q,
            format_singularities(&self.singularities)
        )
    }
}

/// Groups equal singularities: `3x1/3(1,2), 1/7(1,5)`.
pub fn format_singularities(list: &[CyclicQuotientSingularity]) -> String {
    let mut groups: Vec<(CyclicQuotientSingularity, usize)> = Vec::new();
    for s in list {
        match groups.iter_mut().find(|(t, _)| t == s) {
            Some((_, c)) => *c += 1,
            None => groups.push((*s, 1)),
        }
    }
    groups
        .iter()
        .map(|(s, c)| {
            if *c == 1 {
                s.to_string()
            } else {
                format!("{c}x{s}")
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedInvariants {
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub k2_singular: Rational,
    pub e_singular: i64,
    pub e_smooth_part: i64,
}

pub fn derived_invariants(ledger: &SurfaceLedger) -> DerivedInvariants {
    let mut k2 = ledger.resolution_k2.clone();
    let mut e_smooth = ledger.resolution_e;
    for s in &ledger.singularities {
        let chain = s.resolve();
        k2 -= discrepancy(&chain).self_square;
        e_smooth -= chain.euler_number();
    }
    DerivedInvariants {
        k2_singular: k2,
        e_singular: e_smooth + ledger.singularities.len() as i64,
        e_smooth_part: e_smooth,
    }
}

/// Numerical test for a Q-homology projective plane with quotient singularities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QhppReport {
    pub is_qhpp_candidate: bool,
    pub b2_singular: i64,
    /// `(Π n_p)·K_Z²` when that number is an integer; `None` means the square
    /// criterion does not apply.
    #[serde(serialize_with = "crate::serde_util::opt_bigint")]
    pub square_criterion_value: Option<BigInt>,
    pub square_criterion_holds: bool,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub k2_singular: Rational,
}

impl QhppReport {
    pub fn square_criterion_applicable(&self) -> bool {
        self.square_criterion_value.is_some()
    }
}

pub fn qhpp_check(ledger: &SurfaceLedger) -> QhppReport {
    let derived = derived_invariants(ledger);
    let b2_singular = ledger.resolution_b2() - ledger.exceptional_curve_count() as i64;
    let scaled = Rational::from_integer(ledger.local_order_product()) * &derived.k2_singular;
    let square_criterion_value = scaled.is_integer().then(|| scaled.to_integer());
    let square_criterion_holds = square_criterion_value
        .as_ref()
        .is_some_and(|v| v.is_positive() && is_perfect_square(v));
    let regular = ledger.pg == 0 && ledger.q == 0;
    QhppReport {
        is_qhpp_candidate: regular
            && b2_singular == 1
            && square_criterion_holds
            && derived.k2_singular.is_positive(),
        b2_singular,
        square_criterion_value,
        square_criterion_holds,
        k2_singular: derived.k2_singular,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspScanRow {
    pub k: u32,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub value: BigInt,
    pub is_square: bool,
}

/// `3^k·(9 − 2k)` for k cusps on a Q-homology plane whose resolution has
/// K² = 9 − 2k, for `k = 1..=kmax`.
pub fn cusp_count_scan(kmax: u32) -> Vec<CuspScanRow> {
    (1..=kmax)
        .map(|k| {
            let value = BigInt::from(3).pow(k) * (9 - 2 * k as i64);
            let is_square = is_perfect_square(&value);
            CuspScanRow {
                k,
                value,
                is_square,
            }
        })
        .collect()
}

/// Lower bound on the Picard rank when `curves` independent curves lie in
/// fibres of a fibration over a curve: the fibre class and a horizontal
/// class add two more.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibredRankBound {
    pub required: i64,
    pub available: i64,
    pub overrun: bool,
}

pub fn fibred_rank_bound(
    ledger: &SurfaceLedger,
    curves_in_fibres: usize,
) -> Result<FibredRankBound, LedgerError> {
    let available = ledger.picard_rank()?;
    let required = curves_in_fibres as i64 + 2;
    Ok(FibredRankBound {
        required,
        available,
        overrun: required > available,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn cusps(k: usize) -> Vec<CyclicQuotientSingularity> {
        vec![CyclicQuotientSingularity::cusp(); k]
    }

    fn seven(k: usize) -> Vec<CyclicQuotientSingularity> {
        vec![CyclicQuotientSingularity::new(7, 5).unwrap(); k]
    }

    #[test]
    fn three_cusps_on_k2_three() {
        let l = SurfaceLedger::new("Z", int(3), 9, 0, 0, cusps(3)).unwrap();
        let d = derived_invariants(&l);
        assert_eq!(
            (d.k2_singular, d.e_singular, d.e_smooth_part),
            (int(3), 3, 0)
        );
    }

    #[test]
    fn three_seven_points_on_elliptic() {
        let l = SurfaceLedger::new("Z", int(0), 12, 0, 0, seven(3)).unwrap();
        let d = derived_invariants(&l);
        assert_eq!(
            (d.k2_singular, d.e_singular, d.e_smooth_part),
            (ratio(9, 7), 3, 0)
        );
    }

    #[test]
    fn smooth_ledger_is_unchanged() {
        let l = SurfaceLedger::new("X", int(9), 3, 0, 0, vec![]).unwrap();
        let d = derived_invariants(&l);
        assert_eq!(
            (d.k2_singular, d.e_singular, d.e_smooth_part),
            (int(9), 3, 3)
        );
    }

    #[test]
    fn noether_is_enforced() {
        let err = SurfaceLedger::new("bad", int(3), 8, 0, 0, vec![]).unwrap_err();
        assert!(matches!(err, LedgerError::NoetherViolation { rhs: 12, .. }));
        for (k2, e) in [(3, 9), (1, 11), (0, 12), (9, 3)] {
            assert!(SurfaceLedger::new("ok", int(k2), e, 0, 0, vec![]).is_ok());
        }
        // p_g = q = 1: 12χ = 12
        assert!(SurfaceLedger::new("pq1", int(9), 3, 1, 1, vec![]).is_ok());
    }

    #[test]
    fn qhpp_four_cusps() {
        let l = SurfaceLedger::new("Z", int(1), 11, 0, 0, cusps(4)).unwrap();
        let r = qhpp_check(&l);
        assert_eq!(r.b2_singular, 1);
        assert_eq!(r.square_criterion_value, Some(BigInt::from(81)));
        assert!(r.square_criterion_holds);
        assert!(r.is_qhpp_candidate);
    }

    #[test]
    fn qhpp_two_cusps_fails_square() {
        let l = SurfaceLedger::new("Z", int(5), 7, 0, 0, cusps(2)).unwrap();
        let r = qhpp_check(&l);
        assert_eq!(r.b2_singular, 1);
        assert_eq!(r.square_criterion_value, Some(BigInt::from(45)));
        assert!(!r.square_criterion_holds);
        assert!(!r.is_qhpp_candidate);
    }

    #[test]
    fn qhpp_fake_plane_itself() {
        let l = SurfaceLedger::new("X", int(9), 3, 0, 0, vec![]).unwrap();
        let r = qhpp_check(&l);
        assert_eq!(r.b2_singular, 1);
        assert_eq!(r.square_criterion_value, Some(BigInt::from(9)));
        assert!(r.is_qhpp_candidate);
    }

    #[test]
    fn qhpp_irregular_is_not_candidate() {
        let l = SurfaceLedger::new("M", int(9), 3, 1, 1, vec![]).unwrap();
        assert!(!qhpp_check(&l).is_qhpp_candidate);
    }

    #[test]
    fn square_criterion_on_non_cusp_points() {
        // 1/4(1,1): one (-4)-curve, D² = -1, so K_Z² = 9 and 4·9 = 36.
        let l = SurfaceLedger::new(
            "quartic-point",
            int(8),
            4,
            0,
            0,
            vec![CyclicQuotientSingularity::new(4, 1).unwrap()],
        )
        .unwrap();
        assert_eq!(
            qhpp_check(&l).square_criterion_value,
            Some(BigInt::from(36))
        );

        // 1/9(1,1): one (-9)-curve, D² = -49/9, so 9·(8 + 49/9) = 121.
        let z = SurfaceLedger::new(
            "nonic-point",
            int(8),
            4,
            0,
            0,
            vec![CyclicQuotientSingularity::new(9, 1).unwrap()],
        )
        .unwrap();
        assert_eq!(
            qhpp_check(&z).square_criterion_value,
            Some(BigInt::from(121))
        );
    }

    #[test]
    fn cusp_scan_values() {
        let rows = cusp_count_scan(5);
        let values: Vec<i64> = rows
            .iter()
            .map(|r| i64::try_from(&r.value).unwrap())
            .collect();
        assert_eq!(values, [21, 45, 81, 81, -243]);
        let squares: Vec<u32> = rows.iter().filter(|r| r.is_square).map(|r| r.k).collect();
        assert_eq!(squares, [3, 4]);
    }

    #[test]
    fn rank_bound_overrun() {
        let l = SurfaceLedger::new("Z", int(1), 11, 0, 0, cusps(4)).unwrap();
        let b = fibred_rank_bound(&l, 8).unwrap();
        assert_eq!((b.required, b.available, b.overrun), (10, 9, true));
        let irregular = SurfaceLedger::new("M", int(9), 3, 1, 1, vec![]).unwrap();
        assert!(fibred_rank_bound(&irregular, 0).is_err());
    }

    #[test]
    fn singularity_listing() {
        let mut s = cusps(3);
        s.extend(seven(1));
        assert_eq!(format_singularities(&s), "3x1/3(1,2), 1/7(1,5)");
    }
}
