//! Elliptic fibrations: Kodaira fibres, configurations holding given
//! (−2)-chains, and cyclic triple base change.

mod base_change;
mod catalog;
mod enumerate;

pub use base_change::{
    base_change_degree3, BaseChangeResult, FiberCover, FiberImage, GeneralFiber,
};
pub use catalog::{DualGraph, KodairaFiberType};
pub use enumerate::{
    enumerate_configurations, ChainPlacement, Fiber, FiberConfiguration, ForcedIncidence,
    Multisection,
};

use crate::error::FibrationError;

/// Whether multiple fibres of multiplicities `a` and `b` fit the
/// configuration: every declared multiple fibre must be of type `I_n`, and
/// the declared multiplicities above 1 must be among `{a, b}`. Multiplicities
/// not declared go on smooth fibres.
pub fn multiple_fiber_consistency(a: u32, b: u32, config: &FiberConfiguration) -> bool {
    let mut available: Vec<u32> = [a, b].into_iter().filter(|&m| m > 1).collect();
    for f in config.fibers.iter().filter(|f| f.multiplicity > 1) {
        if !f.kind.allows_multiple() {
            return false;
        }
        match available.iter().position(|&m| m == f.multiplicity) {
            Some(i) => {
                available.swap_remove(i);
            }
            None => return false,
        }
    }
    true
}

/// Number of totally ramified points of a cyclic cover of degree `degree`
/// from a curve of genus `cover_genus` to one of genus `base_genus`:
/// `2g' − 2 = d(2g − 2) + b(d − 1)`.
pub fn hurwitz_branch_count(
    degree: u32,
    base_genus: u32,
    cover_genus: u32,
) -> Result<u32, FibrationError> {
    if degree < 2 {
        return Err(FibrationError::InvalidDegree);
    }
    let d = degree as i64;
    let rhs = (2 * cover_genus as i64 - 2) - d * (2 * base_genus as i64 - 2);
    if rhs < 0 || rhs % (d - 1) != 0 {
        return Err(FibrationError::NonIntegralSolution);
    }
    Ok((rhs / (d - 1)) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fibers(spec: &[(&str, u32)]) -> FiberConfiguration {
        FiberConfiguration::from_fibers(
            spec.iter()
                .map(|(k, m)| Fiber::with_multiplicity(k.parse().unwrap(), *m))
                .collect(),
        )
    }

    #[test]
    fn hurwitz_examples() {
        assert_eq!(hurwitz_branch_count(3, 0, 0), Ok(2));
        assert_eq!(hurwitz_branch_count(7, 0, 0), Ok(2));
        assert_eq!(hurwitz_branch_count(3, 0, 1), Ok(3));
        assert_eq!(hurwitz_branch_count(2, 0, 1), Ok(4));
        assert_eq!(
            hurwitz_branch_count(3, 1, 0),
            Err(FibrationError::NonIntegralSolution)
        );
        assert_eq!(
            hurwitz_branch_count(5, 0, 1),
            Err(FibrationError::NonIntegralSolution)
        );
        assert_eq!(
            hurwitz_branch_count(1, 0, 0),
            Err(FibrationError::InvalidDegree)
        );
    }

    #[test]
    fn multiple_fibres() {
        let c = fibers(&[("I3", 2), ("I3", 3), ("I3", 1), ("I3", 1)]);
        assert!(multiple_fiber_consistency(2, 3, &c));
        assert!(multiple_fiber_consistency(2, 3, &fibers(&[("I3", 1); 4])));
        assert!(!multiple_fiber_consistency(
            2,
            3,
            &fibers(&[("IV*", 2), ("I3", 3)])
        ));
        assert!(!multiple_fiber_consistency(
            2,
            3,
            &fibers(&[("I3", 2), ("I3", 2)])
        ));
        assert!(multiple_fiber_consistency(
            1,
            1,
            &fibers(&[("IV*", 1), ("IV", 1)])
        ));
    }
}
