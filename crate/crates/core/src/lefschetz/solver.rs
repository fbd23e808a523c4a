use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::coefficients::a_coefficients;
use crate::error::LefschetzError;
use crate::exact::{lcm_of_denominators, mod_inverse, ratio, Rational};
use crate::singularity::CyclicQuotientSingularity;

/// A smooth curve in the fixed locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CurveComponent {
    pub genus: u32,
    pub self_square: i64,
}

impl CurveComponent {
    /// `(1 − g)/2 + (p + 1)·R²/12`.
    pub fn contribution(&self, p: u32) -> Rational {
        ratio(1 - self.genus as i64, 2) + ratio((p as i64 + 1) * self.self_square, 12)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzProblem {
    pub p: u32,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub lhs: Rational,
    /// Number of isolated fixed points.
    pub total_isolated: u32,
    pub curves: Vec<CurveComponent>,
}

impl LefschetzProblem {
    pub fn new(p: u32, lhs: Rational, total_isolated: u32) -> Self {
        LefschetzProblem {
            p,
            lhs,
            total_isolated,
            curves: Vec::new(),
        }
    }

    pub fn with_curves(mut self, curves: Vec<CurveComponent>) -> Self {
        self.curves = curves;
        self
    }

    /// The part of `lhs` carried by the isolated points.
    pub fn isolated_target(&self) -> Rational {
        self.curves
            .iter()
            .fold(self.lhs.clone(), |acc, c| acc - c.contribution(self.p))
    }
}

/// `r[i − 1]` counts isolated fixed points of type `1/p(1,i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LefschetzSolution {
    pub p: u32,
    pub r: Vec<u32>,
}

impl LefschetzSolution {
    pub fn count(&self, i: u32) -> u32 {
        self.r[(i - 1) as usize]
    }

    /// Counts grouped by isomorphism class: `1/p(1,i) ≅ 1/p(1,i⁻¹)`.
    /// Each entry lists the indices of a class and their total count.
    pub fn families(&self) -> Vec<(Vec<u32>, u32)> {
        let p = self.p as u64;
        (1..self.p)
            .filter_map(|i| {
                let j = mod_inverse(i as u64, p)? as u32;
                (i <= j).then(|| {
                    let members = if i == j { vec![i] } else { vec![i, j] };
                    let total = members.iter().map(|&k| self.count(k)).sum();
                    (members, total)
                })
            })
            .collect()
    }

    /// The singular points of the quotient, one per isolated fixed point.
    pub fn quotient_singularities(&self) -> Vec<CyclicQuotientSingularity> {
        (1..self.p)
            .flat_map(|i| {
                let s = CyclicQuotientSingularity::new(self.p as u64, i as u64)
                    .expect("prime order, unit weight");
                std::iter::repeat_n(s, self.count(i) as usize)
            })
            .collect()
    }
}

impl fmt::Display for LefschetzSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.r.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// All `r ≥ 0` with `Σ r_i = total_isolated` and
/// `Σ a_i r_i = lhs − Σ curve terms`, in lexicographic order.
pub fn solve_fixed_points(
    problem: &LefschetzProblem,
) -> Result<Vec<LefschetzSolution>, LefschetzError> {
    let p = problem.p;
    let a = a_coefficients(p)?;
    let target = problem.isolated_target();

    let scale = Rational::from_integer(lcm_of_denominators(a.iter().chain([&target])));
    let coeffs: Vec<BigInt> = a.iter().map(|x| (x * &scale).to_integer()).collect();
    let goal = &target * &scale;
    if !goal.is_integer() {
        return Ok(Vec::new());
    }
    let goal = goal.to_integer();

    let n = coeffs.len();
    let mut suffix_min = vec![BigInt::zero(); n + 1];
    let mut suffix_max = vec![BigInt::zero(); n + 1];
    for k in (0..n).rev() {
        let (lo, hi) = if k == n - 1 {
            (coeffs[k].clone(), coeffs[k].clone())
        } else {
            (
                coeffs[k].clone().min(suffix_min[k + 1].clone()),
                coeffs[k].clone().max(suffix_max[k + 1].clone()),
            )
        };
        suffix_min[k] = lo;
        suffix_max[k] = hi;
    }

    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    let search = Search {
        coeffs: &coeffs,
        suffix_min: &suffix_min,
        suffix_max: &suffix_max,
    };
    search.run(0, problem.total_isolated, goal, &mut current, &mut |r| {
        out.push(LefschetzSolution { p, r: r.to_vec() })
    });
    Ok(out)
}

struct Search<'a> {
    coeffs: &'a [BigInt],
    suffix_min: &'a [BigInt],
    suffix_max: &'a [BigInt],
}

impl Search<'_> {
    fn run(
        &self,
        k: usize,
        remaining: u32,
        goal: BigInt,
        current: &mut [u32],
        emit: &mut dyn FnMut(&[u32]),
    ) {
        let n = self.coeffs.len();
        if k == n - 1 {
            if &self.coeffs[k] * remaining == goal {
                current[k] = remaining;
                emit(current);
                current[k] = 0;
            }
            return;
        }
        let rem = BigInt::from(remaining);
        if goal < &self.suffix_min[k] * &rem || goal > &self.suffix_max[k] * &rem {
            return;
        }
        for x in 0..=remaining {
            current[k] = x;
            let next = &goal - &self.coeffs[k] * x;
            self.run(k + 1, remaining - x, next, current, emit);
        }
        current[k] = 0;
    }
}

/// Alternating sum `Σ (−1)^j t_j`; the degrees must be exactly `0..=m`.
pub fn topological_euler_fixed(traces: &[(u32, i64)]) -> Result<i64, LefschetzError> {
    let mut seen = vec![false; traces.len()];
    for &(d, _) in traces {
        match seen.get_mut(d as usize) {
            Some(s) if !*s => *s = true,
            _ => return Err(LefschetzError::InvalidTraces),
        }
    }
    Ok(traces
        .iter()
        .map(|&(d, t)| if d % 2 == 0 { t } else { -t })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn solve(p: u32, lhs: Rational, total: u32) -> Vec<Vec<u32>> {
        solve_fixed_points(&LefschetzProblem::new(p, lhs, total))
            .unwrap()
            .into_iter()
            .map(|s| s.r)
            .collect()
    }

    #[test]
    fn order_seven_three_points() {
        let sols = solve(7, int(1), 3);
        assert_eq!(sols.len(), 7);
        for r in &sols {
            let a = r[2] + r[4] == 3 && r[0] + r[1] + r[3] + r[5] == 0;
            let b = r[1] + r[3] == 2 && r[5] == 1 && r[0] + r[2] + r[4] == 0;
            assert!(a || b, "{r:?}");
        }
        let mut sorted = sols.clone();
        sorted.sort();
        assert_eq!(sols, sorted);
    }

    #[test]
    fn order_three_cases() {
        assert_eq!(solve(3, int(1), 6), vec![vec![6, 0]]);
        assert_eq!(solve(3, ratio(5, 2), 9), vec![vec![3, 6]]);
        assert_eq!(solve(3, int(1), 3), vec![vec![0, 3]]);
    }

    #[test]
    fn families_merge_inverse_pairs() {
        let s = LefschetzSolution {
            p: 7,
            r: vec![0, 1, 2, 1, 1, 0],
        };
        let f = s.families();
        assert_eq!(
            f,
            vec![(vec![1], 0), (vec![2, 4], 2), (vec![3, 5], 3), (vec![6], 0)]
        );
        assert_eq!(s.quotient_singularities().len(), 5);
    }

    #[test]
    fn curves_shift_the_target() {
        let c = CurveComponent {
            genus: 0,
            self_square: -1,
        };
        assert_eq!(c.contribution(3), ratio(1, 6));
        let prob = LefschetzProblem::new(3, ratio(7, 6), 6).with_curves(vec![c]);
        let sols = solve_fixed_points(&prob).unwrap();
        assert_eq!(
            sols.iter().map(|s| s.r.clone()).collect::<Vec<_>>(),
            [[6, 0]]
        );
    }

    #[test]
    fn euler_alternating_sum() {
        let t = |v: [i64; 5]| -> Vec<(u32, i64)> {
            v.iter().enumerate().map(|(d, &x)| (d as u32, x)).collect()
        };
        assert_eq!(topological_euler_fixed(&t([1, 4, 9, 4, 1])).unwrap(), 3);
        assert_eq!(topological_euler_fixed(&t([1, 0, 1, 0, 1])).unwrap(), 3);
        assert_eq!(topological_euler_fixed(&t([1, -1, 1, -1, 1])).unwrap(), 5);
        assert_eq!(
            topological_euler_fixed(&[(0, 1), (0, 1)]),
            Err(LefschetzError::InvalidTraces)
        );
        assert_eq!(
            topological_euler_fixed(&[(0, 1), (2, 1)]),
            Err(LefschetzError::InvalidTraces)
        );
    }
}
