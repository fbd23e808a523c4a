use fpp_core::exact::{int, ratio, Rational};
use fpp_core::lefschetz::{
    a_coeff, holomorphic_lhs, power_traces, solve_fixed_points, LefschetzProblem,
};
use num_traits::Zero;
use proptest::prelude::*;

const PRIMES: [u32; 10] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

/// Sawtooth `((x))`.
fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x - x.floor() - ratio(1, 2)
    }
}

fn dedekind_sum(h: i64, k: i64) -> Rational {
    (1..k)
        .map(|j| sawtooth(&ratio(j, k)) * sawtooth(&ratio(h * j, k)))
        .sum()
}

#[test]
fn dedekind_reciprocity_holds_for_the_oracle() {
    for &p in &PRIMES {
        for q in 1..p as i64 {
            let p = p as i64;
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let lhs = dedekind_sum(q, p) + dedekind_sum(p, q);
            let rhs = ratio(-1, 4) + (ratio(p, q) + ratio(q, p) + ratio(1, p * q)) / int(12);
            assert_eq!(lhs, rhs, "s({q},{p})");
        }
    }
}

#[test]
fn coefficients_match_dedekind_sums() {
    for &p in &PRIMES {
        for q in 1..p {
            let expected =
                ratio(1, 4) - int(p as i64) * dedekind_sum(q as i64, p as i64) / int(p as i64 - 1);
            assert_eq!(a_coeff(p, q).unwrap(), expected, "a_{q} for p = {p}");
        }
    }
}

#[test]
fn coefficient_symmetries() {
    for &p in &PRIMES {
        for q in 1..p {
            let a = a_coeff(p, q).unwrap();
            assert_eq!(
                &a + a_coeff(p, p - q).unwrap(),
                ratio(1, 2),
                "p = {p}, q = {q}"
            );
            let q_inv = (1..p).find(|x| x * q % p == 1).unwrap();
            assert_eq!(a, a_coeff(p, q_inv).unwrap());
        }
        // s(1, p) = (p − 1)(p − 2) / (12p) gives a_1 = (5 − p) / 12.
        assert_eq!(a_coeff(p, 1).unwrap(), ratio(5 - p as i64, 12));
    }
}

fn compositions(total: u32, parts: usize, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
    if cur.len() + 1 == parts {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for x in 0..=total {
        cur.push(x);
        compositions(total - x, parts, out, cur);
        cur.pop();
    }
}

fn brute_force(p: u32, lhs: &Rational, total: u32) -> Vec<Vec<u32>> {
    let a: Vec<Rational> = (1..p).map(|i| a_coeff(p, i).unwrap()).collect();
    let mut all = Vec::new();
    compositions(total, (p - 1) as usize, &mut all, &mut Vec::new());
    all.into_iter()
        .filter(|r| {
            let s: Rational = r.iter().zip(&a).map(|(&x, ai)| ai * int(x as i64)).sum();
            &s == lhs
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_matches_brute_force(
        p in prop::sample::select(vec![3u32, 5, 7]),
        total in 0u32..=12,
        num in -30i64..=60,
        den in 1i64..=24,
    ) {
        let lhs = ratio(num, den);
        let solutions: Vec<Vec<u32>> = solve_fixed_points(&LefschetzProblem::new(p, lhs.clone(), total))
            .unwrap()
            .into_iter()
            .map(|s| s.r)
            .collect();
        prop_assert_eq!(solutions, brute_force(p, &lhs, total));
    }

    #[test]
    fn holomorphic_lhs_is_galois_invariant(
        p in prop::sample::select(vec![3u32, 5, 7, 11]),
        e01 in prop::collection::vec(0u32..31, 0..4),
        e02 in prop::collection::vec(0u32..31, 0..4),
        k in 1u32..31,
    ) {
        prop_assume!(k % p != 0);
        let lhs = |m: u32| {
            let a: Vec<u32> = e01.iter().map(|e| e * m % p).collect();
            let b: Vec<u32> = e02.iter().map(|e| e * m % p).collect();
            holomorphic_lhs(p, &power_traces(p, &a).unwrap(), &power_traces(p, &b).unwrap()).unwrap()
        };
        let base = lhs(1);
        prop_assert_eq!(&base, &lhs(k % p));
        // Averaging over the group counts invariant eigenvectors.
        let inv01 = e01.iter().filter(|e| *e % p == 0).count() as i64;
        let inv02 = e02.iter().filter(|e| *e % p == 0).count() as i64;
        let n01 = e01.len() as i64;
        let n02 = e02.len() as i64;
        let expected = (int(p as i64) * int(1 - inv01 + inv02) - int(1 - n01 + n02)) / int(p as i64 - 1);
        prop_assert_eq!(base, expected);
    }
}

#[test]
fn solver_output_is_sorted_and_complete() {
    let sols = solve_fixed_points(&LefschetzProblem::new(7, int(1), 3)).unwrap();
    assert!(!sols.is_empty());
    assert!(sols.windows(2).all(|w| w[0] < w[1]));
    assert!(sols.iter().all(|s| s.r.iter().sum::<u32>() == 3));
}
