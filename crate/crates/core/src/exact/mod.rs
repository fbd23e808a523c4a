//! Exact scalars and integer matrices.

pub mod cyclotomic;
pub mod matrix;
pub mod primes;
pub mod rational;
pub mod smith;

pub use cyclotomic::{cyclotomic_inverse, CyclotomicElement};
pub use matrix::{solve_linear_rational, IntMatrix};
pub use primes::{is_odd_prime, is_perfect_square, is_prime, mod_inverse};
pub use rational::{
    int, is_nonnegative, lcm_of_denominators, parse_rational, ratio, to_i64, Rational,
};
pub use smith::{smith_normal_form, SmithForm};
