//! Exact numeric kernel: arbitrary-precision rationals, the quadratic field
//! `Q[sqrt(5)]`, and Fibonacci number generation.

mod fib;
mod quadratic;
mod rational;

pub use fib::{fib_binet, fib_pair, FibCache};
pub use quadratic::{quad_approx, quad_arith, sqrt5_enclosure, Enclosure, QuadOp, QuadraticValue};
pub use rational::{
    int, is_canonical, parse_decimal, rat_arith, ratio, to_decimal, BigRational, RatOp,
    DEFAULT_SIG_DIGITS,
};
