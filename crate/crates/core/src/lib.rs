//! Exact construction, verification and classification of bordered complex
//! Hadamard matrices whose core lies in the Bose–Mesner algebra of a strongly
//! regular graph.
//!
//! Every quantity is exact: rationals, quadratic fields `Q(√d)` and, where
//! irrational eigenvalues meet imaginary weights, the compositum of two.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod poly;
pub mod srg;
pub mod graphs;
pub mod hadamard;
pub mod classify;
pub mod audit;
