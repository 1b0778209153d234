//! Exact computation of the p-primary part of the Farrell cohomology of
//! the symplectic group Sp(p-1, Z[1/n]), one normalizer factor at a time.
//!
//! For an odd prime p dividing n, the p-primary Farrell cohomology of
//! Sp(p-1, Z[1/n]) is a product of contributions indexed by conjugacy
//! classes of subgroups of order p. Each contribution is governed by an
//! odd divisor j of y (the greatest odd divisor of p - 1) together with
//! the way the primes q | n split in the cyclotomic ring Z[zeta_p] over
//! its real subring Z[zeta_p + zeta_p^-1]. Everything here is exact
//! integer arithmetic:
//!
//! * [`splitting`] classifies the primes q | n (ramified / split / inert),
//!   counts the split real primes (sigma), and derives the cyclic
//!   permutation data (cycle length c, cycle count d) of the order-j
//!   action on the free part of the centralizer;
//! * [`laurent`] expands the integer generating polynomials whose
//!   coefficients are eigenspace dimensions, plus their one-variable
//!   specialization, residue-class sums, and a shifted-binomial factor
//!   test;
//! * [`cohomology`] turns those into invariant dimension tables (computed
//!   by two independent routes that must agree), the per-factor step b_j,
//!   the global isomorphism step, and the p-period;
//! * [`oracle`] re-derives the same dimensions by brute force: signed
//!   wedge-power matrices of the permutation action and exact eigenspace
//!   computations over F_p;
//! * [`fp`] supplies the field arithmetic and dense linear algebra;
//! * [`cli`] wires it all into the `farrell` binary.

pub mod cli;
pub mod cohomology;
pub mod fp;
pub mod laurent;
pub mod oracle;
pub mod splitting;

mod error;

pub use error::{Error, Result};
