//! Integer generating polynomials for the invariant dimension tables.
//!
//! A factor with cycle pairs (c_1, d_1), ..., (c_s, d_s) and step j has
//! the bigraded generating polynomial
//!
//! ```text
//!     prod_i ( prod_{k=1..c_i} (1 + t * w^(k * j / c_i)) )^(d_i)
//! ```
//!
//! where w-exponents are reduced mod j ([`eigenspace_poly`]): the
//! coefficient of t^m * w^l is the dimension of the w^l-eigenspace of the
//! permutation action on the m-th wedge power. Substituting t -> z and
//! w -> z^-2 *before* reducing exponents collapses the two gradings into
//! the single cohomological degree ([`degree_poly`]):
//!
//! ```text
//!     prod_i ( prod_{k=1..c_i} (1 + z^(1 - 2 * k * j / c_i)) )^(d_i).
//! ```
//!
//! Invariant dimensions are then residue-class sums of coefficients mod
//! 2j ([`residue_sums`]). The dimension table repeats after j steps (not
//! only after 2j) exactly when the sums are shift-invariant
//! ([`sums_match_shift`]), which happens exactly when the polynomial has
//! a factor 1 + z^(j + 2kj) for some integer k ([`has_shifted_factor`]).
//!
//! Coefficients are arbitrary-precision integers: the products have
//! 2^(sum c_i * d_i) terms before collection, which overflows fixed-width
//! counters in stress configurations.

use std::collections::BTreeMap;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

fn validate_pairs(j: u64, pairs: &[(u64, u64)]) -> Result<()> {
    assert!(j >= 1, "j must be positive");
    for &(c, d) in pairs {
        if c == 0 || d == 0 {
            return Err(Error::EmptyCycle { c, d });
        }
        if !j.is_multiple_of(c) {
            return Err(Error::CycleLength { c, j });
        }
    }
    Ok(())
}

/// Polynomial in t and w with w-exponents reduced into [0, j).
///
/// The coefficient of t^m * w^l counts m-element multisubsets of the
/// permutation eigenvalues whose product is the l-th power of the chosen
/// primitive j-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    j: u64,
    coeffs: BTreeMap<(u32, u64), BigInt>,
}

impl BiPoly {
    fn one(j: u64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0u32, 0u64), BigInt::one());
        Self { j, coeffs }
    }

    /// Multiply by (1 + t * w^mu_exp), reducing the w-exponent mod j.
    fn mul_linear(&mut self, mu_exp: u64) {
        let mut next: BTreeMap<(u32, u64), BigInt> = BTreeMap::new();
        for (&(m, l), v) in &self.coeffs {
            *next.entry((m, l)).or_insert_with(BigInt::zero) += v;
            *next
                .entry((m + 1, (l + mu_exp) % self.j))
                .or_insert_with(BigInt::zero) += v;
        }
        next.retain(|_, v| !v.is_zero());
        self.coeffs = next;
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    /// Coefficient of t^m * w^(l mod j); zero when absent.
    pub fn coefficient(&self, m: u32, l: u64) -> BigInt {
        self.coeffs
            .get(&(m, l % self.j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u64), &BigInt)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn max_t_degree(&self) -> u32 {
        self.coeffs.keys().map(|&(m, _)| m).max().unwrap_or(0)
    }

    /// Sums the w-grading away: entry m is the coefficient of t^m after
    /// setting w = 1, which must be the binomial coefficient
    /// C(sum c*d, m).
    pub fn collapse_w(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.max_t_degree() as usize + 1];
        for (&(m, _), v) in &self.coeffs {
            out[m as usize] += v;
        }
        out
    }
}

/// Expands the bigraded product for the given cycle pairs.
///
/// Every cycle of length c contributes factors (1 + t * w^(k*j/c)) for
/// k = 1..c; a pair (c, d) repeats them d times. Fails when some c does
/// not divide j or a pair has a zero entry.
pub fn eigenspace_poly(j: u64, pairs: &[(u64, u64)]) -> Result<BiPoly> {
    validate_pairs(j, pairs)?;
    let mut acc = BiPoly::one(j);
    for &(c, d) in pairs {
        for _ in 0..d {
            for k in 1..=c {
                acc.mul_linear(k * (j / c) % j);
            }
        }
    }
    Ok(acc)
}

/// Laurent polynomial in one variable z with integer coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_terms([(0i64, 1i64)])
    }

    pub fn from_terms<T: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut poly = Self::zero();
        for (l, v) in terms {
            poly.add_term(l, v.into());
        }
        poly
    }

    fn add_term(&mut self, l: i64, v: BigInt) {
        if v.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(l).or_insert_with(BigInt::zero);
        *entry += v;
        if entry.is_zero() {
            self.coeffs.remove(&l);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, l: i64) -> BigInt {
        self.coeffs.get(&l).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&l, v)| (l, v))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Smallest and largest exponent with nonzero coefficient.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = self.coeffs.keys().next()?;
        let hi = self.coeffs.keys().next_back()?;
        Some((*lo, *hi))
    }

    /// Sum of all coefficients.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Multiply by (1 + z^e).
    pub fn mul_by_binomial(&self, e: i64) -> Self {
        let mut out = self.clone();
        for (&l, v) in &self.coeffs {
            out.add_term(l + e, v.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, u) in &self.coeffs {
            for (&b, v) in &rhs.coeffs {
                out.add_term(a + b, u * v);
            }
        }
        out
    }
}

/// Expands the one-variable specialization t -> z, w -> z^-2 of the
/// *unreduced* product: each cycle factor becomes (1 + z^(1 - 2*k*j/c)).
///
/// The coefficient of z^l sums the dimensions of all eigenspace pieces
/// landing in cohomological degree l.
pub fn degree_poly(j: u64, pairs: &[(u64, u64)]) -> Result<LaurentPoly> {
    validate_pairs(j, pairs)?;
    let mut acc = LaurentPoly::one();
    for &(c, d) in pairs {
        for _ in 0..d {
            for k in 1..=c {
                acc = acc.mul_by_binomial(1 - 2 * (k as i64) * (j / c) as i64);
            }
        }
    }
    Ok(acc)
}

/// Sums coefficients over residue classes of the exponent:
/// entry i is the sum of coefficients of z^l over all l = i (mod modulus),
/// with negative exponents reduced Euclidean-style.
pub fn residue_sums(f: &LaurentPoly, modulus: u64) -> Vec<BigInt> {
    assert!(
        modulus >= 2 && modulus.is_multiple_of(2),
        "modulus must be even and >= 2"
    );
    let mut sums = vec![BigInt::zero(); modulus as usize];
    for (l, v) in f.terms() {
        sums[l.rem_euclid(modulus as i64) as usize] += v;
    }
    sums
}

/// Whether the residue-class sums mod 2j are invariant under shifting the
/// class by j: S_i = S_(i+j) for every i.
pub fn sums_match_shift(f: &LaurentPoly, j: u64) -> bool {
    assert!(j >= 1, "j must be positive");
    let sums = residue_sums(f, 2 * j);
    let n = sums.len();
    (0..n).all(|i| sums[i] == sums[(i + j as usize) % n])
}

/// Exact divisibility of f by (1 + z^e) in the Laurent ring, e > 0.
///
/// Shift f to an ordinary polynomial and run synthetic division by
/// z^e + 1; divisibility by 1 + z^-e is the same question because z^-e
/// is a unit.
fn divisible_by_binomial(f: &LaurentPoly, e: i64) -> bool {
    let (lo, hi) = f.support().expect("nonzero polynomial");
    let width = (hi - lo) as usize;
    let e = e as usize;
    if e > width {
        return false;
    }
    let mut dense = vec![BigInt::zero(); width + 1];
    for (l, v) in f.terms() {
        dense[(l - lo) as usize] = v.clone();
    }
    for d in (e..=width).rev() {
        if dense[d].is_zero() {
            continue;
        }
        let q = std::mem::take(&mut dense[d]);
        dense[d - e] -= q;
    }
    dense[..e].iter().all(|c| c.is_zero())
}

/// Searches for a factor (1 + z^(j + 2kj)), k ranging over the integers.
///
/// The candidate exponents are the odd multiples of j; only those with
/// absolute value at most the support width of f can divide, and sign
/// does not matter in the Laurent ring, so the search is the finite list
/// e = j, 3j, 5j, ... up to the width.
pub fn has_shifted_factor(f: &LaurentPoly, j: u64) -> bool {
    assert!(j >= 1, "j must be positive");
    assert!(!f.is_zero(), "zero polynomial has every factor");
    let (lo, hi) = f.support().expect("nonzero polynomial");
    let width = hi - lo;
    let mut e = j as i64;
    while e <= width {
        if divisible_by_binomial(f, e) {
            return true;
        }
        e += 2 * j as i64;
    }
    false
}
