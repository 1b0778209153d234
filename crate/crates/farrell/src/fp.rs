//! Arithmetic in the prime field F_p and dense exact linear algebra.
//!
//! Scalars are residues stored together with their odd prime modulus.
//! Matrices are dense and row-major; ranks and null-space dimensions come
//! from deterministic Gaussian elimination with exact pivot inversion
//! (first nonzero entry in a column is the pivot, so identical inputs
//! always produce identical echelon forms). On top of the raw arithmetic
//! sit the root-of-unity utilities: multiplicative orders and the j-th
//! roots of unity of F_p* for j | p - 1.
//!
//! Moduli are machine-word odd primes; the intended scale is the small p
//! of the symplectic groups Sp(p-1, -), so primality checks are plain
//! trial division.

use num_integer::gcd;

use crate::{Error, Result};

/// Trial-division primality check that also rejects 2.
pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Trial-division primality check (2 is prime).
pub fn is_prime(q: u64) -> bool {
    q == 2 || is_odd_prime(q)
}

/// Prime factorization of `x >= 1` by trial division, primes ascending.
pub(crate) fn factor_u64(mut x: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= x {
        if x.is_multiple_of(d) {
            let mut e = 0u32;
            while x.is_multiple_of(d) {
                x /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if x > 1 {
        out.push((x, 1));
    }
    out
}

/// A residue in `[0, p)` carrying its odd prime modulus `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u64,
    modulus: u64,
}

impl FpScalar {
    /// Reduces `value` into `[0, p)` (Euclidean, so negative inputs work).
    /// Fails unless `modulus` is an odd prime.
    pub fn new(value: i128, modulus: u64) -> Result<Self> {
        if !is_odd_prime(modulus) {
            return Err(Error::NotOddPrime(modulus));
        }
        Ok(Self::from_residue(
            value.rem_euclid(modulus as i128) as u64,
            modulus,
        ))
    }

    /// Wraps an already-reduced residue. Internal fast path.
    pub(crate) fn from_residue(value: u64, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        Self { value, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// `self^exp` by square-and-multiply; `x^0 = 1` for every `x`,
    /// including zero.
    pub fn pow(self, mut exp: u64) -> Self {
        let p = self.modulus as u128;
        let mut base = self.value as u128;
        let mut acc = 1u128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Self::from_residue(acc as u64, self.modulus)
    }

    /// Multiplicative inverse via Fermat's little theorem.
    ///
    /// Panics on zero; callers only invert pivots that are known nonzero.
    pub fn inv(self) -> Self {
        assert!(!self.is_zero(), "inverse of 0 mod {}", self.modulus);
        self.pow(self.modulus - 2)
    }
}

impl std::ops::Mul for FpScalar {
    type Output = FpScalar;

    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let p = self.modulus as u128;
        Self::from_residue(
            (self.value as u128 * rhs.value as u128 % p) as u64,
            self.modulus,
        )
    }
}

impl std::fmt::Display for FpScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// `base^exp mod p`. The base may be any integer; it is reduced first.
pub fn mod_pow(base: i128, exp: u64, p: u64) -> Result<FpScalar> {
    Ok(FpScalar::new(base, p)?.pow(exp))
}

/// The smallest f >= 1 with `a^f = 1 mod p`; always a divisor of p - 1.
///
/// Starts from p - 1 and strips prime factors that the order does not
/// need, so it costs one trial-division factorization of p - 1 plus a few
/// modular exponentiations.
pub fn mul_order(a: i128, p: u64) -> Result<u64> {
    let a_reduced = FpScalar::new(a, p)?;
    if a_reduced.is_zero() {
        return Err(Error::ZeroResidue { a, p });
    }
    Ok(order_of(a_reduced, &factor_u64(p - 1)))
}

/// Order of a nonzero residue, given the factorization of p - 1.
fn order_of(a: FpScalar, p_minus_1_factors: &[(u64, u32)]) -> u64 {
    let mut order = a.modulus() - 1;
    for &(l, _) in p_minus_1_factors {
        while order.is_multiple_of(l) && a.pow(order / l).value() == 1 {
            order /= l;
        }
    }
    order
}

/// Smallest generator of the cyclic group F_p*.
fn primitive_generator(p: u64) -> u64 {
    let factors = factor_u64(p - 1);
    (2..p)
        .find(|&g| order_of(FpScalar::from_residue(g, p), &factors) == p - 1)
        .expect("F_p* is cyclic, so a generator exists")
}

/// One j-th root of unity together with its primitivity flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootOfUnity {
    pub value: FpScalar,
    /// True exactly when the multiplicative order of `value` is j.
    pub primitive: bool,
}

/// All solutions of `x^j = 1` in F_p*, ascending by residue.
///
/// Requires j | p - 1; there are then exactly j solutions, phi(j) of them
/// primitive. They are the powers of g^((p-1)/j) for a generator g, and
/// the power zeta^k is primitive exactly when gcd(k, j) = 1.
pub fn nth_roots_of_unity(j: u64, p: u64) -> Result<Vec<RootOfUnity>> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if j == 0 || !(p - 1).is_multiple_of(j) {
        return Err(Error::NotDivisor { d: j, m: p - 1 });
    }
    let zeta = FpScalar::from_residue(primitive_generator(p), p).pow((p - 1) / j);
    let mut roots: Vec<RootOfUnity> = (0..j)
        .map(|k| RootOfUnity {
            value: zeta.pow(k),
            primitive: gcd(k, j) == 1,
        })
        .collect();
    roots.sort_by_key(|r| r.value.value());
    Ok(roots)
}

/// The canonical primitive j-th root of unity: the smallest one in [0, p).
///
/// Every computation in this crate is independent of which primitive root
/// is chosen; this is just the deterministic default.
pub fn smallest_primitive_root_of_unity(j: u64, p: u64) -> Result<FpScalar> {
    Ok(nth_roots_of_unity(j, p)?
        .into_iter()
        .find(|r| r.primitive)
        .expect("phi(j) >= 1 primitive roots exist")
        .value)
}

/// Dense row-major matrix over F_p. All entries share one odd prime
/// modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    entries: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: u64) -> Result<Self> {
        if !is_odd_prime(modulus) {
            return Err(Error::NotOddPrime(modulus));
        }
        Ok(Self {
            rows,
            cols,
            modulus,
            entries: vec![0; rows * cols],
        })
    }

    pub fn identity(n: usize, modulus: u64) -> Result<Self> {
        let mut m = Self::zeros(n, n, modulus)?;
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, row: usize, col: usize) -> FpScalar {
        assert!(row < self.rows && col < self.cols, "index out of range");
        FpScalar::from_residue(self.entries[row * self.cols + col], self.modulus)
    }

    pub fn set(&mut self, row: usize, col: usize, value: FpScalar) {
        assert_eq!(value.modulus(), self.modulus, "modulus mismatch");
        self.set_residue(row, col, value.value());
    }

    pub(crate) fn set_residue(&mut self, row: usize, col: usize, value: u64) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        debug_assert!(value < self.modulus);
        self.entries[row * self.cols + col] = value;
    }

    /// `self - s * I` for square matrices.
    pub fn sub_scalar_identity(&self, s: FpScalar) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        assert_eq!(s.modulus(), self.modulus, "modulus mismatch");
        let mut m = self.clone();
        for i in 0..m.rows {
            let idx = i * m.cols + i;
            m.entries[idx] = (m.entries[idx] + m.modulus - s.value()) % m.modulus;
        }
        Ok(m)
    }

    pub fn matmul(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let p = self.modulus as u128;
        let mut out = FpMatrix {
            rows: self.rows,
            cols: rhs.cols,
            modulus: self.modulus,
            entries: vec![0; self.rows * rhs.cols],
        };
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entries[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    let term = a as u128 * rhs.entries[k * rhs.cols + j] as u128 % p;
                    out.entries[idx] = ((out.entries[idx] as u128 + term) % p) as u64;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place forward elimination; returns the rank. The pivot of each
    /// column is the first nonzero entry below the previous pivot row, so
    /// the result is fully deterministic.
    fn eliminate(&mut self) -> usize {
        let p = self.modulus as u128;
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(r) = (pivot_row..self.rows).find(|&r| self.entries[r * self.cols + col] != 0)
            else {
                continue;
            };
            self.swap_rows(pivot_row, r);
            let inv =
                FpScalar::from_residue(self.entries[pivot_row * self.cols + col], self.modulus)
                    .inv()
                    .value() as u128;
            for c in col..self.cols {
                let idx = pivot_row * self.cols + c;
                self.entries[idx] = (self.entries[idx] as u128 * inv % p) as u64;
            }
            for r in (pivot_row + 1)..self.rows {
                let f = self.entries[r * self.cols + col] as u128;
                if f == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let sub = f * self.entries[pivot_row * self.cols + c] as u128 % p;
                    let idx = r * self.cols + c;
                    self.entries[idx] = ((self.entries[idx] as u128 + p - sub) % p) as u64;
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// Row echelon form (pivots normalized to 1, zeros below).
    pub fn row_echelon(&self) -> Self {
        let mut m = self.clone();
        m.eliminate();
        m
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate()
    }

    /// Dimension of the kernel of a square matrix: cols - rank.
    pub fn null_space_dim(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.cols - self.rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Order by direct powering: the reference for `mul_order`.
    fn order_by_powering(a: u64, p: u64) -> u64 {
        let mut x = a % p;
        let mut f = 1;
        while x != 1 {
            x = x * a % p;
            f += 1;
        }
        f
    }

    fn cyclic_matrix(n: usize, p: u64) -> FpMatrix {
        let mut m = FpMatrix::zeros(n, n, p).unwrap();
        for i in 0..n {
            m.set_residue((i + 1) % n, i, 1);
        }
        m
    }

    #[test]
    fn odd_prime_detection() {
        assert!(is_odd_prime(3));
        assert!(is_odd_prime(7));
        assert!(is_odd_prime(983));
        assert!(!is_odd_prime(1));
        assert!(!is_odd_prime(2));
        assert!(!is_odd_prime(9));
        assert!(!is_odd_prime(203));
    }

    #[test]
    fn mod_pow_basics() {
        assert_eq!(mod_pow(2, 3, 7).unwrap().value(), 1);
        assert_eq!(mod_pow(5, 0, 7).unwrap().value(), 1);
        assert_eq!(mod_pow(0, 0, 7).unwrap().value(), 1);
        assert_eq!(mod_pow(29, 1, 7).unwrap().value(), 1);
        assert_eq!(mod_pow(-1, 2, 7).unwrap().value(), 1);
        assert_eq!(mod_pow(-2, 1, 7).unwrap().value(), 5);
        assert_eq!(mod_pow(3, 1, 4), Err(Error::NotOddPrime(4)));
        assert_eq!(mod_pow(3, 1, 2), Err(Error::NotOddPrime(2)));
    }

    #[test]
    fn mul_order_matches_direct_powering() {
        assert_eq!(mul_order(29, 7).unwrap(), 1);
        assert_eq!(mul_order(1, 13).unwrap(), 1);
        assert_eq!(mul_order(3, 7).unwrap(), 6);
        assert_eq!(order_by_powering(3, 7), 6);
        for p in [5u64, 7, 11, 13, 19, 31] {
            for a in 2..p {
                assert_eq!(mul_order(a as i128, p).unwrap(), order_by_powering(a, p));
            }
        }
    }

    #[test]
    fn mul_order_rejects_zero_residue() {
        assert_eq!(mul_order(0, 7), Err(Error::ZeroResidue { a: 0, p: 7 }));
        assert_eq!(mul_order(14, 7), Err(Error::ZeroResidue { a: 14, p: 7 }));
    }

    #[test]
    fn roots_of_unity_third_roots_mod_seven() {
        let roots = nth_roots_of_unity(3, 7).unwrap();
        let values: Vec<u64> = roots.iter().map(|r| r.value.value()).collect();
        assert_eq!(values, vec![1, 2, 4]);
        let primitive: Vec<u64> = roots
            .iter()
            .filter(|r| r.primitive)
            .map(|r| r.value.value())
            .collect();
        assert_eq!(primitive, vec![2, 4]);
    }

    #[test]
    fn roots_of_unity_trivial_and_fifth() {
        let trivial = nth_roots_of_unity(1, 11).unwrap();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[0].value.value(), 1);
        assert!(trivial[0].primitive, "1 has order 1 = j");

        let fifth = nth_roots_of_unity(5, 11).unwrap();
        let values: Vec<u64> = fifth.iter().map(|r| r.value.value()).collect();
        assert_eq!(values, vec![1, 3, 4, 5, 9]);
        assert_eq!(fifth.iter().filter(|r| r.primitive).count(), 4);
    }

    #[test]
    fn roots_of_unity_requires_divisor() {
        assert_eq!(
            nth_roots_of_unity(4, 7),
            Err(Error::NotDivisor { d: 4, m: 6 })
        );
        assert_eq!(
            nth_roots_of_unity(0, 7),
            Err(Error::NotDivisor { d: 0, m: 6 })
        );
    }

    #[test]
    fn primitive_root_counts_match_euler_phi() {
        fn phi(n: u64) -> u64 {
            (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
        }
        for p in [5u64, 7, 11, 13, 19, 31, 43] {
            let mut j = 1;
            while j * j < p {
                if (p - 1) % j == 0 {
                    for d in [j, (p - 1) / j] {
                        let count = nth_roots_of_unity(d, p)
                            .unwrap()
                            .iter()
                            .filter(|r| r.primitive)
                            .count() as u64;
                        assert_eq!(count, phi(d), "p = {p}, j = {d}");
                    }
                }
                j += 1;
            }
        }
    }

    #[test]
    fn smallest_primitive_root_is_canonical() {
        assert_eq!(smallest_primitive_root_of_unity(3, 7).unwrap().value(), 2);
        assert_eq!(smallest_primitive_root_of_unity(1, 7).unwrap().value(), 1);
        assert_eq!(smallest_primitive_root_of_unity(5, 11).unwrap().value(), 3);
    }

    #[test]
    fn null_space_of_identity_and_zero() {
        let id = FpMatrix::identity(4, 7).unwrap();
        assert_eq!(id.null_space_dim().unwrap(), 0);
        let zero = id
            .sub_scalar_identity(FpScalar::new(1, 7).unwrap())
            .unwrap();
        assert_eq!(zero.null_space_dim().unwrap(), 4);
    }

    #[test]
    fn null_space_of_cycle_minus_identity_is_one() {
        for n in 1..=6 {
            for p in [5u64, 7, 13] {
                let m = cyclic_matrix(n, p)
                    .sub_scalar_identity(FpScalar::new(1, p).unwrap())
                    .unwrap();
                assert_eq!(m.null_space_dim().unwrap(), 1, "n = {n}, p = {p}");
            }
        }
    }

    #[test]
    fn null_space_requires_square() {
        let m = FpMatrix::zeros(2, 3, 7).unwrap();
        assert_eq!(
            m.null_space_dim(),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn row_reduction_is_deterministic() {
        let mut m = FpMatrix::zeros(3, 3, 7).unwrap();
        let vals = [[2, 3, 1], [4, 6, 2], [1, 0, 5]];
        for (r, row) in vals.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set_residue(r, c, v);
            }
        }
        assert_eq!(m.row_echelon(), m.row_echelon());
        assert_eq!(m.rank(), m.rank());
    }

    #[test]
    fn matmul_respects_cycle_order() {
        let m = cyclic_matrix(5, 7);
        let mut acc = FpMatrix::identity(5, 7).unwrap();
        for _ in 0..5 {
            acc = acc.matmul(&m);
        }
        assert_eq!(acc, FpMatrix::identity(5, 7).unwrap());
    }

    proptest! {
        #[test]
        fn order_divides_group_order(a in 1i128..500, idx in 0usize..5) {
            let p = [5u64, 7, 11, 13, 101][idx];
            if a % p as i128 != 0 {
                let f = mul_order(a, p).unwrap();
                prop_assert_eq!((p - 1) % f, 0);
            }
        }

        #[test]
        fn rank_plus_nullity_is_size(
            n in 1usize..6,
            seed in proptest::collection::vec(0u64..13, 36),
            p_idx in 0usize..3,
        ) {
            let p = [5u64, 7, 13][p_idx];
            let mut m = FpMatrix::zeros(n, n, p).unwrap();
            for r in 0..n {
                for c in 0..n {
                    m.set_residue(r, c, seed[r * n + c] % p);
                }
            }
            prop_assert_eq!(m.rank() + m.null_space_dim().unwrap(), n);
        }
    }
}
