//! Brute-force verification of the dimension tables.
//!
//! Independence from the generating-polynomial route is the whole point:
//! this module builds the permutation action on a basis of the free part
//! of the centralizer, forms the literal signed matrices on every wedge
//! power over F_p, and measures eigenspaces by exact null-space
//! computation. No generating functions, no cycle bookkeeping.
//!
//! Dimensions grow like C(dim, dim/2), so a guard caps the permutation
//! dimension; the formula route has no such limit.

use std::collections::HashMap;

use num_integer::lcm;

use crate::cohomology::DimTable;
use crate::fp::{self, FpMatrix, FpScalar};
use crate::{Error, Result};

/// Default cap on the permutation dimension sum(c * d).
pub const DEFAULT_GUARD: usize = 16;

/// A permutation of basis vectors assembled from cycle pairs: each
/// (c, d) contributes d disjoint cycles of length c, laid out
/// consecutively in the order given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermAction {
    images: Vec<usize>,
}

impl PermAction {
    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Order of the permutation: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }
}

/// Builds the block permutation, refusing dimensions above `guard`.
pub fn build_perm(pairs: &[(u64, u64)], guard: usize) -> Result<PermAction> {
    let mut dim = 0usize;
    for &(c, d) in pairs {
        if c == 0 || d == 0 {
            return Err(Error::EmptyCycle { c, d });
        }
        dim += (c * d) as usize;
    }
    if dim > guard {
        return Err(Error::GuardExceeded { dim, guard });
    }
    let mut images = Vec::with_capacity(dim);
    for &(c, d) in pairs {
        let c = c as usize;
        for _ in 0..d {
            let start = images.len();
            for offset in 0..c {
                images.push(start + (offset + 1) % c);
            }
        }
    }
    Ok(PermAction { images })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All m-element subsets of 0..n in lexicographic order.
fn combinations(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, m));
    if m > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        out.push(idx.clone());
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - m {
                break;
            }
        }
        idx[i] += 1;
        for t in i + 1..m {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Sorts the image tuple of a wedge basis vector, tracking the sign of
/// the sorting permutation.
fn sort_with_parity(mut v: Vec<usize>) -> (Vec<usize>, bool) {
    let mut odd = false;
    for i in 1..v.len() {
        let mut k = i;
        while k > 0 && v[k - 1] > v[k] {
            v.swap(k - 1, k);
            odd = !odd;
            k -= 1;
        }
    }
    (v, odd)
}

/// The matrix of the permutation action on the m-th wedge power of the
/// standard basis, over F_p. Basis: m-subsets in lexicographic order;
/// column s holds the signed image of basis vector s.
pub fn wedge_matrix(perm: &PermAction, m: usize, p: u64) -> Result<FpMatrix> {
    if !fp::is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let dim = perm.dim();
    if m > dim {
        return Err(Error::WedgeDegree { m, dim });
    }
    let basis = combinations(dim, m);
    let index: HashMap<&[usize], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, subset)| (subset.as_slice(), i))
        .collect();
    let mut mat = FpMatrix::zeros(basis.len(), basis.len(), p)?;
    for (col, subset) in basis.iter().enumerate() {
        let image: Vec<usize> = subset.iter().map(|&i| perm.image(i)).collect();
        let (sorted, odd) = sort_with_parity(image);
        let row = index[sorted.as_slice()];
        mat.set_residue(row, col, if odd { p - 1 } else { 1 });
    }
    Ok(mat)
}

fn validate_root(root: FpScalar, p: u64, j: u64) -> Result<()> {
    assert_eq!(root.modulus(), p, "root has the wrong modulus");
    if j == 0 || !(p - 1).is_multiple_of(j) {
        return Err(Error::NotDivisor { d: j, m: p - 1 });
    }
    if root.is_zero() || fp::mul_order(root.value() as i128, p)? != j {
        return Err(Error::NotPrimitiveRoot {
            root: root.value(),
            j,
            p,
        });
    }
    Ok(())
}

/// Dimension of the root^l eigenspace of the permutation action on the
/// m-th wedge power, by literal null-space computation.
pub fn eigen_dims_bruteforce(
    pairs: &[(u64, u64)],
    p: u64,
    j: u64,
    root: FpScalar,
    m: usize,
    l: u64,
    guard: usize,
) -> Result<usize> {
    validate_root(root, p, j)?;
    let perm = build_perm(pairs, guard)?;
    let w = wedge_matrix(&perm, m, p)?;
    w.sub_scalar_identity(root.pow(l))?.null_space_dim()
}

/// The full dimension table of degree-i invariants for i = 0..2j, summing
/// eigenspace dimensions over all wedge degrees of matching parity.
///
/// The piece of degree i coming from the m-th wedge power is the
/// eigenspace of eigenvalue root^((m - i)/2 mod j). The result must be
/// identical for every primitive j-th root; callers cross-check that.
pub fn invariant_dims_bruteforce(
    pairs: &[(u64, u64)],
    p: u64,
    j: u64,
    root: FpScalar,
    guard: usize,
) -> Result<DimTable> {
    validate_root(root, p, j)?;
    let perm = build_perm(pairs, guard)?;
    let two_j = (2 * j) as usize;
    let mut dims = vec![0u64; two_j];
    for m in 0..=perm.dim() {
        let w = wedge_matrix(&perm, m, p)?;
        let mut i = m % 2;
        while i < two_j {
            let e = ((m as i64 - i as i64) / 2).rem_euclid(j as i64) as u64;
            let eigenspace = w.sub_scalar_identity(root.pow(e))?.null_space_dim()?;
            dims[i] += eigenspace as u64;
            i += 2;
        }
    }
    Ok(DimTable { j, dims })
}
