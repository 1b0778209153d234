//! Splitting of rational primes in Z[zeta_p] over Z[zeta_p + zeta_p^-1]
//! and the combinatorial data it induces.
//!
//! Fix an odd prime p and write p - 1 = 2^r * y with y odd. For a prime
//! q | n, the primes of the real ring Z[zeta_p + zeta_p^-1] above q fall
//! into a trichotomy: q = p is ramified; q != p is split when its inertia
//! degree f_q (the multiplicative order of q mod p) divides (p-1)/2, in
//! which case there are (p-1)/(2*f_q) real primes above q, each splitting
//! into two primes of Z[zeta_p]; otherwise q is inert (non-split).
//!
//! The count sigma of split real primes over all q | n determines the
//! centralizer of a subgroup of order p: torsion Z/2pZ and free rank
//! sigma + 1. A generator of the order-j part of the normalizer permutes
//! the split primes over q in disjoint cycles of length
//! c = gcd((p-1)/(2*f_q), j), giving d = (p-1)/(2*f_q*c) cycles; the
//! ramified prime always contributes one fixed point. These (c, d) pairs
//! are everything the dimension computations downstream need.

use num_integer::gcd;

use crate::fp::{self, is_odd_prime, is_prime};
use crate::{Error, Result};

/// The odd prime p with the decomposition p - 1 = 2^r * y, y odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeContext {
    p: u64,
    r: u32,
    y: u64,
}

impl PrimeContext {
    pub fn new(p: u64) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        let mut y = p - 1;
        let mut r = 0u32;
        while y.is_multiple_of(2) {
            y /= 2;
            r += 1;
        }
        Ok(Self { p, r, y })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The 2-adic valuation of p - 1.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// The greatest odd divisor of p - 1.
    pub fn y(&self) -> u64 {
        self.y
    }

    pub(crate) fn half(&self) -> u64 {
        (self.p - 1) / 2
    }

    /// All odd divisors of p - 1 (equivalently, the divisors of y),
    /// ascending. Each one indexes a normalizer factor of the report.
    pub fn odd_divisors(&self) -> Vec<u64> {
        let mut divs = Vec::new();
        let mut d = 1u64;
        while d * d <= self.y {
            if self.y.is_multiple_of(d) {
                divs.push(d);
                if d != self.y / d {
                    divs.push(self.y / d);
                }
            }
            d += 1;
        }
        divs.sort_unstable();
        divs
    }
}

/// One prime power q^e of the factorization of n. Only the support
/// (which primes divide n) matters downstream; multiplicities are carried
/// for reporting and ignored by every computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeFactor {
    pub q: u64,
    pub e: u32,
}

/// Prime factorization of |n| by trial division, primes ascending.
pub fn factorize(n: i128) -> Result<Vec<PrimeFactor>> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    let mut x = n.unsigned_abs();
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= x {
        if x.is_multiple_of(d) {
            let mut e = 0u32;
            while x.is_multiple_of(d) {
                x /= d;
                e += 1;
            }
            out.push(PrimeFactor { q: d as u64, e });
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if x > 1 {
        let q = u64::try_from(x)
            .map_err(|_| Error::Overflow(format!("prime factor {x} does not fit in 64 bits")))?;
        out.push(PrimeFactor { q, e: 1 });
    }
    Ok(out)
}

/// How the real primes above q behave in the CM extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitKind {
    /// q = p, the unique ramified prime.
    Ramified,
    /// The real primes above q split in Z[zeta_p]; happens exactly when
    /// f_q | (p-1)/2.
    Split,
    /// The real primes above q are inert in Z[zeta_p].
    NonSplit,
}

/// Splitting data of one rational prime q relative to p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitDatum {
    pub q: u64,
    /// f_q: multiplicative order of q mod p (1 for the ramified prime).
    pub inertia_degree: u64,
    pub kind: SplitKind,
    /// Number of primes of Z[zeta_p + zeta_p^-1] above q. Only split
    /// primes contribute to sigma.
    pub real_prime_count: u64,
}

/// Classifies one prime q | n. Only q mod p enters the computation
/// (except for recognizing q = p itself).
pub fn classify(q: u64, ctx: &PrimeContext) -> Result<SplitDatum> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q == ctx.p() {
        return Ok(SplitDatum {
            q,
            inertia_degree: 1,
            kind: SplitKind::Ramified,
            real_prime_count: 1,
        });
    }
    let f = fp::mul_order(q as i128, ctx.p())?;
    if ctx.half().is_multiple_of(f) {
        Ok(SplitDatum {
            q,
            inertia_degree: f,
            kind: SplitKind::Split,
            real_prime_count: ctx.half() / f,
        })
    } else {
        Ok(SplitDatum {
            q,
            inertia_degree: f,
            kind: SplitKind::NonSplit,
            real_prime_count: (ctx.p() - 1) / f,
        })
    }
}

/// sigma and sigma_plus = sigma + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaCounts {
    /// Number of split real primes over all q | n.
    pub sigma: u64,
    /// Free rank of the centralizer: sigma + 1.
    pub sigma_plus: u64,
}

fn require_p_divides_n(factors: &[PrimeFactor], ctx: &PrimeContext) -> Result<()> {
    if factors.iter().any(|f| f.q == ctx.p()) {
        Ok(())
    } else {
        Err(Error::PrimeNotDividingN { p: ctx.p() })
    }
}

/// Counts the split real primes over the support of n. Requires p | n:
/// without p invertible... rather, with p not dividing n there are no
/// subgroups of order p to report on.
pub fn sigma(factors: &[PrimeFactor], ctx: &PrimeContext) -> Result<SigmaCounts> {
    require_p_divides_n(factors, ctx)?;
    let mut sigma = 0u64;
    for f in factors {
        let datum = classify(f.q, ctx)?;
        if datum.kind == SplitKind::Split {
            sigma += datum.real_prime_count;
        }
    }
    Ok(SigmaCounts {
        sigma,
        sigma_plus: sigma + 1,
    })
}

/// Isomorphism type of the centralizer of a subgroup of order p:
/// Z/(2p)Z x Z^(sigma + 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CentralizerShape {
    pub torsion_order: u64,
    pub free_rank: u64,
}

pub fn centralizer_structure(
    ctx: &PrimeContext,
    factors: &[PrimeFactor],
) -> Result<CentralizerShape> {
    let counts = sigma(factors, ctx)?;
    Ok(CentralizerShape {
        torsion_order: 2 * ctx.p(),
        free_rank: counts.sigma_plus,
    })
}

/// Cycle structure of the order-j action on the split primes above one
/// rational prime q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitPair {
    pub q: u64,
    /// Cycle length c = gcd((p-1)/(2*f_q), j); 1 for the ramified prime.
    pub cycle_len: u64,
    /// Number of cycles d, with c * d the number of split primes over q
    /// (1 * 1 for the ramified prime).
    pub cycle_count: u64,
    /// Orbit length of the order-j subgroup of the cyclic Galois group on
    /// the same primes, j / gcd(j, f_q). Usually equal to `cycle_len`;
    /// when the two disagree the report surfaces both and the dimension
    /// computations use `cycle_len`.
    pub galois_orbit_len: u64,
}

/// Per-factor permutation data: one (c, d) pair for the ramified prime
/// and one for every split q | n, q != p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitData {
    pub j: u64,
    pub pairs: Vec<OrbitPair>,
}

impl OrbitData {
    /// The raw (c, d) pairs, in report order.
    pub fn cycle_pairs(&self) -> Vec<(u64, u64)> {
        self.pairs
            .iter()
            .map(|p| (p.cycle_len, p.cycle_count))
            .collect()
    }

    /// Total permuted dimension: sum of c * d, which always equals
    /// sigma + 1.
    pub fn total_dim(&self) -> u64 {
        self.pairs.iter().map(|p| p.cycle_len * p.cycle_count).sum()
    }

    /// Pairs whose cycle length differs from the Galois orbit length.
    pub fn discrepant_pairs(&self) -> Vec<&OrbitPair> {
        self.pairs
            .iter()
            .filter(|p| p.cycle_len != p.galois_orbit_len)
            .collect()
    }
}

/// Cycle data of the order-j normalizer action for every contributing
/// prime: the ramified pair (1, 1) first, then the split primes in
/// ascending order. j must be an odd divisor of y.
pub fn orbit_data(j: u64, ctx: &PrimeContext, factors: &[PrimeFactor]) -> Result<OrbitData> {
    if j == 0 || j.is_multiple_of(2) || !ctx.y().is_multiple_of(j) {
        return Err(Error::InvalidStep { j, y: ctx.y() });
    }
    require_p_divides_n(factors, ctx)?;
    let mut pairs = vec![OrbitPair {
        q: ctx.p(),
        cycle_len: 1,
        cycle_count: 1,
        galois_orbit_len: 1,
    }];
    let mut split: Vec<(u64, u64)> = Vec::new();
    for f in factors {
        let datum = classify(f.q, ctx)?;
        if datum.kind == SplitKind::Split {
            split.push((f.q, datum.inertia_degree));
        }
    }
    split.sort_unstable();
    for (q, f) in split {
        let real_primes = ctx.half() / f;
        let c = gcd(real_primes, j);
        pairs.push(OrbitPair {
            q,
            cycle_len: c,
            cycle_count: real_primes / c,
            galois_orbit_len: j / gcd(j, f),
        });
    }
    let data = OrbitData { j, pairs };
    debug_assert_eq!(data.total_dim(), sigma(factors, ctx)?.sigma_plus);
    Ok(data)
}
