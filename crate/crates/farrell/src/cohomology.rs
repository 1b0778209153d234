//! Invariant dimension tables, the per-factor step b_j, the global
//! isomorphism step, and the p-period.
//!
//! The p-primary cohomology of the centralizer of a subgroup of order p
//! is (Z/pZ)^(2^sigma) in every degree. The normalizer quotient of order
//! j acts on it, and the dimension of the invariants in degree i is
//! computed here by two independent routes that must agree:
//!
//! * bigraded: sum the coefficients of t^m * w^((m-i)/2 mod j) of the
//!   eigenspace polynomial over all m of the same parity as i;
//! * residue sums: sum the coefficients of z^l of the one-variable
//!   specialization over all l = i (mod 2j).
//!
//! The table has period 2j in i; it already repeats after j steps when
//! some contributing prime has a full cycle (c = j), and b_j records j or
//! 2j accordingly. The global isomorphism step is the lcm of the b_j,
//! which is y when every factor has full cycles and 2y otherwise; the
//! p-period itself is always 2y.

use num_integer::lcm;
use num_traits::ToPrimitive;

use crate::laurent;
use crate::splitting::{self, CentralizerShape, PrimeContext, PrimeFactor};
use crate::{Error, Result};

/// Rank data of the cohomology of the centralizer Z/2pZ x Z^(sigma+1) in
/// each degree: free rank 2^sigma over Z/2pZ, whose p-primary part is
/// (Z/pZ)^(2^sigma).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CentralizerCohomology {
    pub integral_rank: u64,
    pub p_part_rank: u64,
}

/// Both ranks are 2^sigma, independent of the degree.
pub fn centralizer_cohomology(sigma: u32) -> CentralizerCohomology {
    assert!(sigma < 64, "rank 2^{sigma} exceeds u64");
    let rank = 1u64 << sigma;
    CentralizerCohomology {
        integral_rank: rank,
        p_part_rank: rank,
    }
}

/// Dimensions of the degree-i invariants for i = 0..2j; the table is
/// 2j-periodic in the cohomological degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimTable {
    pub j: u64,
    pub dims: Vec<u64>,
}

impl DimTable {
    /// Reads the table at any integer degree via its 2j-periodicity.
    pub fn dim_at(&self, i: i64) -> u64 {
        self.dims[i.rem_euclid(self.dims.len() as i64) as usize]
    }

    /// Whether the table already repeats after j steps.
    pub fn is_shift_invariant(&self) -> bool {
        let n = self.dims.len();
        (0..n).all(|i| self.dims[i] == self.dims[(i + self.j as usize) % n])
    }
}

/// Invariant dimensions for one factor, straight from its cycle pairs.
///
/// Both computation routes run on every call; a disagreement means an
/// implementation bug and is reported as [`Error::RouteMismatch`] rather
/// than silently picking one answer.
pub fn invariant_dims_from_pairs(j: u64, pairs: &[(u64, u64)]) -> Result<DimTable> {
    let bigraded = laurent::eigenspace_poly(j, pairs)?;
    let specialized = laurent::degree_poly(j, pairs)?;
    let sums = laurent::residue_sums(&specialized, 2 * j);
    let total_deg: u64 = pairs.iter().map(|&(c, d)| c * d).sum();
    let mut dims = Vec::with_capacity(2 * j as usize);
    for (i, from_residues) in sums.iter().enumerate() {
        let mut from_bigraded = num_bigint::BigInt::from(0);
        let mut m = (i % 2) as u64;
        while m <= total_deg {
            let l = ((m as i64 - i as i64) / 2).rem_euclid(j as i64) as u64;
            from_bigraded += bigraded.coefficient(m as u32, l);
            m += 2;
        }
        if from_bigraded != *from_residues {
            return Err(Error::RouteMismatch {
                j,
                degree: i,
                bigraded: from_bigraded.to_string(),
                residue: from_residues.to_string(),
            });
        }
        let dim = from_bigraded
            .to_u64()
            .ok_or_else(|| Error::Overflow(format!("dimension at degree {i} exceeds u64")))?;
        dims.push(dim);
    }
    Ok(DimTable { j, dims })
}

/// Invariant dimensions of the order-j factor for the pair (p, n).
pub fn invariant_dims(ctx: &PrimeContext, factors: &[PrimeFactor], j: u64) -> Result<DimTable> {
    let orbit = splitting::orbit_data(j, ctx, factors)?;
    invariant_dims_from_pairs(j, &orbit.cycle_pairs())
}

/// The step b_j after which the degree-i invariants repeat: j when some
/// contributing prime has a full cycle (c = j; the ramified prime only
/// witnesses j = 1), and 2j otherwise.
pub fn factor_step(j: u64, pairs: &[(u64, u64)]) -> u64 {
    if pairs.iter().any(|&(c, _)| c == j) {
        j
    } else {
        2 * j
    }
}

/// [`factor_step`] for the pair (p, n), deriving the cycle pairs first.
pub fn factor_step_for(ctx: &PrimeContext, factors: &[PrimeFactor], j: u64) -> Result<u64> {
    let orbit = splitting::orbit_data(j, ctx, factors)?;
    Ok(factor_step(j, &orbit.cycle_pairs()))
}

/// Global dimension-isomorphism step: lcm of the per-factor steps, which
/// comes out to y when every b_j equals j and 2y otherwise.
pub fn iso_step(ctx: &PrimeContext, factors: &[PrimeFactor]) -> Result<u64> {
    let mut acc = 1u64;
    let mut all_full = true;
    for j in ctx.odd_divisors() {
        let orbit = splitting::orbit_data(j, ctx, factors)?;
        let step = factor_step(j, &orbit.cycle_pairs());
        all_full &= step == j;
        acc = lcm(acc, step);
    }
    debug_assert_eq!(acc, if all_full { ctx.y() } else { 2 * ctx.y() });
    Ok(acc)
}

/// The p-period of the Farrell cohomology: always 2y.
pub fn p_period(ctx: &PrimeContext) -> u64 {
    2 * ctx.y()
}

/// Everything computed for one odd divisor j of y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub j: u64,
    pub orbit: splitting::OrbitData,
    pub dims: DimTable,
    pub b_j: u64,
}

/// The full report for a pair (p, n). One factor per odd divisor j of y;
/// every such j occurs for some subgroup of order p, but how many
/// conjugacy classes share the same j is beyond this computation, so the
/// tables are per factor, not multiplicity-weighted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalReport {
    pub p: u64,
    pub n: u128,
    pub r: u32,
    pub y: u64,
    pub sigma: u64,
    pub sigma_plus: u64,
    pub centralizer: CentralizerShape,
    pub factors: Vec<FactorReport>,
    pub iso_step: u64,
    pub p_period: u64,
}

pub fn report(ctx: &PrimeContext, n: u128, factors: &[PrimeFactor]) -> Result<GlobalReport> {
    let counts = splitting::sigma(factors, ctx)?;
    let centralizer = splitting::centralizer_structure(ctx, factors)?;
    let mut reports = Vec::new();
    let mut step = 1u64;
    for j in ctx.odd_divisors() {
        let orbit = splitting::orbit_data(j, ctx, factors)?;
        let pairs = orbit.cycle_pairs();
        let dims = invariant_dims_from_pairs(j, &pairs)?;
        let b_j = factor_step(j, &pairs);
        step = lcm(step, b_j);
        reports.push(FactorReport {
            j,
            orbit,
            dims,
            b_j,
        });
    }
    Ok(GlobalReport {
        p: ctx.p(),
        n,
        r: ctx.r(),
        y: ctx.y(),
        sigma: counts.sigma,
        sigma_plus: counts.sigma_plus,
        centralizer,
        factors: reports,
        iso_step: step,
        p_period: p_period(ctx),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splitting::factorize;

    fn ctx(p: u64) -> PrimeContext {
        PrimeContext::new(p).unwrap()
    }

    #[test]
    fn centralizer_ranks_are_powers_of_two() {
        assert_eq!(centralizer_cohomology(0).integral_rank, 1);
        assert_eq!(centralizer_cohomology(3).integral_rank, 8);
        assert_eq!(centralizer_cohomology(3).p_part_rank, 8);
        assert_eq!(centralizer_cohomology(10).p_part_rank, 1024);
    }

    #[test]
    fn example_dimension_table() {
        let dims = invariant_dims(&ctx(7), &factorize(203).unwrap(), 3).unwrap();
        assert_eq!(dims.dims, vec![3, 3, 2, 3, 3, 2]);
        assert!(dims.is_shift_invariant());
        assert_eq!(dims.dim_at(-2), 3, "periodic read at negative degree");
        assert_eq!(dims.dim_at(6), 3);
    }

    #[test]
    fn ramified_only_dimension_tables() {
        let dims = invariant_dims(&ctx(7), &factorize(7).unwrap(), 3).unwrap();
        assert_eq!(dims.dims, vec![1, 1, 0, 0, 0, 0]);
        assert!(!dims.is_shift_invariant());
    }

    #[test]
    fn trivial_j_splits_the_total_evenly() {
        for (p, n) in [(7u64, 203i128), (7, 7), (5, 55), (11, 33)] {
            let c = ctx(p);
            let factors = factorize(n).unwrap();
            let counts = splitting::sigma(&factors, &c).unwrap();
            let dims = invariant_dims(&c, &factors, 1).unwrap();
            assert_eq!(dims.dims, vec![1u64 << counts.sigma, 1u64 << counts.sigma]);
        }
    }

    #[test]
    fn dimension_totals_reach_the_full_rank() {
        for (p, n) in [(7u64, 203i128), (7, 14), (11, 33), (13, 39), (19, 133)] {
            let c = ctx(p);
            let factors = factorize(n).unwrap();
            let counts = splitting::sigma(&factors, &c).unwrap();
            for j in c.odd_divisors() {
                let dims = invariant_dims(&c, &factors, j).unwrap();
                let total: u64 = dims.dims.iter().sum();
                assert_eq!(total, 1 << counts.sigma_plus, "p = {p}, n = {n}, j = {j}");
            }
        }
    }

    #[test]
    fn routes_agree_on_a_grid() {
        let primes = [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
        for p in primes {
            let c = ctx(p);
            for mult in [1i128, 2, 3, 29, 2 * 29] {
                let factors = factorize(p as i128 * mult).unwrap();
                for j in c.odd_divisors() {
                    invariant_dims(&c, &factors, j)
                        .unwrap_or_else(|e| panic!("p = {p}, mult = {mult}, j = {j}: {e}"));
                }
            }
        }
    }

    #[test]
    fn factor_step_picks_j_only_on_full_cycles() {
        assert_eq!(factor_step(3, &[(1, 1), (3, 1)]), 3);
        assert_eq!(factor_step(3, &[(1, 1)]), 6);
        assert_eq!(factor_step(3, &[(1, 1), (1, 2)]), 6);
        assert_eq!(factor_step(1, &[(1, 1)]), 1);
    }

    #[test]
    fn factor_step_for_derives_the_pairs() {
        let factors = factorize(203).unwrap();
        assert_eq!(factor_step_for(&ctx(7), &factors, 3).unwrap(), 3);
        assert_eq!(
            factor_step_for(&ctx(7), &factorize(7).unwrap(), 3).unwrap(),
            6
        );
        assert_eq!(
            factor_step_for(&ctx(7), &factors, 2),
            Err(Error::InvalidStep { j: 2, y: 3 })
        );
    }

    #[test]
    fn full_cycle_forces_shift_invariance() {
        let cases: [(u64, Vec<(u64, u64)>); 3] = [
            (3, vec![(1, 1), (3, 1)]),
            (3, vec![(3, 2)]),
            (5, vec![(5, 1)]),
        ];
        for (j, pairs) in cases {
            let dims = invariant_dims_from_pairs(j, &pairs).unwrap();
            assert_eq!(factor_step(j, &pairs), j);
            assert!(dims.is_shift_invariant(), "j = {j}, pairs = {pairs:?}");
        }
    }

    #[test]
    fn iso_step_examples() {
        assert_eq!(iso_step(&ctx(7), &factorize(203).unwrap()).unwrap(), 3);
        assert_eq!(iso_step(&ctx(7), &factorize(7).unwrap()).unwrap(), 6);
        assert_eq!(iso_step(&ctx(5), &factorize(5).unwrap()).unwrap(), 1);
    }

    #[test]
    fn p_period_is_twice_the_odd_part() {
        for (p, period) in [(5u64, 2u64), (7, 6), (11, 10), (13, 6), (17, 2), (19, 18)] {
            assert_eq!(p_period(&ctx(p)), period);
        }
    }

    #[test]
    fn report_for_the_smallest_case() {
        let c = ctx(5);
        let rep = report(&c, 5, &factorize(5).unwrap()).unwrap();
        assert_eq!(rep.sigma, 0);
        assert_eq!(rep.sigma_plus, 1);
        assert_eq!(rep.centralizer.torsion_order, 10);
        assert_eq!(rep.factors.len(), 1);
        assert_eq!(rep.factors[0].j, 1);
        assert_eq!(rep.factors[0].dims.dims, vec![1, 1]);
        assert_eq!(rep.factors[0].b_j, 1);
        assert_eq!(rep.iso_step, 1);
        assert_eq!(rep.p_period, 2);
    }

    #[test]
    fn report_for_the_two_factor_example() {
        let c = ctx(7);
        let rep = report(&c, 203, &factorize(203).unwrap()).unwrap();
        assert_eq!(rep.sigma, 3);
        assert_eq!(rep.factors.len(), 2);
        assert_eq!(rep.factors[0].j, 1);
        assert_eq!(rep.factors[0].dims.dims, vec![8, 8]);
        assert_eq!(rep.factors[1].j, 3);
        assert_eq!(rep.factors[1].dims.dims, vec![3, 3, 2, 3, 3, 2]);
        assert_eq!(rep.factors[1].b_j, 3);
        assert_eq!(rep.iso_step, 3);
        assert_eq!(rep.p_period, 6);
    }
}
