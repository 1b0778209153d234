//! Report assembly and rendering behind the `farrell` binary.
//!
//! A run takes (p, n), builds the global report, optionally verifies
//! every displayed dimension table against the brute-force oracle (for
//! every primitive root, so the output is visibly independent of that
//! choice), and renders either a human-readable text block or JSON with
//! a fixed key order. Rendering is fully deterministic: identical inputs
//! produce byte-identical output.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cohomology;
use crate::fp;
use crate::oracle;
use crate::splitting::{self, PrimeContext, PrimeFactor};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// How n is supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NSpec {
    /// The integer itself; factorized by trial division.
    Value(i128),
    /// An explicit factorization, bypassing trial division for large n.
    Factors(Vec<PrimeFactor>),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub p: u64,
    pub n: NSpec,
    /// Restrict the factor tables to one odd divisor j of y. The global
    /// iso_step and p_period still cover all factors.
    pub j_filter: Option<u64>,
    pub format: Format,
    /// Cross-check each displayed table against the wedge oracle.
    pub oracle: bool,
    /// Permutation dimension above which the oracle is skipped for a
    /// factor (the run continues formula-only).
    pub max_oracle_dim: usize,
}

impl RunConfig {
    pub fn new(p: u64, n: NSpec) -> Self {
        Self {
            p,
            n,
            j_filter: None,
            format: Format::Text,
            oracle: false,
            max_oracle_dim: oracle::DEFAULT_GUARD,
        }
    }
}

pub struct RunOutput {
    pub stdout: String,
    /// Diagnostic notes bound for stderr: skipped oracle factors,
    /// cycle-length discrepancies, verification mismatches.
    pub diagnostics: Vec<String>,
    /// False exactly when a requested verification found a mismatch.
    pub verified: bool,
}

/// JSON document; field order here is the key order on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub p: u64,
    pub n: u128,
    pub y: u64,
    pub sigma: u64,
    pub sigma_plus: u64,
    pub centralizer: CentralizerDoc,
    pub assumptions: Vec<String>,
    pub factors: Vec<FactorDoc>,
    pub iso_step: u64,
    pub p_period: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerDoc {
    pub torsion_order: u64,
    pub free_rank: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub j: u64,
    pub pairs: Vec<[u64; 2]>,
    pub dims: Vec<u64>,
    pub b_j: u64,
    pub oracle_checked: bool,
}

fn resolve_n(n: &NSpec) -> Result<(u128, Vec<PrimeFactor>)> {
    match n {
        NSpec::Value(v) => Ok((v.unsigned_abs(), splitting::factorize(*v)?)),
        NSpec::Factors(list) => {
            let mut factors = list.clone();
            factors.sort_unstable_by_key(|f| f.q);
            let mut n = 1u128;
            for (i, f) in factors.iter().enumerate() {
                if !fp::is_prime(f.q) {
                    return Err(Error::NotPrime(f.q));
                }
                if f.e == 0 {
                    return Err(Error::ZeroMultiplicity { q: f.q });
                }
                if i > 0 && factors[i - 1].q == f.q {
                    return Err(Error::DuplicateFactor(f.q));
                }
                for _ in 0..f.e {
                    n = n
                        .checked_mul(f.q as u128)
                        .ok_or_else(|| Error::Overflow("n does not fit in 128 bits".to_string()))?;
                }
            }
            Ok((n, factors))
        }
    }
}

fn assumptions(p: u64) -> Vec<String> {
    let mut out = vec![
        "the rings Z[1/n][zeta_p] and Z[1/n][zeta_p + zeta_p^-1] are assumed to be \
         principal ideal domains; this tool does not verify that"
            .to_string(),
    ];
    if p <= 19 {
        out.push(format!(
            "p = {p} <= 19: the cyclotomic class number is 1, so the assumption holds \
             unconditionally once p | n"
        ));
    }
    out.push(
        "dimension tables are per normalizer factor; conjugacy-class multiplicities \
         are not computed"
            .to_string(),
    );
    out
}

pub fn run(config: &RunConfig) -> Result<RunOutput> {
    let ctx = PrimeContext::new(config.p)?;
    let (n, factors) = resolve_n(&config.n)?;
    let report = cohomology::report(&ctx, n, &factors)?;
    if let Some(j) = config.j_filter {
        if j == 0 || j % 2 == 0 || ctx.y() % j != 0 {
            return Err(Error::InvalidStep { j, y: ctx.y() });
        }
    }

    let mut diagnostics = Vec::new();
    let mut verified = true;
    let mut factor_docs = Vec::new();
    let displayed = report
        .factors
        .iter()
        .filter(|f| config.j_filter.is_none_or(|j| f.j == j));
    for factor in displayed {
        for pair in factor.orbit.discrepant_pairs() {
            diagnostics.push(format!(
                "note: j = {}, q = {}: cycle length {} differs from the Galois orbit \
                 length {}; dimensions use the cycle length",
                factor.j, pair.q, pair.cycle_len, pair.galois_orbit_len
            ));
        }
        let pairs = factor.orbit.cycle_pairs();
        let mut checked = false;
        if config.oracle {
            let dim = factor.orbit.total_dim() as usize;
            if dim > config.max_oracle_dim {
                diagnostics.push(format!(
                    "oracle skipped for j = {}: dimension {} exceeds guard {}",
                    factor.j, dim, config.max_oracle_dim
                ));
            } else {
                checked = true;
                let roots = fp::nth_roots_of_unity(factor.j, ctx.p())?;
                for root in roots.into_iter().filter(|r| r.primitive) {
                    let brute = oracle::invariant_dims_bruteforce(
                        &pairs,
                        ctx.p(),
                        factor.j,
                        root.value,
                        config.max_oracle_dim,
                    )?;
                    if brute.dims != factor.dims.dims {
                        verified = false;
                        diagnostics.push(format!(
                            "oracle mismatch for j = {} at root {}: formula {:?}, \
                             brute force {:?}",
                            factor.j,
                            root.value.value(),
                            factor.dims.dims,
                            brute.dims
                        ));
                    }
                }
            }
        }
        factor_docs.push(FactorDoc {
            j: factor.j,
            pairs: pairs.iter().map(|&(c, d)| [c, d]).collect(),
            dims: factor.dims.dims.clone(),
            b_j: factor.b_j,
            oracle_checked: checked,
        });
    }

    let doc = ReportDoc {
        p: report.p,
        n: report.n,
        y: report.y,
        sigma: report.sigma,
        sigma_plus: report.sigma_plus,
        centralizer: CentralizerDoc {
            torsion_order: report.centralizer.torsion_order,
            free_rank: report.centralizer.free_rank,
        },
        assumptions: assumptions(report.p),
        factors: factor_docs,
        iso_step: report.iso_step,
        p_period: report.p_period,
    };
    let stdout = match config.format {
        Format::Json => render_json(&doc),
        Format::Text => render_text(&doc, report.r),
    };
    Ok(RunOutput {
        stdout,
        diagnostics,
        verified,
    })
}

/// Pretty JSON with the struct field order and a trailing newline.
pub fn render_json(doc: &ReportDoc) -> String {
    // Plain integers and strings only; serialization cannot fail.
    let mut s = serde_json::to_string_pretty(doc).expect("report serialization");
    s.push('\n');
    s
}

pub fn render_text(doc: &ReportDoc, r: u32) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "p-primary Farrell cohomology of Sp({}, Z[1/{}])",
        doc.p - 1,
        doc.n
    );
    let _ = writeln!(s);
    let _ = writeln!(
        s,
        "p           = {} (p - 1 = 2^{} * {}, y = {})",
        doc.p, r, doc.y, doc.y
    );
    let _ = writeln!(s, "n           = {}", doc.n);
    let _ = writeln!(s, "sigma       = {}", doc.sigma);
    let _ = writeln!(s, "sigma_plus  = {}", doc.sigma_plus);
    let _ = writeln!(
        s,
        "centralizer = Z/{}Z x Z^{}",
        doc.centralizer.torsion_order, doc.centralizer.free_rank
    );
    let _ = writeln!(s);
    let _ = writeln!(s, "assumptions:");
    for a in &doc.assumptions {
        let _ = writeln!(s, "  - {a}");
    }
    for f in &doc.factors {
        let _ = writeln!(s);
        let _ = writeln!(s, "factor j = {}", f.j);
        let pairs = f
            .pairs
            .iter()
            .map(|[c, d]| format!("({c}, {d})"))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(s, "  pairs (c, d)       = {pairs}");
        let dims = f
            .dims
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(s, "  dims (i = 0..{})    = [{}]", 2 * f.j, dims);
        let _ = writeln!(s, "  b_j                = {}", f.b_j);
        let _ = writeln!(s, "  oracle_checked     = {}", f.oracle_checked);
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "iso_step = {}", doc.iso_step);
    let _ = writeln!(s, "p_period = {}", doc.p_period);
    s
}

impl PartialEq for RunOutput {
    fn eq(&self, other: &Self) -> bool {
        self.stdout == other.stdout
            && self.diagnostics == other.diagnostics
            && self.verified == other.verified
    }
}

impl std::fmt::Debug for RunOutput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RunOutput")
            .field("stdout", &self.stdout)
            .field("diagnostics", &self.diagnostics)
            .field("verified", &self.verified)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(p: u64, n: i128) -> RunConfig {
        RunConfig::new(p, NSpec::Value(n))
    }

    fn json_doc(cfg: &RunConfig) -> ReportDoc {
        let mut cfg = cfg.clone();
        cfg.format = Format::Json;
        serde_json::from_str(&run(&cfg).unwrap().stdout).unwrap()
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let mut cfg = config(7, 203);
        cfg.format = Format::Json;
        let out = run(&cfg).unwrap().stdout;
        let doc: ReportDoc = serde_json::from_str(&out).unwrap();
        assert_eq!(render_json(&doc), out);
    }

    #[test]
    fn repeated_runs_are_identical() {
        let mut cfg = config(7, 203);
        cfg.format = Format::Json;
        cfg.oracle = true;
        let first = run(&cfg).unwrap();
        let second = run(&cfg).unwrap();
        assert_eq!(first.stdout, second.stdout);
        assert!(first.verified && second.verified);
    }

    #[test]
    fn json_content_for_the_example() {
        let doc = json_doc(&config(7, 203));
        assert_eq!(doc.p, 7);
        assert_eq!(doc.n, 203);
        assert_eq!(doc.y, 3);
        assert_eq!(doc.sigma, 3);
        assert_eq!(doc.sigma_plus, 4);
        assert_eq!(doc.centralizer.torsion_order, 14);
        assert_eq!(doc.centralizer.free_rank, 4);
        assert_eq!(doc.assumptions.len(), 3);
        assert_eq!(doc.factors.len(), 2);
        assert_eq!(doc.factors[0].j, 1);
        assert_eq!(doc.factors[0].pairs, vec![[1, 1], [1, 3]]);
        assert_eq!(doc.factors[0].dims, vec![8, 8]);
        assert_eq!(doc.factors[1].j, 3);
        assert_eq!(doc.factors[1].pairs, vec![[1, 1], [3, 1]]);
        assert_eq!(doc.factors[1].dims, vec![3, 3, 2, 3, 3, 2]);
        assert_eq!(doc.factors[1].b_j, 3);
        assert!(!doc.factors[1].oracle_checked);
        assert_eq!(doc.iso_step, 3);
        assert_eq!(doc.p_period, 6);
    }

    #[test]
    fn json_key_order_is_fixed() {
        let mut cfg = config(7, 203);
        cfg.format = Format::Json;
        let out = run(&cfg).unwrap().stdout;
        let positions: Vec<usize> = [
            "\"p\"",
            "\"n\"",
            "\"y\"",
            "\"sigma\"",
            "\"sigma_plus\"",
            "\"centralizer\"",
            "\"assumptions\"",
            "\"factors\"",
            "\"iso_step\"",
            "\"p_period\"",
        ]
        .iter()
        .map(|k| out.find(k).unwrap_or_else(|| panic!("missing key {k}")))
        .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
    }

    #[test]
    fn text_mirrors_the_numeric_content() {
        let out = run(&config(7, 203)).unwrap().stdout;
        for needle in [
            "p           = 7",
            "n           = 203",
            "sigma       = 3",
            "sigma_plus  = 4",
            "Z/14Z x Z^4",
            "[3, 3, 2, 3, 3, 2]",
            "[8, 8]",
            "iso_step = 3",
            "p_period = 6",
        ] {
            assert!(out.contains(needle), "missing {needle:?} in:\n{out}");
        }
    }

    #[test]
    fn oracle_checks_pass_for_the_example() {
        let mut cfg = config(7, 203);
        cfg.oracle = true;
        cfg.format = Format::Json;
        let out = run(&cfg).unwrap();
        assert!(out.verified);
        let doc: ReportDoc = serde_json::from_str(&out.stdout).unwrap();
        assert!(doc.factors.iter().all(|f| f.oracle_checked));
    }

    #[test]
    fn oracle_guard_skips_but_does_not_fail() {
        let mut cfg = config(7, 203);
        cfg.oracle = true;
        cfg.max_oracle_dim = 2;
        let out = run(&cfg).unwrap();
        assert!(out.verified, "skipping is not a failure");
        assert!(out.diagnostics.iter().any(|d| d.contains("oracle skipped")));
        let doc = json_doc(&cfg);
        assert!(doc.factors.iter().all(|f| !f.oracle_checked));
    }

    #[test]
    fn j_filter_restricts_factors_only() {
        let mut cfg = config(7, 203);
        cfg.j_filter = Some(3);
        let doc = json_doc(&cfg);
        assert_eq!(doc.factors.len(), 1);
        assert_eq!(doc.factors[0].j, 3);
        assert_eq!(doc.iso_step, 3, "global values still cover every j");
        assert_eq!(
            run(&RunConfig {
                j_filter: Some(2),
                ..config(7, 203)
            }),
            Err(Error::InvalidStep { j: 2, y: 3 })
        );
    }

    #[test]
    fn explicit_factor_lists_match_trial_division() {
        let by_value = json_doc(&config(7, 203));
        let by_factors = json_doc(&RunConfig::new(
            7,
            NSpec::Factors(vec![
                PrimeFactor { q: 29, e: 1 },
                PrimeFactor { q: 7, e: 1 },
            ]),
        ));
        assert_eq!(by_value, by_factors);
    }

    #[test]
    fn factor_list_validation() {
        let dup = RunConfig::new(
            7,
            NSpec::Factors(vec![PrimeFactor { q: 7, e: 1 }, PrimeFactor { q: 7, e: 2 }]),
        );
        assert_eq!(run(&dup), Err(Error::DuplicateFactor(7)));
        let composite = RunConfig::new(7, NSpec::Factors(vec![PrimeFactor { q: 4, e: 1 }]));
        assert_eq!(run(&composite), Err(Error::NotPrime(4)));
        let zero = RunConfig::new(7, NSpec::Factors(vec![PrimeFactor { q: 7, e: 0 }]));
        assert_eq!(run(&zero), Err(Error::ZeroMultiplicity { q: 7 }));
    }

    #[test]
    fn input_validation() {
        assert_eq!(run(&config(6, 203)), Err(Error::NotOddPrime(6)));
        assert_eq!(run(&config(7, 0)), Err(Error::ZeroN));
        assert_eq!(run(&config(5, 7)), Err(Error::PrimeNotDividingN { p: 5 }));
    }

    #[test]
    fn cycle_length_discrepancies_are_surfaced() {
        let out = run(&config(19, 133)).unwrap();
        assert!(
            out.diagnostics
                .iter()
                .any(|d| d.contains("Galois orbit length")),
            "{:?}",
            out.diagnostics
        );
    }

    #[test]
    fn assumptions_depend_on_the_class_number_range() {
        assert_eq!(json_doc(&config(7, 203)).assumptions.len(), 3);
        assert_eq!(json_doc(&config(23, 23)).assumptions.len(), 2);
    }
}
