//! Report assembly for the `pretzel-hfk` command-line tool: single knots,
//! parameter sweeps, the verification suite, and the output formats.

pub mod render;
pub mod verify;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use pretzel_hfk::alexander::{euler_characteristic, fox_alexander};
use pretzel_hfk::hfk::{
    mirror_transform, readouts, reduce_two_lines, theorem1_closed_form, theorem2_closed_form,
};
use pretzel_hfk::kauffman::chain_summary_for;
use pretzel_hfk::pretzel::wirtinger;
use pretzel_hfk::{
    classify, Abc, BigradedTable, ClassTag, LaurentPoly, PretzelClass, PretzelParams, Variant,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid knot triple {0:?}: expected P1,P2,P3")]
    BadTriple(String),
    #[error("invalid sweep {0:?}: {1}")]
    BadSweep(String, String),
    #[error(transparent)]
    Compute(#[from] pretzel_hfk::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum FamilyFilter {
    #[default]
    Thm1,
    Thm2,
    All,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum VariantChoice {
    A,
    #[default]
    B,
    Both,
}

impl VariantChoice {
    /// The marked-point variant whose table is reported.
    pub fn primary(&self) -> Variant {
        match self {
            VariantChoice::A => Variant::A,
            VariantChoice::B | VariantChoice::Both => Variant::B,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleChoice {
    Fox,
    Statesum,
    #[default]
    Both,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub family: FamilyFilter,
    pub variant: VariantChoice,
    pub oracle: OracleChoice,
    pub verify: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Reported, never fails the run.
    Info,
}

impl CheckStatus {
    pub fn name(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Info => "info",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Self {
            name: name.to_string(),
            status,
            detail: detail.into(),
        }
    }

    pub fn info(name: &str, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            status: CheckStatus::Info,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub knot: [i64; 3],
    pub class: PretzelClass,
    pub alexander: Option<LaurentPoly>,
    pub table: Option<BigradedTable>,
    pub genus: Option<i64>,
    pub fibered: Option<bool>,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn is_computed(&self) -> bool {
        self.table.is_some()
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }
}

/// Process exit status for a batch of reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Computed = 0,
    Usage = 1,
    OutOfScope = 2,
    VerificationFailed = 3,
}

pub fn outcome(reports: &[RunReport]) -> Outcome {
    if reports.iter().any(RunReport::failed) {
        Outcome::VerificationFailed
    } else if reports.iter().any(|r| !r.is_computed()) {
        Outcome::OutOfScope
    } else {
        Outcome::Computed
    }
}

/// A knot triple `P1,P2,P3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triple(pub [i64; 3]);

impl FromStr for Triple {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let parts: Vec<i64> = s
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::BadTriple(s.to_string()))?;
        let arr: [i64; 3] = parts
            .try_into()
            .map_err(|_| CliError::BadTriple(s.to_string()))?;
        Ok(Triple(arr))
    }
}

/// Inclusive ranges for `a`, `b`, `c`, written `a=L..U,b=L..U,c=L..U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepRanges {
    pub a: (i64, i64),
    pub b: (i64, i64),
    pub c: (i64, i64),
}

impl SweepRanges {
    /// Parameters in lexicographic `(a, b, c)` order.
    pub fn params(&self) -> Vec<Abc> {
        let mut out = Vec::new();
        for a in self.a.0..=self.a.1 {
            for b in self.b.0..=self.b.1 {
                for c in self.c.0..=self.c.1 {
                    out.push(Abc::new(a, b, c));
                }
            }
        }
        out
    }
}

impl FromStr for SweepRanges {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = |why: &str| CliError::BadSweep(s.to_string(), why.to_string());
        let mut found: [Option<(i64, i64)>; 3] = [None; 3];
        for item in s.split(',') {
            let (key, range) = item
                .split_once('=')
                .ok_or_else(|| bad("expected key=L..U"))?;
            let slot = match key.trim() {
                "a" => 0,
                "b" => 1,
                "c" => 2,
                other => return Err(bad(&format!("unknown parameter {other:?}"))),
            };
            let (lo, hi) = range.split_once("..").ok_or_else(|| bad("expected L..U"))?;
            let lo: i64 = lo
                .trim()
                .parse()
                .map_err(|_| bad("bound is not an integer"))?;
            let hi: i64 = hi
                .trim()
                .parse()
                .map_err(|_| bad("bound is not an integer"))?;
            if lo < 1 {
                return Err(bad("bounds must be at least 1"));
            }
            if hi < lo {
                return Err(bad(&format!("empty range for {}", key.trim())));
            }
            if found[slot].replace((lo, hi)).is_some() {
                return Err(bad(&format!("{} given twice", key.trim())));
            }
        }
        match found {
            [Some(a), Some(b), Some(c)] => Ok(SweepRanges { a, b, c }),
            _ => Err(bad("all of a, b and c are required")),
        }
    }
}

fn out_of_scope_report(knot: [i64; 3], class: PretzelClass) -> RunReport {
    let detail = class.reason.clone().unwrap_or_default();
    let detail = match class.tag {
        ClassTag::PriorWork => format!("covered by earlier computations: {detail}"),
        _ => format!("not a knot in scope: {detail}"),
    };
    RunReport {
        knot,
        class,
        alexander: None,
        table: None,
        genus: None,
        fibered: None,
        checks: vec![Check::info("scope", detail)],
    }
}

fn fox_of(bands: [i64; 3]) -> Result<LaurentPoly, CliError> {
    let params = PretzelParams::new(bands[0], bands[1], bands[2])?;
    Ok(fox_alexander(&wirtinger(&params))?)
}

/// Classifies the triple and computes its homology table.
pub fn run_single(triple: [i64; 3], opts: &Options) -> Result<RunReport, CliError> {
    let class = classify(triple[0], triple[1], triple[2]);
    let Some(abc) = class.abc.filter(|_| class.tag.is_computed()) else {
        return Ok(out_of_scope_report(triple, class));
    };
    let mut checks = Vec::new();

    let (alex, table) = if class.tag.is_family1() {
        let summary = chain_summary_for(abc, opts.variant.primary())?;
        let table = reduce_two_lines(&summary);
        let alex = match opts.oracle {
            OracleChoice::Fox => fox_of(class.canonical)?,
            OracleChoice::Statesum | OracleChoice::Both => euler_characteristic(&summary)?,
        };
        if opts.verify || opts.oracle == OracleChoice::Both {
            let (statesum, fox) = match opts.oracle {
                OracleChoice::Fox => (euler_characteristic(&summary)?, alex.clone()),
                _ => (alex.clone(), fox_of(class.canonical)?),
            };
            checks.push(Check::new(
                "oracle_agreement",
                statesum == fox,
                format!("state sum {statesum}; Fox calculus {fox}"),
            ));
        }
        let closed = theorem1_closed_form(abc, &alex)?;
        checks.push(Check::new(
            "closed_form_equivalence",
            closed == table,
            format!("reduction {table} vs closed form {closed}"),
        ));
        (alex, table)
    } else {
        if opts.oracle == OracleChoice::Statesum {
            checks.push(Check::info(
                "oracle",
                "no Kauffman-state grading tables for this family; used Fox calculus",
            ));
        }
        let alex = fox_of(class.canonical)?;
        let table = theorem2_closed_form(abc, &alex)?;
        (alex, table)
    };

    if opts.verify {
        checks.extend(verify::family_checks(&class, abc, &alex, &table, opts)?);
    }

    let table = if class.mirrored {
        mirror_transform(&table)
    } else {
        table
    };
    let r = readouts(&table, &alex)?;
    Ok(RunReport {
        knot: triple,
        class,
        alexander: Some(alex),
        table: Some(table),
        genus: Some(r.genus),
        fibered: Some(r.fibered),
        checks,
    })
}

/// Runs every family member selected by `ranges` and `opts.family`, in
/// lexicographic `(a, b, c)` order (family 1 before family 2).
pub fn run_sweep(ranges: &SweepRanges, opts: &Options) -> Result<Vec<RunReport>, CliError> {
    let triples: Vec<[i64; 3]> = ranges
        .params()
        .into_iter()
        .flat_map(|abc| match opts.family {
            FamilyFilter::Thm1 => vec![abc.family1_triple()],
            FamilyFilter::Thm2 => vec![abc.family2_triple()],
            FamilyFilter::All => vec![abc.family1_triple(), abc.family2_triple()],
        })
        .collect();
    triples.par_iter().map(|t| run_single(*t, opts)).collect()
}

/// `run_single` or `run_sweep` with the full check suite enabled.
pub fn run_verify(target: &Target, opts: &Options) -> Result<Vec<RunReport>, CliError> {
    let opts = Options {
        verify: true,
        ..*opts
    };
    match target {
        Target::Single(t) => Ok(vec![run_single(t.0, &opts)?]),
        Target::Sweep(r) => run_sweep(r, &opts),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Single(Triple),
    Sweep(SweepRanges),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Single(Triple([p, q, r])) => write!(f, "K({p},{q},{r})"),
            Target::Sweep(s) => {
                write!(
                    f,
                    "a={}..{},b={}..{},c={}..{}",
                    s.a.0, s.a.1, s.b.0, s.b.1, s.c.0, s.c.1
                )
            }
        }
    }
}
