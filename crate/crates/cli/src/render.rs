//! JSON, CSV and plain-text renderings of run reports.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use pretzel_hfk::{BigradedTable, LaurentPoly};

use crate::{CheckStatus, RunReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Pretty,
}

#[derive(Serialize)]
struct ClassJson<'a> {
    tag: &'a str,
    a: Option<i64>,
    b: Option<i64>,
    c: Option<i64>,
    mirrored: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
}

#[derive(Serialize)]
struct GroupJson {
    m: i64,
    s: i64,
    rank: u64,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    status: &'a str,
    detail: &'a str,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    knot: [i64; 3],
    class: ClassJson<'a>,
    alexander: Vec<(i32, Value)>,
    groups: Vec<GroupJson>,
    genus: Option<i64>,
    fibered: Option<bool>,
    checks: Vec<CheckJson<'a>>,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    computed: usize,
    out_of_scope: usize,
    failed: usize,
}

#[derive(Serialize)]
struct SweepJson<'a> {
    reports: Vec<ReportJson<'a>>,
    summary: Summary,
}

fn coefficient(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(c.to_string()),
    }
}

/// `[exponent, coefficient]` pairs in ascending exponent order.
pub fn alexander_pairs(p: &LaurentPoly) -> Vec<(i32, Value)> {
    p.terms().map(|(e, c)| (e, coefficient(c))).collect()
}

fn report_json(r: &RunReport) -> ReportJson<'_> {
    let abc = r.class.abc;
    ReportJson {
        knot: r.knot,
        class: ClassJson {
            tag: r.class.tag.name(),
            a: abc.map(|x| x.a),
            b: abc.map(|x| x.b),
            c: abc.map(|x| x.c),
            mirrored: r.class.mirrored,
            reason: r.class.reason.as_deref(),
        },
        alexander: r
            .alexander
            .as_ref()
            .map(alexander_pairs)
            .unwrap_or_default(),
        groups: r
            .table
            .as_ref()
            .map(|t| {
                t.groups()
                    .into_iter()
                    .map(|(m, s, rank)| GroupJson { m, s, rank })
                    .collect()
            })
            .unwrap_or_default(),
        genus: r.genus,
        fibered: r.fibered,
        checks: r
            .checks
            .iter()
            .map(|c| CheckJson {
                name: &c.name,
                status: c.status.name(),
                detail: &c.detail,
            })
            .collect(),
    }
}

fn summary(reports: &[RunReport]) -> Summary {
    Summary {
        total: reports.len(),
        computed: reports.iter().filter(|r| r.is_computed()).count(),
        out_of_scope: reports.iter().filter(|r| !r.is_computed()).count(),
        failed: reports.iter().filter(|r| r.failed()).count(),
    }
}

/// One report as a JSON object, or a sweep as `{reports, summary}`.
pub fn to_json(reports: &[RunReport], sweep: bool) -> String {
    let mut out = if sweep {
        let doc = SweepJson {
            reports: reports.iter().map(report_json).collect(),
            summary: summary(reports),
        };
        serde_json::to_string_pretty(&doc)
    } else {
        serde_json::to_string_pretty(&report_json(&reports[0]))
    }
    .expect("report serializes");
    out.push('\n');
    out
}

pub fn to_csv(reports: &[RunReport]) -> String {
    let mut out = String::from("p1,p2,p3,tag,a,b,c,mirrored,m,s,rank\n");
    for r in reports {
        let [p1, p2, p3] = r.knot;
        let abc = r
            .class
            .abc
            .map_or(",,".to_string(), |x| format!("{},{},{}", x.a, x.b, x.c));
        let prefix = format!("{p1},{p2},{p3},{},{abc},{}", r.class.tag, r.class.mirrored);
        match &r.table {
            Some(t) => {
                for (m, s, rank) in t.groups() {
                    let _ = writeln!(out, "{prefix},{m},{s},{rank}");
                }
            }
            None => {
                let _ = writeln!(out, "{prefix},,,");
            }
        }
    }
    out
}

/// Ranks laid out with one row per Alexander grading (descending) and one
/// column per Maslov grading.
pub fn grid(table: &BigradedTable) -> String {
    let (Some(smin), Some(smax)) = (table.min_s(), table.max_s()) else {
        return "(empty)\n".to_string();
    };
    let ms: Vec<i64> = table.entries().map(|((m, _), _)| m).collect();
    let (mmin, mmax) = (*ms.iter().min().unwrap(), *ms.iter().max().unwrap());
    let width = table
        .entries()
        .map(|((m, _), r)| m.to_string().len().max(r.to_string().len()))
        .chain([mmin.to_string().len(), mmax.to_string().len()])
        .max()
        .unwrap()
        + 1;
    let label = smin.to_string().len().max(smax.to_string().len()).max(3);
    let mut out = String::new();
    let _ = write!(out, "{:>label$} |", "s\\m");
    for m in mmin..=mmax {
        let _ = write!(out, "{m:>width$}");
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "{}-+{}",
        "-".repeat(label),
        "-".repeat(width * (mmax - mmin + 1) as usize)
    );
    for s in (smin..=smax).rev() {
        let _ = write!(out, "{s:>label$} |");
        for m in mmin..=mmax {
            let r = table.rank(m, s);
            let cell = if r == 0 {
                ".".to_string()
            } else {
                r.to_string()
            };
            let _ = write!(out, "{cell:>width$}");
        }
        out.push('\n');
    }
    out
}

pub fn to_pretty(reports: &[RunReport]) -> String {
    let mut out = String::new();
    for (n, r) in reports.iter().enumerate() {
        if n > 0 {
            out.push('\n');
        }
        let [p1, p2, p3] = r.knot;
        let _ = write!(out, "K({p1},{p2},{p3})  {}", r.class.tag);
        if let Some(abc) = r.class.abc {
            let _ = write!(out, "  {abc}");
        }
        out.push('\n');
        if let Some(alex) = &r.alexander {
            let _ = writeln!(out, "Alexander polynomial: {alex}");
        }
        if let (Some(t), Some(g), Some(f)) = (&r.table, r.genus, r.fibered) {
            let _ = writeln!(
                out,
                "genus {g}, fibered {}, total rank {}",
                if f { "yes" } else { "no" },
                t.total_rank()
            );
            out.push_str(&grid(t));
        }
        for c in &r.checks {
            let _ = writeln!(out, "  [{}] {}: {}", c.status.name(), c.name, c.detail);
        }
    }
    if reports.len() > 1 {
        let s = summary(reports);
        let _ = writeln!(
            out,
            "\n{} knots: {} computed, {} out of scope, {} with failed checks",
            s.total, s.computed, s.out_of_scope, s.failed
        );
    }
    out
}

pub fn render(reports: &[RunReport], format: Format, sweep: bool) -> String {
    match format {
        Format::Json => to_json(reports, sweep),
        Format::Csv => to_csv(reports),
        Format::Pretty => to_pretty(reports),
    }
}

/// Names of failed checks across all reports, for the error stream.
pub fn failures(reports: &[RunReport]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(|c| c.status == CheckStatus::Fail)
                .map(move |c| {
                    format!(
                        "K({},{},{}): {} ({})",
                        r.knot[0], r.knot[1], r.knot[2], c.name, c.detail
                    )
                })
        })
        .collect()
}
