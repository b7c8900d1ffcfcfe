//! The verification suite run by `--verify`.

use num_integer::Integer;
use num_traits::Signed;

use pretzel_hfk::alexander::{euler_characteristic, fox_alexander_minor};
use pretzel_hfk::hfk::{
    all_pairings, homology_via_matrix, literal_discrepancies, mirror_transform, reduce_two_lines,
    symmetry_check, theorem1_closed_form, theorem1_literal_parts, two_line_support,
};
use pretzel_hfk::kauffman::chain_summary_for;
use pretzel_hfk::pretzel::{diagram_info, wirtinger};
use pretzel_hfk::snf::integer_rank;
use pretzel_hfk::{Abc, BigradedTable, LaurentPoly, PretzelClass, PretzelParams, Variant};

use crate::{Check, CliError, Options};

/// Checks for a computed knot. `table` is the unmirrored family table.
pub fn family_checks(
    class: &PretzelClass,
    abc: Abc,
    alex: &LaurentPoly,
    table: &BigradedTable,
    _opts: &Options,
) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    let Abc { a, b, c } = abc;

    let low = if class.tag.is_family1() {
        b + c
    } else {
        c - b - 1
    };
    checks.push(Check::new(
        "two_line_support",
        two_line_support(table, low),
        format!("s - m in {{{low}, {}}}", low + 1),
    ));
    checks.push(Check::new(
        "symmetry",
        symmetry_check(table) && symmetry_check(&mirror_transform(table)),
        "rank(m,s) = rank(m-2s,-s)",
    ));
    let chi = table.euler_characteristic();
    checks.push(Check::new(
        "euler_characteristic",
        chi == *alex,
        format!("table gives {chi}"),
    ));

    let total = table.total_rank();
    let det = alex.at_minus_one().abs();
    let det_ok = det.is_odd() && det <= total.into();
    checks.push(Check::new(
        "parity",
        total % 2 == 1 && det_ok,
        format!("total rank {total}, |Delta(-1)| = {det}"),
    ));

    checks.extend(presentation_checks(class.canonical, alex)?);

    if class.tag.is_family1() {
        checks.extend(family1_checks(abc, alex, table)?);
        let d = diagram_info(class)?;
        checks.push(Check::info(
            "diagram",
            format!(
                "Heegaard genus {}, {} crossings {:?}",
                d.heegaard_genus, d.crossing_count, d.band_crossings
            ),
        ));
        if a <= b && b <= c {
            let diffs = literal_discrepancies(&theorem1_literal_parts(abc), table);
            let detail = if diffs.is_empty() {
                "explicit six-part formulas agree".to_string()
            } else {
                let shown: Vec<String> = diffs
                    .iter()
                    .map(|(m, s, lit, tab)| format!("({m},{s}): {lit} vs {tab}"))
                    .collect();
                format!("explicit formulas differ at {}", shown.join(", "))
            };
            checks.push(Check::info("literal_parts", detail));
        }
    }
    Ok(checks)
}

fn presentation_checks(bands: [i64; 3], alex: &LaurentPoly) -> Result<Vec<Check>, CliError> {
    let pres = wirtinger(&PretzelParams::new(bands[0], bands[1], bands[2])?);
    let n = pres.generator_count;
    let rank = integer_rank(&pres.exponent_matrix());
    let sums_ok = pres.check().is_ok();
    let mut out = vec![Check::new(
        "wirtinger_invariants",
        sums_ok && rank + 1 == n && pres.relators.len() == n,
        format!("{n} generators, exponent matrix rank {rank}"),
    )];
    let other = fox_alexander_minor(&pres, 0, n / 2)?;
    out.push(Check::new(
        "fox_column_independence",
        other == *alex,
        format!("minor (row 0, column {}) gives {other}", n / 2),
    ));
    Ok(out)
}

fn family1_checks(
    abc: Abc,
    alex: &LaurentPoly,
    table: &BigradedTable,
) -> Result<Vec<Check>, CliError> {
    let Abc { a, b, c } = abc;
    let mut checks = Vec::new();

    let sum_a = chain_summary_for(abc, Variant::A)?;
    let sum_b = chain_summary_for(abc, Variant::B)?;
    let (chi_a, chi_b) = (euler_characteristic(&sum_a)?, euler_characteristic(&sum_b)?);
    let (red_a, red_b) = (reduce_two_lines(&sum_a), reduce_two_lines(&sum_b));
    checks.push(Check::new(
        "variant_independence",
        chi_a == chi_b && red_a == red_b,
        format!("variant (a) {red_a}; variant (b) {red_b}"),
    ));

    let closed = theorem1_closed_form(abc, alex)?;
    checks.push(Check::new(
        "closed_form_both_variants",
        closed == red_a && closed == red_b && closed == *table,
        format!("closed form {closed}"),
    ));

    let top = b + c + 1;
    let top_ok = table.max_s() == Some(top)
        && table.rank(0, top) == a as u64
        && table.rank_at_s(top) == a as u64
        && table.rank(-2 * top, -top) == a as u64;
    checks.push(Check::new(
        "top_group",
        top_ok,
        format!(
            "rank {} at (0,{top}), rank {} at ({},{})",
            table.rank(0, top),
            table.rank(-2 * top, -top),
            -2 * top,
            -top
        ),
    ));

    for (variant, summary, reduced) in [(Variant::A, &sum_a, &red_a), (Variant::B, &sum_b, &red_b)]
    {
        let v = variant.name();
        let pairs = match all_pairings(abc, variant) {
            Ok(p) => p,
            Err(e) => {
                checks.push(Check::new(
                    &format!("pairing_integrity_{v}"),
                    false,
                    e.to_string(),
                ));
                continue;
            }
        };
        checks.push(Check::new(
            &format!("pairing_integrity_{v}"),
            true,
            format!("{} pairs, all grading compatible and in range", pairs.len()),
        ));

        let h = homology_via_matrix(summary, &pairs)?;
        let bc = b + c;
        let complete: Vec<_> = h.per_grading.iter().filter(|g| g.complete).collect();
        let agree = complete.iter().all(|g| {
            [g.s - bc, g.s - bc - 1]
                .iter()
                .all(|&m| h.table.rank(m, g.s) == reduced.rank(m, g.s))
        });
        checks.push(Check::new(
            &format!("matrix_agreement_{v}"),
            agree && h.is_torsion_free(),
            format!(
                "{} of {} gradings complete, torsion free: {}",
                complete.len(),
                h.per_grading.len(),
                h.is_torsion_free()
            ),
        ));
        let incomplete: Vec<String> = h
            .per_grading
            .iter()
            .filter(|g| !g.complete)
            .map(|g| g.s.to_string())
            .collect();
        if !incomplete.is_empty() {
            checks.push(Check::info(
                &format!("matrix_completeness_{v}"),
                format!("listed pairs do not span at s = {}", incomplete.join(", ")),
            ));
        }
    }
    Ok(checks)
}
