//! Knot Floer homology tables: reduction of the Kauffman-state complex,
//! closed-form evaluation from the Alexander polynomial, the explicit
//! cancelling pairs, and the standard readouts.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::kauffman::{grading_for, parity, ChainSummary, Family, KauffmanState, Variant};
use crate::laurent::LaurentPoly;
use crate::pretzel::Abc;
use crate::snf::invariant_factors;

/// Ranks of free abelian groups indexed by `(m, s)` (Maslov, Alexander).
/// Zero ranks are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BigradedTable {
    entries: BTreeMap<(i64, i64), u64>,
}

impl BigradedTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = ((i64, i64), u64)>>(entries: I) -> Self {
        let mut t = Self::new();
        for ((m, s), r) in entries {
            t.add(m, s, r);
        }
        t
    }

    pub fn add(&mut self, m: i64, s: i64, rank: u64) {
        if rank > 0 {
            *self.entries.entry((m, s)).or_insert(0) += rank;
        }
    }

    pub fn rank(&self, m: i64, s: i64) -> u64 {
        self.entries.get(&(m, s)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// `((m, s), rank)` in ascending `(m, s)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `(m, s, rank)` sorted by `s` descending, then `m` ascending.
    pub fn groups(&self) -> Vec<(i64, i64, u64)> {
        let mut g: Vec<_> = self.entries().map(|((m, s), r)| (m, s, r)).collect();
        g.sort_by_key(|&(m, s, _)| (std::cmp::Reverse(s), m));
        g
    }

    pub fn total_rank(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn max_s(&self) -> Option<i64> {
        self.entries.keys().map(|&(_, s)| s).max()
    }

    pub fn min_s(&self) -> Option<i64> {
        self.entries.keys().map(|&(_, s)| s).min()
    }

    /// Total rank in Alexander grading `s`.
    pub fn rank_at_s(&self, s: i64) -> u64 {
        self.entries
            .iter()
            .filter(|((_, t), _)| *t == s)
            .map(|(_, r)| r)
            .sum()
    }

    /// `sum (-1)^m rank(m, s) t^s`
    pub fn euler_characteristic(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.entries().map(|((m, s), r)| {
            let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            (s as i32, sign * r as i64)
        }))
    }
}

impl fmt::Display for BigradedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups()
            .iter()
            .map(|(m, s, r)| format!("({m},{s}):{r}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Cancels `A` states against `B`/`C` states in each Alexander grading.
///
/// `A` states sit at `m = s - (b+c)` and the others one below, so the surplus
/// of whichever family is larger survives on its line.
pub fn reduce_two_lines(summary: &ChainSummary) -> BigradedTable {
    let bc = summary.abc.b + summary.abc.c;
    let mut table = BigradedTable::new();
    for s in summary.spin_gradings() {
        let (na, nbc) = (summary.n_a(s), summary.n_bc(s));
        if na > nbc {
            table.add(s - bc, s, na - nbc);
        } else if nbc > na {
            table.add(s - bc - 1, s, nbc - na);
        }
    }
    table
}

/// Places `|a_s|` copies of `Z` in grading `s`, on whichever of
/// `m = s - shift` and `m = s - shift - 1` has `(-1)^m` equal to the sign of
/// `a_s`. The resulting Euler characteristic is `alex` itself.
fn place_on_two_lines(alex: &LaurentPoly, shift: i64) -> Result<BigradedTable> {
    if !alex.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let mut table = BigradedTable::new();
    for (s, coeff) in alex.terms() {
        let s = s as i64;
        let rank = coeff.abs().to_u64().ok_or(Error::NoLineAssignment(s))?;
        let want_even = coeff.is_positive();
        let m = [s - shift, s - shift - 1]
            .into_iter()
            .find(|m| (m.rem_euclid(2) == 0) == want_even)
            .ok_or(Error::NoLineAssignment(s))?;
        table.add(m, s, rank);
    }
    if table.euler_characteristic() != *alex {
        return Err(Error::NoLineAssignment(0));
    }
    Ok(table)
}

/// Homology of `K(-2a, 2b+1, 2c+1)`: support on `s - m in {b+c, b+c+1}`.
pub fn theorem1_closed_form(abc: Abc, alex: &LaurentPoly) -> Result<BigradedTable> {
    place_on_two_lines(alex, abc.b + abc.c)
}

/// Homology of `K(2a, -(2b+1), 2c+1)`: support on `s - m in {c-b-1, c-b}`.
pub fn theorem2_closed_form(abc: Abc, alex: &LaurentPoly) -> Result<BigradedTable> {
    place_on_two_lines(alex, abc.c - abc.b - 1)
}

/// `(m, s) -> (-m, -s)`
pub fn mirror_transform(table: &BigradedTable) -> BigradedTable {
    BigradedTable::from_entries(table.entries().map(|((m, s), r)| ((-m, -s), r)))
}

/// `rank(m, s) == rank(m - 2s, -s)` for every entry.
pub fn symmetry_check(table: &BigradedTable) -> bool {
    table
        .entries()
        .all(|((m, s), r)| table.rank(m - 2 * s, -s) == r)
}

/// Checks that every entry lies on `s - m = low` or `s - m = low + 1`.
pub fn two_line_support(table: &BigradedTable, low: i64) -> bool {
    table
        .entries()
        .all(|((m, s), _)| s - m == low || s - m == low + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairingKind {
    /// `A_{2b-l, p-l} -> B_{2a-1-l, p+e(l)}`, the domain `D(l, r)`.
    DlrDisk,
    /// `A_{0,k} -> B_{0,k}`, graded compatibly only for marked point (a).
    SpecialB0k,
    /// `A_{2b-p, 0}(a) -> C_{0, 2b-p-1}(a)`.
    EightGon,
    /// `A_{p-l, 2c-l} -> C_{2a-1-l, p+1-e(l)}` with `p = s + b + c`; the
    /// `A`/`C` counterpart of `DlrDisk` used at `s <= b - c`.
    MirrorDisk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairingEntry {
    pub source: KauffmanState,
    pub target: KauffmanState,
    pub kind: PairingKind,
    /// Domain index `l` for `DlrDisk`/`MirrorDisk`; the `A` state's offset
    /// `p` (resp. `k`) for `EightGon` (resp. `SpecialB0k`).
    pub l: i64,
    /// Distance of the target's band index from the bottom of its band:
    /// `2c - k` for `B` targets, `2b - j` for `C` targets.
    pub r: i64,
}

impl PairingEntry {
    /// Source is an `A` state, target a `B`/`C` state, both in range, with
    /// equal Alexander grading and Maslov gradings differing by one.
    pub fn check(&self, abc: Abc) -> Result<()> {
        let describe = || format!("{:?} {} -> {}", self.kind, self.source, self.target);
        if self.source.family != Family::A || self.target.family == Family::A {
            return Err(Error::IncompatiblePairing(describe()));
        }
        let gs = grading_for(&self.source, abc)?;
        let gt = grading_for(&self.target, abc)?;
        if gs.s != gt.s || gs.m != gt.m + 1 {
            return Err(Error::IncompatiblePairing(describe()));
        }
        Ok(())
    }
}

/// The cancelling pairs from `A` states to `B`/`C` states in Alexander
/// grading `s`.
///
/// For `s > b - c` these are the `D(l, r)` disks (`l >= 0`), plus, for marked
/// point (a), the 8-gon pair. For `s <= b - c` the `A`/`C` counterparts are
/// used. Marked point (a) also gets the `A_{0,k} -> B_{0,k}` pair wherever it
/// lands. Every returned pair has been checked for grading compatibility.
pub fn pairing_differential(abc: Abc, variant: Variant, s: i64) -> Result<Vec<PairingEntry>> {
    let Abc { a, b, c } = abc;
    let top = b + c + 1;
    if s.abs() > top {
        return Err(Error::GradingOutOfRange {
            s,
            lo: -top,
            hi: top,
        });
    }
    let st = |f, x, y| KauffmanState::new(f, x, y, variant);
    // Band-1 index 0 is graded by the special rows under marked point (a).
    let min_i = if variant == Variant::A { 1 } else { 0 };
    let mut out = Vec::new();

    if s > b - c {
        let p = b + c - s;
        for l in 0..2 * a {
            let (i, kb) = (2 * a - 1 - l, p + parity(l));
            if 2 * b - l < 0 || p - l < 0 || p - l > 2 * c || i < min_i || kb > 2 * c {
                continue;
            }
            out.push(PairingEntry {
                source: st(Family::A, 2 * b - l, p - l),
                target: st(Family::B, i, kb),
                kind: PairingKind::DlrDisk,
                l,
                r: 2 * c - kb,
            });
        }
        let j = 2 * b - p - 1;
        if variant == Variant::A && p >= 0 && j >= 0 {
            out.push(PairingEntry {
                source: st(Family::A, 2 * b - p, 0),
                target: st(Family::C, 0, j),
                kind: PairingKind::EightGon,
                l: p,
                r: 2 * b - j,
            });
        }
    } else {
        let p = s + b + c;
        for l in 0..2 * a {
            let (i, jc) = (2 * a - 1 - l, p + 1 - parity(l));
            if p - l < 0 || p - l > 2 * b || 2 * c - l < 0 || i < min_i || jc > 2 * b {
                continue;
            }
            out.push(PairingEntry {
                source: st(Family::A, p - l, 2 * c - l),
                target: st(Family::C, i, jc),
                kind: PairingKind::MirrorDisk,
                l,
                r: 2 * b - jc,
            });
        }
    }

    if variant == Variant::A {
        let k = c - b - s;
        if (0..=2 * c).contains(&k) {
            out.push(PairingEntry {
                source: st(Family::A, 0, k),
                target: st(Family::B, 0, k),
                kind: PairingKind::SpecialB0k,
                l: k,
                r: 2 * c - k,
            });
        }
    }

    for e in &out {
        e.check(abc)?;
    }
    Ok(out)
}

/// Homology of one Alexander grading computed from the pair matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingHomology {
    pub s: i64,
    pub n_a: usize,
    pub n_bc: usize,
    pub matrix_rank: usize,
    /// Invariant factors other than 1.
    pub torsion: Vec<i64>,
    /// `matrix_rank == min(n_a, n_bc)`
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixHomology {
    pub table: BigradedTable,
    pub per_grading: Vec<GradingHomology>,
}

impl MatrixHomology {
    pub fn is_complete(&self) -> bool {
        self.per_grading.iter().all(|g| g.complete)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.per_grading.iter().all(|g| g.torsion.is_empty())
    }
}

/// Builds, for each Alexander grading, the matrix with a row per `A` state
/// and a column per `B`/`C` state, `+1` on each listed pair, and reads off
/// kernel and cokernel ranks from its Smith normal form.
pub fn homology_via_matrix(
    summary: &ChainSummary,
    pairs: &[PairingEntry],
) -> Result<MatrixHomology> {
    let abc = summary.abc;
    let bc = abc.b + abc.c;
    let mut rows: BTreeMap<i64, Vec<KauffmanState>> = BTreeMap::new();
    let mut cols: BTreeMap<i64, Vec<KauffmanState>> = BTreeMap::new();
    for state in crate::kauffman::states_for(abc, summary.variant) {
        let g = grading_for(&state, abc)?;
        let bucket = if state.family == Family::A {
            &mut rows
        } else {
            &mut cols
        };
        bucket.entry(g.s).or_default().push(state);
    }

    for e in pairs {
        e.check(abc)?;
    }

    let mut table = BigradedTable::new();
    let mut per_grading = Vec::new();
    for s in summary.spin_gradings() {
        let r = rows.get(&s).map(Vec::as_slice).unwrap_or(&[]);
        let c = cols.get(&s).map(Vec::as_slice).unwrap_or(&[]);
        let mut matrix = vec![vec![0i64; c.len()]; r.len()];
        for e in pairs {
            let (Some(i), Some(j)) = (
                r.iter().position(|x| *x == e.source),
                c.iter().position(|x| *x == e.target),
            ) else {
                continue;
            };
            matrix[i][j] = 1;
        }
        let factors = invariant_factors(&matrix);
        let rank = factors.len();
        table.add(s - bc, s, (r.len() - rank) as u64);
        table.add(s - bc - 1, s, (c.len() - rank) as u64);
        per_grading.push(GradingHomology {
            s,
            n_a: r.len(),
            n_bc: c.len(),
            matrix_rank: rank,
            torsion: factors.into_iter().filter(|&d| d != 1).collect(),
            complete: rank == r.len().min(c.len()),
        });
    }
    Ok(MatrixHomology { table, per_grading })
}

/// All pairs for every Alexander grading of the knot.
pub fn all_pairings(abc: Abc, variant: Variant) -> Result<Vec<PairingEntry>> {
    let top = abc.b + abc.c + 1;
    let mut out = Vec::new();
    for s in -top..=top {
        out.extend(pairing_differential(abc, variant, s)?);
    }
    Ok(out)
}

/// The explicit six-part formulas for `K(-2a, 2b+1, 2c+1)` with `a <= b <= c`,
/// read literally: `s = b + c - p` in parts 1-4 and `s = b - c - q - 1`
/// (with `q` in the role of `p`) in parts 5 and 6.
///
/// Only a cross-check; the two-line statement is authoritative.
pub fn theorem1_literal_parts(abc: Abc) -> BigradedTable {
    let Abc { a, b, c } = abc;
    let mut t = BigradedTable::new();
    let top = b + c + 1;
    t.add(0, top, a as u64);
    t.add(-2 * top, -top, a as u64);
    let rank = |x: i64| x.max(0) as u64;
    for p in 0..=2 * c {
        let s = b + c - p;
        if p < 2 * a {
            t.add(-(p + 1), s, rank(2 * a - 1 - p));
        } else if p <= 2 * b {
            t.add(-p, s, rank(p - (2 * a - 1)));
        } else {
            t.add(-p, s, rank(2 * (b - a) + 1));
        }
    }
    for q in 0..2 * b {
        let s = b - c - q - 1;
        if q <= 2 * (b - a) {
            t.add(-2 * c - q + 1, s, rank(2 * (b - a) - q));
        } else {
            t.add(-2 * c - q, s, rank(q - 2 * (b - a)));
        }
    }
    t
}

/// `(m, s, literal rank, authoritative rank)` wherever the two tables differ.
pub fn literal_discrepancies(
    literal: &BigradedTable,
    table: &BigradedTable,
) -> Vec<(i64, i64, u64, u64)> {
    let mut keys: Vec<(i64, i64)> = literal
        .entries()
        .chain(table.entries())
        .map(|(k, _)| k)
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter_map(|(m, s)| {
            let (x, y) = (literal.rank(m, s), table.rank(m, s));
            (x != y).then_some((m, s, x, y))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HfkResult {
    pub table: BigradedTable,
    /// Top Alexander grading with a nonzero group.
    pub genus: i64,
    /// Rank one in the top Alexander grading.
    pub fibered: bool,
    pub total_rank: u64,
    pub alexander: LaurentPoly,
}

pub fn readouts(table: &BigradedTable, alex: &LaurentPoly) -> Result<HfkResult> {
    let genus = table.max_s().ok_or(Error::EmptyTable)?;
    Ok(HfkResult {
        table: table.clone(),
        genus,
        fibered: table.rank_at_s(genus) == 1,
        total_rank: table.total_rank(),
        alexander: alex.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::torus_alexander;
    use crate::kauffman::chain_summary_for;

    fn t34_table() -> BigradedTable {
        BigradedTable::from_entries([
            ((0, 3), 1),
            ((-1, 2), 1),
            ((-2, 0), 1),
            ((-5, -2), 1),
            ((-6, -3), 1),
        ])
    }

    fn abc111() -> Abc {
        Abc::new(1, 1, 1)
    }

    #[test]
    fn table_never_stores_zero() {
        let mut t = BigradedTable::new();
        t.add(0, 0, 0);
        assert!(t.is_empty());
        t.add(1, 1, 2);
        t.add(1, 1, 3);
        assert_eq!(t.rank(1, 1), 5);
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn reduction_of_smallest_knot() {
        let sum = chain_summary_for(abc111(), Variant::B).unwrap();
        let t = reduce_two_lines(&sum);
        assert_eq!(t, t34_table());
        assert_eq!(t.rank_at_s(1), 0);
    }

    #[test]
    fn reduction_of_empty_summary() {
        let sum = ChainSummary {
            abc: abc111(),
            variant: Variant::B,
            counts: BTreeMap::new(),
            per_family: BTreeMap::new(),
        };
        assert!(reduce_two_lines(&sum).is_empty());
    }

    #[test]
    fn closed_form_of_smallest_knot() {
        let alex = torus_alexander(3, 4).unwrap();
        assert_eq!(theorem1_closed_form(abc111(), &alex).unwrap(), t34_table());
    }

    #[test]
    fn closed_form_rejects_unnormalized() {
        let alex = -torus_alexander(3, 4).unwrap();
        assert_eq!(
            theorem1_closed_form(abc111(), &alex),
            Err(Error::NotNormalized)
        );
        let asym = LaurentPoly::from_terms([(2, 1), (0, 1), (-1, -1)]);
        assert_eq!(
            theorem2_closed_form(abc111(), &asym),
            Err(Error::NotNormalized)
        );
    }

    #[test]
    fn family2_trivial_polynomial() {
        let t = theorem2_closed_form(abc111(), &LaurentPoly::one()).unwrap();
        assert_eq!(t, BigradedTable::from_entries([((0, 0), 1)]));
        let t = theorem2_closed_form(Abc::new(1, 1, 3), &LaurentPoly::one()).unwrap();
        assert_eq!(t, BigradedTable::from_entries([((-2, 0), 1)]));
    }

    #[test]
    fn mirror_examples() {
        let m = mirror_transform(&t34_table());
        let want = BigradedTable::from_entries([
            ((0, -3), 1),
            ((1, -2), 1),
            ((2, 0), 1),
            ((5, 2), 1),
            ((6, 3), 1),
        ]);
        assert_eq!(m, want);
        assert_eq!(mirror_transform(&m), t34_table());
        assert_eq!(m.total_rank(), 5);
        assert_eq!(m.max_s(), Some(3));
    }

    #[test]
    fn symmetry_examples() {
        assert!(symmetry_check(&t34_table()));
        assert!(!symmetry_check(&BigradedTable::from_entries([((0, 1), 1)])));
        assert!(symmetry_check(&BigradedTable::new()));
    }

    #[test]
    fn readouts_of_smallest_knot() {
        let r = readouts(&t34_table(), &torus_alexander(3, 4).unwrap()).unwrap();
        assert_eq!((r.genus, r.fibered, r.total_rank), (3, true, 5));
        assert_eq!(
            readouts(&BigradedTable::new(), &LaurentPoly::one()),
            Err(Error::EmptyTable)
        );
    }

    #[test]
    fn pairing_example_variant_b() {
        let pairs = pairing_differential(abc111(), Variant::B, 1).unwrap();
        let b = |f, x, y| KauffmanState::new(f, x, y, Variant::B);
        let l1 = pairs.iter().find(|e| e.l == 1).unwrap();
        assert_eq!(
            (l1.source, l1.target),
            (b(Family::A, 1, 0), b(Family::B, 0, 2))
        );
        assert_eq!(l1.r, 0);
        // The rectangle D(0, r) is listed too.
        let l0 = pairs.iter().find(|e| e.l == 0).unwrap();
        assert_eq!(
            (l0.source, l0.target),
            (b(Family::A, 2, 1), b(Family::B, 1, 1))
        );
        assert_eq!(pairs.len(), 2);
    }

    #[test]
    fn pairing_example_variant_a() {
        let pairs = pairing_differential(abc111(), Variant::A, 0).unwrap();
        let a = |f, x, y| KauffmanState::new(f, x, y, Variant::A);
        assert!(pairs.iter().any(|e| e.kind == PairingKind::SpecialB0k
            && e.source == a(Family::A, 0, 0)
            && e.target == a(Family::B, 0, 0)));
        // B_{0,0}(b) is graded differently, so the pair is absent there.
        let pairs_b = pairing_differential(abc111(), Variant::B, 0).unwrap();
        assert!(pairs_b.iter().all(|e| e.kind != PairingKind::SpecialB0k));
    }

    #[test]
    fn pairing_rejects_far_gradings() {
        assert!(matches!(
            pairing_differential(abc111(), Variant::B, 4),
            Err(Error::GradingOutOfRange { s: 4, .. })
        ));
    }

    #[test]
    fn incompatible_pair_is_caught() {
        let b = |f, x, y| KauffmanState::new(f, x, y, Variant::B);
        let e = PairingEntry {
            source: b(Family::A, 0, 0),
            target: b(Family::B, 0, 0),
            kind: PairingKind::SpecialB0k,
            l: 0,
            r: 0,
        };
        assert!(matches!(
            e.check(abc111()),
            Err(Error::IncompatiblePairing(_))
        ));
    }

    #[test]
    fn matrix_path_on_smallest_knot() {
        let sum = chain_summary_for(abc111(), Variant::B).unwrap();
        let pairs = all_pairings(abc111(), Variant::B).unwrap();
        let h = homology_via_matrix(&sum, &pairs).unwrap();
        let g1 = h.per_grading.iter().find(|g| g.s == 1).unwrap();
        assert_eq!(
            (g1.n_a, g1.n_bc, g1.matrix_rank, g1.complete),
            (2, 2, 2, true)
        );
        assert!(h.is_torsion_free());
        if h.is_complete() {
            assert_eq!(h.table, reduce_two_lines(&sum));
        }
        for g in h.per_grading.iter().filter(|g| g.complete) {
            for m in [g.s - 2, g.s - 3] {
                assert_eq!(h.table.rank(m, g.s), reduce_two_lines(&sum).rank(m, g.s));
            }
        }
    }

    #[test]
    fn literal_parts_disagree_only_on_the_negative_side() {
        let lit = theorem1_literal_parts(abc111());
        assert_eq!(lit.rank(-3, -2), 1);
        let d = literal_discrepancies(&lit, &t34_table());
        assert!(d.contains(&(-3, -2, 1, 0)));
        assert!(d.contains(&(-5, -2, 0, 1)));
        assert!(d.iter().all(|&(_, s, _, _)| s < 0));
    }
}
