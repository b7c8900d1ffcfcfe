//! Kauffman states of the standard `K(-2a, 2b+1, 2c+1)` projection and their
//! Maslov and Alexander gradings.
//!
//! A state is fixed by where the two distinguished regions put their marked
//! points: next to crossings of bands 2 and 3 (family `A`, indices `j, k`),
//! bands 1 and 3 (family `B`, indices `i, k`), or bands 1 and 2 (family `C`,
//! indices `i, j`), with `i < 2a`, `j <= 2b`, `k <= 2c`. The two marked-point
//! variants share the states but grade them differently.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::pretzel::{Abc, PretzelClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
}

/// Position of the marked point on the knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    A,
    B,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::A, Variant::B];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::A => "a",
            Variant::B => "b",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KauffmanState {
    pub family: Family,
    pub idx1: i64,
    pub idx2: i64,
    pub variant: Variant,
}

impl KauffmanState {
    pub fn new(family: Family, idx1: i64, idx2: i64, variant: Variant) -> Self {
        Self {
            family,
            idx1,
            idx2,
            variant,
        }
    }

    /// Checks both indices against the ranges of the state's family.
    pub fn check_range(&self, abc: Abc) -> Result<()> {
        let (r1, r2) = index_bounds(self.family, abc);
        if (0..=r1).contains(&self.idx1) && (0..=r2).contains(&self.idx2) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("{self} with {abc}")))
        }
    }
}

impl fmt::Display for KauffmanState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}_{{{},{}}}({})",
            self.family,
            self.idx1,
            self.idx2,
            self.variant.name()
        )
    }
}

/// Inclusive upper bounds of `(idx1, idx2)`.
fn index_bounds(family: Family, Abc { a, b, c }: Abc) -> (i64, i64) {
    match family {
        Family::A => (2 * b, 2 * c),
        Family::B => (2 * a - 1, 2 * c),
        Family::C => (2 * a - 1, 2 * b),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bigrading {
    /// Maslov grading.
    pub m: i64,
    /// Alexander (spin) grading.
    pub s: i64,
}

/// `i mod 2` for `i >= 0`.
pub fn parity(i: i64) -> i64 {
    debug_assert!(i >= 0);
    i.rem_euclid(2)
}

/// All states of a `Thm1` knot, ordered by `(family, idx1, idx2)`.
pub fn enumerate_states(cls: &PretzelClass, variant: Variant) -> Result<Vec<KauffmanState>> {
    Ok(states_for(cls.thm1_abc()?, variant))
}

pub fn states_for(abc: Abc, variant: Variant) -> Vec<KauffmanState> {
    let mut out = Vec::with_capacity(state_count(abc) as usize);
    for family in [Family::A, Family::B, Family::C] {
        let (r1, r2) = index_bounds(family, abc);
        for x in 0..=r1 {
            for y in 0..=r2 {
                out.push(KauffmanState::new(family, x, y, variant));
            }
        }
    }
    out
}

/// `(2b+1)(2c+1) + 2a(2c+1) + 2a(2b+1)`
pub fn state_count(Abc { a, b, c }: Abc) -> i64 {
    (2 * b + 1) * (2 * c + 1) + 2 * a * (2 * c + 1) + 2 * a * (2 * b + 1)
}

pub fn grading(state: &KauffmanState, cls: &PretzelClass) -> Result<Bigrading> {
    grading_for(state, cls.thm1_abc()?)
}

/// Maslov and Alexander gradings. Variant (b) uses one formula per family;
/// variant (a) has separate rows for `B_{0,k}` and `C_{0,j}`.
pub fn grading_for(state: &KauffmanState, abc: Abc) -> Result<Bigrading> {
    state.check_range(abc)?;
    let Abc { b, c, .. } = abc;
    let special = state.variant == Variant::A && state.idx1 == 0;
    let (m, s) = match state.family {
        Family::A => {
            let (j, k) = (state.idx1, state.idx2);
            (j - k - 2 * b, (j - k) + (c - b))
        }
        Family::B if special => {
            let k = state.idx2;
            (-k - 2 * b - 1, -k + (c - b))
        }
        Family::B => {
            let (i, k) = (state.idx1, state.idx2);
            (-parity(i) - k, b + c + 1 - parity(i) - k)
        }
        Family::C if special => {
            let j = state.idx2;
            (j - 2 * b, j - b + c + 1)
        }
        Family::C => {
            let (i, j) = (state.idx1, state.idx2);
            (j - parity(i) - 2 * b - 2 * c - 1, j - parity(i) - b - c)
        }
    };
    Ok(Bigrading { m, s })
}

/// `s - m - (b + c)`
pub fn delta(state: &KauffmanState, cls: &PretzelClass) -> Result<i64> {
    delta_for(state, cls.thm1_abc()?)
}

pub fn delta_for(state: &KauffmanState, abc: Abc) -> Result<i64> {
    let g = grading_for(state, abc)?;
    Ok(g.s - g.m - (abc.b + abc.c))
}

/// Generator counts of the chain complex, per bigrading and per family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSummary {
    pub abc: Abc,
    pub variant: Variant,
    pub counts: BTreeMap<Bigrading, u64>,
    pub per_family: BTreeMap<(Family, i64), u64>,
}

impl ChainSummary {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Number of `A` states in Alexander grading `s`.
    pub fn n_a(&self, s: i64) -> u64 {
        self.per_family.get(&(Family::A, s)).copied().unwrap_or(0)
    }

    /// Number of `B` and `C` states in Alexander grading `s`.
    pub fn n_bc(&self, s: i64) -> u64 {
        [Family::B, Family::C]
            .iter()
            .map(|&f| self.per_family.get(&(f, s)).copied().unwrap_or(0))
            .sum()
    }

    /// Alexander gradings that carry at least one state, ascending.
    pub fn spin_gradings(&self) -> Vec<i64> {
        let mut s: Vec<i64> = self.per_family.keys().map(|&(_, s)| s).collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

pub fn chain_summary(cls: &PretzelClass, variant: Variant) -> Result<ChainSummary> {
    chain_summary_for(cls.thm1_abc()?, variant)
}

pub fn chain_summary_for(abc: Abc, variant: Variant) -> Result<ChainSummary> {
    let mut counts = BTreeMap::new();
    let mut per_family = BTreeMap::new();
    for state in states_for(abc, variant) {
        let g = grading_for(&state, abc)?;
        *counts.entry(g).or_insert(0) += 1;
        *per_family.entry((state.family, g.s)).or_insert(0) += 1;
    }
    Ok(ChainSummary {
        abc,
        variant,
        counts,
        per_family,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pretzel::classify;
    use proptest::prelude::*;

    fn abc111() -> Abc {
        Abc::new(1, 1, 1)
    }

    fn st(f: Family, x: i64, y: i64, v: Variant) -> KauffmanState {
        KauffmanState::new(f, x, y, v)
    }

    #[test]
    fn parity_values() {
        assert_eq!(parity(0), 0);
        assert_eq!(parity(1), 1);
        assert_eq!(parity(4), 0);
    }

    #[test]
    fn enumeration_counts() {
        let states = enumerate_states(&classify(-2, 3, 3), Variant::B).unwrap();
        assert_eq!(states.len(), 21);
        let count = |f| states.iter().filter(|s| s.family == f).count();
        assert_eq!(
            (count(Family::A), count(Family::B), count(Family::C)),
            (9, 6, 6)
        );

        let states = enumerate_states(&classify(-4, 5, 5), Variant::A).unwrap();
        assert_eq!(states.len(), 65);

        assert!(enumerate_states(&classify(2, -3, 3), Variant::B).is_err());
        assert!(enumerate_states(&classify(2, -3, -3), Variant::B).is_err());
    }

    #[test]
    fn states_are_sorted_and_unique() {
        let states = states_for(Abc::new(2, 1, 3), Variant::B);
        assert!(states.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn variants_share_state_lists() {
        let abc = Abc::new(2, 3, 1);
        let strip = |v| -> Vec<_> {
            states_for(abc, v)
                .into_iter()
                .map(|s| (s.family, s.idx1, s.idx2))
                .collect()
        };
        assert_eq!(strip(Variant::A), strip(Variant::B));
    }

    #[test]
    fn grading_table_rows() {
        let g = |s: KauffmanState| grading_for(&s, abc111()).unwrap();
        assert_eq!(
            g(st(Family::A, 0, 0, Variant::A)),
            Bigrading { m: -2, s: 0 }
        );
        assert_eq!(
            g(st(Family::B, 1, 0, Variant::A)),
            Bigrading { m: -1, s: 2 }
        );
        assert_eq!(
            g(st(Family::C, 0, 0, Variant::A)),
            Bigrading { m: -2, s: 1 }
        );
        assert_eq!(
            g(st(Family::B, 0, 1, Variant::B)),
            Bigrading { m: -1, s: 2 }
        );
        // The special row for B_{0,k}(a): m = -k - 2b - 1, s = -k + (c - b).
        assert_eq!(
            g(st(Family::B, 0, 1, Variant::A)),
            Bigrading { m: -4, s: -1 }
        );
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        for s in [
            st(Family::A, 3, 0, Variant::B),
            st(Family::B, 2, 0, Variant::B),
            st(Family::C, 0, -1, Variant::A),
        ] {
            assert!(matches!(
                grading_for(&s, abc111()),
                Err(Error::IndexOutOfRange(_))
            ));
        }
    }

    #[test]
    fn special_rows_keep_delta_one() {
        for k in 0..=2 {
            assert_eq!(
                delta_for(&st(Family::B, 0, k, Variant::A), abc111()).unwrap(),
                1
            );
        }
    }

    #[test]
    fn summary_of_smallest_knot() {
        let sum = chain_summary(&classify(-2, 3, 3), Variant::B).unwrap();
        let a: Vec<_> = (-3..=3).map(|s| sum.n_a(s)).collect();
        let bc: Vec<_> = (-3..=3).map(|s| sum.n_bc(s)).collect();
        assert_eq!(a, vec![0, 1, 2, 3, 2, 1, 0]);
        assert_eq!(bc, vec![1, 2, 2, 2, 2, 2, 1]);
        assert_eq!(sum.total(), 21);

        let sum_a = chain_summary(&classify(-2, 3, 3), Variant::A).unwrap();
        for s in -3..=3 {
            assert_eq!(sum_a.n_bc(s), sum.n_bc(s), "s = {s}");
        }
    }

    /// Brute-force scan of all B/C pairs with equal Alexander grading.
    #[test]
    fn spin_coincidence_in_variant_b() {
        for (a, b, c) in [(1, 1, 1), (1, 2, 3), (2, 2, 2), (3, 1, 2), (2, 4, 1)] {
            let abc = Abc::new(a, b, c);
            let states = states_for(abc, Variant::B);
            let bs = states.iter().filter(|s| s.family == Family::B);
            for sb in bs {
                for sc in states.iter().filter(|s| s.family == Family::C) {
                    let (gb, gc) = (grading_for(sb, abc).unwrap(), grading_for(sc, abc).unwrap());
                    if gb.s == gc.s {
                        assert_eq!((sc.idx2, sb.idx2), (2 * b, 2 * c));
                        assert_eq!((parity(sb.idx1), parity(sc.idx1)), (1, 0));
                        assert_eq!(gb.s, b - c);
                    }
                }
            }
        }
    }

    fn arb_abc() -> impl Strategy<Value = Abc> {
        (1i64..=4, 1i64..=4, 1i64..=4).prop_map(|(a, b, c)| Abc::new(a, b, c))
    }

    proptest! {
        #[test]
        fn delta_separates_families(abc in arb_abc()) {
            for v in Variant::BOTH {
                for s in states_for(abc, v) {
                    let d = delta_for(&s, abc).unwrap();
                    prop_assert_eq!(d, if s.family == Family::A { 0 } else { 1 });
                }
            }
        }

        #[test]
        fn family_counts(abc in arb_abc()) {
            let Abc { a, b, c } = abc;
            let sum = chain_summary_for(abc, Variant::B).unwrap();
            let fam = |f| sum.per_family.iter().filter(|((g, _), _)| *g == f).map(|(_, n)| *n as i64).sum::<i64>();
            prop_assert_eq!(fam(Family::A), (2 * b + 1) * (2 * c + 1));
            prop_assert_eq!(fam(Family::B), 2 * a * (2 * c + 1));
            prop_assert_eq!(fam(Family::C), 2 * a * (2 * b + 1));
            prop_assert_eq!(sum.total() as i64, state_count(abc));
        }

        #[test]
        fn two_line_state_placement(abc in arb_abc()) {
            for v in Variant::BOTH {
                let sum = chain_summary_for(abc, v).unwrap();
                for s in states_for(abc, v) {
                    let g = grading_for(&s, abc).unwrap();
                    let line = if s.family == Family::A { 0 } else { 1 };
                    prop_assert_eq!(g.m, g.s - (abc.b + abc.c) - line);
                }
                prop_assert_eq!(sum.total() as i64, state_count(abc));
            }
        }

        #[test]
        fn marked_point_independence_of_euler_characteristic(abc in arb_abc()) {
            let chi = |v| {
                let mut out = BTreeMap::new();
                for (g, n) in chain_summary_for(abc, v).unwrap().counts {
                    let sign = if g.m.rem_euclid(2) == 0 { 1 } else { -1 };
                    *out.entry(g.s).or_insert(0i64) += sign * n as i64;
                }
                out.retain(|_, x| *x != 0);
                out
            };
            prop_assert_eq!(chi(Variant::A), chi(Variant::B));
        }
    }
}
