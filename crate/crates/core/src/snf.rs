//! Smith normal form of small integer matrices.

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r` (all positive) of a
/// dense integer matrix given as rows.
pub fn invariant_factors(rows: &[Vec<i64>]) -> Vec<i64> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let mut diag = Vec::new();

    for t in 0..nrows.min(ncols) {
        // Pivot: smallest nonzero entry in the remaining block.
        let Some((pi, pj)) = (t..nrows)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs())
        else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut changed = false;
            for i in t + 1..nrows {
                let q = m[i][t].div_euclid(m[t][t]);
                if q != 0 {
                    let pivot = m[t].clone();
                    for (x, y) in m[i][t..].iter_mut().zip(&pivot[t..]) {
                        *x -= q * y;
                    }
                }
                if m[i][t] != 0 {
                    // Remainder is smaller than the pivot: swap it in.
                    m.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..ncols {
                let q = m[t][j].div_euclid(m[t][t]);
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if m[t][j] != 0 {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // Enforce divisibility by folding an offending row into row t.
            let p = m[t][t];
            let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| m[i][j] % p != 0));
            match bad {
                Some(i) => {
                    let row = m[i].clone();
                    for (x, y) in m[t][t..].iter_mut().zip(&row[t..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    invariant_factors(rows).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_forms() {
        assert_eq!(
            invariant_factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            vec![2, 6, 12]
        );
        assert_eq!(invariant_factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(
            invariant_factors(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]),
            vec![1, 1, 2]
        );
        assert!(invariant_factors(&[]).is_empty());
        assert!(invariant_factors(&[vec![0, 0]]).is_empty());
    }

    #[test]
    fn partial_matching_is_unimodular() {
        let m = vec![vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 0]];
        assert_eq!(invariant_factors(&m), vec![1, 1]);
    }

    fn det(m: &[Vec<i64>]) -> i64 {
        // Cofactor expansion; fine for the tiny matrices used here.
        if m.is_empty() {
            return 1;
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, v)| *v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum()
    }

    proptest! {
        #[test]
        fn product_of_factors_is_abs_det(m in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 3)) {
            let d = det(&m);
            let f = invariant_factors(&m);
            if d == 0 {
                prop_assert!(f.len() < 3);
            } else {
                prop_assert_eq!(f.len(), 3);
                prop_assert_eq!(f.iter().product::<i64>(), d.abs());
            }
            for w in f.windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
        }
    }
}
