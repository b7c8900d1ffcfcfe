//! Alexander polynomials: the graded Euler characteristic of a Kauffman-state
//! chain complex, the Fox-calculus oracle on a Wirtinger presentation, and the
//! torus-knot closed form.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::kauffman::ChainSummary;
use crate::laurent::LaurentPoly;
use crate::pretzel::WirtingerPresentation;

/// Raw graded Euler characteristic `sum (-1)^m count(m, s) t^s`.
pub fn raw_euler_characteristic(summary: &ChainSummary) -> LaurentPoly {
    LaurentPoly::from_terms(summary.counts.iter().map(|(g, &n)| {
        let sign = if g.m.is_even() { 1 } else { -1 };
        (g.s as i32, sign * n as i64)
    }))
}

/// Graded Euler characteristic, normalized to be symmetric with value 1 at `t = 1`.
pub fn euler_characteristic(summary: &ChainSummary) -> Result<LaurentPoly> {
    raw_euler_characteristic(summary).normalize_symmetric()
}

/// Fox derivatives of every relator, abelianized by sending each generator to `t`.
pub fn alexander_matrix(pres: &WirtingerPresentation) -> Vec<Vec<LaurentPoly>> {
    pres.relators
        .iter()
        .map(|word| {
            let mut row = vec![LaurentPoly::zero(); pres.generator_count];
            let mut prefix = 0i32;
            for l in word {
                // d(x)/dx = 1, d(x^-1)/dx = -x^-1, each times the image of the prefix.
                let term = if l.inverse {
                    LaurentPoly::monomial(prefix - 1, -1)
                } else {
                    LaurentPoly::monomial(prefix, 1)
                };
                row[l.generator] = &row[l.generator] + &term;
                prefix += l.exponent() as i32;
            }
            row
        })
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination. Every intermediate
/// division is exact in `Z[t, t^-1]`.
pub fn bareiss_determinant(matrix: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::MalformedPresentation("minor is not square".into()));
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut m = matrix.to_vec();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(LaurentPoly::zero());
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_divide(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Alexander polynomial from the minor that drops relator `row` and generator
/// `col`, normalized.
pub fn fox_alexander_minor(
    pres: &WirtingerPresentation,
    row: usize,
    col: usize,
) -> Result<LaurentPoly> {
    pres.check()?;
    let n = pres.generator_count;
    if col >= n {
        return Err(Error::MalformedPresentation(format!(
            "column {col} out of range"
        )));
    }
    let full = alexander_matrix(pres);
    let keep_rows: Vec<&Vec<LaurentPoly>> = if full.len() + 1 == n {
        full.iter().collect()
    } else if full.len() == n && row < n {
        full.iter()
            .enumerate()
            .filter(|(r, _)| *r != row)
            .map(|(_, v)| v)
            .collect()
    } else {
        return Err(Error::MalformedPresentation(format!(
            "{} relators for {n} generators",
            full.len()
        )));
    };
    let minor: Vec<Vec<LaurentPoly>> = keep_rows
        .into_iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(c, _)| *c != col)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect();
    let det = bareiss_determinant(&minor)?;
    if det.is_zero() {
        return Err(Error::ZeroDeterminant);
    }
    det.normalize_symmetric()
}

/// Alexander polynomial via Fox calculus, deleting the last relator and the
/// last generator.
pub fn fox_alexander(pres: &WirtingerPresentation) -> Result<LaurentPoly> {
    let last = pres.generator_count.saturating_sub(1);
    fox_alexander_minor(pres, last, last)
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, normalized.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(Error::BadTorusParams(p, q));
    }
    let t_pow_minus_one = |e: i64| LaurentPoly::from_terms([(e as i32, 1), (0, -1)]);
    let num = &t_pow_minus_one(p * q) * &t_pow_minus_one(1);
    let den = &t_pow_minus_one(p) * &t_pow_minus_one(q);
    num.exact_divide(&den)?.normalize_symmetric()
}
