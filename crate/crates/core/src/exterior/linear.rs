//! Exact linear solves over the field of rational functions.
//!
//! Each equation is first cleared of denominators, then reduced with
//! fraction-free (Bareiss) elimination so every intermediate entry stays a
//! polynomial. Back-substitution is fraction-free as well: with `D` the last
//! pivot, `D·x_k` is a polynomial (Cramer), so each unknown comes out as a
//! single fraction over `D`.

use crate::algebra::{Poly, RatFn};

use super::ExteriorError;

/// Solves the square system `matrix · x = rhs`.
pub fn solve_linear(matrix: &[Vec<RatFn>], rhs: &[RatFn]) -> Result<Vec<RatFn>, ExteriorError> {
    if matrix.len() != rhs.len() || matrix.iter().any(|row| row.len() != matrix.len()) {
        return Err(ExteriorError::NotSquare {
            rows: matrix.len(),
            cols: matrix.first().map_or(0, Vec::len),
        });
    }
    solve_system(matrix, rhs)
}

/// Solves a consistent system with at least as many equations as unknowns
/// and a unique solution.
///
/// Fails with `SingularMatrix` if some unknown has no pivot and with
/// `InconsistentSystem` if a surplus equation reduces to `0 = c ≠ 0`.
pub fn solve_system(matrix: &[Vec<RatFn>], rhs: &[RatFn]) -> Result<Vec<RatFn>, ExteriorError> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if rhs.len() != rows || matrix.iter().any(|r| r.len() != cols) {
        return Err(ExteriorError::ShapeMismatch);
    }
    if cols == 0 {
        return Ok(Vec::new());
    }
    let n = matrix[0][0].n();
    let mut aug: Vec<Vec<Poly>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| clear_denominators(row.iter().chain(std::iter::once(b))))
        .collect();
    if rows < cols {
        return Err(ExteriorError::SingularMatrix);
    }

    let mut prev = Poly::one(n);
    for k in 0..cols {
        // Sparsest nonzero pivot keeps the intermediate polynomials small.
        let pivot = (k..rows)
            .filter(|&r| !aug[r][k].is_zero())
            .min_by_key(|&r| aug[r][k].terms().len())
            .ok_or(ExteriorError::SingularMatrix)?;
        aug.swap(k, pivot);
        let (top, rest) = aug.split_at_mut(k + 1);
        let prow = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..=cols {
                let t = &(&prow[k] * &row[j]) - &(&row[k] * &prow[j]);
                row[j] = t
                    .div_exact(&prev)
                    .expect("fraction-free step divides exactly");
            }
            row[k] = Poly::zero(n);
        }
        prev = aug[k][k].clone();
    }
    if aug[cols..].iter().any(|row| !row[cols].is_zero()) {
        return Err(ExteriorError::InconsistentSystem);
    }

    let det = aug[cols - 1][cols - 1].clone();
    let mut scaled = vec![Poly::zero(n); cols];
    for k in (0..cols).rev() {
        let mut acc = &det * &aug[k][cols];
        for j in k + 1..cols {
            if !aug[k][j].is_zero() && !scaled[j].is_zero() {
                acc = &acc - &(&aug[k][j] * &scaled[j]);
            }
        }
        scaled[k] = acc
            .div_exact(&aug[k][k])
            .expect("Cramer numerators are polynomial");
    }
    let sol = scaled
        .into_iter()
        .map(|p| RatFn::new(p, det.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(sol)
}

/// Multiplies a row of fractions by the product of its distinct
/// denominators.
fn clear_denominators<'a>(row: impl Iterator<Item = &'a RatFn> + Clone) -> Vec<Poly> {
    let mut dens: Vec<&Poly> = Vec::new();
    for c in row.clone() {
        if !c.den().is_one() && !dens.iter().any(|d| *d == c.den()) {
            dens.push(c.den());
        }
    }
    row.map(|c| {
        let mut p = c.num().clone();
        for d in &dens {
            if *d != c.den() {
                p = &p * d;
            }
        }
        p
    })
    .collect()
}

/// `matrix · v` evaluated in `RatFn`.
pub fn mat_vec(matrix: &[Vec<RatFn>], v: &[RatFn]) -> Vec<RatFn> {
    matrix
        .iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(RatFn::zero(v[0].n()), |acc, (a, b)| &acc + &(a * b))
        })
        .collect()
}
