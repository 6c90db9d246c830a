//! Dense-tableau primal simplex over exact rationals with Bland's rule.
//!
//! Solves `max c.x` subject to `A x <= b`, `x >= 0` with `b >= 0`, so the
//! slack basis is feasible from the start.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("row {row} has {found} coefficients, expected {expected}")]
    DimensionMismatch { row: usize, found: usize, expected: usize },
    #[error("right-hand side of row {0} is negative")]
    NegativeRhs(usize),
    #[error("objective is unbounded")]
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    /// One value per variable.
    pub primal: Vec<Rational>,
    /// One price per constraint row; `b.y = value` and `A^T y >= c`.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> Result<LpSolution, LpError> {
    let vars = c.len();
    let rows = a.len();
    if b.len() != rows {
        return Err(LpError::DimensionMismatch {
            row: rows,
            found: b.len(),
            expected: rows,
        });
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != vars {
            return Err(LpError::DimensionMismatch {
                row: i,
                found: row.len(),
                expected: vars,
            });
        }
        if b[i].is_negative() {
            return Err(LpError::NegativeRhs(i));
        }
    }

    let width = vars + rows;
    // tableau rows: constraints, then the objective row holding reduced costs
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(rows + 1);
    for (i, row) in a.iter().enumerate() {
        let mut r = Vec::with_capacity(width + 1);
        r.extend(row.iter().cloned());
        r.extend((0..rows).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }));
        r.push(b[i].clone());
        t.push(r);
    }
    let mut obj: Vec<Rational> = c.iter().map(|v| -v.clone()).collect();
    obj.extend((0..=rows).map(|_| Rational::zero()));
    t.push(obj);
    let mut basis: Vec<usize> = (vars..width).collect();

    let mut pivots = 0;
    loop {
        let Some(enter) = (0..width).find(|&j| t[rows][j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..rows {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (row, _) = leave.ok_or(LpError::Unbounded)?;
        pivot(&mut t, row, enter);
        basis[row] = enter;
        pivots += 1;
    }

    let mut primal = vec![Rational::zero(); vars];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < vars {
            primal[bv] = t[i][width].clone();
        }
    }
    let dual = (vars..width).map(|j| t[rows][j].clone()).collect();
    Ok(LpSolution {
        value: t[rows][width].clone(),
        primal,
        dual,
        pivots,
    })
}

fn pivot(t: &mut [Vec<Rational>], row: usize, col: usize) {
    let p = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v /= &p;
    }
    let pivot_row = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (v, pv) in r.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn textbook_example() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
        let sol = maximize(&q(&[3, 5]), &[q(&[1, 0]), q(&[0, 2]), q(&[3, 2])], &q(&[4, 12, 18])).unwrap();
        assert_eq!(sol.value, int(36));
        assert_eq!(sol.primal, q(&[2, 6]));
        assert_eq!(sol.dual, vec![int(0), ratio(3, 2), int(1)]);
    }

    #[test]
    fn fractional_optimum() {
        // max x + y, 2x + y <= 1, x + 2y <= 1 -> 2/3
        let sol = maximize(&q(&[1, 1]), &[q(&[2, 1]), q(&[1, 2])], &q(&[1, 1])).unwrap();
        assert_eq!(sol.value, ratio(2, 3));
        assert_eq!(sol.primal, vec![ratio(1, 3), ratio(1, 3)]);
    }

    #[test]
    fn degenerate_does_not_cycle() {
        // Beale's cycling example, terminates under Bland's rule
        let a = vec![
            vec![ratio(1, 4), int(-60), -ratio(1, 25), int(9)],
            vec![ratio(1, 2), int(-90), -ratio(1, 50), int(3)],
            vec![int(0), int(0), int(1), int(0)],
        ];
        let c = vec![ratio(3, 4), int(-150), ratio(1, 50), int(-6)];
        let sol = maximize(&c, &a, &q(&[0, 0, 1])).unwrap();
        assert_eq!(sol.value, ratio(1, 20));
    }

    #[test]
    fn errors() {
        assert_eq!(maximize(&q(&[1]), &[q(&[-1])], &q(&[1])).unwrap_err(), LpError::Unbounded);
        assert_eq!(maximize(&q(&[1]), &[q(&[1])], &q(&[-1])).unwrap_err(), LpError::NegativeRhs(0));
        assert!(matches!(
            maximize(&q(&[1, 1]), &[q(&[1])], &q(&[1])),
            Err(LpError::DimensionMismatch { row: 0, .. })
        ));
    }
}
