//! Fraction-free Gauss–Jordan elimination over an exact integral domain.

use crate::error::{Error, Result};
use crate::exactnum::{ExactDiv, Rational};
use crate::par::Exec;

/// Solution of `A X = B` in the form `X = numerators / det`.
#[derive(Debug, Clone)]
pub struct FracFreeSolution<D> {
    /// `±det(A)`; every diagonal entry of the reduced matrix equals it.
    pub det: D,
    /// `det · X`, one row per unknown, one column per right-hand side.
    pub numerators: Vec<Vec<D>>,
}

/// Solve `A X = B` without leaving the domain `D`.
///
/// Every intermediate entry is a minor of the augmented matrix, so each
/// division by the previous pivot is exact. Returns `Ok(None)` for a
/// singular `A`.
pub fn fraction_free_solve<D: ExactDiv>(
    a: &[Vec<D>],
    b: &[Vec<D>],
    exec: Exec,
) -> Result<Option<FracFreeSolution<D>>> {
    let n = a.len();
    let nrhs = b.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<D>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            debug_assert_eq!(row.len(), n);
            row.iter().chain(rhs.iter()).cloned().collect()
        })
        .collect();
    let width = n + nrhs;
    let mut prev = D::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(None);
        };
        m.swap(k, p);
        let pivot_row = m[k].clone();
        let pivot = pivot_row[k].clone();
        let failed = std::sync::atomic::AtomicBool::new(false);
        exec.for_each_mut(&mut m, |i, row| {
            if i == k {
                return;
            }
            let factor = row[k].clone();
            for j in 0..width {
                if j == k {
                    continue;
                }
                let t = pivot.mul_ref(&row[j]).sub_ref(&factor.mul_ref(&pivot_row[j]));
                match t.div_exact(&prev) {
                    Some(q) => row[j] = q,
                    None => failed.store(true, std::sync::atomic::Ordering::Relaxed),
                }
            }
            row[k] = D::zero();
        });
        if failed.into_inner() {
            return Err(Error::Consistency(
                "inexact division in fraction-free elimination".into(),
            ));
        }
        prev = pivot;
    }
    let numerators = m.into_iter().map(|row| row[n..].to_vec()).collect();
    Ok(Some(FracFreeSolution {
        det: prev,
        numerators,
    }))
}

/// Inverse of a small rational matrix.
pub fn inverse(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let id: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::from_integer(((i == j) as i64).into()))
                .collect()
        })
        .collect();
    let sol = fraction_free_solve(a, &id, Exec::Sequential).ok()??;
    Some(
        sol.numerators
            .into_iter()
            .map(|row| row.into_iter().map(|x| x / &sol.det).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, VPoly};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn inverse_of_cartan_c2() {
        let a = m(&[&[2, -1], &[-2, 2]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![int(1), rat(1, 2)], vec![int(1), int(1)]]);
    }

    #[test]
    fn singular_detected() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(fraction_free_solve(&a, &m(&[&[1], &[1]]), Exec::Sequential)
            .unwrap()
            .is_none());
    }

    #[test]
    fn needs_row_swap() {
        let a = m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        let b = m(&[&[1], &[2], &[3]]);
        let sol = fraction_free_solve(&a, &b, Exec::Sequential).unwrap().unwrap();
        for (i, row) in a.iter().enumerate() {
            let lhs: Rational = row
                .iter()
                .zip(&sol.numerators)
                .map(|(aij, xj)| aij * &xj[0] / &sol.det)
                .sum();
            assert_eq!(lhs, b[i][0]);
        }
    }

    #[test]
    fn polynomial_entries_stay_polynomial() {
        // [[v, 1], [1, v]] x = [1, 0]: det = v^2 - 1, x = (v, -1)/(v^2 - 1)
        let v = VPoly::var();
        let one = VPoly::one();
        let a = vec![vec![v.clone(), one.clone()], vec![one.clone(), v.clone()]];
        let b = vec![vec![one.clone()], vec![VPoly::zero()]];
        let sol = fraction_free_solve(&a, &b, Exec::Parallel).unwrap().unwrap();
        let det = VPoly::new(vec![int(-1), int(0), int(1)]);
        assert!(sol.det == det || sol.det == -&det);
        let sign = if sol.det == det { int(1) } else { int(-1) };
        assert_eq!(sol.numerators[0][0], v.scale(&sign));
        assert_eq!(sol.numerators[1][0], VPoly::constant(-sign));
    }
}
