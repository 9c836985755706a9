//! Small dense linear algebra over exact rationals.
//!
//! Everything here is Gaussian elimination on matrices of size at most
//! rank+1, so no pivoting strategy beyond "first nonzero" is needed.

use crate::Rat;
use num::{One, Zero};

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn from_i64(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Reduced row echelon form, in place. Returns the pivot column of each
/// pivot row.
pub fn rref(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..cols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let sub = &factor * &m[row][c];
                    m[r][c] = &m[r][c] - sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

pub fn det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return one();
    }
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut result = one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return zero();
        };
        if p != col {
            a.swap(col, p);
            result = -result;
        }
        result = &result * &a[col][col];
        let inv = a[col][col].recip();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] = &a[r][c] - sub;
            }
        }
    }
    result
}

/// Any solution of `a x = b`, or `None` if the system is inconsistent.
pub fn solve_any(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    if rows == 0 {
        return Some(vec![]);
    }
    let cols = a[0].len();
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None; // pivot in the rhs column
    }
    let mut x = vec![zero(); cols];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis of the null space of `a` (rows are functionals on column vectors).
pub fn null_space(a: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![zero(); cols];
        v[free] = one();
        for (r, &col) in pivots.iter().enumerate() {
            v[col] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { one() } else { zero() });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(vals: &[&[i64]]) -> Vec<Vec<Rat>> {
        vals.iter()
            .map(|row| row.iter().map(|&v| from_i64(v)).collect())
            .collect()
    }

    #[test]
    fn det_and_inverse() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        assert_eq!(det(&a), from_i64(3));
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][0], ratio(2, 3));
        assert_eq!(inv[0][1], ratio(1, 3));
    }

    #[test]
    fn solve_underdetermined() {
        // x + y = 2 has a solution; x + y = 2 && x + y = 3 does not.
        let a = m(&[&[1, 1]]);
        let x = solve_any(&a, &[from_i64(2)]).unwrap();
        assert_eq!(&x[0] + &x[1], from_i64(2));
        let b = m(&[&[1, 1], &[1, 1]]);
        assert!(solve_any(&b, &[from_i64(2), from_i64(3)]).is_none());
    }

    #[test]
    fn null_space_dimension() {
        let a = m(&[&[1, 1, 0]]);
        let ns = null_space(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!((&v[0] + &v[1]).is_zero());
        }
    }
}
