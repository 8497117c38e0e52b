//! Dense exact linear algebra over [`CycScalar`].

use num_rational::BigRational;

use crate::scalar::CycScalar;

pub type Matrix = Vec<Vec<CycScalar>>;

pub fn identity(n: usize, order: u64) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { CycScalar::one(order) } else { CycScalar::zero(order) }).collect())
        .collect()
}

pub fn scalar_matrix(n: usize, s: &CycScalar) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { s.clone() } else { CycScalar::zero(s.order()) }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    a[i].iter()
                        .zip(b.iter())
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, row)| x * &row[j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[CycScalar]) -> Vec<CycScalar> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// Row-echelon elimination; returns the determinant.
pub fn determinant(a: &Matrix) -> CycScalar {
    let n = a.len();
    let mut m = a.clone();
    let mut det = CycScalar::one(1);
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return CycScalar::zero(1);
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det = &det * &m[col][col];
        let inv = m[col][col].invert().expect("nonzero pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let d = &f * &m[col][c];
                m[r][c] -= d;
            }
        }
    }
    det
}

/// Inverse by Gauss-Jordan, `None` when singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let order = a.iter().flatten().map(CycScalar::order).max().unwrap_or(1);
    let mut m: Matrix = a
        .iter()
        .zip(identity(n, order))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(piv, col);
        let inv = m[col][col].invert().ok()?;
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..2 * n {
                let d = &f * &m[col][c];
                m[r][c] -= d;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Characteristic polynomial `det(xI - A)`, lowest degree first, monic.
pub fn char_poly(a: &Matrix) -> Vec<CycScalar> {
    // Faddeev-LeVerrier
    let n = a.len();
    let order = a.iter().flatten().map(CycScalar::order).max().unwrap_or(1);
    let mut coeffs = vec![CycScalar::zero(order); n + 1];
    coeffs[n] = CycScalar::one(order);
    let mut mk = vec![vec![CycScalar::zero(order); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let am = mat_mul(a, &next);
        let tr: CycScalar = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -tr.scale(&BigRational::new(1.into(), (k as i64).into()));
        mk = next;
    }
    coeffs
}

pub fn is_zero_matrix(a: &Matrix) -> bool {
    a.iter().flatten().all(CycScalar::is_zero)
}

pub fn mat_eq(a: &Matrix, b: &Matrix) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.len() == y.len() && x.iter().zip(y).all(|(p, q)| p == q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| CycScalar::from_int(x)).collect()).collect()
    }

    #[test]
    fn det_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(determinant(&a), CycScalar::from_int(1));
        let inv = inverse(&a).unwrap();
        assert!(mat_eq(&mat_mul(&a, &inv), &identity(2, 1)));
        assert!(inverse(&m(&[&[1, 0], &[0, 0]])).is_none());
        assert!(determinant(&m(&[&[0, 0], &[2, 0]])).is_zero());
    }

    #[test]
    fn characteristic_polynomial() {
        // [[0,1],[1,0]] has x^2 - 1
        let p = char_poly(&m(&[&[0, 1], &[1, 0]]));
        assert_eq!(p, vec![CycScalar::from_int(-1), CycScalar::from_int(0), CycScalar::from_int(1)]);
    }
}
