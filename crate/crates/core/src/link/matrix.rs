use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Symmetric integer matrix: framings on the diagonal, linking numbers off it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkingMatrix {
    q: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn new(q: Vec<Vec<i64>>) -> Result<Self> {
        let n = q.len();
        if let Some(i) = q.iter().position(|row| row.len() != n) {
            return Err(Error::invariant("square", format!("row {} has {} entries, expected {n}", i + 1, q[i].len())));
        }
        for i in 0..n {
            for j in i + 1..n {
                if q[i][j] != q[j][i] {
                    return Err(Error::invariant(
                        "symmetry",
                        format!("entry ({}, {}) = {} but ({}, {}) = {}", i + 1, j + 1, q[i][j], j + 1, i + 1, q[j][i]),
                    ));
                }
            }
        }
        Ok(LinkingMatrix { q })
    }

    pub fn empty() -> Self {
        LinkingMatrix { q: Vec::new() }
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let n = d.len();
        LinkingMatrix { q: (0..n).map(|i| (0..n).map(|j| if i == j { d[i] } else { 0 }).collect()).collect() }
    }

    pub fn size(&self) -> usize {
        self.q.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.q
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.q[i][j]
    }

    pub fn block_sum(&self, other: &LinkingMatrix) -> LinkingMatrix {
        let (n, m) = (self.size(), other.size());
        let q = (0..n + m)
            .map(|i| {
                (0..n + m)
                    .map(|j| match (i < n, j < n) {
                        (true, true) => self.q[i][j],
                        (false, false) => other.q[i - n][j - n],
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        LinkingMatrix { q }
    }

    /// All diagonal entries even.
    pub fn is_even(&self) -> bool {
        (0..self.size()).all(|i| self.q[i][i] % 2 == 0)
    }

    /// `(positive, negative, zero)` eigenvalue counts, by exact congruence
    /// diagonalisation over `Q`.
    pub fn inertia(&self) -> (usize, usize, usize) {
        let n = self.size();
        let mut a: Vec<Vec<BigRational>> =
            self.q.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
        let (mut pos, mut neg) = (0, 0);
        let mut alive: Vec<usize> = (0..n).collect();
        while !alive.is_empty() {
            let piv = alive.iter().copied().find(|&i| !a[i][i].is_zero());
            let piv = match piv {
                Some(p) => p,
                None => {
                    let pair = alive
                        .iter()
                        .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !a[i][j].is_zero());
                    let Some((i, j)) = pair else { break };
                    // row/col i += row/col j makes a[i][i] = 2 a[i][j] != 0
                    for k in 0..n {
                        let v = a[j][k].clone();
                        a[i][k] += v;
                    }
                    for k in 0..n {
                        let v = a[k][j].clone();
                        a[k][i] += v;
                    }
                    i
                }
            };
            let p = a[piv][piv].clone();
            if p.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            alive.retain(|&x| x != piv);
            for &r in &alive {
                if a[r][piv].is_zero() {
                    continue;
                }
                let f = &a[r][piv] / &p;
                for &c in &alive {
                    let d = &f * &a[piv][c];
                    a[r][c] -= d;
                }
                a[r][piv] = BigRational::zero();
            }
            for &c in &alive {
                a[piv][c] = BigRational::zero();
            }
        }
        (pos, neg, n - pos - neg)
    }

    pub fn signature(&self) -> i64 {
        let (p, m, _) = self.inertia();
        p as i64 - m as i64
    }

    pub fn rank(&self) -> usize {
        let (p, m, _) = self.inertia();
        p + m
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.size() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, len: self.size() })
        }
    }

    /// `E^T q E` where `E` adds `sign` times basis vector `j` to basis vector `i`.
    pub fn handle_slide(&self, i: usize, j: usize, sign: i64) -> Result<Self> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(Error::InvalidInput("a handle cannot slide over itself".into()));
        }
        let s = sign.signum();
        let mut q = self.q.clone();
        let n = self.size();
        for k in 0..n {
            q[i][k] += s * self.q[j][k];
        }
        for k in 0..n {
            q[k][i] = q[i][k];
        }
        q[i][i] = self.q[i][i] + self.q[j][j] + 2 * s * self.q[i][j];
        Ok(LinkingMatrix { q })
    }

    pub fn blow_up(&self, sign: i64) -> Self {
        self.block_sum(&LinkingMatrix::diagonal(&[sign.signum()]))
    }

    pub fn blow_down(&self, index: usize) -> Result<Self> {
        self.check_index(index)?;
        let n = self.size();
        let split = (0..n).all(|k| k == index || self.q[index][k] == 0);
        if !split || self.q[index][index].abs() != 1 {
            return Err(Error::NotBlowDownable(index));
        }
        let q = (0..n)
            .filter(|&i| i != index)
            .map(|i| (0..n).filter(|&j| j != index).map(|j| self.q[i][j]).collect())
            .collect();
        Ok(LinkingMatrix { q })
    }

    /// The same form with rows and columns reordered: new `k` is old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        LinkingMatrix { q: perm.iter().map(|&i| perm.iter().map(|&j| self.q[i][j]).collect()).collect() }
    }
}

/// `E8` with the standard Dynkin diagram, positive definite.
pub fn e8() -> LinkingMatrix {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)];
    let mut q = vec![vec![0i64; 8]; 8];
    for (i, row) in q.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        q[a][b] = -1;
        q[b][a] = -1;
    }
    LinkingMatrix { q }
}

pub fn hyperbolic() -> LinkingMatrix {
    LinkingMatrix { q: vec![vec![0, 1], vec![1, 0]] }
}

/// `2(-E8) + 3H`, the intersection form of K3.
pub fn k3_form() -> LinkingMatrix {
    let neg = LinkingMatrix { q: e8().q.iter().map(|r| r.iter().map(|x| -x).collect()).collect() };
    let h = hyperbolic();
    neg.block_sum(&neg).block_sum(&h).block_sum(&h).block_sum(&h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetry_is_enforced() {
        let e = LinkingMatrix::new(vec![vec![0, 1], vec![2, 0]]).unwrap_err();
        assert!(matches!(e, Error::InvariantViolation { ref invariant, .. } if invariant == "symmetry"));
    }

    #[test]
    fn signatures() {
        assert_eq!(hyperbolic().signature(), 0);
        assert_eq!(e8().signature(), 8);
        assert_eq!(e8().rank(), 8);
        let k3 = k3_form();
        assert_eq!(k3.size(), 22);
        assert_eq!(k3.signature(), -16);
        assert_eq!(k3.rank(), 22);
        assert!(k3.is_even());
        assert_eq!(LinkingMatrix::diagonal(&[1, -1, 0]).inertia(), (1, 1, 1));
    }

    #[test]
    fn slides() {
        let h = hyperbolic();
        assert_eq!(h.handle_slide(0, 1, 1).unwrap().entries(), &[vec![2, 1], vec![1, 0]]);
        let d = LinkingMatrix::diagonal(&[1, -1]);
        let s = d.handle_slide(0, 1, 1).unwrap();
        assert_eq!(s.get(0, 0), 0);
        assert_eq!(s.handle_slide(0, 1, -1).unwrap(), d);
        assert!(matches!(h.handle_slide(0, 2, 1), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn blows() {
        let z = LinkingMatrix::diagonal(&[0]);
        let up = z.blow_up(1);
        assert_eq!(up, LinkingMatrix::diagonal(&[0, 1]));
        assert_eq!(up.blow_down(1).unwrap(), z);
        assert_eq!(hyperbolic().blow_down(0), Err(Error::NotBlowDownable(0)));
    }
}
