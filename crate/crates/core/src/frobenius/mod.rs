//! Finite-dimensional commutative Frobenius algebras given by structure
//! constants, unit and counit. The comultiplication is always derived from
//! the pairing `(a, b) -> counit(a * b)`.

mod split;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::report::Report;
use crate::scalar::CycScalar;

pub use split::{primitive_idempotents_at, primitive_idempotents_up_to};

#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusAlgebra {
    order: u64,
    labels: Vec<String>,
    /// `mult[(i * n + j) * n + k]` is the coefficient of `b_k` in `b_i * b_j`.
    mult: Vec<CycScalar>,
    unit: Vec<CycScalar>,
    counit: Vec<CycScalar>,
}

/// `delta[(i * n + j) * n + k]` is the coefficient of `b_j (x) b_k` in `Delta(b_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Comultiplication {
    pub dim: usize,
    pub delta: Vec<CycScalar>,
}

impl Comultiplication {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &CycScalar {
        &self.delta[(i * self.dim + j) * self.dim + k]
    }
}

impl FrobeniusAlgebra {
    pub fn new(
        labels: Vec<String>,
        mult: Vec<CycScalar>,
        unit: Vec<CycScalar>,
        counit: Vec<CycScalar>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidInput("algebra must have a nonempty basis".into()));
        }
        if mult.len() != n * n * n || unit.len() != n || counit.len() != n {
            return Err(Error::InvalidInput(format!(
                "expected {} structure constants and vectors of length {n}",
                n * n * n
            )));
        }
        let order = mult.iter().chain(&unit).chain(&counit).fold(1u64, |acc, s| {
            num_integer::Integer::lcm(&acc, &s.order())
        });
        Ok(FrobeniusAlgebra { order, labels, mult, unit, counit })
    }

    /// Builds an algebra from integer structure constants `n_{ij}^k`.
    pub fn from_integer_table(
        labels: Vec<String>,
        table: impl Fn(usize, usize, usize) -> i64,
        unit_index: usize,
        counit: Vec<CycScalar>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut mult = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mult.push(CycScalar::from_int(table(i, j, k)));
                }
            }
        }
        let unit = (0..n).map(|i| CycScalar::from_int((i == unit_index) as i64)).collect();
        Self::new(labels, mult, unit, counit)
    }

    /// Group algebra `k[Z/n]` with counit the indicator of the identity.
    pub fn group_algebra_cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("g{i}") }).collect();
        let counit = (0..n).map(|i| CycScalar::from_int((i == 0) as i64)).collect();
        Self::from_integer_table(labels, |i, j, k| ((i + j) % n == k) as i64, 0, counit)
            .expect("well-formed table")
    }

    /// `k[x]/(x^2)` with the given counit values on `1` and `x`.
    pub fn dual_numbers(eps_one: i64, eps_x: i64) -> Self {
        let labels = vec!["1".to_string(), "x".to_string()];
        let counit = vec![CycScalar::from_int(eps_one), CycScalar::from_int(eps_x)];
        Self::from_integer_table(labels, |i, j, k| (i + j == k) as i64, 0, counit)
            .expect("well-formed table")
    }

    /// The one-dimensional algebra `k` with `counit(1) = c`.
    pub fn ground_field(c: CycScalar) -> Self {
        Self::new(vec!["1".into()], vec![CycScalar::from_int(1)], vec![CycScalar::from_int(1)], vec![c])
            .expect("well-formed")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[CycScalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[CycScalar] {
        &self.counit
    }

    pub fn m(&self, i: usize, j: usize, k: usize) -> &CycScalar {
        let n = self.dim();
        &self.mult[(i * n + j) * n + k]
    }

    /// Same algebra over `Q(z_order)`.
    pub fn embed(&self, order: u64) -> Result<Self> {
        let lift = |v: &[CycScalar]| v.iter().map(|s| s.embed(order)).collect::<Result<Vec<_>>>();
        Ok(FrobeniusAlgebra {
            order,
            labels: self.labels.clone(),
            mult: lift(&self.mult)?,
            unit: lift(&self.unit)?,
            counit: lift(&self.counit)?,
        })
    }

    pub fn multiply(&self, a: &[CycScalar], b: &[CycScalar]) -> Vec<CycScalar> {
        let n = self.dim();
        let mut out = vec![CycScalar::zero(self.order); n];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.m(i, j, k);
                    if !c.is_zero() {
                        *slot += &xy * c;
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<CycScalar> {
        (0..self.dim())
            .map(|k| if k == i { CycScalar::one(self.order) } else { CycScalar::zero(self.order) })
            .collect()
    }

    /// Matrix of `x -> a * x`, columns indexed by basis elements.
    pub fn left_multiplication(&self, a: &[CycScalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<CycScalar>> = (0..n).map(|j| self.multiply(a, &self.basis_vector(j))).collect();
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    pub fn apply_counit(&self, a: &[CycScalar]) -> CycScalar {
        a.iter().zip(&self.counit).map(|(x, e)| x * e).sum()
    }

    /// Gram matrix of `(a, b) -> counit(a * b)` on the basis.
    pub fn pairing_matrix(&self) -> Matrix {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.m(i, j, k) * &self.counit[k]).sum())
                    .collect()
            })
            .collect()
    }

    /// `Delta(a) = sum_i (a b_i) (x) b^i` with `{b^i}` the dual basis of the pairing.
    pub fn derive_comul(&self) -> Result<Comultiplication> {
        let n = self.dim();
        let g = self.pairing_matrix();
        let ginv = linalg::inverse(&g).ok_or(Error::DegeneratePairing)?;
        // dual basis: b^i = sum_k ginv[k][i] b_k
        let mut delta = vec![CycScalar::zero(self.order); n * n * n];
        for a in 0..n {
            for i in 0..n {
                let ab = (0..n).map(|j| self.m(a, i, j).clone()).collect::<Vec<_>>();
                for (j, x) in ab.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for k in 0..n {
                        let y = &ginv[k][i];
                        if !y.is_zero() {
                            delta[(a * n + j) * n + k] += x * y;
                        }
                    }
                }
            }
        }
        Ok(Comultiplication { dim: n, delta })
    }

    /// Matrix of `m . Delta`.
    pub fn window(&self) -> Result<Matrix> {
        let n = self.dim();
        let d = self.derive_comul()?;
        let mut w = vec![vec![CycScalar::zero(self.order); n]; n];
        for a in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = d.get(a, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    for (l, row) in w.iter_mut().enumerate() {
                        let m = self.m(j, k, l);
                        if !m.is_zero() {
                            row[a] += c * m;
                        }
                    }
                }
            }
        }
        Ok(w)
    }

    /// Semisimple iff the window endomorphism is invertible.
    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(!linalg::determinant(&self.window()?).is_zero())
    }

    /// Number of indecomposable summands over the algebraic closure.
    pub fn indecomposable_count(&self) -> Result<usize> {
        if !self.is_semisimple()? {
            return Err(Error::NotSemisimple);
        }
        // a commutative split semisimple algebra is a product of copies of the field
        Ok(self.dim())
    }

    pub fn primitive_idempotents(&self) -> Result<Vec<Vec<CycScalar>>> {
        primitive_idempotents_at(self, self.order)
    }

    /// Blockwise direct sum `A (+) B`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let t = n + m;
        let order = num_integer::Integer::lcm(&self.order, &other.order);
        let mut mult = vec![CycScalar::zero(order); t * t * t];
        for i in 0..t {
            for j in 0..t {
                for k in 0..t {
                    let v = if i < n && j < n && k < n {
                        self.m(i, j, k).clone()
                    } else if i >= n && j >= n && k >= n {
                        other.m(i - n, j - n, k - n).clone()
                    } else {
                        continue;
                    };
                    mult[(i * t + j) * t + k] = v;
                }
            }
        }
        let labels = self
            .labels
            .iter()
            .map(|l| format!("{l}.a"))
            .chain(other.labels.iter().map(|l| format!("{l}.b")))
            .collect();
        let unit = self.unit.iter().chain(&other.unit).cloned().collect();
        let counit = self.counit.iter().chain(&other.counit).cloned().collect();
        Self::new(labels, mult, unit, counit).expect("sizes agree")
    }

    /// Named pass/fail checks of the commutative Frobenius axioms.
    pub fn check_axioms(&self) -> Report {
        let n = self.dim();
        let mut r = Report::new();

        let mut assoc = true;
        'a: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.multiply(&self.multiply(&self.basis_vector(i), &self.basis_vector(j)), &self.basis_vector(k));
                    let rhs = self.multiply(&self.basis_vector(i), &self.multiply(&self.basis_vector(j), &self.basis_vector(k)));
                    if lhs != rhs {
                        assoc = false;
                        break 'a;
                    }
                }
            }
        }
        r.push("associativity", assoc, "");

        let comm = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.m(i, j, k) == self.m(j, i, k))));
        r.push("commutativity", comm, "");

        let unital = (0..n).all(|i| self.multiply(&self.unit, &self.basis_vector(i)) == self.basis_vector(i));
        r.push("unitality", unital, "");

        match self.derive_comul() {
            Err(_) => {
                r.push("pairing_nondegenerate", false, "pairing matrix is singular");
                r.push("counit_compatibility", false, "no comultiplication");
                r.push("cocommutativity", false, "no comultiplication");
                r.push("frobenius_relation", false, "no comultiplication");
            }
            Ok(d) => {
                r.push("pairing_nondegenerate", true, "");
                let counit_ok = (0..n).all(|a| {
                    (0..n).all(|k| {
                        let left: CycScalar = (0..n).map(|j| d.get(a, j, k) * &self.counit[j]).sum();
                        let right: CycScalar = (0..n).map(|j| d.get(a, k, j) * &self.counit[j]).sum();
                        let expect = CycScalar::from_int((a == k) as i64);
                        left == expect && right == expect
                    })
                });
                r.push("counit_compatibility", counit_ok, "");
                let cocomm = (0..n).all(|a| (0..n).all(|j| (0..n).all(|k| d.get(a, j, k) == d.get(a, k, j))));
                r.push("cocommutativity", cocomm, "");
                r.push("frobenius_relation", self.frobenius_relation_holds(&d), "");
            }
        }
        r
    }

    /// `(id (x) m)(Delta (x) id) = (m (x) id)(id (x) Delta)` on every `b_a (x) b_b`.
    pub fn frobenius_relation_holds(&self, d: &Comultiplication) -> bool {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                for p in 0..n {
                    for q in 0..n {
                        let lhs: CycScalar = (0..n).map(|k| d.get(a, p, k) * self.m(k, b, q)).sum();
                        let rhs: CycScalar = (0..n).map(|j| d.get(b, j, q) * self.m(a, j, p)).sum();
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn ints(v: &[i64]) -> Vec<CycScalar> {
        v.iter().map(|&x| CycScalar::from_int(x)).collect()
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| ints(r)).collect()
    }

    #[test]
    fn axioms_of_small_algebras() {
        assert!(FrobeniusAlgebra::group_algebra_cyclic(2).check_axioms().all_passed());
        assert!(FrobeniusAlgebra::dual_numbers(0, 1).check_axioms().all_passed());
        let bad = FrobeniusAlgebra::dual_numbers(1, 0).check_axioms();
        assert!(!bad.get("pairing_nondegenerate").unwrap().passed);
        assert!(bad.get("associativity").unwrap().passed);
    }

    #[test]
    fn comultiplication_examples() {
        let z2 = FrobeniusAlgebra::group_algebra_cyclic(2);
        let d = z2.derive_comul().unwrap();
        // Delta(1) = 1(x)1 + g(x)g
        assert!(d.get(0, 0, 0).is_one() && d.get(0, 1, 1).is_one());
        assert!(d.get(0, 0, 1).is_zero() && d.get(0, 1, 0).is_zero());

        let dn = FrobeniusAlgebra::dual_numbers(0, 1).derive_comul().unwrap();
        // Delta(1) = 1(x)x + x(x)1
        assert!(dn.get(0, 0, 1).is_one() && dn.get(0, 1, 0).is_one());
        assert!(dn.get(0, 0, 0).is_zero() && dn.get(0, 1, 1).is_zero());

        let k = FrobeniusAlgebra::ground_field(CycScalar::from_int(3));
        assert_eq!(*k.derive_comul().unwrap().get(0, 0, 0), CycScalar::from_rational(rational(1, 3), 1));

        assert_eq!(FrobeniusAlgebra::dual_numbers(1, 0).derive_comul(), Err(Error::DegeneratePairing));
    }

    #[test]
    fn window_examples() {
        assert!(linalg::mat_eq(&FrobeniusAlgebra::group_algebra_cyclic(2).window().unwrap(), &mat(&[&[2, 0], &[0, 2]])));
        assert!(linalg::mat_eq(&FrobeniusAlgebra::dual_numbers(0, 1).window().unwrap(), &mat(&[&[0, 0], &[2, 0]])));
        let k = FrobeniusAlgebra::ground_field(CycScalar::from_int(1));
        assert!(linalg::mat_eq(&k.window().unwrap(), &mat(&[&[1]])));
    }

    #[test]
    fn semisimplicity_and_counts() {
        let z2 = FrobeniusAlgebra::group_algebra_cyclic(2);
        assert!(z2.is_semisimple().unwrap());
        assert_eq!(z2.indecomposable_count().unwrap(), 2);
        let dn = FrobeniusAlgebra::dual_numbers(0, 1);
        assert!(!dn.is_semisimple().unwrap());
        assert_eq!(dn.indecomposable_count(), Err(Error::NotSemisimple));
        let k = FrobeniusAlgebra::ground_field(CycScalar::from_int(1));
        assert!(k.is_semisimple().unwrap());
        assert_eq!(k.indecomposable_count().unwrap(), 1);
        assert_eq!(FrobeniusAlgebra::dual_numbers(1, 0).is_semisimple(), Err(Error::DegeneratePairing));
    }

    #[test]
    fn direct_sum_is_blockwise() {
        let a = FrobeniusAlgebra::group_algebra_cyclic(2);
        let b = FrobeniusAlgebra::dual_numbers(0, 1);
        let s = a.direct_sum(&b);
        assert!(s.check_axioms().all_passed());
        assert!(!s.is_semisimple().unwrap());
        assert!(a.direct_sum(&a).is_semisimple().unwrap());
        let w = s.window().unwrap();
        assert!(w[0][2].is_zero() && w[3][1].is_zero());
    }

    #[test]
    fn window_commutes_with_multiplication() {
        let a = FrobeniusAlgebra::group_algebra_cyclic(3).direct_sum(&FrobeniusAlgebra::dual_numbers(0, 1));
        let w = a.window().unwrap();
        for i in 0..a.dim() {
            let l = a.left_multiplication(&a.basis_vector(i));
            assert!(linalg::mat_eq(&linalg::mat_mul(&w, &l), &linalg::mat_mul(&l, &w)));
        }
    }
}
