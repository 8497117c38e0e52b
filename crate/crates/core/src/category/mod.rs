//! Ribbon fusion category data at the level of fusion rules, dimensions,
//! twists and the S-matrix.

mod builtin;
mod group;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::frobenius::FrobeniusAlgebra;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::CycScalar;

pub use builtin::{
    builtin_suite, by_name, pointed, pointed_cyclic, pointed_cyclic_forms, product, quantum_integer, semion, svect, tl,
    toric_code, trivial,
};
pub use group::AbelianGroup;

/// How colored links are evaluated for a category.
#[derive(Debug, Clone, PartialEq)]
pub enum Backend {
    /// Simples form a finite abelian group; label index = group element index.
    Pointed(AbelianGroup),
    /// Temperley-Lieb category at level `r` with `A = z_{4r}^root_power`.
    Tl { r: u64, root_power: u64 },
    /// Deligne product; simple `(i, j)` has index `i * n2 + j`.
    Product(Box<RibbonData>, Box<RibbonData>),
    /// No braiding data beyond the S-matrix.
    Generic,
}

impl Backend {
    pub fn tag(&self) -> &'static str {
        match self {
            Backend::Pointed(_) => "pointed",
            Backend::Tl { .. } => "tl",
            Backend::Product(..) => "product",
            Backend::Generic => "generic",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RibbonData {
    pub name: String,
    pub order: u64,
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// `fusion[i][j][k] = N_{ij}^k`.
    pub fusion: Vec<Vec<Vec<u32>>>,
    pub dims: Vec<CycScalar>,
    pub twists: Vec<CycScalar>,
    pub smatrix: Matrix,
    pub backend: Backend,
}

impl RibbonData {
    /// Assembles data without checking the ribbon axioms; only shapes are
    /// verified. Run [`RibbonData::validate`] on the result.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        name: impl Into<String>,
        order: u64,
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        fusion: Vec<Vec<Vec<u32>>>,
        dims: Vec<CycScalar>,
        twists: Vec<CycScalar>,
        smatrix: Matrix,
        backend: Backend,
    ) -> Result<Self> {
        let n = labels.len();
        let shape_ok = n > 0
            && unit < n
            && dual.len() == n
            && dual.iter().all(|&d| d < n)
            && fusion.len() == n
            && fusion.iter().all(|row| row.len() == n && row.iter().all(|v| v.len() == n))
            && dims.len() == n
            && twists.len() == n
            && smatrix.len() == n
            && smatrix.iter().all(|row| row.len() == n);
        if !shape_ok {
            return Err(Error::InvalidInput(format!("category data has inconsistent sizes for {n} simples")));
        }
        let needed = dims
            .iter()
            .chain(&twists)
            .chain(smatrix.iter().flatten())
            .fold(order.max(1), |acc, s| acc.lcm(&s.order()));
        let lift = |v: Vec<CycScalar>| v.into_iter().map(|s| s.embed(needed)).collect::<Result<Vec<_>>>();
        Ok(RibbonData {
            name: name.into(),
            order: needed,
            labels,
            unit,
            dual,
            fusion,
            dims: lift(dims)?,
            twists: lift(twists)?,
            smatrix: smatrix.into_iter().map(lift).collect::<Result<_>>()?,
            backend,
        })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// One named check per structural invariant.
    pub fn validate(&self) -> Report {
        let n = self.rank();
        let u = self.unit;
        let mut r = Report::new();
        let f = |i: usize, j: usize, k: usize| self.fusion[i][j][k];

        let unit_ok = (0..n).all(|j| (0..n).all(|k| {
            let e = (j == k) as u32;
            f(u, j, k) == e && f(j, u, k) == e
        }));
        r.push("unit_fusion", unit_ok, "");
        r.push("unit_self_dual", self.dual[u] == u, "");
        let inv_ok = (0..n).all(|i| self.dual[self.dual[i]] == i);
        r.push("dual_involution", inv_ok, "");
        let bad_dual: Vec<&str> = (0..n).filter(|&i| f(i, self.dual[i], u) != 1).map(|i| self.labels[i].as_str()).collect();
        r.push("dual_fusion", bad_dual.is_empty(), bad_dual.join(","));
        let comm = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| f(i, j, k) == f(j, i, k))));
        r.push("fusion_commutative", comm, "");
        r.push("fusion_associative", self.fusion_associative(), "");

        let mut bad_dims = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let rhs: CycScalar = (0..n).filter(|&k| f(i, j, k) > 0).map(|k| &self.dims[k] * &CycScalar::from_int(f(i, j, k) as i64)).sum();
                if &self.dims[i] * &self.dims[j] != rhs {
                    bad_dims.push(format!("{}*{}", self.labels[i], self.labels[j]));
                }
            }
        }
        bad_dims.truncate(3);
        r.push("dims_multiplicative", bad_dims.is_empty(), bad_dims.join(","));

        r.push("unit_twist", self.twists[u].is_one(), "");
        let bad_roots: Vec<&str> =
            (0..n).filter(|&i| !self.twists[i].is_root_of_unity()).map(|i| self.labels[i].as_str()).collect();
        r.push("twists_roots_of_unity", bad_roots.is_empty(), bad_roots.join(","));
        let dual_tw = (0..n).all(|i| self.twists[self.dual[i]] == self.twists[i]);
        r.push("twist_dual_invariant", dual_tw, "");

        let sym = (0..n).all(|i| (0..n).all(|j| self.smatrix[i][j] == self.smatrix[j][i]));
        r.push("smatrix_symmetric", sym, "");
        let srow = (0..n).all(|j| self.smatrix[u][j] == self.dims[j]);
        r.push("smatrix_unit_row", srow, "");

        r.push("global_dimension_nonzero", !self.global_dimension().is_zero(), "");
        r
    }

    fn fusion_associative(&self) -> bool {
        let n = self.rank();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for e in 0..n {
                        let lhs: u64 = (0..n).map(|x| self.fusion[a][b][x] as u64 * self.fusion[x][c][e] as u64).sum();
                        let rhs: u64 = (0..n).map(|x| self.fusion[b][c][x] as u64 * self.fusion[a][x][e] as u64).sum();
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `D = sum d_i^2`.
    pub fn global_dimension(&self) -> CycScalar {
        self.dims.iter().map(|d| d * d).sum::<CycScalar>().embed(self.order).expect("dims live at the category order")
    }

    /// `tau(+) = sum theta_i d_i^2`, `tau(-) = sum theta_i^-1 d_i^2`.
    pub fn gauss_sum(&self, positive: bool) -> CycScalar {
        let total: CycScalar = self
            .twists
            .iter()
            .zip(&self.dims)
            .map(|(t, d)| {
                let t = if positive { t.clone() } else { t.invert().expect("twists are roots of unity") };
                &(&t * d) * d
            })
            .sum();
        total.embed(self.order).expect("same order")
    }

    pub fn is_transparent(&self, x: usize) -> bool {
        (0..self.rank()).all(|y| self.smatrix[x][y] == &self.dims[x] * &self.dims[y])
    }

    /// Indices `x` with `s_{x,y} = d_x d_y` for every `y`, in label order.
    pub fn transparent_simples(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&x| self.is_transparent(x)).collect()
    }

    /// Restriction of all data to the transparent simples.
    pub fn symmetric_center(&self) -> Result<RibbonData> {
        let keep = self.transparent_simples();
        let pos = |i: usize| keep.iter().position(|&k| k == i);
        for &a in &keep {
            if pos(self.dual[a]).is_none() {
                return Err(Error::NotClosed(format!("duals ({})", self.labels[a])));
            }
            for &b in &keep {
                if let Some(c) = (0..self.rank()).find(|&c| self.fusion[a][b][c] > 0 && pos(c).is_none()) {
                    return Err(Error::NotClosed(format!(
                        "fusion ({} x {} contains {})",
                        self.labels[a], self.labels[b], self.labels[c]
                    )));
                }
            }
        }
        let pick = |v: &[CycScalar]| keep.iter().map(|&i| v[i].clone()).collect::<Vec<_>>();
        RibbonData::from_parts(
            format!("center({})", self.name),
            self.order,
            keep.iter().map(|&i| self.labels[i].clone()).collect(),
            pos(self.unit).expect("unit is transparent"),
            keep.iter().map(|&i| pos(self.dual[i]).expect("closed")).collect(),
            keep.iter().map(|&a| keep.iter().map(|&b| keep.iter().map(|&c| self.fusion[a][b][c]).collect()).collect()).collect(),
            pick(&self.dims),
            pick(&self.twists),
            keep.iter().map(|&a| pick(&self.smatrix[a])).collect(),
            Backend::Generic,
        )
    }

    /// Whether some transparent simple has twist `-1`.
    pub fn has_fermion(&self) -> Result<bool> {
        let mut found = false;
        for x in self.transparent_simples() {
            let t = &self.twists[x];
            if t.is_one() {
                continue;
            }
            if (-t).is_one() {
                found = true;
            } else {
                return Err(Error::NonInvolutiveTransparentTwist(self.labels[x].clone()));
            }
        }
        Ok(found)
    }

    /// Grothendieck ring with counit the indicator of the unit.
    pub fn fusion_algebra(&self) -> FrobeniusAlgebra {
        let counit = (0..self.rank()).map(|i| CycScalar::from_int((i == self.unit) as i64)).collect();
        FrobeniusAlgebra::from_integer_table(
            self.labels.clone(),
            |i, j, k| self.fusion[i][j][k] as i64,
            self.unit,
            counit,
        )
        .expect("shapes checked at construction")
    }

    /// `diag(theta_x)` over the transparent simples.
    pub fn gluck_operator(&self) -> Matrix {
        let keep = self.transparent_simples();
        keep.iter()
            .enumerate()
            .map(|(i, _)| {
                keep.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { self.twists[x].clone() } else { CycScalar::zero(self.order) })
                    .collect()
            })
            .collect()
    }

    /// Gauss-sum identities relating twists, the S-matrix and the symmetric center.
    pub fn check_identities(&self) -> Result<Report> {
        let n = self.rank();
        let tp = self.gauss_sum(true);
        let tm = self.gauss_sum(false);
        let mut r = Report::new();
        for y in 0..n {
            let sum: CycScalar =
                (0..n).map(|x| &(&self.twists[x] * &self.dims[x]) * &self.smatrix[x][y]).sum();
            let ok = &self.twists[y] * &sum == &self.dims[y] * &tp;
            r.push(format!("twist_smatrix_sum[{}]", self.labels[y]), ok, "");
        }
        let center = self.symmetric_center()?;
        let ok = &tp * &tm == &self.global_dimension() * &center.gauss_sum(true);
        r.push("gauss_product", ok, "");
        for y in self.transparent_simples() {
            let ok = &self.twists[y] * &tp == tp;
            r.push(format!("transparent_twist[{}]", self.labels[y]), ok, "");
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::builtin::*;
    use super::*;
    use crate::linalg;

    fn z(order: u64, k: i64) -> CycScalar {
        CycScalar::zeta_pow(order, k)
    }

    #[test]
    fn svect_basics() {
        let s = svect();
        assert!(s.validate().all_passed(), "{}", s.validate());
        assert_eq!(s.dims, vec![CycScalar::from_int(1), CycScalar::from_int(1)]);
        assert_eq!(s.twists, vec![CycScalar::from_int(1), CycScalar::from_int(-1)]);
        assert_eq!(s.global_dimension(), CycScalar::from_int(2));
        assert!(s.gauss_sum(true).is_zero() && s.gauss_sum(false).is_zero());
        assert_eq!(s.transparent_simples(), vec![0, 1]);
        assert!(s.has_fermion().unwrap());
        let g = s.gluck_operator();
        assert!(linalg::mat_eq(&g, &vec![vec![CycScalar::from_int(1), CycScalar::from_int(0)], vec![CycScalar::from_int(0), CycScalar::from_int(-1)]]));
        assert!(s.check_identities().unwrap().all_passed());
        let w = s.fusion_algebra().window().unwrap();
        assert!(linalg::mat_eq(&w, &linalg::scalar_matrix(2, &CycScalar::from_int(2))));
    }

    #[test]
    fn semion_basics() {
        let s = semion();
        assert!(s.validate().all_passed());
        assert_eq!(s.global_dimension(), CycScalar::from_int(2));
        assert_eq!(s.twists[1], z(4, 1));
        assert_eq!(s.gauss_sum(true), &CycScalar::from_int(1) + &z(4, 1));
        assert_eq!(s.gauss_sum(false), &CycScalar::from_int(1) - &z(4, 1));
        assert_eq!(s.transparent_simples(), vec![0]);
        assert!(!s.has_fermion().unwrap());
        assert_eq!(s.symmetric_center().unwrap().rank(), 1);
        assert_eq!(s.gluck_operator(), vec![vec![CycScalar::from_int(1)]]);
        let rep = s.check_identities().unwrap();
        assert!(rep.get("gauss_product").unwrap().passed);
        assert_eq!(s.smatrix[1][1], CycScalar::from_int(-1));
        // idempotents (1 +- s)/2 at order 4
        let e = s.fusion_algebra().primitive_idempotents().unwrap();
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn toric_code_basics() {
        let t = toric_code();
        assert!(t.validate().all_passed());
        assert_eq!(t.labels, vec!["1", "e", "m", "f"]);
        assert_eq!(t.global_dimension(), CycScalar::from_int(4));
        assert_eq!(t.transparent_simples(), vec![0]);
        let (e, m) = (t.label_index("e").unwrap(), t.label_index("m").unwrap());
        assert_eq!(t.smatrix[e][m], CycScalar::from_int(-1));
        assert!(t.check_identities().unwrap().all_passed());
    }

    #[test]
    fn trivial_category() {
        let t = trivial();
        assert_eq!(t.global_dimension(), CycScalar::from_int(1));
        assert!(t.gauss_sum(true).is_one());
        assert_eq!(t.fusion_algebra().dim(), 1);
    }

    #[test]
    fn tl3_values() {
        let t = tl(3, 1).unwrap();
        assert!(t.validate().all_passed(), "{}", t.validate());
        assert_eq!(t.rank(), 2);
        assert_eq!(t.dims[1], CycScalar::from_int(-1));
        let a = z(12, 1);
        assert_eq!(t.twists[1], -a.pow(3).unwrap());
        assert!(!t.has_fermion().unwrap());
        // numeric cross-check of d_1 = -(A^2 + A^-2)
        let num = a.to_complex();
        let d = -(num * num + 1.0 / (num * num));
        assert!((t.dims[1].to_complex() - d).norm() < 1e-12);
    }

    #[test]
    fn tl4_identities_and_semisimplicity() {
        let t = tl(4, 1).unwrap();
        assert!(t.validate().all_passed());
        let rep = t.check_identities().unwrap();
        assert!(rep.all_passed(), "{rep}");
        assert_eq!(rep.checks.iter().filter(|c| c.name.starts_with("twist_smatrix_sum")).count(), 3);
        assert!(t.fusion_algebra().is_semisimple().unwrap());
        assert!(t.fusion_algebra().check_axioms().all_passed());
    }

    #[test]
    fn tl_rejects_low_level() {
        assert_eq!(tl(2, 1), Err(Error::BadLevel(2)));
        assert!(tl(4, 2).is_err());
    }

    #[test]
    fn fusion_comultiplication_matches_dual_formula() {
        // Delta(b_i) = sum_j b_j (x) b_{j*} b_i
        for r in [toric_code(), tl(5, 1).unwrap()] {
            let a = r.fusion_algebra();
            let d = a.derive_comul().unwrap();
            let n = r.rank();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let expect = CycScalar::from_int(r.fusion[r.dual[j]][i][k] as i64);
                        assert_eq!(*d.get(i, j, k), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn product_center_is_svect_factor() {
        let p = product(&svect(), &semion()).unwrap();
        assert!(p.validate().all_passed());
        let c = p.symmetric_center().unwrap();
        assert_eq!(c.rank(), 2);
        assert_eq!(c.twists, vec![CycScalar::from_int(1), CycScalar::from_int(-1)]);
        let p2 = product(&svect(), &toric_code()).unwrap();
        let g = p2.gluck_operator();
        assert_eq!(g.len(), 2);
        assert_eq!(g[1][1], CycScalar::from_int(-1));
    }

    #[test]
    fn invalid_data_is_reported() {
        let mut s = svect();
        s.twists[1] = CycScalar::from_int(2);
        let rep = s.validate();
        assert!(!rep.get("twists_roots_of_unity").unwrap().passed);
        let mut s = svect();
        s.dims[1] = CycScalar::from_int(2);
        assert!(!s.validate().get("dims_multiplicative").unwrap().passed);
    }

    #[test]
    fn nonquadratic_theta_is_rejected() {
        let g = AbelianGroup::new(vec![3]);
        let th = vec![CycScalar::from_int(1), z(3, 1), z(3, 2)];
        assert!(matches!(pointed("bad", g, None, th), Err(Error::NonQuadraticForm(_))));
    }
}
