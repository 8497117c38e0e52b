//! Closed oriented 4-manifolds given by 2-handle Kirby presentations, the
//! Crane-Yetter-Kauffman invariant, and its closed forms in terms of Euler
//! characteristic and signature.

mod classify;

use std::fmt;

use crate::category::{Backend, RibbonData};
use crate::error::{Error, Result};
use crate::link::{kirby_color_sum, matrix::k3_form, EvalConfig, FramedLink, LinkBody, LinkingMatrix};
use crate::scalar::CycScalar;

pub use classify::{classify_stable, Decomposition, Stabilizer};

/// One 0-handle, some 2-handles along `body`, one 4-handle. Presentations
/// with 1- or 3-handles can be stored but not evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct HandlePresentation {
    pub body: LinkBody,
    pub h1: u32,
    pub h3: u32,
    pub name: Option<String>,
}

impl HandlePresentation {
    pub fn new(body: LinkBody) -> Self {
        HandlePresentation { body, h1: 0, h3: 0, name: None }
    }

    pub fn named(body: LinkBody, name: &str) -> Self {
        HandlePresentation { name: Some(name.to_string()), ..HandlePresentation::new(body) }
    }

    pub fn from_matrix(q: LinkingMatrix) -> Self {
        HandlePresentation::new(LinkBody::Matrix(q))
    }

    pub fn from_link(l: FramedLink) -> Self {
        HandlePresentation::new(LinkBody::Diagram(l))
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        self.body.linking_matrix()
    }

    fn check_handles(&self) -> Result<()> {
        if self.h1 != 0 || self.h3 != 0 {
            return Err(Error::HandlesUnsupported);
        }
        Ok(())
    }
}

/// `S4`, `CP2`, `CP2bar`, `S2xS2` (as diagrams) or `K3` (matrix only).
pub fn builtin_manifold(name: &str) -> Result<HandlePresentation> {
    let body = match name {
        "S4" => LinkBody::Diagram(FramedLink::empty()),
        "CP2" => LinkBody::Diagram(FramedLink::unknot(1)),
        "CP2bar" => LinkBody::Diagram(FramedLink::unknot(-1)),
        "S2xS2" => LinkBody::Diagram(FramedLink::hopf(0, 0)),
        "K3" => LinkBody::Matrix(k3_form()),
        _ => return Err(Error::InvalidInput(format!("unknown manifold `{name}`"))),
    };
    Ok(HandlePresentation::named(body, name))
}

/// Disjoint union of diagrams, or block sum once either side is a matrix.
pub fn connected_sum(a: &HandlePresentation, b: &HandlePresentation) -> HandlePresentation {
    let body = match (&a.body, &b.body) {
        (LinkBody::Diagram(x), LinkBody::Diagram(y)) => LinkBody::Diagram(x.disjoint_union(y)),
        (x, y) => LinkBody::Matrix(x.linking_matrix().block_sum(&y.linking_matrix())),
    };
    let name = match (&a.name, &b.name) {
        (Some(x), Some(y)) => Some(format!("{x} # {y}")),
        _ => None,
    };
    HandlePresentation { body, h1: a.h1 + b.h1, h3: a.h3 + b.h3, name }
}

/// `#^k p`, with `S4` for `k = 0`.
pub fn connected_power(p: &HandlePresentation, k: usize) -> HandlePresentation {
    let mut acc = builtin_manifold("S4").expect("builtin");
    for _ in 0..k {
        acc = connected_sum(&acc, p);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pi1 {
    Trivial,
    Z,
}

impl fmt::Display for Pi1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pi1::Trivial => "trivial",
            Pi1::Z => "Z",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ManifoldInvariants {
    pub chi: i64,
    pub sigma: i64,
    pub spin: bool,
    pub pi1: Pi1,
}

impl ManifoldInvariants {
    pub fn simply_connected(chi: i64, sigma: i64, spin: bool) -> Self {
        ManifoldInvariants { chi, sigma, spin, pi1: Pi1::Trivial }
    }

    /// Checks parity, Rohlin and the bound `|sigma| <= b2`, in that order.
    pub fn check(&self) -> Result<()> {
        if (self.chi + self.sigma) % 2 != 0 {
            return Err(Error::ParityViolation(self.chi + self.sigma));
        }
        if self.spin && self.pi1 == Pi1::Trivial && self.sigma % 16 != 0 {
            return Err(Error::RohlinViolation(self.sigma));
        }
        // b2 = chi - 2 for simply connected, chi for pi1 = Z
        let b2 = match self.pi1 {
            Pi1::Trivial => self.chi - 2,
            Pi1::Z => self.chi,
        };
        if b2 < self.sigma.abs() {
            return Err(Error::NotRealizable(format!("chi = {}, sigma = {}", self.chi, self.sigma)));
        }
        Ok(())
    }
}

impl fmt::Display for ManifoldInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi = {}\nsigma = {}\nspin = {}\npi1 = {}", self.chi, self.sigma, self.spin, self.pi1)
    }
}

pub fn invariants_from_presentation(p: &HandlePresentation) -> ManifoldInvariants {
    let q = p.linking_matrix();
    ManifoldInvariants::simply_connected(2 + q.size() as i64, q.signature(), q.is_even())
}

/// `CYK(M) = D * sum over colorings of (prod d) * L`.
pub fn cyk(p: &HandlePresentation, r: &RibbonData, cfg: &EvalConfig) -> Result<CycScalar> {
    p.check_handles()?;
    Ok(&r.global_dimension() * &kirby_color_sum(&p.body, r, cfg)?)
}

/// Values on the generating manifolds, normalized by `Z(S4)` except `z_s4`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorValues {
    pub z_s4: CycScalar,
    pub zt_cp2: CycScalar,
    pub zt_cp2bar: CycScalar,
    pub zt_s2s2: CycScalar,
    pub zt_k3: Option<CycScalar>,
    pub fermionic: bool,
}

impl GeneratorValues {
    pub fn check(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::InconsistentGenerators(what.to_string()));
        if self.z_s4.is_zero() {
            return fail("Z(S4) != 0");
        }
        if self.zt_s2s2.is_zero() {
            return fail("Z(S2xS2) != 0");
        }
        if self.fermionic {
            if !self.zt_cp2.is_zero() || !self.zt_cp2bar.is_zero() {
                return fail("fermionic theories vanish on CP2 and CP2bar");
            }
            if self.zt_k3.as_ref().is_some_and(CycScalar::is_zero) {
                return fail("Z(K3) != 0 for fermionic theories");
            }
        } else if self.zt_cp2.is_zero() || self.zt_cp2bar.is_zero() {
            return fail("fermion-free theories are nonzero on CP2 and CP2bar");
        }
        Ok(())
    }
}

impl fmt::Display for GeneratorValues {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "z_s4 = {}", self.z_s4)?;
        writeln!(f, "zt_cp2 = {}", self.zt_cp2)?;
        writeln!(f, "zt_cp2bar = {}", self.zt_cp2bar)?;
        writeln!(f, "zt_s2s2 = {}", self.zt_s2s2)?;
        match &self.zt_k3 {
            Some(v) => writeln!(f, "zt_k3 = {v}")?,
            None => writeln!(f, "zt_k3 = unavailable")?,
        }
        write!(f, "fermionic = {}", self.fermionic)
    }
}

fn matrix_determined(b: &Backend) -> bool {
    match b {
        Backend::Pointed(_) => true,
        Backend::Product(x, y) => matrix_determined(&x.backend) && matrix_determined(&y.backend),
        _ => false,
    }
}

pub fn cyk_generators(r: &RibbonData, cfg: &EvalConfig) -> Result<GeneratorValues> {
    let d = r.global_dimension();
    let center = r.symmetric_center()?;
    let zt_k3 = if matrix_determined(&r.backend) {
        Some(kirby_color_sum(&LinkBody::Matrix(k3_form()), r, cfg)?)
    } else {
        None
    };
    let g = GeneratorValues {
        zt_s2s2: &d * &center.global_dimension(),
        z_s4: d,
        zt_cp2: r.gauss_sum(true),
        zt_cp2bar: r.gauss_sum(false),
        zt_k3,
        fermionic: r.has_fermion()?,
    };
    g.check()?;
    Ok(g)
}

fn half(n: i64, what: &str) -> Result<i64> {
    if n % 2 != 0 {
        return Err(Error::ExponentNotIntegral(format!("{what} = {n}/2")));
    }
    Ok(n / 2)
}

/// `Z(M)` from the generator values, for simply connected `M` or `pi1 = Z`.
pub fn closed_form_value(g: &GeneratorValues, inv: &ManifoldInvariants) -> Result<CycScalar> {
    let (chi, sigma) = (inv.chi, inv.sigma);
    if inv.pi1 == Pi1::Z {
        if g.fermionic {
            return Err(Error::UnsupportedPi1Fermionic);
        }
        // Z(S1 x S3) = 1 replaces z_s4 * zt(S1 x S3) = 1 as the base value
        let a = half(chi + sigma, "(chi + sigma)")?;
        let b = half(chi - sigma, "(chi - sigma)")?;
        return Ok(&g.zt_cp2.pow(a)? * &g.zt_cp2bar.pow(b)?);
    }
    if !g.fermionic {
        let a = half(chi + sigma - 2, "(chi + sigma - 2)")?;
        let b = half(chi - sigma - 2, "(chi - sigma - 2)")?;
        return Ok(&(&g.z_s4 * &g.zt_cp2.pow(a)?) * &g.zt_cp2bar.pow(b)?);
    }
    if !inv.spin {
        return Ok(CycScalar::zero(g.z_s4.order()));
    }
    if sigma % 16 != 0 {
        return Err(Error::RohlinViolation(sigma));
    }
    let k = -sigma / 16;
    let m = half(chi - 2 - 22 * k, "(chi - 2 + 11 sigma / 8)")?;
    let k3 = if k == 0 {
        CycScalar::one(g.z_s4.order())
    } else {
        g.zt_k3.as_ref().ok_or(Error::K3Unavailable)?.pow(k)?
    };
    Ok(&(&g.z_s4 * &k3) * &g.zt_s2s2.pow(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{semion, svect, tl};

    fn m(name: &str) -> HandlePresentation {
        builtin_manifold(name).unwrap()
    }

    #[test]
    fn builtin_invariants() {
        assert_eq!(invariants_from_presentation(&m("S4")), ManifoldInvariants::simply_connected(2, 0, true));
        assert_eq!(invariants_from_presentation(&m("CP2")), ManifoldInvariants::simply_connected(3, 1, false));
        assert_eq!(m("CP2bar").linking_matrix(), LinkingMatrix::diagonal(&[-1]));
        assert_eq!(m("S2xS2").linking_matrix().entries(), &[vec![0, 1], vec![1, 0]]);
        assert_eq!(invariants_from_presentation(&m("K3")), ManifoldInvariants::simply_connected(24, -16, true));
        assert!(builtin_manifold("T4").is_err());
    }

    #[test]
    fn connected_sums() {
        let s = connected_sum(&m("CP2"), &m("CP2bar"));
        assert_eq!(s.linking_matrix(), LinkingMatrix::diagonal(&[1, -1]));
        assert_eq!(s.name.as_deref(), Some("CP2 # CP2bar"));
        assert_eq!(connected_sum(&m("S4"), &m("K3")).linking_matrix(), m("K3").linking_matrix());
        let a = invariants_from_presentation(&m("K3"));
        let b = invariants_from_presentation(&m("CP2"));
        let c = invariants_from_presentation(&connected_sum(&m("K3"), &m("CP2")));
        assert_eq!((c.chi, c.sigma), (a.chi + b.chi - 2, a.sigma + b.sigma));
    }

    #[test]
    fn svect_values() {
        let r = svect();
        let cfg = EvalConfig::default();
        assert_eq!(cyk(&m("S4"), &r, &cfg).unwrap(), CycScalar::from_int(2));
        assert!(cyk(&m("CP2"), &r, &cfg).unwrap().is_zero());
        assert_eq!(cyk(&m("S2xS2"), &r, &cfg).unwrap(), CycScalar::from_int(8));
        assert_eq!(cyk(&m("K3"), &r, &cfg).unwrap(), CycScalar::from_int(1 << 23));
    }

    #[test]
    fn handles_are_rejected() {
        let mut p = m("CP2");
        p.h1 = 1;
        assert_eq!(cyk(&p, &svect(), &EvalConfig::default()), Err(Error::HandlesUnsupported));
    }

    #[test]
    fn generators() {
        let cfg = EvalConfig::default();
        let g = cyk_generators(&svect(), &cfg).unwrap();
        assert_eq!(g.z_s4, CycScalar::from_int(2));
        assert!(g.zt_cp2.is_zero() && g.zt_cp2bar.is_zero());
        assert_eq!(g.zt_s2s2, CycScalar::from_int(4));
        assert_eq!(g.zt_k3, Some(CycScalar::from_int(1 << 22)));
        assert!(g.fermionic);

        let g = cyk_generators(&semion(), &cfg).unwrap();
        let i = CycScalar::zeta(4);
        assert_eq!(g.zt_cp2, &CycScalar::from_int(1) + &i);
        assert_eq!(g.zt_cp2bar, &CycScalar::from_int(1) - &i);
        assert_eq!(g.zt_s2s2, CycScalar::from_int(2));
        assert!(!g.fermionic);

        let g = cyk_generators(&tl(3, 1).unwrap(), &cfg).unwrap();
        assert!(!g.fermionic);
        assert!(g.zt_k3.is_none());
        assert_eq!(&g.zt_cp2 * &g.zt_cp2bar, g.zt_s2s2);
    }

    #[test]
    fn closed_forms() {
        let cfg = EvalConfig::default();
        let g = cyk_generators(&svect(), &cfg).unwrap();
        let k3 = ManifoldInvariants::simply_connected(24, -16, true);
        assert_eq!(closed_form_value(&g, &k3).unwrap(), CycScalar::from_int(1 << 23));
        assert!(closed_form_value(&g, &ManifoldInvariants::simply_connected(3, 1, false)).unwrap().is_zero());
        let k3bar = ManifoldInvariants::simply_connected(24, 16, true);
        assert_eq!(closed_form_value(&g, &k3bar).unwrap(), CycScalar::from_int(1 << 23));

        let g = cyk_generators(&semion(), &cfg).unwrap();
        let cp2 = ManifoldInvariants::simply_connected(3, 1, false);
        assert_eq!(closed_form_value(&g, &cp2).unwrap(), &g.z_s4 * &g.zt_cp2);
        let s1s3 = ManifoldInvariants { chi: 0, sigma: 0, spin: true, pi1: Pi1::Z };
        assert!(closed_form_value(&g, &s1s3).unwrap().is_one());
        let odd = ManifoldInvariants::simply_connected(3, 0, false);
        assert!(matches!(closed_form_value(&g, &odd), Err(Error::ExponentNotIntegral(_))));

        let g = cyk_generators(&svect(), &cfg).unwrap();
        assert_eq!(closed_form_value(&g, &s1s3), Err(Error::UnsupportedPi1Fermionic));
        let bad = ManifoldInvariants::simply_connected(10, 8, true);
        assert_eq!(closed_form_value(&g, &bad), Err(Error::RohlinViolation(8)));
        let no_k3 = GeneratorValues { zt_k3: None, ..g };
        assert_eq!(closed_form_value(&no_k3, &k3), Err(Error::K3Unavailable));
    }
}
