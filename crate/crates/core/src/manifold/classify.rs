use std::fmt;

use super::{ManifoldInvariants, Pi1};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stabilizer {
    S2S2,
    CP2,
}

/// A reference connected sum of generators, stably equivalent to the input
/// after adding `input_s2s2` copies of `S2xS2` to the input side.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub cp2: i64,
    pub cp2bar: i64,
    pub s2s2: i64,
    pub k3: i64,
    pub k3bar: i64,
    pub input_s2s2: i64,
}

impl Decomposition {
    /// `(chi, sigma, spin)` of the input implied by this decomposition.
    pub fn reconstruct(&self) -> ManifoldInvariants {
        let chi = 2 + self.cp2 + self.cp2bar + 2 * self.s2s2 + 22 * (self.k3 + self.k3bar) - 2 * self.input_s2s2;
        let sigma = self.cp2 - self.cp2bar - 16 * self.k3 + 16 * self.k3bar;
        ManifoldInvariants::simply_connected(chi, sigma, self.cp2 + self.cp2bar == 0)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = [
            (self.cp2, "CP2"),
            (self.cp2bar, "CP2bar"),
            (self.k3, "K3"),
            (self.k3bar, "K3bar"),
            (self.s2s2, "S2xS2"),
        ]
        .iter()
        .filter(|(n, _)| *n != 0)
        .map(|(n, name)| format!("{n} * {name}"))
        .collect();
        if terms.is_empty() {
            f.write_str("S4")?;
        } else {
            f.write_str(&terms.join(" + "))?;
        }
        if self.input_s2s2 > 0 {
            write!(f, "\ninput # {} * S2xS2", self.input_s2s2)?;
        }
        Ok(())
    }
}

/// Reference decomposition of a simply connected manifold up to
/// `S2xS2`- or `CP2`-stabilization.
pub fn classify_stable(inv: &ManifoldInvariants, stab: Stabilizer) -> Result<Decomposition> {
    if inv.pi1 != Pi1::Trivial {
        return Err(Error::InvalidInput("the classifier handles simply connected manifolds only".into()));
    }
    inv.check()?;
    let (chi, sigma) = (inv.chi, inv.sigma);
    let by_signs =
        || Decomposition { cp2: (chi + sigma - 2) / 2, cp2bar: (chi - sigma - 2) / 2, ..Default::default() };
    match stab {
        Stabilizer::CP2 => Ok(by_signs()),
        Stabilizer::S2S2 if !inv.spin => {
            if chi < 3 {
                return Err(Error::NotRealizable("a non-spin manifold has b2 >= 1".into()));
            }
            Ok(by_signs())
        }
        Stabilizer::S2S2 => {
            let s = sigma.abs() / 16;
            let b = (chi - 2 - 22 * s) / 2;
            let mut d = Decomposition { s2s2: b.max(0), input_s2s2: (-b).max(0), ..Default::default() };
            if sigma <= 0 {
                d.k3 = s;
            } else {
                d.k3bar = s;
            }
            Ok(d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(chi: i64, sigma: i64, spin: bool) -> ManifoldInvariants {
        ManifoldInvariants::simply_connected(chi, sigma, spin)
    }

    #[test]
    fn examples() {
        let d = classify_stable(&inv(4, 0, false), Stabilizer::S2S2).unwrap();
        assert_eq!((d.cp2, d.cp2bar), (1, 1));
        let d = classify_stable(&inv(24, -16, true), Stabilizer::S2S2).unwrap();
        assert_eq!(d.to_string(), "1 * K3");
        assert_eq!(classify_stable(&inv(3, 0, false), Stabilizer::S2S2), Err(Error::ParityViolation(3)));
        assert_eq!(classify_stable(&inv(2, 0, true), Stabilizer::CP2).unwrap().to_string(), "S4");
    }

    #[test]
    fn short_spin_manifolds_need_input_stabilization() {
        // chi = 18, sigma = -16 would be below the 11/8 bound
        let d = classify_stable(&inv(18, -16, true), Stabilizer::S2S2).unwrap();
        assert_eq!((d.k3, d.s2s2, d.input_s2s2), (1, 0, 3));
        assert_eq!(d.reconstruct(), inv(18, -16, true));
        assert_eq!(d.to_string(), "1 * K3\ninput # 3 * S2xS2");
    }

    #[test]
    fn errors() {
        assert_eq!(classify_stable(&inv(10, 8, true), Stabilizer::S2S2), Err(Error::RohlinViolation(8)));
        assert!(matches!(classify_stable(&inv(4, 4, false), Stabilizer::S2S2), Err(Error::NotRealizable(_))));
        assert!(matches!(classify_stable(&inv(2, 0, false), Stabilizer::S2S2), Err(Error::NotRealizable(_))));
    }
}
