//! Framed links, linking matrices, colored evaluation and Kirby moves.

mod diagram;
pub mod matrix;
mod moves;
mod pointed;
mod tl;

use rayon::prelude::*;

use crate::category::{Backend, RibbonData};
use crate::error::{Error, Result};
use crate::scalar::CycScalar;

pub use diagram::{FramedLink, Slice};
pub use matrix::LinkingMatrix;
pub use moves::SlideResult;
pub use pointed::{evaluate_pointed, kirby_sum_pointed, kirby_sum_pointed_brute};
pub use tl::{evaluate_tl, jones_wenzl_trace};

/// Default cap on the number of parallel strands in a cabled TL diagram.
pub const DEFAULT_WIDTH_CAP: usize = 16;

/// Evaluation limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalConfig {
    pub width_cap: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { width_cap: DEFAULT_WIDTH_CAP }
    }
}

/// A 2-handle attaching link, as a diagram or only as its linking matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum LinkBody {
    Diagram(FramedLink),
    Matrix(LinkingMatrix),
}

impl LinkBody {
    pub fn component_count(&self) -> usize {
        match self {
            LinkBody::Diagram(l) => l.component_count(),
            LinkBody::Matrix(q) => q.size(),
        }
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        match self {
            LinkBody::Diagram(l) => l.linking_matrix(),
            LinkBody::Matrix(q) => q.clone(),
        }
    }

    pub fn handle_slide(&self, i: usize, j: usize, sign: i64) -> Result<LinkBody> {
        match self {
            LinkBody::Diagram(l) => Ok(LinkBody::Diagram(l.handle_slide(i, j, sign)?.link)),
            LinkBody::Matrix(q) => Ok(LinkBody::Matrix(q.handle_slide(i, j, sign)?)),
        }
    }

    pub fn blow_up(&self, sign: i64) -> LinkBody {
        match self {
            LinkBody::Diagram(l) => LinkBody::Diagram(l.blow_up(sign)),
            LinkBody::Matrix(q) => LinkBody::Matrix(q.blow_up(sign)),
        }
    }

    pub fn blow_down(&self, index: usize) -> Result<LinkBody> {
        match self {
            LinkBody::Diagram(l) => Ok(LinkBody::Diagram(l.blow_down(index)?)),
            LinkBody::Matrix(q) => Ok(LinkBody::Matrix(q.blow_down(index)?)),
        }
    }
}

/// `sum over colorings of (prod d_{c_i}) * L(c)`.
pub fn kirby_color_sum(body: &LinkBody, r: &RibbonData, cfg: &EvalConfig) -> Result<CycScalar> {
    if body.component_count() == 0 {
        return Ok(CycScalar::one(r.order));
    }
    match &r.backend {
        Backend::Pointed(_) => kirby_sum_pointed(&body.linking_matrix(), r),
        Backend::Tl { .. } => match body {
            LinkBody::Diagram(l) => kirby_sum_tl(l, r, cfg),
            LinkBody::Matrix(_) => Err(Error::BackendMismatch("the TL backend needs a link diagram".into())),
        },
        Backend::Product(a, b) => {
            let x = kirby_color_sum(body, a, cfg)?;
            let y = kirby_color_sum(body, b, cfg)?;
            Ok((&x * &y).embed(r.order)?)
        }
        Backend::Generic => Err(Error::BackendMismatch("generic data carries no braiding for link evaluation".into())),
    }
}

fn kirby_sum_tl(l: &FramedLink, r: &RibbonData, cfg: &EvalConfig) -> Result<CycScalar> {
    let n = l.component_count();
    let k = r.rank();
    let total = k.checked_pow(n as u32).ok_or_else(|| Error::ResourceLimit("too many colorings".into()))?;
    let colorings: Vec<Vec<usize>> = (0..total)
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let c = idx % k;
                    idx /= k;
                    c
                })
                .collect()
        })
        .collect();
    let terms: Vec<Result<CycScalar>> = colorings
        .par_iter()
        .map(|c| {
            let v = evaluate_tl(l, r, c, cfg)?;
            let w = c.iter().fold(CycScalar::one(r.order), |acc, &x| &acc * &r.dims[x]);
            Ok(&v * &w)
        })
        .collect();
    let mut sum = CycScalar::zero(r.order);
    for t in terms {
        sum += t?;
    }
    Ok(sum)
}

/// Value of the link colored by `coloring` under the category's backend.
pub fn evaluate(body: &LinkBody, r: &RibbonData, coloring: &[usize], cfg: &EvalConfig) -> Result<CycScalar> {
    match &r.backend {
        Backend::Pointed(_) => evaluate_pointed(&body.linking_matrix(), r, coloring),
        Backend::Tl { .. } => match body {
            LinkBody::Diagram(l) => evaluate_tl(l, r, coloring, cfg),
            LinkBody::Matrix(_) => Err(Error::BackendMismatch("the TL backend needs a link diagram".into())),
        },
        Backend::Product(a, b) => {
            let n2 = b.rank();
            let ca: Vec<usize> = coloring.iter().map(|&c| c / n2).collect();
            let cb: Vec<usize> = coloring.iter().map(|&c| c % n2).collect();
            if let Some(&c) = coloring.iter().find(|&&c| c >= r.rank()) {
                return Err(Error::ColorOutOfRange { color: c, simples: r.rank() });
            }
            Ok(&evaluate(body, a, &ca, cfg)? * &evaluate(body, b, &cb, cfg)?)
        }
        Backend::Generic => Err(Error::BackendMismatch("generic data carries no braiding for link evaluation".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{pointed_cyclic, semion, svect, tl, toric_code};

    fn sum(body: &LinkBody, r: &RibbonData) -> CycScalar {
        kirby_color_sum(body, r, &EvalConfig::default()).unwrap()
    }

    #[test]
    fn empty_link_sums_to_one() {
        let r = tl(4, 1).unwrap();
        assert!(sum(&LinkBody::Diagram(FramedLink::empty()), &r).is_one());
    }

    #[test]
    fn diagram_and_matrix_agree_for_pointed() {
        let cats = [svect(), semion(), toric_code(), pointed_cyclic(5, 2).unwrap(), pointed_cyclic(4, 1).unwrap()];
        let links = [FramedLink::hopf(0, 0), FramedLink::hopf(1, 3), FramedLink::unknot(-1).disjoint_union(&FramedLink::hopf(2, 0))];
        for r in &cats {
            for l in &links {
                let d = LinkBody::Diagram(l.clone());
                let m = LinkBody::Matrix(l.linking_matrix());
                assert_eq!(sum(&d, r), sum(&m, r));
            }
        }
    }

    #[test]
    fn tl_sums_survive_diagram_slides() {
        let links = [FramedLink::hopf(0, 0), FramedLink::hopf(1, -1), FramedLink::unknot(1).disjoint_union(&FramedLink::unknot(2))];
        for r in [tl(3, 1).unwrap(), tl(4, 1).unwrap()] {
            for l in &links {
                let before = sum(&LinkBody::Diagram(l.clone()), &r);
                for s in [1, -1] {
                    let slid = l.handle_slide(0, 1, s).unwrap().link;
                    let wide = EvalConfig { width_cap: 32 };
                    let after = kirby_color_sum(&LinkBody::Diagram(slid), &r, &wide).unwrap();
                    assert_eq!(after, before, "{} {l:?} sign {s}", r.name);
                }
            }
        }
    }

    #[test]
    fn product_backend_splits_colors() {
        let r = crate::category::product(&svect(), &tl(3, 1).unwrap()).unwrap();
        let l = LinkBody::Diagram(FramedLink::hopf(1, 0));
        let a = sum(&l, &r);
        let b = &sum(&l, &svect()) * &sum(&l, &tl(3, 1).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn generic_backend_is_rejected() {
        let r = crate::category::svect().symmetric_center().unwrap();
        let e = kirby_color_sum(&LinkBody::Diagram(FramedLink::unknot(0)), &r, &EvalConfig::default());
        assert!(matches!(e, Err(Error::BackendMismatch(_))));
    }
}
