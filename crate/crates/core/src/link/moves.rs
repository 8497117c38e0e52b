//! Kirby moves on link diagrams.

use super::diagram::trace;
use crate::error::{Error, Result};
use crate::link::{FramedLink, LinkingMatrix, Slice};

/// A diagram after a handle slide, with its components matched to the old ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideResult {
    pub link: FramedLink,
    /// `perm[k]`: the old component that new component `k` comes from.
    pub perm: Vec<usize>,
    /// `-1` where new component `k` runs against the old orientation.
    pub orientation: Vec<i64>,
}

impl SlideResult {
    /// Rewrites a form on the old components into the new basis.
    pub fn relabel(&self, q: &LinkingMatrix) -> LinkingMatrix {
        let p = q.permuted(&self.perm);
        let n = p.size();
        let e = (0..n)
            .map(|a| (0..n).map(|b| p.get(a, b) * self.orientation[a] * self.orientation[b]).collect())
            .collect();
        LinkingMatrix::new(e).expect("congruent to a symmetric form")
    }
}

impl FramedLink {
    fn check_component(&self, i: usize) -> Result<()> {
        if i < self.component_count() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, len: self.component_count() })
        }
    }

    /// Slides component `i` over component `j`: `i` is band-summed with a
    /// framing-parallel copy of `j`, reversed when `sign` is negative. The band
    /// passes over the rest of the diagram.
    pub fn handle_slide(&self, i: usize, j: usize, sign: i64) -> Result<SlideResult> {
        self.check_component(i)?;
        self.check_component(j)?;
        if i == j {
            return Err(Error::InvalidInput("a handle cannot slide over itself".into()));
        }
        let s = if sign < 0 { -1 } else { 1 };
        let n = self.component_count();
        let mut widths = vec![1; n];
        widths[j] = 2;
        let cabled = self.cable(&widths);
        let mut slices = cabled.slices;
        let mut origin = cabled.cup_origin;

        // full twists so the copy links j exactly f_j times
        let d = self.framings()[j] - self.self_writhes()[j];
        let (t0, p) = cabled.first_leg[j].expect("every component has a cup");
        let twists = 2 * d.unsigned_abs() as usize;
        slices.splice(t0..t0, std::iter::repeat(Slice::Cross(p, d > 0)).take(twists));
        origin.splice(t0..t0, std::iter::repeat(None).take(twists));

        let (segs, count) = trace(&slices);
        let mut ancestor = vec![None; count];
        let mut copy = usize::MAX;
        for (t, o) in origin.iter().enumerate() {
            let (Some((c, k)), Slice::Cup(x)) = (*o, slices[t]) else { continue };
            let tc = segs[t + 1][x].component;
            if k == 0 {
                ancestor[tc] = Some(c);
            } else {
                copy = tc;
            }
        }
        let ci = ancestor.iter().position(|&a| a == Some(i)).expect("component i survives cabling");

        // the band runs up the right edge of the diagram, from the lower of the
        // two attaching strands to the upper one, passing over everything
        let first = |comp: usize| {
            segs.iter().enumerate().find_map(|(level, row)| {
                row.iter().rposition(|x| x.component == comp).map(|p| (level, p))
            })
        };
        let (li, ai) = first(ci).expect("component i has strands");
        let (lc, ac) = first(copy).expect("the copy has strands");
        let ((low, a), (high, b)) = if li <= lc { ((li, ai), (lc, ac)) } else { ((lc, ac), (li, ai)) };
        let dir = |level: usize, p: usize| if segs[level][p].upward { 1 } else { -1 };

        let w = segs[low].len();
        let mut mid_low: Vec<Slice> = (a..w - 1).map(|q| Slice::Cross(q, true)).collect();
        mid_low.extend([Slice::Cup(w), Slice::Cap(w - 1), Slice::Cup(w - 1)]);
        mid_low.extend((a..w - 1).rev().map(|q| Slice::Cross(q, false)));

        // a zigzag offers the upper strand in both directions
        let w = segs[high].len();
        let want = s * dir(low, a);
        let c = if dir(high, b) == want { b } else { b + 1 };
        let mut mid_high = vec![Slice::Cup(b + 1)];
        mid_high.extend((c..w + 1).map(|q| Slice::Cross(q, true)));
        mid_high.extend([Slice::Cap(w + 1), Slice::Cup(w + 1)]);
        mid_high.extend((c..w + 1).rev().map(|q| Slice::Cross(q, false)));
        mid_high.extend([Slice::Cap(b), Slice::Cap(w)]);

        let out: Vec<Slice> = slices[..low]
            .iter()
            .chain(&mid_low)
            .chain(&slices[low..high])
            .chain(&mid_high)
            .chain(&slices[high..])
            .copied()
            .collect();
        let map_level = |lt: usize| {
            lt + if lt > low { mid_low.len() } else { 0 } + if lt > high { mid_high.len() } else { 0 }
        };

        let (fsegs, fcount) = trace(&out);
        let mut perm = vec![usize::MAX; fcount];
        let mut orientation = vec![0; fcount];
        for (lt, row) in segs.iter().enumerate() {
            let lf = map_level(lt);
            for (q, x) in row.iter().enumerate() {
                if x.component == copy {
                    continue;
                }
                let y = fsegs[lf][q];
                if perm[y.component] == usize::MAX {
                    perm[y.component] = ancestor[x.component].expect("outer copies have ancestors");
                    orientation[y.component] = if x.upward == y.upward { 1 } else { -1 };
                }
            }
        }
        debug_assert!(perm.iter().all(|&k| k < n));

        let q = self.linking_matrix();
        let slid = q.get(i, i) + q.get(j, j) + 2 * s * q.get(i, j);
        let framings = perm.iter().map(|&o| if o == i { slid } else { q.get(o, o) }).collect();
        let link = FramedLink::new(out, framings)?;
        Ok(SlideResult { link, perm, orientation })
    }

    /// Adds a split unknot with framing `sign` as the last component.
    pub fn blow_up(&self, sign: i64) -> FramedLink {
        self.disjoint_union(&FramedLink::unknot(if sign < 0 { -1 } else { 1 }))
    }

    /// Removes a split `+-1`-framed unknot.
    pub fn blow_down(&self, index: usize) -> Result<FramedLink> {
        self.check_component(index)?;
        if self.framings()[index].abs() != 1 || self.crossings().iter().any(|&(a, b, _)| a == index || b == index) {
            return Err(Error::NotBlowDownable(index));
        }
        let mut out = Vec::new();
        for (t, s) in self.slices().iter().enumerate() {
            let own = match *s {
                Slice::Cup(x) => self.segment(t + 1, x).component == index,
                Slice::Cap(x) => self.segment(t, x).component == index,
                Slice::Cross(..) => false,
            };
            if own {
                continue;
            }
            let p = s.position();
            let before = (0..p).filter(|&q| self.segment(t, q).component == index).count();
            out.push(match *s {
                Slice::Cup(_) => Slice::Cup(p - before),
                Slice::Cap(_) => Slice::Cap(p - before),
                Slice::Cross(_, positive) => Slice::Cross(p - before, positive),
            });
        }
        let framings = self.framings().iter().enumerate().filter(|&(k, _)| k != index).map(|(_, &f)| f).collect();
        FramedLink::new(out, framings)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_slide(l: &FramedLink, i: usize, j: usize, s: i64) -> SlideResult {
        let r = l.handle_slide(i, j, s).unwrap();
        let expect = l.linking_matrix().handle_slide(i, j, s).unwrap();
        assert_eq!(r.link.linking_matrix(), r.relabel(&expect), "slide {i} over {j} sign {s}");
        r
    }

    #[test]
    fn slides_match_matrix_moves() {
        let links = [
            FramedLink::hopf(0, 0),
            FramedLink::hopf(1, -2),
            FramedLink::unknot(1).disjoint_union(&FramedLink::unknot(-1)),
            FramedLink::hopf(2, 0).disjoint_union(&FramedLink::unknot(3)),
            FramedLink::new(vec![Slice::Cup(0), Slice::Cross(0, true), Slice::Cap(0)], vec![2])
                .unwrap()
                .disjoint_union(&FramedLink::hopf(0, 1)),
        ];
        for l in &links {
            let n = l.component_count();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        check_slide(l, i, j, 1);
                        check_slide(l, i, j, -1);
                    }
                }
            }
        }
    }

    #[test]
    fn repeated_slides() {
        let r = check_slide(&FramedLink::hopf(0, 0), 0, 1, 1);
        let k = r.perm.iter().position(|&o| o == 0).unwrap();
        let m = r.perm.iter().position(|&o| o == 1).unwrap();
        check_slide(&r.link, m, k, -1);
    }

    #[test]
    fn slide_errors() {
        let h = FramedLink::hopf(0, 0);
        assert!(matches!(h.handle_slide(0, 0, 1), Err(Error::InvalidInput(_))));
        assert!(matches!(h.handle_slide(0, 2, 1), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn blow_up_and_down() {
        let h = FramedLink::hopf(0, 0);
        let up = h.blow_up(-1);
        assert_eq!(up.linking_matrix(), h.linking_matrix().blow_up(-1));
        assert_eq!(up.blow_down(2).unwrap(), h);
        assert_eq!(h.blow_down(0), Err(Error::NotBlowDownable(0)));
        // an unknot drawn around another component
        let l = FramedLink::new(
            vec![Slice::Cup(0), Slice::Cup(1), Slice::Cap(1), Slice::Cup(1), Slice::Cap(1), Slice::Cap(0)],
            vec![1, 2, 3],
        )
        .unwrap();
        let d = l.blow_down(0).unwrap();
        assert_eq!(d.linking_matrix(), LinkingMatrix::diagonal(&[2, 3]));
    }
}
