//! Framed links as words of elementary slices (cups, caps, crossings) read
//! bottom to top. Positions are 0-based here; the text format is 1-based.

use crate::error::{Error, Result};
use crate::link::LinkingMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slice {
    /// New strands at `i` and `i + 1`, joined below.
    Cup(usize),
    /// Strands `i` and `i + 1` joined above.
    Cap(usize),
    /// Strands `i` and `i + 1` swap. `positive` means the strand running
    /// from bottom-left to top-right passes over.
    Cross(usize, bool),
}

impl Slice {
    pub fn position(&self) -> usize {
        match *self {
            Slice::Cup(i) | Slice::Cap(i) | Slice::Cross(i, _) => i,
        }
    }

    /// Strand count after the slice, given the count before it.
    pub fn width_after(&self, before: usize) -> Option<usize> {
        match *self {
            Slice::Cup(i) => (i <= before).then_some(before + 2),
            Slice::Cap(i) => (i + 1 < before).then(|| before - 2),
            Slice::Cross(i, _) => (i + 1 < before).then_some(before),
        }
    }
}

/// Component and travel direction of one strand segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct SegmentInfo {
    pub component: usize,
    pub upward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedLink {
    slices: Vec<Slice>,
    framings: Vec<i64>,
    /// `segments[t][p]`: strand at position `p` between slice `t - 1` and `t`.
    segments: Vec<Vec<SegmentInfo>>,
    components: usize,
}

impl FramedLink {
    pub fn new(slices: Vec<Slice>, framings: Vec<i64>) -> Result<Self> {
        let mut width = 0usize;
        for (t, s) in slices.iter().enumerate() {
            width = s.width_after(width).ok_or_else(|| {
                Error::MalformedDiagram(format!("slice {} ({s:?}) does not fit {width} strands", t + 1))
            })?;
        }
        if width != 0 {
            return Err(Error::MalformedDiagram(format!("{width} strands left open at the top")));
        }
        let (segments, components) = trace(&slices);
        if framings.len() != components {
            return Err(Error::MalformedDiagram(format!(
                "{} framings given for {components} components",
                framings.len()
            )));
        }
        Ok(FramedLink { slices, framings, segments, components })
    }

    pub fn empty() -> Self {
        FramedLink::new(Vec::new(), Vec::new()).expect("empty word is well-formed")
    }

    /// 0-framed unknot `cup, cap` with the given framing.
    pub fn unknot(framing: i64) -> Self {
        FramedLink::new(vec![Slice::Cup(0), Slice::Cap(0)], vec![framing]).expect("well-formed")
    }

    /// Hopf link with linking number `+1`.
    pub fn hopf(f1: i64, f2: i64) -> Self {
        let s = vec![
            Slice::Cup(0),
            Slice::Cup(2),
            Slice::Cross(1, false),
            Slice::Cross(1, false),
            Slice::Cap(0),
            Slice::Cap(0),
        ];
        FramedLink::new(s, vec![f1, f2]).expect("well-formed")
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn with_framings(&self, framings: Vec<i64>) -> Result<Self> {
        FramedLink::new(self.slices.clone(), framings)
    }

    pub(crate) fn segment(&self, level: usize, pos: usize) -> SegmentInfo {
        self.segments[level][pos]
    }

    /// Width before each slice, plus the final width.
    pub fn widths(&self) -> Vec<usize> {
        self.segments.iter().map(Vec::len).collect()
    }

    /// `(component a, component b, sign)` for every crossing, in slice order.
    pub fn crossings(&self) -> Vec<(usize, usize, i64)> {
        self.slices
            .iter()
            .enumerate()
            .filter_map(|(t, s)| match *s {
                Slice::Cross(i, positive) => {
                    let a = self.segments[t][i];
                    let b = self.segments[t][i + 1];
                    let dir = |x: SegmentInfo| if x.upward { 1 } else { -1 };
                    let sign = if positive { 1 } else { -1 } * dir(a) * dir(b);
                    Some((a.component, b.component, sign))
                }
                _ => None,
            })
            .collect()
    }

    /// Self-crossing sign sum for each component.
    pub fn self_writhes(&self) -> Vec<i64> {
        let mut w = vec![0; self.components];
        for (a, b, s) in self.crossings() {
            if a == b {
                w[a] += s;
            }
        }
        w
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let n = self.components;
        let mut twice = vec![vec![0i64; n]; n];
        for (a, b, s) in self.crossings() {
            if a != b {
                twice[a][b] += s;
                twice[b][a] += s;
            }
        }
        let q = (0..n)
            .map(|i| (0..n).map(|j| if i == j { self.framings[i] } else { twice[i][j] / 2 }).collect())
            .collect();
        LinkingMatrix::new(q).expect("symmetric by construction")
    }

    /// Concatenation: `other` is drawn above `self`, so it is split from it.
    pub fn disjoint_union(&self, other: &FramedLink) -> FramedLink {
        let slices = self.slices.iter().chain(&other.slices).copied().collect();
        let framings = self.framings.iter().chain(&other.framings).copied().collect();
        FramedLink::new(slices, framings).expect("both parts are closed")
    }
}

/// A link with every component replaced by parallel copies.
pub(crate) struct Cabled {
    pub slices: Vec<Slice>,
    /// Per component: slice count emitted before the left leg of its first cup
    /// becomes available, and the leg's first position.
    pub first_leg: Vec<Option<(usize, usize)>>,
    /// For each cup slice: original component and copy index (0 = outermost).
    pub cup_origin: Vec<Option<(usize, usize)>>,
}

impl FramedLink {
    /// Replaces component `c` by `widths[c]` blackboard-parallel copies.
    pub(crate) fn cable(&self, widths: &[usize]) -> Cabled {
        let mut out = Vec::new();
        let mut first_leg = vec![None; self.components];
        let mut cup_origin = Vec::new();
        let w = |info: SegmentInfo| widths[info.component];
        for (t, s) in self.slices.iter().enumerate() {
            let offset = |i: usize| (0..i).map(|q| w(self.segments[t][q])).sum::<usize>();
            match *s {
                Slice::Cup(i) => {
                    let c = self.segments[t + 1][i].component;
                    let p = offset(i);
                    for k in 0..widths[c] {
                        out.push(Slice::Cup(p + k));
                        cup_origin.push(Some((c, k)));
                    }
                    if first_leg[c].is_none() {
                        first_leg[c] = Some((out.len(), p));
                    }
                }
                Slice::Cap(i) => {
                    let n = w(self.segments[t][i]);
                    let p = offset(i);
                    for k in 0..n {
                        out.push(Slice::Cap(p + n - 1 - k));
                        cup_origin.push(None);
                    }
                }
                Slice::Cross(i, positive) => {
                    let (w1, w2) = (w(self.segments[t][i]), w(self.segments[t][i + 1]));
                    let p = offset(i);
                    for k in (0..w1).rev() {
                        for m in 0..w2 {
                            out.push(Slice::Cross(p + k + m, positive));
                            cup_origin.push(None);
                        }
                    }
                }
            }
        }
        Cabled { slices: out, first_leg, cup_origin }
    }
}

/// Segment ends: `(level, pos, top)`.
type End = (usize, usize, bool);

/// Discovers components in order of their first cup and orients each one by
/// walking up the left leg of that cup.
pub(crate) fn trace(slices: &[Slice]) -> (Vec<Vec<SegmentInfo>>, usize) {
    let mut widths = vec![0usize];
    for s in slices {
        let w = *widths.last().unwrap();
        widths.push(s.width_after(w).unwrap());
    }
    let unset = SegmentInfo { component: usize::MAX, upward: true };
    let mut segs: Vec<Vec<SegmentInfo>> = widths.iter().map(|&w| vec![unset; w]).collect();

    // neighbour across the slice above level t at position p (top end)
    let above = |t: usize, p: usize| -> End {
        match slices[t] {
            Slice::Cup(i) => (t + 1, if p < i { p } else { p + 2 }, false),
            Slice::Cap(i) => {
                if p == i {
                    (t, i + 1, true)
                } else if p == i + 1 {
                    (t, i, true)
                } else if p < i {
                    (t + 1, p, false)
                } else {
                    (t + 1, p - 2, false)
                }
            }
            Slice::Cross(i, _) => {
                let q = if p == i {
                    i + 1
                } else if p == i + 1 {
                    i
                } else {
                    p
                };
                (t + 1, q, false)
            }
        }
    };
    // neighbour across the slice below level t at position p (bottom end)
    let below = |t: usize, p: usize| -> End {
        let s = slices[t - 1];
        match s {
            Slice::Cup(i) => {
                if p == i {
                    (t, i + 1, false)
                } else if p == i + 1 {
                    (t, i, false)
                } else if p < i {
                    (t - 1, p, true)
                } else {
                    (t - 1, p - 2, true)
                }
            }
            Slice::Cap(i) => (t - 1, if p < i { p } else { p + 2 }, true),
            Slice::Cross(i, _) => {
                let q = if p == i {
                    i + 1
                } else if p == i + 1 {
                    i
                } else {
                    p
                };
                (t - 1, q, true)
            }
        }
    };

    let mut count = 0;
    for (t, s) in slices.iter().enumerate() {
        let Slice::Cup(i) = *s else { continue };
        if segs[t + 1][i].component != usize::MAX {
            continue;
        }
        let comp = count;
        count += 1;
        let (mut level, mut pos, mut up) = (t + 1, i, true);
        loop {
            if segs[level][pos].component != usize::MAX {
                break;
            }
            segs[level][pos] = SegmentInfo { component: comp, upward: up };
            // leave through the far end
            let (l, p, top) = if up { above(level, pos) } else { below(level, pos) };
            level = l;
            pos = p;
            // entering through a bottom end means travelling up
            up = !top;
        }
    }
    (segs, count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_and_hopf() {
        let u = FramedLink::unknot(0);
        assert_eq!(u.component_count(), 1);
        assert_eq!(u.linking_matrix().entries(), &[vec![0]]);
        let h = FramedLink::hopf(0, 0);
        assert_eq!(h.component_count(), 2);
        assert_eq!(h.linking_matrix().entries(), &[vec![0, 1], vec![1, 0]]);
        assert_eq!(h.self_writhes(), vec![0, 0]);
    }

    #[test]
    fn kink_writhe() {
        let k = FramedLink::new(vec![Slice::Cup(0), Slice::Cross(0, true), Slice::Cap(0)], vec![0]).unwrap();
        assert_eq!(k.self_writhes(), vec![-1]);
        let k = FramedLink::new(vec![Slice::Cup(0), Slice::Cross(0, false), Slice::Cap(0)], vec![0]).unwrap();
        assert_eq!(k.self_writhes(), vec![1]);
    }

    #[test]
    fn split_unknots() {
        let l = FramedLink::unknot(1).disjoint_union(&FramedLink::unknot(-1));
        assert_eq!(l.linking_matrix().entries(), &[vec![1, 0], vec![0, -1]]);
    }

    #[test]
    fn malformed_words() {
        assert!(matches!(FramedLink::new(vec![Slice::Cup(0)], vec![0]), Err(Error::MalformedDiagram(_))));
        assert!(matches!(FramedLink::new(vec![Slice::Cap(0)], vec![]), Err(Error::MalformedDiagram(_))));
        assert!(matches!(
            FramedLink::new(vec![Slice::Cup(0), Slice::Cap(0)], vec![0, 0]),
            Err(Error::MalformedDiagram(_))
        ));
        assert!(matches!(
            FramedLink::new(vec![Slice::Cup(0), Slice::Cross(1, true), Slice::Cap(0)], vec![0]),
            Err(Error::MalformedDiagram(_))
        ));
    }

    #[test]
    fn nested_circles_are_two_components() {
        let l = FramedLink::new(vec![Slice::Cup(0), Slice::Cup(1), Slice::Cap(1), Slice::Cap(0)], vec![2, 3]).unwrap();
        assert_eq!(l.component_count(), 2);
        assert_eq!(l.linking_matrix().entries(), &[vec![2, 0], vec![0, 3]]);
    }
}
