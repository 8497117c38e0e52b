//! Kauffman-bracket evaluation of colored links for the Temperley-Lieb
//! backend: each component is cabled by its color, a Jones-Wenzl projector
//! is inserted once per component, and the resulting planar diagram is
//! contracted slice by slice over the basis of planar matchings.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::category::{Backend, RibbonData};
use crate::error::{Error, Result};
use crate::link::{EvalConfig, FramedLink, Slice};
use crate::scalar::CycScalar;

/// Planar perfect matching: `m[i]` is the partner of point `i`.
type Matching = Vec<u8>;
type Combo = HashMap<Matching, CycScalar>;

/// Loop value and crossing weights at `A`.
struct Bracket {
    a: CycScalar,
    a_inv: CycScalar,
    delta: CycScalar,
    order: u64,
}

impl Bracket {
    fn new(order: u64, root_power: u64) -> Self {
        let a = CycScalar::zeta_pow(order, root_power as i64);
        let a_inv = a.invert().expect("root of unity");
        let delta = -(&(&a * &a) + &(&a_inv * &a_inv));
        Bracket { a, a_inv, delta, order }
    }

    fn loops(&self, k: usize) -> CycScalar {
        self.delta.pow(k as i64).expect("nonnegative")
    }
}

fn add_term(c: &mut Combo, m: Matching, v: CycScalar) {
    if v.is_zero() {
        return;
    }
    match c.get_mut(&m) {
        Some(x) => {
            *x += v;
            if x.is_zero() {
                c.remove(&m);
            }
        }
        None => {
            c.insert(m, v);
        }
    }
}

fn cup(m: &[u8], i: usize) -> Matching {
    let sh = |j: u8| if (j as usize) < i { j } else { j + 2 };
    let mut out = Vec::with_capacity(m.len() + 2);
    for (j, &p) in m.iter().enumerate() {
        if j == i {
            out.push(i as u8 + 1);
            out.push(i as u8);
        }
        out.push(sh(p));
    }
    if i == m.len() {
        out.push(i as u8 + 1);
        out.push(i as u8);
    }
    out
}

/// Closes strands `i`, `i + 1`; returns the new matching and loops formed.
fn cap(m: &[u8], i: usize) -> (Matching, usize) {
    let (a, b) = (m[i] as usize, m[i + 1] as usize);
    let mut v = m.to_vec();
    let loops = if a == i + 1 {
        1
    } else {
        v[a] = b as u8;
        v[b] = a as u8;
        0
    };
    let sh = |j: u8| if (j as usize) < i { j } else { j - 2 };
    let out = v
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i && j != i + 1)
        .map(|(_, &p)| sh(p))
        .collect();
    (out, loops)
}

/// Applies an `n`-strand TL diagram `d` (points `0..n` bottom, `n..2n` top)
/// on positions `s..s+n` of the matching `m`.
fn apply_block(m: &[u8], s: usize, n: usize, d: &[u8]) -> (Matching, usize) {
    let w = m.len();
    let inside = |x: usize| x >= s && x < s + n;
    let mut out = vec![u8::MAX; w];
    let mut seen = vec![false; n];
    // walk from a top point of d or an outside position to the other end
    enum Node {
        Pos(usize),
        Top(usize),
    }
    let walk = |start: Node, seen: &mut Vec<bool>| -> Node {
        // the first edge leaving `start`
        let mut via_d = matches!(start, Node::Top(_));
        let mut cur = match start {
            Node::Top(k) => n + k,
            Node::Pos(x) => x,
        };
        loop {
            if via_d {
                let nxt = d[cur] as usize;
                if nxt >= n {
                    return Node::Top(nxt - n);
                }
                seen[nxt] = true;
                cur = s + nxt;
                via_d = false;
            } else {
                let nxt = m[cur] as usize;
                if !inside(nxt) {
                    return Node::Pos(nxt);
                }
                seen[nxt - s] = true;
                cur = nxt - s;
                via_d = true;
            }
        }
    };
    let place = |node: &Node| match *node {
        Node::Pos(x) => x,
        Node::Top(k) => s + k,
    };
    for k in 0..n {
        if out[s + k] != u8::MAX {
            continue;
        }
        let end = walk(Node::Top(k), &mut seen);
        let (a, b) = (s + k, place(&end));
        out[a] = b as u8;
        out[b] = a as u8;
    }
    for x in (0..w).filter(|&x| !inside(x)) {
        if out[x] != u8::MAX {
            continue;
        }
        let end = if inside(m[x] as usize) { walk(Node::Pos(x), &mut seen) } else { Node::Pos(m[x] as usize) };
        let y = place(&end);
        out[x] = y as u8;
        out[y] = x as u8;
    }
    // remaining inner points close up into loops
    let mut loops = 0;
    for b in 0..n {
        if seen[b] {
            continue;
        }
        loops += 1;
        let mut cur = b;
        loop {
            seen[cur] = true;
            let up = d[cur] as usize;
            seen[up] = true;
            let nxt = m[s + up] as usize - s;
            if seen[nxt] {
                break;
            }
            cur = nxt;
        }
    }
    (out, loops)
}

/// Stacks TL diagram `y` on top of `x`, both on `n` strands.
fn compose(x: &[u8], y: &[u8], n: usize) -> (Matching, usize) {
    // glue: x top k  ==  y bottom k
    let mut out = vec![u8::MAX; 2 * n];
    let mut mid_seen = vec![false; n];
    // endpoint ids: x bottom 0..n -> 0..n, y top n..2n -> n..2n
    let follow = |start_x: bool, p: usize, mid_seen: &mut Vec<bool>| -> usize {
        let (mut in_x, mut cur) = (start_x, p);
        loop {
            if in_x {
                let nxt = x[cur] as usize;
                if nxt < n {
                    return nxt;
                }
                mid_seen[nxt - n] = true;
                cur = nxt - n;
                in_x = false;
            } else {
                let nxt = y[cur] as usize;
                if nxt >= n {
                    return nxt;
                }
                mid_seen[nxt] = true;
                cur = n + nxt;
                in_x = true;
            }
        }
    };
    for p in 0..2 * n {
        if out[p] != u8::MAX {
            continue;
        }
        let q = if p < n { follow(true, p, &mut mid_seen) } else { follow(false, p, &mut mid_seen) };
        out[p] = q as u8;
        out[q] = p as u8;
    }
    let mut loops = 0;
    for k in 0..n {
        if mid_seen[k] {
            continue;
        }
        loops += 1;
        let mut cur = k;
        loop {
            mid_seen[cur] = true;
            // through x from its top point cur, staying in the middle
            let a = x[n + cur] as usize - n;
            mid_seen[a] = true;
            let b = y[a] as usize;
            if mid_seen[b] {
                break;
            }
            cur = b;
        }
    }
    (out, loops)
}

fn identity(n: usize) -> Matching {
    (0..2 * n).map(|p| if p < n { (p + n) as u8 } else { (p - n) as u8 }).collect()
}

/// `e_k` on `n` strands: joins strands `k` and `k + 1` at both ends.
fn generator(n: usize, k: usize) -> Matching {
    let mut m = identity(n);
    m[k] = k as u8 + 1;
    m[k + 1] = k as u8;
    m[n + k] = (n + k + 1) as u8;
    m[n + k + 1] = (n + k) as u8;
    m
}

/// `d (x) 1` on `n + 1` strands.
fn extend(d: &[u8], n: usize) -> Matching {
    let map = |p: usize| if p < n { p } else { p + 1 };
    let mut out = vec![0u8; 2 * n + 2];
    for p in 0..2 * n {
        out[map(p)] = map(d[p] as usize) as u8;
    }
    out[n] = (2 * n + 1) as u8;
    out[2 * n + 1] = n as u8;
    out
}

fn product(x: &Combo, y: &Combo, n: usize, br: &Bracket) -> Combo {
    let mut out = Combo::new();
    for (dx, cx) in x {
        for (dy, cy) in y {
            let (d, loops) = compose(dx, dy, n);
            add_term(&mut out, d, &(cx * cy) * &br.loops(loops));
        }
    }
    out
}

type JwKey = (u64, u64, usize);

fn jw_cache() -> &'static RwLock<HashMap<JwKey, Arc<Combo>>> {
    static CACHE: OnceLock<RwLock<HashMap<JwKey, Arc<Combo>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Closed loop value of the `n`-th projector, `(-1)^n [n+1]`.
fn delta_n(br: &Bracket, n: usize) -> CycScalar {
    let q = crate::category::quantum_integer(&br.a, n as i64 + 1);
    if n % 2 == 0 {
        q
    } else {
        -q
    }
}

/// Jones-Wenzl projector on `n` strands by Wenzl's recursion.
fn jones_wenzl(br: &Bracket, root_power: u64, n: usize) -> Result<Arc<Combo>> {
    let key = (br.order, root_power, n);
    if let Some(p) = jw_cache().read().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let p = if n <= 1 {
        let mut c = Combo::new();
        c.insert(identity(n), CycScalar::one(br.order));
        c
    } else {
        let prev = jones_wenzl(br, root_power, n - 1)?;
        let ext: Combo = prev.iter().map(|(d, c)| (extend(d, n - 1), c.clone())).collect();
        let mut e = Combo::new();
        e.insert(generator(n, n - 2), CycScalar::one(br.order));
        let inner = product(&product(&ext, &e, n, br), &ext, n, br);
        let den = delta_n(br, n - 1);
        if den.is_zero() {
            return Err(Error::InvalidInput(format!("projector on {n} strands is undefined at this root")));
        }
        let ratio = &delta_n(br, n - 2) * &den.invert()?;
        let mut out = ext;
        for (d, c) in inner {
            add_term(&mut out, d, -(&ratio * &c));
        }
        out
    };
    let p = Arc::new(p);
    // concurrent writers compute the same value; the first insert wins
    Ok(jw_cache().write().unwrap().entry(key).or_insert(p).clone())
}

/// Trace of the `n`-strand projector, evaluated by closing it up.
pub fn jones_wenzl_trace(r: &RibbonData, n: usize) -> Result<CycScalar> {
    let Backend::Tl { root_power, .. } = r.backend else {
        return Err(Error::BackendMismatch("not a TL category".into()));
    };
    let br = Bracket::new(r.order, root_power);
    let p = jones_wenzl(&br, root_power, n)?;
    let mut total = CycScalar::zero(r.order);
    // closing strand k joins bottom k to top k: compose with the identity
    // and count the loops of the resulting closed diagram
    for (d, c) in p.iter() {
        let loops = closure_loops(d, n);
        total += c * &br.loops(loops);
    }
    Ok(total)
}

fn closure_loops(d: &[u8], n: usize) -> usize {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for s in 0..2 * n {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut cur = s;
        loop {
            seen[cur] = true;
            let a = d[cur] as usize;
            seen[a] = true;
            // closure arc joins top k with bottom k
            let b = if a < n { a + n } else { a - n };
            if seen[b] {
                break;
            }
            cur = b;
        }
    }
    loops
}

/// Value of `l` colored by `coloring` (colors `0..r-2`), framing-corrected.
pub fn evaluate_tl(l: &FramedLink, r: &RibbonData, coloring: &[usize], cfg: &EvalConfig) -> Result<CycScalar> {
    let Backend::Tl { root_power, .. } = r.backend else {
        return Err(Error::BackendMismatch(format!("{} backend is not tl", r.backend.tag())));
    };
    if coloring.len() != l.component_count() {
        return Err(Error::InvalidInput(format!(
            "{} colors for {} components",
            coloring.len(),
            l.component_count()
        )));
    }
    if let Some(&c) = coloring.iter().find(|&&c| c >= r.rank()) {
        return Err(Error::ColorOutOfRange { color: c, simples: r.rank() });
    }
    let br = Bracket::new(r.order, root_power);
    let cabled = l.cable(coloring);
    let mut width = 0usize;
    let mut max_width = 0usize;
    for s in &cabled.slices {
        width = s.width_after(width).expect("cabling preserves well-formedness");
        max_width = max_width.max(width);
    }
    if max_width > cfg.width_cap {
        return Err(Error::ResourceLimit(format!(
            "cabled diagram needs {max_width} strands, cap is {}",
            cfg.width_cap
        )));
    }
    let max_width = max_width.max(1);
    if max_width > u8::MAX as usize {
        return Err(Error::ResourceLimit("strand count exceeds 255".into()));
    }
    // projectors to insert before slice index t
    let mut inserts: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (c, leg) in cabled.first_leg.iter().enumerate() {
        if let Some((t, p)) = *leg {
            if coloring[c] >= 2 {
                inserts.entry(t).or_default().push((p, coloring[c]));
            }
        }
    }
    let projectors: HashMap<usize, Arc<Combo>> = coloring
        .iter()
        .filter(|&&n| n >= 2)
        .map(|&n| Ok((n, jones_wenzl(&br, root_power, n)?)))
        .collect::<Result<_>>()?;

    let mut state = Combo::new();
    state.insert(Vec::new(), CycScalar::one(r.order));
    for t in 0..=cabled.slices.len() {
        if let Some(list) = inserts.get(&t) {
            for &(p, n) in list {
                let jw = &projectors[&n];
                let mut next = Combo::new();
                for (m, c) in &state {
                    for (d, cd) in jw.iter() {
                        let (v, loops) = apply_block(m, p, n, d);
                        add_term(&mut next, v, &(c * cd) * &br.loops(loops));
                    }
                }
                state = next;
            }
        }
        let Some(&slice) = cabled.slices.get(t) else { break };
        let mut next = Combo::new();
        for (m, c) in state {
            match slice {
                Slice::Cup(i) => add_term(&mut next, cup(&m, i), c),
                Slice::Cap(i) => {
                    let (v, loops) = cap(&m, i);
                    add_term(&mut next, v, &c * &br.loops(loops));
                }
                Slice::Cross(i, positive) => {
                    let (w_id, w_e) = if positive { (&br.a, &br.a_inv) } else { (&br.a_inv, &br.a) };
                    let (capped, loops) = cap(&m, i);
                    let e = cup(&capped, i);
                    add_term(&mut next, m, &c * w_id);
                    add_term(&mut next, e, &(&c * w_e) * &br.loops(loops));
                }
            }
        }
        state = next;
    }
    let mut value = state.remove(&Vec::new()).unwrap_or_else(|| CycScalar::zero(r.order));
    let writhes = l.self_writhes();
    for (c, &col) in coloring.iter().enumerate() {
        let e = l.framings()[c] - writhes[c];
        if e != 0 {
            value = &value * &r.twists[col].pow(e)?;
        }
    }
    Ok(value.embed(r.order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::tl;

    #[test]
    fn matching_moves() {
        assert_eq!(cup(&[], 0), vec![1, 0]);
        assert_eq!(cup(&[1, 0], 1), vec![3, 2, 1, 0]);
        assert_eq!(cup(&[1, 0], 2), vec![1, 0, 3, 2]);
        assert_eq!(cap(&[1, 0], 0), (vec![], 1));
        assert_eq!(cap(&[3, 2, 1, 0], 1), (vec![1, 0], 1));
        assert_eq!(cap(&[1, 0, 3, 2], 1), (vec![1, 0], 0));
    }

    #[test]
    fn projector_traces_match_dimensions() {
        for r in 3..=6 {
            let cat = tl(r, 1).unwrap();
            for n in 0..cat.rank() {
                assert_eq!(jones_wenzl_trace(&cat, n).unwrap(), cat.dims[n], "r={r} n={n}");
            }
        }
    }

    #[test]
    fn projector_is_idempotent() {
        let br = Bracket::new(20, 1);
        let p = jones_wenzl(&br, 1, 3).unwrap();
        let pp = product(&p, &p, 3, &br);
        assert_eq!(pp.len(), p.len());
        for (d, c) in p.iter() {
            assert_eq!(pp.get(d), Some(c));
        }
    }

    #[test]
    fn unknots() {
        let cfg = EvalConfig::default();
        for r in 3..=6 {
            let cat = tl(r, 1).unwrap();
            for n in 0..cat.rank() {
                let v = evaluate_tl(&FramedLink::unknot(0), &cat, &[n], &cfg).unwrap();
                assert_eq!(v, cat.dims[n]);
                let v = evaluate_tl(&FramedLink::unknot(2), &cat, &[n], &cfg).unwrap();
                assert_eq!(v, &cat.dims[n] * &cat.twists[n].pow(2).unwrap());
            }
        }
    }

    #[test]
    fn hopf_matches_smatrix() {
        let cfg = EvalConfig::default();
        let cat = tl(4, 1).unwrap();
        for a in 0..cat.rank() {
            for b in 0..cat.rank() {
                let v = evaluate_tl(&FramedLink::hopf(0, 0), &cat, &[a, b], &cfg).unwrap();
                assert_eq!(v, cat.smatrix[a][b], "colors {a} {b}");
            }
        }
    }

    #[test]
    fn kinked_unknot_framing_correction() {
        let cfg = EvalConfig::default();
        let cat = tl(5, 1).unwrap();
        let k = FramedLink::new(vec![Slice::Cup(0), Slice::Cross(0, true), Slice::Cap(0)], vec![0]).unwrap();
        for n in 0..cat.rank() {
            assert_eq!(evaluate_tl(&k, &cat, &[n], &cfg).unwrap(), cat.dims[n]);
        }
    }

    #[test]
    fn width_cap_is_enforced() {
        let cat = tl(6, 1).unwrap();
        let cfg = EvalConfig { width_cap: 4 };
        let e = evaluate_tl(&FramedLink::hopf(0, 0), &cat, &[3, 3], &cfg).unwrap_err();
        assert!(matches!(e, Error::ResourceLimit(_)));
    }
}
