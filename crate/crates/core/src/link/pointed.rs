//! Evaluation for pointed categories, where a colored link's value depends
//! only on its linking matrix.
//!
//! The coloring sum `sum_c prod theta(c_i)^{q_ii} prod beta(c_i, c_j)^{q_ij}`
//! is invariant under `q -> E^T q E` for `E` invertible over the group's
//! exponent. It factors over the primary parts of the group; on each part the
//! form is reduced to 1x1 and (for p = 2) 2x2 blocks whose sums are tiny.

use std::collections::HashMap;

use num_integer::Integer;

use crate::category::{AbelianGroup, Backend, RibbonData};
use crate::error::{Error, Result};
use crate::link::LinkingMatrix;
use crate::scalar::CycScalar;

fn group_of(r: &RibbonData) -> Result<&AbelianGroup> {
    match &r.backend {
        Backend::Pointed(g) => Ok(g),
        other => Err(Error::BackendMismatch(format!("{} backend is not pointed", other.tag()))),
    }
}

/// `prod theta(c_i)^{q_ii} * prod_{i<j} beta(c_i, c_j)^{q_ij}`.
pub fn evaluate_pointed(q: &LinkingMatrix, r: &RibbonData, coloring: &[usize]) -> Result<CycScalar> {
    group_of(r)?;
    let n = q.size();
    if coloring.len() != n {
        return Err(Error::InvalidInput(format!("{} colors for {n} components", coloring.len())));
    }
    if let Some(&c) = coloring.iter().find(|&&c| c >= r.rank()) {
        return Err(Error::ColorOutOfRange { color: c, simples: r.rank() });
    }
    let mut acc = CycScalar::one(r.order);
    for i in 0..n {
        acc = &acc * &r.twists[coloring[i]].pow(q.get(i, i))?;
        for j in i + 1..n {
            if q.get(i, j) != 0 {
                acc = &acc * &r.smatrix[coloring[i]][coloring[j]].pow(q.get(i, j))?;
            }
        }
    }
    Ok(acc)
}

/// Direct sum over all `|A|^n` colorings; exponential, used as an oracle.
pub fn kirby_sum_pointed_brute(q: &LinkingMatrix, r: &RibbonData) -> Result<CycScalar> {
    let k = r.rank();
    let n = q.size();
    let total = (k as u128).checked_pow(n as u32).filter(|&t| t <= 1 << 24);
    let Some(total) = total else {
        return Err(Error::ResourceLimit("too many colorings for brute force".into()));
    };
    let mut sum = CycScalar::zero(r.order);
    let mut c = vec![0usize; n];
    for _ in 0..total {
        sum += evaluate_pointed(q, r, &c)?;
        for slot in c.iter_mut() {
            *slot += 1;
            if *slot < k {
                break;
            }
            *slot = 0;
        }
    }
    Ok(sum)
}

/// Coloring sum over all group elements (all dimensions are 1).
pub fn kirby_sum_pointed(q: &LinkingMatrix, r: &RibbonData) -> Result<CycScalar> {
    let g = group_of(r)?;
    let mut total = CycScalar::one(r.order);
    for part in primary_parts(g) {
        total = &total * &part_sum(q, r, &part);
    }
    Ok(total)
}

struct PrimaryPart {
    p: u64,
    /// Group indices of the elements of the p-part.
    elements: Vec<usize>,
    exponent: u64,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primary_parts(g: &AbelianGroup) -> Vec<PrimaryPart> {
    let size = g.size() as u64;
    let mut parts = Vec::new();
    for p in prime_factors(size) {
        // generator of the p-part of each cyclic factor, and its order
        let mut gens = Vec::new();
        for (f, &n) in g.factors().iter().enumerate() {
            let mut pk = 1;
            while n % (pk * p) == 0 {
                pk *= p;
            }
            if pk > 1 {
                let mut coords = vec![0i64; g.factors().len()];
                coords[f] = (n / pk) as i64;
                gens.push((g.index(&coords), pk));
            }
        }
        let mut elements = vec![0usize];
        for &(gen, ord) in &gens {
            let mut next = Vec::new();
            for &e in &elements {
                for m in 0..ord {
                    next.push(g.add(e, g.mul(m as i64, gen)));
                }
            }
            elements = next;
        }
        let exponent = gens.iter().map(|&(_, o)| o).max().unwrap_or(1);
        parts.push(PrimaryPart { p, elements, exponent });
    }
    parts
}

fn valuation(x: u64, p: u64, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let mut v = 0;
    let mut x = x;
    while x % p == 0 && v < cap {
        x /= p;
        v += 1;
    }
    v
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i64) as u64
}

enum Block {
    One(u64),
    Two(u64, u64, u64),
}

/// Reduces `q mod p^k` to blocks by unimodular congruence.
fn reduce(q: &LinkingMatrix, p: u64, k: u32) -> Vec<Block> {
    let m = p.pow(k);
    let n = q.size();
    let mut a: Vec<Vec<u64>> =
        q.entries().iter().map(|row| row.iter().map(|&x| x.rem_euclid(m as i64) as u64).collect()).collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut blocks = Vec::new();
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % m as u128) as u64;
    let subm = |x: u64, y: u64| (x + m - y % m) % m;

    while !alive.is_empty() {
        let mut best: Option<(u32, usize, usize)> = None;
        for &i in &alive {
            for &j in &alive {
                let v = valuation(a[i][j], p, k);
                let better = match best {
                    None => true,
                    // prefer diagonal entries at equal valuation
                    Some((bv, bi, bj)) => v < bv || (v == bv && i == j && bi != bj),
                };
                if better {
                    best = Some((v, i, j));
                }
            }
        }
        let (v, i, j) = best.expect("nonempty");
        if v >= k {
            blocks.extend(alive.iter().map(|_| Block::One(0)));
            break;
        }
        if i != j && p != 2 {
            // row/col i += row/col j; the new diagonal 2a_ij + ... has valuation v
            add_multiple(&mut a, i, j, 1, m);
        }
        if i != j && p == 2 {
            let pv = p.pow(v);
            let (al, be, de) = (a[i][i] / pv, a[i][j] / pv, a[j][j] / pv);
            let det = (mulm(al, de) + m - mulm(be, be)) % m;
            let dinv = mod_inverse(det, m);
            let others: Vec<usize> = alive.iter().copied().filter(|&x| x != i && x != j).collect();
            // (t, s) = (x, y) B'^{-1} with B'^{-1} = dinv [[de, -be], [-be, al]]
            let coef: Vec<(usize, u64, u64)> = others
                .iter()
                .map(|&r| {
                    let x = a[r][i] / pv;
                    let y = a[r][j] / pv;
                    let t = mulm(dinv, subm(mulm(x, de), mulm(y, be)));
                    let s = mulm(dinv, subm(mulm(y, al), mulm(x, be)));
                    (r, t, s)
                })
                .collect();
            for (r, t, s) in coef {
                add_multiple(&mut a, r, i, (m - t) % m, m);
                add_multiple(&mut a, r, j, (m - s) % m, m);
            }
            blocks.push(Block::Two(a[i][i], a[i][j], a[j][j]));
            alive.retain(|&x| x != i && x != j);
            continue;
        }
        let pv = p.pow(v);
        let u = a[i][i] / pv;
        let uinv = mod_inverse(u % m, m);
        let others: Vec<usize> = alive.iter().copied().filter(|&x| x != i).collect();
        let coef: Vec<(usize, u64, u64)> =
            others.iter().map(|&r| (r, mulm(a[r][i] / pv, uinv), 0)).collect();
        for (r, t, _) in coef {
            add_multiple(&mut a, r, i, (m - t) % m, m);
        }
        blocks.push(Block::One(a[i][i]));
        alive.retain(|&x| x != i);
    }
    blocks
}

/// Congruence by `e_r <- e_r + c e_i` on the symmetric matrix `a` modulo `m`.
fn add_multiple(a: &mut [Vec<u64>], r: usize, i: usize, c: u64, m: u64) {
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % m as u128) as u64;
    let arr = (a[r][r] + mulm(2 * c % m, a[i][r]) + mulm(mulm(c, c), a[i][i])) % m;
    for k in 0..a.len() {
        if k != r {
            let v = (a[r][k] + mulm(c, a[i][k])) % m;
            a[r][k] = v;
            a[k][r] = v;
        }
    }
    a[r][r] = arr;
}

fn part_sum(q: &LinkingMatrix, r: &RibbonData, part: &PrimaryPart) -> CycScalar {
    // smallest power of p killing every twist on the part and the pairing
    let twist_order = part
        .elements
        .iter()
        .map(|&x| r.twists[x].multiplicative_order().expect("twists are roots of unity"))
        .fold(1u64, |acc, o| acc.lcm(&o));
    let modulus = twist_order.lcm(&part.exponent);
    let mut k = 0u32;
    while part.p.pow(k) < modulus {
        k += 1;
    }
    debug_assert_eq!(part.p.pow(k) % modulus, 0);
    let mut cache: HashMap<(u64, u64, u64, bool), CycScalar> = HashMap::new();
    let mut total = CycScalar::one(r.order);
    for b in reduce(q, part.p, k) {
        let key = match b {
            Block::One(x) => (x, 0, 0, false),
            Block::Two(x, y, z) => (x, y, z, true),
        };
        let v = cache.entry(key).or_insert_with(|| block_sum(r, &part.elements, &b)).clone();
        total = &total * &v;
    }
    total
}

fn block_sum(r: &RibbonData, elements: &[usize], b: &Block) -> CycScalar {
    let pw = |x: &CycScalar, e: u64| x.pow(e as i64).expect("nonnegative exponent");
    match *b {
        Block::One(a) => elements.iter().map(|&x| pw(&r.twists[x], a)).sum(),
        Block::Two(a, bb, d) => {
            let ta: Vec<CycScalar> = elements.iter().map(|&x| pw(&r.twists[x], a)).collect();
            let td: Vec<CycScalar> = elements.iter().map(|&x| pw(&r.twists[x], d)).collect();
            let mut s = CycScalar::zero(r.order);
            for (ix, &x) in elements.iter().enumerate() {
                for (iy, &y) in elements.iter().enumerate() {
                    s += &(&ta[ix] * &td[iy]) * &pw(&r.smatrix[x][y], bb);
                }
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{pointed_cyclic, product, semion, svect, toric_code};
    use crate::link::matrix::{hyperbolic, k3_form};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn svect_examples() {
        let s = svect();
        let f = s.label_index("f").unwrap();
        assert_eq!(evaluate_pointed(&LinkingMatrix::diagonal(&[0]), &s, &[f]).unwrap(), CycScalar::from_int(1));
        assert_eq!(evaluate_pointed(&LinkingMatrix::diagonal(&[1]), &s, &[f]).unwrap(), CycScalar::from_int(-1));
        assert!(kirby_sum_pointed(&LinkingMatrix::diagonal(&[1]), &s).unwrap().is_zero());
        assert_eq!(kirby_sum_pointed(&hyperbolic(), &s).unwrap(), CycScalar::from_int(4));
        assert_eq!(kirby_sum_pointed(&LinkingMatrix::empty(), &s).unwrap(), CycScalar::from_int(1));
    }

    #[test]
    fn semion_hopf() {
        let s = semion();
        assert_eq!(evaluate_pointed(&hyperbolic(), &s, &[1, 1]).unwrap(), CycScalar::from_int(-1));
    }

    #[test]
    fn k3_for_svect() {
        let v = kirby_sum_pointed(&k3_form(), &svect()).unwrap();
        assert_eq!(v, CycScalar::from_int(1 << 22));
    }

    #[test]
    fn reduction_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cats = vec![
            svect(),
            semion(),
            toric_code(),
            pointed_cyclic(4, 1).unwrap(),
            pointed_cyclic(4, 3).unwrap(),
            pointed_cyclic(6, 5).unwrap(),
            pointed_cyclic(8, 3).unwrap(),
            pointed_cyclic(3, 1).unwrap(),
            pointed_cyclic(9, 2).unwrap(),
            product(&svect(), &pointed_cyclic(4, 1).unwrap()).unwrap(),
        ];
        for cat in &cats {
            for _ in 0..12 {
                let n = rng.gen_range(1..=3);
                let mut q = vec![vec![0i64; n]; n];
                for i in 0..n {
                    for j in i..n {
                        let x = rng.gen_range(-3..=3);
                        q[i][j] = x;
                        q[j][i] = x;
                    }
                }
                let q = LinkingMatrix::new(q).unwrap();
                let fast = kirby_sum_pointed(&q, cat).unwrap();
                let slow = kirby_sum_pointed_brute(&q, cat).unwrap();
                assert_eq!(fast, slow, "{} {:?}", cat.name, q);
            }
        }
    }
}
