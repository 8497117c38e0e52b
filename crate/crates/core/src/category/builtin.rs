//! Built-in categories: pointed (metric group) data, Temperley-Lieb at roots
//! of unity, and Deligne products.

use num_integer::Integer;

use super::{AbelianGroup, Backend, RibbonData};
use crate::error::{Error, Result};
use crate::scalar::CycScalar;

/// Pointed category on `group` with twist `theta[a]` for each element index.
pub fn pointed(
    name: impl Into<String>,
    group: AbelianGroup,
    labels: Option<Vec<String>>,
    theta: Vec<CycScalar>,
) -> Result<RibbonData> {
    let n = group.size();
    if theta.len() != n {
        return Err(Error::NonQuadraticForm(format!("expected {n} twist values, got {}", theta.len())));
    }
    let labels = labels.unwrap_or_else(|| (0..n).map(|i| group.default_label(i)).collect());
    if labels.len() != n {
        return Err(Error::InvalidInput("label count differs from group order".into()));
    }
    if !theta[0].is_one() {
        return Err(Error::NonQuadraticForm("theta(0) must be 1".into()));
    }
    let mut order = 1u64;
    for (i, t) in theta.iter().enumerate() {
        let m = t
            .multiplicative_order()
            .ok_or_else(|| Error::NonQuadraticForm(format!("theta({}) is not a root of unity", labels[i])))?;
        order = order.lcm(&m);
    }
    // rewrite each twist as a power of z_order
    let theta: Vec<CycScalar> = theta
        .iter()
        .map(|t| {
            let (r, k) = t.root_of_unity_exponent().expect("checked above");
            let g = r.gcd(&k);
            let m = r / g;
            CycScalar::zeta_pow(order, ((k / g) * (order / m)) as i64)
        })
        .collect();
    for a in 0..n {
        if theta[group.neg(a)] != theta[a] {
            return Err(Error::NonQuadraticForm(format!("theta(-{0}) != theta({0})", labels[a])));
        }
    }
    let inv: Vec<CycScalar> = theta.iter().map(|t| t.invert().expect("root of unity")).collect();
    let beta = |a: usize, b: usize| &(&theta[group.add(a, b)] * &inv[a]) * &inv[b];
    let table: Vec<Vec<CycScalar>> = (0..n).map(|a| (0..n).map(|b| beta(a, b)).collect()).collect();
    for a in 0..n {
        for b in 0..n {
            let ab = group.add(a, b);
            for c in 0..n {
                if table[ab][c] != &table[a][c] * &table[b][c] {
                    return Err(Error::NonQuadraticForm(format!(
                        "associated form is not a bicharacter at ({}, {}, {})",
                        labels[a], labels[b], labels[c]
                    )));
                }
            }
        }
    }
    let fusion = (0..n)
        .map(|a| (0..n).map(|b| (0..n).map(|c| (group.add(a, b) == c) as u32).collect()).collect())
        .collect();
    let dual = (0..n).map(|a| group.neg(a)).collect();
    RibbonData::from_parts(
        name,
        order,
        labels,
        0,
        dual,
        fusion,
        vec![CycScalar::one(order); n],
        theta,
        table,
        Backend::Pointed(group),
    )
}

/// `Z/n` with `theta(k) = z_{2n}^{t k^2}` (n even) or `z_n^{t k^2}` (n odd).
pub fn pointed_cyclic(n: u64, t: u64) -> Result<RibbonData> {
    let base = if n % 2 == 0 { 2 * n } else { n };
    let theta = (0..n).map(|k| CycScalar::zeta_pow(base, (t * k * k % base) as i64)).collect();
    let labels = (0..n).map(|k| k.to_string()).collect();
    pointed(format!("Z{n}[{t}]"), AbelianGroup::new(vec![n]), Some(labels), theta)
}

/// Every quadratic form on `Z/n`.
pub fn pointed_cyclic_forms(n: u64) -> Vec<RibbonData> {
    let count = if n % 2 == 0 { 2 * n } else { n };
    (0..count).map(|t| pointed_cyclic(n, t).expect("quadratic by construction")).collect()
}

pub fn svect() -> RibbonData {
    let theta = vec![CycScalar::from_int(1), CycScalar::from_int(-1)];
    pointed("sVect", AbelianGroup::new(vec![2]), Some(vec!["1".into(), "f".into()]), theta).expect("valid")
}

pub fn semion() -> RibbonData {
    let theta = vec![CycScalar::from_int(1), CycScalar::zeta(4)];
    pointed("semion", AbelianGroup::new(vec![2]), Some(vec!["1".into(), "s".into()]), theta).expect("valid")
}

pub fn trivial() -> RibbonData {
    pointed("trivial", AbelianGroup::new(vec![]), Some(vec!["1".into()]), vec![CycScalar::from_int(1)]).expect("valid")
}

/// `Z/2 x Z/2` with `e = (1,0)`, `m = (0,1)`, `f = (1,1)` and `theta(f) = -1`.
pub fn toric_code() -> RibbonData {
    let labels = ["1", "e", "m", "f"].map(String::from).to_vec();
    let theta = [1, 1, 1, -1].map(CycScalar::from_int).to_vec();
    pointed("toric_code", AbelianGroup::new(vec![2, 2]), Some(labels), theta).expect("valid")
}

/// Quantum integer `[n]` at `A`, as `A^{2(n-1)} + A^{2(n-3)} + ... + A^{-2(n-1)}`.
pub fn quantum_integer(a: &CycScalar, n: i64) -> CycScalar {
    let sign = if n < 0 { -1 } else { 1 };
    let m = n.abs();
    let total: CycScalar = (0..m).map(|j| a.pow(2 * (m - 1) - 4 * j).expect("root of unity")).sum();
    let total = total.embed(a.order()).expect("same order");
    if sign < 0 {
        -total
    } else {
        total
    }
}

/// Temperley-Lieb category at level `r` with `A = z_{4r}^k`.
pub fn tl(r: u64, k: u64) -> Result<RibbonData> {
    if r < 3 {
        return Err(Error::BadLevel(r));
    }
    let order = 4 * r;
    if k.gcd(&order) != 1 {
        return Err(Error::InvalidInput(format!("root power {k} is not coprime to {order}")));
    }
    let a = CycScalar::zeta_pow(order, k as i64);
    let n = (r - 1) as usize;
    let sign = |e: usize| if e % 2 == 0 { CycScalar::one(order) } else { -CycScalar::one(order) };
    let dims: Vec<CycScalar> = (0..n).map(|i| &sign(i) * &quantum_integer(&a, i as i64 + 1)).collect();
    let twists: Vec<CycScalar> =
        (0..n).map(|i| &sign(i) * &a.pow((i * i + 2 * i) as i64).expect("root of unity")).collect();
    let smatrix = (0..n)
        .map(|i| (0..n).map(|j| &sign(i + j) * &quantum_integer(&a, ((i + 1) * (j + 1)) as i64)).collect())
        .collect();
    let top = 2 * (r as i64 - 2);
    let fusion = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    (0..n)
                        .map(|z| {
                            let (x, y, z) = (x as i64, y as i64, z as i64);
                            let ok = (x - y).abs() <= z && z <= (x + y).min(top - x - y) && (x + y + z) % 2 == 0;
                            ok as u32
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    RibbonData::from_parts(
        format!("tl({r},{k})"),
        order,
        (0..n).map(|i| i.to_string()).collect(),
        0,
        (0..n).collect(),
        fusion,
        dims,
        twists,
        smatrix,
        Backend::Tl { r, root_power: k },
    )
}

/// Deligne product; pointed factors combine into a pointed category.
pub fn product(a: &RibbonData, b: &RibbonData) -> Result<RibbonData> {
    let name = format!("{}*{}", a.name, b.name);
    let (n1, n2) = (a.rank(), b.rank());
    if let (Backend::Pointed(g1), Backend::Pointed(g2)) = (&a.backend, &b.backend) {
        let g = g1.product(g2);
        // flattened index i1 + n1 * i2
        let labels = (0..n1 * n2).map(|i| format!("{}:{}", a.labels[i % n1], b.labels[i / n1])).collect();
        let theta = (0..n1 * n2).map(|i| &a.twists[i % n1] * &b.twists[i / n1]).collect();
        return pointed(name, g, Some(labels), theta);
    }
    let order = a.order.lcm(&b.order);
    let idx = |i: usize, j: usize| i * n2 + j;
    let pairs: Vec<(usize, usize)> = (0..n1).flat_map(|i| (0..n2).map(move |j| (i, j))).collect();
    let fusion = pairs
        .iter()
        .map(|&(i, j)| {
            pairs
                .iter()
                .map(|&(k, l)| pairs.iter().map(|&(p, q)| a.fusion[i][k][p] * b.fusion[j][l][q]).collect())
                .collect()
        })
        .collect();
    RibbonData::from_parts(
        name,
        order,
        pairs.iter().map(|&(i, j)| format!("{}:{}", a.labels[i], b.labels[j])).collect(),
        idx(a.unit, b.unit),
        pairs.iter().map(|&(i, j)| idx(a.dual[i], b.dual[j])).collect(),
        fusion,
        pairs.iter().map(|&(i, j)| &a.dims[i] * &b.dims[j]).collect(),
        pairs.iter().map(|&(i, j)| &a.twists[i] * &b.twists[j]).collect(),
        pairs
            .iter()
            .map(|&(i, j)| pairs.iter().map(|&(k, l)| &a.smatrix[i][k] * &b.smatrix[j][l]).collect())
            .collect(),
        Backend::Product(Box::new(a.clone()), Box::new(b.clone())),
    )
}

/// The category test suite: sVect, every quadratic form on `Z/n` for
/// `n <= 8`, the toric code, `tl(r)` for `3 <= r <= 6`, and Deligne
/// products of sVect with modular factors.
pub fn builtin_suite() -> Vec<RibbonData> {
    let mut out = vec![svect(), semion(), trivial(), toric_code()];
    for n in 2..=8 {
        out.extend(pointed_cyclic_forms(n));
    }
    for r in 3..=6 {
        out.push(tl(r, 1).expect("valid level"));
    }
    let s = svect();
    out.push(product(&s, &semion()).expect("valid"));
    out.push(product(&s, &toric_code()).expect("valid"));
    out.push(product(&s, &s).expect("valid"));
    out.push(product(&s, &tl(3, 1).expect("valid")).expect("valid"));
    out.push(product(&s, &tl(4, 1).expect("valid")).expect("valid"));
    out
}

/// Looks up a builtin by name: `svect`, `semion`, `trivial`, `toric`,
/// `tl(r)`, `tl(r,k)`, `z(n,t)`.
pub fn by_name(name: &str) -> Result<RibbonData> {
    let lower = name.trim().to_ascii_lowercase();
    let args = |s: &str| -> Result<Vec<u64>> {
        s.split(',')
            .map(|x| x.trim().parse::<u64>().map_err(|_| Error::InvalidInput(format!("bad builtin argument `{x}`"))))
            .collect()
    };
    match lower.as_str() {
        "svect" => Ok(svect()),
        "semion" => Ok(semion()),
        "trivial" => Ok(trivial()),
        "toric" | "toric_code" => Ok(toric_code()),
        _ => {
            if let Some(rest) = lower.strip_prefix("tl(").and_then(|s| s.strip_suffix(')')) {
                let v = args(rest)?;
                match v.as_slice() {
                    [r] => tl(*r, 1),
                    [r, k] => tl(*r, *k),
                    _ => Err(Error::InvalidInput(format!("unknown builtin category `{name}`"))),
                }
            } else if let Some(rest) = lower.strip_prefix("z(").and_then(|s| s.strip_suffix(')')) {
                match args(rest)?.as_slice() {
                    [n, t] if *n > 0 => pointed_cyclic(*n, *t),
                    _ => Err(Error::InvalidInput(format!("unknown builtin category `{name}`"))),
                }
            } else {
                Err(Error::InvalidInput(format!("unknown builtin category `{name}`")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_large_and_valid() {
        let suite = builtin_suite();
        assert!(suite.len() >= 20);
        for r in &suite {
            let rep = r.validate();
            assert!(rep.all_passed(), "{}: {rep}", r.name);
        }
    }

    #[test]
    fn suite_identities_hold() {
        for r in builtin_suite() {
            let f = r.has_fermion().unwrap();
            assert_eq!(r.gauss_sum(true).is_zero(), f, "{}", r.name);
            assert_eq!(r.gauss_sum(false).is_zero(), f, "{}", r.name);
            let rep = r.check_identities().unwrap();
            assert!(rep.all_passed(), "{}: {rep}", r.name);
        }
    }

    #[test]
    fn cyclic_form_counts() {
        let total: usize = (1..=8).map(|n| pointed_cyclic_forms(n).len()).sum();
        assert_eq!(total, 56);
    }

    #[test]
    fn tl_fusion_rules() {
        let t = tl(5, 1).unwrap();
        assert_eq!(t.fusion[1][1], vec![1, 0, 1, 0]);
        assert_eq!(t.fusion[3][3], vec![1, 0, 0, 0]);
        assert_eq!(t.fusion[2][2], vec![1, 0, 1, 0]);
        assert_eq!(t.fusion[1][3], vec![0, 0, 1, 0]);
    }

    #[test]
    fn quantum_integers() {
        let a = CycScalar::zeta(12);
        assert!(quantum_integer(&a, 0).is_zero());
        assert!(quantum_integer(&a, 1).is_one());
        // [r] = 0 at A = z_{4r}
        assert!(quantum_integer(&a, 3).is_zero());
    }

    #[test]
    fn names_resolve() {
        assert_eq!(by_name("svect").unwrap().name, "sVect");
        assert_eq!(by_name("tl(4)").unwrap().rank(), 3);
        assert_eq!(by_name("z(3,1)").unwrap().rank(), 3);
        assert!(by_name("nope").is_err());
    }
}
