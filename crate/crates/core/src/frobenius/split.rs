//! Splitting a commutative semisimple algebra into primitive idempotents.
//!
//! Eigenvalues of a generic multiplication operator are found numerically in
//! every complex embedding of `Q(z_N)`, recognised as exact field elements by
//! solving for their power-basis coordinates, and then confirmed exactly. The
//! idempotents are Lagrange interpolants of the operator.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FrobeniusAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::CycScalar;

/// Assignments tried per eigenvalue before giving up.
const SEARCH_BUDGET: usize = 2_000_000;
const CANDIDATES: usize = 24;

/// Primitive idempotents with entries in `Q(z_order)`.
pub fn primitive_idempotents_at(alg: &FrobeniusAlgebra, order: u64) -> Result<Vec<Vec<CycScalar>>> {
    if !alg.is_semisimple()? {
        return Err(Error::NotSemisimple);
    }
    let alg = alg.embed(order)?;
    let n = alg.dim();
    if n == 1 {
        let e = alg.unit().to_vec();
        return Ok(vec![e]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1d3e_11b0);
    let mut any_unsplit = false;
    for attempt in 0..CANDIDATES {
        let a: Vec<CycScalar> = if attempt < n {
            alg.basis_vector(attempt)
        } else {
            (0..n).map(|_| CycScalar::from_int(rng.gen_range(-3..=3))).collect()
        };
        let la = alg.left_multiplication(&a);
        let poly = linalg::char_poly(&la);
        if !is_squarefree(&poly) {
            continue;
        }
        match exact_roots(&poly, order)? {
            Roots::Unsplit => any_unsplit = true,
            Roots::Found(roots) if roots.len() == n => {
                let idems = lagrange_idempotents(&alg, &la, &roots);
                return finish(&alg, idems);
            }
            Roots::Found(_) => {}
        }
        if any_unsplit {
            break;
        }
    }
    if any_unsplit {
        Err(Error::SplitFieldNeeded { order })
    } else {
        Err(Error::ResourceLimit("no multiplication operator with distinct eigenvalues found".into()))
    }
}

/// Tries the working orders `lcm(base, m)` for growing `m` up to `cap`.
pub fn primitive_idempotents_up_to(alg: &FrobeniusAlgebra, cap: u64) -> Result<(u64, Vec<Vec<CycScalar>>)> {
    let base = alg.order();
    let mut tried = Vec::new();
    let mut last = Err(Error::SplitFieldNeeded { order: base });
    for m in 1..=cap.max(1) {
        let order = base.lcm(&m);
        if order > cap.max(base) || tried.contains(&order) {
            continue;
        }
        tried.push(order);
        match primitive_idempotents_at(alg, order) {
            Ok(v) => return Ok((order, v)),
            Err(e @ Error::SplitFieldNeeded { .. }) => last = Err(e),
            Err(e) => return Err(e),
        }
    }
    last
}

fn finish(alg: &FrobeniusAlgebra, mut idems: Vec<Vec<CycScalar>>) -> Result<Vec<Vec<CycScalar>>> {
    idems.sort_by_key(|e| e.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let n = alg.dim();
    let mut total = vec![CycScalar::zero(alg.order()); n];
    for (i, e) in idems.iter().enumerate() {
        for (t, x) in total.iter_mut().zip(e) {
            *t += x;
        }
        for (j, f) in idems.iter().enumerate() {
            let p = alg.multiply(e, f);
            let ok = if i == j { &p == e } else { p.iter().all(CycScalar::is_zero) };
            if !ok {
                return Err(Error::invariant("orthogonal idempotents", format!("e{i} * e{j}")));
            }
        }
    }
    if total.as_slice() != alg.unit() {
        return Err(Error::invariant("orthogonal idempotents", "sum differs from the unit"));
    }
    Ok(idems)
}

fn lagrange_idempotents(alg: &FrobeniusAlgebra, la: &Matrix, roots: &[CycScalar]) -> Vec<Vec<CycScalar>> {
    let n = alg.dim();
    let order = alg.order();
    roots
        .iter()
        .enumerate()
        .map(|(k, lk)| {
            let mut v = alg.unit().to_vec();
            for (l, ll) in roots.iter().enumerate() {
                if l == k {
                    continue;
                }
                let mut shifted = la.clone();
                for (i, row) in shifted.iter_mut().enumerate().take(n) {
                    row[i] -= ll;
                }
                let denom = (lk - ll).invert().expect("distinct eigenvalues");
                v = linalg::mat_vec(&shifted, &v).iter().map(|x| x * &denom).collect();
            }
            v.into_iter().map(|x| x.embed(order).expect("same order")).collect()
        })
        .collect()
}

enum Roots {
    /// Distinct exact roots; fewer than the degree when some are repeated.
    Found(Vec<CycScalar>),
    /// Some root is not in the working field.
    Unsplit,
}

fn eval(poly: &[CycScalar], x: &CycScalar) -> CycScalar {
    let mut acc = CycScalar::zero(x.order());
    for c in poly.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn trim(mut p: Vec<CycScalar>) -> Vec<CycScalar> {
    while p.len() > 1 && p.last().is_some_and(CycScalar::is_zero) {
        p.pop();
    }
    p
}

/// Remainder of `a` modulo `b`, both lowest degree first, `b` nonzero.
fn poly_rem(a: &[CycScalar], b: &[CycScalar]) -> Vec<CycScalar> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].invert().expect("nonzero leading coefficient");
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - 1 - db;
        let f = &r[r.len() - 1] * &lead;
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &f * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Whether `gcd(p, p')` is constant.
fn is_squarefree(p: &[CycScalar]) -> bool {
    let dp: Vec<CycScalar> = p.iter().enumerate().skip(1).map(|(k, c)| c * &CycScalar::from_int(k as i64)).collect();
    let (mut a, mut b) = (trim(p.to_vec()), trim(dp));
    while !(b.len() == 1 && b[0].is_zero()) {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len() == 1
}

fn coprime_residues(order: u64) -> Vec<u64> {
    (1..=order).filter(|j| j.gcd(&order) == 1).collect()
}

/// Value of `x` under `z -> exp(2 pi i j / N)`.
fn embed_numeric(x: &CycScalar, order: u64, j: u64) -> Complex64 {
    let x = x.embed(order).expect("order divides the working order");
    let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / order as f64);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut p = Complex64::new(1.0, 0.0);
    for c in x.coeffs() {
        acc += p * c.to_f64().unwrap_or(0.0);
        p *= w;
    }
    acc
}

fn exact_roots(poly: &[CycScalar], order: u64) -> Result<Roots> {
    let d = poly.len() - 1;
    let poly: Vec<CycScalar> = poly.iter().map(|c| c.embed(order)).collect::<Result<_>>()?;
    let phi = crate::scalar::cyclotomic::table(order).phi;
    // D * root has integral coordinates, D clearing the coefficient denominators
    let denom = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let scale = denom.to_f64().unwrap_or(f64::INFINITY);
    if !scale.is_finite() {
        return Err(Error::ResourceLimit("denominators too large for root search".into()));
    }

    // conjugate pairs (j, N - j) are determined by each other
    let all = coprime_residues(order);
    let reps: Vec<u64> = all.iter().copied().filter(|&j| 2 * j <= order.max(2)).collect();
    let roots_per_rep: Vec<Vec<Complex64>> = reps
        .iter()
        .map(|&j| {
            let c: Vec<Complex64> = poly.iter().map(|x| embed_numeric(x, order, j)).collect();
            durand_kerner(&c)
        })
        .collect();

    // W = V^{-1} with V[j][m] = w_j^m over all embeddings
    let emb: Vec<u64> = if phi == 1 { vec![1] } else { all.clone() };
    let v: Vec<Vec<Complex64>> = emb
        .iter()
        .map(|&j| {
            (0..phi)
                .map(|m| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (j * m as u64) as f64 / order as f64))
                .collect()
        })
        .collect();
    let w = complex_inverse(&v).ok_or_else(|| Error::invariant("vandermonde", "singular"))?;
    let col = |j: u64| emb.iter().position(|&e| e == j).expect("embedding listed");

    // contribution of choosing root s at representative r, as real coordinates
    let contrib = |r: usize, s: Complex64| -> Vec<f64> {
        let j = reps[r];
        let cj = col(j);
        let conj_j = order - j;
        (0..phi)
            .map(|m| {
                let mut z = w[m][cj] * s;
                if conj_j != j && phi > 1 {
                    z += w[m][col(conj_j)] * s.conj();
                }
                z.re * scale
            })
            .collect()
    };
    let tables: Vec<Vec<Vec<f64>>> = (0..reps.len())
        .map(|r| roots_per_rep[r].iter().map(|&s| contrib(r, s)).collect())
        .collect();

    let mut found: Vec<CycScalar> = Vec::new();
    for first in &tables[0] {
        let mut budget = SEARCH_BUDGET;
        let hit = search(&tables, 1, first.clone(), &mut budget, &|coords: &[f64]| {
            let cand = coords_to_scalar(coords, &denom, order);
            eval(&poly, &cand).is_zero().then_some(cand)
        });
        match hit {
            Some(x) => {
                if !found.contains(&x) {
                    found.push(x);
                }
            }
            None if budget == 0 => {
                return Err(Error::ResourceLimit("eigenvalue recognition budget exhausted".into()))
            }
            None => return Ok(Roots::Unsplit),
        }
    }
    debug_assert!(found.len() <= d);
    Ok(Roots::Found(found))
}

fn search(
    tables: &[Vec<Vec<f64>>],
    level: usize,
    acc: Vec<f64>,
    budget: &mut usize,
    accept: &dyn Fn(&[f64]) -> Option<CycScalar>,
) -> Option<CycScalar> {
    if level == tables.len() {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        if acc.iter().any(|x| (x - x.round()).abs() > 1e-4) {
            return None;
        }
        return accept(&acc);
    }
    for choice in &tables[level] {
        let next: Vec<f64> = acc.iter().zip(choice).map(|(a, b)| a + b).collect();
        if let Some(x) = search(tables, level + 1, next, budget, accept) {
            return Some(x);
        }
        if *budget == 0 {
            return None;
        }
    }
    None
}

fn coords_to_scalar(coords: &[f64], denom: &BigInt, order: u64) -> CycScalar {
    let terms = coords.iter().enumerate().map(|(m, x)| {
        let num = BigInt::from(x.round() as i64);
        (m as i64, BigRational::new(num, denom.clone()))
    });
    CycScalar::make(terms, order).expect("valid order")
}

/// All complex roots of a polynomial given lowest degree first.
fn durand_kerner(coeffs: &[Complex64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0 + monic[..d].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius * 0.9, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / d as f64))
        .collect();
    let p = |x: Complex64| monic.iter().rev().fold(Complex64::zero(), |acc, c| acc * x + c);
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(1e-12, 1e-12);
            }
            let step = p(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    // Newton polish
    let dp = |x: Complex64| {
        monic
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::zero(), |acc, (k, c)| acc * x + c * k as f64)
    };
    for x in z.iter_mut() {
        for _ in 0..3 {
            let der = dp(*x);
            if der.norm() > 1e-12 {
                *x -= p(*x) / der;
            }
        }
    }
    z
}

fn complex_inverse(a: &[Vec<Complex64>]) -> Option<Vec<Vec<Complex64>>> {
    let n = a.len();
    let mut m: Vec<Vec<Complex64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Complex64::one() } else { Complex64::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).max_by(|&x, &y| m[x][c].norm().total_cmp(&m[y][c].norm()))?;
        if m[piv][c].norm() < 1e-12 {
            return None;
        }
        m.swap(piv, c);
        let inv = m[c][c].inv();
        for x in m[c].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != c {
                let f = m[r][c];
                if f != Complex64::zero() {
                    for k in 0..2 * n {
                        let t = m[c][k];
                        m[r][k] -= f * t;
                    }
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn half(a: i64, b: i64) -> Vec<CycScalar> {
        vec![CycScalar::from_rational(rational(a, 2), 1), CycScalar::from_rational(rational(b, 2), 1)]
    }

    #[test]
    fn group_algebra_of_order_two() {
        let z2 = FrobeniusAlgebra::group_algebra_cyclic(2);
        let e = primitive_idempotents_at(&z2, 1).unwrap();
        assert_eq!(e.len(), 2);
        assert!(e.contains(&half(1, 1)) && e.contains(&half(1, -1)));
    }

    #[test]
    fn ground_field() {
        let k = FrobeniusAlgebra::ground_field(CycScalar::from_int(1));
        assert_eq!(primitive_idempotents_at(&k, 1).unwrap(), vec![vec![CycScalar::from_int(1)]]);
    }

    #[test]
    fn cyclic_three_needs_cube_roots() {
        let z3 = FrobeniusAlgebra::group_algebra_cyclic(3);
        assert_eq!(primitive_idempotents_at(&z3, 1), Err(Error::SplitFieldNeeded { order: 1 }));
        let e = primitive_idempotents_at(&z3, 3).unwrap();
        assert_eq!(e.len(), 3);
        let (order, e2) = primitive_idempotents_up_to(&z3, 12).unwrap();
        assert_eq!(order, 3);
        assert_eq!(e, e2);
    }

    #[test]
    fn cyclic_five_at_order_five() {
        let z5 = FrobeniusAlgebra::group_algebra_cyclic(5);
        assert_eq!(primitive_idempotents_at(&z5, 5).unwrap().len(), 5);
    }

    #[test]
    fn squarefree_detection() {
        let p = |v: &[i64]| v.iter().map(|&x| CycScalar::from_int(x)).collect::<Vec<_>>();
        assert!(is_squarefree(&p(&[-1, 0, 1])));
        assert!(!is_squarefree(&p(&[1, -2, 1])));
        assert!(is_squarefree(&p(&[-1, 0, 0, 0, 0, 1])));
    }

    #[test]
    fn dual_numbers_are_rejected() {
        let dn = FrobeniusAlgebra::dual_numbers(0, 1);
        assert_eq!(primitive_idempotents_at(&dn, 4), Err(Error::NotSemisimple));
    }
}
