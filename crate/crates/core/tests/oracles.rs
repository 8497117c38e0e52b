//! Independent floating-point oracles for derived values.

use std::f64::consts::PI;

use num_complex::Complex64;

use cyk_core::category::{builtin_suite, semion, svect, tl, Backend, RibbonData};
use cyk_core::link::{evaluate_tl, EvalConfig, FramedLink, LinkBody, LinkingMatrix};
use cyk_core::manifold::{builtin_manifold, connected_sum, cyk, HandlePresentation};
use cyk_core::CycScalar;

const TOL: f64 = 1e-9;

fn close(x: &CycScalar, want: Complex64) -> bool {
    (x.to_complex() - want).norm() <= TOL * (1.0 + want.norm())
}

fn a_of(r: u64, k: u64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / (4 * r) as f64)
}

/// `[n]` at `q = A^2` from the sine formula.
fn qint(r: u64, k: u64, n: u64) -> f64 {
    let t = PI * k as f64 / r as f64;
    (n as f64 * t).sin() / t.sin()
}

fn sign(n: u64) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

#[test]
fn tl_dimensions_and_hopf_values_match_sine_formulas() {
    let cfg = EvalConfig::default();
    for (r, k) in [(3, 1), (4, 1), (5, 1), (5, 3), (6, 1)] {
        let cat = tl(r, k).unwrap();
        for m in 0..r - 1 {
            let d = sign(m) * qint(r, k, m + 1);
            let v = evaluate_tl(&FramedLink::unknot(0), &cat, &[m as usize], &cfg).unwrap();
            assert!(close(&v, Complex64::new(d, 0.0)), "tl({r},{k}) d_{m} = {v}");
            for n in 0..r - 1 {
                let s = sign(m + n) * qint(r, k, (m + 1) * (n + 1));
                let h = evaluate_tl(&FramedLink::hopf(0, 0), &cat, &[m as usize, n as usize], &cfg).unwrap();
                assert!(close(&h, Complex64::new(s, 0.0)), "tl({r},{k}) s_({m},{n}) = {h}");
            }
        }
    }
}

#[test]
fn tl_twists_from_framed_unknots() {
    // theta_n = (-1)^n A^(n^2 + 2n), read off a +1-framed unknot
    let cfg = EvalConfig::default();
    for r in 3..=6 {
        let cat = tl(r, 1).unwrap();
        let a = a_of(r, 1);
        for n in 0..r - 1 {
            let d = sign(n) * qint(r, 1, n + 1);
            let theta = sign(n) * a.powi((n * n + 2 * n) as i32);
            let v = evaluate_tl(&FramedLink::unknot(1), &cat, &[n as usize], &cfg).unwrap();
            assert!(close(&v, theta * d), "tl({r}) +1-framed unknot colored {n}: {v}");
        }
    }
}

#[test]
fn tl_cp2_is_global_dimension_times_gauss_sum() {
    let cfg = EvalConfig::default();
    for r in 3..=6 {
        let cat = tl(r, 1).unwrap();
        let a = a_of(r, 1);
        let mut d2 = 0.0;
        let mut tau = Complex64::new(0.0, 0.0);
        for n in 0..r - 1 {
            let d = qint(r, 1, n + 1);
            d2 += d * d;
            tau += sign(n) * a.powi((n * n + 2 * n) as i32) * d * d;
        }
        let v = cyk(&builtin_manifold("CP2").unwrap(), &cat, &cfg).unwrap();
        assert!(close(&v, d2 * tau), "tl({r}) CP2 = {v}");
    }
}

/// `D` times the brute-force pointed Kirby sum, in floating point from the stored twists.
fn pointed_oracle(cat: &RibbonData, q: &LinkingMatrix) -> Complex64 {
    let Backend::Pointed(group) = &cat.backend else { panic!("pointed backend expected") };
    let theta: Vec<Complex64> = cat.twists.iter().map(|t| t.to_complex()).collect();
    let n = q.size();
    let size = group.size();
    let mut total = Complex64::new(0.0, 0.0);
    let mut colors = vec![0usize; n];
    loop {
        let mut term = Complex64::new(1.0, 0.0);
        for i in 0..n {
            term *= theta[colors[i]].powi(q.get(i, i) as i32);
            for j in i + 1..n {
                let b = theta[group.add(colors[i], colors[j])] / (theta[colors[i]] * theta[colors[j]]);
                term *= b.powi(q.get(i, j) as i32);
            }
        }
        total += term;
        let mut k = 0;
        while k < n {
            colors[k] += 1;
            if colors[k] < size {
                break;
            }
            colors[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    total * size as f64
}

#[test]
fn pointed_state_sums_match_brute_force() {
    let cfg = EvalConfig::default();
    let forms = [
        LinkingMatrix::diagonal(&[1]),
        LinkingMatrix::diagonal(&[-1, 2]),
        LinkingMatrix::new(vec![vec![0, 1], vec![1, 0]]).unwrap(),
        LinkingMatrix::new(vec![vec![2, 1, 0], vec![1, -3, 2], vec![0, 2, 1]]).unwrap(),
    ];
    let cats: Vec<RibbonData> =
        builtin_suite().into_iter().filter(|r| matches!(r.backend, Backend::Pointed(_))).collect();
    for cat in &cats {
        for q in &forms {
            let p = HandlePresentation::from_matrix(q.clone());
            let v = cyk(&p, cat, &cfg).unwrap();
            let want = pointed_oracle(cat, q);
            assert!(close(&v, want), "{} on {:?}: {v} vs {want}", cat.name, q.entries());
        }
    }
}

#[test]
fn svect_k3_is_two_to_the_twenty_third() {
    let v = cyk(&builtin_manifold("K3").unwrap(), &svect(), &EvalConfig::default()).unwrap();
    assert_eq!(v, CycScalar::from_int(1 << 23));
}

#[test]
fn semion_gauss_sums() {
    let s = semion();
    assert!(close(&s.gauss_sum(true), Complex64::new(1.0, 1.0)));
    assert!(close(&s.gauss_sum(false), Complex64::new(1.0, -1.0)));
}

#[test]
fn diagram_and_matrix_bodies_agree_for_pointed() {
    let cfg = EvalConfig::default();
    let l = FramedLink::hopf(1, -2).disjoint_union(&FramedLink::unknot(3));
    let diagram = HandlePresentation::new(LinkBody::Diagram(l.clone()));
    let matrix = HandlePresentation::from_matrix(l.linking_matrix());
    for cat in builtin_suite().iter().filter(|r| matches!(r.backend, Backend::Pointed(_))) {
        assert_eq!(cyk(&diagram, cat, &cfg).unwrap(), cyk(&matrix, cat, &cfg).unwrap(), "{}", cat.name);
    }
    let s = connected_sum(&builtin_manifold("CP2").unwrap(), &builtin_manifold("CP2bar").unwrap());
    assert!(matches!(s.body, LinkBody::Diagram(_)));
}
