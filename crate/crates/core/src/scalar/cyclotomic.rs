//! Cyclotomic polynomials and per-order reduction tables, computed once per
//! order and shared process-wide.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};


/// Reduction data for `Q(z_N)` in the power basis `1, z, .., z^(phi-1)`.
#[derive(Debug)]
pub(crate) struct CycloTable {
    pub phi: usize,
    /// `powers[k]` is `z^k mod Phi_N`, for `k` in `0..N`.
    pub powers: Vec<Vec<i64>>,
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<CycloTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CycloTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn table(order: u64) -> Arc<CycloTable> {
    debug_assert!(order > 0);
    if let Some(t) = cache().read().unwrap().get(&order) {
        return t.clone();
    }
    let built = Arc::new(build(order));
    cache().write().unwrap().entry(order).or_insert(built).clone()
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub(crate) fn cyclotomic_poly(n: u64) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn build(order: u64) -> CycloTable {
    let poly = cyclotomic_poly(order);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(order as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..order {
        powers.push(cur.clone());
        // multiply by x, then reduce the overflow term using the monic polynomial
        let top = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..phi {
                cur[j] -= top * poly[j];
            }
        }
    }
    CycloTable { phi, powers }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn euler_phi(n: u64) -> u64 {
        (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_matches_degree() {
        for n in 1..40 {
            assert_eq!(table(n).phi as u64, euler_phi(n), "n = {n}");
        }
    }

    #[test]
    fn powers_wrap_around() {
        let t = table(6);
        // z^5 = 1 - z modulo x^2 - x + 1
        assert_eq!(t.powers[5], vec![1, -1]);
        assert_eq!(t.powers[3], vec![-1, 0]);
    }
}
