//! Exact arithmetic in cyclotomic fields `Q(z_N)`.
//!
//! A [`CycScalar`] stores its order `N` together with rational coordinates in
//! the power basis `1, z, .., z^(phi(N)-1)`, always reduced modulo the `N`-th
//! cyclotomic polynomial. Binary operations first lift both operands to the
//! least common multiple of their orders.

pub(crate) mod cyclotomic;
pub(crate) mod expr;

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
pub use expr::{parse_expr, render};

#[derive(Clone, Debug)]
pub struct CycScalar {
    order: u64,
    coeffs: Vec<BigRational>,
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl CycScalar {
    /// Builds `sum c_k z_N^k` from `(k, c_k)` terms; `k` may be any integer.
    pub fn make<I>(terms: I, order: u64) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let t = cyclotomic::table(order);
        let mut coeffs = vec![BigRational::zero(); t.phi];
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            let k = k.rem_euclid(order as i64) as usize;
            for (slot, &p) in coeffs.iter_mut().zip(&t.powers[k]) {
                if p != 0 {
                    *slot += &c * BigInt::from(p);
                }
            }
        }
        Ok(CycScalar { order, coeffs })
    }

    pub fn zero(order: u64) -> Self {
        let phi = cyclotomic::table(order.max(1)).phi;
        CycScalar { order: order.max(1), coeffs: vec![BigRational::zero(); phi] }
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(BigRational::one(), order)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()), 1)
    }

    pub fn from_rational(q: BigRational, order: u64) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = q;
        s
    }

    /// `z_N^k`.
    pub fn zeta_pow(order: u64, k: i64) -> Self {
        Self::make([(k, BigRational::one())], order.max(1)).expect("positive order")
    }

    pub fn zeta(order: u64) -> Self {
        Self::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    /// Image under `z_N -> z_M^(M/N)`.
    pub fn embed(&self, target: u64) -> Result<Self> {
        if target == 0 || target % self.order != 0 {
            return Err(Error::IncompatibleOrder { from: self.order, to: target });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as i64;
        Self::make(
            self.coeffs.iter().enumerate().map(|(k, c)| (k as i64 * step, c.clone())),
            target,
        )
    }

    fn lifted(&self, order: u64) -> std::borrow::Cow<'_, Self> {
        if order == self.order {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.embed(order).expect("lcm is a multiple"))
        }
    }

    /// Both operands at the lcm of their orders.
    fn unify<'a>(a: &'a Self, b: &'a Self) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        let l = a.order.lcm(&b.order);
        (a.lifted(l), b.lifted(l))
    }

    /// Complex conjugation, `z -> z^-1`.
    pub fn conjugate(&self) -> Self {
        Self::make(
            self.coeffs.iter().enumerate().map(|(k, c)| (-(k as i64), c.clone())),
            self.order,
        )
        .expect("positive order")
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CycScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip(), self.order));
        }
        // Solve (multiplication by self) * x = 1 over Q.
        let phi = self.coeffs.len();
        let basis: Vec<CycScalar> = (0..phi)
            .map(|j| self * &Self::zeta_pow(self.order, j as i64))
            .collect();
        // augmented matrix rows: row i = coordinate i of each column
        let mut m: Vec<Vec<BigRational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<BigRational> = basis.iter().map(|b| b.coeffs[i].clone()).collect();
                row.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=phi {
                        let delta = &f * &m[col][c];
                        m[r][c] -= delta;
                    }
                }
            }
        }
        Ok(CycScalar { order: self.order, coeffs: m.into_iter().map(|r| r[phi].clone()).collect() })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.invert()?)
    }

    /// Integer power; negative exponents require an invertible base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Value at `z_N = exp(2 pi i / N)`; for display and sanity checks only.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let a = 2.0 * std::f64::consts::PI * k as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), a)
            })
            .sum()
    }

    /// `Some(k)` with `self = z_R^k`, `R = lcm(2, N)`, when `self` is a root of unity.
    pub fn root_of_unity_exponent(&self) -> Option<(u64, u64)> {
        let r = self.order.lcm(&2);
        let mut cur = Self::one(r);
        let z = Self::zeta(r);
        for k in 0..r {
            if &cur == self {
                return Some((r, k));
            }
            cur = &cur * &z;
        }
        None
    }

    /// Smallest `m > 0` with `self^m = 1`, for roots of unity.
    pub fn multiplicative_order(&self) -> Option<u64> {
        self.root_of_unity_exponent().map(|(r, k)| r / r.gcd(&k))
    }

    pub fn is_root_of_unity(&self) -> bool {
        let r = self.order.lcm(&2) as i64;
        self.pow(r).map(|p| p.is_one()).unwrap_or(false)
    }

    /// Smallest common denominator of the rational coordinates.
    pub(crate) fn denominator_lcm(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycScalar {}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &'a CycScalar) -> CycScalar {
        let (a, b) = CycScalar::unify(self, rhs);
        CycScalar {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &'a CycScalar) -> CycScalar {
        let (a, b) = CycScalar::unify(self, rhs);
        CycScalar {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &'a CycScalar) -> CycScalar {
        if let Some(q) = rhs.as_rational() {
            return self.scale(&q);
        }
        if let Some(q) = self.as_rational() {
            return rhs.scale(&q);
        }
        let (a, b) = CycScalar::unify(self, rhs);
        let t = cyclotomic::table(a.order);
        let phi = t.phi;
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut coeffs: Vec<BigRational> = prod[..phi].to_vec();
        let n = a.order as usize;
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (slot, &p) in coeffs.iter_mut().zip(&t.powers[k % n]) {
                if p != 0 {
                    *slot += c * BigInt::from(p);
                }
            }
        }
        CycScalar { order: a.order, coeffs }
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident, $tra:ident, $ma:ident) => {
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &'a CycScalar) -> CycScalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycScalar> for &'a CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                self.$m(&rhs)
            }
        }
        impl<'a> $tra<&'a CycScalar> for CycScalar {
            fn $ma(&mut self, rhs: &'a CycScalar) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $tra<CycScalar> for CycScalar {
            fn $ma(&mut self, rhs: CycScalar) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

owned_ops!(Add, add, AddAssign, add_assign);
owned_ops!(Sub, sub, SubAssign, sub_assign);
owned_ops!(Mul, mul, MulAssign, mul_assign);

impl Sum for CycScalar {
    fn sum<I: Iterator<Item = CycScalar>>(iter: I) -> Self {
        iter.fold(CycScalar::zero(1), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a CycScalar> for CycScalar {
    fn sum<I: Iterator<Item = &'a CycScalar>>(iter: I) -> Self {
        iter.fold(CycScalar::zero(1), |acc, x| acc + x)
    }
}

impl From<i64> for CycScalar {
    fn from(n: i64) -> Self {
        CycScalar::from_int(n)
    }
}
