//! Exact scalars: roots of unity and elements of cyclotomic fields.
//!
//! Every structure constant in the crate (cocycle values, pivotal scalars,
//! half-braiding entries, twists) is either a [`RootOfUnity`] or a
//! [`Cyclotomic`] number, so equality tests are exact.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `ζ_order^exponent`, with the exponent kept reduced into `[0, order)`.
#[derive(Clone, Copy, Debug)]
pub struct RootOfUnity {
    order: u64,
    exponent: u64,
}

impl RootOfUnity {
    pub fn new(order: u64, exponent: i64) -> Self {
        assert!(order > 0, "root of unity order must be positive");
        let e = exponent.rem_euclid(order as i64) as u64;
        RootOfUnity { order, exponent: e }
    }

    pub fn one() -> Self {
        RootOfUnity { order: 1, exponent: 0 }
    }

    /// `-1` as a square root of unity.
    pub fn minus_one() -> Self {
        RootOfUnity { order: 2, exponent: 1 }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// The multiplicative order of the value itself (as opposed to the
    /// order of the ambient group it is written in).
    pub fn multiplicative_order(&self) -> u64 {
        self.order / self.order.gcd(&self.exponent)
    }

    /// Rewrites the value with denominator `order`. Returns `None` if the
    /// value does not lie in `μ_order`.
    pub fn embed(&self, order: u64) -> Option<Self> {
        let num = (self.exponent as u128) * (order as u128);
        if num % (self.order as u128) != 0 {
            return None;
        }
        Some(RootOfUnity { order, exponent: ((num / self.order as u128) % order as u128) as u64 })
    }

    /// Lowest-terms form `ζ_m^k` with `gcd(k, m) = 1`.
    pub fn reduced(&self) -> Self {
        let g = self.order.gcd(&self.exponent);
        RootOfUnity { order: self.order / g, exponent: self.exponent / g }
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    pub fn inv(&self) -> Self {
        RootOfUnity { order: self.order, exponent: (self.order - self.exponent) % self.order }
    }

    pub fn pow(&self, power: i64) -> Self {
        let e = (self.exponent as i128 * power as i128).rem_euclid(self.order as i128);
        RootOfUnity { order: self.order, exponent: e as u64 }
    }

    /// `a · b^power`, written in order `lcm(order(a), order(b))`.
    pub fn combine(a: RootOfUnity, b: RootOfUnity, power: i64) -> Self {
        let order = a.order.lcm(&b.order);
        let ea = a.embed(order).expect("divides lcm").exponent as i128;
        let eb = b.embed(order).expect("divides lcm").exponent as i128;
        let e = (ea + eb * power as i128).rem_euclid(order as i128);
        RootOfUnity { order, exponent: e as u64 }
    }

    /// Exact fraction `exponent / order` of a full turn, in lowest terms.
    pub fn turn(&self) -> (u64, u64) {
        let r = self.reduced();
        (r.exponent, r.order)
    }
}

impl PartialEq for RootOfUnity {
    fn eq(&self, other: &Self) -> bool {
        let lhs = self.exponent as u128 * other.order as u128;
        let rhs = other.exponent as u128 * self.order as u128;
        lhs == rhs
    }
}

impl Eq for RootOfUnity {}

impl Hash for RootOfUnity {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.turn().hash(state);
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        RootOfUnity::combine(self, rhs, 1)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.turn() {
            (0, _) => write!(f, "1"),
            (1, 2) => write!(f, "-1"),
            (e, m) => write!(f, "z{m}^{e}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RootOfUnityRepr {
    order: u64,
    exponent: i64,
}

impl Serialize for RootOfUnity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RootOfUnityRepr { order: self.order, exponent: self.exponent as i64 }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootOfUnity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RootOfUnityRepr::deserialize(d)?;
        if raw.order == 0 || raw.order > i64::MAX as u64 {
            return Err(D::Error::custom("root of unity order must be in 1..=i64::MAX"));
        }
        Ok(RootOfUnity::new(raw.order, raw.exponent))
    }
}

/// Reduction data for `Q(ζ_N)`: the degree `φ(N)` and the coordinates of
/// every power `ζ_N^k`, `0 <= k < N`, in the power basis.
struct CyclotomicTable {
    degree: usize,
    powers: Vec<Vec<BigInt>>,
}

fn table(conductor: u64) -> Arc<CyclotomicTable> {
    static TABLES: OnceLock<RwLock<HashMap<u64, Arc<CyclotomicTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = tables.read().expect("table lock").get(&conductor) {
        return t.clone();
    }
    let built = Arc::new(build_table(conductor));
    tables.write().expect("table lock").entry(conductor).or_insert(built).clone()
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d of n
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn build_table(conductor: u64) -> CyclotomicTable {
    let phi = cyclotomic_polynomial(conductor);
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(conductor as usize);
    let mut cur = vec![BigInt::zero(); degree];
    cur[0] = BigInt::one();
    for _ in 0..conductor {
        powers.push(cur.clone());
        // multiply by x, reduce with the monic relation
        let top = cur[degree - 1].clone();
        let mut next = vec![BigInt::zero(); degree];
        for i in (1..degree).rev() {
            next[i] = cur[i - 1].clone();
        }
        if !top.is_zero() {
            for i in 0..degree {
                next[i] -= &top * &phi[i];
            }
        }
        cur = next;
    }
    CyclotomicTable { degree, powers }
}

/// An element of `Q(ζ_N)` in the power basis `1, ζ, …, ζ^{φ(N)-1}`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Self {
        let t = table(conductor);
        Cyclotomic { conductor, coeffs: vec![BigRational::zero(); t.degree] }
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_rational(conductor, BigRational::one())
    }

    pub fn from_integer(conductor: u64, n: i64) -> Self {
        Self::from_rational(conductor, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(conductor: u64, q: BigRational) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = q;
        z
    }

    /// `ζ_conductor^k`.
    pub fn zeta_power(conductor: u64, k: i64) -> Self {
        let t = table(conductor);
        let k = k.rem_euclid(conductor as i64) as usize;
        Cyclotomic {
            conductor,
            coeffs: t.powers[k].iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        }
    }

    pub fn from_root(root: RootOfUnity) -> Self {
        Self::zeta_power(root.order(), root.exponent() as i64)
    }

    /// A root of unity written in conductor `conductor`; panics if it does
    /// not lie in `μ_conductor`.
    pub fn from_root_in(conductor: u64, root: RootOfUnity) -> Self {
        let r = root.embed(conductor).unwrap_or_else(|| {
            panic!("{root} does not lie in the cyclotomic field of conductor {conductor}")
        });
        Self::zeta_power(conductor, r.exponent() as i64)
    }

    /// Reduces `Σ coeffs[k] ζ_N^k` (arbitrary length) modulo `Φ_N`.
    pub fn reduce(conductor: u64, raw: &[BigRational]) -> Self {
        let t = table(conductor);
        let mut out = vec![BigRational::zero(); t.degree];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.powers[k % conductor as usize];
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += c * BigRational::from_integer(r.clone());
                }
            }
        }
        Cyclotomic { conductor, coeffs: out }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
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

    /// Rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Embeds into `Q(ζ_M)` for a multiple `M` of the conductor.
    pub fn embed(&self, conductor: u64) -> Self {
        assert!(conductor % self.conductor == 0, "conductor {conductor} is not a multiple of {}", self.conductor);
        if conductor == self.conductor {
            return self.clone();
        }
        let step = conductor / self.conductor;
        let t = table(conductor);
        let mut out = vec![BigRational::zero(); t.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.powers[(i as u64 * step % conductor) as usize];
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += c * BigRational::from_integer(r.clone());
                }
            }
        }
        Cyclotomic { conductor, coeffs: out }
    }

    /// Inverse of [`Cyclotomic::embed`]: rewrites the element with a
    /// smaller conductor dividing the current one, if it lies in that subfield.
    pub fn restrict(&self, conductor: u64) -> Option<Self> {
        if self.conductor % conductor != 0 {
            return None;
        }
        let small = table(conductor);
        // columns: images of the small power basis
        let cols: Vec<Cyclotomic> = (0..small.degree)
            .map(|i| {
                let mut b = Cyclotomic::zero(conductor);
                b.coeffs[i] = BigRational::one();
                b.embed(self.conductor)
            })
            .collect();
        let rows = self.coeffs.len();
        let mut m: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<BigRational> = cols.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let sol = solve_rational(&mut m, small.degree)?;
        Some(Cyclotomic { conductor, coeffs: sol })
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let n = self.conductor.lcm(&other.conductor);
        (self.embed(n), other.embed(n))
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.conductor as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[(n - i) % n] += c;
        }
        Cyclotomic::reduce(self.conductor, &raw)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn mul_root(&self, root: RootOfUnity) -> Self {
        self * &Cyclotomic::from_root(root)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let nonzero: Vec<usize> = (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect();
        if nonzero.len() == 1 {
            // c ζ^i
            let i = nonzero[0];
            let c = self.coeffs[i].recip();
            return Some(Cyclotomic::zeta_power(self.conductor, -(i as i64)).scale(&c));
        }
        // solve (multiplication by self) · y = 1 over Q
        let deg = self.coeffs.len();
        let images: Vec<Cyclotomic> = (0..deg)
            .map(|j| {
                let mut b = Cyclotomic::zero(self.conductor);
                b.coeffs[j] = BigRational::one();
                self * &b
            })
            .collect();
        let mut m: Vec<Vec<BigRational>> = (0..deg)
            .map(|r| {
                let mut row: Vec<BigRational> = images.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        let sol = solve_rational(&mut m, deg)?;
        Some(Cyclotomic { conductor: self.conductor, coeffs: sol })
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one(self.conductor);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Returns the root of unity equal to this element, if there is one.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        let n = self.conductor;
        for k in 0..n {
            let z = Cyclotomic::zeta_power(n, k as i64);
            if &z == self {
                return Some(RootOfUnity::new(n, k as i64));
            }
            if (-&z) == *self {
                return Some(RootOfUnity::combine(RootOfUnity::new(n, k as i64), RootOfUnity::minus_one(), 1));
            }
        }
        None
    }
}

/// Solves an augmented rational system with `unknowns` columns. Returns the
/// unique solution, or `None` if the system is inconsistent or underdetermined.
fn solve_rational(m: &mut [Vec<BigRational>], unknowns: usize) -> Option<Vec<BigRational>> {
    let rows = m.len();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..unknowns {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for x in m[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..=unknowns {
                    let v = &m[pivot_row][c] * &f;
                    m[r][c] -= v;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if pivots.len() < unknowns {
        return None;
    }
    if m[pivot_row..].iter().any(|r| !r[unknowns].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = m[r][unknowns].clone();
    }
    Some(sol)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor != rhs.conductor {
            let (a, b) = self.common(rhs);
            return &a + &b;
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor != rhs.conductor {
            let (a, b) = self.common(rhs);
            return &a - &b;
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor != rhs.conductor {
            let (a, b) = self.common(rhs);
            return &a * &b;
        }
        let n = self.conductor as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[(i + j) % n] += a * b;
                }
            }
        }
        Cyclotomic::reduce(self.conductor, &raw)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        if let Some(r) = self.as_root_of_unity() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => write!(f, "({c})*z{}^{i}", self.conductor)?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn from_big(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => IntRepr::Small(v),
            None => IntRepr::Big(n.to_string()),
        }
    }

    fn to_big(&self) -> Option<BigInt> {
        match self {
            IntRepr::Small(v) => Some(BigInt::from(*v)),
            IntRepr::Big(s) => s.parse().ok(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    conductor: u64,
    coeffs: Vec<(IntRepr, IntRepr)>,
}

/// Largest conductor accepted from serialized input.
pub const MAX_DESERIALIZED_CONDUCTOR: u64 = 4096;

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CyclotomicRepr {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| (IntRepr::from_big(c.numer()), IntRepr::from_big(c.denom())))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CyclotomicRepr::deserialize(d)?;
        if raw.conductor == 0 || raw.conductor > MAX_DESERIALIZED_CONDUCTOR {
            return Err(D::Error::custom(format!(
                "conductor must be in 1..={MAX_DESERIALIZED_CONDUCTOR}"
            )));
        }
        if raw.coeffs.len() > raw.conductor as usize {
            return Err(D::Error::custom("more coefficients than the conductor"));
        }
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for (n, dn) in &raw.coeffs {
            let (Some(n), Some(dn)) = (n.to_big(), dn.to_big()) else {
                return Err(D::Error::custom("malformed integer"));
            };
            if dn.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            let dn_abs = dn.abs();
            let n = if dn.is_negative() { -n } else { n };
            coeffs.push(BigRational::new(n, dn_abs));
        }
        Ok(Cyclotomic::reduce(raw.conductor, &coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn combine_examples() {
        let r = RootOfUnity::combine(RootOfUnity::new(6, 2), RootOfUnity::new(6, 5), 1);
        assert_eq!((r.order(), r.exponent()), (6, 1));
        let r = RootOfUnity::combine(RootOfUnity::new(2, 1), RootOfUnity::new(1, 0), 1);
        assert_eq!((r.order(), r.exponent()), (2, 1));
        let r = RootOfUnity::combine(RootOfUnity::new(2, 1), RootOfUnity::new(3, 1), 1);
        assert_eq!((r.order(), r.exponent()), (6, 5));
    }

    #[test]
    fn equality_across_orders() {
        assert_eq!(RootOfUnity::new(6, 3), RootOfUnity::new(2, 1));
        assert_ne!(RootOfUnity::new(6, 2), RootOfUnity::new(2, 1));
        assert_eq!(RootOfUnity::new(4, -1), RootOfUnity::new(4, 3));
    }

    #[test]
    fn cyclotomic_polynomials() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn reduce_examples() {
        assert!(Cyclotomic::reduce(3, &[q(1), q(1), q(1)]).is_zero());
        assert_eq!(Cyclotomic::reduce(4, &[q(0), q(0), q(1)]), Cyclotomic::from_integer(4, -1));
        assert!(Cyclotomic::reduce(5, &[q(7), q(7), q(7), q(7), q(7)]).is_zero());
    }

    #[test]
    fn inverse_of_non_monomial() {
        let x = &Cyclotomic::one(5) + &Cyclotomic::zeta_power(5, 2);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn restrict_undoes_embed() {
        let x = &Cyclotomic::zeta_power(3, 1) + &Cyclotomic::from_integer(3, 2);
        let big = x.embed(12);
        assert_eq!(big.restrict(3).unwrap(), x);
        assert!(Cyclotomic::zeta_power(12, 1).restrict(3).is_none());
    }

    #[test]
    fn detects_roots_of_unity() {
        let m = -&Cyclotomic::zeta_power(3, 1);
        assert_eq!(m.as_root_of_unity().unwrap(), RootOfUnity::new(6, 5));
        assert!(Cyclotomic::from_integer(3, 2).as_root_of_unity().is_none());
    }

    #[test]
    fn serde_shapes() {
        let r = RootOfUnity::new(3, 2);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"order":3,"exponent":2}"#);
        let c = Cyclotomic::zeta_power(4, 1);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"conductor":4,"coeffs":[[0,1],[1,1]]}"#);
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<RootOfUnity>(r#"{"order":0,"exponent":1}"#).is_err());
        assert!(serde_json::from_str::<Cyclotomic>(r#"{"conductor":4,"coeffs":[[1,0]]}"#).is_err());
    }

    fn small_cyclo() -> impl Strategy<Value = Cyclotomic> {
        (prop::sample::select(vec![1u64, 2, 3, 4, 6, 8, 12]), prop::collection::vec(-4i64..5, 12)).prop_map(
            |(n, raw)| {
                let raw: Vec<BigRational> = raw.into_iter().take(n as usize).map(q).collect();
                Cyclotomic::reduce(n, &raw)
            },
        )
    }

    fn small_root() -> impl Strategy<Value = RootOfUnity> {
        (1u64..13, 0i64..13).prop_map(|(n, e)| RootOfUnity::new(n, e))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_cyclo(), b in small_cyclo(), c in small_cyclo()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn conjugation_is_involutive_ring_hom(a in small_cyclo(), b in small_cyclo()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        }

        #[test]
        fn embed_then_restrict(a in small_cyclo(), k in 1u64..4) {
            let n = a.conductor() * k;
            prop_assert_eq!(a.embed(n).restrict(a.conductor()).unwrap(), a);
        }

        #[test]
        fn root_group_laws(a in small_root(), b in small_root(), c in small_root()) {
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * b, b * a);
            prop_assert!((a * a.inv()).is_one());
            prop_assert_eq!(Cyclotomic::from_root(a * b), &Cyclotomic::from_root(a) * &Cyclotomic::from_root(b));
        }
    }
}
