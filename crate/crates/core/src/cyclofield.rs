//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! A [`CycNum`] is stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` and is
//! always reduced modulo the cyclotomic polynomial `Φ_N`. Mixed-conductor
//! arithmetic embeds both operands into `Q(ζ_lcm)`. Values whose only
//! nonzero coefficient is the constant one are normalised to conductor 1,
//! which keeps rational-heavy tensors on the cheap path.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// Exact rational with an `i64` fast path that promotes to big integers on overflow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rat {
    Small(Ratio<i64>),
    Big(Box<BigRational>),
}

impl Rat {
    pub fn zero() -> Self {
        Rat::Small(Ratio::from_integer(0))
    }

    pub fn one() -> Self {
        Rat::Small(Ratio::from_integer(1))
    }

    pub fn int(n: i64) -> Self {
        Rat::Small(Ratio::from_integer(n))
    }

    /// `p/q`; panics on `q == 0` (callers validate user input first).
    pub fn frac(p: i64, q: i64) -> Self {
        Rat::Small(Ratio::new(p, q))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Rat::Small(r) => r.numer() == &0,
            Rat::Big(b) => b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(r) if r.is_one())
    }

    fn big(&self) -> BigRational {
        match self {
            Rat::Small(r) => BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rat::Big(b) => (**b).clone(),
        }
    }

    fn demote(b: BigRational) -> Self {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(Ratio::new_raw(n, d)),
            _ => Rat::Big(Box::new(b)),
        }
    }

    pub fn add(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            if let Some(r) = a.checked_add(b) {
                return Rat::Small(r);
            }
        }
        Rat::demote(self.big() + o.big())
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            if let Some(r) = a.checked_sub(b) {
                return Rat::Small(r);
            }
        }
        Rat::demote(self.big() - o.big())
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            if let Some(r) = a.checked_mul(b) {
                return Rat::Small(r);
            }
        }
        Rat::demote(self.big() * o.big())
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(r) if *r.numer() != i64::MIN => Rat::Small(-*r),
            _ => Rat::demote(-self.big()),
        }
    }

    pub fn inv(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Rat::Small(r) if *r.numer() != i64::MIN => Rat::Small(r.recip()),
            _ => Rat::demote(self.big().recip()),
        })
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_negative(),
            Rat::Big(b) => b.is_negative(),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Rat::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Rat::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Rat::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat::demote(BigRational::new(p, q)))
    }
}

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    let mut n = n as u64;
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out as usize
}

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

/// Coefficients of `Φ_n` (constant term first), monic of degree `φ(n)`.
pub fn cyclotomic_poly(n: u32) -> Rc<Vec<i64>> {
    if let Some(p) = PHI_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_poly(d);
            num = poly_div_exact(&num, &den);
        }
    }
    let p = Rc::new(num);
    PHI_CACHE.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let qd = r.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = r[k + dd];
        q[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                r[k + j] -= c * dj;
            }
        }
    }
    q
}

type Coeffs = SmallVec<[Rat; 4]>;

/// Element of `Q(ζ_N)` in the reduced power basis.
#[derive(Clone, Debug)]
pub struct CycNum {
    n: u32,
    c: Coeffs,
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum { n: 1, c: smallvec![Rat::zero()] }
    }

    pub fn one() -> Self {
        CycNum::rat(Rat::one())
    }

    pub fn int(k: i64) -> Self {
        CycNum::rat(Rat::int(k))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        CycNum::rat(Rat::frac(p, q))
    }

    pub fn rat(r: Rat) -> Self {
        CycNum { n: 1, c: smallvec![r] }
    }

    /// `ζ_n^k`, reduced.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut v = vec![Rat::zero(); e + 1];
        v[e] = Rat::one();
        CycNum::from_coeffs(v, n).expect("n >= 1")
    }

    /// `√−1 = ζ_4`.
    pub fn i() -> Self {
        CycNum::root_of_unity(4, 1)
    }

    /// Build from power-basis coefficients of arbitrary length, reducing modulo `Φ_N`.
    pub fn from_coeffs(coeffs: Vec<Rat>, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("conductor must be positive".into()));
        }
        let mut c: Coeffs = coeffs.into_iter().collect();
        if c.is_empty() {
            c.push(Rat::zero());
        }
        let mut x = CycNum { n, c };
        x.reduce();
        Ok(x)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Power-basis coefficients, length `φ(conductor)`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.c[0].is_one()
    }

    /// Rational value if the number lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rat> {
        (self.n == 1).then(|| &self.c[0])
    }

    fn reduce(&mut self) {
        let phi = totient(self.n);
        if self.c.len() > phi {
            let n = self.n;
            if n.is_power_of_two() && n >= 2 {
                // Φ_N = x^{N/2} + 1.
                for k in (phi..self.c.len()).rev() {
                    let a = std::mem::replace(&mut self.c[k], Rat::zero());
                    if !a.is_zero() {
                        self.c[k - phi] = self.c[k - phi].sub(&a);
                    }
                }
            } else {
                let p = cyclotomic_poly(n);
                for k in (phi..self.c.len()).rev() {
                    let a = std::mem::replace(&mut self.c[k], Rat::zero());
                    if a.is_zero() {
                        continue;
                    }
                    for (j, &pj) in p.iter().enumerate().take(phi) {
                        if pj != 0 {
                            let t = a.mul(&Rat::int(pj));
                            self.c[k - phi + j] = self.c[k - phi + j].sub(&t);
                        }
                    }
                }
            }
            self.c.truncate(phi);
        }
        while self.c.len() < phi {
            self.c.push(Rat::zero());
        }
        self.normalise();
    }

    fn normalise(&mut self) {
        if self.n != 1 && self.c[1..].iter().all(Rat::is_zero) {
            self.n = 1;
            self.c.truncate(1);
        }
    }

    /// Embed into `Q(ζ_m)`; requires `conductor | m`.
    pub fn embed(&self, m: u32) -> Result<CycNum> {
        if m == 0 || m % self.n != 0 {
            return Err(Error::InvalidInput(format!("cannot embed Q(ζ_{}) into Q(ζ_{m})", self.n)));
        }
        if m == self.n {
            return Ok(self.clone());
        }
        let k = (m / self.n) as usize;
        let mut v = vec![Rat::zero(); (self.c.len() - 1) * k + 1];
        for (j, a) in self.c.iter().enumerate() {
            v[j * k] = a.clone();
        }
        let mut x = CycNum { n: m, c: v.into_iter().collect() };
        x.reduce();
        // keep the requested conductor even for rationals
        if x.n != m {
            let phi = totient(m);
            let mut c: Coeffs = smallvec![x.c[0].clone()];
            c.resize(phi, Rat::zero());
            x = CycNum { n: m, c };
        }
        Ok(x)
    }

    fn common(a: &CycNum, b: &CycNum) -> (u32, CycNum, CycNum) {
        if a.n == b.n {
            return (a.n, a.clone(), b.clone());
        }
        let m = a.n.lcm(&b.n);
        (m, a.embed(m).expect("lcm"), b.embed(m).expect("lcm"))
    }

    pub fn add(&self, o: &CycNum) -> CycNum {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &CycNum) -> CycNum {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> CycNum {
        CycNum { n: self.n, c: self.c.iter().map(Rat::neg).collect() }
    }

    pub fn add_assign(&mut self, o: &CycNum) {
        if o.is_zero() {
            return;
        }
        if self.n == o.n || o.n == 1 {
            for (a, b) in self.c.iter_mut().zip(o.c.iter()) {
                *a = a.add(b);
            }
            if o.n != 1 {
                self.normalise();
            }
            return;
        }
        if self.n == 1 {
            let s0 = self.c[0].clone();
            *self = o.clone();
            self.c[0] = self.c[0].add(&s0);
            return;
        }
        let (m, a, b) = CycNum::common(self, o);
        let mut c = a.c;
        for (x, y) in c.iter_mut().zip(b.c.iter()) {
            *x = x.add(y);
        }
        self.n = m;
        self.c = c;
        self.normalise();
    }

    pub fn scale(&self, r: &Rat) -> CycNum {
        if r.is_zero() {
            return CycNum::zero();
        }
        CycNum { n: self.n, c: self.c.iter().map(|a| a.mul(r)).collect() }
    }

    pub fn mul(&self, o: &CycNum) -> CycNum {
        if self.is_zero() || o.is_zero() {
            return CycNum::zero();
        }
        if o.n == 1 {
            return self.scale(&o.c[0]);
        }
        if self.n == 1 {
            return o.scale(&self.c[0]);
        }
        let (m, a, b) = if self.n == o.n {
            (self.n, None, None)
        } else {
            let (m, a, b) = CycNum::common(self, o);
            (m, Some(a), Some(b))
        };
        let a = a.as_ref().unwrap_or(self);
        let b = b.as_ref().unwrap_or(o);
        let mut v: Coeffs = smallvec![Rat::zero(); a.c.len() + b.c.len() - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] = v[i + j].add(&x.mul(y));
                }
            }
        }
        let mut r = CycNum { n: m, c: v };
        r.reduce();
        r
    }

    /// `self += a * b`.
    pub fn mul_add_assign(&mut self, a: &CycNum, b: &CycNum) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.n == 1 && (b.n == self.n || self.is_zero()) {
            if self.is_zero() {
                *self = b.scale(&a.c[0]);
                return;
            }
            for (s, y) in self.c.iter_mut().zip(b.c.iter()) {
                if !y.is_zero() {
                    *s = s.add(&a.c[0].mul(y));
                }
            }
            self.normalise();
            return;
        }
        let p = a.mul(b);
        self.add_assign(&p);
    }

    /// Multiplicative inverse, via the norm-style linear solve on the multiplication matrix.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(CycNum::rat(self.c[0].inv()?));
        }
        // Solve (x · ζ^j) y = 1 as a φ×φ rational system.
        let phi = self.c.len();
        let mut a = vec![vec![Rat::zero(); phi + 1]; phi];
        for j in 0..phi {
            let col = self.mul(&CycNum::root_of_unity(self.n, j as i64)).embed(self.n)?;
            for i in 0..phi {
                a[i][j] = col.c[i].clone();
            }
        }
        a[0][phi] = Rat::one();
        let sol = solve_rational(a).ok_or(Error::DivisionByZero)?;
        CycNum::from_coeffs(sol, self.n)
    }

    pub fn div(&self, o: &CycNum) -> Result<CycNum> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> CycNum {
        let n = self.n as i64;
        let mut out = CycNum::zero();
        for (j, a) in self.c.iter().enumerate() {
            if !a.is_zero() {
                out.add_assign(&CycNum::root_of_unity(self.n, n - j as i64).scale(a));
            }
        }
        out
    }

    /// `x^e` for a possibly negative exponent.
    pub fn powi(&self, e: i64) -> Result<CycNum> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// The positive square root of a positive integer, via quadratic Gauss sums.
    pub fn sqrt_int(n: u64) -> Result<CycNum> {
        if n == 0 {
            return Ok(CycNum::zero());
        }
        let mut m = n;
        let mut out = CycNum::one();
        let mut p = 2u64;
        while m > 1 {
            if p * p > m {
                p = m;
            }
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if e > 0 {
                out = out.mul(&CycNum::int(p.pow(e / 2) as i64));
                if e % 2 == 1 {
                    out = out.mul(&sqrt_prime(p)?);
                }
            }
            p += 1;
        }
        Ok(out)
    }

    /// `Some(k)` with `self = ζ_n^k` (`n` the conductor, or `2n` for odd conductor), if
    /// `self` is a root of unity.
    pub fn root_of_unity_exponent(&self) -> Option<(u32, i64)> {
        let n = if self.n % 2 == 1 { 2 * self.n } else { self.n };
        (0..n as i64).find(|&k| *self == CycNum::root_of_unity(n, k)).map(|k| (n, k))
    }

    /// Square root of a root of unity `ζ_n^k`: the root `ζ_{2n}^k` with argument in
    /// `(−π/2, π/2]` (the principal one), negated when `principal` is false.
    pub fn sqrt_root_of_unity(&self, principal: bool) -> Result<CycNum> {
        let (n, k) = self
            .root_of_unity_exponent()
            .ok_or_else(|| Error::FieldTooSmall(format!("{self} is not a root of unity")))?;
        let n2 = 2 * n as i64;
        // representative exponent of the root in (−n2/4, n2/4]
        let mut e = k.rem_euclid(n2);
        if e > n2 / 2 {
            e -= n2;
        }
        if 4 * e > n2 || 4 * e <= -n2 {
            e += if e > 0 { -(n2 / 2) } else { n2 / 2 };
        }
        let r = CycNum::root_of_unity(n2 as u32, e);
        Ok(if principal { r } else { r.neg() })
    }

    /// Floating-point value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let (mut re, mut im) = (0.0, 0.0);
        for (j, a) in self.c.iter().enumerate() {
            let v = match a {
                Rat::Small(r) => *r.numer() as f64 / *r.denom() as f64,
                Rat::Big(b) => b.numer().to_f64().unwrap_or(f64::NAN) / b.denom().to_f64().unwrap_or(f64::NAN),
            };
            let t = 2.0 * std::f64::consts::PI * j as f64 / self.n as f64;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }
}

/// `√p` for a prime `p`: `ζ₈ + ζ₈⁻¹` for 2, otherwise from the Gauss sum
/// `g = Σ ζ_p^{k²}` with `g² = (−1)^{(p−1)/2} p`.
fn sqrt_prime(p: u64) -> Result<CycNum> {
    if p == 2 {
        return Ok(CycNum::root_of_unity(8, 1).add(&CycNum::root_of_unity(8, -1)));
    }
    let n = u32::try_from(p).map_err(|_| Error::FieldTooSmall(format!("conductor {p} too large")))?;
    let mut g = CycNum::zero();
    for k in 0..p {
        g.add_assign(&CycNum::root_of_unity(n, ((k * k) % p) as i64));
    }
    Ok(if p % 4 == 1 { g } else { g.mul(&CycNum::i()).neg() })
}

/// Gaussian elimination on an augmented rational system with a unique solution.
fn solve_rational(mut a: Vec<Vec<Rat>>) -> Option<Vec<Rat>> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].inv().ok()?;
        for x in a[col].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    let t = f.mul(&a[col][c]);
                    a[r][c] = a[r][c].sub(&t);
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

impl PartialEq for CycNum {
    fn eq(&self, o: &Self) -> bool {
        if self.n == o.n {
            return self.c == o.c;
        }
        let (_, a, b) = CycNum::common(self, o);
        a.c == b.c
    }
}

impl Eq for CycNum {}

impl Default for CycNum {
    fn default() -> Self {
        CycNum::zero()
    }
}

impl From<i64> for CycNum {
    fn from(k: i64) -> Self {
        CycNum::int(k)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})·ζ{}", self.n)?,
                _ => write!(f, "({a})·ζ{}^{j}", self.n)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycJson {
    #[serde(rename = "N")]
    n: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycJson { n: self.n, coeffs: self.c.iter().map(|r| r.to_string()).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CycJson::deserialize(d)?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| s.parse::<Rat>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        if coeffs.len() > totient(j.n.max(1)) {
            return Err(serde::de::Error::custom("more coefficients than φ(N)"));
        }
        CycNum::from_coeffs(coeffs, j.n).map_err(serde::de::Error::custom)
    }
}

/// Compact text form: a rational `p/q`, or `N:c0,c1,…` for `Σ c_j ζ_N^j`.
impl FromStr for CycNum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None => Ok(CycNum::rat(s.parse()?)),
            Some((n, cs)) => {
                let n: u32 = n.trim().parse().map_err(|_| Error::Parse(format!("bad conductor in {s:?}")))?;
                let coeffs = cs.split(',').map(str::parse).collect::<Result<Vec<Rat>>>()?;
                if coeffs.len() > totient(n.max(1)) {
                    return Err(Error::Parse(format!("more coefficients than φ({n}) in {s:?}")));
                }
                CycNum::from_coeffs(coeffs, n)
            }
        }
    }
}

impl CycNum {
    /// Inverse of the `FromStr` form.
    pub fn to_compact(&self) -> String {
        match self.as_rational() {
            Some(r) => r.to_string(),
            None => {
                let cs: Vec<String> = self.c.iter().map(|r| r.to_string()).collect();
                format!("{}:{}", self.n, cs.join(","))
            }
        }
    }

    /// Whether the number lies in `Q(ζ_N)`.
    pub fn lies_in(&self, n: u32) -> bool {
        let m = if n % 2 == 1 { 2 * n } else { n };
        m % self.n == 0
    }
}

/// `cyc_make`: reduced representative of `Σ coeffs[j] ζ_N^j`.
pub fn cyc_make(coeffs: Vec<Rat>, n: u32) -> Result<CycNum> {
    CycNum::from_coeffs(coeffs, n)
}

pub fn cyc_add(a: &CycNum, b: &CycNum) -> CycNum {
    a.add(b)
}

pub fn cyc_mul(a: &CycNum, b: &CycNum) -> CycNum {
    a.mul(b)
}

pub fn cyc_inv(a: &CycNum) -> Result<CycNum> {
    a.inv()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z8(k: i64) -> CycNum {
        CycNum::root_of_unity(8, k)
    }

    #[test]
    fn phi_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(*cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(16), 8);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn make_examples() {
        let v = vec![Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero(), Rat::one()];
        assert_eq!(cyc_make(v, 8).unwrap(), CycNum::int(-1));
        assert_eq!(cyc_make(vec![Rat::int(5)], 1).unwrap(), CycNum::int(5));
        assert!(cyc_make(vec![Rat::one()], 0).is_err());
        let s = z8(1).add(&z8(7));
        assert_eq!(s.mul(&s), CycNum::int(2));
    }

    #[test]
    fn arithmetic_examples() {
        let i = CycNum::i();
        let a = CycNum::one().add(&i);
        let b = CycNum::one().sub(&i);
        assert_eq!(a.mul(&b), CycNum::int(2));
        assert_eq!(z8(1).mul(&z8(7)), CycNum::one());
        assert_eq!(a.add(&CycNum::zero()), a);
        assert_eq!(CycNum::int(2).inv().unwrap(), CycNum::frac(1, 2));
        assert_eq!(z8(1).inv().unwrap(), z8(7));
        assert_eq!(a.inv().unwrap(), b.scale(&Rat::frac(1, 2)));
        assert!(matches!(CycNum::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn mixed_conductors() {
        // i ∈ Q(ζ_4) equals ζ_8^2
        assert_eq!(CycNum::i(), z8(2));
        assert_eq!(CycNum::i().mul(&z8(1)), z8(3));
        let w = CycNum::root_of_unity(3, 1);
        let s = w.mul(&CycNum::i());
        assert_eq!(s.conductor(), 12);
        assert_eq!(s.pow(12), CycNum::one());
        // 1 + ω + ω² = 0
        assert!(CycNum::one().add(&w).add(&w.mul(&w)).is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let x = z8(3).add(&CycNum::frac(-7, 3));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"N":8,"coeffs":["-7/3","0","0","1"]}"#);
        let y: CycNum = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn compact_text_roundtrip() {
        let x = z8(3).add(&CycNum::frac(-7, 3));
        assert_eq!(x.to_compact(), "8:-7/3,0,0,1");
        assert_eq!("8:-7/3,0,0,1".parse::<CycNum>().unwrap(), x);
        assert_eq!("-5/2".parse::<CycNum>().unwrap(), CycNum::frac(-5, 2));
        assert_eq!(CycNum::frac(-5, 2).to_compact(), "-5/2");
        assert!("4:1,2,3".parse::<CycNum>().is_err());
        assert!(x.lies_in(8) && x.lies_in(16) && !x.lies_in(4));
        assert!(CycNum::root_of_unity(3, 1).lies_in(6) && CycNum::root_of_unity(6, 1).lies_in(3));
    }

    #[test]
    fn big_promotion() {
        let big = CycNum::int(i64::MAX / 2);
        let sq = big.mul(&big);
        let back = sq.div(&big).unwrap();
        assert_eq!(back, big);
    }

    fn arb_cyc(n: u32) -> impl Strategy<Value = CycNum> {
        let phi = totient(n);
        prop::collection::vec((-20i64..20, 1i64..6), phi)
            .prop_map(move |v| CycNum::from_coeffs(v.into_iter().map(|(p, q)| Rat::frac(p, q)).collect(), n).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_cyc(8), b in arb_cyc(8), c in arb_cyc(8)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()), CycNum::one());
            }
        }

        #[test]
        fn embedding_is_ring_hom(a in arb_cyc(8), b in arb_cyc(8), k in 1u32..4) {
            let m = 8 * k;
            let (ea, eb) = (a.embed(m).unwrap(), b.embed(m).unwrap());
            prop_assert_eq!(a.mul(&b).embed(m).unwrap(), ea.mul(&eb));
            prop_assert_eq!(a.add(&b).embed(m).unwrap(), ea.add(&eb));
        }

        #[test]
        fn odd_conductor_axioms(a in arb_cyc(5), b in arb_cyc(5)) {
            if !b.is_zero() {
                prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a);
            }
        }
    }
}
