//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Scalars are stored on the power basis `{zeta_N^k : 0 <= k < phi(N)}` after
//! reduction modulo the N-th cyclotomic polynomial, with the conductor driven
//! down to its minimum. Canonical forms are unique, so equality is structural.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CycError;

pub type Rat = BigRational;

/// Default bound on conductors produced by arithmetic.
pub const DEFAULT_CONDUCTOR_LIMIT: u64 = 120;

static CONDUCTOR_LIMIT: AtomicU64 = AtomicU64::new(DEFAULT_CONDUCTOR_LIMIT);

pub fn conductor_limit() -> u64 {
    CONDUCTOR_LIMIT.load(Ordering::Relaxed)
}

pub fn set_conductor_limit(n: u64) {
    CONDUCTOR_LIMIT.store(n.max(1), Ordering::Relaxed);
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            ds.push(d);
            if d != n / d {
                ds.push(n / d);
            }
        }
        d += 1;
    }
    ds.sort_unstable();
    ds
}

pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut n = n;
    let mut ps = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            ps.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        ps.push(n);
    }
    ps
}

fn cyclo_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The N-th cyclotomic polynomial as a dense monic integer polynomial,
/// `coeffs[k]` being the coefficient of `x^k`.
pub fn cyclotomic_poly(n: u64) -> Arc<Vec<BigInt>> {
    if let Some(p) = cyclo_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let poly = Arc::new(compute_cyclotomic_poly(n));
    cyclo_cache().lock().unwrap().insert(n, poly.clone());
    poly
}

fn compute_cyclotomic_poly(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        num = int_poly_div_exact(&num, &phi_d);
    }
    num
}

/// Exact division of integer polynomials; `b` must be monic and divide `a`.
fn int_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let da = rem.len() - 1;
    assert!(da >= db);
    let mut quot = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = rem[k + db].clone();
        if !c.is_zero() {
            for (i, bi) in b.iter().enumerate() {
                rem[k + i] -= &c * bi;
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

fn rat_zero() -> Rat {
    Rat::zero()
}

/// Reduce a rational polynomial in `zeta_n` (arbitrary degree) modulo `Phi_n`,
/// returning exactly `phi(n)` coefficients.
pub(crate) fn reduce_mod_phi(mut coeffs: Vec<Rat>, n: u64) -> Vec<Rat> {
    let phi = euler_phi(n) as usize;
    let phin = cyclotomic_poly(n);
    while coeffs.len() > phi {
        let top = coeffs.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let deg = coeffs.len() - phi; // zeta^(phi+deg) term folded down
        for (i, c) in phin.iter().take(phi).enumerate() {
            let delta = &top * Rat::from(c.clone());
            coeffs[deg + i] -= delta;
        }
    }
    coeffs.resize(phi, rat_zero());
    coeffs
}

fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rat_from_string(s: &str) -> Result<Rat, CycError> {
    let s = s.trim();
    let parse_int = |t: &str| BigInt::from_str(t).map_err(|_| CycError::BadRational(s.into()));
    if let Some((p, q)) = s.split_once('/') {
        let num = parse_int(p.trim())?;
        let den = parse_int(q.trim())?;
        if den.is_zero() {
            return Err(CycError::BadRational(s.into()));
        }
        Ok(Rat::new(num, den))
    } else {
        Ok(Rat::from(parse_int(s)?))
    }
}

/// An exact element of the cyclotomic field `Q(zeta_conductor)`.
///
/// Invariant: `coeffs.len() == phi(conductor)`, the representation is reduced
/// modulo the cyclotomic polynomial, and the conductor is minimal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycNumber {
    conductor: u64,
    coeffs: Vec<Rat>,
}

impl CycNumber {
    pub fn zero() -> Self {
        CycNumber {
            conductor: 1,
            coeffs: vec![rat_zero()],
        }
    }

    pub fn one() -> Self {
        CycNumber {
            conductor: 1,
            coeffs: vec![Rat::one()],
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        CycNumber {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_i64(v: i64) -> Self {
        Self::from_rat(Rat::from(BigInt::from(v)))
    }

    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Self::from_rat(Rat::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `zeta_n^k`, canonicalized.
    pub fn root_of_unity(n: u64, k: u64) -> Result<Self, CycError> {
        if n == 0 {
            return Err(CycError::ZeroConductor);
        }
        check_limit(n)?;
        let k = (k % n) as usize;
        let mut coeffs = vec![rat_zero(); k + 1];
        coeffs[k] = Rat::one();
        Ok(Self::canonical(n, coeffs))
    }

    pub fn zeta(n: u64) -> Result<Self, CycError> {
        Self::root_of_unity(n, 1)
    }

    /// Build from raw data (any degree), canonicalizing.
    pub fn from_coeffs(conductor: u64, coeffs: Vec<Rat>) -> Result<Self, CycError> {
        if conductor == 0 {
            return Err(CycError::ZeroConductor);
        }
        check_limit(conductor)?;
        Ok(Self::canonical(conductor, coeffs))
    }

    fn canonical(n: u64, coeffs: Vec<Rat>) -> Self {
        let coeffs = reduce_mod_phi(coeffs, n);
        let mut v = CycNumber {
            conductor: n,
            coeffs,
        };
        v.descend();
        v
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        if self.conductor == 1 {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        let r = self.as_rational()?;
        if !r.denom().is_one() {
            return None;
        }
        i64::from_str(&r.numer().to_string()).ok()
    }

    /// Raw coefficients re-expressed at conductor `m` (requires `conductor | m`).
    pub fn embed_coeffs(&self, m: u64) -> Vec<Rat> {
        assert!(m % self.conductor == 0, "embedding requires divisibility");
        let stride = (m / self.conductor) as usize;
        let phi_m = euler_phi(m) as usize;
        let mut out = vec![rat_zero(); ((self.coeffs.len() - 1) * stride + 1).max(phi_m)];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[k * stride] = c.clone();
            }
        }
        reduce_mod_phi(out, m)
    }

    /// The same value viewed inside `Q(zeta_m)`; lossless and undone by
    /// canonicalization.
    pub fn embedded(&self, m: u64) -> Result<Self, CycError> {
        if m % self.conductor != 0 {
            return Err(CycError::ZeroConductor);
        }
        check_limit(m)?;
        Ok(CycNumber {
            conductor: m,
            coeffs: self.embed_coeffs(m),
        })
    }

    /// Image under the Galois automorphism `zeta -> zeta^a` (gcd(a, N) = 1).
    pub fn galois(&self, a: u64) -> Self {
        Self::canonical(self.conductor, self.galois_raw(a))
    }

    /// Mod-Phi coefficients of the Galois image, without conductor descent.
    fn galois_raw(&self, a: u64) -> Vec<Rat> {
        let n = self.conductor;
        debug_assert_eq!(a.gcd(&n), 1);
        let mut raw = vec![rat_zero(); n as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((k as u64) * a % n) as usize;
                raw[e] += c;
            }
        }
        reduce_mod_phi(raw, n)
    }

    /// Complex conjugate (`zeta -> zeta^{-1}`).
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    fn descend(&mut self) {
        loop {
            if self.conductor == 1 {
                return;
            }
            if self.coeffs.iter().all(|c| c.is_zero()) {
                *self = CycNumber::zero();
                return;
            }
            // Cheap descent: all nonzero exponents share a factor with N.
            let mut g = self.conductor;
            for (k, c) in self.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    g = g.gcd(&(k as u64));
                }
            }
            if g > 1 {
                let m = self.conductor / g;
                let mut raw = vec![rat_zero(); m as usize];
                for (k, c) in self.coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        raw[k / g as usize] = c.clone();
                    }
                }
                let coeffs = reduce_mod_phi(raw, m);
                self.conductor = m;
                self.coeffs = coeffs;
                continue;
            }
            // Full descent: check Galois-fixedness over each maximal subfield.
            let mut moved = false;
            for p in prime_factors(self.conductor) {
                let m = self.conductor / p;
                if self.fixed_over(m) {
                    if let Some(v) = self.rewrite_at(m) {
                        *self = v;
                        moved = true;
                        break;
                    }
                }
            }
            if !moved {
                return;
            }
        }
    }

    /// Is this value fixed by every automorphism fixing `Q(zeta_m)` (m | N)?
    fn fixed_over(&self, m: u64) -> bool {
        let n = self.conductor;
        for a in 2..n {
            if a.gcd(&n) == 1 && a % m == 1 % m {
                if self.galois_raw(a) != self.coeffs {
                    return false;
                }
            }
        }
        true
    }

    /// Re-express in `Q(zeta_m)` by solving against the embedded power basis.
    fn rewrite_at(&self, m: u64) -> Option<CycNumber> {
        let n = self.conductor;
        let phi_n = euler_phi(n) as usize;
        let phi_m = euler_phi(m) as usize;
        // Columns: zeta_m^j embedded at conductor n.
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(phi_m);
        for j in 0..phi_m {
            let mut raw = vec![rat_zero(); j * (n / m) as usize + 1];
            *raw.last_mut().unwrap() = Rat::one();
            cols.push(reduce_mod_phi(raw, n));
        }
        let sol = solve_rat_columns(&cols, &self.coeffs, phi_n)?;
        let mut v = CycNumber {
            conductor: m,
            coeffs: reduce_mod_phi(sol, m),
        };
        // May descend further via the cheap paths on the next loop turn.
        if v.coeffs.iter().all(|c| c.is_zero()) {
            v = CycNumber::zero();
        }
        Some(v)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CycError> {
        let n = common_conductor(self.conductor, other.conductor)?;
        let mut a = self.embed_coeffs(n);
        let b = other.embed_coeffs(n);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x += y;
        }
        Ok(Self::canonical(n, a))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CycError> {
        let n = common_conductor(self.conductor, other.conductor)?;
        let mut a = self.embed_coeffs(n);
        let b = other.embed_coeffs(n);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x -= y;
        }
        Ok(Self::canonical(n, a))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CycError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        // Fast path: rational scalar times anything.
        if self.conductor == 1 {
            let r = &self.coeffs[0];
            let coeffs = other.coeffs.iter().map(|c| c * r).collect();
            return Ok(Self::canonical(other.conductor, coeffs));
        }
        if other.conductor == 1 {
            return other.checked_mul(self);
        }
        let n = common_conductor(self.conductor, other.conductor)?;
        let a = self.embed_coeffs(n);
        let b = other.embed_coeffs(n);
        let mut prod = vec![rat_zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Ok(Self::canonical(n, prod))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycError> {
        let inv = other.inv()?;
        self.checked_mul(&inv)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[x]`
    /// modulo the cyclotomic polynomial.
    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Self::from_rat(self.coeffs[0].recip()));
        }
        let n = self.conductor;
        let phin: Vec<Rat> = cyclotomic_poly(n)
            .iter()
            .map(|c| Rat::from(c.clone()))
            .collect();
        let inv = poly_mod_inverse(&self.coeffs, &phin)
            .expect("nonzero cyclotomic element must be invertible");
        Ok(Self::canonical(n, inv))
    }

    pub fn neg_value(&self) -> Self {
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self::canonical(self.conductor, self.coeffs.iter().map(|c| c * r).collect())
    }
}

fn check_limit(n: u64) -> Result<(), CycError> {
    let limit = conductor_limit();
    if n > limit {
        Err(CycError::ConductorLimit(n, limit))
    } else {
        Ok(())
    }
}

fn common_conductor(a: u64, b: u64) -> Result<u64, CycError> {
    let n = a.lcm(&b);
    check_limit(n)?;
    Ok(n)
}

/// Solve `sum_j x_j col_j = rhs` over the rationals; columns have length `rows`.
fn solve_rat_columns(cols: &[Vec<Rat>], rhs: &[Rat], rows: usize) -> Option<Vec<Rat>> {
    let ncols = cols.len();
    let mut aug: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..ncols {
        let Some(sel) = (prow..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(prow, sel);
        let inv = aug[prow][col].recip();
        for v in aug[prow].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != prow && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..=ncols {
                    let delta = &f * &aug[prow][c];
                    aug[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        prow += 1;
        if prow == rows {
            break;
        }
    }
    // Inconsistency check.
    for r in prow..rows {
        if !aug[r][ncols].is_zero() {
            return None;
        }
    }
    let mut sol = vec![rat_zero(); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = aug[i][ncols].clone();
    }
    Some(sol)
}

/// Inverse of `a` modulo the monic polynomial `m` over `Q`.
fn poly_mod_inverse(a: &[Rat], m: &[Rat]) -> Option<Vec<Rat>> {
    // Extended Euclid: r0 = m, r1 = a; track s only for the a-side.
    let trim = |v: &mut Vec<Rat>| {
        while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
    };
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut t0: Vec<Rat> = vec![rat_zero()];
    let mut t1: Vec<Rat> = vec![Rat::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        trim(&mut r1);
        t0 = t1;
        t1 = t;
    }
    if r0.len() != 1 {
        return None; // gcd not constant: a shares a factor with m
    }
    let c = r0[0].recip();
    Some(t0.iter().map(|x| x * &c).collect())
}

fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (vec![rat_zero()], rem);
    }
    let mut quot = vec![rat_zero(); rem.len() - db];
    let lead = b[db].recip();
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead;
        if !c.is_zero() {
            for (i, bi) in b.iter().enumerate() {
                let delta = &c * bi;
                rem[k + i] -= delta;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db.max(1));
    (quot, rem)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![rat_zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![rat_zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// The four field operations behind one entry point with typed errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyc_arith(a: &CycNumber, b: &CycNumber, op: ArithOp) -> Result<CycNumber, CycError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: &CycNumber) -> CycNumber {
                self.$checked(rhs).expect("cyclotomic arithmetic failed")
            }
        }
        impl std::ops::$trait for CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: CycNumber) -> CycNumber {
                (&self).$checked(&rhs).expect("cyclotomic arithmetic failed")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl std::ops::Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        self.neg_value()
    }
}

impl std::ops::Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        self.neg_value()
    }
}

impl std::ops::AddAssign<&CycNumber> for CycNumber {
    fn add_assign(&mut self, rhs: &CycNumber) {
        *self = self.checked_add(rhs).expect("cyclotomic arithmetic failed");
    }
}

impl std::ops::SubAssign<&CycNumber> for CycNumber {
    fn sub_assign(&mut self, rhs: &CycNumber) {
        *self = self.checked_sub(rhs).expect("cyclotomic arithmetic failed");
    }
}

impl Default for CycNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", rat_to_string(&self.coeffs[0]));
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", rat_to_string(c))?;
            } else if c.is_one() {
                write!(f, "z{}^{}", self.conductor, k)?;
            } else {
                write!(f, "{}*z{}^{}", rat_to_string(c), self.conductor, k)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for CycNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("conductor", &self.conductor)?;
        let coeffs: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.to_string(), rat_to_string(c)))
            .collect();
        map.serialize_entry("coeffs", &coeffs)?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for CycNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            conductor: u64,
            coeffs: BTreeMap<String, String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let mut coeffs = vec![rat_zero(); raw.conductor as usize];
        for (k, v) in raw.coeffs {
            let idx: usize = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent `{k}`")))?;
            if idx >= raw.conductor as usize {
                return Err(D::Error::custom(format!(
                    "exponent {idx} out of range for conductor {}",
                    raw.conductor
                )));
            }
            coeffs[idx] = rat_from_string(&v).map_err(D::Error::custom)?;
        }
        CycNumber::from_coeffs(raw.conductor, coeffs).map_err(D::Error::custom)
    }
}

/// Parse `p/q` (or bare integer) into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rat, CycError> {
    rat_from_string(s)
}

/// Render a rational in the decimal-free `p/q` interchange form.
pub fn render_rational(r: &Rat) -> String {
    rat_to_string(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64) -> CycNumber {
        CycNumber::zeta(n).unwrap()
    }

    #[test]
    fn cyclotomic_polys() {
        let p = cyclotomic_poly(1);
        assert_eq!(*p, vec![BigInt::from(-1), BigInt::from(1)]);
        let p4 = cyclotomic_poly(4);
        assert_eq!(*p4, vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
        let p6 = cyclotomic_poly(6);
        assert_eq!(
            *p6,
            vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]
        );
        let p12 = cyclotomic_poly(12);
        assert_eq!(p12.len(), 5);
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let i = zeta(4);
        assert_eq!(&i * &i, CycNumber::from_i64(-1));
    }

    #[test]
    fn vanishing_cyclotomic_sum() {
        let z = zeta(3);
        let s = &(&CycNumber::one() + &z) + &(&z * &z);
        assert!(s.is_zero());
    }

    #[test]
    fn rational_inverse() {
        let two = CycNumber::from_i64(2);
        assert_eq!(two.inv().unwrap(), CycNumber::rational(1, 2));
    }

    #[test]
    fn division_by_zero_is_typed() {
        let e = cyc_arith(&CycNumber::one(), &CycNumber::zero(), ArithOp::Div);
        assert_eq!(e.unwrap_err(), CycError::DivisionByZero);
    }

    #[test]
    fn embed_and_reduce_round_trip() {
        let z3 = zeta(3);
        let x = &z3 + &CycNumber::rational(1, 2);
        let up = x.embedded(6).unwrap();
        // Canonicalization pulls the value straight back down to conductor 3.
        assert_eq!(CycNumber::from_coeffs(6, up.coeffs().to_vec()).unwrap(), x);
    }

    #[test]
    fn zeta6_relation_to_zeta3() {
        // zeta_6 = 1 + zeta_3^2... actually zeta_3 = zeta_6 - 1.
        let z6 = zeta(6);
        let z3 = zeta(3);
        assert_eq!(&z6 - &CycNumber::one(), z3);
    }

    #[test]
    fn galois_descent_finds_minimal_conductor() {
        // zeta_6 - 1 built at conductor 6 canonicalizes to conductor 3.
        let z6 = zeta(6);
        let v = &z6 - &CycNumber::one();
        assert_eq!(v.conductor(), 3);
    }

    #[test]
    fn inverse_of_irrational() {
        let z5 = zeta(5);
        let x = &CycNumber::one() + &z5;
        let inv = x.inv().unwrap();
        assert!((&x * &inv).is_one());
    }

    #[test]
    fn conductor_limit_is_enforced() {
        let a = zeta(8);
        let b = zeta(31);
        // lcm 248 > 120
        assert!(matches!(
            a.checked_mul(&b),
            Err(CycError::ConductorLimit(248, _))
        ));
    }

    #[test]
    fn serde_round_trip() {
        let x = &zeta(12) + &CycNumber::rational(-3, 7);
        let s = serde_json::to_string(&x).unwrap();
        let y: CycNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn conjugation_is_involutive() {
        let x = &zeta(7) + &CycNumber::from_i64(2);
        assert_eq!(x.conj().conj(), x);
        assert!((&x * &x.conj()).conj() == &x * &x.conj());
    }
}
