//! Modular arithmetic over `BigInt` used by the splitting engine: primes in
//! arithmetic progressions, polynomial roots mod p, Newton lifting, rational
//! reconstruction, and linear solving mod p^m.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::Rat;

pub fn modpow(base: &BigInt, exp: &BigInt, m: &BigInt) -> BigInt {
    base.modpow(exp, m)
}

/// Inverse of `a` mod `m`, when `gcd(a, m) = 1`.
pub fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// Smallest prime `p > floor` with `p = 1 (mod n)`.
pub fn prime_one_mod(n: u64, floor: u64) -> u64 {
    let mut p = floor / n * n + 1;
    loop {
        if p > floor && p % n == 1 % n && is_prime(p) {
            return p;
        }
        p += n;
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Evaluate a polynomial with `BigInt` coefficients (lowest degree first) at
/// `x` mod `m`.
pub fn poly_eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn poly_derivative(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

/// All roots of the polynomial in `F_p` by exhaustive scan.
pub fn roots_mod_p(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let pm = BigInt::from(p);
    (0..p)
        .filter(|&x| poly_eval_mod(coeffs, &BigInt::from(x), &pm).is_zero())
        .collect()
}

/// Lift a simple root of the polynomial from mod `p` to mod `p^(2^k)` by
/// Newton iteration. Returns `(root, modulus)` or `None` if the root is not
/// simple mod p.
pub fn newton_lift(coeffs: &[BigInt], root: u64, p: u64, k: u32) -> Option<(BigInt, BigInt)> {
    let deriv = poly_derivative(coeffs);
    let mut m = BigInt::from(p);
    let mut r = BigInt::from(root);
    if modinv(&poly_eval_mod(&deriv, &r, &m), &m).is_none() {
        return None;
    }
    for _ in 0..k {
        m = &m * &m;
        let f = poly_eval_mod(coeffs, &r, &m);
        let df = poly_eval_mod(&deriv, &r, &m);
        let inv = modinv(&df, &m)?;
        r = (&r - f * inv).mod_floor(&m);
    }
    debug_assert!(poly_eval_mod(coeffs, &r, &m).is_zero());
    Some((r, m))
}

/// Recover `n/d` from its residue mod `m` with `|n|, d <= sqrt(m/2)`, via the
/// half-extended Euclidean algorithm.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let (num, den) = if t1.is_negative() {
        (-r1, -t1)
    } else {
        (r1, t1)
    };
    if !num.gcd(&den).is_one() && !num.is_zero() {
        return None;
    }
    // verify: num = a * den (mod m)
    if (&num - a * &den).mod_floor(m).is_zero() {
        Some(Rat::new(num, den))
    } else {
        None
    }
}

/// Solve `A x = b` over `Z/m` with `m = p^k`, requiring every pivot to be a
/// unit. Returns one solution if the elimination succeeds.
pub fn solve_mod(a: &[Vec<BigInt>], b: &[BigInt], m: &BigInt) -> Option<Vec<BigInt>> {
    let rows = a.len();
    if rows == 0 {
        return Some(Vec::new());
    }
    let cols = a[0].len();
    let mut aug: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r: Vec<BigInt> = row.iter().map(|v| v.mod_floor(m)).collect();
            r.push(rhs.mod_floor(m));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        let Some(sel) = (prow..rows).find(|&r| modinv(&aug[r][col], m).is_some()) else {
            // all entries in this column must vanish or the system is stuck
            if (prow..rows).any(|r| !aug[r][col].is_zero()) {
                return None;
            }
            continue;
        };
        aug.swap(prow, sel);
        let inv = modinv(&aug[prow][col], m).unwrap();
        for c in 0..=cols {
            aug[prow][c] = (&aug[prow][c] * &inv).mod_floor(m);
        }
        for r in 0..rows {
            if r != prow && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..=cols {
                    let v = (&aug[r][c] - &f * &aug[prow][c]).mod_floor(m);
                    aug[r][c] = v;
                }
            }
        }
        pivots.push(col);
        prow += 1;
        if prow == rows {
            break;
        }
    }
    // consistency of the remaining rows
    for r in prow..rows {
        if !aug[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigInt::zero(); cols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[i][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_progression() {
        assert_eq!(prime_one_mod(1, 1), 2);
        assert_eq!(prime_one_mod(4, 1), 5);
        assert_eq!(prime_one_mod(12, 1), 13);
        assert_eq!(prime_one_mod(8, 17), 41);
    }

    #[test]
    fn root_scan_and_lift() {
        // x^2 - 2 mod 7: roots 3, 4
        let poly = vec![BigInt::from(-2), BigInt::from(0), BigInt::from(1)];
        let roots = roots_mod_p(&poly, 7);
        assert_eq!(roots, vec![3, 4]);
        let (r, m) = newton_lift(&poly, 3, 7, 3).unwrap();
        assert_eq!(m, BigInt::from(7u64).pow(8));
        assert!(((&r * &r) - BigInt::from(2)).mod_floor(&m).is_zero());
    }

    #[test]
    fn rational_reconstruction_round_trip() {
        let m = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let frac = Rat::new(BigInt::from(-355), BigInt::from(113));
        let residue =
            (frac.numer() * modinv(&frac.denom().clone(), &m).unwrap()).mod_floor(&m);
        assert_eq!(rational_reconstruct(&residue, &m).unwrap(), frac);
    }

    #[test]
    fn modular_solve() {
        let m = BigInt::from(101u64);
        let a = vec![
            vec![BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(3)],
        ];
        let b = vec![BigInt::from(5), BigInt::from(10)];
        let x = solve_mod(&a, &b, &m).unwrap();
        for i in 0..2 {
            let lhs = (&a[i][0] * &x[0] + &a[i][1] * &x[1]).mod_floor(&m);
            assert_eq!(lhs, b[i].mod_floor(&m));
        }
    }
}
