//! Exact splitting of commutative semisimple algebras over cyclotomic fields:
//! the primitive idempotents are recovered through modular root finding,
//! Galois-orbit reconstruction, and exact verification of every result.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cyclotomic::{
    conductor_limit, cyclotomic_poly, euler_phi, reduce_mod_phi, CycNumber, Rat,
};
use crate::error::{HopfError, Result};
use crate::linalg::{coordinates_in, vec_axpy, zero_vec, CycVec, MatrixC};
use crate::modular::{
    modinv, newton_lift, prime_one_mod, rational_reconstruct, roots_mod_p, solve_mod,
};

fn rat_zero() -> Rat {
    Rat::new(BigInt::zero(), BigInt::one())
}

fn rat_one() -> Rat {
    Rat::new(BigInt::one(), BigInt::one())
}

/// Split a commutative semisimple algebra, given by a linearly independent
/// `basis` inside some coordinate space, its `unit`, and a multiplication
/// closure. Returns the complete list of primitive idempotents as ambient
/// vectors. The structure constants with respect to `basis` must be rational.
pub fn split_commutative<F>(
    basis: &[CycVec],
    unit: &[CycNumber],
    mul: F,
    conductor_hint: u64,
) -> Result<Vec<CycVec>>
where
    F: Fn(&[CycNumber], &[CycNumber]) -> CycVec,
{
    let d = basis.len();
    if d == 0 {
        return Err(HopfError::InvalidInput("empty basis".into()));
    }
    let ambient = basis[0].len();
    let basis_m = MatrixC::from_rows(basis.to_vec());
    if basis_m.rank() != d {
        return Err(HopfError::InvalidInput(
            "basis vectors are linearly dependent".into(),
        ));
    }

    // Rational structure constants and the unit's coordinates.
    let mut sc: Vec<Vec<Vec<Rat>>> = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let prod = mul(&basis[i], &basis[j]);
            let coords = coordinates_in(&basis_m, &prod).ok_or_else(|| {
                HopfError::NotClosed("product leaves the span of the basis".into())
            })?;
            let rats = coords
                .iter()
                .map(|c| c.as_rational().cloned())
                .collect::<Option<Vec<Rat>>>()
                .ok_or_else(|| {
                    HopfError::InvalidInput(
                        "structure constants are not rational in this basis".into(),
                    )
                })?;
            sc[i][j] = rats;
        }
    }
    let unit_coords: Vec<Rat> = coordinates_in(&basis_m, unit)
        .ok_or_else(|| HopfError::NotClosed("unit is outside the span".into()))?
        .iter()
        .map(|c| c.as_rational().cloned())
        .collect::<Option<_>>()
        .ok_or_else(|| HopfError::InvalidInput("unit has irrational coordinates".into()))?;

    let coord_mul = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let mut out = vec![rat_zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in sc[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out[k] += &c * s;
                    }
                }
            }
        }
        out
    };

    // Semisimplicity via the trace form.
    let left_mult = |i: usize| -> Vec<Vec<Rat>> {
        // matrix rows indexed by output coordinate
        let mut m = vec![vec![rat_zero(); d]; d];
        for j in 0..d {
            for k in 0..d {
                m[k][j] = sc[i][j][k].clone();
            }
        }
        m
    };
    let mats: Vec<Vec<Vec<Rat>>> = (0..d).map(left_mult).collect();
    let trace_form = MatrixC::from_fn(d, d, |i, j| {
        let mut t = rat_zero();
        for a in 0..d {
            for b in 0..d {
                t += &mats[i][a][b] * &mats[j][b][a];
            }
        }
        CycNumber::from_rat(t)
    });
    if trace_form.rank() != d {
        return Err(HopfError::RadicalNonzero);
    }

    if d == 1 {
        let mut e = zero_vec(ambient);
        for (k, c) in unit_coords.iter().enumerate() {
            vec_axpy(&mut e, &CycNumber::from_rat(c.clone()), &basis[k]);
        }
        return Ok(vec![e]);
    }

    // Find a separating element: one whose minimal polynomial has degree d.
    let (powers, min_poly) = find_separating(d, &unit_coords, &coord_mul)?;

    // Integer form of the minimal polynomial for modular work.
    let den_lcm = min_poly
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let int_poly: Vec<BigInt> = min_poly
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();

    // Conductor ladder: reconstruct the eigenvalues over Q(zeta_N).
    let hint = conductor_hint.max(1);
    let limit = conductor_limit();
    let mut last_tried = hint;
    for step in 1..=8u64 {
        let n = hint * step;
        if n > limit {
            break;
        }
        last_tried = n;
        if let Some(eigs) = eigenvalues_over(&int_poly, &min_poly, n, d) {
            return finish_split(&eigs, &powers, &unit_coords, &coord_mul, basis, ambient, d);
        }
    }
    Err(HopfError::SplittingConductorTooSmall(last_tried))
}

type CoordMul<'a> = &'a dyn Fn(&[Rat], &[Rat]) -> Vec<Rat>;

fn find_separating(
    d: usize,
    unit_coords: &[Rat],
    coord_mul: CoordMul,
) -> Result<(Vec<Vec<Rat>>, Vec<Rat>)> {
    let mut candidates: Vec<Vec<Rat>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { rat_one() } else { rat_zero() })
                .collect()
        })
        .collect();
    for t in 2i64..=40 {
        let mut v = vec![rat_zero(); d];
        let mut f = BigInt::one();
        for slot in v.iter_mut() {
            *slot = Rat::new(f.clone(), BigInt::one());
            f *= BigInt::from(t);
        }
        candidates.push(v);
    }
    for cand in candidates {
        let mut powers: Vec<Vec<Rat>> = vec![unit_coords.to_vec()];
        for _ in 0..d {
            let last = powers.last().unwrap();
            powers.push(coord_mul(last, &cand));
        }
        // minimal polynomial: first power dependent on the earlier ones
        let stacked = MatrixC::from_rows(
            powers[..d]
                .iter()
                .map(|p| p.iter().map(|r| CycNumber::from_rat(r.clone())).collect())
                .collect(),
        );
        if stacked.rank() != d {
            continue;
        }
        let target: CycVec = powers[d]
            .iter()
            .map(|r| CycNumber::from_rat(r.clone()))
            .collect();
        let coords = coordinates_in(&stacked, &target)
            .ok_or_else(|| HopfError::Internal("power fell outside its own span".into()))?;
        let mut min_poly: Vec<Rat> = coords
            .iter()
            .map(|c| -c.as_rational().expect("rational by construction"))
            .collect();
        min_poly.push(rat_one());
        return Ok((powers, min_poly));
    }
    Err(HopfError::NotSemisimple(
        "no separating element found; the algebra has no primitive element over Q".into(),
    ))
}

/// Try to find all `d` roots of the integer polynomial inside `Q(zeta_n)`.
fn eigenvalues_over(
    int_poly: &[BigInt],
    min_poly: &[Rat],
    n: u64,
    d: usize,
) -> Option<Vec<CycNumber>> {
    let mut floor = n.max(1000);
    for _attempt in 0..4 {
        let p = prime_one_mod(n, floor);
        floor = p;
        if let Some(eigs) = eigenvalues_mod_attempt(int_poly, min_poly, n, d, p) {
            return Some(eigs);
        }
    }
    None
}

fn eigenvalues_mod_attempt(
    int_poly: &[BigInt],
    min_poly: &[Rat],
    n: u64,
    d: usize,
    p: u64,
) -> Option<Vec<CycNumber>> {
    let roots = roots_mod_p(int_poly, p);
    if roots.len() != d {
        return None;
    }
    let lift_k = 6u32;
    let mut lifted = Vec::with_capacity(d);
    let mut modulus = BigInt::zero();
    for r in &roots {
        let (lr, m) = newton_lift(int_poly, *r, p, lift_k)?;
        lifted.push(lr);
        modulus = m;
    }

    // a primitive n-th root of unity mod p^(2^k)
    let w = if n == 1 {
        BigInt::one()
    } else {
        let phi_n: Vec<BigInt> = cyclotomic_poly(n).iter().cloned().collect();
        let wr = *roots_mod_p(&phi_n, p).first()?;
        let (w, _) = newton_lift(&phi_n, wr, p, lift_k)?;
        w
    };
    let wpow: Vec<BigInt> = {
        let mut v = Vec::with_capacity(n as usize);
        let mut cur = BigInt::one();
        for _ in 0..n {
            v.push(cur.clone());
            cur = (cur * &w).mod_floor(&modulus);
        }
        v
    };

    let units = unit_group(n);
    let mut subs = subgroups_of_units(n, &units);
    subs.sort_by_key(|s| std::cmp::Reverse(s.len()));

    let mut explained: Vec<Option<CycNumber>> = vec![None; d];
    while let Some(target) = explained.iter().position(|e| e.is_none()) {
        let mut found = false;
        'subloop: for sub in &subs {
            let f = units.len() / sub.len();
            let others: Vec<usize> = (0..d)
                .filter(|&i| i != target && explained[i].is_none())
                .collect();
            if f - 1 > others.len() {
                continue;
            }
            let fixed = fixed_field_basis(n, sub);
            if fixed.len() != f {
                continue;
            }
            let reps = transversal(n, &units, sub);
            for assign in k_permutations(&others, f - 1) {
                let Some(lambda) = try_reconstruct(
                    n, &fixed, &reps, target, &assign, &lifted, &wpow, &modulus,
                ) else {
                    continue;
                };
                if !eval_rat_poly(min_poly, &lambda).is_zero() {
                    continue;
                }
                if claim_orbit(n, &units, &lambda, &lifted, &wpow, &modulus, &mut explained) {
                    found = true;
                    break 'subloop;
                }
            }
        }
        if !found {
            return None;
        }
    }
    let eigs: Vec<CycNumber> = explained.into_iter().map(|e| e.unwrap()).collect();
    // all roots, all distinct: the product of (x - eig) must equal min_poly
    let mut prod = vec![CycNumber::one()];
    for e in &eigs {
        let mut next = vec![CycNumber::zero(); prod.len() + 1];
        for (i, c) in prod.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= &(c * e);
        }
        prod = next;
    }
    let matches = prod.len() == min_poly.len()
        && prod
            .iter()
            .zip(min_poly)
            .all(|(a, b)| *a == CycNumber::from_rat(b.clone()));
    if matches {
        Some(eigs)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn try_reconstruct(
    n: u64,
    fixed: &[Vec<Rat>],
    reps: &[u64],
    target: usize,
    assign: &[usize],
    lifted: &[BigInt],
    wpow: &[BigInt],
    modulus: &BigInt,
) -> Option<CycNumber> {
    let f = fixed.len();
    let mut rows = Vec::with_capacity(f);
    let mut rhs = Vec::with_capacity(f);
    for (t, &a) in reps.iter().enumerate() {
        let mut row = Vec::with_capacity(f);
        for beta in fixed {
            row.push(eval_galois_mod(beta, a, n, wpow, modulus)?);
        }
        rows.push(row);
        let root_idx = if t == 0 { target } else { assign[t - 1] };
        rhs.push(lifted[root_idx].clone());
    }
    let q = solve_mod(&rows, &rhs, modulus)?;
    let mut coeffs = vec![rat_zero(); euler_phi(n) as usize];
    for (qi, beta) in q.iter().zip(fixed) {
        let qr = rational_reconstruct(qi, modulus)?;
        for (k, b) in beta.iter().enumerate() {
            coeffs[k] += &qr * b;
        }
    }
    CycNumber::from_coeffs(n, coeffs).ok()
}

/// Apply the Galois orbit of `lambda` and mark which lifted residues it
/// explains. Rolls back and reports failure if the orbit does not match
/// unexplained residues bijectively.
fn claim_orbit(
    n: u64,
    units: &[u64],
    lambda: &CycNumber,
    lifted: &[BigInt],
    wpow: &[BigInt],
    modulus: &BigInt,
    explained: &mut [Option<CycNumber>],
) -> bool {
    let mut orbit: Vec<CycNumber> = Vec::new();
    for &a in units {
        let cond = lambda.conductor();
        let mu = if cond <= 1 {
            lambda.clone()
        } else {
            lambda.galois(a % cond)
        };
        if !orbit.contains(&mu) {
            orbit.push(mu);
        }
    }
    let mut claims: Vec<(usize, CycNumber)> = Vec::new();
    for mu in orbit {
        let raw = mu.embed_coeffs(n);
        let Some(res) = eval_power_vec_mod(&raw, wpow, modulus) else {
            return false;
        };
        let Some(idx) = lifted.iter().position(|r| *r == res) else {
            return false;
        };
        if explained[idx].is_some() || claims.iter().any(|(i, _)| *i == idx) {
            return false;
        }
        claims.push((idx, mu));
    }
    for (idx, mu) in claims {
        explained[idx] = Some(mu);
    }
    true
}

fn eval_galois_mod(
    beta: &[Rat],
    a: u64,
    n: u64,
    wpow: &[BigInt],
    modulus: &BigInt,
) -> Option<BigInt> {
    let mut raw = vec![rat_zero(); n as usize];
    for (k, c) in beta.iter().enumerate() {
        if !c.is_zero() {
            raw[((a * k as u64) % n) as usize] += c;
        }
    }
    eval_power_vec_mod(&raw, wpow, modulus)
}

fn eval_power_vec_mod(raw: &[Rat], wpow: &[BigInt], modulus: &BigInt) -> Option<BigInt> {
    let mut acc = BigInt::zero();
    for (k, c) in raw.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let inv = modinv(c.denom(), modulus)?;
        let val = (c.numer() * inv).mod_floor(modulus);
        acc = (acc + val * &wpow[k % wpow.len()]).mod_floor(modulus);
    }
    Some(acc)
}

fn eval_rat_poly(poly: &[Rat], x: &CycNumber) -> CycNumber {
    let mut acc = CycNumber::zero();
    for c in poly.iter().rev() {
        acc = &(&acc * x) + &CycNumber::from_rat(c.clone());
    }
    acc
}

#[allow(clippy::too_many_arguments)]
fn finish_split(
    eigs: &[CycNumber],
    powers: &[Vec<Rat>],
    unit_coords: &[Rat],
    coord_mul: CoordMul,
    basis: &[CycVec],
    ambient: usize,
    d: usize,
) -> Result<Vec<CycVec>> {
    let cyc_powers: Vec<CycVec> = powers
        .iter()
        .map(|p| p.iter().map(|r| CycNumber::from_rat(r.clone())).collect())
        .collect();
    let mut idem_coords: Vec<CycVec> = Vec::with_capacity(d);
    for i in 0..d {
        // numerator polynomial prod_{j != i} (x - eig_j)
        let mut num = vec![CycNumber::one()];
        let mut den = CycNumber::one();
        for (j, e) in eigs.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![CycNumber::zero(); num.len() + 1];
            for (k, c) in num.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= &(c * e);
            }
            num = next;
            den = &den * &(&eigs[i] - e);
        }
        let den_inv = den
            .inv()
            .map_err(|_| HopfError::Internal("coincident eigenvalues after verification".into()))?;
        let mut coords = zero_vec(d);
        for (k, c) in num.iter().enumerate() {
            let scaled = c * &den_inv;
            vec_axpy(&mut coords, &scaled, &cyc_powers[k]);
        }
        idem_coords.push(coords);
    }

    // exact verification: orthogonal idempotents summing to the unit
    let cyc_mul = |x: &[CycNumber], y: &[CycNumber]| -> CycVec {
        // reuse rational structure constants through bilinearity
        let mut out = zero_vec(d);
        for i in 0..d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if y[j].is_zero() {
                    continue;
                }
                let mut ei = vec![rat_zero(); d];
                ei[i] = rat_one();
                let mut ej = vec![rat_zero(); d];
                ej[j] = rat_one();
                let prod = coord_mul(&ei, &ej);
                let c = &x[i] * &y[j];
                for (k, s) in prod.iter().enumerate() {
                    if !s.is_zero() {
                        out[k] += &c.scale_rat(s);
                    }
                }
            }
        }
        out
    };
    let mut total = zero_vec(d);
    for (i, e) in idem_coords.iter().enumerate() {
        for (j, f) in idem_coords.iter().enumerate() {
            let prod = cyc_mul(e, f);
            let expected = if i == j { e.clone() } else { zero_vec(d) };
            if prod != expected {
                return Err(HopfError::Internal(
                    "idempotent verification failed after reconstruction".into(),
                ));
            }
        }
        for (k, c) in e.iter().enumerate() {
            total[k] += c;
        }
    }
    let unit_cyc: CycVec = unit_coords
        .iter()
        .map(|r| CycNumber::from_rat(r.clone()))
        .collect();
    if total != unit_cyc {
        return Err(HopfError::Internal(
            "idempotents do not sum to the unit".into(),
        ));
    }

    let mut out: Vec<CycVec> = idem_coords
        .into_iter()
        .map(|coords| {
            let mut v = zero_vec(ambient);
            for (k, c) in coords.iter().enumerate() {
                vec_axpy(&mut v, c, &basis[k]);
            }
            v
        })
        .collect();
    out.sort_by(|a, b| vec_sort_key(a).cmp(&vec_sort_key(b)));
    Ok(out)
}

fn vec_sort_key(v: &[CycNumber]) -> Vec<(u64, Vec<Rat>)> {
    v.iter()
        .map(|c| (c.conductor(), c.coeffs().to_vec()))
        .collect()
}

// ----- Galois bookkeeping for (Z/n)^* -----

fn unit_group(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|a| a.gcd(&n) == 1).collect()
}

fn subgroups_of_units(n: u64, units: &[u64]) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let close = |gens: &[u64]| -> Vec<u64> {
        let mut set = vec![1u64];
        let mut frontier = vec![1u64];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = (x * g) % n;
                if !set.contains(&y) {
                    set.push(y);
                    frontier.push(y);
                }
            }
        }
        set.sort_unstable();
        set
    };
    let mut subs: Vec<Vec<u64>> = vec![vec![1]];
    let mut queue = vec![vec![1u64]];
    while let Some(s) = queue.pop() {
        for &g in units {
            let mut gens = s.clone();
            gens.push(g);
            let c = close(&gens);
            if !subs.contains(&c) {
                subs.push(c.clone());
                queue.push(c);
            }
        }
    }
    subs
}

fn transversal(n: u64, units: &[u64], sub: &[u64]) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    let mut reps = vec![1u64];
    let mut covered: Vec<u64> = sub.to_vec();
    for &u in units {
        if !covered.contains(&u) {
            reps.push(u);
            for &s in sub {
                covered.push((u * s) % n);
            }
        }
    }
    reps
}

/// Exact rational basis of the subfield of `Q(zeta_n)` fixed by the subgroup.
fn fixed_field_basis(n: u64, sub: &[u64]) -> Vec<Vec<Rat>> {
    let phi = euler_phi(n) as usize;
    if n == 1 || sub.iter().all(|&a| a == 1 || a == 0) {
        return (0..phi)
            .map(|i| {
                let mut v = vec![rat_zero(); phi];
                v[i] = rat_one();
                v
            })
            .collect();
    }
    let mut stacked_rows: Vec<CycVec> = Vec::new();
    for &a in sub {
        if a == 1 {
            continue;
        }
        // matrix of sigma_a minus identity, acting on the power basis
        for k in 0..phi {
            let mut raw = vec![rat_zero(); n as usize];
            raw[((a * k as u64) % n) as usize] = rat_one();
            let mut img = reduce_mod_phi(raw, n);
            img.resize(phi, rat_zero());
            img[k] -= rat_one();
            stacked_rows.push(img.into_iter().map(CycNumber::from_rat).collect());
        }
    }
    // kernel of the stacked action gives the fixed vectors
    let m = MatrixC::from_rows(stacked_rows);
    // rows are images of basis vectors; we need vectors v with (sigma_a - 1) v = 0,
    // i.e. the kernel of the matrix whose columns are indexed by the power basis.
    // Build it column-correctly: rows of `m` are images per basis vector, so the
    // operator matrix has those as columns for each block.
    let blocks = m.rows() / phi;
    let mut op_rows: Vec<CycVec> = Vec::new();
    for b in 0..blocks {
        for r in 0..phi {
            let mut row = zero_vec(phi);
            for (c, slot) in row.iter_mut().enumerate().take(phi) {
                *slot = m.get(b * phi + c, r).clone();
            }
            op_rows.push(row);
        }
    }
    let op = MatrixC::from_rows(op_rows);
    op.kernel()
        .into_iter()
        .map(|v| {
            v.into_iter()
                .map(|c| c.as_rational().cloned().expect("rational kernel"))
                .collect()
        })
        .collect()
}

fn k_permutations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest: Vec<usize> = items.to_vec();
        rest.remove(i);
        for mut tail in k_permutations(&rest, k - 1) {
            let mut v = vec![x];
            v.append(&mut tail);
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog_hopf;
    use crate::linalg::unit_vec;

    #[test]
    fn splits_group_algebra_of_c3() {
        let h = catalog_hopf("C3").unwrap();
        let basis: Vec<CycVec> = (0..3).map(|i| unit_vec(3, i)).collect();
        let idems = split_commutative(
            &basis,
            h.unit_vec(),
            |a, b| h.product(a, b),
            h.conductor(),
        )
        .unwrap();
        assert_eq!(idems.len(), 3);
        for e in &idems {
            assert_eq!(h.product(e, e), *e);
        }
        // one idempotent is rational (the averaging one), two are conjugate
        let rational: Vec<_> = idems
            .iter()
            .filter(|e| e.iter().all(|c| c.as_rational().is_some()))
            .collect();
        assert_eq!(rational.len(), 1);
    }

    #[test]
    fn splits_group_algebra_of_v4_over_q() {
        let h = catalog_hopf("V4").unwrap();
        let basis: Vec<CycVec> = (0..4).map(|i| unit_vec(4, i)).collect();
        let idems = split_commutative(
            &basis,
            h.unit_vec(),
            |a, b| h.product(a, b),
            h.conductor(),
        )
        .unwrap();
        assert_eq!(idems.len(), 4);
        for e in &idems {
            assert!(e.iter().all(|c| c.as_rational().is_some()));
        }
    }

    #[test]
    fn splits_c8_with_eighth_roots() {
        let h = catalog_hopf("C8").unwrap();
        let basis: Vec<CycVec> = (0..8).map(|i| unit_vec(8, i)).collect();
        let idems = split_commutative(
            &basis,
            h.unit_vec(),
            |a, b| h.product(a, b),
            h.conductor(),
        )
        .unwrap();
        assert_eq!(idems.len(), 8);
        let mut total = zero_vec(8);
        for e in &idems {
            assert_eq!(h.product(e, e), *e);
            for (k, c) in e.iter().enumerate() {
                total[k] += c;
            }
        }
        assert_eq!(total, *h.unit_vec());
    }

    #[test]
    fn rejects_non_semisimple_input() {
        // 2-dim algebra Q[x]/(x^2): basis {1, x}
        let one = vec![CycNumber::one(), CycNumber::zero()];
        let x = vec![CycNumber::zero(), CycNumber::one()];
        let mul = |a: &[CycNumber], b: &[CycNumber]| -> CycVec {
            vec![
                &a[0] * &b[0],
                &(&a[0] * &b[1]) + &(&a[1] * &b[0]),
            ]
        };
        let err = split_commutative(&[one.clone(), x], &one, mul, 1).unwrap_err();
        assert!(matches!(err, HopfError::RadicalNonzero));
    }
}
