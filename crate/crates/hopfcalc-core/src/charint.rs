//! Integrals, irreducible characters, the character ring, Fourier transforms,
//! and the character pairings of a semisimple Hopf algebra.

use crate::cyclotomic::CycNumber;
use crate::error::{HopfError, Result};
use crate::hopf::{dual_hopf, FiniteDimHopf, Hopf};
use crate::linalg::{
    unit_vec, vec_axpy, vec_scale, zero_vec, CycVec, MatrixC, SubspaceC,
};
use crate::wedderburn::split_commutative;

/// The idempotent integrals: `lambda` in `H` with `eps(lambda) = 1`, and `t`
/// in `H*` with `t(1) = 1`.
#[derive(Debug, Clone)]
pub struct Integrals {
    pub lambda: CycVec,
    pub t: CycVec,
}

/// An irreducible character together with its central idempotent.
#[derive(Debug, Clone)]
pub struct Character {
    /// Values on the algebra basis, i.e. coordinates in the dual basis.
    pub values: CycVec,
    pub degree: CycNumber,
    /// The matching primitive central idempotent, as an element of `H`.
    pub idempotent: CycVec,
}

/// Basis of the center `Z(H)`.
pub fn center_basis(h: &FiniteDimHopf) -> Vec<CycVec> {
    let n = h.dim();
    let mut rows: Vec<CycVec> = Vec::new();
    for i in 0..n {
        // equations (b_i z - z b_i)_k = 0 for all output coordinates k
        let li = h.left_mult_matrix(&unit_vec(n, i));
        let mut ri = MatrixC::zero(n, n);
        for j in 0..n {
            let prod = h.product(&unit_vec(n, j), &unit_vec(n, i));
            for (k, c) in prod.iter().enumerate() {
                ri.set(k, j, c.clone());
            }
        }
        for k in 0..n {
            let mut row = zero_vec(n);
            for j in 0..n {
                row[j] = li.get(k, j) - ri.get(k, j);
            }
            rows.push(row);
        }
    }
    MatrixC::from_rows(rows).kernel()
}

/// Basis of the space of left integrals `{x : a x = eps(a) x}`.
fn left_integral_space(h: &FiniteDimHopf) -> Vec<CycVec> {
    let n = h.dim();
    let mut rows: Vec<CycVec> = Vec::new();
    for i in 0..n {
        let li = h.left_mult_matrix(&unit_vec(n, i));
        let eps = &h.counit_vec()[i];
        for k in 0..n {
            let mut row = zero_vec(n);
            for j in 0..n {
                let mut v = li.get(k, j).clone();
                if j == k {
                    v -= eps;
                }
                row[j] = v;
            }
            rows.push(row);
        }
    }
    MatrixC::from_rows(rows).kernel()
}

fn right_integral_space(h: &FiniteDimHopf) -> Vec<CycVec> {
    let n = h.dim();
    let mut rows: Vec<CycVec> = Vec::new();
    for i in 0..n {
        let eps = &h.counit_vec()[i];
        for k in 0..n {
            let mut row = zero_vec(n);
            for j in 0..n {
                let prod = h.product(&unit_vec(n, j), &unit_vec(n, i));
                let mut v = prod[k].clone();
                if j == k {
                    v -= eps;
                }
                row[j] = v;
            }
            rows.push(row);
        }
    }
    MatrixC::from_rows(rows).kernel()
}

/// Compute the idempotent integrals of `H` and `H*`, verifying that the
/// algebra is semisimple (and unimodular on both sides as required).
pub fn integrals(h: &Hopf) -> Result<Integrals> {
    let n = h.dim();
    let left = left_integral_space(h);
    if left.len() != 1 {
        return Err(HopfError::NotSemisimple(format!(
            "left integral space has dimension {}",
            left.len()
        )));
    }
    let raw = &left[0];
    let eps_val = h.counit_of(raw);
    if eps_val.is_zero() {
        return Err(HopfError::NotSemisimple(
            "counit vanishes on the integral".into(),
        ));
    }
    let lambda = vec_scale(raw, &eps_val.inv().map_err(HopfError::Scalar)?);
    // two-sidedness
    let right = right_integral_space(h);
    if right.len() != 1 {
        return Err(HopfError::NotSemisimple(format!(
            "right integral space has dimension {}",
            right.len()
        )));
    }
    let right_subspace = SubspaceC::from_vectors(n, &right);
    if !right_subspace.contains_vec(&lambda) {
        return Err(HopfError::NotSemisimple(
            "integral is not two-sided".into(),
        ));
    }

    // integral of the dual, computed on the dual algebra
    let hd = dual_hopf(h)?;
    let dleft = left_integral_space(&hd);
    if dleft.len() != 1 {
        return Err(HopfError::NotSemisimple(format!(
            "dual integral space has dimension {}",
            dleft.len()
        )));
    }
    let traw = &dleft[0];
    // normalize t(1_H) = 1, which is the dual counit applied to t
    let t1 = hd.counit_of(traw);
    if t1.is_zero() {
        return Err(HopfError::NotSemisimple(
            "dual counit vanishes on the dual integral".into(),
        ));
    }
    let t = vec_scale(traw, &t1.inv().map_err(HopfError::Scalar)?);

    // lambda is idempotent, t is idempotent for convolution, t(lambda) = 1/dim
    if h.product(&lambda, &lambda) != lambda {
        return Err(HopfError::Internal("integral is not idempotent".into()));
    }
    if h.dual_product(&t, &t) != t {
        return Err(HopfError::Internal(
            "dual integral is not convolution idempotent".into(),
        ));
    }
    let pairing = h.eval(&t, &lambda);
    if pairing != CycNumber::rational(1, n as i64) {
        return Err(HopfError::Internal(
            "t(lambda) is not 1/dim".into(),
        ));
    }
    Ok(Integrals { lambda, t })
}

/// The character of the regular representation: `chi_reg(a) = tr(L_a)`.
pub fn regular_character(h: &FiniteDimHopf) -> CycVec {
    let n = h.dim();
    (0..n)
        .map(|j| h.left_mult_matrix(&unit_vec(n, j)).trace())
        .collect()
}

fn integer_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    if r * r == n {
        Some(r)
    } else {
        None
    }
}

/// The irreducible characters, each paired with its primitive central
/// idempotent. Sorted by (degree, lexicographic values).
pub fn irr_characters(h: &Hopf) -> Result<Vec<Character>> {
    let n = h.dim();
    let z = center_basis(h);
    let idems = split_commutative(&z, h.unit_vec(), |a, b| h.product(a, b), h.conductor())?;
    let mut out = Vec::with_capacity(idems.len());
    for e in &idems {
        // basis of the two-sided ideal H e
        let ideal_vectors: Vec<CycVec> = (0..n)
            .map(|i| h.product(&unit_vec(n, i), e))
            .collect();
        let ideal = SubspaceC::from_vectors(n, &ideal_vectors);
        let q = ideal.dim();
        let deg = integer_sqrt(q).ok_or_else(|| {
            HopfError::Internal(format!("matrix block of dimension {q} is not a square"))
        })?;
        let bas = ideal.basis_vectors();
        let mut values = zero_vec(n);
        for j in 0..n {
            // trace of left multiplication by b_j on H e
            let mut tr = CycNumber::zero();
            for (r, v) in bas.iter().enumerate() {
                let img = h.product(&unit_vec(n, j), v);
                let coords = ideal
                    .coords(&img)
                    .ok_or_else(|| HopfError::Internal("ideal is not invariant".into()))?;
                tr += &coords[r];
            }
            values[j] = tr;
        }
        // regular trace on the block is deg * chi
        let scale = CycNumber::rational(1, deg as i64);
        let values: CycVec = values.iter().map(|v| v * &scale).collect();
        let degree = h.eval(&values, h.unit_vec());
        if degree != CycNumber::from_i64(deg as i64) {
            return Err(HopfError::Internal(
                "character degree disagrees with block size".into(),
            ));
        }
        out.push(Character {
            values,
            degree,
            idempotent: e.clone(),
        });
    }
    out.sort_by(|a, b| {
        let ka = (sort_key_num(&a.degree), sort_key_vec(&a.values));
        let kb = (sort_key_num(&b.degree), sort_key_vec(&b.values));
        ka.cmp(&kb)
    });
    // sum of squared degrees is dim H
    let total: usize = out
        .iter()
        .map(|c| {
            let d = c.degree.as_i64().expect("integer degree") as usize;
            d * d
        })
        .sum();
    if total != n {
        return Err(HopfError::Internal(
            "squared degrees do not sum to the dimension".into(),
        ));
    }
    Ok(out)
}

fn sort_key_num(c: &CycNumber) -> (u64, Vec<crate::cyclotomic::Rat>) {
    (c.conductor(), c.coeffs().to_vec())
}

fn sort_key_vec(v: &[CycNumber]) -> Vec<(u64, Vec<crate::cyclotomic::Rat>)> {
    v.iter().map(sort_key_num).collect()
}

/// Irreducible characters of the dual, returned as elements of `H`.
pub fn dual_irr_characters(h: &Hopf) -> Result<Vec<Character>> {
    let hd = dual_hopf(h)?;
    irr_characters(&hd)
}

/// The Fourier transform `F(a) = a -> t` as a matrix from `H` to `H*`, with
/// its verified inverse `F^{-1}(f) = dim * ((S* f) -> lambda)`.
pub struct Fourier {
    pub forward: MatrixC,
    pub inverse: MatrixC,
}

pub fn fourier(h: &Hopf, ints: &Integrals) -> Result<Fourier> {
    let n = h.dim();
    let mut forward = MatrixC::zero(n, n);
    for j in 0..n {
        let col = h.a_harpoon_f(&unit_vec(n, j), &ints.t);
        for (i, c) in col.into_iter().enumerate() {
            forward.set(i, j, c);
        }
    }
    let mut inverse = MatrixC::zero(n, n);
    let scale = CycNumber::from_i64(n as i64);
    for j in 0..n {
        let sf = h.dual_antipode_apply(&unit_vec(n, j));
        let col = h.f_harpoon_h(&sf, &ints.lambda);
        for (i, c) in col.into_iter().enumerate() {
            inverse.set(i, j, &c * &scale);
        }
    }
    if !forward.matmul(&inverse).is_identity() || !inverse.matmul(&forward).is_identity() {
        return Err(HopfError::Internal(
            "Fourier inversion formula fails".into(),
        ));
    }
    Ok(Fourier { forward, inverse })
}

/// The character ring `C(H) = { f : f(ab) = f(ba) }` with its verification
/// data: its subspace, the span of the irreducible characters, and its
/// primitive idempotents under convolution.
pub struct CharRing {
    pub space: SubspaceC,
    pub idempotents: Vec<CycVec>,
}

pub fn char_ring(h: &Hopf, irr: &[Character]) -> Result<CharRing> {
    let n = h.dim();
    let mut rows: Vec<CycVec> = Vec::new();
    for i in 0..n {
        for j in 0..i {
            let mut row = h.mult_vec(i, j).clone();
            for (k, c) in h.mult_vec(j, i).iter().enumerate() {
                row[k] -= c;
            }
            rows.push(row);
        }
    }
    let space = if rows.is_empty() {
        SubspaceC::full(n)
    } else {
        SubspaceC::from_vectors(n, &MatrixC::from_rows(rows).kernel())
    };
    let span_irr =
        SubspaceC::from_vectors(n, &irr.iter().map(|c| c.values.clone()).collect::<Vec<_>>());
    if !space.equals(&span_irr)? {
        return Err(HopfError::Internal(
            "character ring differs from the span of the irreducible characters".into(),
        ));
    }
    // central primitive idempotents of C(H): split the center of C(H)
    let cbasis = space.basis_vectors();
    let dim_c = cbasis.len();
    let mut rows: Vec<CycVec> = Vec::new();
    for v in &cbasis {
        // commutation with v, expressed in C(H) coordinates
        for k in 0..n {
            let mut row = zero_vec(dim_c);
            for (j, b) in cbasis.iter().enumerate() {
                let lhs = h.dual_product(b, v);
                let rhs = h.dual_product(v, b);
                row[j] = &lhs[k] - &rhs[k];
            }
            rows.push(row);
        }
    }
    let central_coords = MatrixC::from_rows(rows).kernel();
    let central: Vec<CycVec> = central_coords
        .iter()
        .map(|c| {
            let mut v = zero_vec(n);
            for (j, b) in cbasis.iter().enumerate() {
                vec_axpy(&mut v, &c[j], b);
            }
            v
        })
        .collect();
    let idempotents = split_commutative(
        &central,
        h.counit_vec(),
        |a, b| h.dual_product(a, b),
        h.conductor(),
    )?;
    Ok(CharRing { space, idempotents })
}

/// `chi* = chi o S`, the character of the dual module.
pub fn star(h: &FiniteDimHopf, chi: &[CycNumber]) -> CycVec {
    h.dual_antipode_apply(chi)
}

/// The bilinear form `(chi, mu) = (chi mu)(lambda)`.
pub fn char_form(h: &FiniteDimHopf, ints: &Integrals, chi: &[CycNumber], mu: &[CycNumber]) -> CycNumber {
    let prod = h.dual_product(chi, mu);
    h.eval(&prod, &ints.lambda)
}

/// The multiplicity form `m(chi, mu) = (chi mu*)(lambda)`.
pub fn char_multiplicity(
    h: &FiniteDimHopf,
    ints: &Integrals,
    chi: &[CycNumber],
    mu: &[CycNumber],
) -> CycNumber {
    let prod = h.dual_product(chi, &star(h, mu));
    h.eval(&prod, &ints.lambda)
}

/// Decompose a character as nonnegative integer combination of the
/// irreducible ones via the multiplicity form.
pub fn decompose_character(
    h: &FiniteDimHopf,
    ints: &Integrals,
    irr: &[Character],
    chi: &[CycNumber],
) -> Result<Vec<CycNumber>> {
    let mut mults = Vec::with_capacity(irr.len());
    let mut recomposed = zero_vec(h.dim());
    for c in irr {
        let m = char_multiplicity(h, ints, chi, &c.values);
        vec_axpy(&mut recomposed, &m, &c.values);
        mults.push(m);
    }
    if recomposed != chi {
        return Err(HopfError::InvalidInput(
            "functional is not a character of a module".into(),
        ));
    }
    Ok(mults)
}

/// A simple subcoalgebra `C_d` of `H` presented by a matrix-coalgebra basis.
#[derive(Debug, Clone)]
pub struct MatrixCoalgebra {
    /// The irreducible `H*`-character `d`, as an element of `H`.
    pub d: CycVec,
    /// Its primitive central idempotent in `H*`.
    pub xi: CycVec,
    pub q: usize,
    /// `basis[i][j]` is `x_{ij}` in `H` coordinates; the comultiplication
    /// satisfies the matrix-coalgebra identity.
    pub basis: Vec<Vec<CycVec>>,
}

impl MatrixCoalgebra {
    pub fn span(&self, ambient: usize) -> SubspaceC {
        let vecs: Vec<CycVec> = self
            .basis
            .iter()
            .flat_map(|row| row.iter().cloned())
            .collect();
        SubspaceC::from_vectors(ambient, &vecs)
    }
}

/// Detect whether `u` has finite order inside the unital subalgebra with unit
/// `e`; returns the order when it divides the search bound.
fn finite_order(hd: &FiniteDimHopf, u: &CycVec, e: &CycVec) -> Option<usize> {
    let mut cur = u.clone();
    for m in 1..=60usize {
        if cur == *e {
            return Some(m);
        }
        cur = hd.product(&cur, u);
    }
    None
}

/// Build a minimal right ideal of the block `xi * H*` by intersecting
/// eigenspaces of finite-order elements; eigenvalues are roots of unity, so
/// everything stays inside cyclotomic arithmetic.
fn minimal_right_ideal(
    hd: &FiniteDimHopf,
    xi: &CycVec,
    q: usize,
) -> Result<SubspaceC> {
    let n = hd.dim();
    let block_vectors: Vec<CycVec> = (0..n)
        .map(|k| hd.product(xi, &unit_vec(n, k)))
        .collect();
    let block = SubspaceC::from_vectors(n, &block_vectors);
    if block.dim() != q * q {
        return Err(HopfError::Internal(format!(
            "block of a degree-{q} character has dimension {}",
            block.dim()
        )));
    }
    let mut current = block.clone();
    for k in 0..n {
        if current.dim() == q {
            break;
        }
        let u = hd.product(xi, &unit_vec(n, k));
        let Some(ord) = finite_order(hd, &u, xi) else {
            continue;
        };
        for r in 0..ord as u64 {
            if current.dim() == q {
                break;
            }
            let omega = CycNumber::root_of_unity(ord as u64, r).map_err(HopfError::Scalar)?;
            // eigenspace {a in block : u a = omega a}
            let rows: Vec<CycVec> = block
                .basis_vectors()
                .iter()
                .map(|a| {
                    let mut v = hd.product(&u, a);
                    let scaled = vec_scale(a, &omega);
                    for (i, s) in scaled.iter().enumerate() {
                        v[i] -= s;
                    }
                    v
                })
                .collect();
            // kernel in block coordinates
            let m = MatrixC::from_rows(rows).transpose();
            let kernel = m.kernel();
            if kernel.is_empty() {
                continue;
            }
            let eig_vectors: Vec<CycVec> = kernel
                .iter()
                .map(|c| {
                    let mut v = zero_vec(n);
                    for (i, b) in block.basis_vectors().iter().enumerate() {
                        vec_axpy(&mut v, &c[i], b);
                    }
                    v
                })
                .collect();
            let eig = SubspaceC::from_vectors(n, &eig_vectors);
            let inter = current.intersect(&eig)?;
            if inter.dim() >= q && inter.dim() < current.dim() {
                current = inter;
            }
        }
    }
    if current.dim() != q {
        return Err(HopfError::Internal(format!(
            "eigen-refinement stalled at dimension {} (target {q})",
            current.dim()
        )));
    }
    Ok(current)
}

/// The matrix coalgebra data for every irreducible `H*`-character: `d`,
/// `xi_d`, and a verified matrix-coalgebra basis of `C_d`.
pub fn matrix_coalgebras(h: &Hopf) -> Result<Vec<MatrixCoalgebra>> {
    let hd = dual_hopf(h)?;
    let dirr = irr_characters(&hd)?;
    let n = h.dim();
    let mut out = Vec::with_capacity(dirr.len());
    for c in &dirr {
        let q = c
            .degree
            .as_i64()
            .ok_or_else(|| HopfError::Internal("non-integer degree".into()))?
            as usize;
        let d = c.values.clone();
        let xi = c.idempotent.clone();
        if q == 1 {
            let mc = MatrixCoalgebra {
                d: d.clone(),
                xi,
                q,
                basis: vec![vec![d]],
            };
            verify_matrix_coalgebra(h, &mc)?;
            out.push(mc);
            continue;
        }
        let ideal = minimal_right_ideal(&hd, &xi, q)?;
        let module_basis = ideal.basis_vectors();
        // representation coefficients rho_{ij}(f): v_j f = sum_i rho_{ij}(f) v_i
        let mut rho = vec![vec![zero_vec(n); q]; q]; // rho[i][j][k] = rho_{ij}(delta_k)
        for k in 0..n {
            let f = unit_vec(n, k);
            for (j, v) in module_basis.iter().enumerate() {
                let img = hd.product(v, &f);
                let coords = ideal
                    .coords(&img)
                    .ok_or_else(|| HopfError::Internal("ideal is not a right ideal".into()))?;
                for (i, co) in coords.into_iter().enumerate() {
                    rho[i][j][k] = co;
                }
            }
        }
        // try both index conventions so the comultiplication identity holds
        let direct = MatrixCoalgebra {
            d: d.clone(),
            xi: xi.clone(),
            q,
            basis: (0..q)
                .map(|i| (0..q).map(|j| rho[i][j].clone()).collect())
                .collect(),
        };
        let transposed = MatrixCoalgebra {
            d,
            xi,
            q,
            basis: (0..q)
                .map(|i| (0..q).map(|j| rho[j][i].clone()).collect())
                .collect(),
        };
        let mc = if verify_matrix_coalgebra(h, &direct).is_ok() {
            direct
        } else {
            verify_matrix_coalgebra(h, &transposed)?;
            transposed
        };
        out.push(mc);
    }
    // the simple subcoalgebras decompose H
    let mut all = SubspaceC::zero_space(n);
    let mut total = 0usize;
    for mc in &out {
        all = all.sum(&mc.span(n))?;
        total += mc.q * mc.q;
    }
    if total != n || all.dim() != n {
        return Err(HopfError::Internal(
            "simple subcoalgebras do not decompose H".into(),
        ));
    }
    // xi_{d'}(x^d_{ij}) = delta delta
    for a in &out {
        for b in &out {
            for (i, row) in b.basis.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    let val = h.eval(&a.xi, x);
                    let expected = if a.xi == b.xi && i == j {
                        CycNumber::one()
                    } else {
                        CycNumber::zero()
                    };
                    if val != expected {
                        return Err(HopfError::Internal(
                            "idempotent pairing on matrix basis fails".into(),
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn verify_matrix_coalgebra(h: &FiniteDimHopf, mc: &MatrixCoalgebra) -> Result<()> {
    let n = h.dim();
    let q = mc.q;
    for i in 0..q {
        for j in 0..q {
            let x = &mc.basis[i][j];
            // counit
            let eps = h.counit_of(x);
            let expected = if i == j {
                CycNumber::one()
            } else {
                CycNumber::zero()
            };
            if eps != expected {
                return Err(HopfError::Internal(
                    "counit fails on matrix basis".into(),
                ));
            }
            // Delta(x_ij) = sum_l x_il tensor x_lj
            let lhs = h.comult_tensor(x);
            let mut rhs = MatrixC::zero(n, n);
            for l in 0..q {
                let a = &mc.basis[i][l];
                let b = &mc.basis[l][j];
                for (u, xa) in a.iter().enumerate() {
                    if xa.is_zero() {
                        continue;
                    }
                    for (v, xb) in b.iter().enumerate() {
                        if !xb.is_zero() {
                            let cur = rhs.get(u, v) + &(xa * xb);
                            rhs.set(u, v, cur);
                        }
                    }
                }
            }
            if lhs != rhs {
                return Err(HopfError::Internal(
                    "matrix-coalgebra comultiplication fails".into(),
                ));
            }
        }
    }
    // d = sum_i x_ii
    let mut trace = zero_vec(n);
    for i in 0..q {
        for (k, c) in mc.basis[i][i].iter().enumerate() {
            trace[k] += c;
        }
    }
    if trace != mc.d {
        return Err(HopfError::Internal(
            "matrix basis trace is not the character".into(),
        ));
    }
    Ok(())
}

/// Verify the closed-form Fourier identities: `F(d) = xi_{d*} / eps(d)` for
/// every dual irreducible, `F(lambda) = eps / dim`, and `F(Z(H))` lands in
/// `C(H)`.
pub fn verify_fourier_identities(
    h: &Hopf,
    ints: &Integrals,
    four: &Fourier,
    coalgebras: &[MatrixCoalgebra],
    char_space: &SubspaceC,
) -> Result<()> {
    let n = h.dim();
    for mc in coalgebras {
        let fd = four.forward.apply(&mc.d);
        // xi_{d*} where d* = S(d)
        let dstar = h.antipode_apply(&mc.d);
        let xi_star = coalgebras
            .iter()
            .find(|other| other.d == dstar)
            .ok_or_else(|| HopfError::Internal("dual of an irreducible is missing".into()))?
            .xi
            .clone();
        let eps_d = h.counit_of(&mc.d);
        let expected = vec_scale(&xi_star, &eps_d.inv().map_err(HopfError::Scalar)?);
        if fd != expected {
            return Err(HopfError::Internal(
                "Fourier of a dual irreducible is not its scaled idempotent".into(),
            ));
        }
    }
    let fl = four.forward.apply(&ints.lambda);
    let expected = vec_scale(
        h.counit_vec(),
        &CycNumber::rational(1, n as i64),
    );
    if fl != expected {
        return Err(HopfError::Internal(
            "Fourier of the integral is not eps/dim".into(),
        ));
    }
    for z in center_basis(h) {
        let fz = four.forward.apply(&z);
        if !char_space.contains_vec(&fz) {
            return Err(HopfError::Internal(
                "Fourier of a central element is not cocommutative".into(),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog_hopf;

    #[test]
    fn integrals_of_s3() {
        let h = catalog_hopf("S3").unwrap();
        let ints = integrals(&h).unwrap();
        // lambda = (1/6) sum of group elements
        let sixth = CycNumber::rational(1, 6);
        assert!(ints.lambda.iter().all(|c| *c == sixth));
        // t is the coefficient-of-identity functional
        assert_eq!(ints.t[0], CycNumber::one());
        assert!(ints.t[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn s3_character_table() {
        let h = catalog_hopf("S3").unwrap();
        let irr = irr_characters(&h).unwrap();
        let degs: Vec<i64> = irr.iter().map(|c| c.degree.as_i64().unwrap()).collect();
        assert_eq!(degs, vec![1, 1, 2]);
        // the sign character sorts first among degree 1 (its values are smaller
        // lexicographically) and takes -1 on transpositions
        let sign = &irr[0];
        assert_eq!(sign.values[1], CycNumber::from_i64(-1));
        assert_eq!(sign.values[4], CycNumber::one());
        let trivial = &irr[1];
        assert!(trivial.values.iter().all(|v| v.is_one()));
        // the 2-dimensional character vanishes on transpositions
        let two = &irr[2];
        assert!(two.values[1].is_zero());
        assert_eq!(two.values[4], CycNumber::from_i64(-1));
    }

    #[test]
    fn regular_character_identity_for_s3() {
        let h = catalog_hopf("S3").unwrap();
        let ints = integrals(&h).unwrap();
        let irr = irr_characters(&h).unwrap();
        let reg = regular_character(&h);
        // dim * t = sum deg(chi) chi
        let mut rhs = zero_vec(6);
        for c in &irr {
            vec_axpy(&mut rhs, &c.degree, &c.values);
        }
        assert_eq!(reg, rhs);
        assert_eq!(reg, vec_scale(&ints.t, &CycNumber::from_i64(6)));
    }

    #[test]
    fn dual_irr_recovers_integral_of_s3() {
        let h = catalog_hopf("S3").unwrap();
        let ints = integrals(&h).unwrap();
        let dirr = dual_irr_characters(&h).unwrap();
        // dim * lambda = sum eps(d) d over Irr(H*)
        let mut rhs = zero_vec(6);
        for d in &dirr {
            vec_axpy(&mut rhs, &h.counit_of(&d.values), &d.values);
        }
        assert_eq!(rhs, vec_scale(&ints.lambda, &CycNumber::from_i64(6)));
    }

    #[test]
    fn fourier_inverts_for_q8() {
        let h = catalog_hopf("Q8").unwrap();
        let ints = integrals(&h).unwrap();
        fourier(&h, &ints).unwrap();
    }

    #[test]
    fn character_orthogonality_for_d4() {
        let h = catalog_hopf("D4").unwrap();
        let ints = integrals(&h).unwrap();
        let irr = irr_characters(&h).unwrap();
        for (i, a) in irr.iter().enumerate() {
            for (j, b) in irr.iter().enumerate() {
                let m = char_multiplicity(&h, &ints, &a.values, &b.values);
                let expected = if i == j {
                    CycNumber::one()
                } else {
                    CycNumber::zero()
                };
                assert_eq!(m, expected);
            }
        }
    }

    #[test]
    fn char_ring_of_s3_has_dimension_three() {
        let h = catalog_hopf("S3").unwrap();
        let irr = irr_characters(&h).unwrap();
        let ring = char_ring(&h, &irr).unwrap();
        assert_eq!(ring.space.dim(), 3);
        assert_eq!(ring.idempotents.len(), 3);
    }

    #[test]
    fn double_of_s3_character_degrees() {
        let h = catalog_hopf("double:S3").unwrap();
        let irr = irr_characters(&h).unwrap();
        let degs: Vec<i64> = irr.iter().map(|c| c.degree.as_i64().unwrap()).collect();
        assert_eq!(degs, vec![1, 1, 2, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn matrix_coalgebras_of_group_algebra_are_grouplikes() {
        let h = catalog_hopf("S3").unwrap();
        let mcs = matrix_coalgebras(&h).unwrap();
        assert_eq!(mcs.len(), 6);
        assert!(mcs.iter().all(|mc| mc.q == 1));
        // each d is a group basis vector
        for mc in &mcs {
            assert_eq!(mc.d.iter().filter(|c| !c.is_zero()).count(), 1);
        }
    }

    #[test]
    fn matrix_coalgebras_of_dual_s3() {
        let h = catalog_hopf("dual:S3").unwrap();
        let mcs = matrix_coalgebras(&h).unwrap();
        let mut qs: Vec<usize> = mcs.iter().map(|mc| mc.q).collect();
        qs.sort_unstable();
        assert_eq!(qs, vec![1, 1, 2]);
    }

    #[test]
    fn matrix_coalgebras_of_dual_q8() {
        let h = catalog_hopf("dual:Q8").unwrap();
        let mcs = matrix_coalgebras(&h).unwrap();
        let mut qs: Vec<usize> = mcs.iter().map(|mc| mc.q).collect();
        qs.sort_unstable();
        assert_eq!(qs, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn fourier_identities_for_s3_and_its_dual() {
        for name in ["S3", "dual:S3"] {
            let h = catalog_hopf(name).unwrap();
            let ints = integrals(&h).unwrap();
            let four = fourier(&h, &ints).unwrap();
            let irr = irr_characters(&h).unwrap();
            let ring = char_ring(&h, &irr).unwrap();
            let mcs = matrix_coalgebras(&h).unwrap();
            verify_fourier_identities(&h, &ints, &four, &mcs, &ring.space).unwrap();
        }
    }

    #[test]
    fn fourier_on_c3_sends_group_elements_to_dual_deltas() {
        let h = catalog_hopf("C3").unwrap();
        let ints = integrals(&h).unwrap();
        let four = fourier(&h, &ints).unwrap();
        // F(g)(x) = t(x g), nonzero only when x = g^{-1}
        let fg = four.forward.col_vec(1);
        assert_eq!(fg[2], CycNumber::one());
        assert!(fg[0].is_zero() && fg[1].is_zero());
    }

    #[test]
    fn double_of_c3_characters() {
        let h = catalog_hopf("double:C3").unwrap();
        let irr = irr_characters(&h).unwrap();
        assert_eq!(irr.len(), 9);
        assert!(irr.iter().all(|c| c.degree == CycNumber::one()));
    }
}
