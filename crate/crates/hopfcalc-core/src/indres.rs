//! Restriction and induction of characters between a Hopf subalgebra and its
//! parent: the common central idempotents with their two partitions, the
//! normal-case equivalence classes and closed formulas, the splitting of
//! `C(H)` into the induced part and the kernel of restriction, and the
//! multi-way descriptions of the images of induction and restriction.

use crate::charint::{
    char_multiplicity, integrals, irr_characters, matrix_coalgebras, regular_character, Character,
    Integrals,
};
use crate::cyclotomic::CycNumber;
use crate::double_rep::{a0_actions, Carrier, DoubleAction};
use crate::error::{HopfError, Result};
use crate::hopf::Hopf;
use crate::linalg::{unit_vec, vec_axpy, vec_is_zero, vec_scale, zero_vec, CycVec, MatrixC, SubspaceC};
use crate::subnormal::{is_normal, module_character, SubHopf};
use crate::wedderburn::split_commutative;

/// Everything needed to restrict and induce characters across `K ⊆ H`.
pub struct IndResData {
    pub parent: Hopf,
    pub sub: SubHopf,
    /// `K` as a standalone Hopf algebra and the inclusion into the parent.
    pub sub_hopf: Hopf,
    pub incl: MatrixC,
    pub irr_h: Vec<Character>,
    pub irr_k: Vec<Character>,
    pub ints_h: Integrals,
    pub ints_k: Integrals,
    /// `res_matrix[i][j]` is the multiplicity of `irr_k[j]` in the
    /// restriction of `irr_h[i]`; the induction matrix is its transpose.
    pub res_matrix: Vec<Vec<i64>>,
    /// Primitive idempotents of `Z(H) ∩ K`, in parent coordinates.
    pub m_idempotents: Vec<CycVec>,
    /// `a_parts[i]` lists the `irr_h` indices whose central idempotents sum
    /// to `m_i`; `b_parts[i]` the analogous `irr_k` indices.
    pub a_parts: Vec<Vec<usize>>,
    pub b_parts: Vec<Vec<usize>>,
}

impl IndResData {
    /// Span of the irreducible characters of the parent, i.e. `C(H)`.
    pub fn char_space_h(&self) -> SubspaceC {
        let vals: Vec<CycVec> = self.irr_h.iter().map(|c| c.values.clone()).collect();
        SubspaceC::from_vectors(self.parent.dim(), &vals)
    }

    pub fn char_space_k(&self) -> SubspaceC {
        let vals: Vec<CycVec> = self.irr_k.iter().map(|c| c.values.clone()).collect();
        SubspaceC::from_vectors(self.sub_hopf.dim(), &vals)
    }

    /// Restriction of a functional on `H` to `K`, in `K*` coordinates.
    pub fn res(&self, chi: &[CycNumber]) -> CycVec {
        self.incl.transpose().apply(chi)
    }

    /// Induction of a cocommutative functional on `K`, defined through
    /// Frobenius reciprocity.
    pub fn ind(&self, alpha: &[CycNumber]) -> CycVec {
        let n = self.parent.dim();
        let mut out = zero_vec(n);
        for chi in &self.irr_h {
            let m = char_multiplicity(&self.sub_hopf, &self.ints_k, &self.res(&chi.values), alpha);
            if !m.is_zero() {
                vec_axpy(&mut out, &m, &chi.values);
            }
        }
        out
    }

    /// The index `|H| / |K|` as a scalar.
    pub fn index(&self) -> CycNumber {
        CycNumber::rational(self.parent.dim() as i64, self.sub_hopf.dim() as i64)
    }
}

fn as_multiplicity(c: &CycNumber) -> Result<i64> {
    match c.as_i64() {
        Some(v) if v >= 0 => Ok(v),
        _ => Err(HopfError::Internal(format!(
            "character multiplicity {c:?} is not a nonnegative integer"
        ))),
    }
}

/// Build the restriction/induction data for a Hopf subalgebra, including the
/// primitive idempotents of `Z(H) ∩ K` and their two partitions.
pub fn indres_data(k: &SubHopf) -> Result<IndResData> {
    let h = k.parent.clone();
    let n = h.dim();
    let (kh, incl) = k.as_hopf()?;
    let irr_h = irr_characters(&h)?;
    let irr_k = irr_characters(&kh)?;
    let ints_h = integrals(&h)?;
    let ints_k = integrals(&kh)?;
    let restrict = incl.transpose();

    let mut res_matrix = Vec::with_capacity(irr_h.len());
    for chi in &irr_h {
        let res_chi = restrict.apply(&chi.values);
        let mut row = Vec::with_capacity(irr_k.len());
        let mut rebuilt = zero_vec(kh.dim());
        for alpha in &irr_k {
            let m = char_multiplicity(&kh, &ints_k, &res_chi, &alpha.values);
            let mi = as_multiplicity(&m)?;
            if mi != 0 {
                vec_axpy(&mut rebuilt, &m, &alpha.values);
            }
            row.push(mi);
        }
        if rebuilt != res_chi {
            return Err(HopfError::Internal(
                "restricted character does not decompose over Irr(K)".into(),
            ));
        }
        res_matrix.push(row);
    }

    // primitive idempotents of the commutative algebra Z(H) ∩ K
    let center = SubspaceC::from_vectors(n, &crate::charint::center_basis(&h));
    let zk = center.intersect(&k.space)?;
    let m_idempotents = split_commutative(
        &zk.basis_vectors(),
        h.unit_vec(),
        |a, b| h.product(a, b),
        h.conductor(),
    )?;

    let mut a_parts = Vec::with_capacity(m_idempotents.len());
    let mut b_parts = Vec::with_capacity(m_idempotents.len());
    for m in &m_idempotents {
        let mut a_i = Vec::new();
        let mut e_sum = zero_vec(n);
        for (idx, chi) in irr_h.iter().enumerate() {
            if h.product(&chi.idempotent, m) == chi.idempotent {
                a_i.push(idx);
                vec_axpy(&mut e_sum, &CycNumber::one(), &chi.idempotent);
            }
        }
        if &e_sum != m {
            return Err(HopfError::Internal(
                "idempotent is not the sum of its parent block idempotents".into(),
            ));
        }
        let mut b_i = Vec::new();
        let mut f_sum = zero_vec(n);
        for (idx, alpha) in irr_k.iter().enumerate() {
            let f_in_h = incl.apply(&alpha.idempotent);
            if h.product(&f_in_h, m) == f_in_h {
                b_i.push(idx);
                vec_axpy(&mut f_sum, &CycNumber::one(), &f_in_h);
            }
        }
        if &f_sum != m {
            return Err(HopfError::Internal(
                "idempotent is not the sum of its subalgebra block idempotents".into(),
            ));
        }
        a_parts.push(a_i);
        b_parts.push(b_i);
    }
    // the m_i are orthogonal and sum to 1
    let mut total = zero_vec(n);
    for (i, mi) in m_idempotents.iter().enumerate() {
        vec_axpy(&mut total, &CycNumber::one(), mi);
        for (j, mj) in m_idempotents.iter().enumerate() {
            let prod = h.product(mi, mj);
            let expect = if i == j { mi.clone() } else { zero_vec(n) };
            if prod != expect {
                return Err(HopfError::Internal(
                    "central idempotents are not orthogonal".into(),
                ));
            }
        }
    }
    if &total != h.unit_vec() {
        return Err(HopfError::Internal(
            "central idempotents do not sum to the unit".into(),
        ));
    }

    Ok(IndResData {
        parent: h,
        sub: k.clone(),
        sub_hopf: kh,
        incl,
        irr_h,
        irr_k,
        ints_h,
        ints_k,
        res_matrix,
        m_idempotents,
        a_parts,
        b_parts,
    })
}

/// `sum_{chi in part} chi(1) chi` over the given characters.
fn weighted_sum(irr: &[Character], part: &[usize], dim: usize) -> CycVec {
    let mut out = zero_vec(dim);
    for &i in part {
        vec_axpy(&mut out, &irr[i].degree, &irr[i].values);
    }
    out
}

/// Verify the block restriction/induction identities, Frobenius reciprocity,
/// the projection formula, the module-theoretic induction oracle, and the
/// containments of the induced image.
pub fn verify_induction_identities(data: &IndResData) -> Result<()> {
    let h = &data.parent;
    let kh = &data.sub_hopf;
    let n = h.dim();
    let r = kh.dim();

    // Frobenius reciprocity both ways on all irreducible pairs
    for (i, chi) in data.irr_h.iter().enumerate() {
        for (j, alpha) in data.irr_k.iter().enumerate() {
            let lhs = char_multiplicity(h, &data.ints_h, &data.ind(&alpha.values), &chi.values);
            let rhs = char_multiplicity(kh, &data.ints_k, &data.res(&chi.values), &alpha.values);
            if lhs != rhs || as_multiplicity(&rhs)? != data.res_matrix[i][j] {
                return Err(HopfError::Internal(format!(
                    "Frobenius reciprocity fails on pair ({i}, {j})"
                )));
            }
        }
    }

    // per-block identities linking the two partitions
    let index = data.index();
    for (i, _) in data.m_idempotents.iter().enumerate() {
        let block_h = weighted_sum(&data.irr_h, &data.a_parts[i], n);
        let block_k = weighted_sum(&data.irr_k, &data.b_parts[i], r);
        if data.res(&block_h) != vec_scale(&block_k, &index) {
            return Err(HopfError::Internal(format!(
                "restricted block sum {i} is not the index multiple of the subalgebra block"
            )));
        }
        if data.ind(&block_k) != block_h {
            return Err(HopfError::Internal(format!(
                "induced block sum {i} does not recover the parent block"
            )));
        }
    }

    // projection formula on all irreducible pairs
    for chi in &data.irr_h {
        for beta in &data.irr_k {
            let ind_beta = data.ind(&beta.values);
            let left = h.dual_product(&chi.values, &ind_beta);
            let right = data.ind(&kh.dual_product(&data.res(&chi.values), &beta.values));
            if left != right {
                return Err(HopfError::Internal(
                    "projection formula fails on the left".into(),
                ));
            }
            let left = h.dual_product(&ind_beta, &chi.values);
            let right = data.ind(&kh.dual_product(&beta.values, &data.res(&chi.values)));
            if left != right {
                return Err(HopfError::Internal(
                    "projection formula fails on the right".into(),
                ));
            }
        }
    }

    // module oracle: H e_alpha realizes deg(alpha) copies of the induced
    // module, so its trace character is deg(alpha) * ind(alpha)
    for alpha in &data.irr_k {
        let f_in_h = data.incl.apply(&alpha.idempotent);
        let vecs: Vec<CycVec> = (0..n)
            .map(|p| h.product(&unit_vec(n, p), &f_in_h))
            .collect();
        let space = SubspaceC::from_vectors(n, &vecs);
        let chi_mod = module_character(h, &space)?;
        if chi_mod != vec_scale(&data.ind(&alpha.values), &alpha.degree) {
            return Err(HopfError::Internal(
                "module oracle disagrees with reciprocity induction".into(),
            ));
        }
    }

    // induction carries the regular character to the regular character
    let reg_k: CycVec = regular_character(kh);
    let reg_h: CycVec = regular_character(h);
    if data.ind(&reg_k) != reg_h {
        return Err(HopfError::Internal(
            "induced regular character is not the parent regular character".into(),
        ));
    }

    // containments: eps-up * C(H) and F(K) intersect C(H) both lie inside
    // the induced span
    let ind_span = induced_span(data);
    let eps_up = data.ind(kh.counit_vec());
    for chi in &data.irr_h {
        let prod = h.dual_product(&eps_up, &chi.values);
        if !(vec_is_zero(&prod) || ind_span.contains_vec(&prod)) {
            return Err(HopfError::Internal(
                "eps-up times a character leaves the induced span".into(),
            ));
        }
    }
    let ints = integrals(h)?;
    let four = crate::charint::fourier(h, &ints)?;
    let fk_vecs: Vec<CycVec> = data
        .sub
        .space
        .basis_vectors()
        .iter()
        .map(|v| four.forward.apply(v))
        .collect();
    let fk = SubspaceC::from_vectors(n, &fk_vecs);
    let ch = data.char_space_h();
    let fk_cap_ch = fk.intersect(&ch)?;
    for v in fk_cap_ch.basis_vectors() {
        if !ind_span.contains_vec(&v) {
            return Err(HopfError::Internal(
                "F(K) intersect C(H) leaves the induced span".into(),
            ));
        }
    }
    Ok(())
}

/// Span of the induced irreducible characters of `K`.
pub fn induced_span(data: &IndResData) -> SubspaceC {
    let n = data.parent.dim();
    let vecs: Vec<CycVec> = data
        .irr_k
        .iter()
        .map(|alpha| data.ind(&alpha.values))
        .collect();
    SubspaceC::from_vectors(n, &vecs)
}

/// The paired equivalence classes on `Irr(H)` and `Irr(K)` induced by
/// restriction overlap, for a normal subalgebra.
pub struct EquivClasses {
    pub c_classes: Vec<Vec<usize>>,
    pub d_classes: Vec<Vec<usize>>,
    /// `a_i = sum_{chi in C_i} chi(1) chi` in `H*` coordinates.
    pub a_aggregates: Vec<CycVec>,
    /// `alpha_i = sum_{alpha in D_i} alpha(1) alpha` in `K*` coordinates.
    pub alpha_aggregates: Vec<CycVec>,
}

fn require_normal(k: &SubHopf) -> Result<()> {
    if is_normal(k)?.verdict()? {
        Ok(())
    } else {
        Err(HopfError::NotNormal)
    }
}

pub fn equivalence_classes(data: &IndResData) -> Result<EquivClasses> {
    require_normal(&data.sub)?;
    let sh = data.irr_h.len();
    let sk = data.irr_k.len();
    // union-find over the bipartite overlap graph
    let mut parent: Vec<usize> = (0..sh + sk).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for i in 0..sh {
        for j in 0..sk {
            if data.res_matrix[i][j] > 0 {
                let a = find(&mut parent, i);
                let b = find(&mut parent, sh + j);
                parent[a] = b;
            }
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut c_classes: Vec<Vec<usize>> = Vec::new();
    let mut d_classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..sh {
        let root = find(&mut parent, i);
        let pos = roots.iter().position(|&r| r == root).unwrap_or_else(|| {
            roots.push(root);
            c_classes.push(Vec::new());
            d_classes.push(Vec::new());
            roots.len() - 1
        });
        c_classes[pos].push(i);
    }
    for j in 0..sk {
        let root = find(&mut parent, sh + j);
        let pos = roots
            .iter()
            .position(|&r| r == root)
            .ok_or_else(|| HopfError::Internal("subalgebra character misses every class".into()))?;
        d_classes[pos].push(j);
    }
    // already ordered by the minimal parent character index, since classes
    // were created while scanning Irr(H) in order

    // within a class the normalized restrictions agree; across they differ
    let kdim = data.sub_hopf.dim();
    for (ci, di) in c_classes.iter().zip(&d_classes) {
        if di.is_empty() {
            return Err(HopfError::Internal("class without subalgebra part".into()));
        }
        let reference = normalized_res(data, ci[0])?;
        for &i in &ci[1..] {
            if normalized_res(data, i)? != reference {
                return Err(HopfError::VerdictDisagreement(
                    "normalized restrictions differ within a class".into(),
                ));
            }
        }
        let _ = kdim;
    }
    for (x, cx) in c_classes.iter().enumerate() {
        for cy in c_classes.iter().skip(x + 1) {
            if normalized_res(data, cx[0])? == normalized_res(data, cy[0])? {
                return Err(HopfError::VerdictDisagreement(
                    "normalized restrictions agree across classes".into(),
                ));
            }
        }
    }

    // the classes coincide with the idempotent partitions
    let mut sorted_c: Vec<Vec<usize>> = c_classes.clone();
    let mut sorted_a = data.a_parts.clone();
    sorted_c.sort();
    sorted_a.sort();
    let mut sorted_d = d_classes.clone();
    let mut sorted_b = data.b_parts.clone();
    sorted_d.sort();
    sorted_b.sort();
    if sorted_c != sorted_a || sorted_d != sorted_b {
        return Err(HopfError::VerdictDisagreement(
            "equivalence classes differ from the idempotent partitions".into(),
        ));
    }

    let n = data.parent.dim();
    let a_aggregates: Vec<CycVec> = c_classes
        .iter()
        .map(|c| weighted_sum(&data.irr_h, c, n))
        .collect();
    let alpha_aggregates: Vec<CycVec> = d_classes
        .iter()
        .map(|d| weighted_sum(&data.irr_k, d, kdim))
        .collect();
    Ok(EquivClasses {
        c_classes,
        d_classes,
        a_aggregates,
        alpha_aggregates,
    })
}

fn normalized_res(data: &IndResData, i: usize) -> Result<CycVec> {
    let chi = &data.irr_h[i];
    let inv = chi.degree.inv().map_err(HopfError::Scalar)?;
    Ok(vec_scale(&data.res(&chi.values), &inv))
}

/// The closed restriction and induction formulas available when `K` is
/// normal, verified for every character of every class.
pub fn normal_formulas_check(data: &IndResData, classes: &EquivClasses) -> Result<()> {
    let h = &data.parent;
    let kh = &data.sub_hopf;
    let index = data.index();
    for (ci, (di, (a_i, alpha_i))) in classes.c_classes.iter().zip(
        classes
            .d_classes
            .iter()
            .zip(classes.a_aggregates.iter().zip(&classes.alpha_aggregates)),
    ) {
        let a_deg = h.eval(a_i, h.unit_vec());
        let alpha_deg = kh.eval(alpha_i, kh.unit_vec());
        for &i in ci {
            let chi = &data.irr_h[i];
            // chi restricted = (chi(1)/alpha_i(1)) alpha_i
            let scale = (&chi.degree * &alpha_deg.inv().map_err(HopfError::Scalar)?).clone();
            if data.res(&chi.values) != vec_scale(alpha_i, &scale) {
                return Err(HopfError::Internal(
                    "closed restriction formula fails".into(),
                ));
            }
        }
        for &j in di {
            let alpha = &data.irr_k[j];
            // alpha induced = (alpha(1)/a_i(1)) (|H|/|K|) a_i
            let scale = &(&alpha.degree * &a_deg.inv().map_err(HopfError::Scalar)?) * &index;
            if data.ind(&alpha.values) != vec_scale(a_i, &scale) {
                return Err(HopfError::Internal("closed induction formula fails".into()));
            }
            // up-down-up composition multiplies by the index
            let up = data.ind(&alpha.values);
            let up_down_up = data.ind(&data.res(&up));
            if up_down_up != vec_scale(&up, &index) {
                return Err(HopfError::Internal(
                    "up-down-up composition is not the index multiple".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Matrix of the map `chi -> sum a_1 chi(S a_2)` for the basis element `a`.
fn adjoint_coefficient_matrix(h: &Hopf, m: usize) -> MatrixC {
    let n = h.dim();
    let s = h.antipode_matrix();
    let mut w = MatrixC::zero(n, n);
    for (a1, a2, c) in h.comult_triples(m) {
        let col = s.col_vec(*a2);
        for (k, x) in col.iter().enumerate() {
            if !x.is_zero() {
                let cur = w.get(*a1, k) + &(c * x);
                w.set(*a1, k, cur);
            }
        }
    }
    w
}

/// The two-sided splitting of `C(H)` determined by a normal subalgebra:
/// characters whose adjoint coefficients fall into `K`, and characters
/// vanishing on it.
pub fn c1_c2(data: &IndResData) -> Result<(SubspaceC, SubspaceC)> {
    require_normal(&data.sub)?;
    let h = &data.parent;
    let n = h.dim();
    let ch = data.char_space_h();
    let perp_basis = data.sub.space.perp();

    // C1: sum a_1 chi(S a_2) lies in K for every basis a of H
    let mut rows_c1: Vec<CycVec> = Vec::new();
    for m in 0..n {
        let w = adjoint_coefficient_matrix(h, m);
        for p in perp_basis.basis_vectors() {
            let mut row = zero_vec(n);
            for (pi, pc) in p.iter().enumerate() {
                if pc.is_zero() {
                    continue;
                }
                for k in 0..n {
                    row[k] += &(pc * w.get(pi, k));
                }
            }
            rows_c1.push(row);
        }
    }
    let c1 = if rows_c1.is_empty() {
        ch.clone()
    } else {
        SubspaceC::from_vectors(n, &MatrixC::from_rows(rows_c1).kernel()).intersect(&ch)?
    };

    // C2: sum x_1 chi(S x_2) = 0 for every x in K
    let mut rows_c2: Vec<CycVec> = Vec::new();
    for x in data.sub.space.basis_vectors() {
        let mut w = MatrixC::zero(n, n);
        for (m, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            let wm = adjoint_coefficient_matrix(h, m);
            for p in 0..n {
                for k in 0..n {
                    if !wm.get(p, k).is_zero() {
                        let cur = w.get(p, k) + &(xc * wm.get(p, k));
                        w.set(p, k, cur);
                    }
                }
            }
        }
        for p in 0..n {
            rows_c2.push((0..n).map(|k| w.get(p, k).clone()).collect());
        }
    }
    let c2 = if rows_c2.is_empty() {
        ch.clone()
    } else {
        SubspaceC::from_vectors(n, &MatrixC::from_rows(rows_c2).kernel()).intersect(&ch)?
    };

    // direct sum of C(H)
    if c1.dim() + c2.dim() != ch.dim() || c1.intersect(&c2)?.dim() != 0 {
        return Err(HopfError::Internal(
            "adjoint splitting does not decompose the character ring".into(),
        ));
    }
    // the two sides multiply to zero
    for u in c1.basis_vectors() {
        for v in c2.basis_vectors() {
            if !vec_is_zero(&h.dual_product(&u, &v)) || !vec_is_zero(&h.dual_product(&v, &u)) {
                return Err(HopfError::Internal(
                    "adjoint splitting halves do not annihilate each other".into(),
                ));
            }
        }
    }
    // C2 = C(H) intersect K-perp = ker(res) on C(H)
    let alt = ch.intersect(&perp_basis)?;
    if !c2.equals(&alt)? {
        return Err(HopfError::Internal(
            "vanishing half differs from the annihilator description".into(),
        ));
    }
    // res is injective on C1
    let res_images: Vec<CycVec> = c1.basis_vectors().iter().map(|v| data.res(v)).collect();
    if SubspaceC::from_vectors(data.sub_hopf.dim(), &res_images).dim() != c1.dim() {
        return Err(HopfError::Internal(
            "restriction is not injective on the induced half".into(),
        ));
    }

    // dim C1 equals the commutant dimension of the restricted module on K
    let dim_comm = restricted_commutant_dim(data)?;
    if dim_comm != c1.dim() {
        return Err(HopfError::VerdictDisagreement(format!(
            "restricted commutant dimension {dim_comm} differs from dim C1 = {}",
            c1.dim()
        )));
    }
    Ok((c1, c2))
}

/// Dimension of the commutant of the induced module structure restricted to
/// the (normal, hence stable) subalgebra carrier.
fn restricted_commutant_dim(data: &IndResData) -> Result<usize> {
    let h = &data.parent;
    let (_, on_alg) = a0_actions(h)?;
    debug_assert_eq!(on_alg.carrier, Carrier::OnAlgebra);
    let restricted = restrict_action(&on_alg, &data.sub.space)?;
    let r = data.sub.space.dim();
    let mut rows: Vec<CycVec> = Vec::new();
    for a in &restricted {
        // commutation with X as r*r unknowns, row-major
        for p in 0..r {
            for q in 0..r {
                let mut row = zero_vec(r * r);
                for l in 0..r {
                    // (A X)_{pq} gets A_{pl} X_{lq}; (X A)_{pq} gets X_{pl} A_{lq}
                    row[l * r + q] += a.get(p, l);
                    let cur = row[p * r + l].checked_sub(a.get(l, q)).map_err(HopfError::Scalar)?;
                    row[p * r + l] = cur;
                }
                rows.push(row);
            }
        }
    }
    Ok(MatrixC::from_rows(rows).kernel().len())
}

/// Matrices of an action restricted to a stable subspace.
fn restrict_action(act: &DoubleAction, space: &SubspaceC) -> Result<Vec<MatrixC>> {
    let r = space.dim();
    let basis = space.basis_vectors();
    let mut out = Vec::new();
    for m in act.act_alg.iter().chain(act.act_dual.iter()) {
        let mut rm = MatrixC::zero(r, r);
        for (j, v) in basis.iter().enumerate() {
            let image = m.apply(v);
            let coords = space
                .coords(&image)
                .ok_or_else(|| HopfError::NotClosed("subspace is not action stable".into()))?;
            for (i, c) in coords.into_iter().enumerate() {
                rm.set(i, j, c);
            }
        }
        out.push(rm);
    }
    Ok(out)
}

/// The image of induction, computed four independent ways and verified to
/// agree, together with the closed formula for the induced counit and the
/// vanishing description of membership.
pub fn image_of_induction(data: &IndResData, c1: &SubspaceC) -> Result<SubspaceC> {
    require_normal(&data.sub)?;
    let h = &data.parent;
    let kh = &data.sub_hopf;
    let n = h.dim();
    let ch = data.char_space_h();

    let s1 = induced_span(data);
    let eps_up = data.ind(kh.counit_vec());
    let s2_vecs: Vec<CycVec> = ch
        .basis_vectors()
        .iter()
        .map(|chi| h.dual_product(&eps_up, chi))
        .collect();
    let s2 = SubspaceC::from_vectors(n, &s2_vecs);
    let ints = integrals(h)?;
    let four = crate::charint::fourier(h, &ints)?;
    let fk_vecs: Vec<CycVec> = data
        .sub
        .space
        .basis_vectors()
        .iter()
        .map(|v| four.forward.apply(v))
        .collect();
    let s3 = SubspaceC::from_vectors(n, &fk_vecs).intersect(&ch)?;
    for (name, other) in [("counit multiples", &s2), ("Fourier image", &s3), ("adjoint half", c1)] {
        if !s1.equals(other)? {
            return Err(HopfError::VerdictDisagreement(format!(
                "induced span differs from the {name} description"
            )));
        }
    }

    // closed formula: eps-up = (|H|/|K|) * sum of the dual idempotents of
    // the simple subcoalgebras lying inside K
    let coalgebras = matrix_coalgebras(h)?;
    let mut xi_sum = zero_vec(n);
    let mut covered = 0;
    for mc in &coalgebras {
        if mc
            .span(n)
            .basis_vectors()
            .iter()
            .all(|v| data.sub.space.contains_vec(v))
        {
            vec_axpy(&mut xi_sum, &CycNumber::one(), &mc.xi);
            covered += mc.q * mc.q;
        }
    }
    if covered != data.sub.space.dim() {
        return Err(HopfError::Internal(
            "subalgebra is not a sum of full simple subcoalgebras".into(),
        ));
    }
    if eps_up != vec_scale(&xi_sum, &data.index()) {
        return Err(HopfError::Internal(
            "closed formula for the induced counit fails".into(),
        ));
    }

    // membership is vanishing on the matrix bases of the outside coalgebras
    let mut rows: Vec<CycVec> = Vec::new();
    for mc in &coalgebras {
        let inside = mc
            .span(n)
            .basis_vectors()
            .iter()
            .all(|v| data.sub.space.contains_vec(v));
        if !inside {
            for row in &mc.basis {
                for x in row {
                    rows.push(x.clone());
                }
            }
        }
    }
    let vanishing = if rows.is_empty() {
        SubspaceC::full(n)
    } else {
        let kern = MatrixC::from_rows(rows).kernel();
        SubspaceC::from_vectors(n, &kern)
    };
    if !s1.equals(&vanishing.intersect(&ch)?)? {
        return Err(HopfError::VerdictDisagreement(
            "vanishing description differs from the induced span".into(),
        ));
    }
    Ok(s1)
}

/// The image of restriction inside `C(K)`: the ad-invariant functionals on
/// `K`, verified equal to the span of the restricted irreducibles, with
/// multiplicativity of restriction on the induced half.
pub fn image_of_restriction(data: &IndResData, c1: &SubspaceC) -> Result<SubspaceC> {
    require_normal(&data.sub)?;
    let h = &data.parent;
    let n = h.dim();
    let r = data.sub.space.dim();
    let basis_k = data.sub.space.basis_vectors();

    // f(sum a_1 x S a_2) = eps(a) f(x) for all a in H, x in K
    let mut rows: Vec<CycVec> = Vec::new();
    for m in 0..n {
        let eps_a = h.counit_of(&unit_vec(n, m));
        for (xi, x) in basis_k.iter().enumerate() {
            let mut image = zero_vec(n);
            for (a1, a2, c) in h.comult_triples(m) {
                let left = h.product(&unit_vec(n, *a1), x);
                let full = h.product(&left, &h.antipode_matrix().col_vec(*a2));
                vec_axpy(&mut image, c, &full);
            }
            let coords = data
                .sub
                .space
                .coords(&image)
                .ok_or_else(|| HopfError::NotNormal)?;
            let mut row = coords;
            let minus = CycNumber::zero().checked_sub(&eps_a).map_err(HopfError::Scalar)?;
            row[xi] += &minus;
            if !vec_is_zero(&row) {
                rows.push(row);
            }
        }
    }
    let invariant = if rows.is_empty() {
        SubspaceC::full(r)
    } else {
        SubspaceC::from_vectors(r, &MatrixC::from_rows(rows).kernel())
    };

    let res_span_vecs: Vec<CycVec> = data
        .irr_h
        .iter()
        .map(|chi| data.res(&chi.values))
        .collect();
    let res_span = SubspaceC::from_vectors(r, &res_span_vecs);
    if !invariant.equals(&res_span)? {
        return Err(HopfError::VerdictDisagreement(
            "invariant functionals differ from the restricted span".into(),
        ));
    }

    // restriction is multiplicative on the induced half
    let kh = &data.sub_hopf;
    for u in c1.basis_vectors() {
        for v in c1.basis_vectors() {
            let lhs = data.res(&h.dual_product(&u, &v));
            let rhs = kh.dual_product(&data.res(&u), &data.res(&v));
            if lhs != rhs {
                return Err(HopfError::Internal(
                    "restriction is not multiplicative".into(),
                ));
            }
        }
    }
    Ok(res_span)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog_hopf;
    use crate::subnormal::subgroup_hopf;

    fn a3_data() -> IndResData {
        let h = catalog_hopf("S3").unwrap();
        let a3 = subgroup_hopf(&h, &[4]).unwrap();
        indres_data(&a3).unwrap()
    }

    #[test]
    fn a3_in_s3_block_structure() {
        let data = a3_data();
        assert_eq!(data.m_idempotents.len(), 2);
        assert_eq!(data.irr_h.len(), 3);
        assert_eq!(data.irr_k.len(), 3);
        // one block holds the two linear characters of S3, the other the
        // 2-dimensional one
        let mut sizes: Vec<usize> = data.a_parts.iter().map(|p| p.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2]);
        verify_induction_identities(&data).unwrap();
    }

    #[test]
    fn a3_in_s3_induction_values() {
        let data = a3_data();
        let kh = &data.sub_hopf;
        // counit of A3 induces to the sum of the linear characters of S3
        let eps_up = data.ind(kh.counit_vec());
        let linear_sum: CycVec = {
            let mut v = zero_vec(6);
            for chi in &data.irr_h {
                if chi.degree.is_one() {
                    vec_axpy(&mut v, &CycNumber::one(), &chi.values);
                }
            }
            v
        };
        assert_eq!(eps_up, linear_sum);
        // degree of every induced irreducible is the index times its degree
        for alpha in &data.irr_k {
            let ind = data.ind(&alpha.values);
            let deg = data.parent.eval(&ind, data.parent.unit_vec());
            assert_eq!(deg, &alpha.degree * &data.index());
        }
    }

    #[test]
    fn a3_in_s3_classes_and_formulas() {
        let data = a3_data();
        let classes = equivalence_classes(&data).unwrap();
        assert_eq!(classes.c_classes.len(), 2);
        let mut sizes: Vec<(usize, usize)> = classes
            .c_classes
            .iter()
            .zip(&classes.d_classes)
            .map(|(c, d)| (c.len(), d.len()))
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![(1, 2), (2, 1)]);
        normal_formulas_check(&data, &classes).unwrap();
    }

    #[test]
    fn a3_in_s3_images() {
        let data = a3_data();
        let (c1, c2) = c1_c2(&data).unwrap();
        assert_eq!(c1.dim(), 2);
        assert_eq!(c2.dim(), 1);
        let image = image_of_induction(&data, &c1).unwrap();
        assert_eq!(image.dim(), 2);
        let res_image = image_of_restriction(&data, &c1).unwrap();
        assert_eq!(res_image.dim(), 2);
    }

    #[test]
    fn non_normal_pair_still_satisfies_reciprocity() {
        let h = catalog_hopf("S3").unwrap();
        let c2 = subgroup_hopf(&h, &[1]).unwrap();
        let data = indres_data(&c2).unwrap();
        verify_induction_identities(&data).unwrap();
        // the normal-only operations refuse to run
        assert!(matches!(
            equivalence_classes(&data),
            Err(HopfError::NotNormal)
        ));
        assert!(matches!(c1_c2(&data), Err(HopfError::NotNormal)));
    }

    #[test]
    fn whole_algebra_and_trivial_subalgebra_edges() {
        let h = catalog_hopf("S3").unwrap();
        for gens in [vec![], vec![1usize, 4]] {
            let k = subgroup_hopf(&h, &gens).unwrap();
            let data = indres_data(&k).unwrap();
            verify_induction_identities(&data).unwrap();
            let classes = equivalence_classes(&data).unwrap();
            normal_formulas_check(&data, &classes).unwrap();
            let (c1, _) = c1_c2(&data).unwrap();
            image_of_induction(&data, &c1).unwrap();
            image_of_restriction(&data, &c1).unwrap();
        }
    }

    #[test]
    fn center_of_q8() {
        let h = catalog_hopf("Q8").unwrap();
        let z = subgroup_hopf(&h, &[1]).unwrap();
        assert_eq!(z.dim(), 2);
        let data = indres_data(&z).unwrap();
        verify_induction_identities(&data).unwrap();
        let classes = equivalence_classes(&data).unwrap();
        normal_formulas_check(&data, &classes).unwrap();
        let (c1, c2) = c1_c2(&data).unwrap();
        assert_eq!(c1.dim() + c2.dim(), data.irr_h.len());
        let img = image_of_induction(&data, &c1).unwrap();
        image_of_restriction(&data, &c1).unwrap();
        assert_eq!(img.dim(), c1.dim());
    }
}
