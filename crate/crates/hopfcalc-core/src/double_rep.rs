//! The induced D(H)-module realized on `H*` and on `H`, with straightening
//! verification, Fourier equivariance, commutants, and the isotypic
//! decomposition of `H*`.

use crate::charint::{CharRing, Fourier};
use crate::cyclotomic::CycNumber;
use crate::error::{HopfError, Result};
use crate::hopf::Hopf;
use crate::linalg::{unit_vec, vec_axpy, zero_vec, CycVec, MatrixC, SubspaceC};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Carrier {
    OnDual,
    OnAlgebra,
}

/// Action matrices of the two generator families of D(H) on one carrier.
#[derive(Debug)]
pub struct DoubleAction {
    pub h: Hopf,
    pub carrier: Carrier,
    /// Action of each algebra basis element of `H`.
    pub act_alg: Vec<MatrixC>,
    /// Action of each dual basis functional of `H*`.
    pub act_dual: Vec<MatrixC>,
}

/// Basis of the endomorphisms commuting with the full D(H)-action.
#[derive(Debug)]
pub struct CommutantBasis {
    pub carrier: Carrier,
    pub matrices: Vec<MatrixC>,
}

fn flatten(m: &MatrixC) -> CycVec {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        v.extend(m.row(i).iter().cloned());
    }
    v
}

/// A small set of basis indices generating the algebra given by `mul` and
/// `unit`, found greedily.
pub fn algebra_generators<F>(n: usize, unit: &[CycNumber], mul: F) -> Vec<usize>
where
    F: Fn(&[CycNumber], &[CycNumber]) -> CycVec,
{
    let mut gens: Vec<usize> = Vec::new();
    let mut span = SubspaceC::from_vectors(n, &[unit.to_vec()]);
    while span.dim() < n {
        let next = (0..n)
            .find(|&m| !span.contains_vec(&unit_vec(n, m)))
            .expect("span is proper, so some basis vector is missing");
        gens.push(next);
        span = span
            .sum(&SubspaceC::from_vectors(n, &[unit_vec(n, next)]))
            .expect("same ambient");
        // Close the span under multiplication. Every vector enters through
        // the frontier and is multiplied against the whole span when popped,
        // so each unordered pair is covered from at least one side.
        let mut frontier = vec![unit_vec(n, next)];
        while let Some(v) = frontier.pop() {
            for b in span.basis_vectors() {
                for p in [mul(&v, &b), mul(&b, &v)] {
                    if !span.contains_vec(&p) {
                        span = span
                            .sum(&SubspaceC::from_vectors(n, &[p.clone()]))
                            .expect("same ambient");
                        frontier.push(p);
                    }
                }
            }
        }
    }
    gens
}

/// Realize the induced module on both carriers.
pub fn a0_actions(h: &Hopf) -> Result<(DoubleAction, DoubleAction)> {
    let n = h.dim();
    let s_inv = h.antipode_inv_matrix().clone();
    let s_dual_inv = s_inv.transpose();

    // On H*: (a.f)(x) = f(sum S^{-1}(a_2) x a_1), g.f = g f.
    let mut dual_act_alg = Vec::with_capacity(n);
    for j in 0..n {
        let mut m = MatrixC::zero(n, n);
        for b in 0..n {
            // w_b = sum S^{-1}(a_2) b_b a_1
            let mut w = zero_vec(n);
            for (a1, a2, c) in h.comult_triples(j) {
                let left = s_inv.col_vec(*a2);
                let mid = h.product(&left, &unit_vec(n, b));
                let full = h.product(&mid, &unit_vec(n, *a1));
                vec_axpy(&mut w, c, &full);
            }
            for (k, c) in w.into_iter().enumerate() {
                m.set(b, k, c);
            }
        }
        dual_act_alg.push(m);
    }
    let mut dual_act_dual = Vec::with_capacity(n);
    for i in 0..n {
        let mut m = MatrixC::zero(n, n);
        for k in 0..n {
            let col = h.dual_product(&unit_vec(n, i), &unit_vec(n, k));
            for (r, c) in col.into_iter().enumerate() {
                m.set(r, k, c);
            }
        }
        dual_act_dual.push(m);
    }

    // On H: x.a = sum x_1 a S(x_2), f.a = a harpooned by f o S^{-1}.
    let mut alg_act_alg = Vec::with_capacity(n);
    for j in 0..n {
        let mut m = MatrixC::zero(n, n);
        for b in 0..n {
            let mut col = zero_vec(n);
            for (x1, x2, c) in h.comult_triples(j) {
                let right = h.antipode_matrix().col_vec(*x2);
                let mid = h.product(&unit_vec(n, *x1), &unit_vec(n, b));
                let full = h.product(&mid, &right);
                vec_axpy(&mut col, c, &full);
            }
            for (r, c) in col.into_iter().enumerate() {
                m.set(r, b, c);
            }
        }
        alg_act_alg.push(m);
    }
    let mut alg_act_dual = Vec::with_capacity(n);
    for i in 0..n {
        let finv = s_dual_inv.apply(&unit_vec(n, i));
        let mut m = MatrixC::zero(n, n);
        for b in 0..n {
            let col = h.h_harpoon_f(&unit_vec(n, b), &finv);
            for (r, c) in col.into_iter().enumerate() {
                m.set(r, b, c);
            }
        }
        alg_act_dual.push(m);
    }

    let on_dual = DoubleAction {
        h: h.clone(),
        carrier: Carrier::OnDual,
        act_alg: dual_act_alg,
        act_dual: dual_act_dual,
    };
    let on_alg = DoubleAction {
        h: h.clone(),
        carrier: Carrier::OnAlgebra,
        act_alg: alg_act_alg,
        act_dual: alg_act_dual,
    };
    verify_straightening(&on_dual)?;
    verify_straightening(&on_alg)?;
    Ok((on_dual, on_alg))
}

/// Check that the two generator families compose according to the D(H)
/// multiplication rule, and that units act as the identity.
pub fn verify_straightening(act: &DoubleAction) -> Result<()> {
    let h = &act.h;
    let n = h.dim();
    // units act as identity
    let mut unit_action = MatrixC::zero(n, n);
    for (k, c) in h.unit_vec().iter().enumerate() {
        if !c.is_zero() {
            axpy(&mut unit_action, c, &act.act_alg[k]);
        }
    }
    if !unit_action.is_identity() {
        return Err(HopfError::Internal("unit of H does not act trivially".into()));
    }
    let mut counit_action = MatrixC::zero(n, n);
    for (k, c) in h.counit_vec().iter().enumerate() {
        if !c.is_zero() {
            axpy(&mut counit_action, c, &act.act_dual[k]);
        }
    }
    if !counit_action.is_identity() {
        return Err(HopfError::Internal(
            "unit of H* does not act trivially".into(),
        ));
    }

    // Both families are algebra representations. Multiplicativity on pairs
    // (g, j) with g from a generating set and j arbitrary already forces it
    // for all pairs: by linearity it gives M(g)M(x) = M(gx) for every x, and
    // induction over generator words extends that to M(a)M(x) = M(ax) for
    // every a in the algebra they generate, which is all of H (resp. H*).
    let alg_gens = algebra_generators(n, h.unit_vec(), |a, b| h.product(a, b));
    let dual_gens = algebra_generators(n, h.counit_vec(), |a, b| h.dual_product(a, b));
    for &i in &alg_gens {
        for j in 0..n {
            let lhs = act.act_alg[i].matmul(&act.act_alg[j]);
            let mut rhs = MatrixC::zero(n, n);
            for (k, c) in h.mult_vec(i, j).iter().enumerate() {
                if !c.is_zero() {
                    axpy(&mut rhs, c, &act.act_alg[k]);
                }
            }
            if lhs != rhs {
                return Err(HopfError::Internal(format!(
                    "algebra action is not multiplicative at ({i}, {j})"
                )));
            }
        }
    }
    for &i in &dual_gens {
        for j in 0..n {
            let lhs = act.act_dual[i].matmul(&act.act_dual[j]);
            let mut rhs = MatrixC::zero(n, n);
            let prod = h.dual_product(&unit_vec(n, i), &unit_vec(n, j));
            for (k, c) in prod.iter().enumerate() {
                if !c.is_zero() {
                    axpy(&mut rhs, c, &act.act_dual[k]);
                }
            }
            if lhs != rhs {
                return Err(HopfError::Internal(format!(
                    "dual action is not multiplicative at ({i}, {j})"
                )));
            }
        }
    }

    // cross relations on an algebra generating set of H; together with the
    // representation property this forces them for every element, since the
    // straightening datum of a product is the composite of the factors'
    // data by coassociativity
    let s_inv = h.antipode_inv_matrix();
    for j in alg_gens {
        let triples = h.comult2_triples(j);
        for i in 0..n {
            let f = unit_vec(n, i);
            let lhs = act.act_alg[j].matmul(&act.act_dual[i]);
            let mut rhs = MatrixC::zero(n, n);
            for (h1, h2, h3, c) in &triples {
                let g = h.a_harpoon_f(
                    &unit_vec(n, *h1),
                    &h.f_harpoon_a(&f, &s_inv.col_vec(*h3)),
                );
                let mut mg = MatrixC::zero(n, n);
                for (u, gu) in g.iter().enumerate() {
                    if !gu.is_zero() {
                        axpy(&mut mg, gu, &act.act_dual[u]);
                    }
                }
                let term = mg.matmul(&act.act_alg[*h2]);
                axpy(&mut rhs, c, &term);
            }
            if lhs != rhs {
                return Err(HopfError::Internal(format!(
                    "straightening relation fails at algebra index {j}, dual index {i}"
                )));
            }
        }
    }
    Ok(())
}

/// `acc += c * b`, touching only the nonzero entries of `b`.
fn axpy(acc: &mut MatrixC, c: &CycNumber, b: &MatrixC) {
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            let e = b.get(i, j);
            if !e.is_zero() {
                acc.set(i, j, acc.get(i, j) + &(c * e));
            }
        }
    }
}

/// Compute a basis of `End_{D(H)}(carrier)` as the kernel of the commutation
/// linear system, pre-reduced by the free-module structure over `H*`.
pub fn commutant(act: &DoubleAction) -> Result<CommutantBasis> {
    let h = &act.h;
    let n = h.dim();
    let alg_gens = algebra_generators(n, h.unit_vec(), |a, b| h.product(a, b));
    let dual_gens = algebra_generators(n, h.counit_vec(), |a, b| h.dual_product(a, b));

    // Endomorphisms commuting with the H*-family form a free n-parameter
    // space (the carrier is free of rank one over H*); parametrize it, then
    // impose commutation with the H generators.
    let params: Vec<MatrixC> = match act.carrier {
        Carrier::OnDual => {
            // commutes with all left convolutions iff it is a right convolution
            (0..n)
                .map(|l| {
                    let mut m = MatrixC::zero(n, n);
                    for k in 0..n {
                        let col = h.dual_product(&unit_vec(n, k), &unit_vec(n, l));
                        for (r, c) in col.into_iter().enumerate() {
                            m.set(r, k, c);
                        }
                    }
                    m
                })
                .collect()
        }
        Carrier::OnAlgebra => {
            // find a cyclic vector for the H*-family and solve X(A_i v) = A_i w
            let mut candidates: Vec<CycVec> = (0..n).map(|m| unit_vec(n, m)).collect();
            for base in 1..=8u64 {
                let mut pow = CycNumber::one();
                let scale = CycNumber::from_i64(base as i64);
                let mut v = zero_vec(n);
                for entry in v.iter_mut() {
                    *entry = pow.clone();
                    pow = &pow * &scale;
                }
                candidates.push(v);
            }
            let mut found = None;
            for v in &candidates {
                let mut vm = MatrixC::zero(n, n);
                for i in 0..n {
                    let col = act.act_dual[i].apply(v);
                    for (r, c) in col.into_iter().enumerate() {
                        vm.set(r, i, c);
                    }
                }
                if let Some(inv) = vm.inverse() {
                    found = Some(inv);
                    break;
                }
            }
            let vinv = found.ok_or_else(|| {
                HopfError::Internal("no cyclic basis vector for the dual action".into())
            })?;
            (0..n)
                .map(|m| {
                    let w = unit_vec(n, m);
                    let mut wm = MatrixC::zero(n, n);
                    for i in 0..n {
                        let col = act.act_dual[i].apply(&w);
                        for (r, c) in col.into_iter().enumerate() {
                            wm.set(r, i, c);
                        }
                    }
                    wm.matmul(&vinv)
                })
                .collect()
        }
    };

    // rows: commutators with the H generators, linear in the parameters
    let mut rows: Vec<CycVec> = vec![zero_vec(n); alg_gens.len() * n * n];
    for (gi, &j) in alg_gens.iter().enumerate() {
        for (l, x) in params.iter().enumerate() {
            let comm = {
                let a = act.act_alg[j].matmul(x);
                let b = x.matmul(&act.act_alg[j]);
                MatrixC::from_fn(n, n, |p, q| a.get(p, q) - b.get(p, q))
            };
            for p in 0..n {
                for q in 0..n {
                    rows[gi * n * n + p * n + q][l] = comm.get(p, q).clone();
                }
            }
        }
    }
    rows.retain(|r| r.iter().any(|c| !c.is_zero()));
    let kernel = if rows.is_empty() {
        (0..n).map(|l| unit_vec(n, l)).collect()
    } else {
        MatrixC::from_rows(rows).kernel()
    };
    let matrices: Vec<MatrixC> = kernel
        .iter()
        .map(|coef| {
            let mut m = MatrixC::zero(n, n);
            for (l, c) in coef.iter().enumerate() {
                if !c.is_zero() {
                    axpy(&mut m, c, &params[l]);
                }
            }
            m
        })
        .collect();

    // verify: commutes with both generator families exactly
    for x in &matrices {
        for &j in &alg_gens {
            if x.matmul(&act.act_alg[j]) != act.act_alg[j].matmul(x) {
                return Err(HopfError::Internal(
                    "commutant candidate fails against an algebra generator".into(),
                ));
            }
        }
        for &i in &dual_gens {
            if x.matmul(&act.act_dual[i]) != act.act_dual[i].matmul(x) {
                return Err(HopfError::Internal(
                    "commutant candidate fails against a dual generator".into(),
                ));
            }
        }
    }
    // closed under composition, contains the identity
    let span = SubspaceC::from_vectors(
        n * n,
        &matrices.iter().map(flatten).collect::<Vec<_>>(),
    );
    if !span.contains_vec(&flatten(&MatrixC::identity(n))) {
        return Err(HopfError::Internal("commutant misses the identity".into()));
    }
    for a in &matrices {
        for b in &matrices {
            if !span.contains_vec(&flatten(&a.matmul(b))) {
                return Err(HopfError::Internal(
                    "commutant is not closed under composition".into(),
                ));
            }
        }
    }
    Ok(CommutantBasis {
        carrier: act.carrier,
        matrices,
    })
}

/// Matrix of right convolution by `g` on `H*`.
pub fn right_conv_matrix(h: &Hopf, g: &[CycNumber]) -> MatrixC {
    let n = h.dim();
    let mut m = MatrixC::zero(n, n);
    for k in 0..n {
        let col = h.dual_product(&unit_vec(n, k), g);
        for (r, c) in col.into_iter().enumerate() {
            m.set(r, k, c);
        }
    }
    m
}

/// Matrix of `S*(chi) harpooned into -` on `H`.
pub fn harpoon_matrix(h: &Hopf, chi: &[CycNumber]) -> MatrixC {
    let n = h.dim();
    let s_chi = h.dual_antipode_apply(chi);
    let mut m = MatrixC::zero(n, n);
    for b in 0..n {
        let col = h.f_harpoon_h(&s_chi, &unit_vec(n, b));
        for (r, c) in col.into_iter().enumerate() {
            m.set(r, b, c);
        }
    }
    m
}

/// Verify the two ring isomorphisms from the character ring onto the
/// commutants, and that the commutant dimensions equal `dim C(H)`.
pub fn verify_commutant_maps(
    h: &Hopf,
    ring_space: &SubspaceC,
    comm_dual: &CommutantBasis,
    comm_alg: &CommutantBasis,
) -> Result<()> {
    let n = h.dim();
    let s = ring_space.dim();
    if comm_dual.matrices.len() != s || comm_alg.matrices.len() != s {
        return Err(HopfError::Internal(format!(
            "commutant dimensions {} / {} differ from dim C(H) = {s}",
            comm_dual.matrices.len(),
            comm_alg.matrices.len()
        )));
    }
    let dual_span = SubspaceC::from_vectors(
        n * n,
        &comm_dual.matrices.iter().map(flatten).collect::<Vec<_>>(),
    );
    let alg_span = SubspaceC::from_vectors(
        n * n,
        &comm_alg.matrices.iter().map(flatten).collect::<Vec<_>>(),
    );
    let basis = ring_space.basis_vectors();
    for chi in &basis {
        let s_chi = h.dual_antipode_apply(chi);
        let r = right_conv_matrix(h, &s_chi);
        if !dual_span.contains_vec(&flatten(&r)) {
            return Err(HopfError::Internal(
                "right convolution by an antipoded character is outside the commutant".into(),
            ));
        }
        let t = harpoon_matrix(h, chi);
        if !alg_span.contains_vec(&flatten(&t)) {
            return Err(HopfError::Internal(
                "harpoon operator of a character is outside the commutant".into(),
            ));
        }
    }
    // multiplicativity of both maps on the basis
    for a in &basis {
        for b in &basis {
            let prod = h.dual_product(a, b);
            let lhs = right_conv_matrix(h, &h.dual_antipode_apply(a))
                .matmul(&right_conv_matrix(h, &h.dual_antipode_apply(b)));
            let rhs = right_conv_matrix(h, &h.dual_antipode_apply(&prod));
            if lhs != rhs {
                return Err(HopfError::Internal(
                    "right-convolution map is not multiplicative".into(),
                ));
            }
            // the harpoon map reverses products: S*(a) S*(b) = S*(b a), so
            // it is an anti-isomorphism onto its image (and an isomorphism
            // whenever the character ring is commutative)
            let lhs = harpoon_matrix(h, a).matmul(&harpoon_matrix(h, b));
            let rhs = harpoon_matrix(h, &h.dual_product(b, a));
            if lhs != rhs {
                return Err(HopfError::Internal(
                    "harpoon map does not reverse convolution products".into(),
                ));
            }
        }
    }
    // the counit maps to the identity
    let id = right_conv_matrix(h, &h.dual_antipode_apply(h.counit_vec()));
    if !id.is_identity() {
        return Err(HopfError::Internal(
            "counit does not map to the identity operator".into(),
        ));
    }
    Ok(())
}

/// The isotypic components `H* E_i`, verified to decompose `H*` and to be
/// stable under the action and the commutant.
pub fn isotypic_components(
    h: &Hopf,
    ring: &CharRing,
    act: &DoubleAction,
    comm: &CommutantBasis,
) -> Result<Vec<SubspaceC>> {
    if act.carrier != Carrier::OnDual {
        return Err(HopfError::InvalidInput(
            "isotypic components are computed on the dual carrier".into(),
        ));
    }
    let n = h.dim();
    let mut comps = Vec::with_capacity(ring.idempotents.len());
    for e in &ring.idempotents {
        let vecs: Vec<CycVec> = (0..n)
            .map(|k| h.dual_product(&unit_vec(n, k), e))
            .collect();
        comps.push(SubspaceC::from_vectors(n, &vecs));
    }
    let mut total = SubspaceC::zero_space(n);
    let mut dims = 0;
    for c in &comps {
        total = total.sum(c)?;
        dims += c.dim();
    }
    if dims != n || total.dim() != n {
        return Err(HopfError::Internal(
            "isotypic components do not decompose the dual".into(),
        ));
    }
    for c in &comps {
        for m in act.act_alg.iter().chain(act.act_dual.iter()) {
            for v in c.basis_vectors() {
                if !c.contains_vec(&m.apply(&v)) {
                    return Err(HopfError::Internal(
                        "isotypic component is not action stable".into(),
                    ));
                }
            }
        }
        for x in &comm.matrices {
            for v in c.basis_vectors() {
                if !c.contains_vec(&x.apply(&v)) {
                    return Err(HopfError::Internal(
                        "isotypic component is not commutant stable".into(),
                    ));
                }
            }
        }
    }
    Ok(comps)
}

/// Check that the Fourier transform intertwines both generator families.
pub fn fourier_equivariance(
    four: &Fourier,
    on_dual: &DoubleAction,
    on_alg: &DoubleAction,
) -> Result<()> {
    let n = on_dual.h.dim();
    for j in 0..n {
        let lhs = four.forward.matmul(&on_alg.act_alg[j]);
        let rhs = on_dual.act_alg[j].matmul(&four.forward);
        if lhs != rhs {
            return Err(HopfError::Internal(format!(
                "Fourier does not intertwine the algebra action at index {j}"
            )));
        }
    }
    for i in 0..n {
        let lhs = four.forward.matmul(&on_alg.act_dual[i]);
        let rhs = on_dual.act_dual[i].matmul(&four.forward);
        if lhs != rhs {
            return Err(HopfError::Internal(format!(
                "Fourier does not intertwine the dual action at index {i}"
            )));
        }
    }
    Ok(())
}

/// Verify that F carries each isotypic piece of the algebra carrier onto an
/// isotypic component of the dual carrier.
pub fn fourier_maps_components(
    h: &Hopf,
    four: &Fourier,
    ring: &CharRing,
    dual_components: &[SubspaceC],
) -> Result<()> {
    let n = h.dim();
    for e in &ring.idempotents {
        // component of the algebra carrier: S*(E) harpooned into H
        let m = harpoon_matrix(h, e);
        let vecs: Vec<CycVec> = (0..n).map(|b| m.apply(&unit_vec(n, b))).collect();
        let comp = SubspaceC::from_vectors(n, &vecs);
        let image_vecs: Vec<CycVec> = comp
            .basis_vectors()
            .iter()
            .map(|v| four.forward.apply(v))
            .collect();
        let image = SubspaceC::from_vectors(n, &image_vecs);
        if !dual_components.iter().any(|c| c.equals(&image).unwrap_or(false)) {
            return Err(HopfError::Internal(
                "Fourier image of an algebra-side component is not a dual component".into(),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charint::{char_ring, fourier, integrals, irr_characters};
    use crate::groups::catalog_hopf;

    #[test]
    fn group_part_acts_by_conjugation_on_ks3() {
        let h = catalog_hopf("S3").unwrap();
        let (_, on_alg) = a0_actions(&h).unwrap();
        // g.x = g x g^{-1} for group basis elements
        let g = 4; // (123)
        let x = 1; // (12)
        let gx = h.product(&unit_vec(6, g), &unit_vec(6, x));
        let conj = h.product(&gx, &h.antipode_matrix().col_vec(g));
        assert_eq!(on_alg.act_alg[g].apply(&unit_vec(6, x)), conj);
    }

    #[test]
    fn dual_delta_action_on_c2() {
        let h = catalog_hopf("C2").unwrap();
        let (_, on_alg) = a0_actions(&h).unwrap();
        // f.x = sum f(S^{-1} x_1) x_2 with f = delta_g, x = g gives g
        let out = on_alg.act_dual[1].apply(&unit_vec(2, 1));
        assert_eq!(out, unit_vec(2, 1));
    }

    #[test]
    fn commutant_dimensions_for_s3_both_carriers() {
        let h = catalog_hopf("S3").unwrap();
        let (on_dual, on_alg) = a0_actions(&h).unwrap();
        let cd = commutant(&on_dual).unwrap();
        let ca = commutant(&on_alg).unwrap();
        assert_eq!(cd.matrices.len(), 3);
        assert_eq!(ca.matrices.len(), 3);
        let irr = irr_characters(&h).unwrap();
        let ring = char_ring(&h, &irr).unwrap();
        verify_commutant_maps(&h, &ring.space, &cd, &ca).unwrap();
    }

    #[test]
    fn commutant_dimension_for_dual_s3_is_six() {
        let h = catalog_hopf("dual:S3").unwrap();
        let (on_dual, on_alg) = a0_actions(&h).unwrap();
        let cd = commutant(&on_dual).unwrap();
        let ca = commutant(&on_alg).unwrap();
        assert_eq!(cd.matrices.len(), 6);
        assert_eq!(ca.matrices.len(), 6);
        // the character ring is all of kS3 here, so this exercises the
        // product-reversing branch of the harpoon map
        let irr = irr_characters(&h).unwrap();
        let ring = char_ring(&h, &irr).unwrap();
        verify_commutant_maps(&h, &ring.space, &cd, &ca).unwrap();
    }

    #[test]
    fn isotypic_components_of_ks3() {
        let h = catalog_hopf("S3").unwrap();
        let (on_dual, on_alg) = a0_actions(&h).unwrap();
        let irr = irr_characters(&h).unwrap();
        let ring = char_ring(&h, &irr).unwrap();
        let comm = commutant(&on_dual).unwrap();
        let comps = isotypic_components(&h, &ring, &on_dual, &comm).unwrap();
        let mut dims: Vec<usize> = comps.iter().map(|c| c.dim()).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2, 3]);
        let ints = integrals(&h).unwrap();
        let four = fourier(&h, &ints).unwrap();
        fourier_equivariance(&four, &on_dual, &on_alg).unwrap();
        fourier_maps_components(&h, &four, &ring, &comps).unwrap();
    }

    #[test]
    fn equivariance_for_small_catalog() {
        for name in ["C2", "C3", "dual:S3"] {
            let h = catalog_hopf(name).unwrap();
            let (on_dual, on_alg) = a0_actions(&h).unwrap();
            let ints = integrals(&h).unwrap();
            let four = fourier(&h, &ints).unwrap();
            fourier_equivariance(&four, &on_dual, &on_alg).unwrap();
        }
    }
}
