//! Hopf subalgebras, subcoalgebras, and two-sided ideals, with exact tests
//! for normality, ad-invariance, and co-normality, and the splitting of the
//! dual into the Fourier image of a subalgebra and its annihilator.

use crate::charint::{fourier, integrals, matrix_coalgebras};
use crate::cyclotomic::CycNumber;
use crate::double_rep::CommutantBasis;
use crate::error::{HopfError, Result};
use crate::hopf::{dual_hopf, ComultTriples, FiniteDimHopf, Hopf};
use crate::linalg::{unit_vec, vec_axpy, vec_scale, zero_vec, CycVec, MatrixC, SubspaceC};

/// A Hopf subalgebra, held as a subspace of the parent with exact closure
/// certificates for multiplication, unit, comultiplication, and antipode.
#[derive(Debug, Clone)]
pub struct SubHopf {
    pub parent: Hopf,
    pub space: SubspaceC,
}

/// A subcoalgebra: a subspace with `Delta(C) ⊆ C ⊗ C`.
#[derive(Debug, Clone)]
pub struct SubcoalgebraSpec {
    pub parent: Hopf,
    pub space: SubspaceC,
}

/// A two-sided ideal: `HI ⊆ I` and `IH ⊆ I`.
#[derive(Debug, Clone)]
pub struct IdealSpec {
    pub parent: Hopf,
    pub space: SubspaceC,
}

/// True when the comultiplication of every basis vector of `space` lies in
/// `space ⊗ space`.
fn comult_closed(h: &Hopf, space: &SubspaceC) -> bool {
    let n = h.dim();
    for v in space.basis_vectors() {
        let t = h.comult_tensor(&v);
        // both legs must stay inside the subspace: rows span the second-leg
        // image, columns the first-leg image
        for p in 0..n {
            let row: CycVec = (0..n).map(|q| t.get(p, q).clone()).collect();
            let col: CycVec = (0..n).map(|q| t.get(q, p).clone()).collect();
            if !space_contains_or_zero(space, &row) || !space_contains_or_zero(space, &col) {
                return false;
            }
        }
    }
    true
}

fn space_contains_or_zero(space: &SubspaceC, v: &[CycNumber]) -> bool {
    v.iter().all(|c| c.is_zero()) || space.contains_vec(v)
}

impl SubHopf {
    /// Build with certificate verification.
    pub fn new(parent: Hopf, space: SubspaceC) -> Result<Self> {
        let n = parent.dim();
        if space.ambient() != n {
            return Err(HopfError::DimensionMismatch(n, space.ambient()));
        }
        if !space.contains_vec(parent.unit_vec()) {
            return Err(HopfError::NotClosed("unit outside the subspace".into()));
        }
        let basis = space.basis_vectors();
        for a in &basis {
            for b in &basis {
                if !space.contains_vec(&parent.product(a, b)) {
                    return Err(HopfError::NotClosed(
                        "subspace not closed under multiplication".into(),
                    ));
                }
            }
            if !space.contains_vec(&parent.antipode_apply(a)) {
                return Err(HopfError::NotClosed(
                    "subspace not closed under the antipode".into(),
                ));
            }
        }
        if !comult_closed(&parent, &space) {
            return Err(HopfError::NotClosed(
                "comultiplication leaves the subspace".into(),
            ));
        }
        Ok(SubHopf { parent, space })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Express the subalgebra as a standalone Hopf algebra together with the
    /// inclusion matrix (columns are the chosen basis in parent coordinates).
    pub fn as_hopf(&self) -> Result<(Hopf, MatrixC)> {
        let h = &self.parent;
        let n = h.dim();
        let r = self.dim();
        let basis = self.space.basis_vectors();
        let coords = |v: &[CycNumber]| -> Result<CycVec> {
            self.space
                .coords(v)
                .ok_or_else(|| HopfError::Internal("vector left the subalgebra".into()))
        };
        let mut mult = Vec::with_capacity(r);
        for a in &basis {
            let mut row = Vec::with_capacity(r);
            for b in &basis {
                row.push(coords(&h.product(a, b))?);
            }
            mult.push(row);
        }
        let unit = coords(h.unit_vec())?;
        let counit: CycVec = basis.iter().map(|a| h.counit_of(a)).collect();
        let mut antipode = MatrixC::zero(r, r);
        for (j, a) in basis.iter().enumerate() {
            for (i, c) in coords(&h.antipode_apply(a))?.into_iter().enumerate() {
                antipode.set(i, j, c);
            }
        }
        let mut comult: Vec<ComultTriples> = Vec::with_capacity(r);
        for a in &basis {
            let t = h.comult_tensor(a);
            // first express the second leg in subalgebra coordinates, then
            // the first leg
            let mut half = vec![zero_vec(r); n];
            for (p, slot) in half.iter_mut().enumerate() {
                let row: CycVec = (0..n).map(|q| t.get(p, q).clone()).collect();
                if row.iter().all(|c| c.is_zero()) {
                    continue;
                }
                *slot = coords(&row)?;
            }
            let mut triples = Vec::new();
            for k in 0..r {
                let col: CycVec = (0..n).map(|p| half[p][k].clone()).collect();
                if col.iter().all(|c| c.is_zero()) {
                    continue;
                }
                for (j, c) in coords(&col)?.into_iter().enumerate() {
                    if !c.is_zero() {
                        triples.push((j, k, c));
                    }
                }
            }
            triples.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
            comult.push(triples);
        }
        let labels = (0..r).map(|i| format!("k{i}")).collect();
        let hopf =
            FiniteDimHopf::from_parts(labels, h.conductor(), mult, unit, comult, counit, antipode)
                .verified()?;
        let mut incl = MatrixC::zero(n, r);
        for (j, a) in basis.iter().enumerate() {
            for (i, c) in a.iter().enumerate() {
                incl.set(i, j, c.clone());
            }
        }
        Ok((hopf, incl))
    }
}

impl SubcoalgebraSpec {
    pub fn new(parent: Hopf, space: SubspaceC) -> Result<Self> {
        if space.ambient() != parent.dim() {
            return Err(HopfError::DimensionMismatch(parent.dim(), space.ambient()));
        }
        if !comult_closed(&parent, &space) {
            return Err(HopfError::NotClosed(
                "subspace is not a subcoalgebra".into(),
            ));
        }
        Ok(SubcoalgebraSpec { parent, space })
    }
}

impl IdealSpec {
    pub fn new(parent: Hopf, space: SubspaceC) -> Result<Self> {
        let n = parent.dim();
        if space.ambient() != n {
            return Err(HopfError::DimensionMismatch(n, space.ambient()));
        }
        for v in space.basis_vectors() {
            for j in 0..n {
                let e = unit_vec(n, j);
                if !space.contains_vec(&parent.product(&e, &v))
                    || !space.contains_vec(&parent.product(&v, &e))
                {
                    return Err(HopfError::NotClosed(
                        "subspace is not a two-sided ideal".into(),
                    ));
                }
            }
        }
        Ok(IdealSpec { parent, space })
    }
}

/// The Hopf subalgebra spanned by the subgroup generated by basis indices of
/// a group algebra (more generally, any algebra whose basis is closed under
/// multiplication on the given indices).
pub fn subgroup_hopf(h: &Hopf, generators: &[usize]) -> Result<SubHopf> {
    let n = h.dim();
    let unit_idx = (0..n)
        .find(|&i| h.unit_vec() == &unit_vec(n, i))
        .ok_or_else(|| HopfError::InvalidInput("unit is not a basis element".into()))?;
    let single = |v: &CycVec| -> Option<usize> {
        let mut idx = None;
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                if idx.is_some() || !c.is_one() {
                    return None;
                }
                idx = Some(i);
            }
        }
        idx
    };
    let mut members = vec![false; n];
    members[unit_idx] = true;
    let mut stack: Vec<usize> = vec![unit_idx];
    for &g in generators {
        if g >= n {
            return Err(HopfError::InvalidInput(format!("index {g} out of range")));
        }
        if !members[g] {
            members[g] = true;
            stack.push(g);
        }
    }
    let mut frontier = stack;
    while let Some(a) = frontier.pop() {
        for b in 0..n {
            if !members[b] {
                continue;
            }
            for prod in [h.mult_vec(a, b), h.mult_vec(b, a)] {
                let k = single(prod).ok_or_else(|| {
                    HopfError::NotAGroup("basis product is not a basis element".into())
                })?;
                if !members[k] {
                    members[k] = true;
                    frontier.push(k);
                }
            }
        }
    }
    let vecs: Vec<CycVec> = members
        .iter()
        .enumerate()
        .filter(|(_, m)| **m)
        .map(|(i, _)| unit_vec(n, i))
        .collect();
    SubHopf::new(h.clone(), SubspaceC::from_vectors(n, &vecs))
}

/// The adjoint image `sum a_1 x S(a_2)` of `x` under the basis element `a_j`.
fn adjoint_apply(h: &Hopf, j: usize, x: &[CycNumber]) -> CycVec {
    let n = h.dim();
    let mut out = zero_vec(n);
    for (a1, a2, c) in h.comult_triples(j) {
        let left = h.product(&unit_vec(n, *a1), x);
        let full = h.product(&left, &h.antipode_matrix().col_vec(*a2));
        vec_axpy(&mut out, c, &full);
    }
    out
}

fn is_central(h: &Hopf, v: &[CycNumber]) -> bool {
    let n = h.dim();
    (0..n).all(|j| {
        let e = unit_vec(n, j);
        h.product(v, &e) == h.product(&e, v)
    })
}

/// Three independent verdicts on normality of a Hopf subalgebra.
#[derive(Debug, Clone)]
pub struct NormalityReport {
    /// `sum a_1 x S(a_2)` stays in `K` for every basis `a` of `H`, `x` of `K`.
    pub adjoint_closed: bool,
    /// The normalized integral of `K` is central in `H`.
    pub integral_central: bool,
    /// The comodule character of `K` is central in `H`.
    pub character_central: bool,
}

impl NormalityReport {
    pub fn verdict(&self) -> Result<bool> {
        if self.adjoint_closed == self.integral_central
            && self.integral_central == self.character_central
        {
            Ok(self.adjoint_closed)
        } else {
            Err(HopfError::VerdictDisagreement(format!(
                "normality verdicts disagree: adjoint={}, integral={}, character={}",
                self.adjoint_closed, self.integral_central, self.character_central
            )))
        }
    }
}

/// Decide normality of `K` three ways; the verdicts must agree.
pub fn is_normal(k: &SubHopf) -> Result<NormalityReport> {
    let h = &k.parent;
    let n = h.dim();
    let basis = k.space.basis_vectors();
    let adjoint_closed = (0..n).all(|j| {
        basis
            .iter()
            .all(|x| space_contains_or_zero(&k.space, &adjoint_apply(h, j, x)))
    });

    let (kh, incl) = k.as_hopf()?;
    let ints_k = integrals(&kh)?;
    let lambda_in_h = incl.apply(&ints_k.lambda);
    let integral_central = is_central(h, &lambda_in_h);

    let spec = SubcoalgebraSpec::new(h.clone(), k.space.clone())?;
    let d = coalgebra_character(&spec)?;
    let character_central = is_central(h, &d);

    let report = NormalityReport {
        adjoint_closed,
        integral_central,
        character_central,
    };
    report.verdict()?;
    Ok(report)
}

/// The character `d_C` of `C` as a left `H`-comodule: the partial trace of
/// the coaction `C -> H ⊗ C`. For a full simple subcoalgebra this equals
/// `epsilon(d) d`; for a group-like span it is the sum of the group-likes.
pub fn coalgebra_character(c: &SubcoalgebraSpec) -> Result<CycVec> {
    let h = &c.parent;
    let n = h.dim();
    let basis = c.space.basis_vectors();
    let mut d = zero_vec(n);
    for v in &basis {
        let t = h.comult_tensor(v);
        // second leg in C coordinates, first leg kept in H
        for p in 0..n {
            let row: CycVec = (0..n).map(|q| t.get(p, q).clone()).collect();
            if row.iter().all(|x| x.is_zero()) {
                continue;
            }
            let coords = c
                .space
                .coords(&row)
                .ok_or_else(|| HopfError::NotClosed("coaction leaves the subspace".into()))?;
            // contribution of e_p times the coefficient of v itself
            let vc = c
                .space
                .coords(v)
                .ok_or_else(|| HopfError::Internal("basis vector lost its coordinates".into()))?;
            let mut weight = CycNumber::zero();
            for (a, b) in coords.iter().zip(vc.iter()) {
                weight += &(a * b);
            }
            if !weight.is_zero() {
                d[p] += &weight;
            }
        }
    }
    Ok(d)
}

/// Ad-invariance of a subcoalgebra, decided directly and via centrality of
/// its comodule character; both verdicts must agree.
pub fn ad_invariance(c: &SubcoalgebraSpec) -> Result<bool> {
    let h = &c.parent;
    let n = h.dim();
    let direct = (0..n).all(|j| {
        c.space
            .basis_vectors()
            .iter()
            .all(|x| space_contains_or_zero(&c.space, &adjoint_apply(h, j, x)))
    });
    let central = is_central(h, &coalgebra_character(c)?);
    if direct != central {
        return Err(HopfError::VerdictDisagreement(format!(
            "ad-invariance verdicts disagree: direct={direct}, character-central={central}"
        )));
    }
    Ok(direct)
}

/// Character of a left `H`-module given by a stable subspace: the trace of
/// left multiplication restricted to the subspace, as an element of `H*`.
pub(crate) fn module_character(h: &Hopf, space: &SubspaceC) -> Result<CycVec> {
    let n = h.dim();
    let basis = space.basis_vectors();
    let mut chi = zero_vec(n);
    for (j, slot) in chi.iter_mut().enumerate() {
        let e = unit_vec(n, j);
        let mut tr = CycNumber::zero();
        for (i, v) in basis.iter().enumerate() {
            let image = h.product(&e, v);
            let coords = space
                .coords(&image)
                .ok_or_else(|| HopfError::NotClosed("subspace is not left stable".into()))?;
            tr += &coords[i];
        }
        *slot = tr;
    }
    Ok(chi)
}

/// Three verdicts on co-normality of a two-sided ideal; they must agree.
#[derive(Debug, Clone)]
pub struct ConormalReport {
    /// `sum S(v_3) v_1 ⊗ v_2` lies in `H ⊗ I` for every `v` in `I`.
    pub direct: bool,
    /// The character of `I` as a left `H`-module is central in `H*`.
    pub character_central: bool,
    /// `I^perp` is an ad-invariant subcoalgebra of `H*`.
    pub perp_ad_invariant: bool,
}

impl ConormalReport {
    pub fn verdict(&self) -> Result<bool> {
        if self.direct == self.character_central && self.character_central == self.perp_ad_invariant
        {
            Ok(self.direct)
        } else {
            Err(HopfError::VerdictDisagreement(format!(
                "co-normality verdicts disagree: direct={}, character={}, perp={}",
                self.direct, self.character_central, self.perp_ad_invariant
            )))
        }
    }
}

pub fn conormal_test(ideal: &IdealSpec) -> Result<ConormalReport> {
    let h = &ideal.parent;
    let n = h.dim();
    let mut direct = true;
    'outer: for v in ideal.space.basis_vectors() {
        // sum over basis coefficients of v, using second-order triples
        let mut tensor = MatrixC::zero(n, n);
        for (m, vc) in v.iter().enumerate() {
            if vc.is_zero() {
                continue;
            }
            for (v1, v2, v3, c) in h.comult2_triples(m) {
                let left = h.product(&h.antipode_matrix().col_vec(v3), &unit_vec(n, v1));
                let w = vec_scale(&left, &(vc * &c));
                for (p, x) in w.into_iter().enumerate() {
                    if !x.is_zero() {
                        let cur = tensor.get(p, v2) + &x;
                        tensor.set(p, v2, cur);
                    }
                }
            }
        }
        for p in 0..n {
            let second: CycVec = (0..n).map(|q| tensor.get(p, q).clone()).collect();
            if !space_contains_or_zero(&ideal.space, &second) {
                direct = false;
                break 'outer;
            }
        }
    }

    let chi = module_character(h, &ideal.space)?;
    let hd = dual_hopf(h)?;
    let character_central = is_central(&hd, &chi);

    let perp = ideal.space.perp();
    let perp_spec = SubcoalgebraSpec::new(hd.clone(), perp)?;
    let perp_ad_invariant = ad_invariance(&perp_spec)?;

    let report = ConormalReport {
        direct,
        character_central,
        perp_ad_invariant,
    };
    report.verdict()?;
    Ok(report)
}

/// The decomposition `H* = F(K) ⊕ K^perp` with its exact verifications.
#[derive(Debug)]
pub struct DualDecomposition {
    pub fourier_image: SubspaceC,
    pub annihilator: SubspaceC,
}

/// Compute and verify the decomposition: trivial intersection, dimension
/// count, restriction compatibility of the Fourier transforms, the simple
/// component description of `F(K)` when available, and stability of both
/// summands under a commutant basis when `K` is normal.
pub fn dual_decomposition(k: &SubHopf, comm: Option<&CommutantBasis>) -> Result<DualDecomposition> {
    let h = &k.parent;
    let n = h.dim();
    let ints = integrals(h)?;
    let four = fourier(h, &ints)?;
    let basis = k.space.basis_vectors();
    let image_vecs: Vec<CycVec> = basis.iter().map(|v| four.forward.apply(v)).collect();
    let fk = SubspaceC::from_vectors(n, &image_vecs);
    let kperp = k.space.perp();
    if fk.intersect(&kperp)?.dim() != 0 {
        return Err(HopfError::Internal(
            "Fourier image meets the annihilator".into(),
        ));
    }
    if fk.dim() + kperp.dim() != n {
        return Err(HopfError::Internal(
            "Fourier image and annihilator do not fill the dual".into(),
        ));
    }

    // restriction compatibility: restricting F_H(a) to K equals F_K(a)
    let (kh, incl) = k.as_hopf()?;
    let ints_k = integrals(&kh)?;
    let four_k = fourier(&kh, &ints_k)?;
    let restrict = incl.transpose();
    for (j, a) in basis.iter().enumerate() {
        let lhs = restrict.apply(&four.forward.apply(a));
        let rhs = four_k.forward.apply(&unit_vec(k.dim(), j));
        if lhs != rhs {
            return Err(HopfError::Internal(
                "Fourier transform does not restrict compatibly".into(),
            ));
        }
    }

    // when K is a sum of full simple subcoalgebras C_d, F(K) is the sum of
    // the corresponding dual ideals H* xi_d
    let coalgebras = matrix_coalgebras(h)?;
    let inside: Vec<_> = coalgebras
        .iter()
        .filter(|mc| mc.span(n).basis_vectors().iter().all(|v| k.space.contains_vec(v)))
        .collect();
    if inside.iter().map(|mc| mc.q * mc.q).sum::<usize>() == k.dim() {
        let mut vecs = Vec::new();
        for mc in &inside {
            for p in 0..n {
                vecs.push(h.dual_product(&unit_vec(n, p), &mc.xi));
            }
        }
        let ideal_sum = SubspaceC::from_vectors(n, &vecs);
        if !fk.equals(&ideal_sum)? {
            return Err(HopfError::Internal(
                "Fourier image differs from the sum of dual ideals".into(),
            ));
        }
    }

    if let Some(comm) = comm {
        if is_normal(k)?.verdict()? {
            for x in &comm.matrices {
                for sp in [&fk, &kperp] {
                    for v in sp.basis_vectors() {
                        if !space_contains_or_zero(sp, &x.apply(&v)) {
                            return Err(HopfError::Internal(
                                "summand is not commutant stable for a normal subalgebra".into(),
                            ));
                        }
                    }
                }
            }
        }
    }

    Ok(DualDecomposition {
        fourier_image: fk,
        annihilator: kperp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double_rep::{a0_actions, commutant};
    use crate::groups::catalog_hopf;

    fn span_of(h: &Hopf, idx: &[usize]) -> SubspaceC {
        let n = h.dim();
        let vecs: Vec<CycVec> = idx.iter().map(|&i| unit_vec(n, i)).collect();
        SubspaceC::from_vectors(n, &vecs)
    }

    #[test]
    fn subgroup_lattice_and_normality_in_s3() {
        let h = catalog_hopf("S3").unwrap();
        // A3 = {e, (123), (132)} is normal
        let a3 = subgroup_hopf(&h, &[4]).unwrap();
        assert_eq!(a3.dim(), 3);
        assert!(is_normal(&a3).unwrap().verdict().unwrap());
        // <(12)> is not normal
        let c2 = subgroup_hopf(&h, &[1]).unwrap();
        assert_eq!(c2.dim(), 2);
        assert!(!is_normal(&c2).unwrap().verdict().unwrap());
        // trivial subgroup and the whole group are normal
        let triv = subgroup_hopf(&h, &[]).unwrap();
        assert_eq!(triv.dim(), 1);
        assert!(is_normal(&triv).unwrap().verdict().unwrap());
        let full = subgroup_hopf(&h, &[1, 4]).unwrap();
        assert_eq!(full.dim(), 6);
        assert!(is_normal(&full).unwrap().verdict().unwrap());
    }

    #[test]
    fn group_normality_matches_group_theory_in_d4_q8() {
        use crate::groups::{group_table, is_normal_subgroup, subgroups};
        for name in ["D4", "Q8"] {
            let h = catalog_hopf(name).unwrap();
            let table = group_table(name).unwrap();
            for sub in subgroups(&table.table) {
                let k = subgroup_hopf(&h, &sub).unwrap();
                assert_eq!(
                    is_normal(&k).unwrap().verdict().unwrap(),
                    is_normal_subgroup(&table.table, &sub),
                    "{name} subgroup {sub:?}"
                );
            }
        }
    }

    #[test]
    fn coalgebra_characters_in_group_algebras() {
        let h = catalog_hopf("S3").unwrap();
        // a single group-like
        let c = SubcoalgebraSpec::new(h.clone(), span_of(&h, &[4])).unwrap();
        assert_eq!(coalgebra_character(&c).unwrap(), unit_vec(6, 4));
        // kA3: sum of three group-likes
        let c = SubcoalgebraSpec::new(h.clone(), span_of(&h, &[0, 4, 5])).unwrap();
        let d = coalgebra_character(&c).unwrap();
        let mut expected = zero_vec(6);
        for i in [0, 4, 5] {
            expected[i] = CycNumber::one();
        }
        assert_eq!(d, expected);
    }

    #[test]
    fn simple_subcoalgebra_character_of_dual_s3() {
        use crate::charint::matrix_coalgebras;
        let h = catalog_hopf("dual:S3").unwrap();
        let mcs = matrix_coalgebras(&h).unwrap();
        let big = mcs.iter().find(|mc| mc.q == 2).unwrap();
        let c = SubcoalgebraSpec::new(h.clone(), big.span(h.dim())).unwrap();
        let d = coalgebra_character(&c).unwrap();
        assert_eq!(d, vec_scale(&big.d, &CycNumber::from_i64(2)));
    }

    #[test]
    fn ad_invariance_matches_conjugacy_classes() {
        let h = catalog_hopf("S3").unwrap();
        // transposition class is invariant
        let c = SubcoalgebraSpec::new(h.clone(), span_of(&h, &[1, 2, 3])).unwrap();
        assert!(ad_invariance(&c).unwrap());
        // a single transposition is not
        let c = SubcoalgebraSpec::new(h.clone(), span_of(&h, &[1])).unwrap();
        assert!(!ad_invariance(&c).unwrap());
        // the whole algebra is
        let c = SubcoalgebraSpec::new(h.clone(), SubspaceC::full(6)).unwrap();
        assert!(ad_invariance(&c).unwrap());
    }

    #[test]
    fn conormality_of_ideals() {
        let h = catalog_hopf("S3").unwrap();
        // augmentation ideal of kS3
        let n = h.dim();
        let vecs: Vec<CycVec> = (1..n)
            .map(|i| {
                let mut v = unit_vec(n, i);
                v[0] = -CycNumber::one();
                v
            })
            .collect();
        let ideal = IdealSpec::new(h.clone(), SubspaceC::from_vectors(n, &vecs)).unwrap();
        assert!(conormal_test(&ideal).unwrap().verdict().unwrap());

        // in k^{S3}: functions vanishing off the transposition class
        let hd = catalog_hopf("dual:S3").unwrap();
        let ideal = IdealSpec::new(hd.clone(), span_of(&hd, &[1, 2, 3])).unwrap();
        assert!(conormal_test(&ideal).unwrap().verdict().unwrap());
        // functions vanishing off a single transposition: not co-normal
        let ideal = IdealSpec::new(hd.clone(), span_of(&hd, &[1])).unwrap();
        assert!(!conormal_test(&ideal).unwrap().verdict().unwrap());
    }

    #[test]
    fn dual_decomposition_for_a3_in_s3() {
        let h = catalog_hopf("S3").unwrap();
        let a3 = subgroup_hopf(&h, &[4]).unwrap();
        let (on_dual, _) = a0_actions(&h).unwrap();
        let comm = commutant(&on_dual).unwrap();
        let dec = dual_decomposition(&a3, Some(&comm)).unwrap();
        assert_eq!(dec.fourier_image.dim(), 3);
        assert_eq!(dec.annihilator.dim(), 3);
    }

    #[test]
    fn dual_decomposition_for_trivial_subalgebra() {
        let h = catalog_hopf("S3").unwrap();
        let triv = subgroup_hopf(&h, &[]).unwrap();
        let dec = dual_decomposition(&triv, None).unwrap();
        assert_eq!(dec.fourier_image.dim(), 1);
        assert_eq!(dec.annihilator.dim(), 5);
        // F(k) is spanned by t
        let ints = integrals(&h).unwrap();
        assert!(dec.fourier_image.contains_vec(&ints.t));
    }
}
