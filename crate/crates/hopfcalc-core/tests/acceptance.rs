//! End-to-end acceptance: seven exact criteria over the whole catalog, with
//! one printed pass/fail line each. Run with `--nocapture` to see the lines.

use hopfcalc_core::charint::{
    char_ring, fourier, integrals, irr_characters, matrix_coalgebras, regular_character,
    verify_fourier_identities, center_basis,
};
use hopfcalc_core::cyclotomic::CycNumber;
use hopfcalc_core::double_rep::{
    a0_actions, commutant, fourier_equivariance, isotypic_components, verify_commutant_maps,
};
use hopfcalc_core::groups::{base_names, catalog_hopf, group_table, is_normal_subgroup, subgroups};
use hopfcalc_core::indres::{
    c1_c2, equivalence_classes, image_of_induction, image_of_restriction, indres_data,
    normal_formulas_check, verify_induction_identities,
};
use hopfcalc_core::linalg::{unit_vec, vec_add, vec_axpy, vec_scale, zero_vec, SubspaceC};
use hopfcalc_core::subnormal::{
    ad_invariance, conormal_test, is_normal, subgroup_hopf, IdealSpec, SubcoalgebraSpec,
};

const CATALOG: [&str; 16] = [
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "V4", "S3", "D4", "Q8", "dual:S3", "dual:Q8",
    "double:C2", "double:C3", "double:S3",
];

fn criterion(name: &str, f: impl FnOnce() -> Result<(), String>) {
    match f() {
        Ok(()) => println!("PASS: {name}"),
        Err(e) => {
            println!("FAIL: {name}: {e}");
            panic!("{name}: {e}");
        }
    }
}

fn err<T, E: std::fmt::Display>(r: Result<T, E>, ctx: &str) -> Result<T, String> {
    r.map_err(|e| format!("{ctx}: {e}"))
}

/// Identity, inverses, and conjugacy classes of a multiplication table.
fn classes_of(table: &[Vec<usize>]) -> (usize, Vec<Vec<usize>>) {
    let n = table.len();
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .unwrap();
    let inv: Vec<usize> = (0..n)
        .map(|g| (0..n).find(|&k| table[g][k] == identity).unwrap())
        .collect();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for g in 0..n {
        if seen[g] {
            continue;
        }
        let mut class: Vec<usize> = (0..n).map(|x| table[table[x][g]][inv[x]]).collect();
        class.sort_unstable();
        class.dedup();
        for &m in &class {
            seen[m] = true;
        }
        classes.push(class);
    }
    (identity, classes)
}

#[test]
fn axioms_and_basics() {
    criterion("axioms and basics", || {
        for name in CATALOG {
            let h = err(catalog_hopf(name), name)?;
            let n = h.dim();
            let axioms = h.verify_axioms();
            if !axioms.all_passed() {
                return Err(format!(
                    "{name}: axiom {} fails",
                    axioms.first_failure().unwrap().name
                ));
            }
            let s = h.antipode_matrix();
            if !s.matmul(s).is_identity() {
                return Err(format!("{name}: the antipode is not an involution"));
            }
            let ints = err(integrals(&h), name)?;
            if h.eval(&ints.t, &ints.lambda) != CycNumber::rational(1, n as i64) {
                return Err(format!("{name}: t(lambda) differs from 1/{n}"));
            }
            // dim * t = sum deg(chi) chi = trace of left multiplication
            let irr = err(irr_characters(&h), name)?;
            let mut total = zero_vec(n);
            for chi in &irr {
                vec_axpy(&mut total, &chi.degree, &chi.values);
            }
            let dim = CycNumber::from_i64(n as i64);
            if total != vec_scale(&ints.t, &dim) || total != regular_character(&h) {
                return Err(format!("{name}: the regular character identity fails"));
            }
            // dim * lambda = sum over simple subcoalgebras of q * d
            let mcs = err(matrix_coalgebras(&h), name)?;
            let mut dual_total = zero_vec(n);
            for mc in &mcs {
                vec_axpy(&mut dual_total, &CycNumber::from_i64(mc.q as i64), &mc.d);
            }
            if dual_total != vec_scale(&ints.lambda, &dim) {
                return Err(format!("{name}: the dual regular identity fails"));
            }
        }
        Ok(())
    });
}

#[test]
fn fourier_transform() {
    criterion("fourier transform", || {
        for name in CATALOG {
            let h = err(catalog_hopf(name), name)?;
            let ints = err(integrals(&h), name)?;
            let four = err(fourier(&h, &ints), name)?;
            if !four.inverse.matmul(&four.forward).is_identity() {
                return Err(format!("{name}: the transform is not bijective"));
            }
            let mcs = err(matrix_coalgebras(&h), name)?;
            let irr = err(irr_characters(&h), name)?;
            let ring = err(char_ring(&h, &irr), name)?;
            err(
                verify_fourier_identities(&h, &ints, &four, &mcs, &ring.space),
                name,
            )?;
            if ["C2", "C3", "S3", "dual:S3"].contains(&name) {
                let (on_dual, on_alg) = err(a0_actions(&h), name)?;
                err(fourier_equivariance(&four, &on_dual, &on_alg), name)?;
            }
        }
        Ok(())
    });
}

#[test]
fn double_commutant() {
    criterion("double commutant", || {
        for name in CATALOG {
            let h = err(catalog_hopf(name), name)?;
            let (on_dual, on_alg) = err(a0_actions(&h), name)?;
            let comm_dual = err(commutant(&on_dual), name)?;
            let comm_alg = err(commutant(&on_alg), name)?;
            let irr = err(irr_characters(&h), name)?;
            let ring = err(char_ring(&h, &irr), name)?;
            if comm_dual.matrices.len() != ring.space.dim() {
                return Err(format!(
                    "{name}: commutant dimension {} differs from dim C(H) = {}",
                    comm_dual.matrices.len(),
                    ring.space.dim()
                ));
            }
            // includes multiplicativity of the convolution map on a basis
            err(
                verify_commutant_maps(&h, &ring.space, &comm_dual, &comm_alg),
                name,
            )?;
            let comps = err(
                isotypic_components(&h, &ring, &on_dual, &comm_dual),
                name,
            )?;
            let total: usize = comps.iter().map(|c| c.dim()).sum();
            if total != h.dim() {
                return Err(format!("{name}: component dimensions sum to {total}"));
            }
            if name == "S3" {
                let mut dims: Vec<usize> = comps.iter().map(|c| c.dim()).collect();
                dims.sort_unstable();
                if dims != [1, 2, 3] {
                    return Err(format!("S3: component dimensions {dims:?}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn normality_criteria() {
    criterion("normality criteria", || {
        // three-verdict agreement with the group-theoretic answer
        for base in base_names() {
            let table = err(group_table(base), base)?;
            let h = err(catalog_hopf(base), base)?;
            for members in subgroups(&table.table) {
                let k = err(subgroup_hopf(&h, &members), base)?;
                let report = err(is_normal(&k), base)?;
                let verdict = err(report.verdict(), base)?;
                if verdict != is_normal_subgroup(&table.table, &members) {
                    return Err(format!("{base}: verdict mismatch on {members:?}"));
                }
            }
        }
        // two-verdict agreement on class-span subcoalgebras (the functions
        // themselves error on disagreement)
        for base in ["S3", "D4", "Q8"] {
            let table = err(group_table(base), base)?;
            let h = err(catalog_hopf(base), base)?;
            let (_, classes) = classes_of(&table.table);
            let n = h.dim();
            for class in &classes {
                let vecs: Vec<_> = class.iter().map(|&g| unit_vec(n, g)).collect();
                let spec = err(
                    SubcoalgebraSpec::new(h.clone(), SubspaceC::from_vectors(n, &vecs)),
                    base,
                )?;
                if !err(ad_invariance(&spec), base)? {
                    return Err(format!("{base}: class span not invariant"));
                }
            }
        }
        {
            let h = err(catalog_hopf("dual:S3"), "dual:S3")?;
            let n = h.dim();
            for mc in err(matrix_coalgebras(&h), "dual:S3")? {
                let spec = err(SubcoalgebraSpec::new(h.clone(), mc.span(n)), "dual:S3")?;
                if !err(ad_invariance(&spec), "dual:S3")? {
                    return Err("dual:S3: a simple subcoalgebra not invariant".into());
                }
            }
        }
        // function ideals on S3: class-union supports are co-normal, every
        // partial-class support is not
        {
            let hd = err(catalog_hopf("dual:S3"), "dual:S3")?;
            let n = hd.dim();
            let table = err(group_table("S3"), "S3")?;
            let (identity, classes) = classes_of(&table.table);
            let m = classes.len();
            for mask in 1..(1u32 << m) - 1 {
                let support: Vec<usize> = classes
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .flat_map(|(_, c)| c.iter().copied())
                    .collect();
                let vecs: Vec<_> = support.iter().map(|&g| unit_vec(n, g)).collect();
                let ideal = err(
                    IdealSpec::new(hd.clone(), SubspaceC::from_vectors(n, &vecs)),
                    "dual:S3",
                )?;
                let verdict = err(err(conormal_test(&ideal), "dual:S3")?.verdict(), "dual:S3")?;
                if !verdict {
                    return Err(format!("dual:S3: class support {support:?} not co-normal"));
                }
            }
            for class in classes.iter().filter(|c| c.len() > 1) {
                let g = class[0];
                let vecs = vec![unit_vec(n, g), unit_vec(n, identity)];
                let ideal = err(
                    IdealSpec::new(hd.clone(), SubspaceC::from_vectors(n, &vecs)),
                    "dual:S3",
                )?;
                let verdict = err(err(conormal_test(&ideal), "dual:S3")?.verdict(), "dual:S3")?;
                if verdict {
                    return Err(format!("dual:S3: partial support {{e,{g}}} co-normal"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn induction_restriction() {
    criterion("induction and restriction", || {
        let mut pairs = 0usize;
        for base in base_names() {
            let table = err(group_table(base), base)?;
            let h = err(catalog_hopf(base), base)?;
            for members in subgroups(&table.table) {
                let k = err(subgroup_hopf(&h, &members), base)?;
                let data = err(indres_data(&k), base)?;
                // Frobenius reciprocity, the index-scaling identities, the
                // projection formula, the induced-module oracle, and both
                // span inclusions, for every irreducible pair
                err(verify_induction_identities(&data), base)?;
                pairs += 1;
            }
        }
        if pairs < 40 {
            return Err(format!("only {pairs} subalgebra pairs exercised"));
        }
        Ok(())
    });
}

#[test]
fn normal_case_theorems() {
    criterion("normal-case theorems", || {
        let mut normal_pairs = 0usize;
        for base in base_names() {
            let table = err(group_table(base), base)?;
            let h = err(catalog_hopf(base), base)?;
            for members in subgroups(&table.table) {
                if !is_normal_subgroup(&table.table, &members) {
                    continue;
                }
                let k = err(subgroup_hopf(&h, &members), base)?;
                let data = err(indres_data(&k), base)?;
                let classes = err(equivalence_classes(&data), base)?;
                err(normal_formulas_check(&data, &classes), base)?;
                let (c1, c2) = err(c1_c2(&data), base)?;
                err(image_of_induction(&data, &c1), base)?;
                err(image_of_restriction(&data, &c1), base)?;
                normal_pairs += 1;
                if base == "S3" && k.dim() == 3 {
                    if c1.dim() != 2 || c2.dim() != 1 {
                        return Err(format!(
                            "index-two pair: dim C1 = {}, dim C2 = {}",
                            c1.dim(),
                            c2.dim()
                        ));
                    }
                    let eps_up = data.ind(data.sub_hopf.counit_vec());
                    let sgn = data
                        .irr_h
                        .iter()
                        .find(|c| c.degree.is_one() && c.values != *h.counit_vec())
                        .ok_or("no sign character")?;
                    if eps_up != vec_add(h.counit_vec(), &sgn.values) {
                        return Err("induced counit differs from 1 + sgn".into());
                    }
                }
            }
        }
        if normal_pairs < 20 {
            return Err(format!("only {normal_pairs} normal pairs exercised"));
        }
        Ok(())
    });
}

#[test]
fn splitting_certification() {
    criterion("splitting certification", || {
        for name in CATALOG {
            let h = err(catalog_hopf(name), name)?;
            let n = h.dim();
            let irr = err(irr_characters(&h), name)?;
            let zdim = center_basis(&h).len();
            if irr.len() != zdim {
                return Err(format!(
                    "{name}: {} idempotents for a center of dimension {zdim}",
                    irr.len()
                ));
            }
            let mut total = zero_vec(n);
            for (a, ca) in irr.iter().enumerate() {
                let e = &ca.idempotent;
                if h.product(e, e) != *e {
                    return Err(format!("{name}: idempotent {a} fails e^2 = e"));
                }
                for i in 0..n {
                    let b = unit_vec(n, i);
                    if h.product(e, &b) != h.product(&b, e) {
                        return Err(format!("{name}: idempotent {a} is not central"));
                    }
                }
                for (bidx, cb) in irr.iter().enumerate() {
                    if a != bidx
                        && !h.product(e, &cb.idempotent).iter().all(|c| c.is_zero())
                    {
                        return Err(format!("{name}: idempotents {a}, {bidx} not orthogonal"));
                    }
                }
                vec_axpy(&mut total, &CycNumber::one(), e);
            }
            if total != *h.unit_vec() {
                return Err(format!("{name}: idempotents do not sum to 1"));
            }
        }
        Ok(())
    });
}
