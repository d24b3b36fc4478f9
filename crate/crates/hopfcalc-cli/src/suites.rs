//! The verification suites run by `hopfcalc verify`.

use std::time::Instant;

use anyhow::anyhow;
use hopfcalc_core::charint::{
    char_ring, fourier, integrals, irr_characters, matrix_coalgebras, regular_character,
    verify_fourier_identities, center_basis,
};
use hopfcalc_core::cyclotomic::CycNumber;
use hopfcalc_core::double_rep::{
    a0_actions, commutant, fourier_equivariance, fourier_maps_components, isotypic_components,
    verify_commutant_maps,
};
use hopfcalc_core::groups::{base_names, catalog_hopf, group_table, is_normal_subgroup, subgroups};
use hopfcalc_core::indres::{
    c1_c2, equivalence_classes, image_of_induction, image_of_restriction, indres_data,
    normal_formulas_check, verify_induction_identities,
};
use hopfcalc_core::linalg::{unit_vec, vec_add, vec_axpy, vec_scale, zero_vec, SubspaceC};
use hopfcalc_core::subnormal::{
    ad_invariance, conormal_test, is_normal, subgroup_hopf, IdealSpec, SubcoalgebraSpec,
    dual_decomposition,
};
use hopfcalc_core::{Hopf, HopfError};

use crate::report::{Reporter, Status};

/// The full catalog, in report order.
pub const CATALOG: [&str; 16] = [
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "V4", "S3", "D4", "Q8", "dual:S3", "dual:Q8",
    "double:C2", "double:C3", "double:S3",
];

/// Algebras for which the induced-module pipeline is cross-checked against
/// the Fourier transform in full.
const FOURIER_MODULE_SET: [&str; 4] = ["C2", "C3", "S3", "dual:S3"];

/// Run one fallible stage, recording a pass/fail check; on success the value
/// is returned for later stages.
fn stage<T>(
    rep: &mut Reporter,
    id: &str,
    subject: &str,
    f: impl FnOnce() -> Result<T, HopfError>,
) -> Option<T> {
    let start = Instant::now();
    match f() {
        Ok(v) => {
            rep.record(id, subject, Status::Pass, None, start.elapsed().as_millis());
            Some(v)
        }
        Err(e) => {
            rep.record(
                id,
                subject,
                Status::Fail,
                Some(e.to_string()),
                start.elapsed().as_millis(),
            );
            None
        }
    }
}

pub fn run_suite(rep: &mut Reporter, suite: &str) -> anyhow::Result<()> {
    match suite {
        "axioms" => suite_axioms(rep),
        "fourier" => suite_fourier(rep),
        "double" => suite_double(rep),
        "normality" => suite_normality(rep),
        "indres" => suite_indres(rep),
        "all" => {
            suite_axioms(rep)?;
            suite_fourier(rep)?;
            suite_double(rep)?;
            suite_normality(rep)?;
            suite_indres(rep)?;
            Ok(())
        }
        other => Err(anyhow!("unknown suite `{other}`")),
    }
}

fn suite_axioms(rep: &mut Reporter) -> anyhow::Result<()> {
    for name in CATALOG {
        let Some(h) = stage(rep, "hopf-axioms", name, || catalog_hopf(name)) else {
            continue;
        };
        let n = h.dim();
        rep.run("antipode-involutive", name, || {
            let s = h.antipode_matrix();
            if s.matmul(s).is_identity() {
                Ok(None)
            } else {
                Err(anyhow!("S^2 differs from the identity"))
            }
        });
        let Some(ints) = stage(rep, "integrals-exist", name, || integrals(&h)) else {
            continue;
        };
        rep.run("integral-normalization", name, || {
            let val = h.eval(&ints.t, &ints.lambda);
            let expect = CycNumber::rational(1, n as i64);
            if val == expect {
                Ok(Some(format!("t(lambda) = 1/{n}")))
            } else {
                Err(anyhow!("t(lambda) differs from 1/{n}"))
            }
        });
        let Some(irr) = stage(rep, "irreducible-characters", name, || irr_characters(&h))
        else {
            continue;
        };
        rep.run("regular-character-decomposition", name, || {
            // dim * t equals the regular character equals sum of deg * chi
            let reg = regular_character(&h);
            let scaled_t = vec_scale(&ints.t, &CycNumber::from_i64(n as i64));
            let mut total = zero_vec(n);
            for chi in &irr {
                vec_axpy(&mut total, &chi.degree, &chi.values);
            }
            if reg != scaled_t {
                return Err(anyhow!("dim * t is not the trace of left multiplication"));
            }
            if reg != total {
                return Err(anyhow!(
                    "sum of deg(chi) * chi differs from the regular character"
                ));
            }
            Ok(Some(format!(
                "degrees {:?}",
                irr.iter().map(|c| render(&c.degree)).collect::<Vec<_>>()
            )))
        });
        rep.run("dual-regular-decomposition", name, || {
            // dim * lambda equals the sum over simple subcoalgebras of q * d
            let mcs = matrix_coalgebras(&h).map_err(|e| anyhow!(e.to_string()))?;
            let mut total = zero_vec(n);
            for mc in &mcs {
                vec_axpy(&mut total, &CycNumber::from_i64(mc.q as i64), &mc.d);
            }
            if total == vec_scale(&ints.lambda, &CycNumber::from_i64(n as i64)) {
                Ok(Some(format!("{} simple subcoalgebras", mcs.len())))
            } else {
                Err(anyhow!("sum of q * d differs from dim * lambda"))
            }
        });
        rep.run("central-idempotents", name, || {
            let zdim = center_basis(&h).len();
            if irr.len() != zdim {
                return Err(anyhow!(
                    "found {} idempotents but the center has dimension {zdim}",
                    irr.len()
                ));
            }
            let mut total = zero_vec(n);
            for (a, ca) in irr.iter().enumerate() {
                let e = &ca.idempotent;
                if h.product(e, e) != *e {
                    return Err(anyhow!("idempotent {a} is not idempotent"));
                }
                for i in 0..n {
                    let b = unit_vec(n, i);
                    if h.product(e, &b) != h.product(&b, e) {
                        return Err(anyhow!("idempotent {a} is not central"));
                    }
                }
                for (b, cb) in irr.iter().enumerate() {
                    if a != b && !h.product(e, &cb.idempotent).iter().all(|c| c.is_zero()) {
                        return Err(anyhow!("idempotents {a} and {b} are not orthogonal"));
                    }
                }
                vec_axpy(&mut total, &CycNumber::one(), e);
            }
            if total != *h.unit_vec() {
                return Err(anyhow!("idempotents do not sum to the unit"));
            }
            Ok(Some(format!("{zdim} blocks")))
        });
    }
    Ok(())
}

fn suite_fourier(rep: &mut Reporter) -> anyhow::Result<()> {
    for name in CATALOG {
        let Some(h) = stage(rep, "catalog-build", name, || catalog_hopf(name)) else {
            continue;
        };
        let Some(ints) = stage(rep, "integrals-exist", name, || integrals(&h)) else {
            continue;
        };
        // `fourier` verifies the inversion formula internally
        let Some(four) = stage(rep, "fourier-inversion", name, || fourier(&h, &ints)) else {
            continue;
        };
        rep.run("fourier-closed-forms", name, || {
            let mcs = matrix_coalgebras(&h).map_err(|e| anyhow!(e.to_string()))?;
            let irr = irr_characters(&h).map_err(|e| anyhow!(e.to_string()))?;
            let ring = char_ring(&h, &irr).map_err(|e| anyhow!(e.to_string()))?;
            verify_fourier_identities(&h, &ints, &four, &mcs, &ring.space)
                .map_err(|e| anyhow!(e.to_string()))?;
            Ok(None)
        });
        if !FOURIER_MODULE_SET.contains(&name) {
            continue;
        }
        let Some((on_dual, on_alg)) = stage(rep, "module-construction", name, || a0_actions(&h))
        else {
            continue;
        };
        stage(rep, "fourier-equivariance", name, || {
            fourier_equivariance(&four, &on_dual, &on_alg)
        });
        stage(rep, "fourier-isotypic-matching", name, || {
            let irr = irr_characters(&h)?;
            let ring = char_ring(&h, &irr)?;
            let comm = commutant(&on_dual)?;
            let comps = isotypic_components(&h, &ring, &on_dual, &comm)?;
            fourier_maps_components(&h, &four, &ring, &comps)
        });
    }
    Ok(())
}

fn suite_double(rep: &mut Reporter) -> anyhow::Result<()> {
    for name in CATALOG {
        let Some(h) = stage(rep, "catalog-build", name, || catalog_hopf(name)) else {
            continue;
        };
        let Some((on_dual, on_alg)) = stage(rep, "module-straightening", name, || a0_actions(&h))
        else {
            continue;
        };
        let Some(comm_dual) = stage(rep, "commutant-on-dual", name, || commutant(&on_dual))
        else {
            continue;
        };
        let Some(comm_alg) = stage(rep, "commutant-on-algebra", name, || commutant(&on_alg))
        else {
            continue;
        };
        let Some(ring) = stage(rep, "character-ring", name, || {
            let irr = irr_characters(&h)?;
            char_ring(&h, &irr)
        }) else {
            continue;
        };
        rep.run("commutant-dimension", name, || {
            let s = ring.space.dim();
            if comm_dual.matrices.len() == s && comm_alg.matrices.len() == s {
                Ok(Some(format!("both commutants have dimension {s}")))
            } else {
                Err(anyhow!(
                    "commutant dimensions {} / {} differ from dim C(H) = {s}",
                    comm_dual.matrices.len(),
                    comm_alg.matrices.len()
                ))
            }
        });
        stage(rep, "commutant-ring-isomorphisms", name, || {
            verify_commutant_maps(&h, &ring.space, &comm_dual, &comm_alg)
        });
        let Some(comps) = stage(rep, "isotypic-decomposition", name, || {
            isotypic_components(&h, &ring, &on_dual, &comm_dual)
        }) else {
            continue;
        };
        if name == "S3" {
            rep.run("isotypic-dimensions", name, || {
                let mut dims: Vec<usize> = comps.iter().map(|c| c.dim()).collect();
                dims.sort_unstable();
                if dims == [1, 2, 3] {
                    Ok(Some("dimensions 1, 2, 3".into()))
                } else {
                    Err(anyhow!("unexpected component dimensions {dims:?}"))
                }
            });
        }
    }
    Ok(())
}

/// Identity element, inverses, and conjugacy classes of a multiplication
/// table.
struct TableInfo {
    identity: usize,
    classes: Vec<Vec<usize>>,
}

fn table_info(table: &[Vec<usize>]) -> TableInfo {
    let n = table.len();
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .expect("group table has an identity");
    let inv: Vec<usize> = (0..n)
        .map(|g| (0..n).find(|&k| table[g][k] == identity).expect("inverse"))
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
    classes
        .iter_mut()
        .for_each(|c| c.sort_unstable());
    TableInfo { identity, classes }
}

fn members_subject(h: &Hopf, base: &str, members: &[usize]) -> String {
    let labels: Vec<&str> = members.iter().map(|&m| h.labels()[m].as_str()).collect();
    format!("{base} >= {{{}}}", labels.join(","))
}

fn suite_normality(rep: &mut Reporter) -> anyhow::Result<()> {
    for base in base_names() {
        let table = group_table(base).map_err(|e| anyhow!(e.to_string()))?;
        let h = catalog_hopf(base).map_err(|e| anyhow!(e.to_string()))?;
        // the three-criterion verdict must match the group-theoretic answer
        for members in subgroups(&table.table) {
            let subject = members_subject(&h, base, &members);
            let expected = is_normal_subgroup(&table.table, &members);
            rep.run("subgroup-normality-criteria", &subject, || {
                let k = subgroup_hopf(&h, &members).map_err(|e| anyhow!(e.to_string()))?;
                let report = is_normal(&k).map_err(|e| anyhow!(e.to_string()))?;
                let verdict = report.verdict().map_err(|e| anyhow!(e.to_string()))?;
                if verdict != expected {
                    return Err(anyhow!(
                        "criteria say normal = {verdict}, the group structure says {expected}"
                    ));
                }
                Ok(Some(format!("normal = {verdict}, all three criteria agree")))
            });
            rep.run("dual-splitting", &subject, || {
                let k = subgroup_hopf(&h, &members).map_err(|e| anyhow!(e.to_string()))?;
                dual_decomposition(&k, None).map_err(|e| anyhow!(e.to_string()))?;
                Ok(None)
            });
        }
    }

    // conjugacy-closed subcoalgebras of group algebras are invariant under
    // the adjoint action, single non-central group elements are not
    for base in ["S3", "D4", "Q8"] {
        let table = group_table(base).map_err(|e| anyhow!(e.to_string()))?;
        let h = catalog_hopf(base).map_err(|e| anyhow!(e.to_string()))?;
        let info = table_info(&table.table);
        let n = h.dim();
        for class in &info.classes {
            let subject = members_subject(&h, base, class);
            rep.run("class-span-adjoint-invariance", &subject, || {
                let vecs: Vec<_> = class.iter().map(|&g| unit_vec(n, g)).collect();
                let space = SubspaceC::from_vectors(n, &vecs);
                let spec = SubcoalgebraSpec::new(h.clone(), space)
                    .map_err(|e| anyhow!(e.to_string()))?;
                if ad_invariance(&spec).map_err(|e| anyhow!(e.to_string()))? {
                    Ok(None)
                } else {
                    Err(anyhow!("class span reported as not invariant"))
                }
            });
        }
        if let Some(class) = info.classes.iter().find(|c| c.len() > 1) {
            let g = class[0];
            let subject = members_subject(&h, base, &[g]);
            rep.run("non-central-span-not-invariant", &subject, || {
                let space = SubspaceC::from_vectors(n, &[unit_vec(n, g)]);
                let spec = SubcoalgebraSpec::new(h.clone(), space)
                    .map_err(|e| anyhow!(e.to_string()))?;
                if ad_invariance(&spec).map_err(|e| anyhow!(e.to_string()))? {
                    Err(anyhow!("span of a non-central element reported invariant"))
                } else {
                    Ok(None)
                }
            });
        }
    }

    // every simple subcoalgebra of a commutative algebra is invariant
    {
        let h = catalog_hopf("dual:S3").map_err(|e| anyhow!(e.to_string()))?;
        let n = h.dim();
        rep.run("commutative-subcoalgebra-invariance", "dual:S3", || {
            let mcs = matrix_coalgebras(&h).map_err(|e| anyhow!(e.to_string()))?;
            for mc in &mcs {
                let spec = SubcoalgebraSpec::new(h.clone(), mc.span(n))
                    .map_err(|e| anyhow!(e.to_string()))?;
                if !ad_invariance(&spec).map_err(|e| anyhow!(e.to_string()))? {
                    return Err(anyhow!("a simple subcoalgebra reported not invariant"));
                }
            }
            Ok(Some(format!("{} simple subcoalgebras", mcs.len())))
        });
    }

    // ideals of the function algebra on S3: class-closed supports are
    // co-normal, others are not
    {
        let hd = catalog_hopf("dual:S3").map_err(|e| anyhow!(e.to_string()))?;
        let table = group_table("S3").map_err(|e| anyhow!(e.to_string()))?;
        let info = table_info(&table.table);
        let n = hd.dim();
        let class3 = info
            .classes
            .iter()
            .find(|c| c.len() == 2)
            .expect("S3 has a class of two 3-cycles")
            .clone();
        rep.run("conormal-class-support", "dual:S3 functions on the 3-cycles", || {
            let vecs: Vec<_> = class3.iter().map(|&g| unit_vec(n, g)).collect();
            let ideal = IdealSpec::new(hd.clone(), SubspaceC::from_vectors(n, &vecs))
                .map_err(|e| anyhow!(e.to_string()))?;
            let report = conormal_test(&ideal).map_err(|e| anyhow!(e.to_string()))?;
            if report.verdict().map_err(|e| anyhow!(e.to_string()))? {
                Ok(Some("co-normal, all three criteria agree".into()))
            } else {
                Err(anyhow!("class-supported ideal reported not co-normal"))
            }
        });
        let transposition = info
            .classes
            .iter()
            .find(|c| c.len() == 3)
            .expect("S3 has a class of three transpositions")[0];
        rep.run("conormal-single-support", "dual:S3 functions on one transposition", || {
            let ideal = IdealSpec::new(
                hd.clone(),
                SubspaceC::from_vectors(n, &[unit_vec(n, transposition)]),
            )
            .map_err(|e| anyhow!(e.to_string()))?;
            let report = conormal_test(&ideal).map_err(|e| anyhow!(e.to_string()))?;
            if report.verdict().map_err(|e| anyhow!(e.to_string()))? {
                Err(anyhow!("a non-class support reported co-normal"))
            } else {
                Ok(Some("not co-normal, all three criteria agree".into()))
            }
        });
    }

    // the augmentation ideal of a group algebra is co-normal
    {
        let h = catalog_hopf("S3").map_err(|e| anyhow!(e.to_string()))?;
        let table = group_table("S3").map_err(|e| anyhow!(e.to_string()))?;
        let info = table_info(&table.table);
        let n = h.dim();
        rep.run("conormal-augmentation-ideal", "S3", || {
            let vecs: Vec<_> = (0..n)
                .filter(|&g| g != info.identity)
                .map(|g| {
                    let mut v = unit_vec(n, g);
                    v[info.identity] = CycNumber::from_i64(-1);
                    v
                })
                .collect();
            let ideal = IdealSpec::new(h.clone(), SubspaceC::from_vectors(n, &vecs))
                .map_err(|e| anyhow!(e.to_string()))?;
            let report = conormal_test(&ideal).map_err(|e| anyhow!(e.to_string()))?;
            if report.verdict().map_err(|e| anyhow!(e.to_string()))? {
                Ok(None)
            } else {
                Err(anyhow!("augmentation ideal reported not co-normal"))
            }
        });
    }
    Ok(())
}

fn suite_indres(rep: &mut Reporter) -> anyhow::Result<()> {
    for base in base_names() {
        let table = group_table(base).map_err(|e| anyhow!(e.to_string()))?;
        let h = catalog_hopf(base).map_err(|e| anyhow!(e.to_string()))?;
        for members in subgroups(&table.table) {
            let subject = members_subject(&h, base, &members);
            let Some(k) = stage(rep, "subalgebra-build", &subject, || {
                subgroup_hopf(&h, &members)
            }) else {
                continue;
            };
            let Some(data) = stage(rep, "induction-restriction-data", &subject, || {
                indres_data(&k)
            }) else {
                continue;
            };
            stage(rep, "frobenius-and-projection", &subject, || {
                verify_induction_identities(&data)
            });
            let normal = match is_normal(&k).and_then(|r| r.verdict()) {
                Ok(v) => v,
                Err(e) => {
                    rep.record(
                        "normality-verdict",
                        &subject,
                        Status::Fail,
                        Some(e.to_string()),
                        0,
                    );
                    continue;
                }
            };
            if !normal {
                rep.skip(
                    "normal-restriction-formulas",
                    &subject,
                    "subalgebra is not normal",
                );
                continue;
            }
            stage(rep, "restriction-equivalence-classes", &subject, || {
                let classes = equivalence_classes(&data)?;
                normal_formulas_check(&data, &classes)?;
                Ok(())
            });
            let Some((c1, c2)) = stage(rep, "class-functional-filtration", &subject, || {
                c1_c2(&data)
            }) else {
                continue;
            };
            stage(rep, "induction-image-descriptions", &subject, || {
                image_of_induction(&data, &c1).map(|_| ())
            });
            stage(rep, "restriction-image-description", &subject, || {
                image_of_restriction(&data, &c1).map(|_| ())
            });
            if base == "S3" && k.dim() == 3 {
                rep.run("index-two-filtration-dimensions", &subject, || {
                    if c1.dim() == 2 && c2.dim() == 1 {
                        Ok(Some("dim C1 = 2, dim C2 = 1".into()))
                    } else {
                        Err(anyhow!(
                            "expected dim C1 = 2 and dim C2 = 1, found {} and {}",
                            c1.dim(),
                            c2.dim()
                        ))
                    }
                });
                rep.run("induced-counit-formula", &subject, || {
                    let eps_up = data.ind(data.sub_hopf.counit_vec());
                    let irr = &data.irr_h;
                    let sgn = irr
                        .iter()
                        .find(|c| c.degree.is_one() && c.values != *h.counit_vec())
                        .ok_or_else(|| anyhow!("no sign character found"))?;
                    if eps_up == vec_add(h.counit_vec(), &sgn.values) {
                        Ok(Some("induced counit is 1 + sgn".into()))
                    } else {
                        Err(anyhow!("induced counit differs from 1 + sgn"))
                    }
                });
            }
        }
    }

    // the same machinery through a non-group example: the self-dual double
    {
        let subject = "dual:S3 >= counit-span";
        stage(rep, "whole-and-trivial-edges", subject, || {
            let h = catalog_hopf("dual:S3")?;
            let n = h.dim();
            // trivial subalgebra: the span of the unit
            let unit_space = SubspaceC::from_vectors(n, &[h.unit_vec().clone()]);
            let k = hopfcalc_core::subnormal::SubHopf::new(h.clone(), unit_space)?;
            let data = indres_data(&k)?;
            verify_induction_identities(&data)?;
            let full = hopfcalc_core::subnormal::SubHopf::new(h.clone(), SubspaceC::full(n))?;
            let data_full = indres_data(&full)?;
            verify_induction_identities(&data_full)?;
            Ok(())
        });
    }
    Ok(())
}

fn render(c: &CycNumber) -> String {
    match c.as_rational() {
        Some(r) => hopfcalc_core::cyclotomic::render_rational(&r),
        None => format!("{c:?}"),
    }
}
