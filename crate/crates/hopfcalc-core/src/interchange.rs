//! JSON interchange for algebras and subalgebra specifications. The scalar
//! encoding is canonical (rationals as `"p/q"` strings, everything else as
//! the cyclotomic coefficient map), so serialize/deserialize round-trips are
//! bit exact.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{parse_rational, CycNumber};
use crate::error::{HopfError, Result};
use crate::hopf::{ComultTriples, FiniteDimHopf, Hopf};
use crate::linalg::{zero_vec, CycVec, MatrixC, SubspaceC};
use crate::subnormal::SubHopf;

/// A scalar in the interchange format: a bare `"p/q"` string for rationals,
/// the full coefficient map otherwise.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Rational(String),
    Cyclotomic(CycNumber),
}

impl CoeffJson {
    pub fn encode(c: &CycNumber) -> CoeffJson {
        match c.as_rational() {
            Some(r) => CoeffJson::Rational(crate::cyclotomic::render_rational(&r)),
            None => CoeffJson::Cyclotomic(c.clone()),
        }
    }

    pub fn decode(&self) -> Result<CycNumber> {
        match self {
            CoeffJson::Rational(s) => {
                let r = parse_rational(s).map_err(HopfError::Scalar)?;
                Ok(CycNumber::from_rat(r))
            }
            CoeffJson::Cyclotomic(c) => Ok(c.clone()),
        }
    }
}

fn encode_vec(v: &[CycNumber]) -> Vec<CoeffJson> {
    v.iter().map(CoeffJson::encode).collect()
}

fn decode_vec(v: &[CoeffJson]) -> Result<CycVec> {
    v.iter().map(CoeffJson::decode).collect()
}

/// The on-disk form of a Hopf algebra: sparse structure constants for both
/// the multiplication and the comultiplication.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HopfJson {
    pub dim: usize,
    pub labels: Vec<String>,
    pub conductor: u64,
    /// `[i, j, k, c]`: the product `b_i b_j` contains `c * b_k`.
    pub mult: Vec<(usize, usize, usize, CoeffJson)>,
    /// `[i, j, k, c]`: the coproduct of `b_i` contains `c * b_j ⊗ b_k`.
    pub comult: Vec<(usize, usize, usize, CoeffJson)>,
    pub counit: Vec<CoeffJson>,
    pub antipode: Vec<Vec<CoeffJson>>,
    pub unit: Vec<CoeffJson>,
}

pub fn hopf_to_json(h: &FiniteDimHopf) -> HopfJson {
    let n = h.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mult_vec(i, j).iter().enumerate() {
                if !c.is_zero() {
                    mult.push((i, j, k, CoeffJson::encode(c)));
                }
            }
        }
    }
    let mut comult = Vec::new();
    for i in 0..n {
        let mut triples: Vec<_> = h
            .comult_triples(i)
            .iter()
            .map(|(j, k, c)| (i, *j, *k, CoeffJson::encode(c)))
            .collect();
        triples.sort_by(|a, b| (a.1, a.2).cmp(&(b.1, b.2)));
        comult.extend(triples);
    }
    let antipode = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| CoeffJson::encode(h.antipode_matrix().get(i, j)))
                .collect()
        })
        .collect();
    HopfJson {
        dim: n,
        labels: h.labels().to_vec(),
        conductor: h.conductor(),
        mult,
        comult,
        counit: encode_vec(h.counit_vec()),
        antipode,
        unit: encode_vec(h.unit_vec()),
    }
}

/// Rebuild and axiom-verify an algebra from its interchange form.
pub fn hopf_from_json(j: &HopfJson) -> Result<Hopf> {
    let n = j.dim;
    if j.labels.len() != n {
        return Err(HopfError::InvalidInput(format!(
            "expected {n} labels, found {}",
            j.labels.len()
        )));
    }
    let bound = |i: usize| -> Result<usize> {
        if i < n {
            Ok(i)
        } else {
            Err(HopfError::InvalidInput(format!(
                "basis index {i} out of range for dimension {n}"
            )))
        }
    };
    let mut mult = vec![vec![zero_vec(n); n]; n];
    for (i, jj, k, c) in &j.mult {
        mult[bound(*i)?][bound(*jj)?][bound(*k)?] += &c.decode()?;
    }
    let mut comult: Vec<ComultTriples> = vec![Vec::new(); n];
    for (i, jj, k, c) in &j.comult {
        comult[bound(*i)?].push((bound(*jj)?, bound(*k)?, c.decode()?));
    }
    for triples in &mut comult {
        triples.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    }
    if j.counit.len() != n || j.unit.len() != n || j.antipode.len() != n {
        return Err(HopfError::InvalidInput(
            "counit, unit, and antipode must match the dimension".into(),
        ));
    }
    let mut antipode = MatrixC::zero(n, n);
    for (i, row) in j.antipode.iter().enumerate() {
        if row.len() != n {
            return Err(HopfError::InvalidInput("ragged antipode matrix".into()));
        }
        for (jj, c) in row.iter().enumerate() {
            antipode.set(i, jj, c.decode()?);
        }
    }
    FiniteDimHopf::from_parts(
        j.labels.clone(),
        j.conductor,
        mult,
        decode_vec(&j.unit)?,
        comult,
        decode_vec(&j.counit)?,
        antipode,
    )
    .verified()
}

/// A subalgebra given either by subgroup labels of a group algebra or by an
/// explicit basis in parent coordinates.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<CoeffJson>>>,
}

pub fn sub_from_json(h: &Hopf, j: &SubJson) -> Result<SubHopf> {
    match (&j.subgroup, &j.basis) {
        (Some(names), None) => {
            let mut gens = Vec::with_capacity(names.len());
            for name in names {
                let idx = h
                    .labels()
                    .iter()
                    .position(|l| l == name)
                    .ok_or_else(|| HopfError::InvalidInput(format!("unknown label `{name}`")))?;
                gens.push(idx);
            }
            crate::subnormal::subgroup_hopf(h, &gens)
        }
        (None, Some(rows)) => {
            let vecs: Result<Vec<CycVec>> = rows
                .iter()
                .map(|r| {
                    if r.len() != h.dim() {
                        return Err(HopfError::InvalidInput(
                            "basis vector length differs from the dimension".into(),
                        ));
                    }
                    decode_vec(r)
                })
                .collect();
            let space = SubspaceC::from_vectors(h.dim(), &vecs?);
            SubHopf::new(h.clone(), space)
        }
        _ => Err(HopfError::InvalidInput(
            "specify exactly one of `subgroup` or `basis`".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog_hopf;

    #[test]
    fn round_trip_is_bit_exact() {
        for name in ["S3", "dual:S3", "double:C2"] {
            let h = catalog_hopf(name).unwrap();
            let j = hopf_to_json(&h);
            let text = serde_json::to_string(&j).unwrap();
            let parsed: HopfJson = serde_json::from_str(&text).unwrap();
            let h2 = hopf_from_json(&parsed).unwrap();
            let text2 = serde_json::to_string(&hopf_to_json(&h2)).unwrap();
            assert_eq!(text, text2);
            assert_eq!(h.dim(), h2.dim());
        }
    }

    #[test]
    fn subgroup_shorthand() {
        let h = catalog_hopf("S3").unwrap();
        let j = SubJson {
            subgroup: Some(vec!["(123)".into()]),
            basis: None,
        };
        let k = sub_from_json(&h, &j).unwrap();
        assert_eq!(k.dim(), 3);
        let bad = SubJson {
            subgroup: Some(vec!["(17)".into()]),
            basis: None,
        };
        assert!(sub_from_json(&h, &bad).is_err());
    }

    #[test]
    fn corrupted_structure_fails_axioms() {
        let h = catalog_hopf("C2").unwrap();
        let mut j = hopf_to_json(&h);
        // break associativity/unitality by rewriting a product entry
        j.mult[0] = (0, 0, 1, CoeffJson::Rational("1".into()));
        assert!(hopf_from_json(&j).is_err());
    }
}
