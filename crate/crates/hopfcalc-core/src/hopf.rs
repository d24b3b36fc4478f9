//! Finite-dimensional Hopf algebras presented by structure constants, with
//! axiom verification, duals, Drinfeld doubles, and the harpoon actions.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::cyclotomic::CycNumber;
use crate::error::{HopfError, Result};
use crate::linalg::{CycVec, MatrixC, unit_vec, vec_axpy, vec_dot, vec_is_zero, zero_vec};

pub type Hopf = Arc<FiniteDimHopf>;

/// Sparse comultiplication of one basis element: entries `(j, k, c)` meaning
/// `c * (b_j tensor b_k)`.
pub type ComultTriples = Vec<(usize, usize, CycNumber)>;

/// A Hopf algebra over `Q(zeta_conductor)` given by structure constants.
#[derive(Debug)]
pub struct FiniteDimHopf {
    dim: usize,
    labels: Vec<String>,
    conductor: u64,
    /// `mult[i][j]` is the coefficient vector of `b_i * b_j`.
    mult: Vec<Vec<CycVec>>,
    unit: CycVec,
    comult: Vec<ComultTriples>,
    counit: CycVec,
    /// Column `j` holds the coefficients of `S(b_j)`.
    antipode: MatrixC,
    antipode_inv: OnceLock<MatrixC>,
}

/// Result of one axiom check.
#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Basis indices witnessing the first failure, when any.
    pub witness: Option<Vec<usize>>,
}

/// Per-axiom pass/fail report.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl FiniteDimHopf {
    /// Assemble without verification; call [`FiniteDimHopf::verified`] before
    /// handing the algebra to any analysis.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        labels: Vec<String>,
        conductor: u64,
        mult: Vec<Vec<CycVec>>,
        unit: CycVec,
        comult: Vec<ComultTriples>,
        counit: CycVec,
        antipode: MatrixC,
    ) -> Self {
        let dim = labels.len();
        assert_eq!(mult.len(), dim);
        assert_eq!(unit.len(), dim);
        assert_eq!(comult.len(), dim);
        assert_eq!(counit.len(), dim);
        assert_eq!(antipode.rows(), dim);
        assert_eq!(antipode.cols(), dim);
        FiniteDimHopf {
            dim,
            labels,
            conductor,
            mult,
            unit,
            comult,
            counit,
            antipode,
            antipode_inv: OnceLock::new(),
        }
    }

    /// Verify all Hopf axioms and wrap into a shared handle.
    pub fn verified(self) -> Result<Hopf> {
        let report = self.verify_axioms();
        if let Some(fail) = report.first_failure() {
            return Err(HopfError::AxiomFailure {
                axiom: fail.name.to_string(),
                witness: fail.witness.clone().unwrap_or_default(),
            });
        }
        Ok(Arc::new(self))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn unit_vec(&self) -> &CycVec {
        &self.unit
    }

    pub fn counit_vec(&self) -> &CycVec {
        &self.counit
    }

    pub fn mult_vec(&self, i: usize, j: usize) -> &CycVec {
        &self.mult[i][j]
    }

    pub fn comult_triples(&self, i: usize) -> &ComultTriples {
        &self.comult[i]
    }

    pub fn antipode_matrix(&self) -> &MatrixC {
        &self.antipode
    }

    pub fn antipode_inv_matrix(&self) -> &MatrixC {
        self.antipode_inv.get_or_init(|| {
            self.antipode
                .inverse()
                .expect("antipode of a Hopf algebra is invertible")
        })
    }

    /// Product of two coefficient vectors.
    pub fn product(&self, a: &[CycNumber], b: &[CycNumber]) -> CycVec {
        let mut out = zero_vec(self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                vec_axpy(&mut out, &c, &self.mult[i][j]);
            }
        }
        out
    }

    /// Product in the dual algebra (convolution): `(fg)(b_i) = sum f(b_j) g(b_k)`.
    pub fn dual_product(&self, f: &[CycNumber], g: &[CycNumber]) -> CycVec {
        let mut out = zero_vec(self.dim);
        for i in 0..self.dim {
            let mut acc = CycNumber::zero();
            for (j, k, c) in &self.comult[i] {
                if !f[*j].is_zero() && !g[*k].is_zero() {
                    acc += &(&(&f[*j] * &g[*k]) * c);
                }
            }
            out[i] = acc;
        }
        out
    }

    /// Evaluate a functional on an element.
    pub fn eval(&self, f: &[CycNumber], a: &[CycNumber]) -> CycNumber {
        vec_dot(f, a)
    }

    pub fn counit_of(&self, a: &[CycNumber]) -> CycNumber {
        vec_dot(&self.counit, a)
    }

    pub fn antipode_apply(&self, a: &[CycNumber]) -> CycVec {
        self.antipode.apply(a)
    }

    pub fn antipode_inv_apply(&self, a: &[CycNumber]) -> CycVec {
        self.antipode_inv_matrix().apply(a)
    }

    /// Antipode of the dual algebra is the transpose: `S*(f) = f o S`.
    pub fn dual_antipode_apply(&self, f: &[CycNumber]) -> CycVec {
        self.antipode.transpose().apply(f)
    }

    /// Comultiplication of an arbitrary element, as a dense `dim x dim` tensor
    /// with rows indexing the first leg.
    pub fn comult_tensor(&self, a: &[CycNumber]) -> MatrixC {
        let mut t = MatrixC::zero(self.dim, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                let v = t.get(*j, *k) + &(x * c);
                t.set(*j, *k, v);
            }
        }
        t
    }

    /// `(Delta tensor id) Delta(b_i)` as sparse triples `(a, b, c, coeff)`.
    pub fn comult2_triples(&self, i: usize) -> Vec<(usize, usize, usize, CycNumber)> {
        let mut out = BTreeMap::new();
        for (j, k, c) in &self.comult[i] {
            for (u, v, c2) in &self.comult[*j] {
                let coeff = c * c2;
                if !coeff.is_zero() {
                    let e = out.entry((*u, *v, *k)).or_insert_with(CycNumber::zero);
                    *e += &coeff;
                }
            }
        }
        out.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((a, b, k), c)| (a, b, k, c))
            .collect()
    }

    // ----- harpoon actions -----

    /// `f -> h = sum f(h_2) h_1`.
    pub fn f_harpoon_h(&self, f: &[CycNumber], h: &[CycNumber]) -> CycVec {
        let mut out = zero_vec(self.dim);
        for (i, x) in h.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                if !f[*k].is_zero() {
                    let coeff = &(x * c) * &f[*k];
                    out[*j] += &coeff;
                }
            }
        }
        out
    }

    /// `h <- f = sum f(h_1) h_2`.
    pub fn h_harpoon_f(&self, h: &[CycNumber], f: &[CycNumber]) -> CycVec {
        let mut out = zero_vec(self.dim);
        for (i, x) in h.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                if !f[*j].is_zero() {
                    let coeff = &(x * c) * &f[*j];
                    out[*k] += &coeff;
                }
            }
        }
        out
    }

    /// `a -> f` with `(a -> f)(b) = f(b a)`.
    pub fn a_harpoon_f(&self, a: &[CycNumber], f: &[CycNumber]) -> CycVec {
        (0..self.dim)
            .map(|j| {
                let prod = self.product(&unit_vec(self.dim, j), a);
                self.eval(f, &prod)
            })
            .collect()
    }

    /// `f <- a` with `(f <- a)(b) = f(a b)`.
    pub fn f_harpoon_a(&self, f: &[CycNumber], a: &[CycNumber]) -> CycVec {
        (0..self.dim)
            .map(|j| {
                let prod = self.product(a, &unit_vec(self.dim, j));
                self.eval(f, &prod)
            })
            .collect()
    }

    /// Matrix of left multiplication by `a` on the algebra.
    pub fn left_mult_matrix(&self, a: &[CycNumber]) -> MatrixC {
        let mut m = MatrixC::zero(self.dim, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        let v = m.get(k, j) + &(x * c);
                        m.set(k, j, v);
                    }
                }
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.mult[i][j] != self.mult[j][i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_cocommutative(&self) -> bool {
        for i in 0..self.dim {
            let mut t: BTreeMap<(usize, usize), CycNumber> = BTreeMap::new();
            for (j, k, c) in &self.comult[i] {
                *t.entry((*j, *k)).or_insert_with(CycNumber::zero) += c;
                *t.entry((*k, *j)).or_insert_with(CycNumber::zero) -= c;
            }
            if t.values().any(|c| !c.is_zero()) {
                return false;
            }
        }
        true
    }

    // ----- axiom verification -----

    pub fn verify_axioms(&self) -> AxiomReport {
        let mut checks = Vec::new();
        checks.push(self.check_associativity());
        checks.push(self.check_unit());
        checks.push(self.check_coassociativity());
        checks.push(self.check_counit());
        checks.push(self.check_comult_multiplicative());
        checks.push(self.check_counit_multiplicative());
        checks.push(self.check_antipode());
        checks.push(self.check_antipode_involutive());
        AxiomReport { checks }
    }

    fn check_associativity(&self) -> AxiomCheck {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = &self.mult[i][j];
                for k in 0..self.dim {
                    let lhs = self.product(ij, &unit_vec(self.dim, k));
                    let rhs = self.product(&unit_vec(self.dim, i), &self.mult[j][k]);
                    if lhs != rhs {
                        return AxiomCheck {
                            name: "associativity",
                            passed: false,
                            witness: Some(vec![i, j, k]),
                        };
                    }
                }
            }
        }
        AxiomCheck {
            name: "associativity",
            passed: true,
            witness: None,
        }
    }

    fn check_unit(&self) -> AxiomCheck {
        for i in 0..self.dim {
            let e = unit_vec(self.dim, i);
            if self.product(&self.unit, &e) != e || self.product(&e, &self.unit) != e {
                return AxiomCheck {
                    name: "unit",
                    passed: false,
                    witness: Some(vec![i]),
                };
            }
        }
        AxiomCheck {
            name: "unit",
            passed: true,
            witness: None,
        }
    }

    fn check_coassociativity(&self) -> AxiomCheck {
        for i in 0..self.dim {
            let left = self.comult2_triples(i);
            // (id tensor Delta) Delta(b_i)
            let mut right: BTreeMap<(usize, usize, usize), CycNumber> = BTreeMap::new();
            for (j, k, c) in &self.comult[i] {
                for (u, v, c2) in &self.comult[*k] {
                    let coeff = c * c2;
                    *right.entry((*j, *u, *v)).or_insert_with(CycNumber::zero) += &coeff;
                }
            }
            let right: Vec<_> = right
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((a, b, k), c)| (a, b, k, c))
                .collect();
            if left != right {
                return AxiomCheck {
                    name: "coassociativity",
                    passed: false,
                    witness: Some(vec![i]),
                };
            }
        }
        AxiomCheck {
            name: "coassociativity",
            passed: true,
            witness: None,
        }
    }

    fn check_counit(&self) -> AxiomCheck {
        for i in 0..self.dim {
            let mut left = zero_vec(self.dim);
            let mut right = zero_vec(self.dim);
            for (j, k, c) in &self.comult[i] {
                // (eps tensor id) and (id tensor eps)
                left[*k] += &(c * &self.counit[*j]);
                right[*j] += &(c * &self.counit[*k]);
            }
            let e = unit_vec(self.dim, i);
            if left != e || right != e {
                return AxiomCheck {
                    name: "counit",
                    passed: false,
                    witness: Some(vec![i]),
                };
            }
        }
        AxiomCheck {
            name: "counit",
            passed: true,
            witness: None,
        }
    }

    fn check_comult_multiplicative(&self) -> AxiomCheck {
        // Delta(1) = 1 tensor 1
        let one = self.comult_tensor(&self.unit);
        let expected = {
            let mut t = MatrixC::zero(self.dim, self.dim);
            for (i, x) in self.unit.iter().enumerate() {
                for (j, y) in self.unit.iter().enumerate() {
                    t.set(i, j, x * y);
                }
            }
            t
        };
        if one != expected {
            return AxiomCheck {
                name: "comult_algebra_map",
                passed: false,
                witness: Some(vec![]),
            };
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self.comult_tensor(&self.mult[i][j]);
                let mut rhs = MatrixC::zero(self.dim, self.dim);
                for (a1, a2, c1) in &self.comult[i] {
                    for (b1, b2, c2) in &self.comult[j] {
                        let coeff = c1 * c2;
                        let first = &self.mult[*a1][*b1];
                        let second = &self.mult[*a2][*b2];
                        for (u, x) in first.iter().enumerate() {
                            if x.is_zero() {
                                continue;
                            }
                            let cx = &coeff * x;
                            for (v, y) in second.iter().enumerate() {
                                if !y.is_zero() {
                                    let val = rhs.get(u, v) + &(&cx * y);
                                    rhs.set(u, v, val);
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return AxiomCheck {
                        name: "comult_algebra_map",
                        passed: false,
                        witness: Some(vec![i, j]),
                    };
                }
            }
        }
        AxiomCheck {
            name: "comult_algebra_map",
            passed: true,
            witness: None,
        }
    }

    fn check_counit_multiplicative(&self) -> AxiomCheck {
        if !self.counit_of(&self.unit).is_one() {
            return AxiomCheck {
                name: "counit_algebra_map",
                passed: false,
                witness: Some(vec![]),
            };
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self.counit_of(&self.mult[i][j]);
                let rhs = &self.counit[i] * &self.counit[j];
                if lhs != rhs {
                    return AxiomCheck {
                        name: "counit_algebra_map",
                        passed: false,
                        witness: Some(vec![i, j]),
                    };
                }
            }
        }
        AxiomCheck {
            name: "counit_algebra_map",
            passed: true,
            witness: None,
        }
    }

    fn check_antipode(&self) -> AxiomCheck {
        for i in 0..self.dim {
            let mut left = zero_vec(self.dim);
            let mut right = zero_vec(self.dim);
            for (j, k, c) in &self.comult[i] {
                let sj = self.antipode.col_vec(*j);
                let sk = self.antipode.col_vec(*k);
                let l = self.product(&sj, &unit_vec(self.dim, *k));
                vec_axpy(&mut left, c, &l);
                let r = self.product(&unit_vec(self.dim, *j), &sk);
                vec_axpy(&mut right, c, &r);
            }
            let mut expected = zero_vec(self.dim);
            vec_axpy(&mut expected, &self.counit[i], &self.unit);
            if left != expected || right != expected {
                return AxiomCheck {
                    name: "antipode",
                    passed: false,
                    witness: Some(vec![i]),
                };
            }
        }
        AxiomCheck {
            name: "antipode",
            passed: true,
            witness: None,
        }
    }

    fn check_antipode_involutive(&self) -> AxiomCheck {
        let s2 = self.antipode.matmul(&self.antipode);
        AxiomCheck {
            name: "antipode_involutive",
            passed: s2.is_identity(),
            witness: None,
        }
    }
}

/// Which harpoon action to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarpoonSide {
    /// `f -> h = sum f(h_2) h_1`
    FunctionalOnElementLeft,
    /// `h <- f = sum f(h_1) h_2`
    FunctionalOnElementRight,
    /// `(a -> f)(b) = f(b a)`
    ElementOnFunctionalLeft,
    /// `(f <- a)(b) = f(a b)`
    ElementOnFunctionalRight,
}

/// An element of a Hopf algebra, tied to its parent.
#[derive(Debug, Clone)]
pub struct HopfElement {
    pub parent: Hopf,
    pub coeffs: CycVec,
}

/// A linear functional on a Hopf algebra (an element of the dual), in dual
/// basis coordinates.
#[derive(Debug, Clone)]
pub struct DualFunctional {
    pub parent: Hopf,
    pub coeffs: CycVec,
}

impl HopfElement {
    pub fn new(parent: Hopf, coeffs: CycVec) -> Self {
        assert_eq!(coeffs.len(), parent.dim());
        HopfElement { parent, coeffs }
    }

    pub fn basis(parent: Hopf, i: usize) -> Self {
        let d = parent.dim();
        Self::new(parent, unit_vec(d, i))
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.coeffs)
    }
}

impl DualFunctional {
    pub fn new(parent: Hopf, coeffs: CycVec) -> Self {
        assert_eq!(coeffs.len(), parent.dim());
        DualFunctional { parent, coeffs }
    }

    pub fn basis(parent: Hopf, i: usize) -> Self {
        let d = parent.dim();
        Self::new(parent, unit_vec(d, i))
    }

    pub fn eval(&self, a: &HopfElement) -> CycNumber {
        vec_dot(&self.coeffs, &a.coeffs)
    }
}

fn same_parent(a: &Hopf, b: &Hopf) -> bool {
    Arc::ptr_eq(a, b)
}

/// Typed entry point for the four harpoon actions with parent checking.
pub enum HarpoonOperand {
    Element(HopfElement),
    Functional(DualFunctional),
}

pub fn harpoon(
    x: &HarpoonOperand,
    y: &HarpoonOperand,
    side: HarpoonSide,
) -> Result<HarpoonOperand> {
    match (x, y, side) {
        (
            HarpoonOperand::Functional(f),
            HarpoonOperand::Element(h),
            HarpoonSide::FunctionalOnElementLeft,
        ) => {
            if !same_parent(&f.parent, &h.parent) {
                return Err(HopfError::ParentMismatch);
            }
            let c = h.parent.f_harpoon_h(&f.coeffs, &h.coeffs);
            Ok(HarpoonOperand::Element(HopfElement::new(
                h.parent.clone(),
                c,
            )))
        }
        (
            HarpoonOperand::Element(h),
            HarpoonOperand::Functional(f),
            HarpoonSide::FunctionalOnElementRight,
        ) => {
            if !same_parent(&f.parent, &h.parent) {
                return Err(HopfError::ParentMismatch);
            }
            let c = h.parent.h_harpoon_f(&h.coeffs, &f.coeffs);
            Ok(HarpoonOperand::Element(HopfElement::new(
                h.parent.clone(),
                c,
            )))
        }
        (
            HarpoonOperand::Element(a),
            HarpoonOperand::Functional(f),
            HarpoonSide::ElementOnFunctionalLeft,
        ) => {
            if !same_parent(&f.parent, &a.parent) {
                return Err(HopfError::ParentMismatch);
            }
            let c = a.parent.a_harpoon_f(&a.coeffs, &f.coeffs);
            Ok(HarpoonOperand::Functional(DualFunctional::new(
                a.parent.clone(),
                c,
            )))
        }
        (
            HarpoonOperand::Functional(f),
            HarpoonOperand::Element(a),
            HarpoonSide::ElementOnFunctionalRight,
        ) => {
            if !same_parent(&f.parent, &a.parent) {
                return Err(HopfError::ParentMismatch);
            }
            let c = a.parent.f_harpoon_a(&f.coeffs, &a.coeffs);
            Ok(HarpoonOperand::Functional(DualFunctional::new(
                a.parent.clone(),
                c,
            )))
        }
        _ => Err(HopfError::InvalidInput(
            "operand kinds do not match the requested harpoon side".into(),
        )),
    }
}

// ----- constructions -----

/// Build the group algebra `kG` from a Cayley table. `table[i][j]` is the
/// index of the product of elements `i` and `j`.
pub fn group_algebra(table: &[Vec<usize>], labels: &[String]) -> Result<Hopf> {
    let n = table.len();
    if n == 0 || labels.len() != n || table.iter().any(|r| r.len() != n) {
        return Err(HopfError::NotAGroup("table is not square".into()));
    }
    if table
        .iter()
        .any(|r| r.iter().any(|&v| v >= n))
    {
        return Err(HopfError::NotAGroup("index out of range".into()));
    }
    // identity
    let e = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| HopfError::NotAGroup("no identity element".into()))?;
    // associativity
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(HopfError::NotAGroup(format!(
                        "associativity fails at ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    // inverses
    let mut inv = vec![usize::MAX; n];
    for i in 0..n {
        let j = (0..n)
            .find(|&j| table[i][j] == e && table[j][i] == e)
            .ok_or_else(|| HopfError::NotAGroup(format!("element {i} has no inverse")))?;
        inv[i] = j;
    }
    let exponent = group_exponent(table, e);

    let mult = (0..n)
        .map(|i| (0..n).map(|j| unit_vec(n, table[i][j])).collect())
        .collect();
    let comult = (0..n)
        .map(|i| vec![(i, i, CycNumber::one())])
        .collect();
    let counit = vec![CycNumber::one(); n];
    let mut antipode = MatrixC::zero(n, n);
    for j in 0..n {
        antipode.set(inv[j], j, CycNumber::one());
    }
    FiniteDimHopf::from_parts(
        labels.to_vec(),
        exponent,
        mult,
        unit_vec(n, e),
        comult,
        counit,
        antipode,
    )
    .verified()
}

fn group_exponent(table: &[Vec<usize>], e: usize) -> u64 {
    let mut exponent = 1u64;
    for i in 0..table.len() {
        let mut ord = 1u64;
        let mut cur = i;
        while cur != e {
            cur = table[cur][i];
            ord += 1;
        }
        exponent = num_integer::lcm(exponent, ord);
    }
    exponent
}

/// The dual Hopf algebra on the dual basis.
pub fn dual_hopf(h: &Hopf) -> Result<Hopf> {
    let n = h.dim();
    // multiplication of the dual = transpose of comultiplication
    let mut mult = vec![vec![zero_vec(n); n]; n];
    for i in 0..n {
        for (j, k, c) in h.comult_triples(i) {
            mult[*j][*k][i] += c;
        }
    }
    // comultiplication of the dual = transpose of multiplication
    let mut comult = vec![Vec::new(); n];
    for j in 0..n {
        for k in 0..n {
            for (i, c) in h.mult_vec(j, k).iter().enumerate() {
                if !c.is_zero() {
                    comult[i].push((j, k, c.clone()));
                }
            }
        }
    }
    let unit = h.counit_vec().clone();
    let counit = h.unit_vec().clone();
    let antipode = h.antipode_matrix().transpose();
    let labels = h.labels().iter().map(|l| format!("{l}^")).collect();
    FiniteDimHopf::from_parts(labels, h.conductor(), mult, unit, comult, counit, antipode)
        .verified()
}

/// The Drinfeld double `D(H)` on the basis `f_i tensor b_j`, ordered row-major
/// by (dual index, algebra index).
pub fn drinfeld_double(h: &Hopf) -> Result<Hopf> {
    let report = h.verify_axioms();
    if !report.all_passed() {
        let fail = report.first_failure().unwrap();
        return Err(HopfError::AxiomFailure {
            axiom: fail.name.to_string(),
            witness: fail.witness.clone().unwrap_or_default(),
        });
    }
    let n = h.dim();
    let dim = n * n;
    let idx = |f: usize, b: usize| f * n + b;

    // Dual-side structure reused throughout.
    let hd = dual_hopf(h)?;
    let s_inv = h.antipode_inv_matrix();

    // Multiplication: (g ⊗ a)(f ⊗ l) = sum g (a_1 -> f <- S^{-1} a_3) ⊗ a_2 l.
    let mut mult = vec![vec![zero_vec(dim); dim]; dim];
    for fa in 0..n {
        let g = unit_vec(n, fa);
        for bb in 0..n {
            let triples = h.comult2_triples(bb);
            for fc in 0..n {
                let f = unit_vec(n, fc);
                for bd in 0..n {
                    let mut out = zero_vec(dim);
                    for (a1, a2, a3, c) in &triples {
                        let sa3 = s_inv.col_vec(*a3);
                        let step = h.f_harpoon_a(&f, &sa3);
                        let step = h.a_harpoon_f(&unit_vec(n, *a1), &step);
                        let dualpart = hd.product(&g, &step);
                        let algpart = h.mult_vec(*a2, bd);
                        for (u, x) in dualpart.iter().enumerate() {
                            if x.is_zero() {
                                continue;
                            }
                            let cx = c * x;
                            for (v, y) in algpart.iter().enumerate() {
                                if !y.is_zero() {
                                    out[idx(u, v)] += &(&cx * y);
                                }
                            }
                        }
                    }
                    mult[idx(fa, bb)][idx(fc, bd)] = out;
                }
            }
        }
    }

    // Coalgebra: H^{*cop} tensor H.
    let mut comult = vec![Vec::new(); dim];
    for fi in 0..n {
        for bj in 0..n {
            let mut entries = Vec::new();
            for (u, v, c1) in hd.comult_triples(fi) {
                for (x, y, c2) in h.comult_triples(bj) {
                    let c = c1 * c2;
                    if !c.is_zero() {
                        // cop on the dual leg: second dual factor comes first
                        entries.push((idx(*v, *x), idx(*u, *y), c));
                    }
                }
            }
            comult[idx(fi, bj)] = entries;
        }
    }

    let mut unit = zero_vec(dim);
    for (i, x) in hd.unit_vec().iter().enumerate() {
        for (j, y) in h.unit_vec().iter().enumerate() {
            unit[idx(i, j)] = x * y;
        }
    }
    let mut counit = zero_vec(dim);
    for i in 0..n {
        for j in 0..n {
            counit[idx(i, j)] = &hd.counit_vec()[i] * &h.counit_vec()[j];
        }
    }

    // Antipode: S(f ⊗ a) = (eps ⊗ S a) * (S*^{-1} f ⊗ 1), computed in D(H).
    let sd_inv = hd.antipode_inv_matrix();
    let mut antipode = MatrixC::zero(dim, dim);
    for fi in 0..n {
        let finv = sd_inv.col_vec(fi);
        for bj in 0..n {
            let sb = h.antipode_matrix().col_vec(bj);
            // left factor: eps ⊗ S(b_j)
            let mut left = zero_vec(dim);
            for (u, x) in hd.unit_vec().iter().enumerate() {
                for (v, y) in sb.iter().enumerate() {
                    left[idx(u, v)] = x * y;
                }
            }
            // right factor: S*^{-1}(f_i) ⊗ 1
            let mut right = zero_vec(dim);
            for (u, x) in finv.iter().enumerate() {
                for (v, y) in h.unit_vec().iter().enumerate() {
                    right[idx(u, v)] = x * y;
                }
            }
            // multiply in D(H) using the tensor already built
            let mut col = zero_vec(dim);
            for (p, x) in left.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (q, y) in right.iter().enumerate() {
                    if !y.is_zero() {
                        let c = x * y;
                        vec_axpy(&mut col, &c, &mult[p][q]);
                    }
                }
            }
            for (r, v) in col.into_iter().enumerate() {
                antipode.set(r, idx(fi, bj), v);
            }
        }
    }

    let labels = (0..n)
        .flat_map(|i| {
            let li = h.labels()[i].clone();
            let hl = h.labels();
            (0..n)
                .map(move |j| format!("({}^|{})", li, hl[j]))
                .collect::<Vec<_>>()
        })
        .collect();

    let double = FiniteDimHopf::from_parts(
        labels,
        h.conductor(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    );
    match double.verified() {
        Ok(d) => Ok(d),
        Err(HopfError::AxiomFailure { axiom, witness }) => Err(HopfError::Internal(format!(
            "constructed double violates `{axiom}` at {witness:?}"
        ))),
        Err(e) => Err(e),
    }
}
