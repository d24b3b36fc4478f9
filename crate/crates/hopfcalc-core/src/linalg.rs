//! Exact linear algebra over cyclotomic scalars: matrices, solving, and the
//! subspace lattice used for every image/kernel comparison in the library.

use crate::cyclotomic::CycNumber;
use crate::error::{HopfError, Result};

pub type CycVec = Vec<CycNumber>;

pub fn zero_vec(n: usize) -> CycVec {
    vec![CycNumber::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> CycVec {
    let mut v = zero_vec(n);
    v[i] = CycNumber::one();
    v
}

pub fn vec_is_zero(v: &[CycNumber]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn vec_add(a: &[CycNumber], b: &[CycNumber]) -> CycVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[CycNumber], b: &[CycNumber]) -> CycVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[CycNumber], c: &CycNumber) -> CycVec {
    if c.is_zero() {
        return zero_vec(a.len());
    }
    a.iter().map(|x| x * c).collect()
}

/// `acc += c * v`, skipping zero work.
pub fn vec_axpy(acc: &mut [CycNumber], c: &CycNumber, v: &[CycNumber]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(x * c);
        }
    }
}

pub fn vec_dot(a: &[CycNumber], b: &[CycNumber]) -> CycNumber {
    let mut acc = CycNumber::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Dense matrix of exact cyclotomic numbers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixC {
    rows: usize,
    cols: usize,
    data: Vec<CycNumber>,
}

impl MatrixC {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MatrixC {
            rows,
            cols,
            data: vec![CycNumber::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, CycNumber::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<CycVec>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        assert!(rows.iter().all(|v| v.len() == c));
        MatrixC {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycNumber) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        MatrixC { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNumber {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNumber) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycNumber] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> CycVec {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> CycVec {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> MatrixC {
        MatrixC::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, other: &MatrixC) -> MatrixC {
        assert_eq!(self.cols, other.rows);
        let mut out = MatrixC::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + &(a * b);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[CycNumber]) -> CycVec {
        assert_eq!(self.cols, v.len());
        let mut out = zero_vec(self.rows);
        for i in 0..self.rows {
            out[i] = vec_dot(self.row(i), v);
        }
        out
    }

    pub fn trace(&self) -> CycNumber {
        let mut acc = CycNumber::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == MatrixC::identity(self.rows)
    }

    /// Reduced row echelon form with pivot columns.
    pub fn rref(&self) -> (MatrixC, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            let Some(sel) = (prow..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if sel != prow {
                for c in 0..m.cols {
                    let a = m.get(prow, c).clone();
                    let b = m.get(sel, c).clone();
                    m.set(prow, c, b);
                    m.set(sel, c, a);
                }
            }
            let inv = m.get(prow, col).inv().expect("pivot is nonzero");
            for c in 0..m.cols {
                let v = m.get(prow, c) * &inv;
                m.set(prow, c, v);
            }
            for r in 0..m.rows {
                if r != prow && !m.get(r, col).is_zero() {
                    let f = m.get(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.get(r, c) - &(&f * m.get(prow, c));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            prow += 1;
            if prow == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis for the right null space.
    pub fn kernel(&self) -> Vec<CycVec> {
        let (r, pivots) = self.rref();
        let mut free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.sort_unstable();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = zero_vec(self.cols);
            v[fc] = CycNumber::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(i, fc);
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<MatrixC> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = MatrixC::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, CycNumber::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(MatrixC::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
}

/// Outcome of exact linear solving: one particular solution plus the kernel,
/// or a typed "no solution".
#[derive(Debug, Clone)]
pub enum SolveOutcome {
    Solution {
        particular: CycVec,
        kernel: Vec<CycVec>,
    },
    Inconsistent,
}

/// Solve `A x = b` exactly.
pub fn solve_linear(a: &MatrixC, b: &[CycNumber]) -> Result<SolveOutcome> {
    if a.rows() != b.len() {
        return Err(HopfError::DimensionMismatch(a.rows(), b.len()));
    }
    let mut aug = MatrixC::zero(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols(), b[i].clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.contains(&a.cols()) {
        return Ok(SolveOutcome::Inconsistent);
    }
    let mut particular = zero_vec(a.cols());
    for (i, &pc) in pivots.iter().enumerate() {
        particular[pc] = r.get(i, a.cols()).clone();
    }
    Ok(SolveOutcome::Solution {
        particular,
        kernel: a.kernel(),
    })
}

/// Express `v` in terms of the rows of `basis`, if possible.
pub fn coordinates_in(basis: &MatrixC, v: &[CycNumber]) -> Option<CycVec> {
    match solve_linear(&basis.transpose(), v).ok()? {
        SolveOutcome::Solution { particular, .. } => Some(particular),
        SolveOutcome::Inconsistent => None,
    }
}

/// A subspace of an ambient coordinate space, kept in canonical RREF so that
/// equality of subspaces is equality of representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceC {
    ambient: usize,
    basis: MatrixC,
}

impl SubspaceC {
    pub fn from_vectors(ambient: usize, vectors: &[CycVec]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector has wrong ambient dimension");
        }
        if vectors.is_empty() {
            return SubspaceC {
                ambient,
                basis: MatrixC::zero(0, ambient),
            };
        }
        let m = MatrixC::from_rows(vectors.to_vec());
        let (r, pivots) = m.rref();
        let rows: Vec<CycVec> = (0..pivots.len()).map(|i| r.row_vec(i)).collect();
        SubspaceC {
            ambient,
            basis: MatrixC::from_rows(rows),
        }
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceC {
            ambient,
            basis: MatrixC::identity(ambient),
        }
    }

    pub fn zero_space(ambient: usize) -> Self {
        Self::from_vectors(ambient, &[])
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &MatrixC {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<CycVec> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    pub fn contains_vec(&self, v: &[CycNumber]) -> bool {
        assert_eq!(v.len(), self.ambient);
        coordinates_in(&self.basis, v).is_some()
    }

    /// Coordinates of `v` with respect to the stored basis.
    pub fn coords(&self, v: &[CycNumber]) -> Option<CycVec> {
        coordinates_in(&self.basis, v)
    }

    pub fn contains(&self, other: &SubspaceC) -> Result<bool> {
        self.check_ambient(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vec(other.basis.row(i))))
    }

    pub fn equals(&self, other: &SubspaceC) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.basis == other.basis)
    }

    pub fn sum(&self, other: &SubspaceC) -> Result<SubspaceC> {
        self.check_ambient(other)?;
        let mut vecs = self.basis_vectors();
        vecs.extend(other.basis_vectors());
        Ok(SubspaceC::from_vectors(self.ambient, &vecs))
    }

    pub fn intersect(&self, other: &SubspaceC) -> Result<SubspaceC> {
        self.check_ambient(other)?;
        // Kernel of [U^T | -V^T]: combinations landing in both spans.
        let du = self.dim();
        let dv = other.dim();
        if du == 0 || dv == 0 {
            return Ok(SubspaceC::zero_space(self.ambient));
        }
        let m = MatrixC::from_fn(self.ambient, du + dv, |i, j| {
            if j < du {
                self.basis.get(j, i).clone()
            } else {
                -other.basis.get(j - du, i)
            }
        });
        let mut vecs = Vec::new();
        for k in m.kernel() {
            let mut v = zero_vec(self.ambient);
            for (j, c) in k.iter().take(du).enumerate() {
                vec_axpy(&mut v, c, self.basis.row(j));
            }
            vecs.push(v);
        }
        Ok(SubspaceC::from_vectors(self.ambient, &vecs))
    }

    /// Annihilator in the dual coordinates: all `w` with `B w = 0`.
    pub fn perp(&self) -> SubspaceC {
        if self.dim() == 0 {
            return SubspaceC::full(self.ambient);
        }
        SubspaceC::from_vectors(self.ambient, &self.basis.kernel())
    }

    fn check_ambient(&self, other: &SubspaceC) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(HopfError::DimensionMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycNumber;

    fn c(v: i64) -> CycNumber {
        CycNumber::from_i64(v)
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let a = MatrixC::identity(3);
        let b = vec![c(4), c(-1), c(7)];
        match solve_linear(&a, &b).unwrap() {
            SolveOutcome::Solution { particular, kernel } => {
                assert_eq!(particular, b);
                assert!(kernel.is_empty());
            }
            _ => panic!("inconsistent"),
        }
    }

    #[test]
    fn zero_matrix_kernel_dimension() {
        let a = MatrixC::zero(2, 2);
        match solve_linear(&a, &[c(0), c(0)]).unwrap() {
            SolveOutcome::Solution { kernel, .. } => assert_eq!(kernel.len(), 2),
            _ => panic!(),
        }
    }

    #[test]
    fn one_by_one_rational_solve() {
        let a = MatrixC::from_rows(vec![vec![c(2)]]);
        match solve_linear(&a, &[c(1)]).unwrap() {
            SolveOutcome::Solution { particular, .. } => {
                assert_eq!(particular[0], CycNumber::rational(1, 2));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn inconsistent_is_typed_not_a_failure() {
        let a = MatrixC::zero(1, 1);
        match solve_linear(&a, &[c(1)]).unwrap() {
            SolveOutcome::Inconsistent => {}
            _ => panic!("expected inconsistent"),
        }
    }

    #[test]
    fn subspace_lattice_on_the_plane() {
        let u = SubspaceC::from_vectors(2, &[vec![c(1), c(0)]]);
        let v = SubspaceC::from_vectors(2, &[vec![c(0), c(1)]]);
        assert_eq!(u.intersect(&v).unwrap().dim(), 0);
        assert_eq!(u.sum(&v).unwrap().dim(), 2);
        assert!(u.equals(&u).unwrap());
        let w = SubspaceC::from_vectors(2, &[vec![c(1), c(1)], vec![c(1), c(-1)]]);
        assert!(w.equals(&SubspaceC::full(2)).unwrap());
    }

    #[test]
    fn rank_nullity() {
        let a = MatrixC::from_rows(vec![
            vec![c(1), c(2), c(3)],
            vec![c(2), c(4), c(6)],
            vec![c(0), c(1), c(1)],
        ]);
        assert_eq!(a.rank() + a.kernel().len(), 3);
    }

    #[test]
    fn inverse_round_trip() {
        let z = CycNumber::zeta(4).unwrap();
        let a = MatrixC::from_rows(vec![vec![c(1), z.clone()], vec![z.clone(), c(1)]]);
        let inv = a.inverse().unwrap();
        assert!(a.matmul(&inv).is_identity());
    }
}
