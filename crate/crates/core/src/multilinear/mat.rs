//! Exact matrices over the rationals, with deterministic Gaussian
//! elimination (pivot = first nonzero entry) for solving, rank and kernels.

use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::MultilinearError;
use crate::scalar::Scalar;

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Endomorphisms of the fibre in the standard basis are plain square matrices.
pub type EndoMatrix = Mat;

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols));
        Mat {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Scalar>]) -> Self {
        assert!(!cols.is_empty());
        let rows = cols[0].len();
        assert!(cols.iter().all(|c| c.len() == rows));
        Mat::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * s)
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_witness().is_none()
    }

    /// First index pair violating symmetry, if any.
    pub fn symmetry_witness(&self) -> Option<(usize, usize)> {
        if self.rows != self.cols {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            for c in r + 1..self.cols {
                if self.get(r, c) != self.get(c, r) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|r| (r..self.cols).all(|c| self.get(r, c) == &-self.get(c, r).clone()))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += a * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form with the pivot columns, pivoting on the
    /// first nonzero entry of each column for deterministic output.
    fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(prow, r);
            let pivot = m.get(prow, col).clone();
            for c in col..m.cols {
                let v = m.get(prow, c) / &pivot;
                m.set(prow, c, v);
            }
            for r2 in 0..m.rows {
                if r2 == prow || m.get(r2, col).is_zero() {
                    continue;
                }
                let factor = m.get(r2, col).clone();
                for c in col..m.cols {
                    let v = m.get(r2, c) - &(m.get(prow, c) * &factor);
                    m.set(r2, c, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (m, pivots)
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + rhs.get(r, c))
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c))
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| -self.get(r, c).clone())
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c) + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

/// Euclidean inner product of two coordinate vectors.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `i`-th standard basis vector of ℝⁿ (0-based).
pub fn basis_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// The skew endomorphism of the 2-vector `e∧f`: `v ↦ g(e,v)f − g(f,v)e`.
pub fn wedge2_as_endo(e: &[Scalar], f: &[Scalar]) -> Mat {
    assert_eq!(e.len(), f.len());
    let n = e.len();
    Mat::from_fn(n, n, |r, c| &e[c] * &f[r] - &f[c] * &e[r])
}

/// Derivation action of an endomorphism on a 2-tensor:
/// `(A_*h)(X,Y) = h(AX,Y) + h(X,AY)`, i.e. `Aᵀh + hA` on matrices.
///
/// Composing two applications expands to the four-term formula
/// `(A_*B_*h)(X,Y) = h(BAX,Y) + h(AX,BY) + h(BX,AY) + h(X,BAY)`.
pub fn endo_act_tensor2(a: &Mat, h: &Mat) -> Mat {
    &(&a.transpose() * h) + &(h * a)
}

/// Rank via exact elimination.
pub fn rank(m: &Mat) -> usize {
    m.rref().1.len()
}

/// Solves `M x = b` exactly. Free variables are set to zero; an inconsistent
/// system is reported as [`MultilinearError::NoSolution`], a shape mismatch
/// as [`MultilinearError::DimensionMismatch`].
pub fn solve_exact(m: &Mat, b: &[Scalar]) -> Result<Vec<Scalar>, MultilinearError> {
    if b.len() != m.rows() {
        return Err(MultilinearError::DimensionMismatch {
            left: m.rows(),
            right: b.len(),
        });
    }
    let aug = Mat::from_fn(m.rows(), m.cols() + 1, |r, c| {
        if c < m.cols() {
            m.get(r, c).clone()
        } else {
            b[r].clone()
        }
    });
    let (red, pivots) = aug.rref();
    if pivots.contains(&m.cols()) {
        return Err(MultilinearError::NoSolution);
    }
    let mut x = vec![Scalar::zero(); m.cols()];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = red.get(i, m.cols()).clone();
    }
    Ok(x)
}

/// Basis of the null space of `M`.
pub fn kernel_basis(m: &Mat) -> Vec<Vec<Scalar>> {
    let (red, pivots) = m.rref();
    let mut basis = Vec::new();
    for free in 0..m.cols() {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); m.cols()];
        v[free] = Scalar::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -red.get(i, free).clone();
        }
        basis.push(v);
    }
    basis
}

/// Symmetric 2-tensor on the fibre; construction checks the symmetry
/// invariant and reports a witness entry on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymTensor2 {
    mat: Mat,
}

impl SymTensor2 {
    pub fn new(mat: Mat) -> Result<Self, MultilinearError> {
        match mat.symmetry_witness() {
            None => Ok(SymTensor2 { mat }),
            Some((row, col)) => Err(MultilinearError::NotSymmetric { row, col }),
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Scalar) -> Result<Self, MultilinearError> {
        SymTensor2::new(Mat::from_fn(n, n, f))
    }

    /// The metric tensor (identity matrix) on ℝⁿ.
    pub fn metric(n: usize) -> Self {
        SymTensor2 {
            mat: Mat::identity(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        SymTensor2 {
            mat: Mat::zeros(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn into_mat(self) -> Mat {
        self.mat
    }

    pub fn trace(&self) -> Scalar {
        self.mat.trace()
    }

    pub fn is_tracefree(&self) -> bool {
        self.trace().is_zero()
    }

    /// Spanning basis of the trace-free symmetric 2-tensors: symmetrised
    /// pairs `eᵢ⊙eⱼ` (i<j) and consecutive diagonal differences.
    pub fn tracefree_basis(n: usize) -> Vec<SymTensor2> {
        let mut basis = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut m = Mat::zeros(n, n);
                m.set(i, j, Scalar::one());
                m.set(j, i, Scalar::one());
                basis.push(SymTensor2 { mat: m });
            }
        }
        for i in 0..n - 1 {
            let mut m = Mat::zeros(n, n);
            m.set(i, i, Scalar::one());
            m.set(i + 1, i + 1, -Scalar::one());
            basis.push(SymTensor2 { mat: m });
        }
        basis
    }

    /// Full symmetric basis: the trace-free one plus the metric.
    pub fn sym_basis(n: usize) -> Vec<SymTensor2> {
        let mut basis = Self::tracefree_basis(n);
        basis.push(Self::metric(n));
        basis
    }
}
