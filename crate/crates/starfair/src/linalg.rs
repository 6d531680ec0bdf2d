//! Dense complex linear algebra used throughout the crate.
//!
//! Storage is column-major, so [`ComplexMatrix::vec_column`] (column
//! stacking) is the storage order itself and the Kronecker identities used by
//! the lifted quadratic forms hold by construction. Problem sizes stay in the
//! hundreds, so everything here is dense.

use num_complex::Complex;

use crate::scalar::Float;
use crate::{Error, Result};

/// Hard cap on the entry count any single operation may produce.
pub const MAX_ELEMS: usize = 1 << 26;

/// Dense complex matrix, column-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Float> ComplexMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    /// Build from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Build from row slices (row-major input, stored column-major).
    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Self {
        let nr = rows.len();
        let nc = if nr == 0 { 0 } else { rows[0].len() };
        Self::from_fn(nr, nc, |r, c| rows[r][c])
    }

    /// Column vector from a slice.
    pub fn col_vector(v: &[Complex<T>]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    /// Diagonal matrix from a slice.
    pub fn diag(d: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn idx(&self, r: usize, c: usize) -> usize {
        debug_assert!(r < self.rows && c < self.cols);
        c * self.rows + r
    }

    /// Raw column-major storage.
    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_re(&self, s: T) -> Self {
        self.scale(Complex::new(s, T::zero()))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for c in 0..other.cols {
            for k in 0..self.cols {
                let b = other[(k, c)];
                if b.re == T::zero() && b.im == T::zero() {
                    continue;
                }
                for r in 0..self.rows {
                    let v = self[(r, k)] * b;
                    out[(r, c)] = out[(r, c)] + v;
                }
            }
        }
        out
    }

    /// Frobenius norm: square root of the sum of squared magnitudes.
    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Column stacking. `vec` is linear and preserves the Frobenius norm.
    pub fn vec_column(&self) -> Self {
        Self {
            rows: self.rows * self.cols,
            cols: 1,
            data: self.data.clone(),
        }
    }

    /// Maximum entry magnitude of `A - A^H`.
    pub fn hermitian_defect(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let mut worst = T::zero();
        for c in 0..self.cols {
            for r in 0..=c {
                let d = (self[(r, c)] - self[(c, r)].conj()).norm();
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.rows == self.cols && self.hermitian_defect() <= tol
    }

    /// `(A + A^H) / 2`. Interior-point outputs carry tiny asymmetry.
    pub fn symmetrize(&self) -> Self {
        assert_eq!(self.rows, self.cols);
        let half = T::cast(0.5);
        Self::from_fn(self.rows, self.cols, |r, c| {
            (self[(r, c)] + self[(c, r)].conj()).scale(half)
        })
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Complex<T> {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(Complex::new(T::zero(), T::zero()), |acc, i| {
            acc + self[(i, i)]
        })
    }

    /// `x^H y` for column vectors of equal length.
    pub fn dot_h(&self, other: &Self) -> Complex<T> {
        assert_eq!(self.cols, 1);
        assert_eq!(other.cols, 1);
        assert_eq!(self.rows, other.rows);
        self.data
            .iter()
            .zip(&other.data)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                acc + a.conj() * b
            })
    }

    /// `v^H A w` for conforming column vectors.
    pub fn quad_form(&self, v: &Self, w: &Self) -> Complex<T> {
        v.dot_h(&self.matmul(w))
    }

    /// Outer product `self * self^H` of a column vector.
    pub fn outer_h(&self) -> Self {
        assert_eq!(self.cols, 1);
        Self::from_fn(self.rows, self.rows, |r, c| {
            self.data[r] * self.data[c].conj()
        })
    }
}

impl<T: Float> std::ops::Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex<T> {
        &self.data[self.idx(r, c)]
    }
}

impl<T: Float> std::ops::IndexMut<(usize, usize)> for ComplexMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex<T> {
        let i = self.idx(r, c);
        &mut self.data[i]
    }
}

/// Kronecker product: block (i, j) of the result equals `A[i,j] * B`.
pub fn kron<T: Float>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let (p, q) = (a.rows(), a.cols());
    let (r, s) = (b.rows(), b.cols());
    let elems = p
        .checked_mul(r)
        .and_then(|x| x.checked_mul(q))
        .and_then(|x| x.checked_mul(s))
        .ok_or_else(|| Error::Dimension("kronecker product size overflows usize".into()))?;
    if elems > MAX_ELEMS {
        return Err(Error::Dimension(format!(
            "kronecker product of {p}x{q} and {r}x{s} exceeds the {MAX_ELEMS}-entry cap"
        )));
    }
    let mut out = ComplexMatrix::zeros(p * r, q * s);
    for j in 0..q {
        for i in 0..p {
            let aij = a[(i, j)];
            if aij.re == T::zero() && aij.im == T::zero() {
                continue;
            }
            for l in 0..s {
                for k in 0..r {
                    out[(i * r + k, j * s + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    Ok(out)
}

/// Eigendecomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct EigenResult<T> {
    /// Real eigenvalues, sorted descending.
    pub eigenvalues: Vec<T>,
    /// Unit-norm eigenvectors, one column per eigenvalue.
    pub eigenvectors: ComplexMatrix<T>,
}

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// Inputs are checked against `A = A^H` (relative tolerance) and symmetrized
/// before iterating; eigenvalues come back sorted descending with unit-norm
/// eigenvectors.
pub fn hermitian_eig<T: Float>(a: &ComplexMatrix<T>) -> Result<EigenResult<T>> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Dimension(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let scale = a.frobenius_norm();
    let tol = T::cast(1e-8) * (T::one() + scale);
    if a.hermitian_defect() > tol {
        return Err(Error::Contract(format!(
            "matrix is not Hermitian: defect {} exceeds tolerance {}",
            a.hermitian_defect(),
            tol
        )));
    }

    let mut m = a.symmetrize();
    let mut q = ComplexMatrix::<T>::identity(n);
    let zero = T::zero();
    let stop = T::cast(40.0) * T::epsilon() * (T::one() + scale);

    for _sweep in 0..60 {
        let mut off = T::zero();
        for c in 0..n {
            for r in 0..c {
                off += m[(r, c)].norm_sqr();
            }
        }
        if off.sqrt() <= stop {
            break;
        }
        for p in 0..n {
            for qq in (p + 1)..n {
                let apq = m[(p, qq)];
                let mag = apq.norm();
                if mag <= stop * T::cast(1e-3) {
                    continue;
                }
                let app = m[(p, p)].re;
                let aqq = m[(qq, qq)].re;
                // Absorb the phase so the 2x2 block is real symmetric,
                // then apply the classic Jacobi rotation.
                let phase = apq.unscale(mag); // e^{i psi}
                let tau = (aqq - app) / (T::cast(2.0) * mag);
                let t = if tau >= zero {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                // J columns: [p] = (c, -s e^{-i psi}), [q] = (s, c e^{-i psi})
                let e_m = phase.conj();
                // Right-multiply by J: update columns p and q.
                for r in 0..n {
                    let xp = m[(r, p)];
                    let xq = m[(r, qq)];
                    m[(r, p)] = xp.scale(c) - (xq * e_m).scale(s);
                    m[(r, qq)] = xp.scale(s) + (xq * e_m).scale(c);
                }
                // Left-multiply by J^H: update rows p and q.
                let e_p = phase;
                for cc in 0..n {
                    let xp = m[(p, cc)];
                    let xq = m[(qq, cc)];
                    m[(p, cc)] = xp.scale(c) - (xq * e_p).scale(s);
                    m[(qq, cc)] = xp.scale(s) + (xq * e_p).scale(c);
                }
                // Accumulate eigenvectors.
                for r in 0..n {
                    let xp = q[(r, p)];
                    let xq = q[(r, qq)];
                    q[(r, p)] = xp.scale(c) - (xq * e_m).scale(s);
                    q[(r, qq)] = xp.scale(s) + (xq * e_m).scale(c);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let vals: Vec<T> = (0..n).map(|i| m[(i, i)].re).collect();
    order.sort_by(|&i, &j| vals[j].partial_cmp(&vals[i]).unwrap());

    let eigenvalues: Vec<T> = order.iter().map(|&i| vals[i]).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (new_c, &old_c) in order.iter().enumerate() {
        // Renormalize to keep unit columns after many rotations.
        let mut norm = T::zero();
        for r in 0..n {
            norm += q[(r, old_c)].norm_sqr();
        }
        let inv = T::one() / norm.sqrt();
        for r in 0..n {
            eigenvectors[(r, new_c)] = q[(r, old_c)].scale(inv);
        }
    }

    Ok(EigenResult {
        eigenvalues,
        eigenvectors,
    })
}
