//! Dense complex linear algebra sized for 2x2 and 4x4 matrices.
//!
//! Everything the rest of the library needs fits in a row-major `Vec` of
//! [`Complex64`]: products, Kronecker products, partial trace and partial
//! transpose in the fixed (|00>, |01>, |10>, |11>) basis, a cyclic Jacobi
//! eigensolver for Hermitian matrices, and PSD square roots. Party 1 is the
//! left slot of |i j>.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Convenience constructor for a complex scalar.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Which party of a two-qubit state an operation acts on.
/// Party one is the left slot of |i j>, party two the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Party {
    One,
    Two,
}

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ComplexMatrix {
            rows,
            cols,
            entries: vec![Complex64::ZERO; rows * cols],
        }
    }

    /// Identity matrix of size n.
    pub fn identity(n: usize) -> Self {
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    /// Builds a matrix from rows of complex entries.
    /// Panics if the rows are empty or ragged; intended for literals.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        ComplexMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().copied().collect(),
        }
    }

    /// Diagonal matrix from complex entries.
    pub fn diag(values: &[Complex64]) -> Self {
        let mut m = ComplexMatrix::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, *v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.entries[r * self.cols + c] = v;
    }

    /// Row-major entry slice.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Standard matrix product. Errors on inner-dimension mismatch.
    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Complex64::ZERO; self.rows];
        for i in 0..self.rows {
            let mut acc = Complex64::ZERO;
            for j in 0..self.cols {
                acc += self.get(i, j) * v[j];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Entrywise complex conjugate in the computational basis.
    pub fn conj(&self) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Kronecker product; the first factor is party 1 (left slot of |i j>).
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let aij = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(
                            i * other.rows + k,
                            j * other.cols + l,
                            aij * other.get(k, l),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z * s).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &ComplexMatrix,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<ComplexMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        })
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entry magnitude of the difference against `other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max entry of |M - M†|; zero for exactly Hermitian matrices.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    /// Max entry of |U†U - I|.
    pub fn unitarity_deviation(&self) -> f64 {
        let gram = self.dagger().matmul(self).expect("square");
        gram.max_abs_diff(&ComplexMatrix::identity(self.rows))
    }
}

/// Pauli X.
pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![c64(0.0, 0.0), c64(1.0, 0.0)],
        vec![c64(1.0, 0.0), c64(0.0, 0.0)],
    ])
}

/// Pauli Y.
pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![c64(0.0, 0.0), c64(0.0, -1.0)],
        vec![c64(0.0, 1.0), c64(0.0, 0.0)],
    ])
}

/// Pauli Z.
pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![c64(1.0, 0.0), c64(0.0, 0.0)],
        vec![c64(0.0, 0.0), c64(-1.0, 0.0)],
    ])
}

/// Traces out `party` from a two-qubit operator, returning the other
/// party's 2x2 reduced matrix. Tr1 leaves party 2, Tr2 leaves party 1.
pub fn partial_trace(rho: &ComplexMatrix, party: Party) -> Result<ComplexMatrix> {
    require_4x4(rho)?;
    let mut out = ComplexMatrix::zeros(2, 2);
    for a in 0..2 {
        for b in 0..2 {
            let mut acc = Complex64::ZERO;
            for k in 0..2 {
                // Basis index of |i j> is 2i + j.
                let (r, c) = match party {
                    Party::One => (2 * k + a, 2 * k + b),
                    Party::Two => (2 * a + k, 2 * b + k),
                };
                acc += rho.get(r, c);
            }
            out.set(a, b, acc);
        }
    }
    Ok(out)
}

/// Transposes the indices of `party` only. Hermiticity is preserved for
/// Hermitian input; the spectrum is the basis of the PPT test.
pub fn partial_transpose(rho: &ComplexMatrix, party: Party) -> Result<ComplexMatrix> {
    require_4x4(rho)?;
    let mut out = ComplexMatrix::zeros(4, 4);
    for i1 in 0..2 {
        for j1 in 0..2 {
            for i2 in 0..2 {
                for j2 in 0..2 {
                    let (r, c) = match party {
                        // swap the row/column index of the transposed party
                        Party::One => (2 * j1 + i2, 2 * i1 + j2),
                        Party::Two => (2 * i1 + j2, 2 * j1 + i2),
                    };
                    out.set(r, c, rho.get(2 * i1 + i2, 2 * j1 + j2));
                }
            }
        }
    }
    Ok(out)
}

fn require_4x4(m: &ComplexMatrix) -> Result<()> {
    if m.rows != 4 || m.cols != 4 {
        return Err(Error::DimensionMismatch(format!(
            "expected 4x4, got {}x{}",
            m.rows, m.cols
        )));
    }
    Ok(())
}

/// Eigenvalues (ascending) with matching orthonormal eigenvector columns.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl EigenSystem {
    /// V diag(lambda) V†, for reconstruction checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let d = ComplexMatrix::diag(
            &self
                .eigenvalues
                .iter()
                .map(|l| c64(*l, 0.0))
                .collect::<Vec<_>>(),
        );
        v.matmul(&d).unwrap().matmul(&v.dagger()).unwrap()
    }
}

/// Eigensystem of a Hermitian matrix by cyclic Jacobi rotations.
///
/// `tol` bounds the accepted Hermiticity deviation of the input. The sweep
/// budget and the off-diagonal stopping threshold are fixed
/// ([`tol::JACOBI_SWEEP_CAP`], [`tol::JACOBI_OFF_DIAGONAL`]); identical
/// input yields identical output.
pub fn hermitian_eigensystem(h: &ComplexMatrix, tol: f64) -> Result<EigenSystem> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigensystem needs a square matrix, got {}x{}",
            h.rows, h.cols
        )));
    }
    let dev = h.hermiticity_deviation();
    if dev > tol {
        return Err(Error::NotHermitian {
            deviation: dev,
            tol,
        });
    }

    let n = h.rows;
    // Work on the exactly Hermitian part so round-off in the input cannot
    // leak into the rotations.
    let mut a = h.add(&h.dagger()).unwrap().scale(c64(0.5, 0.0));
    let mut v = ComplexMatrix::identity(n);

    let mut converged = false;
    let mut sweeps = 0;
    while sweeps < tol::JACOBI_SWEEP_CAP {
        let off = max_off_diagonal(&a);
        if off <= tol::JACOBI_OFF_DIAGONAL {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }
    if !converged && max_off_diagonal(&a) > tol::JACOBI_OFF_DIAGONAL {
        return Err(Error::EigenNotConverged {
            sweeps,
            off_diagonal: max_off_diagonal(&a),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        eigenvalues.push(diag[src]);
        for r in 0..n {
            eigenvectors.set(r, dst, v.get(r, src));
        }
    }
    Ok(EigenSystem {
        eigenvalues,
        eigenvectors,
    })
}

fn max_off_diagonal(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut m: f64 = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            m = m.max(a.get(p, q).norm());
        }
    }
    m
}

/// One Jacobi rotation annihilating the (p, q) entry.
///
/// The complex entry is first made real by a phase on column q, then the
/// standard real rotation is applied; the combined 2x2 kernel is
/// [[c, s], [-s e^{-ib}, c e^{-ib}]] with b = arg a_pq.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let w = apq.norm();
    if w == 0.0 {
        return;
    }
    let phase = apq / w; // e^{ib}
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    let theta = (aqq - app) / (2.0 * w);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let kpp = c64(c, 0.0);
    let kpq = c64(s, 0.0);
    let kqp = -s * phase.conj();
    let kqq = c * phase.conj();

    let n = a.rows();
    // A <- K† A K applied to columns then rows p, q.
    for i in 0..n {
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set(i, p, aip * kpp + aiq * kqp);
        a.set(i, q, aip * kpq + aiq * kqq);
    }
    for j in 0..n {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a.set(p, j, kpp.conj() * apj + kqp.conj() * aqj);
        a.set(q, j, kpq.conj() * apj + kqq.conj() * aqj);
    }
    // Pin the rotated entries that are exactly known.
    a.set(p, q, Complex64::ZERO);
    a.set(q, p, Complex64::ZERO);
    a.set(p, p, c64(a.get(p, p).re, 0.0));
    a.set(q, q, c64(a.get(q, q).re, 0.0));

    // Accumulate eigenvectors, V <- V K.
    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, vip * kpp + viq * kqp);
        v.set(i, q, vip * kpq + viq * kqq);
    }
}

/// Hermitian PSD square root.
///
/// Eigenvalues in [-tol, 0) are clamped to 0; anything below -tol is an
/// error. The square of the result reproduces the input to 1e-9 Frobenius
/// for well-scaled matrices.
pub fn psd_sqrt(rho: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eigensystem(rho, tol.max(tol::HERMITICITY))?;
    let mut roots = Vec::with_capacity(eig.eigenvalues.len());
    for &l in &eig.eigenvalues {
        if l < -tol {
            return Err(Error::NotPositiveSemidefinite { value: l, tol });
        }
        roots.push(c64(l.max(0.0).sqrt(), 0.0));
    }
    let v = &eig.eigenvectors;
    Ok(v.matmul(&ComplexMatrix::diag(&roots))?.matmul(&v.dagger())?)
}
