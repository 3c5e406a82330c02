//! Masking machinery: the partial-trace residual, masker application, the
//! Cartan-parametrized two-qubit unitary family, phase unitaries, a concrete
//! reference masker, and convexity verification for masked mixtures.
//!
//! A unitary U masks a set of states when every masked output shares the
//! same reduced state on each party, so neither party alone can tell the
//! inputs apart. The residual quantifies the failure of that condition for a
//! pair of outputs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c64, partial_trace, ComplexMatrix, Party};
use crate::states::{DensityMatrix, PureQubit};
use crate::tol;

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

/// Parameters of the masker family U = U_d (V_A (x) V_B) with
/// U_d = exp(-i ax sx(x)sx - i ay sy(x)sy - i az sz(x)sz) and the local
/// factors given as Z-Y-Z Euler triples.
///
/// Only pre-local factors appear: post-local unitaries change neither
/// masking residuals nor entanglement quantifiers, so the family already
/// covers every masker relevant here.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaskerParams {
    pub alpha_x: f64,
    pub alpha_y: f64,
    pub alpha_z: f64,
    pub euler_a: [f64; 3],
    pub euler_b: [f64; 3],
}

impl MaskerParams {
    pub fn identity() -> Self {
        MaskerParams {
            alpha_x: 0.0,
            alpha_y: 0.0,
            alpha_z: 0.0,
            euler_a: [0.0; 3],
            euler_b: [0.0; 3],
        }
    }

    /// Same masker up to post-local Pauli factors and a global phase, with
    /// each Cartan coefficient folded into [0, pi/2).
    ///
    /// The fold uses exp(-i (a + pi/2) s_k(x)s_k) = -i (s_k(x)s_k) exp(-i a
    /// s_k(x)s_k); the discarded factor acts after the masker and therefore
    /// leaves residuals and every entanglement quantifier unchanged.
    pub fn canonicalized(&self) -> Self {
        MaskerParams {
            alpha_x: self.alpha_x.rem_euclid(FRAC_PI_2),
            alpha_y: self.alpha_y.rem_euclid(FRAC_PI_2),
            alpha_z: self.alpha_z.rem_euclid(FRAC_PI_2),
            euler_a: self.euler_a,
            euler_b: self.euler_b,
        }
    }
}

/// Outcome of a masking check at a stated tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaskingVerdict {
    pub residual: f64,
    pub masked: bool,
    pub tolerance: f64,
}

impl MaskingVerdict {
    pub fn new(residual: f64, tolerance: f64) -> Self {
        MaskingVerdict {
            residual,
            masked: residual <= tolerance,
            tolerance,
        }
    }
}

/// ||Tr_1 L1 - Tr_1 L2||_F^2 + ||Tr_2 L1 - Tr_2 L2||_F^2.
///
/// Zero exactly when both masking equalities hold for the pair. Symmetric
/// in its arguments, and invariant when the same local unitary u (x) v is
/// applied to both states.
pub fn masking_residual(lambda1: &DensityMatrix, lambda2: &DensityMatrix) -> Result<f64> {
    if lambda1.dim() != 4 || lambda2.dim() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "masking residual needs 4x4 states, got {}x{0} and {1}x{1}",
            lambda1.dim(),
            lambda2.dim()
        )));
    }
    let mut total = 0.0;
    for party in [Party::One, Party::Two] {
        let d = partial_trace(lambda1.mat(), party)?
            .sub(&partial_trace(lambda2.mat(), party)?)?;
        total += d.frobenius_norm().powi(2);
    }
    Ok(total)
}

/// U (input (x) ancilla) U† for a 4x4 unitary U.
pub fn apply_masker(
    u: &ComplexMatrix,
    input: &DensityMatrix,
    ancilla: &DensityMatrix,
) -> Result<DensityMatrix> {
    if u.rows() != 4 || u.cols() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "masker must be 4x4, got {}x{}",
            u.rows(),
            u.cols()
        )));
    }
    if input.dim() != 2 || ancilla.dim() != 2 {
        return Err(Error::DimensionMismatch(
            "masker inputs must be single-qubit states".into(),
        ));
    }
    let dev = u.unitarity_deviation();
    if dev > tol::UNITARITY {
        return Err(Error::NotUnitary { deviation: dev });
    }
    let joint = input.mat().kron(ancilla.mat());
    let out = u.matmul(&joint)?.matmul(&u.dagger())?;
    Ok(DensityMatrix::trusted(out))
}

const INV_SQRT2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Bell vectors in the order (phi+, phi-, psi+, psi-).
fn bell_basis() -> [[Complex64; 4]; 4] {
    let r = c64(INV_SQRT2, 0.0);
    let z = Complex64::ZERO;
    [
        [r, z, z, r],
        [r, z, z, -r],
        [z, r, r, z],
        [z, r, -r, z],
    ]
}

/// The Cartan factor U_d alone.
///
/// The three sigma_k (x) sigma_k terms commute and share the Bell basis as
/// eigenvectors, so U_d = sum_k exp(-i mu_k) |B_k><B_k| with phases
/// mu(phi+) = ax - ay + az, mu(phi-) = -ax + ay + az,
/// mu(psi+) = ax + ay - az, mu(psi-) = -ax - ay - az.
fn cartan_diagonal(ax: f64, ay: f64, az: f64) -> ComplexMatrix {
    let mus = [ax - ay + az, -ax + ay + az, ax + ay - az, -ax - ay - az];
    let basis = bell_basis();
    let mut u = ComplexMatrix::zeros(4, 4);
    for (mu, b) in mus.iter().zip(&basis) {
        let phase = Complex64::new(0.0, -mu).exp();
        for i in 0..4 {
            for j in 0..4 {
                let v = u.get(i, j) + phase * b[i] * b[j].conj();
                u.set(i, j, v);
            }
        }
    }
    u
}

/// Z-Y-Z Euler rotation Rz(a) Ry(b) Rz(c) with
/// Rz(t) = diag(e^{-it/2}, e^{it/2}).
fn euler_zyz(angles: [f64; 3]) -> ComplexMatrix {
    let [a, b, c] = angles;
    let rz = |t: f64| {
        ComplexMatrix::diag(&[
            Complex64::new(0.0, -t / 2.0).exp(),
            Complex64::new(0.0, t / 2.0).exp(),
        ])
    };
    let mut ry = ComplexMatrix::zeros(2, 2);
    ry.set(0, 0, c64((b / 2.0).cos(), 0.0));
    ry.set(0, 1, c64(-(b / 2.0).sin(), 0.0));
    ry.set(1, 0, c64((b / 2.0).sin(), 0.0));
    ry.set(1, 1, c64((b / 2.0).cos(), 0.0));
    rz(a).matmul(&ry).unwrap().matmul(&rz(c)).unwrap()
}

/// Full masker U = U_d (V_A (x) V_B). Unitary for every parameter value.
pub fn cartan_unitary(params: &MaskerParams) -> ComplexMatrix {
    let ud = cartan_diagonal(params.alpha_x, params.alpha_y, params.alpha_z);
    let local = euler_zyz(params.euler_a).kron(&euler_zyz(params.euler_b));
    ud.matmul(&local).unwrap()
}

/// I (x) diag(1, e^{iy}) = diag(1, e^{iy}, 1, e^{iy}).
///
/// Composing this after any masker changes neither masking residuals nor
/// entanglement quantifiers; it is the freedom left over in the masked
/// outputs. Intended for y in [0, 2pi].
pub fn phase_unitary(y: f64) -> ComplexMatrix {
    let e = Complex64::new(0.0, y).exp();
    ComplexMatrix::diag(&[Complex64::ONE, e, Complex64::ONE, e])
}

/// Reference masker with columns
/// U|00> = (|01>+|10>)/sqrt(2), U|01> = (|01>-|10>)/sqrt(2),
/// U|10> = (|00>-|11>)/sqrt(2), U|11> = (|00>+|11>)/sqrt(2);
/// it sends |0>, |1> (ancilla |0>) onto a masked, maximally entangled pair.
pub fn canonical_orthogonal_masker() -> ComplexMatrix {
    let r = c64(INV_SQRT2, 0.0);
    let z = Complex64::ZERO;
    let mut u = ComplexMatrix::zeros(4, 4);
    // Columns are the images of |00>, |01>, |10>, |11>.
    let cols = [
        [z, r, r, z],
        [z, r, -r, z],
        [r, z, z, -r],
        [r, z, z, r],
    ];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            u.set(i, j, *v);
        }
    }
    u
}

/// Checks that a masker of the pure pair extends to all classical mixtures.
///
/// Requires u to mask psi1 and psi2 (residual at most the masking
/// tolerance); a violation is a precondition error, reported distinctly
/// from a verification failure. Returns true iff for every p in `p_grid`
/// both reduced states of U(mix (x) ancilla)U† match the common reductions
/// of the masked endpoints within 1e-10.
pub fn verify_convex_masking(
    u: &ComplexMatrix,
    psi1: &PureQubit,
    psi2: &PureQubit,
    ancilla: &DensityMatrix,
    p_grid: &[f64],
) -> Result<bool> {
    let out1 = apply_masker(u, &psi1.projector(), ancilla)?;
    let out2 = apply_masker(u, &psi2.projector(), ancilla)?;
    let residual = masking_residual(&out1, &out2)?;
    if residual > tol::MASKING {
        return Err(Error::MaskingConstraint {
            residual,
            tol: tol::MASKING,
        });
    }

    let common_1 = partial_trace(out1.mat(), Party::One)?;
    let common_2 = partial_trace(out1.mat(), Party::Two)?;
    for &p in p_grid {
        let mixed = crate::states::mix(&psi1.projector(), &psi2.projector(), p)?;
        let masked = apply_masker(u, &mixed, ancilla)?;
        let d1 = partial_trace(masked.mat(), Party::One)?.max_abs_diff(&common_1);
        let d2 = partial_trace(masked.mat(), Party::Two)?.max_abs_diff(&common_2);
        if d1 > 1e-10 || d2 > 1e-10 {
            return Ok(false);
        }
    }
    Ok(true)
}
