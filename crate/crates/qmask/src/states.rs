//! Constructors for the state families under study.
//!
//! Two canonical families of two-qubit pure-state pairs appear throughout:
//!
//! * the orthogonal (commuting) family
//!   chi1 = sqrt(a1) (cos(t'/2)|00> + sin(t'/2)|01>)
//!        + sqrt(1-a1) (cos(t/2)|10> + sin(t/2)|11>),
//!   chi2 = sqrt(a2) (sin(t'/2)|00> - cos(t'/2)|01>)
//!        + sqrt(1-a2) (sin(t/2)|10> - cos(t/2)|11>),
//!   which satisfies the masking equalities exactly at a1 = a2 = 1/2,
//!   t' = t + pi;
//!
//! * the non-orthogonal family built from the qubit pair
//!   tau0 = cos(t/2)|0> + sin(t/2)|1>, tau1 = sin(t/2)|0> + cos(t/2)|1>,
//!   as Sigma'1 = (|0 tau0> + |1 tau1>)/sqrt(2),
//!   Sigma'2 = (|0 tau1> + |1 tau0>)/sqrt(2), masked at equal weights with
//!   the partner angle fixed to pi - t.
//!
//! Classical mixtures of either pair stay masked; the mixture constructors
//! are the inputs to every entropy and separability scan.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{c64, partial_trace, ComplexMatrix, Party};
use crate::tol;

use std::f64::consts::PI;

/// Bloch sphere angles; `polar` in [0, pi], `azimuth` in [0, 2pi).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochAngles {
    polar: f64,
    azimuth: f64,
}

impl BlochAngles {
    pub fn new(polar: f64, azimuth: f64) -> Result<Self> {
        if !polar.is_finite() || !(0.0..=PI).contains(&polar) {
            return Err(Error::OutOfRange {
                name: "polar",
                value: polar,
                range: "[0, pi]",
            });
        }
        if !azimuth.is_finite() || !(0.0..2.0 * PI).contains(&azimuth) {
            return Err(Error::OutOfRange {
                name: "azimuth",
                value: azimuth,
                range: "[0, 2pi)",
            });
        }
        Ok(BlochAngles { polar, azimuth })
    }

    pub fn polar(&self) -> f64 {
        self.polar
    }

    pub fn azimuth(&self) -> f64 {
        self.azimuth
    }
}

/// Normalized single-qubit pure state, amplitudes in the (|0>, |1>) basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PureQubit {
    amplitudes: [Complex64; 2],
}

impl PureQubit {
    pub fn new(amplitudes: [Complex64; 2]) -> Result<Self> {
        let norm = (amplitudes[0].norm_sqr() + amplitudes[1].norm_sqr()).sqrt();
        if (norm - 1.0).abs() > tol::NORMALIZATION {
            return Err(Error::NotNormalized { norm });
        }
        Ok(PureQubit { amplitudes })
    }

    pub fn zero() -> Self {
        PureQubit {
            amplitudes: [Complex64::ONE, Complex64::ZERO],
        }
    }

    pub fn one() -> Self {
        PureQubit {
            amplitudes: [Complex64::ZERO, Complex64::ONE],
        }
    }

    /// cos(t/2)|0> + sin(t/2)|1>, the real meridian of the Bloch sphere.
    pub fn real_superposition(theta: f64) -> Self {
        PureQubit {
            amplitudes: [
                c64((theta / 2.0).cos(), 0.0),
                c64((theta / 2.0).sin(), 0.0),
            ],
        }
    }

    pub fn amplitudes(&self) -> &[Complex64; 2] {
        &self.amplitudes
    }

    pub fn overlap(&self, other: &PureQubit) -> Complex64 {
        self.amplitudes[0].conj() * other.amplitudes[0]
            + self.amplitudes[1].conj() * other.amplitudes[1]
    }

    /// Rank-1 projector |psi><psi| as a density matrix.
    pub fn projector(&self) -> DensityMatrix {
        let mut m = ComplexMatrix::zeros(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                m.set(i, j, self.amplitudes[i] * self.amplitudes[j].conj());
            }
        }
        DensityMatrix::trusted(m)
    }
}

/// Normalized two-qubit pure state in the (|00>, |01>, |10>, |11>) basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState2Q {
    amplitudes: [Complex64; 4],
}

impl PureState2Q {
    pub fn new(amplitudes: [Complex64; 4]) -> Result<Self> {
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > tol::NORMALIZATION {
            return Err(Error::NotNormalized { norm });
        }
        Ok(PureState2Q { amplitudes })
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amplitudes
    }

    pub fn overlap(&self, other: &PureState2Q) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Product state |a> (x) |b>; party 1 is the left factor.
    pub fn product(a: &PureQubit, b: &PureQubit) -> Self {
        let mut amp = [Complex64::ZERO; 4];
        for i in 0..2 {
            for j in 0..2 {
                amp[2 * i + j] = a.amplitudes[i] * b.amplitudes[j];
            }
        }
        PureState2Q { amplitudes: amp }
    }

    /// Rank-1 projector |psi><psi| as a density matrix.
    pub fn projector(&self) -> DensityMatrix {
        let mut m = ComplexMatrix::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                m.set(i, j, self.amplitudes[i] * self.amplitudes[j].conj());
            }
        }
        DensityMatrix::trusted(m)
    }
}

/// Validated density matrix, 2x2 or 4x4.
///
/// Construction through [`DensityMatrix::new`] enforces Hermiticity within
/// 1e-10, unit trace within 1e-10, and eigenvalues no lower than -1e-9.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        if !mat.is_square() || (mat.rows() != 2 && mat.rows() != 4) {
            return Err(Error::DimensionMismatch(format!(
                "density matrix must be 2x2 or 4x4, got {}x{}",
                mat.rows(),
                mat.cols()
            )));
        }
        let dev = mat.hermiticity_deviation();
        if dev > tol::HERMITICITY {
            return Err(Error::NotHermitian {
                deviation: dev,
                tol: tol::HERMITICITY,
            });
        }
        let trace = mat.trace();
        if (trace.re - 1.0).abs() > tol::NORMALIZATION || trace.im.abs() > tol::NORMALIZATION {
            return Err(Error::TraceNotOne { trace: trace.re });
        }
        let eig = crate::linalg::hermitian_eigensystem(&mat, tol::HERMITICITY)?;
        if let Some(&low) = eig.eigenvalues.first() {
            if low < -tol::PSD_CLAMP {
                return Err(Error::NotPositiveSemidefinite {
                    value: low,
                    tol: tol::PSD_CLAMP,
                });
            }
        }
        Ok(DensityMatrix { mat })
    }

    /// Wraps a matrix that is PSD, Hermitian and trace-1 by construction
    /// (projectors of normalized states, convex mixtures of valid inputs).
    pub(crate) fn trusted(mat: ComplexMatrix) -> Self {
        debug_assert!(mat.hermiticity_deviation() <= 1e-9);
        debug_assert!((mat.trace().re - 1.0).abs() <= 1e-9);
        DensityMatrix { mat }
    }

    pub fn mat(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    /// Reduced state after tracing out `party`; only defined for 4x4.
    pub fn reduced(&self, party: Party) -> Result<DensityMatrix> {
        Ok(DensityMatrix::trusted(partial_trace(&self.mat, party)?))
    }
}

/// Single-qubit state cos(x/2)|0> + e^{iy} sin(x/2)|1> from Bloch angles.
pub fn bloch_to_pure(angles: BlochAngles) -> PureQubit {
    let half = angles.polar / 2.0;
    let phase = Complex64::new(0.0, angles.azimuth).exp();
    PureQubit {
        amplitudes: [c64(half.cos(), 0.0), phase * half.sin()],
    }
}

fn check_range(name: &'static str, value: f64, lo: f64, hi: f64, range: &'static str) -> Result<()> {
    if !value.is_finite() || value < lo || value > hi {
        return Err(Error::OutOfRange { name, value, range });
    }
    Ok(())
}

/// The orthogonal pair (chi1, chi2) exactly as expanded in the module docs.
///
/// The two outputs are orthogonal for every parameter choice; they satisfy
/// the masking equalities only at a1 = a2 = 1/2, t' = t + pi.
pub fn walgate_orthogonal_pair(
    theta: f64,
    theta_prime: f64,
    alpha1: f64,
    alpha2: f64,
) -> Result<(PureState2Q, PureState2Q)> {
    check_range("theta", theta, 0.0, 2.0 * PI, "[0, 2pi]")?;
    check_range("theta_prime", theta_prime, 0.0, 2.0 * PI, "[0, 2pi]")?;
    check_range("alpha1", alpha1, 0.0, 1.0, "[0, 1]")?;
    check_range("alpha2", alpha2, 0.0, 1.0, "[0, 1]")?;

    let (ct, st) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let (ctp, stp) = ((theta_prime / 2.0).cos(), (theta_prime / 2.0).sin());

    let (r1, q1) = (alpha1.sqrt(), (1.0 - alpha1).sqrt());
    let (r2, q2) = (alpha2.sqrt(), (1.0 - alpha2).sqrt());

    let chi1 = PureState2Q {
        amplitudes: [
            c64(r1 * ctp, 0.0),
            c64(r1 * stp, 0.0),
            c64(q1 * ct, 0.0),
            c64(q1 * st, 0.0),
        ],
    };
    let chi2 = PureState2Q {
        amplitudes: [
            c64(r2 * stp, 0.0),
            c64(-r2 * ctp, 0.0),
            c64(q2 * st, 0.0),
            c64(-q2 * ct, 0.0),
        ],
    };
    Ok((chi1, chi2))
}

/// The orthogonal pair at the masking point: equal weights and t' = t + pi.
/// Both outputs are maximally entangled and share both reduced states.
pub fn canonical_orthogonal_pair(theta: f64) -> Result<(PureState2Q, PureState2Q)> {
    check_range("theta", theta, 0.0, PI, "[0, pi]")?;
    walgate_orthogonal_pair(theta, theta + PI, 0.5, 0.5)
}

/// The non-orthogonal pair (Sigma'1, Sigma'2) at the masking point.
///
/// Overlap <Sigma'1|Sigma'2> = sin(theta); the two members carry equal
/// entanglement |cos(theta)| (as concurrence), and at theta = pi/2 they
/// coincide in a single product state.
pub fn canonical_nonorthogonal_pair(theta: f64) -> Result<(PureState2Q, PureState2Q)> {
    check_range("theta", theta, 0.0, PI / 2.0, "[0, pi/2]")?;
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let r = std::f64::consts::FRAC_1_SQRT_2;
    // tau0 = (c, s), tau1 = (s, c)
    let sigma1 = PureState2Q {
        amplitudes: [
            c64(r * c, 0.0),
            c64(r * s, 0.0),
            c64(r * s, 0.0),
            c64(r * c, 0.0),
        ],
    };
    let sigma2 = PureState2Q {
        amplitudes: [
            c64(r * s, 0.0),
            c64(r * c, 0.0),
            c64(r * c, 0.0),
            c64(r * s, 0.0),
        ],
    };
    Ok((sigma1, sigma2))
}

/// Convex combination p a + (1-p) b.
pub fn mix(a: &DensityMatrix, b: &DensityMatrix, p: f64) -> Result<DensityMatrix> {
    check_range("p", p, 0.0, 1.0, "[0, 1]")?;
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cannot mix {}x{0} with {1}x{1}",
            a.dim(),
            b.dim()
        )));
    }
    let m = a
        .mat
        .scale(c64(p, 0.0))
        .add(&b.mat.scale(c64(1.0 - p, 0.0)))?;
    Ok(DensityMatrix::trusted(m))
}

/// rho(p, theta) = p |chi1><chi1| + (1-p) |chi2><chi2| over the canonical
/// orthogonal pair. Spectrum {p, 1-p, 0, 0}; both reduced states are I/2.
pub fn masked_mixture_orthogonal(p: f64, theta: f64) -> Result<DensityMatrix> {
    check_range("p", p, 0.0, 1.0, "[0, 1]")?;
    let (chi1, chi2) = canonical_orthogonal_pair(theta)?;
    mix(&chi1.projector(), &chi2.projector(), p)
}

/// kappa'(p, theta) = p |Sigma'1><Sigma'1| + (1-p) |Sigma'2><Sigma'2|.
/// The members overlap for theta > 0, so the spectrum is not {p, 1-p}.
pub fn masked_mixture_nonorthogonal(p: f64, theta: f64) -> Result<DensityMatrix> {
    check_range("p", p, 0.0, 1.0, "[0, 1]")?;
    let (s1, s2) = canonical_nonorthogonal_pair(theta)?;
    mix(&s1.projector(), &s2.projector(), p)
}
