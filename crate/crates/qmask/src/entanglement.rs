//! Entanglement and separability quantifiers, all in bits/ebits (log base 2).
//!
//! The measures collected here are the ones the masking analysis needs:
//! global and local von Neumann entropies, the entropic gap
//! delta_S = S(rho) - S(Tr_1 rho) (negative values certify entanglement),
//! Wootters concurrence, entanglement of formation, and negativity with the
//! PPT verdict.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{hermitian_eigensystem, partial_transpose, sigma_y, Party};
use crate::states::{DensityMatrix, PureState2Q};
use crate::tol;

/// Binary entropy h(x) = -x log2(x) - (1-x) log2(1-x), with 0 log 0 := 0.
pub fn binary_entropy(x: f64) -> f64 {
    let term = |v: f64| if v > 0.0 { -v * v.log2() } else { 0.0 };
    term(x) + term(1.0 - x)
}

/// Entanglement of formation of a two-qubit state as a function of its
/// concurrence: h((1 + sqrt(1 - C^2)) / 2).
pub fn eof_from_concurrence(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    binary_entropy((1.0 + (1.0 - c * c).sqrt()) / 2.0)
}

/// S(rho) = -sum_i lambda_i log2(lambda_i). Result lies in [0, log2 dim].
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let eig = hermitian_eigensystem(rho.mat(), tol::HERMITICITY)?;
    Ok(eig
        .eigenvalues
        .iter()
        .map(|&l| if l > 0.0 { -l * l.log2() } else { 0.0 })
        .sum())
}

/// delta_S = S(rho) - S(Tr_1 rho) for a two-qubit state.
///
/// A negative gap certifies entanglement: separable states majorize their
/// reductions, so their global entropy cannot drop below either local one.
pub fn entropic_gap(rho: &DensityMatrix) -> Result<f64> {
    let reduced = rho.reduced(Party::One)?;
    Ok(von_neumann_entropy(rho)? - von_neumann_entropy(&reduced)?)
}

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), the li descending square
/// roots of the spectrum of sqrt(rho) rho_tilde sqrt(rho), where
/// rho_tilde = (sy (x) sy) rho* (sy (x) sy) and * is entrywise conjugation
/// in the computational basis.
///
/// The Hermitian form is used instead of the non-Hermitian product
/// rho rho_tilde; the spectra coincide and it keeps the eigensolver real.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    let yy = sigma_y().kron(&sigma_y());
    let tilde = yy.matmul(&rho.mat().conj())?.matmul(&yy)?;
    let root = crate::linalg::psd_sqrt(rho.mat(), tol::PSD_CLAMP)?;
    let m = root.matmul(&tilde)?.matmul(&root)?;
    let eig = hermitian_eigensystem(&m, tol::HERMITICITY)?;
    let mut l: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&v| {
            if v > tol::CONCURRENCE_FLOOR {
                v.sqrt()
            } else {
                0.0
            }
        })
        .collect();
    l.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}

/// Entanglement of formation in ebits; zero exactly when the concurrence is.
pub fn entanglement_of_formation(rho: &DensityMatrix) -> Result<f64> {
    Ok(eof_from_concurrence(concurrence(rho)?))
}

/// Negativity sum_i max(0, -mu_i) over the spectrum of the partial transpose
/// on party 2. Zero iff PPT; for two qubits, zero iff separable.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    let pt = partial_transpose(rho.mat(), Party::Two)?;
    let eig = hermitian_eigensystem(&pt, tol::HERMITICITY)?;
    Ok(eig.eigenvalues.iter().map(|&mu| (-mu).max(0.0)).sum())
}

/// Local entropy S(Tr_1 |psi><psi|) of a pure two-qubit state, in ebits.
/// For pure states this equals the entanglement of formation.
pub fn pure_entanglement_entropy(psi: &PureState2Q) -> Result<f64> {
    let reduced = psi.projector().reduced(Party::One)?;
    von_neumann_entropy(&reduced)
}

/// Every quantifier of one state, evaluated in a single pass.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EntanglementReport {
    /// S(rho) in bits.
    pub entropy_global: f64,
    /// S(Tr_1 rho) in bits.
    pub entropy_local_1: f64,
    /// S(Tr_2 rho) in bits.
    pub entropy_local_2: f64,
    /// entropy_global - entropy_local_1.
    pub delta_s: f64,
    pub concurrence: f64,
    pub eof: f64,
    pub negativity: f64,
    /// True when negativity is at most the PPT round-off floor (1e-9).
    pub ppt: bool,
}

impl EntanglementReport {
    pub fn for_state(rho: &DensityMatrix) -> Result<Self> {
        let entropy_global = von_neumann_entropy(rho)?;
        let entropy_local_1 = von_neumann_entropy(&rho.reduced(Party::One)?)?;
        let entropy_local_2 = von_neumann_entropy(&rho.reduced(Party::Two)?)?;
        let c = concurrence(rho)?;
        let negativity = negativity(rho)?;
        Ok(EntanglementReport {
            entropy_global,
            entropy_local_1,
            entropy_local_2,
            delta_s: entropy_global - entropy_local_1,
            concurrence: c,
            eof: eof_from_concurrence(c),
            negativity,
            ppt: negativity <= tol::PPT,
        })
    }
}
