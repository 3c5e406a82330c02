//! Masker search and the brute-force grid oracles.
//!
//! Two numerical problems live here. The first is continuous: over the nine
//! masker parameters, find a unitary that masks a given pair of pure qubit
//! inputs (ancilla |0><0|), or additionally minimize the entanglement of
//! formation of the masked mixtures. The search is multi-start Nelder-Mead;
//! restarts are seeded independently from `seed + restart_index` and merged
//! by a pure reduction, so results are bit-identical across runs and across
//! serial or parallel execution.
//!
//! The second is discrete: exhaustive residual scans over the closed-form
//! state families, establishing that the masking equalities pin down the
//! family parameters (equal weights and the reflected partner angle) up to
//! grid resolution.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entanglement::entanglement_of_formation;
use crate::error::{Error, Result};
use crate::linalg::c64;
use crate::masking::{apply_masker, cartan_unitary, masking_residual, MaskerParams};
use crate::states::{mix, walgate_orthogonal_pair, DensityMatrix, PureQubit, PureState2Q};
use crate::tol;

use std::f64::consts::PI;

const DIM: usize = 9;

/// Knobs of the multi-start search. `Default` gives the reference settings:
/// 64 restarts, 2000 iterations, tolerance 1e-8, penalty weight 1e4,
/// simplex scale 0.3, and a uniform 21-point mixing grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    pub seed: u64,
    pub masking_tolerance: f64,
    pub penalty_weight: f64,
    pub simplex_scale: f64,
    /// Sorted mixing weights in [0, 1]; 0.5 should be present to observe
    /// the separability point.
    pub p_grid: Vec<f64>,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            restarts: 64,
            max_iterations: 2000,
            seed: 0,
            masking_tolerance: 1e-8,
            penalty_weight: 1e4,
            simplex_scale: 0.3,
            p_grid: uniform_grid(21),
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::InvalidConfig(msg.into()));
        if self.restarts == 0 {
            return fail("restarts must be positive");
        }
        if self.max_iterations == 0 {
            return fail("max_iterations must be positive");
        }
        if !(self.masking_tolerance > 0.0) {
            return fail("masking_tolerance must be positive");
        }
        if !self.penalty_weight.is_finite() || self.penalty_weight < 0.0 {
            return fail("penalty_weight must be finite and non-negative");
        }
        if !(self.simplex_scale > 0.0) {
            return fail("simplex_scale must be positive");
        }
        if self.p_grid.is_empty() {
            return fail("p_grid must be non-empty");
        }
        if self.p_grid.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return fail("p_grid entries must lie in [0, 1]");
        }
        if self.p_grid.windows(2).any(|w| w[0] > w[1]) {
            return fail("p_grid must be sorted ascending");
        }
        Ok(())
    }
}

/// `steps` uniform points covering [0, 1] inclusive.
pub fn uniform_grid(steps: usize) -> Vec<f64> {
    assert!(steps >= 2, "a uniform grid needs at least 2 points");
    (0..steps)
        .map(|k| k as f64 / (steps - 1) as f64)
        .collect()
}

/// Outcome of a search. `eof_by_p` is the entanglement of formation of the
/// masked mixtures of the two inputs under the returned parameters, whether
/// or not the run converged.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimizationResult {
    pub params: MaskerParams,
    pub residual: f64,
    pub eof_by_p: Vec<(f64, f64)>,
    pub min_eof: f64,
    pub argmin_p: f64,
    pub converged: bool,
    pub restart_index: usize,
}

fn params_from(x: &[f64; DIM]) -> MaskerParams {
    MaskerParams {
        alpha_x: x[0],
        alpha_y: x[1],
        alpha_z: x[2],
        euler_a: [x[3], x[4], x[5]],
        euler_b: [x[6], x[7], x[8]],
    }
}

fn ancilla() -> DensityMatrix {
    PureQubit::zero().projector()
}

fn pair_residual(params: &MaskerParams, input1: &PureQubit, input2: &PureQubit) -> f64 {
    let u = cartan_unitary(params);
    let anc = ancilla();
    let o1 = apply_masker(&u, &input1.projector(), &anc).expect("fixed dims");
    let o2 = apply_masker(&u, &input2.projector(), &anc).expect("fixed dims");
    masking_residual(&o1, &o2).expect("fixed dims")
}

fn eof_curve(
    params: &MaskerParams,
    input1: &PureQubit,
    input2: &PureQubit,
    p_grid: &[f64],
) -> Vec<(f64, f64)> {
    let u = cartan_unitary(params);
    let anc = ancilla();
    let (p1, p2) = (input1.projector(), input2.projector());
    p_grid
        .iter()
        .map(|&p| {
            let mixed = mix(&p1, &p2, p).expect("p validated by caller");
            let masked = apply_masker(&u, &mixed, &anc).expect("fixed dims");
            let e = entanglement_of_formation(&masked).expect("valid state");
            (p, e)
        })
        .collect()
}

struct SearchOutcome {
    x: [f64; DIM],
    objective: f64,
}

/// One Nelder-Mead run with the standard (1, 2, 0.5, 0.5) coefficients.
/// Stops when the simplex diameter or objective spread collapses, or after
/// `max_iterations` reflections.
fn nelder_mead<F: Fn(&[f64; DIM]) -> f64>(
    f: &F,
    x0: [f64; DIM],
    scale: f64,
    max_iterations: usize,
) -> SearchOutcome {
    let mut verts: Vec<[f64; DIM]> = Vec::with_capacity(DIM + 1);
    verts.push(x0);
    for k in 0..DIM {
        let mut v = x0;
        v[k] += scale;
        verts.push(v);
    }
    let mut fvals: Vec<f64> = verts.iter().map(|v| f(v)).collect();

    for _ in 0..max_iterations {
        let mut order: Vec<usize> = (0..=DIM).collect();
        order.sort_by(|&a, &b| fvals[a].total_cmp(&fvals[b]));
        let (best, second_worst, worst) = (order[0], order[DIM - 1], order[DIM]);

        let diameter = verts
            .iter()
            .map(|v| {
                v.iter()
                    .zip(&verts[best])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max);
        if diameter < tol::SIMPLEX_DIAMETER
            || fvals[worst] - fvals[best] < tol::OBJECTIVE_SPREAD
        {
            break;
        }

        let mut centroid = [0.0; DIM];
        for (i, v) in verts.iter().enumerate() {
            if i == worst {
                continue;
            }
            for k in 0..DIM {
                centroid[k] += v[k] / DIM as f64;
            }
        }
        let blend = |t: f64| {
            let mut x = [0.0; DIM];
            for k in 0..DIM {
                x[k] = centroid[k] + t * (centroid[k] - verts[worst][k]);
            }
            x
        };

        let reflected = blend(1.0);
        let fr = f(&reflected);
        if fr < fvals[best] {
            let expanded = blend(2.0);
            let fe = f(&expanded);
            if fe < fr {
                verts[worst] = expanded;
                fvals[worst] = fe;
            } else {
                verts[worst] = reflected;
                fvals[worst] = fr;
            }
        } else if fr < fvals[second_worst] {
            verts[worst] = reflected;
            fvals[worst] = fr;
        } else {
            let contracted = if fr < fvals[worst] {
                blend(0.5)
            } else {
                blend(-0.5)
            };
            let fc = f(&contracted);
            if fc < fvals[worst].min(fr) {
                verts[worst] = contracted;
                fvals[worst] = fc;
            } else {
                for i in 0..=DIM {
                    if i == best {
                        continue;
                    }
                    for k in 0..DIM {
                        verts[i][k] = verts[best][k] + 0.5 * (verts[i][k] - verts[best][k]);
                    }
                    fvals[i] = f(&verts[i]);
                }
            }
        }
    }

    let best = fvals
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.total_cmp(b))
        .map(|(i, _)| i)
        .unwrap();
    SearchOutcome {
        x: verts[best],
        objective: fvals[best],
    }
}

/// Runs the restarts in parallel and merges by lowest objective, ties
/// broken by lowest restart index. The merge is a pure reduction, so the
/// result does not depend on execution order.
fn multistart<F: Fn(&[f64; DIM]) -> f64 + Sync>(
    f: &F,
    config: &OptimizerConfig,
) -> (usize, SearchOutcome) {
    (0..config.restarts)
        .into_par_iter()
        .map(|restart| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(restart as u64));
            let mut x0 = [0.0; DIM];
            for v in &mut x0 {
                *v = -PI + 2.0 * PI * rng.gen::<f64>();
            }
            (
                restart,
                nelder_mead(f, x0, config.simplex_scale, config.max_iterations),
            )
        })
        .collect::<Vec<_>>()
        .into_iter()
        .min_by(|(ra, a), (rb, b)| a.objective.total_cmp(&b.objective).then(ra.cmp(rb)))
        .expect("restarts > 0 validated")
}

fn check_distinct(input1: &PureQubit, input2: &PureQubit) -> Result<()> {
    if input1.overlap(input2).norm() >= 1.0 - tol::IDENTICAL_OVERLAP {
        return Err(Error::IdenticalInputs);
    }
    Ok(())
}

fn assemble(
    restart_index: usize,
    x: &[f64; DIM],
    input1: &PureQubit,
    input2: &PureQubit,
    config: &OptimizerConfig,
) -> OptimizationResult {
    let params = params_from(x);
    let residual = pair_residual(&params, input1, input2);
    let eof_by_p = eof_curve(&params, input1, input2, &config.p_grid);
    let (argmin_p, min_eof) = eof_by_p
        .iter()
        .copied()
        .min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.total_cmp(&b.0)))
        .expect("p_grid validated non-empty");
    OptimizationResult {
        params,
        residual,
        eof_by_p,
        min_eof,
        argmin_p,
        converged: residual <= config.masking_tolerance,
        restart_index,
    }
}

/// Searches for a masker of the two pure inputs (ancilla |0><0|), taking
/// the best restart by final residual. `converged` reflects whether that
/// residual meets `config.masking_tolerance`; a run where no restart
/// converged still returns its best attempt.
pub fn find_masker(
    input1: &PureQubit,
    input2: &PureQubit,
    config: &OptimizerConfig,
) -> Result<OptimizationResult> {
    config.validate()?;
    check_distinct(input1, input2)?;
    let f = |x: &[f64; DIM]| pair_residual(&params_from(x), input1, input2);
    let (restart, outcome) = multistart(&f, config);
    Ok(assemble(restart, &outcome.x, input1, input2, config))
}

/// Entanglement of formation of the masked mixtures, one entry per grid
/// weight. Demands that `params` already masks the pair: the convexity
/// lemma then guarantees the masking equalities across the whole grid.
pub fn entanglement_scan(
    params: &MaskerParams,
    input1: &PureQubit,
    input2: &PureQubit,
    p_grid: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if let Some(&p) = p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
            range: "[0, 1]",
        });
    }
    let residual = pair_residual(params, input1, input2);
    if residual > tol::MASKING {
        return Err(Error::MaskingConstraint {
            residual,
            tol: tol::MASKING,
        });
    }
    Ok(eof_curve(params, input1, input2, p_grid))
}

/// Minimizes penalty_weight * residual + sum of E_F over the mixing grid.
///
/// On the feasible set the entanglement term is fixed by the inputs (local
/// freedom cannot move it), so the penalty drives the residual to the
/// constraint floor rather than trading it against entanglement; the
/// consistency is asserted by `converged`.
pub fn min_entanglement_masker(
    input1: &PureQubit,
    input2: &PureQubit,
    config: &OptimizerConfig,
) -> Result<OptimizationResult> {
    config.validate()?;
    check_distinct(input1, input2)?;
    let f = |x: &[f64; DIM]| {
        let params = params_from(x);
        let penalty = config.penalty_weight * pair_residual(&params, input1, input2);
        let entanglement: f64 = eof_curve(&params, input1, input2, &config.p_grid)
            .iter()
            .map(|(_, e)| e)
            .sum();
        penalty + entanglement
    };
    let (restart, outcome) = multistart(&f, config);
    Ok(assemble(restart, &outcome.x, input1, input2, config))
}

/// Exhaustive residual scan over the orthogonal family: weights alpha1,
/// alpha2 in [0, 1] and partner angle theta_prime in [0, 2pi], `steps`
/// points per axis. Returns every grid point whose pair residual falls
/// below 1e-6 as (alpha1, alpha2, theta_prime, residual).
///
/// Needs steps >= 3.
pub fn lemma2_grid_oracle(theta: f64, steps: usize) -> Vec<(f64, f64, f64, f64)> {
    assert!(steps >= 3, "grid oracle needs at least 3 points per axis");
    let frac = |k: usize| k as f64 / (steps - 1) as f64;
    let mut survivors = Vec::new();
    for i in 0..steps {
        let a1 = frac(i);
        for j in 0..steps {
            let a2 = frac(j);
            for k in 0..steps {
                let tp = 2.0 * PI * frac(k);
                let (chi1, chi2) =
                    walgate_orthogonal_pair(theta, tp, a1, a2).expect("grid within ranges");
                let r = masking_residual(&chi1.projector(), &chi2.projector())
                    .expect("fixed dims");
                if r < tol::ORACLE_RESIDUAL {
                    survivors.push((a1, a2, tp, r));
                }
            }
        }
    }
    survivors
}

/// Sigma(t0, angle) = sqrt(t0)|0>tau0 + sqrt(1-t0)|1>tau1 with tau0, tau1
/// the real qubit pair at the given internal angle.
fn sigma_state(t0: f64, angle: f64) -> PureState2Q {
    let (c, s) = ((angle / 2.0).cos(), (angle / 2.0).sin());
    let (r0, r1) = (t0.sqrt(), (1.0 - t0).sqrt());
    PureState2Q::new([
        c64(r0 * c, 0.0),
        c64(r0 * s, 0.0),
        c64(r1 * s, 0.0),
        c64(r1 * c, 0.0),
    ])
    .expect("unit norm by construction")
}

/// Residual scan over the non-orthogonal family: weight t0 in [0, 1] (with
/// t1 = 1 - t0) and partner angle theta_prime in [0, 2pi]. Survivors below
/// 1e-6 are returned as (t0, theta_prime, residual).
///
/// Grid points where the two family members coincide up to phase (overlap
/// within 1e-9 of 1) are skipped: a pair of identical states is masked by
/// anything, and masking is only defined for distinct states. Without the
/// exclusion the entire theta_prime = theta line would survive trivially.
///
/// Needs steps >= 3.
pub fn lemma3_grid_oracle(theta: f64, steps: usize) -> Vec<(f64, f64, f64)> {
    assert!(steps >= 3, "grid oracle needs at least 3 points per axis");
    let frac = |k: usize| k as f64 / (steps - 1) as f64;
    let mut survivors = Vec::new();
    for i in 0..steps {
        let t0 = frac(i);
        for k in 0..steps {
            let tp = 2.0 * PI * frac(k);
            let s1 = sigma_state(t0, theta);
            let s2 = sigma_state(t0, tp);
            if s1.overlap(&s2).norm() >= 1.0 - tol::IDENTICAL_OVERLAP {
                continue;
            }
            let r = masking_residual(&s1.projector(), &s2.projector()).expect("fixed dims");
            if r < tol::ORACLE_RESIDUAL {
                survivors.push((t0, tp, r));
            }
        }
    }
    survivors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::eof_from_concurrence;

    fn qubit(theta: f64) -> PureQubit {
        PureQubit::real_superposition(theta)
    }

    fn quick_config(restarts: usize, seed: u64) -> OptimizerConfig {
        OptimizerConfig {
            restarts,
            seed,
            ..OptimizerConfig::default()
        }
    }

    #[test]
    fn config_validation() {
        assert!(OptimizerConfig::default().validate().is_ok());

        let mut c = OptimizerConfig::default();
        c.restarts = 0;
        assert!(matches!(c.validate(), Err(Error::InvalidConfig(_))));

        let mut c = OptimizerConfig::default();
        c.p_grid = vec![0.3, 0.1];
        assert!(c.validate().is_err());

        let mut c = OptimizerConfig::default();
        c.p_grid = vec![-0.1, 0.5];
        assert!(c.validate().is_err());

        let mut c = OptimizerConfig::default();
        c.masking_tolerance = 0.0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn find_masker_basis_pair() {
        let result = find_masker(&PureQubit::zero(), &PureQubit::one(), &quick_config(8, 11))
            .unwrap();
        assert!(result.converged, "residual {}", result.residual);
        assert!(result.residual <= 1e-8);

        // Masked pure inputs must both be maximally entangled.
        let u = cartan_unitary(&result.params);
        let anc = ancilla();
        for input in [PureQubit::zero(), PureQubit::one()] {
            let out = apply_masker(&u, &input.projector(), &anc).unwrap();
            let e = entanglement_of_formation(&out).unwrap();
            assert!((e - 1.0).abs() < 1e-6, "masked EoF {e}");
        }
    }

    #[test]
    fn find_masker_nonorthogonal_pair() {
        let theta = PI / 3.0;
        let result = find_masker(&qubit(0.0), &qubit(theta), &quick_config(8, 3)).unwrap();
        assert!(result.converged, "residual {}", result.residual);

        let u = cartan_unitary(&result.params);
        let anc = ancilla();
        let e1 = entanglement_of_formation(
            &apply_masker(&u, &qubit(0.0).projector(), &anc).unwrap(),
        )
        .unwrap();
        let e2 = entanglement_of_formation(
            &apply_masker(&u, &qubit(theta).projector(), &anc).unwrap(),
        )
        .unwrap();
        assert!((e1 - e2).abs() < 1e-6, "unequal masked EoF: {e1} vs {e2}");
        assert!(e1 > 1e-3, "non-orthogonal masked states must stay entangled");
    }

    #[test]
    fn find_masker_rejects_identical_inputs() {
        let err = find_masker(&qubit(0.4), &qubit(0.4), &quick_config(2, 0));
        assert!(matches!(err, Err(Error::IdenticalInputs)));
    }

    #[test]
    fn determinism_across_runs() {
        let config = OptimizerConfig {
            restarts: 4,
            max_iterations: 300,
            ..quick_config(4, 42)
        };
        let a = find_masker(&PureQubit::zero(), &PureQubit::one(), &config).unwrap();
        let b = find_masker(&PureQubit::zero(), &PureQubit::one(), &config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn masked_curve_matches_closed_form() {
        // Any converged masker of |0>, |1> reproduces the closed-form curve;
        // local freedom cannot move the entanglement of the masked family.
        let result = find_masker(&PureQubit::zero(), &PureQubit::one(), &quick_config(8, 5))
            .unwrap();
        assert!(result.converged);
        for &(p, e) in &result.eof_by_p {
            let want = eof_from_concurrence((2.0 * p - 1.0).abs());
            assert!((e - want).abs() < 2e-3, "p={p}: {e} vs {want}");
        }
    }

    #[test]
    fn entanglement_scan_exact_masker() {
        // alpha_x = pi/4 alone masks the basis pair exactly.
        let params = MaskerParams {
            alpha_x: PI / 4.0,
            ..MaskerParams::identity()
        };
        let grid = uniform_grid(21);
        let curve =
            entanglement_scan(&params, &PureQubit::zero(), &PureQubit::one(), &grid).unwrap();
        for &(p, e) in &curve {
            let want = eof_from_concurrence((2.0 * p - 1.0).abs());
            assert!((e - want).abs() < 1e-9, "p={p}: {e} vs {want}");
            if (p - 0.5).abs() > 1e-12 {
                assert!(e > 0.0);
            }
        }

        let ends =
            entanglement_scan(&params, &PureQubit::zero(), &PureQubit::one(), &[0.0, 1.0])
                .unwrap();
        assert!((ends[0].1 - 1.0).abs() < 1e-9 && (ends[1].1 - 1.0).abs() < 1e-9);

        let mid = entanglement_scan(&params, &PureQubit::zero(), &PureQubit::one(), &[0.5])
            .unwrap();
        assert!(mid[0].1.abs() < 1e-9);
    }

    #[test]
    fn entanglement_scan_rejects_non_masker() {
        let err = entanglement_scan(
            &MaskerParams::identity(),
            &PureQubit::zero(),
            &PureQubit::one(),
            &[0.0, 0.5, 1.0],
        );
        assert!(matches!(err, Err(Error::MaskingConstraint { .. })));
    }

    #[test]
    fn min_entanglement_basis_pair() {
        let result =
            min_entanglement_masker(&PureQubit::zero(), &PureQubit::one(), &quick_config(8, 2))
                .unwrap();
        assert!(result.converged, "residual {}", result.residual);
        assert!(result.residual <= 1e-8);
        assert!((result.argmin_p - 0.5).abs() <= 0.01, "argmin {}", result.argmin_p);
        assert!(result.min_eof <= 1e-6, "min EoF {}", result.min_eof);
        for &(p, e) in &result.eof_by_p {
            if (p - 0.5).abs() > 1e-12 {
                assert!(e > 1e-3, "E_F must be positive away from p=1/2, got {e} at {p}");
            }
        }
    }

    #[test]
    fn min_entanglement_nonorthogonal_pair() {
        let result = min_entanglement_masker(
            &qubit(0.0),
            &qubit(PI / 4.0),
            &quick_config(8, 9),
        )
        .unwrap();
        assert!(result.converged, "residual {}", result.residual);
        assert!((result.argmin_p - 0.5).abs() <= 0.01);
        assert!(result.min_eof <= 1e-6, "min EoF {}", result.min_eof);
        // Same structure as the orthogonal case: separable only at p = 1/2.
        for &(p, e) in &result.eof_by_p {
            if (p - 0.5).abs() > 1e-12 {
                assert!(e > 1e-4, "E_F must be positive away from p=1/2, got {e} at {p}");
            }
        }
    }

    #[test]
    fn unconverged_run_is_flagged_not_fatal() {
        let config = OptimizerConfig {
            restarts: 1,
            max_iterations: 3,
            ..quick_config(1, 1)
        };
        let result = min_entanglement_masker(&PureQubit::zero(), &PureQubit::one(), &config)
            .unwrap();
        assert!(!result.converged);
        assert!(result.residual > 1e-8);
    }

    #[test]
    fn lemma2_oracle_uniqueness() {
        let survivors = lemma2_grid_oracle(0.0, 41);
        assert_eq!(survivors.len(), 1, "{survivors:?}");
        let (a1, a2, tp, r) = survivors[0];
        assert_eq!((a1, a2), (0.5, 0.5));
        assert!((tp - PI).abs() < 1e-12);
        assert!(r < 1e-12);

        let survivors = lemma2_grid_oracle(PI / 2.0, 41);
        assert_eq!(survivors.len(), 1, "{survivors:?}");
        assert!((survivors[0].2 - 3.0 * PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn lemma2_oracle_coarse_grid_contains_solution() {
        // steps=3 grid holds (0.5, 0.5, pi) exactly for theta = 0.
        let survivors = lemma2_grid_oracle(0.0, 3);
        assert!(survivors
            .iter()
            .any(|&(a1, a2, tp, _)| a1 == 0.5 && a2 == 0.5 && (tp - PI).abs() < 1e-12));
    }

    #[test]
    fn lemma3_oracle_uniqueness() {
        let survivors = lemma3_grid_oracle(PI / 6.0, 61);
        assert_eq!(survivors.len(), 1, "{survivors:?}");
        let (t0, tp, r) = survivors[0];
        assert_eq!(t0, 0.5);
        assert!((tp - 5.0 * PI / 6.0).abs() < 1e-12);
        assert!(r <= 1e-12);

        let survivors = lemma3_grid_oracle(0.0, 61);
        assert_eq!(survivors.len(), 1, "{survivors:?}");
        assert!((survivors[0].1 - PI).abs() < 1e-12);
    }
}
