//! Brute-force uniqueness scans.
//!
//! Rather than trusting the algebra, sweep the full parameter grids of both
//! state families and list every point whose masking residual survives the
//! 1e-6 cut. The survivors land on equal weights with the partner angle at
//! theta + pi (orthogonal family) or pi - theta (non-orthogonal family),
//! and nowhere else.

use qmask::{lemma2_grid_oracle, lemma3_grid_oracle};
use std::f64::consts::PI;

fn main() {
    for theta in [0.0, PI / 4.0, PI / 2.0] {
        let survivors = lemma2_grid_oracle(theta, 41);
        println!(
            "orthogonal family, theta = {theta:.4}: {} of {} grid points survive",
            survivors.len(),
            41usize.pow(3)
        );
        for (a1, a2, tp, r) in survivors {
            println!("    alpha1 = {a1:.4}  alpha2 = {a2:.4}  theta' = {tp:.6}  residual = {r:.2e}");
        }
    }

    println!();
    for theta in [PI / 6.0, PI / 3.0] {
        let survivors = lemma3_grid_oracle(theta, 61);
        println!(
            "non-orthogonal family, theta = {theta:.4}: {} of {} grid points survive",
            survivors.len(),
            61usize.pow(2)
        );
        for (t0, tp, r) in survivors {
            println!("    t0 = {t0:.4}  theta' = {tp:.6}  residual = {r:.2e}");
            println!("    (pi - theta = {:.6})", PI - theta);
        }
    }
}
