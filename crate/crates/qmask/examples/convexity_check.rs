//! Masking survives classical mixing.
//!
//! A masker hides each pure input behind the same pair of reduced states.
//! Because the masked output of p rho1 + (1-p) rho2 is the same convex
//! combination of the masked endpoints, its reductions are fixed too. This
//! example checks that numerically on a p grid and prints the common reduced
//! state next to the reductions of a masked mixture.

use qmask::{
    apply_masker, canonical_orthogonal_masker, mix, verify_convex_masking, ComplexMatrix, Party,
    PureQubit,
};

fn print_matrix(label: &str, m: &ComplexMatrix) {
    println!("{label}:");
    for i in 0..m.rows() {
        let mut row = String::from("   ");
        for j in 0..m.cols() {
            let v = m.get(i, j);
            row.push_str(&format!(" {:+.6}{:+.6}i", v.re, v.im));
        }
        println!("{row}");
    }
}

fn main() {
    let u = canonical_orthogonal_masker();
    let psi1 = PureQubit::zero();
    let psi2 = PureQubit::one();
    let ancilla = PureQubit::zero().projector();

    let grid: Vec<f64> = (0..=20).map(|k| k as f64 / 20.0).collect();
    let ok = verify_convex_masking(&u, &psi1, &psi2, &ancilla, &grid).unwrap();
    println!(
        "reductions constant across {} mixing weights: {ok}",
        grid.len()
    );
    println!();

    let out1 = apply_masker(&u, &psi1.projector(), &ancilla).unwrap();
    print_matrix("common reduction, party 1", out1.reduced(Party::One).unwrap().mat());
    println!();

    let mixed = mix(&psi1.projector(), &psi2.projector(), 0.3).unwrap();
    let masked = apply_masker(&u, &mixed, &ancilla).unwrap();
    print_matrix(
        "masked mixture at p = 0.3, party 1",
        masked.reduced(Party::One).unwrap().mat(),
    );
    print_matrix(
        "masked mixture at p = 0.3, party 2",
        masked.reduced(Party::Two).unwrap().mat(),
    );
}
