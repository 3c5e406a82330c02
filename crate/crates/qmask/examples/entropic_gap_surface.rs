//! The entropic gap delta_S = S(rho) - S(rho_1) over the non-orthogonal
//! masked mixtures, as a coarse character surface.
//!
//! Rows sweep the mixing weight p, columns the family angle theta in
//! [0, pi/2]. A `-` cell means the gap is strictly negative (the mixture is
//! certifiably entangled), `0` means it vanishes within 1e-9. The zero set
//! is exactly the p = 1/2 row and the theta = pi/2 column, where the family
//! degenerates to a single product state.

use qmask::{entropic_gap, masked_mixture_nonorthogonal};
use std::f64::consts::PI;

fn main() -> qmask::Result<()> {
    let n = 21;
    print!("{:>6} ", "p\\th");
    for j in 0..n {
        print!("{:>5.2}", (PI / 2.0) * j as f64 / (n - 1) as f64);
    }
    println!();

    let mut most_negative = (0.0, 0.0, 0.0f64);
    for i in 0..n {
        let p = i as f64 / (n - 1) as f64;
        print!("{p:>6.3} ");
        for j in 0..n {
            let theta = (PI / 2.0) * j as f64 / (n - 1) as f64;
            let gap = entropic_gap(&masked_mixture_nonorthogonal(p, theta)?)?;
            if gap < most_negative.2 {
                most_negative = (p, theta, gap);
            }
            print!("{:>5}", if gap < -1e-9 { "-" } else { "0" });
        }
        println!();
    }

    let (p, theta, gap) = most_negative;
    println!("\ndeepest gap: {gap:.6} bits at p = {p:.3}, theta = {theta:.3}");
    Ok(())
}
