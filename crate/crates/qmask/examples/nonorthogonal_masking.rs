//! Masking a non-orthogonal pair.
//!
//! The canonical non-orthogonal family has overlap sin(theta) between its
//! members. Masking forces equal weights and the reflected partner angle,
//! the masked members stay equally (and non-maximally) entangled, and the
//! mixtures reach separability only at the balanced weight.

use qmask::{
    canonical_nonorthogonal_pair, entanglement_of_formation, find_masker,
    masked_mixture_nonorthogonal, pure_entanglement_entropy, PureQubit, OptimizerConfig,
};
use std::f64::consts::PI;

fn main() -> qmask::Result<()> {
    let theta = 3.0 * PI / 8.0;
    let (s1, s2) = canonical_nonorthogonal_pair(theta)?;
    println!("family angle theta = 3pi/8");
    println!("overlap <S1|S2>    = {:.10}  (= sin theta)", s1.overlap(&s2).re);
    println!("member entropy 1   = {:.10} ebit", pure_entanglement_entropy(&s1)?);
    println!("member entropy 2   = {:.10} ebit", pure_entanglement_entropy(&s2)?);

    println!("\nmixture E_F by weight:");
    for k in 0..=10 {
        let p = k as f64 / 10.0;
        let e = entanglement_of_formation(&masked_mixture_nonorthogonal(p, theta)?)?;
        println!("  p = {p:>4.2}   E_F = {e:.9}");
    }

    // A masker for inputs with the same overlap must reproduce exactly this
    // masked family (unitarity preserves inner products).
    let input2 = PureQubit::real_superposition(PI / 4.0);
    println!("\ninput pair |0>, cos(pi/8)|0> + sin(pi/8)|1>:");
    println!("input overlap      = {:.10}", PureQubit::zero().overlap(&input2).re);
    let config = OptimizerConfig {
        restarts: 12,
        seed: 5,
        ..OptimizerConfig::default()
    };
    let result = find_masker(&PureQubit::zero(), &input2, &config)?;
    println!("search residual    = {:.3e}", result.residual);
    println!("masked E_F minimum = {:.3e} at p = {}", result.min_eof, result.argmin_p);
    Ok(())
}
