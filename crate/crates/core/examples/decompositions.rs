//! Tensor product decompositions at a sample character.

use sl3_invariant::invariants::{decompose, default_sample, sample_rep, verify_tensor_decompositions, TensorProduct};
use sl3_invariant::rep::RepKind;

fn main() -> sl3_invariant::Result<()> {
    let sample = default_sample();
    let v1 = sample_rep(RepKind::VermaSl3, false, &sample)?;
    let v2 = sample_rep(RepKind::VermaSl3, true, &sample)?;
    println!("V ⊗ V:");
    for s in decompose(&TensorProduct::new(&v1, &v2))? {
        println!("  highest weight ({}, {}), dimension {}", s.weight.0, s.weight.1, s.dim);
    }
    print!("{}", verify_tensor_decompositions(&sample)?);
    Ok(())
}
