//! The sl3 invariant of the trefoil, as a polynomial and as a cone table.

use sl3_invariant::arith::emit_canonical;
use sl3_invariant::braid::{invariant, parse_braid, Engine};
use sl3_invariant::invariants::cone_coefficients;
use sl3_invariant::rep::RepKind;

fn main() -> sl3_invariant::Result<()> {
    let engine = Engine::new(RepKind::VermaSl3.build());
    let trefoil = parse_braid("1 1 1", 2)?;
    let value = invariant(&engine, &trefoil)?;
    println!("{value}");
    println!("canonical: {}", emit_canonical(&value));
    println!("cone (rows b = w..-w, columns a = 0..w):");
    print!("{}", cone_coefficients(&value)?);
    Ok(())
}
