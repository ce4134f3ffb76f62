//! Symmetries and coefficient patterns of the sl3 invariant.

use sl3_invariant::braid::{invariant, Engine};
use sl3_invariant::cli::KnotTable;
use sl3_invariant::invariants::{alexander_burau, check_symmetries, cone_coefficients};
use sl3_invariant::rep::RepKind;

fn main() -> sl3_invariant::Result<()> {
    let engine = Engine::new(RepKind::VermaSl3.build());
    let table = KnotTable::bundled();
    for name in ["4_1", "5_2", "8_17"] {
        let b = table.get(name).unwrap().braid_word()?;
        let value = invariant(&engine, &b)?;
        println!("{name}");
        print!("{}", cone_coefficients(&value)?);
        let (asserted, observed) = check_symmetries(&value, Some(&alexander_burau(&b)?));
        print!("{asserted}{observed}");
    }
    Ok(())
}
