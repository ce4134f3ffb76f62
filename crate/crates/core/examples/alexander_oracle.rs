//! The sl2 and 4-dimensional colorings reduce to the Alexander polynomial.

use sl3_invariant::cli::KnotTable;
use sl3_invariant::invariants::{alexander_burau, check_small_alexander};

fn main() -> sl3_invariant::Result<()> {
    let table = KnotTable::bundled();
    for name in ["3_1", "4_1", "5_2", "6_1"] {
        let b = table.get(name).unwrap().braid_word()?;
        println!("{name}: Alexander {}", alexander_burau(&b)?);
        print!("{}", check_small_alexander(&b)?);
    }
    Ok(())
}
