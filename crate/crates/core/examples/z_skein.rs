//! The coproduct of the central element on squares of the 4-dimensional heads.

use sl3_invariant::invariants::verify_z_skein;
use sl3_invariant::rep::RepKind;

fn main() -> sl3_invariant::Result<()> {
    for kind in RepKind::all_heads() {
        print!("{}", verify_z_skein(kind)?);
    }
    Ok(())
}
