//! Symbolic and modular evaluation agree; Markov moves and cut changes at random points.

use std::time::Instant;

use sl3_invariant::braid::{cut_independence_at, invariant_with, markov_at, state_count, Engine, Strategy};
use sl3_invariant::cli::KnotTable;
use sl3_invariant::rep::RepKind;

fn main() -> sl3_invariant::Result<()> {
    let engine = Engine::new(RepKind::VermaSl3.build());
    let b = KnotTable::bundled().get("8_17").unwrap().braid_word()?;
    println!("8_17 on {} strands, {} states", b.strands, state_count(&engine, &b));
    let start = Instant::now();
    let symbolic = invariant_with(&engine, &b, Strategy::Symbolic)?;
    println!("symbolic: {:.2} s", start.elapsed().as_secs_f64());
    let start = Instant::now();
    let modular = invariant_with(&engine, &b, Strategy::Modular)?;
    println!("modular:  {:.2} s", start.elapsed().as_secs_f64());
    println!("agree: {}", symbolic == modular);
    print!("{}", markov_at(&engine, &b, 3, 5, 7));
    print!("{}", cut_independence_at(&engine, &b, 7)?);
    Ok(())
}
