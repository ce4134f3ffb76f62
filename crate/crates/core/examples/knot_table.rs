//! Runs the bundled table up to seven crossings with every per-knot check.

use sl3_invariant::arith::parse_poly;
use sl3_invariant::braid::Engine;
use sl3_invariant::cli::KnotTable;
use sl3_invariant::invariants::analyze_knot;
use sl3_invariant::rep::RepKind;

fn main() -> sl3_invariant::Result<()> {
    let engine = Engine::new(RepKind::VermaSl3.build());
    for entry in KnotTable::bundled().knots.iter().filter(|k| k.crossings <= 7) {
        let r = analyze_knot(&entry.name, &entry.braid_word()?, &engine)?;
        let observed = r.observations.iter().filter(|c| c.passed).count();
        println!(
            "{:<6} {:>6.3} s  checks {}  observations {observed}/{}  {} terms",
            r.name,
            r.seconds,
            if r.passed() { "ok" } else { "FAILED" },
            r.observations.len(),
            parse_poly(&r.polynomial)?.terms().len()
        );
    }
    Ok(())
}
