//! Torus knots T(2, 2n+1) against the closed form.

use sl3_invariant::braid::Engine;
use sl3_invariant::invariants::torus_closed_form_check;
use sl3_invariant::rep::RepKind;

fn main() -> sl3_invariant::Result<()> {
    let engine = Engine::new(RepKind::VermaSl3.build());
    for n in 1..=4 {
        let (value, report) = torus_closed_form_check(&engine, n)?;
        println!("T(2,{}): {} terms, closed form {}", 2 * n + 1, value.terms().len(), if report.passed() { "holds" } else { "FAILS" });
    }
    Ok(())
}
