use sl3_invariant::arith::LaurentPoly;
use sl3_invariant::braid::{invariant, Engine};
use sl3_invariant::cli::KnotTable;
use sl3_invariant::invariants::alexander_burau;
use sl3_invariant::rep::RepKind;

fn values(names: &[&str]) -> Vec<(LaurentPoly, LaurentPoly)> {
    let table = KnotTable::bundled();
    let e = Engine::new(RepKind::VermaSl3.build());
    names
        .iter()
        .map(|n| {
            let b = table.get(n).unwrap().braid_word().unwrap();
            (invariant(&e, &b).unwrap(), alexander_burau(&b).unwrap())
        })
        .collect()
}

#[test]
fn separates_5_1_from_10_132() {
    let v = values(&["5_1", "10_132"]);
    assert_eq!(v[0].1, v[1].1);
    assert_ne!(v[0].0, v[1].0);
}

#[test]
fn separates_8_9_from_10_155() {
    let v = values(&["8_9", "10_155"]);
    assert_eq!(v[0].1, v[1].1);
    assert_ne!(v[0].0, v[1].0);
}

#[test]
fn agrees_on_6_1_and_9_46() {
    let v = values(&["6_1", "9_46"]);
    assert_eq!(v[0].1, v[1].1);
    assert_eq!(v[0].0, v[1].0);
}

#[test]
fn bundled_alexander_matches_burau() {
    for k in KnotTable::bundled().knots {
        k.validate().unwrap();
    }
}
