//! Acceptance gate: one test per criterion of the verification suite.
//! Each prints a single pass/fail line and fails if any claim fails.

use hypermaps::verify::{self, Claim};

fn gate(name: &str, claims: Vec<Claim>) {
    let pass = claims.iter().all(|c| c.pass);
    println!(
        "{}: {name} ({} claims)",
        if pass { "PASS" } else { "FAIL" },
        claims.len()
    );
    for c in claims.iter().filter(|c| !c.pass) {
        println!("  FAIL: {}", c.label);
    }
    assert!(pass, "criterion failed: {name}");
}

#[test]
fn criterion_1_flag_counts() {
    gate("flag counts", verify::criterion_flag_counts());
}

#[test]
fn criterion_2_klein_torus_suite() {
    gate("Klein bottle / torus example suite", verify::criterion_klein_torus());
}

#[test]
fn criterion_3_phi2_p2() {
    gate("phi2(P2) bipartite-type and covering core", verify::criterion_phi2_p2());
}

#[test]
fn criterion_4_image_membership() {
    gate("im-phi membership and generator counts", verify::criterion_membership());
}

#[test]
fn criterion_5_chi_formulas() {
    gate("Euler characteristic formulas", verify::criterion_chi_formulas());
}

#[test]
fn criterion_6_genus_sweep() {
    gate("genus sweep", verify::criterion_genus_sweep());
}

#[test]
fn criterion_7_property_suite() {
    gate("randomized property suite", verify::criterion_property_suite());
}

#[test]
fn criterion_8_oracle_equivalences() {
    gate("oracle equivalences", verify::criterion_oracles());
}
