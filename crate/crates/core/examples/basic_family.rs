//! The exact basic family: (nd+1)^(n-k) subspaces, one of which misses any
//! variety of dimension n-k-1 and degree at most d.

use evasive::constructions::{basic_family, FamilyParams};
use evasive::field::FieldConfig;
use evasive::verify::{family_failure_fraction, gen_linear_arrangement, Oracle};

fn main() {
    let field = FieldConfig::new(10007).unwrap();
    let params = FamilyParams::new(3, 2, 1).unwrap();
    let fam = basic_family(&params, &field).unwrap();
    println!("basic family n=3 d=2 k=1: {} lines in P^3", fam.len());

    // two random lines in P^3: degree 2, dimension 1
    let v = gen_linear_arrangement(3, 1, 2, 42, &field);
    let report = family_failure_fraction(&fam, &v, Oracle::Linalg).unwrap();
    println!(
        "against {}: {} evade, {} fail (exact family needs one evader: {})",
        report.variety_id,
        report.evading(),
        report.failing(),
        report.meets_guarantee()
    );
    print!("{}", fam.to_text().lines().take(16).collect::<Vec<_>>().join("\n"));
    println!("\n...");
}
