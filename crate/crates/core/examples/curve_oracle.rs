//! The rational normal curve oracle: substitute (1, t, ..., t^n) into the
//! forms of W and test the gcd, plus the point at infinity.

use evasive::constructions::{basic_family, FamilyParams};
use evasive::field::FieldConfig;
use evasive::verify::{curve_miss_oracle, gen_rational_normal_curve};

fn main() {
    let field = FieldConfig::default();
    for n in [3, 4] {
        let curve = gen_rational_normal_curve(n, &field);
        let fam = basic_family(&FamilyParams::new(n, n, n - 2).unwrap(), &field).unwrap();
        let missing = fam
            .members()
            .iter()
            .filter(|m| curve_miss_oracle(&curve, m.subspace.as_projective().unwrap()).unwrap())
            .count();
        println!("n={n}: {missing} of {} members miss the curve", fam.len());
    }
}
