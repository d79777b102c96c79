//! The Chow family trades exactness for size: its members are indexed by a
//! hitting set, and at most an eps fraction meets any small variety.

use evasive::constructions::{basic_family, chow_family, FamilyParams};
use evasive::field::FieldConfig;
use evasive::verify::{family_failure_fraction, gen_linear_arrangement, Oracle};
use num_rational::Ratio;

fn main() {
    let field = FieldConfig::default();
    let params = FamilyParams::new(3, 2, 1).unwrap();
    let exact = basic_family(&params, &field).unwrap();
    let chow = chow_family(&params.with_eps(Ratio::new(1, 4)).unwrap(), &field).unwrap();
    println!("n=3 d=2 k=1: basic {} members, chow(eps=1/4) {} members", exact.len(), chow.len());
    for seed in 0..5 {
        let v = gen_linear_arrangement(3, 1, 2, seed, &field);
        let r = family_failure_fraction(&chow, &v, Oracle::Linalg).unwrap();
        println!("  seed {seed}: {}/{} fail, guarantee met: {}", r.failing(), r.total(), r.meets_guarantee());
    }
}
