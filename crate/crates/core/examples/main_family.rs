//! The main construction picks the Chow family directly when the ambient
//! space is small, and otherwise reduces the ambient dimension first.

use evasive::constructions::{main_family, FamilyParams};
use evasive::field::FieldConfig;
use evasive::verify::{family_failure_fraction, gen_linear_arrangement, Oracle};
use num_rational::Ratio;

fn main() {
    let field = FieldConfig::default();
    let eps = Ratio::new(1, 2);
    for (n, d, k) in [(3, 2, 1), (5, 2, 3), (6, 1, 4)] {
        let params = FamilyParams::new(n, d, k).unwrap().with_eps(eps).unwrap();
        let fam = main_family(&params, &field).unwrap();
        // an arrangement of d subspaces of dimension n-k-1
        let v = gen_linear_arrangement(n, n - k - 1, d, 7, &field);
        let r = family_failure_fraction(&fam, &v, Oracle::Linalg).unwrap();
        println!(
            "n={n} d={d} k={k}: branch {:<9} {:>5} members, {}/{} fail",
            fam.branch().as_str(),
            fam.len(),
            r.failing(),
            r.total()
        );
    }
}
