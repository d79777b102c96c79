//! Strong evasion in affine space: every member meets V in exactly the
//! expected dimension. Checked with Gröbner bases on a hyperbola.

use evasive::constructions::{affine_restriction, chow_family, FamilyParams};
use evasive::field::FieldConfig;
use evasive::groebner::parse_variety;
use evasive::verify::{family_failure_fraction, Oracle};
use num_rational::Ratio;

const HYPERBOLA: &str = "format=1
name hyperbola-in-A3
ambient affine 3
component dim=1 deg=2
x1*x2 - 1
x3
";

fn main() {
    let field = FieldConfig::default();
    let params = FamilyParams::new(3, 2, 1).unwrap().with_eps(Ratio::new(1, 5)).unwrap();
    let fam = affine_restriction(&chow_family(&params, &field).unwrap()).unwrap();
    println!("{} affine lines, promised eps = {}", fam.len(), fam.eps().unwrap());
    let v = parse_variety(HYPERBOLA, field.prime()).unwrap();
    let r = family_failure_fraction(&fam, &v, Oracle::Groebner).unwrap();
    println!("strongly evading the hyperbola: {}/{}", r.evading(), r.total());
}
