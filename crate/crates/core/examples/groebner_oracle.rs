//! The Gröbner oracle: reduced bases, dimensions and evasion for
//! nonlinear varieties.

use evasive::field::FieldConfig;
use evasive::groebner::{buchberger, ideal_dimension, intersection_dim, MonomialOrder, VarietySpec};
use evasive::linalg::{LinearForm, ProjSubspace};

fn main() {
    let field = FieldConfig::default();
    let cubic = VarietySpec::rational_normal_curve(3, field.prime());
    let gb = buchberger(&cubic.generators(), MonomialOrder::GrevLex).unwrap();
    println!("twisted cubic, reduced grevlex basis:");
    for g in gb.polys() {
        println!("  {g}");
    }
    println!("projective dimension {}", ideal_dimension(&gb) - 1);

    let plane = ProjSubspace::from_forms(&[LinearForm(field.elems(&[1, -1, 0, 0]))], 3).unwrap();
    println!(
        "meets the plane x0 = x1 in dimension {}",
        intersection_dim(&cubic.components()[0], &plane, 50_000).unwrap()
    );
}
