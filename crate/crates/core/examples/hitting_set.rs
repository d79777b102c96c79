//! Kronecker-substitution hitting sets: no nonzero polynomial of bounded
//! individual degree vanishes on more than an eps fraction of the points.

use evasive::constructions::epsilon_hitting_set;
use evasive::field::FieldConfig;
use evasive::poly::parse_poly;
use num_rational::Ratio;

fn main() {
    let field = FieldConfig::default();
    let h = epsilon_hitting_set(2, 3, Ratio::new(1, 4), &field).unwrap();
    println!("m=2 ideg=3 eps=1/4: {} points", h.len());
    for text in ["x0 - x1", "x0^3*x1^3 - 1", "(x0 - 1)*(x0 - 2)*(x0 - 3)"] {
        let f = parse_poly(text, 2, 0, field.prime()).unwrap();
        let zeros = h.zero_count(&f);
        println!("  {text:<26} vanishes on {zeros:>2}/{} points", h.len());
    }
    // x1 - x0^4 has individual degree 4, past the bound; the points are
    // (γ, γ^4), so it vanishes everywhere
    let f = parse_poly("x1 - x0^4", 2, 0, field.prime()).unwrap();
    println!("  {:<26} vanishes on {:>2}/{} points", "x1 - x0^4 (degree too high)", h.zero_count(&f), h.len());
}
