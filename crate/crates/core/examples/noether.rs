//! Noether normalization from an evasive family: linear projections that
//! are finite on the hyperbola x1*x2 = 1.

use evasive::constructions::noether_maps;
use evasive::field::FieldConfig;
use evasive::groebner::{finiteness_check, parse_variety};
use num_rational::Ratio;

fn main() {
    let field = FieldConfig::default();
    let v = parse_variety("format=1\nambient affine 2\ncomponent dim=1 deg=2\nx1*x2 - 1\n", field.prime()).unwrap();
    let maps = noether_maps(2, 2, 1, Some(Ratio::new(1, 2)), &field).unwrap();
    for m in &maps {
        let row: Vec<u64> = m.rows[0].iter().map(|x| x.value()).collect();
        println!("x -> {}*x1 + {}*x2: finite = {}", row[0], row[1], finiteness_check(&v, &m.rows).unwrap());
    }
    let proj = vec![vec![field.one(), field.zero()]];
    println!("x -> x1: finite = {}", finiteness_check(&v, &proj).unwrap());
}
