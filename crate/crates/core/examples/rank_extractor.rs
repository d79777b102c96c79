//! Rank extractors: codimension-(m+1) subspaces, all but a bounded number of
//! which miss any fixed m-dimensional subspace.

use evasive::constructions::rank_extractor_family;
use evasive::field::FieldConfig;
use evasive::linalg::subspace_intersection_dim;
use evasive::verify::random_subspace;
use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let field = FieldConfig::default();
    let (n, m) = (6, 2);
    let exact = rank_extractor_family(n, m, None, &field).unwrap();
    let eps = rank_extractor_family(n, m, Some(Ratio::new(1, 8)), &field).unwrap();
    println!("n={n} m={m}: exact {} members, eps=1/8 {} members", exact.len(), eps.len());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = random_subspace(n, m, &mut rng, &field);
    let hits = exact
        .members()
        .iter()
        .filter(|mem| subspace_intersection_dim(mem.subspace.as_projective().unwrap(), &x) >= 0)
        .count();
    println!("a random plane X meets {hits} of {} members (at most {})", exact.len(), (m + 1) * (n - m));
}
