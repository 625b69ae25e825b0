//! Inputs shared by the criterion benchmarks in `benches/`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use twistal::{LaurentPoly, PolyMatrix, Ring};

/// Square matrix with entries of degree at most `degree`, reproducible from
/// `seed`.
pub fn random_matrix(ring: &Ring, n: usize, degree: i64, seed: u64) -> PolyMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let terms: Vec<(i64, i64)> = (0..=degree).map(|e| (e, rng.gen_range(-9..=9))).collect();
                    LaurentPoly::from_i64_terms(ring, &terms)
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(ring, rows).expect("square rows")
}
