//! Shared fixtures for the integration suites: a seeded corpus of random
//! multigraphs and a seeded pool of small random arrangements.

use parkplane::types::{ratio, Arrangement, Hyperplane, Multigraph, Sign, SignVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 7001;
pub const ARRANGEMENT_POOL_SEED: u64 = 7002;

/// 200 seeded random multigraphs with up to 5 vertices and multiplicities up
/// to 2, weighted toward sparse graphs so exhaustive checks stay fast.
pub fn corpus_multigraphs() -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(2..=5);
            let mut g = Multigraph::new(n).expect("n >= 2");
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let m = match rng.gen_range(0..10) {
                        0..=4 => 0,
                        5..=7 => 1,
                        _ => 2,
                    };
                    g.set_multiplicity(i, j, m).expect("valid edge");
                }
            }
            g
        })
        .collect()
}

/// 50 seeded random arrangements with up to 8 hyperplanes on 2 to 4
/// vertices, small positive rational constants.
pub fn small_arrangement_pool() -> Vec<Arrangement> {
    let mut rng = ChaCha8Rng::seed_from_u64(ARRANGEMENT_POOL_SEED);
    (0..50)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            let target = rng.gen_range(0..=8usize);
            let mut hyperplanes: Vec<Hyperplane> = Vec::new();
            let mut attempts = 0;
            while hyperplanes.len() < target && attempts < 200 {
                attempts += 1;
                let p = rng.gen_range(1..=n);
                let q = rng.gen_range(1..=n);
                if p == q {
                    continue;
                }
                let a = ratio(rng.gen_range(1..=6), rng.gen_range(1..=4));
                let h = Hyperplane::canonical(p, q, a).expect("positive constant");
                if !hyperplanes.contains(&h) {
                    hyperplanes.push(h);
                }
            }
            Arrangement::new(n, hyperplanes).expect("distinct valid hyperplanes")
        })
        .collect()
}

/// All sign vectors of a given length, in mask order.
pub fn all_sign_vectors(len: usize) -> impl Iterator<Item = SignVector> {
    assert!(len <= 16, "exhaustive sign enumeration is for small inputs");
    (0u32..1 << len).map(move |mask| {
        SignVector::from_signs(
            (0..len)
                .map(|b| {
                    if mask >> b & 1 == 1 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect(),
        )
    })
}
