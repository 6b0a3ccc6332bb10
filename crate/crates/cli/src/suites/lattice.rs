use enriques_lattice::{
    determinant, gram, inner, reflect, search_sequences_capped, signature, Signature, Vector10, RANK,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SuiteResult;
use crate::report::{Section, Table};
use crate::RunConfig;

const SEED: u64 = 0x5eed_e8;
const SAMPLES: usize = 1000;

fn simple_roots() -> Vec<Vector10> {
    let mut v: Vec<Vector10> = (1..=8).map(Vector10::v).collect();
    v.push(Vector10::from_parts(1, -1, [0; 8]));
    v
}

/// A root in the Weyl orbit of a simple root, reached by a random word.
fn random_root(rng: &mut ChaCha8Rng, simple: &[Vector10]) -> Vector10 {
    let mut r = simple[rng.gen_range(0..simple.len())];
    for _ in 0..rng.gen_range(0..12) {
        r = reflect(&simple[rng.gen_range(0..simple.len())], &r).expect("simple roots have square -2");
    }
    r
}

fn random_vector(rng: &mut ChaCha8Rng) -> Vector10 {
    Vector10(std::array::from_fn(|_| rng.gen_range(-5..=5)))
}

pub fn selfcheck(config: &RunConfig) -> SuiteResult {
    let mut s = Section::new("lattice-selfcheck");
    let g = gram();
    let det = determinant(&g)?;
    s.assert("Gram determinant is ±1", det.abs() == 1, format!("det = {det}"));
    let sig = signature(&g)?;
    s.assert(
        "signature (1, 9)",
        sig == Signature { positive: 1, negative: 9, zero: 0 },
        format!("({}, {}, zero {})", sig.positive, sig.negative, sig.zero),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let simple = simple_roots();
    let mut bad = 0;
    for _ in 0..SAMPLES {
        let r = random_root(&mut rng, &simple);
        let (u, v) = (random_vector(&mut rng), random_vector(&mut rng));
        let (ru, rv) = (reflect(&r, &u)?, reflect(&r, &v)?);
        if reflect(&r, &ru)? != u || inner(&ru, &rv) != inner(&u, &v) || r.square() != -2 {
            bad += 1;
        }
    }
    s.assert(
        "reflections are isometric involutions",
        bad == 0,
        format!("{SAMPLES} random roots and pairs, seed {SEED:#x}, {bad} failures"),
    );

    let found = search_sequences_capped(RANK, config.bound, config.cap)?;
    let first = found.first();
    let valid = first.is_some_and(|q| q.is_valid());
    s.assert(
        format!("isotropic {RANK}-sequence within bound {}", config.bound),
        valid,
        format!("{} found (cap {})", found.len(), config.cap),
    );
    if let Some(q) = first {
        let m: Vec<Vec<i64>> = q.vectors.iter().map(|a| q.vectors.iter().map(|b| inner(a, b)).collect()).collect();
        let d = determinant(&m)?;
        s.assert("sequence is linearly independent", d != 0, format!("det of its Gram matrix = {d}"));
        let mut t = Table::new("first sequence", &["i", "coordinates (e, f, v1..v8)", "square"]);
        for (i, v) in q.vectors.iter().enumerate() {
            t.push([(i + 1).to_string(), format!("{:?}", v.coords()), v.square().to_string()]);
        }
        s.tables.push(t);
    }
    Ok(s)
}
