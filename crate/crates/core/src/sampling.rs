//! Seeded random objects and morphisms for sampled checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{ratio, Matrix, Rational};
use crate::gvec::{Category, GradedMorphism, GradedObject};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries drawn from `{-2, ..., 2} / {1, 2, 3}`, zero about a third of the
/// time.
pub fn random_rational(rng: &mut SampleRng) -> Rational {
    if rng.gen_bool(1.0 / 3.0) {
        return ratio(0, 1);
    }
    let n = rng.gen_range(-2i64..=2);
    let d = rng.gen_range(1i64..=3);
    ratio(n, d)
}

pub fn random_matrix(rng: &mut SampleRng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| random_rational(rng))
}

/// A matrix of rank at most `r`, as a product of random factors.
pub fn random_low_rank(rng: &mut SampleRng, rows: usize, cols: usize, r: usize) -> Matrix {
    let a = random_matrix(rng, rows, r);
    let b = random_matrix(rng, r, cols);
    a.matmul(&b).expect("conformable")
}

/// A random object of total multiplicity between `lo` and `hi`.
pub fn random_object(cat: &Category, rng: &mut SampleRng, lo: usize, hi: usize) -> GradedObject {
    let n = cat.grades();
    let total = rng.gen_range(lo..=hi);
    let mut mult = vec![0usize; n];
    for _ in 0..total {
        mult[rng.gen_range(0..n)] += 1;
    }
    cat.atomic(&mult).expect("dimension matches")
}

/// A random morphism `v -> w`. Blocks are full random, low rank, zero, or
/// identity-like with roughly equal odds, so mono, epi and iso cases all
/// show up.
pub fn random_morphism(rng: &mut SampleRng, v: &GradedObject, w: &GradedObject) -> GradedMorphism {
    GradedMorphism::from_fn(v, w, |g| {
        let (r, c) = (w.mult(g), v.mult(g));
        match rng.gen_range(0..4) {
            0 => random_matrix(rng, r, c),
            1 => {
                let k = rng.gen_range(0..=r.min(c));
                random_low_rank(rng, r, c, k)
            }
            2 => Matrix::zeros(r, c),
            _ => Matrix::from_fn(r, c, |i, j| if i == j { ratio(1, 1) } else { ratio(0, 1) }),
        }
    })
    .expect("shapes follow the objects")
}

/// A random morphism whose target is the source itself, an unrelated random
/// object, or the source with multiplicities nudged by one.
pub fn random_arrow(cat: &Category, rng: &mut SampleRng, hi: usize) -> GradedMorphism {
    let v = random_object(cat, rng, 0, hi);
    let w = match rng.gen_range(0..3) {
        0 => v.clone(),
        1 => random_object(cat, rng, 0, hi),
        _ => {
            let mut m = v.mults();
            for x in m.iter_mut() {
                if rng.gen_bool(0.5) {
                    *x += 1;
                } else if *x > 0 && rng.gen_bool(0.5) {
                    *x -= 1;
                }
            }
            cat.atomic(&m).expect("dimension matches")
        }
    };
    random_morphism(rng, &v, &w)
}

/// `k` distinct elements of `0..n` in increasing order, `k >= 1`.
pub fn random_subset(rng: &mut SampleRng, n: usize) -> Vec<usize> {
    let k = rng.gen_range(1..=n);
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    let mut out = all[..k].to_vec();
    out.sort_unstable();
    out
}
