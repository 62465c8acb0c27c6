#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use toric_nash::semigroup::{validate, GeneratorSet, ValidatedSemigroup};

pub const POPULATION_SEED: u64 = 0x05ee_d2d7_071c;

/// Valid semigroups with coordinates in `0..=6` and between 3 and 6 generators,
/// drawn by rejection sampling from a fixed seed.
pub fn random_population(seed: u64, count: usize) -> Vec<(Vec<(i64, i64)>, ValidatedSemigroup)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut seen = std::collections::BTreeSet::new();
    while out.len() < count {
        let s = rng.gen_range(3..=6);
        let mut pts: Vec<(i64, i64)> = (0..s)
            .map(|_| (rng.gen_range(0..=6), rng.gen_range(0..=6)))
            .collect();
        pts.sort_unstable();
        pts.dedup();
        if pts.len() < 3 || !seen.insert(pts.clone()) {
            continue;
        }
        let Ok(gens) = GeneratorSet::from_pairs(&pts) else {
            continue;
        };
        if let Ok(vs) = validate(&gens) {
            out.push((pts, vs));
        }
    }
    out
}

/// Semigroups whose singular locus is only the origin, built from points
/// `(1, k)` that contain `(1,0), (1,1), (1,d-1), (1,d)` plus optionally one
/// point `(2, j)`. Only inputs with more than three generators are kept.
pub fn isolated_population(seed: u64, count: usize) -> Vec<(Vec<(i64, i64)>, ValidatedSemigroup)> {
    use toric_nash::nash::jacobian_locus;
    use toric_nash::toric::toric_ideal_lex;

    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..20_000 {
        if out.len() == count {
            break;
        }
        let d: i64 = rng.gen_range(3..=6);
        let mut pts: Vec<(i64, i64)> = vec![(1, 0), (1, 1), (1, d - 1), (1, d)];
        for k in 2..d - 1 {
            if rng.gen_bool(0.5) {
                pts.push((1, k));
            }
        }
        if rng.gen_bool(0.5) {
            pts.push((2, rng.gen_range(1..=6)));
        }
        pts.sort_unstable();
        pts.dedup();
        if pts.len() > 6 || !seen.insert(pts.clone()) {
            continue;
        }
        let Ok(vs) = validate(&GeneratorSet::from_pairs(&pts).unwrap()) else {
            continue;
        };
        if vs.nvars() <= 3 {
            continue;
        }
        let ideal = toric_ideal_lex(&vs).unwrap();
        if jacobian_locus(&ideal, ideal.minimal_gens()).unwrap().dim() == Some(0) {
            out.push((pts, vs));
        }
    }
    out
}
