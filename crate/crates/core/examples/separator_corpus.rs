//! Writes admissible point configurations for the separator comparison.
//!
//! Usage: cargo run --release --example separator_corpus -- <out-dir>

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use nodal_core::{
    agp_check, build_separating_cubic, separating_form_oracle, AgpThresholds, Field, PointConfiguration,
    ProjectivePoint, Scalar,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..=n).map(|_| rng.gen_range(-4..=4)).collect();
        if v.iter().any(|&c| c != 0) {
            return v;
        }
    }
}

fn combo(rng: &mut ChaCha8Rng, basis: &[Vec<i64>]) -> Vec<i64> {
    loop {
        let w: Vec<i64> = basis.iter().map(|_| rng.gen_range(-3..=3)).collect();
        let v: Vec<i64> = (0..basis[0].len())
            .map(|i| basis.iter().zip(&w).map(|(b, c)| b[i] * c).sum())
            .collect();
        if v.iter().any(|&c| c != 0) {
            return v;
        }
    }
}

fn point(v: &[i64]) -> ProjectivePoint {
    ProjectivePoint::from_ints(Field::Rational, v).unwrap()
}

/// `total` points, of which `special` lie in a subspace of dimension `k`
/// through the first point.
fn config(rng: &mut ChaCha8Rng, n: usize, total: usize, k: usize, special: usize) -> Option<Vec<ProjectivePoint>> {
    let first = random_point(rng, n);
    let mut basis = vec![first.clone()];
    for _ in 0..k {
        basis.push(random_point(rng, n));
    }
    let mut pts = vec![point(&first)];
    while pts.len() < total {
        let v = if pts.len() < special { combo(rng, &basis) } else { random_point(rng, n) };
        let q = point(&v);
        if !pts.contains(&q) {
            pts.push(q);
        }
    }
    let cfg = PointConfiguration::new(pts.clone()).ok()?;
    agp_check(&cfg, &AgpThresholds::default()).ok()?.passes().then_some(pts)
}

fn format_point(p: &ProjectivePoint) -> String {
    p.coords().iter().map(Scalar::to_string).collect::<Vec<_>>().join(":")
}

fn main() {
    let out: PathBuf = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| "corpus/separator".into());
    fs::create_dir_all(&out).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20260401);
    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    let mut written = 0;
    let plans: Vec<(usize, usize, usize, usize)> = vec![
        // (ambient, total points, subspace dim, points in it)
        (2, 8, 2, 8),
        (2, 7, 2, 7),
        (3, 9, 2, 3),
        (3, 9, 2, 4),
        (3, 9, 2, 5),
        (3, 9, 2, 6),
        (3, 9, 2, 7),
        (3, 9, 2, 8),
        (4, 9, 3, 4),
        (4, 9, 3, 5),
        (4, 9, 3, 6),
        (4, 9, 3, 7),
        (4, 9, 3, 8),
        (4, 9, 3, 9),
    ];
    for (n, total, k, special) in plans {
        let mut made = 0;
        while made < 3 {
            let Some(pts) = config(&mut rng, n, total, k, special) else {
                continue;
            };
            let cfg = PointConfiguration::new(pts.clone()).unwrap();
            for i in 0..cfg.len() {
                let (sigma, p) = cfg.without(i).unwrap();
                let oracle = separating_form_oracle(&sigma, &p, 3).unwrap();
                match build_separating_cubic(&sigma, &p) {
                    Ok(c) => {
                        assert!(c.verify());
                        *cases.entry(c.trace.case.clone()).or_default() += 1;
                        assert!(oracle.is_some());
                    }
                    Err(e) => panic!("P{n} {special}-in-{k}: {e} (oracle {})", oracle.is_some()),
                }
            }
            let body: String = pts.iter().map(|p| format_point(p) + "\n").collect();
            let name = format!("p{n}-{special}in{k}-{made}.pts");
            fs::write(out.join(&name), format!("# P{n}, {special} points in a {k}-dimensional subspace\n{body}")).unwrap();
            made += 1;
            written += 1;
        }
    }
    eprintln!("{written} configurations");
    for (case, count) in cases {
        eprintln!("{case}: {count}");
    }
}
