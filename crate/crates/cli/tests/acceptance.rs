use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nodal_cli::parse::{parse_point_set, parse_polynomial, parse_spec};
use nodal_core::invariants::adjoint_class;
use nodal_core::{
    agp_check, bound_verdict, build_separating_cubic, ci_ideal_cubics_dimension, classify_singularity,
    conditions_defect, cynk_invariants, designed_nodes, discriminant_class, fr_canonical, scan_singular,
    separating_form_oracle, shokurov_verdict, valera_verdict, AgpThresholds, Conclusion, DivisorClass, Field,
    HomogeneousForm, PointConfiguration, ProjectivePoint, QuarticSpec, Scalar, Singularity,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20260401;
const AC1_CONFIGS: usize = 1000;
const AC1_LIMIT: Duration = Duration::from_secs(60);
const AC2_LIMIT: Duration = Duration::from_secs(1);
const AC3_MIN_INSTANCES: usize = 200;
const AC3_LIMIT: Duration = Duration::from_secs(60);
const AC4_LIMIT: Duration = Duration::from_secs(10);
const AC5_LIMIT: Duration = Duration::from_secs(120);
const AC6_LIMIT: Duration = Duration::from_secs(5);
const AC7_LIMIT: Duration = Duration::from_secs(1);
const AC8_LIMIT: Duration = Duration::from_secs(1);
const AC9_LIMIT: Duration = Duration::from_secs(1);

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pt(c: &[i64]) -> ProjectivePoint {
    ProjectivePoint::from_ints(Field::Rational, c).unwrap()
}

fn combo(rng: &mut ChaCha8Rng, basis: &[[i64; 5]]) -> [i64; 5] {
    let mut v = [0i64; 5];
    for b in basis {
        let c = rng.gen_range(-6..=6);
        for k in 0..5 {
            v[k] += c * b[k];
        }
    }
    v
}

fn random_vec(rng: &mut ChaCha8Rng) -> [i64; 5] {
    std::array::from_fn(|_| rng.gen_range(-9..=9))
}

/// Up to eight points, some forced onto a random line, plane conic or
/// hyperplane so that the incidence bounds are approached.
fn structured_config(rng: &mut ChaCha8Rng) -> Option<PointConfiguration> {
    let m = rng.gen_range(1..=8);
    let mut raw: Vec<[i64; 5]> = Vec::new();
    match rng.gen_range(0..4) {
        0 => {
            let b = [random_vec(rng), random_vec(rng)];
            for _ in 0..rng.gen_range(0..=3) {
                raw.push(combo(rng, &b));
            }
        }
        1 => {
            let b = [random_vec(rng), random_vec(rng), random_vec(rng)];
            for _ in 0..rng.gen_range(0..=6) {
                let (s, t) = (rng.gen_range(-5i64..=5), rng.gen_range(-5i64..=5));
                raw.push(std::array::from_fn(|k| s * s * b[0][k] + s * t * b[1][k] + t * t * b[2][k]));
            }
        }
        2 => {
            let b = [random_vec(rng), random_vec(rng), random_vec(rng), random_vec(rng)];
            for _ in 0..rng.gen_range(0..=8) {
                raw.push(combo(rng, &b));
            }
        }
        _ => {}
    }
    raw.truncate(m);
    while raw.len() < m {
        raw.push(random_vec(rng));
    }
    let mut pts = Vec::new();
    for v in raw {
        let p = ProjectivePoint::from_ints(Field::Rational, &v).ok()?;
        if pts.contains(&p) {
            return None;
        }
        pts.push(p);
    }
    PointConfiguration::new(pts).ok()
}

fn ac1() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let th = AgpThresholds::default();
    let (mut accepted, mut drawn, mut max_defect) = (0usize, 0usize, 0usize);
    let mut sizes = [0usize; 9];
    while accepted < AC1_CONFIGS {
        drawn += 1;
        let Some(cfg) = structured_config(&mut rng) else { continue };
        if !agp_check(&cfg, &th).map_err(|e| e.to_string())?.passes() {
            continue;
        }
        accepted += 1;
        sizes[cfg.len()] += 1;
        let d = conditions_defect(&cfg, 3).map_err(|e| e.to_string())?;
        max_defect = max_defect.max(d.defect);
        ensure(d.defect == 0, || {
            let pts: Vec<String> = cfg.points().iter().map(|p| p.to_string()).collect();
            format!("defect {} on [{}]", d.defect, pts.join(", "))
        })?;
    }
    Ok(format!(
        "{accepted} configurations in almost general position ({drawn} drawn, sizes 1..8: {:?}), max defect {max_defect}",
        &sizes[1..]
    ))
}

fn ac2() -> Check {
    let mut plane = Vec::new();
    let mut ambient = Vec::new();
    for a in [0, 1, -1] {
        for b in [0, 1, -1] {
            plane.push(pt(&[a, b, 1]));
            ambient.push(pt(&[0, 0, a, b, 1]));
        }
    }
    let plane = PointConfiguration::new(plane).unwrap();
    let ambient = PointConfiguration::new(ambient).unwrap();
    let dp = conditions_defect(&plane, 3).map_err(|e| e.to_string())?;
    let da = conditions_defect(&ambient, 3).map_err(|e| e.to_string())?;
    ensure(dp.defect == 1 && dp.rank == 8, || format!("plane: rank {} defect {}", dp.rank, dp.defect))?;
    ensure(da.defect == 1 && da.rank == 8, || format!("P^4: rank {} defect {}", da.rank, da.defect))?;
    let file = parse_point_set(&fs::read_to_string(corpus().join("grid9.pts")).unwrap()).map_err(|e| e.to_string())?;
    ensure(file == ambient, || "grid9.pts differs from the grid".into())?;
    for i in 0..9 {
        let (rest, p) = plane.without(i).unwrap();
        let f = separating_form_oracle(&rest, &p, 3).map_err(|e| e.to_string())?;
        ensure(f.is_none(), || format!("oracle separated grid point {p}"))?;
    }
    Ok("grid defect 1 with 10 and 35 monomials; oracle finds no separator for all 9 exclusions".into())
}

fn ac3() -> Check {
    let dir = corpus().join("separator");
    let mut files: Vec<PathBuf> = fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "pts"))
        .collect();
    files.sort();
    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    let mut instances = 0;
    for f in &files {
        let cfg = parse_point_set(&fs::read_to_string(f).unwrap()).map_err(|e| format!("{}: {e}", f.display()))?;
        for i in 0..cfg.len() {
            let (sigma, p) = cfg.without(i).unwrap();
            let oracle = separating_form_oracle(&sigma, &p, 3).map_err(|e| e.to_string())?;
            let built = build_separating_cubic(&sigma, &p);
            let name = || format!("{} excluding {i}", f.file_name().unwrap().to_string_lossy());
            ensure(built.is_ok() == oracle.is_some(), || {
                format!("{}: builder {:?}, oracle {}", name(), built.as_ref().err(), oracle.is_some())
            })?;
            if let Ok(cert) = built {
                ensure(cert.verify(), || format!("{}: certificate does not verify", name()))?;
                let back = parse_polynomial(&cert.form.to_string(), p.dim() + 1).map_err(|e| e.to_string())?;
                ensure(back == cert.form, || format!("{}: cubic does not round-trip", name()))?;
                *cases.entry(cert.trace.case.clone()).or_default() += 1;
            }
            instances += 1;
        }
    }
    ensure(instances >= AC3_MIN_INSTANCES, || format!("only {instances} instances"))?;
    let mut needed: Vec<String> = vec!["P2/plane".into()];
    for r in 2..=7 {
        needed.push(format!("P3/r={r}"));
    }
    for r in 3..=7 {
        needed.push(format!("P4/r={r}"));
    }
    for c in &needed {
        ensure(cases.contains_key(c), || format!("case {c} not exercised"))?;
    }
    let summary: Vec<String> = cases.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    Ok(format!("{instances} instances from {} files agree and verify; {}", files.len(), summary.join(" ")))
}

fn load_spec(name: &str) -> Result<QuarticSpec, String> {
    parse_spec(&fs::read_to_string(corpus().join(name)).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn family_counts(name: &str) -> Result<(usize, usize), String> {
    let spec = load_spec(name)?;
    let nodes = designed_nodes(&spec).map_err(|e| e.to_string())?;
    let mut rank4 = 0;
    for p in nodes.points() {
        let r = classify_singularity(&spec, p).map_err(|e| e.to_string())?;
        if r.hessian_rank == 4 && r.class == Singularity::Node {
            rank4 += 1;
        }
    }
    Ok((nodes.len(), rank4))
}

fn ac4() -> Check {
    let mut parts = Vec::new();
    for (file, expected) in [("plane.spec", 9), ("delpezzo.spec", 16), ("quadric.spec", 12)] {
        let (count, rank4) = family_counts(file)?;
        ensure(count == expected, || format!("{file}: {count} designed nodes, expected {expected}"))?;
        ensure(rank4 == count, || format!("{file}: only {rank4} of {count} have Hessian rank 4"))?;
        parts.push(format!("{file} {count}"));
    }
    Ok(format!("{} designed nodes, all of Hessian rank 4", parts.join(", ")))
}

fn ac5() -> Check {
    let burkhardt = load_spec("burkhardt.spec")?;
    let res = scan_singular(&burkhardt, 13, 1).map_err(|e| e.to_string())?;
    ensure(res.singular_count() == 45 && res.all_nodes(), || {
        format!("Burkhardt over F13: {} singular, {} nodes", res.singular_count(), res.node_count())
    })?;
    let fermat = load_spec("fermat.spec")?;
    let f7 = scan_singular(&fermat, 7, 1).map_err(|e| e.to_string())?;
    ensure(f7.singular_count() == 0, || format!("Fermat over F7: {} singular", f7.singular_count()))?;
    Ok(format!(
        "Burkhardt over F13: 45 nodes among {} points; Fermat over F7: 0 singular",
        res.enumerated
    ))
}

fn ac6() -> Check {
    let spec = load_spec("plane.spec")?;
    let v = |i| HomogeneousForm::variable(Field::Rational, 5, i);
    let h3 = spec.constituent("h3").unwrap().form.clone();
    let g3 = spec.constituent("g3").unwrap().form.clone();
    let plane = ci_ideal_cubics_dimension(&[v(0), v(1), h3, g3]).map_err(|e| e.to_string())?;
    ensure(plane == 27, || format!("(x, y, h3, g3) has {plane} cubics, expected 27"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let quadrics: Vec<HomogeneousForm> = (0..4)
        .map(|_| {
            let coeffs: Vec<Scalar> = (0..15).map(|_| Scalar::from_int(Field::Rational, rng.gen_range(-50..=50))).collect();
            HomogeneousForm::from_basis_coefficients(Field::Rational, 5, 2, &coeffs)
        })
        .collect();
    let generic = ci_ideal_cubics_dimension(&quadrics).map_err(|e| e.to_string())?;
    ensure(generic == 20, || format!("four quadrics give {generic} cubics, expected 20"))?;
    Ok(format!(
        "cubics in (x, y, h3, g3): {plane}, so at most {} conditions on 9 nodes; four quadrics: {generic}, so at most {} on 16",
        35 - plane,
        35 - generic
    ))
}

/// Euler characteristic of a smooth hypersurface of degree `d` in `P^4`
/// from its total Chern class `(1 + h)^5 / (1 + d h)`.
fn smooth_chi(d: i64) -> i64 {
    let binom = [1, 5, 10, 10];
    let c3: i64 = (0..=3).map(|i| binom[i] * (-d).pow(3 - i as u32)).sum();
    d * c3
}

fn ac7() -> Check {
    let inv = cynk_invariants(16, 1).map_err(|e| e.to_string())?;
    ensure(inv.h21 == 15 && inv.chi == -24, || format!("(16, 1) gives h21 {} chi {}", inv.h21, inv.chi))?;
    let v = valera_verdict(inv.chi, true);
    ensure(v.conclusion == Conclusion::NonRational, || format!("verdict {}", v.conclusion))?;
    let smooth = cynk_invariants(0, 0).map_err(|e| e.to_string())?;
    let oracle = smooth_chi(4);
    ensure(smooth.chi == oracle, || format!("smooth chi {} against {oracle}", smooth.chi))?;
    Ok(format!("h21 = 15, chi = -24, NonRational; smooth quartic chi = {oracle}"))
}

fn ac8() -> Check {
    let delta = discriminant_class(3, 5, 1).map_err(|e| e.to_string())?;
    ensure(delta == DivisorClass::new(1, 5, 8), || format!("discriminant {delta}"))?;
    let k = fr_canonical(1).map_err(|e| e.to_string())?;
    let by_hand = k.scale(2).add(delta).map_err(|e| e.to_string())?;
    let adj = adjoint_class(delta);
    ensure(adj == DivisorClass::new(1, 1, 2) && adj == by_hand, || format!("2K + D = {adj}, by hand {by_hand}"))?;
    let v = shokurov_verdict(delta);
    ensure(v.conclusion == Conclusion::NonRational, || format!("verdict {}", v.conclusion))?;
    Ok(format!("discriminant {delta}, 2K + discriminant {adj}, NonRational"))
}

fn ac9() -> Check {
    let verdict = |d, n, plane| bound_verdict(d, n, plane, false).map(|v| v.conclusion);
    ensure(verdict(4, 8, false) == Ok(Conclusion::QFactorial), || "(4, 8)".into())?;
    ensure(verdict(4, 9, false) == Ok(Conclusion::QFactorial), || "(4, 9, no plane)".into())?;
    ensure(verdict(4, 9, true) == Ok(Conclusion::NotQFactorial), || "(4, 9, plane)".into())?;
    let mut rows = 3;
    for d in 3u32..=8 {
        for n in 0..=(2 * d as usize - 4) {
            ensure(verdict(d, n, false) == Ok(Conclusion::QFactorial), || format!("({d}, {n})"))?;
            rows += 1;
        }
    }
    ensure(bound_verdict(4, 46, false, false).is_err(), || "(4, 46) accepted".into())?;
    Ok(format!("{} rows as expected, (4, 46) rejected", rows + 1))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1", ac1, AC1_LIMIT),
        ("AC2", ac2, AC2_LIMIT),
        ("AC3", ac3, AC3_LIMIT),
        ("AC4", ac4, AC4_LIMIT),
        ("AC5", ac5, AC5_LIMIT),
        ("AC6", ac6, AC6_LIMIT),
        ("AC7", ac7, AC7_LIMIT),
        ("AC8", ac8, AC8_LIMIT),
        ("AC9", ac9, AC9_LIMIT),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if took <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; exceeded time limit")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{name} {status} [{:.3}s of {}s] {detail}",
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
