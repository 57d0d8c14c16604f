use rayon::prelude::*;

use crate::error::Result;
use crate::form::HomogeneousForm;
use crate::point::ProjectivePoint;
use crate::scalar::{Field, Scalar};

use super::{classify_form, NodeReport, QuarticSpec, Singularity, MAX_QUARTIC_NODES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub prime: u64,
    /// Points of `P^4(F_p)` visited, `p^4 + p^3 + p^2 + p + 1` for a full scan.
    pub enumerated: u64,
    /// Singular points in chart order, then lexicographic within a chart.
    pub reports: Vec<NodeReport>,
    /// More than the maximal number of nodes, all classified as nodes.
    pub bound_violated: bool,
}

impl ScanResult {
    pub fn singular_count(&self) -> usize {
        self.reports.len()
    }

    pub fn node_count(&self) -> usize {
        self.reports.iter().filter(|r| r.class == Singularity::Node).count()
    }

    pub fn all_nodes(&self) -> bool {
        self.reports.iter().all(|r| r.class == Singularity::Node)
    }
}

/// Polynomial over `F_p` in at most three free variables.
struct Compiled {
    terms: Vec<(u64, [u8; 3])>,
}

impl Compiled {
    #[inline]
    fn eval(&self, pw: &[[u64; 4]], vals: &[usize; 3], p: u64) -> u64 {
        let mut acc = 0u64;
        for (c, e) in &self.terms {
            let mut t = *c;
            for k in 0..3 {
                if e[k] > 0 {
                    t = t * pw[vals[k]][e[k] as usize] % p;
                }
            }
            acc += t;
        }
        acc % p
    }
}

fn residue(c: &Scalar) -> u64 {
    c.residue().expect("reduced form")
}

/// Specialize a partial to chart `j` with first free coordinate `a`: the
/// coordinates before `j` vanish, `x_j = 1`, `x_{j+1} = a`.
fn specialize(f: &HomogeneousForm, j: usize, a: Option<u64>, p: u64) -> Compiled {
    let mut terms: Vec<(u64, [u8; 3])> = Vec::new();
    for (e, c) in f.terms() {
        if e[..j].iter().any(|&k| k > 0) {
            continue;
        }
        let mut c = residue(c);
        let mut rest = &e[j + 1..];
        if let Some(a) = a {
            for _ in 0..rest[0] {
                c = c * a % p;
            }
            rest = &rest[1..];
        }
        if c == 0 {
            continue;
        }
        let mut ex = [0u8; 3];
        for (k, &v) in rest.iter().enumerate() {
            ex[k] = v as u8;
        }
        match terms.iter_mut().find(|(_, x)| *x == ex) {
            Some(t) => t.0 = (t.0 + c) % p,
            None => terms.push((c, ex)),
        }
    }
    terms.retain(|t| t.0 != 0);
    Compiled { terms }
}

fn scan_slice(partials: &[HomogeneousForm], pw: &[[u64; 4]], j: usize, a: Option<u64>, p: u64) -> Vec<[u64; 5]> {
    let compiled: Vec<Compiled> = partials.iter().map(|d| specialize(d, j, a, p)).collect();
    let free = 4 - j - usize::from(a.is_some());
    let mut out = Vec::new();
    let mut vals = [0usize; 3];
    let total = (p as usize).pow(free as u32);
    for _ in 0..total {
        if compiled.iter().all(|c| c.eval(pw, &vals, p) == 0) {
            let mut pt = [0u64; 5];
            pt[j] = 1;
            let mut k = j + 1;
            if let Some(a) = a {
                pt[k] = a;
                k += 1;
            }
            for v in vals.iter().take(free) {
                pt[k] = *v as u64;
                k += 1;
            }
            out.push(pt);
        }
        // odometer, last free coordinate fastest
        let mut i = free;
        while i > 0 {
            i -= 1;
            vals[i] += 1;
            if vals[i] < p as usize {
                break;
            }
            vals[i] = 0;
        }
    }
    out
}

/// Every singular point of `F = 0` over `F_p`, found by evaluating the five
/// partials on each of the standard affine charts.
pub fn scan_singular(spec: &QuarticSpec, prime: u64, threads: usize) -> Result<ScanResult> {
    let field = Field::prime(prime)?;
    let f = spec.form.reduce(field)?;
    let partials = f.gradient();
    let p = prime;
    let pw: Vec<[u64; 4]> = (0..p)
        .map(|v| [1, v, v * v % p, v * v % p * v % p])
        .collect();

    let mut slices: Vec<(usize, Option<u64>)> = Vec::new();
    for j in 0..4 {
        for a in 0..p {
            slices.push((j, Some(a)));
        }
    }
    slices.push((4, None));

    let run = || -> Vec<Vec<[u64; 5]>> {
        slices
            .par_iter()
            .map(|&(j, a)| scan_slice(&partials, &pw, j, a, p))
            .collect()
    };
    let found = if threads == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
            .install(run)
    };

    let mut reports = Vec::new();
    for pt in found.into_iter().flatten() {
        let q = ProjectivePoint::new(pt.iter().map(|&c| Scalar::from_int(field, c as i64)).collect())?;
        reports.push(classify_form(&f, &q)?);
    }
    let enumerated = (0..5).map(|k| p.pow(k)).sum();
    let bound_violated =
        reports.len() > MAX_QUARTIC_NODES && reports.iter().all(|r| r.class == Singularity::Node);
    Ok(ScanResult {
        prime,
        enumerated,
        reports,
        bound_violated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::families::designed;

    #[test]
    fn fermat_smooth_mod_7() {
        let v = |i| HomogeneousForm::variable(Field::Rational, 5, i);
        let f = (0..5).map(|i| v(i).pow(4)).reduce(|a, b| &a + &b).unwrap();
        let r = scan_singular(&QuarticSpec::custom(f).unwrap(), 7, 1).unwrap();
        assert_eq!(r.singular_count(), 0);
        assert_eq!(r.enumerated, 7u64.pow(4) + 343 + 49 + 7 + 1);
    }

    #[test]
    fn plane_family_mod_11() {
        let spec = designed::plane();
        let r = scan_singular(&spec, 11, 2).unwrap();
        let f11 = Field::prime(11).unwrap();
        for a in [0, 1, -1] {
            for b in [0, 1, -1] {
                let q = ProjectivePoint::from_ints(f11, &[0, 0, a, b, 1]).unwrap();
                assert!(r.reports.iter().any(|n| n.point == q));
            }
        }
        assert_eq!(r.singular_count(), 9);
        assert!(r.all_nodes());
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let spec = QuarticSpec::burkhardt();
        let a = scan_singular(&spec, 7, 1).unwrap();
        let b = scan_singular(&spec, 7, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn denominators_checked() {
        let v = |i| HomogeneousForm::variable(Field::Rational, 5, i);
        let half = Scalar::from_ratio(Field::Rational, &1.into(), &7.into()).unwrap();
        let f = &v(0).pow(4).scale(&half) + &v(1).pow(4);
        let spec = QuarticSpec::custom(f).unwrap();
        assert_eq!(scan_singular(&spec, 7, 1), Err(Error::DenominatorDivisibleByPrime(7)));
        assert!(matches!(scan_singular(&spec, 9, 1), Err(Error::InvalidPrime(9))));
    }
}
