use crate::error::{Error, Result};
use crate::form::monomial_basis;
use crate::form::monomial_value;
use crate::linalg::Matrix;
use crate::point::ProjectivePoint;
use crate::scalar::{Field, Scalar};
use crate::subspace::{span_dimension, LinearSubspace};

/// A finite set of distinct points in a common projective space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    ambient: usize,
    field: Field,
    points: Vec<ProjectivePoint>,
}

impl PointConfiguration {
    pub fn new(points: Vec<ProjectivePoint>) -> Result<Self> {
        let first = points.first().ok_or(Error::ZeroPoint)?;
        Self::with_ambient(first.field(), first.dim(), points)
    }

    /// Like `new`, but allows an empty set.
    pub fn with_ambient(field: Field, ambient: usize, points: Vec<ProjectivePoint>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if p.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: p.dim(),
                });
            }
            field.check(p.field())?;
            if points[..i].contains(p) {
                return Err(Error::DuplicatePoint(i));
            }
        }
        Ok(PointConfiguration { ambient, field, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn get(&self, i: usize) -> Option<&ProjectivePoint> {
        self.points.get(i)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.points.contains(p)
    }

    pub fn index_of(&self, p: &ProjectivePoint) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// The configuration with point `i` removed, and that point.
    pub fn without(&self, i: usize) -> Result<(PointConfiguration, ProjectivePoint)> {
        if i >= self.points.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: self.points.len(),
            });
        }
        let mut rest = self.points.clone();
        let p = rest.remove(i);
        Ok((
            PointConfiguration {
                ambient: self.ambient,
                field: self.field,
                points: rest,
            },
            p,
        ))
    }

    pub fn with_point(&self, p: ProjectivePoint) -> Result<PointConfiguration> {
        let mut pts = self.points.clone();
        pts.push(p);
        Self::with_ambient(self.field, self.ambient, pts)
    }

    pub fn subset(&self, indices: &[usize]) -> PointConfiguration {
        PointConfiguration {
            ambient: self.ambient,
            field: self.field,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    pub fn span_dimension(&self) -> Result<(usize, LinearSubspace)> {
        span_dimension(&self.points)
    }
}

/// Whether degenerate conics (line pairs, double lines) count as conics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ConicSemantics {
    #[default]
    Inclusive,
    SmoothOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AgpThresholds {
    pub max_on_line: usize,
    pub max_on_conic: usize,
    pub max_on_plane: usize,
    pub conics: ConicSemantics,
}

impl Default for AgpThresholds {
    fn default() -> Self {
        AgpThresholds {
            max_on_line: 3,
            max_on_conic: 6,
            max_on_plane: 8,
            conics: ConicSemantics::Inclusive,
        }
    }
}

impl AgpThresholds {
    pub fn new(max_on_line: usize, max_on_conic: usize, max_on_plane: usize) -> Result<Self> {
        if max_on_line == 0 || max_on_line > max_on_conic || max_on_conic > max_on_plane {
            return Err(Error::OutOfRange(format!(
                "thresholds must satisfy 0 < line <= conic <= plane, got {max_on_line}/{max_on_conic}/{max_on_plane}"
            )));
        }
        Ok(AgpThresholds {
            max_on_line,
            max_on_conic,
            max_on_plane,
            conics: ConicSemantics::Inclusive,
        })
    }

    pub fn with_conics(mut self, conics: ConicSemantics) -> Self {
        self.conics = conics;
        self
    }
}

/// Largest incidence found, with the lexicographically first witness among
/// those attaining it (indices into the configuration, ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub count: usize,
    pub witness: Vec<usize>,
}

impl Incidence {
    fn empty() -> Self {
        Incidence {
            count: 0,
            witness: Vec::new(),
        }
    }

    fn offer(&mut self, mut witness: Vec<usize>) {
        witness.sort_unstable();
        witness.dedup();
        let count = witness.len();
        if count > self.count || (count == self.count && witness < self.witness) {
            self.count = count;
            self.witness = witness;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgpReport {
    pub thresholds: AgpThresholds,
    pub line: Incidence,
    pub conic: Incidence,
    pub plane: Incidence,
    pub line_ok: bool,
    pub conic_ok: bool,
    pub plane_ok: bool,
}

impl AgpReport {
    pub fn passes(&self) -> bool {
        self.line_ok && self.conic_ok && self.plane_ok
    }
}

fn collinear(a: &ProjectivePoint, b: &ProjectivePoint, c: &ProjectivePoint) -> bool {
    let rows = vec![a.coords().to_vec(), b.coords().to_vec(), c.coords().to_vec()];
    Matrix::from_rows(a.field(), rows).expect("consistent").rank() < 3
}

fn members(cfg: &PointConfiguration, s: &LinearSubspace) -> Vec<usize> {
    (0..cfg.len()).filter(|&k| s.contains(&cfg.points[k])).collect()
}

pub fn agp_check(cfg: &PointConfiguration, th: &AgpThresholds) -> Result<AgpReport> {
    if cfg.ambient_dim() < 2 {
        return Err(Error::OutOfRange(format!(
            "ambient dimension {} is below 2",
            cfg.ambient_dim()
        )));
    }
    if cfg.is_empty() {
        return Err(Error::OutOfRange("empty configuration".into()));
    }
    let m = cfg.len();
    let pts = cfg.points();

    let mut line = Incidence::empty();
    line.offer(vec![0]);
    for i in 0..m {
        for j in i + 1..m {
            let l = LinearSubspace::span(&[pts[i].clone(), pts[j].clone()])?;
            line.offer(members(cfg, &l));
        }
    }

    let mut plane_sets: Vec<Vec<usize>> = Vec::new();
    let mut plane_spaces: Vec<LinearSubspace> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                if collinear(&pts[i], &pts[j], &pts[k]) {
                    continue;
                }
                let s = LinearSubspace::span(&[pts[i].clone(), pts[j].clone(), pts[k].clone()])?;
                let mem = members(cfg, &s);
                if !plane_sets.contains(&mem) {
                    plane_sets.push(mem);
                    plane_spaces.push(s);
                }
            }
        }
    }

    let mut plane = Incidence::empty();
    let mut conic = Incidence::empty();
    if plane_sets.is_empty() {
        // everything is collinear
        plane.offer((0..m).collect());
        match th.conics {
            ConicSemantics::Inclusive => conic.offer((0..m).collect()),
            ConicSemantics::SmoothOnly => conic.offer((0..m.min(2)).collect()),
        }
    } else {
        for (mem, s) in plane_sets.iter().zip(&plane_spaces) {
            plane.offer(mem.clone());
            let best = match th.conics {
                ConicSemantics::Inclusive => conic_inclusive(cfg, mem, s)?,
                ConicSemantics::SmoothOnly => conic_smooth(cfg, mem, s)?,
            };
            conic.offer(best.witness);
        }
    }

    Ok(AgpReport {
        thresholds: *th,
        line_ok: line.count <= th.max_on_line,
        conic_ok: conic.count <= th.max_on_conic,
        plane_ok: plane.count <= th.max_on_plane,
        line,
        conic,
        plane,
    })
}

fn plane_coords(cfg: &PointConfiguration, mem: &[usize], s: &LinearSubspace) -> Vec<ProjectivePoint> {
    mem.iter()
        .map(|&i| s.coordinates_of(&cfg.points[i]).expect("member of plane"))
        .collect()
}

/// Conic through the given plane points when it is unique up to scale,
/// as coefficients on the degree-2 monomial basis in three variables.
fn unique_conic(local: &[&ProjectivePoint]) -> Option<Vec<Scalar>> {
    let basis = monomial_basis(3, 2);
    let field = local[0].field();
    let rows: Vec<Vec<Scalar>> = local
        .iter()
        .map(|p| basis.iter().map(|e| monomial_value(e, p.coords())).collect())
        .collect();
    let ns = Matrix::from_rows(field, rows).ok()?.nullspace();
    if ns.len() == 1 {
        ns.into_iter().next()
    } else {
        None
    }
}

fn on_conic(q: &[Scalar], p: &ProjectivePoint) -> bool {
    let basis = monomial_basis(3, 2);
    basis
        .iter()
        .zip(q)
        .fold(p.field().zero(), |acc, (e, c)| &acc + &(c * &monomial_value(e, p.coords())))
        .is_zero()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn conic_inclusive(cfg: &PointConfiguration, mem: &[usize], s: &LinearSubspace) -> Result<Incidence> {
    let mut best = Incidence::empty();
    let k = mem.len();
    best.offer(mem[..k.min(5)].to_vec());
    if k <= 5 {
        return Ok(best);
    }
    let pts = cfg.points();
    let mut lines: Vec<Vec<usize>> = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let l = LinearSubspace::span(&[pts[mem[a]].clone(), pts[mem[b]].clone()])?;
            let on: Vec<usize> = mem.iter().copied().filter(|&i| l.contains(&pts[i])).collect();
            if !lines.contains(&on) {
                lines.push(on);
            }
        }
    }
    for (i, l1) in lines.iter().enumerate() {
        if let Some(&extra) = mem.iter().find(|i| !l1.contains(i)) {
            let mut w = l1.clone();
            w.push(extra);
            best.offer(w);
        }
        for l2 in &lines[i + 1..] {
            let mut w = l1.clone();
            w.extend(l2);
            best.offer(w);
        }
    }
    let local = plane_coords(cfg, mem, s);
    for c in combinations(k, 5) {
        let sel: Vec<&ProjectivePoint> = c.iter().map(|&i| &local[i]).collect();
        if let Some(q) = unique_conic(&sel) {
            let w: Vec<usize> = (0..k).filter(|&i| on_conic(&q, &local[i])).map(|i| mem[i]).collect();
            best.offer(w);
        }
    }
    Ok(best)
}

fn conic_smooth(cfg: &PointConfiguration, mem: &[usize], s: &LinearSubspace) -> Result<Incidence> {
    let mut best = Incidence::empty();
    let k = mem.len();
    let local = plane_coords(cfg, mem, s);
    let no_three_collinear = |c: &[usize]| {
        combinations(c.len(), 3)
            .iter()
            .all(|t| !collinear(&local[c[t[0]]], &local[c[t[1]]], &local[c[t[2]]]))
    };
    for size in (1..=k.min(4)).rev() {
        if let Some(c) = combinations(k, size).into_iter().find(|c| no_three_collinear(c)) {
            best.offer(c.iter().map(|&i| mem[i]).collect());
            break;
        }
    }
    if k >= 5 {
        for c in combinations(k, 5) {
            let sel: Vec<&ProjectivePoint> = c.iter().map(|&i| &local[i]).collect();
            if let Some(q) = unique_conic(&sel) {
                if conic_is_smooth(&q) {
                    let w: Vec<usize> = (0..k).filter(|&i| on_conic(&q, &local[i])).map(|i| mem[i]).collect();
                    best.offer(w);
                }
            }
        }
    }
    Ok(best)
}

// Coefficients follow the basis x^2, xy, xz, y^2, yz, z^2.
fn conic_is_smooth(q: &[Scalar]) -> bool {
    let two = q[0].field().int(2);
    let m = vec![
        vec![&two * &q[0], q[1].clone(), q[2].clone()],
        vec![q[1].clone(), &two * &q[3], q[4].clone()],
        vec![q[2].clone(), q[4].clone(), &two * &q[5]],
    ];
    Matrix::from_rows(q[0].field(), m).expect("3x3").rank() == 3
}

/// A subspace of dimension `r` containing at least `r + 1` points of `delta`
/// but not `p`, built by induction on `r`.
pub fn find_excluding_subspace(delta: &PointConfiguration, p: &ProjectivePoint, r: usize) -> Result<LinearSubspace> {
    let n = delta.ambient_dim();
    if p.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.dim(),
        });
    }
    if delta.contains(p) {
        return Err(Error::PointInSet);
    }
    if r == 0 || r >= n || delta.is_empty() {
        return Err(Error::DegenerateConfiguration(r));
    }
    let mut all = vec![p.clone()];
    all.extend(delta.points().iter().cloned());
    if span_dimension(&all)?.0 <= r {
        return Err(Error::DegenerateConfiguration(r));
    }
    let h = excluding(delta.points(), p, r)?;
    debug_assert!(h.dim() == r && !h.contains(p));
    Ok(h)
}

fn greedy_independent(points: &[ProjectivePoint], want: usize) -> Vec<ProjectivePoint> {
    let mut chosen: Vec<ProjectivePoint> = Vec::new();
    for q in points {
        if chosen.len() == want {
            break;
        }
        let mut rows: Vec<Vec<Scalar>> = chosen.iter().map(|c| c.coords().to_vec()).collect();
        rows.push(q.coords().to_vec());
        if Matrix::from_rows(q.field(), rows).expect("consistent").rank() > chosen.len() {
            chosen.push(q.clone());
        }
    }
    chosen
}

fn excluding(delta: &[ProjectivePoint], p: &ProjectivePoint, r: usize) -> Result<LinearSubspace> {
    if r == 0 {
        let q = delta.iter().find(|q| *q != p).ok_or(Error::DegenerateConfiguration(0))?;
        return LinearSubspace::span(std::slice::from_ref(q));
    }
    let basis = greedy_independent(delta, r + 1);
    if basis.len() < r + 1 {
        return Err(Error::DegenerateConfiguration(r));
    }
    let t = LinearSubspace::span(&basis)?;
    if !t.contains(p) {
        return Ok(t);
    }
    let q = delta
        .iter()
        .find(|q| !t.contains(q))
        .ok_or(Error::DegenerateConfiguration(r))?;
    let s = excluding(&basis, p, r - 1)?;
    s.join(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_ints(Field::Rational, c).unwrap()
    }

    fn cfg(rows: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::new(rows.iter().map(|r| pt(r)).collect()).unwrap()
    }

    fn grid9() -> PointConfiguration {
        let mut v = Vec::new();
        for a in [0, 1, -1] {
            for b in [0, 1, -1] {
                v.push(pt(&[0, 0, a, b, 1]));
            }
        }
        PointConfiguration::new(v).unwrap()
    }

    #[test]
    fn duplicates_rejected() {
        let r = PointConfiguration::new(vec![pt(&[1, 2, 3]), pt(&[2, 4, 6])]);
        assert_eq!(r, Err(Error::DuplicatePoint(1)));
    }

    #[test]
    fn four_collinear_fail() {
        let c = cfg(&[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[1, 1, 0, 0, 0], &[1, 2, 0, 0, 0]]);
        let rep = agp_check(&c, &AgpThresholds::default()).unwrap();
        assert!(!rep.line_ok);
        assert_eq!(rep.line.count, 4);
        assert_eq!(rep.line.witness, vec![0, 1, 2, 3]);
        assert!(!rep.passes());
    }

    #[test]
    fn grid_fails_on_plane() {
        let rep = agp_check(&grid9(), &AgpThresholds::default()).unwrap();
        assert_eq!(rep.plane.count, 9);
        assert!(!rep.plane_ok);
        assert!(rep.line_ok);
        // two parallel triples of lines: six points on a line pair
        assert_eq!(rep.conic.count, 6);
    }

    #[test]
    fn seven_on_a_conic() {
        let rows: Vec<Vec<i64>> = (1..=7).map(|s| vec![s * s, s, 1, 0, 0]).collect();
        let c = PointConfiguration::new(rows.iter().map(|r| pt(r)).collect()).unwrap();
        for sem in [ConicSemantics::Inclusive, ConicSemantics::SmoothOnly] {
            let rep = agp_check(&c, &AgpThresholds::default().with_conics(sem)).unwrap();
            assert_eq!(rep.conic.count, 7);
            assert!(!rep.conic_ok);
        }
    }

    #[test]
    fn smooth_semantics_ignore_line_pairs() {
        let rep = agp_check(&grid9(), &AgpThresholds::default().with_conics(ConicSemantics::SmoothOnly)).unwrap();
        assert!(rep.conic.count <= 6);
        let incl = agp_check(&grid9(), &AgpThresholds::default()).unwrap();
        assert!(incl.conic.count >= rep.conic.count);
    }

    #[test]
    fn thresholds_validated() {
        assert!(AgpThresholds::new(3, 6, 8).is_ok());
        assert!(AgpThresholds::new(0, 6, 8).is_err());
        assert!(AgpThresholds::new(4, 3, 8).is_err());
    }

    #[test]
    fn excluding_coordinate_points() {
        let d = cfg(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let p = pt(&[1, 1, 1, 1]);
        let h = find_excluding_subspace(&d, &p, 2).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(!h.contains(&p));
        assert!(d.points().iter().filter(|q| h.contains(q)).count() >= 3);
    }

    #[test]
    fn excluding_in_plane() {
        let d = cfg(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let p = pt(&[1, 1, 1]);
        let h = find_excluding_subspace(&d, &p, 1).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(!h.contains(&p));
        assert_eq!(d.points().iter().filter(|q| h.contains(q)).count(), 2);
    }

    #[test]
    fn excluding_recurses_when_first_span_hits_p() {
        let d = cfg(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let p = pt(&[1, 1, 1, 0]);
        let h = find_excluding_subspace(&d, &p, 2).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(!h.contains(&p));
        assert!(d.points().iter().filter(|q| h.contains(q)).count() >= 3);
    }

    #[test]
    fn excluding_degenerate() {
        let d = cfg(&[&[1, 0, 0], &[0, 1, 0]]);
        let p = pt(&[1, 1, 0]);
        assert_eq!(
            find_excluding_subspace(&d, &p, 1),
            Err(Error::DegenerateConfiguration(1))
        );
    }

    fn small_points(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, n + 1), 2..8)
    }

    fn distinct(rows: Vec<Vec<i64>>) -> Vec<ProjectivePoint> {
        let mut out: Vec<ProjectivePoint> = Vec::new();
        for r in rows {
            if let Ok(p) = ProjectivePoint::from_ints(Field::Rational, &r) {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn excluding_subspace_contract(rows in small_points(4), prow in proptest::collection::vec(-3i64..=3, 5), r in 1usize..4) {
            let pts = distinct(rows);
            let p = ProjectivePoint::from_ints(Field::Rational, &prow);
            prop_assume!(p.is_ok());
            let p = p.unwrap();
            prop_assume!(!pts.is_empty() && !pts.contains(&p));
            let mut all = vec![p.clone()];
            all.extend(pts.iter().cloned());
            prop_assume!(span_dimension(&all).unwrap().0 > r);
            let d = PointConfiguration::new(pts).unwrap();
            let h = find_excluding_subspace(&d, &p, r).unwrap();
            prop_assert_eq!(h.dim(), r);
            prop_assert!(!h.contains(&p));
            prop_assert!(d.points().iter().filter(|q| h.contains(q)).count() > r);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn agp_permutation_invariant(rows in small_points(3), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let pts = distinct(rows);
            prop_assume!(!pts.is_empty());
            let mut shuffled = pts.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let th = AgpThresholds::default();
            let a = agp_check(&PointConfiguration::new(pts).unwrap(), &th).unwrap();
            let b = agp_check(&PointConfiguration::new(shuffled).unwrap(), &th).unwrap();
            prop_assert_eq!((a.line.count, a.conic.count, a.plane.count), (b.line.count, b.conic.count, b.plane.count));
            prop_assert_eq!(a.passes(), b.passes());
        }

        #[test]
        fn witnesses_recheck(rows in small_points(3)) {
            let pts = distinct(rows);
            prop_assume!(pts.len() >= 3);
            let c = PointConfiguration::new(pts).unwrap();
            let rep = agp_check(&c, &AgpThresholds::default()).unwrap();
            let sub = |w: &[usize]| w.iter().map(|&i| c.points()[i].clone()).collect::<Vec<_>>();
            if rep.line.count >= 2 {
                prop_assert_eq!(span_dimension(&sub(&rep.line.witness)).unwrap().0, 1);
            }
            let (pd, plane) = span_dimension(&sub(&rep.plane.witness)).unwrap();
            prop_assert!(pd <= 2);
            let (cd, cplane) = span_dimension(&sub(&rep.conic.witness)).unwrap();
            prop_assert!(cd <= 2);
            if cd == 2 {
                let local: Vec<ProjectivePoint> = sub(&rep.conic.witness).iter().map(|q| cplane.coordinates_of(q).unwrap()).collect();
                let basis = monomial_basis(3, 2);
                let m = Matrix::from_rows(Field::Rational, local.iter().map(|q| basis.iter().map(|e| monomial_value(e, q.coords())).collect()).collect()).unwrap();
                prop_assert!(m.rank() < 6);
            }
            let _ = plane;
        }
    }
}
