use std::fmt;

use crate::config::{agp_check, find_excluding_subspace, AgpThresholds, PointConfiguration};
use crate::error::{Error, Result};
use crate::form::HomogeneousForm;
use crate::linalg::Matrix;
use crate::point::ProjectivePoint;
use crate::scalar::{Field, Scalar};
use crate::subspace::{dot, LinearSubspace};

use super::{cone_over_form, separating_form_oracle};

const BUDGET: usize = 64;

/// Names a point handed to one level of the construction: `Target(i)` is the
/// i-th point to pass through, `Aux(k)` the k-th auxiliary point recorded in
/// the trace (padding points and pencil points).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointLabel {
    Target(usize),
    Aux(usize),
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Target(i) => write!(f, "p{}", i + 1),
            PointLabel::Aux(k) => write!(f, "a{}", k + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub ambient: usize,
    pub case: String,
    pub aux: Vec<ProjectivePoint>,
    pub padded: usize,
    /// Points each hyperplane factor was required to contain.
    pub factors: Vec<Vec<PointLabel>>,
    pub pencil: Vec<usize>,
    pub vertex: Option<ProjectivePoint>,
    pub inner: Option<Box<ConstructionTrace>>,
}

impl ConstructionTrace {
    fn new(ambient: usize) -> Self {
        ConstructionTrace {
            ambient,
            case: String::new(),
            aux: Vec::new(),
            padded: 0,
            factors: Vec::new(),
            pencil: Vec::new(),
            vertex: None,
            inner: None,
        }
    }

    fn push_aux(&mut self, p: ProjectivePoint) -> PointLabel {
        self.aux.push(p);
        PointLabel::Aux(self.aux.len() - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicCertificate {
    pub form: HomogeneousForm,
    pub sigma: PointConfiguration,
    pub excluded: ProjectivePoint,
    pub trace: ConstructionTrace,
}

impl CubicCertificate {
    /// Re-evaluates the form: zero on every point of `sigma`, nonzero at the
    /// excluded point.
    pub fn verify(&self) -> bool {
        self.form.degree() == 3
            && self.sigma.points().iter().all(|q| self.form.vanishes_at(q).unwrap_or(false))
            && !self.form.vanishes_at(&self.excluded).unwrap_or(true)
    }
}

/// Cubic through points of a base, avoiding a point of it, with its trace.
type InnerCubic = dyn Fn(&[ProjectivePoint], &ProjectivePoint) -> Result<(HomogeneousForm, Option<ConstructionTrace>)>;

/// An explicit cubic through `sigma` avoiding `p`, assembled from products of
/// hyperplanes and cones according to how many points of `sigma` share a
/// plane (in `P^3`) or a hyperplane (in `P^4`) with `p`.
pub fn build_separating_cubic(sigma: &PointConfiguration, p: &ProjectivePoint) -> Result<CubicCertificate> {
    if !sigma.is_empty() {
        if sigma.ambient_dim() != p.dim() {
            return Err(Error::DimensionMismatch {
                expected: sigma.ambient_dim(),
                found: p.dim(),
            });
        }
        sigma.field().check(p.field())?;
    }
    let (form, trace) = certify(sigma.points(), p)?;
    Ok(CubicCertificate {
        form,
        sigma: sigma.clone(),
        excluded: p.clone(),
        trace,
    })
}

#[derive(Clone)]
struct Item {
    label: PointLabel,
    point: ProjectivePoint,
}

fn no_certificate(case: &str) -> Error {
    Error::NoCertificate { case: case.to_string() }
}

fn independent(points: &[&ProjectivePoint]) -> bool {
    let rows = points.iter().map(|q| q.coords().to_vec()).collect();
    Matrix::from_rows(points[0].field(), rows).expect("consistent").rank() == points.len()
}

fn product(factors: &[HomogeneousForm]) -> HomogeneousForm {
    factors[1..].iter().fold(factors[0].clone(), |acc, f| &acc * f)
}

fn moment(field: Field, len: usize, t: usize) -> Vec<Scalar> {
    let t = field.int(t as i64);
    let mut out = vec![field.one()];
    for i in 1..len {
        out.push(&out[i - 1] * &t);
    }
    out
}

fn certify(targets: &[ProjectivePoint], p: &ProjectivePoint) -> Result<(HomogeneousForm, ConstructionTrace)> {
    let n = p.dim();
    let field = p.field();
    if !(2..=4).contains(&n) {
        return Err(Error::NotAdmissible(format!("ambient dimension {n} is not 2, 3 or 4")));
    }
    if targets.len() > 8 {
        return Err(Error::NotAdmissible(format!("{} points to pass through, at most 8", targets.len())));
    }
    if targets.contains(p) {
        return Err(Error::PointInSet);
    }
    let mut all = targets.to_vec();
    all.push(p.clone());
    let whole = PointConfiguration::new(all)?;
    if !agp_check(&whole, &AgpThresholds::default())?.passes() {
        return Err(Error::NotAdmissible("points with the excluded one are not in almost general position".into()));
    }

    let mut ctx = Ctx {
        p: p.clone(),
        trace: ConstructionTrace::new(n),
    };
    let mut items: Vec<Item> = targets
        .iter()
        .enumerate()
        .map(|(i, q)| Item {
            label: PointLabel::Target(i),
            point: q.clone(),
        })
        .collect();

    let form = if targets.is_empty() {
        ctx.trace.case = format!("P{n}/empty");
        let i = p.coords().iter().position(|c| !c.is_zero()).expect("nonzero point");
        HomogeneousForm::variable(field, n + 1, i).pow(3)
    } else if n == 2 {
        ctx.trace.case = "P2/plane".into();
        let sigma = PointConfiguration::new(targets.to_vec())?;
        separating_form_oracle(&sigma, p, 3)?.ok_or_else(|| no_certificate("P2/plane"))?
    } else if targets.len() <= 3 {
        ctx.trace.case = format!("P{n}/few");
        let mut factors = Vec::new();
        for it in &items {
            factors.push(ctx.factor(&[it])?);
        }
        while factors.len() < 3 {
            let last = factors[factors.len() - 1].clone();
            let labels = ctx.trace.factors[ctx.trace.factors.len() - 1].clone();
            ctx.trace.factors.push(labels);
            factors.push(last);
        }
        product(&factors)
    } else {
        ctx.pad(&mut items)?;
        if n == 3 {
            ctx.solid(&items)?
        } else {
            ctx.fourfold(&items)?
        }
    };

    let case = ctx.trace.case.clone();
    let vanish = targets.iter().all(|q| form.vanishes_at(q).unwrap_or(false));
    if form.degree() != 3 || !vanish || form.vanishes_at(p)? {
        return Err(no_certificate(&case));
    }
    Ok((form, ctx.trace))
}

struct Ctx {
    p: ProjectivePoint,
    trace: ConstructionTrace,
}

impl Ctx {
    fn n(&self) -> usize {
        self.p.dim()
    }

    fn field(&self) -> Field {
        self.p.field()
    }

    fn fail(&self) -> Error {
        no_certificate(&self.trace.case)
    }

    /// Moment-curve points are added until there are eight, skipping any that
    /// would break almost general position.
    fn pad(&mut self, items: &mut Vec<Item>) -> Result<()> {
        let n = self.n();
        let mut c = 1;
        while items.len() < 8 {
            if c > BUDGET {
                return Err(no_certificate(&format!("P{n}/padding")));
            }
            let cand = ProjectivePoint::new(moment(self.field(), n + 1, c))?;
            c += 1;
            if cand == self.p || items.iter().any(|it| it.point == cand) {
                continue;
            }
            let mut pts: Vec<ProjectivePoint> = items.iter().map(|it| it.point.clone()).collect();
            pts.push(cand.clone());
            pts.push(self.p.clone());
            if agp_check(&PointConfiguration::new(pts)?, &AgpThresholds::default())?.passes() {
                let label = self.trace.push_aux(cand.clone());
                self.trace.padded += 1;
                items.push(Item { label, point: cand });
            }
        }
        Ok(())
    }

    /// Linear form vanishing on `pts` and not at `p`, found by sweeping the
    /// pencil `sum t^i v_i` over a basis `v_i` of the forms through `pts`.
    fn hyperplane(&mut self, pts: &[&ProjectivePoint]) -> Option<HomogeneousForm> {
        let field = self.field();
        let width = self.n() + 1;
        let m = if pts.is_empty() {
            Matrix::zeros(field, 1, width)
        } else {
            Matrix::from_rows(field, pts.iter().map(|q| q.coords().to_vec()).collect()).ok()?
        };
        let basis = m.nullspace();
        if basis.is_empty() {
            return None;
        }
        for t in 0..=BUDGET {
            let weights = moment(field, basis.len(), t);
            let mut coeffs = vec![field.zero(); width];
            for (w, v) in weights.iter().zip(&basis) {
                for (c, x) in coeffs.iter_mut().zip(v) {
                    *c = &*c + &(w * x);
                }
            }
            if !dot(&coeffs, self.p.coords()).is_zero() {
                self.trace.pencil.push(t);
                return HomogeneousForm::linear(&coeffs).ok();
            }
        }
        None
    }

    fn factor(&mut self, items: &[&Item]) -> Result<HomogeneousForm> {
        let pts: Vec<&ProjectivePoint> = items.iter().map(|it| &it.point).collect();
        let h = self.hyperplane(&pts).ok_or_else(|| self.fail())?;
        self.trace.factors.push(items.iter().map(|it| it.label).collect());
        Ok(h)
    }

    fn avoids_p(&self, a: &ProjectivePoint, b: &ProjectivePoint) -> bool {
        independent(&[&self.p, a, b])
    }

    /// Largest number of items lying in a `k`-dimensional subspace spanned by
    /// `p` and `k` items, with the lexicographically first such member set.
    fn richest(&self, items: &[Item], k: usize) -> Result<(Vec<usize>, LinearSubspace)> {
        let mut best: Option<(Vec<usize>, LinearSubspace)> = None;
        for combo in subsets(items.len(), k) {
            let mut pts = vec![&self.p];
            pts.extend(combo.iter().map(|&i| &items[i].point));
            if !independent(&pts) {
                continue;
            }
            let owned: Vec<ProjectivePoint> = pts.into_iter().cloned().collect();
            let s = LinearSubspace::span(&owned)?;
            let mem: Vec<usize> = (0..items.len()).filter(|&i| s.contains(&items[i].point)).collect();
            let better = match &best {
                None => true,
                Some((b, _)) => mem.len() > b.len() || (mem.len() == b.len() && mem < *b),
            };
            if better {
                best = Some((mem, s));
            }
        }
        best.ok_or_else(|| self.fail())
    }

    fn chunked(&mut self, items: &[Item], size: usize) -> Result<HomogeneousForm> {
        let m = items.len();
        let mut factors = Vec::new();
        for k in 0..3 {
            let chunk: Vec<&Item> = (0..size).map(|j| &items[(k * size + j) % m]).collect();
            factors.push(self.factor(&chunk)?);
        }
        Ok(product(&factors))
    }

    /// Two disjoint pairs of `four` whose lines both avoid `p`.
    fn two_lines<'a>(&self, four: &[&'a Item]) -> Option<([&'a Item; 2], [&'a Item; 2])> {
        for (a, b, c, d) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
            if self.avoids_p(&four[a].point, &four[b].point) && self.avoids_p(&four[c].point, &four[d].point) {
                return Some(([four[a], four[b]], [four[c], four[d]]));
            }
        }
        None
    }

    fn four_inside(&mut self, inside: &[&Item], outside: &[&Item]) -> Result<HomogeneousForm> {
        let (l1, l2) = self.two_lines(inside).ok_or_else(|| self.fail())?;
        let (u, v) = subsets(outside.len(), 2)
            .into_iter()
            .map(|c| (c[0], c[1]))
            .find(|&(i, j)| self.avoids_p(&outside[i].point, &outside[j].point))
            .ok_or_else(|| self.fail())?;
        let rest: Vec<&Item> = (0..outside.len()).filter(|&i| i != u && i != v).map(|i| outside[i]).collect();
        let f1 = self.factor(&[l1[0], l1[1], rest[0]])?;
        let f2 = self.factor(&[l2[0], l2[1], rest[1]])?;
        let f3 = self.factor(&[outside[u], outside[v]])?;
        Ok(product(&[f1, f2, f3]))
    }

    fn five_inside(&mut self, inside: &[&Item], outside: &[&Item]) -> Result<HomogeneousForm> {
        for e in 0..inside.len() {
            let four: Vec<&Item> = (0..inside.len()).filter(|&i| i != e).map(|i| inside[i]).collect();
            if let Some((l1, l2)) = self.two_lines(&four) {
                let f1 = self.factor(&[l1[0], l1[1], outside[1]])?;
                let f2 = self.factor(&[l2[0], l2[1], outside[2]])?;
                let f3 = self.factor(&[inside[e], outside[0]])?;
                return Ok(product(&[f1, f2, f3]));
            }
        }
        Err(self.fail())
    }

    /// Cone over a cubic on `base` through the inside points and two pencil
    /// points `q`, `q'` chosen on a line through the trace of `<u,v>`, with
    /// vertex where `<u,q>` meets `<v,q'>`.
    fn six_inside(
        &mut self,
        inside: &[&Item],
        u: &Item,
        v: &Item,
        base: &LinearSubspace,
        inner: &InnerCubic,
    ) -> Result<HomogeneousForm> {
        let field = self.field();
        let ell = &base.equations()[0];
        let x = ProjectivePoint::new(
            u.point
                .coords()
                .iter()
                .zip(v.point.coords())
                .map(|(a, b)| &(&dot(ell, v.point.coords()) * a) - &(&dot(ell, u.point.coords()) * b))
                .collect(),
        )?;
        let p_local = base.coordinates_of(&self.p).ok_or_else(|| self.fail())?;
        let mut local: Vec<ProjectivePoint> = inside
            .iter()
            .map(|it| base.coordinates_of(&it.point).expect("inside base"))
            .collect();
        for t in 0..=BUDGET {
            let y = base.point_at(&moment(field, base.dim() + 1, t))?;
            if y == x {
                continue;
            }
            let Some(y2) = x.combine(&field.one(), &y, &field.one()) else {
                continue;
            };
            if y2 == x || y2 == y || y == self.p || y2 == self.p {
                continue;
            }
            let Some(o) = meet(&u.point, &y, &v.point, &y2) else {
                continue;
            };
            if base.contains(&o) {
                continue;
            }
            local.truncate(inside.len());
            local.push(base.coordinates_of(&y).expect("on base"));
            local.push(base.coordinates_of(&y2).expect("on base"));
            let Ok((s, sub)) = inner(&local, &p_local) else {
                continue;
            };
            let cone = cone_over_form(&s, base, &o)?;
            let ok = inside.iter().chain([&u, &v]).all(|it| cone.vanishes_at(&it.point).unwrap_or(false))
                && !cone.vanishes_at(&self.p)?;
            if !ok {
                continue;
            }
            let mut labels: Vec<PointLabel> = inside.iter().map(|it| it.label).collect();
            labels.push(self.trace.push_aux(y));
            labels.push(self.trace.push_aux(y2));
            self.trace.factors.push(labels);
            self.trace.pencil.push(t);
            self.trace.vertex = Some(o);
            self.trace.inner = sub.map(Box::new);
            return Ok(cone);
        }
        Err(self.fail())
    }

    fn cone_from(
        &mut self,
        inside: &[&Item],
        vertex: ProjectivePoint,
        base: &LinearSubspace,
        inner: &InnerCubic,
    ) -> Result<HomogeneousForm> {
        let p_local = base.coordinates_of(&self.p).ok_or_else(|| self.fail())?;
        let local: Vec<ProjectivePoint> = inside
            .iter()
            .map(|it| base.coordinates_of(&it.point).expect("inside base"))
            .collect();
        let (s, sub) = inner(&local, &p_local).map_err(|_| self.fail())?;
        let cone = cone_over_form(&s, base, &vertex)?;
        self.trace.factors.push(inside.iter().map(|it| it.label).collect());
        self.trace.vertex = Some(vertex);
        self.trace.inner = sub.map(Box::new);
        Ok(cone)
    }

    fn outside_vertex(&self, base: &LinearSubspace) -> ProjectivePoint {
        (0..=self.n())
            .map(|i| ProjectivePoint::coordinate(self.field(), self.n(), i))
            .find(|e| !base.contains(e))
            .expect("proper subspace")
    }

    /// Eight points in `P^3`.
    fn solid(&mut self, items: &[Item]) -> Result<HomogeneousForm> {
        self.trace.case = "P3".into();
        let (mem, plane) = self.richest(items, 2)?;
        let r = mem.len();
        self.trace.case = format!("P3/r={r}");
        let inside: Vec<&Item> = mem.iter().map(|&i| &items[i]).collect();
        let outside: Vec<&Item> = (0..items.len()).filter(|i| !mem.contains(i)).map(|i| &items[i]).collect();
        let plane_cubic = |pts: &[ProjectivePoint], p: &ProjectivePoint| -> Result<(HomogeneousForm, Option<ConstructionTrace>)> {
            let cfg = PointConfiguration::new(pts.to_vec())?;
            let f = separating_form_oracle(&cfg, p, 3)?.ok_or_else(|| no_certificate("P2/plane"))?;
            Ok((f, None))
        };
        match r {
            2 => self.chunked(items, 3),
            3 => {
                let delta = PointConfiguration::new(outside.iter().map(|it| it.point.clone()).collect())?;
                let h = find_excluding_subspace(&delta, &self.p, 2).map_err(|_| self.fail())?;
                let hform = HomogeneousForm::linear(&h.equations()[0])?;
                self.trace
                    .factors
                    .push(items.iter().filter(|it| h.contains(&it.point)).map(|it| it.label).collect());
                let (a, b, c) = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
                    .into_iter()
                    .find(|&(a, b, _)| self.avoids_p(&inside[a].point, &inside[b].point))
                    .ok_or_else(|| self.fail())?;
                let rest: Vec<&Item> = outside.iter().copied().filter(|it| !h.contains(&it.point)).collect();
                if rest.len() > 2 {
                    return Err(self.fail());
                }
                let mut second = vec![inside[a], inside[b]];
                second.extend(rest.first().copied());
                let mut third = vec![inside[c]];
                third.extend(rest.get(1).copied());
                let f2 = self.factor(&second)?;
                let f3 = self.factor(&third)?;
                Ok(product(&[hform, f2, f3]))
            }
            4 => self.four_inside(&inside, &outside),
            5 => self.five_inside(&inside, &outside),
            6 => self.six_inside(&inside, outside[0], outside[1], &plane, &plane_cubic),
            7 => self.cone_from(&inside, outside[0].point.clone(), &plane, &plane_cubic),
            _ => {
                let o = self.outside_vertex(&plane);
                self.cone_from(&inside, o, &plane, &plane_cubic)
            }
        }
    }

    /// Eight points in `P^4`.
    fn fourfold(&mut self, items: &[Item]) -> Result<HomogeneousForm> {
        self.trace.case = "P4".into();
        let (mem, hyper) = self.richest(items, 3)?;
        let r = mem.len();
        self.trace.case = format!("P4/r={r}");
        let inside: Vec<&Item> = mem.iter().map(|&i| &items[i]).collect();
        let outside: Vec<&Item> = (0..items.len()).filter(|i| !mem.contains(i)).map(|i| &items[i]).collect();
        let surface = |pts: &[ProjectivePoint], p: &ProjectivePoint| -> Result<(HomogeneousForm, Option<ConstructionTrace>)> {
            let (f, t) = certify(pts, p)?;
            Ok((f, Some(t)))
        };
        match r {
            3 => self.chunked(items, 4),
            4 => self.four_inside(&inside, &outside),
            5 => self.five_inside(&inside, &outside),
            6 => self.six_inside(&inside, outside[0], outside[1], &hyper, &surface),
            7 => self.cone_from(&inside, outside[0].point.clone(), &hyper, &surface),
            _ => {
                let o = self.outside_vertex(&hyper);
                self.cone_from(&inside, o, &hyper, &surface)
            }
        }
    }
}

/// Common point of the lines `<a,b>` and `<c,d>`, assumed coplanar.
fn meet(a: &ProjectivePoint, b: &ProjectivePoint, c: &ProjectivePoint, d: &ProjectivePoint) -> Option<ProjectivePoint> {
    let field = a.field();
    let cols = [a, b, c, d];
    let rows: Vec<Vec<Scalar>> = (0..=a.dim())
        .map(|i| cols.iter().map(|q| q.coords()[i].clone()).collect())
        .collect();
    let ns = Matrix::from_rows(field, rows).ok()?.nullspace();
    ns.iter().find_map(|v| a.combine(&v[0], b, &v[1]))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_ints(Field::Rational, c).unwrap()
    }

    fn cert(sigma: &[&[i64]], p: &[i64]) -> Result<CubicCertificate> {
        let s = PointConfiguration::new(sigma.iter().map(|c| pt(c)).collect()).unwrap();
        build_separating_cubic(&s, &pt(p))
    }

    #[test]
    fn single_point_gives_cube() {
        let c = cert(&[&[1, 0, 0, 0, 0]], &[0, 1, 0, 0, 0]).unwrap();
        assert!(c.verify());
        assert_eq!(c.trace.factors.len(), 3);
        let h = &c.trace.factors[0];
        assert!(c.trace.factors.iter().all(|f| f == h));
    }

    #[test]
    fn empty_sigma() {
        let s = PointConfiguration::with_ambient(Field::Rational, 4, vec![]).unwrap();
        let c = build_separating_cubic(&s, &pt(&[0, 0, 3, 1, 0])).unwrap();
        assert!(c.verify());
    }

    #[test]
    fn two_hyperplanes_of_four() {
        // four points in {w=0}, four in {t=0}, p off both groups' lines
        let sigma: [&[i64]; 8] = [
            &[1, 0, 0, 1, 0],
            &[0, 1, 0, 2, 0],
            &[0, 0, 1, 3, 0],
            &[1, 1, 1, 5, 0],
            &[1, 0, 0, 0, 1],
            &[0, 1, 0, 0, 2],
            &[0, 0, 1, 0, 3],
            &[1, -1, 2, 0, 7],
        ];
        let c = cert(&sigma, &[1, 2, 3, 1, 1]).unwrap();
        assert!(c.verify());
        assert!(c.trace.case.starts_with("P4/r="));
    }

    #[test]
    fn seven_in_hyperplane_cone() {
        let mut sigma: Vec<Vec<i64>> = (1..=7).map(|s: i64| vec![1, s, s * s, s * s * s, 0]).collect();
        sigma.push(vec![0, 0, 0, 0, 1]);
        let rows: Vec<&[i64]> = sigma.iter().map(|v| v.as_slice()).collect();
        let c = cert(&rows, &[1, 9, 81, 729, 0]).unwrap();
        assert!(c.verify());
        assert_eq!(c.trace.case, "P4/r=7");
        assert_eq!(c.trace.vertex, Some(pt(&[0, 0, 0, 0, 1])));
    }

    #[test]
    fn grid_not_admissible() {
        let mut grid = Vec::new();
        for a in [0, 1, -1] {
            for b in [0, 1, -1] {
                grid.push(pt(&[a, b, 1]));
            }
        }
        let p = grid.pop().unwrap();
        let s = PointConfiguration::new(grid).unwrap();
        assert!(matches!(build_separating_cubic(&s, &p), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn subsets_enumerate() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(8, 3).len(), 56);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }
}
