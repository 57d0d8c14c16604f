//! Quartic threefolds from the plane, quadric, del Pezzo and Burkhardt
//! constructions, their designed nodes, and singular point classification.

mod scan;

pub use scan::{scan_singular, ScanResult};

use std::fmt;
use std::str::FromStr;

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::form::HomogeneousForm;
use crate::linalg::Matrix;
use crate::point::ProjectivePoint;
use crate::scalar::{Field, Scalar};
use crate::subspace::LinearSubspace;

/// Node count of the Burkhardt quartic, the most a nodal quartic threefold
/// can have.
pub const MAX_QUARTIC_NODES: usize = 45;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Plane,
    Quadric,
    DelPezzo,
    Burkhardt,
    Custom,
}

impl FamilyTag {
    /// Constituent names with their required degrees, in assembly order.
    pub fn constituents(self) -> &'static [(&'static str, u32)] {
        match self {
            FamilyTag::Plane => &[("h3", 3), ("g3", 3)],
            FamilyTag::Quadric => &[("a2", 2), ("h2", 2), ("b3", 3), ("g1", 1)],
            FamilyTag::DelPezzo => &[("a2", 2), ("h2", 2), ("b2", 2), ("g2", 2)],
            FamilyTag::Burkhardt | FamilyTag::Custom => &[],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Plane => "plane",
            FamilyTag::Quadric => "quadric",
            FamilyTag::DelPezzo => "delpezzo",
            FamilyTag::Burkhardt => "burkhardt",
            FamilyTag::Custom => "custom",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plane" => Ok(FamilyTag::Plane),
            "quadric" => Ok(FamilyTag::Quadric),
            "delpezzo" => Ok(FamilyTag::DelPezzo),
            "burkhardt" => Ok(FamilyTag::Burkhardt),
            "custom" => Ok(FamilyTag::Custom),
            other => Err(Error::Constituent(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constituent {
    pub name: String,
    pub form: HomogeneousForm,
    /// Linear forms whose product agrees with `form` on the family's base
    /// locus, when the constituent splits there.
    pub factors: Option<Vec<HomogeneousForm>>,
}

impl Constituent {
    pub fn new(name: &str, form: HomogeneousForm) -> Self {
        Constituent {
            name: name.to_string(),
            form,
            factors: None,
        }
    }

    pub fn with_factors(mut self, factors: Vec<HomogeneousForm>) -> Self {
        self.factors = Some(factors);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticSpec {
    pub tag: FamilyTag,
    pub form: HomogeneousForm,
    pub constituents: Vec<Constituent>,
}

fn var(field: Field, i: usize) -> HomogeneousForm {
    HomogeneousForm::variable(field, 5, i)
}

pub fn burkhardt_form() -> HomogeneousForm {
    let f = Field::Rational;
    let (x, y, z, t, w) = (var(f, 0), var(f, 1), var(f, 2), var(f, 3), var(f, 4));
    let cubes = &(&(&x.pow(3) + &y.pow(3)) + &z.pow(3)) + &t.pow(3);
    let xyzt = &(&(&x * &y) * &z) * &t;
    &(&w.pow(4) - &(&w * &cubes)) + &xyzt.scale(&f.int(3))
}

impl QuarticSpec {
    pub fn burkhardt() -> Self {
        QuarticSpec {
            tag: FamilyTag::Burkhardt,
            form: burkhardt_form(),
            constituents: Vec::new(),
        }
    }

    pub fn custom(form: HomogeneousForm) -> Result<Self> {
        if form.num_vars() != 5 {
            return Err(Error::DimensionMismatch {
                expected: 5,
                found: form.num_vars(),
            });
        }
        if form.degree() != 4 || form.is_zero() {
            return Err(Error::Constituent(format!(
                "a quartic is needed, got degree {}",
                form.degree()
            )));
        }
        Ok(QuarticSpec {
            tag: FamilyTag::Custom,
            form,
            constituents: Vec::new(),
        })
    }

    pub fn constituent(&self, name: &str) -> Option<&Constituent> {
        self.constituents.iter().find(|c| c.name == name)
    }

    pub fn field(&self) -> Field {
        self.form.field()
    }

    /// Linear forms cutting out the locus on which factor hints are checked
    /// and nodes are solved for.
    fn base_equations(&self) -> Vec<HomogeneousForm> {
        let f = self.field();
        match self.tag {
            FamilyTag::Plane => vec![var(f, 0), var(f, 1)],
            FamilyTag::Quadric => vec![self.constituent("g1").expect("assembled").form.clone()],
            _ => Vec::new(),
        }
    }

    /// Constituents whose common zeros with the base locus are the nodes.
    fn node_system(&self) -> Vec<&Constituent> {
        let names: &[&str] = match self.tag {
            FamilyTag::Plane => &["h3", "g3"],
            FamilyTag::Quadric => &["h2", "a2", "b3"],
            FamilyTag::DelPezzo => &["h2", "g2", "a2", "b2"],
            _ => &[],
        };
        names.iter().map(|n| self.constituent(n).expect("assembled")).collect()
    }

    fn base_locus(&self) -> Result<Option<LinearSubspace>> {
        let eqs: Vec<Vec<Scalar>> = self.base_equations().iter().map(linear_coefficients).collect();
        LinearSubspace::from_equations(self.field(), 4, &eqs)
    }
}

fn linear_coefficients(l: &HomogeneousForm) -> Vec<Scalar> {
    (0..l.num_vars())
        .map(|i| {
            let mut e = vec![0; l.num_vars()];
            e[i] = 1;
            l.coefficient(&e)
        })
        .collect()
}

/// Assemble `F` from named constituents according to the family equation.
pub fn build_family(tag: FamilyTag, constituents: Vec<Constituent>) -> Result<QuarticSpec> {
    match tag {
        FamilyTag::Burkhardt => {
            if !constituents.is_empty() {
                return Err(Error::Constituent("burkhardt takes no constituents".into()));
            }
            return Ok(QuarticSpec::burkhardt());
        }
        FamilyTag::Custom => {
            return Err(Error::Constituent("custom quartics are given by their equation".into()));
        }
        _ => {}
    }
    let required = tag.constituents();
    let mut ordered: Vec<Constituent> = Vec::new();
    for (name, degree) in required {
        let c = constituents
            .iter()
            .find(|c| c.name == *name)
            .ok_or_else(|| Error::Constituent(format!("{tag} family needs `{name}`")))?;
        if c.form.num_vars() != 5 {
            return Err(Error::Constituent(format!(
                "`{name}` has {} variables, expected 5",
                c.form.num_vars()
            )));
        }
        if c.form.degree() != *degree || c.form.is_zero() {
            return Err(Error::Constituent(format!(
                "`{name}` must be a nonzero form of degree {degree}, got degree {}",
                c.form.degree()
            )));
        }
        ordered.push(c.clone());
    }
    if let Some(extra) = constituents.iter().find(|c| !required.iter().any(|(n, _)| *n == c.name)) {
        return Err(Error::Constituent(format!("{tag} family has no constituent `{}`", extra.name)));
    }
    let field = ordered[0].form.field();
    for c in &ordered {
        field.check(c.form.field())?;
    }
    let get = |n: &str| &ordered.iter().find(|c| c.name == n).expect("present").form;
    let f = match tag {
        FamilyTag::Plane => &(&var(field, 0) * get("h3")) + &(&var(field, 1) * get("g3")),
        FamilyTag::Quadric => &(get("a2") * get("h2")) - &(get("b3") * get("g1")),
        FamilyTag::DelPezzo => &(get("a2") * get("h2")) + &(get("b2") * get("g2")),
        _ => unreachable!(),
    };
    if f.is_zero() {
        return Err(Error::Constituent("constituents give the zero quartic".into()));
    }
    let spec = QuarticSpec {
        tag,
        form: f,
        constituents: ordered,
    };
    check_factor_hints(&spec)?;
    Ok(spec)
}

fn check_factor_hints(spec: &QuarticSpec) -> Result<()> {
    let base = spec.base_locus()?;
    for c in &spec.constituents {
        let Some(factors) = &c.factors else {
            continue;
        };
        if factors.iter().any(|l| l.degree() != 1 || l.num_vars() != 5 || l.is_zero()) {
            return Err(Error::Constituent(format!("factors of `{}` must be linear forms", c.name)));
        }
        if factors.len() as u32 != c.form.degree() {
            return Err(Error::Constituent(format!(
                "`{}` has degree {} but {} factors",
                c.name,
                c.form.degree(),
                factors.len()
            )));
        }
        let prod = factors[1..].iter().fold(factors[0].clone(), |acc, l| &acc * l);
        let agrees = match &base {
            Some(b) => proportional(&b.restrict(&prod)?, &b.restrict(&c.form)?),
            None => false,
        };
        if !agrees {
            return Err(Error::Constituent(format!(
                "factors of `{}` do not multiply to it on the base locus",
                c.name
            )));
        }
    }
    Ok(())
}

fn proportional(a: &HomogeneousForm, b: &HomogeneousForm) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let (e, ca) = a.terms().next().expect("nonzero");
    let cb = b.coefficient(e);
    if cb.is_zero() {
        return false;
    }
    a.scale(&cb) == b.scale(ca)
}

/// The common zeros of the family's node system, solved by running through
/// one linear factor of each constituent at a time.
pub fn designed_nodes(spec: &QuarticSpec) -> Result<PointConfiguration> {
    match spec.tag {
        FamilyTag::Burkhardt => {
            return Err(Error::NodesNotRational("burkhardt nodes need cube roots of unity".into()))
        }
        FamilyTag::Custom => return Err(Error::NodesNotRational("custom quartic has no node system".into())),
        _ => {}
    }
    let field = spec.field();
    let system = spec.node_system();
    let mut choices: Vec<&[HomogeneousForm]> = Vec::new();
    for c in &system {
        let f = c
            .factors
            .as_deref()
            .ok_or_else(|| Error::NodesNotRational(format!("`{}` is not given as a product of linear forms", c.name)))?;
        choices.push(f);
    }
    let base: Vec<Vec<Scalar>> = spec.base_equations().iter().map(linear_coefficients).collect();
    let mut found: Vec<ProjectivePoint> = Vec::new();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let mut rows = base.clone();
        for (c, &k) in choices.iter().zip(&pick) {
            rows.push(linear_coefficients(&c[k]));
        }
        let ns = Matrix::from_rows(field, rows)?.nullspace();
        match ns.len() {
            0 => {}
            1 => {
                let q = ProjectivePoint::new(ns[0].clone())?;
                if !found.contains(&q) {
                    found.push(q);
                }
            }
            d => {
                return Err(Error::NodesNotRational(format!(
                    "node system has a solution set of dimension {}",
                    d - 1
                )))
            }
        }
        // odometer over the factor choices
        let mut i = choices.len();
        loop {
            if i == 0 {
                found.sort_by_key(|q| q.to_string());
                for q in &found {
                    if !spec.form.vanishes_at(q)? || spec.form.gradient().iter().any(|g| !g.vanishes_at(q).unwrap_or(false)) {
                        return Err(Error::NodesNotRational(format!("{q} does not solve the node system")));
                    }
                }
                return PointConfiguration::with_ambient(field, 4, found);
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Singularity {
    Smooth,
    Node,
    Degenerate(usize),
}

impl fmt::Display for Singularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Singularity::Smooth => f.write_str("smooth"),
            Singularity::Node => f.write_str("node"),
            Singularity::Degenerate(r) => write!(f, "degenerate({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeReport {
    pub point: ProjectivePoint,
    pub on_hypersurface: bool,
    pub gradient_vanishes: bool,
    pub hessian_rank: usize,
    pub class: Singularity,
}

/// Smooth, node (Hessian rank 4) or degenerate singular point of `F = 0`.
pub fn classify_singularity(spec: &QuarticSpec, p: &ProjectivePoint) -> Result<NodeReport> {
    classify_form(&spec.form, p)
}

pub(crate) fn classify_form(form: &HomogeneousForm, p: &ProjectivePoint) -> Result<NodeReport> {
    let field = p.field();
    if matches!(field, Field::Prime(q) if q < 5) {
        return Err(Error::InvalidPrime(field.characteristic()));
    }
    let f = if form.field() == field { form.clone() } else { form.reduce(field)? };
    if !f.vanishes_at(p)? {
        return Err(Error::NotOnHypersurface);
    }
    let grad = f.gradient();
    let gradient_vanishes = grad.iter().all(|g| g.vanishes_at(p).unwrap_or(false));
    let rows: Vec<Vec<Scalar>> = grad
        .iter()
        .map(|g| g.gradient().iter().map(|h| h.evaluate_coords(p.coords())).collect())
        .collect();
    let hessian_rank = Matrix::from_rows(field, rows)?.rank();
    let class = if !gradient_vanishes {
        Singularity::Smooth
    } else if hessian_rank == 4 {
        Singularity::Node
    } else {
        Singularity::Degenerate(hessian_rank)
    };
    Ok(NodeReport {
        point: p.clone(),
        on_hypersurface: true,
        gradient_vanishes,
        hessian_rank,
        class,
    })
}

/// Instances whose node systems split into linear factors over `Q`.
pub mod designed {
    use super::*;

    fn v(i: usize) -> HomogeneousForm {
        var(Field::Rational, i)
    }

    fn lin(c: &[i64]) -> HomogeneousForm {
        let coeffs: Vec<Scalar> = c.iter().map(|&k| Field::Rational.int(k)).collect();
        HomogeneousForm::linear(&coeffs).expect("five coefficients")
    }

    fn prod(ls: &[HomogeneousForm]) -> HomogeneousForm {
        ls[1..].iter().fold(ls[0].clone(), |acc, l| &acc * l)
    }

    /// `x h3 + y g3` with `h3`, `g3` splitting into three lines each on
    /// `x = y = 0`: nine nodes `(0:0:a:b:1)`, `a, b` in `{0, 1, -1}`.
    pub fn plane() -> QuarticSpec {
        let hz = vec![lin(&[0, 0, 1, 0, 0]), lin(&[0, 0, 1, 0, -1]), lin(&[0, 0, 1, 0, 1])];
        let gt = vec![lin(&[0, 0, 0, 1, 0]), lin(&[0, 0, 0, 1, -1]), lin(&[0, 0, 0, 1, 1])];
        let h3 = &(&prod(&hz) + &v(0).pow(3)) + &(&(&v(1) * &v(3)) * &v(4));
        let g3 = &(&prod(&gt) + &v(1).pow(3)) + &(&(&v(0) * &v(2)) * &v(4));
        build_family(
            FamilyTag::Plane,
            vec![
                Constituent::new("h3", h3).with_factors(hz),
                Constituent::new("g3", g3).with_factors(gt),
            ],
        )
        .expect("designed plane instance")
    }

    /// `a2 h2 - b3 g1` with `g1 = w`, `h2 = x^2 - t^2`, `a2 = y^2 - t^2`,
    /// `b3 = z(z - t)(z + t)`: twelve solutions `(±1:±1:c:1:0)`, `c` in
    /// `{0, 1, -1}`.
    pub fn quadric() -> QuarticSpec {
        let h = vec![lin(&[1, 0, 0, -1, 0]), lin(&[1, 0, 0, 1, 0])];
        let a = vec![lin(&[0, 1, 0, -1, 0]), lin(&[0, 1, 0, 1, 0])];
        let b = vec![lin(&[0, 0, 1, 0, 0]), lin(&[0, 0, 1, -1, 0]), lin(&[0, 0, 1, 1, 0])];
        build_family(
            FamilyTag::Quadric,
            vec![
                Constituent::new("g1", v(4)),
                Constituent::new("h2", prod(&h)).with_factors(h),
                Constituent::new("a2", prod(&a)).with_factors(a),
                Constituent::new("b3", prod(&b)).with_factors(b),
            ],
        )
        .expect("designed quadric instance")
    }

    /// `a2 h2 + b2 g2` with `h2 = x^2 - w^2`, `g2 = y^2 - w^2`,
    /// `a2 = z^2 - w^2` and `b2 = t^2 - s^2 w^2`: sixteen nodes
    /// `(±1:±1:±1:±s:1)`.
    pub fn del_pezzo(s: i64) -> QuarticSpec {
        let pair = |i: usize, k: i64| {
            let mut minus = [0; 5];
            let mut plus = [0; 5];
            minus[i] = 1;
            plus[i] = 1;
            minus[4] = -k;
            plus[4] = k;
            vec![lin(&minus), lin(&plus)]
        };
        let (h, g, a, b) = (pair(0, 1), pair(1, 1), pair(2, 1), pair(3, s));
        build_family(
            FamilyTag::DelPezzo,
            vec![
                Constituent::new("a2", prod(&a)).with_factors(a),
                Constituent::new("h2", prod(&h)).with_factors(h),
                Constituent::new("b2", prod(&b)).with_factors(b),
                Constituent::new("g2", prod(&g)).with_factors(g),
            ],
        )
        .expect("designed del Pezzo instance")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_ints(Field::Rational, c).unwrap()
    }

    fn v(i: usize) -> HomogeneousForm {
        var(Field::Rational, i)
    }

    #[test]
    fn burkhardt_equation() {
        let b = QuarticSpec::burkhardt();
        assert_eq!(b.form.coefficient(&[1, 1, 1, 1, 0]), Field::Rational.int(3));
        assert_eq!(b.form.coefficient(&[0, 0, 0, 0, 4]), Field::Rational.int(1));
        assert_eq!(b.form.coefficient(&[3, 0, 0, 0, 1]), Field::Rational.int(-1));
        assert_eq!(b.form.num_terms(), 6);
        assert!(b.form.vanishes_at(&pt(&[1, 1, 1, 1, 1])).unwrap());
        assert!(b.form.satisfies_euler_identity());
    }

    #[test]
    fn plane_assembly() {
        let (z, t, w) = (v(2), v(3), v(4));
        let h3 = &(&z * &(&z - &w)) * &(&z + &w);
        let g3 = &(&t * &(&t - &w)) * &(&t + &w);
        let spec = build_family(
            FamilyTag::Plane,
            vec![Constituent::new("h3", h3.clone()), Constituent::new("g3", g3.clone())],
        )
        .unwrap();
        assert_eq!(spec.form, &(&v(0) * &h3) + &(&v(1) * &g3));
        assert!(spec.form.satisfies_euler_identity());
    }

    #[test]
    fn wrong_degree_rejected() {
        let r = build_family(
            FamilyTag::Plane,
            vec![Constituent::new("h3", v(0).pow(2)), Constituent::new("g3", v(1).pow(3))],
        );
        assert!(matches!(r, Err(Error::Constituent(_))));
        let missing = build_family(FamilyTag::Quadric, vec![Constituent::new("g1", v(4))]);
        assert!(matches!(missing, Err(Error::Constituent(_))));
    }

    #[test]
    fn bad_factor_hint_rejected() {
        let r = build_family(
            FamilyTag::Plane,
            vec![
                Constituent::new("h3", v(2).pow(3)).with_factors(vec![v(2), v(2), v(3)]),
                Constituent::new("g3", v(3).pow(3)),
            ],
        );
        assert!(matches!(r, Err(Error::Constituent(_))));
    }

    #[test]
    fn designed_plane_nodes() {
        let spec = designed::plane();
        let nodes = designed_nodes(&spec).unwrap();
        assert_eq!(nodes.len(), 9);
        for a in [0, 1, -1] {
            for b in [0, 1, -1] {
                assert!(nodes.contains(&pt(&[0, 0, a, b, 1])));
            }
        }
        for q in nodes.points() {
            assert_eq!(classify_singularity(&spec, q).unwrap().class, Singularity::Node);
        }
        assert!(spec.form.satisfies_euler_identity());
    }

    #[test]
    fn designed_del_pezzo_nodes() {
        for s in [1, 2] {
            let spec = designed::del_pezzo(s);
            let nodes = designed_nodes(&spec).unwrap();
            assert_eq!(nodes.len(), 16);
            assert!(nodes.contains(&pt(&[1, -1, 1, s, 1])));
            for q in nodes.points() {
                assert_eq!(classify_singularity(&spec, q).unwrap().class, Singularity::Node);
            }
        }
    }

    #[test]
    fn designed_quadric_nodes() {
        let spec = designed::quadric();
        let nodes = designed_nodes(&spec).unwrap();
        assert_eq!(nodes.len(), 12);
        for q in nodes.points() {
            assert!(classify_singularity(&spec, q).unwrap().gradient_vanishes);
        }
    }

    #[test]
    fn burkhardt_has_no_rational_node_system() {
        assert!(matches!(
            designed_nodes(&QuarticSpec::burkhardt()),
            Err(Error::NodesNotRational(_))
        ));
        let unsplit = build_family(
            FamilyTag::Plane,
            vec![Constituent::new("h3", v(2).pow(3)), Constituent::new("g3", v(3).pow(3))],
        )
        .unwrap();
        assert!(matches!(designed_nodes(&unsplit), Err(Error::NodesNotRational(_))));
    }

    #[test]
    fn positive_dimensional_system_rejected() {
        // h3 and g3 share the factor z on the plane
        let zf = vec![v(2), &v(2) - &v(4), &v(2) + &v(4)];
        let zt = vec![v(2), &v(3) - &v(4), &v(3) + &v(4)];
        let h3 = designed_prod(&zf);
        let g3 = designed_prod(&zt);
        let spec = build_family(
            FamilyTag::Plane,
            vec![
                Constituent::new("h3", h3).with_factors(zf),
                Constituent::new("g3", g3).with_factors(zt),
            ],
        )
        .unwrap();
        assert!(matches!(designed_nodes(&spec), Err(Error::NodesNotRational(_))));
    }

    fn designed_prod(ls: &[HomogeneousForm]) -> HomogeneousForm {
        ls[1..].iter().fold(ls[0].clone(), |acc, l| &acc * l)
    }

    #[test]
    fn classification_examples() {
        let b = QuarticSpec::burkhardt();
        let r = classify_singularity(&b, &pt(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!((r.class, r.hessian_rank), (Singularity::Node, 4));

        let (x, y, z, t, w) = (v(0), v(1), v(2), v(3), v(4));
        let f = &(&(&(&x.pow(3) * &w) + &y.pow(4)) + &z.pow(4)) + &t.pow(4);
        let s = QuarticSpec::custom(f).unwrap();
        let r = classify_singularity(&s, &pt(&[1, 0, 0, 0, 0])).unwrap();
        assert_eq!(r.class, Singularity::Smooth);

        let g = &(&(&(&x.pow(2) * &w.pow(2)) + &(&y.pow(2) * &w.pow(2))) + &z.pow(4)) + &t.pow(4);
        let s = QuarticSpec::custom(g).unwrap();
        let r = classify_singularity(&s, &pt(&[0, 0, 0, 0, 1])).unwrap();
        assert_eq!(r.class, Singularity::Degenerate(2));

        assert_eq!(
            classify_singularity(&b, &pt(&[0, 0, 0, 0, 1])),
            Err(Error::NotOnHypersurface)
        );
    }
}
