//! Linear conditions imposed by points on forms of fixed degree, and explicit
//! separating cubics.

mod separator;

pub use separator::{build_separating_cubic, ConstructionTrace, CubicCertificate, PointLabel};

use rayon::prelude::*;

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::form::{monomial_basis, monomial_value, HomogeneousForm};
use crate::linalg::Matrix;
use crate::point::ProjectivePoint;
use crate::scalar::Scalar;
use crate::subspace::LinearSubspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectReport {
    pub points: usize,
    pub degree: u32,
    pub ambient: usize,
    pub rank: usize,
    pub defect: usize,
    /// `separable[i]` holds when some form of the degree vanishes on every
    /// other point but not on point `i`.
    pub separable: Vec<bool>,
}

impl DefectReport {
    pub fn independent(&self) -> bool {
        self.defect == 0
    }
}

/// Rows are points, columns the monomials of `degree` in graded-lex order.
pub fn evaluation_matrix(points: &[ProjectivePoint], num_vars: usize, degree: u32) -> Result<Matrix> {
    let basis = monomial_basis(num_vars, degree);
    let field = points.first().ok_or(Error::ZeroPoint)?.field();
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| basis.iter().map(|e| monomial_value(e, p.coords())).collect())
        .collect();
    Matrix::from_rows(field, rows)
}

pub fn conditions_defect(cfg: &PointConfiguration, degree: u32) -> Result<DefectReport> {
    if degree == 0 {
        return Err(Error::OutOfRange("degree must be at least 1".into()));
    }
    if cfg.is_empty() {
        return Err(Error::OutOfRange("empty configuration".into()));
    }
    let n = cfg.ambient_dim();
    let m = evaluation_matrix(cfg.points(), n + 1, degree)?;
    let rank = m.rank();
    let separable: Vec<bool> = (0..cfg.len())
        .into_par_iter()
        .map(|i| m.without_row(i).rank() + 1 == rank)
        .collect();
    Ok(DefectReport {
        points: cfg.len(),
        degree,
        ambient: n,
        rank,
        defect: cfg.len() - rank,
        separable,
    })
}

/// Some form of the given degree vanishing on `sigma` but not at `p`, or
/// `None` when every such form also vanishes at `p`.
pub fn separating_form_oracle(
    sigma: &PointConfiguration,
    p: &ProjectivePoint,
    degree: u32,
) -> Result<Option<HomogeneousForm>> {
    if sigma.contains(p) {
        return Err(Error::PointInSet);
    }
    if !sigma.is_empty() && sigma.ambient_dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: sigma.ambient_dim(),
            found: p.dim(),
        });
    }
    let field = p.field();
    let nv = p.dim() + 1;
    let cols = monomial_basis(nv, degree).len();
    let m = if sigma.is_empty() {
        Matrix::zeros(field, 1, cols)
    } else {
        field.check(sigma.field())?;
        evaluation_matrix(sigma.points(), nv, degree)?
    };
    for v in m.nullspace() {
        let f = HomogeneousForm::from_basis_coefficients(field, nv, degree, &v);
        if !f.evaluate(p)?.is_zero() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Pullback of `f` along the projection from `vertex` onto `base`.
///
/// `f` is given either in the coordinates of `base` (one variable per
/// spanning point) or as an ambient form, which is first restricted. When
/// `base` has codimension above one the projection centre is the span of
/// `vertex` and coordinate points chosen greedily.
pub fn cone_over_form(f: &HomogeneousForm, base: &LinearSubspace, vertex: &ProjectivePoint) -> Result<HomogeneousForm> {
    let n = base.ambient_dim();
    if vertex.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: vertex.dim(),
        });
    }
    if base.contains(vertex) {
        return Err(Error::VertexInSubspace);
    }
    let k = base.dim() + 1;
    let local = if f.num_vars() == k {
        f.clone()
    } else if f.num_vars() == n + 1 {
        base.restrict(f)?
    } else {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: f.num_vars(),
        });
    };
    let field = base.field();
    let mut cols: Vec<ProjectivePoint> = base.spanning_points().to_vec();
    cols.push(vertex.clone());
    for i in 0..=n {
        if cols.len() == n + 1 {
            break;
        }
        let e = ProjectivePoint::coordinate(field, n, i);
        let mut trial = cols.clone();
        trial.push(e.clone());
        if LinearSubspace::span(&trial)?.dim() + 1 == trial.len() {
            cols = trial;
        }
    }
    // columns are basis vectors; rows of the inverse read off coordinates
    let b = Matrix::from_rows(field, cols.iter().map(|c| c.coords().to_vec()).collect())?.transpose();
    let inv = b.inverse().expect("completed basis");
    let images: Vec<HomogeneousForm> = (0..k)
        .map(|i| HomogeneousForm::linear(inv.row(i)))
        .collect::<Result<_>>()?;
    local.substitute(&images)
}

/// Dimension of the degree-3 part of the ideal generated by `generators`.
pub fn ci_ideal_cubics_dimension(generators: &[HomogeneousForm]) -> Result<usize> {
    let first = generators
        .first()
        .ok_or(Error::InvalidForm("no generators".into()))?;
    let (field, nv) = (first.field(), first.num_vars());
    let mut rows = Vec::new();
    for g in generators {
        if g.num_vars() != nv {
            return Err(Error::DimensionMismatch {
                expected: nv,
                found: g.num_vars(),
            });
        }
        field.check(g.field())?;
        if g.degree() > 3 {
            return Err(Error::InvalidForm(format!("generator of degree {} exceeds 3", g.degree())));
        }
        for e in monomial_basis(nv, 3 - g.degree()) {
            let mono = HomogeneousForm::new(field, nv, 3 - g.degree(), [(e, field.one())])?;
            rows.push(g.try_mul(&mono)?.basis_coefficients());
        }
    }
    Ok(Matrix::from_rows(field, rows)?.rank())
}
