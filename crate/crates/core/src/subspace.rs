use crate::error::{Error, Result};
use crate::form::HomogeneousForm;
use crate::linalg::Matrix;
use crate::point::ProjectivePoint;
use crate::scalar::{Field, Scalar};

/// A linear subspace of `P^n`, held both as independent spanning points and
/// as a basis of the linear forms vanishing on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubspace {
    ambient: usize,
    field: Field,
    spanning: Vec<ProjectivePoint>,
    equations: Vec<Vec<Scalar>>,
}

impl LinearSubspace {
    /// Span of `points`. The spanning set kept is the lexicographically first
    /// independent subset (greedy by input order).
    pub fn span(points: &[ProjectivePoint]) -> Result<Self> {
        let first = points.first().ok_or(Error::ZeroPoint)?;
        let (ambient, field) = (first.dim(), first.field());
        let mut spanning: Vec<ProjectivePoint> = Vec::new();
        for p in points {
            if p.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: p.dim(),
                });
            }
            field.check(p.field())?;
            let mut rows: Vec<Vec<Scalar>> = spanning.iter().map(|q| q.coords().to_vec()).collect();
            rows.push(p.coords().to_vec());
            if Matrix::from_rows(field, rows)?.rank() > spanning.len() {
                spanning.push(p.clone());
            }
        }
        Ok(Self::from_independent(spanning))
    }

    fn from_independent(spanning: Vec<ProjectivePoint>) -> Self {
        let ambient = spanning[0].dim();
        let field = spanning[0].field();
        let rows = spanning.iter().map(|q| q.coords().to_vec()).collect();
        let equations = Matrix::from_rows(field, rows).expect("consistent").nullspace();
        LinearSubspace {
            ambient,
            field,
            spanning,
            equations,
        }
    }

    /// Common zero set of the given linear forms (as coefficient vectors).
    /// Returns `None` when the zero set is empty.
    pub fn from_equations(field: Field, ambient: usize, equations: &[Vec<Scalar>]) -> Result<Option<Self>> {
        let m = if equations.is_empty() {
            Matrix::zeros(field, 1, ambient + 1)
        } else {
            Matrix::from_rows(field, equations.to_vec())?
        };
        if m.cols() != ambient + 1 {
            return Err(Error::DimensionMismatch {
                expected: ambient + 1,
                found: m.cols(),
            });
        }
        let points: Vec<ProjectivePoint> = m
            .nullspace()
            .into_iter()
            .map(|v| ProjectivePoint::new(v).expect("nonzero nullspace vector"))
            .collect();
        if points.is_empty() {
            return Ok(None);
        }
        Ok(Some(Self::from_independent(points)))
    }

    pub fn whole(field: Field, n: usize) -> Self {
        Self::from_independent((0..=n).map(|i| ProjectivePoint::coordinate(field, n, i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.spanning.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn spanning_points(&self) -> &[ProjectivePoint] {
        &self.spanning
    }

    /// Coefficient vectors of `n - dim` independent linear forms cutting out
    /// the subspace.
    pub fn equations(&self) -> &[Vec<Scalar>] {
        &self.equations
    }

    pub fn defining_forms(&self) -> Vec<HomogeneousForm> {
        self.equations
            .iter()
            .map(|e| HomogeneousForm::linear(e).expect("nonempty"))
            .collect()
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.equations.iter().all(|e| dot(e, p.coords()).is_zero())
    }

    pub fn contains_all(&self, other: &LinearSubspace) -> bool {
        other.spanning.iter().all(|p| self.contains(p))
    }

    /// Span of this subspace and one more point.
    pub fn join(&self, p: &ProjectivePoint) -> Result<Self> {
        let mut pts = self.spanning.clone();
        pts.push(p.clone());
        Self::span(&pts)
    }

    /// Coordinates of `p` with respect to the spanning points, as a point of
    /// `P^dim`; `None` when `p` lies outside.
    pub fn coordinates_of(&self, p: &ProjectivePoint) -> Option<ProjectivePoint> {
        let k = self.spanning.len();
        let rows: Vec<Vec<Scalar>> = (0..=self.ambient)
            .map(|i| {
                let mut row: Vec<Scalar> = self.spanning.iter().map(|b| b.coords()[i].clone()).collect();
                row.push(p.coords()[i].clone());
                row
            })
            .collect();
        let ns = Matrix::from_rows(self.field, rows).ok()?.nullspace();
        let v = ns.into_iter().find(|v| !v[k].is_zero())?;
        let scale = -v[k].inv().expect("nonzero");
        ProjectivePoint::new(v[..k].iter().map(|c| c * &scale).collect()).ok()
    }

    /// The ambient point with the given subspace coordinates.
    pub fn point_at(&self, coords: &[Scalar]) -> Result<ProjectivePoint> {
        if coords.len() != self.spanning.len() {
            return Err(Error::DimensionMismatch {
                expected: self.spanning.len(),
                found: coords.len(),
            });
        }
        let mut v = vec![self.field.zero(); self.ambient + 1];
        for (c, b) in coords.iter().zip(&self.spanning) {
            for (vi, bi) in v.iter_mut().zip(b.coords()) {
                *vi = &*vi + &(c * bi);
            }
        }
        ProjectivePoint::new(v)
    }

    /// Restriction of an ambient form to the subspace, in subspace
    /// coordinates.
    pub fn restrict(&self, f: &HomogeneousForm) -> Result<HomogeneousForm> {
        let k = self.spanning.len();
        let images: Vec<HomogeneousForm> = (0..=self.ambient)
            .map(|i| {
                let coeffs: Vec<Scalar> = self.spanning.iter().map(|b| b.coords()[i].clone()).collect();
                HomogeneousForm::linear(&coeffs).expect("nonempty")
            })
            .collect();
        let g = f.substitute(&images)?;
        debug_assert_eq!(g.num_vars(), k);
        Ok(g)
    }
}

pub(crate) fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(a[0].field().zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Projective dimension of the span of `points`, with the spanning subspace.
pub fn span_dimension(points: &[ProjectivePoint]) -> Result<(usize, LinearSubspace)> {
    let s = LinearSubspace::span(points)?;
    Ok((s.dim(), s))
}
