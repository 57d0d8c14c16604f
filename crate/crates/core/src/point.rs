use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A point of projective `n`-space, kept in canonical form: the first nonzero
/// coordinate is 1. Equality and hashing are equality of canonical forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        let first = coords.first().ok_or(Error::ZeroPoint)?;
        let field = first.field();
        for c in &coords {
            field.check(c.field())?;
        }
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(Error::ZeroPoint)?
            .inv()
            .expect("nonzero");
        let coords = coords.iter().map(|c| c * &lead).collect();
        Ok(ProjectivePoint { coords })
    }

    pub fn from_ints(field: Field, coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| field.int(c)).collect())
    }

    /// The `i`-th standard basis point of `P^n`.
    pub fn coordinate(field: Field, n: usize, i: usize) -> Self {
        let mut coords = vec![field.zero(); n + 1];
        coords[i] = field.one();
        ProjectivePoint { coords }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Ambient projective dimension `n`.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    pub fn reduce(&self, field: Field) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.reduce(field))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }

    /// Linear combination `a*self + b*other` of representatives, `None` when it
    /// vanishes.
    pub fn combine(&self, a: &Scalar, other: &ProjectivePoint, b: &Scalar) -> Option<Self> {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(x, y)| &(a * x) + &(b * y))
            .collect();
        Self::new(coords).ok()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = ProjectivePoint::from_ints(Field::Rational, &[0, 2, 4, -6]).unwrap();
        let b = ProjectivePoint::from_ints(Field::Rational, &[0, -1, -2, 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "0:1:2:-3");
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn zero_point_rejected() {
        assert_eq!(
            ProjectivePoint::from_ints(Field::Rational, &[0, 0, 0]),
            Err(Error::ZeroPoint)
        );
        assert_eq!(ProjectivePoint::new(vec![]), Err(Error::ZeroPoint));
    }

    #[test]
    fn mixed_fields_rejected() {
        let r = ProjectivePoint::new(vec![Field::Rational.one(), Field::Prime(7).one()]);
        assert!(matches!(r, Err(Error::FieldMismatch(..))));
    }
}
