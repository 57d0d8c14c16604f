//! Sparse homogeneous polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::point::ProjectivePoint;
use crate::scalar::{Field, Scalar};

/// Variable names for forms on `P^4`.
pub const P4_VARIABLES: [&str; 5] = ["x", "y", "z", "t", "w"];

pub fn variable_name(num_vars: usize, i: usize) -> String {
    if num_vars == 5 {
        P4_VARIABLES[i].to_string()
    } else {
        format!("x{i}")
    }
}

/// All exponent vectors of total degree `degree` in `num_vars` variables,
/// graded-lexicographic with the first variable largest.
pub fn monomial_basis(num_vars: usize, degree: u32) -> Vec<Vec<u32>> {
    assert!(num_vars >= 1, "monomial_basis needs at least one variable");
    let mut out = Vec::new();
    let mut current = vec![0u32; num_vars];
    fill_monomials(0, degree, &mut current, &mut out);
    out
}

fn fill_monomials(var: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(current.clone());
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        fill_monomials(var + 1, remaining - e, current, out);
    }
    current[var] = 0;
}

/// Product of coordinate powers, the value of a monomial at a vector.
pub fn monomial_value(exps: &[u32], coords: &[Scalar]) -> Scalar {
    let mut acc = coords[0].field().one();
    for (c, &e) in coords.iter().zip(exps) {
        if e > 0 {
            acc = &acc * &c.pow(e);
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousForm {
    num_vars: usize,
    degree: u32,
    field: Field,
    // Never holds zero coefficients; every key sums to `degree`.
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl HomogeneousForm {
    pub fn zero(field: Field, num_vars: usize, degree: u32) -> Self {
        HomogeneousForm {
            num_vars,
            degree,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn new(
        field: Field,
        num_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>,
    ) -> Result<Self> {
        let mut f = Self::zero(field, num_vars, degree);
        for (exps, c) in terms {
            if exps.len() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    found: exps.len(),
                });
            }
            let total: u32 = exps.iter().sum();
            if total != degree {
                return Err(Error::InvalidForm(format!(
                    "term of degree {total} in a form of degree {degree}"
                )));
            }
            field.check(c.field())?;
            f.add_term(exps, c);
        }
        Ok(f)
    }

    pub fn constant(c: Scalar, num_vars: usize) -> Self {
        let field = c.field();
        let mut f = Self::zero(field, num_vars, 0);
        f.add_term(vec![0; num_vars], c);
        f
    }

    pub fn variable(field: Field, num_vars: usize, i: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        let mut f = Self::zero(field, num_vars, 1);
        f.add_term(exps, field.one());
        f
    }

    /// The linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Scalar]) -> Result<Self> {
        let field = coeffs.first().ok_or(Error::InvalidForm("no variables".into()))?.field();
        let n = coeffs.len();
        Self::new(
            field,
            n,
            1,
            coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, c.clone())
            }),
        )
    }

    /// Form with the given coefficients on [`monomial_basis`].
    pub fn from_basis_coefficients(field: Field, num_vars: usize, degree: u32, coeffs: &[Scalar]) -> Self {
        let basis = monomial_basis(num_vars, degree);
        assert_eq!(basis.len(), coeffs.len(), "coefficient vector length");
        let mut f = Self::zero(field, num_vars, degree);
        for (e, c) in basis.into_iter().zip(coeffs) {
            f.add_term(e, c.clone());
        }
        f
    }

    pub fn basis_coefficients(&self) -> Vec<Scalar> {
        monomial_basis(self.num_vars, self.degree)
            .iter()
            .map(|e| self.coefficient(e))
            .collect()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lexicographic order, largest monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.field.check(other.field)?;
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::InvalidForm(format!(
                "adding forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        let rest = if self.is_zero() { &self.terms } else { &other.terms };
        for (e, c) in rest {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.field, self.num_vars, self.degree + other.degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.field, self.num_vars, self.degree);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.field.one(), self.num_vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, p: &ProjectivePoint) -> Result<Scalar> {
        if p.coords().len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: p.coords().len(),
            });
        }
        self.field.check(p.field())?;
        Ok(self.evaluate_coords(p.coords()))
    }

    /// Evaluate at a coordinate vector. Panics on length or field mismatch.
    pub fn evaluate_coords(&self, coords: &[Scalar]) -> Scalar {
        assert_eq!(coords.len(), self.num_vars, "coordinate count");
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            acc = &acc + &(c * &monomial_value(e, coords));
        }
        acc
    }

    pub fn vanishes_at(&self, p: &ProjectivePoint) -> Result<bool> {
        Ok(self.evaluate(p)?.is_zero())
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Self> {
        if var >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index: var,
                limit: self.num_vars,
            });
        }
        let mut out = Self::zero(self.field, self.num_vars, self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[var] -= 1;
            out.add_term(d, c * &self.field.int(e[var] as i64));
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.num_vars)
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    /// Substitute `x_i -> images[i]`. All images share a field, a variable
    /// count and a degree `k`; the result has degree `k * self.degree()`.
    pub fn substitute(&self, images: &[HomogeneousForm]) -> Result<Self> {
        if images.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: images.len(),
            });
        }
        let first = &images[0];
        for g in images {
            first.check_compatible(g)?;
            if g.degree != first.degree {
                return Err(Error::InvalidForm("images of differing degree".into()));
            }
        }
        self.field.check(first.field)?;
        let m = first.num_vars;
        let mut powers: Vec<Vec<HomogeneousForm>> = images
            .iter()
            .map(|g| vec![Self::constant(self.field.one(), m), g.clone()])
            .collect();
        let mut out = Self::zero(self.field, m, first.degree * self.degree);
        for (e, c) in &self.terms {
            let mut term = Self::constant(c.clone(), m);
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k as usize];
                }
            }
            out = out.try_add(&term)?;
        }
        out.degree = first.degree * self.degree;
        Ok(out)
    }

    /// Reduce the coefficients into another field (rational to `F_p`).
    pub fn reduce(&self, field: Field) -> Result<Self> {
        let mut out = Self::zero(field, self.num_vars, self.degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.reduce(field)?);
        }
        Ok(out)
    }

    /// Check the Euler relation `sum x_i * d_i f = deg(f) * f` coefficientwise.
    pub fn satisfies_euler_identity(&self) -> bool {
        let mut lhs = Self::zero(self.field, self.num_vars, self.degree);
        for (i, d) in self.gradient().iter().enumerate() {
            let xi = Self::variable(self.field, self.num_vars, i);
            lhs = lhs.try_add(&(&xi * d)).expect("compatible");
        }
        lhs.degree = self.degree;
        lhs == self.scale(&self.field.int(self.degree as i64))
    }
}

impl<'a> Add<&'a HomogeneousForm> for &'a HomogeneousForm {
    type Output = HomogeneousForm;
    /// Panics on incompatible forms; use [`HomogeneousForm::try_add`] for
    /// user-supplied data.
    fn add(self, rhs: &HomogeneousForm) -> HomogeneousForm {
        self.try_add(rhs).expect("compatible forms")
    }
}

impl Neg for &HomogeneousForm {
    type Output = HomogeneousForm;
    fn neg(self) -> HomogeneousForm {
        self.scale(&self.field.int(-1))
    }
}

impl<'a> Sub<&'a HomogeneousForm> for &'a HomogeneousForm {
    type Output = HomogeneousForm;
    fn sub(self, rhs: &HomogeneousForm) -> HomogeneousForm {
        self.try_add(&-rhs).expect("compatible forms")
    }
}

impl<'a> Mul<&'a HomogeneousForm> for &'a HomogeneousForm {
    type Output = HomogeneousForm;
    fn mul(self, rhs: &HomogeneousForm) -> HomogeneousForm {
        self.try_mul(rhs).expect("compatible forms")
    }
}

impl fmt::Display for HomogeneousForm {
    /// Text grammar: `c*x^a*y^b` terms joined by ` + ` / ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !magnitude.is_one() || self.degree == 0 {
                factors.push(magnitude.to_string());
            }
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(variable_name(self.num_vars, i)),
                    _ => factors.push(format!("{}^{}", variable_name(self.num_vars, i), p)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
