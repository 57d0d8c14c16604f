//! Exact dense linear algebra over [`Scalar`].
//!
//! Rank over `Q` uses fraction-free (Bareiss) elimination on integer rows
//! obtained by clearing denominators; rank over `F_p` is plain Gaussian
//! elimination on residues. Nullspaces come from a reduced row echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from rows of equal length. An empty row list gives a `0 x 0`
    /// matrix.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for v in row {
                field.check(v.field())?;
                data.push(v);
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            field,
            data,
        })
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&v| field.int(v)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// The matrix with row `skip` removed.
    pub fn without_row(&self, skip: usize) -> Self {
        let rows = (0..self.rows)
            .filter(|&r| r != skip)
            .map(|r| self.row(r).to_vec())
            .collect();
        let mut m = Self::from_rows(self.field, rows).expect("consistent rows");
        m.cols = self.cols;
        m
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match self.field {
            Field::Rational => bareiss_rank(self.integer_rows()),
            Field::Prime(p) => modular_rank(self.residue_rows(), p),
        }
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, v| match v {
                    Scalar::Rational(q) => acc.lcm(q.denom()),
                    _ => unreachable!("rational matrix"),
                });
                row.iter()
                    .map(|v| match v {
                        Scalar::Rational(q) => q.numer() * (&lcm / q.denom()),
                        _ => unreachable!("rational matrix"),
                    })
                    .collect()
            })
            .collect()
    }

    fn residue_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|v| v.residue().expect("modular matrix")).collect())
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Basis of `{v : M v = 0}`, one vector per free column; over `Q` each
    /// vector is scaled to a primitive integer vector.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(i, free);
            }
            basis.push(primitive(v));
        }
        basis
    }

    pub fn rank_and_nullspace(&self) -> (usize, Vec<Vec<Scalar>>) {
        let ns = self.nullspace();
        (self.cols - ns.len(), ns)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, self.field.one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

/// Clear denominators and common factors of a rational vector; modular
/// vectors are scaled so the first nonzero entry is 1.
pub fn primitive(v: Vec<Scalar>) -> Vec<Scalar> {
    let Some(first) = v.iter().find(|x| !x.is_zero()).cloned() else {
        return v;
    };
    match first.field() {
        Field::Prime(_) => {
            let inv = first.inv().expect("nonzero");
            v.iter().map(|x| x * &inv).collect()
        }
        Field::Rational => {
            let mut lcm = BigInt::one();
            let mut gcd = BigInt::zero();
            for x in &v {
                if let Scalar::Rational(q) = x {
                    lcm = lcm.lcm(q.denom());
                }
            }
            let ints: Vec<BigInt> = v
                .iter()
                .map(|x| match x {
                    Scalar::Rational(q) => q.numer() * (&lcm / q.denom()),
                    _ => unreachable!(),
                })
                .collect();
            for i in &ints {
                gcd = gcd.gcd(i);
            }
            ints.iter()
                .map(|i| Scalar::from_bigint(Field::Rational, &(i / &gcd)))
                .collect()
        }
    }
}

/// Fraction-free Gaussian elimination; returns the rank.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let pivot = m[rank][col].clone();
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for c in col..cols {
                let v = &pivot * &row[c] - &lead * &prow[c];
                // Bareiss: the division is exact.
                row[c] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

fn modular_rank(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = crate::scalar::inv_mod(m[rank][col], p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = row[col] * inv % p;
            for c in col..cols {
                row[c] = (row[c] + p - factor * prow[c] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_rank() {
        assert_eq!(Matrix::identity(Field::Rational, 3).rank(), 3);
        assert_eq!(Matrix::identity(Field::Prime(7), 4).rank(), 4);
    }

    #[test]
    fn repeated_row_drops_rank() {
        let m = Matrix::from_ints(Field::Rational, &[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn empty_is_rank_zero() {
        let m = Matrix::from_rows(Field::Rational, vec![]).unwrap();
        assert_eq!(m.rank(), 0);
        assert!(m.nullspace().is_empty());
    }

    #[test]
    fn rank_depends_on_field() {
        // det = 7
        let rows: [&[i64]; 2] = [&[3, 1], &[1, 5]];
        assert_eq!(Matrix::from_ints(Field::Rational, &rows).unwrap().rank(), 2);
        assert_eq!(Matrix::from_ints(Field::Prime(7), &rows).unwrap().rank(), 1);
    }

    #[test]
    fn nullspace_is_primitive_integer() {
        let m = Matrix::from_ints(Field::Rational, &[&[2, 4, 6]]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
            assert!(v.iter().all(|x| x.to_i64().is_some()));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_ints(Field::Rational, &[&[2, 1, 0], &[0, 1, 4], &[1, 0, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        for c in 0..3 {
            let col: Vec<Scalar> = (0..3).map(|r| inv.get(r, c).clone()).collect();
            let e = m.mul_vec(&col);
            for (r, v) in e.iter().enumerate() {
                assert_eq!(v.is_one(), r == c);
                assert!(r == c || v.is_zero());
            }
        }
        let singular = Matrix::from_ints(Field::Rational, &[&[1, 2], &[2, 4]]).unwrap();
        assert!(singular.inverse().is_none());
    }

    fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), proptest::collection::vec(-3i64..=3, r * c))
        })
    }

    proptest! {
        #[test]
        fn rank_equals_transpose_rank((r, c, vals) in small_matrix()) {
            let rows: Vec<Vec<Scalar>> = vals.chunks(c)
                .map(|ch| ch.iter().map(|&v| Field::Rational.int(v)).collect()).collect();
            let m = Matrix::from_rows(Field::Rational, rows).unwrap();
            prop_assert_eq!(m.rank(), m.transpose().rank());
            let (rk, ns) = m.rank_and_nullspace();
            prop_assert_eq!(rk, m.rank());
            prop_assert!(rk <= r.min(c));
            for v in ns {
                prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn modular_rank_equals_transpose_rank((_r, c, vals) in small_matrix()) {
            let f = Field::Prime(5);
            let rows: Vec<Vec<Scalar>> = vals.chunks(c)
                .map(|ch| ch.iter().map(|&v| f.int(v)).collect()).collect();
            let m = Matrix::from_rows(f, rows).unwrap();
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert_eq!(m.rank(), m.rank_and_nullspace().0);
        }
    }
}
