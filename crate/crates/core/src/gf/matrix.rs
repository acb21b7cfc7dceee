use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::{Field, FieldElement};

/// Dense matrix over a [`Field`]. Operations take the field explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, entries: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    /// Square matrix from row-major entries.
    pub fn square(entries: Vec<FieldElement>) -> Result<Matrix> {
        let n = (entries.len() as f64).sqrt().round() as usize;
        if n * n != entries.len() || n == 0 {
            return Err(Error::Shape(format!("{} entries do not form a square matrix", entries.len())));
        }
        Ok(Matrix { rows: n, cols: n, entries })
    }

    /// Prime-subfield entries given as integers.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Result<Matrix> {
        Matrix::from_rows(rows.iter().map(|row| row.iter().map(|&x| field.from_int(x)).collect()).collect())
    }

    pub fn diagonal(diag: &[FieldElement]) -> Matrix {
        let mut m = Matrix::zero(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Matrix sending basis vector `e_i` to `e_{perm(i)}`.
    pub fn permutation(perm: &Permutation) -> Matrix {
        let n = perm.degree();
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(perm.image(i as u32) as usize, i, FieldElement::ONE);
        }
        m
    }

    /// Companion matrix of the monic polynomial with the given lower
    /// coefficients `c0 + c1 x + ... + x^n`.
    pub fn companion(field: &Field, lower: &[FieldElement]) -> Matrix {
        let n = lower.len();
        let mut m = Matrix::zero(n, n);
        for i in 1..n {
            m.set(i, i - 1, FieldElement::ONE);
        }
        for (i, &c) in lower.iter().enumerate() {
            m.set(i, n - 1, field.neg(c));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.entries[i * self.cols + j] = x;
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::Shape(format!("{}x{} matrix is not square", self.rows, self.cols)));
        }
        Ok(self.rows)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j) == if i == j { FieldElement::ONE } else { FieldElement::ZERO })
            })
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = FieldElement::ZERO;
                for t in 0..self.cols {
                    acc = field.add(acc, field.mul(self.get(i, t), other.get(t, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, field: &Field, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("subtraction of different shapes".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| field.sub(a, b)).collect(),
        })
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Row echelon form in place; returns the rank and the determinant factor
    /// accumulated from pivots and row swaps.
    fn eliminate(&mut self, field: &Field) -> (usize, FieldElement) {
        let mut rank = 0;
        let mut det = FieldElement::ONE;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                det = FieldElement::ZERO;
                continue;
            };
            if pivot != rank {
                for j in 0..self.cols {
                    let (a, b) = (self.get(pivot, j), self.get(rank, j));
                    self.set(pivot, j, b);
                    self.set(rank, j, a);
                }
                det = field.neg(det);
            }
            let lead = self.get(rank, col);
            det = field.mul(det, lead);
            let lead_inv = field.inv(lead).expect("nonzero pivot");
            for r in rank + 1..self.rows {
                let factor = field.mul(self.get(r, col), lead_inv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let v = field.sub(self.get(r, j), field.mul(factor, self.get(rank, j)));
                    self.set(r, j, v);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        (rank, det)
    }

    pub fn det(&self, field: &Field) -> Result<FieldElement> {
        let n = self.require_square()?;
        let mut m = self.clone();
        let (rank, det) = m.eliminate(field);
        Ok(if rank < n { FieldElement::ZERO } else { det })
    }

    pub fn rank(&self, field: &Field) -> usize {
        let mut m = self.clone();
        m.eliminate(field).0
    }

    /// Gauss-Jordan on `[M | I]`.
    pub fn inverse(&self, field: &Field) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, FieldElement::ONE);
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| !aug.get(r, col).is_zero()).ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..2 * n {
                    let (a, b) = (aug.get(pivot, j), aug.get(col, j));
                    aug.set(pivot, j, b);
                    aug.set(col, j, a);
                }
            }
            let inv = field.inv(aug.get(col, col)).expect("nonzero pivot");
            for j in 0..2 * n {
                aug.set(col, j, field.mul(aug.get(col, j), inv));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = aug.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..2 * n {
                    let v = field.sub(aug.get(r, j), field.mul(factor, aug.get(col, j)));
                    aug.set(r, j, v);
                }
            }
        }
        let mut out = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, field: &Field, mut e: u64) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base)?;
            }
            base = base.mul(field, &base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative order of an invertible matrix, by repeated multiplication.
    pub fn order(&self, field: &Field, cap: u64) -> Result<u64> {
        let mut x = self.clone();
        for n in 1..=cap {
            if x.is_identity() {
                return Ok(n);
            }
            x = x.mul(field, self)?;
        }
        Err(Error::CapExceeded { cap: cap as usize })
    }

    /// `M v` for a column vector.
    pub fn apply(&self, field: &Field, v: &[FieldElement]) -> Vec<FieldElement> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(FieldElement::ZERO, |acc, j| field.add(acc, field.mul(self.get(i, j), v[j]))))
            .collect()
    }

    /// `v M` for a row vector.
    pub fn apply_row(&self, field: &Field, v: &[FieldElement]) -> Vec<FieldElement> {
        (0..self.cols)
            .map(|j| (0..self.rows).fold(FieldElement::ZERO, |acc, i| field.add(acc, field.mul(v[i], self.get(i, j)))))
            .collect()
    }

    /// Whether 1 is an eigenvalue, decided by `det(M - I) = 0`.
    pub fn has_eigenvalue_one(&self, field: &Field) -> Result<bool> {
        let n = self.require_square()?;
        Ok(self.sub(field, &Matrix::identity(n))?.det(field)?.is_zero())
    }

    /// Dimension of the fixed space `{v : M v = v}`.
    pub fn fixed_space_dimension(&self, field: &Field) -> Result<usize> {
        let n = self.require_square()?;
        Ok(n - self.sub(field, &Matrix::identity(n))?.rank(field))
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Exactly one nonzero entry in every row and every column.
    pub fn is_monomial(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let row_ok = (0..self.rows).all(|i| (0..self.cols).filter(|&j| !self.get(i, j).is_zero()).count() == 1);
        let col_ok = (0..self.cols).all(|j| (0..self.rows).filter(|&i| !self.get(i, j).is_zero()).count() == 1);
        row_ok && col_ok
    }
}

/// For a monomial `M` with `M^p = I`, reports whether 1 is an eigenvalue.
/// Whenever `M` is not diagonal the answer is always `true`.
pub fn monomial_has_fixed_vector(field: &Field, m: &Matrix, p: u64) -> Result<bool> {
    if !m.is_monomial() {
        return Err(Error::Precondition("matrix is not monomial".into()));
    }
    if !m.pow(field, p)?.is_identity() {
        return Err(Error::Precondition(format!("M^{p} is not the identity")));
    }
    m.has_eigenvalue_one(field)
}

/// Multiplicative closure of invertible generators, identity first, in
/// breadth-first order.
pub fn matrix_group_closure(field: &Field, gens: &[Matrix], cap: usize) -> Result<Vec<Matrix>> {
    let n = match gens.first() {
        Some(g) => g.require_square()?,
        None => return Ok(vec![]),
    };
    for g in gens {
        if g.rows != n || g.cols != n {
            return Err(Error::Shape("generators of different sizes".into()));
        }
        if g.det(field)?.is_zero() {
            return Err(Error::SingularMatrix);
        }
    }
    let mut seen: HashMap<Matrix, usize> = HashMap::new();
    let mut out = vec![Matrix::identity(n)];
    seen.insert(out[0].clone(), 0);
    let mut next = 0;
    while next < out.len() {
        for g in gens {
            let y = out[next].mul(field, g)?;
            if !seen.contains_key(&y) {
                if out.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(y.clone(), out.len());
                out.push(y);
            }
        }
        next += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::new(p, 1).unwrap()
    }

    #[test]
    fn determinants() {
        let f = gf(7);
        assert_eq!(Matrix::identity(3).det(&f).unwrap(), f.one());
        let d = Matrix::diagonal(&[f.from_int(3), f.from_int(5)]);
        assert_eq!(d.det(&f).unwrap(), f.from_int(15));
        let m = Matrix::from_ints(&f, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(m.det(&f).unwrap(), f.from_int(-2));
        let singular = Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]).unwrap();
        assert!(singular.det(&f).unwrap().is_zero());
        assert!(matches!(singular.inverse(&f), Err(Error::SingularMatrix)));
    }

    #[test]
    fn rotation_has_no_fixed_vector() {
        let f = gf(3);
        let c = Matrix::companion(&f, &[f.one(), f.zero()]); // x^2 + 1
        assert_eq!(c.sub(&f, &Matrix::identity(2)).unwrap().det(&f).unwrap(), f.from_int(2));
        assert!(!c.has_eigenvalue_one(&f).unwrap());
        assert!(Matrix::identity(2).has_eigenvalue_one(&f).unwrap());
        let swap = Matrix::permutation(&Permutation::from_cycles(3, &[vec![0, 1]]).unwrap());
        assert!(swap.has_eigenvalue_one(&f).unwrap());
    }

    #[test]
    fn antidiagonal_monomials_fix_a_vector() {
        for f in [gf(5), gf(7), Field::new(3, 2).unwrap()] {
            for a in f.elements().filter(|a| !a.is_zero()) {
                let ainv = f.inv(a).unwrap();
                let m = Matrix::from_rows(vec![vec![f.zero(), a], vec![ainv, f.zero()]]).unwrap();
                assert!(monomial_has_fixed_vector(&f, &m, 2).unwrap());
            }
        }
        let f = gf(5);
        let d = Matrix::diagonal(&[f.from_int(4), f.from_int(4)]);
        assert!(d.is_monomial() && d.is_diagonal());
        assert!(!monomial_has_fixed_vector(&f, &d, 2).unwrap());
        let not_involution = Matrix::diagonal(&[f.from_int(2), f.one()]);
        assert!(monomial_has_fixed_vector(&f, &not_involution, 2).is_err());
    }

    #[test]
    fn closures() {
        let f = gf(3);
        let c = Matrix::companion(&f, &[f.one(), f.zero()]);
        assert_eq!(matrix_group_closure(&f, std::slice::from_ref(&c), 100).unwrap().len(), 4);
        let i = Matrix::from_ints(&f, &[&[0, 2], &[1, 0]]).unwrap();
        let j = Matrix::from_ints(&f, &[&[1, 1], &[1, 2]]).unwrap();
        assert_eq!(matrix_group_closure(&f, &[i.clone(), j], 100).unwrap().len(), 8);
        assert_eq!(matrix_group_closure(&f, &[Matrix::identity(2)], 100).unwrap().len(), 1);
        assert!(matches!(matrix_group_closure(&f, &[c], 3), Err(Error::CapExceeded { cap: 3 })));
        let singular = Matrix::from_ints(&f, &[&[1, 0], &[0, 0]]).unwrap();
        assert!(matrix_group_closure(&f, &[singular], 10).is_err());
    }

    #[test]
    fn inverse_and_fixed_space() {
        let f = Field::new(2, 3).unwrap();
        let z = f.primitive_element();
        let m = Matrix::from_rows(vec![vec![z, f.one()], vec![f.zero(), f.one()]]).unwrap();
        let inv = m.inverse(&f).unwrap();
        assert!(m.mul(&f, &inv).unwrap().is_identity());
        assert_eq!(m.fixed_space_dimension(&f).unwrap(), 1);
        assert_eq!(Matrix::identity(3).fixed_space_dimension(&f).unwrap(), 3);
    }
}
