//! Vectors and matrices over GF(4): Hermitian inner product and exact row
//! reduction. All operations work on copies; values are immutable once built.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf4::Gf4;

/// A codeword-sized vector over GF(4).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gf4Vector {
    coords: Vec<Gf4>,
}

impl Gf4Vector {
    pub fn new(coords: Vec<Gf4>) -> Gf4Vector {
        Gf4Vector { coords }
    }

    pub fn zeros(len: usize) -> Gf4Vector {
        Gf4Vector {
            coords: vec![Gf4::ZERO; len],
        }
    }

    /// Builds a vector from digits in {0, 1, 2, 3}.
    pub fn from_digits(digits: &[u8]) -> Result<Gf4Vector> {
        digits
            .iter()
            .map(|&d| {
                Gf4::new(d).ok_or_else(|| Error::Parse {
                    position: 0,
                    message: format!("digit {d} outside 0..=3"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Gf4Vector::new)
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn as_slice(&self) -> &[Gf4] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> Gf4 {
        self.coords[i]
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// `self += scalar · other`; lengths must match.
    pub fn scaled_add_assign(&mut self, scalar: Gf4, other: &Gf4Vector) {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += scalar * *b;
        }
    }

    pub fn scaled(&self, scalar: Gf4) -> Gf4Vector {
        Gf4Vector {
            coords: self.coords.iter().map(|&c| scalar * c).collect(),
        }
    }
}

impl fmt::Display for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.coords {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Hermitian inner product ⟨u, v⟩ = Σ uᵢ·v̄ᵢ over GF(4).
pub fn hermitian_inner_product(u: &Gf4Vector, v: &Gf4Vector) -> Result<Gf4> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch(format!(
            "hermitian inner product of lengths {} and {}",
            u.len(),
            v.len()
        )));
    }
    let mut acc = Gf4::ZERO;
    for (a, b) in u.as_slice().iter().zip(v.as_slice()) {
        acc += *a * b.conj();
    }
    Ok(acc)
}

/// A dense row-major matrix over GF(4).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gf4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf4>,
}

impl Gf4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Gf4Matrix {
        Gf4Matrix {
            rows,
            cols,
            data: vec![Gf4::ZERO; rows * cols],
        }
    }

    pub fn identity(size: usize) -> Gf4Matrix {
        let mut m = Gf4Matrix::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Gf4::ONE);
        }
        m
    }

    /// Stacks equal-length row vectors into a matrix.
    pub fn from_rows(rows: Vec<Gf4Vector>) -> Result<Gf4Matrix> {
        let cols = rows.first().map_or(0, Gf4Vector::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(
                "matrix rows have unequal lengths".into(),
            ));
        }
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            data.extend_from_slice(r.as_slice());
        }
        Ok(Gf4Matrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Gf4 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Gf4) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Gf4] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> Gf4Vector {
        Gf4Vector::new(self.row(r).to_vec())
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Gf4]> {
        self.data.chunks_exact(self.cols.max(1))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Element-wise conjugation.
    pub fn conj(&self) -> Gf4Matrix {
        Gf4Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.conj()).collect(),
        }
    }

    /// Vertical concatenation; column counts must agree.
    pub fn stack(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "stacking {}-column matrix onto {}-column matrix",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Gf4Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn matmul(&self, rhs: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "matmul of {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Gf4Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                let rhs_row = rhs.row(t);
                let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// The Gram matrix A·conj(B)ᵀ of the Hermitian pairing between the rows
    /// of `self` and the rows of `other`. Zero iff the row spaces are
    /// mutually Hermitian-orthogonal.
    pub fn hermitian_gram(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "hermitian gram of {}-column and {}-column matrices",
                self.cols, other.cols
            )));
        }
        let mut out = Gf4Matrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            let u = self.row(i);
            for j in 0..other.rows {
                let v = other.row(j);
                let mut acc = Gf4::ZERO;
                for (a, b) in u.iter().zip(v) {
                    acc += *a * b.conj();
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and rank. The input is left untouched; the
    /// RREF of a row space is unique, so this doubles as a canonical form.
    pub fn row_reduce(&self) -> (Gf4Matrix, usize) {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = m.get(rank, col).inv().expect("pivot is nonzero");
            m.scale_row(rank, inv);
            for r in 0..m.rows {
                if r != rank {
                    let factor = m.get(r, col);
                    if !factor.is_zero() {
                        m.row_op(r, rank, factor);
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: Gf4) {
        for c in 0..self.cols {
            let v = self.get(r, c);
            self.set(r, c, factor * v);
        }
    }

    /// row r -= factor · row src
    fn row_op(&mut self, r: usize, src: usize, factor: Gf4) {
        for c in 0..self.cols {
            let v = self.get(r, c) + factor * self.get(src, c);
            self.set(r, c, v);
        }
    }
}

impl fmt::Debug for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf4Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
