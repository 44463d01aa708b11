//! Matrices and subspaces over a [`FiniteField`], and Frobenius-semilinear
//! maps `x -> A · x^(p^t)`.

use super::ff::{Elem, FiniteField};

pub type FVec = Vec<Elem>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FMat {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl FMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn diagonal(d: &[Elem]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn from_rows(rows: &[FVec]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        FMat {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    /// Square matrix from row-major entries.
    pub fn from_entries(n: usize, data: Vec<Elem>) -> Self {
        assert_eq!(data.len(), n * n);
        FMat {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, ff: &FiniteField, o: &FMat) -> FMat {
        assert_eq!(self.cols, o.rows);
        let mut out = FMat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    let v = ff.add(out.get(i, j), ff.mul(a, o.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, ff: &FiniteField, v: &[Elem]) -> FVec {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &x)| ff.add(acc, ff.mul(a, x)))
            })
            .collect()
    }

    /// Entrywise `x -> x^(p^k)`.
    pub fn frob(&self, ff: &FiniteField, k: i32) -> FMat {
        FMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| ff.frob(x, k)).collect(),
        }
    }

    pub fn rank(&self, ff: &FiniteField) -> usize {
        rref(
            ff,
            (0..self.rows).map(|i| self.row(i).to_vec()).collect(),
            self.cols,
        )
        .len()
    }

    pub fn inverse(&self, ff: &FiniteField) -> Option<FMat> {
        let n = self.rows;
        assert_eq!(n, self.cols);
        let rows: Vec<FVec> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| Elem::from(i == j)));
                r
            })
            .collect();
        let red = rref(ff, rows, 2 * n);
        if red.len() < n || (0..n).any(|i| red[i][i] != 1) {
            return None;
        }
        Some(FMat::from_rows(
            &red.iter().map(|r| r[n..].to_vec()).collect::<Vec<_>>(),
        ))
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self, ff: &FiniteField) -> Vec<FVec> {
        let red = rref(
            ff,
            (0..self.rows).map(|i| self.row(i).to_vec()).collect(),
            self.cols,
        );
        nullspace_of_rref(ff, &red, self.cols)
    }
}

fn pivot(row: &[Elem]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

/// Reduced row echelon form of the span of `rows` (zero rows dropped).
pub fn rref(ff: &FiniteField, mut rows: Vec<FVec>, ncols: usize) -> Vec<FVec> {
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = ff.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = ff.mul(*x, inv);
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let f = rows[k][c];
                for j in 0..ncols {
                    let v = ff.sub(rows[k][j], ff.mul(f, rows[r][j]));
                    rows[k][j] = v;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

fn nullspace_of_rref(ff: &FiniteField, red: &[FVec], ncols: usize) -> Vec<FVec> {
    let pivots: Vec<usize> = red.iter().map(|r| pivot(r).unwrap()).collect();
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; ncols];
            v[free] = 1;
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = ff.neg(row[free]);
            }
            v
        })
        .collect()
}

/// A subspace of `F^n`, stored by its reduced row echelon basis so that
/// equality of subspaces is equality of values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    basis: Vec<FVec>,
}

impl Subspace {
    pub fn span(ff: &FiniteField, n: usize, vectors: Vec<FVec>) -> Self {
        Subspace {
            n,
            basis: rref(ff, vectors, n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Subspace { n, basis: vec![] }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            n,
            basis: (0..n)
                .map(|i| (0..n).map(|j| Elem::from(i == j)).collect())
                .collect(),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        Subspace {
            n,
            basis: idx
                .into_iter()
                .map(|i| (0..n).map(|j| Elem::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[FVec] {
        &self.basis
    }

    pub fn contains(&self, ff: &FiniteField, other: &Subspace) -> bool {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        rref(ff, all, self.n).len() == self.dim()
    }

    pub fn frob(&self, ff: &FiniteField, k: i32) -> Subspace {
        Subspace {
            n: self.n,
            basis: self
                .basis
                .iter()
                .map(|v| v.iter().map(|&x| ff.frob(x, k)).collect())
                .collect(),
        }
    }

    /// Vectors orthogonal to the subspace under the standard dot product.
    fn annihilator(&self, ff: &FiniteField) -> Vec<FVec> {
        nullspace_of_rref(ff, &self.basis, self.n)
    }
}

/// The map `x -> A · x^(p^twist)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semilinear {
    pub matrix: FMat,
    pub twist: i32,
}

impl Semilinear {
    pub fn apply(&self, ff: &FiniteField, x: &[Elem]) -> FVec {
        let y: FVec = x.iter().map(|&a| ff.frob(a, self.twist)).collect();
        self.matrix.apply(ff, &y)
    }

    pub fn image(&self, ff: &FiniteField, u: &Subspace) -> Subspace {
        let vs = u.basis().iter().map(|b| self.apply(ff, b)).collect();
        Subspace::span(ff, self.matrix.rows(), vs)
    }

    pub fn kernel(&self, ff: &FiniteField) -> Subspace {
        Subspace::span(ff, self.matrix.cols(), self.matrix.nullspace(ff)).frob(ff, -self.twist)
    }

    /// `{x : A x^(p^twist) in u}`.
    pub fn preimage(&self, ff: &FiniteField, u: &Subspace) -> Subspace {
        let ann = u.annihilator(ff);
        let n = self.matrix.cols();
        let linear = if ann.is_empty() {
            Subspace::full(n)
        } else {
            let cond = FMat::from_rows(&ann).mul(ff, &self.matrix);
            Subspace::span(ff, n, cond.nullspace(ff))
        };
        linear.frob(ff, -self.twist)
    }
}
