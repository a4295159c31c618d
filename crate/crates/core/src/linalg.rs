//! Dense exact linear algebra: Gaussian elimination, kernels, affine
//! solves and row-space subspaces over an arbitrary [`Field`].

use crate::field::Field;

/// Dense matrix, row-major. A linear map `V -> W` is stored as a
/// `dim W x dim V` matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<F>]) -> Self {
        let mut m = Matrix::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out: Matrix<F> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.sub(b);
        }
        out
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(c);
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.get(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols);
        let mut m = Matrix::zero(self.rows + other.rows, self.cols);
        m.data[..self.data.len()].clone_from_slice(&self.data);
        m.data[self.data.len()..].clone_from_slice(&other.data);
        m
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    let a = self.get(r, j).clone();
                    let b = self.get(p, j).clone();
                    self.set(r, j, b);
                    self.set(p, j, a);
                }
            }
            let inv = self.get(r, c).inv();
            for j in 0..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let factor = self.get(i, c).clone();
                    for j in 0..self.cols {
                        let v = self.get(i, j).sub(&factor.mul(self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of `{ x : self * x = 0 }`, as column vectors of length `cols`.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_row: std::collections::HashMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_row.contains_key(&free) {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (&pc, &pr) in pivot_row.iter() {
                v[pc] = m.get(pr, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Square matrix invertibility.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// A subspace of `F^ambient`, stored as an RREF basis (rows).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F: Field> {
    pub ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_vectors(
            ambient,
            &(0..ambient).map(|i| unit(ambient, i)).collect::<Vec<_>>(),
        )
    }

    pub fn from_vectors(ambient: usize, vecs: &[Vec<F>]) -> Self {
        let mut m = Matrix::from_rows(ambient, vecs);
        let pivots = m.rref();
        let dim = pivots.len();
        let mut basis = Matrix::zero(dim, ambient);
        for i in 0..dim {
            for j in 0..ambient {
                basis.set(i, j, m.get(i, j).clone());
            }
        }
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        self.basis.row(i)
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    /// Reduce `v` modulo the subspace; the residue is zero iff `v` lies in it.
    /// Also returns the coordinates of the reduced-away part in the basis.
    pub fn reduce(&self, v: &[F]) -> (Vec<F>, Vec<F>) {
        let mut r = v.to_vec();
        let mut coords = vec![F::zero(); self.dim()];
        for (row, &pc) in self.pivots.iter().enumerate() {
            let c = r[pc].clone();
            if c.is_zero() {
                continue;
            }
            coords[row] = c.clone();
            for j in 0..self.ambient {
                r[j] = r[j].sub(&c.mul(self.basis.get(row, j)));
            }
        }
        (r, coords)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).0.iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the stored basis; `None` if `v` is outside.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let (r, coords) = self.reduce(v);
        if r.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut vecs = self.basis_vectors();
        vecs.extend(other.basis_vectors());
        Subspace::from_vectors(self.ambient, &vecs)
    }

    /// Standard coordinates not used as pivots: a basis of the quotient.
    pub fn copivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }
}

pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Enumerate every subspace of `F^n` for a finite field, by echelon forms.
pub fn all_subspaces<F: Field>(n: usize) -> Vec<Subspace<F>> {
    let elements = F::all_elements().expect("subspace enumeration needs a finite field");
    let mut out = vec![Subspace::zero(n)];
    for k in 1..=n {
        for pivots in k_subsets(n, k) {
            // Free entries: row i may be nonzero at columns past its pivot
            // that are not pivots themselves.
            let mut free_slots = Vec::new();
            for (i, &p) in pivots.iter().enumerate() {
                for c in p + 1..n {
                    if !pivots.contains(&c) {
                        free_slots.push((i, c));
                    }
                }
            }
            let mut fill = vec![0usize; free_slots.len()];
            loop {
                let mut rows = Vec::new();
                for (i, &p) in pivots.iter().enumerate() {
                    let mut row = vec![F::zero(); n];
                    row[p] = F::one();
                    for (slot, &(ri, c)) in free_slots.iter().enumerate() {
                        if ri == i {
                            row[c] = elements[fill[slot]].clone();
                        }
                    }
                    rows.push(row);
                }
                out.push(Subspace::from_vectors(n, &rows));
                // odometer
                let mut carry = true;
                for f in fill.iter_mut() {
                    if carry {
                        *f += 1;
                        if *f == elements.len() {
                            *f = 0;
                        } else {
                            carry = false;
                        }
                    }
                }
                if carry {
                    break;
                }
            }
        }
    }
    out
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf2, Rat};

    fn m(rows: usize, cols: usize, vals: &[i64]) -> Matrix<Rat> {
        let mut out = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, Rat::from_i64(vals[i * cols + j]));
            }
        }
        out
    }

    #[test]
    fn rref_and_rank() {
        let a = m(3, 3, &[1, 2, 3, 2, 4, 6, 1, 0, 1]);
        assert_eq!(a.rank(), 2);
        assert_eq!(Matrix::<Rat>::identity(4).rank(), 4);
    }

    #[test]
    fn kernel_is_kernel() {
        let a = m(2, 3, &[1, 1, 0, 0, 1, 1]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).iter().all(|v| v.is_zero()));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(2, 2, &[1, 2, 3, 4]);
        let x = a.solve(&[Rat::from_i64(5), Rat::from_i64(11)]).unwrap();
        assert_eq!(a.apply(&x), vec![Rat::from_i64(5), Rat::from_i64(11)]);
        let b = m(2, 1, &[1, 2]);
        assert!(b.solve(&[Rat::from_i64(1), Rat::from_i64(1)]).is_none());
    }

    #[test]
    fn subspace_membership_and_sum() {
        let u = Subspace::from_vectors(
            3,
            &[vec![Rat::from_i64(1), Rat::from_i64(1), Rat::from_i64(0)]],
        );
        assert!(u.contains(&[Rat::from_i64(2), Rat::from_i64(2), Rat::from_i64(0)]));
        assert!(!u.contains(&[Rat::from_i64(1), Rat::from_i64(0), Rat::from_i64(0)]));
        let v = Subspace::from_vectors(3, &[unit(3, 2)]);
        assert_eq!(u.sum(&v).dim(), 2);
    }

    #[test]
    fn gf2_subspace_count() {
        // Number of subspaces of F2^3: 1 + 7 + 7 + 1 = 16.
        assert_eq!(all_subspaces::<Gf2>(3).len(), 16);
        assert_eq!(all_subspaces::<Gf2>(4).len(), 67);
    }
}
