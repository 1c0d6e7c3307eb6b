//! Exact integer and rational linear algebra.
//!
//! All normal forms are row-style: a matrix is a list of generators, `U·A = H`
//! for Hermite form and `U·A·V = D` for Smith form. Lattices are stored by
//! their Hermite basis, so equal lattices have equal data.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return domain(format!("{} entries do not fill a {rows}x{cols} matrix", data.len()));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of width `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> Result<Self> {
        let mut data = Vec::with_capacity(cols * rows.len());
        for r in rows {
            if r.len() != cols {
                return domain(format!("row of length {} in a {cols}-column matrix", r.len()));
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::new(rows, cols, entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.rows {
            return domain("vector length does not match matrix rows");
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += vi * a;
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return domain("determinant of a non-square matrix");
        }
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(sign * prev)
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        let (h, _) = hnf_impl(self, false);
        (0..h.rows).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).count()
    }

    fn row_combine(&mut self, i: usize, j: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
        // (row_i, row_j) <- (a·row_i + b·row_j, c·row_i + d·row_j)
        for k in 0..self.cols {
            let x = self.data[i * self.cols + k].clone();
            let y = self.data[j * self.cols + k].clone();
            if x.is_zero() && y.is_zero() {
                continue;
            }
            self.data[i * self.cols + k] = a * &x + b * &y;
            self.data[j * self.cols + k] = c * &x + d * &y;
        }
    }

    fn row_axpy(&mut self, target: usize, q: &BigInt, src: usize) {
        // row_target -= q·row_src
        if q.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let s = self.data[src * self.cols + k].clone();
            if !s.is_zero() {
                self.data[target * self.cols + k] -= q * s;
            }
        }
    }

    fn col_axpy(&mut self, target: usize, q: &BigInt, src: usize) {
        // col_target -= q·col_src
        if q.is_zero() {
            return;
        }
        for k in 0..self.rows {
            let s = self.data[k * self.cols + src].clone();
            if !s.is_zero() {
                self.data[k * self.cols + target] -= q * s;
            }
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.rows {
            self.data.swap(k * self.cols + i, k * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = std::mem::take(&mut self.data[i * self.cols + k]);
            self.data[i * self.cols + k] = -v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| {
                self.row(i)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }))
            .finish()
    }
}

/// Row Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U·A = H`. Pivots are positive, entries above a pivot lie in
/// `[0, pivot)`, and zero rows sit at the bottom.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (h, u) = hnf_impl(a, true);
    (h, u.expect("transform requested"))
}

fn hnf_impl(a: &IntMatrix, track: bool) -> (IntMatrix, Option<IntMatrix>) {
    let mut h = a.clone();
    let mut u = track.then(|| IntMatrix::identity(a.rows));
    let mut r = 0;
    for j in 0..h.cols {
        if r == h.rows {
            break;
        }
        for i in r + 1..h.rows {
            if h[(i, j)].is_zero() {
                continue;
            }
            if h[(r, j)].is_zero() {
                h.swap_rows(r, i);
                if let Some(u) = u.as_mut() {
                    u.swap_rows(r, i);
                }
                continue;
            }
            let (x, y) = (h[(r, j)].clone(), h[(i, j)].clone());
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (c, d) = (-(&y / &g), &x / &g);
            h.row_combine(r, i, &s, &t, &c, &d);
            if let Some(u) = u.as_mut() {
                u.row_combine(r, i, &s, &t, &c, &d);
            }
        }
        if h[(r, j)].is_zero() {
            continue;
        }
        if h[(r, j)].is_negative() {
            h.negate_row(r);
            if let Some(u) = u.as_mut() {
                u.negate_row(r);
            }
        }
        let p = h[(r, j)].clone();
        for i in 0..r {
            let q = h[(i, j)].div_floor(&p);
            h.row_axpy(i, &q, r);
            if let Some(u) = u.as_mut() {
                u.row_axpy(i, &q, r);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form `U·A·V = D`, with `V⁻¹` kept alongside `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// Diagonal entries `d₁ | d₂ | …`, nonnegative, length `min(rows, cols)`.
    pub invariants: Vec<BigInt>,
}

pub fn snf(a: &IntMatrix) -> Vec<BigInt> {
    smith(a).invariants
}

pub fn smith(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut vi = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            vi.swap_rows(t, pj);
            let p = d[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..m {
                let q = d[(i, t)].div_floor(&p);
                d.row_axpy(i, &q, t);
                u.row_axpy(i, &q, t);
                dirty |= !d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = d[(t, j)].div_floor(&p);
                d.col_axpy(j, &q, t);
                v.col_axpy(j, &q, t);
                // V⁻¹ picks up the inverse operation on rows.
                vi.row_axpy(t, &(-&q), j);
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // Divisibility: fold an offending row into row t and retry.
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&d[(i, j)] % &p).is_zero()));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    d.row_axpy(t, &minus_one, i);
                    u.row_axpy(t, &minus_one, i);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    let invariants = (0..m.min(n)).map(|i| d[(i, i)].clone()).collect();
    SmithForm {
        d,
        u,
        v,
        v_inv: vi,
        invariants,
    }
}

/// Left kernel `{v ∈ ℤ^rows : v·A = 0}` as a lattice.
pub fn kernel(a: &IntMatrix) -> IntegerLattice {
    let (h, u) = hnf(a);
    let rows: Vec<Vec<BigInt>> = (0..h.rows)
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .map(|i| u.row(i).to_vec())
        .collect();
    IntegerLattice::from_generators(a.rows, &rows).expect("kernel rows have ambient width")
}

/// A sublattice of `ℤⁿ`, stored by its Hermite basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    ambient: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl IntegerLattice {
    pub fn from_generators(ambient: usize, gens: &[Vec<BigInt>]) -> Result<Self> {
        let m = IntMatrix::from_rows(ambient, gens)?;
        Ok(Self::from_matrix(&m))
    }

    pub fn from_matrix(m: &IntMatrix) -> Self {
        let (h, _) = hnf_impl(m, false);
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for i in 0..h.rows {
            let r = h.row(i);
            if let Some(p) = r.iter().position(|x| !x.is_zero()) {
                pivots.push(p);
                rows.push(r.to_vec());
            }
        }
        IntegerLattice {
            ambient: m.cols,
            basis: IntMatrix::from_rows(m.cols, &rows).expect("rows come from m"),
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        IntegerLattice {
            ambient,
            basis: IntMatrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        IntegerLattice {
            ambient,
            basis: IntMatrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<BigInt>> {
        self.basis.row_vecs()
    }

    /// Coordinates of `v` in the Hermite basis, or `None` if `v ∉ L`.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.ambient {
            return None;
        }
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        let mut col = 0;
        for (i, &p) in self.pivots.iter().enumerate() {
            if w[col..p].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let piv = &self.basis[(i, p)];
            let (q, rem) = w[p].div_rem(piv);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (wk, b) in w.iter_mut().zip(self.basis.row(i)).skip(p) {
                    *wk -= &q * b;
                }
            }
            coords.push(q);
            col = p + 1;
        }
        w[col..].iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn member(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `Σ c_i b_i` for coordinates in the Hermite basis.
    pub fn combine(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.basis.left_apply(coords).expect("coordinate length matches rank")
    }

    /// Reduces `v` modulo `L`: pivot entries are brought into `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let q = w[p].div_floor(&self.basis[(i, p)]);
            if !q.is_zero() {
                for (wk, b) in w.iter_mut().zip(self.basis.row(i)) {
                    *wk -= &q * b;
                }
            }
        }
        w
    }

    pub fn contains(&self, other: &IntegerLattice) -> bool {
        self.ambient == other.ambient && (0..other.rank()).all(|i| self.member(other.basis.row(i)))
    }

    pub fn sum(&self, other: &IntegerLattice) -> Result<IntegerLattice> {
        if self.ambient != other.ambient {
            return domain("lattices live in different ambient spaces");
        }
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        IntegerLattice::from_generators(self.ambient, &rows)
    }

    /// `(L ⊗ ℚ) ∩ ℤⁿ`.
    pub fn saturate(&self) -> IntegerLattice {
        if self.rank() == 0 {
            return self.clone();
        }
        let s = smith(&self.basis);
        let rows: Vec<Vec<BigInt>> = (0..self.rank()).map(|i| s.v_inv.row(i).to_vec()).collect();
        IntegerLattice::from_generators(self.ambient, &rows).expect("same ambient")
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    /// Structure of `self / sub` for a sublattice `sub ⊆ self`.
    pub fn quotient(&self, sub: &IntegerLattice) -> Result<Quotient> {
        if !self.contains(sub) {
            return domain("quotient requires the second lattice to lie in the first");
        }
        let r = self.rank();
        let coords: Vec<Vec<BigInt>> = (0..sub.rank())
            .map(|i| self.coordinates(sub.basis.row(i)).expect("checked containment"))
            .collect();
        let c = IntMatrix::from_rows(r, &coords)?;
        let s = smith(&c);
        // Rows f_i of V⁻¹·B form a basis of L in which `sub` is spanned by d_i·f_i.
        let f = s.v_inv.mul(&self.basis)?;
        let d_at = |i: usize| s.invariants.get(i).cloned().unwrap_or_else(BigInt::zero);
        let kept: Vec<usize> = (0..r).filter(|&i| !d_at(i).is_one()).collect();
        Ok(Quotient {
            outer: self.clone(),
            to_f: s.v,
            invariants: kept.iter().map(|&i| d_at(i)).collect(),
            representatives: kept.iter().map(|&i| f.row(i).to_vec()).collect(),
            kept,
        })
    }
}

impl fmt::Debug for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntegerLattice")
            .field("ambient", &self.ambient)
            .field("basis", &self.basis)
            .finish()
    }
}

/// `L / L'` as `⊕ ℤ/dᵢ`, with `dᵢ = 0` standing for a free summand.
#[derive(Clone, Debug)]
pub struct Quotient {
    outer: IntegerLattice,
    to_f: IntMatrix,
    kept: Vec<usize>,
    pub invariants: Vec<BigInt>,
    pub representatives: Vec<Vec<BigInt>>,
}

impl Quotient {
    /// Invariants greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariants.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    pub fn is_free(&self) -> bool {
        self.invariants.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.invariants.iter().filter(|d| d.is_zero()).count()
    }

    /// Class of `w ∈ L` in the coordinates of the representatives.
    /// Torsion coordinates are reduced modulo their invariant.
    pub fn class_of(&self, w: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = self.outer.coordinates(w)?;
        let y = self.to_f.left_apply(&c).ok()?;
        Some(
            self.kept
                .iter()
                .zip(&self.invariants)
                .map(|(&i, d)| if d.is_zero() { y[i].clone() } else { y[i].mod_floor(d) })
                .collect(),
        )
    }
}

/// Dense rational matrix inverse by Gauss–Jordan; `None` when singular.
pub fn rational_inverse(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(p, col);
        inv.swap(p, col);
        let piv = m[col][col].clone();
        for j in 0..n {
            m[col][j] = &m[col][j] / &piv;
            inv[col][j] = &inv[col][j] / &piv;
        }
        for i in 0..n {
            if i == col || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for j in 0..n {
                let a = &m[col][j] * &f;
                m[i][j] -= a;
                let b = &inv[col][j] * &f;
                inv[i][j] -= b;
            }
        }
    }
    Some(inv)
}

/// Determinant over ℚ.
pub fn rational_det(a: &[Vec<BigRational>]) -> BigRational {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let piv = m[col][col].clone();
        det *= &piv;
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &piv;
            for j in col..n {
                let a = &m[col][j] * &f;
                m[i][j] -= a;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: usize, cols: usize, e: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, e).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(hnf(&mat(2, 2, &[2, 0, 0, 2])).0, mat(2, 2, &[2, 0, 0, 2]));
        assert_eq!(hnf(&mat(2, 2, &[0, 1, 1, 0])).0, mat(2, 2, &[1, 0, 0, 1]));
        let a = mat(2, 2, &[2, 4, 6, 8]);
        let (h, u) = hnf(&a);
        assert_eq!(h, mat(2, 2, &[2, 0, 0, 4]));
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(u.det().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn snf_examples() {
        assert_eq!(snf(&IntMatrix::identity(3)), ints(&[1, 1, 1]));
        assert_eq!(snf(&mat(2, 2, &[2, 4, 6, 8])), ints(&[2, 4]));
        assert_eq!(snf(&IntMatrix::zeros(2, 3)), ints(&[0, 0]));
    }

    #[test]
    fn smith_transforms_are_consistent() {
        let a = mat(3, 4, &[2, 4, 4, -6, 6, 12, 18, 0, -4, -8, 8, 3]);
        let s = smith(&a);
        assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(s.v.mul(&s.v_inv).unwrap(), IntMatrix::identity(4));
        for w in s.invariants.windows(2) {
            assert!(w[0].is_zero() && w[1].is_zero() || (&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn lattice_examples() {
        let z2 = IntegerLattice::full(2);
        assert!(z2.member(&ints(&[3, 5])));
        let sub = IntegerLattice::from_generators(2, &[ints(&[2, 0]), ints(&[0, 1])]).unwrap();
        let q = z2.quotient(&sub).unwrap();
        assert_eq!(q.invariants, ints(&[2]));
        assert_eq!(q.representatives.len(), 1);
        assert!(z2.quotient(&IntegerLattice::full(2)).unwrap().invariants.is_empty());
        let k = kernel(&mat(2, 1, &[1, 1]));
        assert_eq!(k.basis_rows(), vec![ints(&[1, -1])]);
        assert!(matches!(sub.quotient(&z2), Err(crate::error::Error::Domain(_))));
    }

    #[test]
    fn membership_and_saturation() {
        let l = IntegerLattice::from_generators(3, &[ints(&[2, 2, 0]), ints(&[0, 4, 2])]).unwrap();
        assert!(l.member(&ints(&[2, 6, 2])));
        assert!(!l.member(&ints(&[1, 1, 0])));
        assert!(!l.member(&ints(&[0, 0, 1])));
        let s = l.saturate();
        assert!(s.contains(&l));
        assert!(s.member(&ints(&[1, 1, 0])));
        assert!(s.member(&ints(&[0, 2, 1])));
        assert_eq!(s.rank(), 2);
        assert!(s.is_saturated());
        assert!(!l.is_saturated());
    }

    #[test]
    fn free_quotient_classes() {
        let l = IntegerLattice::full(3);
        let sub = IntegerLattice::from_generators(3, &[ints(&[1, 1, 0])]).unwrap();
        let q = l.quotient(&sub).unwrap();
        assert!(q.is_free());
        assert_eq!(q.rank(), 2);
        assert_eq!(q.class_of(&ints(&[1, 1, 0])).unwrap(), ints(&[0, 0]));
        let a = q.class_of(&ints(&[1, 0, 0])).unwrap();
        let b = q.class_of(&ints(&[0, 1, 0])).unwrap();
        assert_eq!(a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>(), ints(&[0, 0]));
    }

    #[test]
    fn determinants() {
        assert_eq!(mat(3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 2]).det().unwrap(), BigInt::from(6));
        assert_eq!(mat(2, 2, &[1, 2, 2, 4]).det().unwrap(), BigInt::zero());
        assert_eq!(mat(2, 2, &[0, 1, 1, 0]).det().unwrap(), BigInt::from(-1));
        let q = |n: i64| BigRational::from_integer(BigInt::from(n));
        let r = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        assert_eq!(rational_det(&r), q(1));
        let inv = rational_inverse(&r).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert!(rational_inverse(&[vec![q(1), q(1)], vec![q(1), q(1)]]).is_none());
    }
}
